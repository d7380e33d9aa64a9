#pragma once

#include <stdexcept>
#include <string>

namespace synthpose {

enum class ErrorKind {
  // asset / file ingest
  FileNotFound,
  MalformedFile,
  EmptyMesh,
  DegenerateExtent,
  // view sampling
  InvalidCount,
  InvalidConfig,
  // rendering
  DimensionMismatch,
  // dataset io
  IoError,
  DepthOutOfRange,
  MissingFile,
  SchemaMismatch,
  CorruptPayload,
  // template building
  RadiusTooLarge,
  InvalidK,
  // estimation
  TooFewPoints,
  DegenerateConfiguration,
  // metrics
  EmptyInput,
  // instruction handling
  NonMonotonicRounds,
  NetworkError,
  AuthError,
  StubMiss,
  // planning
  WorkspaceViolation,
  MissingPlaceTarget,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FileNotFound: return "FileNotFound";
    case ErrorKind::MalformedFile: return "MalformedFile";
    case ErrorKind::EmptyMesh: return "EmptyMesh";
    case ErrorKind::DegenerateExtent: return "DegenerateExtent";
    case ErrorKind::InvalidCount: return "InvalidCount";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::DepthOutOfRange: return "DepthOutOfRange";
    case ErrorKind::MissingFile: return "MissingFile";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::CorruptPayload: return "CorruptPayload";
    case ErrorKind::RadiusTooLarge: return "RadiusTooLarge";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NonMonotonicRounds: return "NonMonotonicRounds";
    case ErrorKind::NetworkError: return "NetworkError";
    case ErrorKind::AuthError: return "AuthError";
    case ErrorKind::StubMiss: return "StubMiss";
    case ErrorKind::WorkspaceViolation: return "WorkspaceViolation";
    case ErrorKind::MissingPlaceTarget: return "MissingPlaceTarget";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_error(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace synthpose
