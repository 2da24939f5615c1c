#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tiltglue {

enum class ErrorCode {
  ShapeMismatch,
  NotPrime,
  MalformedRelation,
  NotFiniteDimensional,
  UnknownVertex,
  UnknownName,
  AlgebraMismatch,
  InvalidModule,
  InvalidMorphism,
  FieldTooSmall,
  NotTilting,
  NotSurjective,
  NotInjective,
  KernelNotInV,
  UniverseInconsistent,
  NotTriangular,
  ExactnessMissing,
  PreconditionFailed,
  ParseError,
  Io,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tiltglue
