#include "tiltglue/error.hpp"

namespace tiltglue {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::NotPrime: return "NOT_PRIME";
    case ErrorCode::MalformedRelation: return "MALFORMED_RELATION";
    case ErrorCode::NotFiniteDimensional: return "NOT_FINITE_DIMENSIONAL";
    case ErrorCode::UnknownVertex: return "UNKNOWN_VERTEX";
    case ErrorCode::UnknownName: return "UNKNOWN_NAME";
    case ErrorCode::AlgebraMismatch: return "ALGEBRA_MISMATCH";
    case ErrorCode::InvalidModule: return "INVALID_MODULE";
    case ErrorCode::InvalidMorphism: return "INVALID_MORPHISM";
    case ErrorCode::FieldTooSmall: return "FIELD_TOO_SMALL";
    case ErrorCode::NotTilting: return "NOT_TILTING";
    case ErrorCode::NotSurjective: return "NOT_SURJECTIVE";
    case ErrorCode::NotInjective: return "NOT_INJECTIVE";
    case ErrorCode::KernelNotInV: return "KERNEL_NOT_IN_V";
    case ErrorCode::UniverseInconsistent: return "UNIVERSE_INCONSISTENT";
    case ErrorCode::NotTriangular: return "NOT_TRIANGULAR";
    case ErrorCode::ExactnessMissing: return "EXACTNESS_MISSING";
    case ErrorCode::PreconditionFailed: return "PRECONDITION_FAILED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::Io: return "IO_ERROR";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

}  // namespace tiltglue
