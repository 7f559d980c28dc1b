#include "hgslab/error.hpp"

namespace hgslab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidSpec: return "invalid-spec";
    case ErrorKind::kUsage: return "usage-error";
    case ErrorKind::kBaseMismatch: return "base-size-mismatch";
    case ErrorKind::kClosureCap: return "closure-cap-exceeded";
    case ErrorKind::kNotRegular: return "not-regular";
    case ErrorKind::kNotStable: return "not-stable";
    case ErrorKind::kNotMember: return "not-member";
    case ErrorKind::kUnsupportedOrder: return "unsupported-order";
    case ErrorKind::kOrderTooLarge: return "order-too-large";
    case ErrorKind::kUnknownType: return "unknown-type";
    case ErrorKind::kBraceAxiom: return "brace-axiom-failure";
    case ErrorKind::kBraidFailure: return "braid-failure";
    case ErrorKind::kInvalidHom: return "invalid-homomorphism";
    case ErrorKind::kInvalidEmbedding: return "invalid-embedding";
    case ErrorKind::kNotFixedPointFree: return "not-fixed-point-free";
    case ErrorKind::kConstructionFailure: return "construction-failure";
    case ErrorKind::kNoNormalComplement: return "no-normal-complement";
    case ErrorKind::kIdentificationFailure: return "identification-failure";
    case ErrorKind::kDegreeTooLarge: return "degree-too-large";
    case ErrorKind::kNotPreserved: return "not-preserved";
    case ErrorKind::kStabilityViolation: return "stability-violation";
  }
  return "error";
}

}  // namespace hgslab
