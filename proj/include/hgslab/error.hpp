#pragma once

#include <stdexcept>
#include <string>

namespace hgslab {

enum class ErrorKind {
  kInvalidSpec,
  kUsage,
  kBaseMismatch,
  kClosureCap,
  kNotRegular,
  kNotStable,
  kNotMember,
  kUnsupportedOrder,
  kOrderTooLarge,
  kUnknownType,
  kBraceAxiom,
  kBraidFailure,
  kInvalidHom,
  kInvalidEmbedding,
  kNotFixedPointFree,
  kConstructionFailure,
  kNoNormalComplement,
  kIdentificationFailure,
  kDegreeTooLarge,
  kNotPreserved,
  kStabilityViolation,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this exception; `kind()` lets
// callers (notably the CLI) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hgslab
