#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fusionsys {

enum class ErrorCode {
  kInvalidInput,
  kNotBijection,
  kClosureTooLarge,
  kGroupTooLarge,
  kGuardrailExceeded,
  kNotSubgroup,
  kNotPGroup,
  kNotAbelian,
  kNotSylow,
  kNotFusionPreserving,
  kNotCommuting,
  kNotSummable,
  kNotNormal,
  kNotSaturated,
  kHypothesisFailed,
  kGenerationMismatch,
  kInternalInconsistency,
};

std::string_view error_code_name(ErrorCode code);

// All module errors carry a machine-readable code. Mathematical rejections
// (NotCommuting, NotFusionPreserving, ...) and theorem violations
// (InternalInconsistency) share this type; the CLI maps codes to exit codes.
class FusionError : public std::runtime_error {
 public:
  FusionError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw FusionError(code, what);
}

// Theorem checks: a failure here is a bug (or a non-saturated input).
inline void ensure(bool condition, const std::string& what) {
  if (!condition) fail(ErrorCode::kInternalInconsistency, what);
}

// Size limits for the exhaustive enumerations. Defaults cover every bundled
// catalog entry; FUSIONSYS_GUARDRAIL overrides them, e.g.
//   FUSIONSYS_GUARDRAIL="closure=40000,subgroups=1024"
struct Guardrails {
  std::size_t closure = 20000;        // elements in a generated group
  std::size_t subgroups = 512;        // group order for subgroup enumeration
  std::size_t homs = 512;             // domain order for hom enumeration
  std::size_t lattice_size = 100000;  // number of subgroups
  std::size_t omega = 10000;          // elements in an automorphism closure
  std::size_t table = 5000000;        // isomorphisms in one fusion table

  static const Guardrails& current();
  static Guardrails parse(std::string_view text);
};

}  // namespace fusionsys
