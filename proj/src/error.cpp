#include "fusionsys/error.hpp"

#include <cstdlib>
#include <string>

namespace fusionsys {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kNotBijection: return "NotBijection";
    case ErrorCode::kClosureTooLarge: return "ClosureTooLarge";
    case ErrorCode::kGroupTooLarge: return "GroupTooLarge";
    case ErrorCode::kGuardrailExceeded: return "GuardrailExceeded";
    case ErrorCode::kNotSubgroup: return "NotSubgroup";
    case ErrorCode::kNotPGroup: return "NotPGroup";
    case ErrorCode::kNotAbelian: return "NotAbelian";
    case ErrorCode::kNotSylow: return "NotSylow";
    case ErrorCode::kNotFusionPreserving: return "NotFusionPreserving";
    case ErrorCode::kNotCommuting: return "NotCommuting";
    case ErrorCode::kNotSummable: return "NotSummable";
    case ErrorCode::kNotNormal: return "NotNormal";
    case ErrorCode::kNotSaturated: return "NotSaturated";
    case ErrorCode::kHypothesisFailed: return "HypothesisFailed";
    case ErrorCode::kGenerationMismatch: return "GenerationMismatch";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Guardrails Guardrails::parse(std::string_view text) {
  Guardrails g;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    start = end + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorCode::kInvalidInput,
           "guardrail entry '" + std::string(item) + "' is not key=value");
    }
    std::string key(item.substr(0, eq));
    std::string value(item.substr(eq + 1));
    char* endp = nullptr;
    unsigned long long v = std::strtoull(value.c_str(), &endp, 10);
    if (value.empty() || *endp != '\0') {
      fail(ErrorCode::kInvalidInput, "guardrail value '" + value + "' is not a number");
    }
    if (key == "closure") g.closure = v;
    else if (key == "subgroups") g.subgroups = v;
    else if (key == "homs") g.homs = v;
    else if (key == "lattice") g.lattice_size = v;
    else if (key == "omega") g.omega = v;
    else if (key == "table") g.table = v;
    else fail(ErrorCode::kInvalidInput, "unknown guardrail '" + key + "'");
  }
  return g;
}

const Guardrails& Guardrails::current() {
  static const Guardrails g = [] {
    const char* env = std::getenv("FUSIONSYS_GUARDRAIL");
    return env ? parse(env) : Guardrails{};
  }();
  return g;
}

}  // namespace fusionsys
