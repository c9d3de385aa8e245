#include "acdkit/error.hpp"

namespace acdkit {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(line == 0 ? message
                      : std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

UnsupportedFeature::UnsupportedFeature(const std::string& message, std::string token)
    : Error(message + " (offending token: '" + token + "')"), token_(std::move(token)) {}

CapExceeded::CapExceeded(const std::string& cap, std::size_t value, std::size_t limit)
    : DomainError("cap '" + cap + "' exceeded: " + std::to_string(value) + " > " +
                  std::to_string(limit) + " (raise it with ACDKIT_CAPS=" + cap + "=N)"),
      cap_(cap),
      value_(value),
      limit_(limit) {}

const char* to_string(TreeViolation v) noexcept {
  switch (v) {
    case TreeViolation::structure: return "structure";
    case TreeViolation::alternation: return "alternation";
    case TreeViolation::not_subset: return "not-subset";
    case TreeViolation::incomparable: return "incomparable";
    case TreeViolation::inconsistent: return "inconsistent";
    case TreeViolation::not_maximal: return "not-maximal";
  }
  return "unknown";
}

TreeValidationError::TreeValidationError(TreeViolation kind, std::size_t node_a,
                                         std::size_t node_b, const std::string& detail)
    : DomainError(std::string(to_string(kind)) + " violation: " + detail),
      kind_(kind),
      node_a_(node_a),
      node_b_(node_b) {}

NotRabinType::NotRabinType(std::size_t node, std::size_t children)
    : DomainError("not Rabin type: round node " + std::to_string(node) + " has " +
                  std::to_string(children) + " children"),
      node_(node),
      children_(children) {}

}  // namespace acdkit
