#include "acdkit/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "acdkit/error.hpp"

namespace acdkit {

namespace {

std::size_t* field(Caps& caps, const std::string& name) {
  if (name == "family_colours") return &caps.family_colours;
  if (name == "oracle_colours") return &caps.oracle_colours;
  if (name == "cycle_edges") return &caps.cycle_edges;
  if (name == "formula_vars") return &caps.formula_vars;
  if (name == "even_letters") return &caps.even_letters;
  if (name == "search_edges") return &caps.search_edges;
  if (name == "target_colours") return &caps.target_colours;
  return nullptr;
}

}  // namespace

Caps parse_caps(const std::string& spec, Caps base) {
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("malformed cap entry '" + item + "'");
    std::string name = item.substr(0, eq);
    std::size_t* target = field(base, name);
    if (target == nullptr) throw DomainError("unknown cap '" + name + "'");
    const std::string value = item.substr(eq + 1);
    char* end = nullptr;
    unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (value.empty() || *end != '\0') throw DomainError("malformed value for cap '" + name + "'");
    *target = static_cast<std::size_t>(v);
  }
  return base;
}

const Caps& default_caps() {
  static const Caps caps = [] {
    const char* env = std::getenv("ACDKIT_CAPS");
    return env == nullptr ? Caps{} : parse_caps(env);
  }();
  return caps;
}

void enforce_cap(const char* name, std::size_t value, std::size_t limit) {
  if (value > limit) throw CapExceeded(name, value, limit);
}

}  // namespace acdkit
