#pragma once

#include <cstddef>
#include <string>

namespace acdkit {

/// Limits on the exponential enumerations and searches of the library.
///
/// Defaults can be raised through the environment variable ACDKIT_CAPS, a
/// comma separated list of `name=value` entries using the field names below,
/// e.g. `ACDKIT_CAPS=cycle_edges=16,oracle_colours=10`.
struct Caps {
  /// Alphabet size up to which condition_to_family enumerates P+(Γ).
  std::size_t family_colours = 16;
  /// Alphabet size up to which the naive subset oracles run.
  std::size_t oracle_colours = 8;
  /// Number of edges up to which enumerate_cycles runs.
  std::size_t cycle_edges = 14;
  /// Number of variables up to which exhaustive formula searches run.
  std::size_t formula_vars = 3;
  /// Largest m accepted by even_letters.
  std::size_t even_letters = 7;
  /// Number of relevant edges up to which on-automaton searches run.
  std::size_t search_edges = 40;
  /// Number of colours up to which compatible families are extracted.
  std::size_t target_colours = 16;
};

/// Parses a caps specification (the ACDKIT_CAPS syntax) on top of `base`.
/// Throws DomainError on unknown names or malformed values.
Caps parse_caps(const std::string& spec, Caps base = {});

/// Caps from ACDKIT_CAPS, read once per process.
const Caps& default_caps();

/// Throws CapExceeded when value > limit.
void enforce_cap(const char* name, std::size_t value, std::size_t limit);

}  // namespace acdkit
