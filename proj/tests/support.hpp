#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "acdkit/acd.hpp"
#include "acdkit/gen.hpp"
#include "acdkit/minimise.hpp"
#include "acdkit/zielonka.hpp"

namespace acdkit::testing {

/// F = {{β}, {γ,α}, {γ,β}} over {α,β,γ}.
inline MullerFamily example_family() {
  ColourAlphabet g({"α", "β", "γ"});
  return MullerFamily(g, {g.parse_set({"β"}), g.parse_set({"γ", "α"}), g.parse_set({"γ", "β"})});
}

inline std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

/// Recolouring of aut_chrom(G) from a vertex colouring: both edges around a
/// vertex v get colour c(v), the initial edge gets colour 0.
inline RecolouringCandidate chrom_candidate(const UndirectedGraph& g, const Automaton& a,
                                            const std::vector<std::size_t>& vertex_colour, std::size_t k) {
  const std::size_t nv = g.vertices.size();
  std::vector<std::size_t> colour;
  for (const Edge& e : a.graph().edges()) {
    if (e.src < nv) {
      colour.push_back(vertex_colour[e.src]);
    } else if (e.dst < nv && e.src < nv + g.edges.size()) {
      colour.push_back(vertex_colour[e.dst]);
    } else {
      colour.push_back(0);
    }
  }
  return single_colour_candidate(k, colour);
}

/// Canonical signature of a tree: label, polarity and the sorted signatures
/// of the children.
inline std::string tree_signature(const ZTree& t, std::size_t n) {
  std::vector<std::string> kids;
  for (std::size_t c : t.node(n).children) kids.push_back(tree_signature(t, c));
  std::sort(kids.begin(), kids.end());
  std::string s = std::to_string(t.node(n).label.bits()) + (t.node(n).polarity == Polarity::round ? "R" : "S") + "(";
  for (const auto& k : kids) s += k + ",";
  return s + ")";
}

/// Label-level description of a DAG: (label, polarity, set of child labels).
inline std::set<std::tuple<std::uint64_t, int, std::set<std::uint64_t>>> dag_signature(const ZDag& d) {
  std::set<std::tuple<std::uint64_t, int, std::set<std::uint64_t>>> out;
  for (const auto& n : d.nodes()) {
    std::set<std::uint64_t> kids;
    for (std::size_t c : n.children) kids.insert(d.node(c).label.bits());
    out.emplace(n.label.bits(), static_cast<int>(n.polarity), kids);
  }
  return out;
}

/// Language of a Rabin condition as a bitmask over the non-empty subsets.
inline std::uint64_t rabin_language_bits(const RabinCondition& r) {
  std::uint64_t bits = 0;
  const std::uint64_t n = std::uint64_t{1} << r.alphabet().size();
  for (std::uint64_t c = 1; c < n; ++c) {
    if (rabin_accepts(r, ColourSet(c))) bits |= std::uint64_t{1} << c;
  }
  return bits;
}

/// A random word over `letters` letters of length in [min_len, max_len].
inline std::vector<LetterId> random_word(SeededRandom& rng, std::size_t letters, std::size_t min_len,
                                         std::size_t max_len) {
  std::vector<LetterId> w(min_len + rng.below(max_len - min_len + 1));
  for (auto& x : w) x = static_cast<LetterId>(rng.below(letters));
  return w;
}

}  // namespace acdkit::testing
