#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "acdkit/acd.hpp"
#include "acdkit/automaton.hpp"
#include "acdkit/caps.hpp"
#include "acdkit/conditions.hpp"
#include "acdkit/horn.hpp"
#include "acdkit/zielonka.hpp"

namespace acdkit {

/// Family of the non-empty sets of even size over {1..m}.
/// Throws CapExceeded when m exceeds caps.even_letters, DomainError when
/// m = 0.
MullerFamily even_letters(std::size_t m, const Caps& caps = default_caps());

/// {{1,2}, {1,2,3,4}, …, {1,…,2n}} over {1..2n}.
MullerFamily chain_family(std::size_t n);

/// Sets {c₁ < c₂ < …} over {1..n} with c₁ odd and c₂ = c₁ + 1.
MullerFamily small_dag_family(std::size_t n);

/// Pairs ({g_i}, {r_i}) for i = 1..m over the colours g1 r1 … gm rm.
RabinCondition rabin_worst(std::size_t m);

/// A simple undirected graph.
struct UndirectedGraph {
  std::vector<std::string> vertices;
  /// Pairs of distinct vertex indices (u < v), without repetition.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Throws DomainError on self-loops, repeated edges or bad indices.
  void check() const;
  bool connected() const;
  bool adjacent(std::size_t u, std::size_t v) const;

  /// Vertices "1".."n".
  static UndirectedGraph complete(std::size_t n);
  static UndirectedGraph path(std::size_t n);
  static UndirectedGraph cycle(std::size_t n);
  /// Text format: one edge `u v` per line, a single name declares an
  /// isolated vertex, `#` starts a comment. Vertices are numbered in order
  /// of first occurrence. Throws ParseError.
  static UndirectedGraph parse(const std::string& text);
};

/// A directed graph (self-loops allowed, no repeated edges).
struct DirectedGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  void check() const;
  /// Same text format as UndirectedGraph, `u v` meaning u → v.
  static DirectedGraph parse(const std::string& text);
  static DirectedGraph cycle(std::size_t n);
};

/// The pseudo-path automaton of a connected graph: states V ∪ E ∪ {init},
/// letters and colours V ∪ E, each edge coloured by its letter, accepting the
/// pseudo-paths from the first vertex that stabilise around some vertex.
/// Throws DomainError when G is disconnected or too large for 64 colours.
Automaton aut_chrom(const UndirectedGraph& g);

/// The two-state automaton of the clique reduction: loops v:v on q_vert,
/// a bridge q_vert → q_k on x, loops a:a on q_k for k fresh colours
/// a1..ak, and F = E ∪ {{a, a′} | a ≠ a′}.
Automaton aut_clique(const UndirectedGraph& g, std::size_t k);

/// The Hamiltonian-cycle automaton: states v-, v+; v- → v+ on l_v and
/// src+ → tgt- on l_e; the formula forbids two edges leaving the same vertex
/// and requires every l_v once some l_v is seen.
GhAutomaton ham_gh_automaton(const DirectedGraph& g);

/// One state, one letter and one self-loop per colour, the loop of colour c
/// coloured {c}.
Automaton one_state_automaton(const Acceptance& acceptance);

/// Random source of the generators: mt19937_64 with a fixed conversion to
/// probabilities and ranges, so that a seed gives the same output on every
/// platform.
class SeededRandom {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n);
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Each non-empty subset of Γ with probability `density`. With
/// `non_empty` and a positive density, empty draws are rejected and redrawn.
MullerFamily random_family(const ColourAlphabet& alphabet, double density, std::uint64_t seed,
                           bool non_empty = true);

struct RandomAutomatonSizes {
  std::size_t states = 4;
  std::size_t letters = 2;
  std::size_t colours = 3;
  /// Probability that a (state, letter) pair has a transition.
  double transition_density = 0.8;
  /// Probability that an edge carries a second (third, …) colour.
  double extra_colour = 0.2;
  /// Density of the random acceptance family.
  double family_density = 0.5;
  /// Upper bound on the number of edges (transitions beyond it are dropped).
  std::size_t max_edges = static_cast<std::size_t>(-1);
};

/// A deterministic Muller automaton with a random family acceptance.
Automaton random_automaton(const RandomAutomatonSizes& sizes, std::uint64_t seed);

/// A GH formula of `clauses` clauses over the variables x1..xn, each clause
/// negative with probability `negative`.
GHFormula random_gh_formula(std::size_t variables, std::size_t clauses, double negative,
                            std::uint64_t seed);

/// A Rabin condition with `pairs` random pairs over `colours` colours.
RabinCondition random_rabin(std::size_t colours, std::size_t pairs, std::uint64_t seed);

/// Zielonka tree by the definition: the children of a node labelled X are
/// the maximal non-empty subsets of X of flipped membership, found by
/// enumerating every subset. Children in child order, nodes in pre-order.
/// Throws CapExceeded beyond caps.oracle_colours colours.
ZTree naive_ztree(const MullerFamily& family, const Caps& caps = default_caps());

/// ACD by the definition over the list of all cycles: roots are the maximal
/// cycles, children the maximal subcycles of opposite acceptance. Throws
/// CapExceeded beyond caps.cycle_edges edges.
AcdForest naive_acd(const Automaton& a, const Caps& caps = default_caps());

/// Least k such that some map Γ → {1..k} identifies only sets of equal
/// membership, by enumerating set partitions of Γ.
std::size_t naive_min_colours(const MullerFamily& family, const Caps& caps = default_caps());

/// Least k such that the automaton is k-colour type (multi: several colours
/// per edge), by enumerating recolourings of the reachable recurrent edges
/// and checking compatibility by cycle enumeration. Throws CapExceeded
/// beyond 10 such edges, or in multi mode beyond 2·10⁶ assignments for
/// some k.
std::size_t naive_min_colours(const Automaton& a, bool multi, const Caps& caps = default_caps());

/// Least number of pairs of a Rabin condition with the same language, by
/// enumerating pair lists. Throws CapExceeded beyond caps.formula_vars
/// colours.
std::size_t naive_min_rabin_pairs(const RabinCondition& cond, const Caps& caps = default_caps());

/// Least number of clauses of an equivalent GH formula, by enumerating
/// clause sets over truth tables. Throws CapExceeded beyond
/// caps.formula_vars variables.
std::size_t naive_gh_min(const GHFormula& phi, const Caps& caps = default_caps());

}  // namespace acdkit
