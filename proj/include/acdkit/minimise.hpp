#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "acdkit/automaton.hpp"
#include "acdkit/caps.hpp"
#include "acdkit/conditions.hpp"
#include "acdkit/cycles.hpp"

namespace acdkit {

/// The unique largest T ⊆ S rejected by the Rabin pairs of `cond` (pairs are
/// read with Rabin semantics whatever the condition's semantics flag).
ColourSet rabin_max_rejected_subset(const RabinCondition& cond, ColourSet s);

/// A maximal set accepted by `r` and rejected by `r2` (both with Rabin
/// semantics, same alphabet), or nullopt when Rabin(r) ⊆ Rabin(r2). Among
/// maximal candidates the one from the lowest pair index is returned.
std::optional<ColourSet> rabin_difference_witness(const RabinCondition& r, const RabinCondition& r2);

/// An equivalent Rabin condition over the same alphabet with the least
/// possible number of pairs.
RabinCondition minimise_rabin_pairs(const RabinCondition& cond);

/// The same minimisation read as Streett pairs; the result carries Streett
/// semantics.
RabinCondition minimise_streett_pairs(const RabinCondition& cond);

/// A recolouring of the edges of an automaton with colours "1".."k".
struct RecolouringCandidate {
  std::size_t k = 1;
  /// One non-empty set over [0, k) per edge, in edge order.
  std::vector<ColourSet> colours;
};

/// Candidate from one colour index per edge.
RecolouringCandidate single_colour_candidate(std::size_t k, const std::vector<std::size_t>& colour);

/// The target alphabet "1".."k".
ColourAlphabet target_alphabet(std::size_t k);

enum class RecolouringBackend {
  product,      ///< Streett emptiness on the product of the automaton with itself
  brute_force,  ///< enumeration of reachable cycles (small automata only)
};

struct RecolouringResult {
  bool compatible = false;
  /// Recoloured acceptance: col′-sets of the reachable accepting cycles
  /// (when compatible and requested).
  std::optional<MullerFamily> family;
  /// When incompatible: an accepted and a rejected word whose runs see the
  /// same col′-set infinitely often, and the edges of those runs' cycles.
  std::optional<Lasso> accepted_word;
  std::optional<Lasso> rejected_word;
  EdgeSet accepted_cycle;
  EdgeSet rejected_cycle;
};

/// Whether some Muller condition over "1".."k" turns the recolouring into
/// an equivalent acceptance condition over the automaton. Throws
/// DomainError on nondeterministic automata or malformed candidates.
RecolouringResult recolouring_compatible(const Automaton& a, const RecolouringCandidate& cand,
                                         RecolouringBackend backend = RecolouringBackend::product,
                                         bool want_family = true,
                                         const Caps& caps = default_caps());

/// The recoloured automaton (colours "1".."k", condition `family`).
Automaton apply_recolouring(const Automaton& a, const RecolouringCandidate& cand,
                            const MullerFamily& family);

struct ColourSearchResult {
  /// Least number of colours found.
  std::size_t k = 0;
  RecolouringCandidate candidate;
  MullerFamily family{ColourAlphabet::numbered(1, 1), {}};
  /// Complete assignments checked against the product (counterexample rounds).
  std::size_t checks = 0;
};

/// Whether the automaton is k-colour type (multi: several colours per edge
/// allowed); returns a certificate when it is. Throws CapExceeded when the
/// number of edges on reachable cycles exceeds caps.search_edges or k
/// exceeds caps.target_colours.
std::optional<ColourSearchResult> colour_type_search(const Automaton& a, std::size_t k, bool multi,
                                                      const Caps& caps = default_caps());

/// Least k for which the automaton is k-colour type, with a certificate.
ColourSearchResult min_colours_on_automaton(const Automaton& a, bool multi,
                                            const Caps& caps = default_caps());

/// Edges grouped by the set of ACD nodes whose cycle contains them, ordered
/// by least edge. Transient edges form one class (when present).
std::vector<EdgeSet> acd_edge_classes(const Automaton& a);

struct RabinPairSearchResult {
  bool found = false;
  /// Edge classes used as colours of the certificate.
  std::vector<EdgeSet> classes;
  /// Certificate: the automaton recoloured by class with a Rabin condition
  /// of at most k pairs, checked equivalent to the input.
  std::optional<Automaton> certificate;
};

/// Whether the automaton can be relabelled with an equivalent Rabin
/// condition of at most k pairs. Green and red sets are unions of the ACD
/// edge classes, or of single edges when `per_edge` is set. Throws
/// CapExceeded beyond 8 classes.
RabinPairSearchResult min_rabin_pairs_on_automaton(const Automaton& a, std::size_t k,
                                                   bool per_edge = false);

}  // namespace acdkit
