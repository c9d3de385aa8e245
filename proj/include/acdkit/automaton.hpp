#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "acdkit/caps.hpp"
#include "acdkit/colours.hpp"
#include "acdkit/conditions.hpp"
#include "acdkit/edge_set.hpp"
#include "acdkit/zielonka.hpp"

namespace acdkit {

/// A transition (source, letter, target) producing a non-empty colour set.
struct Edge {
  StateId src = 0;
  LetterId letter = 0;
  StateId dst = 0;
  ColourSet colours;

  bool operator==(const Edge&) const = default;
};

/// States, letters, colours and coloured edges of an automaton, without an
/// acceptance condition.
///
/// Edges with the same (source, letter, target) are merged into one edge
/// whose colour set is the union. Edges are then stably sorted by source, so
/// edge indices group the outgoing edges of each state. Determinism and completeness are properties, not
/// invariants.
class TransitionGraph {
 public:
  /// Throws DomainError on zero states or letters, endpoints or letters out
  /// of range, empty colour sets, colours outside `colours`, or a wrong
  /// number of state names.
  TransitionGraph(std::size_t num_states, StateId initial, std::vector<std::string> letters,
                  ColourAlphabet colours, std::vector<Edge> edges,
                  std::vector<std::string> state_names = {});

  std::size_t num_states() const { return num_states_; }
  StateId initial() const { return initial_; }
  const std::vector<std::string>& letters() const { return letters_; }
  std::size_t num_letters() const { return letters_.size(); }
  /// Letter index by name; throws DomainError when unknown.
  LetterId letter(const std::string& name) const;
  const ColourAlphabet& colours() const { return colours_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<EdgeId>& out_edges(StateId q) const { return out_.at(q); }
  const std::vector<EdgeId>& in_edges(StateId q) const { return in_.at(q); }
  /// Empty when no names were given.
  const std::vector<std::string>& state_names() const { return state_names_; }
  std::string state_label(StateId q) const;

  bool is_deterministic() const;
  bool is_complete() const;
  /// The edge leaving q on letter a (the first one if several exist).
  std::optional<EdgeId> successor(StateId q, LetterId a) const;

  EdgeSet no_edges() const { return EdgeSet(edges_.size()); }
  EdgeSet all_edges() const;
  ColourSet colours_of(const EdgeSet& edges) const;
  StateSet states_of(const EdgeSet& edges) const;
  /// States reachable from the initial state.
  StateSet reachable_states() const;
  /// Edges whose source is reachable.
  EdgeSet reachable_edges() const;

  /// Same structure with new edge colours (one entry per edge in edge order).
  TransitionGraph recoloured(ColourAlphabet colours, const std::vector<ColourSet>& edge_colours) const;

  bool operator==(const TransitionGraph& o) const;

 private:
  std::size_t num_states_;
  StateId initial_;
  std::vector<std::string> letters_;
  ColourAlphabet colours_;
  std::vector<Edge> edges_;
  std::vector<std::string> state_names_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

/// The acceptance conditions an automaton can carry. A RabinCondition with
/// Streett semantics is a Streett condition.
using Acceptance = std::variant<MullerFamily, ZTree, ZDag, RabinCondition, ParityCondition>;

const ColourAlphabet& acceptance_alphabet(const Acceptance& acc);
/// "muller", "ztree", "zdag", "rabin", "streett" or "parity".
const char* acceptance_kind(const Acceptance& acc);
/// True for the three Muller representations.
bool is_muller(const Acceptance& acc);
/// Set-level acceptance; C must be non-empty and inside the alphabet.
bool acceptance_accepts(const Acceptance& acc, ColourSet c);
/// Zielonka DAG of the condition (Rabin/Streett via their membership
/// predicate, parity as a chain).
ZDag acceptance_zdag(const Acceptance& acc);

/// A transition-based ω-automaton: a transition graph and an acceptance
/// condition over the graph's colour alphabet.
class Automaton {
 public:
  /// Throws DomainError when the acceptance alphabet differs from the
  /// graph's colour alphabet.
  Automaton(TransitionGraph graph, Acceptance acceptance);

  const TransitionGraph& graph() const { return graph_; }
  const Acceptance& acceptance() const { return acceptance_; }
  const ColourAlphabet& colours() const { return graph_.colours(); }

  /// Acceptance of a cycle with colour set C.
  bool accepts_colours(ColourSet c) const { return acceptance_accepts(acceptance_, c); }

  bool operator==(const Automaton& o) const;

 private:
  TransitionGraph graph_;
  Acceptance acceptance_;
};

/// Throws DomainError naming `operation` unless g is deterministic.
void require_deterministic(const TransitionGraph& g, const char* operation);

}  // namespace acdkit
