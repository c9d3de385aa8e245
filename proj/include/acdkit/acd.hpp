#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "acdkit/automaton.hpp"
#include "acdkit/cycles.hpp"
#include "acdkit/zielonka.hpp"

namespace acdkit {

/// A node of an ACD-DAG: a cycle of the automaton and the acceptance of its
/// colour set (round = accepting).
struct AcdDagNode {
  EdgeSet cycle;
  ColourSet colours;
  StateSet states;
  Polarity polarity = Polarity::round;
  /// Children in cycle order (size descending, then lexicographic).
  std::vector<std::size_t> children;
  std::vector<std::size_t> parents;
  /// Index of the SCC (and DAG) the node belongs to.
  std::size_t dag = 0;
  /// Smallest depth at which the node occurs in the unfolded tree.
  std::size_t depth = 0;

  bool operator==(const AcdDagNode&) const = default;
};

/// The ACD-DAG of an automaton: one DAG per SCC, all nodes in one list.
/// Nodes are numbered by a depth-first traversal from the roots (roots in
/// SCC order, children in cycle order), each node at its first visit.
struct AcdDag {
  std::size_t num_states = 0;
  std::size_t num_edges = 0;
  std::vector<AcdDagNode> nodes;
  /// Root of each DAG; roots[i] is labelled by the i-th SCC.
  std::vector<std::size_t> roots;

  std::size_t size() const { return nodes.size(); }
  std::size_t edge_count() const;
  /// Number of nodes on a longest path from the root of DAG `i`.
  std::size_t height(std::size_t i) const;
  /// Maximum height over all DAGs (0 when there are none).
  std::size_t max_height() const;
  /// Index of the node labelled by `cycle`, if any.
  std::optional<std::size_t> find(const EdgeSet& cycle) const;

  bool operator==(const AcdDag&) const = default;
};

struct AcdNode {
  EdgeSet cycle;
  ColourSet colours;
  StateSet states;
  Polarity polarity = Polarity::round;
  std::size_t parent = kNoNode;
  std::vector<std::size_t> children;
  std::size_t depth = 0;
  /// Index of the tree (SCC) the node belongs to.
  std::size_t tree = 0;

  bool operator==(const AcdNode&) const = default;
};

/// The alternating cycle decomposition: one tree per SCC. Nodes are numbered
/// in pre-order, tree by tree; children are in cycle order.
struct AcdForest {
  std::size_t num_states = 0;
  std::size_t num_edges = 0;
  std::vector<AcdNode> nodes;
  std::vector<std::size_t> roots;

  std::size_t size() const { return nodes.size(); }
  std::size_t height(std::size_t i) const;
  std::size_t max_height() const;
  /// Leaves of tree `i` in pre-order.
  std::vector<std::size_t> leaves(std::size_t i) const;

  bool operator==(const AcdForest&) const = default;
};

/// The maximal subcycles of `cycle` whose acceptance differs from that of
/// `cycle`, in cycle order. `dag` must be the Zielonka DAG of a's condition.
/// For every node m of the DAG with the opposite polarity, the cycle is
/// restricted to the edges e with col(e) ⊆ ν(m); the SCCs of the
/// restriction whose colours lie in no child label of m are candidates, and
/// the inclusion-maximal candidates are returned.
std::vector<EdgeSet> compute_children(const TransitionGraph& g, const ZDag& dag,
                                      const EdgeSet& cycle);

/// The ACD-DAG by a worklist over nodes: roots are the SCCs, children come
/// from compute_children, nodes are identified by their edge set.
AcdDag compute_acd_dag(const Automaton& a);
AcdDag compute_acd_dag(const TransitionGraph& g, const ZDag& dag);

/// Duplicates shared nodes once per path from the root.
AcdForest unfold_acd(const AcdDag& dag);
/// Merges nodes with equal cycles; fold_acd(unfold_acd(d)) == d.
AcdDag fold_acd(const AcdForest& forest);
AcdForest compute_acd(const Automaton& a);

/// The nodes whose cycle passes through q (increasing indices); empty when
/// q is transient. The root of q's tree or DAG comes first.
struct LocalView {
  StateId state = 0;
  std::vector<std::size_t> nodes;

  std::size_t size() const { return nodes.size(); }
  bool empty() const { return nodes.empty(); }
};

LocalView local_view(const AcdForest& forest, StateId q);
LocalView local_view(const AcdDag& dag, StateId q);

/// The ACD tree `i` as a colour-labelled tree (labels are the cycles'
/// colour sets).
ZTree acd_tree_colours(const AcdForest& forest, std::size_t i, const ColourAlphabet& alphabet);
/// The ACD-DAG `i` as a Zielonka DAG. Throws DomainError when two of its
/// cycles have the same colour set.
ZDag acd_dag_colours(const AcdDag& dag, std::size_t i, const ColourAlphabet& alphabet);

/// Structural typeness of an automaton from its ACD-DAG: Rabin when no round
/// node has two children through a common state, Streett likewise for
/// square nodes, parity when no node does.
Typeness typeness(const AcdDag& dag);
Typeness typeness(const Automaton& a);

struct ParityIndexReport {
  /// Maximum ACD height, or 1 when the automaton has no cycle.
  std::size_t index = 1;
  bool empty_forest = false;
  /// Set when the input is nondeterministic: the number is structural only.
  bool nondeterministic = false;
  std::vector<std::string> notes;
};

ParityIndexReport parity_index(const Automaton& a);

/// Priority of each ACD node: depth + ε, where ε ∈ {0, 1} makes round nodes
/// even. Non-negative priorities in [0, max_priority].
struct AcdPriorities {
  std::vector<int> of_node;
  int max_priority = 0;
};

AcdPriorities acd_priorities(const AcdForest& forest);

/// The ACD-parity-transform.
struct Paritization {
  /// Deterministic automaton with a parity condition [0, max priority].
  Automaton parity;
  /// Projection of each parity state to the state of the input.
  std::vector<StateId> state_of;
  /// Leaf of the local subtree of each parity state (kNoNode for transient
  /// states).
  std::vector<std::size_t> leaf_of;
};

/// States are (q, l) for the leaves l of t_q, and (q, ⊥) for transient q,
/// ordered by q then leaf pre-order. Throws DomainError on a
/// nondeterministic input.
Paritization paritize(const Automaton& a);
Paritization paritize(const Automaton& a, const AcdForest& forest);

/// JSON report of an ACD forest or DAG (cycles as edge index lists, states,
/// colours, polarity, priority).
nlohmann::json acd_to_json(const AcdForest& forest, const TransitionGraph& g);
nlohmann::json acd_dag_to_json(const AcdDag& dag, const TransitionGraph& g);
std::string acd_to_dot(const AcdForest& forest, const TransitionGraph& g);
std::string acd_dag_to_dot(const AcdDag& dag, const TransitionGraph& g);

}  // namespace acdkit
