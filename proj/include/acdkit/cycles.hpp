#pragma once

#include <span>
#include <string>
#include <vector>

#include "acdkit/automaton.hpp"

namespace acdkit {

/// Strongly connected components of an edge-induced subgraph.
struct SccDecomposition {
  /// Component index per state, or -1 when the state lies on no cycle of the
  /// subgraph (transient).
  std::vector<int> component;
  /// Edge set of each component, ordered by least edge index. Components
  /// without an internal edge are not listed.
  std::vector<EdgeSet> components;
  std::vector<StateId> recurrent;
  std::vector<StateId> transient;
};

/// SCCs of the subgraph formed by `edges` (Tarjan's algorithm).
SccDecomposition scc_decompose(const TransitionGraph& g, const EdgeSet& edges);
SccDecomposition scc_decompose(const TransitionGraph& g);

/// True when `edges` is non-empty and strongly connected.
bool is_cycle(const TransitionGraph& g, const EdgeSet& edges);

/// Every cycle of g, in cycle order (size descending, then lexicographic).
/// Throws CapExceeded when g has more than caps.cycle_edges edges.
std::vector<EdgeSet> enumerate_cycles(const TransitionGraph& g, const Caps& caps = default_caps());

/// Cycles made only of edges whose source is reachable from the initial state.
std::vector<EdgeSet> enumerate_reachable_cycles(const TransitionGraph& g,
                                                const Caps& caps = default_caps());

/// Acceptance of col(ℓ). Throws DomainError when ℓ is empty.
bool cycle_accepting(const Automaton& a, const EdgeSet& cycle);

enum class RunVerdict { accepted, rejected, no_run };
const char* to_string(RunVerdict v) noexcept;

/// Run of a deterministic automaton on u·v^ω.
struct LassoRun {
  RunVerdict verdict = RunVerdict::no_run;
  /// Edges taken infinitely often (empty for no_run).
  EdgeSet inf_edges;
};

/// Simulates u, then v repeatedly until the state at the start of v
/// repeats. Throws DomainError on nondeterministic automata or empty v.
LassoRun run_lasso(const Automaton& a, std::span<const LetterId> u, std::span<const LetterId> v);
RunVerdict run_ultimately_periodic(const Automaton& a, std::span<const LetterId> u,
                                   std::span<const LetterId> v);

/// A lasso u·v^ω given by letters.
struct Lasso {
  std::vector<LetterId> prefix;
  std::vector<LetterId> period;
};

/// "u | v" with letters separated by spaces ("ε" for an empty prefix).
std::string format_lasso(const Lasso& lasso, const std::vector<std::string>& letters);

}  // namespace acdkit
