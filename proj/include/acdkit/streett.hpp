#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acdkit/automaton.hpp"
#include "acdkit/cycles.hpp"

namespace acdkit {

/// A conjunction of Streett pairs; (G, R) holds for C iff C ∩ G = ∅ or
/// C ∩ R ≠ ∅ ("G seen infinitely often implies R seen infinitely often").
using StreettTerm = std::vector<RabinPair>;

inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

/// True when every pair of the term holds for C.
bool streett_term_holds(std::span<const RabinPair> term, ColourSet c);

/// The acceptance (accepting = true) or rejection (accepting = false) of a
/// condition as a disjunction of Streett terms over its own alphabet.
/// Muller conditions use their Zielonka DAG: one term per round node
/// (accepting) or square node (rejecting).
std::vector<StreettTerm> acceptance_terms(const Acceptance& acc, bool accepting);

/// A lasso found in a graph, with the edges it follows.
struct GraphLasso {
  Lasso word;
  std::vector<EdgeId> prefix_edges;
  std::vector<EdgeId> period_edges;
  /// Edges of the period (the inf-set of the run).
  EdgeSet cycle;
};

/// A reachable cycle satisfying every pair of `term` (Streett semantics over
/// g's colours), as a lasso; nullopt when there is none. Recursive SCC
/// refinement: an SCC whose colours violate some pair loses the edges
/// carrying that pair's green colours and is decomposed again.
std::optional<GraphLasso> streett_lasso(const TransitionGraph& g, std::span<const RabinPair> term);

/// A lasso whose period follows every edge of `cycle` (a strongly connected
/// set of edges reachable from the initial state).
GraphLasso cycle_lasso(const TransitionGraph& g, const EdgeSet& cycle);

/// Same over a disjunction of terms.
std::optional<GraphLasso> streett_lasso_any(const TransitionGraph& g,
                                            const std::vector<StreettTerm>& terms);

/// Non-emptiness of an automaton with a Streett condition; returns a witness.
/// Throws DomainError when the acceptance is not a Streett condition.
std::optional<GraphLasso> streett_nonempty(const Automaton& s);

/// An edge colouring of a graph used as one colour layer of a product.
struct ColourLayer {
  ColourAlphabet alphabet;
  /// One (possibly empty) set per edge of the graph.
  std::vector<ColourSet> edge_colours;
};

/// The graph's own colours as a layer.
ColourLayer own_layer(const TransitionGraph& g);

/// One component of a product: a graph and its colour layers. With
/// `complete`, missing transitions go to a sink whose edges carry only a
/// dedicated sink colour.
struct ProductSide {
  const TransitionGraph* graph = nullptr;
  std::vector<ColourLayer> layers;
  bool complete = false;
};

enum class ProductMode {
  synchronous,  ///< both sides read the same letter (alphabets must agree)
  independent,  ///< letters are pairs (a, b), one per side
};

/// Reachable part of the product of two deterministic graphs. The product's
/// colour alphabet is the disjoint union of all layers (side 0 first), then
/// the sink colours.
struct Product {
  TransitionGraph graph;
  ProductMode mode;
  /// Component states per product state; a side in its sink reports
  /// that side's num_states().
  std::vector<std::pair<StateId, StateId>> states;
  /// offsets[side][layer]: index of the layer's first colour.
  std::vector<std::vector<std::size_t>> offsets;
  /// Sink colour of each side, when that side was completed.
  std::optional<ColourIndex> sink[2];
  std::size_t letters_of_second = 1;
  /// Component edge of each product edge per side (kNoEdge inside a sink).
  std::vector<std::array<EdgeId, 2>> origin;

  ColourSet lift(std::size_t side, std::size_t layer, ColourSet s) const;
  StreettTerm lift(std::size_t side, std::size_t layer, std::span<const RabinPair> term) const;
  /// Projection of a product lasso onto one side's letters.
  Lasso project(const Lasso& lasso, std::size_t side) const;
};

/// Throws DomainError on nondeterministic components, letter mismatch in
/// synchronous mode, or more than 64 product colours.
Product build_product(const ProductSide& first, const ProductSide& second, ProductMode mode);

/// Language equality of deterministic automata (over identical letter lists).
struct Equivalence {
  bool equivalent = true;
  /// A word in exactly one of the two languages, when not equivalent.
  std::optional<Lasso> witness;
  /// Whether the first automaton accepts the witness.
  bool accepted_by_first = false;
};

Equivalence equivalent_deterministic(const Automaton& a1, const Automaton& a2);

}  // namespace acdkit
