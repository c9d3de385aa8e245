#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace acdkit {

using StateId = std::uint32_t;
using LetterId = std::uint32_t;
using EdgeId = std::uint32_t;

/// A set of edges (or states) of one automaton, as a bitset over indices.
/// Cycles are edge sets; their canonical key is the increasing index list.
using EdgeSet = boost::dynamic_bitset<std::uint64_t>;
using StateSet = boost::dynamic_bitset<std::uint64_t>;

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const noexcept;
};

/// Increasing list of member indices.
std::vector<std::uint32_t> to_indices(const EdgeSet& s);

/// Set of size n containing `members`.
EdgeSet from_indices(std::size_t n, const std::vector<std::uint32_t>& members);

/// Canonical order of sibling cycles: size descending, then lexicographic on
/// the index lists.
bool cycle_order_less(const EdgeSet& a, const EdgeSet& b);

/// Keeps the inclusion-maximal members, deduplicated, in cycle order.
std::vector<EdgeSet> maximal_edge_sets(std::vector<EdgeSet> sets);

}  // namespace acdkit
