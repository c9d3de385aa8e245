#include "acdkit/edge_set.hpp"

#include <algorithm>

namespace acdkit {

std::size_t EdgeSetHash::operator()(const EdgeSet& s) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(s.size());
  std::vector<EdgeSet::block_type> blocks;
  boost::to_block_range(s, std::back_inserter(blocks));
  for (auto b : blocks) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::vector<std::uint32_t> to_indices(const EdgeSet& s) {
  std::vector<std::uint32_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != EdgeSet::npos; i = s.find_next(i)) {
    out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

EdgeSet from_indices(std::size_t n, const std::vector<std::uint32_t>& members) {
  EdgeSet s(n);
  for (auto i : members) s.set(i);
  return s;
}

bool cycle_order_less(const EdgeSet& a, const EdgeSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca > cb;
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != EdgeSet::npos && j != EdgeSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

std::vector<EdgeSet> maximal_edge_sets(std::vector<EdgeSet> sets) {
  std::sort(sets.begin(), sets.end(), cycle_order_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<EdgeSet> kept;
  for (auto& s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const EdgeSet& k) { return s.is_subset_of(k); });
    if (!dominated) kept.push_back(std::move(s));
  }
  return kept;
}

}  // namespace acdkit
