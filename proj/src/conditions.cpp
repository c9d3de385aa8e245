#include "acdkit/conditions.hpp"

#include <algorithm>

#include "acdkit/error.hpp"

namespace acdkit {

MullerFamily::MullerFamily(ColourAlphabet alphabet, std::vector<ColourSet> sets)
    : alphabet_(std::move(alphabet)), sets_(std::move(sets)) {
  for (ColourSet s : sets_) {
    if (s.empty()) throw DomainError("a Muller family must not contain the empty set");
    require_in_alphabet(alphabet_, s, "family member");
  }
  std::sort(sets_.begin(), sets_.end(), family_order_less);
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool MullerFamily::contains(ColourSet c) const {
  return std::binary_search(sets_.begin(), sets_.end(), c, family_order_less);
}

namespace {

void require_query(const ColourAlphabet& alphabet, ColourSet c) {
  if (c.empty()) throw DomainError("acceptance is undefined for the empty colour set");
  require_in_alphabet(alphabet, c, "queried set");
}

}  // namespace

bool muller_accepts(const MullerFamily& family, ColourSet c) {
  require_query(family.alphabet(), c);
  return family.contains(c);
}

RabinCondition::RabinCondition(ColourAlphabet alphabet, std::vector<RabinPair> pairs,
                               PairSemantics semantics)
    : alphabet_(std::move(alphabet)), pairs_(std::move(pairs)), semantics_(semantics) {
  for (const RabinPair& p : pairs_) {
    require_in_alphabet(alphabet_, p.green, "green set");
    require_in_alphabet(alphabet_, p.red, "red set");
  }
}

RabinCondition RabinCondition::with_semantics(PairSemantics s) const {
  return RabinCondition(alphabet_, pairs_, s);
}

bool some_pair_satisfied(std::span<const RabinPair> pairs, ColourSet c) {
  return std::any_of(pairs.begin(), pairs.end(), [c](const RabinPair& p) {
    return c.intersects(p.green) && !c.intersects(p.red);
  });
}

bool rabin_accepts(const RabinCondition& cond, ColourSet c) {
  require_query(cond.alphabet(), c);
  const bool rabin = some_pair_satisfied(cond.pairs(), c);
  return cond.is_streett() ? !rabin : rabin;
}

ParityCondition::ParityCondition(int p_min, int p_max)
    : p_min_(p_min), p_max_(p_max), alphabet_(ColourAlphabet::numbered(1)) {
  if (p_min < 0) throw DomainError("parity priorities must be non-negative");
  if (p_min > p_max) throw DomainError("empty parity interval");
  if (static_cast<std::size_t>(p_max - p_min + 1) > kMaxColours) {
    throw DomainError("parity interval exceeds 64 priorities");
  }
  alphabet_ = ColourAlphabet::numbered(size(), static_cast<std::size_t>(p_min));
}

ColourIndex ParityCondition::colour_of(int priority) const {
  if (priority < p_min_ || priority > p_max_) {
    throw DomainError("priority " + std::to_string(priority) + " outside [" +
                      std::to_string(p_min_) + "," + std::to_string(p_max_) + "]");
  }
  return static_cast<ColourIndex>(priority - p_min_);
}

ColourSet ParityCondition::priorities_to_set(std::span<const int> priorities) const {
  ColourSet s;
  for (int p : priorities) s.insert(colour_of(p));
  return s;
}

bool parity_accepts(const ParityCondition& cond, ColourSet c) {
  require_query(cond.alphabet(), c);
  return cond.priority_of(c.min()) % 2 == 0;
}

bool parity_accepts(const ParityCondition& cond, std::span<const int> priorities) {
  return parity_accepts(cond, cond.priorities_to_set(priorities));
}

RabinCondition parity_to_rabin(const ParityCondition& cond) {
  std::vector<RabinPair> pairs;
  for (int p = cond.min_priority(); p <= cond.max_priority(); ++p) {
    if (p % 2 != 0) continue;
    const ColourIndex c = cond.colour_of(p);
    pairs.push_back({ColourSet::singleton(c), ColourSet::full(c)});
  }
  return RabinCondition(cond.alphabet(), std::move(pairs));
}

namespace {

template <typename Pred>
MullerFamily enumerate_family(const ColourAlphabet& alphabet, const Caps& caps, Pred accepts) {
  enforce_cap("family_colours", alphabet.size(), caps.family_colours);
  std::vector<ColourSet> sets;
  const std::uint64_t full = alphabet.full().bits();
  for (std::uint64_t b = 1; b <= full && b != 0; ++b) {
    if (accepts(ColourSet(b))) sets.emplace_back(b);
  }
  return MullerFamily(alphabet, std::move(sets));
}

}  // namespace

MullerFamily condition_to_family(const RabinCondition& cond, const Caps& caps) {
  return enumerate_family(cond.alphabet(), caps,
                          [&](ColourSet c) { return rabin_accepts(cond, c); });
}

MullerFamily condition_to_family(const ParityCondition& cond, const Caps& caps) {
  return enumerate_family(cond.alphabet(), caps,
                          [&](ColourSet c) { return parity_accepts(cond, c); });
}

MullerFamily all_nonempty_subsets(const ColourAlphabet& alphabet, const Caps& caps) {
  return enumerate_family(alphabet, caps, [](ColourSet) { return true; });
}

}  // namespace acdkit
