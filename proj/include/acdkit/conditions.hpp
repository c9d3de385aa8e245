#pragma once

#include <span>
#include <vector>

#include "acdkit/caps.hpp"
#include "acdkit/colours.hpp"

namespace acdkit {

/// An explicit Muller condition: the family F ⊆ P+(Γ) of accepted sets.
///
/// Members are deduplicated and kept in canonical family order
/// (size ascending, then lexicographic). The empty family is legal.
class MullerFamily {
 public:
  /// Throws DomainError on an empty member or a member outside the alphabet.
  MullerFamily(ColourAlphabet alphabet, std::vector<ColourSet> sets);

  const ColourAlphabet& alphabet() const { return alphabet_; }
  const std::vector<ColourSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  /// Membership without precondition checks.
  bool contains(ColourSet c) const;

  bool operator==(const MullerFamily& o) const = default;

 private:
  ColourAlphabet alphabet_;
  std::vector<ColourSet> sets_;
};

/// True iff C ∈ F. Throws DomainError when C is empty or outside F's alphabet.
bool muller_accepts(const MullerFamily& family, ColourSet c);

/// One Rabin pair: accepts C iff C meets `green` and avoids `red`.
struct RabinPair {
  ColourSet green;
  ColourSet red;

  bool operator==(const RabinPair&) const = default;
};

/// Interpretation of a list of pairs.
enum class PairSemantics {
  rabin,    ///< accept iff some pair is satisfied
  streett,  ///< accept iff no pair is satisfied (the complement)
};

/// A Rabin or Streett condition over one alphabet.
class RabinCondition {
 public:
  /// Throws DomainError when a pair uses colours outside the alphabet.
  RabinCondition(ColourAlphabet alphabet, std::vector<RabinPair> pairs,
                 PairSemantics semantics = PairSemantics::rabin);

  const ColourAlphabet& alphabet() const { return alphabet_; }
  const std::vector<RabinPair>& pairs() const { return pairs_; }
  PairSemantics semantics() const { return semantics_; }
  bool is_streett() const { return semantics_ == PairSemantics::streett; }

  /// Same pairs under the other semantics.
  RabinCondition with_semantics(PairSemantics s) const;

  bool operator==(const RabinCondition& o) const = default;

 private:
  ColourAlphabet alphabet_;
  std::vector<RabinPair> pairs_;
  PairSemantics semantics_;
};

/// True iff some pair is satisfied by C (no precondition on C).
bool some_pair_satisfied(std::span<const RabinPair> pairs, ColourSet c);

/// Set-level acceptance of a Rabin (or, by negation, Streett) condition.
/// Throws DomainError when C is empty or outside the alphabet.
bool rabin_accepts(const RabinCondition& cond, ColourSet c);

/// Min-even parity condition over the contiguous priorities [p_min, p_max].
///
/// The colours of the condition are the priorities: colour index i stands for
/// priority p_min + i, and its name is the decimal priority.
class ParityCondition {
 public:
  /// Throws DomainError unless 0 ≤ p_min ≤ p_max and the interval fits the
  /// alphabet cap.
  ParityCondition(int p_min, int p_max);

  int min_priority() const { return p_min_; }
  int max_priority() const { return p_max_; }
  std::size_t size() const { return static_cast<std::size_t>(p_max_ - p_min_ + 1); }
  const ColourAlphabet& alphabet() const { return alphabet_; }

  ColourIndex colour_of(int priority) const;
  int priority_of(ColourIndex colour) const { return p_min_ + static_cast<int>(colour); }
  ColourSet priorities_to_set(std::span<const int> priorities) const;

  bool operator==(const ParityCondition& o) const {
    return p_min_ == o.p_min_ && p_max_ == o.p_max_;
  }

 private:
  int p_min_;
  int p_max_;
  ColourAlphabet alphabet_;
};

/// True iff the least priority in C is even. C is a set over the parity
/// alphabet. Throws DomainError when C is empty or outside the interval.
bool parity_accepts(const ParityCondition& cond, ColourSet c);
/// Same, with C given as explicit priorities.
bool parity_accepts(const ParityCondition& cond, std::span<const int> priorities);

/// The standard Rabin encoding: one pair ({p}, {q | q < p}) per even p.
RabinCondition parity_to_rabin(const ParityCondition& cond);

/// {C ∈ P+(Γ) | cond accepts C}. Throws CapExceeded when |Γ| exceeds
/// caps.family_colours.
MullerFamily condition_to_family(const RabinCondition& cond, const Caps& caps = default_caps());
MullerFamily condition_to_family(const ParityCondition& cond, const Caps& caps = default_caps());

/// P+(Γ) as a family.
MullerFamily all_nonempty_subsets(const ColourAlphabet& alphabet, const Caps& caps = default_caps());

}  // namespace acdkit
