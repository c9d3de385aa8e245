#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <unordered_map>
#include <vector>

namespace acdkit {

/// Dense index of a colour inside its alphabet.
using ColourIndex = std::uint32_t;

/// Largest supported alphabet.
inline constexpr std::size_t kMaxColours = 64;

/// A set of colour indices, stored as a 64-bit mask.
///
/// A ColourSet does not know its alphabet; operations that need one check
/// membership explicitly (see ColourAlphabet::contains).
class ColourSet {
 public:
  /// Iterates over the members in increasing order.
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ColourIndex;
    using difference_type = std::ptrdiff_t;
    using pointer = const ColourIndex*;
    using reference = ColourIndex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr ColourIndex operator*() const {
      return static_cast<ColourIndex>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ColourSet() = default;
  constexpr explicit ColourSet(std::uint64_t bits) : bits_(bits) {}
  ColourSet(std::initializer_list<ColourIndex> colours);

  static ColourSet singleton(ColourIndex c);
  /// {0, ..., n-1}.
  static ColourSet full(std::size_t n);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(ColourIndex c) const { return c < 64 && ((bits_ >> c) & 1U) != 0; }
  /// Smallest member; the set must be non-empty.
  constexpr ColourIndex min() const { return static_cast<ColourIndex>(std::countr_zero(bits_)); }
  /// Largest member; the set must be non-empty.
  constexpr ColourIndex max() const { return static_cast<ColourIndex>(63 - std::countl_zero(bits_)); }

  void insert(ColourIndex c);
  void erase(ColourIndex c);

  constexpr bool subset_of(ColourSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool strict_subset_of(ColourSet o) const { return subset_of(o) && bits_ != o.bits_; }
  constexpr bool intersects(ColourSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr ColourSet operator|(ColourSet o) const { return ColourSet(bits_ | o.bits_); }
  constexpr ColourSet operator&(ColourSet o) const { return ColourSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr ColourSet operator-(ColourSet o) const { return ColourSet(bits_ & ~o.bits_); }
  constexpr ColourSet operator^(ColourSet o) const { return ColourSet(bits_ ^ o.bits_); }
  ColourSet& operator|=(ColourSet o) { bits_ |= o.bits_; return *this; }
  ColourSet& operator&=(ColourSet o) { bits_ &= o.bits_; return *this; }
  ColourSet& operator-=(ColourSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const ColourSet&) const = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<ColourIndex> elements() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the increasing element lists.
bool lex_less(ColourSet a, ColourSet b);

/// Canonical order of family members: size ascending, then lexicographic.
bool family_order_less(ColourSet a, ColourSet b);

/// Canonical order of siblings in trees: size descending, then lexicographic.
bool child_order_less(ColourSet a, ColourSet b);

/// Keeps the inclusion-maximal members of `sets`, deduplicated and sorted in
/// child order.
std::vector<ColourSet> maximal_sets(std::vector<ColourSet> sets);

struct ColourSetHash {
  std::size_t operator()(ColourSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

/// A finite, ordered, non-empty set of named colours (Γ).
class ColourAlphabet {
 public:
  /// Throws DomainError when `names` is empty, too large, or has duplicates.
  explicit ColourAlphabet(std::vector<std::string> names);

  /// Alphabet of n colours named by their decimal index plus `first`.
  static ColourAlphabet numbered(std::size_t n, std::size_t first = 0);

  std::size_t size() const { return names_.size(); }
  const std::string& name(ColourIndex c) const { return names_.at(c); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a colour by name; throws DomainError when unknown.
  ColourIndex index(const std::string& name) const;
  bool has(const std::string& name) const { return index_.count(name) != 0; }

  ColourSet full() const { return ColourSet::full(names_.size()); }
  /// True when every member of `s` is a colour of this alphabet.
  bool contains(ColourSet s) const { return s.subset_of(full()); }

  ColourSet parse_set(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(ColourSet s) const;
  /// Human readable form, e.g. `{a,b}`.
  std::string format(ColourSet s) const;

  bool operator==(const ColourAlphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ColourIndex> index_;
};

/// Throws DomainError unless `s` is a set over `alphabet`.
void require_in_alphabet(const ColourAlphabet& alphabet, ColourSet s, const char* what);

}  // namespace acdkit
