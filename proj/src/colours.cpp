#include "acdkit/colours.hpp"

#include <algorithm>

#include "acdkit/error.hpp"

namespace acdkit {

ColourSet::ColourSet(std::initializer_list<ColourIndex> colours) {
  for (ColourIndex c : colours) insert(c);
}

ColourSet ColourSet::singleton(ColourIndex c) {
  ColourSet s;
  s.insert(c);
  return s;
}

ColourSet ColourSet::full(std::size_t n) {
  if (n > kMaxColours) throw DomainError("more than 64 colours are not supported");
  return ColourSet(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
}

void ColourSet::insert(ColourIndex c) {
  if (c >= kMaxColours) throw DomainError("colour index " + std::to_string(c) + " out of range");
  bits_ |= std::uint64_t{1} << c;
}

void ColourSet::erase(ColourIndex c) {
  if (c < kMaxColours) bits_ &= ~(std::uint64_t{1} << c);
}

std::vector<ColourIndex> ColourSet::elements() const { return {begin(), end()}; }

bool lex_less(ColourSet a, ColourSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const unsigned low = static_cast<unsigned>(std::countr_zero(diff));
  // Both lists agree below `low`; the set owning `low` is smaller unless the
  // other one ends there.
  const std::uint64_t above = low == 63 ? 0 : (~std::uint64_t{0} << (low + 1));
  if (a.contains(low)) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

bool family_order_less(ColourSet a, ColourSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

bool child_order_less(ColourSet a, ColourSet b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return lex_less(a, b);
}

std::vector<ColourSet> maximal_sets(std::vector<ColourSet> sets) {
  std::sort(sets.begin(), sets.end(), child_order_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ColourSet> kept;
  for (ColourSet s : sets) {
    bool dominated = false;
    for (ColourSet k : kept) {
      if (s.subset_of(k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

ColourAlphabet::ColourAlphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw DomainError("a colour alphabet must not be empty");
  if (names_.size() > kMaxColours) {
    throw DomainError("alphabet of " + std::to_string(names_.size()) +
                      " colours exceeds the supported maximum of 64");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<ColourIndex>(i)).second) {
      throw DomainError("duplicate colour '" + names_[i] + "'");
    }
  }
}

ColourAlphabet ColourAlphabet::numbered(std::size_t n, std::size_t first) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(first + i));
  return ColourAlphabet(std::move(names));
}

ColourIndex ColourAlphabet::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw DomainError("unknown colour '" + name + "'");
  return it->second;
}

ColourSet ColourAlphabet::parse_set(const std::vector<std::string>& names) const {
  ColourSet s;
  for (const auto& n : names) s.insert(index(n));
  return s;
}

std::vector<std::string> ColourAlphabet::names_of(ColourSet s) const {
  std::vector<std::string> out;
  for (ColourIndex c : s) out.push_back(name(c));
  return out;
}

std::string ColourAlphabet::format(ColourSet s) const {
  std::string out = "{";
  bool first = true;
  for (ColourIndex c : s) {
    if (!first) out += ",";
    out += c < names_.size() ? names_[c] : "#" + std::to_string(c);
    first = false;
  }
  return out + "}";
}

void require_in_alphabet(const ColourAlphabet& alphabet, ColourSet s, const char* what) {
  if (!alphabet.contains(s)) {
    throw DomainError(std::string(what) + " uses colours outside the alphabet of " +
                      std::to_string(alphabet.size()) + " colours");
  }
}

}  // namespace acdkit
