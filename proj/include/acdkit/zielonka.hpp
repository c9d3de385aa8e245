#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "acdkit/caps.hpp"
#include "acdkit/colours.hpp"
#include "acdkit/conditions.hpp"

namespace acdkit {

/// Round nodes are accepting, square nodes are rejecting.
enum class Polarity : std::uint8_t { round, square };

constexpr Polarity flip(Polarity p) {
  return p == Polarity::round ? Polarity::square : Polarity::round;
}
constexpr Polarity polarity_of(bool accepting) {
  return accepting ? Polarity::round : Polarity::square;
}
const char* to_string(Polarity p) noexcept;

inline constexpr std::size_t kNoNode = static_cast<std::size_t>(-1);

/// Membership predicate of a Muller condition on non-empty colour sets.
using SetPredicate = std::function<bool(ColourSet)>;

struct ZNode {
  ColourSet label;
  Polarity polarity = Polarity::round;
  std::size_t parent = kNoNode;
  std::vector<std::size_t> children;
  std::size_t depth = 0;  ///< root has depth 0
};

/// A colour-labelled tree with round/square polarity; node 0 is the root.
///
/// The constructor only checks that the links form a tree rooted at node 0
/// (parents and depths are recomputed from the children lists). Whether the
/// tree is the Zielonka tree of some family is answered by validate_ztree;
/// trees returned by build_ztree are Zielonka trees with children in
/// canonical order (size descending, then lexicographic) and nodes numbered
/// in pre-order.
class ZTree {
 public:
  /// Throws TreeValidationError(structure) on dangling or shared children,
  /// unreachable nodes, or an empty node list.
  ZTree(ColourAlphabet alphabet, std::vector<ZNode> nodes);

  const ColourAlphabet& alphabet() const { return alphabet_; }
  const std::vector<ZNode>& nodes() const { return nodes_; }
  const ZNode& node(std::size_t i) const { return nodes_.at(i); }
  std::size_t size() const { return nodes_.size(); }
  static constexpr std::size_t root() { return 0; }

  std::size_t leaf_count() const;
  /// Number of nodes on a longest root-to-leaf path.
  std::size_t height() const;
  /// Leaves in pre-order.
  std::vector<std::size_t> leaves() const;

  /// Structural equality, including node numbering.
  bool operator==(const ZTree& o) const;

 private:
  ColourAlphabet alphabet_;
  std::vector<ZNode> nodes_;
};

struct ZDagNode {
  ColourSet label;
  Polarity polarity = Polarity::round;
  std::vector<std::size_t> children;
  std::vector<std::size_t> parents;
};

/// A Zielonka DAG: a Zielonka tree with nodes of equal label merged.
/// Node 0 is the root; labels are unique.
class ZDag {
 public:
  /// Throws TreeValidationError when labels repeat, a child label is not a
  /// strict subset of its parent's, polarities do not alternate, or some
  /// node is unreachable from node 0. Parents are recomputed.
  ZDag(ColourAlphabet alphabet, std::vector<ZDagNode> nodes);

  const ColourAlphabet& alphabet() const { return alphabet_; }
  const std::vector<ZDagNode>& nodes() const { return nodes_; }
  const ZDagNode& node(std::size_t i) const { return nodes_.at(i); }
  std::size_t size() const { return nodes_.size(); }
  static constexpr std::size_t root() { return 0; }
  std::size_t edge_count() const;

  /// Index of the node labelled `label`, if any.
  std::optional<std::size_t> find(ColourSet label) const;

  /// Number of nodes on a longest root-to-leaf path.
  std::size_t height() const;

  bool operator==(const ZDag& o) const;

 private:
  ColourAlphabet alphabet_;
  std::vector<ZDagNode> nodes_;
  std::unordered_map<std::uint64_t, std::size_t> by_label_;
};

/// The Zielonka tree of F (children are maximal non-empty subsets of the
/// parent label with flipped membership).
ZTree build_ztree(const MullerFamily& family);
/// The Zielonka tree of an arbitrary membership predicate.
ZTree build_ztree(const ColourAlphabet& alphabet, const SetPredicate& accepts);

/// The Zielonka DAG of F, built directly (the tree is never materialised).
ZDag build_zdag(const MullerFamily& family);
/// The Zielonka DAG of an arbitrary membership predicate.
ZDag build_zdag(const ColourAlphabet& alphabet, const SetPredicate& accepts);
/// Zielonka DAG of a Rabin or Streett condition.
ZDag zdag_of(const RabinCondition& cond);
/// Zielonka DAG of a parity condition: a chain removing one priority per level.
ZDag zdag_of(const ParityCondition& cond);

/// Checks the polynomial conditions (structure, alternation, strict
/// inclusion, sibling incomparability, disjointness of the families accepted
/// by round nodes and rejected by square nodes). Throws TreeValidationError
/// naming the first violation found.
void check_ztree(const ZTree& tree);

/// The family F with tree = Z_F, or TreeValidationError. After check_ztree,
/// the family accepted by the round nodes is extracted, its Zielonka tree is
/// rebuilt and compared with the input; a mismatch is reported as
/// TreeViolation::not_maximal at the first differing node.
/// Throws CapExceeded when |Γ| exceeds caps.family_colours.
MullerFamily validate_ztree(const ZTree& tree, const Caps& caps = default_caps());

/// Membership: descend while some child label contains C; the answer is the
/// polarity of the node reached. C must be non-empty and inside Γ.
bool ztree_membership(const ZTree& tree, ColourSet c);
bool zdag_membership(const ZDag& dag, ColourSet c);

/// Merges nodes of equal label (pre-order of first occurrence).
ZDag fold_to_zdag(const ZTree& tree);
/// Duplicates shared nodes once per branch.
ZTree unfold_zdag(const ZDag& dag);

/// Same tree with children sorted canonically and nodes renumbered in pre-order.
ZTree canonical_form(const ZTree& tree);

/// Label-preserving isomorphism (children compared as canonical sequences).
bool isomorphic(const ZTree& a, const ZTree& b);

/// Partition of Γ into colours appearing in exactly the same DAG nodes.
/// Classes are ordered by their least colour.
std::vector<ColourSet> colour_equivalence_classes(const ZDag& dag);

/// Result of language-level colour minimisation.
struct ColourMinimisation {
  /// map[c] = index of the class of colour c in `target`.
  std::vector<ColourIndex> map;
  /// The k target colours, named "1".."k".
  ColourAlphabet target;
  /// The DAG relabelled through the map (a Zielonka DAG of the quotient).
  ZDag quotient_dag;
  /// The quotient family {φ(C) | C ∈ F}, when k ≤ caps.family_colours.
  std::optional<MullerFamily> quotient;

  std::size_t k() const { return target.size(); }
  ColourSet apply(ColourSet c) const;
};

ColourMinimisation minimise_colours(const ZDag& dag, const Caps& caps = default_caps());

/// One Rabin pair per round node n: green = ν(n)∖ν(child) (ν(n) if n has no
/// child), red = Γ∖ν(n). Throws NotRabinType when a round node has two or
/// more children.
RabinCondition zdag_to_rabin_pairs(const ZDag& dag);

struct Typeness {
  bool rabin = false;
  bool streett = false;
  bool parity = false;

  bool operator==(const Typeness&) const = default;
};

/// Rabin: every round node has ≤ 1 child; Streett: every square node has
/// ≤ 1 child; parity: both.
Typeness language_typeness(const ZDag& dag);

}  // namespace acdkit
