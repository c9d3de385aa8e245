#include "acdkit/zielonka.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <unordered_set>

#include "acdkit/error.hpp"

namespace acdkit {

const char* to_string(Polarity p) noexcept { return p == Polarity::round ? "round" : "square"; }

namespace {

std::string node_str(std::size_t i) { return "node " + std::to_string(i); }

void structure_error(std::size_t a, const std::string& detail) {
  throw TreeValidationError(TreeViolation::structure, a, kNoNode, detail);
}

}  // namespace

// ---------------------------------------------------------------------------
// ZTree

ZTree::ZTree(ColourAlphabet alphabet, std::vector<ZNode> nodes)
    : alphabet_(std::move(alphabet)), nodes_(std::move(nodes)) {
  if (nodes_.empty()) structure_error(kNoNode, "a tree needs at least one node");
  for (ZNode& n : nodes_) n.parent = kNoNode;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (std::size_t c : nodes_[i].children) {
      if (c >= nodes_.size()) structure_error(i, node_str(i) + " has a dangling child");
      if (c == 0) structure_error(i, "the root cannot be a child");
      if (nodes_[c].parent != kNoNode) structure_error(c, node_str(c) + " has two parents");
      nodes_[c].parent = i;
    }
  }
  std::vector<std::size_t> stack{0};
  std::size_t seen = 0;
  nodes_[0].depth = 0;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    ++seen;
    for (std::size_t c : nodes_[i].children) {
      nodes_[c].depth = nodes_[i].depth + 1;
      stack.push_back(c);
    }
  }
  if (seen != nodes_.size()) structure_error(kNoNode, "some nodes are unreachable from the root");
}

std::size_t ZTree::leaf_count() const {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(), [](const ZNode& n) { return n.children.empty(); }));
}

std::size_t ZTree::height() const {
  std::size_t h = 0;
  for (const ZNode& n : nodes_) h = std::max(h, n.depth + 1);
  return h;
}

std::vector<std::size_t> ZTree::leaves() const {
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    const auto& ch = nodes_[i].children;
    if (ch.empty()) out.push_back(i);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

bool ZTree::operator==(const ZTree& o) const {
  if (!(alphabet_ == o.alphabet_) || nodes_.size() != o.nodes_.size()) return false;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const ZNode& a = nodes_[i];
    const ZNode& b = o.nodes_[i];
    if (a.label != b.label || a.polarity != b.polarity || a.children != b.children) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ZDag

ZDag::ZDag(ColourAlphabet alphabet, std::vector<ZDagNode> nodes)
    : alphabet_(std::move(alphabet)), nodes_(std::move(nodes)) {
  if (nodes_.empty()) structure_error(kNoNode, "a DAG needs at least one node");
  for (ZDagNode& n : nodes_) n.parents.clear();
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const ZDagNode& n = nodes_[i];
    if (n.label.empty()) structure_error(i, node_str(i) + " has an empty label");
    require_in_alphabet(alphabet_, n.label, "node label");
    if (!by_label_.emplace(n.label.bits(), i).second) {
      structure_error(i, node_str(i) + " repeats the label " + alphabet_.format(n.label));
    }
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (std::size_t c : nodes_[i].children) {
      if (c >= nodes_.size()) structure_error(i, node_str(i) + " has a dangling child");
      if (!nodes_[c].label.strict_subset_of(nodes_[i].label)) {
        throw TreeValidationError(TreeViolation::not_subset, i, c,
                                  node_str(c) + " is not a strict subset of " + node_str(i));
      }
      if (nodes_[c].polarity == nodes_[i].polarity) {
        throw TreeValidationError(TreeViolation::alternation, i, c,
                                  node_str(i) + " and its child " + node_str(c) +
                                      " have the same polarity");
      }
      nodes_[c].parents.push_back(i);
    }
  }
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t c : nodes_[i].children) {
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<std::ptrdiff_t>(nodes_.size())) {
    structure_error(kNoNode, "some nodes are unreachable from the root");
  }
}

std::size_t ZDag::edge_count() const {
  std::size_t e = 0;
  for (const ZDagNode& n : nodes_) e += n.children.size();
  return e;
}

std::optional<std::size_t> ZDag::find(ColourSet label) const {
  auto it = by_label_.find(label.bits());
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

std::size_t ZDag::height() const {
  // Children have strictly smaller labels, so decreasing label size is a
  // topological order.
  std::vector<std::size_t> order(nodes_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return nodes_[a].label.size() < nodes_[b].label.size();
  });
  std::vector<std::size_t> h(nodes_.size(), 1);
  for (std::size_t i : order) {
    for (std::size_t c : nodes_[i].children) h[i] = std::max(h[i], h[c] + 1);
  }
  return h[0];
}

bool ZDag::operator==(const ZDag& o) const {
  if (!(alphabet_ == o.alphabet_) || nodes_.size() != o.nodes_.size()) return false;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const ZDagNode& a = nodes_[i];
    const ZDagNode& b = o.nodes_[i];
    if (a.label != b.label || a.polarity != b.polarity || a.children != b.children) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

/// Maximal non-empty Y ⊊ X with accepts(Y) != accepts(X), found by walking
/// down through the subsets of X sharing X's membership.
std::vector<ColourSet> flipped_maximal_by_descent(ColourSet x, bool x_accepted,
                                                  const SetPredicate& accepts) {
  std::vector<ColourSet> candidates;
  std::unordered_set<std::uint64_t> visited{x.bits()};
  std::vector<ColourSet> stack{x};
  while (!stack.empty()) {
    ColourSet z = stack.back();
    stack.pop_back();
    for (ColourIndex c : z) {
      ColourSet y = z;
      y.erase(c);
      if (y.empty() || !visited.insert(y.bits()).second) continue;
      if (accepts(y) == x_accepted) {
        stack.push_back(y);
      } else {
        candidates.push_back(y);
      }
    }
  }
  return maximal_sets(std::move(candidates));
}

/// Computes children labels of Zielonka nodes, memoised by label.
class ChildOracle {
 public:
  ChildOracle(const ColourAlphabet& alphabet, SetPredicate accepts, const MullerFamily* family)
      : alphabet_(alphabet), accepts_(std::move(accepts)), family_(family) {}

  bool accepts(ColourSet c) const { return accepts_(c); }

  const std::vector<ColourSet>& children(ColourSet x) {
    auto it = memo_.find(x.bits());
    if (it != memo_.end()) return it->second;
    const bool acc = accepts_(x);
    std::vector<ColourSet> out;
    if (family_ != nullptr && !acc) {
      // Maximal members of F inside X.
      for (ColourSet s : family_->sets()) {
        if (s.subset_of(x)) out.push_back(s);
      }
      out = maximal_sets(std::move(out));
    } else {
      out = flipped_maximal_by_descent(x, acc, accepts_);
    }
    return memo_.emplace(x.bits(), std::move(out)).first->second;
  }

  const ColourAlphabet& alphabet() const { return alphabet_; }

 private:
  const ColourAlphabet& alphabet_;
  SetPredicate accepts_;
  const MullerFamily* family_;
  std::unordered_map<std::uint64_t, std::vector<ColourSet>> memo_;
};

SetPredicate family_predicate(const MullerFamily& family) {
  auto members = std::make_shared<std::unordered_set<std::uint64_t>>();
  for (ColourSet s : family.sets()) members->insert(s.bits());
  return [members](ColourSet c) { return members->count(c.bits()) != 0; };
}

ZTree build_tree_with(ChildOracle& oracle) {
  std::vector<ZNode> nodes;
  struct Frame {
    ColourSet label;
    std::size_t parent;
  };
  std::vector<Frame> stack{{oracle.alphabet().full(), kNoNode}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const std::size_t id = nodes.size();
    ZNode n;
    n.label = f.label;
    n.polarity = polarity_of(oracle.accepts(f.label));
    nodes.push_back(n);
    if (f.parent != kNoNode) nodes[f.parent].children.push_back(id);
    const auto& ch = oracle.children(f.label);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back({*it, id});
  }
  return ZTree(oracle.alphabet(), std::move(nodes));
}

ZDag build_dag_with(ChildOracle& oracle) {
  std::vector<ZDagNode> nodes;
  std::unordered_map<std::uint64_t, std::size_t> ids;
  // Iterative pre-order DFS; a node's children are attached once all of
  // them have been numbered.
  struct Frame {
    std::size_t id;
    std::size_t next_child;
  };
  auto open = [&](ColourSet label) {
    const std::size_t id = nodes.size();
    ZDagNode n;
    n.label = label;
    n.polarity = polarity_of(oracle.accepts(label));
    nodes.push_back(n);
    ids.emplace(label.bits(), id);
    return id;
  };
  std::vector<Frame> stack{{open(oracle.alphabet().full()), 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& ch = oracle.children(nodes[f.id].label);
    if (f.next_child == ch.size()) {
      stack.pop_back();
      continue;
    }
    ColourSet label = ch[f.next_child++];
    auto it = ids.find(label.bits());
    if (it != ids.end()) {
      nodes[f.id].children.push_back(it->second);
      continue;
    }
    const std::size_t parent = f.id;
    const std::size_t id = open(label);
    nodes[parent].children.push_back(id);
    stack.push_back({id, 0});
  }
  return ZDag(oracle.alphabet(), std::move(nodes));
}

}  // namespace

ZTree build_ztree(const MullerFamily& family) {
  ChildOracle oracle(family.alphabet(), family_predicate(family), &family);
  return build_tree_with(oracle);
}

ZTree build_ztree(const ColourAlphabet& alphabet, const SetPredicate& accepts) {
  ChildOracle oracle(alphabet, accepts, nullptr);
  return build_tree_with(oracle);
}

ZDag build_zdag(const MullerFamily& family) {
  ChildOracle oracle(family.alphabet(), family_predicate(family), &family);
  return build_dag_with(oracle);
}

ZDag build_zdag(const ColourAlphabet& alphabet, const SetPredicate& accepts) {
  ChildOracle oracle(alphabet, accepts, nullptr);
  return build_dag_with(oracle);
}

ZDag zdag_of(const RabinCondition& cond) {
  return build_zdag(cond.alphabet(), [&cond](ColourSet c) { return rabin_accepts(cond, c); });
}

ZDag zdag_of(const ParityCondition& cond) {
  std::vector<ZDagNode> nodes;
  ColourSet label = cond.alphabet().full();
  for (std::size_t i = 0; i < cond.size(); ++i) {
    ZDagNode n;
    n.label = label;
    n.polarity = polarity_of(cond.priority_of(label.min()) % 2 == 0);
    if (i + 1 < cond.size()) n.children.push_back(i + 1);
    nodes.push_back(n);
    label.erase(label.min());
  }
  return ZDag(cond.alphabet(), std::move(nodes));
}

// ---------------------------------------------------------------------------
// Validation

namespace {

/// True when C is "accepted" (for round n) or "rejected" (for square n) by
/// node n: C ⊆ ν(n) and C is not inside any child label.
bool decided_by(const ZTree& t, std::size_t n, ColourSet c) {
  const ZNode& node = t.node(n);
  if (c.empty() || !c.subset_of(node.label)) return false;
  return std::none_of(node.children.begin(), node.children.end(),
                      [&](std::size_t ch) { return c.subset_of(t.node(ch).label); });
}

}  // namespace

void check_ztree(const ZTree& t) {
  const ColourAlphabet& g = t.alphabet();
  if (t.node(0).label != g.full()) {
    structure_error(0, "the root label must be the whole alphabet");
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    const ZNode& n = t.node(i);
    if (n.label.empty()) structure_error(i, node_str(i) + " has an empty label");
    if (!g.contains(n.label)) structure_error(i, node_str(i) + " uses colours outside the alphabet");
    for (std::size_t c : n.children) {
      if (t.node(c).polarity == n.polarity) {
        throw TreeValidationError(TreeViolation::alternation, i, c,
                                  node_str(i) + " and its child " + node_str(c) + " are both " +
                                      to_string(n.polarity));
      }
      if (!t.node(c).label.strict_subset_of(n.label)) {
        throw TreeValidationError(TreeViolation::not_subset, i, c,
                                  "label of " + node_str(c) + " is not a strict subset of " +
                                      node_str(i));
      }
    }
    for (std::size_t a = 0; a < n.children.size(); ++a) {
      for (std::size_t b = a + 1; b < n.children.size(); ++b) {
        ColourSet la = t.node(n.children[a]).label;
        ColourSet lb = t.node(n.children[b]).label;
        if (la.subset_of(lb) || lb.subset_of(la)) {
          throw TreeValidationError(TreeViolation::incomparable, n.children[a], n.children[b],
                                    "siblings " + node_str(n.children[a]) + " and " +
                                        node_str(n.children[b]) + " are comparable");
        }
      }
    }
  }
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (t.node(r).polarity != Polarity::round) continue;
    for (std::size_t s = 0; s < t.size(); ++s) {
      if (t.node(s).polarity != Polarity::square) continue;
      ColourSet meet = t.node(r).label & t.node(s).label;
      if (decided_by(t, r, meet) && decided_by(t, s, meet)) {
        throw TreeValidationError(TreeViolation::inconsistent, r, s,
                                  "the set " + g.format(meet) + " is accepted by round " +
                                      node_str(r) + " and rejected by square " + node_str(s));
      }
    }
  }
}

namespace {

void compare_rebuilt(const ZTree& given, std::size_t gi, const ZTree& built, std::size_t bi) {
  const ZNode& g = given.node(gi);
  const ZNode& b = built.node(bi);
  if (g.label != b.label || g.polarity != b.polarity || g.children.size() != b.children.size()) {
    throw TreeValidationError(TreeViolation::not_maximal, gi, kNoNode,
                              "the children of node " +
                                  std::to_string(g.parent == kNoNode ? gi : g.parent) +
                                  " are not the maximal subsets of flipped membership");
  }
  std::vector<std::size_t> ch = g.children;
  std::sort(ch.begin(), ch.end(), [&](std::size_t x, std::size_t y) {
    return child_order_less(given.node(x).label, given.node(y).label);
  });
  for (std::size_t k = 0; k < ch.size(); ++k) compare_rebuilt(given, ch[k], built, b.children[k]);
}

}  // namespace

MullerFamily validate_ztree(const ZTree& t, const Caps& caps) {
  check_ztree(t);
  enforce_cap("family_colours", t.alphabet().size(), caps.family_colours);
  std::vector<ColourSet> accepted;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (t.node(r).polarity != Polarity::round) continue;
    const std::uint64_t label = t.node(r).label.bits();
    for (std::uint64_t sub = label; sub != 0; sub = (sub - 1) & label) {
      if (decided_by(t, r, ColourSet(sub))) accepted.emplace_back(sub);
    }
  }
  MullerFamily family(t.alphabet(), std::move(accepted));
  compare_rebuilt(t, 0, build_ztree(family), 0);
  return family;
}

// ---------------------------------------------------------------------------
// Membership, folding

namespace {

void require_membership_query(const ColourAlphabet& g, ColourSet c) {
  if (c.empty()) throw DomainError("membership is undefined for the empty colour set");
  require_in_alphabet(g, c, "queried set");
}

}  // namespace

bool ztree_membership(const ZTree& tree, ColourSet c) {
  require_membership_query(tree.alphabet(), c);
  std::size_t n = 0;
  for (;;) {
    const ZNode& node = tree.node(n);
    auto it = std::find_if(node.children.begin(), node.children.end(),
                           [&](std::size_t ch) { return c.subset_of(tree.node(ch).label); });
    if (it == node.children.end()) return node.polarity == Polarity::round;
    n = *it;
  }
}

bool zdag_membership(const ZDag& dag, ColourSet c) {
  require_membership_query(dag.alphabet(), c);
  std::size_t n = 0;
  for (;;) {
    const ZDagNode& node = dag.node(n);
    auto it = std::find_if(node.children.begin(), node.children.end(),
                           [&](std::size_t ch) { return c.subset_of(dag.node(ch).label); });
    if (it == node.children.end()) return node.polarity == Polarity::round;
    n = *it;
  }
}

ZDag fold_to_zdag(const ZTree& tree) {
  std::vector<ZDagNode> nodes;
  std::unordered_map<std::uint64_t, std::size_t> ids;
  std::vector<std::size_t> image(tree.size(), kNoNode);
  // Pre-order: node ids in order of first occurrence of each label.
  std::vector<std::size_t> stack{0};
  std::vector<std::size_t> order;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    order.push_back(i);
    const auto& ch = tree.node(i).children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  std::vector<char> first(tree.size(), 0);
  for (std::size_t i : order) {
    const ZNode& n = tree.node(i);
    auto [it, inserted] = ids.emplace(n.label.bits(), nodes.size());
    if (inserted) {
      ZDagNode d;
      d.label = n.label;
      d.polarity = n.polarity;
      nodes.push_back(d);
      first[i] = 1;
    }
    image[i] = it->second;
  }
  for (std::size_t i : order) {
    if (!first[i]) continue;
    for (std::size_t c : tree.node(i).children) nodes[image[i]].children.push_back(image[c]);
  }
  return ZDag(tree.alphabet(), std::move(nodes));
}

ZTree unfold_zdag(const ZDag& dag) {
  std::vector<ZNode> nodes;
  struct Frame {
    std::size_t dag_node;
    std::size_t parent;
  };
  std::vector<Frame> stack{{0, kNoNode}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const std::size_t id = nodes.size();
    ZNode n;
    n.label = dag.node(f.dag_node).label;
    n.polarity = dag.node(f.dag_node).polarity;
    nodes.push_back(n);
    if (f.parent != kNoNode) nodes[f.parent].children.push_back(id);
    const auto& ch = dag.node(f.dag_node).children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back({*it, id});
  }
  return ZTree(dag.alphabet(), std::move(nodes));
}

namespace {

std::string encode(const ZTree& t, std::size_t i, std::map<std::size_t, std::string>& memo) {
  const ZNode& n = t.node(i);
  std::vector<std::string> parts;
  for (std::size_t c : n.children) parts.push_back(encode(t, c, memo));
  std::sort(parts.begin(), parts.end());
  std::string out = std::to_string(n.label.bits()) + (n.polarity == Polarity::round ? "r" : "s") + "(";
  for (const auto& p : parts) out += p + ",";
  out += ")";
  memo[i] = out;
  return out;
}

}  // namespace

ZTree canonical_form(const ZTree& tree) {
  std::map<std::size_t, std::string> codes;
  encode(tree, 0, codes);
  std::vector<ZNode> nodes;
  struct Frame {
    std::size_t src;
    std::size_t parent;
  };
  std::vector<Frame> stack{{0, kNoNode}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const std::size_t id = nodes.size();
    ZNode n;
    n.label = tree.node(f.src).label;
    n.polarity = tree.node(f.src).polarity;
    nodes.push_back(n);
    if (f.parent != kNoNode) nodes[f.parent].children.push_back(id);
    std::vector<std::size_t> ch = tree.node(f.src).children;
    std::sort(ch.begin(), ch.end(), [&](std::size_t a, std::size_t b) {
      ColourSet la = tree.node(a).label;
      ColourSet lb = tree.node(b).label;
      if (la != lb) return child_order_less(la, lb);
      return codes[a] < codes[b];
    });
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back({*it, id});
  }
  return ZTree(tree.alphabet(), std::move(nodes));
}

bool isomorphic(const ZTree& a, const ZTree& b) {
  return canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// Colour minimisation and shape analysis

std::vector<ColourSet> colour_equivalence_classes(const ZDag& dag) {
  const std::size_t k = dag.alphabet().size();
  std::map<std::vector<bool>, ColourSet> classes;
  std::vector<std::vector<bool>> signature(k, std::vector<bool>(dag.size(), false));
  for (std::size_t n = 0; n < dag.size(); ++n) {
    for (ColourIndex c : dag.node(n).label) signature[c][n] = true;
  }
  for (ColourIndex c = 0; c < k; ++c) classes[signature[c]].insert(c);
  std::vector<ColourSet> out;
  for (const auto& [sig, cls] : classes) out.push_back(cls);
  std::sort(out.begin(), out.end(), [](ColourSet a, ColourSet b) { return a.min() < b.min(); });
  return out;
}

ColourSet ColourMinimisation::apply(ColourSet c) const {
  ColourSet out;
  for (ColourIndex x : c) out.insert(map.at(x));
  return out;
}

ColourMinimisation minimise_colours(const ZDag& dag, const Caps& caps) {
  const std::vector<ColourSet> classes = colour_equivalence_classes(dag);
  std::vector<ColourIndex> map(dag.alphabet().size(), 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (ColourIndex c : classes[i]) map[c] = static_cast<ColourIndex>(i);
  }
  ColourAlphabet target = ColourAlphabet::numbered(classes.size(), 1);
  auto project = [&](ColourSet s) {
    ColourSet out;
    for (ColourIndex c : s) out.insert(map[c]);
    return out;
  };
  std::vector<ZDagNode> nodes = dag.nodes();
  for (ZDagNode& n : nodes) n.label = project(n.label);
  ZDag quotient_dag(target, std::move(nodes));
  std::optional<MullerFamily> quotient;
  if (classes.size() <= caps.family_colours) {
    std::vector<ColourSet> sets;
    for (std::uint64_t x = 1; x <= target.full().bits(); ++x) {
      ColourSet preimage;
      for (ColourIndex i : ColourSet(x)) preimage |= classes[i];
      if (zdag_membership(dag, preimage)) sets.emplace_back(x);
    }
    quotient.emplace(target, std::move(sets));
  }
  return {std::move(map), std::move(target), std::move(quotient_dag), std::move(quotient)};
}

RabinCondition zdag_to_rabin_pairs(const ZDag& dag) {
  const ColourSet gamma = dag.alphabet().full();
  std::vector<RabinPair> pairs;
  for (std::size_t n = 0; n < dag.size(); ++n) {
    const ZDagNode& node = dag.node(n);
    if (node.polarity != Polarity::round) continue;
    if (node.children.size() > 1) throw NotRabinType(n, node.children.size());
    ColourSet green = node.label;
    if (!node.children.empty()) green -= dag.node(node.children.front()).label;
    pairs.push_back({green, gamma - node.label});
  }
  return RabinCondition(dag.alphabet(), std::move(pairs));
}

Typeness language_typeness(const ZDag& dag) {
  Typeness t{true, true, true};
  for (const ZDagNode& n : dag.nodes()) {
    if (n.children.size() <= 1) continue;
    if (n.polarity == Polarity::round) t.rabin = false;
    if (n.polarity == Polarity::square) t.streett = false;
  }
  t.parity = t.rabin && t.streett;
  return t;
}

}  // namespace acdkit
