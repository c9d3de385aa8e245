#include "acdkit/acd.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "acdkit/error.hpp"

namespace acdkit {

std::size_t AcdDag::edge_count() const {
  std::size_t n = 0;
  for (const AcdDagNode& node : nodes) n += node.children.size();
  return n;
}

std::size_t AcdDag::height(std::size_t i) const {
  std::vector<std::size_t> memo(nodes.size(), 0);
  std::function<std::size_t(std::size_t)> h = [&](std::size_t n) -> std::size_t {
    if (memo[n] != 0) return memo[n];
    std::size_t best = 0;
    for (std::size_t c : nodes[n].children) best = std::max(best, h(c));
    return memo[n] = best + 1;
  };
  return h(roots.at(i));
}

std::size_t AcdDag::max_height() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) best = std::max(best, height(i));
  return best;
}

std::optional<std::size_t> AcdDag::find(const EdgeSet& cycle) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].cycle == cycle) return i;
  }
  return std::nullopt;
}

std::size_t AcdForest::height(std::size_t i) const {
  const std::size_t root = roots.at(i);
  const std::size_t end = i + 1 < roots.size() ? roots[i + 1] : nodes.size();
  std::size_t best = 0;
  for (std::size_t n = root; n < end; ++n) best = std::max(best, nodes[n].depth + 1);
  return best;
}

std::size_t AcdForest::max_height() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) best = std::max(best, height(i));
  return best;
}

std::vector<std::size_t> AcdForest::leaves(std::size_t i) const {
  const std::size_t root = roots.at(i);
  const std::size_t end = i + 1 < roots.size() ? roots[i + 1] : nodes.size();
  std::vector<std::size_t> out;
  for (std::size_t n = root; n < end; ++n) {
    if (nodes[n].children.empty()) out.push_back(n);
  }
  return out;
}

std::vector<EdgeSet> compute_children(const TransitionGraph& g, const ZDag& dag,
                                      const EdgeSet& cycle) {
  const ColourSet cycle_colours = g.colours_of(cycle);
  const Polarity own = polarity_of(zdag_membership(dag, cycle_colours));
  // SCCs of the restriction depend on ν(m) ∩ col(cycle) only.
  std::unordered_map<std::uint64_t, std::vector<EdgeSet>> sccs_by_key;
  auto sccs_for = [&](ColourSet key) -> const std::vector<EdgeSet>& {
    auto it = sccs_by_key.find(key.bits());
    if (it != sccs_by_key.end()) return it->second;
    EdgeSet restricted = g.no_edges();
    for (auto e = cycle.find_first(); e != EdgeSet::npos; e = cycle.find_next(e)) {
      if (g.edge(static_cast<EdgeId>(e)).colours.subset_of(key)) restricted.set(e);
    }
    std::vector<EdgeSet> comps;
    if (restricted.any()) comps = scc_decompose(g, restricted).components;
    return sccs_by_key.emplace(key.bits(), std::move(comps)).first->second;
  };

  std::vector<EdgeSet> candidates;
  for (const ZDagNode& m : dag.nodes()) {
    if (m.polarity == own) continue;
    const ColourSet key = m.label & cycle_colours;
    if (key.empty()) continue;
    for (const EdgeSet& comp : sccs_for(key)) {
      const ColourSet c = g.colours_of(comp);
      const bool in_child = std::any_of(m.children.begin(), m.children.end(), [&](std::size_t p) {
        return c.subset_of(dag.node(p).label);
      });
      if (!in_child) candidates.push_back(comp);
    }
  }
  return maximal_edge_sets(std::move(candidates));
}

namespace {

/// Renumbers the nodes of a DAG under construction by first depth-first
/// visit, roots in order, children in their stored order.
AcdDag renumber(AcdDag raw) {
  std::vector<std::size_t> order;
  std::vector<std::size_t> new_id(raw.nodes.size(), kNoNode);
  std::vector<std::size_t> depth(raw.nodes.size(), kNoNode);
  for (std::size_t r : raw.roots) {
    std::vector<std::size_t> stack{r};
    while (!stack.empty()) {
      const std::size_t n = stack.back();
      stack.pop_back();
      if (new_id[n] != kNoNode) continue;
      new_id[n] = order.size();
      order.push_back(n);
      const auto& ch = raw.nodes[n].children;
      stack.insert(stack.end(), ch.rbegin(), ch.rend());
    }
  }
  std::vector<std::size_t> queue(raw.roots.begin(), raw.roots.end());
  for (std::size_t r : raw.roots) depth[r] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t n = queue[head];
    for (std::size_t c : raw.nodes[n].children) {
      if (depth[c] == kNoNode) {
        depth[c] = depth[n] + 1;
        queue.push_back(c);
      }
    }
  }

  AcdDag out;
  out.num_states = raw.num_states;
  out.num_edges = raw.num_edges;
  out.nodes.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    AcdDagNode node = std::move(raw.nodes[order[i]]);
    for (std::size_t& c : node.children) c = new_id[c];
    node.parents.clear();
    node.depth = depth[order[i]];
    out.nodes[i] = std::move(node);
  }
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    for (std::size_t c : out.nodes[i].children) out.nodes[c].parents.push_back(i);
  }
  for (std::size_t r : raw.roots) out.roots.push_back(new_id[r]);
  return out;
}

AcdDagNode make_dag_node(const TransitionGraph& g, const ZDag& zdag, EdgeSet cycle, std::size_t dag) {
  AcdDagNode n;
  n.colours = g.colours_of(cycle);
  n.states = g.states_of(cycle);
  n.polarity = polarity_of(zdag_membership(zdag, n.colours));
  n.cycle = std::move(cycle);
  n.dag = dag;
  return n;
}

}  // namespace

AcdDag compute_acd_dag(const TransitionGraph& g, const ZDag& zdag) {
  if (g.colours() != zdag.alphabet()) {
    throw DomainError("the Zielonka DAG must be over the automaton's colours");
  }
  AcdDag raw;
  raw.num_states = g.num_states();
  raw.num_edges = g.num_edges();
  std::unordered_map<EdgeSet, std::size_t, EdgeSetHash> index;
  std::vector<std::size_t> to_treat;
  const auto sccs = scc_decompose(g).components;
  for (std::size_t i = 0; i < sccs.size(); ++i) {
    index.emplace(sccs[i], raw.nodes.size());
    raw.roots.push_back(raw.nodes.size());
    to_treat.push_back(raw.nodes.size());
    raw.nodes.push_back(make_dag_node(g, zdag, sccs[i], i));
  }
  std::reverse(to_treat.begin(), to_treat.end());
  while (!to_treat.empty()) {
    const std::size_t n = to_treat.back();
    to_treat.pop_back();
    std::vector<EdgeSet> children = compute_children(g, zdag, raw.nodes[n].cycle);
    std::vector<std::size_t> ids;
    for (EdgeSet& c : children) {
      auto it = index.find(c);
      if (it == index.end()) {
        const std::size_t id = raw.nodes.size();
        it = index.emplace(c, id).first;
        raw.nodes.push_back(make_dag_node(g, zdag, std::move(c), raw.nodes[n].dag));
        to_treat.push_back(id);
      }
      ids.push_back(it->second);
    }
    raw.nodes[n].children = std::move(ids);
  }
  return renumber(std::move(raw));
}

AcdDag compute_acd_dag(const Automaton& a) {
  return compute_acd_dag(a.graph(), acceptance_zdag(a.acceptance()));
}

AcdForest unfold_acd(const AcdDag& dag) {
  AcdForest out;
  out.num_states = dag.num_states;
  out.num_edges = dag.num_edges;
  for (std::size_t t = 0; t < dag.roots.size(); ++t) {
    out.roots.push_back(out.nodes.size());
    // (dag node, parent in the forest)
    std::vector<std::pair<std::size_t, std::size_t>> stack{{dag.roots[t], kNoNode}};
    while (!stack.empty()) {
      auto [d, parent] = stack.back();
      stack.pop_back();
      const AcdDagNode& src = dag.nodes[d];
      const std::size_t id = out.nodes.size();
      AcdNode node;
      node.cycle = src.cycle;
      node.colours = src.colours;
      node.states = src.states;
      node.polarity = src.polarity;
      node.parent = parent;
      node.tree = t;
      if (parent != kNoNode) {
        node.depth = out.nodes[parent].depth + 1;
        out.nodes[parent].children.push_back(id);
      }
      out.nodes.push_back(std::move(node));
      for (auto it = src.children.rbegin(); it != src.children.rend(); ++it) stack.emplace_back(*it, id);
    }
  }
  return out;
}

AcdDag fold_acd(const AcdForest& forest) {
  AcdDag raw;
  raw.num_states = forest.num_states;
  raw.num_edges = forest.num_edges;
  std::unordered_map<EdgeSet, std::size_t, EdgeSetHash> index;
  std::vector<std::size_t> id_of(forest.nodes.size());
  for (std::size_t i = 0; i < forest.nodes.size(); ++i) {
    const AcdNode& n = forest.nodes[i];
    auto [it, inserted] = index.emplace(n.cycle, raw.nodes.size());
    if (inserted) {
      AcdDagNode d;
      d.cycle = n.cycle;
      d.colours = n.colours;
      d.states = n.states;
      d.polarity = n.polarity;
      d.dag = n.tree;
      raw.nodes.push_back(std::move(d));
    }
    id_of[i] = it->second;
  }
  for (std::size_t i = 0; i < forest.nodes.size(); ++i) {
    auto& children = raw.nodes[id_of[i]].children;
    if (!children.empty()) continue;
    for (std::size_t c : forest.nodes[i].children) children.push_back(id_of[c]);
  }
  for (std::size_t r : forest.roots) raw.roots.push_back(id_of[r]);
  return renumber(std::move(raw));
}

AcdForest compute_acd(const Automaton& a) { return unfold_acd(compute_acd_dag(a)); }

LocalView local_view(const AcdForest& forest, StateId q) {
  LocalView v{q, {}};
  for (std::size_t i = 0; i < forest.nodes.size(); ++i) {
    if (q < forest.nodes[i].states.size() && forest.nodes[i].states.test(q)) v.nodes.push_back(i);
  }
  return v;
}

LocalView local_view(const AcdDag& dag, StateId q) {
  LocalView v{q, {}};
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    if (q < dag.nodes[i].states.size() && dag.nodes[i].states.test(q)) v.nodes.push_back(i);
  }
  return v;
}

ZTree acd_tree_colours(const AcdForest& forest, std::size_t i, const ColourAlphabet& alphabet) {
  const std::size_t root = forest.roots.at(i);
  const std::size_t end = i + 1 < forest.roots.size() ? forest.roots[i + 1] : forest.nodes.size();
  std::vector<ZNode> nodes;
  for (std::size_t n = root; n < end; ++n) {
    const AcdNode& src = forest.nodes[n];
    ZNode z;
    z.label = src.colours;
    z.polarity = src.polarity;
    for (std::size_t c : src.children) z.children.push_back(c - root);
    nodes.push_back(std::move(z));
  }
  return ZTree(alphabet, std::move(nodes));
}

ZDag acd_dag_colours(const AcdDag& dag, std::size_t i, const ColourAlphabet& alphabet) {
  std::vector<std::size_t> members;
  std::vector<std::size_t> local(dag.nodes.size(), kNoNode);
  for (std::size_t n = 0; n < dag.nodes.size(); ++n) {
    if (dag.nodes[n].dag == i) {
      local[n] = members.size();
      members.push_back(n);
    }
  }
  std::vector<ZDagNode> nodes;
  std::unordered_map<std::uint64_t, std::size_t> seen;
  for (std::size_t n : members) {
    const AcdDagNode& src = dag.nodes[n];
    if (!seen.emplace(src.colours.bits(), n).second) {
      throw DomainError("two cycles of the ACD-DAG have the same colour set " +
                        alphabet.format(src.colours));
    }
    ZDagNode z;
    z.label = src.colours;
    z.polarity = src.polarity;
    for (std::size_t c : src.children) z.children.push_back(local[c]);
    nodes.push_back(std::move(z));
  }
  // The root of DAG i is its first member in depth-first numbering.
  return ZDag(alphabet, std::move(nodes));
}

Typeness typeness(const AcdDag& dag) {
  Typeness t{true, true, true};
  for (const AcdDagNode& n : dag.nodes) {
    bool branching = false;
    for (std::size_t i = 0; i < n.children.size() && !branching; ++i) {
      for (std::size_t j = i + 1; j < n.children.size() && !branching; ++j) {
        branching = dag.nodes[n.children[i]].states.intersects(dag.nodes[n.children[j]].states);
      }
    }
    if (!branching) continue;
    t.parity = false;
    if (n.polarity == Polarity::round) {
      t.rabin = false;
    } else {
      t.streett = false;
    }
  }
  return t;
}

Typeness typeness(const Automaton& a) { return typeness(compute_acd_dag(a)); }

ParityIndexReport parity_index(const Automaton& a) {
  ParityIndexReport r;
  const AcdDag dag = compute_acd_dag(a);
  r.nondeterministic = !a.graph().is_deterministic();
  if (r.nondeterministic) {
    r.notes.push_back("automaton is nondeterministic: the index is structural only");
  }
  if (dag.roots.empty()) {
    r.empty_forest = true;
    r.index = 1;
    r.notes.push_back("automaton has no cycle (empty language): index reported as 1");
    return r;
  }
  r.index = dag.max_height();
  return r;
}

AcdPriorities acd_priorities(const AcdForest& forest) {
  AcdPriorities p;
  p.of_node.resize(forest.nodes.size());
  for (std::size_t i = 0; i < forest.nodes.size(); ++i) {
    const AcdNode& n = forest.nodes[i];
    const int eps = forest.nodes[forest.roots[n.tree]].polarity == Polarity::round ? 0 : 1;
    p.of_node[i] = static_cast<int>(n.depth) + eps;
    p.max_priority = std::max(p.max_priority, p.of_node[i]);
  }
  return p;
}

Paritization paritize(const Automaton& a) { return paritize(a, compute_acd(a)); }

Paritization paritize(const Automaton& a, const AcdForest& forest) {
  const TransitionGraph& g = a.graph();
  require_deterministic(g, "paritize");
  if (forest.num_states != g.num_states() || forest.num_edges != g.num_edges()) {
    throw DomainError("the ACD does not belong to this automaton");
  }
  const AcdPriorities prio = acd_priorities(forest);
  const std::size_t n = g.num_states();
  auto in_local = [&](std::size_t node, StateId q) { return forest.nodes[node].states.test(q); };

  // Tree of each recurrent state, and the edges inside some SCC.
  std::vector<std::size_t> tree_of(n, kNoNode);
  EdgeSet recurrent_edges = g.no_edges();
  for (std::size_t t = 0; t < forest.roots.size(); ++t) {
    const AcdNode& root = forest.nodes[forest.roots[t]];
    recurrent_edges |= root.cycle;
    for (auto q = root.states.find_first(); q != StateSet::npos; q = root.states.find_next(q)) {
      tree_of[q] = t;
    }
  }

  // Leaves of t_q in pre-order, and the parity state of each (q, leaf).
  std::vector<StateId> state_of;
  std::vector<std::size_t> leaf_of;
  std::vector<std::unordered_map<std::size_t, StateId>> id_of(n);
  for (StateId q = 0; q < n; ++q) {
    if (tree_of[q] == kNoNode) {
      id_of[q].emplace(kNoNode, static_cast<StateId>(state_of.size()));
      state_of.push_back(q);
      leaf_of.push_back(kNoNode);
      continue;
    }
    const std::size_t root = forest.roots[tree_of[q]];
    const std::size_t end =
        tree_of[q] + 1 < forest.roots.size() ? forest.roots[tree_of[q] + 1] : forest.nodes.size();
    for (std::size_t m = root; m < end; ++m) {
      if (!in_local(m, q)) continue;
      const auto& ch = forest.nodes[m].children;
      if (std::none_of(ch.begin(), ch.end(), [&](std::size_t c) { return in_local(c, q); })) {
        id_of[q].emplace(m, static_cast<StateId>(state_of.size()));
        state_of.push_back(q);
        leaf_of.push_back(m);
      }
    }
  }

  // Descends from `node` through first children in t_q down to a leaf of t_q.
  auto descend = [&](std::size_t node, StateId q) {
    for (;;) {
      const auto& ch = forest.nodes[node].children;
      auto it = std::find_if(ch.begin(), ch.end(), [&](std::size_t c) { return in_local(c, q); });
      if (it == ch.end()) return node;
      node = *it;
    }
  };

  const int top = prio.max_priority;
  ParityCondition cond(0, top);
  std::vector<Edge> edges;
  for (StateId p = 0; p < state_of.size(); ++p) {
    const StateId q = state_of[p];
    const std::size_t leaf = leaf_of[p];
    for (EdgeId e : g.out_edges(q)) {
      const Edge& edge = g.edge(e);
      const StateId q2 = edge.dst;
      int priority = top;
      StateId target = 0;
      if (leaf == kNoNode || !recurrent_edges.test(e)) {
        target = tree_of[q2] == kNoNode ? id_of[q2].at(kNoNode)
                                        : id_of[q2].at(descend(forest.roots[tree_of[q2]], q2));
      } else {
        std::size_t node = leaf;
        while (!forest.nodes[node].cycle.test(e)) node = forest.nodes[node].parent;
        priority = prio.of_node[node];
        const auto& ch = forest.nodes[node].children;
        std::size_t next = node;
        if (std::any_of(ch.begin(), ch.end(), [&](std::size_t c) { return in_local(c, q2); })) {
          // The child of `node` on the branch of `leaf`, if any.
          std::size_t start = 0;
          if (leaf != node) {
            std::size_t below = leaf;
            while (forest.nodes[below].parent != node) below = forest.nodes[below].parent;
            start = static_cast<std::size_t>(std::find(ch.begin(), ch.end(), below) - ch.begin()) + 1;
          }
          for (std::size_t k = 0; k < ch.size(); ++k) {
            const std::size_t c = ch[(start + k) % ch.size()];
            if (in_local(c, q2)) {
              next = descend(c, q2);
              break;
            }
          }
        }
        target = id_of[q2].at(next);
      }
      edges.push_back({p, edge.letter, target, ColourSet::singleton(cond.colour_of(priority))});
    }
  }
  std::vector<std::string> names;
  for (StateId p = 0; p < state_of.size(); ++p) {
    std::string name = g.state_label(state_of[p]);
    name += leaf_of[p] == kNoNode ? ":_" : ":" + std::to_string(leaf_of[p]);
    names.push_back(std::move(name));
  }
  const std::size_t count = state_of.size();
  const StateId init = tree_of[g.initial()] == kNoNode
                           ? id_of[g.initial()].at(kNoNode)
                           : id_of[g.initial()].at(descend(forest.roots[tree_of[g.initial()]], g.initial()));
  TransitionGraph pg(count, init, g.letters(), cond.alphabet(), std::move(edges), std::move(names));
  return {Automaton(std::move(pg), cond), std::move(state_of), std::move(leaf_of)};
}

namespace {

std::vector<std::string> state_names_of(const TransitionGraph& g, const StateSet& s) {
  std::vector<std::string> out;
  for (auto q = s.find_first(); q != StateSet::npos; q = s.find_next(q)) {
    out.push_back(g.state_label(static_cast<StateId>(q)));
  }
  return out;
}

nlohmann::json node_json(const TransitionGraph& g, std::size_t id, const EdgeSet& cycle,
                         const StateSet& states, ColourSet colours, Polarity pol, int priority,
                         const std::vector<std::size_t>& children) {
  return {{"id", id},
          {"polarity", to_string(pol)},
          {"priority", priority},
          {"edges", to_indices(cycle)},
          {"states", state_names_of(g, states)},
          {"colours", g.colours().names_of(colours)},
          {"children", children}};
}

int dag_priority(const AcdDag& dag, std::size_t i) {
  const int eps = dag.nodes[dag.roots[dag.nodes[i].dag]].polarity == Polarity::round ? 0 : 1;
  return static_cast<int>(dag.nodes[i].depth) + eps;
}

std::string dot_label(const TransitionGraph& g, const EdgeSet& cycle, ColourSet colours,
                      int priority) {
  std::ostringstream os;
  os << "e";
  bool first = true;
  for (std::uint32_t e : to_indices(cycle)) {
    os << (first ? "{" : ",") << e;
    first = false;
  }
  os << "}\\n" << g.colours().format(colours) << "\\np=" << priority;
  return os.str();
}

}  // namespace

nlohmann::json acd_to_json(const AcdForest& forest, const TransitionGraph& g) {
  const AcdPriorities prio = acd_priorities(forest);
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < forest.nodes.size(); ++i) {
    const AcdNode& n = forest.nodes[i];
    nlohmann::json j =
        node_json(g, i, n.cycle, n.states, n.colours, n.polarity, prio.of_node[i], n.children);
    j["tree"] = n.tree;
    j["depth"] = n.depth;
    nodes.push_back(std::move(j));
  }
  return {{"kind", "acd"},
          {"roots", forest.roots},
          {"size", forest.size()},
          {"height", forest.max_height()},
          {"nodes", std::move(nodes)}};
}

nlohmann::json acd_dag_to_json(const AcdDag& dag, const TransitionGraph& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    const AcdDagNode& n = dag.nodes[i];
    nlohmann::json j =
        node_json(g, i, n.cycle, n.states, n.colours, n.polarity, dag_priority(dag, i), n.children);
    j["dag"] = n.dag;
    nodes.push_back(std::move(j));
  }
  return {{"kind", "acd-dag"},
          {"roots", dag.roots},
          {"size", dag.size()},
          {"edge_count", dag.edge_count()},
          {"height", dag.max_height()},
          {"nodes", std::move(nodes)}};
}

std::string acd_to_dot(const AcdForest& forest, const TransitionGraph& g) {
  const AcdPriorities prio = acd_priorities(forest);
  std::ostringstream os;
  os << "digraph acd {\n";
  for (std::size_t i = 0; i < forest.nodes.size(); ++i) {
    const AcdNode& n = forest.nodes[i];
    os << "  n" << i << " [shape=" << (n.polarity == Polarity::round ? "ellipse" : "box")
       << ", label=\"" << dot_label(g, n.cycle, n.colours, prio.of_node[i]) << "\"];\n";
    for (std::size_t c : n.children) os << "  n" << i << " -> n" << c << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string acd_dag_to_dot(const AcdDag& dag, const TransitionGraph& g) {
  std::ostringstream os;
  os << "digraph acd_dag {\n";
  for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
    const AcdDagNode& n = dag.nodes[i];
    os << "  n" << i << " [shape=" << (n.polarity == Polarity::round ? "ellipse" : "box")
       << ", label=\"" << dot_label(g, n.cycle, n.colours, dag_priority(dag, i)) << "\"];\n";
    for (std::size_t c : n.children) os << "  n" << i << " -> n" << c << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace acdkit
