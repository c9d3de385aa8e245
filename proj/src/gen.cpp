#include "acdkit/gen.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "acdkit/cycles.hpp"
#include "acdkit/error.hpp"

namespace acdkit {

namespace {

ColourSet set_of_ranks(std::size_t from, std::size_t to) {
  ColourSet s;
  for (std::size_t c = from; c < to; ++c) s.insert(static_cast<ColourIndex>(c));
  return s;
}

}  // namespace

MullerFamily even_letters(std::size_t m, const Caps& caps) {
  if (m == 0) throw DomainError("even_letters needs m ≥ 1");
  enforce_cap("even_letters", m, caps.even_letters);
  std::vector<ColourSet> sets;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
    ColourSet s(bits);
    if (s.size() % 2 == 0) sets.push_back(s);
  }
  return MullerFamily(ColourAlphabet::numbered(m, 1), std::move(sets));
}

MullerFamily chain_family(std::size_t n) {
  if (n == 0 || 2 * n > kMaxColours) throw DomainError("chain_family needs 1 ≤ n ≤ 32");
  std::vector<ColourSet> sets;
  for (std::size_t j = 1; j <= n; ++j) sets.push_back(set_of_ranks(0, 2 * j));
  return MullerFamily(ColourAlphabet::numbered(2 * n, 1), std::move(sets));
}

MullerFamily small_dag_family(std::size_t n) {
  if (n < 2 || n > 20) throw DomainError("small_dag_family needs 2 ≤ n ≤ 20");
  std::vector<ColourSet> sets;
  // Colour index i stands for i + 1, so "c₁ odd" is an even index.
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    ColourSet base{static_cast<ColourIndex>(i), static_cast<ColourIndex>(i + 1)};
    const std::size_t rest = n - (i + 2);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rest); ++bits) {
      sets.push_back(base | ColourSet(bits << (i + 2)));
    }
  }
  return MullerFamily(ColourAlphabet::numbered(n, 1), std::move(sets));
}

RabinCondition rabin_worst(std::size_t m) {
  if (m == 0 || 2 * m > kMaxColours) throw DomainError("rabin_worst needs 1 ≤ m ≤ 32");
  std::vector<std::string> names;
  std::vector<RabinPair> pairs;
  for (std::size_t i = 1; i <= m; ++i) {
    names.push_back("g" + std::to_string(i));
    names.push_back("r" + std::to_string(i));
    pairs.push_back(RabinPair{ColourSet::singleton(static_cast<ColourIndex>(2 * i - 2)),
                              ColourSet::singleton(static_cast<ColourIndex>(2 * i - 1))});
  }
  return RabinCondition(ColourAlphabet(std::move(names)), std::move(pairs));
}

namespace {

struct GraphText {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

GraphText parse_graph_text(const std::string& text) {
  GraphText out;
  std::unordered_map<std::string, std::size_t> index;
  auto vertex = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    index.emplace(name, out.vertices.size());
    out.vertices.push_back(name);
    return out.vertices.size() - 1;
  };
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = line.substr(0, line.find('#'));
    std::istringstream tokens(line);
    std::vector<std::string> words;
    std::string w;
    while (tokens >> w) words.push_back(w);
    if (words.empty()) continue;
    if (words.size() > 2) throw ParseError("expected `u v` or a single vertex name", line_no, 1);
    const std::size_t u = vertex(words[0]);
    if (words.size() == 2) out.edges.emplace_back(u, vertex(words[1]));
  }
  if (out.vertices.empty()) throw ParseError("a graph needs at least one vertex", line_no, 1);
  return out;
}

}  // namespace

void UndirectedGraph::check() const {
  if (vertices.empty()) throw DomainError("a graph needs at least one vertex");
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : edges) {
    if (u >= vertices.size() || v >= vertices.size()) throw DomainError("graph edge endpoint out of range");
    if (u == v) throw DomainError("undirected graphs have no self-loops (vertex " + vertices[u] + ")");
    seen.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw DomainError("repeated graph edge");
  }
}

bool UndirectedGraph::adjacent(std::size_t u, std::size_t v) const {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
}

bool UndirectedGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<bool> seen(vertices.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (auto [a, b] : edges) {
      std::size_t other = a == u ? b : (b == u ? a : kNoNode);
      if (other != kNoNode && !seen[other]) {
        seen[other] = true;
        stack.push_back(other);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

namespace {

std::vector<std::string> numbered_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return names;
}

}  // namespace

UndirectedGraph UndirectedGraph::complete(std::size_t n) {
  UndirectedGraph g;
  g.vertices = numbered_names(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

UndirectedGraph UndirectedGraph::path(std::size_t n) {
  UndirectedGraph g;
  g.vertices = numbered_names(n);
  for (std::size_t u = 0; u + 1 < n; ++u) g.edges.emplace_back(u, u + 1);
  return g;
}

UndirectedGraph UndirectedGraph::cycle(std::size_t n) {
  if (n < 3) throw DomainError("an undirected cycle needs at least 3 vertices");
  UndirectedGraph g = path(n);
  g.edges.emplace_back(0, n - 1);
  return g;
}

UndirectedGraph UndirectedGraph::parse(const std::string& text) {
  GraphText t = parse_graph_text(text);
  UndirectedGraph g;
  g.vertices = std::move(t.vertices);
  for (auto [u, v] : t.edges) g.edges.emplace_back(std::min(u, v), std::max(u, v));
  try {
    g.check();
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0, 0);
  }
  return g;
}

void DirectedGraph::check() const {
  if (vertices.empty()) throw DomainError("a graph needs at least one vertex");
  auto sorted = edges;
  for (auto [u, v] : edges) {
    if (u >= vertices.size() || v >= vertices.size()) throw DomainError("graph edge endpoint out of range");
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("repeated graph edge");
  }
}

DirectedGraph DirectedGraph::parse(const std::string& text) {
  GraphText t = parse_graph_text(text);
  DirectedGraph g{std::move(t.vertices), std::move(t.edges)};
  try {
    g.check();
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0, 0);
  }
  return g;
}

DirectedGraph DirectedGraph::cycle(std::size_t n) {
  DirectedGraph g;
  g.vertices = numbered_names(n);
  for (std::size_t u = 0; u < n; ++u) g.edges.emplace_back(u, (u + 1) % n);
  return g;
}

Automaton aut_chrom(const UndirectedGraph& g) {
  g.check();
  if (!g.connected()) throw DomainError("aut_chrom needs a connected graph");
  const std::size_t nv = g.vertices.size();
  const std::size_t ne = g.edges.size();
  if (nv + ne > kMaxColours) throw DomainError("aut_chrom supports at most 64 vertices plus edges");

  std::vector<std::string> names = g.vertices;
  for (auto [u, v] : g.edges) names.push_back(g.vertices[u] + "-" + g.vertices[v]);
  ColourAlphabet colours(names);
  std::vector<std::string> state_names = names;
  state_names.push_back("init");
  const auto init = static_cast<StateId>(nv + ne);

  std::vector<Edge> edges;
  auto colour = [](std::size_t c) { return ColourSet::singleton(static_cast<ColourIndex>(c)); };
  edges.push_back(Edge{init, 0, 0, colour(0)});
  for (std::size_t i = 0; i < ne; ++i) {
    const std::size_t e = nv + i;
    for (std::size_t v : {g.edges[i].first, g.edges[i].second}) {
      edges.push_back(Edge{static_cast<StateId>(v), static_cast<LetterId>(e), static_cast<StateId>(e), colour(e)});
      edges.push_back(Edge{static_cast<StateId>(e), static_cast<LetterId>(v), static_cast<StateId>(v), colour(v)});
    }
  }

  std::vector<ColourSet> sets;
  for (std::size_t v = 0; v < nv; ++v) {
    std::vector<ColourIndex> around{static_cast<ColourIndex>(v)};
    for (std::size_t i = 0; i < ne; ++i) {
      if (g.edges[i].first == v || g.edges[i].second == v) around.push_back(static_cast<ColourIndex>(nv + i));
    }
    enforce_cap("aut_chrom_degree", around.size(), 20);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << around.size()); ++bits) {
      ColourSet s;
      for (std::size_t j = 0; j < around.size(); ++j) {
        if ((bits >> j) & 1U) s.insert(around[j]);
      }
      sets.push_back(s);
    }
  }
  TransitionGraph graph(nv + ne + 1, init, names, colours, std::move(edges), std::move(state_names));
  return Automaton(std::move(graph), MullerFamily(colours, std::move(sets)));
}

Automaton aut_clique(const UndirectedGraph& g, std::size_t k) {
  g.check();
  if (!g.connected()) throw DomainError("aut_clique needs a connected graph");
  if (k == 0) throw DomainError("aut_clique needs k ≥ 1");
  const std::size_t nv = g.vertices.size();
  if (nv + k > kMaxColours) throw DomainError("aut_clique supports at most 64 vertices plus k");

  std::vector<std::string> names = g.vertices;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("a" + std::to_string(i));
  ColourAlphabet colours(names);
  std::vector<std::string> letters = names;
  letters.push_back("x");

  auto colour = [](std::size_t c) { return ColourSet::singleton(static_cast<ColourIndex>(c)); };
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < nv; ++v) edges.push_back(Edge{0, static_cast<LetterId>(v), 0, colour(v)});
  edges.push_back(Edge{0, static_cast<LetterId>(nv + k), 1, colour(0)});
  for (std::size_t i = 0; i < k; ++i) {
    edges.push_back(Edge{1, static_cast<LetterId>(nv + i), 1, colour(nv + i)});
  }

  std::vector<ColourSet> sets;
  for (auto [u, v] : g.edges) sets.push_back(colour(u) | colour(v));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) sets.push_back(colour(nv + i) | colour(nv + j));
  }
  TransitionGraph graph(2, 0, letters, colours, std::move(edges), {"q_vert", "q_k"});
  return Automaton(std::move(graph), MullerFamily(colours, std::move(sets)));
}

GhAutomaton ham_gh_automaton(const DirectedGraph& g) {
  g.check();
  const std::size_t nv = g.vertices.size();
  const std::size_t ne = g.edges.size();
  if (nv + ne + 1 > kMaxColours) throw DomainError("ham_gh_automaton supports at most 63 vertices plus edges");

  std::vector<std::string> names;
  for (const auto& v : g.vertices) names.push_back("l_" + v);
  for (auto [u, v] : g.edges) names.push_back("l_" + g.vertices[u] + "_" + g.vertices[v]);
  names.push_back("l_bot");
  ColourAlphabet colours(names);
  const auto bot = static_cast<ColourIndex>(nv + ne);

  std::vector<std::string> state_names;
  for (const auto& v : g.vertices) {
    state_names.push_back(v + "-");
    state_names.push_back(v + "+");
  }
  auto colour = [](std::size_t c) { return ColourSet::singleton(static_cast<ColourIndex>(c)); };
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < nv; ++v) {
    edges.push_back(Edge{static_cast<StateId>(2 * v), static_cast<LetterId>(v), static_cast<StateId>(2 * v + 1),
                         colour(v)});
  }
  for (std::size_t i = 0; i < ne; ++i) {
    auto [u, v] = g.edges[i];
    edges.push_back(Edge{static_cast<StateId>(2 * u + 1), static_cast<LetterId>(nv + i), static_cast<StateId>(2 * v),
                         colour(nv + i)});
  }

  std::vector<GHClause> clauses;
  for (std::size_t i = 0; i < ne; ++i) {
    for (std::size_t j = i + 1; j < ne; ++j) {
      if (g.edges[i].first != g.edges[j].first) continue;
      clauses.push_back(GHClause::implication(colour(nv + i) | colour(nv + j), colour(bot)));
    }
  }
  const ColourSet all_vertices = set_of_ranks(0, nv);
  for (std::size_t v = 0; v < nv; ++v) clauses.push_back(GHClause::implication(colour(v), all_vertices));

  TransitionGraph graph(2 * nv, 0, names, colours, std::move(edges), std::move(state_names));
  return GhAutomaton{std::move(graph), GHFormula(colours, std::move(clauses))};
}

Automaton one_state_automaton(const Acceptance& acceptance) {
  const ColourAlphabet& colours = acceptance_alphabet(acceptance);
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < colours.size(); ++c) {
    edges.push_back(Edge{0, static_cast<LetterId>(c), 0, ColourSet::singleton(static_cast<ColourIndex>(c))});
  }
  TransitionGraph graph(1, 0, colours.names(), colours, std::move(edges));
  return Automaton(std::move(graph), acceptance);
}

double SeededRandom::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t SeededRandom::below(std::size_t n) {
  if (n == 0) throw DomainError("SeededRandom::below needs a positive bound");
  return static_cast<std::size_t>(engine_() % n);
}

namespace {

std::vector<ColourSet> draw_family(const ColourAlphabet& alphabet, double density, SeededRandom& rng,
                                   bool non_empty) {
  enforce_cap("random_family_colours", alphabet.size(), 16);
  const std::uint64_t limit = std::uint64_t{1} << alphabet.size();
  for (;;) {
    std::vector<ColourSet> sets;
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
      if (rng.chance(density)) sets.emplace_back(bits);
    }
    if (!sets.empty() || !non_empty || density <= 0.0) return sets;
  }
}

ColourSet draw_subset(std::size_t n, double p, SeededRandom& rng) {
  ColourSet s;
  for (std::size_t c = 0; c < n; ++c) {
    if (rng.chance(p)) s.insert(static_cast<ColourIndex>(c));
  }
  return s;
}

ColourSet draw_non_empty_subset(std::size_t n, double p, SeededRandom& rng) {
  for (;;) {
    ColourSet s = draw_subset(n, p, rng);
    if (!s.empty()) return s;
  }
}

}  // namespace

MullerFamily random_family(const ColourAlphabet& alphabet, double density, std::uint64_t seed,
                           bool non_empty) {
  SeededRandom rng(seed);
  return MullerFamily(alphabet, draw_family(alphabet, density, rng, non_empty));
}

Automaton random_automaton(const RandomAutomatonSizes& sizes, std::uint64_t seed) {
  if (sizes.states == 0 || sizes.letters == 0 || sizes.colours == 0) {
    throw DomainError("random_automaton needs at least one state, letter and colour");
  }
  SeededRandom rng(seed);
  ColourAlphabet colours = ColourAlphabet::numbered(sizes.colours, 0);
  std::vector<std::string> letters;
  for (std::size_t a = 0; a < sizes.letters; ++a) letters.push_back(std::string(1, static_cast<char>('a' + a % 26)) +
                                                                    (a >= 26 ? std::to_string(a / 26) : ""));
  std::vector<Edge> edges;
  for (std::size_t q = 0; q < sizes.states; ++q) {
    for (std::size_t a = 0; a < sizes.letters; ++a) {
      if (!rng.chance(sizes.transition_density)) continue;
      const auto dst = static_cast<StateId>(rng.below(sizes.states));
      ColourSet c = ColourSet::singleton(static_cast<ColourIndex>(rng.below(sizes.colours)));
      for (std::size_t extra = 0; extra < sizes.colours; ++extra) {
        if (rng.chance(sizes.extra_colour)) c.insert(static_cast<ColourIndex>(extra));
      }
      if (edges.size() < sizes.max_edges) {
        edges.push_back(Edge{static_cast<StateId>(q), static_cast<LetterId>(a), dst, c});
      }
    }
  }
  MullerFamily family(colours, draw_family(colours, sizes.family_density, rng, false));
  TransitionGraph graph(sizes.states, 0, std::move(letters), colours, std::move(edges));
  return Automaton(std::move(graph), std::move(family));
}

GHFormula random_gh_formula(std::size_t variables, std::size_t clauses, double negative,
                            std::uint64_t seed) {
  if (variables == 0 || variables > kMaxColours) throw DomainError("random_gh_formula needs 1 to 64 variables");
  SeededRandom rng(seed);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= variables; ++i) names.push_back("x" + std::to_string(i));
  std::vector<GHClause> out;
  for (std::size_t i = 0; i < clauses; ++i) {
    ColourSet premises = draw_subset(variables, 0.4, rng);
    if (rng.chance(negative)) {
      out.push_back(GHClause::bottom(premises));
    } else {
      out.push_back(GHClause::implication(premises, draw_non_empty_subset(variables, 0.4, rng)));
    }
  }
  return GHFormula(ColourAlphabet(std::move(names)), std::move(out));
}

RabinCondition random_rabin(std::size_t colours, std::size_t pairs, std::uint64_t seed) {
  SeededRandom rng(seed);
  ColourAlphabet alphabet = ColourAlphabet::numbered(colours, 0);
  std::vector<RabinPair> out;
  for (std::size_t i = 0; i < pairs; ++i) {
    ColourSet green = draw_non_empty_subset(colours, 0.4, rng);
    ColourSet red = draw_subset(colours, 0.4, rng) - green;
    out.push_back(RabinPair{green, red});
  }
  return RabinCondition(std::move(alphabet), std::move(out));
}

ZTree naive_ztree(const MullerFamily& family, const Caps& caps) {
  const ColourAlphabet& alphabet = family.alphabet();
  enforce_cap("naive_ztree_colours", alphabet.size(), caps.oracle_colours);
  std::vector<ZNode> nodes;
  std::function<std::size_t(ColourSet, std::size_t)> build = [&](ColourSet label, std::size_t parent) {
    const std::size_t id = nodes.size();
    ZNode node;
    node.label = label;
    node.polarity = polarity_of(family.contains(label));
    node.parent = parent;
    nodes.push_back(node);
    std::vector<ColourSet> flipped;
    const std::uint64_t x = label.bits();
    for (std::uint64_t sub = (x - 1) & x; sub != 0; sub = (sub - 1) & x) {
      if (polarity_of(family.contains(ColourSet(sub))) != node.polarity) flipped.emplace_back(sub);
    }
    std::vector<ColourSet> children;
    for (ColourSet s : flipped) {
      bool maximal = std::none_of(flipped.begin(), flipped.end(), [&](ColourSet o) { return s.strict_subset_of(o); });
      if (maximal) children.push_back(s);
    }
    std::sort(children.begin(), children.end(), child_order_less);
    for (ColourSet c : children) {
      const std::size_t child = build(c, id);
      nodes[id].children.push_back(child);
    }
    return id;
  };
  build(alphabet.full(), kNoNode);
  return ZTree(alphabet, std::move(nodes));
}

AcdForest naive_acd(const Automaton& a, const Caps& caps) {
  const TransitionGraph& g = a.graph();
  const std::vector<EdgeSet> cycles = enumerate_cycles(g, caps);
  auto strictly_inside = [](const EdgeSet& s, const EdgeSet& l) { return s != l && s.is_subset_of(l); };

  std::vector<EdgeSet> roots;
  for (const auto& c : cycles) {
    bool maximal = std::none_of(cycles.begin(), cycles.end(), [&](const EdgeSet& o) { return strictly_inside(c, o); });
    if (maximal) roots.push_back(c);
  }
  std::sort(roots.begin(), roots.end(), [](const EdgeSet& x, const EdgeSet& y) { return x.find_first() < y.find_first(); });

  AcdForest out;
  out.num_states = g.num_states();
  out.num_edges = g.num_edges();
  std::function<void(const EdgeSet&, std::size_t, std::size_t)> build = [&](const EdgeSet& cycle, std::size_t parent,
                                                                            std::size_t tree) {
    const std::size_t id = out.nodes.size();
    AcdNode node;
    node.cycle = cycle;
    node.colours = g.colours_of(cycle);
    node.states = g.states_of(cycle);
    node.polarity = polarity_of(a.accepts_colours(node.colours));
    node.parent = parent;
    node.tree = tree;
    node.depth = parent == kNoNode ? 0 : out.nodes[parent].depth + 1;
    if (parent != kNoNode) out.nodes[parent].children.push_back(id);
    const Polarity pol = node.polarity;
    out.nodes.push_back(std::move(node));

    std::vector<EdgeSet> flipped;
    for (const auto& c : cycles) {
      if (strictly_inside(c, cycle) && polarity_of(a.accepts_colours(g.colours_of(c))) != pol) flipped.push_back(c);
    }
    std::vector<EdgeSet> children;
    for (const auto& c : flipped) {
      bool maximal =
          std::none_of(flipped.begin(), flipped.end(), [&](const EdgeSet& o) { return strictly_inside(c, o); });
      if (maximal) children.push_back(c);
    }
    std::sort(children.begin(), children.end(), cycle_order_less);
    for (const auto& c : children) build(c, id, tree);
  };
  for (std::size_t t = 0; t < roots.size(); ++t) {
    out.roots.push_back(out.nodes.size());
    build(roots[t], kNoNode, t);
  }
  return out;
}

namespace {

/// Calls visit(map) on every restricted growth string of length n with
/// values below k; stops as soon as visit returns true.
bool for_each_partition(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> map(n, 0);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) return visit(map);
    for (std::size_t c = 0; c <= std::min(used, k - 1); ++c) {
      map[i] = c;
      if (rec(i + 1, std::max(used, c + 1))) return true;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

std::size_t naive_min_colours(const MullerFamily& family, const Caps& caps) {
  const std::size_t n = family.alphabet().size();
  enforce_cap("naive_min_colours_colours", n, caps.oracle_colours);
  for (std::size_t k = 1; k <= n; ++k) {
    bool found = for_each_partition(n, k, [&](const std::vector<std::size_t>& map) {
      std::unordered_map<std::uint64_t, bool> seen;
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        std::uint64_t image = 0;
        for (ColourIndex c : ColourSet(bits)) image |= std::uint64_t{1} << map[c];
        const bool member = family.contains(ColourSet(bits));
        auto [it, inserted] = seen.emplace(image, member);
        if (!inserted && it->second != member) return false;
      }
      return true;
    });
    if (found) return k;
  }
  return n;
}

std::size_t naive_min_colours(const Automaton& a, bool multi, const Caps& caps) {
  const TransitionGraph& g = a.graph();
  const std::vector<EdgeSet> cycles = enumerate_reachable_cycles(g, caps);
  EdgeSet relevant = g.no_edges();
  for (const auto& c : cycles) relevant |= c;
  const std::vector<std::uint32_t> edges = to_indices(relevant);
  const std::size_t n = edges.size();
  enforce_cap("naive_min_colours_edges", n, 10);
  if (n == 0) return 1;

  std::vector<std::vector<std::size_t>> cycle_positions;
  std::vector<bool> accepting;
  for (const auto& c : cycles) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) {
      if (c.test(edges[i])) pos.push_back(i);
    }
    cycle_positions.push_back(std::move(pos));
    accepting.push_back(a.accepts_colours(g.colours_of(c)));
  }
  auto compatible = [&](const std::vector<std::uint64_t>& colour) {
    std::unordered_map<std::uint64_t, bool> seen;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      std::uint64_t image = 0;
      for (std::size_t p : cycle_positions[i]) image |= colour[p];
      auto [it, inserted] = seen.emplace(image, accepting[i]);
      if (!inserted && it->second != accepting[i]) return false;
    }
    return true;
  };

  for (std::size_t k = 1; k <= n; ++k) {
    bool found = false;
    if (!multi) {
      found = for_each_partition(n, k, [&](const std::vector<std::size_t>& map) {
        std::vector<std::uint64_t> colour(n);
        for (std::size_t i = 0; i < n; ++i) colour[i] = std::uint64_t{1} << map[i];
        return compatible(colour);
      });
    } else {
      const std::uint64_t choices = (std::uint64_t{1} << k) - 1;
      double total = 1;
      for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(choices);
      enforce_cap("naive_min_colours_assignments", static_cast<std::size_t>(std::min(total, 1e18)), 2000000);
      std::vector<std::uint64_t> colour(n, 1);
      for (;;) {
        if (compatible(colour)) {
          found = true;
          break;
        }
        std::size_t i = 0;
        while (i < n && colour[i] == choices) colour[i++] = 1;
        if (i == n) break;
        ++colour[i];
      }
    }
    if (found) return k;
  }
  return n;
}

namespace {

/// Bitmask over the non-empty subsets of an n-element set (bit C set iff the
/// pair accepts C).
std::uint64_t pair_language(ColourSet green, ColourSet red, std::size_t n) {
  std::uint64_t lang = 0;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    ColourSet c(bits);
    if (c.intersects(green) && !c.intersects(red)) lang |= std::uint64_t{1} << bits;
  }
  return lang;
}

/// Whether some k-subset of `atoms` combines (with `combine`, from `unit`)
/// to `target`.
bool some_combination(const std::vector<std::uint64_t>& atoms, std::size_t k, std::uint64_t unit, std::uint64_t target,
                      bool use_or) {
  std::function<bool(std::size_t, std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::size_t left,
                                                                         std::uint64_t acc) {
    if (left == 0) return acc == target;
    for (std::size_t i = from; i + left <= atoms.size(); ++i) {
      if (rec(i + 1, left - 1, use_or ? (acc | atoms[i]) : (acc & atoms[i]))) return true;
    }
    return false;
  };
  return rec(0, k, unit);
}

}  // namespace

std::size_t naive_min_rabin_pairs(const RabinCondition& cond, const Caps& caps) {
  const std::size_t n = cond.alphabet().size();
  enforce_cap("naive_min_rabin_pairs_colours", n, std::min<std::size_t>(caps.formula_vars, 5));
  std::uint64_t target = 0;
  for (const auto& p : cond.pairs()) target |= pair_language(p.green, p.red, n);
  std::vector<std::uint64_t> atoms;
  const std::uint64_t full = std::uint64_t{1} << n;
  for (std::uint64_t g = 1; g < full; ++g) {
    for (std::uint64_t r = 0; r < full; ++r) {
      if ((g & r) == 0) atoms.push_back(pair_language(ColourSet(g), ColourSet(r), n));
    }
  }
  for (std::size_t k = 0;; ++k) {
    if (some_combination(atoms, k, 0, target, true)) return k;
  }
}

std::size_t naive_gh_min(const GHFormula& phi, const Caps& caps) {
  const std::size_t n = phi.variables().size();
  enforce_cap("naive_gh_min_variables", n, std::min<std::size_t>(caps.formula_vars, 5));
  const std::uint64_t full = std::uint64_t{1} << n;
  const std::uint64_t all = full == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << full) - 1;
  auto models = [&](ColourSet premises, ColourSet conclusions, bool negative) {
    std::uint64_t m = 0;
    for (std::uint64_t nu = 0; nu < full; ++nu) {
      ColourSet v(nu);
      bool holds = !premises.subset_of(v) || (!negative && conclusions.subset_of(v));
      if (holds) m |= std::uint64_t{1} << nu;
    }
    return m;
  };
  std::uint64_t target = all;
  for (const auto& c : phi.clauses()) target &= models(c.premises, c.conclusions, c.negative);

  std::vector<std::uint64_t> atoms;
  for (std::uint64_t p = 0; p < full; ++p) {
    atoms.push_back(models(ColourSet(p), ColourSet(), true));
    for (std::uint64_t q = 1; q < full; ++q) {
      if ((p & q) == 0) atoms.push_back(models(ColourSet(p), ColourSet(q), false));
    }
  }
  for (std::size_t k = 0;; ++k) {
    if (some_combination(atoms, k, all, target, false)) return k;
  }
}

}  // namespace acdkit
