#include "acdkit/streett.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "acdkit/error.hpp"

namespace acdkit {

bool streett_term_holds(std::span<const RabinPair> term, ColourSet c) {
  return std::all_of(term.begin(), term.end(), [c](const RabinPair& p) {
    return !c.intersects(p.green) || c.intersects(p.red);
  });
}

namespace {

/// One term per pair: the Rabin pair (G, R) holds iff R is never seen and
/// G is seen.
std::vector<StreettTerm> rabin_pairs_as_terms(const RabinCondition& cond) {
  const ColourSet all = cond.alphabet().full();
  std::vector<StreettTerm> out;
  for (const RabinPair& p : cond.pairs()) out.push_back({{p.red, ColourSet()}, {all, p.green}});
  return out;
}

std::vector<StreettTerm> rabin_terms(const RabinCondition& cond, bool accepting) {
  const bool rabin_side = accepting != cond.is_streett();
  if (rabin_side) return rabin_pairs_as_terms(cond);
  return {cond.pairs()};
}

}  // namespace

std::vector<StreettTerm> acceptance_terms(const Acceptance& acc, bool accepting) {
  if (acc.index() == 3) return rabin_terms(std::get<RabinCondition>(acc), accepting);
  if (acc.index() == 4) return rabin_terms(parity_to_rabin(std::get<ParityCondition>(acc)), accepting);
  const ZDag dag = acceptance_zdag(acc);
  const ColourSet gamma = dag.alphabet().full();
  const Polarity wanted = polarity_of(accepting);
  std::vector<StreettTerm> out;
  for (const ZDagNode& n : dag.nodes()) {
    if (n.polarity != wanted) continue;
    StreettTerm t;
    if (n.label != gamma) t.push_back({gamma - n.label, ColourSet()});
    for (std::size_t ch : n.children) t.push_back({gamma, gamma - dag.node(ch).label});
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

/// Shortest path (BFS) from `from` to `to` using only edges in `allowed`.
std::vector<EdgeId> shortest_path(const TransitionGraph& g, StateId from, StateId to,
                                  const EdgeSet& allowed) {
  if (from == to) return {};
  std::vector<EdgeId> via(g.num_states(), static_cast<EdgeId>(-1));
  std::vector<char> seen(g.num_states(), 0);
  std::deque<StateId> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (EdgeId e : g.out_edges(q)) {
      if (!allowed.test(e)) continue;
      StateId d = g.edge(e).dst;
      if (seen[d]) continue;
      seen[d] = 1;
      via[d] = e;
      if (d == to) {
        std::vector<EdgeId> path;
        for (StateId x = to; x != from; x = g.edge(via[x]).src) path.push_back(via[x]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(d);
    }
  }
  throw DomainError("internal error: no path inside a strongly connected set");
}

}  // namespace

GraphLasso cycle_lasso(const TransitionGraph& g, const EdgeSet& comp) {
  GraphLasso out;
  out.cycle = comp;
  const StateId start = g.edge(static_cast<EdgeId>(comp.find_first())).src;
  out.prefix_edges = shortest_path(g, g.initial(), start, g.all_edges());
  EdgeSet covered(g.num_edges());
  StateId here = start;
  for (auto e = comp.find_first(); e != EdgeSet::npos; e = comp.find_next(e)) {
    if (covered.test(e)) continue;
    for (EdgeId x : shortest_path(g, here, g.edge(static_cast<EdgeId>(e)).src, comp)) {
      out.period_edges.push_back(x);
      covered.set(x);
    }
    out.period_edges.push_back(static_cast<EdgeId>(e));
    covered.set(e);
    here = g.edge(static_cast<EdgeId>(e)).dst;
  }
  for (EdgeId x : shortest_path(g, here, start, comp)) out.period_edges.push_back(x);
  for (EdgeId e : out.prefix_edges) out.word.prefix.push_back(g.edge(e).letter);
  for (EdgeId e : out.period_edges) out.word.period.push_back(g.edge(e).letter);
  return out;
}

std::optional<GraphLasso> streett_lasso(const TransitionGraph& g, std::span<const RabinPair> term) {
  std::vector<EdgeSet> work{g.reachable_edges()};
  while (!work.empty()) {
    EdgeSet scope = std::move(work.back());
    work.pop_back();
    for (EdgeSet& comp : scc_decompose(g, scope).components) {
      const ColourSet seen = g.colours_of(comp);
      ColourSet bad_green;
      for (const RabinPair& p : term) {
        if (seen.intersects(p.green) && !seen.intersects(p.red)) bad_green |= p.green;
      }
      if (bad_green.empty()) return cycle_lasso(g, comp);
      for (auto e = comp.find_first(); e != EdgeSet::npos; e = comp.find_next(e)) {
        if (g.edge(static_cast<EdgeId>(e)).colours.intersects(bad_green)) comp.reset(e);
      }
      if (comp.any()) work.push_back(std::move(comp));
    }
  }
  return std::nullopt;
}

std::optional<GraphLasso> streett_lasso_any(const TransitionGraph& g,
                                            const std::vector<StreettTerm>& terms) {
  for (const StreettTerm& t : terms) {
    if (auto l = streett_lasso(g, t)) return l;
  }
  return std::nullopt;
}

std::optional<GraphLasso> streett_nonempty(const Automaton& s) {
  const auto* cond = std::get_if<RabinCondition>(&s.acceptance());
  if (cond == nullptr || !cond->is_streett()) {
    throw DomainError("streett_nonempty needs an automaton with a Streett condition");
  }
  return streett_lasso(s.graph(), cond->pairs());
}

ColourLayer own_layer(const TransitionGraph& g) {
  std::vector<ColourSet> c;
  c.reserve(g.num_edges());
  for (const Edge& e : g.edges()) c.push_back(e.colours);
  return {g.colours(), std::move(c)};
}

ColourSet Product::lift(std::size_t side, std::size_t layer, ColourSet s) const {
  return ColourSet(s.bits() << offsets.at(side).at(layer));
}

StreettTerm Product::lift(std::size_t side, std::size_t layer, std::span<const RabinPair> term) const {
  StreettTerm out;
  for (const RabinPair& p : term) out.push_back({lift(side, layer, p.green), lift(side, layer, p.red)});
  return out;
}

Lasso Product::project(const Lasso& lasso, std::size_t side) const {
  auto map = [&](const std::vector<LetterId>& w) {
    std::vector<LetterId> out;
    for (LetterId a : w) {
      if (mode == ProductMode::synchronous) {
        out.push_back(a);
      } else {
        out.push_back(side == 0 ? static_cast<LetterId>(a / letters_of_second)
                                : static_cast<LetterId>(a % letters_of_second));
      }
    }
    return out;
  };
  return {map(lasso.prefix), map(lasso.period)};
}

Product build_product(const ProductSide& first, const ProductSide& second, ProductMode mode) {
  const ProductSide* sides[2] = {&first, &second};
  for (const ProductSide* s : sides) {
    if (s->graph == nullptr) throw DomainError("product side without a graph");
    require_deterministic(*s->graph, "build_product");
    for (const ColourLayer& l : s->layers) {
      if (l.edge_colours.size() != s->graph->num_edges()) {
        throw DomainError("a colour layer needs one set per edge");
      }
    }
  }
  const TransitionGraph& g1 = *first.graph;
  const TransitionGraph& g2 = *second.graph;
  if (mode == ProductMode::synchronous && g1.letters() != g2.letters()) {
    throw DomainError("synchronous products need identical letters");
  }
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> offsets(2);
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t l = 0; l < sides[s]->layers.size(); ++l) {
      offsets[s].push_back(names.size());
      for (const auto& c : sides[s]->layers[l].alphabet.names()) {
        names.push_back(std::to_string(s) + "." + std::to_string(l) + ":" + c);
      }
    }
  }
  std::optional<ColourIndex> sink[2];
  for (std::size_t s = 0; s < 2; ++s) {
    if (sides[s]->complete) {
      sink[s] = static_cast<ColourIndex>(names.size());
      names.push_back("sink" + std::to_string(s));
    }
  }

  std::vector<std::string> letters;
  std::size_t l2 = g2.num_letters();
  if (mode == ProductMode::synchronous) {
    letters = g1.letters();
  } else {
    for (const auto& a : g1.letters()) {
      for (const auto& b : g2.letters()) letters.push_back("(" + a + "," + b + ")");
    }
  }

  const StateId sink1 = static_cast<StateId>(g1.num_states());
  const StateId sink2 = static_cast<StateId>(g2.num_states());
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> states;
  std::vector<Edge> edges;
  std::vector<std::array<EdgeId, 2>> origins;
  std::deque<StateId> queue;
  auto intern = [&](StateId a, StateId b) {
    auto [it, inserted] = ids.emplace(std::make_pair(a, b), static_cast<StateId>(states.size()));
    if (inserted) {
      states.emplace_back(a, b);
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern(g1.initial(), g2.initial());
  // Resolves one side's move: (target, colours, component edge), or nullopt.
  struct Move {
    StateId target;
    ColourSet colours;
    EdgeId edge;
  };
  auto move = [&](std::size_t s, StateId q, LetterId a) -> std::optional<Move> {
    const TransitionGraph& g = *sides[s]->graph;
    const StateId sink_state = s == 0 ? sink1 : sink2;
    if (q != sink_state) {
      if (auto e = g.successor(q, a)) {
        ColourSet c;
        for (std::size_t l = 0; l < sides[s]->layers.size(); ++l) {
          c |= ColourSet(sides[s]->layers[l].edge_colours[*e].bits() << offsets[s][l]);
        }
        return Move{g.edge(*e).dst, c, *e};
      }
    }
    if (!sides[s]->complete) return std::nullopt;
    return Move{sink_state, ColourSet::singleton(*sink[s]), kNoEdge};
  };
  while (!queue.empty()) {
    const StateId p = queue.front();
    queue.pop_front();
    const auto [q1, q2] = states[p];
    for (LetterId a = 0; a < letters.size(); ++a) {
      const LetterId a1 = mode == ProductMode::synchronous ? a : static_cast<LetterId>(a / l2);
      const LetterId a2 = mode == ProductMode::synchronous ? a : static_cast<LetterId>(a % l2);
      auto m1 = move(0, q1, a1);
      if (!m1) continue;
      auto m2 = move(1, q2, a2);
      if (!m2) continue;
      const StateId d = intern(m1->target, m2->target);
      edges.push_back({p, a, d, m1->colours | m2->colours});
      origins.push_back({m1->edge, m2->edge});
    }
  }
  if (std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.colours.empty(); })) {
    const auto neutral = static_cast<ColourIndex>(names.size());
    names.push_back("neutral");
    for (Edge& e : edges) {
      if (e.colours.empty()) e.colours.insert(neutral);
    }
  }
  if (names.size() > kMaxColours) {
    throw DomainError("product needs " + std::to_string(names.size()) + " colours, more than 64");
  }
  const std::size_t n = states.size();
  std::map<std::pair<StateId, LetterId>, std::array<EdgeId, 2>> origin_of;
  for (std::size_t i = 0; i < edges.size(); ++i) origin_of[{edges[i].src, edges[i].letter}] = origins[i];
  Product out{TransitionGraph(n, 0, std::move(letters), ColourAlphabet(std::move(names)),
                              std::move(edges)),
              mode, std::move(states), std::move(offsets), {sink[0], sink[1]}, l2, {}};
  for (const Edge& e : out.graph.edges()) out.origin.push_back(origin_of.at({e.src, e.letter}));
  return out;
}

Equivalence equivalent_deterministic(const Automaton& a1, const Automaton& a2) {
  require_deterministic(a1.graph(), "equivalent_deterministic");
  require_deterministic(a2.graph(), "equivalent_deterministic");
  if (a1.graph().letters() != a2.graph().letters()) {
    throw DomainError("equivalence needs automata over the same letters");
  }
  ProductSide s1{&a1.graph(), {own_layer(a1.graph())}, true};
  ProductSide s2{&a2.graph(), {own_layer(a2.graph())}, true};
  Product prod = build_product(s1, s2, ProductMode::synchronous);
  const ColourSet everything = prod.graph.colours().full();

  auto side_terms = [&](const Automaton& a, std::size_t side, bool accepting) {
    std::vector<StreettTerm> out;
    const ColourSet sink = ColourSet::singleton(*prod.sink[side]);
    for (const StreettTerm& t : acceptance_terms(a.acceptance(), accepting)) {
      StreettTerm lifted = prod.lift(side, 0, t);
      if (accepting) lifted.push_back({sink, ColourSet()});
      out.push_back(std::move(lifted));
    }
    if (!accepting) out.push_back({{everything, sink}});
    return out;
  };
  const Automaton* autos[2] = {&a1, &a2};
  for (std::size_t acc_side = 0; acc_side < 2; ++acc_side) {
    const std::size_t rej_side = 1 - acc_side;
    const auto acc_terms = side_terms(*autos[acc_side], acc_side, true);
    const auto rej_terms = side_terms(*autos[rej_side], rej_side, false);
    for (const StreettTerm& ta : acc_terms) {
      for (const StreettTerm& tr : rej_terms) {
        StreettTerm both = ta;
        both.insert(both.end(), tr.begin(), tr.end());
        if (auto l = streett_lasso(prod.graph, both)) {
          return {false, l->word, acc_side == 0};
        }
      }
    }
  }
  return {};
}

}  // namespace acdkit
