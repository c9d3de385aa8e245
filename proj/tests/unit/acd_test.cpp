#include "doctest.h"

#include "acdkit/acd.hpp"
#include "acdkit/cycles.hpp"
#include "acdkit/error.hpp"
#include "acdkit/gen.hpp"
#include "acdkit/streett.hpp"
#include "support.hpp"

using namespace acdkit;
using namespace acdkit::testing;

namespace {

Automaton random_small(std::uint64_t seed, std::size_t max_edges = 12) {
  SeededRandom rng(seed);
  RandomAutomatonSizes s;
  s.states = 1 + rng.below(5);
  s.letters = 1 + rng.below(3);
  s.colours = 1 + rng.below(4);
  s.max_edges = max_edges;
  return random_automaton(s, 10000 + seed);
}

}  // namespace

TEST_CASE("children of the root of the example automaton") {
  MullerFamily f = example_family();
  Automaton a = one_state_automaton(f);
  const TransitionGraph& g = a.graph();
  std::vector<EdgeSet> kids = compute_children(g, build_zdag(f), g.all_edges());
  REQUIRE(kids.size() == 2);
  std::set<std::uint64_t> colours;
  for (const auto& k : kids) colours.insert(g.colours_of(k).bits());
  CHECK(colours == std::set<std::uint64_t>{f.alphabet().parse_set({"γ", "α"}).bits(),
                                           f.alphabet().parse_set({"γ", "β"}).bits()});
}

TEST_CASE("a round node with only accepting subcycles is a leaf") {
  ColourAlphabet g = ColourAlphabet::numbered(2);
  Automaton a = one_state_automaton(all_nonempty_subsets(g));
  CHECK(compute_children(a.graph(), acceptance_zdag(a.acceptance()), a.graph().all_edges()).empty());
}

TEST_CASE("ACD of aut_chrom(K3)") {
  Automaton a = aut_chrom(UndirectedGraph::complete(3));
  AcdDag dag = compute_acd_dag(a);
  REQUIRE(dag.roots.size() == 1);
  const AcdDagNode& root = dag.nodes[dag.roots[0]];
  CHECK(root.polarity == Polarity::square);
  CHECK(root.cycle.count() == 12);
  REQUIRE(root.children.size() == 3);
  for (std::size_t c : root.children) {
    const AcdDagNode& n = dag.nodes[c];
    CHECK(n.polarity == Polarity::round);
    CHECK(n.children.empty());
    CHECK(n.cycle.count() == 4);
    CHECK(n.states.count() == 3);
  }
  CHECK(dag.size() == 4);
  CHECK(dag.max_height() == 2);
  CHECK(naive_acd(a) == compute_acd(a));

  AcdForest forest = compute_acd(a);
  const std::size_t edge_state = 3;  // the state of the edge {1,2}
  LocalView v = local_view(forest, edge_state);
  REQUIRE(v.size() == 3);
  CHECK(v.nodes[0] == forest.roots[0]);
  CHECK(local_view(forest, a.graph().initial()).empty());
}

TEST_CASE("ACD shape of aut_chrom: square root, one round leaf per vertex") {
  for (const UndirectedGraph& g : {UndirectedGraph::complete(3), UndirectedGraph::complete(4), UndirectedGraph::path(3)}) {
    Automaton a = aut_chrom(g);
    AcdForest forest = compute_acd(a);
    REQUIRE(forest.roots.size() == 1);
    const AcdNode& root = forest.nodes[forest.roots[0]];
    CHECK(root.polarity == Polarity::square);
    CHECK(root.children.size() == g.vertices.size());
    for (std::size_t c : root.children) {
      CHECK(forest.nodes[c].polarity == Polarity::round);
      CHECK(forest.nodes[c].children.empty());
    }
  }
}

TEST_CASE("automaton without cycles") {
  std::vector<Edge> edges{Edge{0, 0, 1, ColourSet{0}}};
  Automaton a(TransitionGraph(2, 0, {"a"}, ColourAlphabet::numbered(1), edges), ParityCondition(0, 0));
  CHECK(compute_acd_dag(a).size() == 0);
  CHECK(compute_acd(a).size() == 0);
  ParityIndexReport r = parity_index(a);
  CHECK(r.index == 1);
  CHECK(r.empty_forest);
  CHECK_FALSE(r.notes.empty());
  CHECK(paritize(a).parity.graph().num_states() == 2);
}

TEST_CASE("one-state automaton: ACD is the Zielonka tree, ACD-DAG the Zielonka DAG") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SeededRandom rng(seed);
    ColourAlphabet g = ColourAlphabet::numbered(1 + rng.below(6));
    MullerFamily f = random_family(g, rng.uniform(), 20000 + seed);
    Automaton a = one_state_automaton(f);
    AcdForest forest = compute_acd(a);
    LocalView all = local_view(forest, 0);
    CHECK(all.size() == forest.size());
    CHECK(isomorphic(acd_tree_colours(forest, 0, g), build_ztree(f)));
    CHECK(dag_signature(acd_dag_colours(compute_acd_dag(a), 0, g)) == dag_signature(build_zdag(f)));
  }
}

TEST_CASE("ACD agrees with the cycle-enumeration oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Automaton a = random_small(seed);
    REQUIRE(compute_acd(a) == naive_acd(a));
  }
}

TEST_CASE("ACD invariants on random automata") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Automaton a = random_small(100 + seed, 40);
    AcdDag dag = compute_acd_dag(a);
    AcdForest forest = unfold_acd(dag);
    CHECK(forest == compute_acd(a));
    CHECK(fold_acd(forest) == dag);
    const ZDag zd = acceptance_zdag(a.acceptance());
    const std::size_t q = a.graph().num_states();
    CHECK(forest.size() <= q * unfold_zdag(zd).size());
    CHECK(dag.size() <= q * zd.size());
    for (const AcdNode& n : forest.nodes) {
      CHECK(is_cycle(a.graph(), n.cycle));
      CHECK(n.polarity == polarity_of(cycle_accepting(a, n.cycle)));
      if (n.parent == kNoNode) continue;
      const AcdNode& p = forest.nodes[n.parent];
      CHECK(n.cycle.is_proper_subset_of(p.cycle));
      CHECK(n.polarity == flip(p.polarity));
    }
    for (StateId s = 0; s < q; ++s) {
      LocalView v = local_view(forest, s);
      CHECK(v.size() <= unfold_zdag(zd).size());
      for (std::size_t i = 1; i < v.size(); ++i) {
        const std::size_t parent = forest.nodes[v.nodes[i]].parent;
        CHECK(std::find(v.nodes.begin(), v.nodes.end(), parent) != v.nodes.end());
      }
    }
  }
}

TEST_CASE("typeness") {
  Typeness k3 = typeness(aut_chrom(UndirectedGraph::complete(3)));
  CHECK(k3.rabin);
  CHECK_FALSE(k3.streett);
  CHECK_FALSE(k3.parity);
  CHECK(typeness(one_state_automaton(even_letters(4))) == Typeness{});
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Automaton m = random_automaton({}, 30000 + seed);
    SeededRandom rng(seed);
    ParityCondition par(0, 3);
    std::vector<ColourSet> priorities;
    for (std::size_t e = 0; e < m.graph().num_edges(); ++e) {
      priorities.push_back(ColourSet::singleton(static_cast<ColourIndex>(rng.below(4))));
    }
    CHECK(typeness(Automaton(m.graph().recoloured(par.alphabet(), priorities), par)).parity);
  }
}

TEST_CASE("parity index") {
  for (int d = 1; d <= 5; ++d) {
    CHECK(parity_index(one_state_automaton(ParityCondition(0, d - 1))).index == static_cast<std::size_t>(d));
  }
  CHECK(parity_index(aut_chrom(UndirectedGraph::complete(3))).index == 2);
}

TEST_CASE("paritize") {
  CHECK(paritize(one_state_automaton(example_family())).parity.graph().num_states() == 3);
  CHECK(paritize(one_state_automaton(even_letters(3))).parity.graph().num_states() == 6);
  CHECK_THROWS_AS(paritize(Automaton(TransitionGraph(2, 0, {"a"}, ColourAlphabet::numbered(1),
                                                     {Edge{0, 0, 0, ColourSet{0}}, Edge{0, 0, 1, ColourSet{0}}}),
                                     ParityCondition(0, 0))),
                  DomainError);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RandomAutomatonSizes s;
    s.states = 5;
    s.colours = 4;
    Automaton a = random_automaton(s, 40000 + seed);
    AcdForest forest = compute_acd(a);
    Paritization p = paritize(a, forest);
    std::size_t expected = 0;
    for (StateId q = 0; q < a.graph().num_states(); ++q) {
      std::size_t leaves = 0;
      for (std::size_t n : local_view(forest, q).nodes) {
        bool leaf_here = true;
        for (std::size_t c : forest.nodes[n].children) leaf_here = leaf_here && !forest.nodes[c].states.test(q);
        leaves += leaf_here ? 1 : 0;
      }
      expected += std::max<std::size_t>(1, leaves);
    }
    CHECK(p.parity.graph().num_states() == expected);
    CHECK(p.parity.graph().is_deterministic());
    CHECK(equivalent_deterministic(a, p.parity).equivalent);
    for (const Edge& e : p.parity.graph().edges()) {
      CHECK(a.graph().successor(p.state_of[e.src], e.letter).has_value());
    }
  }
}

TEST_CASE("paritized cycles have the acceptance of their projection") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomAutomatonSizes s;
    s.states = 3;
    s.letters = 2;
    s.colours = 3;
    Automaton a = random_automaton(s, 50000 + seed);
    Paritization p = paritize(a);
    if (p.parity.graph().num_edges() > 14) continue;
    for (const auto& cycle : enumerate_cycles(p.parity.graph())) {
      EdgeSet projected = a.graph().no_edges();
      for (auto e : to_indices(cycle)) {
        const Edge& pe = p.parity.graph().edge(e);
        projected.set(*a.graph().successor(p.state_of[pe.src], pe.letter));
      }
      CHECK(cycle_accepting(p.parity, cycle) == cycle_accepting(a, projected));
    }
  }
}

TEST_CASE("ACD exports") {
  Automaton a = aut_chrom(UndirectedGraph::complete(3));
  AcdForest forest = compute_acd(a);
  nlohmann::json j = acd_to_json(forest, a.graph());
  CHECK(j.dump().find("square") != std::string::npos);
  CHECK(acd_dag_to_json(compute_acd_dag(a), a.graph()).dump().find("round") != std::string::npos);
  CHECK(acd_to_dot(forest, a.graph()).find("digraph") != std::string::npos);
}
