#include "doctest.h"

#include "acdkit/acd.hpp"
#include "acdkit/error.hpp"
#include "acdkit/gen.hpp"
#include "acdkit/hoa.hpp"
#include "acdkit/minimise.hpp"
#include "support.hpp"

using namespace acdkit;
using namespace acdkit::testing;

TEST_CASE("even_letters") {
  MullerFamily f2 = even_letters(2);
  CHECK(f2.sets() == std::vector<ColourSet>{ColourSet{0, 1}});
  CHECK(f2.alphabet().names() == std::vector<std::string>{"1", "2"});
  CHECK(even_letters(3).size() == 3);
  CHECK_THROWS_AS(even_letters(0), DomainError);
  Caps caps;
  caps.even_letters = 3;
  CHECK_THROWS_AS(even_letters(4, caps), CapExceeded);
}

TEST_CASE("families and conditions pass their invariants and round-trip validation") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(validate_ztree(build_ztree(chain_family(n))) == chain_family(n));
  for (std::size_t n = 2; n <= 8; ++n) CHECK(validate_ztree(build_ztree(small_dag_family(n))) == small_dag_family(n));
  for (std::size_t m = 2; m <= 5; ++m) CHECK(validate_ztree(build_ztree(even_letters(m))) == even_letters(m));
  CHECK(chain_family(2).sets() == std::vector<ColourSet>{ColourSet{0, 1}, ColourSet{0, 1, 2, 3}});
  CHECK_THROWS_AS(small_dag_family(1), DomainError);
  RabinCondition w = rabin_worst(2);
  CHECK(w.alphabet().names() == std::vector<std::string>{"g1", "r1", "g2", "r2"});
  CHECK(w.pairs()[1] == RabinPair{ColourSet{2}, ColourSet{3}});
}

TEST_CASE("graphs") {
  UndirectedGraph k4 = UndirectedGraph::complete(4);
  CHECK(k4.edges.size() == 6);
  CHECK(k4.connected());
  CHECK(UndirectedGraph::path(3).edges.size() == 2);
  CHECK(UndirectedGraph::cycle(4).edges.size() == 4);
  UndirectedGraph g = UndirectedGraph::parse("# triangle\nu v\nv w\nw u\nx\n");
  CHECK(g.vertices == std::vector<std::string>{"u", "v", "w", "x"});
  CHECK(g.edges.size() == 3);
  CHECK_FALSE(g.connected());
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK_THROWS_AS(UndirectedGraph::parse("u u\n"), Error);
  CHECK_THROWS_AS(UndirectedGraph::parse("u v w\n"), ParseError);
  CHECK(DirectedGraph::cycle(3).edges.size() == 3);
  CHECK(DirectedGraph::parse("a a\n").edges.size() == 1);
}

TEST_CASE("aut_chrom") {
  Automaton k3 = aut_chrom(UndirectedGraph::complete(3));
  CHECK(k3.graph().num_states() == 7);
  CHECK(k3.graph().num_edges() == 13);
  CHECK(k3.graph().is_deterministic());
  CHECK_FALSE(k3.graph().is_complete());
  CHECK(aut_chrom(UndirectedGraph::path(2)).graph().num_states() == 4);
  CHECK_THROWS_AS(aut_chrom(UndirectedGraph::parse("a b\nc d\n")), DomainError);

  // Pseudo-paths stabilising around vertex 1 are accepted, a walk around
  // the triangle is not.
  const TransitionGraph& g = k3.graph();
  const LetterId v1 = g.letter("1"), v2 = g.letter("2"), v3 = g.letter("3");
  const LetterId e12 = g.letter("1-2"), e13 = g.letter("1-3"), e23 = g.letter("2-3");
  std::vector<LetterId> init{v1};
  CHECK(run_ultimately_periodic(k3, init, std::vector<LetterId>{e12, v1, e13, v1}) == RunVerdict::accepted);
  CHECK(run_ultimately_periodic(k3, init, std::vector<LetterId>{e12, v2, e23, v3, e13, v1}) == RunVerdict::rejected);
  CHECK(run_ultimately_periodic(k3, init, std::vector<LetterId>{e23}) == RunVerdict::no_run);
}

TEST_CASE("aut_clique") {
  UndirectedGraph k3 = UndirectedGraph::complete(3);
  Automaton a3 = aut_clique(k3, 3);
  CHECK(a3.graph().num_states() == 2);
  CHECK(a3.graph().num_letters() == 7);
  CHECK(colour_type_search(a3, 3, false).has_value());
  CHECK_FALSE(colour_type_search(aut_clique(k3, 4), 3, false).has_value());
  CHECK(colour_type_search(aut_clique(UndirectedGraph::path(3), 1), 3, false).has_value());
  CHECK_THROWS_AS(aut_clique(k3, 0), DomainError);
}

TEST_CASE("ham_gh_automaton") {
  GhAutomaton h = ham_gh_automaton(DirectedGraph::cycle(3));
  CHECK(h.graph.num_states() == 6);
  CHECK(h.graph.num_edges() == 6);
  CHECK(h.formula.variables() == h.graph.colours());
}

TEST_CASE("one_state_automaton") {
  Automaton a = one_state_automaton(example_family());
  CHECK(a.graph().num_states() == 1);
  CHECK(a.graph().num_edges() == 3);
  for (const Edge& e : a.graph().edges()) CHECK(e.colours.size() == 1);
}

TEST_CASE("seeded generators are deterministic") {
  CHECK(write_hoa(random_automaton({}, 42)) == write_hoa(random_automaton({}, 42)));
  CHECK(random_family(ColourAlphabet::numbered(5), 0.5, 9) == random_family(ColourAlphabet::numbered(5), 0.5, 9));
  CHECK(random_gh_formula(4, 5, 0.3, 11) == random_gh_formula(4, 5, 0.3, 11));
  CHECK(random_rabin(4, 3, 13) == random_rabin(4, 3, 13));
  CHECK_FALSE(random_family(ColourAlphabet::numbered(5), 0.5, 9) == random_family(ColourAlphabet::numbered(5), 0.5, 10));
  SeededRandom a(1), b(1);
  for (int i = 0; i < 100; ++i) CHECK(a.below(1000) == b.below(1000));
  SeededRandom r(3);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK_FALSE(random_family(ColourAlphabet::numbered(3), 0.05, seed).empty());
  CHECK(random_family(ColourAlphabet::numbered(3), 0.0, 1).empty());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RabinCondition r5 = random_rabin(5, 3, seed);
    for (const RabinPair& p : r5.pairs()) CHECK_FALSE(p.green.intersects(p.red));
    CHECK(random_automaton({}, seed).graph().is_deterministic());
  }
}

TEST_CASE("oracles") {
  CHECK(isomorphic(naive_ztree(even_letters(3)), build_ztree(even_letters(3))));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomAutomatonSizes s;
    s.states = 3;
    s.max_edges = 10;
    Automaton a = random_automaton(s, 100000 + seed);
    CHECK(naive_acd(a) == compute_acd(a));
  }
  CHECK(naive_min_colours(even_letters(4)) == 4);
  CHECK(naive_min_colours(all_nonempty_subsets(ColourAlphabet::numbered(3))) == 1);
  Caps four;
  four.formula_vars = 4;
  CHECK(naive_min_rabin_pairs(parity_to_rabin(ParityCondition(0, 3)), four) == 2);
  CHECK_THROWS_AS(naive_min_rabin_pairs(parity_to_rabin(ParityCondition(0, 3))), CapExceeded);
  Caps caps;
  caps.oracle_colours = 2;
  CHECK_THROWS_AS(naive_ztree(even_letters(3), caps), CapExceeded);
  CHECK_THROWS_AS(naive_gh_min(random_gh_formula(4, 2, 0.0, 1)), CapExceeded);
}
