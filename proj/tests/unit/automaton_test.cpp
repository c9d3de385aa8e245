#include "doctest.h"

#include "acdkit/cycles.hpp"
#include "acdkit/error.hpp"
#include "acdkit/gen.hpp"
#include "acdkit/hoa.hpp"
#include "acdkit/streett.hpp"
#include "support.hpp"

using namespace acdkit;
using namespace acdkit::testing;

namespace {

/// Graph with letters "a", "b", ... and colours "0".."c-1"; edges given as
/// (src, letter, dst, colours).
TransitionGraph graph(std::size_t states, std::size_t letters, std::size_t colours, std::vector<Edge> edges) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < letters; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return TransitionGraph(states, 0, names, ColourAlphabet::numbered(colours), std::move(edges));
}

Edge edge(StateId s, LetterId a, StateId d, ColourSet c) { return Edge{s, a, d, c}; }

std::vector<std::string> cycle_keys(const std::vector<EdgeSet>& cycles) {
  std::vector<std::string> out;
  for (const auto& c : cycles) {
    std::string s;
    for (auto e : to_indices(c)) s += std::to_string(e) + ".";
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("transition graph construction") {
  TransitionGraph g = graph(2, 1, 2, {edge(1, 0, 0, ColourSet{0}), edge(0, 0, 1, ColourSet{1}), edge(0, 0, 1, ColourSet{0})});
  CHECK(g.num_edges() == 2);
  CHECK(g.edge(0).src == 0);
  CHECK(g.edge(0).colours == ColourSet{0, 1});
  CHECK(g.is_deterministic());
  CHECK(g.is_complete());
  CHECK_THROWS_AS(graph(1, 1, 1, {edge(0, 0, 0, ColourSet())}), DomainError);
  CHECK_THROWS_AS(graph(1, 1, 1, {edge(0, 0, 2, ColourSet{0})}), DomainError);
  CHECK_THROWS_AS(graph(1, 1, 1, {edge(0, 0, 0, ColourSet{1})}), DomainError);
  CHECK_THROWS_AS(graph(0, 1, 1, {}), DomainError);
  TransitionGraph nd = graph(2, 1, 1, {edge(0, 0, 0, ColourSet{0}), edge(0, 0, 1, ColourSet{0})});
  CHECK_FALSE(nd.is_deterministic());
  CHECK_THROWS_AS(Automaton(nd, ParityCondition(0, 1)), DomainError);
}

TEST_CASE("scc_decompose") {
  SUBCASE("two states in both directions") {
    TransitionGraph g = graph(2, 1, 1, {edge(0, 0, 1, ColourSet{0}), edge(1, 0, 0, ColourSet{0})});
    SccDecomposition d = scc_decompose(g);
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].count() == 2);
    CHECK(d.transient.empty());
  }
  SUBCASE("acyclic graph") {
    TransitionGraph g = graph(3, 1, 1, {edge(0, 0, 1, ColourSet{0}), edge(1, 0, 2, ColourSet{0})});
    SccDecomposition d = scc_decompose(g);
    CHECK(d.components.empty());
    CHECK(d.transient.size() == 3);
  }
  SUBCASE("aut_chrom(K3)") {
    Automaton a = aut_chrom(UndirectedGraph::complete(3));
    CHECK(a.graph().num_states() == 7);
    CHECK(a.graph().num_edges() == 13);
    SccDecomposition d = scc_decompose(a.graph());
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].count() == 12);
    CHECK(d.recurrent.size() == 6);
    CHECK(d.transient == std::vector<StateId>{a.graph().initial()});
  }
}

TEST_CASE("SCCs are the maximal cycles, unions of cycles sharing a state are cycles") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomAutomatonSizes s;
    s.states = 4;
    s.letters = 3;
    s.max_edges = 12;
    Automaton a = random_automaton(s, 800 + seed);
    const TransitionGraph& g = a.graph();
    std::vector<EdgeSet> cycles = enumerate_cycles(g);
    std::vector<EdgeSet> maximal = maximal_edge_sets(cycles);
    std::vector<EdgeSet> sccs = scc_decompose(g).components;
    std::sort(sccs.begin(), sccs.end(), cycle_order_less);
    CHECK(cycle_keys(maximal) == cycle_keys(sccs));
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      for (std::size_t j = i + 1; j < cycles.size(); ++j) {
        if (g.states_of(cycles[i]).intersects(g.states_of(cycles[j]))) {
          CHECK(is_cycle(g, cycles[i] | cycles[j]));
        }
      }
    }
  }
}

TEST_CASE("enumerate_cycles") {
  CHECK(enumerate_cycles(graph(1, 1, 1, {edge(0, 0, 0, ColourSet{0})})).size() == 1);
  CHECK(enumerate_cycles(graph(1, 2, 1, {edge(0, 0, 0, ColourSet{0}), edge(0, 1, 0, ColourSet{0})})).size() == 3);
  TransitionGraph tri = graph(3, 1, 1, {edge(0, 0, 1, ColourSet{0}), edge(1, 0, 2, ColourSet{0}), edge(2, 0, 0, ColourSet{0})});
  CHECK(enumerate_cycles(tri).size() == 1);
  Caps caps;
  caps.cycle_edges = 2;
  CHECK_THROWS_AS(enumerate_cycles(tri, caps), CapExceeded);
}

TEST_CASE("cycle_accepting and runs on the example automaton") {
  Automaton a = one_state_automaton(example_family());
  const TransitionGraph& g = a.graph();
  const LetterId alpha = g.letter("α"), beta = g.letter("β"), gamma = g.letter("γ");
  EdgeSet only_beta = g.no_edges();
  only_beta.set(*g.successor(0, beta));
  CHECK(cycle_accepting(a, only_beta));
  EdgeSet alpha_beta = only_beta;
  alpha_beta.set(*g.successor(0, alpha));
  CHECK_FALSE(cycle_accepting(a, alpha_beta));
  CHECK_THROWS_AS(cycle_accepting(a, g.no_edges()), DomainError);

  std::vector<LetterId> empty;
  CHECK(run_ultimately_periodic(a, empty, std::vector<LetterId>{beta}) == RunVerdict::accepted);
  CHECK(run_ultimately_periodic(a, std::vector<LetterId>{beta}, std::vector<LetterId>{alpha, beta, gamma}) ==
        RunVerdict::rejected);
  CHECK_THROWS_AS(run_ultimately_periodic(a, empty, empty), DomainError);

  TransitionGraph partial = graph(2, 2, 1, {edge(0, 0, 1, ColourSet{0}), edge(1, 0, 1, ColourSet{0})});
  Automaton p(partial, ParityCondition(0, 0));
  CHECK(run_ultimately_periodic(p, empty, std::vector<LetterId>{1}) == RunVerdict::no_run);
  CHECK(run_ultimately_periodic(p, empty, std::vector<LetterId>{0}) == RunVerdict::accepted);
}

TEST_CASE("rejecting self-loop") {
  Automaton a(graph(1, 1, 2, {edge(0, 0, 0, ColourSet{1})}), ParityCondition(0, 1));
  EdgeSet loop = a.graph().all_edges();
  CHECK_FALSE(cycle_accepting(a, loop));
}

TEST_CASE("format_lasso") {
  CHECK(format_lasso(Lasso{{}, {0, 1}}, {"a", "b"}) == "ε | a b");
  CHECK(format_lasso(Lasso{{1}, {0}}, {"a", "b"}) == "b | a");
}

TEST_CASE("HOA parsing") {
  SUBCASE("Buchi") {
    Automaton a = parse_hoa(R"(HOA: v1
States: 1
Start: 0
AP: 1 "p"
acc-name: Buchi
Acceptance: 1 Inf(0)
--BODY--
State: 0
[0] 0 {0}
[!0] 0
--END--
)");
    REQUIRE(std::holds_alternative<ParityCondition>(a.acceptance()));
    CHECK(std::get<ParityCondition>(a.acceptance()) == ParityCondition(0, 1));
    CHECK(a.graph().num_edges() == 2);
    CHECK(a.graph().num_letters() == 2);
  }
  SUBCASE("parity with 3 priorities") {
    Automaton a = parse_hoa(R"(HOA: v1
States: 1
Start: 0
AP: 0
acc-name: parity min even 3
Acceptance: 3 Inf(0) | (Fin(1) & Inf(2))
--BODY--
State: 0
[t] 0 {0 2}
--END--
)");
    CHECK(std::get<ParityCondition>(a.acceptance()) == ParityCondition(0, 2));
  }
  SUBCASE("Emerson-Lei without acc-name") {
    CHECK_THROWS_AS(parse_hoa(R"(HOA: v1
States: 1
Start: 0
AP: 0
Acceptance: 3 Fin(0)&Inf(1) | Inf(2)
--BODY--
State: 0
[t] 0 {0}
--END--
)"),
                    UnsupportedFeature);
  }
  SUBCASE("syntax error carries a position") {
    try {
      parse_hoa("HOA: v1\nStates: x\n");
      FAIL("accepted");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
}

TEST_CASE("HOA round trips") {
  std::vector<Automaton> automata;
  automata.push_back(one_state_automaton(example_family()));
  automata.push_back(one_state_automaton(ParityCondition(0, 3)));
  automata.push_back(one_state_automaton(rabin_worst(2)));
  automata.push_back(one_state_automaton(rabin_worst(2).with_semantics(PairSemantics::streett)));
  automata.push_back(one_state_automaton(build_ztree(even_letters(3))));
  automata.push_back(one_state_automaton(build_zdag(even_letters(3))));
  automata.push_back(aut_chrom(UndirectedGraph::complete(3)));
  for (std::uint64_t seed = 0; seed < 10; ++seed) automata.push_back(random_automaton({}, 900 + seed));
  for (const auto& a : automata) {
    Automaton b = parse_hoa(write_hoa(a), hoa_sidecar(a));
    CHECK(b == a);
  }
}

TEST_CASE("Streett emptiness") {
  TransitionGraph loop = graph(1, 1, 1, {edge(0, 0, 0, ColourSet{0})});
  CHECK(streett_nonempty(Automaton(loop, RabinCondition(loop.colours(), {}, PairSemantics::streett))).has_value());
  CHECK_FALSE(streett_nonempty(Automaton(loop, RabinCondition(loop.colours(), {RabinPair{ColourSet{0}, ColourSet()}},
                                                              PairSemantics::streett)))
                  .has_value());
  CHECK_THROWS_AS(streett_nonempty(Automaton(loop, ParityCondition(0, 0))), DomainError);
}

TEST_CASE("Streett lassos agree with cycle enumeration") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RandomAutomatonSizes s;
    s.states = 1 + seed % 6;
    s.letters = 2;
    s.colours = 4;
    s.max_edges = 12;
    Automaton a = random_automaton(s, 1000 + seed);
    RabinCondition pairs = random_rabin(4, 2, 2000 + seed);
    StreettTerm term = pairs.pairs();
    bool expected = false;
    for (const auto& c : enumerate_reachable_cycles(a.graph())) {
      expected = expected || streett_term_holds(term, a.graph().colours_of(c));
    }
    auto lasso = streett_lasso(a.graph(), term);
    REQUIRE(lasso.has_value() == expected);
    if (lasso) {
      CHECK(is_cycle(a.graph(), lasso->cycle));
      CHECK(streett_term_holds(term, a.graph().colours_of(lasso->cycle)));
    }
  }
}

TEST_CASE("self product sees equal colours on the diagonal") {
  Automaton a = random_automaton({}, 77);
  ProductSide side{&a.graph(), {own_layer(a.graph())}, false};
  Product p = build_product(side, side, ProductMode::synchronous);
  for (const auto& st : p.states) CHECK(st.first == st.second);
}

TEST_CASE("equivalent_deterministic") {
  Automaton a = random_automaton({}, 5);
  CHECK(equivalent_deterministic(a, a).equivalent);

  ColourAlphabet ab({"a", "b"});
  Automaton one = one_state_automaton(MullerFamily(ab, {ColourSet{0}}));
  Automaton two = one_state_automaton(MullerFamily(ab, {ColourSet{0}, ColourSet{1}}));
  Equivalence e = equivalent_deterministic(one, two);
  REQUIRE_FALSE(e.equivalent);
  REQUIRE(e.witness.has_value());
  CHECK((run_ultimately_periodic(one, e.witness->prefix, e.witness->period) == RunVerdict::accepted) ==
        e.accepted_by_first);
  CHECK((run_ultimately_periodic(two, e.witness->prefix, e.witness->period) == RunVerdict::accepted) !=
        e.accepted_by_first);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Automaton m = random_automaton({}, 3000 + seed);
    RabinCondition r = random_rabin(3, 2, 4000 + seed);
    Automaton as_rabin(m.graph(), r);
    Automaton as_family(m.graph(), condition_to_family(r));
    CHECK(equivalent_deterministic(as_rabin, as_family).equivalent);
  }
}
