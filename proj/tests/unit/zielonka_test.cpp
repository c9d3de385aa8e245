#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "acdkit/error.hpp"
#include "acdkit/gen.hpp"
#include "acdkit/zielonka.hpp"
#include "acdkit/zielonka_io.hpp"
#include "support.hpp"

using namespace acdkit;
using namespace acdkit::testing;

namespace {

ZNode znode(ColourSet label, Polarity p, std::vector<std::size_t> children = {}) {
  ZNode n;
  n.label = label;
  n.polarity = p;
  n.children = std::move(children);
  return n;
}

TreeViolation violation_of(const ZTree& t) {
  try {
    validate_ztree(t);
  } catch (const TreeValidationError& e) {
    return e.kind();
  }
  FAIL("tree was accepted");
  return TreeViolation::structure;
}

MullerFamily parity_family(int lo, int hi) { return condition_to_family(ParityCondition(lo, hi)); }

}  // namespace

TEST_CASE("Zielonka tree of the example family") {
  MullerFamily f = example_family();
  const ColourAlphabet& g = f.alphabet();
  ZTree t = build_ztree(f);
  CHECK(t.size() == 6);
  CHECK(t.leaf_count() == 3);
  CHECK(t.height() == 3);
  const ZNode& root = t.node(0);
  CHECK(root.label == g.full());
  CHECK(root.polarity == Polarity::square);
  REQUIRE(root.children.size() == 2);
  std::set<std::uint64_t> kids;
  for (std::size_t c : root.children) {
    CHECK(t.node(c).polarity == Polarity::round);
    kids.insert(t.node(c).label.bits());
  }
  CHECK(kids == std::set<std::uint64_t>{g.parse_set({"γ", "α"}).bits(), g.parse_set({"γ", "β"}).bits()});
  std::multiset<std::uint64_t> leaves;
  for (std::size_t l : t.leaves()) leaves.insert(t.node(l).label.bits());
  CHECK(leaves == std::multiset<std::uint64_t>{g.parse_set({"γ"}).bits(), g.parse_set({"γ"}).bits(),
                                                g.parse_set({"α"}).bits()});
  CHECK(t == naive_ztree(f));
}

TEST_CASE("Zielonka tree of P+(Γ) is a single round node") {
  ZTree t = build_ztree(all_nonempty_subsets(ColourAlphabet::numbered(4)));
  CHECK(t.size() == 1);
  CHECK(t.node(0).polarity == Polarity::round);
}

TEST_CASE("Zielonka tree of even_letters(3)") {
  ZTree t = build_ztree(even_letters(3));
  CHECK(t.size() == 10);
  CHECK(t.leaf_count() == 6);
  CHECK(t.height() == 3);
  CHECK(t == naive_ztree(even_letters(3)));
}

TEST_CASE("build_ztree agrees with the subset-enumeration oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    SeededRandom rng(seed);
    MullerFamily f = random_family(ColourAlphabet::numbered(1 + rng.below(6)), rng.uniform(), 100 + seed);
    REQUIRE(build_ztree(f) == naive_ztree(f));
  }
}

TEST_CASE("size bounds and child-union flip on random families") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    SeededRandom rng(seed);
    const std::size_t m = 1 + rng.below(6);
    MullerFamily f = random_family(ColourAlphabet::numbered(m), rng.uniform(), 200 + seed);
    ZTree t = build_ztree(f);
    std::size_t bound = 0, term = 1;
    for (std::size_t k = 0; k < m; ++k) {
      bound += term;
      term *= m - k;
    }
    CHECK(t.height() <= m);
    CHECK(t.leaf_count() <= factorial(m));
    CHECK(t.size() <= bound);
    const double counting = std::pow(3.0, (f.size() + 1) / 3.0) * std::pow(4.0, m) * m;
    CHECK(static_cast<double>(t.size()) <= counting);
    for (const ZNode& n : t.nodes()) {
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        for (std::size_t j = i + 1; j < n.children.size(); ++j) {
          ColourSet u = t.node(n.children[i]).label | t.node(n.children[j]).label;
          CHECK(ztree_membership(t, u) == (n.polarity == Polarity::round));
        }
      }
    }
  }
}

TEST_CASE("validate_ztree") {
  SUBCASE("round trip on built trees") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      MullerFamily f = random_family(ColourAlphabet::numbered(4), 0.4, 300 + seed);
      CHECK(validate_ztree(build_ztree(f)) == f);
    }
    CHECK(validate_ztree(build_ztree(example_family())) == example_family());
  }
  SUBCASE("alternation") {
    ColourAlphabet g({"a", "b"});
    ZTree t(g, {znode(ColourSet{0, 1}, Polarity::round, {1}), znode(ColourSet{0}, Polarity::round)});
    CHECK(violation_of(t) == TreeViolation::alternation);
  }
  SUBCASE("round/square intersection both accepted and rejected") {
    ColourAlphabet g({"a", "b", "c"});
    ZTree t(g, {znode(ColourSet{0, 1, 2}, Polarity::square, {1, 3}), znode(ColourSet{0, 1}, Polarity::round, {2}),
                znode(ColourSet{1}, Polarity::square), znode(ColourSet{1, 2}, Polarity::round)});
    CHECK(violation_of(t) == TreeViolation::inconsistent);
  }
  SUBCASE("comparable siblings") {
    ColourAlphabet g({"a", "b", "c"});
    ZTree t(g, {znode(ColourSet{0, 1, 2}, Polarity::square, {1, 2}), znode(ColourSet{0, 1}, Polarity::round),
                znode(ColourSet{0}, Polarity::round)});
    CHECK(violation_of(t) == TreeViolation::incomparable);
  }
  SUBCASE("child not a subset") {
    ColourAlphabet g({"a", "b"});
    ZTree t(g, {znode(ColourSet{0}, Polarity::square, {1}), znode(ColourSet{0, 1}, Polarity::round)});
    CHECK_THROWS_AS(validate_ztree(t), TreeValidationError);
  }
  SUBCASE("malformed links") {
    ColourAlphabet g({"a"});
    CHECK_THROWS_AS(ZTree(g, {znode(ColourSet{0}, Polarity::round, {1})}), TreeValidationError);
    CHECK_THROWS_AS(ZTree(g, {}), TreeValidationError);
  }
}

TEST_CASE("membership") {
  MullerFamily f = example_family();
  ZTree t = build_ztree(f);
  ZDag d = build_zdag(f);
  CHECK(ztree_membership(t, f.alphabet().parse_set({"β"})));
  CHECK(ztree_membership(t, f.alphabet().full()) == (t.node(0).polarity == Polarity::round));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    MullerFamily r = random_family(ColourAlphabet::numbered(8), 0.3, 400 + seed);
    ZTree rt = build_ztree(r);
    ZDag rd = build_zdag(r);
    for (std::uint64_t c = 1; c < 256; ++c) {
      REQUIRE(ztree_membership(rt, ColourSet(c)) == r.contains(ColourSet(c)));
      REQUIRE(zdag_membership(rd, ColourSet(c)) == r.contains(ColourSet(c)));
    }
  }
  CHECK(zdag_membership(d, f.alphabet().parse_set({"γ", "α"})));
}

TEST_CASE("folding and unfolding") {
  ZTree t = build_ztree(example_family());
  ZDag d = fold_to_zdag(t);
  CHECK(d.size() == 5);
  CHECK(d == build_zdag(example_family()));
  CHECK(unfold_zdag(d) == t);

  ZTree single = build_ztree(all_nonempty_subsets(ColourAlphabet::numbered(2)));
  CHECK(fold_to_zdag(single).size() == 1);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    MullerFamily f = random_family(ColourAlphabet::numbered(5), 0.5, 500 + seed);
    ZTree tree = build_ztree(f);
    ZDag dag = build_zdag(f);
    CHECK(fold_to_zdag(unfold_zdag(dag)) == dag);
    CHECK(isomorphic(unfold_zdag(dag), tree));
    std::set<std::uint64_t> labels;
    for (const ZNode& n : tree.nodes()) labels.insert(n.label.bits());
    std::set<std::uint64_t> dag_labels;
    for (const ZDagNode& n : dag.nodes()) dag_labels.insert(n.label.bits());
    CHECK(labels == dag_labels);
  }
}

TEST_CASE("canonical form and isomorphism") {
  ZTree t = build_ztree(even_letters(4));
  CHECK(canonical_form(t) == t);
  CHECK(isomorphic(t, naive_ztree(even_letters(4))));
  CHECK_FALSE(isomorphic(t, build_ztree(even_letters(3))));
}

TEST_CASE("colour equivalence classes") {
  CHECK(colour_equivalence_classes(build_zdag(all_nonempty_subsets(ColourAlphabet::numbered(4)))).size() == 1);
  CHECK(colour_equivalence_classes(build_zdag(parity_family(0, 2))).size() == 3);
  ColourAlphabet ab({"a", "b"});
  MullerFamily f(ab, {ColourSet{0}, ColourSet{1}, ColourSet{0, 1}});
  CHECK(colour_equivalence_classes(build_zdag(f)).size() == 1);
}

TEST_CASE("minimise_colours") {
  CHECK(minimise_colours(build_zdag(all_nonempty_subsets(ColourAlphabet::numbered(4)))).k() == 1);
  CHECK(minimise_colours(build_zdag(parity_family(0, 2))).k() == 3);
  CHECK(minimise_colours(build_zdag(even_letters(4))).k() == 4);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SeededRandom rng(seed);
    MullerFamily f = random_family(ColourAlphabet::numbered(1 + rng.below(5)), rng.uniform(), 600 + seed);
    ColourMinimisation m = minimise_colours(build_zdag(f));
    REQUIRE(m.quotient.has_value());
    CHECK(m.k() == naive_min_colours(f));
    for (std::uint64_t c = 1; c < (std::uint64_t{1} << f.alphabet().size()); ++c) {
      REQUIRE(f.contains(ColourSet(c)) == m.quotient->contains(m.apply(ColourSet(c))));
    }
  }
}

TEST_CASE("zdag_to_rabin_pairs") {
  SUBCASE("parity [0,1]") {
    RabinCondition r = zdag_to_rabin_pairs(build_zdag(parity_family(0, 1)));
    REQUIRE(r.pairs().size() == 1);
    CHECK(r.pairs()[0] == RabinPair{ColourSet{0}, ColourSet()});
  }
  SUBCASE("rabin_worst round trip") {
    RabinCondition w = rabin_worst(2);
    RabinCondition r = zdag_to_rabin_pairs(build_zdag(condition_to_family(w)));
    CHECK(rabin_language_bits(r) == rabin_language_bits(w));
  }
  SUBCASE("not Rabin type") {
    ColourAlphabet g({"a", "b", "c"});
    MullerFamily f(g, {ColourSet{0}, ColourSet{1}, ColourSet{0, 1, 2}});
    CHECK_THROWS_AS(zdag_to_rabin_pairs(build_zdag(f)), NotRabinType);
  }
  SUBCASE("random Rabin conditions") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      RabinCondition w = random_rabin(5, 3, 700 + seed);
      CHECK(rabin_language_bits(zdag_to_rabin_pairs(zdag_of(w))) == rabin_language_bits(w));
    }
  }
}

TEST_CASE("language_typeness") {
  CHECK(language_typeness(build_zdag(parity_family(0, 3))) == Typeness{true, true, true});
  ColourAlphabet ab({"a", "b"});
  Typeness t = language_typeness(build_zdag(MullerFamily(ab, {ColourSet{0}, ColourSet{1}})));
  CHECK(t.rabin);
  CHECK_FALSE(t.streett);
  CHECK_FALSE(t.parity);
  CHECK(language_typeness(build_zdag(even_letters(4))) == Typeness{});
}

TEST_CASE("worst-case families") {
  CHECK(build_ztree(even_letters(2)).size() == 3);
  CHECK(build_ztree(even_letters(2)).leaf_count() == 2);
  CHECK(build_ztree(even_letters(3)).leaf_count() == 6);
  CHECK(build_ztree(even_letters(4)).size() == 41);
  CHECK_THROWS_AS(even_letters(8), CapExceeded);
  CHECK(build_ztree(chain_family(1)).size() == 3);
  CHECK(build_ztree(chain_family(2)).size() == 11);
  CHECK(build_ztree(chain_family(3)).size() == 35);
  CHECK(build_zdag(small_dag_family(4)).size() == 6);
  CHECK(build_ztree(small_dag_family(4)).size() >= 4);
  CHECK(build_zdag(small_dag_family(6)).size() == 9);
  CHECK(build_zdag(small_dag_family(2)).size() == build_ztree(small_dag_family(2)).size());
  CHECK(build_ztree(condition_to_family(rabin_worst(2))).leaf_count() == 2);
  CHECK(build_ztree(condition_to_family(rabin_worst(3))).leaf_count() == 6);
  CHECK(build_zdag(condition_to_family(rabin_worst(3))).size() >= 8);
  ZTree one = build_ztree(condition_to_family(rabin_worst(1)));
  CHECK(one.leaf_count() == 1);
}

TEST_CASE("tree and DAG JSON round trips") {
  ZTree t = build_ztree(example_family());
  CHECK(ztree_from_json(ztree_to_json(t)) == t);
  ZDag d = build_zdag(even_letters(4));
  CHECK(zdag_from_json(zdag_to_json(d)) == d);
  CHECK(ztree_to_dot(t).find("digraph") != std::string::npos);
  CHECK(zdag_to_dot(d).find("digraph") != std::string::npos);
}
