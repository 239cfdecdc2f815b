#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "srw/pc.hpp"

using namespace srw;
using testing::b2;
using testing::b2xb2;
using testing::c3;
using testing::view;

TEST_CASE("annihilator sets") {
  CHECK(annihilator_set(b2(), 1) == ElementSet{0});
  CHECK(annihilator_set(c3(), 1) == ElementSet{0});
  // (0,1) has index 1 and is annihilated by (0,0) and (1,0).
  CHECK(annihilator_set(b2xb2(), 1) == ElementSet({0, 2}));
}

TEST_CASE("pseudocomplements") {
  CHECK(pseudocomplement(view(b2()), 1) == Element{0});
  CHECK(pseudocomplement(view(c3()), 0) == Element{2});
  CHECK(pseudocomplement(view(c3()), 1) == Element{0});
  CHECK_THROWS_AS(pseudocomplement(view(residue_ring(3)), 1), NotPositive);
  CHECK_THROWS_AS(pc_analysis(view(residue_ring(3))), NotPositive);
}

TEST_CASE("pc_analysis examples") {
  const PcAnalysis c = pc_analysis(view(c3()));
  CHECK(c.pcomp() == ElementSet({0, 1, 2}));
  CHECK(c.skel() == ElementSet({0, 2}));
  CHECK(c.stone() == ElementSet({0, 1, 2}));
  CHECK(c.dense() == ElementSet({1, 2}));

  const PcAnalysis p = pc_analysis(view(b2xb2()));
  CHECK(p.pseudocomplemented());
  CHECK(p.skel() == ElementSet::all(4));
  CHECK(p.stone_semiring());
  CHECK(p.dense() == ElementSet{3});

  const PcAnalysis d = pc_analysis(view(testing::d5()));
  CHECK(d.pseudocomplemented());
  CHECK_FALSE(d.stone_semiring());
  CHECK_FALSE(d.stone().contains(1));
}

TEST_CASE("property: finite positive semirings are pseudocomplemented by annihilator sums") {
  // 0 <= b gives a <= a + b, so the sum of Ann(s) bounds every annihilator.
  for (unsigned n = 2; n <= 4; ++n)
    for (const auto& S : enumerate_semirings(n)) {
      const OrderedView V = default_view(S);
      if (!V.positive()) continue;
      const PcAnalysis pc = pc_analysis(V);
      CHECK(pc.pseudocomplemented());
      for (std::size_t s = 0; s < S.order(); ++s) {
        Element sum = S.zero();
        annihilator_set(S, Element(s)).for_each([&](Element x) { sum = S.add(sum, x); });
        CHECK(pc.star(Element(s)) == sum);
      }
    }
}

TEST_CASE("partial pseudocomplement data derives pcomp, Skel, Stone and Dns") {
  const auto C = c3();
  const PcAnalysis pc = PcAnalysis::from_pseudocomplements(C, {Element{2}, std::nullopt, Element{0}});
  CHECK(pc.pcomp() == ElementSet({0, 2}));
  CHECK_FALSE(pc.pseudocomplemented());
  CHECK(pc.skel() == ElementSet({0, 2}));
  CHECK(pc.dense() == ElementSet{2});
  CHECK(pc.stone() == ElementSet({0, 2}));
  CHECK_FALSE(pc.star2(1).has_value());
}

TEST_CASE("property: pc_analysis agrees with the brute-force oracle and its invariants") {
  for (const auto& S : testing::small_pool()) {
    const OrderedView V = default_view(S);
    if (!V.positive()) continue;
    const oracle::Tab T = oracle::from(S);
    const PcAnalysis pc = pc_analysis(V);
    ElementSet skel;
    for (int s = 0; s < T.n; ++s) {
      const auto ref = oracle::pseudocomplement(T, s, [&](int x, int y) { return V.leq(Element(x), Element(y)); });
      REQUIRE(pc.star(Element(s)).has_value() == ref.has_value());
      if (!ref) continue;
      CHECK(int(*pc.star(Element(s))) == *ref);
      CHECK(S.mul(Element(s), *pc.star(Element(s))) == S.zero());
      skel.insert(*pc.star(Element(s)));
      CHECK(pc.dense().contains(Element(s)) == (*ref == T.zero));
      const bool stone = pc.in_pcomp(Element(*ref)) &&
                         S.add(Element(*ref), *pc.star(Element(*ref))) == S.one();
      CHECK(pc.stone().contains(Element(s)) == stone);
    }
    CHECK(pc.skel() == skel);
    CHECK(pc.dense().subset_of(pc.pcomp()));
    CHECK(pc.stone().subset_of(pc.pcomp()));
  }
}

TEST_CASE("skeleton lattices") {
  const SkeletonLattice c = skeleton_lattice(view(c3()));
  CHECK(c.elements == std::vector<Element>{0, 2});
  CHECK(c.bottom == 0);
  CHECK(c.top == 2);
  CHECK_FALSE(check_bounded_complemented(c));

  const SkeletonLattice p = skeleton_lattice(view(b2xb2()));
  CHECK(p.elements.size() == 4);
  CHECK(p.join(1, 2) == 3);
  CHECK(p.meet(1, 2) == 0);
  CHECK(p.complement[1] == 2);
  CHECK_FALSE(check_bounded_complemented(p));

  CHECK(skeleton_lattice(view(b2())).elements.size() == 2);
  CHECK_THROWS_AS(skeleton_lattice(view(testing::d5())), HypothesisNotMet);
}

TEST_CASE("a corrupted skeleton lattice is caught") {
  SkeletonLattice p = skeleton_lattice(view(b2xb2()));
  p.complement[1] = 1;
  CHECK(check_bounded_complemented(p).has_value());
}

TEST_CASE("boolean skeleton check") {
  CHECK(skeleton_boolean_check(view(b2xb2())).with_star);
  CHECK(skeleton_boolean_check(view(c3())).with_star);
  const BooleanCheck d = skeleton_boolean_check(view(testing::d5()));
  CHECK_FALSE(d.with_star);
  CHECK_FALSE(d.with_some_complement);
  CHECK(d.failure.has_value());
}

TEST_CASE("distributive lattice laws") {
  CHECK_FALSE(bdl_law_violation(c3()));
  CHECK_FALSE(bdl_law_violation(testing::d5()));
  const auto z8 = bdl_law_violation(testing::z8());
  REQUIRE(z8);
  CHECK_FALSE(z8->witness.empty());
  CHECK(bdl_law_violation(residue_ring(2)).has_value());
}

TEST_CASE("pc-function validation") {
  const PcFunction zero_map = validate_pc_function(b2(), std::vector<int>{0, 0});
  CHECK_FALSE(zero_map.satisfies_zero_axiom());
  const PcFunction c = validate_pc_function(c3(), std::vector<int>{2, 0, 0});
  CHECK(c.satisfies_zero_axiom());
  CHECK(c.satisfies_sum_axiom());
  CHECK_THROWS_AS(validate_pc_function(b2(), std::vector<int>{1, 1}), NotAnnihilating);
  try {
    validate_pc_function(c3(), std::vector<int>{2, 1, 0});
    FAIL("expected NotAnnihilating");
  } catch (const NotAnnihilating& e) {
    CHECK(e.witness() == 1);
  }
  CHECK_THROWS_AS(validate_pc_function(b2(), std::vector<int>{0}), BadShape);
  CHECK_THROWS_AS(validate_pc_function(b2(), std::vector<int>{0, 7}), BadShape);
  const auto f = pseudocomplement_function(c3(), pc_analysis(view(c3())));
  REQUIRE(f);
  CHECK(f->map() == std::vector<Element>{2, 0, 0});
}

TEST_CASE("pc_prime_report examples") {
  const auto P = b2xb2();
  const auto star = *pseudocomplement_function(P, pc_analysis(view(P)));
  const PcPrimeReport p1 = pc_prime_report(P, star, testing::ideal_of(P, {0, 1}));
  CHECK(p1.star_outside);
  CHECK(p1.double_star_inside);
  CHECK(p1.misses_star_zero);
  CHECK(p1.minimal == true);
  CHECK(p1.consistent());

  const auto C = c3();
  const auto cs = *pseudocomplement_function(C, pc_analysis(view(C)));
  const PcPrimeReport a = pc_prime_report(C, cs, testing::ideal_of(C, {0, 1}));
  CHECK_FALSE(a.star_outside);
  CHECK_FALSE(a.misses_star_zero);
  CHECK_FALSE(a.minimal.has_value());
  CHECK(a.consistent());

  const PcPrimeReport z = pc_prime_report(C, cs, testing::ideal_of(C, {0}));
  CHECK(z.star_outside);
  CHECK(z.double_star_inside);
  CHECK(z.misses_star_zero);
  CHECK(z.minimal == true);

  CHECK_THROWS_AS(pc_prime_report(C, cs, unit_ideal(C)), NotPrime);
}

TEST_CASE("property: pseudocomplement statements on the pool, checked directly") {
  for (const auto& S : testing::small_pool()) {
    const OrderedView V = default_view(S);
    if (!V.positive()) continue;
    const PcAnalysis pc = pc_analysis(V);
    const std::size_t n = S.order();
    for (std::size_t i = 0; i < n; ++i) {
      const auto s = Element(i);
      if (pc.star2(s)) CHECK(V.leq(s, *pc.star2(s)));
      if (pc.star3(s)) CHECK(*pc.star3(s) == *pc.star(s));
      if (pc.stone().contains(s)) {
        CHECK(S.mul(*pc.star(s), *pc.star(s)) == *pc.star(s));
        CHECK(V.leq(S.mul(s, s), s));
      }
      for (std::size_t j = 0; j < n; ++j) {
        const auto t = Element(j);
        if (pc.in_pcomp(t)) CHECK((S.mul(s, t) == S.zero()) == V.leq(s, *pc.star(t)));
      }
    }
  }
}
