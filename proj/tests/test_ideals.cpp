#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "srw/pc.hpp"

using namespace srw;
using testing::b2;
using testing::b2xb2;
using testing::c3;
using testing::ideal_of;
using testing::z8;

namespace {

oracle::Mask mask(const ElementSet& s) {
  oracle::Mask m = 0;
  s.for_each([&](Element e) { m |= oracle::bit(e); });
  return m;
}
oracle::Mask mask(const IdealSet& I) { return mask(I.members); }

std::vector<oracle::Mask> masks(const std::vector<IdealSet>& v) {
  std::vector<oracle::Mask> out;
  for (const auto& I : v) out.push_back(mask(I));
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet from_mask(oracle::Mask m) {
  ElementSet s;
  for (int e = 0; e < 32; ++e)
    if (oracle::in(m, e)) s.insert(Element(e));
  return s;
}

// B2 x B2 primes: P1 = {(0,0),(0,1)}, P2 = {(0,0),(1,0)}.
const ElementSet kP1{0, 1};
const ElementSet kP2{0, 2};

}  // namespace

TEST_CASE("ideal generation") {
  const auto P = b2xb2();
  CHECK(ideal_generated(P, {1}).members == kP1);
  CHECK(ideal_generated(c3(), {}).members == ElementSet{0});
  CHECK(ideal_generated(c3(), {2}).members == c3().carrier());
  CHECK(principal_ideal(z8(), 2).members == ElementSet({0, 1, 2}));
  CHECK_THROWS_AS(as_ideal(c3(), {1}), NotAnIdeal);
}

TEST_CASE("ideal enumeration") {
  CHECK(enumerate_ideals(b2()).size() == 2);
  const auto c = enumerate_ideals(c3());
  REQUIRE(c.size() == 3);
  CHECK(c[0].members == ElementSet{0});
  CHECK(c[1].members == ElementSet({0, 1}));
  CHECK(c[2].members == ElementSet({0, 1, 2}));
  const auto z = enumerate_ideals(z8());
  CHECK(z.size() == 4);
  for (std::size_t i = 0; i + 1 < z.size(); ++i) CHECK(z[i].members.proper_subset_of(z[i + 1].members));
  CHECK_THROWS_AS(enumerate_ideals(chain_lattice(25)), CapacityExceeded);
  CHECK(enumerate_ideals(chain_lattice(25), 25).size() == 25);
}

TEST_CASE("ideal sums and products") {
  const auto P = b2xb2();
  const IdealSet p1 = ideal_of(P, kP1), p2 = ideal_of(P, kP2), zero = zero_ideal(P);
  CHECK(ideal_sum(P, p1, zero) == p1);
  CHECK(ideal_product(P, p1, zero) == zero);
  CHECK(ideal_product(P, p1, p2) == zero);
  CHECK(ideal_sum(P, p1, p2) == unit_ideal(P));
  const IdealSet a = ideal_of(c3(), {0, 1});
  CHECK(ideal_product(c3(), a, a) == a);
}

TEST_CASE("property: library ideals and primes match brute force") {
  for (const auto& S : testing::small_pool()) {
    const oracle::Tab T = oracle::from(S);
    const IdealCatalog cat = catalog_ideals(S);
    CHECK(masks(cat.ideals) == oracle::ideals(T));
    CHECK(masks(cat.primes) == oracle::primes(T));
    CHECK(masks(cat.minimal_primes) == [&] {
      auto v = oracle::minimal_primes(T, oracle::bit(T.zero));
      std::sort(v.begin(), v.end());
      return v;
    }());
    for (const auto& I : cat.ideals) {
      CHECK(is_prime_ideal(S, I) == is_mc_set(S, S.carrier() - I.members));
      auto ref = oracle::minimal_primes(T, mask(I));
      std::sort(ref.begin(), ref.end());
      CHECK(masks(cat.minimal_primes_of(I)) == ref);
      const RadicalReport r = radical(S, I, cat);
      CHECK(mask(r.by_powers) == oracle::radical(T, mask(I)));
      CHECK(r.agree());
    }
  }
}

TEST_CASE("Id(S) is positive and pseudocomplemented") {
  const IdealSemiring ib2 = build_ideal_semiring(b2());
  CHECK(are_isomorphic(ib2.semiring, b2()));
  for (const auto& S : testing::small_pool()) {
    const IdealSemiring id = build_ideal_semiring(S);
    CHECK(verify_ideal_semiring(S, id).holds());
    CHECK(id.semiring.order() == enumerate_ideals(S).size());
  }
  const IdealSemiring iz = build_ideal_semiring(z8());
  const IdealSemiring iiz = build_ideal_semiring(iz.semiring);
  CHECK(verify_ideal_semiring(iz.semiring, iiz).holds());
  const IdealSemiring ip = build_ideal_semiring(b2xb2());
  CHECK(ip.semiring.order() == 4);
  CHECK(verify_ideal_semiring(b2xb2(), ip).holds());
}

TEST_CASE("Id(Z_{n^3}) is positive, pseudocomplemented and not distributive") {
  const PaperExampleReport r2 = paper_example_check(2);
  CHECK(r2.modulus == 8);
  CHECK(r2.lhs_generator == 2);
  CHECK(r2.rhs_generator == 4);
  CHECK(r2.inequality_holds);
  CHECK(r2.positive);
  CHECK(r2.pseudocomplemented);
  CHECK(r2.distributive_lattice_law_fails);
  const PaperExampleReport r3 = paper_example_check(3);
  CHECK(r3.modulus == 27);
  CHECK(r3.lhs_generator == 3);
  CHECK(r3.rhs_generator == 9);
  CHECK(r3.holds());
  CHECK_THROWS(paper_example_check(1));
  CHECK_THROWS(paper_example_check(7));
}

TEST_CASE("prime ideals") {
  CHECK(is_prime_ideal(c3(), ideal_of(c3(), {0, 1})));
  CHECK_FALSE(is_prime_ideal(z8(), ideal_of(z8(), {0, 1})));
  CHECK_FALSE(is_prime_ideal(c3(), unit_ideal(c3())));
  CHECK(masks(enumerate_primes(b2xb2())) == std::vector<oracle::Mask>{mask(kP1), mask(kP2)});
}

TEST_CASE("MC-sets") {
  CHECK(is_mc_set(c3(), {2}));
  CHECK(is_mc_set(b2xb2(), {3, 2}));
  CHECK(is_mc_set(b2(), {0, 1}));
  CHECK_FALSE(is_mc_set(b2xb2(), {1, 2}));
  CHECK(mc_closure(b2xb2(), {1, 2}) == ElementSet({0, 1, 2, 3}));
}

TEST_CASE("maximal ideals disjoint from an MC-set") {
  const auto m1 = maximal_disjoint_ideals(c3(), {2}, zero_ideal(c3()));
  REQUIRE(m1.size() == 1);
  CHECK(m1[0].members == ElementSet({0, 1}));
  const auto m2 = maximal_disjoint_ideals(b2xb2(), {3}, zero_ideal(b2xb2()));
  CHECK(masks(m2) == std::vector<oracle::Mask>{mask(kP1), mask(kP2)});
  const auto m3 = maximal_disjoint_ideals(b2(), {1}, zero_ideal(b2()));
  REQUIRE(m3.size() == 1);
  CHECK(m3[0] == zero_ideal(b2()));
  CHECK_THROWS_AS(maximal_disjoint_ideals(c3(), {1}, zero_ideal(c3())), HypothesisNotMet);
  CHECK_THROWS_AS(maximal_disjoint_ideals(c3(), {0, 2}, zero_ideal(c3())), HypothesisNotMet);
}

TEST_CASE("radicals and nilpotents") {
  const RadicalReport rz = radical(z8(), zero_ideal(z8()));
  CHECK(rz.by_powers.members == ElementSet({0, 1, 2}));
  CHECK(rz.agree());
  CHECK(radical(c3(), zero_ideal(c3())).by_powers == zero_ideal(c3()));
  CHECK(radical(c3(), unit_ideal(c3())).by_powers == unit_ideal(c3()));
  CHECK(nilpotent_analysis(b2xb2()).nilpotent_free);
  CHECK(nilpotent_analysis(b2xb2()).nilradical == zero_ideal(b2xb2()));
  CHECK_FALSE(nilpotent_analysis(z8()).nilpotent_free);
  CHECK(nilpotent_analysis(z8()).nilradical.members == ElementSet({0, 1, 2}));
  CHECK(nilpotent_analysis(c3()).nilpotent_free);
}

TEST_CASE("minimal primes") {
  CHECK(masks(minimal_primes(b2xb2(), zero_ideal(b2xb2()))) == std::vector<oracle::Mask>{mask(kP1), mask(kP2)});
  const auto c = minimal_primes(c3(), zero_ideal(c3()));
  REQUIRE(c.size() == 1);
  CHECK(c[0] == zero_ideal(c3()));
  const auto z = minimal_primes(z8(), zero_ideal(z8()));
  REQUIRE(z.size() == 1);
  CHECK(z[0].members == ElementSet({0, 1, 2}));
  CHECK_THROWS_AS(minimal_primes(c3(), unit_ideal(c3())), EmptySpectrum);
  for (unsigned k = 2; k <= 6; ++k) {
    const auto S = chain_lattice(k);
    REQUIRE(is_entire(S));
    const auto m = minimal_primes(S, zero_ideal(S));
    REQUIRE(m.size() == 1);
    CHECK(m[0] == zero_ideal(S));
  }
}

TEST_CASE("spectrum report and the two readings of minimal prime") {
  const SpectrumReport c = spectrum(c3(), zero_ideal(c3()));
  CHECK(c.primes.size() == 2);
  CHECK(c.minimal.size() == 1);
  CHECK(c.primes_with_no_proper_nonzero_subideal.size() == 2);
  CHECK(c.minimal_readings_diverge);
  const SpectrumReport p = spectrum(b2xb2(), zero_ideal(b2xb2()));
  CHECK_FALSE(p.minimal_readings_diverge);
  CHECK(p.zero_divisors == ElementSet({0, 1, 2}));
}

TEST_CASE("Huckaba criteria examples") {
  const auto P = b2xb2();
  const HuckabaReport h = huckaba_criteria(P, zero_ideal(P), ideal_of(P, kP1));
  CHECK(h.minimal);
  CHECK(h.mc_maximal);
  CHECK(h.power_condition);
  CHECK(h.power_condition_positive);
  const HuckabaReport c = huckaba_criteria(c3(), zero_ideal(c3()), ideal_of(c3(), {0, 1}));
  CHECK_FALSE(c.minimal);
  CHECK_FALSE(c.mc_maximal);
  CHECK_FALSE(c.power_condition);
  CHECK(c.power_failure == Element{1});
  CHECK(c.equivalent());
  CHECK(huckaba_criteria(b2(), zero_ideal(b2()), zero_ideal(b2())).equivalent());
  CHECK(huckaba_criteria(b2(), zero_ideal(b2()), zero_ideal(b2())).minimal);
  CHECK_THROWS_AS(huckaba_criteria(c3(), zero_ideal(c3()), unit_ideal(c3())), NotPrime);
  CHECK_THROWS_AS(huckaba_criteria(c3(), ideal_of(c3(), {0, 1}), zero_ideal(c3())), NotContaining);
}

TEST_CASE("property: Huckaba conditions match brute-force definitions") {
  for (const auto& S : testing::small_pool()) {
    const oracle::Tab T = oracle::from(S);
    const IdealCatalog cat = catalog_ideals(S);
    for (const auto& I : cat.ideals)
      for (const auto& P : cat.primes) {
        if (!I.subset_of(P)) continue;
        const HuckabaReport r = huckaba_criteria(S, I, P, cat);
        const auto mins = oracle::minimal_primes(T, mask(I));
        CHECK(r.minimal == (std::find(mins.begin(), mins.end(), mask(P)) != mins.end()));
        CHECK(r.mc_maximal == oracle::complement_mc_maximal(T, mask(I), mask(P)));
        CHECK(r.equivalent());
      }
  }
}

TEST_CASE("annihilator ideals") {
  const auto P = b2xb2();
  CHECK(annihilator_ideal(P, {1}).members == kP2);
  CHECK(annihilator_ideal(c3(), {0}) == unit_ideal(c3()));
  CHECK(annihilator_ideal(c3(), {1, 2}) == zero_ideal(c3()));
  CHECK_THROWS_AS(annihilator_ideal(c3(), {}), HypothesisNotMet);
}

TEST_CASE("property: Ann of a generated ideal is the intersection of generator annihilators") {
  std::mt19937 gen(7);
  for (const auto& S : testing::small_pool()) {
    const oracle::Tab T = oracle::from(S);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(S.order()) - 1);
    for (int trial = 0; trial < 25; ++trial) {
      ElementSet gens;
      const int k = 1 + pick(gen) % 3;
      for (int i = 0; i < k; ++i) gens.insert(Element(pick(gen)));
      const IdealSet J = ideal_generated(S, gens);
      CHECK(mask(J) == oracle::generated_ideal(T, mask(gens)));
      ElementSet meet = S.carrier();
      gens.for_each([&](Element g) { meet &= annihilator_set(S, g); });
      CHECK(annihilator_ideal(S, J.members).members == meet);
      CHECK(mask(annihilator_ideal(S, gens)) == oracle::annihilator(T, mask(gens)));
    }
  }
}

TEST_CASE("nilpotent-free corollaries") {
  const auto P = b2xb2();
  const Huckaba2Report h = huckaba2_check(P, ideal_of(P, kP1));
  CHECK(h.minimal);
  CHECK(h.annihilator_condition);
  const Huckaba2Report c = huckaba2_check(c3(), ideal_of(c3(), {0, 1}));
  CHECK_FALSE(c.minimal);
  CHECK_FALSE(c.annihilator_condition);
  CHECK(huckaba2_check(b2(), zero_ideal(b2())).equivalent());
  CHECK_THROWS_AS(huckaba2_check(z8(), ideal_of(z8(), {0, 1, 2})), HypothesisNotMet);

  const Huckaba3Report j1 = huckaba3_check(P, {1});
  CHECK(j1.in_minimal_prime);
  CHECK(j1.annihilator_nonzero);
  const Huckaba3Report j2 = huckaba3_check(P, {3});
  CHECK_FALSE(j2.in_minimal_prime);
  CHECK_FALSE(j2.annihilator_nonzero);
  const Huckaba3Report j3 = huckaba3_check(c3(), {1});
  CHECK_FALSE(j3.in_minimal_prime);
  CHECK_FALSE(j3.annihilator_nonzero);
  CHECK_THROWS_AS(huckaba3_check(z8(), {1}), HypothesisNotMet);
}

TEST_CASE("zero divisors") {
  CHECK(zero_divisors(b2xb2()) == ElementSet({0, 1, 2}));
  CHECK(zero_divisors(c3()) == ElementSet{0});
  CHECK(zero_divisors(b2()) == ElementSet{0});
  for (const auto& S : testing::small_pool()) {
    if (!nilpotent_analysis(S).nilpotent_free) continue;
    const IdealCatalog cat = catalog_ideals(S);
    CHECK(zero_divisors(S) == union_of(cat.minimal_primes));
  }
}

TEST_CASE("minimal primes through pseudocomplements in distributive lattices") {
  const auto V = testing::view(c3());
  const MinPbdlReport a = minimalpbdl_report(V, zero_ideal(c3()));
  CHECK(a.star_outside);
  CHECK(a.double_star_inside);
  CHECK(a.misses_dense);
  CHECK(a.minimal);
  const MinPbdlReport b = minimalpbdl_report(V, ideal_of(c3(), {0, 1}));
  CHECK_FALSE(b.star_outside);
  CHECK_FALSE(b.double_star_inside);
  CHECK_FALSE(b.misses_dense);
  CHECK_FALSE(b.minimal);
  const MinPbdlReport p = minimalpbdl_report(testing::view(b2xb2()), ideal_of(b2xb2(), kP1));
  CHECK(p.equivalent());
  CHECK(p.minimal);
  CHECK_THROWS_AS(minimalpbdl_report(testing::view(z8()), ideal_of(z8(), {0, 1, 2})), HypothesisNotMet);
  CHECK_THROWS_AS(minimalpbdl_report(V, unit_ideal(c3())), NotPrime);
}

TEST_CASE("set helpers") {
  const std::vector<IdealSet> v = {ideal_of(b2xb2(), kP1), ideal_of(b2xb2(), kP2)};
  CHECK(intersection_of(b2xb2(), v) == ElementSet{0});
  CHECK(intersection_of(b2xb2(), std::vector<IdealSet>{}) == ElementSet::all(4));
  CHECK(union_of(v) == ElementSet({0, 1, 2}));
  CHECK(minimal_elements(catalog_ideals(c3()).ideals).size() == 1);
  CHECK(from_mask(mask(kP1)) == kP1);
}
