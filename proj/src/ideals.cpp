#include "srw/ideals.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>
#include <unordered_set>

#include "srw/constructions.hpp"
#include "srw/pc.hpp"

namespace srw {

bool is_ideal(const FiniteSemiring& S, const ElementSet& set) {
  if (!set.contains(S.zero())) return false;
  const auto elems = set.elements();
  for (Element a : elems) {
    for (Element b : elems)
      if (!set.contains(S.add(a, b))) return false;
    for (Element s = 0; s < S.order(); ++s)
      if (!set.contains(S.mul(s, a))) return false;
  }
  return true;
}

IdealSet as_ideal(const FiniteSemiring& S, const ElementSet& set) {
  if (set.elements().empty() || set.elements().back() >= S.order())
    throw NotAnIdeal("subset is empty or leaves the carrier");
  if (!is_ideal(S, set)) throw NotAnIdeal("subset is not closed under the ideal operations");
  return IdealSet{set};
}

IdealSet zero_ideal(const FiniteSemiring& S) { return IdealSet{ElementSet{S.zero()}}; }
IdealSet unit_ideal(const FiniteSemiring& S) { return IdealSet{S.carrier()}; }

IdealSet ideal_generated(const FiniteSemiring& S, const ElementSet& gens) {
  ElementSet cur = gens;
  cur.insert(S.zero());
  // Multiples first: sa for every generator a, then saturate under addition.
  ElementSet multiples = cur;
  cur.for_each([&](Element a) {
    for (Element s = 0; s < S.order(); ++s) multiples.insert(S.mul(s, a));
  });
  cur = multiples;
  std::vector<Element> queue = cur.elements();
  // Sums of multiples are again closed under multiplication, so only the
  // additive closure remains.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element a = queue[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Element c = S.add(a, queue[j]);
      if (!cur.contains(c)) {
        cur.insert(c);
        queue.push_back(c);
      }
    }
  }
  IdealSet out{cur};
  assert(is_ideal(S, out.members));
  return out;
}

std::vector<IdealSet> enumerate_ideals(const FiniteSemiring& S, std::size_t cap) {
  if (S.order() > cap)
    throw CapacityExceeded("ideal enumeration: order " + std::to_string(S.order()) +
                           " exceeds cap " + std::to_string(cap));
  std::vector<IdealSet> principal;
  for (Element s = 0; s < S.order(); ++s) principal.push_back(principal_ideal(S, s));

  // Every ideal is a finite sum of principal ideals.
  std::unordered_set<ElementSet, ElementSet::Hash> seen;
  std::vector<IdealSet> out{zero_ideal(S)};
  seen.insert(out.front().members);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& p : principal) {
      if (p.subset_of(out[i])) continue;
      IdealSet next = ideal_sum(S, out[i], p);
      if (seen.insert(next.members).second) out.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IdealSet& a, const IdealSet& b) { return canonical_less(a.members, b.members); });
  return out;
}

IdealSet ideal_sum(const FiniteSemiring& S, const IdealSet& I, const IdealSet& J) {
  ElementSet sums;
  I.members.for_each([&](Element a) { J.members.for_each([&](Element b) { sums.insert(S.add(a, b)); }); });
  return ideal_generated(S, sums);
}

IdealSet ideal_product(const FiniteSemiring& S, const IdealSet& I, const IdealSet& J) {
  ElementSet prods;
  I.members.for_each([&](Element a) { J.members.for_each([&](Element b) { prods.insert(S.mul(a, b)); }); });
  return ideal_generated(S, prods);
}

std::size_t IdealSemiring::index_of(const IdealSet& I) const {
  auto it = std::find(ideals.begin(), ideals.end(), I);
  if (it == ideals.end()) throw NotAnIdeal("not an ideal of the base semiring");
  return static_cast<std::size_t>(it - ideals.begin());
}

namespace {

std::string ideal_label(const FiniteSemiring& S, const IdealSet& I) {
  std::string l = "{";
  I.members.for_each([&](Element e) { l += (l.size() > 1 ? "," : "") + S.label(e); });
  return l + "}";
}

}  // namespace

IdealSemiring build_ideal_semiring(const FiniteSemiring& S, std::size_t cap) {
  auto ideals = enumerate_ideals(S, cap);
  if (ideals.size() > kMaxOrder)
    throw CapacityExceeded("semiring has " + std::to_string(ideals.size()) + " ideals (max 255)");
  std::unordered_map<ElementSet, int, ElementSet::Hash> index;
  for (std::size_t i = 0; i < ideals.size(); ++i) index[ideals[i].members] = static_cast<int>(i);

  SemiringTables t;
  t.n = ideals.size();
  t.add.assign(t.n, std::vector<int>(t.n));
  t.mul.assign(t.n, std::vector<int>(t.n));
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) {
      t.add[i][j] = index.at(ideal_sum(S, ideals[i], ideals[j]).members);
      t.mul[i][j] = index.at(ideal_product(S, ideals[i], ideals[j]).members);
    }
  t.zero = index.at(zero_ideal(S).members);
  t.one = index.at(unit_ideal(S).members);
  for (const auto& I : ideals) t.labels.push_back(ideal_label(S, I));

  std::vector<std::vector<bool>> inc(t.n, std::vector<bool>(t.n));
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) inc[i][j] = ideals[i].subset_of(ideals[j]);

  return IdealSemiring{validate_semiring(t), OrderRelation::from_matrix(inc), std::move(ideals)};
}

IdealSemiringCheck verify_ideal_semiring(const FiniteSemiring& base, const IdealSemiring& id) {
  IdealSemiringCheck out;
  const FiniteSemiring& T = id.semiring;
  out.order_compatible = !find_order_incompatibility(T, id.inclusion).has_value();
  if (!out.order_compatible) return out;
  const OrderedView V = check_ordered_axioms(T, id.inclusion);
  out.positive = V.positive();
  if (!out.positive) return out;
  const PcAnalysis pc = pc_analysis(V);
  out.pseudocomplemented = pc.pseudocomplemented();

  // Independent route: the ideal of the base semiring generated by every
  // ideal that annihilates I.
  out.annihilator_match = true;
  for (Element i = 0; i < T.order(); ++i) {
    ElementSet gens;
    for (Element j = 0; j < T.order(); ++j)
      if (T.mul(i, j) == T.zero()) gens |= id.ideals[j].members;
    const IdealSet K = ideal_generated(base, gens);
    const auto star = pc.star(i);
    if (!star || id.ideals[*star] != K) {
      out.annihilator_match = false;
      out.mismatch = i;
      break;
    }
  }
  return out;
}

PaperExampleReport paper_example_check(unsigned n) {
  if (n < 2 || n * n * n > kMaxOrder)
    throw BadShape("paper_example_check: need n >= 2 and n^3 <= 255");
  PaperExampleReport r;
  r.n = n;
  r.modulus = n * n * n;
  const FiniteSemiring S = ideal_semiring_of_Zm(r.modulus);
  const auto gens = zm_ideal_generators(r.modulus);
  auto idx = [&](unsigned d) {
    return static_cast<Element>(std::find(gens.begin(), gens.end(), d) - gens.begin());
  };
  const Element a = idx(n), b = idx(n * n), c = idx(n * n);
  const Element lhs = S.add(a, S.mul(b, c));
  const Element rhs = S.mul(S.add(a, b), S.add(a, c));
  r.lhs_generator = gens[lhs];
  r.rhs_generator = gens[rhs];
  r.inequality_holds = lhs != rhs;
  const auto order = natural_order(S);
  const OrderedView V = check_ordered_axioms(S, *order);
  r.positive = V.positive();
  r.pseudocomplemented = r.positive && pc_analysis(V).pseudocomplemented();
  r.distributive_lattice_law_fails = bdl_law_violation(S).has_value();
  return r;
}

bool is_prime_ideal(const FiniteSemiring& S, const IdealSet& I) {
  if (I.size() == S.order()) return false;
  for (Element a = 0; a < S.order(); ++a) {
    if (I.contains(a)) continue;
    for (Element b = 0; b < S.order(); ++b)
      if (!I.contains(b) && I.contains(S.mul(a, b))) return false;
  }
  return true;
}

std::vector<IdealSet> minimal_elements(std::span<const IdealSet> ideals) {
  std::vector<IdealSet> out;
  for (const auto& I : ideals) {
    bool minimal = std::none_of(ideals.begin(), ideals.end(), [&](const IdealSet& J) {
      return J.members.proper_subset_of(I.members);
    });
    if (minimal) out.push_back(I);
  }
  return out;
}

ElementSet intersection_of(const FiniteSemiring& S, std::span<const IdealSet> ideals) {
  ElementSet acc = S.carrier();
  for (const auto& I : ideals) acc &= I.members;
  return acc;
}

ElementSet union_of(std::span<const IdealSet> ideals) {
  ElementSet acc;
  for (const auto& I : ideals) acc |= I.members;
  return acc;
}

std::vector<IdealSet> IdealCatalog::primes_containing(const IdealSet& I) const {
  std::vector<IdealSet> out;
  for (const auto& P : primes)
    if (I.subset_of(P)) out.push_back(P);
  return out;
}

std::vector<IdealSet> IdealCatalog::minimal_primes_of(const IdealSet& I) const {
  return minimal_elements(primes_containing(I));
}

bool IdealCatalog::is_minimal_prime(const IdealSet& P) const {
  return std::find(minimal_primes.begin(), minimal_primes.end(), P) != minimal_primes.end();
}

IdealCatalog catalog_ideals(const FiniteSemiring& S, std::size_t cap) {
  IdealCatalog c;
  c.ideals = enumerate_ideals(S, cap);
  for (const auto& I : c.ideals)
    if (is_prime_ideal(S, I)) c.primes.push_back(I);
  c.minimal_primes = minimal_elements(c.primes);
  return c;
}

std::vector<IdealSet> enumerate_primes(const FiniteSemiring& S, std::size_t cap) {
  return catalog_ideals(S, cap).primes;
}

SpectrumReport spectrum(const FiniteSemiring& S, const IdealSet& I, std::size_t cap) {
  const IdealCatalog c = catalog_ideals(S, cap);
  SpectrumReport r;
  r.primes = c.primes;
  r.v_of_i = c.primes_containing(I);
  r.minimal = minimal_elements(r.v_of_i);
  const auto nil = nilpotent_analysis(S);
  r.nilradical = nil.nilradical;
  r.nilpotent_free = nil.nilpotent_free;
  r.zero_divisors = zero_divisors(S);
  const IdealSet zero = zero_ideal(S);
  for (const auto& P : c.primes) {
    bool only_trivial = std::all_of(c.ideals.begin(), c.ideals.end(), [&](const IdealSet& J) {
      return !J.subset_of(P) || J == zero || J == P;
    });
    if (only_trivial) r.primes_with_no_proper_nonzero_subideal.push_back(P);
  }
  r.minimal_readings_diverge = r.primes_with_no_proper_nonzero_subideal != c.minimal_primes;
  return r;
}

bool is_mc_set(const FiniteSemiring& S, const ElementSet& W) {
  if (!W.contains(S.one())) return false;
  const auto elems = W.elements();
  for (Element a : elems)
    for (Element b : elems)
      if (!W.contains(S.mul(a, b))) return false;
  return true;
}

ElementSet mc_closure(const FiniteSemiring& S, const ElementSet& W) {
  ElementSet cur = W;
  cur.insert(S.one());
  std::vector<Element> queue = cur.elements();
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Element p = S.mul(queue[i], queue[j]);
      if (!cur.contains(p)) {
        cur.insert(p);
        queue.push_back(p);
      }
    }
  return cur;
}

std::vector<IdealSet> maximal_disjoint_ideals(const FiniteSemiring& S, const ElementSet& W,
                                              const IdealSet& I,
                                              std::span<const IdealSet> all_ideals) {
  if (!is_mc_set(S, W)) throw HypothesisNotMet("W is not an MC-set");
  if (W.intersects(I.members)) throw HypothesisNotMet("I meets the MC-set");
  std::vector<IdealSet> candidates;
  for (const auto& J : all_ideals)
    if (I.subset_of(J) && !J.members.intersects(W)) candidates.push_back(J);
  std::vector<IdealSet> out;
  for (const auto& J : candidates) {
    bool maximal = std::none_of(candidates.begin(), candidates.end(), [&](const IdealSet& K) {
      return J.members.proper_subset_of(K.members);
    });
    if (maximal) out.push_back(J);
  }
  return out;
}

std::vector<IdealSet> maximal_disjoint_ideals(const FiniteSemiring& S, const ElementSet& W,
                                              const IdealSet& I, std::size_t cap) {
  return maximal_disjoint_ideals(S, W, I, enumerate_ideals(S, cap));
}

IdealSet radical_by_powers(const FiniteSemiring& S, const IdealSet& I) {
  ElementSet out;
  for (Element s = 0; s < S.order(); ++s) {
    Element p = s;
    for (std::size_t k = 1; k <= S.order(); ++k, p = S.mul(p, s)) {
      if (I.contains(p)) {
        out.insert(s);
        break;
      }
    }
  }
  return IdealSet{out};
}

RadicalReport radical(const FiniteSemiring& S, const IdealSet& I, const IdealCatalog& catalog) {
  RadicalReport r;
  r.by_powers = radical_by_powers(S, I);
  r.by_primes = IdealSet{intersection_of(S, catalog.primes_containing(I))};
  r.by_minimal_primes = IdealSet{intersection_of(S, catalog.minimal_primes_of(I))};
  return r;
}

RadicalReport radical(const FiniteSemiring& S, const IdealSet& I, std::size_t cap) {
  return radical(S, I, catalog_ideals(S, cap));
}

NilpotentReport nilpotent_analysis(const FiniteSemiring& S) {
  NilpotentReport r;
  r.nilradical = radical_by_powers(S, zero_ideal(S));
  r.nilpotent_free = r.nilradical == zero_ideal(S);
  return r;
}

std::vector<IdealSet> minimal_primes(const FiniteSemiring& S, const IdealSet& I, std::size_t cap) {
  const auto c = catalog_ideals(S, cap);
  auto v = c.primes_containing(I);
  if (v.empty()) throw EmptySpectrum();
  return minimal_elements(v);
}

HuckabaReport huckaba_criteria(const FiniteSemiring& S, const IdealSet& I, const IdealSet& P,
                               const IdealCatalog& catalog) {
  if (!is_prime_ideal(S, P)) throw NotPrime();
  if (!I.subset_of(P)) throw NotContaining();
  HuckabaReport r;
  const auto min_i = catalog.minimal_primes_of(I);
  r.minimal = std::find(min_i.begin(), min_i.end(), P) != min_i.end();

  const ElementSet outside = P.members.complement_in(S.order());
  r.mc_maximal = true;
  P.members.for_each([&](Element w) {
    if (!r.mc_maximal) return;
    ElementSet ext = outside;
    ext.insert(w);
    if (!mc_closure(S, ext).intersects(I.members)) {
      r.mc_maximal = false;
      r.extension = w;
    }
  });

  r.power_condition = r.power_condition_positive = true;
  P.members.for_each([&](Element x) {
    bool nonneg = false, positive = false;
    Element xi = S.one();
    for (std::size_t i = 0; i <= S.order(); ++i, xi = S.mul(xi, x)) {
      outside.for_each([&](Element y) {
        if (I.contains(S.mul(y, xi))) {
          nonneg = true;
          if (i >= 1) positive = true;
        }
      });
      if (positive) break;
    }
    if (!nonneg) {
      r.power_condition = false;
      if (!r.power_failure) r.power_failure = x;
    }
    if (!positive) r.power_condition_positive = false;
  });
  return r;
}

HuckabaReport huckaba_criteria(const FiniteSemiring& S, const IdealSet& I, const IdealSet& P,
                               std::size_t cap) {
  return huckaba_criteria(S, I, P, catalog_ideals(S, cap));
}

IdealSet annihilator_ideal(const FiniteSemiring& S, const ElementSet& H) {
  if (H.empty()) throw HypothesisNotMet("annihilator of an empty set");
  ElementSet out;
  for (Element s = 0; s < S.order(); ++s) {
    bool kills = true;
    H.for_each([&](Element h) { kills = kills && S.mul(s, h) == S.zero(); });
    if (kills) out.insert(s);
  }
  IdealSet I{out};
  assert(is_ideal(S, I.members));
  return I;
}

Huckaba2Report huckaba2_check(const FiniteSemiring& S, const IdealSet& P,
                              const IdealCatalog& catalog) {
  if (!nilpotent_analysis(S).nilpotent_free)
    throw HypothesisNotMet("semiring has nonzero nilpotents");
  if (!is_prime_ideal(S, P)) throw NotPrime();
  Huckaba2Report r;
  r.minimal = catalog.is_minimal_prime(P);
  r.annihilator_condition = true;
  P.members.for_each([&](Element x) {
    bool found = false;
    for (Element y = 0; y < S.order() && !found; ++y)
      found = !P.contains(y) && S.mul(x, y) == S.zero();
    if (!found && r.annihilator_condition) {
      r.annihilator_condition = false;
      r.unannihilated = x;
    }
  });
  return r;
}

Huckaba2Report huckaba2_check(const FiniteSemiring& S, const IdealSet& P, std::size_t cap) {
  return huckaba2_check(S, P, catalog_ideals(S, cap));
}

Huckaba3Report huckaba3_check(const FiniteSemiring& S, const ElementSet& gens,
                              const IdealCatalog& catalog) {
  if (!nilpotent_analysis(S).nilpotent_free)
    throw HypothesisNotMet("semiring has nonzero nilpotents");
  Huckaba3Report r;
  r.ideal = ideal_generated(S, gens);
  r.annihilator = annihilator_ideal(S, r.ideal.members);
  r.in_minimal_prime = std::any_of(catalog.minimal_primes.begin(), catalog.minimal_primes.end(),
                                   [&](const IdealSet& P) { return r.ideal.subset_of(P); });
  r.annihilator_nonzero = !(r.annihilator == zero_ideal(S));
  return r;
}

Huckaba3Report huckaba3_check(const FiniteSemiring& S, const ElementSet& gens, std::size_t cap) {
  return huckaba3_check(S, gens, catalog_ideals(S, cap));
}

ElementSet zero_divisors(const FiniteSemiring& S) {
  ElementSet out;
  for (Element s = 0; s < S.order(); ++s)
    for (Element t = 0; t < S.order(); ++t)
      if (t != S.zero() && S.mul(s, t) == S.zero()) {
        out.insert(s);
        break;
      }
  return out;
}

MinPbdlReport minimalpbdl_report(const OrderedView& V, const IdealSet& P,
                                 const IdealCatalog& catalog) {
  const FiniteSemiring& S = V.semiring();
  if (!V.positive()) throw HypothesisNotMet("requires a positive order");
  if (!is_mult_idempotent(S)) throw HypothesisNotMet("requires a multiplicatively idempotent semiring");
  const PcAnalysis pc = pc_analysis(V);
  if (!pc.pseudocomplemented()) throw HypothesisNotMet("requires a pseudocomplemented semiring");
  if (!pc.stone().contains(S.one())) throw HypothesisNotMet("requires 1 to be a Stone element");
  if (!is_prime_ideal(S, P)) throw NotPrime();
  MinPbdlReport r;
  r.star_outside = r.double_star_inside = true;
  P.members.for_each([&](Element s) {
    if (P.contains(*pc.star(s))) r.star_outside = false;
    if (!P.contains(*pc.star2(s))) r.double_star_inside = false;
  });
  r.misses_dense = !P.members.intersects(pc.dense());
  r.minimal = catalog.is_minimal_prime(P);
  return r;
}

MinPbdlReport minimalpbdl_report(const OrderedView& V, const IdealSet& P, std::size_t cap) {
  return minimalpbdl_report(V, P, catalog_ideals(V.semiring(), cap));
}

}  // namespace srw
