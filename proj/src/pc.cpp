#include "srw/pc.hpp"

#include <string>

namespace srw {

ElementSet annihilator_set(const FiniteSemiring& S, Element s) {
  ElementSet out;
  for (Element x = 0; x < S.order(); ++x)
    if (S.mul(s, x) == S.zero()) out.insert(x);
  return out;
}

std::optional<Element> pseudocomplement(const OrderedView& V, Element s) {
  if (!V.positive()) throw NotPositive();
  const ElementSet ann = annihilator_set(V.semiring(), s);
  std::optional<Element> found;
  ann.for_each([&](Element m) {
    bool bounds_all = true;
    ann.for_each([&](Element x) { bounds_all = bounds_all && V.leq(x, m); });
    // At most one candidate can bound the others (antisymmetry).
    if (bounds_all && !found) found = m;
  });
  return found;
}

PcAnalysis PcAnalysis::from_pseudocomplements(const FiniteSemiring& S,
                                              std::vector<std::optional<Element>> pstar) {
  if (pstar.size() != S.order()) throw BadShape("pseudocomplement vector has wrong length");
  PcAnalysis a;
  a.pstar_ = std::move(pstar);
  for (Element s = 0; s < a.order(); ++s) {
    if (!a.pstar_[s]) continue;
    if (*a.pstar_[s] >= a.order()) throw BadShape("pseudocomplement out of range");
    a.pcomp_.insert(s);
    a.skel_.insert(*a.pstar_[s]);
    if (*a.pstar_[s] == S.zero()) a.dense_.insert(s);
  }
  for (Element s = 0; s < a.order(); ++s) {
    auto s1 = a.star(s);
    if (!s1) continue;
    auto s2 = a.star(*s1);
    if (s2 && S.add(*s1, *s2) == S.one()) a.stone_.insert(s);
  }
  return a;
}

std::optional<Element> PcAnalysis::star2(Element s) const {
  auto s1 = star(s);
  return s1 ? star(*s1) : std::nullopt;
}

std::optional<Element> PcAnalysis::star3(Element s) const {
  auto s2 = star2(s);
  return s2 ? star(*s2) : std::nullopt;
}

PcAnalysis pc_analysis(const OrderedView& V) {
  if (!V.positive()) throw NotPositive();
  std::vector<std::optional<Element>> pstar(V.semiring().order());
  for (Element s = 0; s < pstar.size(); ++s) pstar[s] = pseudocomplement(V, s);
  return PcAnalysis::from_pseudocomplements(V.semiring(), std::move(pstar));
}

SkeletonLattice skeleton_lattice(const OrderedView& V, const PcAnalysis& pc) {
  if (!pc.stone_semiring()) throw HypothesisNotMet("skeleton lattice requires a Stone semiring");
  const FiniteSemiring& S = V.semiring();
  SkeletonLattice L;
  L.n = S.order();
  L.elements = pc.skel().elements();
  L.join_table.assign(L.n * L.n, S.zero());
  L.meet_table.assign(L.n * L.n, S.zero());
  L.complement.assign(L.n, S.zero());
  L.bottom = S.zero();
  L.top = S.one();
  for (Element s : L.elements) {
    L.complement[s] = *pc.star(s);
    for (Element t : L.elements) {
      L.meet_table[s * L.n + t] = S.mul(s, t);
      // Every element is pseudocomplemented in a Stone semiring.
      L.join_table[s * L.n + t] = *pc.star(S.mul(*pc.star(s), *pc.star(t)));
    }
  }
  return L;
}

SkeletonLattice skeleton_lattice(const OrderedView& V) {
  return skeleton_lattice(V, pc_analysis(V));
}

std::optional<LawFailure> check_bounded_complemented(const SkeletonLattice& L) {
  ElementSet members = ElementSet::from_range(L.elements);
  if (!members.contains(L.bottom)) return LawFailure{"bottom in skeleton", {L.bottom}};
  if (!members.contains(L.top)) return LawFailure{"top in skeleton", {L.top}};
  for (Element s : L.elements) {
    if (!members.contains(L.complement[s])) return LawFailure{"complement closure", {s}};
    if (L.join(s, s) != s) return LawFailure{"join idempotent", {s}};
    if (L.meet(s, s) != s) return LawFailure{"meet idempotent", {s}};
    if (L.join(L.bottom, s) != s) return LawFailure{"bottom is join identity", {s}};
    if (L.meet(L.top, s) != s) return LawFailure{"top is meet identity", {s}};
    if (L.meet(s, L.complement[s]) != L.bottom) return LawFailure{"s meet s* = bottom", {s}};
    if (L.join(s, L.complement[s]) != L.top) return LawFailure{"s join s* = top", {s}};
    for (Element t : L.elements) {
      const Element j = L.join(s, t), m = L.meet(s, t);
      if (!members.contains(j)) return LawFailure{"join closure", {s, t}};
      if (!members.contains(m)) return LawFailure{"meet closure", {s, t}};
      if (j != L.join(t, s)) return LawFailure{"join commutative", {s, t}};
      if (m != L.meet(t, s)) return LawFailure{"meet commutative", {s, t}};
      if (L.join(s, m) != s) return LawFailure{"absorption s join (s meet t)", {s, t}};
      if (L.meet(s, j) != s) return LawFailure{"absorption s meet (s join t)", {s, t}};
      for (Element u : L.elements) {
        if (L.join(j, u) != L.join(s, L.join(t, u))) return LawFailure{"join associative", {s, t, u}};
        if (L.meet(m, u) != L.meet(s, L.meet(t, u))) return LawFailure{"meet associative", {s, t, u}};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Boolean-algebra laws for (Skel, +, ·, 0, 1), excluding complementation.
// Commutativity and associativity are inherited from S.
std::optional<LawFailure> distributive_lattice_failure(const FiniteSemiring& S,
                                                       const ElementSet& skel) {
  if (!skel.contains(S.zero())) return LawFailure{"0 in Skel", {S.zero()}};
  if (!skel.contains(S.one())) return LawFailure{"1 in Skel", {S.one()}};
  const auto elems = skel.elements();
  for (Element s : elems) {
    if (S.add(s, s) != s) return LawFailure{"s + s = s", {s}};
    if (S.mul(s, s) != s) return LawFailure{"s s = s", {s}};
    if (S.add(s, S.one()) != S.one()) return LawFailure{"s + 1 = 1", {s}};
    for (Element t : elems) {
      if (!skel.contains(S.add(s, t))) return LawFailure{"Skel closed under +", {s, t}};
      if (!skel.contains(S.mul(s, t))) return LawFailure{"Skel closed under ·", {s, t}};
      if (S.add(s, S.mul(s, t)) != s) return LawFailure{"s + st = s", {s, t}};
      if (S.mul(s, S.add(s, t)) != s) return LawFailure{"s(s + t) = s", {s, t}};
      for (Element u : elems)
        if (S.add(s, S.mul(t, u)) != S.mul(S.add(s, t), S.add(s, u)))
          return LawFailure{"s + tu = (s + t)(s + u)", {s, t, u}};
    }
  }
  return std::nullopt;
}

bool complements(const FiniteSemiring& S, Element s, Element c) {
  return S.mul(s, c) == S.zero() && S.add(s, c) == S.one();
}

}  // namespace

BooleanCheck skeleton_boolean_check(const OrderedView& V, const PcAnalysis& pc) {
  if (!V.positive()) throw NotPositive();
  const FiniteSemiring& S = V.semiring();
  BooleanCheck out;
  if (auto f = distributive_lattice_failure(S, pc.skel())) {
    out.failure = f;
    return out;
  }
  out.with_some_complement = true;
  out.with_star = true;
  for (Element s : pc.skel().elements()) {
    bool has_any = false;
    pc.skel().for_each([&](Element c) { has_any = has_any || complements(S, s, c); });
    if (!has_any) out.with_some_complement = false;
    auto st = pc.star(s);
    if (out.with_star && !(st && pc.skel().contains(*st) && complements(S, s, *st))) {
      out.with_star = false;
      out.failure = LawFailure{"s* is a complement of s in Skel", {s}};
    }
  }
  if (!out.with_some_complement) out.with_star = false;
  return out;
}

BooleanCheck skeleton_boolean_check(const OrderedView& V) {
  return skeleton_boolean_check(V, pc_analysis(V));
}

std::optional<LawFailure> bdl_law_violation(const FiniteSemiring& S) {
  const auto n = static_cast<Element>(S.order());
  for (Element s = 0; s < n; ++s)
    for (Element t = 0; t < n; ++t) {
      if (S.add(s, S.mul(s, t)) != s) return LawFailure{"s + st = s", {s, t}};
      if (S.mul(s, S.add(s, t)) != s) return LawFailure{"s(s + t) = s", {s, t}};
      for (Element u = 0; u < n; ++u)
        if (S.mul(S.add(s, t), S.add(s, u)) != S.add(s, S.mul(t, u)))
          return LawFailure{"(s + t)(s + u) = s + tu", {s, t, u}};
    }
  return std::nullopt;
}

PcFunction validate_pc_function(const FiniteSemiring& S, const std::vector<int>& star) {
  if (star.size() != S.order())
    throw BadShape("pc-function must assign a value to each of the " +
                   std::to_string(S.order()) + " elements");
  PcFunction f;
  for (int v : star) {
    if (v < 0 || static_cast<std::size_t>(v) >= S.order())
      throw BadShape("pc-function value " + std::to_string(v) + " out of range");
    f.star_.push_back(static_cast<Element>(v));
  }
  for (Element s = 0; s < S.order(); ++s)
    if (S.mul(s, f.star_[s]) != S.zero()) throw NotAnnihilating(s);
  f.zero_axiom_ = f.star_[S.zero()] == S.one();
  f.sum_axiom_ = true;
  for (Element s = 0; s < S.order(); ++s)
    if (f.star_[S.add(s, f.star_[s])] != S.zero()) f.sum_axiom_ = false;
  return f;
}

PcFunction validate_pc_function(const FiniteSemiring& S, const std::vector<Element>& star) {
  return validate_pc_function(S, std::vector<int>(star.begin(), star.end()));
}

std::optional<PcFunction> pseudocomplement_function(const FiniteSemiring& S,
                                                    const PcAnalysis& pc) {
  if (!pc.pseudocomplemented()) return std::nullopt;
  std::vector<int> map;
  for (Element s = 0; s < S.order(); ++s) map.push_back(*pc.star(s));
  return validate_pc_function(S, map);
}

PcPrimeReport pc_prime_report(const FiniteSemiring& S, const PcFunction& star, const IdealSet& P,
                              const IdealCatalog& catalog) {
  if (!is_prime_ideal(S, P)) throw NotPrime();
  PcPrimeReport r;
  r.star_outside = r.double_star_inside = r.misses_star_zero = true;
  P.members.for_each([&](Element s) {
    if (P.contains(star(s))) r.star_outside = false;
    if (!P.contains(star(star(s)))) r.double_star_inside = false;
    if (star(s) == S.zero()) r.misses_star_zero = false;
  });
  r.extra_axioms = star.satisfies_zero_axiom() && star.satisfies_sum_axiom();
  if (r.star_outside) {
    r.minimal = catalog.is_minimal_prime(P);
    if (!r.double_star_inside) r.violations.push_back("(1) holds but s** not in P for some s in P");
    if (!*r.minimal) r.violations.push_back("(1) holds but P is not a minimal prime");
  }
  if (r.extra_axioms &&
      !(r.star_outside == r.double_star_inside && r.star_outside == r.misses_star_zero))
    r.violations.push_back("conditions (1), (2), (3) are not equivalent");
  return r;
}

PcPrimeReport pc_prime_report(const FiniteSemiring& S, const PcFunction& star, const IdealSet& P,
                              std::size_t cap) {
  return pc_prime_report(S, star, P, catalog_ideals(S, cap));
}

}  // namespace srw
