#include "srw/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "srw/json_io.hpp"

namespace srw {

namespace {

struct TheoremName {
  Theorem theorem;
  const char* name;
  std::vector<std::string> clauses;
};

const std::vector<TheoremName>& theorem_names() {
  static const std::vector<TheoremName> names = {
      {Theorem::kPseudo1, "PSEUDO1", {"1", "2", "3", "4", "5", "6", "7", "8"}},
      {Theorem::kPcfnMin, "PCFN-MIN", {}},
      {Theorem::kPcfnMin2, "PCFN-MIN2", {}},
      {Theorem::kMinprimePc, "MINPRIME-PC", {}},
      {Theorem::kStone1, "STONE1", {"1", "2", "3"}},
      {Theorem::kSimple, "SIMPLE", {}},
      {Theorem::kBdl, "BDL", {}},
      {Theorem::kPbdl, "PBDL", {}},
      {Theorem::kStone2, "STONE2", {}},
      {Theorem::kSkel1, "SKEL1", {}},
      {Theorem::kSkelBool, "SKEL-BOOL", {}},
      {Theorem::kMi, "MI", {"1", "2", "3", "4"}},
      {Theorem::kDense1, "DENSE1", {"1", "2", "a", "b", "c"}},
      {Theorem::kMaxPrime, "MAX-PRIME", {}},
      {Theorem::kKrullRad, "KRULL-RAD", {}},
      {Theorem::kKrullMin, "KRULL-MIN", {}},
      {Theorem::kHuckaba, "HUCKABA", {}},
      {Theorem::kHuckaba2, "HUCKABA2", {}},
      {Theorem::kHuckaba3, "HUCKABA3", {}},
      {Theorem::kZdiv, "ZDIV", {}},
      {Theorem::kMinPbdl, "MIN-PBDL", {}},
      {Theorem::kIdSemiring, "IDSEMIRING", {}},
  };
  return names;
}

// ---------------------------------------------------------------------------
// Clause machinery

enum class Outcome { kNotApplicable, kHolds, kViolated };

struct Verdict {
  Outcome outcome = Outcome::kNotApplicable;
  std::string detail;
  Witness extra;
};

Verdict na() { return {}; }
Verdict holds() { return {Outcome::kHolds, {}, {}}; }
Verdict violated(std::string detail, Witness extra = {}) {
  return {Outcome::kViolated, std::move(detail), std::move(extra)};
}
Verdict expect(bool ok, std::string detail) { return ok ? holds() : violated(std::move(detail)); }

using Emit = std::function<void(const Witness&)>;

struct Clause {
  TheoremId id;
  // Reason the statement cannot be evaluated on this semiring at all.
  std::function<std::optional<std::string>(const VerificationContext&)> gate;
  std::function<void(const VerificationContext&, const Emit&)> instances;
  std::function<Verdict(const VerificationContext&, const Witness&)> check;
};

enum Need : unsigned {
  kPositive = 1u << 0,
  kZeroInPcomp = 1u << 1,
  kMultIdem = 1u << 2,
  kPseudocomplemented = 1u << 3,
  kStoneSemiring = 1u << 4,
  kIdeals = 1u << 5,
  kNilFree = 1u << 6,
  kOneStone = 1u << 7,
};

std::function<std::optional<std::string>(const VerificationContext&)> needs(unsigned flags) {
  return [flags](const VerificationContext& c) -> std::optional<std::string> {
    const PcAnalysis* pc = c.pc();
    const Element one = c.semiring().one();
    if ((flags & (kPositive | kZeroInPcomp | kPseudocomplemented | kStoneSemiring | kOneStone)) &&
        !pc)
      return "order is not positive";
    if ((flags & kZeroInPcomp) && !pc->in_pcomp(c.semiring().zero())) return "0 has no pseudocomplement";
    if ((flags & kMultIdem) && !c.mult_idempotent()) return "not multiplicatively idempotent";
    if ((flags & kPseudocomplemented) && !pc->pseudocomplemented()) return "not pseudocomplemented";
    if ((flags & kStoneSemiring) && !pc->stone_semiring()) return "not a Stone semiring";
    if ((flags & kOneStone) && !pc->stone().contains(one)) return "1 is not a Stone element";
    if ((flags & kIdeals) && !c.ideals()) return "order exceeds the ideal cap";
    if ((flags & kNilFree) && !c.nilpotent_free()) return "not nilpotent-free";
    return std::nullopt;
  };
}

Element el(const Witness& w, const char* name) { return w.elements.at(name); }
IdealSet ideal(const Witness& w, const char* name) { return IdealSet{w.sets.at(name)}; }

std::string lbl(const VerificationContext& c, Element e) { return c.semiring().label(e); }
std::string lbl(const VerificationContext& c, std::optional<Element> e) {
  return e ? lbl(c, *e) : std::string("undefined");
}

std::string set_text(const VerificationContext& c, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    if (!first) out += ", ";
    out += lbl(c, e);
    first = false;
  });
  return out + "}";
}

// Instance generators.

void single(const VerificationContext&, const Emit& emit) { emit(Witness{}); }

void each_s(const VerificationContext& c, const Emit& emit) {
  for (std::size_t s = 0; s < c.semiring().order(); ++s) {
    Witness w;
    w.elements["s"] = static_cast<Element>(s);
    emit(w);
  }
}

void each_st(const VerificationContext& c, const Emit& emit) {
  const std::size_t n = c.semiring().order();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      Witness w;
      w.elements["s"] = static_cast<Element>(s);
      w.elements["t"] = static_cast<Element>(t);
      emit(w);
    }
}

void each_ideal(const VerificationContext& c, const Emit& emit) {
  for (const IdealSet& I : c.ideals()->ideals) {
    Witness w;
    w.sets["I"] = I.members;
    emit(w);
  }
}

void each_prime(const VerificationContext& c, const Emit& emit) {
  for (const IdealSet& P : c.ideals()->primes) {
    Witness w;
    w.sets["P"] = P.members;
    emit(w);
  }
}

void each_ideal_prime_pair(const VerificationContext& c, const Emit& emit) {
  for (const IdealSet& I : c.ideals()->ideals)
    for (const IdealSet& P : c.ideals()->primes) {
      if (!I.subset_of(P)) continue;
      Witness w;
      w.sets["I"] = I.members;
      w.sets["P"] = P.members;
      emit(w);
    }
}

void each_pcfn_prime(const VerificationContext& c, const Emit& emit) {
  for (const PcFunction& f : c.pc_functions())
    for (const IdealSet& P : c.ideals()->primes) {
      Witness w;
      w.maps["star"] = f.map();
      w.sets["P"] = P.members;
      emit(w);
    }
}

void each_mc_set(const VerificationContext& c, const Emit& emit) {
  for (const ElementSet& W : c.mc_sets().sets) {
    Witness w;
    w.sets["W"] = W;
    emit(w);
  }
}

// ---------------------------------------------------------------------------
// Checks

Verdict check_pseudo1(const std::string& clause, const VerificationContext& c, const Witness& w) {
  const PcAnalysis& pc = *c.pc();
  const OrderedView& V = c.view();
  const FiniteSemiring& S = c.semiring();
  const Element zero = S.zero();
  const Element s = el(w, "s");
  const Element t = w.elements.count("t") ? el(w, "t") : Element{0};
  if (clause == "1") {
    if (!pc.in_pcomp(zero)) return na();
    return expect(V.leq(zero, s) && V.leq(s, *pc.star(zero)),
                  "s is not between 0 and 0* = " + lbl(c, pc.star(zero)));
  }
  if (clause == "2") {
    if (!pc.in_pcomp(s)) return na();
    const Element ss = *pc.star(s);
    if (S.mul(s, ss) != zero) return violated("s * s* = " + lbl(c, S.mul(s, ss)) + " with s* = " + lbl(c, ss));
    if (pc.in_pcomp(ss) && S.mul(ss, *pc.star(ss)) != zero)
      return violated("s* * s** = " + lbl(c, S.mul(ss, *pc.star(ss))));
    return holds();
  }
  if (clause == "3") {
    if (!pc.in_pcomp(t)) return na();
    const bool lhs = S.mul(s, t) == zero;
    const bool rhs = V.leq(s, *pc.star(t));
    return expect(lhs == rhs, std::string("st = 0 is ") + (lhs ? "true" : "false") + " but s <= t* is " +
                                  (rhs ? "true" : "false") + " (t* = " + lbl(c, pc.star(t)) + ")");
  }
  if (clause == "4") {
    const auto s2 = pc.star2(s);
    if (!s2) return na();
    return expect(V.leq(s, *s2), "s is not below s** = " + lbl(c, s2));
  }
  if (clause == "5") {
    const auto s3 = pc.star3(s);
    if (!s3) return na();
    return expect(*s3 == *pc.star(s), "s*** = " + lbl(c, s3) + " but s* = " + lbl(c, pc.star(s)));
  }
  if (clause == "6") {
    const auto s2 = pc.star2(s);
    if (!s2) return na();
    const bool lhs = S.mul(s, t) == zero;
    const bool rhs = S.mul(*s2, t) == zero;
    return expect(lhs == rhs, "st = 0 and s** t = 0 disagree (s** = " + lbl(c, s2) + ")");
  }
  if (clause == "7") {
    if (!pc.in_pcomp(s) || !pc.in_pcomp(t) || !V.leq(s, t)) return na();
    return expect(V.leq(*pc.star(t), *pc.star(s)),
                  "t* = " + lbl(c, pc.star(t)) + " is not below s* = " + lbl(c, pc.star(s)));
  }
  // clause 8
  const auto s2 = pc.star2(s);
  if (!s2) return na();
  const bool lhs = pc.skel().contains(s);
  const bool rhs = *s2 == s;
  return expect(lhs == rhs, std::string("s in Skel is ") + (lhs ? "true" : "false") + " but s** = s is " +
                                (rhs ? "true" : "false"));
}

Verdict check_stone1(const std::string& clause, const VerificationContext& c, const Witness& w) {
  const PcAnalysis& pc = *c.pc();
  const FiniteSemiring& S = c.semiring();
  const Element s = el(w, "s");
  if (!pc.stone().contains(s)) return na();
  if (clause == "1") {
    const Element ss = *pc.star(s);
    return expect(S.mul(ss, ss) == ss, "s* = " + lbl(c, ss) + " is not idempotent");
  }
  if (clause == "2")
    return expect(c.view().leq(S.mul(s, s), s), "s^2 = " + lbl(c, S.mul(s, s)) + " is not below s");
  if (!pc.skel().contains(s)) return na();
  return expect(S.mul(s, s) == s, "s^2 = " + lbl(c, S.mul(s, s)) + " differs from s");
}

Verdict check_mi(const std::string& clause, const VerificationContext& c, const Witness& w) {
  const PcAnalysis& pc = *c.pc();
  const FiniteSemiring& S = c.semiring();
  const Element s = el(w, "s");
  if (clause == "2") {
    if (!pc.star2(s)) return na();
    const Element sum = S.add(s, *pc.star(s));
    if (!pc.in_pcomp(sum)) return violated("s + s* has no pseudocomplement");
    return expect(*pc.star(sum) == S.zero(), "(s + s*)* = " + lbl(c, pc.star(sum)));
  }
  const Element t = el(w, "t");
  if (clause == "1") {
    if (!pc.in_pcomp(s) || !pc.in_pcomp(t)) return na();
    const Element sum = S.add(s, t);
    if (!pc.in_pcomp(sum)) return violated("s + t = " + lbl(c, sum) + " has no pseudocomplement");
    const Element prod = S.mul(*pc.star(s), *pc.star(t));
    return expect(*pc.star(sum) == prod,
                  "(s + t)* = " + lbl(c, pc.star(sum)) + " but s* t* = " + lbl(c, prod));
  }
  if (clause == "3") {
    if (!pc.star3(s) || !pc.star3(t)) return na();
    const Element a = S.add(*pc.star2(s), *pc.star2(t));
    const Element b = S.add(s, t);
    if (!pc.in_pcomp(a)) return violated("s** + t** has no pseudocomplement");
    if (!pc.in_pcomp(b)) return violated("s + t has no pseudocomplement");
    return expect(*pc.star(a) == *pc.star(b),
                  "(s** + t**)* = " + lbl(c, pc.star(a)) + " but (s + t)* = " + lbl(c, pc.star(b)));
  }
  if (!pc.skel().contains(s) || !pc.skel().contains(t)) return na();
  return expect(pc.skel().contains(S.mul(s, t)), "st = " + lbl(c, S.mul(s, t)) + " is not in Skel");
}

Verdict check_dense1(const std::string& clause, const VerificationContext& c, const Witness& w) {
  const PcAnalysis& pc = *c.pc();
  const FiniteSemiring& S = c.semiring();
  const ElementSet& dns = pc.dense();
  if (clause == "1") return expect(dns.contains(S.one()), "1 is not dense (1* = " + lbl(c, pc.star(S.one())) + ")");
  const Element s = el(w, "s");
  if (clause == "b") {
    if (!pc.star2(s)) return na();
    return expect(dns.contains(S.add(s, *pc.star(s))), "s + s* is not dense");
  }
  const Element t = el(w, "t");
  if (clause == "2") {
    if (!pc.in_pcomp(s) || !pc.in_pcomp(t) || !c.view().leq(s, t) || !dns.contains(s)) return na();
    return expect(dns.contains(t), "t is above a dense s but is not dense");
  }
  if (clause == "a") {
    if (!pc.in_pcomp(s) || !dns.contains(t)) return na();
    return expect(dns.contains(S.add(s, t)), "s + t = " + lbl(c, S.add(s, t)) + " is not dense");
  }
  // clause c
  if (!pc.star3(s) || !pc.star3(t)) return na();
  const bool lhs = dns.contains(S.add(*pc.star2(s), *pc.star2(t)));
  const bool rhs = dns.contains(S.add(s, t));
  return expect(lhs == rhs, std::string("s** + t** dense is ") + (lhs ? "true" : "false") +
                                " but s + t dense is " + (rhs ? "true" : "false"));
}

Verdict check_pcfn(bool second, const VerificationContext& c, const Witness& w) {
  const FiniteSemiring& S = c.semiring();
  const PcFunction f = validate_pc_function(S, w.maps.at("star"));
  const PcPrimeReport r = pc_prime_report(S, f, ideal(w, "P"), *c.ideals());
  if (!second) {
    if (!r.star_outside) return na();
    if (!r.double_star_inside) return violated("some s in P has s** outside P");
    return expect(r.minimal.value_or(false), "P is not a minimal prime");
  }
  if (!r.extra_axioms) return na();
  return expect(r.star_outside == r.double_star_inside && r.star_outside == r.misses_star_zero,
                std::string("conditions disagree: (1)=") + (r.star_outside ? "1" : "0") +
                    " (2)=" + (r.double_star_inside ? "1" : "0") + " (3)=" + (r.misses_star_zero ? "1" : "0"));
}

Verdict check_minprime_pc(const VerificationContext& c, const Witness& w) {
  const FiniteSemiring& S = c.semiring();
  std::optional<PcFunction> f;
  try {
    f = pseudocomplement_function(S, *c.pc());
  } catch (const NotAnnihilating& e) {
    return violated(std::string("pseudocomplement map is not a pc-function: ") + e.what());
  }
  if (!f) return na();
  const PcPrimeReport r = pc_prime_report(S, *f, ideal(w, "P"), *c.ideals());
  if (!r.star_outside) return na();
  if (!r.double_star_inside) return violated("some s in P has s** outside P");
  return expect(r.minimal.value_or(false), "P is not a minimal prime");
}

Verdict check_simple_family(bool with_bdl, const VerificationContext& c, const Witness&) {
  const PcAnalysis& pc = *c.pc();
  const FiniteSemiring& S = c.semiring();
  const Element one = S.one();
  std::vector<bool> conds;
  conds.push_back(pc.stone().contains(one));
  conds.push_back(*pc.star(S.zero()) == one);
  bool greatest = true;
  for (std::size_t s = 0; s < S.order(); ++s) greatest = greatest && c.view().leq(static_cast<Element>(s), one);
  conds.push_back(greatest);
  conds.push_back(is_simple(S));
  if (with_bdl) conds.push_back(!bdl_law_violation(S).has_value());
  std::string flags;
  for (bool b : conds) flags += b ? '1' : '0';
  return expect(std::all_of(conds.begin(), conds.end(), [&](bool b) { return b == conds[0]; }),
                "conditions disagree: " + flags);
}

Verdict check_pbdl(const VerificationContext& c, const Witness&) {
  const FiniteSemiring& S = c.semiring();
  const bool lhs = c.mult_idempotent() && c.pc()->stone().contains(S.one());
  const auto law = bdl_law_violation(S);
  const bool rhs = !law.has_value();
  return expect(lhs == rhs, std::string("idempotent with 1 Stone is ") + (lhs ? "true" : "false") +
                                " but lattice laws " + (rhs ? "hold" : "fail: " + law->law));
}

Verdict check_stone2(const VerificationContext& c, const Witness&) {
  const PcAnalysis& pc = *c.pc();
  const FiniteSemiring& S = c.semiring();
  const bool lhs = pc.stone_semiring();
  bool rhs = pc.stone().contains(S.one());
  Witness extra;
  for (std::size_t s = 0; s < S.order() && rhs; ++s)
    for (std::size_t t = 0; t < S.order() && rhs; ++t) {
      const Element a = static_cast<Element>(s), b = static_cast<Element>(t);
      if (*pc.star(S.mul(a, b)) != S.add(*pc.star(a), *pc.star(b))) {
        rhs = false;
        extra.elements["s"] = a;
        extra.elements["t"] = b;
      }
    }
  return lhs == rhs ? holds()
                    : violated(std::string("Stone semiring is ") + (lhs ? "true" : "false") +
                                   " but the product rule with 1 Stone is " + (rhs ? "true" : "false"),
                               extra);
}

Witness law_witness(const LawFailure& f) {
  Witness w;
  for (std::size_t i = 0; i < f.witness.size(); ++i) w.elements["w" + std::to_string(i)] = f.witness[i];
  return w;
}

Verdict check_skel1(const VerificationContext& c, const Witness&) {
  const SkeletonLattice L = skeleton_lattice(c.view(), *c.pc());
  const auto failure = check_bounded_complemented(L);
  if (failure) return violated("skeleton lattice law fails: " + failure->law, law_witness(*failure));
  return holds();
}

Verdict check_skel_bool(const VerificationContext& c, const Witness&) {
  const PcAnalysis& pc = *c.pc();
  const BooleanCheck b = skeleton_boolean_check(c.view(), pc);
  if (pc.stone_semiring() && !b.with_star) {
    Witness extra = b.failure ? law_witness(*b.failure) : Witness{};
    return violated("Stone semiring whose skeleton is not boolean with *" +
                        (b.failure ? ": " + b.failure->law : std::string()),
                    extra);
  }
  if (b.with_some_complement && !pc.stone_semiring())
    return violated("skeleton is boolean but the semiring is not Stone (non-Stone elements " +
                    set_text(c, c.semiring().carrier() - pc.stone()) + ")");
  return holds();
}

Verdict check_max_prime(const VerificationContext& c, const Witness& w) {
  const FiniteSemiring& S = c.semiring();
  const ElementSet& W = w.sets.at("W");
  if (W.contains(S.zero())) return na();
  for (const IdealSet& Q : maximal_disjoint_ideals(S, W, zero_ideal(S), c.ideals()->ideals))
    if (!is_prime_ideal(S, Q)) {
      Witness extra;
      extra.sets["Q"] = Q.members;
      return violated("maximal ideal disjoint from W is not prime: " + set_text(c, Q.members), extra);
    }
  return holds();
}

Verdict check_krull(bool minimal, const VerificationContext& c, const Witness& w) {
  const IdealSet I = ideal(w, "I");
  const RadicalReport r = radical(c.semiring(), I, *c.ideals());
  const IdealSet& other = minimal ? r.by_minimal_primes : r.by_primes;
  if (r.by_powers == other) return holds();
  Witness extra;
  extra.sets["radical"] = r.by_powers.members;
  extra.sets["intersection"] = other.members;
  return violated("radical " + set_text(c, r.by_powers.members) + " differs from the intersection " +
                      set_text(c, other.members),
                  extra);
}

Verdict check_huckaba(const VerificationContext& c, const Witness& w) {
  const HuckabaReport r = huckaba_criteria(c.semiring(), ideal(w, "I"), ideal(w, "P"), *c.ideals());
  if (r.power_condition != r.power_condition_positive)
    return violated("the exponent readings of condition (3) diverge");
  if (r.equivalent()) return holds();
  Witness extra;
  if (r.power_failure) extra.elements["x"] = *r.power_failure;
  if (r.extension) extra.elements["w"] = *r.extension;
  return violated(std::string("conditions disagree: minimal=") + (r.minimal ? "1" : "0") +
                      " mc-maximal=" + (r.mc_maximal ? "1" : "0") +
                      " power=" + (r.power_condition ? "1" : "0"),
                  extra);
}

Verdict check_huckaba2(const VerificationContext& c, const Witness& w) {
  const Huckaba2Report r = huckaba2_check(c.semiring(), ideal(w, "P"), *c.ideals());
  if (r.equivalent()) return holds();
  Witness extra;
  if (r.unannihilated) extra.elements["x"] = *r.unannihilated;
  return violated(std::string("minimal=") + (r.minimal ? "1" : "0") + " but annihilator condition=" +
                      (r.annihilator_condition ? "1" : "0"),
                  extra);
}

Verdict check_huckaba3(const VerificationContext& c, const Witness& w) {
  const Huckaba3Report r = huckaba3_check(c.semiring(), w.sets.at("I"), *c.ideals());
  return expect(r.equivalent(), std::string("contained in a minimal prime=") + (r.in_minimal_prime ? "1" : "0") +
                                    " but Ann(J) = " + set_text(c, r.annihilator.members));
}

Verdict check_zdiv(const VerificationContext& c, const Witness&) {
  const ElementSet z = zero_divisors(c.semiring());
  const ElementSet u = union_of(c.ideals()->minimal_primes);
  if (z == u) return holds();
  Witness extra;
  extra.sets["zero_divisors"] = z;
  extra.sets["union"] = u;
  return violated("Z(S) = " + set_text(c, z) + " but the union of minimal primes is " + set_text(c, u), extra);
}

Verdict check_min_pbdl(const VerificationContext& c, const Witness& w) {
  const MinPbdlReport r = minimalpbdl_report(c.view(), ideal(w, "P"), *c.ideals());
  return expect(r.equivalent(), std::string("conditions disagree: ") + (r.star_outside ? "1" : "0") +
                                    (r.double_star_inside ? "1" : "0") + (r.misses_dense ? "1" : "0") +
                                    (r.minimal ? "1" : "0"));
}

Verdict check_id_semiring(const VerificationContext& c, const Witness&) {
  IdealSemiring id = [&] {
    try {
      return build_ideal_semiring(c.semiring(), c.options().ideal_cap);
    } catch (const AxiomViolationError& e) {
      throw std::runtime_error(std::string("Id(S) is not a semiring: ") + e.what());
    }
  }();
  const IdealSemiringCheck r = verify_ideal_semiring(c.semiring(), id);
  if (r.holds()) return holds();
  Witness extra;
  if (r.mismatch) extra.sets["mismatch"] = id.ideals[*r.mismatch].members;
  return violated(std::string("order-compatible=") + (r.order_compatible ? "1" : "0") +
                      " positive=" + (r.positive ? "1" : "0") +
                      " pseudocomplemented=" + (r.pseudocomplemented ? "1" : "0") +
                      " annihilator-match=" + (r.annihilator_match ? "1" : "0"),
                  extra);
}

// ---------------------------------------------------------------------------

std::vector<Clause> build_clauses() {
  std::vector<Clause> cl;
  auto add = [&](Theorem t, std::string clause, unsigned flags,
                 std::function<void(const VerificationContext&, const Emit&)> inst,
                 std::function<Verdict(const VerificationContext&, const Witness&)> check) {
    cl.push_back(Clause{TheoremId{t, std::move(clause)}, needs(flags), std::move(inst), std::move(check)});
  };
  for (std::string k : {"1", "2", "3", "4", "5", "6", "7", "8"}) {
    const bool pair = k == "3" || k == "6" || k == "7";
    add(Theorem::kPseudo1, k, kPositive, pair ? each_st : each_s,
        [k](const VerificationContext& c, const Witness& w) { return check_pseudo1(k, c, w); });
  }
  add(Theorem::kPcfnMin, "", kIdeals, each_pcfn_prime,
      [](const VerificationContext& c, const Witness& w) { return check_pcfn(false, c, w); });
  add(Theorem::kPcfnMin2, "", kIdeals, each_pcfn_prime,
      [](const VerificationContext& c, const Witness& w) { return check_pcfn(true, c, w); });
  add(Theorem::kMinprimePc, "", kPseudocomplemented | kIdeals, each_prime, check_minprime_pc);
  for (std::string k : {"1", "2", "3"})
    add(Theorem::kStone1, k, kPositive, each_s,
        [k](const VerificationContext& c, const Witness& w) { return check_stone1(k, c, w); });
  add(Theorem::kSimple, "", kZeroInPcomp, single,
      [](const VerificationContext& c, const Witness& w) { return check_simple_family(false, c, w); });
  add(Theorem::kBdl, "", kZeroInPcomp | kMultIdem, single,
      [](const VerificationContext& c, const Witness& w) { return check_simple_family(true, c, w); });
  add(Theorem::kPbdl, "", kPseudocomplemented, single, check_pbdl);
  add(Theorem::kStone2, "", kPseudocomplemented, single, check_stone2);
  add(Theorem::kSkel1, "", kStoneSemiring, single, check_skel1);
  add(Theorem::kSkelBool, "", kPseudocomplemented, single, check_skel_bool);
  for (std::string k : {"1", "2", "3", "4"})
    add(Theorem::kMi, k, kPositive | kMultIdem, k == "2" ? each_s : each_st,
        [k](const VerificationContext& c, const Witness& w) { return check_mi(k, c, w); });
  add(Theorem::kDense1, "1", kPositive, single,
      [](const VerificationContext& c, const Witness& w) { return check_dense1("1", c, w); });
  add(Theorem::kDense1, "2", kPositive, each_st,
      [](const VerificationContext& c, const Witness& w) { return check_dense1("2", c, w); });
  for (std::string k : {"a", "b", "c"})
    add(Theorem::kDense1, k, kPositive | kMultIdem, k == "b" ? each_s : each_st,
        [k](const VerificationContext& c, const Witness& w) { return check_dense1(k, c, w); });
  cl.push_back(Clause{TheoremId{Theorem::kMaxPrime, ""},
                      [](const VerificationContext& c) -> std::optional<std::string> {
                        if (auto r = needs(kIdeals)(c)) return r;
                        if (!c.mc_sets().complete) return std::string("MC-set enumeration cap exceeded");
                        return std::nullopt;
                      },
                      each_mc_set, check_max_prime});
  add(Theorem::kKrullRad, "", kIdeals, each_ideal,
      [](const VerificationContext& c, const Witness& w) { return check_krull(false, c, w); });
  add(Theorem::kKrullMin, "", kIdeals, each_ideal,
      [](const VerificationContext& c, const Witness& w) { return check_krull(true, c, w); });
  add(Theorem::kHuckaba, "", kIdeals, each_ideal_prime_pair, check_huckaba);
  add(Theorem::kHuckaba2, "", kIdeals | kNilFree, each_prime, check_huckaba2);
  add(Theorem::kHuckaba3, "", kIdeals | kNilFree, each_ideal, check_huckaba3);
  add(Theorem::kZdiv, "", kIdeals | kNilFree, single, check_zdiv);
  add(Theorem::kMinPbdl, "", kMultIdem | kPseudocomplemented | kOneStone | kIdeals, each_prime,
      check_min_pbdl);
  add(Theorem::kIdSemiring, "", kIdeals, single, check_id_semiring);
  return cl;
}

const std::vector<Clause>& clauses() {
  static const std::vector<Clause> all = build_clauses();
  return all;
}

const Clause& clause_for(const TheoremId& id) {
  for (const Clause& c : clauses())
    if (c.id == id) return c;
  throw ParseError("unknown theorem " + id.to_string());
}

Verdict run_check(const Clause& clause, const VerificationContext& ctx, const Witness& w) {
  try {
    return clause.check(ctx, w);
  } catch (const std::exception& e) {
    return violated(std::string("check raised: ") + e.what());
  }
}

Witness merge(Witness base, const Verdict& v) {
  for (const auto& [k, e] : v.extra.elements) base.elements[k] = e;
  for (const auto& [k, s] : v.extra.sets) base.sets[k] = s;
  for (const auto& [k, m] : v.extra.maps) base.maps[k] = m;
  base.detail = v.detail;
  return base;
}

// All pc-functions when there are few enough, otherwise a fixed family: the
// zero map, the pseudocomplement map (when total) and each element's
// largest-index annihilator.
std::vector<PcFunction> pc_function_family(const FiniteSemiring& S, const PcAnalysis* pc,
                                           std::size_t cap, bool& exhaustive) {
  const std::size_t n = S.order();
  std::vector<std::vector<Element>> ann(n);
  std::size_t total = 1;
  for (std::size_t s = 0; s < n; ++s) {
    ann[s] = annihilator_set(S, static_cast<Element>(s)).elements();
    total = total > cap ? total : total * ann[s].size();
  }
  std::vector<PcFunction> out;
  exhaustive = total <= cap;
  if (exhaustive) {
    std::vector<std::size_t> pos(n, 0);
    std::vector<Element> map(n);
    while (true) {
      for (std::size_t s = 0; s < n; ++s) map[s] = ann[s][pos[s]];
      out.push_back(validate_pc_function(S, map));
      std::size_t k = 0;
      while (k < n && ++pos[k] == ann[k].size()) pos[k++] = 0;
      if (k == n) break;
    }
    return out;
  }
  std::vector<std::vector<Element>> maps;
  maps.emplace_back(n, S.zero());
  if (pc && pc->pseudocomplemented()) {
    std::vector<Element> m(n);
    for (std::size_t s = 0; s < n; ++s) m[s] = *pc->star(static_cast<Element>(s));
    maps.push_back(m);
  }
  std::vector<Element> last(n);
  for (std::size_t s = 0; s < n; ++s) last[s] = ann[s].back();
  maps.push_back(last);
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  for (const auto& m : maps) {
    try {
      out.push_back(validate_pc_function(S, m));
    } catch (const NotAnnihilating&) {
    }
  }
  return out;
}

nlohmann::json witness_json(const Witness& w) {
  nlohmann::json j = nlohmann::json::object();
  nlohmann::json elements = nlohmann::json::object();
  for (const auto& [k, e] : w.elements) elements[k] = int(e);
  nlohmann::json sets = nlohmann::json::object();
  for (const auto& [k, s] : w.sets) sets[k] = to_json(s);
  nlohmann::json maps = nlohmann::json::object();
  for (const auto& [k, m] : w.maps) {
    nlohmann::json arr = nlohmann::json::array();
    for (Element e : m) arr.push_back(int(e));
    maps[k] = arr;
  }
  j["elements"] = elements;
  j["sets"] = sets;
  j["maps"] = maps;
  j["detail"] = w.detail;
  return j;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(Theorem t) {
  for (const auto& n : theorem_names())
    if (n.theorem == t) return n.name;
  return "?";
}

std::string TheoremId::to_string() const {
  std::string out(srw::to_string(theorem));
  if (!clause.empty()) out += "." + clause;
  return out;
}

const std::vector<TheoremId>& theorem_catalog() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> out;
    for (const auto& n : theorem_names()) {
      if (n.clauses.empty()) out.push_back({n.theorem, ""});
      for (const auto& k : n.clauses) out.push_back({n.theorem, k});
    }
    return out;
  }();
  return ids;
}

std::vector<TheoremId> parse_theorem_ids(std::string_view text) {
  std::string s(text);
  for (const auto& n : theorem_names()) {
    if (s == n.name) {
      std::vector<TheoremId> out;
      if (n.clauses.empty()) out.push_back({n.theorem, ""});
      for (const auto& k : n.clauses) out.push_back({n.theorem, k});
      return out;
    }
  }
  for (const TheoremId& id : theorem_catalog())
    if (id.to_string() == s) return {id};
  throw ParseError("unknown theorem id '" + s + "'");
}

std::vector<TheoremId> parse_theorem_list(std::string_view text) {
  if (text.find_first_not_of(" \t") == std::string_view::npos) return theorem_catalog();
  std::vector<TheoremId> out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw ParseError("empty entry in theorem list");
    if (item == "all") return theorem_catalog();
    for (auto& id : parse_theorem_ids(item))
      if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  }
  return out;
}

std::string_view to_string(Result r) {
  switch (r) {
    case Result::kPass: return "pass";
    case Result::kFail: return "fail";
    case Result::kSkipped: return "skipped";
  }
  return "?";
}

VerificationContext::VerificationContext(std::string id, OrderedView view, VerifyOptions options)
    : id_(std::move(id)), view_(std::move(view)), options_(options) {
  const FiniteSemiring& S = view_.semiring();
  if (view_.positive()) pc_ = pc_analysis(view_);
  if (S.order() <= options_.ideal_cap) {
    catalog_ = catalog_ideals(S, options_.ideal_cap);
    mc_sets_ = enumerate_mc_sets(S, options_.mc_set_cap);
  }
  mult_idempotent_ = is_mult_idempotent(S);
  nilpotent_free_ = nilpotent_analysis(S).nilpotent_free;
  pc_functions_ = pc_function_family(S, pc(), options_.pc_function_cap, pc_functions_exhaustive_);
}

void VerificationContext::add_pc_function(PcFunction f) {
  for (const auto& g : pc_functions_)
    if (g.map() == f.map()) return;
  pc_functions_.push_back(std::move(f));
}

TheoremReport verify(const VerificationContext& ctx, const TheoremId& id) {
  TheoremReport r;
  r.theorem = id;
  r.semiring_id = ctx.id();
  const Clause& clause = clause_for(id);
  if (auto reason = clause.gate(ctx)) {
    r.skip_reason = *reason;
    return r;
  }
  try {
    clause.instances(ctx, [&](const Witness& w) {
      const Verdict v = run_check(clause, ctx, w);
      if (v.outcome == Outcome::kNotApplicable) return;
      ++r.instances;
      if (v.outcome == Outcome::kViolated && !r.witness) r.witness = merge(w, v);
    });
  } catch (const std::exception& e) {
    Witness w;
    w.detail = std::string("instance generation raised: ") + e.what();
    r.witness = w;
    r.hypotheses_met = true;
    r.result = Result::kFail;
    return r;
  }
  r.hypotheses_met = r.instances > 0;
  if (r.witness)
    r.result = Result::kFail;
  else if (r.instances > 0)
    r.result = Result::kPass;
  else
    r.skip_reason = "no instance satisfies the hypotheses";
  return r;
}

std::vector<TheoremReport> verify(const VerificationContext& ctx, const std::vector<TheoremId>& ids) {
  std::vector<TheoremReport> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(verify(ctx, id));
  return out;
}

bool replay(const VerificationContext& ctx, const TheoremReport& report) {
  if (report.result != Result::kFail || !report.witness) return false;
  const Clause& clause = clause_for(report.theorem);
  if (clause.gate(ctx)) return false;
  return run_check(clause, ctx, *report.witness).outcome == Outcome::kViolated;
}

McSetList enumerate_mc_sets(const FiniteSemiring& S, std::size_t cap) {
  // Next-closure enumeration of the closed sets of X -> mc_closure(X).
  McSetList out;
  const std::size_t n = S.order();
  auto close = [&](const ElementSet& X) { return mc_closure(S, X); };
  ElementSet A = close(ElementSet{});
  out.sets.push_back(A);
  while (true) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      const Element e = static_cast<Element>(i);
      if (A.contains(e)) {
        A.erase(e);
        continue;
      }
      ElementSet B = A;
      B.insert(e);
      B = close(B);
      // B is the lectic successor iff it adds nothing below i.
      ElementSet low = ElementSet::all(i);
      if ((B & low) == (A & low)) {
        A = B;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    if (out.sets.size() >= cap) {
      out.complete = false;
      break;
    }
    out.sets.push_back(A);
  }
  return out;
}

std::vector<CorpusMember> build_corpus(const std::vector<GeneratorSpec>& specs, unsigned order_cap) {
  std::vector<CorpusMember> out;
  for (const auto& spec : specs)
    for (auto& named : generate(spec, order_cap))
      out.push_back(CorpusMember{named.id, default_view(named.semiring)});
  return out;
}

std::vector<GeneratorSpec> default_corpus_specs() {
  std::vector<GeneratorSpec> specs;
  std::vector<GeneratorSpec> named;
  auto spec = [](Family f, std::vector<unsigned> p) { return GeneratorSpec{f, std::move(p), {}}; };
  for (unsigned k = 2; k <= 4; ++k) specs.push_back(spec(Family::kExhaustive, {k}));
  for (unsigned k = 2; k <= 6; ++k) named.push_back(spec(Family::kChain, {k}));
  for (unsigned k = 1; k <= 4; ++k) named.push_back(spec(Family::kPowerset, {k}));
  for (unsigned m : {4u, 6u, 8u, 12u, 30u}) named.push_back(spec(Family::kDivisorLattice, {m}));
  for (unsigned m = 2; m <= 16; ++m) named.push_back(spec(Family::kIdealSemiringOfZm, {m}));
  for (unsigned k = 1; k <= 6; ++k) named.push_back(spec(Family::kTruncatedMinPlus, {k}));
  named.push_back(spec(Family::kStackedDiamond, {}));
  specs.insert(specs.end(), named.begin(), named.end());

  std::vector<std::size_t> sizes;
  for (const auto& s : named) sizes.push_back(generate(s).front().semiring.order());
  for (std::size_t i = 0; i < named.size(); ++i)
    for (std::size_t j = i; j < named.size(); ++j)
      if (sizes[i] * sizes[j] <= 16)
        specs.push_back(GeneratorSpec{Family::kProduct, {}, {named[i], named[j]}});
  return specs;
}

CorpusCounts CorpusReport::totals() const {
  CorpusCounts c;
  for (const auto& r : reports) {
    if (r.result == Result::kPass) ++c.pass;
    if (r.result == Result::kFail) ++c.fail;
    if (r.result == Result::kSkipped) ++c.skipped;
  }
  return c;
}

std::map<std::string, CorpusCounts> CorpusReport::by_theorem() const {
  std::map<std::string, CorpusCounts> out;
  for (const auto& r : reports) {
    auto& c = out[r.theorem.to_string()];
    if (r.result == Result::kPass) ++c.pass;
    if (r.result == Result::kFail) ++c.fail;
    if (r.result == Result::kSkipped) ++c.skipped;
  }
  return out;
}

CorpusReport corpus_run(const std::vector<CorpusMember>& members, const std::vector<TheoremId>& theorems,
                        const VerifyOptions& options, unsigned jobs) {
  std::vector<std::vector<TheoremReport>> slots(members.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < members.size(); i = next++) {
      const VerificationContext ctx(members[i].id, members[i].view, options);
      slots[i] = verify(ctx, theorems);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(members.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  CorpusReport out;
  out.members = members.size();
  for (auto& s : slots)
    for (auto& r : s) out.reports.push_back(std::move(r));
  return out;
}

nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json j;
  j["semiring"] = r.semiring_id;
  j["theorem"] = std::string(to_string(r.theorem.theorem));
  j["clause"] = r.theorem.clause.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.theorem.clause);
  j["hypotheses_met"] = r.hypotheses_met;
  j["instances"] = r.instances;
  j["result"] = std::string(to_string(r.result));
  j["witness"] = r.witness ? witness_json(*r.witness) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const CorpusReport& r) {
  nlohmann::json j;
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& t : r.reports) reports.push_back(to_json(t));
  const CorpusCounts c = r.totals();
  j["reports"] = reports;
  j["members"] = r.members;
  j["totals"] = {{"pass", c.pass}, {"fail", c.fail}, {"skipped", c.skipped}};
  return j;
}

std::string report_line(const TheoremReport& r) {
  std::ostringstream out;
  out << std::left << std::setw(14) << r.theorem.to_string() << std::setw(8) << to_string(r.result)
      << "instances=" << r.instances;
  if (r.result == Result::kSkipped && !r.skip_reason.empty()) out << "  (" << r.skip_reason << ")";
  if (r.witness) out << "  " << r.witness->detail;
  return out.str();
}

std::string summary_table(const CorpusReport& r) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "theorem" << std::right << std::setw(8) << "pass" << std::setw(8)
      << "fail" << std::setw(9) << "skipped" << '\n';
  const auto counts = r.by_theorem();
  for (const TheoremId& id : theorem_catalog()) {
    auto it = counts.find(id.to_string());
    if (it == counts.end()) continue;
    out << std::left << std::setw(14) << it->first << std::right << std::setw(8) << it->second.pass
        << std::setw(8) << it->second.fail << std::setw(9) << it->second.skipped << '\n';
  }
  const CorpusCounts t = r.totals();
  out << std::left << std::setw(14) << "total" << std::right << std::setw(8) << t.pass << std::setw(8)
      << t.fail << std::setw(9) << t.skipped << '\n';
  out << r.members << " semirings\n";
  for (const auto& rep : r.reports)
    if (rep.result == Result::kFail) out << "FAIL " << rep.semiring_id << "  " << report_line(rep) << '\n';
  return out.str();
}

}  // namespace srw
