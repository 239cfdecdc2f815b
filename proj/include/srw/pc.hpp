#ifndef SRW_PC_HPP
#define SRW_PC_HPP

#include <optional>
#include <string>
#include <vector>

#include "srw/core.hpp"
#include "srw/ideals.hpp"

namespace srw {

/// {x : sx = 0}.
ElementSet annihilator_set(const FiniteSemiring& S, Element s);

/// The annihilator of s that bounds every other annihilator from above, if
/// one exists. Throws NotPositive unless V is positive.
std::optional<Element> pseudocomplement(const OrderedView& V, Element s);

/// Per-element pseudocomplements and the derived pcomp, Skel, Stone and Dns
/// sets. Immutable once built.
class PcAnalysis {
 public:
  /// Derives pcomp/Skel/Stone/Dns from a pseudocomplement assignment. Used by
  /// pc_analysis, and directly to feed hand-made (possibly corrupted) data to
  /// the theorem checks.
  static PcAnalysis from_pseudocomplements(const FiniteSemiring& S,
                                           std::vector<std::optional<Element>> pstar);

  std::size_t order() const { return pstar_.size(); }
  std::optional<Element> star(Element s) const { return pstar_[s]; }
  /// s**, defined when s and s* are both in pcomp.
  std::optional<Element> star2(Element s) const;
  /// s***, defined when s, s*, s** are all in pcomp.
  std::optional<Element> star3(Element s) const;
  const std::vector<std::optional<Element>>& pseudocomplements() const { return pstar_; }

  const ElementSet& pcomp() const { return pcomp_; }
  const ElementSet& skel() const { return skel_; }
  const ElementSet& stone() const { return stone_; }
  const ElementSet& dense() const { return dense_; }

  bool in_pcomp(Element s) const { return pcomp_.contains(s); }
  bool pseudocomplemented() const { return pcomp_.size() == order(); }
  bool stone_semiring() const { return stone_.size() == order(); }

 private:
  std::vector<std::optional<Element>> pstar_;
  ElementSet pcomp_, skel_, stone_, dense_;
};

/// Throws NotPositive.
PcAnalysis pc_analysis(const OrderedView& V);

/// A law that failed, with the elements involved.
struct LawFailure {
  std::string law;
  std::vector<Element> witness;
};

/// (Skel, ∨, ∧) with s ∨ t = (s* t*)* and s ∧ t = st. Tables are indexed by
/// carrier element and meaningful only on `elements`.
struct SkeletonLattice {
  std::size_t n = 0;
  std::vector<Element> elements;
  std::vector<Element> join_table;
  std::vector<Element> meet_table;
  std::vector<Element> complement;
  Element bottom = 0;
  Element top = 0;

  Element join(Element s, Element t) const { return join_table[s * n + t]; }
  Element meet(Element s, Element t) const { return meet_table[s * n + t]; }
};

/// Throws HypothesisNotMet unless the analysis reports a Stone semiring.
SkeletonLattice skeleton_lattice(const OrderedView& V, const PcAnalysis& pc);
SkeletonLattice skeleton_lattice(const OrderedView& V);

/// Closure, lattice, bound and complement laws of a skeleton lattice.
std::optional<LawFailure> check_bounded_complemented(const SkeletonLattice& L);

struct BooleanCheck {
  /// (Skel, +, ·, 0, 1, *) is a boolean algebra.
  bool with_star = false;
  /// (Skel, +, ·, 0, 1) is a boolean algebra under some complementation.
  bool with_some_complement = false;
  /// Why `with_star` is false.
  std::optional<LawFailure> failure;
};

/// Requires V positive (NotPositive).
BooleanCheck skeleton_boolean_check(const OrderedView& V, const PcAnalysis& pc);
BooleanCheck skeleton_boolean_check(const OrderedView& V);

/// First violation of the bounded-distributive-lattice laws
/// (s+t)(s+u) = s+tu, s+st = s, s(s+t) = s.
std::optional<LawFailure> bdl_law_violation(const FiniteSemiring& S);

/// A total map * with s · s* = 0 for every s.
class PcFunction {
 public:
  const std::vector<Element>& map() const { return star_; }
  Element operator()(Element s) const { return star_[s]; }
  /// 0* = 1.
  bool satisfies_zero_axiom() const { return zero_axiom_; }
  /// (s + s*)* = 0 for all s.
  bool satisfies_sum_axiom() const { return sum_axiom_; }

 private:
  friend PcFunction validate_pc_function(const FiniteSemiring&, const std::vector<int>&);
  std::vector<Element> star_;
  bool zero_axiom_ = false;
  bool sum_axiom_ = false;
};

/// Throws BadShape for a malformed map, NotAnnihilating{s} otherwise.
PcFunction validate_pc_function(const FiniteSemiring& S, const std::vector<int>& star);
PcFunction validate_pc_function(const FiniteSemiring& S, const std::vector<Element>& star);

/// The pseudocomplement map, when S is pseudocomplemented.
std::optional<PcFunction> pseudocomplement_function(const FiniteSemiring& S, const PcAnalysis& pc);

struct PcPrimeReport {
  bool star_outside = false;        // (1) s in P => s* not in P
  bool double_star_inside = false;  // (2) s in P => s** in P
  bool misses_star_zero = false;    // (3) P ∩ {s : s* = 0} = ∅
  bool extra_axioms = false;        // 0* = 1 and (s + s*)* = 0
  /// Evaluated when (1) holds.
  std::optional<bool> minimal;
  /// Theorem consequences that did not hold.
  std::vector<std::string> violations;
  bool consistent() const { return violations.empty(); }
};

/// Throws NotPrime.
PcPrimeReport pc_prime_report(const FiniteSemiring& S, const PcFunction& star, const IdealSet& P,
                              const IdealCatalog& catalog);
PcPrimeReport pc_prime_report(const FiniteSemiring& S, const PcFunction& star, const IdealSet& P,
                              std::size_t cap = kDefaultIdealCap);

}  // namespace srw

#endif  // SRW_PC_HPP
