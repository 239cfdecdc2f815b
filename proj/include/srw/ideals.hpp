#ifndef SRW_IDEALS_HPP
#define SRW_IDEALS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srw/core.hpp"

namespace srw {

inline constexpr std::size_t kDefaultIdealCap = 24;

/// An ideal: contains zero, closed under addition, absorbing under
/// multiplication by any carrier element.
struct IdealSet {
  ElementSet members;

  bool contains(Element e) const { return members.contains(e); }
  std::size_t size() const { return members.size(); }
  bool subset_of(const IdealSet& o) const { return members.subset_of(o.members); }
  friend bool operator==(const IdealSet&, const IdealSet&) = default;
};

bool is_ideal(const FiniteSemiring& S, const ElementSet& set);

/// Throws NotAnIdeal when `set` violates the ideal conditions.
IdealSet as_ideal(const FiniteSemiring& S, const ElementSet& set);

IdealSet zero_ideal(const FiniteSemiring& S);
IdealSet unit_ideal(const FiniteSemiring& S);

/// Least ideal containing `gens`.
IdealSet ideal_generated(const FiniteSemiring& S, const ElementSet& gens);
inline IdealSet principal_ideal(const FiniteSemiring& S, Element s) {
  return ideal_generated(S, ElementSet{s});
}

/// Every ideal of S, ascending by size then bit pattern. Throws
/// CapacityExceeded when n exceeds `cap`.
std::vector<IdealSet> enumerate_ideals(const FiniteSemiring& S, std::size_t cap = kDefaultIdealCap);

IdealSet ideal_sum(const FiniteSemiring& S, const IdealSet& I, const IdealSet& J);
IdealSet ideal_product(const FiniteSemiring& S, const IdealSet& I, const IdealSet& J);

/// Id(S): the semiring of ideals of S, with the inclusion order. Element i of
/// `semiring` is `ideals[i]`.
struct IdealSemiring {
  FiniteSemiring semiring;
  OrderRelation inclusion;
  std::vector<IdealSet> ideals;

  std::size_t index_of(const IdealSet& I) const;
};

/// Throws CapacityExceeded when S has more than 255 ideals (or n > cap).
IdealSemiring build_ideal_semiring(const FiniteSemiring& S, std::size_t cap = kDefaultIdealCap);

/// Outcome of checking that Id(S) is a positive pseudocomplemented semiring
/// whose pseudocomplements are the ideals generated by all annihilating ideals.
struct IdealSemiringCheck {
  bool order_compatible = false;
  bool positive = false;
  bool pseudocomplemented = false;
  bool annihilator_match = false;
  /// First ideal (index into Id(S)) whose pseudocomplement is wrong or missing.
  std::optional<std::size_t> mismatch;
  bool holds() const { return order_compatible && positive && pseudocomplemented && annihilator_match; }
};

IdealSemiringCheck verify_ideal_semiring(const FiniteSemiring& base, const IdealSemiring& id);

/// In Id(Z_{n^3}) with a = (n), b = c = (n^2): a + bc versus (a + b)(a + c).
struct PaperExampleReport {
  unsigned n = 0;
  unsigned modulus = 0;
  /// Generators (divisors of the modulus) of a + bc and (a + b)(a + c).
  unsigned lhs_generator = 0;
  unsigned rhs_generator = 0;
  bool inequality_holds = false;
  bool positive = false;
  bool pseudocomplemented = false;
  bool distributive_lattice_law_fails = false;
  bool holds() const {
    return inequality_holds && positive && pseudocomplemented && distributive_lattice_law_fails;
  }
};

/// Requires n >= 2 and n^3 <= 255.
PaperExampleReport paper_example_check(unsigned n);

bool is_prime_ideal(const FiniteSemiring& S, const IdealSet& I);

/// ⊆-minimal members of a list of ideals, in input order.
std::vector<IdealSet> minimal_elements(std::span<const IdealSet> ideals);
/// Intersection of a list; the whole carrier for an empty list.
ElementSet intersection_of(const FiniteSemiring& S, std::span<const IdealSet> ideals);
ElementSet union_of(std::span<const IdealSet> ideals);

/// Ideals and prime spectrum of S, computed once and reused.
struct IdealCatalog {
  std::vector<IdealSet> ideals;
  std::vector<IdealSet> primes;
  std::vector<IdealSet> minimal_primes;  // Min(S)

  /// V(I) in catalog order.
  std::vector<IdealSet> primes_containing(const IdealSet& I) const;
  /// Min(I); empty when I is the unit ideal.
  std::vector<IdealSet> minimal_primes_of(const IdealSet& I) const;
  bool is_minimal_prime(const IdealSet& P) const;
};

IdealCatalog catalog_ideals(const FiniteSemiring& S, std::size_t cap = kDefaultIdealCap);

std::vector<IdealSet> enumerate_primes(const FiniteSemiring& S, std::size_t cap = kDefaultIdealCap);

struct SpectrumReport {
  std::vector<IdealSet> primes;
  std::vector<IdealSet> v_of_i;
  std::vector<IdealSet> minimal;
  IdealSet nilradical;
  bool nilpotent_free = false;
  ElementSet zero_divisors;
  /// Primes P whose only subideals are (0) and P.
  std::vector<IdealSet> primes_with_no_proper_nonzero_subideal;
  /// Whether that reading of "minimal prime" differs from Min(S).
  bool minimal_readings_diverge = false;
};

SpectrumReport spectrum(const FiniteSemiring& S, const IdealSet& I,
                        std::size_t cap = kDefaultIdealCap);

/// Contains one and is closed under multiplication.
bool is_mc_set(const FiniteSemiring& S, const ElementSet& W);
/// Least MC-set containing W.
ElementSet mc_closure(const FiniteSemiring& S, const ElementSet& W);

/// Ideals containing I, disjoint from the MC-set W, maximal under ⊆.
/// Throws HypothesisNotMet when W is not an MC-set or meets I.
std::vector<IdealSet> maximal_disjoint_ideals(const FiniteSemiring& S, const ElementSet& W,
                                              const IdealSet& I,
                                              std::span<const IdealSet> all_ideals);
std::vector<IdealSet> maximal_disjoint_ideals(const FiniteSemiring& S, const ElementSet& W,
                                              const IdealSet& I,
                                              std::size_t cap = kDefaultIdealCap);

/// {s : s^k in I for some k >= 1}; powers cycle within n steps.
IdealSet radical_by_powers(const FiniteSemiring& S, const IdealSet& I);

struct RadicalReport {
  IdealSet by_powers;
  IdealSet by_primes;          // ∩ V(I)
  IdealSet by_minimal_primes;  // ∩ Min(I)
  bool agree() const { return by_powers == by_primes && by_powers == by_minimal_primes; }
};

RadicalReport radical(const FiniteSemiring& S, const IdealSet& I, const IdealCatalog& catalog);
RadicalReport radical(const FiniteSemiring& S, const IdealSet& I,
                      std::size_t cap = kDefaultIdealCap);

struct NilpotentReport {
  IdealSet nilradical;
  bool nilpotent_free = false;
};

NilpotentReport nilpotent_analysis(const FiniteSemiring& S);

/// Min(I). Throws EmptySpectrum when no prime contains I.
std::vector<IdealSet> minimal_primes(const FiniteSemiring& S, const IdealSet& I,
                                     std::size_t cap = kDefaultIdealCap);

/// The three equivalent characterisations of a minimal prime of I.
struct HuckabaReport {
  bool minimal = false;        // P in Min(I)
  bool mc_maximal = false;     // S - P maximal among MC-sets missing I
  bool power_condition = false;           // exponent i >= 0
  bool power_condition_positive = false;  // exponent i >= 1
  /// x in P with no (y, i) witness, when the power condition fails.
  std::optional<Element> power_failure;
  /// w in P whose MC-extension of S - P still misses I, when not maximal.
  std::optional<Element> extension;
  bool equivalent() const {
    return minimal == mc_maximal && minimal == power_condition &&
           power_condition == power_condition_positive;
  }
};

/// Throws NotPrime or NotContaining.
HuckabaReport huckaba_criteria(const FiniteSemiring& S, const IdealSet& I, const IdealSet& P,
                               const IdealCatalog& catalog);
HuckabaReport huckaba_criteria(const FiniteSemiring& S, const IdealSet& I, const IdealSet& P,
                               std::size_t cap = kDefaultIdealCap);

/// Ann(H). Throws HypothesisNotMet when H is empty.
IdealSet annihilator_ideal(const FiniteSemiring& S, const ElementSet& H);

struct Huckaba2Report {
  bool minimal = false;
  bool annihilator_condition = false;  // every x in P has y outside P with xy = 0
  std::optional<Element> unannihilated;
  bool equivalent() const { return minimal == annihilator_condition; }
};

/// Requires S nilpotent-free (HypothesisNotMet) and P prime (NotPrime).
Huckaba2Report huckaba2_check(const FiniteSemiring& S, const IdealSet& P,
                              const IdealCatalog& catalog);
Huckaba2Report huckaba2_check(const FiniteSemiring& S, const IdealSet& P,
                              std::size_t cap = kDefaultIdealCap);

struct Huckaba3Report {
  IdealSet ideal;
  IdealSet annihilator;
  bool in_minimal_prime = false;
  bool annihilator_nonzero = false;
  bool equivalent() const { return in_minimal_prime == annihilator_nonzero; }
};

/// Requires S nilpotent-free (HypothesisNotMet).
Huckaba3Report huckaba3_check(const FiniteSemiring& S, const ElementSet& gens,
                              const IdealCatalog& catalog);
Huckaba3Report huckaba3_check(const FiniteSemiring& S, const ElementSet& gens,
                              std::size_t cap = kDefaultIdealCap);

/// Z(S) = {s : st = 0 for some t != 0}.
ElementSet zero_divisors(const FiniteSemiring& S);

/// Four equivalent characterisations of minimal primes in a multiplicatively
/// idempotent pseudocomplemented semiring with 1 Stone.
struct MinPbdlReport {
  bool star_outside = false;   // s in P => s* not in P
  bool double_star_inside = false;  // s in P => s** in P
  bool misses_dense = false;   // P ∩ Dns(S) = ∅
  bool minimal = false;        // P in Min(S)
  bool equivalent() const {
    return star_outside == double_star_inside && star_outside == misses_dense &&
           star_outside == minimal;
  }
};

/// Throws HypothesisNotMet or NotPrime.
MinPbdlReport minimalpbdl_report(const OrderedView& V, const IdealSet& P,
                                 const IdealCatalog& catalog);
MinPbdlReport minimalpbdl_report(const OrderedView& V, const IdealSet& P,
                                 std::size_t cap = kDefaultIdealCap);

}  // namespace srw

#endif  // SRW_IDEALS_HPP
