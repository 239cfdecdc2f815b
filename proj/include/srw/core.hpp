#ifndef SRW_CORE_HPP
#define SRW_CORE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srw/element_set.hpp"
#include "srw/errors.hpp"

namespace srw {

/// Raw, unvalidated description of a finite semiring as read from a file or
/// produced by a generator. Tables are row-major: add[s][t] is s + t.
struct SemiringTables {
  std::size_t n = 0;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  int zero = 0;
  int one = 1;
  std::vector<std::string> labels;
};

enum class AxiomId {
  kAddCommutative,
  kAddAssociative,
  kAddIdentity,
  kMulCommutative,
  kMulAssociative,
  kMulIdentity,
  kDistributive,
  kAbsorbingZero,
};

std::string_view to_string(AxiomId id);

/// One violated axiom: the first witness found in lexicographic scan order and
/// the total number of violating tuples.
struct AxiomViolation {
  AxiomId axiom;
  std::vector<Element> witness;
  std::size_t count = 0;
};

/// Thrown by validate_semiring; carries every violated axiom.
class AxiomViolationError : public Error {
 public:
  explicit AxiomViolationError(std::vector<AxiomViolation> violations);
  const std::vector<AxiomViolation>& violations() const { return violations_; }

 private:
  std::vector<AxiomViolation> violations_;
};

/// A validated finite commutative semiring on the carrier {0, ..., n-1}.
/// Only obtainable through validate_semiring, so every instance satisfies the
/// axioms. Immutable.
class FiniteSemiring {
 public:
  std::size_t order() const { return n_; }
  Element zero() const { return zero_; }
  Element one() const { return one_; }

  Element add(Element s, Element t) const { return add_[s * n_ + t]; }
  Element mul(Element s, Element t) const { return mul_[s * n_ + t]; }

  /// s^k for k >= 0.
  Element power(Element s, std::size_t k) const;

  const std::string& label(Element s) const { return labels_[s]; }
  const std::vector<std::string>& labels() const { return labels_; }

  ElementSet carrier() const { return ElementSet::all(n_); }

  /// Back to the raw form (round-trips through validate_semiring).
  SemiringTables tables() const;

  friend bool operator==(const FiniteSemiring& a, const FiniteSemiring& b) {
    return a.n_ == b.n_ && a.zero_ == b.zero_ && a.one_ == b.one_ && a.add_ == b.add_ &&
           a.mul_ == b.mul_;
  }

 private:
  friend FiniteSemiring validate_semiring(const SemiringTables& tables);

  std::size_t n_ = 0;
  Element zero_ = 0;
  Element one_ = 0;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<std::string> labels_;
};

/// Every axiom family violated by the tables. Shape errors throw BadShape,
/// a coincident zero and one throws ZeroEqualsOne.
std::vector<AxiomViolation> check_semiring_axioms(const SemiringTables& tables);

/// Validates the tables exhaustively (O(n^3)) and returns the semiring, or
/// throws AxiomViolationError listing every violated axiom.
FiniteSemiring validate_semiring(const SemiringTables& tables);

FiniteSemiring validate_semiring(std::vector<std::vector<int>> add_table,
                                 std::vector<std::vector<int>> mul_table, int zero, int one,
                                 std::size_t n);

enum class OrderSource { kSupplied, kNaturalFromAddition };

/// Partial order on a carrier. leq(s, t) means s <= t.
class OrderRelation {
 public:
  /// Validates reflexivity, antisymmetry and transitivity; throws InvalidOrder.
  static OrderRelation from_matrix(const std::vector<std::vector<bool>>& leq,
                                   OrderSource source = OrderSource::kSupplied);
  static OrderRelation discrete(std::size_t n);

  std::size_t order() const { return n_; }
  bool leq(Element s, Element t) const { return leq_[s * n_ + t] != 0; }
  OrderSource source() const { return source_; }

  std::vector<std::vector<bool>> matrix() const;

  friend bool operator==(const OrderRelation& a, const OrderRelation& b) {
    return a.n_ == b.n_ && a.leq_ == b.leq_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<unsigned char> leq_;
  OrderSource source_ = OrderSource::kSupplied;
};

/// Ordered-semiring compatibility condition that failed.
enum class OrderCondition {
  kAdditive,        // s <= t  =>  s + u <= t + u
  kMultiplicative,  // s <= t and 0 <= u  =>  su <= tu
};

class OrderIncompatible : public Error {
 public:
  OrderIncompatible(OrderCondition condition, Element s, Element t, Element u);
  OrderCondition condition() const { return condition_; }
  std::vector<Element> witness() const { return {s_, t_, u_}; }

 private:
  OrderCondition condition_;
  Element s_, t_, u_;
};

/// A semiring together with a compatible partial order.
class OrderedView {
 public:
  const FiniteSemiring& semiring() const { return semiring_; }
  const OrderRelation& order() const { return order_; }
  /// True when zero is the least element.
  bool positive() const { return positive_; }

  bool leq(Element s, Element t) const { return order_.leq(s, t); }

 private:
  friend OrderedView check_ordered_axioms(const FiniteSemiring&, const OrderRelation&);

  OrderedView(FiniteSemiring s, OrderRelation o, bool positive)
      : semiring_(std::move(s)), order_(std::move(o)), positive_(positive) {}

  FiniteSemiring semiring_;
  OrderRelation order_;
  bool positive_;
};

/// The first violating triple of the two compatibility conditions, if any.
std::optional<OrderIncompatible> find_order_incompatibility(const FiniteSemiring& s,
                                                            const OrderRelation& leq);

/// Throws OrderIncompatible (or BadShape on a size mismatch).
OrderedView check_ordered_axioms(const FiniteSemiring& s, const OrderRelation& leq);

/// s <= t iff s + t = t, defined only when addition is idempotent.
std::optional<OrderRelation> natural_order(const FiniteSemiring& s);

/// Natural order when addition is idempotent, otherwise the discrete order.
OrderedView default_view(const FiniteSemiring& s);

bool is_simple(const FiniteSemiring& s);
bool is_mult_idempotent(const FiniteSemiring& s);
bool is_add_idempotent(const FiniteSemiring& s);
bool is_entire(const FiniteSemiring& s);

/// Componentwise product; element (a, b) has index a * |T| + b.
/// Throws CapacityExceeded beyond kMaxOrder elements.
FiniteSemiring direct_product(const FiniteSemiring& s, const FiniteSemiring& t);

/// Componentwise (product) order matching direct_product's indexing.
OrderRelation product_order(const OrderRelation& a, const OrderRelation& b);

}  // namespace srw

#endif  // SRW_CORE_HPP
