#include "srw/core.hpp"

#include <sstream>

namespace srw {

std::string_view to_string(AxiomId id) {
  switch (id) {
    case AxiomId::kAddCommutative: return "add-commutative";
    case AxiomId::kAddAssociative: return "add-associative";
    case AxiomId::kAddIdentity: return "add-identity";
    case AxiomId::kMulCommutative: return "mul-commutative";
    case AxiomId::kMulAssociative: return "mul-associative";
    case AxiomId::kMulIdentity: return "mul-identity";
    case AxiomId::kDistributive: return "distributive";
    case AxiomId::kAbsorbingZero: return "absorbing-zero";
  }
  return "unknown";
}

namespace {

std::string describe(const std::vector<AxiomViolation>& violations) {
  std::ostringstream os;
  os << "semiring axioms violated:";
  for (const auto& v : violations) {
    os << ' ' << to_string(v.axiom) << '(';
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << int(v.witness[i]);
    os << ')';
  }
  return os.str();
}

void check_shape(const SemiringTables& t) {
  if (t.n < 2 || t.n > kMaxOrder)
    throw BadShape("order must be in [2, 255], got " + std::to_string(t.n));
  auto check_table = [&](const std::vector<std::vector<int>>& table, const char* name) {
    if (table.size() != t.n)
      throw BadShape(std::string(name) + " table has " + std::to_string(table.size()) +
                     " rows, expected " + std::to_string(t.n));
    for (std::size_t r = 0; r < t.n; ++r) {
      if (table[r].size() != t.n)
        throw BadShape(std::string(name) + " table row " + std::to_string(r) + " has " +
                       std::to_string(table[r].size()) + " entries");
      for (int v : table[r])
        if (v < 0 || static_cast<std::size_t>(v) >= t.n)
          throw BadShape(std::string(name) + " table entry " + std::to_string(v) +
                         " out of range");
    }
  };
  check_table(t.add, "add");
  check_table(t.mul, "mul");
  auto in_range = [&](int v) { return v >= 0 && static_cast<std::size_t>(v) < t.n; };
  if (!in_range(t.zero)) throw BadShape("zero index out of range");
  if (!in_range(t.one)) throw BadShape("one index out of range");
  if (!t.labels.empty() && t.labels.size() != t.n)
    throw BadShape("labels must have exactly n entries");
  if (t.zero == t.one) throw ZeroEqualsOne();
}

class ViolationLog {
 public:
  void record(AxiomId id, std::vector<Element> witness) {
    for (auto& v : log_) {
      if (v.axiom == id) {
        ++v.count;
        return;
      }
    }
    log_.push_back({id, std::move(witness), 1});
  }
  std::vector<AxiomViolation> take() { return std::move(log_); }

 private:
  std::vector<AxiomViolation> log_;
};

}  // namespace

AxiomViolationError::AxiomViolationError(std::vector<AxiomViolation> violations)
    : Error(describe(violations)), violations_(std::move(violations)) {}

std::vector<AxiomViolation> check_semiring_axioms(const SemiringTables& t) {
  check_shape(t);
  const std::size_t n = t.n;
  auto A = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(t.add[a][b]); };
  auto M = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(t.mul[a][b]); };
  auto e = [](std::size_t v) { return static_cast<Element>(v); };
  const auto zero = static_cast<std::size_t>(t.zero);
  const auto one = static_cast<std::size_t>(t.one);
  ViolationLog log;

  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t u = 0; u < n; ++u) {
      if (A(s, u) != A(u, s)) log.record(AxiomId::kAddCommutative, {e(s), e(u)});
    }
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (A(A(s, u), v) != A(s, A(u, v))) log.record(AxiomId::kAddAssociative, {e(s), e(u), e(v)});
  for (std::size_t s = 0; s < n; ++s)
    if (A(zero, s) != s) log.record(AxiomId::kAddIdentity, {e(s)});

  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t u = 0; u < n; ++u)
      if (M(s, u) != M(u, s)) log.record(AxiomId::kMulCommutative, {e(s), e(u)});
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (M(M(s, u), v) != M(s, M(u, v))) log.record(AxiomId::kMulAssociative, {e(s), e(u), e(v)});
  for (std::size_t s = 0; s < n; ++s)
    if (M(one, s) != s) log.record(AxiomId::kMulIdentity, {e(s)});

  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (M(s, A(u, v)) != A(M(s, u), M(s, v))) log.record(AxiomId::kDistributive, {e(s), e(u), e(v)});
  for (std::size_t s = 0; s < n; ++s)
    if (M(zero, s) != zero) log.record(AxiomId::kAbsorbingZero, {e(s)});

  return log.take();
}

FiniteSemiring validate_semiring(const SemiringTables& t) {
  auto violations = check_semiring_axioms(t);
  if (!violations.empty()) throw AxiomViolationError(std::move(violations));

  FiniteSemiring s;
  s.n_ = t.n;
  s.zero_ = static_cast<Element>(t.zero);
  s.one_ = static_cast<Element>(t.one);
  s.add_.resize(t.n * t.n);
  s.mul_.resize(t.n * t.n);
  for (std::size_t a = 0; a < t.n; ++a)
    for (std::size_t b = 0; b < t.n; ++b) {
      s.add_[a * t.n + b] = static_cast<Element>(t.add[a][b]);
      s.mul_[a * t.n + b] = static_cast<Element>(t.mul[a][b]);
    }
  s.labels_ = t.labels;
  if (s.labels_.empty())
    for (std::size_t a = 0; a < t.n; ++a) s.labels_.push_back(std::to_string(a));
  return s;
}

FiniteSemiring validate_semiring(std::vector<std::vector<int>> add_table,
                                 std::vector<std::vector<int>> mul_table, int zero, int one,
                                 std::size_t n) {
  SemiringTables t;
  t.n = n;
  t.add = std::move(add_table);
  t.mul = std::move(mul_table);
  t.zero = zero;
  t.one = one;
  return validate_semiring(t);
}

Element FiniteSemiring::power(Element s, std::size_t k) const {
  Element r = one_;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, s);
  return r;
}

SemiringTables FiniteSemiring::tables() const {
  SemiringTables t;
  t.n = n_;
  t.zero = zero_;
  t.one = one_;
  t.add.assign(n_, std::vector<int>(n_));
  t.mul.assign(n_, std::vector<int>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      t.add[a][b] = add_[a * n_ + b];
      t.mul[a][b] = mul_[a * n_ + b];
    }
  t.labels = labels_;
  return t;
}

OrderRelation OrderRelation::from_matrix(const std::vector<std::vector<bool>>& leq,
                                         OrderSource source) {
  const std::size_t n = leq.size();
  if (n == 0 || n > kMaxOrder) throw BadShape("order matrix size out of range");
  for (const auto& row : leq)
    if (row.size() != n) throw BadShape("order matrix is ragged");
  auto e = [](std::size_t v) { return static_cast<Element>(v); };
  for (std::size_t s = 0; s < n; ++s)
    if (!leq[s][s]) throw InvalidOrder("reflexivity", {e(s)});
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (s != t && leq[s][t] && leq[t][s]) throw InvalidOrder("antisymmetry", {e(s), e(t)});
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      if (!leq[s][t]) continue;
      for (std::size_t u = 0; u < n; ++u)
        if (leq[t][u] && !leq[s][u]) throw InvalidOrder("transitivity", {e(s), e(t), e(u)});
    }
  OrderRelation r;
  r.n_ = n;
  r.source_ = source;
  r.leq_.resize(n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) r.leq_[s * n + t] = leq[s][t] ? 1 : 0;
  return r;
}

OrderRelation OrderRelation::discrete(std::size_t n) {
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  return from_matrix(m, OrderSource::kSupplied);
}

std::vector<std::vector<bool>> OrderRelation::matrix() const {
  std::vector<std::vector<bool>> m(n_, std::vector<bool>(n_));
  for (std::size_t s = 0; s < n_; ++s)
    for (std::size_t t = 0; t < n_; ++t) m[s][t] = leq_[s * n_ + t] != 0;
  return m;
}

OrderIncompatible::OrderIncompatible(OrderCondition condition, Element s, Element t, Element u)
    : Error(std::string("order incompatible with ") +
            (condition == OrderCondition::kAdditive ? "addition" : "multiplication") +
            " at (s,t,u) = (" + std::to_string(s) + "," + std::to_string(t) + "," +
            std::to_string(u) + ")"),
      condition_(condition),
      s_(s),
      t_(t),
      u_(u) {}

std::optional<OrderIncompatible> find_order_incompatibility(const FiniteSemiring& S,
                                                            const OrderRelation& leq) {
  if (leq.order() != S.order()) throw BadShape("order relation size differs from semiring order");
  const auto n = static_cast<Element>(S.order());
  for (Element s = 0; s < n; ++s)
    for (Element t = 0; t < n; ++t) {
      if (!leq.leq(s, t)) continue;
      for (Element u = 0; u < n; ++u) {
        if (!leq.leq(S.add(s, u), S.add(t, u)))
          return OrderIncompatible(OrderCondition::kAdditive, s, t, u);
        // Quantified exactly as stated: only u with 0 <= u.
        if (leq.leq(S.zero(), u) && !leq.leq(S.mul(s, u), S.mul(t, u)))
          return OrderIncompatible(OrderCondition::kMultiplicative, s, t, u);
      }
    }
  return std::nullopt;
}

OrderedView check_ordered_axioms(const FiniteSemiring& S, const OrderRelation& leq) {
  if (auto bad = find_order_incompatibility(S, leq)) throw *bad;
  bool positive = true;
  for (Element s = 0; s < S.order(); ++s)
    if (!leq.leq(S.zero(), s)) positive = false;
  return OrderedView(S, leq, positive);
}

std::optional<OrderRelation> natural_order(const FiniteSemiring& S) {
  if (!is_add_idempotent(S)) return std::nullopt;
  const std::size_t n = S.order();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (Element s = 0; s < n; ++s)
    for (Element t = 0; t < n; ++t) m[s][t] = S.add(s, t) == t;
  return OrderRelation::from_matrix(m, OrderSource::kNaturalFromAddition);
}

OrderedView default_view(const FiniteSemiring& S) {
  if (auto nat = natural_order(S)) return check_ordered_axioms(S, *nat);
  return check_ordered_axioms(S, OrderRelation::discrete(S.order()));
}

bool is_simple(const FiniteSemiring& S) {
  for (Element s = 0; s < S.order(); ++s)
    if (S.add(S.one(), s) != S.one()) return false;
  return true;
}

bool is_mult_idempotent(const FiniteSemiring& S) {
  for (Element s = 0; s < S.order(); ++s)
    if (S.mul(s, s) != s) return false;
  return true;
}

bool is_add_idempotent(const FiniteSemiring& S) {
  for (Element s = 0; s < S.order(); ++s)
    if (S.add(s, s) != s) return false;
  return true;
}

bool is_entire(const FiniteSemiring& S) {
  for (Element s = 0; s < S.order(); ++s)
    for (Element t = 0; t < S.order(); ++t)
      if (s != S.zero() && t != S.zero() && S.mul(s, t) == S.zero()) return false;
  return true;
}

FiniteSemiring direct_product(const FiniteSemiring& A, const FiniteSemiring& B) {
  const std::size_t na = A.order(), nb = B.order();
  if (na * nb > kMaxOrder)
    throw CapacityExceeded("product order " + std::to_string(na * nb) + " exceeds 255");
  SemiringTables t;
  t.n = na * nb;
  t.add.assign(t.n, std::vector<int>(t.n));
  t.mul.assign(t.n, std::vector<int>(t.n));
  auto idx = [nb](std::size_t a, std::size_t b) { return static_cast<int>(a * nb + b); };
  for (std::size_t p = 0; p < t.n; ++p)
    for (std::size_t q = 0; q < t.n; ++q) {
      auto a1 = static_cast<Element>(p / nb), b1 = static_cast<Element>(p % nb);
      auto a2 = static_cast<Element>(q / nb), b2 = static_cast<Element>(q % nb);
      t.add[p][q] = idx(A.add(a1, a2), B.add(b1, b2));
      t.mul[p][q] = idx(A.mul(a1, a2), B.mul(b1, b2));
    }
  t.zero = idx(A.zero(), B.zero());
  t.one = idx(A.one(), B.one());
  for (std::size_t p = 0; p < t.n; ++p)
    t.labels.push_back("(" + A.label(static_cast<Element>(p / nb)) + "," +
                       B.label(static_cast<Element>(p % nb)) + ")");
  return validate_semiring(t);
}

OrderRelation product_order(const OrderRelation& a, const OrderRelation& b) {
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::vector<bool>> m(na * nb, std::vector<bool>(na * nb));
  for (std::size_t p = 0; p < na * nb; ++p)
    for (std::size_t q = 0; q < na * nb; ++q)
      m[p][q] = a.leq(static_cast<Element>(p / nb), static_cast<Element>(q / nb)) &&
                b.leq(static_cast<Element>(p % nb), static_cast<Element>(q % nb));
  return OrderRelation::from_matrix(m, OrderSource::kSupplied);
}

}  // namespace srw
