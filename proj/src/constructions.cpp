#include "srw/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace srw {

namespace {

SemiringTables blank_tables(std::size_t n) {
  SemiringTables t;
  t.n = n;
  t.add.assign(n, std::vector<int>(n));
  t.mul.assign(n, std::vector<int>(n));
  return t;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw BadShape(what);
}

std::vector<unsigned> divisors(unsigned m) {
  std::vector<unsigned> d;
  for (unsigned i = 1; i <= m; ++i)
    if (m % i == 0) d.push_back(i);
  return d;
}

}  // namespace

FiniteSemiring chain_lattice(unsigned k) {
  require(k >= 2 && k <= kMaxOrder, "chain_lattice: k must be in [2, 255]");
  auto t = blank_tables(k);
  for (unsigned a = 0; a < k; ++a)
    for (unsigned b = 0; b < k; ++b) {
      t.add[a][b] = static_cast<int>(std::max(a, b));
      t.mul[a][b] = static_cast<int>(std::min(a, b));
    }
  t.zero = 0;
  t.one = static_cast<int>(k - 1);
  if (k == 3) t.labels = {"0", "a", "1"};
  return validate_semiring(t);
}

FiniteSemiring powerset_lattice(unsigned k) {
  require(k >= 1 && k <= 7, "powerset_lattice: k must be in [1, 7]");
  const unsigned n = 1u << k;
  auto t = blank_tables(n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      t.add[a][b] = static_cast<int>(a | b);
      t.mul[a][b] = static_cast<int>(a & b);
    }
  t.zero = 0;
  t.one = static_cast<int>(n - 1);
  for (unsigned a = 0; a < n; ++a) {
    std::string l = "{";
    for (unsigned bit = 0; bit < k; ++bit)
      if (a & (1u << bit)) l += (l.size() > 1 ? "," : "") + std::to_string(bit + 1);
    t.labels.push_back(l + "}");
  }
  return validate_semiring(t);
}

FiniteSemiring divisor_lattice(unsigned m) {
  require(m >= 2, "divisor_lattice: m must be >= 2");
  const auto d = divisors(m);
  require(d.size() <= kMaxOrder, "divisor_lattice: too many divisors");
  auto t = blank_tables(d.size());
  auto index = [&](unsigned v) {
    return static_cast<int>(std::lower_bound(d.begin(), d.end(), v) - d.begin());
  };
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = 0; b < d.size(); ++b) {
      t.add[a][b] = index(std::lcm(d[a], d[b]));
      t.mul[a][b] = index(std::gcd(d[a], d[b]));
    }
  t.zero = index(1);
  t.one = index(m);
  for (unsigned v : d) t.labels.push_back(std::to_string(v));
  return validate_semiring(t);
}

std::vector<unsigned> zm_ideal_generators(unsigned m) {
  require(m >= 2 && m <= kMaxOrder, "ideal_semiring_of_Zm: m must be in [2, 255]");
  auto d = divisors(m);
  std::reverse(d.begin(), d.end());
  return d;
}

FiniteSemiring ideal_semiring_of_Zm(unsigned m) {
  const auto gens = zm_ideal_generators(m);
  auto t = blank_tables(gens.size());
  auto index = [&](unsigned v) {
    return static_cast<int>(std::find(gens.begin(), gens.end(), v) - gens.begin());
  };
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b) {
      t.add[a][b] = index(std::gcd(gens[a], gens[b]));
      t.mul[a][b] = index(std::gcd(gens[a] * gens[b], m));
    }
  t.zero = index(m);
  t.one = index(1);
  for (unsigned g : gens) t.labels.push_back(g == m ? "(0)" : "(" + std::to_string(g) + ")");
  return validate_semiring(t);
}

FiniteSemiring truncated_min_plus(unsigned k) {
  require(k >= 1 && k < kMaxOrder, "truncated_min_plus: k must be in [1, 254]");
  auto t = blank_tables(k + 1);
  for (unsigned a = 0; a <= k; ++a)
    for (unsigned b = 0; b <= k; ++b) {
      t.add[a][b] = static_cast<int>(std::min(a, b));
      t.mul[a][b] = static_cast<int>(std::min(a + b, k));
    }
  t.zero = static_cast<int>(k);
  t.one = 0;
  return validate_semiring(t);
}

FiniteSemiring stacked_diamond() {
  // Ranks: 0 -> 0, x/y -> 1, m -> 2, 1 -> 3. Meet and join by the Hasse diagram.
  constexpr int kZero = 0, kX = 1, kY = 2, kM = 3, kOne = 4;
  auto leq = [](int a, int b) {
    if (a == b || a == kZero || b == kOne) return true;
    return (a == kX || a == kY) && b == kM;
  };
  auto t = blank_tables(5);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      int join = kOne, meet = kZero;
      for (int c = 0; c < 5; ++c) {
        if (leq(a, c) && leq(b, c) && leq(c, join)) join = c;
        if (leq(c, a) && leq(c, b) && leq(meet, c)) meet = c;
      }
      t.add[a][b] = join;
      t.mul[a][b] = meet;
    }
  t.zero = kZero;
  t.one = kOne;
  t.labels = {"0", "x", "y", "m", "1"};
  return validate_semiring(t);
}

FiniteSemiring residue_ring(unsigned m) {
  require(m >= 2 && m <= kMaxOrder, "residue_ring: m must be in [2, 255]");
  auto t = blank_tables(m);
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b) {
      t.add[a][b] = static_cast<int>((a + b) % m);
      t.mul[a][b] = static_cast<int>((a * b) % m);
    }
  t.zero = 0;
  t.one = 1;
  return validate_semiring(t);
}

FiniteSemiring relabel(const FiniteSemiring& S, const std::vector<Element>& perm) {
  const std::size_t n = S.order();
  require(perm.size() == n, "relabel: permutation has wrong length");
  auto t = blank_tables(n);
  t.labels.resize(n);
  for (Element a = 0; a < n; ++a) {
    t.labels[perm[a]] = S.label(a);
    for (Element b = 0; b < n; ++b) {
      t.add[perm[a]][perm[b]] = perm[S.add(a, b)];
      t.mul[perm[a]][perm[b]] = perm[S.mul(a, b)];
    }
  }
  t.zero = perm[S.zero()];
  t.one = perm[S.one()];
  return validate_semiring(t);
}

namespace {

// Isomorphism-invariant features of an element.
std::vector<int> element_signature(const FiniteSemiring& S, Element x) {
  int ann = 0, add_absorbed = 0, mul_fixed = 0;
  for (Element y = 0; y < S.order(); ++y) {
    ann += S.mul(x, y) == S.zero();
    add_absorbed += S.add(x, y) == x;
    mul_fixed += S.mul(x, y) == x;
  }
  int add_period = 0;
  for (Element acc = x;; acc = S.add(acc, x)) {
    ++add_period;
    if (acc == S.zero() || add_period > static_cast<int>(S.order())) break;
  }
  return {x == S.zero(), x == S.one(), S.add(x, x) == x, S.mul(x, x) == x, ann, add_absorbed,
          mul_fixed, add_period};
}

class IsoSearch {
 public:
  IsoSearch(const FiniteSemiring& A, const FiniteSemiring& B) : A_(A), B_(B), n_(A.order()) {
    for (Element x = 0; x < n_; ++x) {
      sig_a_.push_back(element_signature(A, x));
      sig_b_.push_back(element_signature(B, x));
    }
    map_.assign(n_, -1);
    used_.assign(n_, false);
  }

  std::optional<std::vector<Element>> run() {
    if (!assign(A_.zero(), B_.zero()) || !assign(A_.one(), B_.one())) return std::nullopt;
    if (!search(0)) return std::nullopt;
    std::vector<Element> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = static_cast<Element>(map_[i]);
    return out;
  }

 private:
  bool assign(Element a, Element b) {
    if (sig_a_[a] != sig_b_[b] || used_[b]) return false;
    map_[a] = b;
    used_[b] = true;
    return true;
  }

  bool consistent(Element a) const {
    for (Element c = 0; c < n_; ++c) {
      if (map_[c] < 0) continue;
      const auto fa = static_cast<Element>(map_[a]), fc = static_cast<Element>(map_[c]);
      const int fs = map_[A_.add(a, c)], fp = map_[A_.mul(a, c)];
      if (fs >= 0 && fs != B_.add(fa, fc)) return false;
      if (fp >= 0 && fp != B_.mul(fa, fc)) return false;
    }
    return true;
  }

  bool search(Element a) {
    while (a < n_ && map_[a] >= 0) ++a;
    if (a == n_) return true;
    for (Element b = 0; b < n_; ++b) {
      if (!assign(a, b)) continue;
      if (consistent(a) && search(static_cast<Element>(a + 1))) return true;
      map_[a] = -1;
      used_[b] = false;
    }
    return false;
  }

  const FiniteSemiring& A_;
  const FiniteSemiring& B_;
  std::size_t n_;
  std::vector<std::vector<int>> sig_a_, sig_b_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteSemiring& A,
                                                     const FiniteSemiring& B) {
  if (A.order() != B.order()) return std::nullopt;
  IsoSearch search(A, B);
  auto map = search.run();
  if (!map) return std::nullopt;
  // The search only checks pairs once both images are assigned; confirm.
  for (Element a = 0; a < A.order(); ++a)
    for (Element c = 0; c < A.order(); ++c)
      if ((*map)[A.add(a, c)] != B.add((*map)[a], (*map)[c]) ||
          (*map)[A.mul(a, c)] != B.mul((*map)[a], (*map)[c]))
        return std::nullopt;
  return map;
}

namespace {

constexpr int kUnset = -1;

// Backtracking enumerator over tables with zero = 0 and one = 1.
class SemiringEnumerator {
 public:
  explicit SemiringEnumerator(unsigned n) : n_(n), add_(n * n, kUnset), mul_(n * n, kUnset) {
    for (unsigned s = 0; s < n; ++s) {
      set(add_, 0, s, static_cast<int>(s));
      set(mul_, 0, s, 0);
      set(mul_, 1, s, static_cast<int>(s));
    }
    for (unsigned i = 1; i < n; ++i)
      for (unsigned j = i; j < n; ++j) add_cells_.emplace_back(i, j);
    for (unsigned i = 2; i < n; ++i)
      for (unsigned j = i; j < n; ++j) mul_cells_.emplace_back(i, j);
  }

  std::set<std::vector<Element>> run() {
    fill_add(0);
    return found_;
  }

 private:
  void set(std::vector<int>& table, unsigned a, unsigned b, int v) {
    table[a * n_ + b] = v;
    table[b * n_ + a] = v;
  }
  int at(const std::vector<int>& table, int a, int b) const {
    if (a < 0 || b < 0) return kUnset;
    return table[static_cast<unsigned>(a) * n_ + static_cast<unsigned>(b)];
  }

  bool associative_so_far(const std::vector<int>& T) const {
    for (unsigned a = 0; a < n_; ++a)
      for (unsigned b = 0; b < n_; ++b) {
        const int ab = at(T, a, b);
        if (ab == kUnset) continue;
        for (unsigned c = 0; c < n_; ++c) {
          const int lhs = at(T, ab, c);
          const int rhs = at(T, a, at(T, b, c));
          if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
        }
      }
    return true;
  }

  bool distributive_so_far() const {
    for (unsigned a = 0; a < n_; ++a)
      for (unsigned b = 0; b < n_; ++b)
        for (unsigned c = 0; c < n_; ++c) {
          const int lhs = at(mul_, a, at(add_, b, c));
          const int rhs = at(add_, at(mul_, a, b), at(mul_, a, c));
          if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
        }
    return true;
  }

  void fill_add(std::size_t cell) {
    if (cell == add_cells_.size()) {
      fill_mul(0);
      return;
    }
    auto [i, j] = add_cells_[cell];
    for (unsigned v = 0; v < n_; ++v) {
      set(add_, i, j, static_cast<int>(v));
      if (associative_so_far(add_)) fill_add(cell + 1);
    }
    set(add_, i, j, kUnset);
  }

  void fill_mul(std::size_t cell) {
    if (cell == mul_cells_.size()) {
      record();
      return;
    }
    auto [i, j] = mul_cells_[cell];
    for (unsigned v = 0; v < n_; ++v) {
      set(mul_, i, j, static_cast<int>(v));
      if (associative_so_far(mul_) && distributive_so_far()) fill_mul(cell + 1);
    }
    set(mul_, i, j, kUnset);
  }

  void record() {
    // Canonical form: least relabelled (add, mul) over permutations fixing 0 and 1.
    std::vector<Element> perm(n_);
    std::iota(perm.begin(), perm.end(), Element{0});
    std::vector<Element> best;
    do {
      std::vector<Element> image(2 * n_ * n_);
      for (unsigned a = 0; a < n_; ++a)
        for (unsigned b = 0; b < n_; ++b) {
          image[perm[a] * n_ + perm[b]] = perm[static_cast<unsigned>(add_[a * n_ + b])];
          image[n_ * n_ + perm[a] * n_ + perm[b]] = perm[static_cast<unsigned>(mul_[a * n_ + b])];
        }
      if (best.empty() || image < best) best = std::move(image);
    } while (std::next_permutation(perm.begin() + 2, perm.end()));
    found_.insert(std::move(best));
  }

  unsigned n_;
  std::vector<int> add_, mul_;
  std::vector<std::pair<unsigned, unsigned>> add_cells_, mul_cells_;
  std::set<std::vector<Element>> found_;
};

}  // namespace

std::vector<FiniteSemiring> enumerate_semirings(unsigned order, std::size_t limit,
                                                unsigned order_cap) {
  if (order < 2) throw BadShape("enumerate_semirings: order must be >= 2");
  if (order > order_cap)
    throw CapacityExceeded("enumeration order " + std::to_string(order) + " exceeds cap " +
                           std::to_string(order_cap));
  const auto canonical = SemiringEnumerator(order).run();
  if (canonical.size() > limit)
    throw CapacityExceeded("enumeration produced " + std::to_string(canonical.size()) +
                           " structures, limit is " + std::to_string(limit));
  std::vector<FiniteSemiring> out;
  out.reserve(canonical.size());
  for (const auto& flat : canonical) {
    auto t = blank_tables(order);
    for (unsigned a = 0; a < order; ++a)
      for (unsigned b = 0; b < order; ++b) {
        t.add[a][b] = flat[a * order + b];
        t.mul[a][b] = flat[order * order + a * order + b];
      }
    t.zero = 0;
    t.one = 1;
    t.labels = {"0", "1"};
    for (unsigned a = 2; a < order; ++a) t.labels.push_back(std::string(1, char('a' + a - 2)));
    out.push_back(validate_semiring(t));
  }
  return out;
}

namespace {

const std::map<std::string, Family, std::less<>>& family_names() {
  static const std::map<std::string, Family, std::less<>> names = {
      {"chain", Family::kChain},
      {"powerset", Family::kPowerset},
      {"divisor_lattice", Family::kDivisorLattice},
      {"ideal_semiring_of_Zm", Family::kIdealSemiringOfZm},
      {"truncated_min_plus", Family::kTruncatedMinPlus},
      {"stacked_diamond", Family::kStackedDiamond},
      {"product", Family::kProduct},
      {"exhaustive", Family::kExhaustive},
  };
  return names;
}

std::string family_name(Family f) {
  for (const auto& [name, fam] : family_names())
    if (fam == f) return name;
  return "unknown";
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GeneratorSpec parse() {
    GeneratorSpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("generator spec '" + std::string(text_) + "': " + why + " at offset " +
                     std::to_string(pos_));
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  GeneratorSpec parse_spec() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const auto name = text_.substr(start, pos_ - start);
    auto it = family_names().find(name);
    if (it == family_names().end()) fail("unknown family '" + std::string(name) + "'");
    GeneratorSpec spec;
    spec.family = it->second;
    expect('(');
    if (spec.family == Family::kProduct) {
      spec.factors.push_back(parse_spec());
      expect(',');
      spec.factors.push_back(parse_spec());
    } else if (!accept(')')) {
      do spec.parameters.push_back(parse_number());
      while (accept(','));
      expect(')');
      return spec;
    } else {
      return spec;
    }
    expect(')');
    return spec;
  }

  unsigned parse_number() {
    skip_space();
    const std::size_t start = pos_;
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > 1000000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<unsigned>(v);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

unsigned single_parameter(const GeneratorSpec& spec) {
  if (spec.parameters.size() != 1)
    throw BadShape(family_name(spec.family) + " takes exactly one parameter");
  return spec.parameters[0];
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const GeneratorSpec& spec) {
  std::string out = family_name(spec.family) + "(";
  if (spec.family == Family::kProduct) {
    for (std::size_t i = 0; i < spec.factors.size(); ++i)
      out += (i ? "," : "") + to_string(spec.factors[i]);
  } else {
    for (std::size_t i = 0; i < spec.parameters.size(); ++i)
      out += (i ? "," : "") + std::to_string(spec.parameters[i]);
  }
  return out + ")";
}

std::vector<NamedSemiring> generate(const GeneratorSpec& spec, unsigned order_cap) {
  const std::string id = to_string(spec);
  switch (spec.family) {
    case Family::kChain: return {{id, chain_lattice(single_parameter(spec))}};
    case Family::kPowerset: return {{id, powerset_lattice(single_parameter(spec))}};
    case Family::kDivisorLattice: return {{id, divisor_lattice(single_parameter(spec))}};
    case Family::kIdealSemiringOfZm: return {{id, ideal_semiring_of_Zm(single_parameter(spec))}};
    case Family::kTruncatedMinPlus: return {{id, truncated_min_plus(single_parameter(spec))}};
    case Family::kStackedDiamond:
      if (!spec.parameters.empty()) throw BadShape("stacked_diamond takes no parameters");
      return {{id, stacked_diamond()}};
    case Family::kExhaustive: {
      auto all = enumerate_semirings(single_parameter(spec), kDefaultEnumerationLimit, order_cap);
      std::vector<NamedSemiring> out;
      for (std::size_t i = 0; i < all.size(); ++i)
        out.push_back({id + "#" + std::to_string(i), std::move(all[i])});
      return out;
    }
    case Family::kProduct: {
      if (spec.factors.size() != 2) throw BadShape("product takes exactly two factors");
      const auto left = generate(spec.factors[0], order_cap);
      const auto right = generate(spec.factors[1], order_cap);
      std::vector<NamedSemiring> out;
      for (const auto& a : left)
        for (const auto& b : right)
          out.push_back({"product(" + a.id + "," + b.id + ")", direct_product(a.semiring, b.semiring)});
      return out;
    }
  }
  throw BadShape("unknown family");
}

}  // namespace srw
