#ifndef SRW_CONSTRUCTIONS_HPP
#define SRW_CONSTRUCTIONS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srw/core.hpp"

namespace srw {

inline constexpr unsigned kDefaultEnumerationOrderCap = 4;
inline constexpr std::size_t kDefaultEnumerationLimit = 100000;

/// {0 < 1 < ... < k-1} with max and min. k >= 2.
FiniteSemiring chain_lattice(unsigned k);

/// Subsets of a k-set under union and intersection. 1 <= k <= 7.
FiniteSemiring powerset_lattice(unsigned k);

/// Divisors of m with lcm as addition and gcd as multiplication; zero = 1,
/// one = m. m >= 2 with at most 255 divisors.
FiniteSemiring divisor_lattice(unsigned m);

/// Ideals (d) of Z_m, indexed so that element i is generated by
/// zm_ideal_generators(m)[i] (descending divisors: index 0 is (m) = (0),
/// the last index is (1)). Addition is gcd, multiplication gcd(ab, m).
/// 2 <= m <= 255.
FiniteSemiring ideal_semiring_of_Zm(unsigned m);
std::vector<unsigned> zm_ideal_generators(unsigned m);

/// {0, ..., k} with min as addition and addition capped at k as
/// multiplication; the semiring zero is k and the one is 0. k >= 1.
FiniteSemiring truncated_min_plus(unsigned k);

/// 0 < x, y < m < 1 with x ∧ y = 0 and x ∨ y = m; pseudocomplemented but not
/// Stone. Indices: 0, x = 1, y = 2, m = 3, 1 = 4.
FiniteSemiring stacked_diamond();

/// The ring Z_m. 2 <= m <= 255.
FiniteSemiring residue_ring(unsigned m);

/// Image of S under the bijection `perm` (element s becomes perm[s]).
FiniteSemiring relabel(const FiniteSemiring& S, const std::vector<Element>& perm);

/// A bijection f with f(a + b) = f(a) + f(b) and f(ab) = f(a) f(b), if any.
std::optional<std::vector<Element>> find_isomorphism(const FiniteSemiring& A,
                                                     const FiniteSemiring& B);
inline bool are_isomorphic(const FiniteSemiring& A, const FiniteSemiring& B) {
  return find_isomorphism(A, B).has_value();
}

/// All semirings of the given order up to isomorphism, in a deterministic
/// order (ascending canonical tables). Zero is element 0 and one element 1.
/// Throws CapacityExceeded when order > order_cap or more than `limit`
/// structures exist.
std::vector<FiniteSemiring> enumerate_semirings(unsigned order,
                                                std::size_t limit = kDefaultEnumerationLimit,
                                                unsigned order_cap = kDefaultEnumerationOrderCap);

enum class Family {
  kChain,
  kPowerset,
  kDivisorLattice,
  kIdealSemiringOfZm,
  kTruncatedMinPlus,
  kStackedDiamond,
  kProduct,
  kExhaustive,
};

/// Textual form: chain(3), powerset(2), divisor_lattice(12),
/// ideal_semiring_of_Zm(8), truncated_min_plus(2), stacked_diamond(),
/// product(chain(2),powerset(2)), exhaustive(3).
struct GeneratorSpec {
  Family family = Family::kChain;
  std::vector<unsigned> parameters;
  std::vector<GeneratorSpec> factors;  // product only
};

/// Throws ParseError.
GeneratorSpec parse_generator_spec(std::string_view text);
std::string to_string(const GeneratorSpec& spec);

struct NamedSemiring {
  std::string id;
  FiniteSemiring semiring;
};

/// Every semiring described by the spec (one, except for exhaustive).
/// Parameter range errors throw BadShape; enumeration beyond the cap throws
/// CapacityExceeded.
std::vector<NamedSemiring> generate(const GeneratorSpec& spec,
                                    unsigned order_cap = kDefaultEnumerationOrderCap);

}  // namespace srw

#endif  // SRW_CONSTRUCTIONS_HPP
