#ifndef SRW_TESTS_HELPERS_HPP
#define SRW_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "srw/constructions.hpp"
#include "srw/core.hpp"
#include "srw/ideals.hpp"

namespace testing {

inline srw::FiniteSemiring b2() { return srw::chain_lattice(2); }
inline srw::FiniteSemiring c3() { return srw::chain_lattice(3); }
inline srw::FiniteSemiring b2xb2() { return srw::direct_product(b2(), b2()); }
inline srw::FiniteSemiring z8() { return srw::ideal_semiring_of_Zm(8); }
inline srw::FiniteSemiring d5() { return srw::stacked_diamond(); }

inline srw::OrderedView view(const srw::FiniteSemiring& S) { return srw::default_view(S); }

inline srw::IdealSet ideal_of(const srw::FiniteSemiring& S, srw::ElementSet members) {
  return srw::as_ideal(S, members);
}

/// A varied pool: every order-2 and order-3 enumerated semiring, the small
/// named families and a few products.
inline std::vector<srw::FiniteSemiring> small_pool() {
  using namespace srw;
  std::vector<FiniteSemiring> out;
  for (unsigned k = 2; k <= 3; ++k)
    for (auto& S : enumerate_semirings(k)) out.push_back(S);
  for (unsigned k = 2; k <= 5; ++k) out.push_back(chain_lattice(k));
  for (unsigned k = 1; k <= 3; ++k) out.push_back(powerset_lattice(k));
  for (unsigned m : {4u, 6u, 8u, 9u, 12u}) out.push_back(ideal_semiring_of_Zm(m));
  for (unsigned k = 1; k <= 4; ++k) out.push_back(truncated_min_plus(k));
  out.push_back(stacked_diamond());
  out.push_back(divisor_lattice(12));
  out.push_back(residue_ring(4));
  out.push_back(residue_ring(6));
  out.push_back(direct_product(chain_lattice(2), chain_lattice(3)));
  out.push_back(direct_product(ideal_semiring_of_Zm(4), chain_lattice(2)));
  out.push_back(direct_product(truncated_min_plus(2), chain_lattice(2)));
  return out;
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20261014u);
  return gen;
}

}  // namespace testing

#endif  // SRW_TESTS_HELPERS_HPP
