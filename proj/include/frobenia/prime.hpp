#pragma once

#include <climits>
#include <cstdint>
#include <string>
#include <vector>

#include "frobenia/field.hpp"

namespace frobenia {

/// A prime ideal of Z or Z[zeta_e]: the rational prime ell together with an
/// irreducible factor of the minimal polynomial modulo ell.
struct PrimeSpec {
  std::uint64_t ell = 0;
  std::vector<std::uint64_t> residue_factor;  // monic over F_ell, low to high; empty over Q
  bool ramified = false;                      // e == ell

  std::string describe() const;
  bool operator==(const PrimeSpec&) const = default;
};

constexpr long kInfiniteValuation = LONG_MAX;

/// Validates and normalizes a prime spec for K. For Q the factor must be
/// empty. For Q(zeta_e) with an empty factor, the first factor of Phi_e mod ell
/// (in canonical order) is used. Throws UnsupportedPrime when ell | e, e != ell.
PrimeSpec make_prime_spec(const Field& K, std::uint64_t ell, std::vector<std::uint64_t> factor = {});

/// All primes of K lying over ell, in canonical order.
std::vector<PrimeSpec> primes_above(const Field& K, std::uint64_t ell);

/// Residue field k_p: F_ell or F_ell[x]/(g).
Field residue_field(const Field& K, const PrimeSpec& p);

/// v_p(x); kInfiniteValuation for x = 0.
long valuation(const Scalar& x, const PrimeSpec& p);

/// Image of a p-integral x in the residue field. Throws NegativeValuation otherwise.
Scalar reduce_mod(const Scalar& x, const PrimeSpec& p, const Field& dst);

/// A p-integral preimage in K of a residue-field element.
Scalar lift_residue(const Scalar& xbar, const PrimeSpec& p, const Field& K);

/// Norm from K down to Q.
mpq_class field_norm(const Scalar& x);

/// Lcm of the coefficient denominators of x (an integer D with D*x integral).
mpz_class coefficient_denominator(const Scalar& x);

/// Rational primes at which x fails to be integral, from coefficient denominators.
std::vector<std::uint64_t> denominator_primes(const Scalar& x);

}  // namespace frobenia
