#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

namespace frobenia {

/// Prime factorization of |n| (n != 0) by trial division and Pollard-Brent.
std::map<mpz_class, unsigned> factor_integer(const mpz_class& n);

/// Positive divisors of |n|, ascending. Throws InvalidInput beyond `cap` divisors.
std::vector<mpz_class> divisors(const mpz_class& n, std::size_t cap = 100000);

/// Exponent of the prime ell in the nonzero integer n.
unsigned mpz_valuation(const mpz_class& n, const mpz_class& ell);

}  // namespace frobenia
