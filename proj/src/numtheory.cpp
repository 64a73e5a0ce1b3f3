#include "frobenia/numtheory.hpp"

#include <algorithm>

#include "frobenia/error.hpp"

namespace frobenia {

namespace {

bool probable_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
mpz_class brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          mpz_class diff = x - y;
          if (diff < 0) diff = -diff;
          q = (q * diff) % n;
        }
        g = gcd_z(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class diff = x - ys;
        if (diff < 0) diff = -diff;
        g = gcd_z(diff, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (probable_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class d = brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::map<mpz_class, unsigned> factor_integer(const mpz_class& n_in) {
  if (n_in == 0) fail(Errc::InvalidInput, "factorization of zero");
  mpz_class n = abs(n_in);
  std::map<mpz_class, unsigned> out;
  for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  factor_rec(n, out);
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n, std::size_t cap) {
  std::vector<mpz_class> ds{1};
  for (const auto& [p, k] : factor_integer(n)) {
    const std::size_t base = ds.size();
    mpz_class pk = 1;
    for (unsigned i = 1; i <= k; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
      if (ds.size() > cap) fail(Errc::InvalidInput, "too many divisors");
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

unsigned mpz_valuation(const mpz_class& n, const mpz_class& ell) {
  if (n == 0) fail(Errc::InvalidInput, "valuation of zero");
  mpz_class m = n;
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), ell.get_mpz_t())) {
    m /= ell;
    ++v;
  }
  return v;
}

}  // namespace frobenia
