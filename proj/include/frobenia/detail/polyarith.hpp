#pragma once

// Dense univariate polynomial arithmetic over a coefficient ring policy.
// Coefficients are stored low degree first; the zero polynomial is empty.
//
// A ring policy R provides:  using T;  T zero(), one();  bool is_zero(T);
// T add(T,T), sub(T,T), neg(T), mul(T,T), inv(T) (throws on zero).

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "frobenia/error.hpp"

namespace frobenia::detail {

struct ModP {
  using T = std::uint64_t;
  std::uint64_t p;

  T zero() const { return 0; }
  T one() const { return 1 % p; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const {
    T s = a + b;
    return (s >= p || s < a) ? s - p : s;
  }
  T sub(T a, T b) const { return a >= b ? a - b : a + (p - b); }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T mul(T a, T b) const {
    return static_cast<T>((static_cast<unsigned __int128>(a) * b) % p);
  }
  T pow(T a, std::uint64_t e) const {
    T r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  T inv(T a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of 0 in F_p");
    // extended Euclid on signed 128-bit values
    __int128 t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      __int128 q = r / nr;
      std::tie(t, nt) = std::make_pair(nt, t - q * nt);
      std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += p;
    return static_cast<T>(t);
  }
  T from_mpz(const mpz_class& z) const {
    mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
  }
};

struct QRing {
  using T = mpq_class;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const {
    if (sgn(a) == 0) fail(Errc::DivisionByZero, "inverse of 0 in Q");
    return 1 / a;
  }
};

template <class R>
using PolyT = std::vector<typename R::T>;

template <class R>
void trim(const R& r, PolyT<R>& a) {
  while (!a.empty() && r.is_zero(a.back())) a.pop_back();
}

template <class R>
int degree(const PolyT<R>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class R>
PolyT<R> add(const R& r, const PolyT<R>& a, const PolyT<R>& b) {
  PolyT<R> c(std::max(a.size(), b.size()), r.zero());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = r.add(c[i], b[i]);
  trim(r, c);
  return c;
}

template <class R>
PolyT<R> sub(const R& r, const PolyT<R>& a, const PolyT<R>& b) {
  PolyT<R> c(std::max(a.size(), b.size()), r.zero());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = r.sub(c[i], b[i]);
  trim(r, c);
  return c;
}

template <class R>
PolyT<R> scale(const R& r, const PolyT<R>& a, const typename R::T& s) {
  PolyT<R> c;
  c.reserve(a.size());
  for (const auto& x : a) c.push_back(r.mul(x, s));
  trim(r, c);
  return c;
}

template <class R>
PolyT<R> mul(const R& r, const PolyT<R>& a, const PolyT<R>& b) {
  if (a.empty() || b.empty()) return {};
  PolyT<R> c(a.size() + b.size() - 1, r.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (r.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = r.add(c[i + j], r.mul(a[i], b[j]));
  }
  trim(r, c);
  return c;
}

/// Quotient and remainder; the divisor must be nonzero with invertible lead.
template <class R>
std::pair<PolyT<R>, PolyT<R>> divmod(const R& r, const PolyT<R>& a, const PolyT<R>& b) {
  if (b.empty()) fail(Errc::DivisionByZero, "polynomial division by zero");
  PolyT<R> rem = a;
  trim(r, rem);
  if (rem.size() < b.size()) return {{}, rem};
  const auto lead_inv = r.inv(b.back());
  PolyT<R> q(rem.size() - b.size() + 1, r.zero());
  for (int k = degree<R>(rem) - degree<R>(b); k >= 0; --k) {
    const std::size_t top = static_cast<std::size_t>(k) + b.size() - 1;
    if (top >= rem.size() || r.is_zero(rem[top])) continue;
    auto coef = r.mul(rem[top], lead_inv);
    q[static_cast<std::size_t>(k)] = coef;
    for (std::size_t j = 0; j < b.size(); ++j)
      rem[static_cast<std::size_t>(k) + j] = r.sub(rem[static_cast<std::size_t>(k) + j], r.mul(coef, b[j]));
  }
  trim(r, rem);
  trim(r, q);
  return {q, rem};
}

template <class R>
PolyT<R> rem(const R& r, const PolyT<R>& a, const PolyT<R>& b) {
  return divmod(r, a, b).second;
}

template <class R>
PolyT<R> monic(const R& r, const PolyT<R>& a) {
  if (a.empty()) return a;
  return scale(r, a, r.inv(a.back()));
}

template <class R>
PolyT<R> gcd(const R& r, PolyT<R> a, PolyT<R> b) {
  trim(r, a);
  trim(r, b);
  while (!b.empty()) {
    auto t = rem(r, a, b);
    a = std::move(b);
    b = std::move(t);
  }
  return monic(r, a);
}

/// Returns (g, s, t) with s*a + t*b = g and g monic (or zero when a = b = 0).
template <class R>
std::tuple<PolyT<R>, PolyT<R>, PolyT<R>> xgcd(const R& r, PolyT<R> a, PolyT<R> b) {
  trim(r, a);
  trim(r, b);
  PolyT<R> s0{r.one()}, s1{}, t0{}, t1{r.one()};
  while (!b.empty()) {
    auto [q, rr] = divmod(r, a, b);
    auto s2 = sub(r, s0, mul(r, q, s1));
    auto t2 = sub(r, t0, mul(r, q, t1));
    a = std::move(b);
    b = std::move(rr);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) return {a, s0, t0};
  auto li = r.inv(a.back());
  return {scale(r, a, li), scale(r, s0, li), scale(r, t0, li)};
}

template <class R>
PolyT<R> mulmod(const R& r, const PolyT<R>& a, const PolyT<R>& b, const PolyT<R>& m) {
  return rem(r, mul(r, a, b), m);
}

template <class R>
PolyT<R> powmod(const R& r, PolyT<R> base, mpz_class e, const PolyT<R>& m) {
  PolyT<R> result = rem(r, PolyT<R>{r.one()}, m);
  base = rem(r, base, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mulmod(r, result, base, m);
    e >>= 1;
    if (e > 0) base = mulmod(r, base, base, m);
  }
  return result;
}

}  // namespace frobenia::detail
