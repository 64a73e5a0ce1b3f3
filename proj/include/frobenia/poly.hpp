#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frobenia/field.hpp"

namespace frobenia {

/// Univariate polynomial over a Field, coefficients low degree first.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  explicit Poly(Field f) : f_(f) {}
  Poly(Field f, Vec coeffs);

  static Poly x(const Field& f);
  static Poly constant(const Scalar& c);
  /// Integer coefficient list mapped into f.
  static Poly from_ints(const Field& f, const std::vector<long>& coeffs);

  const Field& field() const { return f_; }
  const Vec& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_.zero(); }
  Scalar lead() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Scalar& s) const;
  bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly monic() const;
  Poly derivative() const;
  Scalar eval(const Scalar& x) const;
  Poly pow_mod(const mpz_class& e, const Poly& m) const;
  /// Composition this(g).
  Poly compose(const Poly& g) const;

  std::string to_string() const;

 private:
  void trim();
  Field f_;
  Vec c_;
};

Poly poly_gcd(Poly a, Poly b);

struct PolyFactor {
  Poly poly;
  unsigned multiplicity = 1;
  bool irreducible = true;  // false only for unresolved char-0 residuals
};

/// Monic factorization. Finite fields: complete, via squarefree decomposition,
/// distinct-degree and Cantor-Zassenhaus equal-degree splitting (seeded).
/// Characteristic zero: linear factors from rational / root-of-unity times
/// rational candidates; the remaining part is returned with irreducible=false
/// unless it is a rational quadratic or cubic without roots. Throws
/// FactorizationIncomplete when no irreducible factor is certified.
/// Factors are sorted by degree, then coefficients.
std::vector<PolyFactor> factor(const Poly& p, std::uint64_t seed = 0x5eed);

/// Squarefree decomposition: pairs (g_i, i) with p = lead * prod g_i^i.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& p);

/// Distinct roots in the coefficient field found by the same search as factor().
std::vector<Scalar> roots(const Poly& p, std::uint64_t seed = 0x5eed);

}  // namespace frobenia
