#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "frobenia/error.hpp"

namespace frobenia {

enum class FieldKind { Rationals, PrimeField, ExtField, Cyclotomic };

namespace detail {

// Interned, immutable field description. Every distinct field is created
// once per process, so two Field handles are equal iff their pointers are.
struct FieldData {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;                    // characteristic for finite kinds
  std::vector<std::uint64_t> modulus;     // ExtField: monic over F_p, low to high
  unsigned e = 0;                         // Cyclotomic: order of the root of unity
  std::vector<mpq_class> min_poly;        // Cyclotomic: monic over Q, low to high
  unsigned degree = 1;                    // degree over the prime field
  std::string key;
};

}  // namespace detail

class Scalar;

/// Handle to an exact coefficient field: Q, F_p, F_{p^k} or Q(zeta_e).
class Field {
 public:
  Field();  // the rationals

  static Field rationals();
  static Field prime(std::uint64_t p);
  /// F_p[x]/(modulus); the modulus must be monic and irreducible over F_p.
  static Field extension(std::uint64_t p, std::vector<std::uint64_t> modulus);
  /// Q(zeta_e) presented by the e-th cyclotomic polynomial.
  static Field cyclotomic(unsigned e);
  static Field cyclotomic(unsigned e, std::vector<mpq_class> min_poly);

  FieldKind kind() const { return d_->kind; }
  bool is_finite() const { return d_->kind == FieldKind::PrimeField || d_->kind == FieldKind::ExtField; }
  std::uint64_t characteristic() const { return is_finite() ? d_->p : 0; }
  std::uint64_t p() const { return d_->p; }
  unsigned degree() const { return d_->degree; }
  unsigned root_order() const { return d_->e; }
  const std::vector<std::uint64_t>& modulus() const { return d_->modulus; }
  const std::vector<mpq_class>& min_poly() const { return d_->min_poly; }
  /// Number of elements (finite kinds only).
  mpz_class order() const;
  std::string describe() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  /// Image of a rational; throws DivisionByZero when the denominator vanishes in the field.
  Scalar from_rational(const mpq_class& v) const;
  /// zeta for cyclotomic fields, the class of x for extension fields, 1 otherwise.
  Scalar generator() const;
  Scalar from_residues(std::vector<std::uint64_t> coeffs) const;
  Scalar from_rationals(std::vector<mpq_class> coeffs) const;
  /// Parses the text encoding produced by Scalar::to_string.
  Scalar parse(const std::string& text) const;

  bool operator==(const Field& o) const { return d_ == o.d_; }
  bool operator!=(const Field& o) const { return d_ != o.d_; }

  const detail::FieldData* data() const { return d_; }

 private:
  friend class Scalar;
  explicit Field(const detail::FieldData* d) : d_(d) {}
  const detail::FieldData* d_;
};

/// An element of a Field in canonical form: reduced fractions, residues in
/// [0, p), residue polynomials of degree below the modulus with no trailing zeros.
class Scalar {
 public:
  Scalar();  // rational zero

  Field field() const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar inv() const;
  Scalar pow(const mpz_class& e) const;

  /// Equality of canonical forms; comparing elements of different fields throws FieldMismatch.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Total order used for canonical keys: rationals numerically, F_p through
  /// symmetric representatives, residue polynomials coefficientwise from degree 0.
  static int compare(const Scalar& a, const Scalar& b);

  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }
  const std::vector<std::uint64_t>& residues() const { return std::get<std::vector<std::uint64_t>>(v_); }
  const std::vector<mpq_class>& rationals() const { return std::get<std::vector<mpq_class>>(v_); }

  /// "a/b", "a", a decimal residue, "[c0,c1,...]" or ["q0","q1",...] for cyclotomic elements.
  std::string to_string() const;
  std::size_t hash() const;

 private:
  friend class Field;
  using Rep = std::variant<mpq_class, std::uint64_t, std::vector<std::uint64_t>, std::vector<mpq_class>>;
  Scalar(const detail::FieldData* f, Rep v) : f_(f), v_(std::move(v)) {}
  void check_same(const Scalar& o) const;

  const detail::FieldData* f_;
  Rep v_;
};

using Vec = std::vector<Scalar>;

/// Integer coefficients of the e-th cyclotomic polynomial, low to high.
std::vector<mpz_class> cyclotomic_polynomial(unsigned e);
bool is_prime(std::uint64_t n);
bool is_irreducible_mod_p(std::uint64_t p, const std::vector<std::uint64_t>& f);

// Small vector helpers shared by the algebra layers.
Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Scalar& s);
bool vec_is_zero(const Vec& a);

}  // namespace frobenia

template <>
struct std::hash<frobenia::Scalar> {
  std::size_t operator()(const frobenia::Scalar& s) const { return s.hash(); }
};
