#include "frobenia/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "frobenia/detail/polyarith.hpp"

namespace frobenia {

using detail::FieldData;
using detail::ModP;
using detail::QRing;

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

const FieldData* intern(FieldData d) {
  static std::map<std::string, std::unique_ptr<FieldData>> registry;
  std::lock_guard lock(registry_mutex());
  auto it = registry.find(d.key);
  if (it != registry.end()) return it->second.get();
  auto owned = std::make_unique<FieldData>(std::move(d));
  const FieldData* ptr = owned.get();
  registry.emplace(ptr->key, std::move(owned));
  return ptr;
}

const FieldData* rationals_data() {
  static const FieldData* q = [] {
    FieldData d;
    d.kind = FieldKind::Rationals;
    d.key = "Q";
    return intern(std::move(d));
  }();
  return q;
}

std::string trim_ws(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

mpq_class parse_rational(const std::string& raw) {
  std::string s = trim_ws(raw);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) fail(Errc::InvalidInput, "cannot parse rational '" + raw + "'");
  if (sgn(q.get_den()) == 0) fail(Errc::DivisionByZero, "zero denominator in '" + raw + "'");
  q.canonicalize();
  return q;
}

std::vector<std::string> split_list(const std::string& raw) {
  std::string s = trim_ws(raw);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail(Errc::InvalidInput, "expected coefficient list, got '" + raw + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> out;
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, ',')) {
    tok = trim_ws(tok);
    if (tok.size() >= 2 && tok.front() == '"' && tok.back() == '"') tok = tok.substr(1, tok.size() - 2);
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<mpz_class> cyclotomic_polynomial(unsigned e) {
  if (e == 0) fail(Errc::InvalidInput, "cyclotomic order must be positive");
  static std::mutex m;
  static std::map<unsigned, std::vector<mpz_class>> cache;
  {
    std::lock_guard lock(m);
    if (auto it = cache.find(e); it != cache.end()) return it->second;
  }
  QRing q;
  detail::PolyT<QRing> num(e + 1, mpq_class(0));
  num[0] = -1;
  num[e] = 1;
  for (unsigned d = 1; d < e; ++d) {
    if (e % d) continue;
    auto phi_d = cyclotomic_polynomial(d);
    detail::PolyT<QRing> pd(phi_d.begin(), phi_d.end());
    num = detail::divmod(q, num, pd).first;
  }
  std::vector<mpz_class> out;
  for (auto& c : num) out.push_back(c.get_num());
  std::lock_guard lock(m);
  cache[e] = out;
  return out;
}

bool is_irreducible_mod_p(std::uint64_t p, const std::vector<std::uint64_t>& f) {
  ModP r{p};
  detail::PolyT<ModP> poly(f.begin(), f.end());
  detail::trim(r, poly);
  const int n = detail::degree<ModP>(poly);
  if (n < 1) return false;
  if (n == 1) return true;
  const detail::PolyT<ModP> x{0, 1};
  detail::PolyT<ModP> h = x;
  for (int i = 1; i <= n / 2; ++i) {
    h = detail::powmod(r, h, mpz_class(static_cast<unsigned long>(p)), poly);
    auto g = detail::gcd(r, detail::sub(r, h, x), poly);
    if (detail::degree<ModP>(g) > 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Field

Field::Field() : d_(rationals_data()) {}

Field Field::rationals() { return Field(); }

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) fail(Errc::InvalidInput, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 62)) fail(Errc::InvalidInput, "prime too large");
  FieldData d;
  d.kind = FieldKind::PrimeField;
  d.p = p;
  d.key = "F" + std::to_string(p);
  return Field(intern(std::move(d)));
}

Field Field::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) fail(Errc::InvalidInput, std::to_string(p) + " is not prime");
  ModP r{p};
  for (auto& c : modulus) c %= p;
  detail::trim(r, modulus);
  if (modulus.size() < 2) fail(Errc::InvalidInput, "extension modulus must have positive degree");
  if (modulus.back() != 1) fail(Errc::InvalidInput, "extension modulus must be monic");
  if (!is_irreducible_mod_p(p, modulus)) fail(Errc::InvalidInput, "extension modulus is reducible over F_" + std::to_string(p));
  FieldData d;
  d.kind = FieldKind::ExtField;
  d.p = p;
  d.degree = static_cast<unsigned>(modulus.size() - 1);
  std::string key = "F" + std::to_string(p) + "[";
  for (std::size_t i = 0; i < modulus.size(); ++i) key += (i ? "," : "") + std::to_string(modulus[i]);
  d.key = key + "]";
  d.modulus = std::move(modulus);
  return Field(intern(std::move(d)));
}

Field Field::cyclotomic(unsigned e) {
  auto phi = cyclotomic_polynomial(e);
  std::vector<mpq_class> mp(phi.begin(), phi.end());
  return cyclotomic(e, std::move(mp));
}

Field Field::cyclotomic(unsigned e, std::vector<mpq_class> min_poly) {
  QRing q;
  for (auto& c : min_poly) c.canonicalize();
  detail::trim(q, min_poly);
  if (min_poly.size() < 2 || min_poly.back() != 1) fail(Errc::InvalidInput, "cyclotomic minimal polynomial must be monic of positive degree");
  auto phi = cyclotomic_polynomial(e);
  detail::PolyT<QRing> phiq(phi.begin(), phi.end());
  if (!detail::rem(q, phiq, min_poly).empty())
    fail(Errc::InvalidInput, "minimal polynomial does not divide the cyclotomic polynomial of order " + std::to_string(e));
  FieldData d;
  d.kind = FieldKind::Cyclotomic;
  d.e = e;
  d.degree = static_cast<unsigned>(min_poly.size() - 1);
  std::string key = "Q(z" + std::to_string(e) + ")[";
  for (std::size_t i = 0; i < min_poly.size(); ++i) key += (i ? "," : "") + min_poly[i].get_str();
  d.key = key + "]";
  d.min_poly = std::move(min_poly);
  return Field(intern(std::move(d)));
}

mpz_class Field::order() const {
  if (!is_finite()) fail(Errc::InvalidInput, "order of an infinite field");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), d_->p, d_->degree);
  return r;
}

std::string Field::describe() const {
  switch (d_->kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::PrimeField: return "F_" + std::to_string(d_->p);
    case FieldKind::ExtField: return "F_" + std::to_string(d_->p) + "^" + std::to_string(d_->degree) + " " + d_->key;
    case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(d_->e) + ")";
  }
  return d_->key;
}

Scalar Field::zero() const {
  switch (d_->kind) {
    case FieldKind::Rationals: return Scalar(d_, mpq_class(0));
    case FieldKind::PrimeField: return Scalar(d_, std::uint64_t{0});
    case FieldKind::ExtField: return Scalar(d_, std::vector<std::uint64_t>{});
    case FieldKind::Cyclotomic: return Scalar(d_, std::vector<mpq_class>{});
  }
  return Scalar();
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const { return from_mpz(mpz_class(v)); }

Scalar Field::from_mpz(const mpz_class& v) const {
  switch (d_->kind) {
    case FieldKind::Rationals: return Scalar(d_, mpq_class(v));
    case FieldKind::PrimeField: return Scalar(d_, ModP{d_->p}.from_mpz(v));
    case FieldKind::ExtField: {
      std::vector<std::uint64_t> c{ModP{d_->p}.from_mpz(v)};
      if (c[0] == 0) c.clear();
      return Scalar(d_, std::move(c));
    }
    case FieldKind::Cyclotomic: {
      std::vector<mpq_class> c{mpq_class(v)};
      if (sgn(c[0]) == 0) c.clear();
      return Scalar(d_, std::move(c));
    }
  }
  return Scalar();
}

Scalar Field::from_rational(const mpq_class& v_in) const {
  mpq_class v = v_in;
  v.canonicalize();
  if (sgn(v.get_den()) == 0) fail(Errc::DivisionByZero, "zero denominator");
  if (d_->kind == FieldKind::Rationals) return Scalar(d_, v);
  if (d_->kind == FieldKind::Cyclotomic) {
    std::vector<mpq_class> c{v};
    if (sgn(v) == 0) c.clear();
    return Scalar(d_, std::move(c));
  }
  return from_mpz(v.get_num()) / from_mpz(v.get_den());
}

Scalar Field::generator() const {
  switch (d_->kind) {
    case FieldKind::Rationals:
    case FieldKind::PrimeField: return one();
    case FieldKind::ExtField: return from_residues({0, 1});
    case FieldKind::Cyclotomic: return from_rationals({mpq_class(0), mpq_class(1)});
  }
  return one();
}

Scalar Field::from_residues(std::vector<std::uint64_t> coeffs) const {
  ModP r{d_->p};
  for (auto& c : coeffs) c %= d_->p;
  if (d_->kind == FieldKind::PrimeField) {
    std::uint64_t acc = 0;
    // only constants make sense here
    if (!coeffs.empty()) acc = coeffs[0];
    for (std::size_t i = 1; i < coeffs.size(); ++i)
      if (coeffs[i]) fail(Errc::InvalidInput, "polynomial residue given for a prime field");
    return Scalar(d_, acc);
  }
  if (d_->kind != FieldKind::ExtField) fail(Errc::FieldMismatch, "residue coefficients for " + describe());
  auto red = detail::rem(r, coeffs, d_->modulus);
  return Scalar(d_, std::move(red));
}

Scalar Field::from_rationals(std::vector<mpq_class> coeffs) const {
  QRing q;
  for (auto& c : coeffs) c.canonicalize();
  if (d_->kind == FieldKind::Cyclotomic) {
    auto red = detail::rem(q, coeffs, d_->min_poly);
    return Scalar(d_, std::move(red));
  }
  detail::trim(q, coeffs);
  if (coeffs.size() > 1) fail(Errc::FieldMismatch, "rational coefficient list for " + describe());
  return coeffs.empty() ? zero() : from_rational(coeffs[0]);
}

Scalar Field::parse(const std::string& raw) const {
  std::string text = trim_ws(raw);
  if (!text.empty() && text.front() == '[') {
    auto toks = split_list(text);
    if (d_->kind == FieldKind::ExtField || d_->kind == FieldKind::PrimeField) {
      std::vector<std::uint64_t> c;
      ModP r{d_->p};
      for (auto& t : toks) {
        mpz_class z;
        if (z.set_str(t, 10) != 0) fail(Errc::InvalidInput, "cannot parse residue '" + t + "'");
        c.push_back(r.from_mpz(z));
      }
      return from_residues(std::move(c));
    }
    std::vector<mpq_class> c;
    for (auto& t : toks) c.push_back(parse_rational(t));
    return from_rationals(std::move(c));
  }
  return from_rational(parse_rational(text));
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() : f_(rationals_data()), v_(mpq_class(0)) {}

Field Scalar::field() const { return Field(f_); }

void Scalar::check_same(const Scalar& o) const {
  if (f_ != o.f_) fail(Errc::FieldMismatch, "operands from " + Field(f_).describe() + " and " + Field(o.f_).describe());
}

bool Scalar::is_zero() const {
  switch (f_->kind) {
    case FieldKind::Rationals: return sgn(rational()) == 0;
    case FieldKind::PrimeField: return residue() == 0;
    case FieldKind::ExtField: return residues().empty();
    case FieldKind::Cyclotomic: return rationals().empty();
  }
  return false;
}

bool Scalar::is_one() const { return *this == Field(f_).one(); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  switch (f_->kind) {
    case FieldKind::Rationals: return Scalar(f_, mpq_class(rational() + o.rational()));
    case FieldKind::PrimeField: return Scalar(f_, ModP{f_->p}.add(residue(), o.residue()));
    case FieldKind::ExtField: return Scalar(f_, detail::add(ModP{f_->p}, residues(), o.residues()));
    case FieldKind::Cyclotomic: return Scalar(f_, detail::add(QRing{}, rationals(), o.rationals()));
  }
  return *this;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  switch (f_->kind) {
    case FieldKind::Rationals: return Scalar(f_, mpq_class(rational() - o.rational()));
    case FieldKind::PrimeField: return Scalar(f_, ModP{f_->p}.sub(residue(), o.residue()));
    case FieldKind::ExtField: return Scalar(f_, detail::sub(ModP{f_->p}, residues(), o.residues()));
    case FieldKind::Cyclotomic: return Scalar(f_, detail::sub(QRing{}, rationals(), o.rationals()));
  }
  return *this;
}

Scalar Scalar::operator-() const { return Field(f_).zero() - *this; }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  switch (f_->kind) {
    case FieldKind::Rationals: return Scalar(f_, mpq_class(rational() * o.rational()));
    case FieldKind::PrimeField: return Scalar(f_, ModP{f_->p}.mul(residue(), o.residue()));
    case FieldKind::ExtField: return Scalar(f_, detail::mulmod(ModP{f_->p}, residues(), o.residues(), f_->modulus));
    case FieldKind::Cyclotomic: return Scalar(f_, detail::mulmod(QRing{}, rationals(), o.rationals(), f_->min_poly));
  }
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero in " + Field(f_).describe());
  switch (f_->kind) {
    case FieldKind::Rationals: return Scalar(f_, mpq_class(1 / rational()));
    case FieldKind::PrimeField: return Scalar(f_, ModP{f_->p}.inv(residue()));
    case FieldKind::ExtField: {
      auto [g, s, t] = detail::xgcd(ModP{f_->p}, residues(), f_->modulus);
      return Scalar(f_, detail::rem(ModP{f_->p}, s, f_->modulus));
    }
    case FieldKind::Cyclotomic: {
      auto [g, s, t] = detail::xgcd(QRing{}, rationals(), f_->min_poly);
      return Scalar(f_, detail::rem(QRing{}, s, f_->min_poly));
    }
  }
  return *this;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inv();
}

Scalar Scalar::pow(const mpz_class& e) const {
  if (e < 0) return inv().pow(-e);
  Scalar result = Field(f_).one();
  Scalar base = *this;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return v_ == o.v_;
}

namespace {

__int128 symmetric(std::uint64_t a, std::uint64_t p) {
  return a > p / 2 ? static_cast<__int128>(a) - static_cast<__int128>(p) : static_cast<__int128>(a);
}

}  // namespace

int Scalar::compare(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  switch (a.f_->kind) {
    case FieldKind::Rationals: return cmp(a.rational(), b.rational()) < 0 ? -1 : (cmp(a.rational(), b.rational()) > 0 ? 1 : 0);
    case FieldKind::PrimeField: {
      auto x = symmetric(a.residue(), a.f_->p), y = symmetric(b.residue(), a.f_->p);
      return x < y ? -1 : (x > y ? 1 : 0);
    }
    case FieldKind::ExtField: {
      const auto &x = a.residues(), &y = b.residues();
      for (std::size_t i = 0; i < std::max(x.size(), y.size()); ++i) {
        auto xi = symmetric(i < x.size() ? x[i] : 0, a.f_->p);
        auto yi = symmetric(i < y.size() ? y[i] : 0, a.f_->p);
        if (xi != yi) return xi < yi ? -1 : 1;
      }
      return 0;
    }
    case FieldKind::Cyclotomic: {
      const auto &x = a.rationals(), &y = b.rationals();
      for (std::size_t i = 0; i < std::max(x.size(), y.size()); ++i) {
        mpq_class xi = i < x.size() ? x[i] : mpq_class(0);
        mpq_class yi = i < y.size() ? y[i] : mpq_class(0);
        int c = cmp(xi, yi);
        if (c != 0) return c < 0 ? -1 : 1;
      }
      return 0;
    }
  }
  return 0;
}

std::string Scalar::to_string() const {
  switch (f_->kind) {
    case FieldKind::Rationals: return rational().get_str();
    case FieldKind::PrimeField: return std::to_string(residue());
    case FieldKind::ExtField: {
      const auto& c = residues();
      if (c.empty()) return "[0]";
      std::string s = "[";
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
      return s + "]";
    }
    case FieldKind::Cyclotomic: {
      const auto& c = rationals();
      if (c.empty()) return "[\"0\"]";
      std::string s = "[";
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ",\"" : "\"") + c[i].get_str() + "\"";
      return s + "]";
    }
  }
  return "?";
}

std::size_t Scalar::hash() const {
  std::size_t h = std::hash<const void*>{}(f_);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  switch (f_->kind) {
    case FieldKind::Rationals: mix(std::hash<std::string>{}(rational().get_str())); break;
    case FieldKind::PrimeField: mix(residue()); break;
    case FieldKind::ExtField:
      for (auto c : residues()) mix(c);
      break;
    case FieldKind::Cyclotomic:
      for (auto& c : rationals()) mix(std::hash<std::string>{}(c.get_str()));
      break;
  }
  return h;
}

// ---------------------------------------------------------------- vectors

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = f.one();
  return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "vector lengths differ");
  Vec c(a);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += b[i];
  return c;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "vector lengths differ");
  Vec c(a);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] -= b[i];
  return c;
}

Vec vec_scale(const Vec& a, const Scalar& s) {
  Vec c(a);
  for (auto& x : c) x *= s;
  return c;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace frobenia
