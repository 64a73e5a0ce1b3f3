#include "frobenia/poly.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "frobenia/numtheory.hpp"

namespace frobenia {

Poly::Poly(Field f, Vec coeffs) : f_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.field() != f_) fail(Errc::FieldMismatch, "polynomial coefficient from another field");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::from_ints(const Field& f, const std::vector<long>& coeffs) {
  Vec v;
  for (long c : coeffs) v.push_back(f.from_int(c));
  return Poly(f, std::move(v));
}

Scalar Poly::lead() const {
  if (c_.empty()) return f_.zero();
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  if (f_ != o.f_) fail(Errc::FieldMismatch, "polynomials over different fields");
  Vec c(std::max(c_.size(), o.c_.size()), f_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return Poly(f_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  if (f_ != o.f_) fail(Errc::FieldMismatch, "polynomials over different fields");
  Vec c(std::max(c_.size(), o.c_.size()), f_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return Poly(f_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (f_ != o.f_) fail(Errc::FieldMismatch, "polynomials over different fields");
  if (c_.empty() || o.c_.empty()) return Poly(f_);
  Vec c(c_.size() + o.c_.size() - 1, f_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return Poly(f_, std::move(c));
}

Poly Poly::operator*(const Scalar& s) const {
  Vec c(c_);
  for (auto& x : c) x *= s;
  return Poly(f_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (f_ != d.f_) fail(Errc::FieldMismatch, "polynomials over different fields");
  if (d.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  Vec r = c_;
  if (r.size() < d.c_.size()) return {Poly(f_), *this};
  Vec q(r.size() - d.c_.size() + 1, f_.zero());
  const Scalar li = d.lead().inv();
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::size_t top = k + d.c_.size() - 1;
    if (r[top].is_zero()) continue;
    Scalar coef = r[top] * li;
    q[k] = coef;
    for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= coef * d.c_[j];
  }
  return {Poly(f_, std::move(q)), Poly(f_, std::move(r))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inv();
}

Poly Poly::derivative() const {
  Vec c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * f_.from_int(static_cast<long>(i)));
  return Poly(f_, std::move(c));
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = f_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::pow_mod(const mpz_class& e, const Poly& m) const {
  Poly result = Poly::constant(f_.one()) % m;
  Poly base = *this % m;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = (result * base) % m;
    k >>= 1;
    if (k > 0) base = (base * base) % m;
  }
  return result;
}

Poly Poly::compose(const Poly& g) const {
  Poly acc(f_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly::constant(c_[i]);
  return acc;
}

std::string Poly::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + c_[i].to_string();
  return s + "]";
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// p-th root of a polynomial whose derivative vanishes (finite fields only).
Poly pth_root(const Poly& f) {
  const Field& k = f.field();
  const std::uint64_t p = k.characteristic();
  const mpz_class e = k.order() / static_cast<unsigned long>(p);
  Vec c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i].pow(e));
  return Poly(k, std::move(c));
}

void merge_factor(std::map<unsigned, Poly>& acc, const Poly& g, unsigned mult) {
  auto it = acc.find(mult);
  if (it == acc.end())
    acc.emplace(mult, g);
  else
    it->second = it->second * g;
}

std::map<unsigned, Poly> sqf_rec(const Poly& f_in) {
  std::map<unsigned, Poly> out;
  Poly f = f_in.monic();
  if (f.degree() <= 0) return out;
  Poly fp = f.derivative();
  if (fp.is_zero()) {
    for (auto& [m, g] : sqf_rec(pth_root(f))) merge_factor(out, g, m * static_cast<unsigned>(f.field().characteristic()));
    return out;
  }
  Poly c = poly_gcd(f, fp);
  Poly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = poly_gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) merge_factor(out, z.monic(), i);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    const auto p = static_cast<unsigned>(c.field().characteristic());
    if (p == 0) fail(Errc::FactorizationIncomplete, "squarefree decomposition did not terminate");
    for (auto& [m, g] : sqf_rec(pth_root(c.monic()))) merge_factor(out, g, m * p);
  }
  return out;
}

Scalar random_scalar(const Field& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, k.p() - 1);
  if (k.kind() == FieldKind::PrimeField) return k.from_residues({dist(rng)});
  std::vector<std::uint64_t> c(k.degree());
  for (auto& x : c) x = dist(rng);
  return k.from_residues(std::move(c));
}

std::vector<Poly> equal_degree(const Poly& f, int d, std::mt19937_64& rng) {
  if (f.degree() == d) return {f};
  const Field& k = f.field();
  const mpz_class q = k.order();
  const bool even = k.characteristic() == 2;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Vec c;
    for (int i = 0; i < f.degree(); ++i) c.push_back(random_scalar(k, rng));
    Poly a(k, std::move(c));
    if (a.degree() <= 0) continue;
    Poly b(k);
    if (!even) {
      mpz_class qd;
      mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
      b = a.pow_mod((qd - 1) / 2, f) - Poly::constant(k.one());
    } else {
      // absolute trace to F_2 of the class of a in F_{q^d}
      const unsigned steps = k.degree() * static_cast<unsigned>(d);
      Poly s = a % f, t = a % f;
      for (unsigned i = 1; i < steps; ++i) {
        s = (s * s) % f;
        t = t + s;
      }
      b = t;
    }
    Poly g = poly_gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = equal_degree(g, d, rng);
      auto right = equal_degree((f / g).monic(), d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
  fail(Errc::FactorizationIncomplete, "equal-degree splitting did not converge");
}

std::vector<Poly> factor_squarefree_finite(const Poly& f_in, std::mt19937_64& rng) {
  std::vector<Poly> out;
  Poly f = f_in.monic();
  const Field& k = f.field();
  const mpz_class q = k.order();
  const Poly x = Poly::x(k);
  Poly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = h.pow_mod(q, f);
    Poly g = poly_gcd(h - x, f);
    if (g.degree() > 0) {
      for (auto& piece : equal_degree(g, d, rng)) out.push_back(piece.monic());
      f = (f / g).monic();
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back(f);
  return out;
}

// Rational roots of a polynomial with rational coefficients (given as Q-field poly).
std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& coeffs_in) {
  std::vector<mpq_class> coeffs = coeffs_in;
  while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
  std::vector<mpq_class> out;
  if (coeffs.size() <= 1) return out;
  std::size_t shift = 0;
  while (shift < coeffs.size() && sgn(coeffs[shift]) == 0) ++shift;
  if (shift > 0) out.push_back(0);
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(shift));
  if (coeffs.size() <= 1) return out;
  mpz_class l = 1;
  for (auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (auto& c : coeffs) ints.push_back(mpz_class(c * l));
  auto eval = [&](const mpq_class& r) {
    mpq_class acc = 0;
    for (std::size_t i = ints.size(); i-- > 0;) acc = acc * r + mpq_class(ints[i]);
    return acc;
  };
  auto num = divisors(ints.front());
  auto den = divisors(ints.back());
  if (num.size() * den.size() > 4000000) fail(Errc::FactorizationIncomplete, "rational root search too large");
  std::vector<mpq_class> cand;
  for (auto& a : num)
    for (auto& b : den) {
      mpq_class r(a, b);
      r.canonicalize();
      cand.push_back(r);
      cand.push_back(-r);
    }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (auto& r : cand)
    if (sgn(eval(r)) == 0) out.push_back(r);
  return out;
}

std::vector<mpq_class> q_gcd_coeffs(const std::vector<std::vector<mpq_class>>& polys) {
  Field Q = Field::rationals();
  Poly g(Q);
  for (auto& cs : polys) {
    Vec v;
    for (auto& c : cs) v.push_back(Q.from_rational(c));
    g = poly_gcd(g, Poly(Q, std::move(v)));
  }
  std::vector<mpq_class> out;
  for (auto& c : g.coeffs()) out.push_back(c.rational());
  return out;
}

std::vector<Scalar> roots_char0(const Poly& p) {
  const Field& k = p.field();
  std::vector<Scalar> out;
  if (p.degree() <= 0) return out;
  if (p.degree() == 1) return {-(p.coeff(0) / p.coeff(1))};
  if (k.kind() == FieldKind::Rationals) {
    std::vector<mpq_class> cs;
    for (auto& c : p.coeffs()) cs.push_back(c.rational());
    for (auto& r : rational_roots(cs)) out.push_back(k.from_rational(r));
    return out;
  }
  // units of Q(zeta_e): +-zeta^j
  std::vector<Scalar> units;
  const Scalar z = k.generator();
  Scalar u = k.one();
  for (unsigned j = 0; j < k.root_order(); ++j) {
    units.push_back(u);
    units.push_back(-u);
    u *= z;
  }
  const unsigned deg = k.degree();
  for (const auto& un : units) {
    std::vector<std::vector<mpq_class>> comps(deg, std::vector<mpq_class>(p.coeffs().size(), mpq_class(0)));
    Scalar upow = k.one();
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
      Scalar cj = p.coeffs()[j] * upow;
      const auto& rs = cj.rationals();
      for (std::size_t t = 0; t < rs.size(); ++t) comps[t][j] = rs[t];
      upow *= un;
    }
    auto g = q_gcd_coeffs(comps);
    for (auto& r : rational_roots(g)) {
      Scalar root = un * k.from_rational(r);
      if (p.eval(root).is_zero() && std::find(out.begin(), out.end(), root) == out.end()) out.push_back(root);
    }
  }
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    int c = Scalar::compare(a.coeff(static_cast<std::size_t>(i)), b.coeff(static_cast<std::size_t>(i)));
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, unsigned>> out;
  for (auto& [m, g] : sqf_rec(p)) out.emplace_back(g, m);
  return out;
}

std::vector<PolyFactor> factor(const Poly& p, std::uint64_t seed) {
  if (p.is_zero()) fail(Errc::InvalidInput, "factorization of the zero polynomial");
  std::vector<PolyFactor> out;
  const Field& k = p.field();
  if (k.is_finite()) {
    std::mt19937_64 rng(seed);
    for (auto& [g, m] : squarefree_decomposition(p))
      for (auto& piece : factor_squarefree_finite(g, rng)) out.push_back({piece, m, true});
  } else {
    bool certified = false;
    for (auto& [g, m] : squarefree_decomposition(p)) {
      Poly rest = g;
      for (auto& r : roots_char0(g)) {
        Poly lin(k, {-r, k.one()});
        out.push_back({lin, m, true});
        rest = rest / lin;
        certified = true;
      }
      if (rest.degree() == 1) {
        out.push_back({rest.monic(), m, true});
        certified = true;
      } else if (rest.degree() > 1) {
        bool irr = k.kind() == FieldKind::Rationals && rest.degree() <= 3;
        certified = certified || irr;
        out.push_back({rest.monic(), m, irr});
      }
    }
    if (!certified && p.degree() > 0) fail(Errc::FactorizationIncomplete, "no linear factor found for " + p.to_string());
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) { return poly_less(a.poly, b.poly); });
  return out;
}

std::vector<Scalar> roots(const Poly& p, std::uint64_t seed) {
  std::vector<Scalar> out;
  if (p.degree() <= 0) return out;
  if (!p.field().is_finite()) {
    for (auto& [g, m] : squarefree_decomposition(p))
      for (auto& r : roots_char0(g)) out.push_back(r);
  } else {
    for (auto& f : factor(p, seed))
      if (f.poly.degree() == 1) out.push_back(-f.poly.coeff(0));
  }
  std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; });
  return out;
}

}  // namespace frobenia
