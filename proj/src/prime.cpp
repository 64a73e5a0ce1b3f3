#include "frobenia/prime.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "frobenia/detail/polyarith.hpp"
#include "frobenia/numtheory.hpp"
#include "frobenia/poly.hpp"

namespace frobenia {

using detail::ModP;

namespace {

std::vector<std::uint64_t> minpoly_mod(const Field& K, std::uint64_t ell) {
  ModP r{ell};
  std::vector<std::uint64_t> out;
  for (const auto& c : K.min_poly()) {
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), ell)) fail(Errc::UnsupportedPrime, "minimal polynomial not integral at " + std::to_string(ell));
    out.push_back(r.mul(r.from_mpz(c.get_num()), r.inv(r.from_mpz(c.get_den()))));
  }
  detail::trim(r, out);
  return out;
}

void require_char0(const Field& K) {
  if (K.is_finite()) fail(Errc::InvalidInput, "prime ideals are only defined for characteristic-zero fields");
}

// ---- Hensel lifting of a residue factor g of Phi_e mod ell to G mod ell^N.

using ZPoly = std::vector<mpz_class>;

ZPoly zmod(ZPoly a, const mpz_class& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return zmod(std::move(c), m);
}

// remainder modulo a monic polynomial, coefficients mod m
ZPoly zrem_monic(ZPoly a, const ZPoly& g, const mpz_class& m) {
  a = zmod(std::move(a), m);
  const std::size_t dg = g.size() - 1;
  while (a.size() > dg) {
    mpz_class c = a.back();
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t j = 0; j <= dg; ++j) a[shift + j] -= c * g[j];
    a = zmod(std::move(a), m);
  }
  return a;
}

struct HenselState {
  ZPoly G, H;  // Phi = G*H mod ell^k
  unsigned k = 1;
  std::vector<std::uint64_t> s, t;  // s*g + t*h = 1 mod ell
};

std::mutex& hensel_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::tuple<unsigned, std::uint64_t, std::vector<std::uint64_t>>, HenselState>& hensel_cache() {
  static std::map<std::tuple<unsigned, std::uint64_t, std::vector<std::uint64_t>>, HenselState> c;
  return c;
}

ZPoly lifted_factor(const Field& K, const PrimeSpec& p, unsigned N) {
  std::lock_guard lock(hensel_mutex());
  auto key = std::make_tuple(K.root_order(), p.ell, p.residue_factor);
  auto& cache = hensel_cache();
  auto it = cache.find(key);
  const ModP r{p.ell};
  ZPoly phi;
  for (auto& c : K.min_poly()) phi.push_back(c.get_num());
  if (it == cache.end()) {
    HenselState st;
    auto phibar = minpoly_mod(K, p.ell);
    auto [h, rem] = detail::divmod(r, phibar, p.residue_factor);
    if (!rem.empty()) fail(Errc::InvalidInput, "residue factor does not divide the minimal polynomial");
    auto [g1, s, t] = detail::xgcd(r, p.residue_factor, h);
    if (g1.size() != 1) fail(Errc::UnsupportedPrime, "minimal polynomial is not separable modulo " + std::to_string(p.ell));
    st.s = s;
    st.t = t;
    for (auto c : p.residue_factor) st.G.push_back(mpz_class(static_cast<unsigned long>(c)));
    for (auto c : h) st.H.push_back(mpz_class(static_cast<unsigned long>(c)));
    it = cache.emplace(key, std::move(st)).first;
  }
  HenselState& st = it->second;
  const mpz_class ell(static_cast<unsigned long>(p.ell));
  while (st.k < N) {
    mpz_class lk, lk1;
    mpz_pow_ui(lk.get_mpz_t(), ell.get_mpz_t(), st.k);
    lk1 = lk * ell;
    // E = (Phi - G*H) / ell^k mod ell
    ZPoly gh = zmul(st.G, st.H, lk1);
    ZPoly diff(std::max(phi.size(), gh.size()), mpz_class(0));
    for (std::size_t i = 0; i < phi.size(); ++i) diff[i] += phi[i];
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    diff = zmod(std::move(diff), lk1);
    std::vector<std::uint64_t> E;
    for (auto& c : diff) {
      mpz_class q = c / lk;
      E.push_back(r.from_mpz(q));
    }
    detail::trim(r, E);
    std::vector<std::uint64_t> gbar, hbar;
    for (auto& c : st.G) gbar.push_back(r.from_mpz(c));
    for (auto& c : st.H) hbar.push_back(r.from_mpz(c));
    detail::trim(r, gbar);
    detail::trim(r, hbar);
    auto Et = detail::mul(r, E, st.t);
    auto [q, dg] = detail::divmod(r, Et, gbar);
    auto dh = detail::add(r, detail::mul(r, E, st.s), detail::mul(r, q, hbar));
    st.G.resize(std::max(st.G.size(), dg.size()), mpz_class(0));
    for (std::size_t i = 0; i < dg.size(); ++i) st.G[i] += lk * static_cast<unsigned long>(dg[i]);
    st.H.resize(std::max(st.H.size(), dh.size()), mpz_class(0));
    for (std::size_t i = 0; i < dh.size(); ++i) st.H[i] += lk * static_cast<unsigned long>(dh[i]);
    st.G = zmod(st.G, lk1);
    st.H = zmod(st.H, lk1);
    ++st.k;
  }
  mpz_class lN;
  mpz_pow_ui(lN.get_mpz_t(), ell.get_mpz_t(), N);
  return zmod(st.G, lN);
}

// integral numerator y = D*x and v_ell(D)
std::pair<ZPoly, mpz_class> clear_denominators(const Scalar& x) {
  mpz_class D = coefficient_denominator(x);
  ZPoly y;
  for (auto& c : x.rationals()) y.push_back(mpz_class(c * D));
  return {y, D};
}

long unramified_valuation(const Scalar& x, const PrimeSpec& p) {
  const Field K = x.field();
  auto [y, D] = clear_denominators(x);
  const mpz_class ell(static_cast<unsigned long>(p.ell));
  const long vD = static_cast<long>(mpz_valuation(D, ell));
  std::size_t maxbits = 1;
  for (auto& c : x.rationals()) maxbits = std::max(maxbits, mpz_sizeinbase(c.get_den_mpz_t(), 2));
  unsigned N = static_cast<unsigned>(std::max<std::size_t>(8, 2 * maxbits));
  while (N <= (1u << 16)) {
    ZPoly G = lifted_factor(K, p, N);
    mpz_class lN;
    mpz_pow_ui(lN.get_mpz_t(), ell.get_mpz_t(), N);
    ZPoly red = zrem_monic(y, G, lN);
    if (!red.empty()) {
      long v = LONG_MAX;
      for (auto& c : red)
        if (c != 0) v = std::min(v, static_cast<long>(mpz_valuation(c, ell)));
      return v - vD;
    }
    N *= 2;
  }
  fail(Errc::PrecisionExhausted, "Hensel precision cap reached for " + x.to_string());
}

mpq_class det_q(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace

std::string PrimeSpec::describe() const {
  std::string s = std::to_string(ell);
  if (!residue_factor.empty()) {
    s += ",[";
    for (std::size_t i = 0; i < residue_factor.size(); ++i) s += (i ? "," : "") + std::to_string(residue_factor[i]);
    s += "]";
  }
  return s;
}

std::vector<PrimeSpec> primes_above(const Field& K, std::uint64_t ell) {
  require_char0(K);
  if (!is_prime(ell)) fail(Errc::InvalidInput, std::to_string(ell) + " is not prime");
  if (K.kind() == FieldKind::Rationals) return {PrimeSpec{ell, {}, false}};
  const unsigned e = K.root_order();
  if (e == ell) {
    std::vector<std::uint64_t> g{ell == 2 ? 1 : ell - 1, 1};  // x - 1
    return {PrimeSpec{ell, g, true}};
  }
  if (e % ell == 0) fail(Errc::UnsupportedPrime, "ell = " + std::to_string(ell) + " divides e = " + std::to_string(e));
  auto phibar = minpoly_mod(K, ell);
  Field Fl = Field::prime(ell);
  Vec c;
  for (auto v : phibar) c.push_back(Fl.from_residues({v}));
  std::vector<PrimeSpec> out;
  for (auto& f : factor(Poly(Fl, c))) {
    std::vector<std::uint64_t> g;
    for (auto& s : f.poly.coeffs()) g.push_back(s.residue());
    out.push_back(PrimeSpec{ell, g, false});
  }
  return out;
}

PrimeSpec make_prime_spec(const Field& K, std::uint64_t ell, std::vector<std::uint64_t> factor_in) {
  auto all = primes_above(K, ell);
  if (factor_in.empty()) return all.front();
  if (K.kind() == FieldKind::Rationals) fail(Errc::InvalidInput, "no residue factor expected over Q");
  ModP r{ell};
  for (auto& c : factor_in) c %= ell;
  detail::trim(r, factor_in);
  factor_in = detail::monic(r, factor_in);
  for (auto& p : all)
    if (p.residue_factor == factor_in) return p;
  fail(Errc::InvalidInput, "residue factor is not an irreducible factor of the minimal polynomial mod " + std::to_string(ell));
}

Field residue_field(const Field& K, const PrimeSpec& p) {
  require_char0(K);
  if (p.residue_factor.size() <= 2) return Field::prime(p.ell);
  return Field::extension(p.ell, p.residue_factor);
}

mpz_class coefficient_denominator(const Scalar& x) {
  if (x.field().kind() == FieldKind::Rationals) return x.rational().get_den();
  if (x.field().kind() != FieldKind::Cyclotomic) return 1;
  mpz_class D = 1;
  for (auto& c : x.rationals()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den_mpz_t());
  return D;
}

std::vector<std::uint64_t> denominator_primes(const Scalar& x) {
  std::vector<std::uint64_t> out;
  for (auto& [q, k] : factor_integer(coefficient_denominator(x))) {
    if (!q.fits_ulong_p()) fail(Errc::InvalidInput, "denominator prime too large");
    out.push_back(q.get_ui());
  }
  return out;
}

mpq_class field_norm(const Scalar& x) {
  const Field K = x.field();
  if (K.kind() == FieldKind::Rationals) return x.rational();
  if (K.kind() != FieldKind::Cyclotomic) fail(Errc::InvalidInput, "norm only defined for characteristic-zero fields");
  const unsigned d = K.degree();
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d, mpq_class(0)));
  Scalar z = K.generator();
  Scalar basis = K.one();
  for (unsigned i = 0; i < d; ++i) {
    Scalar prod = basis * x;
    const auto& cs = prod.rationals();
    for (std::size_t j = 0; j < cs.size(); ++j) m[i][j] = cs[j];
    basis *= z;
  }
  return det_q(std::move(m));
}

long valuation(const Scalar& x, const PrimeSpec& p) {
  const Field K = x.field();
  require_char0(K);
  if (x.is_zero()) return kInfiniteValuation;
  const mpz_class ell(static_cast<unsigned long>(p.ell));
  if (K.kind() == FieldKind::Rationals) {
    const auto& q = x.rational();
    return static_cast<long>(mpz_valuation(q.get_num(), ell)) - static_cast<long>(mpz_valuation(q.get_den(), ell));
  }
  const unsigned e = K.root_order();
  if (p.ramified || e == p.ell) {
    mpq_class n = field_norm(x);
    return static_cast<long>(mpz_valuation(n.get_num(), ell)) - static_cast<long>(mpz_valuation(n.get_den(), ell));
  }
  if (e % p.ell == 0) fail(Errc::UnsupportedPrime, "ell divides e");
  if (K.degree() == 1) {
    // Q(zeta_1), Q(zeta_2) are Q
    const Scalar c = x;
    mpq_class q = c.rationals().empty() ? mpq_class(0) : c.rationals()[0];
    return static_cast<long>(mpz_valuation(q.get_num(), ell)) - static_cast<long>(mpz_valuation(q.get_den(), ell));
  }
  return unramified_valuation(x, p);
}

Scalar reduce_mod(const Scalar& x, const PrimeSpec& p, const Field& dst) {
  const Field K = x.field();
  require_char0(K);
  if (x.is_zero()) return dst.zero();
  const long v = valuation(x, p);
  if (v < 0) fail(Errc::NegativeValuation, x.to_string() + " is not integral at " + p.describe());
  const ModP r{p.ell};
  const mpz_class ell(static_cast<unsigned long>(p.ell));
  if (K.kind() == FieldKind::Rationals) return dst.from_rational(x.rational());
  if (p.ramified || K.root_order() == p.ell || K.degree() == 1) {
    // p-integral means ell-integral power-basis coefficients here; zeta maps to its residue
    Scalar zeta_bar = p.ramified ? dst.one() : dst.from_residues({r.neg(p.residue_factor.empty() ? 0 : p.residue_factor[0])});
    Scalar acc = dst.zero(), zp = dst.one();
    for (auto& c : x.rationals()) {
      acc += dst.from_rational(c) * zp;
      zp *= zeta_bar;
    }
    return acc;
  }
  auto [y, D] = clear_denominators(x);
  const unsigned k = mpz_valuation(D, ell);
  mpz_class ellk, Dunit = D;
  mpz_pow_ui(ellk.get_mpz_t(), ell.get_mpz_t(), k);
  Dunit /= ellk;
  std::vector<std::uint64_t> res;
  if (k == 0) {
    for (auto& c : y) res.push_back(r.from_mpz(c));
  } else {
    const unsigned N = k + 1;
    ZPoly G = lifted_factor(K, p, N);
    mpz_class lN = ellk * ell;
    ZPoly red = zrem_monic(y, G, lN);
    for (auto& c : red) {
      if (!mpz_divisible_p(c.get_mpz_t(), ellk.get_mpz_t())) fail(Errc::NegativeValuation, "inconsistent valuation during reduction");
      res.push_back(r.from_mpz(mpz_class(c / ellk)));
    }
  }
  detail::trim(r, res);
  res = detail::rem(r, res, p.residue_factor);
  const std::uint64_t dinv = r.inv(r.from_mpz(Dunit));
  for (auto& c : res) c = r.mul(c, dinv);
  if (dst.kind() == FieldKind::PrimeField) {
    // evaluate at the root of the linear factor
    const std::uint64_t root = r.neg(p.residue_factor[0]);
    std::uint64_t acc = 0;
    for (std::size_t i = res.size(); i-- > 0;) acc = r.add(r.mul(acc, root), res[i]);
    return dst.from_residues({acc});
  }
  return dst.from_residues(res);
}

Scalar lift_residue(const Scalar& xbar, const PrimeSpec& p, const Field& K) {
  require_char0(K);
  const Field k = xbar.field();
  if (k.kind() == FieldKind::PrimeField) return K.from_int(static_cast<long>(xbar.residue()));
  if (K.kind() != FieldKind::Cyclotomic) fail(Errc::FieldMismatch, "extension residue over Q");
  std::vector<mpq_class> c;
  for (auto v : xbar.residues()) c.push_back(mpq_class(static_cast<unsigned long>(v)));
  (void)p;
  return K.from_rationals(std::move(c));
}

}  // namespace frobenia
