#include "frobenia/pim.hpp"

#include "frobenia/fsavg.hpp"

namespace frobenia {

namespace {

using ZPoly = std::vector<mpz_class>;

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

ZPoly zpow(const ZPoly& a, unsigned k) {
  ZPoly r{1};
  for (unsigned i = 0; i < k; ++i) r = zmul(r, a);
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Mat block_rows(const Mat& B, std::size_t r0, std::size_t nr) { return B.block(r0, nr, 0, B.cols()); }

}  // namespace

Poly LiftPolynomial::over(const Field& f) const {
  Vec c;
  for (const auto& z : coeffs) c.push_back(f.from_mpz(z));
  return Poly(f, c);
}

LiftPolynomial lift_polynomial(unsigned a) {
  if (a < 1) fail(Errc::InvalidInput, "lifting polynomial needs a >= 1");
  const ZPoly X{0, 1}, OneMinusX{1, -1};
  ZPoly f(2 * a + 1, 0);
  for (unsigned s = 0; s <= a; ++s) {
    const ZPoly term = zmul(zpow(X, 2 * a - s), zpow(OneMinusX, s));
    for (std::size_t k = 0; k < term.size(); ++k) f[k] += binomial(2 * a, s) * term[k];
  }
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  LiftPolynomial L{a, f};

  const Field Q = Field::rationals();
  const Poly fq = L.over(Q);
  const Poly x = Poly::x(Q), one = Poly::constant(Q.one());
  Poly xa = one, ya = one;
  for (unsigned i = 0; i < a; ++i) {
    xa = xa * x;
    ya = ya * (one - x);
  }
  if (!((fq * fq - fq) % (xa * ya)).is_zero()) fail(Errc::VerificationFailed, "f^2 - f is not divisible by X^a (1-X)^a");
  if ((fq - x) % (x * (one - x)) != Poly(Q)) fail(Errc::VerificationFailed, "f is not X modulo X(1-X)");
  return L;
}

Vec eval_in_algebra(const Algebra& A, const Poly& p, const Vec& x) {
  Vec r = zero_vec(A.field(), A.dim());
  for (int k = p.degree(); k >= 0; --k) {
    r = A.mul(r, x);
    r = vec_add(r, vec_scale(A.unit(), p.coeff(static_cast<std::size_t>(k))));
  }
  return r;
}

std::vector<Vec> semisimple_idempotents(const Algebra& A, const SimpleCatalog& cat) {
  const std::size_t n = A.dim();
  std::size_t width = 0;
  for (const auto& S : cat.simples) width += S.dim() * S.dim();
  Mat R(A.field(), n, width);
  for (std::size_t w = 0; w < n; ++w) {
    std::size_t off = 0;
    for (const auto& S : cat.simples) {
      for (std::size_t i = 0; i < S.dim(); ++i)
        for (std::size_t j = 0; j < S.dim(); ++j) R(w, off + i * S.dim() + j) = S.action(w)(i, j);
      off += S.dim() * S.dim();
    }
  }
  std::vector<Vec> out;
  std::size_t off = 0;
  for (const auto& S : cat.simples) {
    Mat target(A.field(), 1, width);
    target(0, off) = A.field().one();
    auto x = solve_left(R, target);
    if (!x) fail(Errc::NotSplit, "the simple representations do not jointly span their matrix algebras");
    out.push_back(x->row(0));
    off += S.dim() * S.dim();
  }
  return out;
}

Vec lift_idempotent(const Algebra& A, const Vec& x, unsigned a) {
  const Vec e = eval_in_algebra(A, lift_polynomial(a).over(A.field()), x);
  if (A.mul(e, e) != e) fail(Errc::VerificationFailed, "lifted element is not idempotent");
  return e;
}

std::vector<Pim> extract_pims(const AlgebraAnalysis& an) {
  const Algebra& A = *an.algebra;
  const RightModule reg = regular_module(an.algebra);
  const auto xs = semisimple_idempotents(A, an.catalog);
  std::vector<Pim> out;
  std::size_t total = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Pim P;
    P.simple = k;
    P.idempotent = lift_idempotent(A, xs[k], an.nilpotency);
    P.embedding = row_space(A.left_mult(P.idempotent));
    P.module = submodule(reg, P.embedding);
    for (std::size_t j = 0; j < an.catalog.size(); ++j) {
      const std::size_t h = hom_space(P.module, an.catalog.simples[j]).size();
      if (h != (j == k ? 1u : 0u))
        fail(Errc::VerificationFailed, "head of the PIM for " + an.catalog.labels[k] + " has multiplicity " + std::to_string(h) + " of " +
                                           an.catalog.labels[j]);
    }
    total += an.catalog.simples[k].dim() * P.module.dim();
    out.push_back(std::move(P));
  }
  if (total != A.dim()) fail(Errc::VerificationFailed, "sum of dim S * dim P_S differs from the algebra dimension");
  return out;
}

namespace {

void rebuild(const FrobeniusData& fd, AdaptedPim& P) {
  const Mat Binv = inverse(P.basis_change);
  std::vector<Mat> act;
  for (const auto& R : P.pim.module.actions()) act.push_back(P.basis_change * R * Binv);
  P.adapted = RightModule(P.pim.module.algebra_ptr(), std::move(act), false);
  P.dual = dual_actions(fd.dual, P.adapted);
  P.c = c_value(P, 0, 0, 0, P.m);
}

Mat alpha_action(const FrobeniusData& fd, const RightModule& M, std::size_t w) { return M.act(fd.alpha.alpha.row(w)); }

}  // namespace

AdaptedPim adapt_basis(const FrobeniusData& fd, const AlgebraAnalysis& an, const Pim& P) {
  const RightModule& M = P.module;
  const Field& f = M.field();
  const std::size_t n = M.dim();
  const Mat soc = socle_module(M, an.radical);
  const Mat rad = radical_module(M, an.radical);
  AdaptedPim out;
  out.pim = P;
  out.n = n;
  out.d = soc.rows();
  out.m = n - out.d;
  if (rad.rows() != out.m) fail(Errc::VerificationFailed, "dim soc(P) differs from dim head(P)");

  Echelon span(f, n);
  std::vector<Vec> basis;
  for (std::size_t r = 0; r < soc.rows(); ++r) {
    span.insert(soc.row(r));
    basis.push_back(soc.row(r));
  }
  if (out.m > 0) {
    Echelon radspan(f, n);
    for (std::size_t r = 0; r < rad.rows(); ++r) radspan.insert(rad.row(r));
    for (std::size_t r = 0; r < soc.rows(); ++r)
      if (!radspan.contains(soc.row(r))) fail(Errc::VerificationFailed, "socle is not inside the radical of a non-simple PIM");
    for (std::size_t r = 0; r < rad.rows(); ++r)
      if (span.insert(rad.row(r))) basis.push_back(rad.row(r));
    for (std::size_t k = 0; k < n; ++k) {
      const Vec e = unit_vec(f, n, k);
      if (span.insert(e)) basis.push_back(e);
    }
  }
  if (basis.size() != n) fail(Errc::VerificationFailed, "adapted basis construction lost rank");
  out.basis_change = Mat::from_rows(f, basis, n);

  const SimpleCatalog& cat = an.catalog;
  out.socle_simple = cat.find(submodule(M, soc));
  out.socle_iso_head = out.socle_simple == P.simple;

  const std::size_t d = out.d, m = out.m;
  if (m == 0) {
    for (std::size_t w = 0; w < fd.algebra->dim(); ++w)
      if (alpha_action(fd, M, w) != M.action(w))
        fail(Errc::NoIntertwiner, "simple PIM on which the Nakayama automorphism acts nontrivially");
  } else {
    rebuild(fd, out);
    // T rho_V(alpha(B_w)) = rho_S(B_w) T
    std::vector<Mat> socle_act, head_alpha;
    for (std::size_t w = 0; w < fd.algebra->dim(); ++w) {
      socle_act.push_back(out.adapted.action(w).block(0, d, 0, d));
      head_alpha.push_back(alpha_action(fd, out.adapted, w).block(m, d, m, d));
    }
    const RightModule Smod(fd.algebra, socle_act, false), Vmod(fd.algebra, head_alpha, false);
    const auto H = hom_space(Smod, Vmod);
    std::optional<Mat> T;
    for (const auto& h : H)
      if (rank(h) == d) {
        T = h;
        break;
      }
    if (!T) fail(Errc::NoIntertwiner, "head of the PIM is not isomorphic to the socle twisted by the Nakayama automorphism");
    const Mat head = block_rows(out.basis_change, m, d);
    const Mat new_head = *T * head;
    for (std::size_t i = 0; i < d; ++i) out.basis_change.set_row(m + i, new_head.row(i));
  }
  rebuild(fd, out);
  if (m > 0) {
    if (out.c.is_zero()) fail(Errc::VerificationFailed, "c(1,1,1,1+m) vanishes");
    const Scalar inv = out.c.inv();
    for (std::size_t i = m; i < n; ++i) out.basis_change.set_row(i, vec_scale(out.basis_change.row(i), inv));
    rebuild(fd, out);
    if (!out.c.is_one()) fail(Errc::VerificationFailed, "head scaling did not normalize c to 1");
  }
  verify_adapted(fd, an, out);
  return out;
}

AdaptedPim rescale_head(const FrobeniusData& fd, const AdaptedPim& P, const Scalar& lambda) {
  AdaptedPim out = P;
  for (std::size_t i = P.m; i < P.n; ++i) out.basis_change.set_row(i, vec_scale(P.basis_change.row(i), lambda));
  rebuild(fd, out);
  return out;
}

void verify_adapted(const FrobeniusData& fd, const AlgebraAnalysis& an, const AdaptedPim& P) {
  const RightModule& M = P.pim.module;
  const std::size_t d = P.d, m = P.m;
  if (row_space(block_rows(P.basis_change, 0, d)) != socle_module(M, an.radical)) fail(Errc::VerificationFailed, "b_1..b_d do not span the socle");
  if (m > 0 && row_space(block_rows(P.basis_change, 0, m)) != radical_module(M, an.radical))
    fail(Errc::VerificationFailed, "b_1..b_m do not span the radical");
  for (std::size_t w = 0; w < fd.algebra->dim(); ++w) {
    const Mat& R = P.adapted.action(w);
    const Mat Ra = alpha_action(fd, P.adapted, w);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (R(j, i) != Ra(m + j, m + i))
          fail(Errc::VerificationFailed, "adapted basis compatibility fails at basis element " + fd.algebra->labels()[w]);
  }
}

}  // namespace frobenia
