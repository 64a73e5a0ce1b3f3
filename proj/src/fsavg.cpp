#include "frobenia/fsavg.hpp"

#include <algorithm>
#include <random>

namespace frobenia {

std::vector<Mat> dual_actions(const DualBasis& D, const RightModule& M) {
  std::vector<Mat> out;
  for (std::size_t w = 0; w < D.dual.rows(); ++w) out.push_back(M.act(D.dual.row(w)));
  return out;
}

Mat average(const FrobeniusData& fd, const RightModule& M, const RightModule& N, const Mat& F) {
  if (M.algebra_ptr() != fd.algebra || N.algebra_ptr() != fd.algebra) fail(Errc::AlgebraMismatch, "averaging over another algebra");
  if (F.rows() != M.dim() || F.cols() != N.dim()) fail(Errc::DimensionMismatch, "averaged map has the wrong shape");
  const auto dualN = dual_actions(fd.dual, N);
  Mat out(M.field(), M.dim(), N.dim());
  for (std::size_t w = 0; w < fd.algebra->dim(); ++w) out += M.action(w) * F * dualN[w];
  return out;
}

std::optional<Mat> gaschutz_certificate(const FrobeniusData& fd, const RightModule& M) {
  const std::size_t d = M.dim();
  const auto dual = dual_actions(fd.dual, M);
  // row (a,b): I(E_ab) flattened, I(E_ab)[x][y] = sum_w rho(w)[x][a] rho(w^vee)[b][y]
  Mat L(M.field(), d * d, d * d);
  for (std::size_t w = 0; w < fd.algebra->dim(); ++w) {
    const Mat& R = M.action(w);
    const Mat& Dv = dual[w];
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t a = 0; a < d; ++a) {
        if (R(x, a).is_zero()) continue;
        for (std::size_t b = 0; b < d; ++b)
          for (std::size_t y = 0; y < d; ++y)
            if (!Dv(b, y).is_zero()) L(a * d + b, x * d + y) += R(x, a) * Dv(b, y);
      }
  }
  Mat target(M.field(), 1, d * d);
  for (std::size_t i = 0; i < d; ++i) target(0, i * d + i) = M.field().one();
  auto sol = solve_left(L, target);
  if (!sol) return std::nullopt;
  Mat psi(M.field(), d, d, sol->row(0));
  if (!average(fd, M, M, psi).is_identity()) fail(Errc::VerificationFailed, "Gaschutz certificate does not average to the identity");
  return psi;
}

Scalar identity_component(const AdaptedPim& P, const Mat& psi) {
  const std::size_t n = P.n, d = P.d, m = P.m;
  if (psi.rows() != n || psi.cols() != n) fail(Errc::DimensionMismatch, "endomorphism has the wrong shape");
  for (const auto& R : P.adapted.actions())
    if (R * psi != psi * R) fail(Errc::NotEndomorphism, "map does not commute with the action");
  const Scalar c = psi(m, m);
  const Mat D = psi - Mat::identity(psi.field(), n) * c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = m; j < n; ++j)
      if (!D(i, j).is_zero()) fail(Errc::VerificationFailed, "image of psi - c id is not inside the radical");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!D(i, j).is_zero()) fail(Errc::VerificationFailed, "psi - c id does not kill the socle");
  return c;
}

Scalar c_value(const AdaptedPim& P, std::size_t i, std::size_t j, std::size_t s, std::size_t t) {
  Scalar acc = P.adapted.field().zero();
  for (std::size_t w = 0; w < P.dual.size(); ++w) {
    const Scalar& x = P.adapted.action(w)(i, s);
    if (x.is_zero()) continue;
    const Scalar& y = P.dual[w](t, j);
    if (!y.is_zero()) acc += x * y;
  }
  return acc;
}

const Scalar& CTensor::get(const Quad& q) const {
  auto it = cache_.find(q);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(q, c_value(*pim, q[0], q[1], q[2], q[3])).first->second;
}

CTensor c_tensor(const AdaptedPim& P, std::optional<bool> force_full, std::size_t sample, std::uint64_t seed) {
  CTensor T;
  T.pim = &P;
  T.seed = seed;
  const std::size_t n = P.n, d = P.d, m = P.m;
  T.full = force_full.value_or(n <= 12);
  if (T.full) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t t = 0; t < n; ++t) T.coverage.push_back({i, j, s, t});
    return T;
  }
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo); };  // [lo, hi)
  auto pair_same_block = [&](std::size_t& i, std::size_t& j) {
    if (rng() % 2) {
      i = pick(0, d);
      j = pick(0, d);
    } else {
      i = pick(m, n);
      j = pick(m, n);
    }
  };
  T.coverage.push_back({0, 0, 0, m});
  for (std::size_t k = 0; k < sample; ++k) {
    std::size_t i, j;
    if (d < n) T.coverage.push_back({pick(0, d), pick(d, n), pick(0, n), pick(0, n)});   // (1)
    if (m > 0) T.coverage.push_back({pick(0, m), pick(m, n), pick(0, n), pick(0, n)});   // (2)
    T.coverage.push_back({pick(0, d), pick(0, d), pick(0, n), pick(0, n)});               // (3)
    T.coverage.push_back({pick(m, n), pick(m, n), pick(0, n), pick(0, n)});               // (4)
    T.coverage.push_back({pick(0, d), pick(0, n), pick(0, d), pick(0, n)});               // shift
    if (m > 0) {
      pair_same_block(i, j);
      T.coverage.push_back({i, j, pick(0, n), pick(0, m)});  // (5)
    }
    if (d < n) {
      pair_same_block(i, j);
      T.coverage.push_back({i, j, pick(d, n), pick(0, n)});  // (6)
    }
    const std::size_t s = pick(0, d);
    T.coverage.push_back({pick(0, d), pick(0, d), s, rng() % 2 ? s + m : pick(m, n)});  // (7)
    T.coverage.push_back({pick(0, n), pick(0, n), pick(0, n), pick(0, d)});              // (8)
    if (m < n) T.coverage.push_back({pick(0, n), pick(0, n), pick(m, n), pick(0, n)});  // (9)
  }
  for (int k = 0; k < 200; ++k) T.coverage.push_back({pick(0, n), pick(0, n), pick(0, n), pick(0, n)});
  std::sort(T.coverage.begin(), T.coverage.end());
  T.coverage.erase(std::unique(T.coverage.begin(), T.coverage.end()), T.coverage.end());
  return T;
}

bool FsReport::pass() const {
  for (const auto& r : relations)
    if (r.applicable && !r.pass()) return false;
  return true;
}

FsReport verify_fs_relations(const CTensor& T) {
  const AdaptedPim& P = *T.pim;
  const std::size_t d = P.d, m = P.m;
  const Field& f = P.adapted.field();
  const Scalar zero = f.zero();
  FsReport rep;
  rep.c = T.get(0, 0, 0, m);
  rep.socle_iso_head = P.socle_iso_head;
  rep.full = T.full;
  const char* names[] = {"(1)", "(2)", "(3)", "(4)", "shift", "(5)", "(6)", "(7)", "(8)", "(9)", "nonvanishing"};
  for (const char* nm : names) rep.relations.push_back({nm});
  rep.relations[8].applicable = rep.relations[9].applicable = !P.socle_iso_head;

  auto record = [&](std::size_t k, bool ok, const Quad& q) {
    auto& r = rep.relations[k];
    ++r.checked;
    if (!ok && !r.counterexample) r.counterexample = q;
  };
  auto delta = [&](bool b) { return b ? f.one() : zero; };
  for (const Quad& q : T.coverage) {
    const auto [i, j, s, t] = q;
    const Scalar& v = T.get(q);
    const bool both_socle = i < d && j < d, both_head = i >= m && j >= m;
    if (i < d && j >= d) record(0, v.is_zero(), q);
    if (i < m && j >= m) record(1, v.is_zero(), q);
    if (both_socle) record(2, v == delta(i == j) * T.get(0, 0, s, t), q);
    if (both_head) record(3, v == delta(i == j) * T.get(0, 0, s, t), q);
    if (s < d && i < d) record(4, v == T.get(t, s + m, j, i + m), q);
    if (t < m && (both_socle || both_head)) record(5, v.is_zero(), q);
    if (s >= d && (both_socle || both_head)) record(6, v.is_zero(), q);
    if (s < d && t >= m && both_socle) record(7, v == delta(s + m == t && i == j) * rep.c, q);
    if (!P.socle_iso_head) {
      if (t < d) record(8, v.is_zero(), q);
      if (s >= m) record(9, v.is_zero(), q);
    }
  }
  record(10, !rep.c.is_zero(), Quad{0, 0, 0, m});
  rep.quadruples = T.coverage.size();
  return rep;
}

Vec etilde_coefficients(const AdaptedPim& P, std::size_t i) {
  const Scalar cinv = P.c.inv();
  Vec a;
  for (std::size_t w = 0; w < P.dual.size(); ++w) a.push_back(P.adapted.action(w)(P.m + i, i) * cinv);
  return a;
}

std::vector<IdempotentReport> make_idempotents(const FrobeniusData& fd, const AlgebraAnalysis& an, const AdaptedPim& P,
                                               bool throw_on_failure) {
  const Algebra& A = *fd.algebra;
  const std::size_t n = A.dim(), d = P.d, m = P.m;
  const Field& f = A.field();
  const Poly lift = lift_polynomial(std::max(1u, an.nilpotency)).over(f);
  const RightModule reg = regular_module(fd.algebra);
  Echelon rad(f, n);
  for (std::size_t r = 0; r < an.radical.rows(); ++r) rad.insert(an.radical.row(r));
  const Scalar cinv = P.c.inv();

  auto head_of = [&](const Vec& e) {
    const RightModule M = submodule(reg, row_space(A.left_mult(e)));
    std::vector<std::size_t> mult;
    for (const auto& S : an.catalog.simples) mult.push_back(hom_space(M, S).size());
    return std::make_pair(M, mult);
  };

  std::vector<IdempotentReport> out;
  for (std::size_t i = 0; i < d; ++i) {
    IdempotentReport r;
    r.i = i;
    r.etilde = zero_vec(f, n);
    r.Etilde = zero_vec(f, n);
    const Vec a = etilde_coefficients(P, i);
    for (std::size_t w = 0; w < n; ++w) {
      if (!a[w].is_zero()) r.etilde = vec_add(r.etilde, vec_scale(fd.dual.vector(w), a[w]));
      const Scalar b = P.dual[w](m + i, i) * cinv;
      if (!b.is_zero()) r.Etilde[w] += b;
    }
    r.e = eval_in_algebra(A, lift, r.etilde);
    r.E = eval_in_algebra(A, lift, r.Etilde);
    r.square = A.mul(r.e, r.e) == r.e;
    r.E_square = A.mul(r.E, r.E) == r.E;

    const Mat on_head = P.adapted.act(r.etilde).block(m, d, m, d);
    Mat proj(f, d, d);
    proj(i, i) = f.one();
    r.head_projection = on_head == proj;

    r.annihilates_others = true;
    for (std::size_t k = 0; k < an.catalog.size(); ++k)
      if (k != P.pim.simple && !an.catalog.simples[k].act(r.e).is_zero()) r.annihilates_others = false;

    if (r.square) {
      auto [M, mult] = head_of(r.e);
      r.iso = iso_test(M, P.pim.module);
    }
    if (r.E_square) {
      auto [M, mult] = head_of(r.E);
      r.E_head = true;
      for (std::size_t k = 0; k < mult.size(); ++k)
        if (mult[k] != (k == P.socle_simple ? 1u : 0u)) r.E_head = false;
    }
    out.push_back(std::move(r));
  }
  for (auto& r : out) {
    r.pairwise_rad = true;
    for (const auto& o : out)
      if (o.i != r.i && (!rad.contains(A.mul(r.e, o.e)) || !rad.contains(A.mul(r.E, o.E)))) r.pairwise_rad = false;
  }
  if (throw_on_failure)
    for (const auto& r : out)
      if (!r.ok()) fail(Errc::VerificationFailed, "idempotent checks failed for i = " + std::to_string(r.i + 1));
  return out;
}

}  // namespace frobenia
