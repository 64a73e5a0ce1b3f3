#include "frobenia/module.hpp"

#include <algorithm>
#include <random>

namespace frobenia {

RightModule::RightModule(AlgebraPtr A, std::vector<Mat> action, bool do_validate) : alg_(std::move(A)), act_(std::move(action)) {
  if (!alg_) fail(Errc::InvalidInput, "module without an algebra");
  if (act_.size() != alg_->dim()) fail(Errc::DimensionMismatch, "one action matrix per algebra basis element expected");
  dim_ = act_.empty() ? 0 : act_[0].rows();
  for (const auto& m : act_) {
    if (m.rows() != dim_ || m.cols() != dim_) fail(Errc::DimensionMismatch, "action matrices must be square of equal size");
    if (m.field() != alg_->field()) fail(Errc::FieldMismatch, "action matrix over another field");
  }
  if (do_validate) validate();
}

Mat RightModule::act(const Vec& x) const {
  if (x.size() != act_.size()) fail(Errc::DimensionMismatch, "algebra element length");
  Mat m(field(), dim_, dim_);
  for (std::size_t w = 0; w < x.size(); ++w)
    if (!x[w].is_zero()) m += act_[w] * x[w];
  return m;
}

void RightModule::validate() const {
  const Algebra& A = *alg_;
  const std::size_t n = A.dim();
  if (!act(A.unit()).is_identity()) fail(Errc::InvalidInput, "the unit does not act as the identity");
  auto check = [&](std::size_t i, std::size_t j) {
    Mat lhs = act_[i] * act_[j];
    Mat rhs(field(), dim_, dim_);
    for (const auto& [k, c] : A.product(i, j)) rhs += act_[k] * c;
    if (lhs != rhs) fail(Errc::InvalidInput, "action does not respect the structure constants at (" + A.labels()[i] + ", " + A.labels()[j] + ")");
  };
  const double cost = static_cast<double>(n) * n * dim_ * dim_ * dim_;
  if (cost <= 5e7) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) check(i, j);
  } else {
    std::mt19937_64 rng(0x30d);
    for (int t = 0; t < 256; ++t) check(rng() % n, rng() % n);
  }
}

RightModule regular_module(const AlgebraPtr& A) {
  std::vector<Mat> act;
  for (std::size_t j = 0; j < A->dim(); ++j) act.push_back(A->regular_action(j));
  return RightModule(A, std::move(act), false);
}

std::vector<Mat> hom_space(const RightModule& M, const RightModule& N) {
  if (M.algebra_ptr() != N.algebra_ptr() && &M.algebra() != &N.algebra()) fail(Errc::AlgebraMismatch, "modules over different algebras");
  const Field& f = M.field();
  const std::size_t dm = M.dim(), dn = N.dim();
  const auto& gens = M.algebra().generators();
  Mat E(f, dm * dn, gens.size() * dm * dn);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Mat& rm = M.action(gens[g]);
    const Mat& rn = N.action(gens[g]);
    const std::size_t off = g * dm * dn;
    for (std::size_t a = 0; a < dm; ++a)
      for (std::size_t c = 0; c < dn; ++c) {
        const std::size_t eq = off + a * dn + c;
        for (std::size_t b = 0; b < dn; ++b)
          if (!rn(b, c).is_zero()) E(a * dn + b, eq) += rn(b, c);
        for (std::size_t k = 0; k < dm; ++k)
          if (!rm(a, k).is_zero()) E(k * dn + c, eq) -= rm(a, k);
      }
  }
  Mat K = kernel(E);
  std::vector<Mat> out;
  for (std::size_t r = 0; r < K.rows(); ++r) out.emplace_back(f, dm, dn, K.row(r));
  return out;
}

namespace {

Mat spin_impl(const RightModule& M, const std::vector<Vec>& seeds, bool transposed) {
  const Field& f = M.field();
  Echelon span(f, M.dim());
  std::vector<Vec> frontier;
  for (const auto& s : seeds)
    if (span.insert(s)) frontier.push_back(s);
  const auto& gens = M.algebra().generators();
  std::vector<Mat> ops;
  for (auto g : gens) ops.push_back(transposed ? M.action(g).transpose() : M.action(g));
  while (!frontier.empty() && span.dim() < M.dim()) {
    Vec v = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& op : ops) {
      Vec w = vec_mat(v, op);
      if (span.insert(w)) frontier.push_back(std::move(w));
    }
  }
  if (span.dim() == 0) return Mat(f, 0, M.dim());
  return row_space(span.as_mat());
}

std::vector<std::size_t> rref_pivots(const Mat& U) {
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < U.rows(); ++i) {
    std::size_t p = 0;
    while (p < U.cols() && U(i, p).is_zero()) ++p;
    if (p == U.cols()) fail(Errc::InvalidInput, "zero row in a submodule basis");
    piv.push_back(p);
  }
  return piv;
}

}  // namespace

Mat spin(const RightModule& M, const std::vector<Vec>& seeds) { return spin_impl(M, seeds, false); }

Mat spin_transposed(const RightModule& M, const std::vector<Vec>& seeds) { return spin_impl(M, seeds, true); }

RightModule submodule(const RightModule& M, const Mat& U_in) {
  const Mat U = row_space(U_in);
  const auto piv = rref_pivots(U);
  const std::size_t k = U.rows();
  std::vector<Mat> act;
  for (const auto& R : M.actions()) {
    Mat Y = U * R;
    Mat X(M.field(), k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) X(i, j) = Y(i, piv[j]);
    if (X * U != Y) fail(Errc::InvalidInput, "subspace is not a submodule");
    act.push_back(std::move(X));
  }
  return RightModule(M.algebra_ptr(), std::move(act), false);
}

RightModule quotient(const RightModule& M, const Mat& U_in) {
  const Mat U = U_in.rows() ? row_space(U_in) : U_in;
  const auto piv = rref_pivots(U);
  std::vector<bool> is_piv(M.dim(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < M.dim(); ++c)
    if (!is_piv[c]) free.push_back(c);
  std::vector<Mat> act;
  for (const auto& R : M.actions()) {
    Mat X(M.field(), free.size(), free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
      Vec v = R.row(free[j]);
      for (std::size_t i = 0; i < U.rows(); ++i) {
        const Scalar c = v[piv[i]];
        if (c.is_zero()) continue;
        for (std::size_t t = 0; t < M.dim(); ++t)
          if (!U(i, t).is_zero()) v[t] -= c * U(i, t);
      }
      for (std::size_t l = 0; l < free.size(); ++l) X(j, l) = v[free[l]];
    }
    act.push_back(std::move(X));
  }
  return RightModule(M.algebra_ptr(), std::move(act), false);
}

namespace {

Scalar random_coefficient(const Field& f, std::mt19937_64& rng) {
  if (f.is_finite()) {
    std::vector<std::uint64_t> c(f.degree());
    for (auto& x : c) x = rng() % f.p();
    return f.kind() == FieldKind::PrimeField ? f.from_residues({c[0]}) : f.from_residues(c);
  }
  return f.from_int(static_cast<long>(rng() % 7) - 3);
}

}  // namespace

Mat find_submodule(const RightModule& M, std::uint64_t seed) {
  const Field& f = M.field();
  const std::size_t d = M.dim();
  if (d <= 1) return Mat(f, 0, d);
  const std::size_t n = M.algebra().dim();
  const std::size_t random_rounds = 64;
  std::mt19937_64 rng(seed);
  const std::size_t total = n + n * n + random_rounds;
  for (std::size_t t = 0; t < total; ++t) {
    Mat X;
    if (t < n) {
      X = M.action(t);
    } else if (t < n + n * n) {
      const std::size_t i = (t - n) / n, j = (t - n) % n;
      X = M.action(i) * M.action(j);
    } else {
      X = Mat(f, d, d);
      for (std::size_t w = 0; w < n; ++w) X += M.action(w) * random_coefficient(f, rng);
    }
    std::vector<PolyFactor> factors;
    try {
      factors = factor(min_poly(X), seed);
    } catch (const Error& e) {
      if (e.code() == Errc::FactorizationIncomplete) continue;
      throw;
    }
    for (const auto& q : factors) {
      const Mat N = eval_poly(q.poly, X);
      const Mat K = kernel(N);
      if (K.rows() == 0) continue;
      for (std::size_t r = 0; r < std::min<std::size_t>(K.rows(), 4); ++r) {
        Mat U = spin(M, {K.row(r)});
        if (U.rows() < d) return U;
      }
      if (!q.irreducible || static_cast<int>(K.rows()) != q.poly.degree()) continue;
      // Norton: the kernel is one-dimensional over F[x]/(q)
      const Mat Kt = kernel(N.transpose());
      Mat W = spin_transposed(M, {Kt.row(0)});
      if (W.rows() == d) return Mat(f, 0, d);
      return row_space(kernel(W.transpose()));
    }
  }
  fail(Errc::SplittingFailure, "no splitting element found for a module of dimension " + std::to_string(d));
}

bool is_simple(const RightModule& M, std::uint64_t seed) { return M.dim() > 0 && find_submodule(M, seed).rows() == 0; }

bool iso_test(const RightModule& M, const RightModule& N) {
  if (M.dim() != N.dim()) return false;
  if (M.dim() == 0) return true;
  const auto H = hom_space(M, N);
  if (H.empty()) return false;
  auto invertible = [](const Mat& F) { return rank(F) == F.rows(); };
  for (const auto& F : H)
    if (invertible(F)) return true;
  for (std::size_t i = 0; i < H.size(); ++i)
    for (std::size_t j = i + 1; j < H.size(); ++j)
      if (invertible(H[i] + H[j])) return true;
  std::mt19937_64 rng(0x150);
  for (int t = 0; t < 64; ++t) {
    Mat F(M.field(), M.dim(), N.dim());
    for (const auto& h : H) F += h * random_coefficient(M.field(), rng);
    if (invertible(F)) return true;
  }
  return false;
}

namespace {

void chop_rec(const RightModule& M, std::uint64_t seed, std::vector<RightModule>& out) {
  if (M.dim() == 0) return;
  Mat U = find_submodule(M, seed);
  if (U.rows() == 0) {
    out.push_back(M);
    return;
  }
  chop_rec(submodule(M, U), seed, out);
  chop_rec(quotient(M, U), seed, out);
}

}  // namespace

std::vector<CompositionFactor> chop(const RightModule& M, std::uint64_t seed) {
  std::vector<RightModule> pieces;
  chop_rec(M, seed, pieces);
  std::vector<CompositionFactor> out;
  for (auto& S : pieces) {
    bool found = false;
    for (auto& cf : out)
      if (iso_test(cf.module, S)) {
        ++cf.multiplicity;
        found = true;
        break;
      }
    if (!found) out.push_back({S, 1});
  }
  return out;
}

Vec trace_vector(const RightModule& M) {
  Vec t;
  for (const auto& R : M.actions()) t.push_back(R.trace());
  return t;
}

std::size_t SimpleCatalog::find(const RightModule& S) const {
  for (std::size_t i = 0; i < simples.size(); ++i)
    if (simples[i].dim() == S.dim() && iso_test(simples[i], S)) return i;
  fail(Errc::VerificationFailed, "module is not isomorphic to any catalog simple");
}

SimpleCatalog simple_catalog(const AlgebraPtr& A, std::uint64_t seed) {
  auto factors = chop(regular_module(A), seed);
  struct Entry {
    RightModule S;
    Vec tr;
  };
  std::vector<Entry> entries;
  for (auto& cf : factors) {
    if (hom_space(cf.module, cf.module).size() != 1)
      fail(Errc::NotSplit, "a simple module of dimension " + std::to_string(cf.module.dim()) + " has endomorphism ring of dimension > 1");
    entries.push_back({cf.module, trace_vector(cf.module)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.S.dim() != b.S.dim()) return a.S.dim() < b.S.dim();
    for (std::size_t i = 0; i < a.tr.size(); ++i) {
      const int c = Scalar::compare(a.tr[i], b.tr[i]);
      if (c != 0) return c > 0;
    }
    return false;
  });
  SimpleCatalog cat;
  std::size_t prev_dim = 0;
  char letter = 'a';
  for (auto& e : entries) {
    if (e.S.dim() != prev_dim) {
      prev_dim = e.S.dim();
      letter = 'a';
    }
    cat.labels.push_back(std::to_string(e.S.dim()) + std::string(1, letter++));
    cat.simples.push_back(e.S);
    cat.trace_vectors.push_back(e.tr);
  }
  return cat;
}

Mat radical_algebra(const Algebra& A, const SimpleCatalog& cat) {
  const std::size_t n = A.dim();
  std::size_t width = 0;
  for (const auto& S : cat.simples) width += S.dim() * S.dim();
  Mat R(A.field(), n, width);
  for (std::size_t w = 0; w < n; ++w) {
    std::size_t off = 0;
    for (const auto& S : cat.simples) {
      const Mat& m = S.action(w);
      for (std::size_t i = 0; i < S.dim(); ++i)
        for (std::size_t j = 0; j < S.dim(); ++j) R(w, off + i * S.dim() + j) = m(i, j);
      off += S.dim() * S.dim();
    }
  }
  Mat K = kernel(R);
  return K.rows() ? row_space(K) : K;
}

Mat radical_module(const RightModule& M, const Mat& rad) {
  Mat stacked(M.field(), 0, M.dim());
  for (std::size_t r = 0; r < rad.rows(); ++r) stacked = stacked.vstack(M.act(rad.row(r)));
  if (stacked.rows() == 0) return stacked;
  return row_space(stacked);
}

Mat radical_module_via_homs(const RightModule& M, const SimpleCatalog& cat) {
  Mat all(M.field(), M.dim(), 0);
  for (const auto& S : cat.simples)
    for (const auto& F : hom_space(M, S)) all = all.hstack(F);
  Mat K = kernel(all);
  return K.rows() ? row_space(K) : K;
}

Mat socle_module(const RightModule& M, const Mat& rad) {
  Mat all(M.field(), M.dim(), 0);
  for (std::size_t r = 0; r < rad.rows(); ++r) all = all.hstack(M.act(rad.row(r)));
  Mat K = kernel(all);
  return K.rows() ? row_space(K) : K;
}

unsigned nilpotency_index(const Algebra& A, const Mat& rad) {
  if (rad.rows() == 0) return 1;
  Mat P = rad;
  unsigned k = 1;
  while (P.rows() > 0) {
    Echelon next(A.field(), A.dim());
    for (std::size_t i = 0; i < P.rows(); ++i)
      for (std::size_t j = 0; j < rad.rows(); ++j) next.insert(A.mul(P.row(i), rad.row(j)));
    P = next.dim() ? row_space(next.as_mat()) : Mat(A.field(), 0, A.dim());
    ++k;
    if (k > A.dim() + 1) fail(Errc::VerificationFailed, "radical is not nilpotent");
  }
  return k;
}

AlgebraAnalysis analyze(const AlgebraPtr& A, std::uint64_t seed) {
  AlgebraAnalysis an;
  an.algebra = A;
  an.catalog = simple_catalog(A, seed);
  an.radical = radical_algebra(*A, an.catalog);
  // two-sided ideal check
  Echelon rad(A->field(), A->dim());
  for (std::size_t r = 0; r < an.radical.rows(); ++r) rad.insert(an.radical.row(r));
  for (std::size_t r = 0; r < an.radical.rows(); ++r)
    for (std::size_t w = 0; w < A->dim(); ++w) {
      if (!rad.contains(A->mul(an.radical.row(r), A->basis_vec(w))) || !rad.contains(A->mul(A->basis_vec(w), an.radical.row(r))))
        fail(Errc::VerificationFailed, "radical is not a two-sided ideal");
    }
  an.nilpotency = nilpotency_index(*A, an.radical);
  return an;
}

}  // namespace frobenia
