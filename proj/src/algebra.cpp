#include "frobenia/algebra.hpp"

#include <map>
#include <random>

namespace frobenia {

namespace {

using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

void axpy(std::map<std::size_t, Scalar>& acc, const Sparse& v, const Scalar& s) {
  for (const auto& [k, c] : v) {
    auto it = acc.find(k);
    if (it == acc.end())
      acc.emplace(k, c * s);
    else
      it->second += c * s;
  }
}

Vec densify(const std::map<std::size_t, Scalar>& m, const Field& f, std::size_t n) {
  Vec v = zero_vec(f, n);
  for (const auto& [k, c] : m) v[k] = c;
  return v;
}

}  // namespace

Algebra::Algebra(std::string name, Field f, std::vector<std::string> labels, std::vector<StructureEntry> structure, Vec unit, Vec tau)
    : name_(std::move(name)), f_(f), n_(unit.size()), labels_(std::move(labels)), unit_(std::move(unit)), tau_(std::move(tau)) {
  if (n_ == 0) fail(Errc::InvalidInput, "algebra of dimension zero");
  if (tau_.size() != n_) fail(Errc::InvalidInput, "tau has the wrong length");
  if (labels_.empty())
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back("b" + std::to_string(i));
  if (labels_.size() != n_) fail(Errc::InvalidInput, "basis label count does not match the dimension");
  for (const auto& x : unit_)
    if (x.field() != f_) fail(Errc::FieldMismatch, "unit coefficient from another field");
  for (const auto& x : tau_)
    if (x.field() != f_) fail(Errc::FieldMismatch, "tau coefficient from another field");

  std::vector<std::map<std::size_t, Scalar>> dense(n_ * n_);
  for (const auto& e : structure) {
    if (e.i >= n_ || e.j >= n_ || e.k >= n_) fail(Errc::InvalidInput, "structure constant index out of range");
    if (e.coeff.field() != f_) fail(Errc::FieldMismatch, "structure constant from another field");
    auto& cell = dense[e.i * n_ + e.j];
    auto it = cell.find(e.k);
    if (it == cell.end())
      cell.emplace(e.k, e.coeff);
    else
      it->second += e.coeff;
  }
  table_.resize(n_ * n_);
  for (std::size_t c = 0; c < n_ * n_; ++c)
    for (const auto& [k, v] : dense[c])
      if (!v.is_zero()) table_[c].emplace_back(k, v);

  regular_.reserve(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    Mat R(f_, n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (const auto& [k, c] : product(i, j)) R(i, k) = c;
    regular_.push_back(std::move(R));
  }

  // unit check
  for (std::size_t i = 0; i < n_; ++i) {
    const Vec b = basis_vec(i);
    if (mul(unit_, b) != b || mul(b, unit_) != b) fail(Errc::InvalidInput, "unit is not a two-sided identity on " + labels_[i]);
  }
  check_associativity();
  compute_generators();
}

std::vector<StructureEntry> Algebra::structure() const {
  std::vector<StructureEntry> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (const auto& [k, c] : product(i, j)) out.push_back({i, j, k, c});
  return out;
}

void Algebra::check_associativity() const {
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    std::map<std::size_t, Scalar> left, right;
    for (const auto& [l, c] : product(i, j)) axpy(left, product(l, k), c);
    for (const auto& [l, c] : product(j, k)) axpy(right, product(i, l), c);
    if (densify(left, f_, n_) != densify(right, f_, n_))
      fail(Errc::InvalidInput, "structure constants are not associative at (" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] + ")");
  };
  if (n_ <= 64) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) check(i, j, k);
  } else {
    std::mt19937_64 rng(0xa550c);
    for (int t = 0; t < 4096; ++t) check(rng() % n_, rng() % n_, rng() % n_);
  }
}

void Algebra::compute_generators() {
  // subalgebra generated by S is the right spin of the unit under S
  Echelon span(f_, n_);
  std::vector<std::size_t> gens;
  auto respin = [&]() {
    std::vector<Vec> frontier{unit_};
    span = Echelon(f_, n_);
    span.insert(unit_);
    while (!frontier.empty()) {
      Vec v = frontier.back();
      frontier.pop_back();
      for (auto g : gens) {
        Vec w = vec_mat(v, regular_[g]);
        if (span.insert(w)) frontier.push_back(w);
      }
    }
  };
  respin();
  for (std::size_t i = 0; i < n_ && span.dim() < n_; ++i) {
    if (span.contains(basis_vec(i))) continue;
    gens.push_back(i);
    respin();
  }
  generators_ = gens;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_) fail(Errc::DimensionMismatch, "algebra element length");
  Vec out = zero_vec(f_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar s = x[i] * y[j];
      for (const auto& [k, c] : product(i, j)) out[k] += s * c;
    }
  }
  return out;
}

Scalar Algebra::eval_tau(const Vec& x) const {
  if (x.size() != n_) fail(Errc::DimensionMismatch, "algebra element length");
  Scalar t = f_.zero();
  for (std::size_t i = 0; i < n_; ++i)
    if (!x[i].is_zero()) t += x[i] * tau_[i];
  return t;
}

Mat Algebra::right_mult(const Vec& y) const {
  if (y.size() != n_) fail(Errc::DimensionMismatch, "algebra element length");
  Mat R(f_, n_, n_);
  for (std::size_t j = 0; j < n_; ++j)
    if (!y[j].is_zero()) R += regular_[j] * y[j];
  return R;
}

Mat Algebra::left_mult(const Vec& x) const {
  Mat L(f_, n_, n_);
  for (std::size_t j = 0; j < n_; ++j) L.set_row(j, mul(x, basis_vec(j)));
  return L;
}

Algebra Algebra::change_basis(const Mat& P, const std::string& new_name) const {
  if (P.rows() != n_ || P.cols() != n_) fail(Errc::DimensionMismatch, "basis change shape");
  const Mat Pinv = inverse(P);
  std::vector<StructureEntry> st;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      Vec prod = vec_mat(mul(P.row(i), P.row(j)), Pinv);
      for (std::size_t k = 0; k < n_; ++k)
        if (!prod[k].is_zero()) st.push_back({i, j, k, prod[k]});
    }
  Vec unit = vec_mat(unit_, Pinv);
  Vec tau = zero_vec(f_, n_);
  for (std::size_t i = 0; i < n_; ++i) tau[i] = eval_tau(P.row(i));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n_; ++i) labels.push_back("c" + std::to_string(i));
  return Algebra(new_name.empty() ? name_ + "'" : new_name, f_, labels, st, unit, tau);
}

Mat gram_matrix(const Algebra& A) {
  const std::size_t n = A.dim();
  Mat G(A.field(), n, n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t w = 0; w < n; ++w) {
      Scalar t = A.field().zero();
      for (const auto& [k, c] : A.product(y, w)) t += c * A.tau()[k];
      G(y, w) = t;
    }
  return G;
}

FrobeniusCheck check_frobenius(const Algebra& A) {
  const Mat G = gram_matrix(A);
  FrobeniusCheck r;
  r.gram_rank = rank(G);
  r.is_frobenius = r.gram_rank == A.dim();
  r.is_symmetric = G == G.transpose();
  return r;
}

DualBasis dual_basis(const Algebra& A) {
  DualBasis d;
  d.gram = gram_matrix(A);
  try {
    d.dual = inverse(d.gram);
  } catch (const Error& e) {
    if (e.code() == Errc::Singular) fail(Errc::NotFrobenius, "Gram matrix of tau is singular for " + A.name());
    throw;
  }
  // tau(B_y^vee B_w) = delta
  if (!(d.dual * d.gram).is_identity()) fail(Errc::VerificationFailed, "dual basis pairing check failed");
  return d;
}

Nakayama nakayama(const Algebra& A) {
  const Mat G = gram_matrix(A);
  Mat Ginv;
  try {
    Ginv = inverse(G);
  } catch (const Error& e) {
    if (e.code() == Errc::Singular) fail(Errc::NotFrobenius, "Gram matrix of tau is singular for " + A.name());
    throw;
  }
  Nakayama N{G.transpose() * Ginv};
  const std::size_t n = A.dim();
  if (rank(N.alpha) != n) fail(Errc::VerificationFailed, "Nakayama map is not invertible");
  // tau(B_u B_j) = tau(alpha(B_j) B_u)
  if (G.transpose() != N.alpha * G) fail(Errc::VerificationFailed, "Nakayama defining identity fails");
  if (N.alpha.is_identity()) return N;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec a = A.basis_vec(i), b = A.basis_vec(j);
      if (A.mul(N.apply(a), N.apply(b)) != N.apply(A.mul(a, b))) fail(Errc::VerificationFailed, "Nakayama map is not multiplicative");
    }
  return N;
}

FrobeniusData frobenius_data(AlgebraPtr A) {
  FrobeniusData fd{A, dual_basis(*A), nakayama(*A)};
  return fd;
}

}  // namespace frobenia
