#include "frobenia/matrix.hpp"

namespace frobenia {

Mat::Mat(Field f, std::size_t rows, std::size_t cols) : f_(f), r_(rows), c_(cols), e_(rows * cols, f.zero()) {}

Mat::Mat(Field f, std::size_t rows, std::size_t cols, Vec entries) : f_(f), r_(rows), c_(cols), e_(std::move(entries)) {
  if (e_.size() != r_ * c_) fail(Errc::DimensionMismatch, "matrix entry count does not match its shape");
  for (const auto& x : e_)
    if (x.field() != f_) fail(Errc::FieldMismatch, "matrix entry from another field");
}

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
  Vec e;
  e.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) fail(Errc::DimensionMismatch, "ragged matrix rows");
    e.insert(e.end(), r.begin(), r.end());
  }
  return Mat(f, rows.size(), cols, std::move(e));
}

Mat Mat::from_ints(const Field& f, const std::vector<std::vector<long>>& rows) {
  std::vector<Vec> rs;
  for (const auto& r : rows) {
    Vec v;
    for (long x : r) v.push_back(f.from_int(x));
    rs.push_back(std::move(v));
  }
  return from_rows(f, rs, rows.empty() ? 0 : rows[0].size());
}

Vec Mat::row(std::size_t i) const {
  if (i >= r_) fail(Errc::DimensionMismatch, "row index out of range");
  return Vec(e_.begin() + static_cast<long>(i * c_), e_.begin() + static_cast<long>((i + 1) * c_));
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (i >= r_ || v.size() != c_) fail(Errc::DimensionMismatch, "set_row shape");
  for (std::size_t j = 0; j < c_; ++j) e_[i * c_ + j] = v[j];
}

std::vector<Vec> Mat::row_list() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < r_; ++i) out.push_back(row(i));
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) fail(Errc::DimensionMismatch, "matrix sum shapes");
  Mat m(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) fail(Errc::DimensionMismatch, "matrix difference shapes");
  Mat m(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) fail(Errc::DimensionMismatch, "matrix product shapes " + std::to_string(r_) + "x" + std::to_string(c_) + " * " + std::to_string(o.r_) + "x" + std::to_string(o.c_));
  if (f_ != o.f_) fail(Errc::FieldMismatch, "matrix product over different fields");
  Mat m(f_, r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.c_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) m(i, j) += a * b;
      }
    }
  return m;
}

Mat Mat::operator*(const Scalar& s) const {
  Mat m(*this);
  for (auto& x : m.e_) x *= s;
  return m;
}

Mat Mat::operator-() const { return *this * f_.from_int(-1); }

bool Mat::operator==(const Mat& o) const { return f_ == o.f_ && r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }

Mat Mat::transpose() const {
  Mat m(f_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Mat Mat::block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
  if (r0 + nr > r_ || c0 + nc > c_) fail(Errc::DimensionMismatch, "block out of range");
  Mat m(f_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

Mat Mat::vstack(const Mat& below) const {
  if (r_ == 0 && c_ == 0) return below;
  if (below.c_ != c_) fail(Errc::DimensionMismatch, "vstack column counts");
  Vec e = e_;
  e.insert(e.end(), below.e_.begin(), below.e_.end());
  return Mat(f_, r_ + below.r_, c_, std::move(e));
}

Mat Mat::hstack(const Mat& right) const {
  if (right.r_ != r_) fail(Errc::DimensionMismatch, "hstack row counts");
  Mat m(f_, r_, c_ + right.c_);
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.c_; ++j) m(i, c_ + j) = right(i, j);
  }
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const { return is_square() && *this == identity(f_, r_); }

Scalar Mat::trace() const {
  if (!is_square()) fail(Errc::DimensionMismatch, "trace of a non-square matrix");
  Scalar t = f_.zero();
  for (std::size_t i = 0; i < r_; ++i) t += (*this)(i, i);
  return t;
}

std::string Mat::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < r_; ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < c_; ++j) s += (j ? "," : "") + (*this)(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

Vec vec_mat(const Vec& v, const Mat& A) {
  if (v.size() != A.rows()) fail(Errc::DimensionMismatch, "vector length does not match matrix rows");
  Vec out(A.cols(), A.field().zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const Scalar& a = A(i, j);
      if (!a.is_zero()) out[j] += v[i] * a;
    }
  }
  return out;
}

RrefResult rref(const Mat& A) {
  const Field& f = A.field();
  Mat R = A;
  Mat T = Mat::identity(f, A.rows());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < A.cols() && row < A.rows(); ++col) {
    std::size_t p = row;
    while (p < A.rows() && R(p, col).is_zero()) ++p;
    if (p == A.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < std::max(A.cols(), A.rows()); ++j) {
        if (j < A.cols()) std::swap(R(p, j), R(row, j));
        if (j < A.rows()) std::swap(T(p, j), T(row, j));
      }
    const Scalar inv = R(row, col).inv();
    for (std::size_t j = 0; j < A.cols(); ++j) R(row, j) *= inv;
    for (std::size_t j = 0; j < A.rows(); ++j) T(row, j) *= inv;
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (i == row || R(i, col).is_zero()) continue;
      const Scalar factor = R(i, col);
      for (std::size_t j = col; j < A.cols(); ++j)
        if (!R(row, j).is_zero()) R(i, j) -= factor * R(row, j);
      for (std::size_t j = 0; j < A.rows(); ++j)
        if (!T(row, j).is_zero()) T(i, j) -= factor * T(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {R, pivots, pivots.size(), T};
}

namespace {

// RREF without the transform, for internal use where only R and pivots matter.
std::pair<Mat, std::vector<std::size_t>> rref_only(const Mat& A) {
  Mat R = A;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < A.cols() && row < A.rows(); ++col) {
    std::size_t p = row;
    while (p < A.rows() && R(p, col).is_zero()) ++p;
    if (p == A.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < A.cols(); ++j) std::swap(R(p, j), R(row, j));
    const Scalar inv = R(row, col).inv();
    for (std::size_t j = col; j < A.cols(); ++j) R(row, j) *= inv;
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (i == row || R(i, col).is_zero()) continue;
      const Scalar factor = R(i, col);
      for (std::size_t j = col; j < A.cols(); ++j)
        if (!R(row, j).is_zero()) R(i, j) -= factor * R(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {R, pivots};
}

// Basis of the column null space {x : M x = 0}, one vector per free column.
std::vector<Vec> right_null_space(const Mat& M) {
  auto [R, piv] = rref_only(M);
  const Field& f = M.field();
  std::vector<bool> is_piv(M.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec> out;
  for (std::size_t fc = 0; fc < M.cols(); ++fc) {
    if (is_piv[fc]) continue;
    Vec v = zero_vec(f, M.cols());
    v[fc] = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -R(i, fc);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::size_t rank(const Mat& A) { return rref_only(A).second.size(); }

Mat kernel(const Mat& A) { return Mat::from_rows(A.field(), right_null_space(A.transpose()), A.rows()); }

std::optional<Mat> solve(const Mat& A, const Mat& b) {
  if (A.rows() != b.rows()) fail(Errc::DimensionMismatch, "solve: right-hand side rows");
  const Field& f = A.field();
  auto [R, piv] = rref_only(A.hstack(b));
  Mat x(f, A.cols(), b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= A.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(piv[i], j) = R(i, A.cols() + j);
  }
  return x;
}

std::optional<Mat> solve_left(const Mat& A, const Mat& b) {
  auto x = solve(A.transpose(), b.transpose());
  if (!x) return std::nullopt;
  return x->transpose();
}

Mat inverse(const Mat& A) {
  if (!A.is_square()) fail(Errc::Singular, "inverse of a non-square matrix");
  auto [R, piv] = rref_only(A.hstack(Mat::identity(A.field(), A.rows())));
  if (piv.size() < A.rows() || (A.rows() > 0 && piv[A.rows() - 1] >= A.cols())) fail(Errc::Singular, "matrix is singular");
  return R.block(0, A.rows(), A.cols(), A.rows());
}

Scalar determinant(const Mat& A) {
  if (!A.is_square()) fail(Errc::DimensionMismatch, "determinant of a non-square matrix");
  Mat R = A;
  const std::size_t n = A.rows();
  Scalar det = A.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && R(p, c).is_zero()) ++p;
    if (p == n) return A.field().zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(R(p, j), R(c, j));
      det = -det;
    }
    det *= R(c, c);
    const Scalar inv = R(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (R(i, c).is_zero()) continue;
      const Scalar factor = R(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) R(i, j) -= factor * R(c, j);
    }
  }
  return det;
}

Mat row_space(const Mat& A) {
  auto [R, piv] = rref_only(A);
  return R.block(0, piv.size(), 0, A.cols());
}

Vec Echelon::reduce(Vec v) const {
  if (v.size() != n_) fail(Errc::DimensionMismatch, "echelon vector length");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = v[piv_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
  }
  return v;
}

bool Echelon::insert(const Vec& v) {
  Vec r = reduce(v);
  std::size_t p = 0;
  while (p < n_ && r[p].is_zero()) ++p;
  if (p == n_) return false;
  const Scalar inv = r[p].inv();
  for (auto& x : r) x *= inv;
  rows_.push_back(std::move(r));
  piv_.push_back(p);
  return true;
}

Mat eval_poly(const Poly& p, const Mat& A) {
  if (!A.is_square()) fail(Errc::DimensionMismatch, "polynomial of a non-square matrix");
  Mat acc(A.field(), A.rows(), A.cols());
  const Mat I = Mat::identity(A.field(), A.rows());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * A + I * p.coeffs()[i];
  return acc;
}

namespace {

// Minimal polynomial of v relative to A (monic generator of {q : v q(A) = 0}).
Poly local_min_poly(const Vec& v, const Mat& A) {
  const Field& f = A.field();
  const std::size_t n = A.rows();
  // stored rows carry their expression in terms of v, vA, vA^2, ...
  std::vector<Vec> rows, combos;
  std::vector<std::size_t> piv;
  Vec w = v;
  for (std::size_t k = 0; k <= n; ++k) {
    Vec r = w;
    Vec combo = zero_vec(f, n + 1);
    combo[k] = f.one();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Scalar c = r[piv[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) r[j] -= c * rows[i][j];
      for (std::size_t j = 0; j <= n; ++j) combo[j] -= c * combos[i][j];
    }
    std::size_t p = 0;
    while (p < n && r[p].is_zero()) ++p;
    if (p == n) {
      // combo expresses a vanishing combination with leading term x^k
      combo.resize(k + 1);
      return Poly(f, combo);
    }
    const Scalar inv = r[p].inv();
    for (auto& x : r) x *= inv;
    for (auto& x : combo) x *= inv;
    rows.push_back(std::move(r));
    combos.push_back(std::move(combo));
    piv.push_back(p);
    w = vec_mat(w, A);
  }
  fail(Errc::DimensionMismatch, "Krylov sequence did not terminate");
}

}  // namespace

Poly min_poly(const Mat& A) {
  if (!A.is_square()) fail(Errc::DimensionMismatch, "minimal polynomial of a non-square matrix");
  const Field& f = A.field();
  const std::size_t n = A.rows();
  Poly result = Poly::constant(f.one());
  Echelon span(f, n);
  for (std::size_t i = 0; i < n && span.dim() < n; ++i) {
    Vec e = unit_vec(f, n, i);
    if (span.contains(e)) continue;
    Poly q = local_min_poly(e, A);
    // lcm(result, q)
    Poly g = poly_gcd(result, q);
    result = (result * (q / g)).monic();
    Vec w = e;
    for (int k = 0; k < q.degree(); ++k) {
      span.insert(w);
      w = vec_mat(w, A);
    }
  }
  return result.monic();
}

}  // namespace frobenia
