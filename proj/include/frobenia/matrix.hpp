#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobenia/field.hpp"
#include "frobenia/poly.hpp"

namespace frobenia {

/// Dense row-major matrix over a Field. Module elements are row vectors and
/// matrices act on the right, so v -> v*A everywhere.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols);
  Mat(Field f, std::size_t rows, std::size_t cols, Vec entries);

  static Mat identity(const Field& f, std::size_t n);
  static Mat from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_ints(const Field& f, const std::vector<std::vector<long>>& rows);

  const Field& field() const { return f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool is_square() const { return r_ == c_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }
  const Vec& entries() const { return e_; }

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);
  std::vector<Vec> row_list() const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Scalar& s) const;
  Mat operator-() const;
  Mat& operator+=(const Mat& o) { return *this = *this + o; }
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  /// Rows [r0, r0+nr), columns [c0, c0+nc).
  Mat block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;
  Mat vstack(const Mat& below) const;
  Mat hstack(const Mat& right) const;
  bool is_zero() const;
  bool is_identity() const;
  Scalar trace() const;

  std::string to_string() const;

 private:
  Field f_;
  std::size_t r_ = 0, c_ = 0;
  Vec e_;
};

/// Row vector times matrix.
Vec vec_mat(const Vec& v, const Mat& A);

struct RrefResult {
  Mat R;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  Mat transform;  // R = transform * A
};

/// Reduced row echelon form by Gauss-Jordan; pivot is the first nonzero
/// entry scanning columns left to right, rows top to bottom.
RrefResult rref(const Mat& A);
std::size_t rank(const Mat& A);
/// Rows form a basis of {v : v*A = 0}, canonical (from the RREF of A^T).
Mat kernel(const Mat& A);
/// x with A*x = b, or nullopt. Free variables are set to zero.
std::optional<Mat> solve(const Mat& A, const Mat& b);
/// x with x*A = b, or nullopt.
std::optional<Mat> solve_left(const Mat& A, const Mat& b);
/// Throws Singular unless A is square of full rank.
Mat inverse(const Mat& A);
Scalar determinant(const Mat& A);
/// Nonzero rows of the RREF: a canonical basis of the row space.
Mat row_space(const Mat& A);

Poly min_poly(const Mat& A);
Mat eval_poly(const Poly& p, const Mat& A);

/// Incremental echelon basis of a subspace of K^n.
class Echelon {
 public:
  Echelon(Field f, std::size_t n) : f_(f), n_(n) {}
  /// Reduces v against the stored rows; returns the residual.
  Vec reduce(Vec v) const;
  /// Inserts v if independent; returns true when the dimension grew.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  /// Rows in insertion order (semi-reduced, leading 1 at each pivot).
  const std::vector<Vec>& rows() const { return rows_; }
  Mat as_mat() const { return Mat::from_rows(f_, rows_, n_); }

 private:
  Field f_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
};

}  // namespace frobenia
