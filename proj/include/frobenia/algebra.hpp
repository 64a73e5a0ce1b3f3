#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frobenia/field.hpp"
#include "frobenia/matrix.hpp"

namespace frobenia {

/// B_i * B_j contributes coeff * B_k.
struct StructureEntry {
  std::size_t i, j, k;
  Scalar coeff;
};

/// Finite-dimensional associative algebra given by structure constants on a
/// basis (B_w), together with the linear form tau.
class Algebra {
 public:
  /// Validates shapes, associativity (exhaustive up to dim 64, 4096 seeded
  /// triples beyond) and the unit. Throws InvalidInput on failure.
  Algebra(std::string name, Field f, std::vector<std::string> labels, std::vector<StructureEntry> structure, Vec unit, Vec tau);

  const std::string& name() const { return name_; }
  const Field& field() const { return f_; }
  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }
  const Vec& tau() const { return tau_; }
  /// Sparse structure constants in canonical (i, j, k) order.
  std::vector<StructureEntry> structure() const;

  Vec basis_vec(std::size_t i) const { return unit_vec(f_, n_, i); }
  /// B_i * B_j as a coefficient vector (sparse pairs).
  const std::vector<std::pair<std::size_t, Scalar>>& product(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  Vec mul(const Vec& x, const Vec& y) const;
  Scalar eval_tau(const Vec& x) const;

  /// Matrix of x -> x*y on the basis (rows: B_i * y).
  Mat right_mult(const Vec& y) const;
  /// Matrix of y -> x*y.
  Mat left_mult(const Vec& x) const;
  /// Right multiplication by B_j: the regular representation.
  const Mat& regular_action(std::size_t j) const { return regular_[j]; }

  /// Greedy generating set: basis indices in order, skipping those already in
  /// the generated subalgebra.
  const std::vector<std::size_t>& generators() const { return generators_; }

  /// Algebra with basis B'_i = sum_a P[i][a] B_a (P invertible), tau and
  /// structure constants transported.
  Algebra change_basis(const Mat& P, const std::string& new_name = "") const;

 private:
  void check_associativity() const;
  void compute_generators();

  std::string name_;
  Field f_;
  std::size_t n_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
  Vec unit_, tau_;
  std::vector<Mat> regular_;
  std::vector<std::size_t> generators_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct FrobeniusCheck {
  bool is_frobenius = false;
  bool is_symmetric = false;
  std::size_t gram_rank = 0;
};

/// gram[y][w] = tau(B_y B_w).
Mat gram_matrix(const Algebra& A);
FrobeniusCheck check_frobenius(const Algebra& A);

struct DualBasis {
  Mat gram;
  Mat dual;  // row w holds B_w^vee in the basis (B_w)
  Vec vector(std::size_t w) const { return dual.row(w); }
};

/// Throws NotFrobenius when the Gram matrix is singular.
DualBasis dual_basis(const Algebra& A);

struct Nakayama {
  Mat alpha;  // row j holds alpha(B_j)
  Vec apply(const Vec& x) const { return vec_mat(x, alpha); }
};

/// Solves tau(B_u B_j) = sum_k alpha_jk tau(B_k B_u) and verifies that alpha
/// is an invertible algebra homomorphism.
Nakayama nakayama(const Algebra& A);

/// Everything downstream code needs about the Frobenius structure.
struct FrobeniusData {
  AlgebraPtr algebra;
  DualBasis dual;
  Nakayama alpha;
};

FrobeniusData frobenius_data(AlgebraPtr A);

}  // namespace frobenia
