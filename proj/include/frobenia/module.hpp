#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobenia/algebra.hpp"
#include "frobenia/matrix.hpp"

namespace frobenia {

/// Right module over an Algebra: one action matrix per basis element B_w,
/// acting on row vectors from the right.
class RightModule {
 public:
  RightModule() = default;
  /// Validates the action against the structure constants (exhaustively when
  /// small, on 256 seeded pairs otherwise) and the unit.
  RightModule(AlgebraPtr A, std::vector<Mat> action, bool validate = true);

  const Algebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const Field& field() const { return alg_->field(); }
  std::size_t dim() const { return dim_; }
  const Mat& action(std::size_t w) const { return act_[w]; }
  const std::vector<Mat>& actions() const { return act_; }
  /// rho(x) for an algebra element x given by coefficients.
  Mat act(const Vec& x) const;

  void validate() const;

 private:
  AlgebraPtr alg_;
  std::size_t dim_ = 0;
  std::vector<Mat> act_;
};

RightModule regular_module(const AlgebraPtr& A);

/// Basis of Hom_A(M, N): matrices F (dim M x dim N) with F rho_N(B) = rho_M(B) F.
std::vector<Mat> hom_space(const RightModule& M, const RightModule& N);

/// Smallest submodule containing the seeds, as an RREF basis.
Mat spin(const RightModule& M, const std::vector<Vec>& seeds);
/// Spin under the transposed action (a submodule of the dual).
Mat spin_transposed(const RightModule& M, const std::vector<Vec>& seeds);

/// Submodule on the rows of an RREF basis U (throws InvalidInput when U is
/// not action-stable).
RightModule submodule(const RightModule& M, const Mat& U);
/// M / U with the complement spanned by standard vectors at the non-pivot
/// columns of U.
RightModule quotient(const RightModule& M, const Mat& U);

/// A proper nonzero submodule, or an empty matrix when M is certified simple.
/// Throws SplittingFailure when the schedule is exhausted.
Mat find_submodule(const RightModule& M, std::uint64_t seed);
bool is_simple(const RightModule& M, std::uint64_t seed = 1);

bool iso_test(const RightModule& M, const RightModule& N);

struct CompositionFactor {
  RightModule module;
  unsigned multiplicity = 0;
};

/// Composition factors up to isomorphism with multiplicities, in order of first appearance.
std::vector<CompositionFactor> chop(const RightModule& M, std::uint64_t seed = 1);

/// Pairwise non-isomorphic simples in canonical order: dimension ascending,
/// then trace vector (tr rho(B_w))_w lexicographically descending.
struct SimpleCatalog {
  std::vector<RightModule> simples;
  std::vector<std::string> labels;  // "1a", "1b", "2a", ...
  std::vector<Vec> trace_vectors;

  std::size_t size() const { return simples.size(); }
  /// Index of the catalog simple isomorphic to S; throws VerificationFailed if none.
  std::size_t find(const RightModule& S) const;
};

/// Catalog from the composition factors of the regular module. Throws
/// NotSplit when some simple has an endomorphism ring of dimension > 1.
SimpleCatalog simple_catalog(const AlgebraPtr& A, std::uint64_t seed = 1);

/// rad(A) as the common kernel of all simple representations (rows: basis).
Mat radical_algebra(const Algebra& A, const SimpleCatalog& cat);
/// M rad(A).
Mat radical_module(const RightModule& M, const Mat& rad);
/// Intersection of kernels of all maps M -> S over the catalog (cross-check).
Mat radical_module_via_homs(const RightModule& M, const SimpleCatalog& cat);
/// {v : v rho(r) = 0 for r in rad(A)}.
Mat socle_module(const RightModule& M, const Mat& rad);
/// Smallest a with rad^a = 0 (1 when rad = 0).
unsigned nilpotency_index(const Algebra& A, const Mat& rad);

/// Catalog, radical and nilpotency index of a split algebra.
struct AlgebraAnalysis {
  AlgebraPtr algebra;
  SimpleCatalog catalog;
  Mat radical;
  unsigned nilpotency = 1;
};

AlgebraAnalysis analyze(const AlgebraPtr& A, std::uint64_t seed = 1);

/// Trace vector (tr rho(B_w))_w of a module.
Vec trace_vector(const RightModule& M);

}  // namespace frobenia
