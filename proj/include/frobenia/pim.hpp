#pragma once

#include <gmpxx.h>

#include <vector>

#include "frobenia/algebra.hpp"
#include "frobenia/module.hpp"
#include "frobenia/poly.hpp"

namespace frobenia {

/// f = sum_{s=0}^a C(2a, s) X^(2a-s) (1-X)^s with integer coefficients
/// (low degree first).
struct LiftPolynomial {
  unsigned a = 1;
  std::vector<mpz_class> coeffs;

  Poly over(const Field& f) const;
};

/// Verifies f^2 - f = 0 mod X^a (1-X)^a and f = X mod X(1-X) over Q.
LiftPolynomial lift_polynomial(unsigned a);

/// p(x) for an algebra element x (Horner with the algebra product).
Vec eval_in_algebra(const Algebra& A, const Poly& p, const Vec& x);

/// One preimage in A per catalog simple: acts as the elementary projection
/// E_11 on its own simple and as zero on all others.
std::vector<Vec> semisimple_idempotents(const Algebra& A, const SimpleCatalog& cat);

/// e = f(x) for an idempotent-mod-radical x, f = lift_polynomial(a). Throws
/// VerificationFailed if e^2 != e.
Vec lift_idempotent(const Algebra& A, const Vec& x, unsigned a);

struct Pim {
  std::size_t simple = 0;  // catalog index of the head
  Vec idempotent;
  Mat embedding;  // RREF basis of eA in algebra coordinates
  RightModule module;
};

/// One PIM eA per catalog simple, checked by head multiplicities and
/// sum_S dim S * dim P_S = dim A.
std::vector<Pim> extract_pims(const AlgebraAnalysis& an);

/// A PIM in a basis adapted to socle and radical (rows of basis_change, in
/// the coordinates of `pim.module`) with the head twinned to the socle
/// through the Nakayama automorphism.
struct AdaptedPim {
  Pim pim;
  std::size_t n = 0, d = 0, m = 0;
  Mat basis_change;
  RightModule adapted;     // action in the adapted basis
  std::vector<Mat> dual;   // adapted action of each dual basis element
  Scalar c;                // c(1,1,1,1+m) after scaling
  std::size_t socle_simple = 0;  // catalog index of soc(P)
  bool socle_iso_head = true;

  const Mat& action(std::size_t w) const { return adapted.action(w); }
};

/// Socle basis, extended to rad(P), extended to P; head rows replaced through
/// the intertwiner with the socle; head scaled so that c = 1 when m > 0.
AdaptedPim adapt_basis(const FrobeniusData& fd, const AlgebraAnalysis& an, const Pim& P);

/// Multiplies the head vectors by lambda (no renormalisation).
AdaptedPim rescale_head(const FrobeniusData& fd, const AdaptedPim& P, const Scalar& lambda);

/// Checks soc/rad spans and b_i^*(b_j h) = b_{m+i}^*(b_{m+j} alpha(h)) for all
/// basis elements; throws VerificationFailed with the first failure.
void verify_adapted(const FrobeniusData& fd, const AlgebraAnalysis& an, const AdaptedPim& P);

}  // namespace frobenia
