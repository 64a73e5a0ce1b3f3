#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobenia/pim.hpp"

namespace frobenia {

/// rho_M(B_w^vee) for every basis index w.
std::vector<Mat> dual_actions(const DualBasis& D, const RightModule& M);

/// I(F) = sum_w rho_M(B_w) F rho_N(B_w^vee).
Mat average(const FrobeniusData& fd, const RightModule& M, const RightModule& N, const Mat& F);

/// psi with I(psi) = id when one exists (M projective), nullopt otherwise.
std::optional<Mat> gaschutz_certificate(const FrobeniusData& fd, const RightModule& M);

/// Scalar by which psi (adapted coordinates) acts on the head. Throws
/// NotEndomorphism when psi does not commute with the action, and
/// VerificationFailed if the uniqueness conditions fail.
Scalar identity_component(const AdaptedPim& P, const Mat& psi);

/// c(i,j,s,t) = sum_w b_s^*(b_i B_w) b_j^*(b_t B_w^vee), 0-based indices.
Scalar c_value(const AdaptedPim& P, std::size_t i, std::size_t j, std::size_t s, std::size_t t);

using Quad = std::array<std::size_t, 4>;  // 0-based (i, j, s, t)

struct CTensor {
  const AdaptedPim* pim = nullptr;
  bool full = false;
  std::uint64_t seed = 0;
  std::vector<Quad> coverage;

  /// Stored value, computed and cached on first use.
  const Scalar& get(const Quad& q) const;
  const Scalar& get(std::size_t i, std::size_t j, std::size_t s, std::size_t t) const { return get(Quad{i, j, s, t}); }
  std::size_t computed() const { return cache_.size(); }

  mutable std::map<Quad, Scalar> cache_;
};

/// Full when n <= 12 (or forced), otherwise a sample: the corner quadruple,
/// up to `sample` seeded quadruples per relation family and 200 random ones.
CTensor c_tensor(const AdaptedPim& P, std::optional<bool> force_full = std::nullopt, std::size_t sample = 200, std::uint64_t seed = 1);

struct RelationResult {
  std::string name;
  bool applicable = true;
  std::size_t checked = 0;
  std::optional<Quad> counterexample;
  bool pass() const { return !counterexample.has_value(); }
};

struct FsReport {
  std::vector<RelationResult> relations;
  Scalar c;
  bool socle_iso_head = true;
  bool full = false;
  std::size_t quadruples = 0;
  bool pass() const;
};

/// Relations (1)-(9), the shifting identity and c(1,1,1,1+m) != 0 on the
/// tensor's coverage. (8) and (9) only apply when soc(P) is not isomorphic
/// to the head.
FsReport verify_fs_relations(const CTensor& T);

struct IdempotentReport {
  std::size_t i = 0;  // 0-based position in the socle
  Vec etilde, e, Etilde, E;
  bool square = false, iso = false, pairwise_rad = false;
  bool E_square = false, E_head = false;
  bool head_projection = false, annihilates_others = false;
  bool ok() const { return square && iso && pairwise_rad && E_square && E_head && head_projection && annihilates_others; }
};

/// etilde_i = c^-1 sum_w b_i^*(b_{i+m} B_w) B_w^vee, e_i = f(etilde_i) and the
/// E variant with B_w and B_w^vee swapped, all checks evaluated. Throws
/// VerificationFailed when any check fails unless `throw_on_failure` is false.
std::vector<IdempotentReport> make_idempotents(const FrobeniusData& fd, const AlgebraAnalysis& an, const AdaptedPim& P,
                                               bool throw_on_failure = true);

/// Coefficients a_w = b_i^*(b_{i+m} B_w) / c (the etilde coefficients on the dual basis).
Vec etilde_coefficients(const AdaptedPim& P, std::size_t i);

}  // namespace frobenia
