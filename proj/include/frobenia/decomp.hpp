#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobenia/fsavg.hpp"
#include "frobenia/module.hpp"
#include "frobenia/prime.hpp"

namespace frobenia {

/// Structure constants, unit and tau reduced at p. Throws NotIntegralAtPrime
/// listing the offending constants.
AlgebraPtr reduce_algebra(const Algebra& A, const PrimeSpec& p);

/// A p-integral lattice in V spanned over the local ring by the orbit of
/// standard vector `seed_index` (all standard vectors when V is not cyclic
/// from it), with its action over K and the reduction.
struct LatticeReduction {
  Mat basis;             // lattice basis in V coordinates
  std::vector<Mat> lattice_action;  // over K, p-integral
  RightModule reduced;   // over the residue field
};

LatticeReduction reduce_module(const RightModule& V, const AlgebraPtr& reduced_algebra, const PrimeSpec& p, std::size_t seed_index = 0);

struct DecompositionMatrix {
  std::vector<std::string> rows, cols;
  std::vector<std::vector<unsigned>> entries;
  PrimeSpec prime;
  std::string residue_field;
};

struct Decomposition {
  AlgebraAnalysis source;
  AlgebraAnalysis residue;
  DecompositionMatrix matrix;
  std::vector<LatticeReduction> lattices;  // one per source simple
};

/// Entry (V, S) = multiplicity of S in the reduction of V, both catalogs in
/// canonical order.
Decomposition decompose(const AlgebraAnalysis& source, const PrimeSpec& p, std::size_t seed_index = 0, std::uint64_t seed = 1);

struct ReciprocityResult {
  std::vector<std::vector<unsigned>> e_matrix;  // rows: residue PIMs, cols: source PIMs
  bool holds = false;
  unsigned newton_steps = 0;
};

/// Lifts every residue primitive idempotent to the local ring by iterating
/// the lifting polynomial p-adically on the lattice representations and reads
/// the multiplicity of each source PIM in eKH from the rank (trace) of the
/// lifted idempotent on each simple. Compares with the transpose of d.
ReciprocityResult reciprocity_check(const Decomposition& D, std::uint64_t seed = 1);

struct PimCriteria {
  std::size_t simple = 0;
  std::string label;
  std::vector<std::uint64_t> excluded_I, excluded_J;
  bool c_folded = false;  // m = 0: c stays and its inverse enters the denominators
};

struct CriteriaReport {
  std::vector<PimCriteria> pims;
  std::vector<std::size_t> generators;
};

/// Rational primes dividing denominators of a_w = b_i^*(b_{i+m} B_w) / c (I) and
/// of all generator matrix entries plus c^-1 (J); denominators of the dual basis
/// coordinates are included in both.
CriteriaReport trivial_column_criteria(const FrobeniusData& fd, const std::vector<AdaptedPim>& pims, const SimpleCatalog& cat,
                                       std::optional<std::vector<std::size_t>> generators = std::nullopt);

/// Result of cross-checking a PIM's column at one prime.
struct ColumnCheck {
  std::size_t pim = 0;
  PrimeSpec prime;
  bool excluded_I = false, excluded_J = false;
  std::optional<std::size_t> column;  // residue simple hit by the reduced idempotent
  bool trivial = false;               // column is a unit vector at the PIM's row
  std::string note;
};

/// For each PIM, reduces its idempotent e_1 at p (when integral) and checks the
/// column of the head of the reduced projective in the decomposition matrix.
std::vector<ColumnCheck> check_columns(const FrobeniusData& fd, const std::vector<AdaptedPim>& pims, const Decomposition& D,
                                       const CriteriaReport& crit);

struct JamesResult {
  Decomposition decomposition;
  bool is_permutation = false;
  std::vector<std::size_t> permutation;  // row -> column
  bool coprime = false;
  std::size_t group_order = 0;
};

JamesResult james_check(const std::string& coxeter_type, unsigned e, std::uint64_t ell, const std::vector<std::uint64_t>& factor,
                        std::uint64_t seed = 1);

/// Aligned plain-text table.
std::string render_table(const DecompositionMatrix& d);

}  // namespace frobenia
