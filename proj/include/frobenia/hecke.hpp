#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobenia/algebra.hpp"
#include "frobenia/prime.hpp"

namespace frobenia {

using CoxeterMatrix = std::vector<std::vector<int>>;

/// Finite Coxeter group with elements in ShortLex normal form. Generators are
/// 0-based internally and printed 1-based ("s1s2").
struct CoxeterGroup {
  std::string type;
  CoxeterMatrix matrix;
  std::vector<std::vector<int>> words;  // index 0 is the identity
  std::vector<unsigned> lengths;
  std::vector<std::vector<std::size_t>> rmul;  // rmul[w][s] = ws

  std::size_t rank() const { return matrix.size(); }
  std::size_t order() const { return words.size(); }
  std::size_t element(const std::vector<int>& word) const;
  std::size_t inverse(std::size_t w) const;
  std::string label(std::size_t w) const;
};

/// Checks the matrix (symmetric, diagonal 1, off-diagonal >= 2), enumerates
/// the group by coset enumeration over the trivial subgroup and orders the
/// elements by ShortLex. GroupTooLarge beyond `cap` elements.
CoxeterGroup build_coxeter(const CoxeterMatrix& m, const std::string& type = "custom", std::size_t cap = 10000);

/// A1..A6, B2..B4, D4, D5, H3, H4, I2:m.
CoxeterMatrix coxeter_matrix(const std::string& type);
CoxeterGroup coxeter_group(const std::string& type);
std::optional<std::size_t> known_order(const std::string& type);

/// Field and parameter v. Syntax: root:e (v = zeta_e over Q(zeta_e)),
/// fp:p,q (v = q in F_p), fq:p,m0;m1;...,q0;q1;... (v in F_p[x]/(m)), one (v = 1 over Q).
struct HeckeParam {
  Field field;
  Scalar v;
  std::string text;
};

HeckeParam parse_hecke_param(const std::string& text);

struct HeckeAlgebra {
  CoxeterGroup group;
  Scalar v;
  AlgebraPtr algebra;
};

/// Structure constants from T_w T_s = T_ws (L(ws) > L(w)) or
/// T_ws + (v - v^-1) T_w, tau = (1, 0, ..., 0). Verifies symmetry and
/// T_w^vee = T_{w^-1}. GroupTooLarge above 1152 elements.
HeckeAlgebra build_hecke(const CoxeterGroup& G, const Scalar& v, const std::string& name = "");

/// Reduction at p, cross-checked against building directly over the residue
/// field with v replaced by its image.
HeckeAlgebra specialize(const HeckeAlgebra& H, const PrimeSpec& p);

}  // namespace frobenia
