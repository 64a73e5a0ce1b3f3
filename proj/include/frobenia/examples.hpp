#pragma once

#include <string>
#include <vector>

#include "frobenia/algebra.hpp"

namespace frobenia {

/// Bundled example algebras: qc2, f2c2, qs3, nakayama2, hecke-a1-i,
/// hecke-a2-zeta3 (file stems, in this order).
const std::vector<std::string>& example_names();

/// Throws InvalidInput for an unknown name.
AlgebraPtr example_algebra(const std::string& name);

}  // namespace frobenia
