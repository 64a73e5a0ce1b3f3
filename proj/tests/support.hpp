#pragma once

#include <string>
#include <vector>

#include "frobenia/decomp.hpp"
#include "frobenia/examples.hpp"

namespace support {

using namespace frobenia;

// Everything downstream of one example algebra.
struct Pipeline {
  AlgebraPtr A;
  FrobeniusData fd;
  AlgebraAnalysis an;
  std::vector<Pim> pims;
  std::vector<AdaptedPim> adapted;
};

inline Pipeline pipeline(const AlgebraPtr& A) {
  Pipeline p{A, frobenius_data(A), analyze(A, 1), {}, {}};
  p.pims = extract_pims(p.an);
  for (const auto& P : p.pims) p.adapted.push_back(adapt_basis(p.fd, p.an, P));
  return p;
}

inline Pipeline pipeline(const std::string& name) { return pipeline(example_algebra(name)); }

inline std::size_t label_index(const SimpleCatalog& cat, const std::string& label) {
  for (std::size_t i = 0; i < cat.size(); ++i)
    if (cat.labels[i] == label) return i;
  throw std::out_of_range(label);
}

inline std::size_t basis_index(const Algebra& A, const std::string& label) {
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (A.labels()[i] == label) return i;
  throw std::out_of_range(label);
}

// Coefficient vector from (label, scalar) pairs.
inline Vec element(const Algebra& A, const std::vector<std::pair<std::string, Scalar>>& terms) {
  Vec v = zero_vec(A.field(), A.dim());
  for (const auto& [l, c] : terms) v[basis_index(A, l)] += c;
  return v;
}

inline Scalar q(const Field& f, long a, long b = 1) {
  mpq_class r{mpz_class(a), mpz_class(b)};
  r.canonicalize();
  return f.from_rational(r);
}

}  // namespace support
