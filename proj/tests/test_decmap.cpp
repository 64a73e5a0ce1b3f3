#include <gtest/gtest.h>

#include "frobenia/hecke.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace frobenia;
using support::pipeline;

namespace {

using Entries = std::vector<std::vector<unsigned>>;

void expect_same_algebra(const Algebra& A, const Algebra& B) {
  ASSERT_EQ(A.field(), B.field());
  ASSERT_EQ(A.dim(), B.dim());
  EXPECT_EQ(A.unit(), B.unit());
  EXPECT_EQ(A.tau(), B.tau());
  for (std::size_t w = 0; w < A.dim(); ++w) EXPECT_EQ(A.regular_action(w), B.regular_action(w)) << w;
}

RightModule one_dim(const AlgebraPtr& A, const std::vector<long>& values) {
  std::vector<Mat> act;
  for (long v : values) act.push_back(Mat::from_ints(A->field(), {{v}}));
  return RightModule(A, act);
}

Decomposition decompose_at(const std::string& name, std::uint64_t ell, std::vector<std::uint64_t> factor = {}, std::size_t seed_index = 0) {
  auto A = example_algebra(name);
  return decompose(analyze(A, 1), make_prime_spec(A->field(), ell, std::move(factor)), seed_index);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= n; ++k) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= k; ++d)
      if (k % d == 0) prime = false;
    if (prime) out.push_back(k);
  }
  return out;
}

}  // namespace

TEST(Decmap, ReduceQC2AtTwoIsF2C2) {
  auto Q2 = example_algebra("qc2");
  auto R = reduce_algebra(*Q2, make_prime_spec(Q2->field(), 2));
  expect_same_algebra(*R, *example_algebra("f2c2"));
}

TEST(Decmap, ReduceRejectsNonIntegralConstants) {
  const Field Q = Field::rationals();
  const Scalar h = support::q(Q, 1, 2);
  // Basis 1, g/2 of QC2: (g/2)^2 = 1/4.
  std::vector<StructureEntry> st{{0, 0, 0, Q.one()}, {0, 1, 1, Q.one()}, {1, 0, 1, Q.one()}, {1, 1, 0, h * h}};
  const Algebra A("half", Q, {"1", "h"}, st, Vec{Q.one(), Q.zero()}, Vec{Q.one(), Q.zero()});
  try {
    reduce_algebra(A, make_prime_spec(Q, 2));
    FAIL() << "expected NotIntegralAtPrime";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotIntegralAtPrime);
  }
  EXPECT_NO_THROW(reduce_algebra(A, make_prime_spec(Q, 3)));
}

TEST(Decmap, ReduceHeckeA2MatchesDirectConstruction) {
  auto A = example_algebra("hecke-a2-zeta3");
  // zeta_3 -> 2 in F_7 since 2^2 + 2 + 1 = 7.
  auto R = reduce_algebra(*A, make_prime_spec(A->field(), 7, {5, 1}));
  const Field F7 = Field::prime(7);
  const HeckeAlgebra H = build_hecke(coxeter_group("A2"), F7.from_int(2));
  expect_same_algebra(*R, *H.algebra);
}

TEST(Decmap, ReduceOneDimensionalModules) {
  auto Q2 = example_algebra("qc2");
  const PrimeSpec p = make_prime_spec(Q2->field(), 2);
  auto R = reduce_algebra(*Q2, p);
  const RightModule triv = one_dim(R, {1, 1});
  for (const auto& V : {one_dim(Q2, {1, 1}), one_dim(Q2, {1, -1})}) {
    const auto L = reduce_module(V, R, p);
    EXPECT_TRUE(iso_test(L.reduced, triv));
  }
}

TEST(Decmap, ReduceStandardModuleOfS3AtThree) {
  auto pA = pipeline("qs3");
  const PrimeSpec p = make_prime_spec(pA.A->field(), 3);
  auto R = reduce_algebra(*pA.A, p);
  const RightModule& std2 = pA.an.catalog.simples[support::label_index(pA.an.catalog, "2a")];
  const auto L = reduce_module(std2, R, p);
  // Lattice action is basis * rho * basis^-1 and is integral.
  const Mat Binv = inverse(L.basis);
  for (std::size_t w = 0; w < pA.A->dim(); ++w) {
    EXPECT_EQ(L.lattice_action[w], L.basis * std2.action(w) * Binv);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) EXPECT_GE(valuation(L.lattice_action[w](i, j), p), 0);
  }
  // Composition factors by exhaustive search for stable lines over F_3.
  std::vector<Mat> gens;
  for (std::size_t w = 0; w < R->dim(); ++w) gens.push_back(L.reduced.action(w));
  auto factors = oracle::brute_force_linear_factors(gens);
  ASSERT_EQ(factors.size(), 2u);
  std::vector<std::vector<long>> seen;
  const Field F3 = R->field();
  for (const auto& f : factors) {
    std::vector<long> ev;
    for (const auto& x : f) ev.push_back(x == F3.one() ? 1 : x == -F3.one() ? -1 : 0);
    seen.push_back(ev);
  }
  std::sort(seen.begin(), seen.end());
  std::vector<std::vector<long>> expected;
  for (int which = 0; which < 2; ++which) {
    std::vector<long> chi;
    for (const auto& w : R->labels()) chi.push_back(oracle::s3_characters(w == "1" ? "" : w)[which]);
    expected.push_back(chi);
  }
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(seen, expected);
}

TEST(Decmap, DecompositionMatrices) {
  EXPECT_EQ(decompose_at("qc2", 2).matrix.entries, (Entries{{1}, {1}}));
  EXPECT_EQ(decompose_at("qc2", 3).matrix.entries, (Entries{{1, 0}, {0, 1}}));
  EXPECT_EQ(decompose_at("qs3", 2).matrix.entries, (Entries{{1, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(decompose_at("qs3", 3).matrix.entries, (Entries{{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(decompose_at("qs3", 5).matrix.entries, (Entries{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(decompose_at("qs3", 7).matrix.entries, (Entries{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(decompose_at("nakayama2", 2).matrix.entries, (Entries{{1, 0}, {0, 1}}));
  EXPECT_EQ(decompose_at("hecke-a2-zeta3", 7, {5, 1}).matrix.entries, (Entries{{1, 0}, {0, 1}}));
  EXPECT_EQ(decompose_at("hecke-a2-zeta3", 3).matrix.entries, (Entries{{0, 1}, {1, 0}}));
}

TEST(Decmap, DecompositionPreservesDimension) {
  const std::vector<std::pair<std::string, std::uint64_t>> cases{{"qc2", 2}, {"qs3", 2}, {"qs3", 3}, {"nakayama2", 3}, {"hecke-a2-zeta3", 7}};
  for (const auto& [name, ell] : cases) {
    const Decomposition D = decompose_at(name, ell);
    for (std::size_t i = 0; i < D.source.catalog.size(); ++i) {
      std::size_t total = 0;
      for (std::size_t j = 0; j < D.residue.catalog.size(); ++j) total += D.matrix.entries[i][j] * D.residue.catalog.simples[j].dim();
      EXPECT_EQ(total, D.source.catalog.simples[i].dim()) << name;
    }
  }
}

TEST(Decmap, LatticeChoiceDoesNotChangeMatrix) {
  for (const auto& [name, ell] : std::vector<std::pair<std::string, std::uint64_t>>{{"qs3", 2}, {"qs3", 3}, {"hecke-a2-zeta3", 3}})
    EXPECT_EQ(decompose_at(name, ell, {}, 0).matrix.entries, decompose_at(name, ell, {}, 1).matrix.entries) << name;
}

TEST(Decmap, ReciprocityHolds) {
  const std::vector<std::tuple<std::string, std::uint64_t, std::vector<std::uint64_t>>> cases{
      {"qc2", 2, {}}, {"qc2", 3, {}}, {"qs3", 2, {}}, {"qs3", 3, {}}, {"qs3", 5, {}}, {"nakayama2", 2, {}}, {"hecke-a2-zeta3", 7, {5, 1}}, {"hecke-a2-zeta3", 3, {}}};
  for (const auto& [name, ell, factor] : cases) {
    const Decomposition D = decompose_at(name, ell, factor);
    const ReciprocityResult r = reciprocity_check(D);
    EXPECT_TRUE(r.holds) << name << " at " << ell;
    ASSERT_EQ(r.e_matrix.size(), D.residue.catalog.size());
    for (std::size_t k = 0; k < r.e_matrix.size(); ++k)
      for (std::size_t i = 0; i < D.source.catalog.size(); ++i) EXPECT_EQ(r.e_matrix[k][i], D.matrix.entries[i][k]) << name;
  }
}

TEST(Decmap, ReciprocityQS3AtThreeGivesCartanMatrix) {
  const Decomposition D = decompose_at("qs3", 3);
  const ReciprocityResult r = reciprocity_check(D);
  // d^T d for d = [[1,0],[0,1],[1,1]].
  Entries cartan(2, std::vector<unsigned>(2, 0));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t i = 0; i < 3; ++i) cartan[a][b] += r.e_matrix[a][i] * D.matrix.entries[i][b];
  EXPECT_EQ(cartan, (Entries{{2, 1}, {1, 2}}));
}

TEST(Decmap, ExcludedPrimeSets) {
  auto q2 = pipeline("qc2");
  const auto c2 = trivial_column_criteria(q2.fd, q2.adapted, q2.an.catalog);
  for (const auto& P : c2.pims) {
    EXPECT_EQ(P.excluded_I, (std::vector<std::uint64_t>{2}));
    EXPECT_EQ(P.excluded_J, (std::vector<std::uint64_t>{2}));
    EXPECT_TRUE(P.c_folded);
  }

  auto s3 = pipeline("qs3");
  const auto c3 = trivial_column_criteria(s3.fd, s3.adapted, s3.an.catalog);
  EXPECT_EQ(c3.pims[0].excluded_I, (std::vector<std::uint64_t>{2, 3}));
  EXPECT_EQ(c3.pims[1].excluded_I, (std::vector<std::uint64_t>{2, 3}));
  EXPECT_EQ(c3.pims[2].excluded_I, (std::vector<std::uint64_t>{3}));

  for (const char* name : {"nakayama2", "hecke-a2-zeta3"}) {
    auto p = pipeline(name);
    for (const auto& P : trivial_column_criteria(p.fd, p.adapted, p.an.catalog).pims) {
      EXPECT_TRUE(P.excluded_I.empty()) << name;
      EXPECT_TRUE(P.excluded_J.empty()) << name;
      EXPECT_FALSE(P.c_folded) << name;
    }
  }
}

TEST(Decmap, CriteriaAreSoundUpToThirteen) {
  for (const char* name : {"qc2", "qs3", "nakayama2", "hecke-a1-i", "hecke-a2-zeta3"}) {
    auto p = pipeline(name);
    const auto crit = trivial_column_criteria(p.fd, p.adapted, p.an.catalog);
    for (auto ell : primes_up_to(13)) {
      std::vector<PrimeSpec> ps;
      try {
        ps = primes_above(p.A->field(), ell);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnsupportedPrime);
        continue;
      }
      for (const auto& pr : ps) {
        const Decomposition D = decompose(p.an, pr);
        for (const auto& cc : check_columns(p.fd, p.adapted, D, crit)) {
          if (!cc.excluded_I) EXPECT_TRUE(cc.trivial) << name << " at " << pr.describe();
          if (!cc.excluded_J) EXPECT_TRUE(cc.trivial) << name << " at " << pr.describe();
        }
      }
    }
  }
}

TEST(Decmap, NonTrivialColumnIsExcluded) {
  auto p = pipeline("qs3");
  const auto crit = trivial_column_criteria(p.fd, p.adapted, p.an.catalog);
  const Decomposition D = decompose(p.an, make_prime_spec(p.A->field(), 3));
  for (const auto& cc : check_columns(p.fd, p.adapted, D, crit)) {
    EXPECT_TRUE(cc.excluded_I);
    // At 3 no source PIM column is a unit vector.
    EXPECT_FALSE(cc.trivial);
  }
}

TEST(Decmap, JamesCheck) {
  const JamesResult ok = james_check("A2", 3, 7, {5, 1});
  EXPECT_TRUE(ok.coprime);
  EXPECT_TRUE(ok.is_permutation);
  EXPECT_EQ(ok.permutation, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(ok.group_order, 6u);

  const JamesResult a1 = james_check("A1", 2, 2, {});
  EXPECT_FALSE(a1.coprime);
  const JamesResult a2 = james_check("A2", 3, 3, {});
  EXPECT_FALSE(a2.coprime);
}

TEST(Decmap, JamesRejectsUnsupportedPrime) {
  try {
    james_check("A1", 6, 2, {});
    FAIL() << "expected UnsupportedPrime";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnsupportedPrime);
  }
}

TEST(Decmap, RenderTable) {
  const std::string t = render_table(decompose_at("qs3", 3).matrix);
  EXPECT_NE(t.find("1a"), std::string::npos);
  EXPECT_NE(t.find("2a"), std::string::npos);
}
