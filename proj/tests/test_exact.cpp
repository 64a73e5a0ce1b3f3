#include <gtest/gtest.h>

#include <random>

#include "frobenia/numtheory.hpp"
#include "frobenia/poly.hpp"
#include "frobenia/prime.hpp"
#include "oracles.hpp"

using namespace frobenia;

namespace {

Scalar random_cyclotomic(const Field& K, std::mt19937_64& rng, long ell) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<mpq_class> c;
  for (unsigned i = 0; i < K.degree(); ++i) {
    long den = 1;
    switch (pick(rng)) {
      case 0: den = ell; break;
      case 1: den = 2 * ell + 1; break;
      default: den = 1;
    }
    mpq_class q(num(rng), den);
    q.canonicalize();
    c.push_back(q);
  }
  return K.from_rationals(c);
}

}  // namespace

TEST(Exact, RationalArithmetic) {
  Field Q = Field::rationals();
  EXPECT_EQ(Q.parse("1/2") + Q.parse("1/3"), Q.parse("5/6"));
  EXPECT_EQ((Q.parse("1/2") + Q.parse("1/3")).to_string(), "5/6");
  EXPECT_EQ(Q.parse("4/6").to_string(), "2/3");
  EXPECT_THROW(Q.zero().inv(), Error);
}

TEST(Exact, PrimeFieldInverse) {
  Field F5 = Field::prime(5);
  EXPECT_EQ(F5.from_int(2).inv(), F5.from_int(3));
  EXPECT_EQ(F5.from_int(-1).to_string(), "4");
  EXPECT_THROW(Field::prime(6), Error);
}

TEST(Exact, CyclotomicReduction) {
  Field K = Field::cyclotomic(3);
  Scalar z = K.generator();
  EXPECT_EQ(z * z, K.parse("[-1,-1]"));
  EXPECT_EQ((z * z).to_string(), "[\"-1\",\"-1\"]");
  EXPECT_EQ(z.pow(3), K.one());
  EXPECT_EQ(z * z.inv(), K.one());
}

TEST(Exact, FieldMismatchThrows) {
  try {
    (void)(Field::prime(5).one() + Field::prime(7).one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FieldMismatch);
  }
}

TEST(Exact, ExtensionField) {
  Field F4 = Field::extension(2, {1, 1, 1});
  Scalar a = F4.generator();
  EXPECT_EQ(a * a, a + F4.one());
  EXPECT_EQ(a.pow(3), F4.one());
  EXPECT_EQ(a.inv(), a + F4.one());
  EXPECT_EQ(F4.order(), 4);
  EXPECT_THROW(Field::extension(2, {1, 0, 1}), Error);  // (x+1)^2
  Field F9 = Field::extension(3, {1, 0, 1});
  EXPECT_EQ(F9.generator().pow(4), F9.from_int(1));
  EXPECT_EQ(F9.parse(F9.generator().to_string()), F9.generator());
}

TEST(Exact, CanonicalTextRoundTrip) {
  Field K = Field::cyclotomic(5);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    Scalar x = random_cyclotomic(K, rng, 5);
    EXPECT_EQ(K.parse(x.to_string()), x);
    EXPECT_EQ(K.parse(x.to_string()).to_string(), x.to_string());
  }
}

TEST(Exact, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<mpz_class>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<mpz_class>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<mpz_class>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<mpz_class>{1, 0, -1, 0, 1}));
  EXPECT_THROW(Field::cyclotomic(3, {mpq_class(1), mpq_class(1)}), Error);
}

TEST(Exact, RationalValuation) {
  Field Q = Field::rationals();
  PrimeSpec two = make_prime_spec(Q, 2);
  EXPECT_EQ(valuation(Q.parse("5/6"), two), -1);
  EXPECT_EQ(valuation(Q.zero(), make_prime_spec(Q, 7)), kInfiniteValuation);
  EXPECT_EQ(valuation(Q.parse("24"), two), 3);
}

TEST(Exact, RamifiedValuationMatchesNorm) {
  Field K = Field::cyclotomic(3);
  Scalar x = K.one() - K.generator();
  EXPECT_EQ(oracle::norm_by_conjugates(x), 3);
  EXPECT_EQ(field_norm(x), 3);
  EXPECT_EQ(valuation(x, make_prime_spec(K, 3)), 1);
  EXPECT_EQ(valuation(K.from_int(3), make_prime_spec(K, 3)), 2);
}

TEST(Exact, NormAgreesWithConjugateProduct) {
  std::mt19937_64 rng(7);
  for (unsigned e : {3u, 4u, 5u, 7u, 8u, 12u}) {
    Field K = Field::cyclotomic(e);
    for (int i = 0; i < 10; ++i) {
      Scalar x = random_cyclotomic(K, rng, 3);
      EXPECT_EQ(field_norm(x), oracle::norm_by_conjugates(x)) << e << " " << x.to_string();
    }
  }
}

TEST(Exact, UnsupportedPrime) {
  try {
    (void)primes_above(Field::cyclotomic(4), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnsupportedPrime);
  }
}

TEST(Exact, ReduceModExamples) {
  Field Q = Field::rationals();
  Field F5 = Field::prime(5);
  EXPECT_EQ(reduce_mod(Q.parse("7/3"), make_prime_spec(Q, 5), F5), F5.from_int(4));
  Field K = Field::cyclotomic(3);
  PrimeSpec p7 = make_prime_spec(K, 7, {5, 1});  // x - 2
  Field F7 = residue_field(K, p7);
  EXPECT_EQ(F7, Field::prime(7));
  EXPECT_EQ(reduce_mod(K.one() + K.generator(), p7, F7), F7.from_int(3));
  try {
    (void)reduce_mod(Q.parse("1/2"), make_prime_spec(Q, 2), Field::prime(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NegativeValuation);
  }
}

TEST(Exact, SplitPrimeDenominators) {
  // (zeta - 2)/7 is integral at (7, zeta - 2) but not at (7, zeta - 4)
  Field K = Field::cyclotomic(3);
  auto ps = primes_above(K, 7);
  ASSERT_EQ(ps.size(), 2u);
  Scalar x = (K.generator() - K.from_int(2)) / K.from_int(7);
  PrimeSpec p2 = make_prime_spec(K, 7, {5, 1});
  PrimeSpec p4 = make_prime_spec(K, 7, {3, 1});
  EXPECT_EQ(valuation(x, p2), 0);
  EXPECT_EQ(valuation(x, p4), -1);
  Field F7 = Field::prime(7);
  // x * 7 = zeta - 2; reduce_mod must respect the product
  Scalar r = reduce_mod(x, p2, F7);
  EXPECT_EQ(r * F7.from_int(7), F7.zero());
  Scalar y = x * (K.generator() - K.from_int(4));  // = (zeta-2)(zeta-4)/7 = (zeta^2 - 6 zeta + 8)/7 = (-7 zeta + 7)/7
  EXPECT_EQ(y, K.one() - K.generator());
  EXPECT_EQ(reduce_mod(x, p2, F7) * reduce_mod(K.generator() - K.from_int(4), p2, F7), reduce_mod(y, p2, F7));
}

struct PrimeCase {
  unsigned e;
  std::uint64_t ell;
};

class ValuationProperties : public ::testing::TestWithParam<PrimeCase> {};

TEST_P(ValuationProperties, HomomorphismAndUltrametric) {
  const auto [e, ell] = GetParam();
  Field K = e == 1 ? Field::rationals() : Field::cyclotomic(e);
  std::mt19937_64 rng(e * 1000 + ell);
  for (const auto& p : primes_above(K, ell)) {
    Field k = residue_field(K, p);
    for (int i = 0; i < 40; ++i) {
      Scalar a = e == 1 ? K.from_rational(mpq_class(static_cast<long>(rng() % 50) - 25, 1 + rng() % 30)) : random_cyclotomic(K, rng, static_cast<long>(ell));
      Scalar b = e == 1 ? K.from_rational(mpq_class(static_cast<long>(rng() % 50) - 25, 1 + rng() % 30)) : random_cyclotomic(K, rng, static_cast<long>(ell));
      if (a.is_zero() || b.is_zero()) continue;
      const long va = valuation(a, p), vb = valuation(b, p);
      EXPECT_EQ(valuation(a * b, p), va + vb);
      if (!(a + b).is_zero()) EXPECT_GE(valuation(a + b, p), std::min(va, vb));
      if (va >= 0 && vb >= 0) {
        EXPECT_EQ(reduce_mod(a + b, p, k), reduce_mod(a, p, k) + reduce_mod(b, p, k));
        EXPECT_EQ(reduce_mod(a * b, p, k), reduce_mod(a, p, k) * reduce_mod(b, p, k));
        EXPECT_EQ(reduce_mod(lift_residue(reduce_mod(a, p, k), p, K), p, k), reduce_mod(a, p, k));
      }
    }
  }
}

TEST_P(ValuationProperties, SumOverPrimesGivesNorm) {
  const auto [e, ell] = GetParam();
  Field K = e == 1 ? Field::rationals() : Field::cyclotomic(e);
  std::mt19937_64 rng(e * 31 + ell);
  auto ps = primes_above(K, ell);
  for (int i = 0; i < 20; ++i) {
    Scalar x = e == 1 ? K.from_rational(mpq_class(static_cast<long>(rng() % 50) - 25, 1 + rng() % 30)) : random_cyclotomic(K, rng, static_cast<long>(ell));
    if (x.is_zero()) continue;
    long total = 0;
    for (const auto& p : ps) {
      const long f = p.ramified || p.residue_factor.empty() ? 1 : static_cast<long>(p.residue_factor.size() - 1);
      total += f * valuation(x, p);
    }
    mpq_class n = oracle::norm_by_conjugates(x);
    const mpz_class L(static_cast<unsigned long>(ell));
    const long vn = static_cast<long>(mpz_valuation(n.get_num(), L)) - static_cast<long>(mpz_valuation(n.get_den(), L));
    EXPECT_EQ(total, vn) << x.to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, ValuationProperties,
                         ::testing::Values(PrimeCase{1, 2}, PrimeCase{1, 3}, PrimeCase{3, 7}, PrimeCase{3, 2}, PrimeCase{3, 3}, PrimeCase{4, 3},
                                           PrimeCase{4, 5}, PrimeCase{5, 5}, PrimeCase{5, 11}, PrimeCase{5, 2}, PrimeCase{7, 2}, PrimeCase{8, 3}),
                         [](const ::testing::TestParamInfo<PrimeCase>& info) {
                           return "e" + std::to_string(info.param.e) + "_ell" + std::to_string(info.param.ell);
                         });

TEST(Exact, FiniteFactorization) {
  std::mt19937_64 rng(3);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    Field F = Field::prime(p);
    for (int trial = 0; trial < 30; ++trial) {
      Vec c;
      const int deg = 1 + static_cast<int>(rng() % 8);
      for (int i = 0; i < deg; ++i) c.push_back(F.from_int(static_cast<long>(rng() % p)));
      c.push_back(F.one());
      Poly f(F, c);
      auto fs = factor(f);
      Poly prod = Poly::constant(F.one());
      for (auto& pf : fs) {
        EXPECT_TRUE(pf.irreducible);
        std::vector<std::uint64_t> g;
        for (auto& s : pf.poly.coeffs()) g.push_back(s.residue());
        EXPECT_TRUE(is_irreducible_mod_p(p, g)) << pf.poly.to_string();
        for (unsigned m = 0; m < pf.multiplicity; ++m) prod = prod * pf.poly;
      }
      EXPECT_EQ(prod, f);
    }
  }
}

TEST(Exact, ExtensionFieldFactorization) {
  Field F4 = Field::extension(2, {1, 1, 1});
  // x^4 - x splits into linear factors over F_4
  Poly f(F4, {F4.zero(), F4.one(), F4.zero(), F4.zero(), F4.one()});
  auto fs = factor(f);
  ASSERT_EQ(fs.size(), 4u);
  for (auto& pf : fs) EXPECT_EQ(pf.poly.degree(), 1);
  Field F9 = Field::extension(3, {2, 2, 1});
  Poly g(F9, {F9.from_int(1), F9.zero(), F9.one()});  // x^2 + 1 splits over F_9
  EXPECT_EQ(roots(g).size(), 2u);
}

TEST(Exact, CharZeroRoots) {
  Field Q = Field::rationals();
  // (2x - 1)(x + 3)(x^2 + 1)
  Poly f = Poly::from_ints(Q, {-1, 2}) * Poly::from_ints(Q, {3, 1}) * Poly::from_ints(Q, {1, 0, 1});
  auto fs = factor(f);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_TRUE(fs[2].irreducible);
  EXPECT_EQ(roots(f).size(), 2u);
  Field K = Field::cyclotomic(4);
  Scalar i = K.generator();
  Poly g = Poly(K, {-i, K.one()}) * Poly(K, {-i, K.one()});  // (x - i)^2
  auto gs = factor(g);
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(gs[0].multiplicity, 2u);
  EXPECT_EQ(gs[0].poly, Poly(K, {-i, K.one()}));
  Poly h = Poly(K, {K.from_int(-3) * K.generator(), K.from_int(2)}) * Poly::from_ints(K, {1, 0, 0, 0, 1});
  auto hr = roots(h);
  ASSERT_EQ(hr.size(), 1u);
  EXPECT_EQ(hr[0], K.from_rational(mpq_class(3, 2)) * K.generator());
}

TEST(Exact, IntegerFactoring) {
  auto f = factor_integer(mpz_class("600851475143"));
  std::map<mpz_class, unsigned> want{{71, 1}, {839, 1}, {1471, 1}, {6857, 1}};
  EXPECT_EQ(f, want);
  auto g = factor_integer(mpz_class("1000000016000000063"));  // 1000000007 * 1000000009
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(divisors(12), (std::vector<mpz_class>{1, 2, 3, 4, 6, 12}));
}
