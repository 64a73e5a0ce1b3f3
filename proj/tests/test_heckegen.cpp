#include <gtest/gtest.h>

#include <algorithm>

#include "frobenia/decomp.hpp"
#include "frobenia/hecke.hpp"
#include "oracles.hpp"

using namespace frobenia;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvalidInput;
}

// Hecke labels are "T1", "Ts1", ...
oracle::Perm perm(const std::string& label) { return oracle::perm_of_word(label == "T1" ? "" : label.substr(1)); }

}  // namespace

TEST(Heckegen, A2Enumeration) {
  const CoxeterGroup G = coxeter_group("A2");
  ASSERT_EQ(G.order(), 6u);
  EXPECT_EQ(G.lengths, (std::vector<unsigned>{0, 1, 1, 2, 2, 3}));
  EXPECT_EQ(G.label(0), "1");
  EXPECT_EQ(G.label(1), "s1");
  EXPECT_EQ(G.label(3), "s1s2");
  EXPECT_EQ(G.label(5), "s1s2s1");
}

TEST(Heckegen, SmallOrders) {
  EXPECT_EQ(coxeter_group("B2").order(), 8u);
  EXPECT_EQ(coxeter_group("I2:5").order(), 10u);
  EXPECT_EQ(coxeter_group("A1").order(), 2u);
}

TEST(Heckegen, OrdersMatchCatalog) {
  std::vector<std::string> types{"A1", "A2", "A3", "A4", "B2", "B3", "D4", "H3"};
  for (int m = 2; m <= 12; ++m) types.push_back("I2:" + std::to_string(m));
  for (const auto& t : types) {
    const auto k = known_order(t);
    ASSERT_TRUE(k.has_value()) << t;
    EXPECT_EQ(coxeter_group(t).order(), *k) << t;
  }
  // Classical formulas.
  EXPECT_EQ(*known_order("A4"), 120u);
  EXPECT_EQ(*known_order("B3"), 48u);
  EXPECT_EQ(*known_order("D4"), 192u);
  EXPECT_EQ(*known_order("H3"), 120u);
  EXPECT_EQ(*known_order("I2:7"), 14u);
}

TEST(Heckegen, LengthChangesByOne) {
  for (const char* t : {"A3", "B3", "I2:6"}) {
    const CoxeterGroup G = coxeter_group(t);
    for (std::size_t w = 0; w < G.order(); ++w)
      for (std::size_t s = 0; s < G.rank(); ++s) {
        const long a = G.lengths[w], b = G.lengths[G.rmul[w][s]];
        EXPECT_EQ(std::abs(a - b), 1) << t;
        EXPECT_EQ(G.rmul[G.rmul[w][s]][s], w) << t;
      }
  }
}

TEST(Heckegen, ElementsAndInverses) {
  const CoxeterGroup G = coxeter_group("B3");
  for (std::size_t w = 0; w < G.order(); ++w) {
    EXPECT_EQ(G.element(G.words[w]), w);
    EXPECT_EQ(G.lengths[G.inverse(w)], G.lengths[w]);
    EXPECT_EQ(G.inverse(G.inverse(w)), w);
  }
}

TEST(Heckegen, InvalidMatrices) {
  EXPECT_EQ(code_of([] { build_coxeter({{1, 3}, {2, 1}}); }), Errc::InvalidMatrix);  // not symmetric
  EXPECT_EQ(code_of([] { build_coxeter({{2, 3}, {3, 1}}); }), Errc::InvalidMatrix);  // diagonal
  EXPECT_EQ(code_of([] { build_coxeter({{1, 1}, {1, 1}}); }), Errc::InvalidMatrix);  // off-diagonal 1
  EXPECT_EQ(code_of([] { build_coxeter({{1, 3}, {3, 1}, {1, 1}}); }), Errc::InvalidMatrix);
}

TEST(Heckegen, GroupTooLarge) {
  EXPECT_EQ(code_of([] { build_coxeter(coxeter_matrix("A3"), "A3", 10); }), Errc::GroupTooLarge);
  EXPECT_EQ(code_of([] { coxeter_group("H4"); }), Errc::GroupTooLarge);
  // Affine A1~ is infinite.
  EXPECT_EQ(code_of([] { build_coxeter({{1, 0}, {0, 1}}, "custom", 100); }), Errc::InvalidMatrix);
  EXPECT_EQ(code_of([] { build_hecke(coxeter_group("D5"), Field::rationals().one()); }), Errc::GroupTooLarge);
}

TEST(Heckegen, UnknownType) {
  EXPECT_THROW(coxeter_matrix("E6"), Error);
  EXPECT_THROW(coxeter_matrix("I2:1"), Error);
}

TEST(Heckegen, QuadraticRelationA1) {
  const Field K = Field::cyclotomic(5);
  const Scalar v = K.generator();
  const HeckeAlgebra H = build_hecke(coxeter_group("A1"), v);
  const Algebra& A = *H.algebra;
  const Vec Ts = A.basis_vec(1);
  Vec expected = A.basis_vec(0);
  expected[1] = v - v.inv();
  EXPECT_EQ(A.mul(Ts, Ts), expected);
}

TEST(Heckegen, VEqualsOneIsGroupAlgebraOfS3) {
  const HeckeAlgebra H = build_hecke(coxeter_group("A2"), Field::rationals().one());
  const Algebra& A = *H.algebra;
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t b = 0; b < A.dim(); ++b) {
      const auto pa = perm(A.labels()[a]);
      const auto pb = perm(A.labels()[b]);
      const auto pab = oracle::perm_mul(pa, pb);
      std::size_t k = A.dim();
      for (std::size_t c = 0; c < A.dim(); ++c)
        if (perm(A.labels()[c]) == pab) k = c;
      ASSERT_LT(k, A.dim());
      EXPECT_EQ(A.mul(A.basis_vec(a), A.basis_vec(b)), A.basis_vec(k));
    }
}

TEST(Heckegen, A1AtFourthRootOfUnityIsNotSemisimple) {
  const Field K = Field::cyclotomic(4);
  const HeckeAlgebra H = build_hecke(coxeter_group("A1"), K.generator());
  const Algebra& A = *H.algebra;
  // (T_s - i)^2 = T_s^2 - 2i T_s - 1 = (i - (-i) - 2i) T_s = 0.
  const Scalar i = K.generator();
  Vec x = A.basis_vec(1);
  x[0] = -i;
  EXPECT_TRUE(vec_is_zero(A.mul(x, x)));
  EXPECT_FALSE(vec_is_zero(x));
  EXPECT_EQ(analyze(H.algebra).radical.rows(), 1u);
}

TEST(Heckegen, SymmetricWithInverseDualBasis) {
  const Field K = Field::cyclotomic(3);
  for (const char* t : {"A2", "B2", "I2:5"}) {
    const HeckeAlgebra H = build_hecke(coxeter_group(t), K.generator());
    const Algebra& A = *H.algebra;
    EXPECT_EQ(A.tau(), A.basis_vec(0)) << t;
    EXPECT_TRUE(check_frobenius(A).is_symmetric) << t;
    const auto D = dual_basis(A);
    for (std::size_t w = 0; w < A.dim(); ++w) EXPECT_EQ(D.vector(w), A.basis_vec(H.group.inverse(w))) << t;
  }
}

TEST(Heckegen, SpecializeA2AtZeta3) {
  const Field K = Field::cyclotomic(3);
  const HeckeAlgebra H = build_hecke(coxeter_group("A2"), K.generator());
  const HeckeAlgebra S = specialize(H, make_prime_spec(K, 7, {5, 1}));
  EXPECT_EQ(S.algebra->field(), Field::prime(7));
  EXPECT_EQ(S.v, Field::prime(7).from_int(2));
  const HeckeAlgebra D = build_hecke(coxeter_group("A2"), Field::prime(7).from_int(2));
  for (std::size_t w = 0; w < 6; ++w) EXPECT_EQ(S.algebra->regular_action(w), D.algebra->regular_action(w));
}

TEST(Heckegen, SpecializeA1AtZeta4ToF5) {
  const Field K = Field::cyclotomic(4);
  const HeckeAlgebra H = build_hecke(coxeter_group("A1"), K.generator());
  // x^2 + 1 = (x - 2)(x - 3) mod 5.
  const HeckeAlgebra S = specialize(H, make_prime_spec(K, 5, {3, 1}));
  EXPECT_EQ(S.v, Field::prime(5).from_int(2));
  const Algebra& A = *S.algebra;
  const Vec Ts = A.basis_vec(1);
  // v - v^-1 = 2 - 3 = -1.
  Vec expected = A.basis_vec(0);
  expected[1] = Field::prime(5).from_int(-1);
  EXPECT_EQ(A.mul(Ts, Ts), expected);
}

TEST(Heckegen, SpecializeGroupAlgebraAtThree) {
  const HeckeAlgebra H = build_hecke(coxeter_group("A2"), Field::rationals().one());
  const HeckeAlgebra S = specialize(H, make_prime_spec(Field::rationals(), 3));
  EXPECT_EQ(S.algebra->field(), Field::prime(3));
  EXPECT_TRUE(S.v.is_one());
  EXPECT_EQ(analyze(S.algebra).catalog.size(), 2u);
}

TEST(Heckegen, ParseParam) {
  const HeckeParam r = parse_hecke_param("root:3");
  EXPECT_EQ(r.field, Field::cyclotomic(3));
  EXPECT_EQ(r.v, r.field.generator());

  const HeckeParam f = parse_hecke_param("fp:7,2");
  EXPECT_EQ(f.field, Field::prime(7));
  EXPECT_EQ(f.v, Field::prime(7).from_int(2));

  const HeckeParam e = parse_hecke_param("fq:2,1;1;1,0;1");
  EXPECT_EQ(e.field, Field::extension(2, {1, 1, 1}));
  EXPECT_EQ(e.v, e.field.generator());

  const HeckeParam o = parse_hecke_param("one");
  EXPECT_EQ(o.field, Field::rationals());
  EXPECT_TRUE(o.v.is_one());

  for (const char* bad : {"", "root:", "root:x", "fp:7", "fp:8,2", "fp:7,0", "zeta:3"}) EXPECT_THROW(parse_hecke_param(bad), Error) << bad;
}

TEST(Heckegen, ExtensionFieldHecke) {
  const HeckeParam e = parse_hecke_param("fq:2,1;1;1,0;1");
  const HeckeAlgebra H = build_hecke(coxeter_group("A2"), e.v);
  EXPECT_EQ(H.algebra->dim(), 6u);
  EXPECT_TRUE(check_frobenius(*H.algebra).is_symmetric);
}
