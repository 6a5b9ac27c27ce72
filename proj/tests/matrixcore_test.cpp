#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/reference_matrices.hpp"

using namespace xform;

TEST(MatArith, Examples) {
  QMatrix j = qmatrix({{0, 1}, {1, 0}});
  EXPECT_EQ(mat_arith(j, j, MatOp::mul), QMatrix::identity(RationalField{}, 2));
  QMatrix a = qmatrix({{1, 2}, {3, 4}});
  EXPECT_EQ(mat_arith(a, QMatrix::identity(RationalField{}, 2), MatOp::mul), a);
  EXPECT_EQ(mat_arith(fpmatrix(3, {{0, 1}, {1, 0}}), fpmatrix(3, {{1, 0}, {0, 2}}), MatOp::mul), fpmatrix(3, {{0, 2}, {1, 0}}));
  EXPECT_THROW(mat_arith(a, qmatrix({{1}}), MatOp::add), Error);
  EXPECT_THROW(mat_arith(fpmatrix(3, {{1}}), fpmatrix(5, {{1}}), MatOp::add), Error);
}

TEST(Nullspace, Examples) {
  EXPECT_EQ(nullspace(QMatrix(RationalField{}, 2, 2)).size(), 2u);
  EXPECT_TRUE(nullspace(QMatrix::identity(RationalField{}, 3)).empty());
  auto ns = nullspace(qmatrix({{1, 1}, {1, 1}}));
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0][0], -ns[0][1]);
  EXPECT_FALSE(ns[0][0].is_zero());
}

TEST(Nullspace, RandomRankDeficient) {
  gen::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 6));
    QMatrix a = gen::matrix(RationalField{}, n, rng);
    for (std::size_t r = 0; r < n; ++r) a(r, n - 1) = a(r, 0) + a(r, 1);
    auto ns = nullspace(a);
    EXPECT_EQ(ns.size() + rank(a), n);
    for (const auto& v : ns) {
      auto w = a * v;
      for (const auto& x : w) EXPECT_TRUE(x.is_zero());
    }
  }
}

TEST(Inverse, Examples) {
  const RationalField k;
  EXPECT_EQ(mat_inverse(QMatrix::identity(k, 3)), QMatrix::identity(k, 3));
  EXPECT_EQ(mat_inverse(qmatrix({{0, 1}, {1, 0}})), qmatrix({{0, 1}, {1, 0}}));
  QMatrix inv = mat_inverse(qmatrix({{1, 1}, {0, 2}}));
  EXPECT_EQ(inv(0, 0), Rational(1));
  EXPECT_EQ(inv(0, 1), Rational(-1, 2));
  EXPECT_EQ(inv(1, 0), Rational(0));
  EXPECT_EQ(inv(1, 1), Rational(1, 2));
  try {
    mat_inverse(qmatrix({{1, 2}, {2, 4}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Singular);
  }
}

TEST(Charpoly, Examples) {
  const RationalField k;
  EXPECT_EQ(charpoly(QMatrix::identity(k, 2)), qpoly({-1, 1}).pow(2));
  QPoly p = qpoly({5, -1, 0, 3, 1});
  EXPECT_EQ(charpoly(companion(p)), p);
  EXPECT_EQ(charpoly(fixtures::c()), qpoly({12, -10, 8, -5, 1}));
  EXPECT_EQ(fixtures::c_minpoly(), qpoly({12, -10, 8, -5, 1}));
}

TEST(Charpoly, MatchesLeibnizOracle) {
  gen::Rng rng(13);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int i = 0; i < 30; ++i) {
      QMatrix a = gen::matrix(RationalField{}, n, rng);
      EXPECT_EQ(charpoly(a), oracle::leibniz_charpoly(a));
      FpMatrix b = gen::matrix(PrimeField(5), n, rng);
      EXPECT_EQ(charpoly(b), oracle::leibniz_charpoly(b));
    }
  }
}

TEST(Charpoly, CayleyHamilton) {
  gen::Rng rng(19);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    QMatrix a = gen::matrix(RationalField{}, n, rng);
    EXPECT_TRUE(evaluate(charpoly(a), a).is_zero());
    FpMatrix b = gen::matrix(PrimeField(3), n, rng);
    EXPECT_TRUE(evaluate(charpoly(b), b).is_zero());
  }
}

TEST(Minpoly, Examples) {
  EXPECT_EQ(minpoly(fixtures::b()), qpoly({-1, 3, -3, 1}));
  EXPECT_EQ(minpoly(fixtures::c()), fixtures::c_minpoly());
  EXPECT_EQ(minpoly(QMatrix::scalar(RationalField{}, 4, Rational(7, 3))), QPoly::linear(RationalField{}, Rational(7, 3)));
}

TEST(Minpoly, PropertiesOnStructuredInputs) {
  gen::Rng rng(21);
  for (int i = 0; i < 80; ++i) {
    std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 7));
    auto spec = gen::small_block_spec(RationalField{}, n, rng);
    QMatrix a = spec.assemble();
    QPoly pi = minpoly(a);
    EXPECT_TRUE(pi.is_monic());
    EXPECT_TRUE(evaluate(pi, a).is_zero());
    EXPECT_TRUE(divides(pi, charpoly(a)));
    // minimality: no proper monic divisor of pi annihilates a
    for (const auto& part : yun_squarefree(pi).parts) EXPECT_FALSE(evaluate(pi / part.factor, a).is_zero());
    EXPECT_EQ(minpoly(conjugate(gen::unimodular(RationalField{}, n, rng), a)), pi);
  }
}

TEST(XShape, Examples) {
  gen::Rng rng(2);
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(is_x_shape(gen::matrix(RationalField{}, 2, rng)));
  EXPECT_TRUE(is_x_shape(qmatrix({{1, 0, 2}, {0, 3, 0}, {4, 0, 5}})));
  EXPECT_FALSE(is_x_shape(qmatrix({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})));
}

TEST(XShape, ClosureUnderAlgebra) {
  gen::Rng rng(27);
  const RationalField k;
  for (int i = 0; i < 100; ++i) {
    std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 8));
    QMatrix a = gen::xshape(k, n, rng), b = gen::xshape(k, n, rng);
    EXPECT_TRUE(is_x_shape(a + b));
    EXPECT_TRUE(is_x_shape(a * b));
    EXPECT_TRUE(is_x_shape(a.transpose()));
    if (is_invertible(a)) EXPECT_TRUE(is_x_shape(mat_inverse(a)));
  }
}

TEST(XShape, SubspaceDimension) {
  const RationalField k;
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        QMatrix e(k, n, n);
        e(i, j) = Rational(1);
        if (is_x_shape(e)) ++count;
      }
    EXPECT_EQ(count, 2 * n - n % 2);
  }
}

TEST(InfNorm, Examples) {
  const RationalField k;
  EXPECT_EQ(inf_norm(QMatrix(k, 3, 3)), Rational(0));
  QMatrix a(k, {{Rational(1), Rational(-3)}, {Rational(2), Rational(1, 2)}});
  EXPECT_EQ(inf_norm(a), Rational(3));
  EXPECT_EQ(inf_norm(a - a), Rational(0));
  try {
    inf_norm(fpmatrix(3, {{1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
  }
}

TEST(InfNorm, NormAxioms) {
  gen::Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    QMatrix a = gen::matrix(RationalField{}, 3, rng), b = gen::matrix(RationalField{}, 3, rng);
    Rational s = gen::rational(rng);
    EXPECT_LE(inf_norm(a + b), inf_norm(a) + inf_norm(b));
    EXPECT_EQ(inf_norm(s * a), abs(s) * inf_norm(a));
  }
}

TEST(Conjugate, Examples) {
  const RationalField k;
  QMatrix b = fixtures::b();
  EXPECT_EQ(conjugate(QMatrix::identity(k, 3), b), b);
  gen::Rng rng(4);
  QMatrix p = gen::unimodular(k, 3, rng);
  EXPECT_EQ(charpoly(conjugate(p, b)), charpoly(b));
  EXPECT_EQ(fixtures::c_left() * fixtures::c_middle() * fixtures::c_right(), fixtures::c());
  EXPECT_THROW(conjugate(qmatrix({{1, 1}, {1, 1}}), qmatrix({{1, 0}, {0, 1}})), Error);
}
