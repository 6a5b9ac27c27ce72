#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace xform;

TEST(Rational, ArithExamples) {
  EXPECT_EQ(rational_arith(Rational(1, 2), Rational(1, 3), RationalOp::add), Rational(5, 6));
  EXPECT_EQ(rational_arith(Rational(2, 4), Rational(1, 1), RationalOp::mul), Rational(1, 2));
  try {
    rational_arith(Rational(1), Rational(0), RationalOp::div);
    FAIL() << "expected DivisionByZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(Rational, CanonicalForm) {
  Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* s : {"", "1/0", "a", "1/2/3", "1.5", "/3"}) {
    try {
      Rational::parse(s);
      ADD_FAILURE() << "accepted '" << s << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << s;
    }
  }
}

TEST(Rational, FieldAxiomsOnRandomSamples) {
  gen::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    Rational a = gen::rational(rng, 50, 30), b = gen::rational(rng, 50, 30), c = gen::rational(rng, 50, 30);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
}

TEST(Fp, InverseExamples) {
  EXPECT_EQ(fp_inverse(Fp(2, 3)).value(), 2);
  EXPECT_EQ(fp_inverse(Fp(1, 3)).value(), 1);
  EXPECT_EQ(fp_inverse(Fp(3, 5)).value(), 2);
  EXPECT_THROW(fp_inverse(Fp(0, 7)), Error);
}

TEST(Fp, InverseExhaustiveSmallPrimes) {
  for (int p : {3, 5, 7}) {
    for (long v = 1; v < p; ++v) {
      Fp a(v, p);
      EXPECT_EQ((fp_inverse(a) * a).value(), 1) << v << " mod " << p;
    }
  }
}

TEST(Fp, RejectsBadModulusAndMixedFields) {
  EXPECT_THROW(Fp(1, 2), Error);
  EXPECT_THROW(Fp(1, 9), Error);
  EXPECT_THROW(Fp(1, 101), Error);
  try {
    (void)(Fp(1, 3) + Fp(1, 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
  }
  EXPECT_EQ(Fp(-1, 3).value(), 2);
}

TEST(Reconstruct, Examples) {
  EXPECT_EQ(rational_reconstruct(0.5, 10), Rational(1, 2));
  EXPECT_EQ(rational_reconstruct(0.3333333333, 100), Rational(1, 3));
  EXPECT_EQ(rational_reconstruct(1.4142135624, 10), oracle::best_by_enumeration(1.4142135624, 10));
  EXPECT_EQ(rational_reconstruct(1.4142135624, 10), Rational(7, 5));
}

TEST(Reconstruct, RoundTripsSmallFractions) {
  for (long q = 1; q <= 50; ++q)
    for (long p = -50; p <= 50; ++p) {
      Rational r(p, q);
      EXPECT_EQ(rational_reconstruct(r.to_double(), q), r) << p << "/" << q;
    }
}

TEST(Reconstruct, MatchesEnumerationOracle) {
  gen::Rng rng(5);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int i = 0; i < 300; ++i) {
    double x = u(rng);
    long bound = gen::uniform(rng, 1, 60);
    Rational got = rational_reconstruct(x, bound);
    Rational want = oracle::best_by_enumeration(x, bound);
    EXPECT_LE(got.denominator(), bound);
    EXPECT_EQ(std::fabs(x - got.to_double()), std::fabs(x - want.to_double())) << x << " bound " << bound;
  }
}
