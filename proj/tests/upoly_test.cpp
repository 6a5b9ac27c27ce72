#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace xform;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::InvalidArgument;
}

QPoly x_minus(long a) { return qpoly({-a, 1}); }

}  // namespace

TEST(PolyDivRem, Examples) {
  auto [q1, r1] = poly_divrem(qpoly({-1, 0, 1}), qpoly({-1, 1}));
  EXPECT_EQ(q1, qpoly({1, 1}));
  EXPECT_EQ(r1.degree(), -1);
  auto [q2, r2] = poly_divrem(qpoly({0, 0, 0, 1}), qpoly({1, 0, 1}));
  EXPECT_EQ(q2, qpoly({0, 1}));
  EXPECT_EQ(r2, qpoly({0, -1}));
  auto [q3, r3] = poly_divrem(qpoly({1, 0, 1}), qpoly({1, 0, 1}));
  EXPECT_EQ(q3, qpoly({1}));
  EXPECT_EQ(r3.degree(), -1);
  EXPECT_EQ(kind_of([] { poly_divrem(qpoly({1, 1}), QPoly(RationalField{})); }), ErrorKind::DivisionByZero);
  EXPECT_EQ(kind_of([] { poly_divrem(fppoly(3, {1, 1}), fppoly(5, {1, 1})); }), ErrorKind::FieldMismatch);
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(poly_gcd(qpoly({-1, 0, 1}), x_minus(1)), x_minus(1));
  EXPECT_EQ(poly_gcd(x_minus(1).pow(2), x_minus(1) * x_minus(2)), x_minus(1));
  EXPECT_EQ(poly_gcd(qpoly({1, 0, 1}), qpoly({2, 0, 1})), qpoly({1}));
}

TEST(PolyGcd, RandomCommonFactor) {
  gen::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    auto rp = [&](int d) {
      std::vector<Rational> c;
      for (int j = 0; j < d; ++j) c.push_back(gen::rational(rng));
      c.push_back(Rational(1));
      return qpoly(c);
    };
    QPoly g = rp(2), a = rp(3) * g, b = rp(2) * g;
    QPoly d = poly_gcd(a, b);
    EXPECT_TRUE(divides(g, d));
    EXPECT_TRUE(divides(d, a));
    EXPECT_TRUE(divides(d, b));
    EXPECT_TRUE(d.is_monic());
  }
}

TEST(Yun, Examples) {
  auto b = yun_squarefree(x_minus(1).pow(3));
  ASSERT_EQ(b.parts.size(), 1u);
  EXPECT_EQ(b.parts[0].factor, x_minus(1));
  EXPECT_EQ(b.parts[0].exponent, 3u);

  QPoly pic = x_minus(2) * x_minus(3) * qpoly({2, 0, 1});
  auto c = yun_squarefree(pic);
  ASSERT_EQ(c.parts.size(), 1u);
  EXPECT_EQ(c.parts[0].factor, pic);
  EXPECT_EQ(c.parts[0].exponent, 1u);

  auto m = yun_squarefree(x_minus(1).pow(2) * x_minus(3));
  ASSERT_EQ(m.parts.size(), 2u);
  EXPECT_EQ(m.parts[0].factor, x_minus(3));
  EXPECT_EQ(m.parts[0].exponent, 1u);
  EXPECT_EQ(m.parts[1].factor, x_minus(1));
  EXPECT_EQ(m.parts[1].exponent, 2u);
}

TEST(Yun, ReconstructsRandomProducts) {
  gen::Rng rng(17);
  const RationalField k;
  for (int i = 0; i < 100; ++i) {
    QPoly f = QPoly::constant(k, Rational(gen::uniform(rng, 1, 5)));
    for (int j = 0, m = static_cast<int>(gen::uniform(rng, 1, 4)); j < m; ++j)
      f = f * QPoly::linear(k, Rational(gen::uniform(rng, -3, 3))).pow(static_cast<unsigned>(gen::uniform(rng, 1, 3)));
    auto d = yun_squarefree(f);
    EXPECT_EQ(d.reconstruct(k), f);
    for (std::size_t a = 0; a < d.parts.size(); ++a) {
      EXPECT_TRUE(is_squarefree(d.parts[a].factor));
      if (a) EXPECT_LT(d.parts[a - 1].exponent, d.parts[a].exponent);
      for (std::size_t b = a + 1; b < d.parts.size(); ++b) EXPECT_TRUE(coprime(d.parts[a].factor, d.parts[b].factor));
    }
  }
}

TEST(FpSquarefree, Examples) {
  auto a = fp_squarefree(fppoly(3, {0, 0, 0, 1}));
  ASSERT_EQ(a.parts.size(), 1u);
  EXPECT_EQ(a.parts[0].factor, fppoly(3, {0, 1}));
  EXPECT_EQ(a.parts[0].exponent, 3u);

  auto b = fp_squarefree(fppoly(3, {0, -1, 0, 1}));
  ASSERT_EQ(b.parts.size(), 1u);
  EXPECT_EQ(b.parts[0].exponent, 1u);

  auto c = fp_squarefree(fppoly(3, {1, 0, 2, 0, 1}));
  ASSERT_EQ(c.parts.size(), 1u);
  EXPECT_EQ(c.parts[0].factor, fppoly(3, {1, 0, 1}));
  EXPECT_EQ(c.parts[0].exponent, 2u);
}

TEST(FpSquarefree, ReconstructsRandom) {
  gen::Rng rng(23);
  for (int p : {3, 5, 7}) {
    const PrimeField k(p);
    for (int i = 0; i < 100; ++i) {
      FpPoly f = FpPoly::one(k);
      for (int j = 0, m = static_cast<int>(gen::uniform(rng, 1, 4)); j < m; ++j) {
        FpPoly g(k, {k.from_int(gen::uniform(rng, 0, p - 1)), k.from_int(gen::uniform(rng, 0, p - 1)), k.one()});
        f = f * g.pow(static_cast<unsigned>(gen::uniform(rng, 1, 4)));
      }
      auto d = fp_squarefree(f);
      EXPECT_EQ(d.reconstruct(k), f);
      for (const auto& part : d.parts) EXPECT_TRUE(is_squarefree(part.factor));
    }
  }
}

TEST(Sturm, Examples) {
  EXPECT_EQ(sturm_count(qpoly({2, 0, 1})), 0);
  EXPECT_EQ(sturm_count(qpoly({-2, 0, 1})), 2);
  EXPECT_EQ(sturm_count(x_minus(1) * x_minus(2) * qpoly({2, 0, 1})), 2);
  EXPECT_EQ(kind_of([] { sturm_count(qpoly({1, 2, 1})); }), ErrorKind::NotSquarefree);
}

TEST(Sturm, MatchesGridOracle) {
  gen::Rng rng(29);
  int checked = 0;
  while (checked < 200) {
    int d = static_cast<int>(gen::uniform(rng, 1, 6));
    std::vector<long> c(d + 1);
    for (auto& x : c) x = gen::uniform(rng, -5, 5);
    if (c.back() == 0) continue;
    std::vector<Rational> rc(c.begin(), c.end());
    QPoly f = qpoly(rc);
    if (!is_squarefree(f)) continue;
    EXPECT_EQ(sturm_count(f), oracle::grid_real_roots(c)) << f.to_string();
    ++checked;
  }
}

TEST(RationalRoots, Examples) {
  auto b = rational_roots(x_minus(1).pow(3));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].root, Rational(1));
  EXPECT_EQ(b[0].multiplicity, 3u);

  auto c = rational_roots(x_minus(2) * x_minus(3) * qpoly({2, 0, 1}));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].root, Rational(2));
  EXPECT_EQ(c[1].root, Rational(3));

  EXPECT_TRUE(rational_roots(qpoly({2, 0, 1})).empty());
}

TEST(RationalRoots, RandomProductsWithFractionalRoots) {
  gen::Rng rng(31);
  const RationalField k;
  for (int i = 0; i < 60; ++i) {
    std::vector<Rational> roots;
    QPoly f = qpoly({3, 0, 1});
    for (int j = 0, m = static_cast<int>(gen::uniform(rng, 1, 4)); j < m; ++j) {
      Rational r = gen::rational(rng, 7, 5);
      if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
      roots.push_back(r);
      f = f * QPoly::linear(k, r).pow(static_cast<unsigned>(gen::uniform(rng, 1, 3)));
    }
    std::sort(roots.begin(), roots.end());
    auto got = rational_roots(f);
    ASSERT_EQ(got.size(), roots.size()) << f.to_string();
    for (std::size_t j = 0; j < got.size(); ++j) {
      EXPECT_EQ(got[j].root, roots[j]);
      EXPECT_TRUE(divides(QPoly::linear(k, got[j].root).pow(got[j].multiplicity), f));
      EXPECT_FALSE(divides(QPoly::linear(k, got[j].root).pow(got[j].multiplicity + 1), f));
    }
  }
}

TEST(QuadraticSplit, Examples) {
  auto a = quadratic_split(qpoly({2, 0, 1}) * qpoly({3, 0, 1}));
  ASSERT_TRUE(a.ok) << a.detail;
  ASSERT_EQ(a.factors.size(), 2u);
  EXPECT_EQ(a.factors[0], qpoly({2, 0, 1}));
  EXPECT_EQ(a.factors[1], qpoly({3, 0, 1}));

  auto b = quadratic_split(qpoly({1, 0, 1}));
  ASSERT_TRUE(b.ok);
  EXPECT_EQ(b.factors, std::vector<QPoly>{qpoly({1, 0, 1})});

  auto c = quadratic_split(qpoly({-2, 0, 0, 1}));
  EXPECT_FALSE(c.ok);
  EXPECT_TRUE(c.proven);
}

TEST(QuadraticSplit, RecoversRandomProducts) {
  gen::Rng rng(37);
  for (int i = 0; i < 60; ++i) {
    QPoly f = qpoly({1});
    std::vector<QPoly> qs;
    for (int j = 0, m = static_cast<int>(gen::uniform(rng, 1, 3)); j < m; ++j) {
      QPoly q = qpoly({gen::uniform(rng, 1, 9), gen::uniform(rng, -2, 2), 1});
      if (quadratic_discriminant(q).sign() >= 0) continue;
      if (std::find(qs.begin(), qs.end(), q) != qs.end()) continue;
      qs.push_back(q);
      f = f * q;
    }
    if (qs.empty()) continue;
    auto s = quadratic_split(f);
    ASSERT_TRUE(s.ok) << f.to_string() << ": " << s.detail;
    QPoly prod = qpoly({1});
    for (const auto& q : s.factors) prod = prod * q;
    EXPECT_EQ(prod, f);
    EXPECT_EQ(s.factors.size(), qs.size());
  }
}

TEST(FpFactor, Examples) {
  auto a = fp_factor(fppoly(3, {1, 0, 1}));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].factor, fppoly(3, {1, 0, 1}));
  EXPECT_EQ(a[0].exponent, 1u);

  auto b = fp_factor(fppoly(3, {0, -1, 0, 1}));
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0].factor, fppoly(3, {0, 1}));
  EXPECT_EQ(b[1].factor, fppoly(3, {1, 1}));
  EXPECT_EQ(b[2].factor, fppoly(3, {2, 1}));

  auto c = fp_factor(fppoly(3, {1, 0, 2, 0, 1}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].factor, fppoly(3, {1, 0, 1}));
  EXPECT_EQ(c[0].exponent, 2u);
}

TEST(FpFactor, MatchesBruteForceOverF3) {
  const PrimeField k(3);
  for (int d = 1; d <= 4; ++d) {
    for (const auto& f : oracle::monic_of_degree(k, d)) {
      auto got = fp_factor(f);
      auto want = oracle::brute_factor(f);
      ASSERT_EQ(got.size(), want.size()) << f.to_string();
      for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i].factor, want[i].first) << f.to_string();
        EXPECT_EQ(got[i].exponent, want[i].second) << f.to_string();
      }
    }
  }
}

TEST(FpFactor, ReconstructsLargerDegrees) {
  gen::Rng rng(41);
  for (int p : {3, 5, 13, 97}) {
    const PrimeField k(p);
    for (int i = 0; i < 30; ++i) {
      std::vector<Fp> c;
      int d = static_cast<int>(gen::uniform(rng, 1, 12));
      for (int j = 0; j < d; ++j) c.push_back(k.from_int(gen::uniform(rng, 0, p - 1)));
      c.push_back(k.one());
      FpPoly f(k, c);
      FpPoly prod = FpPoly::one(k);
      for (const auto& q : fp_factor(f)) {
        EXPECT_TRUE(q.factor.is_monic());
        if (q.factor.degree() <= 3) EXPECT_TRUE(oracle::brute_irreducible(q.factor) || p > 13);
        prod = prod * q.factor.pow(q.exponent);
      }
      EXPECT_EQ(prod, f);
    }
  }
}

TEST(PropertyP, Examples) {
  auto b = verifies_property_p(x_minus(1).pow(3), View::real());
  EXPECT_FALSE(b.holds);
  ASSERT_TRUE(b.violation);
  EXPECT_EQ(b.violation->kind, ViolationKind::exponent_at_least_3);
  EXPECT_EQ(b.violation->detail, "exponent 3 at root 1");

  EXPECT_TRUE(verifies_property_p(x_minus(2) * x_minus(3) * qpoly({2, 0, 1}), View::real()).holds);
  EXPECT_TRUE(verifies_property_p(qpoly({-2, 0, 1}).pow(2), View::real()).holds);

  auto d = verifies_property_p(qpoly({2, 0, 1}).pow(2), View::real());
  EXPECT_FALSE(d.holds);
  EXPECT_EQ(d.violation->kind, ViolationKind::nonreal_double_part);

  EXPECT_TRUE(verifies_property_p(qpoly({0, 1}).pow(2) * x_minus(1).pow(2), View::complex()).holds);

  auto f = verifies_property_p(fppoly(3, {1, 0, 1}).pow(2), View::fp(3));
  EXPECT_FALSE(f.holds);
  EXPECT_EQ(f.violation->kind, ViolationKind::repeated_quadratic);

  auto g = verifies_property_p(fppoly(3, {-1, -1, 0, 1}), View::fp(3));  // X^3 - X - 1, irreducible
  EXPECT_FALSE(g.holds);
  EXPECT_EQ(g.violation->kind, ViolationKind::high_degree_irreducible);
}

TEST(PropertyP, RealImpliesComplex) {
  gen::Rng rng(43);
  const RationalField k;
  for (int i = 0; i < 200; ++i) {
    QPoly f = QPoly::one(k);
    for (int j = 0, m = static_cast<int>(gen::uniform(rng, 1, 3)); j < m; ++j) {
      QPoly g = gen::uniform(rng, 0, 1) ? QPoly::linear(k, Rational(gen::uniform(rng, -2, 2)))
                                        : qpoly({gen::uniform(rng, -3, 3), gen::uniform(rng, -2, 2), 1});
      f = f * g.pow(static_cast<unsigned>(gen::uniform(rng, 1, 3)));
    }
    if (verifies_property_p(f, View::real()).holds) EXPECT_TRUE(verifies_property_p(f, View::complex()).holds) << f.to_string();
  }
}

TEST(PropertyP, PnFamily) {
  for (long n = 1; n <= 100; ++n) {
    QPoly p = qpoly({Rational(1, n), Rational(1, n), Rational(1)});
    Rational disc = quadratic_discriminant(p);
    EXPECT_EQ(disc, Rational(1, n) * (Rational(1, n) - Rational(4)));
    EXPECT_LT(disc.sign(), 0);
    EXPECT_EQ(sturm_count(p), 0);
    EXPECT_TRUE(verifies_property_p(p, View::real()).holds);
  }
}

TEST(PropertyP, ViewFieldMismatch) {
  EXPECT_EQ(kind_of([] { verifies_property_p(qpoly({1, 1}), View::fp(3)); }), ErrorKind::FieldMismatch);
  EXPECT_EQ(kind_of([] { verifies_property_p(fppoly(3, {1, 1}), View::real()); }), ErrorKind::FieldMismatch);
  EXPECT_EQ(kind_of([] { verifies_property_p(fppoly(3, {1, 1}), View::fp(5)); }), ErrorKind::FieldMismatch);
}
