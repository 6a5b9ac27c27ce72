#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "xform/squarefree.hpp"

namespace xform {

struct FpFactor {
  FpPoly factor;
  unsigned exponent;
  friend bool operator==(const FpFactor&, const FpFactor&) = default;
};

namespace detail {

inline FpPoly powmod(FpPoly base, mpz_class e, const FpPoly& m) {
  FpPoly r = FpPoly::one(m.field());
  base = base % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

/// (product of all degree-d irreducible factors, d) for a monic squarefree f.
inline std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly g) {
  std::vector<std::pair<FpPoly, int>> out;
  const PrimeField& k = g.field();
  FpPoly x = FpPoly::x(k);
  FpPoly h = x;
  int i = 1;
  while (g.degree() >= 2 * i) {
    h = powmod(h, mpz_class(k.p), g);
    FpPoly d = poly_gcd(g, h - x);
    if (d.degree() > 0) {
      out.emplace_back(d, i);
      g = g / d;
      h = h % g;
    }
    ++i;
  }
  if (g.degree() > 0) out.emplace_back(g, g.degree());
  return out;
}

/// Cantor-Zassenhaus split of f = product of distinct degree-d irreducibles.
inline void equal_degree(const FpPoly& f, int d, std::mt19937& rng, std::vector<FpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const PrimeField& k = f.field();
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(k.p), static_cast<unsigned long>(d));
  mpz_class e = (pd - 1) / 2;
  std::uniform_int_distribution<int> coef(0, k.p - 1);
  while (true) {
    std::vector<Fp> a;
    for (int i = 0; i < f.degree(); ++i) a.push_back(Fp(coef(rng), k.p));
    FpPoly ap(k, std::move(a));
    if (ap.degree() <= 0) continue;
    FpPoly g = poly_gcd(f, ap);
    if (g.degree() <= 0) g = poly_gcd(f, powmod(ap, e, f) - FpPoly::one(k));
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

inline bool poly_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    int x = a.coeff(static_cast<std::size_t>(i)).value(), y = b.coeff(static_cast<std::size_t>(i)).value();
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace detail

/// f = unit * prod q_i^e_i with q_i distinct monic irreducibles, sorted by
/// degree then coefficients.
inline std::vector<FpFactor> fp_factor(const FpPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "fp_factor of 0");
  std::mt19937 rng(0x5eedu);
  std::vector<FpFactor> out;
  for (const auto& part : fp_squarefree(f).parts) {
    for (const auto& [prod, d] : detail::distinct_degree(part.factor)) {
      std::vector<FpPoly> irr;
      detail::equal_degree(prod, d, rng, irr);
      for (auto& q : irr) out.push_back({std::move(q), part.exponent});
    }
  }
  std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
    if (a.factor == b.factor) return a.exponent < b.exponent;
    return detail::poly_less(a.factor, b.factor);
  });
  return out;
}

/// Roots of f in F_p by enumeration.
inline std::vector<Fp> fp_roots(const FpPoly& f) {
  std::vector<Fp> out;
  const int p = f.field().p;
  for (int v = 0; v < p; ++v)
    if (f(Fp(v, p)).is_zero()) out.emplace_back(v, p);
  return out;
}

}  // namespace xform
