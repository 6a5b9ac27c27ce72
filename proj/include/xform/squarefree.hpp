#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "xform/polynomial.hpp"

namespace xform {

/// f = unit * prod g_i^e_i, g_i monic squarefree and pairwise coprime,
/// exponents strictly increasing.
template <Field K>
struct SquarefreeDecomposition {
  struct Part {
    Polynomial<K> factor;
    unsigned exponent;
    friend bool operator==(const Part&, const Part&) = default;
  };

  typename K::value_type unit;
  std::vector<Part> parts;

  Polynomial<K> reconstruct(const K& field) const {
    Polynomial<K> r = Polynomial<K>::constant(field, unit);
    for (const auto& p : parts) r = r * p.factor.pow(p.exponent);
    return r;
  }

  /// Product of the parts with the given exponent (1 if there is none).
  Polynomial<K> part(const K& field, unsigned exponent) const {
    for (const auto& p : parts)
      if (p.exponent == exponent) return p.factor;
    return Polynomial<K>::one(field);
  }

  unsigned max_exponent() const { return parts.empty() ? 0 : parts.back().exponent; }
};

/// Yun's algorithm; characteristic zero.
inline SquarefreeDecomposition<RationalField> yun_squarefree(const QPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "squarefree decomposition of 0");
  const RationalField& k = f.field();
  SquarefreeDecomposition<RationalField> out{f.leading(), {}};
  QPoly monic = f.monic();
  if (monic.degree() == 0) return out;
  QPoly df = monic.derivative();
  QPoly a0 = poly_gcd(monic, df);
  QPoly b = monic / a0;
  QPoly c = df / a0;
  QPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    QPoly a = poly_gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (a.degree() > 0) out.parts.push_back({a.monic(), i});
    ++i;
  }
  (void)k;
  return out;
}

namespace detail {

inline void fp_squarefree_rec(const FpPoly& monic, unsigned scale, std::vector<SquarefreeDecomposition<PrimeField>::Part>& out) {
  const PrimeField& k = monic.field();
  const int p = k.p;
  if (monic.degree() <= 0) return;
  FpPoly c = poly_gcd(monic, monic.derivative());
  FpPoly w = monic / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    FpPoly y = poly_gcd(w, c);
    FpPoly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    // c is a p-th power: c(X) = sum a_{pk} X^{pk}, and a^{1/p} = a in F_p.
    std::vector<Fp> root;
    const auto& cc = c.coefficients();
    for (std::size_t j = 0; j < cc.size(); j += static_cast<std::size_t>(p)) root.push_back(cc[j]);
    fp_squarefree_rec(FpPoly(k, std::move(root)).monic(), scale * static_cast<unsigned>(p), out);
  }
}

}  // namespace detail

/// Squarefree decomposition in characteristic p (handles p-th power parts).
inline SquarefreeDecomposition<PrimeField> fp_squarefree(const FpPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "squarefree decomposition of 0");
  SquarefreeDecomposition<PrimeField> out{f.leading(), {}};
  detail::fp_squarefree_rec(f.monic(), 1, out.parts);
  std::sort(out.parts.begin(), out.parts.end(), [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
  return out;
}

template <Field K>
SquarefreeDecomposition<K> squarefree(const Polynomial<K>& f) {
  if constexpr (K::is_prime_field) return fp_squarefree(f);
  else return yun_squarefree(f);
}

template <Field K>
bool is_squarefree(const Polynomial<K>& f) {
  if (f.is_zero()) return false;
  if (f.degree() <= 0) return true;
  return poly_gcd(f, f.derivative()).degree() == 0;
}

}  // namespace xform
