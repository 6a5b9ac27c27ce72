#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "xform/sturm.hpp"

namespace xform {

namespace detail {

/// Simultaneous Aberth iteration on a monic polynomial with double
/// coefficients (ascending). At most 200 iterations per attempt, step
/// tolerance 1e-12 relative; stagnating runs restart from rotated, rescaled
/// starting points.
inline std::vector<std::complex<double>> aberth_roots(const std::vector<double>& monic) {
  using C = std::complex<double>;
  const int n = static_cast<int>(monic.size()) - 1;
  if (n <= 0) return {};
  double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(monic[static_cast<std::size_t>(i)]));
  bound += 1.0;

  auto eval = [&](C z, C& dp) {
    C p = 1.0;
    dp = 0.0;
    for (int i = n - 1; i >= 0; --i) {
      dp = dp * z + p;
      p = p * z + monic[static_cast<std::size_t>(i)];
    }
    return p;
  };

  std::vector<C> best;
  double best_step = INFINITY;
  constexpr int kMaxIterations = 200;
  constexpr double kTolerance = 1e-12;
  constexpr double kOffsets[] = {0.4, 1.3, 2.1, 0.77, 2.9};
  constexpr double kScales[] = {0.5, 0.9, 0.3, 0.7, 1.0};
  for (std::size_t attempt = 0; attempt < std::size(kOffsets); ++attempt) {
    std::vector<C> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      z[static_cast<std::size_t>(k)] = std::polar(bound * kScales[attempt], 2 * std::numbers::pi * k / n + kOffsets[attempt]);
    double last_step = INFINITY;
    for (int it = 0; it < kMaxIterations; ++it) {
      last_step = 0;
      for (int k = 0; k < n; ++k) {
        C& zk = z[static_cast<std::size_t>(k)];
        C dp;
        C p = eval(zk, dp);
        if (p == C(0)) continue;
        C ratio = dp == C(0) ? C(1e-8) : p / dp;
        C sum = 0;
        for (int j = 0; j < n; ++j)
          if (j != k) {
            C diff = zk - z[static_cast<std::size_t>(j)];
            if (diff != C(0)) sum += 1.0 / diff;
          }
        C denom = 1.0 - ratio * sum;
        C step = denom == C(0) ? ratio : ratio / denom;
        zk -= step;
        last_step = std::max(last_step, std::abs(step) / std::max(1.0, std::abs(zk)));
      }
      if (last_step < kTolerance) break;
    }
    if (last_step < best_step) {
      best_step = last_step;
      best = z;
    }
    if (last_step < kTolerance) break;
  }
  return best;
}

inline std::vector<double> monic_doubles(const QPoly& f) {
  QPoly m = f.monic();
  std::vector<double> c;
  for (const auto& a : m.coefficients()) c.push_back(a.to_double());
  return c;
}

/// Integer coefficients of the primitive integer multiple of f.
inline std::vector<mpz_class> primitive_integer_form(const QPoly& f) {
  mpz_class l = 1;
  for (const auto& a : f.coefficients()) {
    mpz_class d = a.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> v;
  mpz_class g = 0;
  for (const auto& a : f.coefficients()) {
    mpz_class x = a.numerator() * (l / a.denominator());
    v.push_back(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g != 0)
    for (auto& x : v) x /= g;
  if (!v.empty() && v.back() < 0)
    for (auto& x : v) x = -x;
  return v;
}

/// Positive divisors by trial division; nullopt when |x| exceeds 1e12.
inline std::optional<std::vector<mpz_class>> divisors(mpz_class x) {
  x = abs(x);
  if (x == 0 || x > mpz_class("1000000000000")) return std::nullopt;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= x; ++d) {
    if (x % d == 0) {
      small.push_back(d);
      if (d * d != x) large.push_back(x / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline bool is_rational_square(const Rational& q) {
  if (q.sign() < 0) return false;
  return mpz_perfect_square_p(q.numerator().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.denominator().get_mpz_t()) != 0;
}

/// Sign-change interval around x, bisected exactly until narrower than
/// 1/(2 bound^2), then the unique fraction with denominator <= bound there.
inline std::optional<Rational> refine_rational_root(const QPoly& s, double x, const mpz_class& bound) {
  double delta = 1e-6 * std::max(1.0, std::abs(x));
  Rational lo = Rational::from_double(x - delta), hi = Rational::from_double(x + delta);
  int slo = s(lo).sign(), shi = s(hi).sign();
  if (slo == 0) return lo;
  if (shi == 0) return hi;
  if (slo == shi) return std::nullopt;
  Rational target(mpz_class(1), 2 * bound * bound);
  while (hi - lo >= target) {
    Rational mid = (lo + hi) / Rational(2);
    int sm = s(mid).sign();
    if (sm == 0) return mid;
    if (sm == slo) lo = mid;
    else hi = mid;
  }
  Rational cand = best_approximation((lo + hi) / Rational(2), bound);
  if (s(cand).is_zero()) return cand;
  return std::nullopt;
}

}  // namespace detail

struct RationalRoot {
  Rational root;
  unsigned multiplicity;
  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// Rational roots of a squarefree f, ascending. Numeric candidates are lifted
/// by bounded reconstruction and accepted only on exact evaluation; the
/// root-free residual is then certified (Sturm count or divisor search).
inline std::vector<Rational> squarefree_rational_roots(QPoly s) {
  std::vector<Rational> found;
  if (s.degree() <= 0) return found;
  const RationalField k;
  if (s.coeff(0).is_zero()) {
    found.emplace_back(0);
    s = s / QPoly::x(k);
  }
  auto prim = detail::primitive_integer_form(s);
  mpz_class an = abs(prim.back());
  auto add = [&](const Rational& r) {
    for (const auto& f : found)
      if (f == r) return;
    found.push_back(r);
  };
  if (s.degree() > 0) {
    auto numeric = detail::aberth_roots(detail::monic_doubles(s));
    for (const auto& z : numeric) {
      if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
      if (!std::isfinite(z.real())) continue;
      Rational cand = best_approximation(Rational::from_double(z.real()), an);
      if (s(cand).is_zero()) {
        add(cand);
        continue;
      }
      if (auto r = detail::refine_rational_root(s, z.real(), an)) add(*r);
    }
  }
  QPoly residual = s;
  for (const auto& r : found)
    if (!r.is_zero()) residual = residual / QPoly::linear(k, r);

  // certify that the residual has no rational root
  if (residual.degree() > 0 && sturm_count(residual) > 0) {
    auto rp = detail::primitive_integer_form(residual);
    auto dn = detail::divisors(rp.front());
    auto dd = detail::divisors(rp.back());
    if (!dn || !dd || dn->size() * dd->size() * 2 > 20000)
      throw Error(ErrorKind::RootSearchExhausted, "uncertified residual factor " + residual.to_string());
    for (const auto& a : *dn)
      for (const auto& b : *dd)
        for (int sg : {1, -1}) {
          Rational c(sg * a, b);
          if (residual(c).is_zero()) {
            add(c);
            residual = residual / QPoly::linear(k, c);
          }
        }
  }
  std::sort(found.begin(), found.end());
  return found;
}

/// All rational roots of f with exact multiplicities, ascending.
inline std::vector<RationalRoot> rational_roots(const QPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "rational_roots of 0");
  auto sqf = yun_squarefree(f);
  std::vector<RationalRoot> out;
  for (const auto& part : sqf.parts)
    for (const auto& r : squarefree_rational_roots(part.factor)) out.push_back({r, part.exponent});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
  return out;
}

/// Outcome of splitting a squarefree, rational-root-free polynomial into
/// monic quadratics irreducible over Q.
struct QuadraticSplit {
  bool ok = false;
  std::vector<QPoly> factors;
  /// On failure: true when a degree >= 3 irreducible factor is proven (odd degree).
  bool proven = false;
  std::string detail;
};

inline QuadraticSplit quadratic_split(const QPoly& f) {
  if (f.is_zero() || f.degree() < 1) throw Error(ErrorKind::InvalidArgument, "quadratic_split needs deg >= 1");
  if (!is_squarefree(f)) throw Error(ErrorKind::NotSquarefree, f.to_string());
  const RationalField k;
  QuadraticSplit out;
  if (f.degree() % 2 == 1) {
    out.proven = true;
    out.detail = "odd degree without rational roots: irreducible factor of degree >= 3 in " + f.to_string();
    return out;
  }
  if (f.degree() == 2) {
    if (detail::is_rational_square(quadratic_discriminant(f)))
      throw Error(ErrorKind::InvalidArgument, "quadratic has rational roots: " + f.to_string());
    out.ok = true;
    out.factors.push_back(f.monic());
    return out;
  }
  auto prim = detail::primitive_integer_form(f);
  mpz_class an = abs(prim.back());
  auto z = detail::aberth_roots(detail::monic_doubles(f));
  const std::size_t m = z.size();
  std::vector<bool> used(m, false);
  QPoly rest = f.monic();

  auto try_pair = [&](std::size_t i, std::size_t j) {
    std::complex<double> s = z[i] + z[j], p = z[i] * z[j];
    if (!std::isfinite(s.real()) || !std::isfinite(p.real())) return false;
    Rational sr = best_approximation(Rational::from_double(s.real()), an);
    Rational pr = best_approximation(Rational::from_double(p.real()), an);
    QPoly q(k, {pr, -sr, Rational(1)});
    if (detail::is_rational_square(quadratic_discriminant(q))) return false;
    auto [quo, rem] = poly_divrem(rest, q);
    if (!rem.is_zero()) return false;
    rest = quo;
    out.factors.push_back(q);
    used[i] = used[j] = true;
    return true;
  };

  auto is_real = [&](std::size_t i) { return std::abs(z[i].imag()) <= 1e-6 * std::max(1.0, std::abs(z[i])); };
  // conjugate pairs first
  for (std::size_t i = 0; i < m; ++i) {
    if (used[i] || is_real(i) || z[i].imag() < 0) continue;
    std::size_t partner = m;
    double bestd = INFINITY;
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j] || j == i || is_real(j) || z[j].imag() > 0) continue;
      double d = std::abs(z[j] - std::conj(z[i]));
      if (d < bestd) { bestd = d; partner = j; }
    }
    if (partner < m) try_pair(i, partner);
  }
  // real roots: any pair whose sum and product are rational
  for (std::size_t i = 0; i < m; ++i) {
    if (used[i] || !is_real(i)) continue;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (used[j] || !is_real(j)) continue;
      if (try_pair(i, j)) break;
    }
  }
  if (rest.degree() > 0) {
    out.factors.clear();
    out.detail = "no certified quadratic split; uncertified residual " + rest.to_string();
    return out;
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const QPoly& a, const QPoly& b) {
    for (std::size_t i = 0; i < 2; ++i)
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
  });
  out.ok = true;
  return out;
}

}  // namespace xform
