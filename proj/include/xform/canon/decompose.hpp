#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xform/canon/classify.hpp"
#include "xform/canon/lemma21.hpp"
#include "xform/fp_factor.hpp"
#include "xform/roots.hpp"

namespace xform {

/// Proof object for A = P X P^-1 with X in X-shape.
template <Field K>
struct XFormCertificate {
  Matrix<K> p;
  Matrix<K> x;
  bool a_reconstructed = false;
  bool x_shape_ok = false;

  /// Recomputes both flags against `a` from scratch.
  bool verify(const Matrix<K>& a) const {
    return is_invertible(p) && p * x == a * p && is_x_shape(x);
  }
};

enum class DecomposeVerdict { certified, not_xformable, not_constructible_exactly };

inline std::string_view verdict_name(DecomposeVerdict v) {
  switch (v) {
    case DecomposeVerdict::certified: return "certified";
    case DecomposeVerdict::not_xformable: return "not_xformable";
    case DecomposeVerdict::not_constructible_exactly: return "not_constructible_exactly";
  }
  return "?";
}

template <Field K>
struct Decomposition {
  DecomposeVerdict verdict;
  PropertyPReport report;
  std::optional<XFormCertificate<K>> certificate;
  std::string detail;
};

namespace detail {

/// A primary component of the minimal polynomial: (X - lambda)^e or an
/// irreducible quadratic q.
template <Field K>
struct Primary {
  Polynomial<K> factor;
  bool linear;
  typename K::value_type lambda;
  unsigned exponent;
};

struct Unconstructible {
  std::string detail;
};

inline std::vector<Primary<RationalField>> primary_components(const QPoly& pi, std::optional<Unconstructible>& fail) {
  const RationalField k;
  std::vector<Primary<RationalField>> out;
  for (const auto& part : yun_squarefree(pi).parts) {
    std::vector<Rational> roots;
    try {
      roots = squarefree_rational_roots(part.factor);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::RootSearchExhausted) throw;
      fail = Unconstructible{e.detail()};
      return {};
    }
    QPoly residual = part.factor;
    for (const auto& r : roots) {
      out.push_back({QPoly::linear(k, r).pow(part.exponent), true, r, part.exponent});
      residual = residual / QPoly::linear(k, r);
    }
    if (residual.degree() <= 0) continue;
    if (part.exponent == 2) {
      fail = Unconstructible{"doubled factor " + residual.to_string() +
                             " has no rational roots; an X-form over the view exists but needs irrational entries"};
      return {};
    }
    auto split = quadratic_split(residual);
    if (!split.ok) {
      fail = Unconstructible{split.detail};
      return {};
    }
    for (auto& q : split.factors) out.push_back({q, false, Rational(0), 1});
  }
  return out;
}

inline std::vector<Primary<PrimeField>> primary_components(const FpPoly& pi, std::optional<Unconstructible>&) {
  std::vector<Primary<PrimeField>> out;
  const PrimeField& k = pi.field();
  for (const auto& q : fp_factor(pi)) {
    if (q.factor.degree() == 1)
      out.push_back({q.factor.pow(q.exponent), true, -q.factor.coeff(0), q.exponent});
    else
      out.push_back({q.factor, false, k.zero(), q.exponent});
  }
  return out;
}

}  // namespace detail

/// Constructive direction of the minimal-polynomial criterion: kernel split
/// along the primary components, Jordan chains of length <= 2 and cyclic
/// pairs for irreducible quadratics, then the odd-ascending/even-descending
/// reordering that turns the 2x2 blocks into an X.
template <Field K>
Decomposition<K> xform_decompose(const Matrix<K>& a, View view) {
  const K& f = a.field();
  const std::size_t n = a.size();
  PropertyPReport report = classify_xformable(a, view);
  if (!report.holds) return {DecomposeVerdict::not_xformable, report, std::nullopt, report.violation->detail};

  Polynomial<K> pi = minpoly(a);
  std::optional<detail::Unconstructible> fail;
  auto comps = detail::primary_components(pi, fail);
  if (fail) return {DecomposeVerdict::not_constructible_exactly, report, std::nullopt, fail->detail};

  std::vector<Polynomial<K>> factors;
  for (const auto& c : comps) factors.push_back(c.factor);
  auto bases = kernel_lemma_split(a, factors);

  std::vector<typename Matrix<K>::Vector> pairs, singles;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Matrix<K>& basis = bases[c];
    Matrix<K> local = restrict_to(a, basis);
    auto blocks = comps[c].linear ? jordan_chains_small(local, comps[c].lambda, comps[c].exponent)
                                  : quad_cyclic_split(local, comps[c].factor);
    for (const auto& b : blocks) {
      auto& dst = b.size == 2 ? pairs : singles;
      for (const auto& v : b.vectors) dst.push_back(basis * v);
    }
  }
  std::vector<typename Matrix<K>::Vector> ordered = pairs;
  ordered.insert(ordered.end(), singles.begin(), singles.end());
  Matrix<K> blockbasis = Matrix<K>::from_columns(f, n, ordered);
  Matrix<K> p = blockbasis * lemma21_matrix(f, n);
  Matrix<K> x = mat_inverse(p) * a * p;

  XFormCertificate<K> cert{p, x, p * x * mat_inverse(p) == a, is_x_shape(x)};
  return {DecomposeVerdict::certified, report, std::move(cert), ""};
}

}  // namespace xform
