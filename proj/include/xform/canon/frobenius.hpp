#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "xform/matrixcore.hpp"

namespace xform {

/// Invariant factors R_1 | R_2 | ... | R_t and T with
/// T^-1 A T = diag(C(R_1), ..., C(R_t)).
template <Field K>
struct FrobeniusForm {
  std::vector<Polynomial<K>> invariant_factors;
  Matrix<K> transform;

  Matrix<K> normal_form() const {
    std::vector<Matrix<K>> blocks;
    for (const auto& r : invariant_factors) blocks.push_back(companion(r));
    return block_diagonal(transform.field(), blocks);
  }
};

namespace detail {

/// (a', b') with a' | a, b' | b, gcd(a', b') = 1 and a' b' = lcm(a, b).
/// Shared primes stay with a unless b carries the strictly higher power.
template <Field K>
std::pair<Polynomial<K>, Polynomial<K>> lcm_coprime_split(const Polynomial<K>& a, const Polynomial<K>& b) {
  auto coprime_part = [](Polynomial<K> x, const Polynomial<K>& y) {
    while (true) {
      auto g = poly_gcd(x, y);
      if (g.degree() <= 0) return x;
      x = x / g;
    }
  };
  Polynomial<K> a_only = coprime_part(a, b), b_only = coprime_part(b, a);
  Polynomial<K> a_sh = a / a_only, b_sh = b / b_only;
  Polynomial<K> d = poly_gcd(a_sh, b_sh);
  Polynomial<K> b_excess = b_sh / d;
  Polynomial<K> b_high = part_supported_on(b_sh, b_excess);
  Polynomial<K> a_low = part_supported_on(a_sh, b_excess);
  return {(a_only * (a_sh / a_low)).monic(), (b_only * b_high).monic()};
}

/// A vector whose annihilator is the minimal polynomial of `a`, built by
/// merging standard basis vectors in index order.
template <Field K>
std::pair<typename Matrix<K>::Vector, Polynomial<K>> max_krylov_vector(const Matrix<K>& a) {
  const K& f = a.field();
  const std::size_t m = a.size();
  typename Matrix<K>::Vector v(m, f.zero());
  v[0] = f.one();
  Polynomial<K> mu = vector_minpoly(a, v);
  for (std::size_t i = 1; i < m && mu.degree() < static_cast<int>(m); ++i) {
    typename Matrix<K>::Vector w(m, f.zero());
    w[i] = f.one();
    Polynomial<K> nu = vector_minpoly(a, w);
    if (divides(nu, mu)) continue;
    auto [ap, bp] = lcm_coprime_split(mu, nu);
    auto u = evaluate(mu / ap, a) * v;
    auto z = evaluate(nu / bp, a) * w;
    for (std::size_t k = 0; k < m; ++k) u[k] = u[k] + z[k];
    v = std::move(u);
    mu = ap * bp;
  }
  return {v, mu};
}

template <Field K>
void frobenius_rec(const Matrix<K>& a, const Matrix<K>& lift, std::vector<std::pair<Polynomial<K>, Matrix<K>>>& out) {
  const K& f = a.field();
  const std::size_t m = a.size();
  if (m == 0) return;
  auto [v, mu] = max_krylov_vector(a);
  const std::size_t d = static_cast<std::size_t>(mu.degree());
  std::vector<typename Matrix<K>::Vector> krylov{v};
  for (std::size_t i = 1; i < d; ++i) krylov.push_back(a * krylov.back());
  Matrix<K> kmat = Matrix<K>::from_columns(f, m, krylov);
  out.emplace_back(mu, lift * kmat);
  if (d == m) return;

  // functional phi with phi(A^i v) = 0 for i < d-1 and phi(A^{d-1} v) = 1
  Matrix<K> sys(f, d, m + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < m; ++j) sys(i, j) = kmat(j, i);
    sys(i, m) = i + 1 == d ? f.one() : f.zero();
  }
  auto [red, pivots] = rref(std::move(sys));
  typename Matrix<K>::Vector phi(m, f.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) phi[pivots[i]] = red(i, m);

  // invariant complement: {x : phi(A^i x) = 0, i < d}
  Matrix<K> cons(f, d, m);
  typename Matrix<K>::Vector row = phi;
  Matrix<K> at = a.transpose();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < m; ++j) cons(i, j) = row[j];
    row = at * row;
  }
  Matrix<K> w = Matrix<K>::from_columns(f, m, nullspace(cons));
  frobenius_rec(restrict_to(a, w), lift * w, out);
}

}  // namespace detail

/// Rational canonical form by repeated extraction of a maximal cyclic
/// subspace together with an invariant complement.
template <Field K>
FrobeniusForm<K> frobenius_form(const Matrix<K>& a) {
  if (!a.is_square()) throw Error(ErrorKind::SizeMismatch, "frobenius_form of a non-square matrix");
  const K& f = a.field();
  std::vector<std::pair<Polynomial<K>, Matrix<K>>> parts;
  detail::frobenius_rec(a, Matrix<K>::identity(f, a.size()), parts);
  std::reverse(parts.begin(), parts.end());
  FrobeniusForm<K> out{{}, Matrix<K>(f, a.size(), a.size())};
  std::size_t col = 0;
  for (auto& [r, basis] : parts) {
    out.invariant_factors.push_back(r);
    for (std::size_t j = 0; j < basis.cols(); ++j, ++col)
      for (std::size_t i = 0; i < basis.rows(); ++i) out.transform(i, col) = basis(i, j);
  }
  return out;
}

/// Exact re-check of every FrobeniusForm invariant against `a`.
template <Field K>
bool verify_frobenius(const Matrix<K>& a, const FrobeniusForm<K>& ff) {
  const auto& r = ff.invariant_factors;
  if (r.empty()) return a.size() == 0;
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    if (!divides(r[i], r[i + 1])) return false;
  Polynomial<K> prod = Polynomial<K>::one(a.field());
  for (const auto& x : r) prod = prod * x;
  if (!(prod == charpoly(a)) || !(r.back() == minpoly(a))) return false;
  if (!is_invertible(ff.transform)) return false;
  return a * ff.transform == ff.transform * ff.normal_form();
}

}  // namespace xform
