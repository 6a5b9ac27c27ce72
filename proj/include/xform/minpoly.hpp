#pragma once

#include <vector>

#include "xform/charpoly.hpp"

namespace xform {

/// Minimal annihilator of v under A: the monic generator of
/// {p : p(A) v = 0}, read off the first linear dependency in v, Av, A^2 v, ...
template <Field K>
Polynomial<K> vector_minpoly(const Matrix<K>& a, const typename Matrix<K>::Vector& v) {
  using T = typename K::value_type;
  using Vec = typename Matrix<K>::Vector;
  const K& f = a.field();
  const std::size_t n = a.size();
  if (v.size() != n) throw Error(ErrorKind::SizeMismatch, "vector length");
  struct Row {
    Vec vec;                 // reduced vector, pivot entry 1
    std::size_t pivot;
    std::vector<T> coef;     // vec = sum coef[i] A^i v
  };
  std::vector<Row> basis;
  Vec w = v;
  for (std::size_t k = 0; k <= n; ++k) {
    Vec r = w;
    std::vector<T> coef(k + 1, f.zero());
    coef[k] = f.one();
    for (const auto& b : basis) {
      if (r[b.pivot].is_zero()) continue;
      T lam = r[b.pivot];
      for (std::size_t i = 0; i < n; ++i) r[i] = r[i] - lam * b.vec[i];
      for (std::size_t i = 0; i < b.coef.size(); ++i) coef[i] = coef[i] - lam * b.coef[i];
    }
    std::size_t piv = 0;
    while (piv < n && r[piv].is_zero()) ++piv;
    if (piv == n) return Polynomial<K>(f, std::move(coef));
    T inv = f.one() / r[piv];
    for (auto& x : r) x = x * inv;
    for (auto& x : coef) x = x * inv;
    basis.push_back({std::move(r), piv, std::move(coef)});
    w = a * w;
  }
  throw Error(ErrorKind::InvalidArgument, "Krylov sequence did not terminate");
}

/// lcm over the standard basis of the vector annihilators.
template <Field K>
Polynomial<K> minpoly(const Matrix<K>& a) {
  if (!a.is_square()) throw Error(ErrorKind::SizeMismatch, "minpoly of a non-square matrix");
  const K& f = a.field();
  const std::size_t n = a.size();
  Polynomial<K> m = Polynomial<K>::one(f);
  for (std::size_t i = 0; i < n; ++i) {
    typename Matrix<K>::Vector e(n, f.zero());
    e[i] = f.one();
    m = poly_lcm(m, vector_minpoly(a, e));
    if (m.degree() == static_cast<int>(n)) break;
  }
  return m;
}

}  // namespace xform
