#pragma once

#include <vector>

#include "xform/matrixcore.hpp"
#include "xform/property_p.hpp"
#include "xform/roots.hpp"

namespace xform {

/// A is X-formable over the view iff its minimal polynomial has property (P).
template <Field K>
PropertyPReport classify_xformable(const Matrix<K>& a, View view) {
  if (!a.is_square() || a.size() == 0) throw Error(ErrorKind::SizeMismatch, "classify needs a non-empty square matrix");
  return verifies_property_p(minpoly(a), view);
}

/// Bases (as column matrices) of Ker f_i(A) for a coprime factorization
/// prod f_i = minpoly(A). The kernels are A-invariant and their direct sum
/// is the whole space.
template <Field K>
std::vector<Matrix<K>> kernel_lemma_split(const Matrix<K>& a, const std::vector<Polynomial<K>>& factors) {
  const K& f = a.field();
  Polynomial<K> prod = Polynomial<K>::one(f);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (!coprime(factors[i], factors[j]))
        throw Error(ErrorKind::NotCoprime, factors[i].to_string() + " and " + factors[j].to_string());
    prod = prod * factors[i];
  }
  Polynomial<K> pi = minpoly(a);
  if (!(prod.monic() == pi))
    throw Error(ErrorKind::NotMinpolyFactorization, "product " + prod.to_string() + " != minpoly " + pi.to_string());
  std::vector<Matrix<K>> out;
  for (const auto& g : factors) {
    auto basis = nullspace(evaluate(g, a));
    out.push_back(Matrix<K>::from_columns(f, a.size(), basis));
  }
  return out;
}

/// One diagonal block of a block-diagonal change of basis: its size and the
/// basis vectors spanning it, in the order that realizes the block.
template <Field K>
struct SmallBlock {
  std::size_t size;
  std::vector<typename Matrix<K>::Vector> vectors;
};

namespace detail {

template <Field K>
bool extends_span(const K& f, std::size_t n, const std::vector<typename Matrix<K>::Vector>& span,
                  const typename Matrix<K>::Vector& v) {
  auto cols = span;
  std::size_t before = span.empty() ? 0 : rank(Matrix<K>::from_columns(f, n, cols));
  cols.push_back(v);
  return rank(Matrix<K>::from_columns(f, n, cols)) > before;
}

template <Field K>
typename Matrix<K>::Vector unit_vector(const K& f, std::size_t n, std::size_t i) {
  typename Matrix<K>::Vector e(n, f.zero());
  e[i] = f.one();
  return e;
}

}  // namespace detail

/// Jordan basis for a restriction with minimal polynomial (X - lambda)^e,
/// e in {1, 2}. Chains (N v, v) with N = A - lambda I are built from the
/// lowest-index standard vectors outside Ker N; Ker N is then completed
/// with 1-blocks.
template <Field K>
std::vector<SmallBlock<K>> jordan_chains_small(const Matrix<K>& a, const typename K::value_type& lambda, unsigned e) {
  const K& f = a.field();
  const std::size_t m = a.size();
  if (e < 1 || e > 2) throw Error(ErrorKind::WrongMinpoly, "exponent must be 1 or 2");
  Polynomial<K> expected = Polynomial<K>::linear(f, lambda).pow(e);
  Polynomial<K> pi = minpoly(a);
  if (!(pi == expected)) throw Error(ErrorKind::WrongMinpoly, "minpoly " + pi.to_string() + " != " + expected.to_string());
  std::vector<SmallBlock<K>> out;
  if (e == 1) {
    for (std::size_t i = 0; i < m; ++i) out.push_back({1, {detail::unit_vector(f, m, i)}});
    return out;
  }
  Matrix<K> n = a - Matrix<K>::scalar(f, m, lambda);
  auto ker = nullspace(n);
  auto span = ker;
  std::vector<typename Matrix<K>::Vector> tops;
  for (std::size_t i = 0; i < m && span.size() < m; ++i) {
    auto ei = detail::unit_vector(f, m, i);
    if (detail::extends_span(f, m, span, ei)) {
      span.push_back(ei);
      tops.push_back(ei);
    }
  }
  std::vector<typename Matrix<K>::Vector> heads;
  for (const auto& v : tops) {
    auto nv = n * v;
    heads.push_back(nv);
    out.push_back({2, {nv, v}});
  }
  for (const auto& u : ker) {
    if (detail::extends_span(f, m, heads, u)) {
      heads.push_back(u);
      out.push_back({1, {u}});
    }
  }
  return out;
}

template <Field K>
bool irreducible_quadratic(const Polynomial<K>& q) {
  if (q.degree() != 2) return false;
  if constexpr (K::is_prime_field) {
    for (int v = 0; v < q.field().p; ++v)
      if (q(Fp(v, q.field().p)).is_zero()) return false;
    return true;
  } else {
    return !detail::is_rational_square(quadratic_discriminant(q));
  }
}

/// Cyclic pairs (v, Av) for a restriction whose minimal polynomial is an
/// irreducible quadratic q; each pair spans a copy of C(q). Greedy over the
/// standard basis: v is taken whenever it lies outside the pairs so far.
template <Field K>
std::vector<SmallBlock<K>> quad_cyclic_split(const Matrix<K>& a, const Polynomial<K>& q) {
  const K& f = a.field();
  const std::size_t m = a.size();
  if (!q.is_monic() || !irreducible_quadratic(q))
    throw Error(ErrorKind::ReducibleQuadratic, q.to_string() + " is not an irreducible monic quadratic");
  Polynomial<K> pi = minpoly(a);
  if (!(pi == q)) throw Error(ErrorKind::WrongMinpoly, "minpoly " + pi.to_string() + " != " + q.to_string());
  std::vector<SmallBlock<K>> out;
  std::vector<typename Matrix<K>::Vector> span;
  for (std::size_t i = 0; i < m && span.size() < m; ++i) {
    auto v = detail::unit_vector(f, m, i);
    if (!detail::extends_span(f, m, span, v)) continue;
    auto av = a * v;
    span.push_back(v);
    span.push_back(av);
    out.push_back({2, {v, av}});
  }
  return out;
}

}  // namespace xform
