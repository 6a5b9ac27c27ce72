#pragma once

// Seeded random inputs for property tests.

#include <random>
#include <vector>

#include "xform/xform.hpp"

namespace gen {

using namespace xform;
using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational rational(Rng& rng, long num = 9, long den = 4) {
  return Rational(uniform(rng, -num, num), uniform(rng, 1, den));
}

template <Field K>
typename K::value_type scalar(const K& k, Rng& rng) {
  if constexpr (std::is_same_v<K, RationalField>) {
    return rational(rng);
  } else {
    return k.from_int(uniform(rng, 0, k.p - 1));
  }
}

template <Field K>
Matrix<K> matrix(const K& k, std::size_t n, Rng& rng) {
  Matrix<K> m(k, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = scalar(k, rng);
  return m;
}

inline QMatrix integer_matrix(std::size_t n, Rng& rng, long range = 5) {
  QMatrix m(RationalField{}, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(uniform(rng, -range, range));
  return m;
}

/// L * U * Perm with unit triangular factors and small integer entries:
/// determinant +-1, so conjugation keeps denominators small.
template <Field K>
Matrix<K> unimodular(const K& k, std::size_t n, Rng& rng) {
  Matrix<K> l = Matrix<K>::identity(k, n), u = Matrix<K>::identity(k, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = k.from_int(uniform(rng, -2, 2));
      u(j, i) = k.from_int(uniform(rng, -2, 2));
    }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return l * u * permutation_matrix(k, perm);
}

template <Field K>
Matrix<K> xshape(const K& k, std::size_t n, Rng& rng) {
  Matrix<K> m(k, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = scalar(k, rng);
    m(i, n - 1 - i) = scalar(k, rng);
  }
  return m;
}

template <Field K>
typename K::value_type small_eigen(const K& k, Rng& rng) {
  return k.from_int(uniform(rng, -2, 2));
}

/// Blocks of size <= 2: Jordan J1/J2 with small eigenvalues and companions
/// of random monic quadratics.
template <Field K>
BlockSpec<K> small_block_spec(const K& k, std::size_t n, Rng& rng) {
  BlockSpec<K> spec{k, {}, std::nullopt};
  std::size_t used = 0;
  while (used < n) {
    std::size_t room = n - used;
    long kind = uniform(rng, 0, room >= 2 ? 2 : 0);
    if (kind == 0) {
      spec.blocks.push_back(JordanBlock<K>{small_eigen(k, rng), 1});
      used += 1;
    } else if (kind == 1) {
      spec.blocks.push_back(JordanBlock<K>{small_eigen(k, rng), 2});
      used += 2;
    } else {
      Polynomial<K> q(k, {k.from_int(uniform(rng, -3, 3)), k.from_int(uniform(rng, -2, 2)), k.one()});
      spec.blocks.push_back(CompanionBlock<K>{q});
      used += 2;
    }
  }
  spec.conjugator = unimodular(k, n, rng);
  return spec;
}

/// A spec containing a Jordan block of size 3 plus random small blocks.
template <Field K>
BlockSpec<K> jordan3_spec(const K& k, std::size_t n, Rng& rng) {
  BlockSpec<K> rest = small_block_spec(k, n - 3, rng);
  BlockSpec<K> spec{k, {JordanBlock<K>{small_eigen(k, rng), 3}}, std::nullopt};
  spec.blocks.insert(spec.blocks.end(), rest.blocks.begin(), rest.blocks.end());
  std::shuffle(spec.blocks.begin(), spec.blocks.end(), rng);
  spec.conjugator = unimodular(k, n, rng);
  return spec;
}

}  // namespace gen
