#pragma once

#include <vector>

#include "xform/matrix.hpp"

namespace xform {

/// Basis reordering that turns a block-diagonal matrix with blocks on the
/// pairs (f1, f2), (f3, f4), ... (and a trailing 1-block for odd n) into an
/// X-shape matrix: odd indices ascending, then even indices descending.
/// Returned 1-based, e.g. n = 4 gives (1, 3, 4, 2).
inline std::vector<std::size_t> lemma21_permutation(std::size_t n) {
  std::vector<std::size_t> perm;
  for (std::size_t i = 1; i <= n; i += 2) perm.push_back(i);
  for (std::size_t i = n - n % 2; i >= 2; i -= 2) perm.push_back(i);
  return perm;
}

/// Permutation matrix Q with Q^T D Q in X-shape for block-diagonal D.
template <Field K>
Matrix<K> lemma21_matrix(const K& field, std::size_t n) {
  auto perm = lemma21_permutation(n);
  for (auto& p : perm) --p;
  return permutation_matrix(field, perm);
}

}  // namespace xform
