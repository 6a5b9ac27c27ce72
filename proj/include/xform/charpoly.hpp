#pragma once

#include <algorithm>
#include <vector>

#include "xform/matrix.hpp"

namespace xform {

/// det(X I - A) via Berkowitz's division-free recurrence: the same code is
/// exact over Q and over F_p.
template <Field K>
Polynomial<K> charpoly(const Matrix<K>& a) {
  if (!a.is_square()) throw Error(ErrorKind::SizeMismatch, "charpoly of a non-square matrix");
  const K& f = a.field();
  using T = typename K::value_type;
  const std::size_t n = a.size();
  if (n == 0) return Polynomial<K>::one(f);
  // coefficients highest degree first
  std::vector<T> vect{f.one(), -a(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<T> c(r + 2, f.zero());
    c[0] = f.one();
    c[1] = -a(r, r);
    std::vector<T> w(r);
    for (std::size_t i = 0; i < r; ++i) w[i] = a(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      T dot = f.zero();
      for (std::size_t j = 0; j < r; ++j) dot = dot + a(r, j) * w[j];
      c[k] = -dot;
      if (k == r + 1) break;
      std::vector<T> next(r, f.zero());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] = next[i] + a(i, j) * w[j];
      w = std::move(next);
    }
    std::vector<T> out(r + 2, f.zero());
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) out[i] = out[i] + c[i - j] * vect[j];
    vect = std::move(out);
  }
  std::reverse(vect.begin(), vect.end());
  return Polynomial<K>(f, std::move(vect));
}

}  // namespace xform
