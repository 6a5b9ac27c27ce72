#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xform/polynomial.hpp"

namespace xform {

/// Dense exact matrix, row-major. Most operations expect square input; a
/// few (bases, Krylov blocks) use rectangular shapes.
template <Field K>
class Matrix {
 public:
  using value_type = typename K::value_type;
  using Vector = std::vector<value_type>;

  Matrix(K field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

  Matrix(K field, const std::vector<std::vector<value_type>>& rows) : field_(std::move(field)), rows_(rows.size()) {
    cols_ = rows.empty() ? 0 : rows.front().size();
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorKind::SizeMismatch, "ragged rows");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  Matrix(K field, std::initializer_list<std::initializer_list<long>> rows) : field_(std::move(field)), rows_(rows.size()) {
    cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorKind::SizeMismatch, "ragged rows");
      for (long v : r) a_.push_back(field_.from_int(v));
    }
  }

  static Matrix identity(const K& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }
  static Matrix scalar(const K& field, std::size_t n, const value_type& s) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
  }
  static Matrix diagonal(const K& field, std::span<const value_type> d) {
    Matrix m(field, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  /// Columns given as vectors of equal length.
  static Matrix from_columns(const K& field, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error(ErrorKind::SizeMismatch, "column length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const K& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return rows_; }
  bool is_square() const { return rows_ == cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vector column(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  Vector row(std::size_t i) const { return Vector(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_)); }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const value_type& x) { return x.is_zero(); });
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  Vector operator*(const Vector& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::SizeMismatch, "matrix-vector size");
    Vector out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      value_type acc = field_.zero();
      for (std::size_t j = 0; j < cols_; ++j)
        if (!v[j].is_zero()) acc = acc + (*this)(i, j) * v[j];
      out[i] = acc;
    }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = c.a_[i] + b.a_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = c.a_[i] - b.a_[i];
    return c;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    if (a.cols_ != b.rows_) throw Error(ErrorKind::SizeMismatch, "product of incompatible shapes");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + x * b(k, j);
      }
    return c;
  }
  friend Matrix operator*(const value_type& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.a_) x = s * x;
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j).to_string();
      os << "]";
    }
    return os << "]";
  }

 private:
  void check_same_shape(const Matrix& b) const {
    require_same_field(field_, b.field_);
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorKind::SizeMismatch, "shape mismatch");
  }

  K field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<value_type> a_;
};

using QMatrix = Matrix<RationalField>;
using FpMatrix = Matrix<PrimeField>;

inline QMatrix qmatrix(std::initializer_list<std::initializer_list<long>> rows) { return QMatrix(RationalField{}, rows); }
inline FpMatrix fpmatrix(int p, std::initializer_list<std::initializer_list<long>> rows) { return FpMatrix(PrimeField(p), rows); }

enum class MatOp { add, mul };

template <Field K>
Matrix<K> mat_arith(const Matrix<K>& a, const Matrix<K>& b, MatOp op) {
  require_same_field(a.field(), b.field());
  if (!a.is_square() || !b.is_square() || a.size() != b.size())
    throw Error(ErrorKind::SizeMismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  return op == MatOp::add ? a + b : a * b;
}

template <Field K>
struct RowEchelon {
  Matrix<K> reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <Field K>
RowEchelon<K> rref(Matrix<K> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const K& f = m.field();
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    auto inv = f.one() / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field K>
std::size_t rank(const Matrix<K>& m) { return rref(m).pivots.size(); }

/// Basis of {v : M v = 0}; one vector per free column, that entry set to 1.
template <Field K>
std::vector<typename Matrix<K>::Vector> nullspace(const Matrix<K>& m) {
  auto [red, pivots] = rref(m);
  const K& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<typename Matrix<K>::Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    typename Matrix<K>::Vector v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field K>
Matrix<K> mat_inverse(const Matrix<K>& a) {
  if (!a.is_square()) throw Error(ErrorKind::SizeMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.size();
  Matrix<K> aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = a.field().one();
  }
  auto [red, pivots] = rref(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorKind::Singular, "matrix is singular");
  return red.block(0, n, n, n);
}

template <Field K>
bool is_invertible(const Matrix<K>& a) { return a.is_square() && rank(a) == a.size(); }

/// P * B * P^-1
template <Field K>
Matrix<K> conjugate(const Matrix<K>& p, const Matrix<K>& b) {
  if (!p.is_square() || !b.is_square() || p.size() != b.size()) throw Error(ErrorKind::SizeMismatch, "conjugate sizes");
  return p * b * mat_inverse(p);
}

/// Nonzero entries only on the diagonal and the anti-diagonal.
template <Field K>
bool is_x_shape(const Matrix<K>& a) {
  if (!a.is_square()) return false;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && j != n - 1 - i && !a(i, j).is_zero()) return false;
  return true;
}

/// Entrywise max |a_ij|; rational matrices only.
template <Field K>
Rational inf_norm(const Matrix<K>& a) {
  if constexpr (K::is_prime_field) {
    throw Error(ErrorKind::FieldMismatch, "inf_norm is defined for rational matrices only");
  } else {
    Rational m(0);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, abs(a(i, j)));
    return m;
  }
}

/// Frobenius companion matrix: subdiagonal ones, last column -a_0..-a_{d-1}.
template <Field K>
Matrix<K> companion(const Polynomial<K>& p) {
  if (p.degree() < 1 || !p.is_monic()) throw Error(ErrorKind::InvalidArgument, "companion of non-monic or constant " + p.to_string());
  const std::size_t d = static_cast<std::size_t>(p.degree());
  Matrix<K> c(p.field(), d, d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = p.field().one();
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -p.coeff(i);
  return c;
}

template <Field K>
Matrix<K> block_diagonal(const K& field, const std::vector<Matrix<K>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix<K> m(field, n, n);
  std::size_t o = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw Error(ErrorKind::SizeMismatch, "non-square diagonal block");
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) m(o + i, o + j) = b(i, j);
    o += b.size();
  }
  return m;
}

/// p(A) by Horner's rule.
template <Field K>
Matrix<K> evaluate(const Polynomial<K>& p, const Matrix<K>& a) {
  require_same_field(p.field(), a.field());
  const std::size_t n = a.size();
  Matrix<K> acc(a.field(), n, n);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + Matrix<K>::scalar(a.field(), n, *it);
  return acc;
}

/// Permutation matrix whose k-th column is e_{perm[k]} (0-based).
template <Field K>
Matrix<K> permutation_matrix(const K& field, const std::vector<std::size_t>& perm) {
  Matrix<K> m(field, perm.size(), perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) m(perm[k], k) = field.one();
  return m;
}

/// Coordinates R with B R = A B for a full-column-rank basis B of an
/// A-invariant subspace; solved on a set of independent rows of B.
template <Field K>
Matrix<K> restrict_to(const Matrix<K>& a, const Matrix<K>& basis) {
  const std::size_t d = basis.cols();
  if (d == 0) return Matrix<K>(a.field(), 0, 0);
  auto pivots = rref(basis.transpose()).pivots;  // independent rows of basis
  if (pivots.size() != d) throw Error(ErrorKind::Singular, "basis is not of full column rank");
  Matrix<K> ab = a * basis;
  Matrix<K> bi(a.field(), d, d), abi(a.field(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      bi(i, j) = basis(pivots[i], j);
      abi(i, j) = ab(pivots[i], j);
    }
  Matrix<K> r = mat_inverse(bi) * abi;
  if (!(basis * r == ab)) throw Error(ErrorKind::InvalidArgument, "subspace is not invariant");
  return r;
}

}  // namespace xform
