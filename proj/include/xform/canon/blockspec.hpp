#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "xform/matrixcore.hpp"

namespace xform {

template <Field K>
struct JordanBlock {
  typename K::value_type lambda;
  std::size_t size;  // 1, 2 or 3
};

template <Field K>
struct CompanionBlock {
  Polynomial<K> poly;
};

template <Field K>
struct RawBlock {
  Matrix<K> matrix;
};

template <Field K>
using Block = std::variant<JordanBlock<K>, CompanionBlock<K>, RawBlock<K>>;

/// J_size(lambda): lambda on the diagonal, ones on the superdiagonal.
template <Field K>
Matrix<K> jordan_block(const K& field, const typename K::value_type& lambda, std::size_t size) {
  Matrix<K> j = Matrix<K>::scalar(field, size, lambda);
  for (std::size_t i = 0; i + 1 < size; ++i) j(i, i + 1) = field.one();
  return j;
}

template <Field K>
Matrix<K> block_matrix(const K& field, const Block<K>& b) {
  return std::visit(
      [&](const auto& blk) -> Matrix<K> {
        using B = std::decay_t<decltype(blk)>;
        if constexpr (std::is_same_v<B, JordanBlock<K>>) {
          if (blk.size < 1 || blk.size > 3)
            throw Error(ErrorKind::InvalidArgument, "Jordan block size must be 1, 2 or 3");
          return jordan_block(field, blk.lambda, blk.size);
        } else if constexpr (std::is_same_v<B, CompanionBlock<K>>) {
          return companion(blk.poly);
        } else {
          if (!blk.matrix.is_square()) throw Error(ErrorKind::SizeMismatch, "raw block must be square");
          return blk.matrix;
        }
      },
      b);
}

/// Ordered diagonal blocks plus an optional conjugator P; the described
/// matrix is P * diag(blocks) * P^-1.
template <Field K>
struct BlockSpec {
  K field;
  std::vector<Block<K>> blocks;
  std::optional<Matrix<K>> conjugator;

  std::vector<Matrix<K>> block_matrices() const {
    std::vector<Matrix<K>> out;
    for (const auto& b : blocks) out.push_back(block_matrix(field, b));
    return out;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& m : block_matrices()) n += m.size();
    return n;
  }

  Matrix<K> diagonal_form() const { return block_diagonal(field, block_matrices()); }

  Matrix<K> conjugator_or_identity() const {
    std::size_t n = size();
    if (!conjugator) return Matrix<K>::identity(field, n);
    if (!conjugator->is_square() || conjugator->size() != n)
      throw Error(ErrorKind::SizeMismatch, "conjugator size does not match the blocks");
    return *conjugator;
  }

  Matrix<K> assemble() const { return conjugate(conjugator_or_identity(), diagonal_form()); }
};

}  // namespace xform
