#ifndef ZK_LINALG_HPP
#define ZK_LINALG_HPP

#include <cstddef>
#include <vector>

#include "zk/scalar.hpp"

namespace zk {

/// Dense matrix over an exact field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Rank by exact Gaussian elimination (destructive on a copy).
  std::size_t rank() const;
  std::size_t kernel_dim() const { return cols_ - rank(); }

  Matrix multiply(const Matrix& o) const;
  bool is_zero() const;

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Cohomology dimensions of a finite complex of field-linear maps
/// d_k: C^k -> C^{k+1} given by `boundaries[k]` (rows = dim C^{k+1},
/// cols = dim C^k) with space dimensions `spaces` (size = boundaries.size()+1).
/// dim H^k = dim C^k - rank d_k - rank d_{k-1}. Errors with
/// composition_not_zero(k) when d_{k+1} d_k != 0.
std::vector<std::size_t> cohomology_dims(const std::vector<std::size_t>& spaces,
                                         const std::vector<Matrix>& boundaries);

}  // namespace zk

#endif
