#include "zk/linalg.hpp"

namespace zk {

std::size_t Matrix::rank() const {
  std::vector<Scalar> m = data_;
  auto e = [&](std::size_t r, std::size_t c) -> Scalar& { return m[r * cols_ + c]; };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && e(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t c = col; c < cols_; ++c) std::swap(e(rank, c), e(pivot, c));
    Scalar inv = e(rank, col).inverse();
    for (std::size_t c = col; c < cols_; ++c) e(rank, c) = e(rank, c) * inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank || e(r, col).is_zero()) continue;
      Scalar factor = e(r, col);
      for (std::size_t c = col; c < cols_; ++c)
        e(r, c) = e(r, c) - factor * e(rank, c);
    }
    ++rank;
  }
  return rank;
}

Matrix Matrix::multiply(const Matrix& o) const {
  if (cols_ != o.rows_) fail(errc::mismatch, "matrix shape mismatch in multiply");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

std::vector<std::size_t> cohomology_dims(const std::vector<std::size_t>& spaces,
                                         const std::vector<Matrix>& boundaries) {
  if (spaces.size() != boundaries.size() + 1)
    fail(errc::usage, "complex shape: need one more space than boundary map");
  for (std::size_t k = 0; k < boundaries.size(); ++k) {
    if (boundaries[k].cols() != spaces[k] || boundaries[k].rows() != spaces[k + 1])
      fail(errc::usage, "boundary " + std::to_string(k) + " shape mismatch");
    if (k + 1 < boundaries.size() && !boundaries[k + 1].multiply(boundaries[k]).is_zero())
      fail(errc::composition_not_zero,
           "boundaries " + std::to_string(k) + "," + std::to_string(k + 1) +
               " do not compose to zero");
  }
  std::vector<std::size_t> ranks(boundaries.size());
  for (std::size_t k = 0; k < boundaries.size(); ++k) ranks[k] = boundaries[k].rank();
  std::vector<std::size_t> dims(spaces.size());
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    std::size_t out = k < ranks.size() ? ranks[k] : 0;
    std::size_t in = k > 0 ? ranks[k - 1] : 0;
    dims[k] = spaces[k] - out - in;
  }
  return dims;
}

}  // namespace zk
