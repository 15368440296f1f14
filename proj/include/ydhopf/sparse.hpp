#pragma once

#include <cstdint>
#include <vector>

#include "ydhopf/field.hpp"

namespace ydhopf {

struct Term {
  std::uint64_t index;
  Scalar value;
  bool operator==(const Term& o) const { return index == o.index && value == o.value; }
};

// Sorted by index, no duplicate indices, no zero values (after normalize).
using SparseVec = std::vector<Term>;

// Sorts, merges duplicate indices and drops zeros.
void normalize(SparseVec& v, const Field& f);
Scalar sparse_get(const SparseVec& v, std::uint64_t index);
// out += coef * v (unnormalized append).
void append_scaled(SparseVec& out, const SparseVec& v, Scalar coef, const Field& f);

// Row-major dense matrix.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  static DenseMatrix identity(std::size_t n);

  Scalar& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Scalar at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  Scalar* row(std::size_t r) { return data.data() + r * cols; }
  const Scalar* row(std::size_t r) const { return data.data() + r * cols; }
  bool operator==(const DenseMatrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data;
  }
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b, const Field& f);

}  // namespace ydhopf
