#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ydhopf/yd.hpp"

namespace ydhopf {

// First entry where two morphisms disagree.
struct Witness {
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  Scalar lhs = 0;
  Scalar rhs = 0;
};

// Sparse matrix between tensor words, stored by columns (one column per
// domain basis vector).
class LinearMorphism {
 public:
  LinearMorphism() = default;
  // Zero map.
  LinearMorphism(ObjectWord dom, ObjectWord cod);
  static LinearMorphism identity(const ObjectWord& w);

  const ContextPtr& context() const { return dom_.context(); }
  const Field& field() const { return dom_.context()->field; }
  const ObjectWord& dom() const { return dom_; }
  const ObjectWord& cod() const { return cod_; }
  std::uint64_t rows() const { return cod_.dim(); }
  std::uint64_t cols() const { return dom_.dim(); }

  const SparseVec& column(std::uint64_t c) const { return cols_[c]; }
  // Normalizes and bounds-checks.
  void set_column(std::uint64_t c, SparseVec v);
  // Adds value to entry (row, col); column normalized lazily by finalize().
  void add_entry(std::uint64_t row, std::uint64_t col, Scalar value);
  void finalize();

  Scalar entry(std::uint64_t row, std::uint64_t col) const;
  std::size_t nnz() const;

  // Same matrix, relabelled domain/codomain (dimensions must agree).
  LinearMorphism retyped(ObjectWord dom, ObjectWord cod) const;
  DenseMatrix to_dense() const;
  static LinearMorphism from_dense(const DenseMatrix& m, ObjectWord dom, ObjectWord cod);

  // Applies the map to a sparse vector over the domain basis.
  SparseVec apply(const SparseVec& v) const;

 private:
  ObjectWord dom_;
  ObjectWord cod_;
  std::vector<SparseVec> cols_;
};

// g after f.
LinearMorphism compose(const LinearMorphism& f, const LinearMorphism& g);
// Kronecker product, leftmost-major.
LinearMorphism tensor(const LinearMorphism& a, const LinearMorphism& b);
LinearMorphism scaled(const LinearMorphism& a, Scalar s);
LinearMorphism sum(const LinearMorphism& a, const LinearMorphism& b);

// Exact equality; ShapeMismatch when domain or codomain words differ.
bool morphism_equal(const LinearMorphism& a, const LinearMorphism& b);
std::optional<Witness> first_difference(const LinearMorphism& a, const LinearMorphism& b);

// c_{X,Y}(v (x) w) = (deg v . w) (x) v.
LinearMorphism braiding(const ObjectWord& x, const ObjectWord& y);
// Inverse of braiding(x, y): Y(x)X -> X(x)Y.
LinearMorphism braiding_inverse(const ObjectWord& x, const ObjectWord& y);

bool symmetric_pair_check(const ObjectWord& x, const ObjectWord& y);
// Degree preserving and equivariant for every group generator.
bool is_yd_morphism(const LinearMorphism& f);

}  // namespace ydhopf
