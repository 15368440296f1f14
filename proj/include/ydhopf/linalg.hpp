#pragma once

#include <optional>
#include <vector>

#include "ydhopf/morphism.hpp"

namespace ydhopf {

// Exact Gauss-Jordan elimination over F_p; row operations go through the
// dispatched kernels.
struct Echelon {
  DenseMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};
Echelon row_reduce(DenseMatrix a, const Field& f);
std::size_t rank(const DenseMatrix& a, const Field& f);

// L with L*A = I for A of full column rank; throws RankDeficient otherwise.
DenseMatrix left_inverse(const DenseMatrix& a, const Field& f);
// X with A*X = B (A full column rank); std::nullopt when inconsistent.
std::optional<DenseMatrix> solve(const DenseMatrix& a, const DenseMatrix& b, const Field& f);
bool in_column_span(const DenseMatrix& a, const std::vector<Scalar>& v, const Field& f);

// g with g o f = id_dom.
LinearMorphism solve_left_inverse(const LinearMorphism& f);

// Rows indexed by (x, y) = x*dimY + y, columns by a, for b: A(x)X -> Y where A is
// the first a_len factors of b's domain.
DenseMatrix curry(const LinearMorphism& b, std::size_t a_len);

// The unique m: Z -> A with b o (m (x) id_X) = t, for b: A(x)X -> Y and
// t: Z(x)X -> Y. Requires the curried b to be injective (RankDeficient) and the
// system to be consistent (Inconsistent).
LinearMorphism solve_curried(const LinearMorphism& b, std::size_t a_len, const LinearMorphism& t,
                             std::size_t z_len);

}  // namespace ydhopf
