#include "ydhopf/linalg.hpp"

#include <string>
#include <utility>

#include "ydhopf/error.hpp"
#include "ydhopf/kernels.hpp"

namespace ydhopf {

Echelon row_reduce(DenseMatrix a, const Field& f) {
  Echelon e;
  const std::uint32_t p = f.p();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t piv = r;
    while (piv < a.rows && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < a.cols; ++k) std::swap(a.at(piv, k), a.at(r, k));
    kernels::scale_mod(a.row(r), a.cols, f.inv(a.at(r, c)), p);
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      kernels::axpy_mod(a.row(i), a.row(r), a.cols, f.neg(a.at(i, c)), p);
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.reduced = std::move(a);
  return e;
}

std::size_t rank(const DenseMatrix& a, const Field& f) { return row_reduce(a, f).pivot_cols.size(); }

DenseMatrix left_inverse(const DenseMatrix& a, const Field& f) {
  const std::size_t m = a.rows, n = a.cols;
  DenseMatrix aug(m, n + m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n + r) = 1;
  }
  Echelon e = row_reduce(std::move(aug), f);
  std::size_t rk = 0;
  while (rk < e.pivot_cols.size() && e.pivot_cols[rk] < n) ++rk;
  if (rk < n) {
    Error err(ErrorKind::RankDeficient,
              "rank " + std::to_string(rk) + " < " + std::to_string(n) + " columns");
    err.rank = rk;
    throw err;
  }
  DenseMatrix l(n, m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) l.at(r, c) = e.reduced.at(r, n + c);
  return l;
}

std::optional<DenseMatrix> solve(const DenseMatrix& a, const DenseMatrix& b, const Field& f) {
  DenseMatrix x = matmul(left_inverse(a, f), b, f);
  if (!(matmul(a, x, f) == b)) return std::nullopt;
  return x;
}

bool in_column_span(const DenseMatrix& a, const std::vector<Scalar>& v, const Field& f) {
  if (v.size() != a.rows) fail(ErrorKind::ShapeMismatch, "vector length does not match rows");
  DenseMatrix aug(a.rows, a.cols + 1);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols) = v[r];
  }
  return rank(aug, f) == rank(a, f);
}

LinearMorphism solve_left_inverse(const LinearMorphism& f) {
  DenseMatrix l = left_inverse(f.to_dense(), f.field());
  return LinearMorphism::from_dense(l, f.cod(), f.dom());
}

DenseMatrix curry(const LinearMorphism& b, std::size_t a_len) {
  const ObjectWord a = b.dom().slice(0, a_len);
  const ObjectWord x = b.dom().slice(a_len, b.dom().size() - a_len);
  const std::uint64_t da = a.dim(), dx = x.dim(), dy = b.rows();
  DenseMatrix out(dx * dy, da);
  for (std::uint64_t ia = 0; ia < da; ++ia)
    for (std::uint64_t ix = 0; ix < dx; ++ix)
      for (const Term& t : b.column(ia * dx + ix)) out.at(ix * dy + t.index, ia) = t.value;
  return out;
}

LinearMorphism solve_curried(const LinearMorphism& b, std::size_t a_len, const LinearMorphism& t,
                             std::size_t z_len) {
  const ObjectWord a = b.dom().slice(0, a_len);
  const ObjectWord xb = b.dom().slice(a_len, b.dom().size() - a_len);
  const ObjectWord z = t.dom().slice(0, z_len);
  const ObjectWord xt = t.dom().slice(z_len, t.dom().size() - z_len);
  if (xb != xt || b.cod() != t.cod())
    fail(ErrorKind::ShapeMismatch, "curried solve: trailing factors or codomains differ (" +
                                       b.dom().str() + " -> " + b.cod().str() + " vs " +
                                       t.dom().str() + " -> " + t.cod().str() + ")");
  auto m = solve(curry(b, a_len), curry(t, z_len), b.field());
  if (!m) fail(ErrorKind::Inconsistent, "no map " + z.str() + " -> " + a.str() + " satisfies the identity");
  return LinearMorphism::from_dense(*m, z, a);
}

}  // namespace ydhopf
