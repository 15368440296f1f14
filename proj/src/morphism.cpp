#include "ydhopf/morphism.hpp"

#include <algorithm>
#include <string>

#include "ydhopf/error.hpp"

namespace ydhopf {

void normalize(SparseVec& v, const Field& f) {
  if (v.empty()) return;
  std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::uint64_t idx = v[i].index;
    Scalar acc = 0;
    for (; i < v.size() && v[i].index == idx; ++i) acc = f.add(acc, v[i].value);
    if (acc != 0) v[out++] = {idx, acc};
  }
  v.resize(out);
}

Scalar sparse_get(const SparseVec& v, std::uint64_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const Term& t, std::uint64_t i) { return t.index < i; });
  return it != v.end() && it->index == index ? it->value : 0;
}

void append_scaled(SparseVec& out, const SparseVec& v, Scalar coef, const Field& f) {
  if (coef == 0) return;
  for (const Term& t : v) out.push_back({t.index, f.mul(t.value, coef)});
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b, const Field& f) {
  if (a.cols != b.rows) fail(ErrorKind::ShapeMismatch, "matmul shape mismatch");
  DenseMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      Scalar x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) = f.add(c.at(i, j), f.mul(x, b.at(k, j)));
    }
  return c;
}

LinearMorphism::LinearMorphism(ObjectWord dom, ObjectWord cod)
    : dom_(std::move(dom)), cod_(std::move(cod)) {
  require_same_context(dom_.context(), cod_.context());
  cols_.assign(dom_.dim(), {});
}

LinearMorphism LinearMorphism::identity(const ObjectWord& w) {
  LinearMorphism m(w, w);
  for (std::uint64_t i = 0; i < w.dim(); ++i) m.cols_[i] = {{i, 1}};
  return m;
}

void LinearMorphism::set_column(std::uint64_t c, SparseVec v) {
  if (c >= cols_.size()) fail(ErrorKind::InvalidArgument, "column index out of range");
  normalize(v, field());
  if (!v.empty() && v.back().index >= rows())
    fail(ErrorKind::InvalidArgument, "row index out of range");
  cols_[c] = std::move(v);
}

void LinearMorphism::add_entry(std::uint64_t row, std::uint64_t col, Scalar value) {
  if (col >= cols_.size() || row >= rows()) fail(ErrorKind::InvalidArgument, "entry out of range");
  cols_[col].push_back({row, value % field().p()});
}

void LinearMorphism::finalize() {
  for (SparseVec& c : cols_) normalize(c, field());
}

Scalar LinearMorphism::entry(std::uint64_t row, std::uint64_t col) const {
  return sparse_get(cols_.at(col), row);
}

std::size_t LinearMorphism::nnz() const {
  std::size_t n = 0;
  for (const SparseVec& c : cols_) n += c.size();
  return n;
}

LinearMorphism LinearMorphism::retyped(ObjectWord dom, ObjectWord cod) const {
  if (dom.dim() != dom_.dim() || cod.dim() != cod_.dim())
    fail(ErrorKind::ShapeMismatch, "retype changes dimensions: " + dom_.str() + " -> " + cod_.str() +
                                       " as " + dom.str() + " -> " + cod.str());
  LinearMorphism m = *this;
  m.dom_ = std::move(dom);
  m.cod_ = std::move(cod);
  return m;
}

DenseMatrix LinearMorphism::to_dense() const {
  DenseMatrix d(rows(), cols());
  for (std::uint64_t c = 0; c < cols(); ++c)
    for (const Term& t : cols_[c]) d.at(t.index, c) = t.value;
  return d;
}

LinearMorphism LinearMorphism::from_dense(const DenseMatrix& m, ObjectWord dom, ObjectWord cod) {
  LinearMorphism out(std::move(dom), std::move(cod));
  if (m.rows != out.rows() || m.cols != out.cols())
    fail(ErrorKind::ShapeMismatch, "dense matrix shape does not match words");
  for (std::size_t c = 0; c < m.cols; ++c)
    for (std::size_t r = 0; r < m.rows; ++r)
      if (m.at(r, c) != 0) out.cols_[c].push_back({r, m.at(r, c)});
  return out;
}

SparseVec LinearMorphism::apply(const SparseVec& v) const {
  SparseVec out;
  for (const Term& t : v) append_scaled(out, cols_.at(t.index), t.value, field());
  normalize(out, field());
  return out;
}

LinearMorphism compose(const LinearMorphism& f, const LinearMorphism& g) {
  if (f.cod() != g.dom())
    fail(ErrorKind::ShapeMismatch, "cannot compose " + f.dom().str() + " -> " + f.cod().str() +
                                       " with " + g.dom().str() + " -> " + g.cod().str());
  LinearMorphism out(f.dom(), g.cod());
  for (std::uint64_t c = 0; c < f.cols(); ++c) out.set_column(c, g.apply(f.column(c)));
  return out;
}

LinearMorphism tensor(const LinearMorphism& a, const LinearMorphism& b) {
  const Field& f = a.field();
  LinearMorphism out(a.dom() + b.dom(), a.cod() + b.cod());
  const std::uint64_t bc = b.cols(), br = b.rows();
  for (std::uint64_t i = 0; i < a.cols(); ++i)
    for (std::uint64_t j = 0; j < bc; ++j) {
      SparseVec col;
      for (const Term& x : a.column(i))
        for (const Term& y : b.column(j)) col.push_back({x.index * br + y.index, f.mul(x.value, y.value)});
      out.set_column(i * bc + j, std::move(col));
    }
  return out;
}

LinearMorphism scaled(const LinearMorphism& a, Scalar s) {
  LinearMorphism out(a.dom(), a.cod());
  for (std::uint64_t c = 0; c < a.cols(); ++c) {
    SparseVec col;
    append_scaled(col, a.column(c), s, a.field());
    out.set_column(c, std::move(col));
  }
  return out;
}

LinearMorphism sum(const LinearMorphism& a, const LinearMorphism& b) {
  if (a.dom() != b.dom() || a.cod() != b.cod()) fail(ErrorKind::ShapeMismatch, "sum of differently typed maps");
  LinearMorphism out(a.dom(), a.cod());
  for (std::uint64_t c = 0; c < a.cols(); ++c) {
    SparseVec col = a.column(c);
    col.insert(col.end(), b.column(c).begin(), b.column(c).end());
    out.set_column(c, std::move(col));
  }
  return out;
}

std::optional<Witness> first_difference(const LinearMorphism& a, const LinearMorphism& b) {
  if (a.dom() != b.dom() || a.cod() != b.cod())
    fail(ErrorKind::ShapeMismatch, "comparing " + a.dom().str() + " -> " + a.cod().str() + " with " +
                                       b.dom().str() + " -> " + b.cod().str());
  for (std::uint64_t c = 0; c < a.cols(); ++c) {
    const SparseVec& x = a.column(c);
    const SparseVec& y = b.column(c);
    if (x == y) continue;
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].index < y[j].index))
        return Witness{x[i].index, c, x[i].value, 0};
      if (i == x.size() || y[j].index < x[i].index) return Witness{y[j].index, c, 0, y[j].value};
      if (x[i].value != y[j].value) return Witness{x[i].index, c, x[i].value, y[j].value};
      ++i;
      ++j;
    }
  }
  return std::nullopt;
}

bool morphism_equal(const LinearMorphism& a, const LinearMorphism& b) { return !first_difference(a, b); }

LinearMorphism braiding(const ObjectWord& x, const ObjectWord& y) {
  require_same_context(x.context(), y.context());
  const Field& f = x.context()->field;
  LinearMorphism out(x + y, y + x);
  const std::uint64_t dx = x.dim(), dy = y.dim();
  SparseVec moved;
  for (std::uint64_t ix = 0; ix < dx; ++ix) {
    GroupElement g = x.degree(ix);
    for (std::uint64_t iy = 0; iy < dy; ++iy) {
      moved.clear();
      y.act(g, iy, 1, moved);
      normalize(moved, f);
      SparseVec col;
      for (const Term& t : moved) col.push_back({t.index * dx + ix, t.value});
      out.set_column(ix * dy + iy, std::move(col));
    }
  }
  return out;
}

LinearMorphism braiding_inverse(const ObjectWord& x, const ObjectWord& y) {
  require_same_context(x.context(), y.context());
  const Field& f = x.context()->field;
  const Group& grp = x.context()->group;
  LinearMorphism out(y + x, x + y);
  const std::uint64_t dx = x.dim(), dy = y.dim();
  SparseVec moved;
  for (std::uint64_t iy = 0; iy < dy; ++iy)
    for (std::uint64_t ix = 0; ix < dx; ++ix) {
      moved.clear();
      y.act(grp.neg(x.degree(ix)), iy, 1, moved);
      normalize(moved, f);
      SparseVec col;
      for (const Term& t : moved) col.push_back({ix * dy + t.index, t.value});
      out.set_column(iy * dx + ix, std::move(col));
    }
  return out;
}

bool symmetric_pair_check(const ObjectWord& x, const ObjectWord& y) {
  return morphism_equal(compose(braiding(x, y), braiding(y, x)), LinearMorphism::identity(x + y));
}

bool is_yd_morphism(const LinearMorphism& f) {
  const ContextPtr& ctx = f.context();
  const Field& fld = ctx->field;
  for (std::uint64_t c = 0; c < f.cols(); ++c) {
    GroupElement d = f.dom().degree(c);
    for (const Term& t : f.column(c))
      if (f.cod().degree(t.index) != d) return false;
  }
  SparseVec lhs, rhs, tmp;
  for (std::size_t j = 0; j < ctx->group.rank(); ++j) {
    GroupElement g = ctx->group.generator(j);
    for (std::uint64_t c = 0; c < f.cols(); ++c) {
      tmp.clear();
      f.dom().act(g, c, 1, tmp);
      normalize(tmp, fld);
      lhs = f.apply(tmp);
      rhs.clear();
      for (const Term& t : f.column(c)) f.cod().act(g, t.index, t.value, rhs);
      normalize(rhs, fld);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace ydhopf
