#include "ydhopf/yd.hpp"

#include <string>

#include "ydhopf/error.hpp"

namespace ydhopf {

namespace {

DenseMatrix dense_pow(const DenseMatrix& a, std::uint64_t e, const Field& f) {
  DenseMatrix result = DenseMatrix::identity(a.rows);
  for (std::uint64_t i = 0; i < e; ++i) result = matmul(result, a, f);
  return result;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols, a.rows);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t c = 0; c < a.cols; ++c) t.at(c, r) = a.at(r, c);
  return t;
}

std::vector<SparseVec> dense_columns(const DenseMatrix& a) {
  std::vector<SparseVec> cols(a.cols);
  for (std::size_t c = 0; c < a.cols; ++c)
    for (std::size_t r = 0; r < a.rows; ++r)
      if (a.at(r, c) != 0) cols[c].push_back({r, a.at(r, c)});
  return cols;
}

std::vector<SparseVec> compose_columns(const std::vector<SparseVec>& first,
                                       const std::vector<SparseVec>& second, const Field& f) {
  std::vector<SparseVec> out(first.size());
  for (std::size_t c = 0; c < first.size(); ++c) {
    for (const Term& t : first[c]) append_scaled(out[c], second[t.index], t.value, f);
    normalize(out[c], f);
  }
  return out;
}

void validate_shapes(const ContextPtr& ctx, const std::vector<GroupElement>& degrees,
                     const std::vector<DenseMatrix>& action) {
  if (!ctx) fail(ErrorKind::InvalidArgument, "object needs a context");
  const std::size_t n = degrees.size();
  if (action.size() != ctx->group.rank())
    fail(ErrorKind::InvalidArgument, "expected " + std::to_string(ctx->group.rank()) +
                                         " action matrices, got " + std::to_string(action.size()));
  for (GroupElement d : degrees)
    if (d >= ctx->group.size()) fail(ErrorKind::MismatchedGroup, "degree outside the group");
  for (const DenseMatrix& a : action) {
    if (a.rows != n || a.cols != n)
      fail(ErrorKind::InvalidArgument, "action matrix shape does not match dim " + std::to_string(n));
    for (Scalar s : a.data)
      if (s >= ctx->field.p()) fail(ErrorKind::InvalidArgument, "action entry outside the field");
  }
}

}  // namespace

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b))
    fail(ErrorKind::MismatchedContext, "objects live over different fields or groups");
}

ObjRef YDObject::build(std::string name, ContextPtr ctx, std::vector<GroupElement> degrees,
                       std::vector<DenseMatrix> action) {
  validate_shapes(ctx, degrees, action);
  const Field& f = ctx->field;
  const std::size_t n = degrees.size();
  for (std::size_t j = 0; j < action.size(); ++j)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (action[j].at(r, c) != 0 && degrees[r] != degrees[c])
          fail(ErrorKind::GradingActionClash,
               "generator " + std::to_string(j) + " maps basis vector " + std::to_string(c) +
                   " into a different degree (row " + std::to_string(r) + ")");
  for (std::size_t i = 0; i < action.size(); ++i)
    for (std::size_t j = i + 1; j < action.size(); ++j)
      if (!(matmul(action[i], action[j], f) == matmul(action[j], action[i], f)))
        fail(ErrorKind::NonCommutingAction,
             "generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
  for (std::size_t j = 0; j < action.size(); ++j)
    if (!(dense_pow(action[j], ctx->group.orders()[j], f) == DenseMatrix::identity(n)))
      fail(ErrorKind::WrongActionOrder, "generator " + std::to_string(j) +
                                            " action does not have order dividing " +
                                            std::to_string(ctx->group.orders()[j]));
  return build_unchecked(std::move(name), std::move(ctx), std::move(degrees), std::move(action));
}

ObjRef YDObject::build_unchecked(std::string name, ContextPtr ctx, std::vector<GroupElement> degrees,
                                 std::vector<DenseMatrix> action) {
  validate_shapes(ctx, degrees, action);
  auto obj = std::shared_ptr<YDObject>(new YDObject());
  obj->name_ = std::move(name);
  obj->ctx_ = std::move(ctx);
  obj->degrees_ = std::move(degrees);
  obj->action_ = std::move(action);
  obj->derive();
  return obj;
}

ObjRef YDObject::unit(ContextPtr ctx, std::string name) { return plain(std::move(name), std::move(ctx), 1); }

ObjRef YDObject::plain(std::string name, ContextPtr ctx, std::size_t dim) {
  std::vector<DenseMatrix> action(ctx->group.rank(), DenseMatrix::identity(dim));
  return build_unchecked(std::move(name), ctx, std::vector<GroupElement>(dim, 0), std::move(action));
}

ObjRef YDObject::renamed(std::string name) const {
  auto obj = std::shared_ptr<YDObject>(new YDObject(*this));
  obj->name_ = std::move(name);
  return obj;
}

void YDObject::derive() {
  const Group& g = ctx_->group;
  const Field& f = ctx_->field;
  const std::size_t n = degrees_.size();
  diagonal_ = true;
  for (const DenseMatrix& a : action_)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c && a.at(r, c) != 0) diagonal_ = false;

  std::vector<std::vector<SparseVec>> gens;
  for (const DenseMatrix& a : action_) gens.push_back(dense_columns(a));
  element_action_.assign(g.size(), {});
  element_action_[0] = dense_columns(DenseMatrix::identity(n));
  for (GroupElement x = 1; x < g.size(); ++x) {
    auto e = g.exponents(x);
    std::size_t j = e.size() - 1;
    while (e[j] == 0) --j;
    std::vector<std::int64_t> prev(e.begin(), e.end());
    prev[j] -= 1;
    element_action_[x] = compose_columns(element_action_[g.element(prev)], gens[j], f);
  }
}

ObjectWord::ObjectWord(ContextPtr ctx, std::vector<ObjRef> factors)
    : ctx_(std::move(ctx)), factors_(std::move(factors)) {
  if (!ctx_) fail(ErrorKind::InvalidArgument, "word needs a context");
  for (const ObjRef& o : factors_) {
    require_same_context(ctx_, o->context());
    dim_ *= o->dim();
  }
}

ObjectWord::ObjectWord(ObjRef obj) : ObjectWord(obj->context(), {obj}) {}

ObjectWord ObjectWord::operator+(const ObjectWord& o) const {
  require_same_context(ctx_, o.ctx_);
  std::vector<ObjRef> all = factors_;
  all.insert(all.end(), o.factors_.begin(), o.factors_.end());
  return ObjectWord(ctx_, std::move(all));
}

ObjectWord ObjectWord::slice(std::size_t from, std::size_t count) const {
  if (from + count > factors_.size()) fail(ErrorKind::InvalidArgument, "word slice out of range");
  return ObjectWord(ctx_, std::vector<ObjRef>(factors_.begin() + from, factors_.begin() + from + count));
}

std::string ObjectWord::str() const {
  if (factors_.empty()) return "I";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "*";
    s += factors_[i]->name();
  }
  return s;
}

bool ObjectWord::operator==(const ObjectWord& o) const {
  if (factors_.size() != o.factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i]->name() != o.factors_[i]->name() || factors_[i]->dim() != o.factors_[i]->dim())
      return false;
  return true;
}

std::vector<std::uint64_t> ObjectWord::split(std::uint64_t index) const {
  std::vector<std::uint64_t> parts(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    parts[i] = index % factors_[i]->dim();
    index /= factors_[i]->dim();
  }
  return parts;
}

GroupElement ObjectWord::degree(std::uint64_t index) const {
  GroupElement d = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    std::uint64_t n = factors_[i]->dim();
    d = ctx_->group.add(d, factors_[i]->degree(index % n));
    index /= n;
  }
  return d;
}

void ObjectWord::act(GroupElement g, std::uint64_t index, Scalar coef, SparseVec& out) const {
  const Field& f = ctx_->field;
  if (coef == 0) return;
  auto parts = split(index);
  SparseVec cur{{0, coef}};
  SparseVec next;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const SparseVec& col = factors_[i]->act(g, parts[i]);
    const std::uint64_t n = factors_[i]->dim();
    next.clear();
    for (const Term& a : cur)
      for (const Term& b : col) next.push_back({a.index * n + b.index, f.mul(a.value, b.value)});
    cur.swap(next);
  }
  out.insert(out.end(), cur.begin(), cur.end());
}

ObjRef tensor_object(const ObjRef& x, const ObjRef& y, std::string name) {
  require_same_context(x->context(), y->context());
  const ContextPtr& ctx = x->context();
  const Field& f = ctx->field;
  const std::size_t nx = x->dim(), ny = y->dim();
  std::vector<GroupElement> degrees(nx * ny);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) degrees[i * ny + j] = ctx->group.add(x->degree(i), y->degree(j));
  std::vector<DenseMatrix> action;
  for (std::size_t g = 0; g < x->action().size(); ++g) {
    const DenseMatrix& a = x->action()[g];
    const DenseMatrix& b = y->action()[g];
    DenseMatrix k(nx * ny, nx * ny);
    for (std::size_t r1 = 0; r1 < nx; ++r1)
      for (std::size_t c1 = 0; c1 < nx; ++c1) {
        if (a.at(r1, c1) == 0) continue;
        for (std::size_t r2 = 0; r2 < ny; ++r2)
          for (std::size_t c2 = 0; c2 < ny; ++c2)
            k.at(r1 * ny + r2, c1 * ny + c2) = f.mul(a.at(r1, c1), b.at(r2, c2));
      }
    action.push_back(std::move(k));
  }
  if (name.empty()) name = "(" + x->name() + "*" + y->name() + ")";
  return YDObject::build_unchecked(std::move(name), ctx, std::move(degrees), std::move(action));
}

ObjRef dual_object(const ObjRef& x, std::string name) {
  const ContextPtr& ctx = x->context();
  std::vector<GroupElement> degrees;
  for (GroupElement d : x->degrees()) degrees.push_back(ctx->group.neg(d));
  std::vector<DenseMatrix> action;
  for (std::size_t j = 0; j < x->action().size(); ++j) {
    // A^{n-1} = A^{-1} since A^n = 1.
    DenseMatrix inv = dense_pow(x->action()[j], ctx->group.orders()[j] - 1, ctx->field);
    action.push_back(transpose(inv));
  }
  if (name.empty()) name = x->name() + "^d";
  return YDObject::build_unchecked(std::move(name), ctx, std::move(degrees), std::move(action));
}

}  // namespace ydhopf
