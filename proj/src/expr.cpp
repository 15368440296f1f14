#include "ydhopf/expr.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "ydhopf/error.hpp"

namespace ydhopf {

ExprPtr id(const ObjectWord& w) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::Id, w, {}, {}, nullptr, nullptr});
}

ExprPtr gen(std::string name) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::Gen, {}, {}, std::move(name), nullptr, nullptr});
}

ExprPtr compose(ExprPtr first, ExprPtr then) {
  return std::make_shared<const Expr>(
      Expr{Expr::Kind::Compose, {}, {}, {}, std::move(first), std::move(then)});
}

ExprPtr tensor(ExprPtr left, ExprPtr right) {
  return std::make_shared<const Expr>(
      Expr{Expr::Kind::Tensor, {}, {}, {}, std::move(left), std::move(right)});
}

ExprPtr braid(const ObjectWord& x, const ObjectWord& y) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::Braid, x, y, {}, nullptr, nullptr});
}

ExprPtr braid_inv(const ObjectWord& x, const ObjectWord& y) {
  return std::make_shared<const Expr>(Expr{Expr::Kind::BraidInv, x, y, {}, nullptr, nullptr});
}

ExprPtr seq(std::initializer_list<ExprPtr> parts) {
  if (parts.size() == 0) fail(ErrorKind::InvalidArgument, "empty composition");
  ExprPtr e;
  for (const ExprPtr& p : parts) e = e ? compose(e, p) : p;
  return e;
}

ExprPtr par(std::initializer_list<ExprPtr> parts) {
  if (parts.size() == 0) fail(ErrorKind::InvalidArgument, "empty tensor product");
  ExprPtr e;
  for (const ExprPtr& p : parts) e = e ? tensor(e, p) : p;
  return e;
}

std::string to_string(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Id: return "id[" + (e->x.empty() ? std::string() : e->x.str()) + "]";
    case Expr::Kind::Gen: return e->name;
    case Expr::Kind::Compose: return "(" + to_string(e->a) + " ; " + to_string(e->b) + ")";
    case Expr::Kind::Tensor: return "(" + to_string(e->a) + " * " + to_string(e->b) + ")";
    case Expr::Kind::Braid: return "c[" + e->x.str() + "," + e->y.str() + "]";
    case Expr::Kind::BraidInv: return "cinv[" + e->x.str() + "," + e->y.str() + "]";
  }
  return "?";
}

void GeneratorEnv::bind(const std::string& name, LinearMorphism m) {
  require_same_context(ctx_, m.context());
  gens_.insert_or_assign(name, std::move(m));
}

void GeneratorEnv::bind_object(const ObjRef& obj) { bind_object(obj->name(), obj); }

void GeneratorEnv::bind_object(const std::string& name, const ObjRef& obj) {
  require_same_context(ctx_, obj->context());
  objects_.insert_or_assign(name, obj);
}

const LinearMorphism* GeneratorEnv::find(const std::string& name) const {
  auto it = gens_.find(name);
  return it == gens_.end() ? nullptr : &it->second;
}

const LinearMorphism& GeneratorEnv::get(const std::string& name) const {
  const LinearMorphism* m = find(name);
  if (!m) fail(ErrorKind::UnboundGenerator, "generator '" + name + "' is not bound");
  return *m;
}

ObjRef GeneratorEnv::object(const std::string& name) const {
  auto it = objects_.find(name);
  if (it == objects_.end()) fail(ErrorKind::UnboundGenerator, "object '" + name + "' is not bound");
  return it->second;
}

namespace {

[[noreturn]] void fail_at(ErrorKind kind, const std::string& path, const std::string& message) {
  Error err(kind, message + " at " + path);
  err.path = path;
  throw err;
}

Typing validate_at(const ExprPtr& e, const GeneratorEnv& env, const std::string& path) {
  const ContextPtr& ctx = env.context();
  switch (e->kind) {
    case Expr::Kind::Id:
      require_same_context(ctx, e->x.context());
      return {e->x, e->x};
    case Expr::Kind::Gen: {
      const LinearMorphism* m = env.find(e->name);
      if (!m) fail_at(ErrorKind::UnboundGenerator, path, "generator '" + e->name + "' is not bound");
      return {m->dom(), m->cod()};
    }
    case Expr::Kind::Compose: {
      Typing ta = validate_at(e->a, env, path + ".first");
      Typing tb = validate_at(e->b, env, path + ".then");
      if (ta.cod != tb.dom)
        fail_at(ErrorKind::TypeMismatch, path,
                "codomain " + ta.cod.str() + " of `" + to_string(e->a) + "` does not match domain " +
                    tb.dom.str() + " of `" + to_string(e->b) + "`");
      return {ta.dom, tb.cod};
    }
    case Expr::Kind::Tensor: {
      Typing ta = validate_at(e->a, env, path + ".left");
      Typing tb = validate_at(e->b, env, path + ".right");
      return {ta.dom + tb.dom, ta.cod + tb.cod};
    }
    case Expr::Kind::Braid:
      require_same_context(ctx, e->x.context());
      require_same_context(ctx, e->y.context());
      return {e->x + e->y, e->y + e->x};
    case Expr::Kind::BraidInv:
      require_same_context(ctx, e->x.context());
      require_same_context(ctx, e->y.context());
      return {e->y + e->x, e->x + e->y};
  }
  fail_at(ErrorKind::TypeMismatch, path, "unknown node");
}

// Evaluation tree: compositions flattened into chains, tensor products into
// n-ary factor lists; composite tensor factors memoize their basis columns.
struct Node {
  Expr::Kind kind = Expr::Kind::Id;
  std::uint64_t dom = 1;
  std::uint64_t cod = 1;
  const LinearMorphism* gen = nullptr;
  ObjectWord x, y;
  std::vector<std::unique_ptr<Node>> kids;
  std::vector<SparseVec> memo;  // indexed by basis
  std::vector<char> has;
  SparseVec scratch;
};

constexpr std::uint64_t kMemoLimit = 1ull << 22;

class Evaluator {
 public:
  Evaluator(const GeneratorEnv& env) : env_(env), f_(env.context()->field) {}

  std::unique_ptr<Node> build(const ExprPtr& e) {
    auto n = std::make_unique<Node>();
    n->kind = e->kind;
    switch (e->kind) {
      case Expr::Kind::Id:
        n->dom = n->cod = e->x.dim();
        break;
      case Expr::Kind::Gen:
        n->gen = &env_.get(e->name);
        n->dom = n->gen->cols();
        n->cod = n->gen->rows();
        break;
      case Expr::Kind::Braid:
      case Expr::Kind::BraidInv:
        n->x = e->x;
        n->y = e->y;
        n->dom = n->cod = e->x.dim() * e->y.dim();
        break;
      case Expr::Kind::Compose: {
        std::vector<std::unique_ptr<Node>> chain;
        flatten(e, Expr::Kind::Compose, chain);
        for (auto& k : chain)
          if (k->kind != Expr::Kind::Id) n->kids.push_back(std::move(k));
        if (n->kids.empty()) {
          n->kind = Expr::Kind::Id;
          n->dom = n->cod = chain.front()->dom;
        } else if (n->kids.size() == 1) {
          return std::move(n->kids.front());
        } else {
          n->dom = n->kids.front()->dom;
          n->cod = n->kids.back()->cod;
        }
        break;
      }
      case Expr::Kind::Tensor: {
        std::vector<std::unique_ptr<Node>> factors;
        flatten(e, Expr::Kind::Tensor, factors);
        n->dom = n->cod = 1;
        for (auto& k : factors) {
          n->dom *= k->dom;
          n->cod *= k->cod;
          if (k->kind == Expr::Kind::Id && k->dom == 1) continue;
          if (k->kind == Expr::Kind::Id && !n->kids.empty() && n->kids.back()->kind == Expr::Kind::Id) {
            n->kids.back()->dom *= k->dom;
            n->kids.back()->cod *= k->cod;
            continue;
          }
          n->kids.push_back(std::move(k));
        }
        if (n->kids.empty()) {
          n->kind = Expr::Kind::Id;
        } else if (n->kids.size() == 1) {
          return std::move(n->kids.front());
        }
        for (auto& k : n->kids)
          if (k->kind == Expr::Kind::Compose || k->kind == Expr::Kind::Tensor)
            if (k->dom <= kMemoLimit) {
              k->memo.assign(k->dom, {});
              k->has.assign(k->dom, 0);
            }
        break;
      }
    }
    return n;
  }

  SparseVec apply(Node& n, const SparseVec& v) {
    switch (n.kind) {
      case Expr::Kind::Id:
        return v;
      case Expr::Kind::Gen:
        return n.gen->apply(v);
      case Expr::Kind::Compose: {
        SparseVec cur = apply(*n.kids.front(), v);
        for (std::size_t i = 1; i < n.kids.size() && !cur.empty(); ++i) cur = apply(*n.kids[i], cur);
        return cur;
      }
      case Expr::Kind::Braid:
      case Expr::Kind::BraidInv:
        return apply_braid(n, v);
      case Expr::Kind::Tensor:
        return apply_tensor(n, v);
    }
    return {};
  }

  // Column k of the node's matrix.
  const SparseVec& column(Node& n, std::uint64_t k) {
    if (n.kind == Expr::Kind::Gen) return n.gen->column(k);
    if (n.kind == Expr::Kind::Id) {
      n.scratch.assign(1, Term{k, 1});
      return n.scratch;
    }
    if (!n.has.empty()) {
      if (!n.has[k]) {
        n.memo[k] = apply(n, SparseVec{{k, 1}});
        n.has[k] = 1;
      }
      return n.memo[k];
    }
    n.scratch = apply(n, SparseVec{{k, 1}});
    return n.scratch;
  }

 private:
  void flatten(const ExprPtr& e, Expr::Kind kind, std::vector<std::unique_ptr<Node>>& out) {
    if (e->kind == kind) {
      flatten(e->a, kind, out);
      flatten(e->b, kind, out);
    } else {
      out.push_back(build(e));
    }
  }

  SparseVec apply_braid(Node& n, const SparseVec& v) {
    const Group& grp = env_.context()->group;
    SparseVec out, moved;
    const std::uint64_t dx = n.x.dim(), dy = n.y.dim();
    for (const Term& t : v) {
      moved.clear();
      if (n.kind == Expr::Kind::Braid) {
        std::uint64_t ix = t.index / dy, iy = t.index % dy;
        n.y.act(n.x.degree(ix), iy, t.value, moved);
        for (const Term& m : moved) out.push_back({m.index * dx + ix, m.value});
      } else {
        std::uint64_t iy = t.index / dx, ix = t.index % dx;
        n.y.act(grp.neg(n.x.degree(ix)), iy, t.value, moved);
        for (const Term& m : moved) out.push_back({ix * dy + m.index, m.value});
      }
    }
    normalize(out, f_);
    return out;
  }

  SparseVec apply_tensor(Node& n, const SparseVec& v) {
    const std::size_t r = n.kids.size();
    std::vector<std::uint64_t> parts(r);
    std::vector<const SparseVec*> cols(r);
    SparseVec out, cur, next;
    for (const Term& t : v) {
      std::uint64_t rem = t.index;
      for (std::size_t i = r; i-- > 0;) {
        parts[i] = rem % n.kids[i]->dom;
        rem /= n.kids[i]->dom;
      }
      bool zero = false;
      for (std::size_t i = 0; i < r && !zero; ++i) {
        cols[i] = &column(*n.kids[i], parts[i]);
        zero = cols[i]->empty();
      }
      if (zero) continue;
      cur.assign(1, Term{0, t.value});
      for (std::size_t i = 0; i < r; ++i) {
        const std::uint64_t c = n.kids[i]->cod;
        next.clear();
        for (const Term& a : cur)
          for (const Term& b : *cols[i]) next.push_back({a.index * c + b.index, f_.mul(a.value, b.value)});
        cur.swap(next);
      }
      out.insert(out.end(), cur.begin(), cur.end());
    }
    normalize(out, f_);
    return out;
  }

  const GeneratorEnv& env_;
  const Field& f_;
};

// Recursive-descent parser over the text syntax.
class Parser {
 public:
  Parser(std::string_view text, const GeneratorEnv& env) : s_(text), env_(env) {}

  ExprPtr parse() {
    ExprPtr e = parse_compose();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorKind::ParseError, msg + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  static bool name_char(unsigned char c, bool first) {
    if (c >= 0x80 || c == '_' || std::isalpha(c)) return true;
    return !first && (std::isdigit(c) || c == '\'' || c == '^' || c == '.');
  }

  std::string name() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && name_char(static_cast<unsigned char>(s_[pos_]), pos_ == start)) ++pos_;
    if (pos_ == start) error("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }

  ObjectWord word() {
    std::vector<ObjRef> factors;
    skip();
    if (pos_ < s_.size() && (s_[pos_] == ']' || s_[pos_] == ',')) return ObjectWord(env_.context(), {});
    do {
      std::string n = name();
      if (n == "I") {
        try {
          factors.push_back(env_.object(n));
        } catch (const Error&) {
        }
        continue;
      }
      try {
        factors.push_back(env_.object(n));
      } catch (const Error& e) {
        fail(e.kind(), std::string(e.what()) + " at offset " + std::to_string(pos_));
      }
    } while (accept('*'));
    return ObjectWord(env_.context(), std::move(factors));
  }

  ExprPtr parse_compose() {
    ExprPtr e = parse_tensor();
    while (accept(';')) e = compose(e, parse_tensor());
    return e;
  }

  ExprPtr parse_tensor() {
    ExprPtr e = parse_atom();
    while (accept('*')) e = tensor(e, parse_atom());
    return e;
  }

  ExprPtr parse_atom() {
    if (accept('(')) {
      ExprPtr e = parse_compose();
      expect(')');
      return e;
    }
    std::string n = name();
    if ((n == "id" || n == "c" || n == "cinv") && accept('[')) {
      ObjectWord x = word();
      if (n == "id") {
        expect(']');
        return id(x);
      }
      expect(',');
      ObjectWord y = word();
      expect(']');
      return n == "c" ? braid(x, y) : braid_inv(x, y);
    }
    return gen(n);
  }

  std::string_view s_;
  const GeneratorEnv& env_;
  std::size_t pos_ = 0;
};

}  // namespace

Typing expr_validate(const ExprPtr& e, const GeneratorEnv& env) { return validate_at(e, env, "$"); }

LinearMorphism expr_evaluate(const ExprPtr& e, const GeneratorEnv& env) {
  Typing t = expr_validate(e, env);
  Evaluator ev(env);
  std::unique_ptr<Node> root = ev.build(e);
  LinearMorphism out(t.dom, t.cod);
  const Field& f = env.context()->field;
  for (std::uint64_t k = 0; k < t.dom.dim(); ++k) {
    SparseVec col;
    if (root->kind == Expr::Kind::Compose) {
      col = ev.column(*root->kids.front(), k);
      for (std::size_t i = 1; i < root->kids.size() && !col.empty(); ++i) col = ev.apply(*root->kids[i], col);
    } else {
      col = ev.apply(*root, SparseVec{{k, 1}});
    }
    normalize(col, f);
    out.set_column(k, std::move(col));
  }
  return out;
}

ExprPtr parse_expr(std::string_view text, const GeneratorEnv& env) { return Parser(text, env).parse(); }

LinearMorphism eval(std::string_view text, const GeneratorEnv& env) {
  return expr_evaluate(parse_expr(text, env), env);
}

}  // namespace ydhopf
