#pragma once

#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "ydhopf/morphism.hpp"

namespace ydhopf {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Diagram term. Compose(a, b) is "b after a": a is the upper row of the tangle.
struct Expr {
  enum class Kind { Id, Gen, Compose, Tensor, Braid, BraidInv };
  Kind kind;
  ObjectWord x;  // Id word, or first braid argument
  ObjectWord y;  // second braid argument
  std::string name;
  ExprPtr a;
  ExprPtr b;
};

ExprPtr id(const ObjectWord& w);
ExprPtr gen(std::string name);
ExprPtr compose(ExprPtr first, ExprPtr then);
ExprPtr tensor(ExprPtr left, ExprPtr right);
ExprPtr braid(const ObjectWord& x, const ObjectWord& y);
ExprPtr braid_inv(const ObjectWord& x, const ObjectWord& y);
// Left-to-right chains: seq({a, b, c}) = c after b after a; par({a, b}) = a (x) b.
ExprPtr seq(std::initializer_list<ExprPtr> parts);
ExprPtr par(std::initializer_list<ExprPtr> parts);

std::string to_string(const ExprPtr& e);

// Named morphisms and objects that expressions refer to.
class GeneratorEnv {
 public:
  explicit GeneratorEnv(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  const ContextPtr& context() const { return ctx_; }
  // Rebinding a name replaces the previous morphism.
  void bind(const std::string& name, LinearMorphism m);
  void bind_object(const ObjRef& obj);
  void bind_object(const std::string& name, const ObjRef& obj);
  const LinearMorphism* find(const std::string& name) const;
  const LinearMorphism& get(const std::string& name) const;  // UnboundGenerator
  ObjRef object(const std::string& name) const;               // UnboundGenerator
  const std::map<std::string, LinearMorphism>& generators() const { return gens_; }

 private:
  ContextPtr ctx_;
  std::map<std::string, LinearMorphism> gens_;
  std::map<std::string, ObjRef> objects_;
};

struct Typing {
  ObjectWord dom;
  ObjectWord cod;
};

// Infers domain and codomain. Errors carry the offending sub-expression path
// ("$" is the root; ".first/.then" descend into compositions, ".left/.right"
// into tensor products).
Typing expr_validate(const ExprPtr& e, const GeneratorEnv& env);
LinearMorphism expr_evaluate(const ExprPtr& e, const GeneratorEnv& env);

// Text syntax: id[H], id[H*Hd], id[] (unit), c[X,Y], cinv[X,Y], bare generator
// names, `;` for composition (left first), `*` for tensor (binds tighter),
// parentheses. Object names are resolved through the env.
ExprPtr parse_expr(std::string_view text, const GeneratorEnv& env);
// Parse and evaluate.
LinearMorphism eval(std::string_view text, const GeneratorEnv& env);

}  // namespace ydhopf
