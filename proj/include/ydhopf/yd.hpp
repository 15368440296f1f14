#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ydhopf/group.hpp"
#include "ydhopf/sparse.hpp"

namespace ydhopf {

class YDObject;
using ObjRef = std::shared_ptr<const YDObject>;

// A Yetter-Drinfeld module over kG: a G-graded space (the coaction) with a
// grading-preserving G-action given by one matrix per cyclic generator.
class YDObject {
 public:
  // Validates shapes, grading compatibility, commutation and generator orders.
  static ObjRef build(std::string name, ContextPtr ctx, std::vector<GroupElement> degrees,
                      std::vector<DenseMatrix> action);
  // Skips the invariant checks (mutation tests feed broken objects to the checkers).
  static ObjRef build_unchecked(std::string name, ContextPtr ctx, std::vector<GroupElement> degrees,
                                std::vector<DenseMatrix> action);
  // One-dimensional, degree 0, trivial action.
  static ObjRef unit(ContextPtr ctx, std::string name = "I");
  // Every basis vector of degree 0 with trivial action; its braiding is the plain flip.
  static ObjRef plain(std::string name, ContextPtr ctx, std::size_t dim);

  ObjRef renamed(std::string name) const;

  const std::string& name() const { return name_; }
  const ContextPtr& context() const { return ctx_; }
  std::size_t dim() const { return degrees_.size(); }
  GroupElement degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<GroupElement>& degrees() const { return degrees_; }
  const std::vector<DenseMatrix>& action() const { return action_; }
  // Column i of the matrix of g.
  const SparseVec& act(GroupElement g, std::size_t i) const { return element_action_[g][i]; }
  bool is_diagonal() const { return diagonal_; }

 private:
  YDObject() = default;
  void derive();

  std::string name_;
  ContextPtr ctx_;
  std::vector<GroupElement> degrees_;
  std::vector<DenseMatrix> action_;
  std::vector<std::vector<SparseVec>> element_action_;
  bool diagonal_ = true;
};

// Ordered tensor word of objects; basis indices are leftmost-major.
class ObjectWord {
 public:
  ObjectWord() = default;
  ObjectWord(ContextPtr ctx, std::vector<ObjRef> factors);
  ObjectWord(ObjRef obj);  // NOLINT: single-object words convert implicitly

  const ContextPtr& context() const { return ctx_; }
  const std::vector<ObjRef>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  std::uint64_t dim() const { return dim_; }

  ObjectWord operator+(const ObjectWord& o) const;
  ObjectWord slice(std::size_t from, std::size_t count) const;
  // "H*Hd"; the empty word prints as "I".
  std::string str() const;
  // Same object names in the same order.
  bool operator==(const ObjectWord& o) const;
  bool operator!=(const ObjectWord& o) const { return !(*this == o); }

  std::vector<std::uint64_t> split(std::uint64_t index) const;
  GroupElement degree(std::uint64_t index) const;
  // out += coef * (g . e_index), unnormalized.
  void act(GroupElement g, std::uint64_t index, Scalar coef, SparseVec& out) const;

 private:
  ContextPtr ctx_;
  std::vector<ObjRef> factors_;
  std::uint64_t dim_ = 1;
};

// Degrees add, actions tensor.
ObjRef tensor_object(const ObjRef& x, const ObjRef& y, std::string name = "");
// Dual basis: degree -deg(v_i), action inverse-transpose.
ObjRef dual_object(const ObjRef& x, std::string name = "");

void require_same_context(const ContextPtr& a, const ContextPtr& b);

}  // namespace ydhopf
