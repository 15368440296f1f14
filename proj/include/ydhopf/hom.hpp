#pragma once

#include <string>
#include <utility>

#include "ydhopf/hopf.hpp"

namespace ydhopf {

// kG with m, Delta(g) = g (x) g, S(g) = g^{-1}, on a plain carrier named "B"
// (trivial degree and action, so its braiding is the flip).
BraidedHopfAlgebra group_algebra(const ContextPtr& ctx);

// The kG-module and kG-comodule structure of M as maps between plain objects:
// alpha: B (x) M~ -> M~ and phi: M~ -> B (x) M~, where M~ is a plain copy of M
// named `plain_name`.
struct PlainModuleComodule {
  ObjRef plain;
  LinearMorphism alpha;
  LinearMorphism phi;
};
PlainModuleComodule plain_structure(const ObjRef& m, const BraidedHopfAlgebra& b, const std::string& plain_name);

// Module law, comodule law, and the Yetter-Drinfeld compatibility
//   phi(b.m) = b_11 m_-1 S(b_2) (x) b_12 . m_0
// with both sides evaluated as maps B (x) M -> B (x) M.
Report check_yd_condition(const ObjRef& m);

struct HomObject {
  ObjRef v;
  ObjRef w;
  ObjRef carrier;  // basis E_{j,i}: v_i -> w_j at index j*dim(V) + i
};

// Degree deg(w_j) - deg(v_i); g.f = g f g^{-1}.
HomObject hom_object(const ObjRef& v, const ObjRef& w, std::string name = "");
// Hom(V,W) (x) V -> W.
LinearMorphism hom_evaluation(const HomObject& h);
// Hom(V,W) (x) Hom(U,V) -> Hom(U,W), f (x) g -> f o g.
LinearMorphism hom_composition(const HomObject& vw, const HomObject& uv, const HomObject& uw);

// Module, comodule and YD laws of Hom(V,W), plus agreement of its action and
// coaction with the evaluation tangles; for W the unit object also the dual
// coaction identity <f_0, x> f_-1 = <f, x_0> S^{-1}(x_-1).
Report check_hom_yd(const ObjRef& v, const ObjRef& w);

// Lifts two objects over different groups (same field) to the product group,
// each factor acting trivially on the other object. Same context: unchanged.
std::pair<ObjRef, ObjRef> lift_to_common_context(const ObjRef& a, const ObjRef& b);

struct EndAlgebra {
  ObjRef m;  // the object M
  HomObject hom;
  LinearMorphism mult;  // composition E (x) E -> E
  LinearMorphism unit;  // I -> E, id_M
  LinearMorphism act;   // E (x) M -> M

  ObjRef carrier() const { return hom.carrier; }
  Algebra algebra() const { return {ObjectWord(hom.carrier), mult, unit}; }
};

EndAlgebra end_algebra(const ObjRef& m, std::string name = "E");
// Algebra axioms, YD-ness of composition/unit/act, and
// act(m_E (x) id) = act(id (x) act), act(eta_E (x) id) = id.
Report end_algebra_report(const EndAlgebra& e);
// end_algebra verified by end_algebra_report; AxiomFailure otherwise.
EndAlgebra end_as_algebra_in_category(const ObjRef& m, std::string name = "E");

// Injectivity of E -> Hom(M, M) induced by act: E (x) M -> M.
bool check_elimination(const LinearMorphism& act);
bool check_act_is_yd(const BraidedHopfAlgebra& h);
bool check_pairing_is_yd(const LinearMorphism& pairing);

}  // namespace ydhopf
