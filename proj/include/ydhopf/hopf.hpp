#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ydhopf/expr.hpp"
#include "ydhopf/report.hpp"

namespace ydhopf {

// Unital associative algebra on a tensor word.
struct Algebra {
  ObjectWord carrier;
  LinearMorphism m;    // carrier (x) carrier -> carrier
  LinearMorphism eta;  // I -> carrier
};

struct BraidedHopfAlgebra {
  ObjRef carrier;
  LinearMorphism m, eta, delta, eps, S, Sbar;

  ObjectWord word() const { return ObjectWord(carrier); }
  Algebra algebra() const { return {word(), m, eta}; }
};

struct HopfData {
  ObjRef carrier;
  LinearMorphism m, eta, delta, eps;
  std::optional<LinearMorphism> S;
};

// Structure maps are YD morphisms; (co)associativity, (co)unitality, braided
// multiplicativity of delta and eps, both antipode laws, S and Sbar inverse.
Report hopf_axiom_report(const BraidedHopfAlgebra& h);
// Solves S when absent. Throws NotYDMorphism / AxiomFailure naming the first
// failing map or axiom.
BraidedHopfAlgebra hopf_build(HopfData data);
// Same assembly without any axiom check (diagnostics on structures that fail
// them); S solved when absent, Sbar zero when S is singular.
BraidedHopfAlgebra hopf_assemble(HopfData data);
// (S, Sbar). NoAntipode if m(S (x) id)delta = eta eps has no solution,
// NonInvertibleAntipode if S is singular.
std::pair<LinearMorphism, LinearMorphism> antipode_solve(const ObjRef& carrier, const LinearMorphism& m,
                                                         const LinearMorphism& eta,
                                                         const LinearMorphism& delta,
                                                         const LinearMorphism& eps,
                                                         bool invert = true);

Report algebra_axiom_report(const std::string& prefix, const Algebra& a);

// Binds the carrier under `label` together with m_L, eta_L, Delta_L, eps_L,
// S_L, Sinv_L for L = label.
void bind_hopf(GeneratorEnv& env, const BraidedHopfAlgebra& h, const std::string& label);

// <f, h> = delta_{f,h} on Hd (x) H -> I.
LinearMorphism dual_basis_pairing(const ObjRef& hd, const ObjRef& h);
bool pairing_left_faithful(const LinearMorphism& pairing);

struct QuasiDual {
  BraidedHopfAlgebra hd;
  LinearMorphism pairing;  // Hd (x) H -> I
};

// Carrier = dual_object(H); every structure map solved from the pairing
// identities with the dual-basis evaluation, then verified. Requires symmetric
// braiding on H (NonSymmetricBraiding).
QuasiDual quasi_dual_build(const BraidedHopfAlgebra& h, const std::string& name = "Hd");
// The solved structure maps without the Hopf axiom check.
QuasiDual quasi_dual_solve(const BraidedHopfAlgebra& h, const std::string& name = "Hd");
Report quasi_dual_check(const BraidedHopfAlgebra& h, const BraidedHopfAlgebra& hd,
                        const LinearMorphism& pairing);

// The four actions induced by the pairing.
struct Harpoons {
  LinearMorphism h_on_hd;  // H (x) Hd -> Hd,  h -> f  = f_1 <f_2, h>
  LinearMorphism hd_on_h;  // Hd (x) H -> H,   f -> h  = h_1 <f, h_2>
  LinearMorphism hd_by_h;  // Hd (x) H -> Hd,  f <- h  = <f_1, h> f_2
  LinearMorphism h_by_hd;  // H (x) Hd -> H,   h <- f  = <f, h_1> h_2
};

// Env with H, Hd, their structure maps and `ev` bound.
GeneratorEnv pairing_env(const BraidedHopfAlgebra& h, const BraidedHopfAlgebra& hd,
                         const LinearMorphism& pairing);
Harpoons harpoon_maps(const BraidedHopfAlgebra& h, const BraidedHopfAlgebra& hd,
                      const LinearMorphism& pairing);
Report harpoon_report(const BraidedHopfAlgebra& h, const BraidedHopfAlgebra& hd, const Harpoons& hp);
// Builds and verifies; ModuleAxiomFailure names the failing action.
Harpoons harpoon_actions(const BraidedHopfAlgebra& h, const BraidedHopfAlgebra& hd,
                         const LinearMorphism& pairing);

enum class Side { Left, Right };
// Module and module-algebra laws for `act` (K (x) A -> A on the left,
// A (x) K -> A on the right) with the braided crossing between K and A.
Report module_algebra_report(const std::string& prefix, const Algebra& a, const BraidedHopfAlgebra& k,
                             const LinearMorphism& act, Side side);

}  // namespace ydhopf
