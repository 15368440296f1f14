#pragma once

#include <string>
#include <vector>

#include "ydhopf/hom.hpp"

namespace ydhopf {

// Right Hd-comodule algebra (R, psi: R -> R (x) Hd) on a single object.
struct ComoduleAlgebra {
  ObjRef carrier;
  LinearMorphism m, eta, psi;

  Algebra algebra() const { return {ObjectWord(carrier), m, eta}; }
};

// Coassociativity, counit, psi multiplicative and unital into R (x) Hd.
Report comodule_algebra_report(const ComoduleAlgebra& r, const BraidedHopfAlgebra& hd);

// A#K for a left K-module algebra A:
//   m = (m_A (x) m_K)(id (x) act (x) id)(id (x) id (x) c_{K,A} (x) id)(id (x) Delta_K (x) id (x) id).
Algebra smash_product(const Algebra& a, const BraidedHopfAlgebra& k, const LinearMorphism& act);
// A (x) B with m = (m_A (x) m_B)(id (x) c_{B,A} (x) id).
Algebra braided_tensor_algebra(const Algebra& a, const Algebra& b);

// Every map used by the duality isomorphism, built from the pairing.
struct Duality {
  BraidedHopfAlgebra h, hd;
  LinearMorphism pairing;
  ComoduleAlgebra r;
  Harpoons hp;
  EndAlgebra end;
  Algebra h_hd;  // H#Hd, Hd acting on H by f -> h
  Algebra hd_h;  // Hd#H, H acting on Hd by h -> f
  LinearMorphism lambda;      // H (x) Hd -> E, lambda(h#f)(k) = h k_1 <f, k_2>
  LinearMorphism rho;         // Hd (x) H -> E, rho(f#h)(k) = <f, k_1> k_2 h
  LinearMorphism lambda_bar;  // E -> H (x) Hd, exact inverse of lambda
  LinearMorphism w;           // Hd -> H (x) Hd, lambda_bar rho (Sbar (x) eta)
  LinearMorphism alpha;       // H (x) R -> R from the coaction
  Algebra r_h;                // R#H
  LinearMorphism act_prime;   // Hd (x) R (x) H -> R (x) H
  Algebra r_h_hd;             // (R#H)#Hd
  Algebra r_x_hhd;            // R (x) (H#Hd)
  Algebra r_x_e;              // R (x) E
  LinearMorphism Psi, Phi;    // R (x) (H#Hd) <-> (R#H)#Hd
  LinearMorphism xi;          // R -> R (x) E
  LinearMorphism Phi_prime;   // (R#H)#Hd -> R (x) E

  // H, Hd, R, E objects and every map above as named generators.
  GeneratorEnv env() const;
};

// The objects/generators of the Hopf pair only (H, Hd, E, ev, act, lam, rho, ...),
// without R. Throws NonSymmetricBraiding unless the braiding on {H, Hd} is symmetric.
Duality build_duality(const ComoduleAlgebra& r, const BraidedHopfAlgebra& h, const BraidedHopfAlgebra& hd,
                      const LinearMorphism& pairing);

// R = Hd renamed "R" with psi = Delta_Hd.
ComoduleAlgebra regular_comodule_algebra(const BraidedHopfAlgebra& hd);

LinearMorphism lambda_map(const Duality& d);
LinearMorphism rho_map(const Duality& d);

// lambda multiplicative and unital; rho anti-multiplicative and unital.
Report lambda_rho_report(const Duality& d);
// Elimination for act, lambda_bar a left inverse, and the second
// construction lambda_bar_2(e)(k) = e(k_2) Sbar(k_1) agreeing with it:
// lambda_bar_2 lambda = lambda' and lambda'^{-1} lambda_bar_2 = lambda^{-1}.
Report lambda_bar_report(const Duality& d);
// The exchange identity
//   lambda(h#f) rho(f'#h') = rho(f'_2 # (f_2 -> h')) lambda((h <- S f'_1) # f_1)
// and its five unit-specialised cases, all post-composed with act.
Report exchange_report(const Duality& d);
// rho(f#1) in span lambda(H # U) for every f in `u_basis` (vectors in Hd).
bool check_rl_condition(const Duality& d, const std::vector<SparseVec>& u_basis);
// rho(f#1) = lambda(1#f) for every f.
bool rho_equals_lambda_on_units(const Duality& d);
// xi multiplicative and unital, the relation
//   r_0 (x) lambda(h#f) xi_E(r) = alpha(h_1 (x) r)_0 (x) ... lambda(h_2#f),
// Phi' multiplicative, and Phi = (id (x) lambda_bar) Phi'.
Report proof_machinery_report(const Duality& d);

// Ordered ladder: pairing identities, harpoon laws, End and act laws, lambda/rho
// displays, lambda_bar, w, R-structures, Psi/Phi inverse, Phi algebra map.
// A failing pairing stops the ladder before the duality stage.
Report verify_duality(const ComoduleAlgebra& r, const BraidedHopfAlgebra& h, const BraidedHopfAlgebra& hd,
                      const LinearMorphism& pairing);

}  // namespace ydhopf
