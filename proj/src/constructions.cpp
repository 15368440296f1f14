#include "ydhopf/constructions.hpp"

#include "ydhopf/error.hpp"
#include "ydhopf/linalg.hpp"

namespace ydhopf {

namespace {

GeneratorEnv algebra_env(const Algebra& a, const BraidedHopfAlgebra& k, const LinearMorphism& act) {
  GeneratorEnv env(a.carrier.context());
  env.bind("mA", a.m);
  env.bind("etaA", a.eta);
  env.bind("mK", k.m);
  env.bind("etaK", k.eta);
  env.bind("DK", k.delta);
  env.bind("act", act);
  return env;
}

void require_symmetric(const std::vector<ObjectWord>& words) {
  for (const ObjectWord& x : words)
    for (const ObjectWord& y : words)
      if (!symmetric_pair_check(x, y))
        fail(ErrorKind::NonSymmetricBraiding, "braiding c[" + x.str() + "," + y.str() + "] is not symmetric");
}

// H, Hd, E, ev, act and the four harpoons; enough for lambda and rho.
GeneratorEnv pair_env(const Duality& d) {
  GeneratorEnv env = pairing_env(d.h, d.hd, d.pairing);
  env.bind_object("E", d.end.carrier());
  env.bind("m_E", d.end.mult);
  env.bind("eta_E", d.end.unit);
  env.bind("act", d.end.act);
  env.bind("hr_H_Hd", d.hp.h_on_hd);
  env.bind("hr_Hd_H", d.hp.hd_on_h);
  env.bind("hl_Hd_H", d.hp.hd_by_h);
  env.bind("hl_H_Hd", d.hp.h_by_hd);
  return env;
}

void bind_if(GeneratorEnv& env, const std::string& name, const LinearMorphism& m) {
  if (m.dom().context()) env.bind(name, m);
}

}  // namespace

Report comodule_algebra_report(const ComoduleAlgebra& r, const BraidedHopfAlgebra& hd) {
  GeneratorEnv env(r.carrier->context());
  bind_hopf(env, hd, "Hd");
  env.bind_object("R", r.carrier);
  env.bind("m_R", r.m);
  env.bind("eta_R", r.eta);
  env.bind("psi", r.psi);
  Report rep = algebra_axiom_report("comodule.", r.algebra());
  rep.check("comodule.yd.psi", "psi is a YD morphism", is_yd_morphism(r.psi));
  rep.check_equal("comodule.coassoc", "(psi (x) id) psi = (id (x) Delta) psi", eval("psi ; psi * id[Hd]", env),
                  eval("psi ; id[R] * Delta_Hd", env));
  rep.check_equal("comodule.counit", "(id (x) eps) psi = id", eval("psi ; id[R] * eps_Hd", env),
                  LinearMorphism::identity(ObjectWord(r.carrier)));
  rep.check_equal("comodule.mult", "psi(r r') = r_0 r'_0 (x) r_1 r'_1",
                  eval("m_R ; psi", env),
                  eval("psi * psi ; id[R] * c[Hd,R] * id[Hd] ; m_R * m_Hd", env));
  rep.check_equal("comodule.unit", "psi(1) = 1 (x) 1", eval("eta_R ; psi", env), eval("eta_R * eta_Hd", env));
  return rep;
}

Algebra smash_product(const Algebra& a, const BraidedHopfAlgebra& k, const LinearMorphism& act) {
  GeneratorEnv env = algebra_env(a, k, act);
  const ObjectWord& A = a.carrier;
  const ObjectWord K = k.word();
  auto iA = id(A), iK = id(K);
  Algebra s;
  s.carrier = A + K;
  s.m = expr_evaluate(seq({par({iA, gen("DK"), iA, iK}), par({iA, iK, braid(K, A), iK}),
                           par({iA, gen("act"), iK, iK}), par({gen("mA"), gen("mK")})}),
                      env);
  s.eta = tensor(a.eta, k.eta);
  return s;
}

Algebra braided_tensor_algebra(const Algebra& a, const Algebra& b) {
  GeneratorEnv env(a.carrier.context());
  env.bind("mA", a.m);
  env.bind("mB", b.m);
  auto iA = id(a.carrier), iB = id(b.carrier);
  Algebra t;
  t.carrier = a.carrier + b.carrier;
  t.m = expr_evaluate(seq({par({iA, braid(b.carrier, a.carrier), iB}), par({gen("mA"), gen("mB")})}), env);
  t.eta = tensor(a.eta, b.eta);
  return t;
}

ComoduleAlgebra regular_comodule_algebra(const BraidedHopfAlgebra& hd) {
  ComoduleAlgebra r;
  r.carrier = hd.carrier->renamed("R");
  const ObjectWord R(r.carrier);
  r.m = hd.m.retyped(R + R, R);
  r.eta = hd.eta.retyped(hd.eta.dom(), R);
  r.psi = hd.delta.retyped(R, R + hd.word());
  return r;
}

LinearMorphism lambda_map(const Duality& d) {
  GeneratorEnv env = pair_env(d);
  return solve_curried(d.end.act, 1,
                       eval("id[H] * id[Hd] * Delta_H ; id[H] * c[Hd,H] * id[H] ; m_H * ev", env), 2);
}

LinearMorphism rho_map(const Duality& d) {
  GeneratorEnv env = pair_env(d);
  return solve_curried(d.end.act, 1, eval("id[Hd] * id[H] * Delta_H ; id[Hd] * c[H,H*H] ; ev * m_H", env),
                       2);
}

Duality build_duality(const ComoduleAlgebra& r, const BraidedHopfAlgebra& h, const BraidedHopfAlgebra& hd,
                      const LinearMorphism& pairing) {
  require_symmetric({h.word(), hd.word(), ObjectWord(r.carrier)});
  Duality d;
  d.h = h;
  d.hd = hd;
  d.pairing = pairing;
  d.r = r;
  d.hp = harpoon_maps(h, hd, pairing);
  d.end = end_algebra(h.carrier, "E");
  require_symmetric({h.word(), hd.word(), ObjectWord(r.carrier), ObjectWord(d.end.carrier())});
  d.h_hd = smash_product(h.algebra(), hd, d.hp.hd_on_h);
  d.hd_h = smash_product(hd.algebra(), h, d.hp.h_on_hd);
  d.lambda = lambda_map(d);
  d.rho = rho_map(d);
  d.lambda_bar = solve_left_inverse(d.lambda);

  GeneratorEnv env = d.env();
  d.w = eval("Sinv_Hd * eta_H ; rho ; lambar", env);
  env.bind("w", d.w);
  d.alpha = eval("id[H] * psi ; c[H,R] * id[Hd] ; id[R] * c[H,Hd] ; id[R] * ev", env);
  env.bind("alpha", d.alpha);
  d.r_h = smash_product(r.algebra(), h, d.alpha);
  d.act_prime = eval("c[Hd,R] * id[H] ; id[R] * hr_Hd_H", env);
  d.r_h_hd = smash_product(d.r_h, hd, d.act_prime);
  d.r_x_hhd = braided_tensor_algebra(r.algebra(), d.h_hd);
  d.r_x_e = braided_tensor_algebra(r.algebra(), d.end.algebra());
  d.Psi = eval(
      "psi * id[H] * id[Hd] ; id[R] * S_Hd * id[H] * id[Hd] ; id[R] * w * id[H] * id[Hd] ;"
      " id[R] * id[H] * Delta_Hd * id[H] * id[Hd] ; id[R] * id[H] * id[Hd] * c[Hd,H] * id[Hd] ;"
      " id[R] * id[H] * hr_Hd_H * id[Hd] * id[Hd] ; id[R] * id[H] * id[H] * m_Hd ; id[R] * m_H * id[Hd]",
      env);
  d.Phi = eval(
      "psi * id[H] * id[Hd] ; id[R] * w * id[H] * id[Hd] ;"
      " id[R] * id[H] * Delta_Hd * id[H] * id[Hd] ; id[R] * id[H] * id[Hd] * c[Hd,H] * id[Hd] ;"
      " id[R] * id[H] * hr_Hd_H * id[Hd] * id[Hd] ; id[R] * id[H] * id[H] * m_Hd ; id[R] * m_H * id[Hd]",
      env);
  const ObjectWord rhhd = d.r_h_hd.carrier;
  d.Phi = d.Phi.retyped(rhhd, d.r_x_hhd.carrier);
  d.Psi = d.Psi.retyped(d.r_x_hhd.carrier, rhhd);
  d.xi = eval("psi ; id[R] * Sinv_Hd ; id[R] * id[Hd] * eta_H ; id[R] * rho", env);
  env.bind("xi", d.xi);
  d.Phi_prime = eval("xi * lam ; id[R] * m_E", env);
  return d;
}

GeneratorEnv Duality::env() const {
  GeneratorEnv env = pair_env(*this);
  env.bind_object("R", r.carrier);
  env.bind("m_R", r.m);
  env.bind("eta_R", r.eta);
  env.bind("psi", r.psi);
  env.bind("m_HHd", h_hd.m);
  env.bind("eta_HHd", h_hd.eta);
  env.bind("m_HdH", hd_h.m);
  env.bind("eta_HdH", hd_h.eta);
  bind_if(env, "lam", lambda);
  bind_if(env, "rho", rho);
  bind_if(env, "lambar", lambda_bar);
  bind_if(env, "w", w);
  bind_if(env, "alpha", alpha);
  bind_if(env, "act_RH", act_prime);
  bind_if(env, "Psi", Psi);
  bind_if(env, "Phi", Phi);
  bind_if(env, "xi", xi);
  bind_if(env, "Phi_prime", Phi_prime);
  return env;
}

Report lambda_rho_report(const Duality& d) {
  GeneratorEnv env = d.env();
  Report r;
  r.check_equal("lambda.display", "act(lambda(h#f) (x) k) = h k_1 <f, k_2>", eval("lam * id[H] ; act", env),
                eval("id[H] * id[Hd] * Delta_H ; id[H] * c[Hd,H] * id[H] ; m_H * ev", env));
  r.check_equal("rho.display", "act(rho(f#h) (x) k) = <f, k_1> k_2 h", eval("rho * id[H] ; act", env),
                eval("id[Hd] * id[H] * Delta_H ; id[Hd] * c[H,H*H] ; ev * m_H", env));
  r.check_equal("lambda.mult", "lambda(u v) = lambda(u) lambda(v)", eval("m_HHd ; lam", env),
                eval("lam * lam ; m_E", env));
  r.check_equal("lambda.unit", "lambda(1#1) = id", eval("eta_HHd ; lam", env), d.end.unit);
  r.check_equal("rho.antimult", "rho(u v) = rho(v) rho(u)", eval("m_HdH ; rho", env),
                eval("c[Hd*H,Hd*H] ; rho * rho ; m_E", env));
  r.check_equal("rho.unit", "rho(1#1) = id", eval("eta_HdH ; rho", env), d.end.unit);
  r.check("lambda.yd", "lambda is a YD morphism", is_yd_morphism(d.lambda));
  r.check("rho.yd", "rho is a YD morphism", is_yd_morphism(d.rho));
  return r;
}

Report lambda_bar_report(const Duality& d) {
  GeneratorEnv env = d.env();
  Report r;
  r.check("lambdabar.elimination", "e -> act(e (x) -) injective", check_elimination(d.end.act));
  r.check_equal("lambdabar.left-inverse", "lambda_bar lambda = id", eval("lam ; lambar", env),
                LinearMorphism::identity(d.lambda.dom()));
  r.check_equal("lambdabar.mult", "lambda_bar(e e') = lambda_bar(e) lambda_bar(e')", eval("m_E ; lambar", env),
                eval("lambar * lambar ; m_HHd", env));
  r.check("lambdabar.yd", "lambda_bar is a YD morphism", is_yd_morphism(d.lambda_bar));
  LinearMorphism lam1, lb2;
  bool built = r.guarded("lambdabar.second-construction", "lambda' and lambda_bar_2 solvable", [&] {
    lam1 = solve_curried(d.end.act, 1, eval("id[H] * ev", env), 2);
    lb2 = solve_curried(
        d.end.act, 1,
        eval("id[E] * Delta_H ; id[E] * Sinv_H * id[H] ; id[E] * c[H,H] ; act * id[H] ; m_H", env), 1);
    return true;
  });
  if (built) {
    r.check_equal("lambdabar.second-composite", "lambda_bar_2 lambda = lambda'", compose(d.lambda, lb2), lam1);
    r.guarded_equal("lambdabar.second-inverse", "lambda'^{-1} lambda_bar_2 = lambda^{-1} on Im lambda", [&] {
      return std::make_pair(compose(lb2, solve_left_inverse(lam1)), d.lambda_bar);
    });
  }
  return r;
}

Report exchange_report(const Duality& d) {
  GeneratorEnv env = d.env();
  Report r;
  auto acted = [&](const std::string& body) { return eval("(" + body + ") * id[H] ; act", env); };
  auto both = [&](const std::string& name, const std::string& anchor, const std::string& lhs,
                  const std::string& rhs) {
    r.guarded_equal(name, anchor, [&] { return std::make_pair(acted(lhs), acted(rhs)); });
  };
  both("exchange.main", "lambda(h#f) rho(f'#h') = rho(f'_2 # (f_2 -> h')) lambda((h <- S f'_1) # f_1)",
       "lam * rho ; m_E",
       "id[H] * c[Hd,Hd] * id[H] ; c[H,Hd] * c[Hd,H] ; Delta_Hd * c[H,H] * Delta_Hd ;"
       " S_Hd * id[Hd] * id[H] * id[H] * c[Hd,Hd] ; c[Hd,Hd] * id[H] * c[H,Hd] * id[Hd] ;"
       " id[Hd] * c[Hd,H] * id[Hd] * id[H] * id[Hd] ; id[Hd] * id[H] * c[Hd,Hd] * id[H] * id[Hd] ;"
       " id[Hd] * c[H,Hd] * c[Hd,H] * id[Hd] ; id[Hd] * hr_Hd_H * hl_H_Hd * id[Hd] ; rho * lam ; m_E");
  both("exchange.h-h", "lambda(h#1) rho(1#h') = rho(1#h') lambda(h#1)",
       "id[H] * eta_Hd * eta_Hd * id[H] ; lam * rho ; m_E",
       "c[H,H] ; eta_Hd * id[H] * id[H] * eta_Hd ; rho * lam ; m_E");
  both("exchange.f-f", "lambda(1#f) rho(f'#1) = rho(f'#1) lambda(1#f)",
       "eta_H * id[Hd] * id[Hd] * eta_H ; lam * rho ; m_E",
       "c[Hd,Hd] ; id[Hd] * eta_H * eta_H * id[Hd] ; rho * lam ; m_E");
  const std::string p3 = "id[Hd] * eta_H * id[H] * eta_Hd ; ";
  both("exchange.rho-lambda", "rho(f#1) lambda(h#1) = lambda(h <- f_1 # 1) rho(f_2#1) (crossed)",
       p3 + "rho * lam ; m_E",
       p3 + "id[Hd] * c[H,H] * id[Hd] ; c[Hd,H] * c[H,Hd] ; id[H] * c[Hd,Hd] * id[H] ;"
            " id[H] * id[Hd] * Delta_Hd * id[H] ; id[H] * c[Hd,Hd] * id[Hd] * id[H] ;"
            " hl_H_Hd * id[Hd] * rho ; lam * id[E] ; m_E");
  const std::string p4 = "id[H] * eta_Hd * id[Hd] * eta_H ; ";
  both("exchange.h-f", "lambda(h#1) rho(f#1) = rho(f_2#1) lambda(h <- S f_1 # 1)", p4 + "lam * rho ; m_E",
       p4 + "id[H] * c[Hd,Hd] * id[H] ; c[H,Hd] * c[Hd,H] ; Delta_Hd * c[H,H] * id[Hd] ;"
            " S_Hd * id[Hd] * id[H] * id[H] * id[Hd] ; c[Hd,Hd] * id[H] * id[H] * id[Hd] ;"
            " id[Hd] * c[Hd,H] * id[H] * id[Hd] ; rho * c[Hd,H] * id[Hd] ; id[E] * hl_H_Hd * id[Hd] ;"
            " id[E] * lam ; m_E");
  const std::string p5 = "eta_H * id[Hd] * eta_Hd * id[H] ; ";
  both("exchange.f-h", "lambda(1#f) rho(1#h) = rho(1 # (f_2 -> h)) lambda(1#f_1)", p5 + "lam * rho ; m_E",
       p5 + "id[H] * c[Hd,Hd] * id[H] ; c[H,Hd] * c[Hd,H] ; id[Hd] * c[H,H] * Delta_Hd ;"
            " id[Hd] * id[H] * id[H] * c[Hd,Hd] ; id[Hd] * id[H] * c[H,Hd] * id[Hd] ;"
            " id[Hd] * c[H,Hd] * lam ; id[Hd] * hr_Hd_H * id[E] ; rho * id[E] ; m_E");
  return r;
}

bool check_rl_condition(const Duality& d, const std::vector<SparseVec>& u_basis) {
  const Field& f = d.h.carrier->context()->field;
  const std::uint64_t n = d.h.carrier->dim(), nd = d.hd.carrier->dim();
  const std::uint64_t de = d.lambda.rows();
  if (u_basis.empty()) return true;
  DenseMatrix span(de, n * u_basis.size());
  for (std::size_t j = 0; j < u_basis.size(); ++j)
    for (std::uint64_t h = 0; h < n; ++h) {
      SparseVec in;
      for (const Term& t : u_basis[j]) in.push_back({h * nd + t.index, t.value});
      for (const Term& t : d.lambda.apply(in)) span.at(t.index, j * n + h) = t.value;
    }
  const SparseVec& one = d.h.eta.column(0);
  for (const SparseVec& u : u_basis) {
    SparseVec in;
    for (const Term& a : u)
      for (const Term& b : one) in.push_back({a.index * n + b.index, f.mul(a.value, b.value)});
    normalize(in, f);
    std::vector<Scalar> v(de, 0);
    for (const Term& t : d.rho.apply(in)) v[t.index] = t.value;
    if (!in_column_span(span, v, f)) return false;
  }
  return true;
}

bool rho_equals_lambda_on_units(const Duality& d) {
  GeneratorEnv env = d.env();
  return morphism_equal(eval("id[Hd] * eta_H ; rho", env), eval("eta_H * id[Hd] ; lam", env));
}

Report proof_machinery_report(const Duality& d) {
  GeneratorEnv env = d.env();
  env.bind("m_RE", d.r_x_e.m);
  env.bind("eta_RE", d.r_x_e.eta);
  env.bind("m_RHHd", d.r_h_hd.m);
  Report r;
  r.check_equal("xi.mult", "xi(r r') = xi(r) xi(r')", eval("m_R ; xi", env), eval("xi * xi ; m_RE", env));
  r.check_equal("xi.unit", "xi(1) = 1 (x) id", eval("eta_R ; xi", env), d.r_x_e.eta);
  r.check_equal("xi.relation", "lambda(h#f) xi(r) crossed = xi(alpha(h_1 (x) r)) lambda(h_2#f)",
                eval("lam * xi ; c[E,R] * id[E] ; id[R] * m_E", env),
                eval("Delta_H * c[Hd,R] ; id[H] * c[H,R] * id[Hd] ; alpha * lam ; xi * id[E] ; id[R] * m_E",
                     env));
  const ObjectWord rhhd = d.r_h_hd.carrier;
  LinearMorphism php = d.Phi_prime.retyped(rhhd, d.Phi_prime.cod());
  r.check_equal("phiprime.mult", "Phi'(u v) = Phi'(u) Phi'(v)", compose(d.r_h_hd.m, php),
                compose(tensor(php, php), d.r_x_e.m));
  r.check_equal("phiprime.unit", "Phi'(1) = 1", compose(d.r_h_hd.eta, php), d.r_x_e.eta);
  r.check_equal("phiprime.factor", "Phi = (id (x) lambda_bar) Phi'",
                compose(php, tensor(LinearMorphism::identity(ObjectWord(d.r.carrier)), d.lambda_bar))
                    .retyped(rhhd, d.r_x_hhd.carrier),
                d.Phi);
  return r;
}

Report verify_duality(const ComoduleAlgebra& r, const BraidedHopfAlgebra& h, const BraidedHopfAlgebra& hd,
                      const LinearMorphism& pairing) {
  Report rep;
  bool paired = false;
  rep.guarded("pairing", "pairing identities hold", [&] {
    Report q = quasi_dual_check(h, hd, pairing);
    rep.append(q);
    paired = q.verdict();
    return paired;
  });
  if (!paired) return rep;
  Duality d;
  if (!rep.guarded("duality.build", "every duality map constructible", [&] {
        d = build_duality(r, h, hd, pairing);
        return true;
      }))
    return rep;
  rep.append(harpoon_report(h, hd, d.hp));
  rep.append(end_algebra_report(d.end));
  rep.append(lambda_rho_report(d));
  rep.append(lambda_bar_report(d));
  GeneratorEnv env = d.env();
  rep.check_equal("w.mult", "w(f f') = w(f) w(f')", eval("m_Hd ; w", env), eval("w * w ; m_HHd", env));
  rep.check_equal("w.unit", "w(1) = 1#1", eval("eta_Hd ; w", env), d.h_hd.eta);
  rep.append(comodule_algebra_report(r, hd));
  rep.append(module_algebra_report("alpha.", r.algebra(), h, d.alpha, Side::Left));
  rep.append(algebra_axiom_report("smash.r-h.", d.r_h));
  rep.append(module_algebra_report("act-rh.", d.r_h, hd, d.act_prime, Side::Left));
  rep.append(algebra_axiom_report("smash.r-h-hd.", d.r_h_hd));
  rep.append(algebra_axiom_report("tensor.r-hhd.", d.r_x_hhd));
  const ObjectWord rhhd = d.r_h_hd.carrier;
  rep.check_equal("duality.psi-phi", "Psi Phi = id", compose(d.Phi, d.Psi), LinearMorphism::identity(rhhd));
  rep.check_equal("duality.phi-psi", "Phi Psi = id", compose(d.Psi, d.Phi),
                  LinearMorphism::identity(d.r_x_hhd.carrier));
  rep.check_equal("duality.phi-mult", "Phi(u v) = Phi(u) Phi(v)", compose(d.r_h_hd.m, d.Phi),
                  compose(tensor(d.Phi, d.Phi), d.r_x_hhd.m));
  rep.check_equal("duality.phi-unit", "Phi(1) = 1", compose(d.r_h_hd.eta, d.Phi), d.r_x_hhd.eta);
  return rep;
}

}  // namespace ydhopf
