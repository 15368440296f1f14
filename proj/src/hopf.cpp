#include "ydhopf/hopf.hpp"

#include <tuple>

#include "ydhopf/error.hpp"
#include "ydhopf/linalg.hpp"

namespace ydhopf {

namespace {

std::string witness_text(const Assertion& a) {
  std::string s = a.name;
  if (a.witness)
    s += " (row " + std::to_string(a.witness->row) + ", col " + std::to_string(a.witness->col) +
         ": " + std::to_string(a.witness->lhs) + " vs " + std::to_string(a.witness->rhs) + ")";
  if (!a.note.empty()) s += " " + a.note;
  return s;
}

}  // namespace

Report algebra_axiom_report(const std::string& prefix, const Algebra& a) {
  GeneratorEnv env(a.carrier.context());
  env.bind("m", a.m);
  env.bind("eta", a.eta);
  const ObjectWord& w = a.carrier;
  auto m = gen("m"), eta = gen("eta");
  Report r;
  r.check_equal(prefix + "assoc", "m(m (x) id) = m(id (x) m)", expr_evaluate(seq({par({m, id(w)}), m}), env),
                expr_evaluate(seq({par({id(w), m}), m}), env));
  r.check_equal(prefix + "unit-left", "m(eta (x) id) = id", expr_evaluate(seq({par({eta, id(w)}), m}), env),
                LinearMorphism::identity(w));
  r.check_equal(prefix + "unit-right", "m(id (x) eta) = id", expr_evaluate(seq({par({id(w), eta}), m}), env),
                LinearMorphism::identity(w));
  return r;
}

Report hopf_axiom_report(const BraidedHopfAlgebra& h) {
  const ContextPtr& ctx = h.carrier->context();
  GeneratorEnv env(ctx);
  env.bind("m", h.m);
  env.bind("eta", h.eta);
  env.bind("D", h.delta);
  env.bind("eps", h.eps);
  env.bind("S", h.S);
  env.bind("Sbar", h.Sbar);
  const ObjectWord w = h.word();
  const ObjectWord unit(ctx, {});
  auto m = gen("m"), eta = gen("eta"), D = gen("D"), eps = gen("eps"), S = gen("S"), Sbar = gen("Sbar");
  auto I = id(w);
  auto ev = [&](const ExprPtr& e) { return expr_evaluate(e, env); };
  const LinearMorphism idw = LinearMorphism::identity(w);

  Report r;
  r.check("hopf.yd.m", "m is a YD morphism", is_yd_morphism(h.m));
  r.check("hopf.yd.eta", "eta is a YD morphism", is_yd_morphism(h.eta));
  r.check("hopf.yd.delta", "Delta is a YD morphism", is_yd_morphism(h.delta));
  r.check("hopf.yd.eps", "eps is a YD morphism", is_yd_morphism(h.eps));
  r.check("hopf.yd.S", "S is a YD morphism", is_yd_morphism(h.S));
  r.check("hopf.yd.Sbar", "Sbar is a YD morphism", is_yd_morphism(h.Sbar));
  r.append(algebra_axiom_report("hopf.", h.algebra()));
  r.check_equal("hopf.coassoc", "(Delta (x) id)Delta = (id (x) Delta)Delta", ev(seq({D, par({D, I})})),
                ev(seq({D, par({I, D})})));
  r.check_equal("hopf.counit-left", "(eps (x) id)Delta = id", ev(seq({D, par({eps, I})})), idw);
  r.check_equal("hopf.counit-right", "(id (x) eps)Delta = id", ev(seq({D, par({I, eps})})), idw);
  r.check_equal("hopf.delta-mult", "Delta m = (m (x) m)(id (x) c (x) id)(Delta (x) Delta)", ev(seq({m, D})),
                ev(seq({par({D, D}), par({I, braid(w, w), I}), par({m, m})})));
  r.check_equal("hopf.delta-unit", "Delta eta = eta (x) eta", ev(seq({eta, D})), ev(par({eta, eta})));
  r.check_equal("hopf.eps-mult", "eps m = eps (x) eps", ev(seq({m, eps})), ev(par({eps, eps})));
  r.check_equal("hopf.eps-unit", "eps eta = 1", ev(seq({eta, eps})), LinearMorphism::identity(unit));
  r.check_equal("hopf.antipode-left", "m(S (x) id)Delta = eta eps", ev(seq({D, par({S, I}), m})),
                ev(seq({eps, eta})));
  r.check_equal("hopf.antipode-right", "m(id (x) S)Delta = eta eps", ev(seq({D, par({I, S}), m})),
                ev(seq({eps, eta})));
  r.check_equal("hopf.antipode-inverse-left", "Sbar S = id", ev(seq({S, Sbar})), idw);
  r.check_equal("hopf.antipode-inverse-right", "S Sbar = id", ev(seq({Sbar, S})), idw);
  return r;
}

std::pair<LinearMorphism, LinearMorphism> antipode_solve(const ObjRef& carrier, const LinearMorphism& m,
                                                         const LinearMorphism& eta,
                                                         const LinearMorphism& delta,
                                                         const LinearMorphism& eps, bool invert) {
  const ObjectWord w(carrier);
  const Field& f = carrier->context()->field;
  const std::size_t n = carrier->dim();
  // Unknown s_{k,a} (coefficient of e_k in S(e_a)) sits in column k*n + a;
  // row h*n + o is the e_o coefficient of m(S (x) id)Delta(e_h).
  DenseMatrix sys(n * n, n * n);
  DenseMatrix rhs(n * n, 1);
  for (std::size_t h = 0; h < n; ++h) {
    for (const Term& d : delta.column(h)) {
      std::uint64_t a = d.index / n, b = d.index % n;
      for (std::size_t k = 0; k < n; ++k)
        for (const Term& o : m.column(k * n + b))
          sys.at(h * n + o.index, k * n + a) = f.add(sys.at(h * n + o.index, k * n + a), f.mul(d.value, o.value));
    }
    SparseVec ee = eta.apply(eps.column(h));
    for (const Term& t : ee) rhs.at(h * n + t.index, 0) = t.value;
  }
  std::optional<DenseMatrix> sol;
  try {
    sol = solve(sys, rhs, f);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::RankDeficient) throw;
  }
  if (!sol) fail(ErrorKind::NoAntipode, "convolution inverse of id does not exist or is not unique");
  LinearMorphism S(w, w);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (sol->at(k * n + a, 0) != 0) S.add_entry(k, a, sol->at(k * n + a, 0));
  S.finalize();
  if (!invert) return {S, LinearMorphism(w, w)};
  try {
    return {S, solve_left_inverse(S)};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::RankDeficient) fail(ErrorKind::NonInvertibleAntipode, e.what());
    throw;
  }
}

namespace {

void check_types(const HopfData& data) {
  const ObjectWord w(data.carrier);
  const ObjectWord unit(data.carrier->context(), {});
  auto typed = [&](const LinearMorphism& f, const ObjectWord& dom, const ObjectWord& cod, const char* name) {
    if (f.dom() != dom || f.cod() != cod)
      fail(ErrorKind::ShapeMismatch, std::string(name) + " must be " + dom.str() + " -> " + cod.str() +
                                         ", got " + f.dom().str() + " -> " + f.cod().str());
  };
  typed(data.m, w + w, w, "m");
  typed(data.eta, unit, w, "eta");
  typed(data.delta, w, w + w, "Delta");
  typed(data.eps, w, unit, "eps");
  if (data.S) typed(*data.S, w, w, "S");
}

// Sbar = 0 when S is singular; the caller decides whether that is an error.
BraidedHopfAlgebra assemble(HopfData data, bool& singular) {
  const ObjectWord w(data.carrier);
  BraidedHopfAlgebra h{data.carrier, data.m, data.eta, data.delta, data.eps, {}, {}};
  singular = false;
  if (data.S) {
    h.S = *data.S;
  } else {
    h.S = antipode_solve(h.carrier, h.m, h.eta, h.delta, h.eps, false).first;
  }
  try {
    h.Sbar = solve_left_inverse(h.S);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::RankDeficient) throw;
    singular = true;
    h.Sbar = LinearMorphism(w, w);
  }
  return h;
}

}  // namespace

BraidedHopfAlgebra hopf_assemble(HopfData data) {
  check_types(data);
  bool singular = false;
  return assemble(std::move(data), singular);
}

BraidedHopfAlgebra hopf_build(HopfData data) {
  check_types(data);
  if (!data.S) {
    Algebra alg{ObjectWord(data.carrier), data.m, data.eta};
    const Report rep = algebra_axiom_report("hopf.", alg);
    for (const Assertion& a : rep.items())
      if (!a.pass) fail(ErrorKind::AxiomFailure, witness_text(a));
  }
  const bool solved = !data.S;
  bool singular = false;
  BraidedHopfAlgebra h = assemble(std::move(data), singular);
  if (solved && singular) fail(ErrorKind::NonInvertibleAntipode, "S is singular");

  Report r = hopf_axiom_report(h);
  for (const Assertion& a : r.items()) {
    if (a.pass) continue;
    if (a.name.rfind("hopf.yd.", 0) == 0) fail(ErrorKind::NotYDMorphism, a.name.substr(8));
    if (singular && a.name.rfind("hopf.antipode-inverse", 0) == 0)
      fail(ErrorKind::NonInvertibleAntipode, "S is singular");
    fail(ErrorKind::AxiomFailure, witness_text(a));
  }
  return h;
}

void bind_hopf(GeneratorEnv& env, const BraidedHopfAlgebra& h, const std::string& label) {
  env.bind_object(label, h.carrier);
  env.bind("m_" + label, h.m);
  env.bind("eta_" + label, h.eta);
  env.bind("Delta_" + label, h.delta);
  env.bind("eps_" + label, h.eps);
  env.bind("S_" + label, h.S);
  env.bind("Sinv_" + label, h.Sbar);
}

LinearMorphism dual_basis_pairing(const ObjRef& hd, const ObjRef& h) {
  if (hd->dim() != h->dim()) fail(ErrorKind::ShapeMismatch, "dual-basis pairing needs equal dimensions");
  const ObjectWord unit(h->context(), {});
  LinearMorphism p(ObjectWord(hd) + ObjectWord(h), unit);
  const std::uint64_t n = h->dim();
  for (std::uint64_t i = 0; i < n; ++i) p.set_column(i * n + i, {{0, 1}});
  return p;
}

bool pairing_left_faithful(const LinearMorphism& pairing) {
  const ObjectWord hd = pairing.dom().slice(0, 1);
  return rank(curry(pairing, 1), pairing.field()) == hd.dim();
}

QuasiDual quasi_dual_solve(const BraidedHopfAlgebra& h, const std::string& name) {
  const ObjectWord hw = h.word();
  if (!symmetric_pair_check(hw, hw))
    fail(ErrorKind::NonSymmetricBraiding, "braiding on " + h.carrier->name() + " is not symmetric");
  ObjRef hd = dual_object(h.carrier, name);
  LinearMorphism ev_map = dual_basis_pairing(hd, h.carrier);

  GeneratorEnv env(h.carrier->context());
  bind_hopf(env, h, "H");
  env.bind_object("Hd", hd);
  env.bind("ev", ev_map);

  HopfData d;
  d.carrier = hd;
  // <f f', h> = <f, h_1><f', h_2>, f' crossing h_1.
  d.m = solve_curried(ev_map, 1, eval("id[Hd] * id[Hd] * Delta_H ; id[Hd] * c[Hd,H] * id[H] ; ev * ev", env), 2);
  // <f, h h'> = <f_1, h><f_2, h'>, f_2 crossing h.
  d.delta = solve_curried(eval("id[Hd] * c[Hd,H] * id[H] ; ev * ev", env), 2, eval("id[Hd] * m_H ; ev", env), 1);
  // <eta, h> = eps(h).
  d.eta = solve_curried(ev_map, 1, h.eps, 0);
  // eps(f) = <f, eta>.
  d.eps = eval("id[Hd] * eta_H ; ev", env);
  // <S f, h> = <f, S h>.
  d.S = solve_curried(ev_map, 1, eval("id[Hd] * S_H ; ev", env), 1);
  return {hopf_assemble(std::move(d)), std::move(ev_map)};
}

QuasiDual quasi_dual_build(const BraidedHopfAlgebra& h, const std::string& name) {
  QuasiDual q = quasi_dual_solve(h, name);
  q.hd = hopf_build({q.hd.carrier, q.hd.m, q.hd.eta, q.hd.delta, q.hd.eps, q.hd.S});
  return q;
}

GeneratorEnv pairing_env(const BraidedHopfAlgebra& h, const BraidedHopfAlgebra& hd,
                         const LinearMorphism& pairing) {
  GeneratorEnv env(h.carrier->context());
  bind_hopf(env, h, "H");
  bind_hopf(env, hd, "Hd");
  const ObjectWord unit(h.carrier->context(), {});
  if (pairing.dom() != hd.word() + h.word() || pairing.cod() != unit)
    fail(ErrorKind::ShapeMismatch, "pairing must be Hd*H -> I, got " + pairing.dom().str() + " -> " +
                                       pairing.cod().str());
  env.bind("ev", pairing);
  return env;
}

Report quasi_dual_check(const BraidedHopfAlgebra& h, const BraidedHopfAlgebra& hd,
                        const LinearMorphism& pairing) {
  GeneratorEnv env = pairing_env(h, hd, pairing);
  Report r;
  r.check_equal("pairing.product", "<f, h h'> = <f_1, h><f_2, h'>", eval("id[Hd] * m_H ; ev", env),
                eval("Delta_Hd * id[H] * id[H] ; id[Hd] * c[Hd,H] * id[H] ; ev * ev", env));
  r.check_equal("pairing.unit", "<f, 1> = eps(f)", eval("id[Hd] * eta_H ; ev", env), hd.eps);
  r.check_equal("pairing.coproduct", "<f f', h> = <f, h_1><f', h_2>", eval("m_Hd * id[H] ; ev", env),
                eval("id[Hd] * id[Hd] * Delta_H ; id[Hd] * c[Hd,H] * id[H] ; ev * ev", env));
  r.check_equal("pairing.counit", "<1, h> = eps(h)", eval("eta_Hd * id[H] ; ev", env), h.eps);
  r.check_equal("pairing.antipode", "<S f, h> = <f, S h>", eval("S_Hd * id[H] ; ev", env),
                eval("id[Hd] * S_H ; ev", env));
  r.check("pairing.left-faithful", "f -> <f, -> injective", pairing_left_faithful(pairing));
  return r;
}

Harpoons harpoon_maps(const BraidedHopfAlgebra& h, const BraidedHopfAlgebra& hd,
                      const LinearMorphism& pairing) {
  GeneratorEnv env = pairing_env(h, hd, pairing);
  Harpoons hp;
  hp.h_on_hd = eval("id[H] * Delta_Hd ; c[H,Hd] * id[Hd] ; id[Hd] * c[H,Hd] ; id[Hd] * ev", env);
  hp.hd_on_h = eval("id[Hd] * Delta_H ; c[Hd,H] * id[H] ; id[H] * ev", env);
  hp.hd_by_h = eval("Delta_Hd * id[H] ; id[Hd] * c[Hd,H] ; ev * id[Hd]", env);
  hp.h_by_hd = eval("Delta_H * id[Hd] ; id[H] * c[H,Hd] ; c[H,Hd] * id[H] ; ev * id[H]", env);
  return hp;
}

Report module_algebra_report(const std::string& prefix, const Algebra& a, const BraidedHopfAlgebra& k,
                             const LinearMorphism& act, Side side) {
  GeneratorEnv env(a.carrier.context());
  env.bind("mA", a.m);
  env.bind("etaA", a.eta);
  env.bind("mK", k.m);
  env.bind("etaK", k.eta);
  env.bind("DK", k.delta);
  env.bind("epsK", k.eps);
  env.bind("act", act);
  const ObjectWord& A = a.carrier;
  const ObjectWord K = k.word();
  auto mA = gen("mA"), etaA = gen("etaA"), mK = gen("mK"), etaK = gen("etaK"), DK = gen("DK"),
       epsK = gen("epsK"), act_ = gen("act");
  auto iA = id(A), iK = id(K);
  auto ev = [&](const ExprPtr& e) { return expr_evaluate(e, env); };
  Report r;
  if (side == Side::Left) {
    r.check_equal(prefix + "module", "(k k').a = k.(k'.a)", ev(seq({par({mK, iA}), act_})),
                  ev(seq({par({iK, act_}), act_})));
    r.check_equal(prefix + "module-unit", "1.a = a", ev(seq({par({etaK, iA}), act_})),
                  LinearMorphism::identity(A));
    r.check_equal(prefix + "algebra", "k.(a b) = (k_1.a)(k_2.b)", ev(seq({par({iK, mA}), act_})),
                  ev(seq({par({DK, iA, iA}), par({iK, braid(K, A), iA}), par({act_, act_}), mA})));
    r.check_equal(prefix + "algebra-unit", "k.1 = eps(k) 1", ev(seq({par({iK, etaA}), act_})),
                  ev(seq({epsK, etaA})));
  } else {
    r.check_equal(prefix + "module", "(a.k).k' = a.(k k')", ev(seq({par({act_, iK}), act_})),
                  ev(seq({par({iA, mK}), act_})));
    r.check_equal(prefix + "module-unit", "a.1 = a", ev(seq({par({iA, etaK}), act_})),
                  LinearMorphism::identity(A));
    r.check_equal(prefix + "algebra", "(a b).k = (a.k_1)(b.k_2)", ev(seq({par({mA, iK}), act_})),
                  ev(seq({par({iA, iA, DK}), par({iA, braid(A, K), iK}), par({act_, act_}), mA})));
    r.check_equal(prefix + "algebra-unit", "1.k = eps(k) 1", ev(seq({par({etaA, iK}), act_})),
                  ev(seq({epsK, etaA})));
  }
  return r;
}

Report harpoon_report(const BraidedHopfAlgebra& h, const BraidedHopfAlgebra& hd, const Harpoons& hp) {
  Report r;
  r.append(module_algebra_report("harpoon.h-on-hd.", hd.algebra(), h, hp.h_on_hd, Side::Left));
  r.append(module_algebra_report("harpoon.hd-on-h.", h.algebra(), hd, hp.hd_on_h, Side::Left));
  r.append(module_algebra_report("harpoon.hd-by-h.", hd.algebra(), h, hp.hd_by_h, Side::Right));
  r.append(module_algebra_report("harpoon.h-by-hd.", h.algebra(), hd, hp.h_by_hd, Side::Right));
  return r;
}

Harpoons harpoon_actions(const BraidedHopfAlgebra& h, const BraidedHopfAlgebra& hd,
                         const LinearMorphism& pairing) {
  Harpoons hp = harpoon_maps(h, hd, pairing);
  Report r = harpoon_report(h, hd, hp);
  for (const Assertion& a : r.items())
    if (!a.pass) fail(ErrorKind::ModuleAxiomFailure, witness_text(a));
  return hp;
}

}  // namespace ydhopf
