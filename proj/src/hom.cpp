#include "ydhopf/hom.hpp"

#include "ydhopf/error.hpp"
#include "ydhopf/linalg.hpp"

namespace ydhopf {

namespace {

DenseMatrix dense_pow(const DenseMatrix& a, std::uint64_t e, const Field& f) {
  DenseMatrix result = DenseMatrix::identity(a.rows);
  for (std::uint64_t i = 0; i < e; ++i) result = matmul(result, a, f);
  return result;
}

bool is_unit_object(const ObjRef& w) {
  if (w->dim() != 1 || w->degree(0) != 0) return false;
  for (const DenseMatrix& a : w->action())
    if (a.at(0, 0) != 1) return false;
  return true;
}

}  // namespace

BraidedHopfAlgebra group_algebra(const ContextPtr& ctx) {
  const Group& g = ctx->group;
  const std::size_t n = g.size();
  ObjRef b = YDObject::plain("B", ctx, n);
  const ObjectWord w(b), unit(ctx, {});
  BraidedHopfAlgebra h{b, LinearMorphism(w + w, w), LinearMorphism(unit, w), LinearMorphism(w, w + w),
                       LinearMorphism(w, unit), LinearMorphism(w, w), LinearMorphism(w, w)};
  for (GroupElement x = 0; x < n; ++x) {
    for (GroupElement y = 0; y < n; ++y) h.m.set_column(x * n + y, {{g.add(x, y), 1}});
    h.delta.set_column(x, {{static_cast<std::uint64_t>(x) * n + x, 1}});
    h.eps.set_column(x, {{0, 1}});
    h.S.set_column(x, {{g.neg(x), 1}});
    h.Sbar.set_column(x, {{g.neg(x), 1}});
  }
  h.eta.set_column(0, {{0, 1}});
  return h;
}

PlainModuleComodule plain_structure(const ObjRef& m, const BraidedHopfAlgebra& b, const std::string& plain_name) {
  const ContextPtr& ctx = m->context();
  const std::size_t n = m->dim(), gs = ctx->group.size();
  PlainModuleComodule out;
  out.plain = YDObject::plain(plain_name, ctx, n);
  const ObjectWord bw = b.word(), mw(out.plain);
  out.alpha = LinearMorphism(bw + mw, mw);
  out.phi = LinearMorphism(mw, bw + mw);
  for (GroupElement g = 0; g < gs; ++g)
    for (std::size_t i = 0; i < n; ++i) out.alpha.set_column(g * n + i, m->act(g, i));
  for (std::size_t i = 0; i < n; ++i)
    out.phi.set_column(i, {{static_cast<std::uint64_t>(m->degree(i)) * n + i, 1}});
  return out;
}

namespace {

void bind_plain(GeneratorEnv& env, const BraidedHopfAlgebra& b) {
  env.bind_object("B", b.carrier);
  env.bind("m_B", b.m);
  env.bind("eta_B", b.eta);
  env.bind("Delta_B", b.delta);
  env.bind("eps_B", b.eps);
  env.bind("S_B", b.S);
  env.bind("Sinv_B", b.Sbar);
}

void module_comodule_checks(Report& r, const std::string& prefix, GeneratorEnv& env, const std::string& m) {
  const std::string a = "alpha_" + m, p = "phi_" + m, idm = "id[" + m + "]";
  r.check_equal(prefix + "module", "(g h).m = g.(h.m)", eval("m_B * " + idm + " ; " + a, env),
                eval("id[B] * " + a + " ; " + a, env));
  r.check_equal(prefix + "module-unit", "1.m = m", eval("eta_B * " + idm + " ; " + a, env),
                LinearMorphism::identity(ObjectWord(env.object(m))));
  r.check_equal(prefix + "comodule", "(Delta (x) id)phi = (id (x) phi)phi",
                eval(p + " ; Delta_B * " + idm, env), eval(p + " ; id[B] * " + p, env));
  r.check_equal(prefix + "comodule-counit", "(eps (x) id)phi = id", eval(p + " ; eps_B * " + idm, env),
                LinearMorphism::identity(ObjectWord(env.object(m))));
}

void yd_display_check(Report& r, const std::string& name, GeneratorEnv& env, const std::string& m) {
  const std::string a = "alpha_" + m, p = "phi_" + m, idm = "id[" + m + "]";
  r.check_equal(name, "phi(b.m) = b_11 m_-1 S(b_2) (x) b_12.m_0", eval(a + " ; " + p, env),
                eval("Delta_B * " + p + " ; Delta_B * S_B * id[B] * " + idm +
                         " ; id[B] * id[B] * c[B,B] * " + idm + " ; id[B] * c[B,B] * id[B] * " + idm +
                         " ; id[B] * id[B] * c[B,B] * " + idm + " ; m_B * id[B] * " + a + " ; m_B * " + idm,
                     env));
}

}  // namespace

Report check_yd_condition(const ObjRef& m) {
  const ContextPtr& ctx = m->context();
  BraidedHopfAlgebra b = group_algebra(ctx);
  PlainModuleComodule s = plain_structure(m, b, "M");
  GeneratorEnv env(ctx);
  bind_plain(env, b);
  env.bind_object("M", s.plain);
  env.bind("alpha_M", s.alpha);
  env.bind("phi_M", s.phi);
  Report r;
  module_comodule_checks(r, "yd.", env, "M");
  yd_display_check(r, "yd.condition", env, "M");
  return r;
}

HomObject hom_object(const ObjRef& v, const ObjRef& w, std::string name) {
  require_same_context(v->context(), w->context());
  const ContextPtr& ctx = v->context();
  const Field& f = ctx->field;
  const std::size_t dv = v->dim(), dw = w->dim();
  std::vector<GroupElement> degrees(dv * dw);
  for (std::size_t j = 0; j < dw; ++j)
    for (std::size_t i = 0; i < dv; ++i)
      degrees[j * dv + i] = ctx->group.add(w->degree(j), ctx->group.neg(v->degree(i)));
  std::vector<DenseMatrix> action;
  for (std::size_t g = 0; g < ctx->group.rank(); ++g) {
    const DenseMatrix& aw = w->action()[g];
    DenseMatrix av_inv = dense_pow(v->action()[g], ctx->group.orders()[g] - 1, f);
    // g.E_{j,i} = (A_W e_j)(row i of A_V^{-1}).
    DenseMatrix k(dv * dw, dv * dw);
    for (std::size_t j = 0; j < dw; ++j)
      for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j2 = 0; j2 < dw; ++j2) {
          if (aw.at(j2, j) == 0) continue;
          for (std::size_t i2 = 0; i2 < dv; ++i2)
            k.at(j2 * dv + i2, j * dv + i) = f.mul(aw.at(j2, j), av_inv.at(i, i2));
        }
    action.push_back(std::move(k));
  }
  if (name.empty()) name = "Hom(" + v->name() + "," + w->name() + ")";
  return {v, w, YDObject::build(std::move(name), ctx, std::move(degrees), std::move(action))};
}

LinearMorphism hom_evaluation(const HomObject& h) {
  const std::uint64_t dv = h.v->dim(), dw = h.w->dim();
  LinearMorphism act(ObjectWord(h.carrier) + ObjectWord(h.v), ObjectWord(h.w));
  for (std::uint64_t j = 0; j < dw; ++j)
    for (std::uint64_t i = 0; i < dv; ++i) act.set_column((j * dv + i) * dv + i, {{j, 1}});
  return act;
}

LinearMorphism hom_composition(const HomObject& vw, const HomObject& uv, const HomObject& uw) {
  if (vw.v != uv.w || uw.v != uv.v || uw.w != vw.w)
    fail(ErrorKind::ShapeMismatch, "hom objects do not compose");
  const std::uint64_t du = uv.v->dim(), dv = vw.v->dim(), dw = vw.w->dim();
  LinearMorphism out(ObjectWord(vw.carrier) + ObjectWord(uv.carrier), ObjectWord(uw.carrier));
  const std::uint64_t n_uv = du * dv;
  // E_{j,i} o E_{l,k} = delta_{i,l} E_{j,k}
  for (std::uint64_t j = 0; j < dw; ++j)
    for (std::uint64_t i = 0; i < dv; ++i)
      for (std::uint64_t k = 0; k < du; ++k)
        out.set_column((j * dv + i) * n_uv + (i * du + k), {{j * du + k, 1}});
  return out;
}

Report check_hom_yd(const ObjRef& v, const ObjRef& w) {
  HomObject h = hom_object(v, w, "Hom");
  const ContextPtr& ctx = v->context();
  BraidedHopfAlgebra b = group_algebra(ctx);
  PlainModuleComodule sh = plain_structure(h.carrier, b, "Hp");
  PlainModuleComodule sv = plain_structure(v, b, "Vp");
  PlainModuleComodule sw = plain_structure(w, b, "Wp");
  GeneratorEnv env(ctx);
  bind_plain(env, b);
  using Tagged = std::pair<PlainModuleComodule*, const char*>;
  for (auto [s, tag] : {Tagged{&sh, "Hp"}, Tagged{&sv, "Vp"}, Tagged{&sw, "Wp"}}) {
    env.bind_object(tag, s->plain);
    env.bind(std::string("alpha_") + tag, s->alpha);
    env.bind(std::string("phi_") + tag, s->phi);
  }
  env.bind("act", hom_evaluation(h).retyped(ObjectWord(sh.plain) + ObjectWord(sv.plain), ObjectWord(sw.plain)));

  Report r;
  module_comodule_checks(r, "hom.", env, "Hp");
  yd_display_check(r, "hom.yd", env, "Hp");
  r.check_equal("hom.action-tangle", "(b.f)(v) = b_1.f(S(b_2).v)", eval("alpha_Hp * id[Vp] ; act", env),
                eval("Delta_B * id[Hp] * id[Vp] ; id[B] * S_B * id[Hp] * id[Vp] ; id[B] * c[B,Hp] * id[Vp]"
                     " ; id[B] * id[Hp] * alpha_Vp ; id[B] * act ; alpha_Wp",
                     env));
  r.check_equal("hom.coaction-tangle", "f_-1 (x) f_0(v) = f(v_0)_-1 Sbar(v_-1) (x) f(v_0)_0",
                eval("phi_Hp * id[Vp] ; id[B] * act", env),
                eval("id[Hp] * phi_Vp ; c[Hp,B] * id[Vp] ; Sinv_B * id[Hp] * id[Vp] ; id[B] * act"
                     " ; id[B] * phi_Wp ; c[B,B] * id[Wp] ; m_B * id[Wp]",
                     env));
  if (is_unit_object(w))
    r.check_equal("hom.dual-coaction", "<f_0, x> f_-1 = <f, x_0> S^{-1}(x_-1)",
                  eval("phi_Hp * id[Vp] ; id[B] * act", env),
                  eval("id[Hp] * phi_Vp ; c[Hp,B] * id[Vp] ; Sinv_B * act", env));
  return r;
}

std::pair<ObjRef, ObjRef> lift_to_common_context(const ObjRef& a, const ObjRef& b) {
  const ContextPtr& ca = a->context();
  const ContextPtr& cb = b->context();
  if (ca == cb || *ca == *cb) return {a, b};
  if (!(ca->field == cb->field)) fail(ErrorKind::MismatchedContext, "objects live over different fields");
  std::vector<std::uint32_t> orders = ca->group.orders();
  orders.insert(orders.end(), cb->group.orders().begin(), cb->group.orders().end());
  ContextPtr ctx = make_context(ca->field.p(), orders);
  const std::size_t ra = ca->group.rank();
  auto lift = [&](const ObjRef& o, bool first) {
    const Group& src = o->context()->group;
    std::vector<GroupElement> degrees;
    for (GroupElement d : o->degrees()) {
      auto e = src.exponents(d);
      std::vector<std::int64_t> full(orders.size(), 0);
      for (std::size_t j = 0; j < e.size(); ++j) full[(first ? 0 : ra) + j] = e[j];
      degrees.push_back(ctx->group.element(full));
    }
    std::vector<DenseMatrix> action;
    for (std::size_t j = 0; j < orders.size(); ++j) {
      bool own = first ? j < ra : j >= ra;
      action.push_back(own ? o->action()[first ? j : j - ra] : DenseMatrix::identity(o->dim()));
    }
    return YDObject::build(o->name(), ctx, std::move(degrees), std::move(action));
  };
  return {lift(a, true), lift(b, false)};
}

EndAlgebra end_algebra(const ObjRef& m, std::string name) {
  EndAlgebra e;
  e.m = m;
  e.hom = hom_object(m, m, std::move(name));
  e.mult = hom_composition(e.hom, e.hom, e.hom);
  const std::uint64_t n = m->dim();
  e.unit = LinearMorphism(ObjectWord(m->context(), {}), ObjectWord(e.hom.carrier));
  SparseVec idm;
  for (std::uint64_t i = 0; i < n; ++i) idm.push_back({i * n + i, 1});
  e.unit.set_column(0, idm);
  e.act = hom_evaluation(e.hom);
  return e;
}

Report end_algebra_report(const EndAlgebra& e) {
  Report r = algebra_axiom_report("end.", e.algebra());
  r.check("end.yd.mult", "composition is a YD morphism", is_yd_morphism(e.mult));
  r.check("end.yd.unit", "unit is a YD morphism", is_yd_morphism(e.unit));
  r.check("end.yd.act", "act is a YD morphism", is_yd_morphism(e.act));
  GeneratorEnv env(e.m->context());
  env.bind_object("E", e.hom.carrier);
  env.bind_object("M", e.m);
  env.bind("m_E", e.mult);
  env.bind("eta_E", e.unit);
  env.bind("act", e.act);
  r.check_equal("end.act-mult", "act(m_E (x) id) = act(id (x) act)", eval("m_E * id[M] ; act", env),
                eval("id[E] * act ; act", env));
  r.check_equal("end.act-unit", "act(eta_E (x) id) = id", eval("eta_E * id[M] ; act", env),
                LinearMorphism::identity(ObjectWord(e.m)));
  return r;
}

EndAlgebra end_as_algebra_in_category(const ObjRef& m, std::string name) {
  EndAlgebra e = end_algebra(m, std::move(name));
  const Report rep = end_algebra_report(e);
  for (const Assertion& a : rep.items())
    if (!a.pass) fail(ErrorKind::AxiomFailure, a.name);
  return e;
}

bool check_elimination(const LinearMorphism& act) {
  const ObjectWord e = act.dom().slice(0, 1);
  return rank(curry(act, 1), act.field()) == e.dim();
}

bool check_act_is_yd(const BraidedHopfAlgebra& h) {
  return is_yd_morphism(hom_evaluation(hom_object(h.carrier, h.carrier, "E")));
}

bool check_pairing_is_yd(const LinearMorphism& pairing) { return is_yd_morphism(pairing); }

}  // namespace ydhopf
