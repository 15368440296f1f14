// ydhopf: generate, check and compare braided Hopf algebras over kG.
// Exit codes: 0 all assertions pass, 1 some assertion fails (or a structure is
// refused for a mathematical reason), 2 invalid input.

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ydhopf/error.hpp"
#include "ydhopf/io.hpp"

using namespace ydhopf;

namespace {

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::RankDeficient:
    case ErrorKind::Inconsistent:
    case ErrorKind::AxiomFailure:
    case ErrorKind::NotYDMorphism:
    case ErrorKind::NoAntipode:
    case ErrorKind::NonInvertibleAntipode:
    case ErrorKind::NonSymmetricBraiding:
    case ErrorKind::ModuleAxiomFailure:
      return 1;
    default:
      return 2;
  }
}

struct Loaded {
  std::string path;
  std::string text;
  AlgebraFile file;
};

Loaded load(const std::string& path, const std::string& label) {
  Loaded l{path, read_text(path), {}};
  l.file = algebra_from_json(l.text, label);
  return l;
}

// Prints the report, writes the JSON form when asked, returns the exit code.
int finish(const Report& r, const std::string& command, const std::vector<InputDigest>& inputs,
           const std::string& report_path) {
  std::cout << r.to_text();
  if (!report_path.empty()) write_atomic(report_path, report_to_json(r, command, inputs));
  return r.verdict() ? 0 : 1;
}

std::vector<std::uint32_t> parse_list(const std::string& s, const char* what) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::logic_error&) {
      fail(ErrorKind::InvalidArgument, std::string("bad ") + what + " list '" + s + "'");
    }
  }
  if (out.empty()) fail(ErrorKind::InvalidArgument, std::string("empty ") + what + " list");
  return out;
}

// "g=a1,a2;chi=c1,c2"
QTALetter parse_letter(const std::string& text) {
  QTALetter l;
  bool has_g = false, has_chi = false;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) fail(ErrorKind::InvalidArgument, "bad --gen '" + text + "'");
    std::string key = part.substr(0, eq), val = part.substr(eq + 1);
    if (key == "g") {
      for (std::uint32_t v : parse_list(val, "g")) l.g.push_back(v);
      has_g = true;
    } else if (key == "chi") {
      l.chi = parse_list(val, "chi");
      has_chi = true;
    } else {
      fail(ErrorKind::InvalidArgument, "bad --gen key '" + key + "'");
    }
  }
  if (!has_g || !has_chi) fail(ErrorKind::InvalidArgument, "--gen needs g=... and chi=...");
  return l;
}

std::string default_pairing_path(const std::string& hd_path) { return hd_path + ".pairing.json"; }

struct PairData {
  BraidedHopfAlgebra hd;
  LinearMorphism pairing;
  std::vector<InputDigest> inputs;
};

// Hd and pairing from files, or solved from H when hd_path is empty.
PairData pair_for(const Loaded& h, const std::string& hd_path, const std::string& pairing_path, bool verify) {
  PairData d;
  if (hd_path.empty()) {
    QuasiDual q = verify ? quasi_dual_build(h.file.hopf, "Hd") : quasi_dual_solve(h.file.hopf, "Hd");
    d.hd = q.hd;
    d.pairing = q.pairing;
    return d;
  }
  Loaded hd = load(hd_path, "Hd");
  const std::string pp = pairing_path.empty() ? default_pairing_path(hd_path) : pairing_path;
  const std::string ptext = read_text(pp);
  d.hd = hd.file.hopf;
  d.pairing = pairing_from_json(ptext, d.hd.carrier, h.file.hopf.carrier, sha256_hex(h.text), sha256_hex(hd.text));
  d.inputs = {{"Hd", hd_path, sha256_hex(hd.text)}, {"pairing", pp, sha256_hex(ptext)}};
  return d;
}

ObjRef carrier_or_unit(const std::string& arg, const std::string& label, const ContextPtr& ctx,
                       std::vector<InputDigest>& inputs) {
  if (arg == "unit") return YDObject::unit(ctx, label);
  Loaded l = load(arg, label);
  inputs.push_back({label, arg, sha256_hex(l.text)});
  return l.file.hopf.carrier;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ydhopf: exact checks for braided Hopf algebras over finite abelian group algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string out, report, name, groups, hd_path, pairing_path, r_path, env_path, expr, pairing_out;
  std::string h_path, file_a, file_b;
  std::uint64_t prime = 0;
  std::uint32_t trunc = 0;
  std::vector<std::string> gens;
  int code = 0;

  auto* gen = app.add_subcommand("gen", "write an algebra file")->require_subcommand(1);
  auto* gen_qta = gen->add_subcommand("qta", "truncated quantum tensor algebra");
  gen_qta->add_option("--prime", prime, "field characteristic")->required();
  gen_qta->add_option("--group", groups, "cyclic orders n1[,n2...]")->required();
  gen_qta->add_option("--gen", gens, "\"g=a1[,a2...];chi=c1[,c2...]\" (repeatable)")->required();
  gen_qta->add_option("--trunc", trunc, "truncation length N")->required();
  gen_qta->add_option("--out", out, "output file")->required();
  auto* gen_preset = gen->add_subcommand("preset", "named example");
  gen_preset->add_option("--name", name, "bline | two-gen | z4q2")->required();
  gen_preset->add_option("--out", out, "output file")->required();

  auto* check = app.add_subcommand("check", "verify one family of identities")->require_subcommand(1);
  auto* c_hopf = check->add_subcommand("hopf", "braided Hopf algebra axioms");
  c_hopf->add_option("file", file_a)->required();
  auto* c_yd = check->add_subcommand("yd", "Yetter-Drinfeld condition of the carrier");
  c_yd->add_option("file", file_a)->required();
  auto* c_pair = check->add_subcommand("pairing", "pairing identities between H and Hd");
  c_pair->add_option("--H", h_path)->required();
  c_pair->add_option("--Hd", hd_path);
  c_pair->add_option("--pairing", pairing_path);
  auto* c_hom = check->add_subcommand("hom", "Yetter-Drinfeld structure of Hom(V, W)");
  c_hom->add_option("V", file_a, "algebra file or 'unit'")->required();
  c_hom->add_option("W", file_b, "algebra file or 'unit'")->required();
  auto* c_exch = check->add_subcommand("exchange", "lambda/rho exchange identity");
  c_exch->add_option("--H", h_path)->required();
  c_exch->add_option("--Hd", hd_path);
  c_exch->add_option("--pairing", pairing_path);
  auto* c_cocomm = check->add_subcommand("cocomm", "quantum cocommutativity");
  c_cocomm->add_option("file", file_a)->required();
  for (auto* c : {c_hopf, c_yd, c_pair, c_hom, c_exch, c_cocomm})
    c->add_option("--report", report, "write the JSON report here");

  auto* dual = app.add_subcommand("dual", "quasi-dual of a symmetric braided Hopf algebra");
  dual->add_option("file", h_path)->required();
  dual->add_option("--out", out)->required();
  dual->add_option("--pairing-out", pairing_out, "default <out>.pairing.json");

  auto* verify = app.add_subcommand("verify", "end-to-end verification")->require_subcommand(1);
  auto* v_dual = verify->add_subcommand("duality", "(R#H)#Hd isomorphic to R (x) (H#Hd)");
  v_dual->add_option("--H", h_path)->required();
  v_dual->add_option("--Hd", hd_path);
  v_dual->add_option("--pairing", pairing_path, "default <Hd>.pairing.json");
  v_dual->add_option("--R", r_path, "comodule algebra file with a coaction; default R = Hd");
  v_dual->add_option("--report", report);

  auto* ev = app.add_subcommand("eval", "evaluate a diagram expression");
  ev->add_option("--env", env_path)->required();
  ev->add_option("--expr", expr)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string command = [&] {
    std::string s;
    for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
    return s;
  }();

  try {
    if (*gen_qta) {
      QTAParams p;
      p.p = prime;
      p.orders = parse_list(groups, "group");
      for (const std::string& g : gens) p.letters.push_back(parse_letter(g));
      p.N = trunc;
      write_atomic(out, algebra_to_json(algebra_file(qta_structure(p))));
    } else if (*gen_preset) {
      write_atomic(out, algebra_to_json(algebra_file(qta_structure(preset(name)))));
    } else if (*c_hopf) {
      Loaded l = load(file_a, "H");
      code = finish(hopf_axiom_report(l.file.hopf), command, {{"H", file_a, sha256_hex(l.text)}}, report);
    } else if (*c_yd) {
      Loaded l = load(file_a, "H");
      code = finish(check_yd_condition(l.file.hopf.carrier), command, {{"H", file_a, sha256_hex(l.text)}}, report);
    } else if (*c_pair) {
      Loaded h = load(h_path, "H");
      PairData d = pair_for(h, hd_path, pairing_path, false);
      d.inputs.insert(d.inputs.begin(), {"H", h_path, sha256_hex(h.text)});
      code = finish(quasi_dual_check(h.file.hopf, d.hd, d.pairing), command, d.inputs, report);
    } else if (*c_hom) {
      std::vector<InputDigest> inputs;
      ContextPtr ctx;
      for (const std::string& f : {file_a, file_b})
        if (f != "unit") ctx = load(f, "X").file.hopf.carrier->context();
      if (!ctx) ctx = make_context(2, {1});
      ObjRef v = carrier_or_unit(file_a, "V", ctx, inputs);
      ObjRef w = carrier_or_unit(file_b, "W", ctx, inputs);
      auto [lv, lw] = lift_to_common_context(v, w);
      code = finish(check_hom_yd(lv, lw), command, inputs, report);
    } else if (*c_exch) {
      Loaded h = load(h_path, "H");
      PairData d = pair_for(h, hd_path, pairing_path, true);
      d.inputs.insert(d.inputs.begin(), {"H", h_path, sha256_hex(h.text)});
      Duality du = build_duality(regular_comodule_algebra(d.hd), h.file.hopf, d.hd, d.pairing);
      code = finish(exchange_report(du), command, d.inputs, report);
    } else if (*c_cocomm) {
      Loaded l = load(file_a, "H");
      Report r;
      const BraidedHopfAlgebra& h = l.file.hopf;
      const bool semantic = morphism_equal(compose(h.delta, braiding(h.word(), h.word())), h.delta);
      r.check("cocomm.semantic", "c o Delta = Delta", semantic);
      if (l.file.qta) {
        const bool chars = quantum_cocommutative_params(*l.file.qta);
        r.check("cocomm.characters", "chi_i(g_j) chi_j(g_i) = 1 for all i, j", chars);
        r.check("cocomm.agree", "character criterion agrees with c o Delta = Delta", chars == semantic);
      }
      code = finish(r, command, {{"H", file_a, sha256_hex(l.text)}}, report);
    } else if (*dual) {
      Loaded h = load(h_path, "H");
      QuasiDual q = quasi_dual_build(h.file.hopf, "Hd");
      std::vector<std::string> basis;
      for (const std::string& b : h.file.basis) basis.push_back(b + "*");
      const std::string hd_text = algebra_to_json(algebra_file(q.hd, basis));
      write_atomic(out, hd_text);
      write_atomic(pairing_out.empty() ? default_pairing_path(out) : pairing_out,
                   pairing_to_json(q.pairing, sha256_hex(h.text), sha256_hex(hd_text)));
    } else if (*v_dual) {
      Loaded h = load(h_path, "H");
      std::vector<InputDigest> inputs{{"H", h_path, sha256_hex(h.text)}};
      Report r;
      r.append(hopf_axiom_report(h.file.hopf), "H.");
      PairData d;
      bool paired = r.guarded("Hd.build", "Hd and the pairing available", [&] {
        d = pair_for(h, hd_path, pairing_path, true);
        return true;
      });
      if (paired) {
        inputs.insert(inputs.end(), d.inputs.begin(), d.inputs.end());
        ComoduleAlgebra ra;
        if (r_path.empty()) {
          ra = regular_comodule_algebra(d.hd);
        } else {
          Loaded rl = load(r_path, "R");
          inputs.push_back({"R", r_path, sha256_hex(rl.text)});
          ra.carrier = rl.file.hopf.carrier;
          ra.m = rl.file.hopf.m;
          ra.eta = rl.file.hopf.eta;
          ra.psi = coaction_morphism(rl.file, ra.carrier, d.hd.carrier);
        }
        r.append(verify_duality(ra, h.file.hopf, d.hd, d.pairing));
      }
      code = finish(r, command, inputs, report);
    } else if (*ev) {
      GeneratorEnv env = load_env(env_path);
      ExprPtr e = parse_expr(expr, env);
      Typing t = expr_validate(e, env);
      LinearMorphism m = expr_evaluate(e, env);
      std::cout << t.dom.str() << " -> " << t.cod.str() << "  (" << m.rows() << " x " << m.cols() << ", "
                << m.nnz() << " nonzero)\n";
      for (std::uint64_t c = 0; c < m.cols(); ++c)
        for (const Term& x : m.column(c)) std::cout << x.index << " " << c << " " << x.value << "\n";
    }
  } catch (const Error& e) {
    std::cerr << "ydhopf: " << e.what();
    if (!e.path.empty() && std::string(e.what()).find(e.path) == std::string::npos) std::cerr << " at " << e.path;
    std::cerr << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "ydhopf: " << e.what() << "\n";
    return 2;
  }
  return code;
}
