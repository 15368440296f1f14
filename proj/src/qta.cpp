#include "ydhopf/qta.hpp"

#include <cstdlib>
#include <map>

#include "ydhopf/error.hpp"

namespace ydhopf {

std::size_t basis_cap() {
  if (const char* s = std::getenv("YDHOPF_BASIS_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 512;
}

std::uint64_t qta_basis_size(const QTAParams& params) {
  std::uint64_t total = 0, level = 1;
  const std::uint64_t k = params.letters.size();
  for (std::uint32_t l = 0; l <= params.N; ++l) {
    total += level;
    if (total > (std::uint64_t{1} << 40)) return total;
    level *= k;
  }
  return total;
}

std::string word_name(const std::vector<std::size_t>& word) {
  if (word.empty()) return "1";
  std::string s;
  for (std::size_t l : word) s += "x" + std::to_string(l + 1);
  return s;
}

std::size_t word_index(const TruncatedQTA& t, const std::vector<std::size_t>& word) {
  const std::size_t k = t.params.letters.size();
  std::size_t offset = 0, level = 1;
  for (std::size_t l = 0; l < word.size(); ++l) {
    offset += level;
    level *= k;
  }
  std::size_t digits = 0;
  for (std::size_t l : word) digits = digits * k + l;
  return offset + digits;
}

TruncatedQTA qta_structure(const QTAParams& params, const std::string& name, std::optional<std::size_t> cap) {
  if (params.letters.empty()) fail(ErrorKind::InvalidArgument, "at least one generator is required");
  if (params.N < 1) fail(ErrorKind::InvalidArgument, "truncation length must be >= 1");
  const std::size_t limit = cap ? *cap : basis_cap();
  const std::uint64_t size = qta_basis_size(params);
  if (size > limit)
    fail(ErrorKind::BasisCapExceeded,
         "basis size " + std::to_string(size) + " exceeds cap " + std::to_string(limit));

  ContextPtr ctx = make_context(params.p, params.orders);
  const Field& f = ctx->field;
  const Group& G = ctx->group;
  TruncatedQTA t;
  t.params = params;
  for (const QTALetter& l : params.letters) {
    t.degrees.push_back(G.element(l.g));
    t.chars.push_back(make_character(f, G, l.chi));
  }

  t.words.push_back({});
  for (std::size_t begin = 0, len = 0; len < params.N; ++len) {
    const std::size_t end = t.words.size();
    for (std::size_t w = begin; w < end; ++w)
      for (std::size_t l = 0; l < params.letters.size(); ++l) {
        std::vector<std::size_t> next = t.words[w];
        next.push_back(l);
        t.words.push_back(std::move(next));
      }
    begin = end;
  }
  const std::size_t n = t.words.size();

  std::vector<GroupElement> degrees(n);
  std::vector<DenseMatrix> action(G.rank(), DenseMatrix::identity(n));
  for (std::size_t w = 0; w < n; ++w) {
    GroupElement d = G.identity();
    for (std::size_t l : t.words[w]) d = G.add(d, t.degrees[l]);
    degrees[w] = d;
    for (std::size_t j = 0; j < G.rank(); ++j) {
      Scalar s = 1;
      for (std::size_t l : t.words[w]) s = f.mul(s, t.chars[l].images[j]);
      action[j].at(w, w) = s;
    }
  }
  ObjRef carrier = YDObject::build(name, ctx, std::move(degrees), std::move(action));
  const ObjectWord W(carrier), U(ctx, {});

  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t w = 0; w < n; ++w) index.emplace(t.words[w], w);

  LinearMorphism m(W + W, W);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (t.words[a].size() + t.words[b].size() > params.N) continue;
      std::vector<std::size_t> ab = t.words[a];
      ab.insert(ab.end(), t.words[b].begin(), t.words[b].end());
      m.add_entry(index.at(ab), a * n + b, 1);
    }
  m.finalize();

  LinearMorphism eta(U, W);
  eta.set_column(0, {{0, 1}});
  LinearMorphism eps(W, U);
  eps.set_column(0, {{0, 1}});

  // Delta(y_1..y_m): each letter goes left (in A) or right; y_j in A passes
  // every earlier y_i going right, picking up chi_{y_j}(g_{y_i}).
  LinearMorphism delta(W, W + W);
  for (std::size_t w = 0; w < n; ++w) {
    const std::vector<std::size_t>& y = t.words[w];
    const std::size_t len = y.size();
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
      std::vector<std::size_t> left, right;
      Scalar coef = 1;
      for (std::size_t j = 0; j < len; ++j) {
        if (mask & (1u << j)) {
          left.push_back(y[j]);
          for (std::size_t i = 0; i < j; ++i)
            if (!(mask & (1u << i))) coef = f.mul(coef, character_eval(f, G, t.chars[y[j]], t.degrees[y[i]]));
        } else {
          right.push_back(y[j]);
        }
      }
      delta.add_entry(index.at(left) * n + index.at(right), w, coef);
    }
  }
  delta.finalize();

  t.hopf = hopf_assemble({carrier, m, eta, delta, eps, std::nullopt});
  return t;
}

TruncatedQTA quantum_tensor_algebra(const QTAParams& params, const std::string& name,
                                    std::optional<std::size_t> cap) {
  TruncatedQTA t = qta_structure(params, name, cap);
  const BraidedHopfAlgebra& h = t.hopf;
  t.hopf = hopf_build({h.carrier, h.m, h.eta, h.delta, h.eps, std::nullopt});
  return t;
}

std::vector<std::string> preset_names() { return {"bline", "two-gen", "z4q2"}; }

QTAParams preset(const std::string& name) {
  if (name == "bline") return {5, {2}, {{{1}, {4}}}, 1};
  if (name == "two-gen") return {5, {2, 2}, {{{1, 0}, {4, 1}}, {{0, 1}, {1, 4}}}, 2};
  if (name == "z4q2") return {5, {4}, {{{1}, {2}}}, 3};
  fail(ErrorKind::InvalidArgument, "unknown preset '" + name + "'");
}

Report word_action_check(const TruncatedQTA& t) {
  const ContextPtr& ctx = t.hopf.carrier->context();
  const Field& f = ctx->field;
  const Group& G = ctx->group;
  const ObjectWord W(t.hopf.carrier);
  Report r;
  for (GroupElement g = 0; g < G.size(); ++g) {
    bool ok = true;
    std::string note;
    for (std::size_t w = 0; w < t.words.size() && ok; ++w) {
      Scalar expect = 1;
      for (std::size_t l : t.words[w]) expect = f.mul(expect, character_eval(f, G, t.chars[l], g));
      SparseVec got;
      W.act(g, w, 1, got);
      normalize(got, f);
      SparseVec want;
      if (expect != 0) want.push_back({w, expect});
      if (got != want) {
        ok = false;
        note = "word " + word_name(t.words[w]);
      }
    }
    r.check("qta.word-action.g" + std::to_string(g), "g.(y_1..y_m) = chi_1(g)..chi_m(g) y_1..y_m", ok, note);
  }
  return r;
}

bool quantum_cocommutative_params(const QTAParams& params) {
  ContextPtr ctx = make_context(params.p, params.orders);
  const Field& f = ctx->field;
  const Group& G = ctx->group;
  for (const QTALetter& a : params.letters)
    for (const QTALetter& b : params.letters) {
      Character ca = make_character(f, G, a.chi), cb = make_character(f, G, b.chi);
      if (f.mul(character_eval(f, G, ca, G.element(b.g)), character_eval(f, G, cb, G.element(a.g))) != 1)
        return false;
    }
  return true;
}

bool quantum_cocommutative_check(const TruncatedQTA& t) {
  if (!quantum_cocommutative_params(t.params)) return false;
  const ObjectWord W = t.hopf.word();
  return morphism_equal(compose(t.hopf.delta, braiding(W, W)), t.hopf.delta);
}

Report length_grading_report(const TruncatedQTA& t) {
  const std::size_t n = t.words.size();
  Report r;
  bool alg = true, coalg = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const Term& e : t.hopf.m.column(a * n + b))
        alg &= t.words[e.index].size() == t.words[a].size() + t.words[b].size();
  for (std::size_t w = 0; w < n; ++w)
    for (const Term& e : t.hopf.delta.column(w))
      coalg &= t.words[e.index / n].size() + t.words[e.index % n].size() == t.words[w].size();
  r.check("qta.length.algebra", "T_a T_b in T_{a+b}", alg);
  r.check("qta.length.coalgebra", "Delta(T_m) in sum_{p+q=m} T_p (x) T_q", coalg);
  return r;
}

DualityInput regular_duality_setup(const TruncatedQTA& t, bool verify) {
  QuasiDual q = verify ? quasi_dual_build(t.hopf, "Hd") : quasi_dual_solve(t.hopf, "Hd");
  DualityInput in;
  in.h = t.hopf;
  in.hd = q.hd;
  in.pairing = q.pairing;
  in.r = regular_comodule_algebra(q.hd);
  return in;
}

}  // namespace ydhopf
