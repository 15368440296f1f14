#include "ydhopf/io.hpp"

#include <openssl/sha.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "ydhopf/error.hpp"

namespace ydhopf {

const char* const kToolVersion = "1.0.0";

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  fail(ErrorKind::FormatError, path + ": " + msg);
}

const Json& member(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, "missing key '" + key + "'");
  return *it;
}

std::int64_t as_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) bad(path, "expected an integer");
  return v.get<std::int64_t>();
}

std::uint64_t as_index(const Json& v, std::uint64_t bound, const std::string& path) {
  std::int64_t i = as_int(v, path);
  if (i < 0 || static_cast<std::uint64_t>(i) >= bound)
    bad(path, "index " + std::to_string(i) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<std::uint64_t>(i);
}

Scalar as_scalar(const Json& v, const Field& f, const std::string& path) {
  std::int64_t i = as_int(v, path);
  if (i < 0 || i >= static_cast<std::int64_t>(f.p()))
    bad(path, "value " + std::to_string(i) + " not in [0, " + std::to_string(f.p()) + ")");
  return static_cast<Scalar>(i);
}

const Json& as_array(const Json& v, const std::string& path, std::size_t len = SIZE_MAX) {
  if (!v.is_array()) bad(path, "expected an array");
  if (len != SIZE_MAX && v.size() != len)
    bad(path, "expected " + std::to_string(len) + " entries, got " + std::to_string(v.size()));
  return v;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

// Arrays holding only scalars stay on one line.
void emit(const Json& j, int indent, std::string& out) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  auto flat = [](const Json& a) {
    return std::all_of(a.begin(), a.end(), [](const Json& x) { return x.is_primitive(); });
  };
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += inner + Json(it.key()).dump() + ": ";
      emit(it.value(), indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array()) {
    if (j.empty() || flat(j)) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      emit(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

std::string canonical(const Json& j) {
  std::string out;
  emit(j, 0, out);
  out += "\n";
  return out;
}

Json exponents_json(const Group& g, GroupElement x) {
  Json a = Json::array();
  for (std::uint32_t e : g.exponents(x)) a.push_back(e);
  return a;
}

}  // namespace

AlgebraFile algebra_file(const BraidedHopfAlgebra& h, std::vector<std::string> basis, std::optional<QTAParams> qta) {
  AlgebraFile a;
  a.hopf = h;
  if (basis.empty())
    for (std::size_t i = 0; i < h.carrier->dim(); ++i) basis.push_back("e" + std::to_string(i));
  a.basis = std::move(basis);
  a.qta = std::move(qta);
  return a;
}

AlgebraFile algebra_file(const TruncatedQTA& t) {
  std::vector<std::string> names;
  for (const auto& w : t.words) names.push_back(word_name(w));
  return algebra_file(t.hopf, names, t.params);
}

std::string algebra_to_json(const AlgebraFile& a) {
  const BraidedHopfAlgebra& h = a.hopf;
  const ContextPtr& ctx = h.carrier->context();
  const Group& G = ctx->group;
  const std::uint64_t n = h.carrier->dim();
  Json j;
  j["format"] = "ydhopf-algebra/1";
  j["field"] = {{"p", ctx->field.p()}};
  j["group"] = {{"orders", G.orders()}};
  Json obj;
  obj["name"] = h.carrier->name();
  obj["basis"] = a.basis;
  obj["degrees"] = Json::array();
  for (std::uint64_t i = 0; i < n; ++i) obj["degrees"].push_back(exponents_json(G, h.carrier->degree(i)));
  obj["action"] = Json::array();
  for (const DenseMatrix& m : h.carrier->action()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows; ++r) rows.push_back(std::vector<Scalar>(m.row(r), m.row(r) + m.cols));
    obj["action"].push_back(rows);
  }
  j["object"] = obj;

  Json s;
  s["mult"] = Json::array();
  std::vector<std::array<std::uint64_t, 4>> trip;
  for (std::uint64_t c = 0; c < n * n; ++c)
    for (const Term& t : h.m.column(c)) trip.push_back({c / n, c % n, t.index, t.value});
  std::sort(trip.begin(), trip.end());
  for (const auto& t : trip) s["mult"].push_back(t);
  std::vector<Scalar> unit(n, 0);
  for (const Term& t : h.eta.column(0)) unit[t.index] = t.value;
  s["unit"] = unit;
  trip.clear();
  for (std::uint64_t c = 0; c < n; ++c)
    for (const Term& t : h.delta.column(c)) trip.push_back({c, t.index / n, t.index % n, t.value});
  std::sort(trip.begin(), trip.end());
  s["comult"] = Json::array();
  for (const auto& t : trip) s["comult"].push_back(t);
  std::vector<Scalar> counit(n, 0);
  for (std::uint64_t c = 0; c < n; ++c)
    for (const Term& t : h.eps.column(c)) counit[c] = t.value;
  s["counit"] = counit;
  s["antipode"] = Json::array();
  for (std::uint64_t c = 0; c < n; ++c)
    for (const Term& t : h.S.column(c)) s["antipode"].push_back({c, t.index, t.value});
  j["structure"] = s;

  if (!a.coaction.empty()) {
    auto co = a.coaction;
    std::sort(co.begin(), co.end());
    j["coaction"] = co;
  }
  if (a.qta) {
    Json q;
    q["trunc"] = a.qta->N;
    q["letters"] = Json::array();
    for (const QTALetter& l : a.qta->letters) q["letters"].push_back({{"g", l.g}, {"chi", l.chi}});
    j["qta"] = q;
  }
  return canonical(j);
}

AlgebraFile algebra_from_json(const std::string& text, const std::string& carrier_name) {
  const Json j = parse_json(text);
  if (!j.is_object()) bad("$", "expected an object");
  const Json& fmt = member(j, "format", "$");
  if (fmt != "ydhopf-algebra/1") bad("$.format", "expected \"ydhopf-algebra/1\"");
  const std::int64_t p = as_int(member(member(j, "field", "$"), "p", "$.field"), "$.field.p");
  if (p < 2) bad("$.field.p", "must be a prime");
  std::vector<std::uint32_t> orders;
  const Json& ord = as_array(member(member(j, "group", "$"), "orders", "$.group"), "$.group.orders");
  for (std::size_t i = 0; i < ord.size(); ++i) {
    std::int64_t o = as_int(ord[i], "$.group.orders[" + std::to_string(i) + "]");
    if (o < 1 || o > (1 << 20)) bad("$.group.orders[" + std::to_string(i) + "]", "order out of range");
    orders.push_back(static_cast<std::uint32_t>(o));
  }
  ContextPtr ctx = make_context(static_cast<std::uint64_t>(p), orders);
  const Field& f = ctx->field;
  const Group& G = ctx->group;

  const Json& obj = member(j, "object", "$");
  const Json& nm = member(obj, "name", "$.object");
  if (!nm.is_string()) bad("$.object.name", "expected a string");
  AlgebraFile a;
  const Json& basis = as_array(member(obj, "basis", "$.object"), "$.object.basis");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) bad("$.object.basis[" + std::to_string(i) + "]", "expected a string");
    a.basis.push_back(basis[i].get<std::string>());
  }
  const std::size_t n = a.basis.size();
  if (n == 0) bad("$.object.basis", "empty basis");
  const Json& degs = as_array(member(obj, "degrees", "$.object"), "$.object.degrees", n);
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string path = "$.object.degrees[" + std::to_string(i) + "]";
    const Json& d = as_array(degs[i], path, G.rank());
    std::vector<std::int64_t> e;
    for (std::size_t k = 0; k < d.size(); ++k) e.push_back(as_int(d[k], path + "[" + std::to_string(k) + "]"));
    degrees.push_back(G.element(e));
  }
  std::vector<DenseMatrix> action(G.rank(), DenseMatrix::identity(n));
  if (obj.contains("action")) {
    const Json& acts = as_array(obj["action"], "$.object.action", G.rank());
    for (std::size_t g = 0; g < G.rank(); ++g) {
      const std::string path = "$.object.action[" + std::to_string(g) + "]";
      const Json& rows = as_array(acts[g], path, n);
      for (std::size_t r = 0; r < n; ++r) {
        const Json& row = as_array(rows[r], path + "[" + std::to_string(r) + "]", n);
        for (std::size_t c = 0; c < n; ++c)
          action[g].at(r, c) = as_scalar(row[c], f, path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      }
    }
  }
  ObjRef carrier = YDObject::build(carrier_name.empty() ? nm.get<std::string>() : carrier_name, ctx,
                                   std::move(degrees), std::move(action));
  const ObjectWord W(carrier), U(ctx, {});

  const Json& s = member(j, "structure", "$");
  auto triples = [&](const char* key, std::size_t arity, auto&& put) {
    const std::string base = std::string("$.structure.") + key;
    const Json& arr = as_array(member(s, key, "$.structure"), base);
    std::vector<std::vector<std::uint64_t>> seen;
    for (std::size_t t = 0; t < arr.size(); ++t) {
      const std::string path = base + "[" + std::to_string(t) + "]";
      const Json& e = as_array(arr[t], path, arity + 1);
      std::vector<std::uint64_t> idx;
      for (std::size_t k = 0; k < arity; ++k) idx.push_back(as_index(e[k], n, path + "[" + std::to_string(k) + "]"));
      Scalar v = as_scalar(e[arity], f, path + "[" + std::to_string(arity) + "]");
      seen.push_back(idx);
      put(idx, v);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) bad(base, "duplicate index tuple");
  };
  auto vec = [&](const char* key) {
    const std::string path = std::string("$.structure.") + key;
    const Json& arr = as_array(member(s, key, "$.structure"), path, n);
    SparseVec v;
    for (std::size_t i = 0; i < n; ++i) {
      Scalar x = as_scalar(arr[i], f, path + "[" + std::to_string(i) + "]");
      if (x) v.push_back({i, x});
    }
    return v;
  };

  HopfData d;
  d.carrier = carrier;
  d.m = LinearMorphism(W + W, W);
  triples("mult", 3, [&](const auto& i, Scalar v) { d.m.add_entry(i[2], i[0] * n + i[1], v); });
  d.m.finalize();
  d.delta = LinearMorphism(W, W + W);
  triples("comult", 3, [&](const auto& i, Scalar v) { d.delta.add_entry(i[1] * n + i[2], i[0], v); });
  d.delta.finalize();
  d.eta = LinearMorphism(U, W);
  d.eta.set_column(0, vec("unit"));
  d.eps = LinearMorphism(W, U);
  SparseVec cu = vec("counit");
  for (const Term& t : cu) d.eps.set_column(t.index, {{0, t.value}});
  if (s.contains("antipode")) {
    LinearMorphism S(W, W);
    triples("antipode", 2, [&](const auto& i, Scalar v) { S.add_entry(i[1], i[0], v); });
    S.finalize();
    d.S = S;
  }
  a.hopf = hopf_assemble(std::move(d));

  if (j.contains("coaction")) {
    const Json& arr = as_array(j["coaction"], "$.coaction");
    for (std::size_t t = 0; t < arr.size(); ++t) {
      const std::string path = "$.coaction[" + std::to_string(t) + "]";
      const Json& e = as_array(arr[t], path, 4);
      std::array<std::uint64_t, 4> q{};
      for (std::size_t k = 0; k < 3; ++k) {
        std::int64_t x = as_int(e[k], path + "[" + std::to_string(k) + "]");
        if (x < 0) bad(path, "negative index");
        q[k] = static_cast<std::uint64_t>(x);
      }
      if (q[0] >= n || q[1] >= n) bad(path, "index out of range");
      q[3] = as_scalar(e[3], f, path + "[3]");
      a.coaction.push_back(q);
    }
  }
  if (j.contains("qta")) {
    const Json& q = j["qta"];
    QTAParams params;
    params.p = static_cast<std::uint64_t>(p);
    params.orders = orders;
    std::int64_t N = as_int(member(q, "trunc", "$.qta"), "$.qta.trunc");
    if (N < 1) bad("$.qta.trunc", "must be >= 1");
    params.N = static_cast<std::uint32_t>(N);
    const Json& ls = as_array(member(q, "letters", "$.qta"), "$.qta.letters");
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const std::string path = "$.qta.letters[" + std::to_string(i) + "]";
      QTALetter l;
      const Json& g = as_array(member(ls[i], "g", path), path + ".g", G.rank());
      for (const Json& x : g) l.g.push_back(as_int(x, path + ".g"));
      const Json& chi = as_array(member(ls[i], "chi", path), path + ".chi", G.rank());
      for (const Json& x : chi) l.chi.push_back(as_scalar(x, f, path + ".chi"));
      params.letters.push_back(std::move(l));
    }
    a.qta = std::move(params);
  }
  return a;
}

LinearMorphism coaction_morphism(const AlgebraFile& r, const ObjRef& r_carrier, const ObjRef& hd_carrier) {
  const ObjectWord R(r_carrier), Hd(hd_carrier);
  if (r.coaction.empty()) fail(ErrorKind::FormatError, "$.coaction: algebra file has no coaction");
  LinearMorphism psi(R, R + Hd);
  for (const auto& q : r.coaction) {
    if (q[0] >= R.dim() || q[1] >= R.dim() || q[2] >= Hd.dim())
      fail(ErrorKind::FormatError, "$.coaction: index out of range");
    psi.add_entry(q[1] * Hd.dim() + q[2], q[0], static_cast<Scalar>(q[3]));
  }
  psi.finalize();
  return psi;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), md);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned char c : md) {
    out += hex[c >> 4];
    out += hex[c & 15];
  }
  return out;
}

std::string pairing_to_json(const LinearMorphism& pairing, const std::string& h_digest,
                            const std::string& hd_digest) {
  const std::uint64_t n = pairing.dom().slice(1, 1).dim();
  Json j;
  j["format"] = "ydhopf-pairing/1";
  j["h_sha256"] = h_digest;
  j["hd_sha256"] = hd_digest;
  j["entries"] = Json::array();
  for (std::uint64_t c = 0; c < pairing.cols(); ++c)
    for (const Term& t : pairing.column(c)) j["entries"].push_back({c / n, c % n, t.value});
  return canonical(j);
}

LinearMorphism pairing_from_json(const std::string& text, const ObjRef& hd, const ObjRef& h,
                                 const std::string& h_digest, const std::string& hd_digest) {
  const Json j = parse_json(text);
  if (member(j, "format", "$") != "ydhopf-pairing/1") bad("$.format", "expected \"ydhopf-pairing/1\"");
  const Json& hs = member(j, "h_sha256", "$");
  const Json& hds = member(j, "hd_sha256", "$");
  if (hs != h_digest || hds != hd_digest)
    fail(ErrorKind::InvalidArgument, "pairing digests do not match the given H and Hd files");
  const Field& f = h->context()->field;
  const std::uint64_t n = h->dim(), nd = hd->dim();
  LinearMorphism p(ObjectWord(hd) + ObjectWord(h), ObjectWord(h->context(), {}));
  const Json& arr = as_array(member(j, "entries", "$"), "$.entries");
  for (std::size_t t = 0; t < arr.size(); ++t) {
    const std::string path = "$.entries[" + std::to_string(t) + "]";
    const Json& e = as_array(arr[t], path, 3);
    std::uint64_t fi = as_index(e[0], nd, path + "[0]"), hi = as_index(e[1], n, path + "[1]");
    p.add_entry(0, fi * n + hi, as_scalar(e[2], f, path + "[2]"));
  }
  p.finalize();
  return p;
}

std::string report_to_json(const Report& r, const std::string& command, const std::vector<InputDigest>& inputs) {
  Json j;
  Json meta;
  meta["tool"] = "ydhopf";
  meta["version"] = kToolVersion;
  meta["command"] = command;
  meta["inputs"] = Json::array();
  for (const InputDigest& d : inputs)
    meta["inputs"].push_back({{"role", d.role}, {"path", d.path}, {"sha256", d.sha256}});
  j["meta"] = meta;
  j["assertions"] = Json::array();
  std::size_t failed = 0;
  for (const Assertion& a : r.items()) {
    Json x;
    x["name"] = a.name;
    x["anchor"] = a.anchor;
    x["pass"] = a.pass;
    if (a.witness)
      x["witness"] = {{"row", a.witness->row}, {"col", a.witness->col}, {"lhs", a.witness->lhs},
                      {"rhs", a.witness->rhs}};
    if (!a.note.empty()) x["note"] = a.note;
    j["assertions"].push_back(x);
    failed += !a.pass;
  }
  j["summary"] = {{"total", r.items().size()}, {"failed", failed}};
  j["verdict"] = r.verdict() ? "pass" : "fail";
  return canonical(j);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::IoError, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) fail(ErrorKind::IoError, "write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(ErrorKind::IoError, "cannot rename onto " + path);
  }
}

GeneratorEnv load_env(const std::string& path) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(path).parent_path();
  auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? p : (dir / p).string(); };
  const Json j = parse_json(read_text(path));
  if (member(j, "format", "$") != "ydhopf-env/1") bad("$.format", "expected \"ydhopf-env/1\"");
  const Json& algs = as_array(member(j, "algebras", "$"), "$.algebras");
  if (algs.empty()) bad("$.algebras", "at least one algebra is required");
  std::vector<std::pair<std::string, AlgebraFile>> loaded;
  std::map<std::string, std::string> digest;
  for (std::size_t i = 0; i < algs.size(); ++i) {
    const std::string ap = "$.algebras[" + std::to_string(i) + "]";
    const Json& file = member(algs[i], "file", ap);
    const Json& label = member(algs[i], "label", ap);
    if (!file.is_string() || !label.is_string()) bad(ap, "file and label must be strings");
    std::string text = read_text(resolve(file.get<std::string>()));
    AlgebraFile a = algebra_from_json(text, label.get<std::string>());
    digest[label.get<std::string>()] = sha256_hex(text);
    loaded.emplace_back(label.get<std::string>(), std::move(a));
  }
  GeneratorEnv env(loaded.front().second.hopf.carrier->context());
  for (const auto& [label, a] : loaded) {
    require_same_context(env.context(), a.hopf.carrier->context());
    bind_hopf(env, a.hopf, label);
  }
  if (loaded.size() == 1) {
    const BraidedHopfAlgebra& h = loaded.front().second.hopf;
    for (const auto& [names, m] : std::vector<std::pair<std::vector<std::string>, LinearMorphism>>{
             {{"m", "μ"}, h.m},
             {{"eta", "η"}, h.eta},
             {{"Delta", "Δ"}, h.delta},
             {{"eps", "ε"}, h.eps},
             {{"S"}, h.S},
             {{"Sinv", "S̄"}, h.Sbar}})
      for (const std::string& nm : names) env.bind(nm, m);
  }
  if (j.contains("pairing")) {
    const Json& pj = j["pairing"];
    const Json& file = member(pj, "file", "$.pairing");
    const Json& hl = member(pj, "h", "$.pairing");
    const Json& hdl = member(pj, "hd", "$.pairing");
    if (!file.is_string() || !hl.is_string() || !hdl.is_string()) bad("$.pairing", "expected strings");
    if (!digest.count(hl.get<std::string>()) || !digest.count(hdl.get<std::string>()))
      bad("$.pairing", "h and hd must name loaded algebras");
    env.bind("ev", pairing_from_json(read_text(resolve(file.get<std::string>())), env.object(hdl.get<std::string>()),
                                     env.object(hl.get<std::string>()), digest[hl.get<std::string>()],
                                     digest[hdl.get<std::string>()]));
  }
  return env;
}

}  // namespace ydhopf
