#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "ydhopf/error.hpp"
#include "ydhopf/io.hpp"

using namespace ydhopf;
namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

Error error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error thrown";
  return Error(ErrorKind::IoError, "none");
}

fs::path scratch_dir() {
  fs::path d = fs::temp_directory_path() / ("ydhopf_io_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

std::string bline_text() { return algebra_to_json(algebra_file(quantum_tensor_algebra(preset("bline")))); }

// Applies `edit` to the parsed bline file and returns the parse error.
Error mutated(const std::function<void(Json&)>& edit) {
  Json j = Json::parse(bline_text());
  edit(j);
  return error_of([&] { algebra_from_json(j.dump()); });
}

}  // namespace

TEST(Io, RoundTripIsBitExact) {
  for (const std::string& name : preset_names()) {
    const TruncatedQTA t = qta_structure(preset(name));
    const std::string text = algebra_to_json(algebra_file(t));
    ASSERT_EQ(text.back(), '\n');
    const AlgebraFile back = algebra_from_json(text);
    EXPECT_EQ(algebra_to_json(back), text) << name;
    EXPECT_TRUE(morphism_equal(back.hopf.m.retyped(t.hopf.m.dom(), t.hopf.m.cod()), t.hopf.m));
    EXPECT_TRUE(morphism_equal(back.hopf.delta.retyped(t.hopf.delta.dom(), t.hopf.delta.cod()), t.hopf.delta));
    EXPECT_TRUE(morphism_equal(back.hopf.S.retyped(t.hopf.S.dom(), t.hopf.S.cod()), t.hopf.S));
    ASSERT_TRUE(back.qta);
    EXPECT_EQ(back.qta->N, t.params.N);
    EXPECT_EQ(back.basis.size(), t.words.size());
  }
}

TEST(Io, CanonicalKeyOrderAndFormat) {
  const std::string text = bline_text();
  const Json j = Json::parse(text);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"format", "field", "group", "object", "structure", "qta"}));
  EXPECT_EQ(j["format"], "ydhopf-algebra/1");
  EXPECT_EQ(j["object"]["basis"], (Json{"1", "x1"}));
  EXPECT_NE(text.find("\"mult\": ["), std::string::npos);
  EXPECT_NE(text.find("[0, 0, 0, 1]"), std::string::npos);  // inline tuples
}

TEST(Io, FormatErrorsCarryPaths) {
  auto expect_path = [](const Error& e, const std::string& path) {
    EXPECT_EQ(e.kind(), ErrorKind::FormatError);
    EXPECT_NE(std::string(e.what()).find(path), std::string::npos) << e.what();
  };
  expect_path(mutated([](Json& j) { j.erase("field"); }), "missing key 'field'");
  expect_path(mutated([](Json& j) { j["format"] = "other/9"; }), "$.format");
  expect_path(mutated([](Json& j) { j["structure"]["mult"][0][2] = 7; }), "$.structure.mult[0][2]");
  expect_path(mutated([](Json& j) { j["structure"]["mult"][0][3] = 5; }), "$.structure.mult[0][3]");
  expect_path(mutated([](Json& j) { j["structure"]["unit"] = Json::array({1}); }), "$.structure.unit");
  expect_path(mutated([](Json& j) { j["object"]["degrees"][1] = Json::array({1, 0}); }), "$.object.degrees[1]");
  expect_path(mutated([](Json& j) { j["structure"]["comult"].push_back(j["structure"]["comult"][0]); }),
              "$.structure.comult");
  EXPECT_EQ(error_of([] { algebra_from_json("{ not json"); }).kind(), ErrorKind::ParseError);
}

TEST(Io, OptionalActionAndAntipode) {
  Json j = Json::parse(algebra_to_json(algebra_file(qta_structure(preset("bline")))));
  j["structure"].erase("antipode");
  AlgebraFile a = algebra_from_json(j.dump());
  EXPECT_EQ(a.hopf.S.column(1), (SparseVec{{1, 4}}));  // solved on load
  j["object"].erase("action");
  AlgebraFile b = algebra_from_json(j.dump());
  EXPECT_EQ(b.hopf.carrier->act(1, 1), (SparseVec{{1, 1}}));  // trivial by default
}

TEST(Io, PairingSidecarDigests) {
  const TruncatedQTA t = quantum_tensor_algebra(preset("bline"));
  const DualityInput in = regular_duality_setup(t);
  const std::string htext = algebra_to_json(algebra_file(in.h));
  const std::string hdtext = algebra_to_json(algebra_file(in.hd));
  const std::string hsha = sha256_hex(htext), hdsha = sha256_hex(hdtext);
  EXPECT_EQ(hsha.size(), 64u);
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  const std::string ptext = pairing_to_json(in.pairing, hsha, hdsha);
  const LinearMorphism back = pairing_from_json(ptext, in.hd.carrier, in.h.carrier, hsha, hdsha);
  EXPECT_TRUE(morphism_equal(back, in.pairing));
  EXPECT_EQ(error_of([&] { pairing_from_json(ptext, in.hd.carrier, in.h.carrier, hdsha, hdsha); }).kind(),
            ErrorKind::InvalidArgument);
  Json j = Json::parse(ptext);
  j["entries"][0][0] = 9;
  EXPECT_EQ(error_of([&] { pairing_from_json(j.dump(), in.hd.carrier, in.h.carrier, hsha, hdsha); }).kind(),
            ErrorKind::FormatError);
}

TEST(Io, CoactionRoundTrip) {
  const DualityInput in = regular_duality_setup(quantum_tensor_algebra(preset("bline")));
  AlgebraFile r = algebra_file(in.hd);
  for (std::uint64_t c = 0; c < in.r.psi.cols(); ++c)
    for (const Term& t : in.r.psi.column(c)) r.coaction.push_back({c, t.index / 2, t.index % 2, t.value});
  const AlgebraFile back = algebra_from_json(algebra_to_json(r), "R");
  const LinearMorphism psi = coaction_morphism(back, in.r.carrier, in.hd.carrier);
  EXPECT_TRUE(morphism_equal(psi, in.r.psi));
}

TEST(Io, ReportJsonIsDeterministic) {
  Report r;
  r.check("a.one", "x = x", true);
  r.check("a.two", "y = z", false, "mismatch");
  const std::vector<InputDigest> in{{"H", "h.json", sha256_hex("h")}};
  const std::string a = report_to_json(r, "check hopf h.json", in), b = report_to_json(r, "check hopf h.json", in);
  EXPECT_EQ(a, b);
  const Json j = Json::parse(a);
  EXPECT_EQ(j["meta"]["tool"], "ydhopf");
  EXPECT_EQ(j["meta"]["version"], kToolVersion);
  EXPECT_EQ(j["assertions"].size(), 2u);
  EXPECT_EQ(j["assertions"][1]["note"], "mismatch");
  EXPECT_EQ(j["summary"]["failed"], 1);
  EXPECT_EQ(j["verdict"], "fail");
}

TEST(Io, EnvWithAliases) {
  const fs::path dir = scratch_dir() / "env";
  fs::create_directories(dir);
  write_atomic((dir / "h.json").string(), bline_text());
  write_atomic((dir / "env.json").string(),
               R"({"format": "ydhopf-env/1", "algebras": [{"file": "h.json", "label": "H"}]})");
  GeneratorEnv env = load_env((dir / "env.json").string());
  EXPECT_TRUE(morphism_equal(eval("Δ ; S * id[H] ; μ", env), eval("ε ; η", env)));
  EXPECT_TRUE(morphism_equal(eval("S̄ ; S", env), eval("id[H]", env)));
  EXPECT_TRUE(morphism_equal(eval("m_H", env), eval("m", env)));
  fs::remove_all(dir);
}

TEST(Io, WriteAtomicAndReadErrors) {
  const fs::path dir = scratch_dir();
  const std::string p = (dir / "out.txt").string();
  write_atomic(p, "first");
  write_atomic(p, "second");
  EXPECT_EQ(read_text(p), "second");
  EXPECT_FALSE(fs::exists(p + ".tmp"));
  EXPECT_EQ(error_of([&] { read_text((dir / "missing").string()); }).kind(), ErrorKind::IoError);
  EXPECT_EQ(error_of([&] { write_atomic((dir / "no" / "such" / "dir.txt").string(), "x"); }).kind(),
            ErrorKind::IoError);
  fs::remove_all(dir);
}
