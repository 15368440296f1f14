#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ydhopf/qta.hpp"

namespace ydhopf {

// "ydhopf-algebra/1": field, group, object (basis names, degrees as exponent
// vectors, action matrices per cyclic generator), structure as sparse triples
// (mult/comult [i, j, k, v], antipode [i, j, v] = coefficient v of e_j in S(e_i)),
// unit/counit as dense vectors. Optional right coaction [i, j, k, v]:
// r_i -> v r_j (x) f_k, and the generating QTA parameters.
struct AlgebraFile {
  BraidedHopfAlgebra hopf;  // assembled, not verified
  std::vector<std::string> basis;
  std::vector<std::array<std::uint64_t, 4>> coaction;
  std::optional<QTAParams> qta;
};

AlgebraFile algebra_file(const BraidedHopfAlgebra& h, std::vector<std::string> basis = {},
                         std::optional<QTAParams> qta = std::nullopt);
AlgebraFile algebra_file(const TruncatedQTA& t);
// Canonical text: fixed key order, sorted triples, trailing newline.
std::string algebra_to_json(const AlgebraFile& a);
// FormatError (with a JSON path) on any schema violation. The carrier is named
// `carrier_name` when given, else by the file's object name.
AlgebraFile algebra_from_json(const std::string& text, const std::string& carrier_name = "");
// psi: R -> R (x) Hd from the coaction triples.
LinearMorphism coaction_morphism(const AlgebraFile& r, const ObjRef& r_carrier, const ObjRef& hd_carrier);

std::string sha256_hex(const std::string& bytes);

// "ydhopf-pairing/1": SHA-256 of the H and Hd file bytes and entries
// [f, h, v] = <f_f, h_h>.
std::string pairing_to_json(const LinearMorphism& pairing, const std::string& h_digest,
                            const std::string& hd_digest);
// FormatError on a schema violation, InvalidArgument if the digests do not
// match the given algebras.
LinearMorphism pairing_from_json(const std::string& text, const ObjRef& hd, const ObjRef& h,
                                 const std::string& h_digest, const std::string& hd_digest);

struct InputDigest {
  std::string role;
  std::string path;
  std::string sha256;
};
// Deterministic: metadata (tool, version, command, inputs) separate from the
// ordered assertion list; no timestamps.
std::string report_to_json(const Report& r, const std::string& command, const std::vector<InputDigest>& inputs);

std::string read_text(const std::string& path);  // IoError
// Writes to a temporary file in the same directory, then renames.
void write_atomic(const std::string& path, const std::string& content);

// "ydhopf-env/1": {"algebras": [{"file", "label"}], "pairing": {"file", "h", "hd"}}.
// Binds each carrier under its label with m_L, eta_L, Delta_L, eps_L, S_L,
// Sinv_L; a single algebra also gets m, eta, Delta, eps, S and the Greek
// aliases. Relative paths resolve against the env file's directory.
GeneratorEnv load_env(const std::string& path);

extern const char* const kToolVersion;

}  // namespace ydhopf
