#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ydhopf/constructions.hpp"

namespace ydhopf {

// One generator x_i: its degree g_i (exponent vector) and the character chi_i
// (values on the cyclic generators of G).
struct QTALetter {
  std::vector<std::int64_t> g;
  std::vector<Scalar> chi;
};

struct QTAParams {
  std::uint64_t p = 0;
  std::vector<std::uint32_t> orders;
  std::vector<QTALetter> letters;
  std::uint32_t N = 1;  // words of length > N are zero
};

// Words in the letters of length <= N, by length then lexicographically.
struct TruncatedQTA {
  QTAParams params;
  std::vector<std::vector<std::size_t>> words;
  std::vector<Character> chars;
  std::vector<GroupElement> degrees;  // per letter
  BraidedHopfAlgebra hopf;
};

// 512 unless YDHOPF_BASIS_CAP is set.
std::size_t basis_cap();
std::uint64_t qta_basis_size(const QTAParams& params);

// Delta(x_i) = x_i (x) 1 + 1 (x) x_i extended as a braided algebra map, eps(x_i) = 0,
// deg(x_i) = g_i, h.x_i = chi_i(h) x_i. BasisCapExceeded above `cap`
// (default basis_cap()).
// The structure maps (S via antipode_solve) without verifying the Hopf axioms.
// A truncation is a bialgebra only when every coproduct term of a word longer
// than N has a factor longer than N; `check hopf` reports the failures.
TruncatedQTA qta_structure(const QTAParams& params, const std::string& name = "H",
                           std::optional<std::size_t> cap = std::nullopt);
// qta_structure followed by hopf_build's verification (AxiomFailure).
TruncatedQTA quantum_tensor_algebra(const QTAParams& params, const std::string& name = "H",
                                    std::optional<std::size_t> cap = std::nullopt);

// bline, two-gen, z4q2.
std::vector<std::string> preset_names();
QTAParams preset(const std::string& name);  // InvalidArgument for an unknown name

std::size_t word_index(const TruncatedQTA& t, const std::vector<std::size_t>& word);
std::string word_name(const std::vector<std::size_t>& word);

// g.y = prod_letters chi(g) y for every g and basis word, against a letterwise oracle.
Report word_action_check(const TruncatedQTA& t);
// chi_i(g_j) chi_j(g_i) = 1 for all i, j.
bool quantum_cocommutative_params(const QTAParams& params);
// The character criterion, and when it holds also c o Delta = Delta.
bool quantum_cocommutative_check(const TruncatedQTA& t);
// m(T_a (x) T_b) in T_{a+b} and Delta(T_m) in sum_{p+q=m} T_p (x) T_q.
Report length_grading_report(const TruncatedQTA& t);

struct DualityInput {
  ComoduleAlgebra r;
  BraidedHopfAlgebra h;
  BraidedHopfAlgebra hd;
  LinearMorphism pairing;
};
// H = T, Hd its quasi-dual, R = Hd with psi = Delta_Hd. NonSymmetricBraiding
// unless the braiding on T is symmetric. With verify = false the quasi-dual is
// solved but not checked against the Hopf axioms.
DualityInput regular_duality_setup(const TruncatedQTA& t, bool verify = true);

}  // namespace ydhopf
