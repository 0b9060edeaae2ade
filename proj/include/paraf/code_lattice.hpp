#pragma once

#include "paraf/lattice.hpp"
#include "paraf/report.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace paraf {

// K = Z_2^{p-1} with u.v = uAv^T and q(u) = uAu^T/2 mod 2, A the A_{p-1} Cartan matrix.
struct KSpace {
  int p = 0;
  ZMatrix cartan;
};

KSpace make_kspace(int p);

// A word of K^d: d blocks of p-1 bits, stored flat.
using Codeword = std::vector<int>;

struct Code {
  int p = 0;
  int d = 0;
  std::vector<Codeword> generators;
};

int k_inner(const std::vector<int>& u, const std::vector<int>& v, int p);
int k_quadratic(const std::vector<int>& u, int p);
int codeword_inner(const Codeword& u, const Codeword& v, int p);

// Minimal norm in N + beta_u, N = sqrt(2)A_{p-1}; indexed by the bitmask of u.
const std::vector<int>& block_weight_table(int p);
int block_weight(const std::vector<int>& u, int p);
int codeword_weight(const Codeword& c, int p);

// Diagonal nu acting on a word.
Codeword nu_word(const Codeword& c, int p);
std::vector<Codeword> code_span(const Code& code);

struct CodeProperties {
  std::size_t size = 0;
  bool self_orthogonal = false;
  bool self_dual = false;
  bool totally_isotropic = false;
  bool nu_invariant = false;
  bool parity_law = false;  // w(c) = sum q(c_i) mod 2 for every word
  std::map<int, long long> weight_distribution;
};

CodeProperties code_properties(const Code& code);
Report code_properties_report(const Code& code);

// Weight-4 types I..IV of the p=5, d=4 example.
std::optional<int> weight4_type(const Codeword& c);
// <beta(c), nu beta(c)>.
Rational beta_nu_pairing(const Codeword& c, int p);

struct TypeCounts {
  std::array<int, 4> by_invariant{};
  std::array<int, 4> by_orbit{};
  std::vector<Codeword> unclassified;
  bool orbits_match_invariant = true;  // every orbit is one invariant class
};

// Classifies the weight-4 words and cross-checks against <nu> x Alt_4 orbits.
TypeCounts classify_weight4(const Code& code);

// beta(c) in beta coordinates of N^d.
QVector beta_of(const Codeword& c);
// Gram of N^d in beta coordinates.
QMatrix ambient_gram(int p, int d);
// Diagonal nu on N^d in beta coordinates.
QMatrix ambient_nu(int p, int d);

struct CodeLattice {
  Lattice lattice;           // parent_basis holds the basis in beta coordinates of N^d
  QMatrix ambient;           // Gram of N^d
  bool integral = false;
  bool even = false;
  std::vector<std::string> warnings;
};

CodeLattice build_lattice(const Code& code);
// Matrix of an ambient isometry in the basis of L; throws if it does not preserve L.
Isometry restrict_isometry(const CodeLattice& lc, const QMatrix& ambient_map);

// Span of v, nu v, ..., nu^{n-2} v for nu of order n (coordinates of L).
Lattice nu_orbit_sublattice(const Lattice& l, const QVector& v, const Isometry& nu);

// The glue (1/5)(beta_1 + 2 beta_2 + 3 beta_3 + 4 beta_4) for p = 5.
GlueVector lambda_p5();

Code builtin_code(const std::string& name);

struct EE8Pair {
  QMatrix m;        // basis of M in beta coordinates of N^4
  QMatrix m_prime;  // basis of nu^2(M)
  Report report;
};

// Builds M and M' = nu^2 M and checks the sqrt(2)E_8 invariants, L_C = M + M',
// M ∩ M' = 0 and t_M t_M' = nu.
EE8Pair build_ee8_pair();

// All checks of the p=5 example; the payload records |L_C(4)|.
Report verify_5b(bool count_norm4 = true);

}  // namespace paraf
