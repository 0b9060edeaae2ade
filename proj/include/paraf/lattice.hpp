#pragma once

#include "paraf/intmat.hpp"
#include "paraf/matrix.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace paraf {

// Positive definite lattice given by its Gram matrix. When parent_basis is
// set, its rows are this lattice's basis in a parent's coordinates.
struct Lattice {
  QMatrix gram;
  std::optional<QMatrix> parent_basis;

  std::size_t rank() const { return gram.rows(); }
  Rational norm(const QVector& v) const { return bilinear(v, gram, v); }
  Rational inner(const QVector& a, const QVector& b) const { return bilinear(a, gram, b); }
};

// Rational vector in a base lattice's coordinates.
using GlueVector = QVector;

// Linear map in row convention: row i is the image of the i-th basis vector.
struct Isometry {
  QMatrix matrix;
};

struct DiscriminantGroup {
  std::vector<Integer> invariant_factors;     // nontrivial ones only, d1 | d2 | ...
  std::vector<GlueVector> generators;         // lifts to L*, in L's coordinates
  std::vector<std::optional<Integer>> q_values;
  std::optional<Integer> exponent;            // set when it is an odd prime
};

// Validates symmetry and positive definiteness.
Lattice make_lattice(const QMatrix& gram);
Lattice root_lattice(char family, int n);
ZMatrix cartan_matrix(char family, int n);
Lattice rescale(const Lattice& l, const Rational& c);
Lattice tensor(const Lattice& a, const Lattice& b);
Lattice orthogonal_sum(const std::vector<Lattice>& parts);
// Lattice spanned by the rows of `basis` (coordinates in L); keeps the parent basis.
Lattice sublattice(const Lattice& l, const QMatrix& basis);
Lattice dual(const Lattice& l);

bool is_integral(const Lattice& l);
bool is_even(const Lattice& l);
Rational det(const Lattice& l);
bool is_isometry(const Lattice& l, const QMatrix& m);
// Smallest n >= 1 with m^n = 1, or nullopt if none up to cap.
std::optional<int> matrix_order(const QMatrix& m, int cap);
bool is_fixed_point_free(const QMatrix& m);
// Order of the matrix group generated by gens, or nullopt once it exceeds cap.
std::optional<std::size_t> group_order(const std::vector<QMatrix>& gens, std::size_t cap);

DiscriminantGroup discriminant_group(const Lattice& l);
// q(a) = (m/2)<a,a> mod m and f(a,b) = m<a,b> mod m for glue of exponent m.
Integer discriminant_q(const Lattice& l, const GlueVector& a, const Integer& m);
Integer discriminant_f(const Lattice& l, const GlueVector& a, const GlueVector& b, const Integer& m);

// Basis (L coordinates) of the vectors of L orthogonal to the rows of a.
QMatrix annihilator(const Lattice& l, const QMatrix& a);
bool is_rssd(const Lattice& l, const QMatrix& a);
Isometry rssd_involution(const Lattice& l, const QMatrix& a);

// Exact Fincke-Pohst enumeration of x in Z^n with (x+shift)G(x+shift)^T <= bound.
// The visitor may return a smaller bound to prune (branch and bound).
using Visitor = std::function<Rational(const ZVector& x, const Rational& norm)>;
void enumerate(const QMatrix& gram, const QVector& shift, Rational bound, const Visitor& visit);

std::vector<ZVector> shell(const Lattice& l, const Rational& n);
std::vector<ZVector> short_vectors(const Lattice& l, const Rational& bound);
Rational min_norm(const Lattice& l);
Rational coset_min_norm(const Lattice& l, const GlueVector& shift);

// Invariant factors of S inside L (S given by L coordinates, full rank).
std::vector<Integer> quotient_invariants(const Lattice& l, const QMatrix& s);
// Invariant factors of the inner lattice inside the outer one, both given
// as rational bases in a common coordinate system.
std::vector<Integer> index_invariants(const QMatrix& outer, const QMatrix& inner);
Integer product(const std::vector<Integer>& v);

// sqrt(2)A_{k-1} in the basis beta_i = alpha_i - alpha_{i+1}.
Lattice sqrt2_a(int k);
Isometry coxeter_nu(int k);
// Isometry of sqrt(2)A_{k-1} induced by alpha_i -> alpha_{pi(i)}, pi a permutation of 1..k
// given as pi[0..k-1] = images of 1..k.
Isometry permutation_isometry(int k, const std::vector<int>& pi);
// alpha_i -> alpha_{s i mod k}.
Isometry tau(int k, int s);
// Glue lambda_i = gamma/(2k) - alpha_i/2 as a vector of Q N (beta coordinates).
GlueVector glue_lambda(int k, int i);

// rho/sqrt2 in beta coordinates: pairs to 1 with every beta_i.
GlueVector weyl_vector(int k);
// <rho/sqrt2, (1-nu)beta_i> for i = 1..k-1.
std::vector<Rational> weyl_pairing_row(int k);

// Radical of c(a,b) = 2 sum_i i<nu^i a, b> mod 2p, as a basis in N coordinates.
QMatrix c_nu_radical(const Lattice& n, const Isometry& nu, int p);
// Basis of N ∩ (1-nu)N*, the lattice the radical is compared with.
QMatrix n_cap_one_minus_nu_dual(const Lattice& n, const Isometry& nu);

Integer r_cap_p_dual_index(const Lattice& r, int p);

Isometry reflection(const Lattice& l, const QVector& root);

// For N ⊂ L ⊂ N* with L = N + span(glue): true iff 2L ⊂ N, which is the
// condition for V_L to be a sigma-type module. Throws if glue is not in N*.
bool sigma_type_criterion(const Lattice& n, const std::vector<GlueVector>& glue);

}  // namespace paraf
