#pragma once

#include "paraf/matrix.hpp"
#include "paraf/report.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace paraf {

// Half (M^{2j,j})^eps of a sigma-type module under the theta orbifold.
struct OrbLabel {
  int j = 0;
  int eps = 0;
  int k = 3;
  auto operator<=>(const OrbLabel&) const = default;
};

using OrbVector = std::map<OrbLabel, int>;

// Multiplication table over the basis in lexicographic (j, eps) order.
struct OrbTable {
  int k = 3;
  std::vector<OrbLabel> basis;
  std::vector<std::vector<OrbVector>> entries;  // entries[x][y] = x * y

  std::size_t index(const OrbLabel& x) const { return static_cast<std::size_t>(2 * x.j + x.eps); }
  const OrbVector& at(const OrbLabel& x, const OrbLabel& y) const { return entries[index(x)][index(y)]; }
};

std::vector<OrbLabel> orbifold_basis(int k);
Rational orbifold_weight(const OrbLabel& x);

// Product with one of the generators (0,1) or (1,0).
OrbVector generator_fuse(const OrbLabel& g, const OrbLabel& x);
// Matrix of multiplication by a generator, acting on column vectors.
ZMatrix generator_matrix(const OrbLabel& g);

OrbTable derive_full_table(int k);
// Symmetry, associativity, identity row and non-negativity.
Report check_table(const OrbTable& t);

int sigma_sign(const OrbLabel& x);
Report verify_sigma_grading(const OrbTable& t);
Report verify_sigma_grading(int k);

// Halves summed back: (j1,e1)*(j2,e2) summed over output eps must equal
// the multiplicity of M^{2j,j} in the parafermion fusion product.
Report verify_collapse(const OrbTable& t);
// Generator rows reproduced verbatim from generator_fuse.
Report verify_generator_rows(const OrbTable& t);

std::string to_string(const OrbLabel& x);
std::string to_string(const OrbVector& v);

}  // namespace paraf
