#pragma once

#include "paraf/fusion_ring.hpp"
#include "paraf/report.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace paraf {

// M^{i1,j1} (x) M^{i2,j2} at level 5.
struct PairLabel {
  IrrLabel left;
  IrrLabel right;
  auto operator<=>(const PairLabel&) const = default;
};

PairLabel make_pair_label(int i1, int j1, int i2, int j2);
std::string to_string(const PairLabel& x);

using PairVector = std::map<PairLabel, int>;
// ULabel index -> multiplicity.
using UMultiset = std::map<int, int>;

// Reference tables, loaded from JSON.
struct U5aGolden {
  std::array<std::array<PairLabel, 5>, 9> rows;
  std::array<Rational, 9> weights;
  std::array<int, 9> dimensions;
  std::map<std::pair<int, int>, UMultiset> products;  // keys with i <= j
};

U5aGolden load_u5a_golden(const std::string& dir);

// (p(i1-2j1) + q(i2-2j2))/5 mod 1, in [0,1).
Rational b_pairing(int p, int q, const PairLabel& x);
std::vector<PairLabel> irr0_list();

// (M^j (x) M^{2j}) fused with x for j = 0..4.
std::array<PairLabel, 5> simple_current_orbit(const PairLabel& x);
// Orbit partition of irr0_list, each orbit sorted, orbits ordered by least element.
std::vector<std::vector<PairLabel>> computed_orbits();

int induce(const PairLabel& x, const U5aGolden& g);
std::pair<Rational, int> u_weight_dim(int i, const U5aGolden& g);

PairVector pair_fuse(const PairLabel& x, const PairLabel& y);
// U^i x U^j via the summands rows[i][ri] and rows[j][rj].
UMultiset u_fuse(int i, int j, const U5aGolden& g, int ri = 0, int rj = 0);
std::vector<std::vector<UMultiset>> u_fusion_table(const U5aGolden& g);

// Contragredient of a pair: componentwise the unique label fusing to the vacuum.
PairLabel contragredient(const PairLabel& x);

Report verify_appendix(const U5aGolden& g);

std::string to_string(const UMultiset& m);

}  // namespace paraf
