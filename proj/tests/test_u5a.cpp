#include "paraf/u5a.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace paraf;

namespace {

const U5aGolden& golden() {
  static U5aGolden g = load_u5a_golden(GOLDEN_DIR);
  return g;
}

Rational frac_part(const Rational& x) { return x - Rational(floor_q(x)); }

// b(A, X) = h(A x X) - h(A) - h(X) mod 1 from conformal weights alone.
Rational b_from_weights(int p, int q, const PairLabel& x) {
  IrrLabel a = simple_current(p, 5), b = simple_current(q, 5);
  auto fa = fuse(a, x.left), fb = fuse(b, x.right);
  Rational h = conformal_weight(fa.begin()->first) + conformal_weight(fb.begin()->first);
  return frac_part(h - conformal_weight(a) - conformal_weight(b) - conformal_weight(x.left) - conformal_weight(x.right));
}

}  // namespace

TEST(U5a, BPairingExamples) {
  EXPECT_EQ(b_pairing(1, 2, make_pair_label(5, 0, 5, 0)), 0);
  EXPECT_EQ(b_pairing(1, 2, make_pair_label(5, 0, 4, 2)), 0);
  EXPECT_EQ(b_pairing(1, 2, make_pair_label(1, 0, 5, 0)), Rational(1, 5));
}

TEST(U5a, BPairingMatchesConformalWeights) {
  for (const auto& a : all_labels(5))
    for (const auto& b : all_labels(5))
      for (int p = 0; p < 5; ++p)
        for (int q = 0; q < 5; ++q) EXPECT_EQ(b_pairing(p, q, {a, b}), b_from_weights(p, q, {a, b}));
}

TEST(U5a, Irr0) {
  auto list = irr0_list();
  EXPECT_EQ(list.size(), 45U);
  std::set<PairLabel> s(list.begin(), list.end());
  EXPECT_TRUE(s.count(make_pair_label(5, 0, 4, 2)));
  EXPECT_FALSE(s.count(make_pair_label(1, 0, 1, 0)));
  // Closed under the simple-current orbit, 9 orbits of 5.
  for (const auto& x : list)
    for (const auto& y : simple_current_orbit(x)) EXPECT_TRUE(s.count(y));
  auto orbits = computed_orbits();
  EXPECT_EQ(orbits.size(), 9U);
  for (const auto& o : orbits) EXPECT_EQ(o.size(), 5U);
}

TEST(U5a, ListedRowsAreExactlyIrr0) {
  std::set<PairLabel> listed;
  for (const auto& row : golden().rows) listed.insert(row.begin(), row.end());
  auto list = irr0_list();
  EXPECT_EQ(listed, std::set<PairLabel>(list.begin(), list.end()));
}

TEST(U5a, Induce) {
  EXPECT_EQ(induce(make_pair_label(5, 0, 5, 0), golden()), 0);
  EXPECT_EQ(induce(make_pair_label(5, 1, 1, 0), golden()), 1);
  EXPECT_EQ(induce(make_pair_label(3, 1, 2, 0), golden()), 5);
  EXPECT_THROW(induce(make_pair_label(1, 0, 1, 0), golden()), std::domain_error);
}

TEST(U5a, WeightsAndDimensions) {
  EXPECT_EQ(u_weight_dim(0, golden()), std::make_pair(Rational(0), 1));
  EXPECT_EQ(u_weight_dim(4, golden()), std::make_pair(Rational(1, 7), 2));
  EXPECT_EQ(u_weight_dim(5, golden()), std::make_pair(Rational(4, 7), 5));
  // Every summand weight is congruent mod 1 to the top weight.
  for (int i = 0; i < 9; ++i) {
    Rational top = u_weight_dim(i, golden()).first;
    for (const auto& x : golden().rows[i])
      EXPECT_TRUE(is_integer(conformal_weight(x.left) + conformal_weight(x.right) - top));
  }
}

TEST(U5a, FusionExamples) {
  for (int i = 0; i < 9; ++i) EXPECT_EQ(u_fuse(0, i, golden()), (UMultiset{{i, 1}}));
  UMultiset all;
  for (int i = 0; i < 9; ++i) all[i] = 1;
  EXPECT_EQ(u_fuse(5, 5, golden()), all);
  EXPECT_EQ(u_fuse(6, 6, golden()), (UMultiset{{0, 1}, {3, 1}}));
}

TEST(U5a, FusionMatchesFullOrbitProduct) {
  // Oracle: fuse all 25 summand pairs; each U^k contributes 5 copies of every summand
  // for each of the 5 choices, so its multiplicity is count(rows[k][0]) / 5.
  const auto& g = golden();
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      PairVector total;
      for (const auto& x : g.rows[i])
        for (const auto& y : g.rows[j])
          for (auto [z, m] : pair_fuse(x, y)) total[z] += m;
      UMultiset expected;
      for (int k = 0; k < 9; ++k) {
        int c = total.count(g.rows[k][0]) ? total[g.rows[k][0]] : 0;
        EXPECT_EQ(c % 5, 0);
        if (c) expected[k] = c / 5;
      }
      EXPECT_EQ(u_fuse(i, j, g), expected) << i << " " << j;
    }
}

TEST(U5a, AppendixVerifies) {
  Report r = verify_appendix(golden());
  EXPECT_TRUE(r.pass) << to_json(r).dump();
  EXPECT_EQ(r.payload["table_diffs"], 0);
  EXPECT_EQ(r.payload["representative_independent"], true);
}

TEST(U5a, PerturbedGoldenIsFlagged) {
  U5aGolden g = golden();
  g.products[{5, 5}].erase(8);
  g.products[{1, 3}] = UMultiset{{5, 1}};
  g.weights[3] = Rational(3, 7);
  Report r = verify_appendix(g);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.payload["table_diffs"], 2);
  EXPECT_EQ(r.payload["mismatched_cells"], (nlohmann::json{"1x3", "5x5"}));
  EXPECT_EQ(r.findings.size(), 3U);
}

TEST(U5a, LoaderReportsBadPath) {
  EXPECT_THROW(load_u5a_golden("/nonexistent"), std::runtime_error);
}
