#include "paraf/orbifold_ring.hpp"

#include <gtest/gtest.h>

using namespace paraf;

namespace {

// Oracle: the element acting as multiplication by x is the unique matrix T
// commuting with both generator matrices and sending the identity to e_x.
// Solved by rational elimination on the n*n entries of T.
QMatrix commutant_solution(int k, std::size_t x) {
  const QMatrix a1 = to_q(generator_matrix({0, 1, k}));
  const QMatrix a2 = to_q(generator_matrix({1, 0, k}));
  const std::size_t n = a1.rows();
  // Unknown t(r,c) has index r*n+c; each equation is a column of sys.
  std::vector<QVector> eqs;
  QVector rhs;
  for (const QMatrix* a : {&a1, &a2})
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        // (T A - A T)(r,c) = 0
        QVector e(n * n, Rational(0));
        for (std::size_t m = 0; m < n; ++m) {
          e[r * n + m] += (*a)(m, c);
          e[m * n + c] -= (*a)(r, m);
        }
        eqs.push_back(e);
        rhs.push_back(0);
      }
  for (std::size_t r = 0; r < n; ++r) {
    QVector e(n * n, Rational(0));
    e[r * n + 0] = 1;
    eqs.push_back(e);
    rhs.push_back(r == x ? 1 : 0);
  }
  QMatrix sys(n * n, eqs.size());
  for (std::size_t c = 0; c < eqs.size(); ++c)
    for (std::size_t r = 0; r < n * n; ++r) sys(r, c) = eqs[c][r];
  QVector sol;
  EXPECT_TRUE(solve_left(sys, rhs, sol));
  EXPECT_EQ(rank(sys), n * n) << "commutant solution not unique";
  QMatrix t(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) t(r, c) = sol[r * n + c];
  return t;
}

}  // namespace

TEST(OrbifoldRing, Weights) {
  EXPECT_EQ(orbifold_weight({0, 0, 5}), 0);
  EXPECT_EQ(orbifold_weight({1, 0, 5}), Rational(2, 7));
  EXPECT_EQ(orbifold_weight({0, 1, 5}), 3);
  EXPECT_EQ(orbifold_weight({1, 1, 5}), Rational(9, 7));
  EXPECT_EQ(orbifold_weight({3, 1, 6}), Rational(12, 8) + 2);
  // k=4, j=2: the even boundary branch applies.
  EXPECT_EQ(orbifold_weight({2, 1, 4}), Rational(1) + 2);
  EXPECT_THROW(orbifold_weight({3, 0, 5}), std::invalid_argument);
}

TEST(OrbifoldRing, GeneratorProducts) {
  for (int k = 3; k <= 9; ++k)
    for (int j = 0; j <= k / 2; ++j) EXPECT_EQ(generator_fuse({0, 1, k}, {j, 0, k}), (OrbVector{{{j, 1, k}, 1}}));
  EXPECT_EQ(generator_fuse({1, 0, 3}, {1, 0, 3}), (OrbVector{{{0, 0, 3}, 1}, {{1, 1, 3}, 1}}));
  EXPECT_EQ(generator_fuse({1, 0, 6}, {3, 0, 6}), (OrbVector{{{2, 0, 6}, 1}}));
  EXPECT_EQ(generator_fuse({1, 0, 7}, {2, 0, 7}), (OrbVector{{{1, 0, 7}, 1}, {{2, 1, 7}, 1}, {{3, 0, 7}, 1}}));
  EXPECT_EQ(generator_fuse({1, 0, 7}, {2, 1, 7}), (OrbVector{{{1, 1, 7}, 1}, {{2, 0, 7}, 1}, {{3, 1, 7}, 1}}));
  EXPECT_THROW(generator_fuse({2, 0, 7}, {0, 0, 7}), std::invalid_argument);
}

TEST(OrbifoldRing, SmallTables) {
  OrbTable t3 = derive_full_table(3);
  EXPECT_EQ(t3.basis.size(), 4u);
  EXPECT_EQ(t3.at({1, 0, 3}, {1, 1, 3}), (OrbVector{{{1, 0, 3}, 1}, {{0, 1, 3}, 1}}));
  OrbTable t5 = derive_full_table(5);
  EXPECT_EQ(t5.basis.size(), 6u);
  EXPECT_TRUE(verify_generator_rows(t5).pass);
  OrbTable t6 = derive_full_table(6);
  EXPECT_EQ(t6.basis.size(), 8u);
  // M^{6,3} is a simple current, so its even half squares to the vacuum.
  EXPECT_EQ(t6.at({3, 0, 6}, {3, 0, 6}), (OrbVector{{{0, 0, 6}, 1}}));
}

TEST(OrbifoldRing, TableMatchesCommutantOracle) {
  for (int k = 3; k <= 8; ++k) {
    OrbTable t = derive_full_table(k);
    for (std::size_t x = 0; x < t.basis.size(); ++x) {
      QMatrix op = commutant_solution(k, x);
      for (std::size_t y = 0; y < t.basis.size(); ++y)
        for (std::size_t z = 0; z < t.basis.size(); ++z) {
          auto it = t.entries[x][y].find(t.basis[z]);
          int c = it == t.entries[x][y].end() ? 0 : it->second;
          EXPECT_EQ(op(z, y), c) << "k=" << k << " " << to_string(t.basis[x]) << " x " << to_string(t.basis[y]);
        }
    }
  }
}

TEST(OrbifoldRing, SelfChecksAndGrading) {
  for (int k = 3; k <= 12; ++k) {
    OrbTable t = derive_full_table(k);
    EXPECT_TRUE(check_table(t).pass);
    EXPECT_TRUE(verify_generator_rows(t).pass);
    EXPECT_TRUE(verify_sigma_grading(t).pass) << k;
    EXPECT_TRUE(verify_collapse(t).pass) << k;
    // (0,1) acts as an involutive permutation.
    for (const auto& x : t.basis) {
      const auto& v = t.at({0, 1, k}, x);
      ASSERT_EQ(v.size(), 1u);
      EXPECT_EQ(t.at({0, 1, k}, v.begin()->first), (OrbVector{{x, 1}}));
    }
  }
}

TEST(OrbifoldRing, MutationsAreCaught) {
  OrbTable t = derive_full_table(5);
  OrbTable flipped = t;
  auto& cell = flipped.entries[2][2];
  OrbLabel z = cell.begin()->first;
  int m = cell.begin()->second;
  cell.erase(cell.begin());
  cell[{z.j, 1 - z.eps, z.k}] += m;
  EXPECT_FALSE(verify_sigma_grading(flipped).pass);
  EXPECT_FALSE(check_table(flipped).pass);
}
