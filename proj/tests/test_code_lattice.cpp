#include "paraf/code_lattice.hpp"

#include <gtest/gtest.h>

using namespace paraf;

namespace {

// In alpha coordinates N + beta_u is {y in a + Z^p : sum y = 0}, a_j = (u_j - u_{j-1})/2,
// with norm 2 sum y_j^2. The minimum puts +-1/2 on each of the t odd positions: w = t/2,
// attained by C(t, t/2) vectors.
int transitions(const std::vector<int>& u) {
  int t = 0, prev = 0;
  for (int b : u) {
    t += b != prev;
    prev = b;
  }
  return t + (prev != 0);
}

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<int> block_of(const Codeword& c, int l) { return {c.begin() + 4 * l, c.begin() + 4 * l + 4}; }

Codeword word(std::initializer_list<std::initializer_list<int>> blocks) {
  Codeword c;
  for (auto b : blocks) c.insert(c.end(), b.begin(), b.end());
  return c;
}

}  // namespace

TEST(CodeLattice, KFormExamples) {
  EXPECT_EQ(k_quadratic({1, 0, 0, 0}, 5), 1);
  EXPECT_EQ(k_quadratic({1, 0, 1, 1}, 5), 0);
  EXPECT_EQ(k_inner({1, 0, 0, 0}, {0, 1, 0, 0}, 5), 1);
  EXPECT_THROW(k_inner({1, 0, 0}, {0, 1, 0, 0}, 5), std::invalid_argument);
}

TEST(CodeLattice, QuadraticPolarizesToInner) {
  for (int p : {3, 5, 7})
    for (int a = 0; a < (1 << (p - 1)); ++a)
      for (int b = 0; b < (1 << (p - 1)); ++b) {
        std::vector<int> u(p - 1), v(p - 1), s(p - 1);
        for (int i = 0; i < p - 1; ++i) {
          u[i] = (a >> i) & 1;
          v[i] = (b >> i) & 1;
          s[i] = u[i] ^ v[i];
        }
        EXPECT_EQ(k_quadratic(s, p) ^ k_quadratic(u, p) ^ k_quadratic(v, p), k_inner(u, v, p));
      }
}

TEST(CodeLattice, BlockWeightsMatchTransitionCount) {
  for (int p : {3, 5, 7}) {
    const auto& table = block_weight_table(p);
    for (int a = 0; a < (1 << (p - 1)); ++a) {
      std::vector<int> u(p - 1);
      for (int i = 0; i < p - 1; ++i) u[i] = (a >> i) & 1;
      EXPECT_EQ(table[a], transitions(u) / 2) << p << " " << a;
      EXPECT_EQ(table[a] % 2, k_quadratic(u, p));
    }
  }
}

TEST(CodeLattice, CodewordWeightExamples) {
  EXPECT_EQ(codeword_weight(Codeword(16, 0), 5), 0);
  EXPECT_EQ(codeword_weight(word({{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}}), 5), 4);
  EXPECT_EQ(codeword_weight(word({{1, 0, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 1}, {0, 0, 0, 0}}), 5), 4);
}

TEST(CodeLattice, NuActionOnK) {
  // (i1,i2,i3,i4) -> (i4, i1+i4, i2+i4, i3+i4).
  for (int a = 0; a < 16; ++a) {
    Codeword u{a & 1, (a >> 1) & 1, (a >> 2) & 1, (a >> 3) & 1};
    Codeword expected{u[3], u[0] ^ u[3], u[1] ^ u[3], u[2] ^ u[3]};
    EXPECT_EQ(nu_word(u, 5), expected);
  }
}

TEST(CodeLattice, BuiltinCodeProperties) {
  Code c = builtin_code("5B");
  EXPECT_EQ(c.generators.size(), 8U);
  auto props = code_properties(c);
  EXPECT_EQ(props.size, 256U);
  EXPECT_TRUE(props.self_orthogonal);
  EXPECT_TRUE(props.self_dual);
  EXPECT_TRUE(props.totally_isotropic);
  EXPECT_TRUE(props.nu_invariant);
  EXPECT_TRUE(props.parity_law);
  std::map<int, long long> expected{{0, 1}, {4, 130}, {6, 120}, {8, 5}};
  EXPECT_EQ(props.weight_distribution, expected);
  EXPECT_THROW(builtin_code("7A"), std::invalid_argument);
}

TEST(CodeLattice, NuCyclesGenerators) {
  Code c = builtin_code("5B");
  auto add = [](Codeword a, const Codeword& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
    return a;
  };
  const auto& g = c.generators;
  for (int base : {0, 4}) {
    for (int i = 0; i < 3; ++i) EXPECT_EQ(nu_word(g[base + i], 5), g[base + i + 1]);
    Codeword sum = add(add(add(g[base], g[base + 1]), g[base + 2]), g[base + 3]);
    EXPECT_EQ(nu_word(g[base + 3], 5), sum);
    EXPECT_EQ(nu_word(sum, 5), g[base]);
  }
}

TEST(CodeLattice, TrivialAndDegenerateCodes) {
  Code zero{5, 4, {}};
  auto props = code_properties(zero);
  EXPECT_EQ(props.weight_distribution, (std::map<int, long long>{{0, 1}}));
  EXPECT_TRUE(props.self_orthogonal);
  EXPECT_FALSE(props.self_dual);

  Code single{5, 4, {word({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}})}};
  auto sp = code_properties(single);
  EXPECT_TRUE(sp.self_orthogonal);
  EXPECT_FALSE(sp.totally_isotropic);

  Code clash{5, 4,
             {word({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
              word({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}})}};
  EXPECT_FALSE(code_properties(clash).self_orthogonal);

  EXPECT_THROW(code_properties(Code{5, 4, {Codeword(15, 0)}}), std::invalid_argument);
}

TEST(CodeLattice, LatticeIntegralityTracksCode) {
  // Integral iff self-orthogonal, even iff totally isotropic.
  Code zero{5, 4, {}};
  auto lz = build_lattice(zero);
  EXPECT_EQ(lz.lattice.gram, ambient_gram(5, 4));
  EXPECT_TRUE(lz.even);

  Code single{5, 4, {word({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}})}};
  auto ls = build_lattice(single);
  EXPECT_TRUE(ls.integral);
  EXPECT_FALSE(ls.even);
  EXPECT_FALSE(ls.warnings.empty());

  Code clash{5, 4,
             {word({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
              word({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}})}};
  auto lc = build_lattice(clash);
  EXPECT_FALSE(lc.integral);
}

TEST(CodeLattice, BuiltinLatticeInvariants) {
  auto lc = build_lattice(builtin_code("5B"));
  const Lattice& l = lc.lattice;
  EXPECT_EQ(l.rank(), 16U);
  EXPECT_TRUE(lc.even);
  EXPECT_EQ(det(l), 625);
  EXPECT_EQ(min_norm(l), 4);
  // |L_C / N^4| = |C|.
  EXPECT_EQ(product(index_invariants(*l.parent_basis, QMatrix::identity(16))), 256);
  auto nu = restrict_isometry(lc, ambient_nu(5, 4));
  EXPECT_TRUE(is_isometry(l, nu.matrix));
  EXPECT_EQ(matrix_order(nu.matrix, 10), 5);
  EXPECT_TRUE(is_fixed_point_free(nu.matrix));
  // Each N_l is RSSD in L_C.
  for (int blk = 0; blk < 4; ++blk) {
    QMatrix nl(4, 16);
    for (int i = 0; i < 4; ++i) nl(i, 4 * blk + i) = 1;
    EXPECT_TRUE(is_rssd(l, nl * inverse(*l.parent_basis)));
  }
}

TEST(CodeLattice, NormFourCountMatchesCosetOracle) {
  // Norm 4 vectors: 80 roots-of-N-blocks from the zero word plus, for each w(c) = 4 word,
  // the product of per-block minimal vector counts.
  long long expected = 4 * 20;
  for (const auto& c : code_span(builtin_code("5B"))) {
    if (codeword_weight(c, 5) != 4) continue;
    long long prod = 1;
    for (int l = 0; l < 4; ++l) {
      int t = transitions(block_of(c, l));
      prod *= binom(t, t / 2);
    }
    expected += prod;
  }
  auto lc = build_lattice(builtin_code("5B"));
  EXPECT_EQ(static_cast<long long>(shell(lc.lattice, 4).size()), expected);
  EXPECT_EQ(expected, 2640);
}

TEST(CodeLattice, Weight4Types) {
  EXPECT_EQ(weight4_type(word({{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}})), 0);
  EXPECT_EQ(weight4_type(word({{1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}})), 1);
  EXPECT_EQ(weight4_type(word({{1, 0, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 1}, {0, 0, 0, 0}})), 2);
  EXPECT_EQ(weight4_type(word({{1, 1, 0, 0}, {0, 1, 1, 1}, {1, 1, 1, 1}, {0, 1, 0, 0}})), 3);
  EXPECT_EQ(weight4_type(Codeword(16, 0)), std::nullopt);

  auto counts = classify_weight4(builtin_code("5B"));
  EXPECT_EQ(counts.by_invariant, (std::array<int, 4>{5, 5, 60, 60}));
  EXPECT_EQ(counts.by_orbit, (std::array<int, 4>{5, 5, 60, 60}));
  EXPECT_TRUE(counts.unclassified.empty());
  EXPECT_TRUE(counts.orbits_match_invariant);
}

TEST(CodeLattice, NuOrbitSublattices) {
  auto lc = build_lattice(builtin_code("5B"));
  const Lattice& l = lc.lattice;
  const QMatrix binv = inverse(*l.parent_basis);
  auto nu = restrict_isometry(lc, ambient_nu(5, 4));
  Lattice sqrt2a4 = sqrt2_a(5);
  QMatrix a41 = QMatrix::from_rows({{4, -1, -1, -1}, {-1, 4, -1, -1}, {-1, -1, 4, -1}, {-1, -1, -1, 4}});
  auto orbit_gram = [&](const QVector& v) {
    QMatrix rows(0, 16);
    QVector x = v;
    for (int i = 0; i < 4; ++i, x = mul(x, nu.matrix)) rows = vstack(rows, QMatrix::from_rows({x}));
    return rows * l.gram * rows.transpose();
  };
  const std::array<Codeword, 4> reps{word({{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}}),
                                     word({{1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}}),
                                     word({{1, 0, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 1}, {0, 0, 0, 0}}),
                                     word({{1, 1, 0, 0}, {0, 1, 1, 1}, {1, 1, 1, 1}, {0, 1, 0, 0}})};
  const std::array<int, 4> pairing{-2, 0, -2, -1};
  for (int t = 0; t < 4; ++t) {
    QVector v = mul(beta_of(reps[t]), binv);
    EXPECT_EQ(l.norm(v), 4);
    EXPECT_EQ(beta_nu_pairing(reps[t], 5), pairing[t]);
    Lattice a = nu_orbit_sublattice(l, v, nu);
    EXPECT_EQ(a.rank(), 4U);
    if (t < 3) {
      EXPECT_EQ(det(a), det(sqrt2a4));
      EXPECT_EQ(shell(a, 4).size(), shell(sqrt2a4, 4).size());
    } else {
      EXPECT_EQ(orbit_gram(v), a41);
      EXPECT_EQ(det(a), 125);
    }
  }
  EXPECT_EQ(orbit_gram(mul(beta_of(reps[0]), binv)), sqrt2a4.gram);
  // The nu-orbit of beta_1 spans N itself.
  Lattice n = nu_orbit_sublattice(sqrt2a4, {1, 0, 0, 0}, coxeter_nu(5));
  EXPECT_EQ(det(n), det(sqrt2a4));
}

TEST(CodeLattice, EE8Pair) {
  auto pair = build_ee8_pair();
  EXPECT_TRUE(pair.report.pass) << to_json(pair.report).dump();
  EXPECT_EQ(pair.report.payload["t_M_t_Mprime_equals_nu"], true);
  EXPECT_EQ(pair.report.payload["intersection_rank"], 0);
}

TEST(CodeLattice, Discriminant) {
  auto lc = build_lattice(builtin_code("5B"));
  auto dg = discriminant_group(lc.lattice);
  EXPECT_EQ(dg.invariant_factors, std::vector<Integer>(4, Integer(5)));
  Lattice n = sqrt2_a(5);
  GlueVector lam = lambda_p5();
  EXPECT_EQ(n.norm(lam), Rational(8, 5));
  auto pair_b4 = mul(lam, n.gram);
  EXPECT_EQ(pair_b4, (QVector{0, 0, 0, 2}));
}

TEST(CodeLattice, FullVerification) {
  Report r = verify_5b(false);
  EXPECT_TRUE(r.pass) << to_json(r).dump();
  EXPECT_EQ(r.payload["lambda_f_mod5_diagonal"], 3);
}
