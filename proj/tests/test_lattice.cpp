#include "paraf/lattice.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace paraf;

namespace {

// Oracle: every x in the box |x_i|^2 <= bound * (G^-1)_ii, visited directly.
std::vector<ZVector> box_vectors(const Lattice& l, const Rational& bound, const QVector& shift, bool exact_norm) {
  const std::size_t n = l.rank();
  QMatrix ginv = inverse(l.gram);
  std::vector<Integer> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer r = isqrt(floor_q(bound * ginv(i, i))) + 1;
    lo[i] = floor_q(-shift[i]) - r;
    hi[i] = ceil_q(-shift[i]) + r;
  }
  std::vector<ZVector> out;
  ZVector x(lo);
  while (true) {
    QVector y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = Rational(x[i]) + shift[i];
    Rational nm = l.norm(y);
    if (exact_norm ? nm == bound : nm <= bound) out.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) x[i++] = lo[i];
    if (i == n) break;
    ++x[i];
  }
  return out;
}

Rational box_coset_min(const Lattice& l, const QVector& shift) {
  Rational best = -1;
  for (const auto& x : box_vectors(l, Rational(l.rank() * 4), shift, false)) {
    QVector y(l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i) y[i] = Rational(x[i]) + shift[i];
    if (best < 0 || l.norm(y) < best) best = l.norm(y);
  }
  return best;
}

// E8 as D8 plus the half-integer glue: count norm-2 vectors directly.
int e8_roots_in_coordinates() {
  int count = 0;
  for (int code = 0; code < 6561; ++code) {  // entries in {-1,0,1}
    int c = code, sum = 0, sq = 0;
    for (int t = 0; t < 8; ++t, c /= 3) {
      int v = c % 3 - 1;
      sum += v;
      sq += v * v;
    }
    if (sq == 2 && sum % 2 == 0) ++count;
  }
  for (int signs = 0; signs < 256; ++signs) {  // entries +-1/2, even sum
    int minus = __builtin_popcount(signs);
    if (minus % 2 == 0) ++count;
  }
  return count;
}

QMatrix row_matrix(const QVector& v) { return QMatrix::from_rows({v}); }

std::set<ZVector> as_set(const std::vector<ZVector>& v) { return {v.begin(), v.end()}; }

QVector unit(std::size_t n, std::size_t i, Rational s = 1) {
  QVector e(n, Rational(0));
  e[i] = s;
  return e;
}

}  // namespace

TEST(Lattice, RootLattices) {
  EXPECT_EQ(root_lattice('A', 1).gram, (QMatrix{{Rational(2)}}));
  EXPECT_EQ(det(root_lattice('A', 4)), 5);
  EXPECT_EQ(det(root_lattice('D', 4)), 4);
  EXPECT_EQ(det(root_lattice('D', 7)), 4);
  EXPECT_EQ(det(root_lattice('E', 6)), 3);
  EXPECT_EQ(det(root_lattice('E', 7)), 2);
  EXPECT_EQ(det(root_lattice('E', 8)), 1);
  EXPECT_THROW(root_lattice('E', 9), std::invalid_argument);
  EXPECT_THROW(root_lattice('D', 3), std::invalid_argument);
  EXPECT_THROW(root_lattice('B', 3), std::invalid_argument);
  for (char f : {'A', 'D', 'E'})
    for (int n : {6, 7, 8}) EXPECT_EQ(min_norm(root_lattice(f, n)), 2);
}

TEST(Lattice, LoadValidation) {
  EXPECT_THROW(make_lattice(QMatrix{{Rational(2), Rational(1)}, {Rational(0), Rational(2)}}), std::invalid_argument);
  EXPECT_THROW(make_lattice(QMatrix{{Rational(1), Rational(2)}, {Rational(2), Rational(1)}}), std::invalid_argument);
  EXPECT_EQ(make_lattice(QMatrix{{Rational(2)}}).rank(), 1u);
}

TEST(Lattice, RescaleTensorDual) {
  Lattice n = rescale(root_lattice('A', 4), 2);
  EXPECT_EQ(min_norm(n), 4);
  EXPECT_EQ(rescale(root_lattice('A', 4), 1).gram, root_lattice('A', 4).gram);
  EXPECT_EQ(det(rescale(root_lattice('E', 8), 2)), 256);
  EXPECT_EQ(tensor(root_lattice('A', 1), root_lattice('A', 1)).gram, (QMatrix{{Rational(4)}}));
  EXPECT_EQ(min_norm(tensor(root_lattice('A', 4), root_lattice('A', 2))), 4);
  QMatrix e8dual = *dual(root_lattice('E', 8)).parent_basis;
  EXPECT_TRUE(rational_span_contains(e8dual, QMatrix::identity(8)) && rational_span_contains(QMatrix::identity(8), e8dual));
  Lattice nd = dual(n);
  EXPECT_EQ(index_invariants(*nd.parent_basis, QMatrix::identity(4)), (std::vector<Integer>{2, 2, 2, 10}));
  EXPECT_EQ(product(index_invariants(*nd.parent_basis, QMatrix::identity(4))), 80);
  EXPECT_EQ(dual(nd).gram, n.gram);
  EXPECT_EQ(det(nd), Rational(1) / det(n));
}

TEST(Lattice, Discriminant) {
  EXPECT_TRUE(discriminant_group(root_lattice('E', 8)).invariant_factors.empty());
  auto a4 = discriminant_group(root_lattice('A', 4));
  EXPECT_EQ(a4.invariant_factors, (std::vector<Integer>{5}));
  ASSERT_TRUE(a4.exponent.has_value());
  // Generator of A4*/A4 is a fundamental weight class; q = (5/2)<w,w> mod 5.
  Rational nm = root_lattice('A', 4).norm(a4.generators[0]);
  EXPECT_EQ(*a4.q_values[0], mod_z(num(Rational(5) * nm) * 3, 5));
  auto d4 = discriminant_group(root_lattice('D', 4));
  EXPECT_EQ(d4.invariant_factors, (std::vector<Integer>{2, 2}));
  EXPECT_FALSE(d4.exponent.has_value());
  EXPECT_THROW(discriminant_group(dual(root_lattice('A', 2))), std::invalid_argument);
}

TEST(Lattice, Annihilator) {
  Lattice l = orthogonal_sum({root_lattice('A', 1), root_lattice('A', 1)});
  EXPECT_EQ(annihilator(l, QMatrix{{Rational(1), Rational(0)}}), (QMatrix{{Rational(0), Rational(1)}}));
  Lattice n4 = orthogonal_sum({sqrt2_a(5), sqrt2_a(5), sqrt2_a(5), sqrt2_a(5)});
  QMatrix first(4, 16);
  for (int i = 0; i < 4; ++i) first(i, i) = 1;
  QMatrix ann = annihilator(n4, first);
  EXPECT_EQ(ann.rows(), 12u);
  QMatrix rest(12, 16);
  for (int i = 0; i < 12; ++i) rest(i, 4 + i) = 1;
  EXPECT_TRUE(rational_span_contains(ann, rest) && rational_span_contains(rest, ann));
  EXPECT_THROW(annihilator(l, QMatrix{{Rational(1, 2), Rational(0)}}), std::invalid_argument);
}

TEST(Lattice, AnnihilatorOfDecomposableRoot) {
  // A_beta = A_{p-1} ⊗ beta inside A_{p-1} ⊗ R; its annihilator has rank
  // (p-1)(n-1) and contains A_{p-1} ⊗ (beta + 2 beta_j) when <beta,beta_j> = -1.
  const int p = 3;
  Lattice a = root_lattice('A', p - 1), r = root_lattice('A', 2);
  Lattice ar = tensor(a, r);
  QVector beta{Rational(1), Rational(0)}, other{Rational(1), Rational(2)};
  ASSERT_EQ(r.inner(beta, QVector{Rational(0), Rational(1)}), -1);
  QMatrix abeta(p - 1, ar.rank()), aother(p - 1, ar.rank());
  for (int i = 0; i < p - 1; ++i) {
    abeta.set_row(i, kronecker(row_matrix(unit(p - 1, i)), row_matrix(beta)).row(0));
    aother.set_row(i, kronecker(row_matrix(unit(p - 1, i)), row_matrix(other)).row(0));
  }
  QMatrix ann = annihilator(ar, abeta);
  EXPECT_EQ(ann.rows(), static_cast<std::size_t>((p - 1) * (2 - 1)));
  EXPECT_TRUE(rational_span_contains(ann, aother));
}

TEST(Lattice, RssdAndInvolutions) {
  Lattice e8 = root_lattice('E', 8);
  EXPECT_TRUE(is_rssd(e8, QMatrix::identity(8)));
  EXPECT_EQ(rssd_involution(e8, QMatrix::identity(8)).matrix, -QMatrix::identity(8));
  // A root of A2 is RSSD and its involution is the reflection.
  Lattice a2 = root_lattice('A', 2);
  EXPECT_TRUE(is_rssd(a2, QMatrix{{Rational(1), Rational(0)}}));
  EXPECT_EQ(rssd_involution(a2, QMatrix{{Rational(1), Rational(0)}}).matrix, reflection(a2, {Rational(1), Rational(0)}).matrix);
  // Z(1,2) in Z^2: A + Ann has index 5, which does not contain 2L.
  Lattice z2 = make_lattice(QMatrix::identity(2));
  EXPECT_FALSE(is_rssd(z2, QMatrix{{Rational(1), Rational(2)}}));
  EXPECT_THROW(rssd_involution(z2, QMatrix{{Rational(1), Rational(2)}}), std::invalid_argument);
  // A root of D4 is RSSD since <x, beta> beta is in 2L + ... ; check via reflection agreement.
  Lattice d4 = root_lattice('D', 4);
  QMatrix root{{Rational(1), Rational(0), Rational(0), Rational(0)}};
  ASSERT_TRUE(is_rssd(d4, root));
  EXPECT_EQ(rssd_involution(d4, root).matrix, reflection(d4, root.row(0)).matrix);
}

TEST(Lattice, TensorRootInvolutionIsReflection) {
  for (auto [p, fam, n] : {std::tuple{3, 'A', 2}, std::tuple{3, 'A', 3}, std::tuple{5, 'A', 2}, std::tuple{3, 'E', 6}}) {
    Lattice a = root_lattice('A', p - 1), r = root_lattice(fam, n);
    Lattice ar = tensor(a, r);
    for (std::size_t b = 0; b < r.rank(); ++b) {
      QVector beta = unit(r.rank(), b);
      QMatrix abeta(p - 1, ar.rank());
      for (int i = 0; i < p - 1; ++i) abeta.set_row(i, kronecker(row_matrix(unit(p - 1, i)), row_matrix(beta)).row(0));
      ASSERT_TRUE(is_rssd(ar, abeta));
      QMatrix expected = kronecker(QMatrix::identity(p - 1), reflection(r, beta).matrix);
      EXPECT_EQ(rssd_involution(ar, abeta).matrix, expected);
    }
  }
}

TEST(Lattice, ShellsAgainstOracles) {
  Lattice e8 = root_lattice('E', 8);
  EXPECT_EQ(shell(e8, 2).size(), static_cast<std::size_t>(e8_roots_in_coordinates()));
  EXPECT_EQ(shell(e8, 2).size(), 240u);
  EXPECT_TRUE(shell(sqrt2_a(5), 2).empty());
  Lattice a2a2 = tensor(root_lattice('A', 2), root_lattice('A', 2));
  EXPECT_EQ(as_set(shell(a2a2, 4)), as_set(box_vectors(a2a2, 4, QVector(4, Rational(0)), true)));
  EXPECT_EQ(shell(a2a2, 4).size(), 18u);
  Lattice d4 = root_lattice('D', 4);
  for (int nrm : {2, 4, 6})
    EXPECT_EQ(as_set(shell(d4, nrm)), as_set(box_vectors(d4, nrm, QVector(4, Rational(0)), true)));
}

TEST(Lattice, TensorShellIsDecomposable) {
  for (auto [p, fam, n] : {std::tuple{3, 'A', 2}, std::tuple{3, 'A', 3}, std::tuple{5, 'A', 2}}) {
    Lattice a = root_lattice('A', p - 1), r = root_lattice(fam, n);
    Lattice ar = tensor(a, r);
    EXPECT_EQ(min_norm(ar), 4);
    auto ra = shell(a, 2), rr = shell(r, 2);
    std::set<ZVector> decomposable;
    for (const auto& x : ra)
      for (const auto& y : rr) {
        QMatrix v = kronecker(row_matrix(to_q(x)), row_matrix(to_q(y)));
        decomposable.insert(to_z(v).row(0));
      }
    auto s4 = shell(ar, 4);
    EXPECT_EQ(as_set(s4), decomposable);
    EXPECT_EQ(s4.size(), ra.size() * rr.size() / 2);
  }
}

TEST(Lattice, CosetMinimum) {
  Lattice n = sqrt2_a(5);
  EXPECT_EQ(coset_min_norm(n, QVector(4, Rational(0))), 0);
  QVector b1{Rational(1, 2), 0, 0, 0};
  EXPECT_EQ(coset_min_norm(n, b1), 1);
  EXPECT_EQ(box_coset_min(n, b1), 1);
  QVector b134{Rational(1, 2), 0, Rational(1, 2), Rational(1, 2)};
  EXPECT_EQ(coset_min_norm(n, b134), 2);
  EXPECT_EQ(box_coset_min(n, b134), 2);
  // All 16 half-vectors: CVP equals brute force and matches norm mod 2.
  for (int m = 0; m < 16; ++m) {
    QVector s(4);
    for (int t = 0; t < 4; ++t) s[t] = Rational((m >> t) & 1, 2);
    Rational w = coset_min_norm(n, s);
    EXPECT_EQ(w, box_coset_min(n, s));
    EXPECT_TRUE(is_integer((w - n.norm(s)) / 2));
  }
}

TEST(Lattice, CoxeterNu) {
  for (int k = 2; k <= 12; ++k) {
    Lattice n = sqrt2_a(k);
    QMatrix nu = coxeter_nu(k).matrix;
    EXPECT_TRUE(is_isometry(n, nu));
    EXPECT_EQ(matrix_order(nu, 100), std::optional<int>(k));
    EXPECT_TRUE(is_fixed_point_free(nu));
    QMatrix sum(k - 1, k - 1);
    for (int i = 0; i < k; ++i) sum = sum + power(nu, i);
    EXPECT_TRUE(sum.is_zero());
    EXPECT_EQ(shell(n, 4).size(), static_cast<std::size_t>(k * (k - 1)));
  }
  // Minimal polynomial at k = 5 is 1+x+x^2+x^3+x^4: no lower-degree relation.
  QMatrix nu = coxeter_nu(5).matrix;
  QMatrix stacked(4, 16);
  for (int i = 0; i < 4; ++i) {
    QMatrix pw = power(nu, i);
    for (int t = 0; t < 16; ++t) stacked(i, t) = pw.data()[t];
  }
  EXPECT_EQ(rank(stacked), 4u);
  // Diagonal extension to N^4.
  QMatrix nu4 = block_diagonal({nu, nu, nu, nu});
  EXPECT_EQ(matrix_order(nu4, 100), std::optional<int>(5));
  EXPECT_TRUE(is_fixed_point_free(nu4));
}

TEST(Lattice, IsometriesPreserveShells) {
  Lattice n = sqrt2_a(5);
  auto s = as_set(shell(n, 8));
  for (const QMatrix& m : {coxeter_nu(5).matrix, tau(5, 2).matrix, tau(5, 3).matrix}) {
    ASSERT_TRUE(is_isometry(n, m));
    std::set<ZVector> image;
    for (const auto& v : s) image.insert(mul(v, to_z(m)));
    EXPECT_EQ(image, s);
  }
}

TEST(Lattice, Quotients) {
  for (int k = 3; k <= 12; ++k) {
    Lattice n = sqrt2_a(k);
    QMatrix s = QMatrix::identity(k - 1) - coxeter_nu(k).matrix;
    EXPECT_EQ(product(quotient_invariants(n, s)), k);
  }
  Lattice n5 = sqrt2_a(5);
  EXPECT_EQ(quotient_invariants(n5, QMatrix::identity(4) - coxeter_nu(5).matrix), (std::vector<Integer>{1, 1, 1, 5}));
  EXPECT_THROW(quotient_invariants(n5, Rational(1, 2) * QMatrix::identity(4)), std::invalid_argument);
  for (auto [p, fam, n, expected] : {std::tuple{3, 'A', 2, 9}, std::tuple{3, 'E', 6, 729}, std::tuple{5, 'A', 2, 25}}) {
    Lattice ar = tensor(root_lattice('A', p - 1), root_lattice(fam, n));
    QMatrix nu = kronecker(coxeter_nu(p).matrix, QMatrix::identity(n));
    ASSERT_TRUE(is_isometry(ar, nu));
    EXPECT_EQ(product(quotient_invariants(ar, QMatrix::identity(ar.rank()) - nu)), expected);
  }
}

TEST(Lattice, WeylVector) {
  EXPECT_EQ(weyl_pairing_row(5), (std::vector<Rational>{0, 0, 0, 5}));
  for (int k = 3; k <= 10; ++k) {
    Lattice n = sqrt2_a(k);
    GlueVector rho = weyl_vector(k);
    for (int i = 0; i + 1 < k; ++i) EXPECT_EQ(n.inner(rho, unit(k - 1, i)), 1);
    QMatrix x = QMatrix::identity(k - 1) - coxeter_nu(k).matrix;  // (1-nu)N
    QMatrix xdual = inverse(x * n.gram * x.transpose()) * x;     // its dual, N-coordinates
    // rho/k pairs integrally with (1-nu)N.
    for (int i = 0; i + 1 < k; ++i) EXPECT_TRUE(is_integer(n.inner(rho, x.row(i)) / k));
    EXPECT_TRUE(rational_span_contains(xdual, Rational(1, k) * row_matrix(rho)));
    EXPECT_EQ(product(index_invariants(xdual, inverse(n.gram))), k);
  }
}

TEST(Lattice, CNuRadical) {
  for (int p : {3, 5, 7}) {
    Lattice n = sqrt2_a(p);
    Isometry nu = coxeter_nu(p);
    QMatrix rad = c_nu_radical(n, nu, p);
    QMatrix id = QMatrix::identity(p - 1);
    EXPECT_TRUE(rational_span_contains(rad, id) && rational_span_contains(id, rad)) << p;
    QMatrix cross = n_cap_one_minus_nu_dual(n, nu);
    EXPECT_TRUE(rational_span_contains(cross, rad) && rational_span_contains(rad, cross)) << p;
  }
  EXPECT_THROW(c_nu_radical(sqrt2_a(5), coxeter_nu(5), 3), std::invalid_argument);
}

TEST(Lattice, RootCapPDual) {
  EXPECT_EQ(r_cap_p_dual_index(root_lattice('A', 4), 5), 5);
  EXPECT_EQ(r_cap_p_dual_index(root_lattice('E', 6), 3), 3);
  EXPECT_EQ(r_cap_p_dual_index(root_lattice('E', 8), 5), 1);
  EXPECT_EQ(r_cap_p_dual_index(root_lattice('A', 2), 5), 1);
  EXPECT_EQ(r_cap_p_dual_index(root_lattice('A', 6), 7), 7);
}

TEST(Lattice, SigmaTypeCriterionMatchesTildeCondition) {
  // N(j,a) = N - sum a_i lambda_i + 2j lambda_k sits in N/2 exactly when 2j = wt(a) mod k.
  for (int k = 3; k <= 7; ++k) {
    Lattice n = sqrt2_a(k);
    for (int j = 0; j < k; ++j)
      for (int a = 0; a < (1 << k); ++a) {
        QVector v = glue_lambda(k, k);
        for (auto& x : v) x *= 2 * j;
        int wt = 0;
        for (int i = 1; i <= k; ++i)
          if ((a >> (i - 1)) & 1) {
            ++wt;
            QVector li = glue_lambda(k, i);
            for (int t = 0; t < k - 1; ++t) v[t] -= li[t];
          }
        EXPECT_EQ(sigma_type_criterion(n, {v}), mod_ll(2 * j - wt, k) == 0) << k << " " << j << " " << a;
      }
  }
  EXPECT_THROW(sigma_type_criterion(sqrt2_a(5), {QVector{Rational(1, 3), 0, 0, 0}}), std::invalid_argument);
}

TEST(Lattice, GlueVectors) {
  for (int k = 3; k <= 8; ++k) {
    Lattice n = sqrt2_a(k);
    QVector sum(k - 1, Rational(0));
    for (int i = 1; i <= k; ++i) {
      QVector li = glue_lambda(k, i);
      for (int t = 0; t < k - 1; ++t) sum[t] += li[t];
      // 2 lambda_i = 2 lambda_k mod N
      QVector diff(k - 1);
      QVector lk = glue_lambda(k, k);
      for (int t = 0; t < k - 1; ++t) diff[t] = 2 * (li[t] - lk[t]);
      for (const auto& x : diff) EXPECT_TRUE(is_integer(x));
    }
    EXPECT_EQ(sum, QVector(k - 1, Rational(0)));
  }
}

TEST(Lattice, GroupOrderByClosure) {
  // x -> sx + t on Z_5: cyclic of order 5, extended by the units to order 20.
  EXPECT_EQ(group_order({coxeter_nu(5).matrix}, 100), std::optional<std::size_t>(5));
  EXPECT_EQ(group_order({coxeter_nu(5).matrix, tau(5, 2).matrix}, 100), std::optional<std::size_t>(20));
  EXPECT_EQ(group_order({coxeter_nu(7).matrix, tau(7, 3).matrix}, 100), std::optional<std::size_t>(42));
  Lattice a2 = root_lattice('A', 2);
  auto r1 = reflection(a2, {Rational(1), Rational(0)}).matrix, r2 = reflection(a2, {Rational(0), Rational(1)}).matrix;
  EXPECT_EQ(group_order({r1, r2}, 100), std::optional<std::size_t>(6));
  EXPECT_EQ(group_order({r1, r2}, 5), std::nullopt);
}
