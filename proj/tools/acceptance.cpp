// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is 0 only when all criteria pass.

#include "paraf/central_ext.hpp"
#include "paraf/code_lattice.hpp"
#include "paraf/fusion_ring.hpp"
#include "paraf/lattice.hpp"
#include "paraf/orbifold_ring.hpp"
#include "paraf/u5a.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace paraf;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

FusionVector fuse_rule(const IrrLabel& a, const IrrLabel& b) { return fuse(a, b); }

FusionVector unit_vector(const IrrLabel& x) { return {{x, 1}}; }

Outcome fusion_axioms() {
  Outcome o;
  std::mt19937 rng(20261018);
  for (int k = 2; k <= 8; ++k) {
    auto labels = all_labels(k);
    for (const auto& x : labels)
      o.check(fuse(vacuum(k), x) == unit_vector(x), "identity law fails at k=" + std::to_string(k));
    for (const auto& a : labels)
      for (const auto& b : labels)
        if (fuse(a, b) != fuse(b, a)) o.check(false, "not commutative at k=" + std::to_string(k));
    auto assoc = [&](const IrrLabel& a, const IrrLabel& b, const IrrLabel& c) {
      FusionVector left = fuse(fuse(a, b), unit_vector(c), fuse_rule);
      FusionVector right = fuse(unit_vector(a), fuse(b, c), fuse_rule);
      if (left != right) o.check(false, "not associative at k=" + std::to_string(k));
    };
    if (k <= 6) {
      for (const auto& a : labels)
        for (const auto& b : labels)
          for (const auto& c : labels) assoc(a, b, c);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
      for (int t = 0; t < 10000; ++t) assoc(labels[pick(rng)], labels[pick(rng)], labels[pick(rng)]);
    }
  }
  return o;
}

Outcome zk_grading() {
  Outcome o;
  for (int k = 2; k <= 12; ++k) o.check(verify_zk_grading(k).pass, "grading fails at k=" + std::to_string(k));
  // Shift one product by a simple current; the grading check must notice.
  FuseFn mutated = [](const IrrLabel& a, const IrrLabel& b) {
    FusionVector v = fuse(a, b);
    if (a == canonical_label(1, 0, 5) && b == canonical_label(1, 0, 5)) {
      FusionVector w;
      for (const auto& [c, m] : v) w[canonical_label(c.i, c.j + 1, 5)] += m;
      return w;
    }
    return v;
  };
  o.check(!verify_zk_grading(5, mutated).pass, "mutated rule was accepted");
  return o;
}

Outcome orbifold_table() {
  Outcome o;
  for (int k = 3; k <= 12; ++k) {
    const std::string at = " at k=" + std::to_string(k);
    OrbTable t = derive_full_table(k);
    o.check(check_table(t).pass, "table self-check fails" + at);
    o.check(verify_generator_rows(t).pass, "generator rows differ" + at);
    o.check(verify_sigma_grading(t).pass, "sigma grading fails" + at);
    o.check(verify_collapse(t).pass, "collapse inconsistent" + at);
  }
  return o;
}

Outcome weight_one_tops() {
  Outcome o;
  for (int k = 3; k <= 30; ++k)
    o.check(verify_weight_one_tops(k).pass, "branching sum != 1 at k=" + std::to_string(k));
  return o;
}

Outcome lattice_quotients() {
  Outcome o;
  for (int k = 3; k <= 12; ++k) {
    Lattice n = sqrt2_a(k);
    QMatrix x = QMatrix::identity(k - 1) - coxeter_nu(k).matrix;
    o.check(product(quotient_invariants(n, x)) == k, "|N/(1-nu)N| != k at k=" + std::to_string(k));
    // ((1-nu)N)* has basis (X G X^T)^{-1} X; N* has basis G^{-1}.
    QMatrix xdual = inverse(x * n.gram * x.transpose()) * x;
    o.check(product(index_invariants(xdual, inverse(n.gram))) == k,
            "|((1-nu)N)*/N*| != k at k=" + std::to_string(k));
  }
  for (auto [p, fam, rk, expected] : {std::tuple{3, 'A', 2, 9}, std::tuple{3, 'E', 6, 729}, std::tuple{5, 'A', 2, 25}}) {
    Lattice ar = tensor(root_lattice('A', p - 1), root_lattice(fam, rk));
    QMatrix nu = kronecker(coxeter_nu(p).matrix, QMatrix::identity(rk));
    bool iso = is_isometry(ar, nu);
    o.check(iso, "nu (x) 1 is not an isometry");
    if (iso)
      o.check(product(quotient_invariants(ar, QMatrix::identity(ar.rank()) - nu)) == expected,
              std::string("tensor quotient wrong for ") + fam + std::to_string(rk));
  }
  o.check(r_cap_p_dual_index(root_lattice('A', 4), 5) == 5, "(A4,5) index != 5");
  o.check(r_cap_p_dual_index(root_lattice('E', 6), 3) == 3, "(E6,3) index != 3");
  o.check(r_cap_p_dual_index(root_lattice('E', 8), 5) == 1, "(E8,5) index != 1");
  return o;
}

Outcome lift_calculus() {
  Outcome o;
  for (int k = 3; k <= 9; ++k) {
    Lattice n = sqrt2_a(k);
    ZMatrix nu = to_z(coxeter_nu(k).matrix);
    Lift lf = lift(n, nu, standard_epsilon(n));
    o.check(lift_order(lf) == k, "lift order of nu != k at k=" + std::to_string(k));
    for (std::size_t i = 0; i < n.rank(); ++i) {
      ZVector e(n.rank(), Integer(0));
      e[i] = 1;
      if (k % 2 == 0) o.check(!even_order_term(lf, e, k), "even-order term nonzero at k=" + std::to_string(k));
    }
  }
  for (const Lattice& l : {root_lattice('E', 8), sqrt2_a(5)}) {
    ZMatrix minus = Integer(-1) * ZMatrix::identity(l.rank());
    o.check(lift_order(lift(l, minus, standard_epsilon(l))) == 2, "theta does not have order 2");
  }
  for (int k : {5, 7}) {
    ZMatrix nu = to_z(coxeter_nu(k).matrix);
    for (F2Vec lambda = 0; lambda < (F2Vec{1} << (k - 1)); ++lambda) {
      F2Vec mu = mu_plus_mu_g_solve(nu, lambda);
      if ((mu ^ twist_functional(mu, nu)) != lambda)
        o.check(false, "mu + mu^nu != lambda at k=" + std::to_string(k));
    }
  }
  return o;
}

QVector unit_q(std::size_t n, std::size_t i) {
  QVector e(n, Rational(0));
  e[i] = 1;
  return e;
}

Outcome tensor_lattices(std::string& counts) {
  Outcome o;
  for (auto [p, fam, rk] : {std::tuple{3, 'A', 2}, std::tuple{3, 'A', 3}, std::tuple{5, 'A', 2}}) {
    const std::string name = "A" + std::to_string(p - 1) + "(x)" + fam + std::to_string(rk);
    Lattice a = root_lattice('A', p - 1), r = root_lattice(fam, rk);
    Lattice ar = tensor(a, r);
    o.check(min_norm(ar) == 4, name + " min norm != 4");
    auto ra = shell(a, 2), rr = shell(r, 2);
    std::set<ZVector> decomposable;
    for (const auto& x : ra)
      for (const auto& y : rr)
        decomposable.insert(to_z(kronecker(QMatrix::from_rows({to_q(x)}), QMatrix::from_rows({to_q(y)}))).row(0));
    auto s4 = shell(ar, 4);
    o.check(std::set<ZVector>(s4.begin(), s4.end()) == decomposable, name + " shell(4) != decomposables");
    o.check(s4.size() == ra.size() * rr.size() / 2, name + " |shell(4)| != |A(2)||R(2)|/2");
    counts += (counts.empty() ? "" : " ") + name + "=" + std::to_string(s4.size());
    for (std::size_t b = 0; b < r.rank(); ++b) {
      QVector beta = unit_q(r.rank(), b);
      QMatrix abeta(p - 1, ar.rank());
      for (int i = 0; i < p - 1; ++i)
        abeta.set_row(i, kronecker(QMatrix::from_rows({unit_q(p - 1, i)}), QMatrix::from_rows({beta})).row(0));
      bool rssd = is_rssd(ar, abeta);
      o.check(rssd, name + " A(x)beta is not RSSD");
      if (rssd)
        o.check(rssd_involution(ar, abeta).matrix == kronecker(QMatrix::identity(p - 1), reflection(r, beta).matrix),
                name + " t_{A beta} != 1 (x) r_beta");
    }
  }
  return o;
}

Outcome case_study(std::string& extra) {
  Outcome o;
  Report r = verify_5b(true);
  for (const auto& f : r.findings) o.check(r.pass, f);
  o.check(r.pass, "5B verification failed");
  if (r.payload.contains("shell4")) extra = "|L_C(4)|=" + r.payload["shell4"].dump();
  return o;
}

Outcome appendix() {
  Outcome o;
  Report r = verify_appendix(load_u5a_golden(PARAF_GOLDEN_DIR));
  for (const auto& f : r.findings) o.check(r.pass, f);
  o.check(r.pass, "U5A verification failed");
  return o;
}

// Group identifications are replaced by what is concretely checkable:
// closure orders of explicit generators and integer order arithmetic.
Outcome substitution(std::string& extra) {
  Outcome o;
  // <t_M, t_M'> on L_C: dihedral of order 10 containing nu, acting trivially on L_C*/L_C.
  EE8Pair pair = build_ee8_pair();
  CodeLattice lc = build_lattice(builtin_code("5B"));
  const QMatrix binv = inverse(*lc.lattice.parent_basis);
  QMatrix tm = rssd_involution(lc.lattice, pair.m * binv).matrix;
  QMatrix tmp = rssd_involution(lc.lattice, pair.m_prime * binv).matrix;
  auto d = group_order({tm, tmp}, 1000);
  o.check(d == std::optional<std::size_t>(10), "|<t_M, t_M'>| != 10");
  o.check(matrix_order(tm, 10) == 2 && matrix_order(tmp, 10) == 2, "t_M or t_M' is not an involution");
  o.check(matrix_order(tmp * tm, 10) == 5, "t_M t_M' does not have order 5");
  const QMatrix dual_basis = inverse(lc.lattice.gram);
  const QMatrix id = QMatrix::identity(lc.lattice.rank());
  for (const QMatrix& t : {tm, tmp}) {
    QMatrix moved = dual_basis * (t - id);
    for (std::size_t i = 0; i < moved.rows(); ++i)
      for (std::size_t j = 0; j < moved.cols(); ++j)
        if (!is_integer(moved(i, j))) o.check(false, "involution moves L_C*/L_C");
  }
  // <nu, tau_2> on sqrt(2)A_4: the affine group of Z_5, of order p(p-1) = 20.
  auto frob = group_order({coxeter_nu(5).matrix, tau(5, 2).matrix}, 1000);
  o.check(frob == std::optional<std::size_t>(20), "|<nu, tau_2>| != 20");
  // |SL_2(5)| by enumeration, its centre {+-1}, then 5^4 . (|SL_2(5)|^2 / 2) . 2.
  long long sl2 = 0, centre = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int e = 0; e < 5; ++e) {
          if ((a * e - b * c - 1) % 5 != 0) continue;
          ++sl2;
          if (b == 0 && c == 0 && a == e) ++centre;
        }
  o.check(sl2 == 120 && centre == 2, "|SL_2(5)| != 120 or |Z(SL_2(5))| != 2");
  const long long central_product = sl2 * sl2 / centre;
  const long long order = 625 * central_product * 2;
  o.check(central_product == 7200 && order == 9000000, "order arithmetic mismatch");
  std::ostringstream s;
  s << "|<t_M,t_M'>|=" << (d ? *d : 0) << " |<nu,tau_2>|=" << (frob ? *frob : 0) << " |SL2(5)|=" << sl2
    << " 5^4*(120^2/2)*2=" << order << "; isomorphism types and VOA-internal statements not machine-checked";
  extra = s.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<Outcome(std::string&)> run;
  };
  auto plain = [](Outcome (*f)()) { return [f](std::string&) { return f(); }; };
  const std::vector<Criterion> criteria{
      {1, "fusion ring axioms, 2<=k<=8", plain(fusion_axioms)},
      {2, "Z_k grading, 2<=k<=12, mutation rejected", plain(zk_grading)},
      {3, "orbifold table, 3<=k<=12", plain(orbifold_table)},
      {4, "weight-one tops, 3<=k<=30", plain(weight_one_tops)},
      {5, "lattice quotients and R cap pR* indices", plain(lattice_quotients)},
      {6, "lift orders, theta, mu + mu^nu solve", plain(lift_calculus)},
      {7, "tensor lattices: shells and RSSD reflections", tensor_lattices},
      {8, "p=5 code lattice case study", case_study},
      {9, "U5A induced fusion table", plain(appendix)},
      {10, "group identifications via closure orders and order arithmetic", substitution},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string extra;
    Outcome o;
    try {
      o = c.run(extra);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << " [" << t.str() << "s]";
    if (!extra.empty()) std::cout << "  (" << extra << ")";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << "\n" << std::flush;
  }
  return all ? 0 : 1;
}
