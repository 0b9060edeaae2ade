#include "paraf/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace paraf {

namespace {

QMatrix diag_matrix(const std::vector<Rational>& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool is_odd_prime(const Integer& m) {
  if (m < 3 || m % 2 == 0) return false;
  for (Integer d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

// Modular inverse of 2 modulo an odd m.
Integer half_mod(const Integer& m) { return (m + 1) / 2; }

}  // namespace

Lattice make_lattice(const QMatrix& gram) {
  if (!gram.is_square()) throw std::invalid_argument("Gram matrix is not square");
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram(i, j) != gram(j, i))
        throw std::invalid_argument("Gram matrix not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (!is_positive_definite(gram)) throw std::invalid_argument("Gram matrix is not positive definite");
  return Lattice{gram, std::nullopt};
}

ZMatrix cartan_matrix(char family, int n) {
  auto bad = [&] { return std::invalid_argument(std::string("no root lattice ") + family + std::to_string(n)); };
  ZMatrix c(n > 0 ? n : 0, n > 0 ? n : 0);
  auto link = [&](int a, int b) {
    c(a, b) = -1;
    c(b, a) = -1;
  };
  switch (family) {
    case 'A':
      if (n < 1) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'D':
      if (n < 4) throw bad();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad();
      // Nodes 1,3,4,...,n in a chain, node 2 attached to node 4.
      link(0, 2);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      link(1, 3);
      break;
    default:
      throw bad();
  }
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  return c;
}

Lattice root_lattice(char family, int n) { return Lattice{to_q(cartan_matrix(family, n)), std::nullopt}; }

Lattice rescale(const Lattice& l, const Rational& c) {
  if (c <= 0) throw std::invalid_argument("rescale factor must be positive");
  return Lattice{c * l.gram, std::nullopt};
}

Lattice tensor(const Lattice& a, const Lattice& b) { return Lattice{kronecker(a.gram, b.gram), std::nullopt}; }

Lattice orthogonal_sum(const std::vector<Lattice>& parts) {
  std::vector<QMatrix> grams;
  for (const auto& p : parts) grams.push_back(p.gram);
  return Lattice{block_diagonal(grams), std::nullopt};
}

Lattice sublattice(const Lattice& l, const QMatrix& basis) {
  if (basis.cols() != l.rank()) throw std::invalid_argument("sublattice basis has wrong length");
  return Lattice{basis * l.gram * basis.transpose(), basis};
}

Lattice dual(const Lattice& l) {
  QMatrix inv = inverse(l.gram);
  return Lattice{inv, inv};
}

bool is_integral(const Lattice& l) { return paraf::is_integral(l.gram); }

bool is_even(const Lattice& l) {
  if (!is_integral(l)) return false;
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (num(l.gram(i, i)) % 2 != 0) return false;
  return true;
}

Rational det(const Lattice& l) { return determinant(l.gram); }

bool is_isometry(const Lattice& l, const QMatrix& m) {
  return m.rows() == l.rank() && m.cols() == l.rank() && m * l.gram * m.transpose() == l.gram;
}

std::optional<int> matrix_order(const QMatrix& m, int cap) {
  const QMatrix id = QMatrix::identity(m.rows());
  QMatrix p = m;
  for (int n = 1; n <= cap; ++n) {
    if (p == id) return n;
    p = p * m;
  }
  return std::nullopt;
}

bool is_fixed_point_free(const QMatrix& m) { return determinant(QMatrix::identity(m.rows()) - m) != 0; }

std::optional<std::size_t> group_order(const std::vector<QMatrix>& gens, std::size_t cap) {
  if (gens.empty()) return 1;
  std::vector<QMatrix> elems{QMatrix::identity(gens.front().rows())};
  for (std::size_t next = 0; next < elems.size(); ++next) {
    for (const auto& g : gens) {
      QMatrix h = elems[next] * g;
      if (std::find(elems.begin(), elems.end(), h) != elems.end()) continue;
      if (elems.size() == cap) return std::nullopt;
      elems.push_back(std::move(h));
    }
  }
  return elems.size();
}

DiscriminantGroup discriminant_group(const Lattice& l) {
  if (!is_integral(l)) throw std::invalid_argument("discriminant group needs an integral lattice");
  SmithResult s = smith(to_z(l.gram));
  const QMatrix vinv = inverse(to_q(s.v));
  const QMatrix ginv = inverse(l.gram);
  DiscriminantGroup d;
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
    if (s.diagonal[i] == 1) continue;
    d.invariant_factors.push_back(s.diagonal[i]);
    QVector e(l.rank(), Rational(0));
    e[i] = 1;
    d.generators.push_back(mul(mul(e, vinv), ginv));
  }
  if (!d.invariant_factors.empty() && is_odd_prime(d.invariant_factors.back())) d.exponent = d.invariant_factors.back();
  for (const auto& g : d.generators)
    d.q_values.push_back(d.exponent ? std::optional<Integer>(discriminant_q(l, g, *d.exponent)) : std::nullopt);
  if (Rational(product(d.invariant_factors)) != abs(det(l)))
    throw std::logic_error("invariant factors do not multiply to the determinant");
  return d;
}

Integer discriminant_q(const Lattice& l, const GlueVector& a, const Integer& m) {
  Rational t = Rational(m) * l.norm(a);
  if (!is_integer(t)) throw std::invalid_argument("glue vector norm is not in (1/m)Z");
  return mod_z(num(t) * half_mod(m), m);
}

Integer discriminant_f(const Lattice& l, const GlueVector& a, const GlueVector& b, const Integer& m) {
  Rational t = Rational(m) * l.inner(a, b);
  if (!is_integer(t)) throw std::invalid_argument("glue pairing is not in (1/m)Z");
  return mod_z(num(t), m);
}

QMatrix annihilator(const Lattice& l, const QMatrix& a) {
  if (a.cols() != l.rank()) throw std::invalid_argument("sublattice basis has wrong length");
  if (!paraf::is_integral(a)) throw std::invalid_argument("sublattice is not inside the lattice");
  QMatrix pairing = l.gram * a.transpose();
  Integer d = common_denominator(pairing);
  return to_q(left_kernel(to_z(Rational(d) * pairing)));
}

namespace {
QMatrix rssd_frame(const Lattice& l, const QMatrix& a, std::size_t& rank_a) {
  QMatrix basis = rational_row_basis(a);
  rank_a = basis.rows();
  return vstack(basis, annihilator(l, basis));
}
}  // namespace

bool is_rssd(const Lattice& l, const QMatrix& a) {
  std::size_t ra = 0;
  QMatrix frame = rssd_frame(l, a, ra);
  if (frame.rows() != l.rank()) return false;
  return rational_span_contains(frame, Rational(2) * QMatrix::identity(l.rank()));
}

Isometry rssd_involution(const Lattice& l, const QMatrix& a) {
  std::size_t ra = 0;
  QMatrix frame = rssd_frame(l, a, ra);
  if (frame.rows() != l.rank()) throw std::logic_error("sublattice and annihilator do not span");
  std::vector<Rational> signs(l.rank(), Rational(1));
  for (std::size_t i = 0; i < ra; ++i) signs[i] = -1;
  QMatrix t = inverse(frame) * diag_matrix(signs) * frame;
  if (!paraf::is_integral(t)) throw std::invalid_argument("sublattice is not RSSD: involution is not integral");
  if (t * t != QMatrix::identity(l.rank())) throw std::logic_error("involution does not square to 1");
  if (!is_isometry(l, t)) throw std::logic_error("involution does not preserve the Gram matrix");
  return Isometry{t};
}

void enumerate(const QMatrix& gram, const QVector& shift, Rational bound, const Visitor& visit) {
  const std::size_t n = gram.rows();
  if (shift.size() != n) throw std::invalid_argument("shift has wrong length");
  if (n == 0) {
    visit({}, Rational(0));
    return;
  }
  // q(i,i) = D_i, q(i,j) for j > i = mu; Q(y) = sum_i D_i (y_i + sum_{j>i} mu_ij y_j)^2.
  QMatrix q = gram;
  for (std::size_t i = 0; i < n; ++i) {
    if (q(i, i) <= 0) throw std::invalid_argument("Gram matrix is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t r = i + 1; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) q(r, c) -= q(r, i) * q(i, c);
  }

  ZVector x(n, Integer(0));
  std::vector<Rational> acc(n + 1, Rational(0));  // acc[i]: contribution of levels >= i
  std::function<void(std::size_t)> level = [&](std::size_t i) {
    Rational u = shift[i];
    for (std::size_t j = i + 1; j < n; ++j) u += q(i, j) * (Rational(x[j]) + shift[j]);
    const Rational center = -u;
    const Rational room = bound - acc[i + 1];
    if (room < 0) return;
    const Rational r = room / q(i, i);
    // Integers t with (t - center)^2 <= r, without floating point.
    const Integer cn = num(center), cd = den(center);
    const Integer s = isqrt(floor_q(r * Rational(cd * cd)));
    const Integer lo = ceil_q(Rational(cn - s, cd));
    const Integer hi = floor_q(Rational(cn + s, cd));
    for (Integer t = lo; t <= hi; ++t) {
      const Rational diff = Rational(t) - center;
      const Rational part = acc[i + 1] + q(i, i) * diff * diff;
      if (part > bound) continue;
      x[i] = t;
      acc[i] = part;
      if (i == 0)
        bound = visit(x, part);
      else
        level(i - 1);
    }
    x[i] = 0;
  };
  level(n - 1);
}

std::vector<ZVector> shell(const Lattice& l, const Rational& n) {
  std::vector<ZVector> out;
  if (n < 0) return out;
  enumerate(l.gram, QVector(l.rank(), Rational(0)), n, [&](const ZVector& x, const Rational& norm) {
    if (norm == n) out.push_back(x);
    return n;
  });
  return out;
}

std::vector<ZVector> short_vectors(const Lattice& l, const Rational& bound) {
  std::vector<ZVector> out;
  enumerate(l.gram, QVector(l.rank(), Rational(0)), bound, [&](const ZVector& x, const Rational& norm) {
    if (norm != 0) out.push_back(x);
    return bound;
  });
  return out;
}

Rational min_norm(const Lattice& l) {
  if (l.rank() == 0) throw std::invalid_argument("minimum of the zero lattice");
  Rational best = l.gram(0, 0);
  for (std::size_t i = 1; i < l.rank(); ++i) best = std::min(best, l.gram(i, i));
  enumerate(l.gram, QVector(l.rank(), Rational(0)), best, [&](const ZVector&, const Rational& norm) {
    if (norm != 0 && norm < best) best = norm;
    return best;
  });
  return best;
}

Rational coset_min_norm(const Lattice& l, const GlueVector& shift) {
  QVector start(l.rank());
  for (std::size_t i = 0; i < l.rank(); ++i) start[i] = shift[i] - Rational(floor_q(shift[i] + Rational(1, 2)));
  Rational best = l.norm(start);
  enumerate(l.gram, shift, best, [&](const ZVector&, const Rational& norm) {
    if (norm < best) best = norm;
    return best;
  });
  return best;
}

Integer product(const std::vector<Integer>& v) {
  Integer p = 1;
  for (const auto& x : v) p *= x;
  return p;
}

std::vector<Integer> quotient_invariants(const Lattice& l, const QMatrix& s) {
  if (s.cols() != l.rank()) throw std::invalid_argument("sublattice basis has wrong length");
  if (!paraf::is_integral(s)) throw std::invalid_argument("sublattice is not inside the lattice");
  if (rank(s) != l.rank()) throw std::invalid_argument("sublattice is not of full rank");
  return invariant_factors(to_z(rational_row_basis(s)));
}

std::vector<Integer> index_invariants(const QMatrix& outer, const QMatrix& inner) {
  QMatrix ob = rational_row_basis(outer);
  QMatrix ib = rational_row_basis(inner);
  if (ob.rows() != ob.cols() || ib.rows() != ob.rows()) throw std::invalid_argument("index needs full-rank lattices");
  QMatrix coords = ib * inverse(ob);
  if (!paraf::is_integral(coords)) throw std::invalid_argument("inner lattice is not contained in the outer one");
  return invariant_factors(to_z(coords));
}

Lattice sqrt2_a(int k) {
  if (k < 2) throw std::invalid_argument("sqrt2 A_{k-1} needs k >= 2");
  return rescale(root_lattice('A', k - 1), 2);
}

namespace {
// alpha-coordinate vector with zero sum, rewritten in the beta basis.
QVector alpha_to_beta(const QVector& v) {
  Rational sum = 0;
  for (const auto& x : v) sum += x;
  if (sum != 0) throw std::logic_error("vector is not orthogonal to gamma");
  QVector out(v.size() - 1);
  Rational partial = 0;
  for (std::size_t t = 0; t + 1 < v.size(); ++t) out[t] = partial += v[t];
  return out;
}
}  // namespace

Isometry permutation_isometry(int k, const std::vector<int>& pi) {
  if (static_cast<int>(pi.size()) != k) throw std::invalid_argument("permutation has wrong length");
  std::vector<bool> seen(k + 1, false);
  for (int p : pi) {
    if (p < 1 || p > k || seen[p]) throw std::invalid_argument("not a permutation of 1..k");
    seen[p] = true;
  }
  QMatrix m(k - 1, k - 1);
  for (int i = 0; i + 1 < k; ++i) {
    QVector a(k, Rational(0));
    a[pi[i] - 1] += 1;
    a[pi[i + 1] - 1] -= 1;
    m.set_row(i, alpha_to_beta(a));
  }
  return Isometry{m};
}

Isometry coxeter_nu(int k) {
  std::vector<int> pi(k);
  for (int i = 0; i < k; ++i) pi[i] = i + 2 > k ? 1 : i + 2;
  return permutation_isometry(k, pi);
}

Isometry tau(int k, int s) {
  if (std::gcd(s, k) != 1) throw std::invalid_argument("tau_s needs s prime to k");
  std::vector<int> pi(k);
  for (int i = 1; i <= k; ++i) {
    int img = static_cast<int>(mod_ll(static_cast<long long>(s) * i, k));
    pi[i - 1] = img == 0 ? k : img;
  }
  return permutation_isometry(k, pi);
}

GlueVector glue_lambda(int k, int i) {
  if (i < 1 || i > k) throw std::invalid_argument("glue index out of range");
  QVector a(k, Rational(1, 2 * k));
  a[i - 1] -= Rational(1, 2);
  return alpha_to_beta(a);
}

GlueVector weyl_vector(int k) {
  Lattice n = sqrt2_a(k);
  return mul(QVector(k - 1, Rational(1)), inverse(n.gram));
}

std::vector<Rational> weyl_pairing_row(int k) {
  Lattice n = sqrt2_a(k);
  const GlueVector rho = weyl_vector(k);
  const QMatrix one_minus_nu = QMatrix::identity(k - 1) - coxeter_nu(k).matrix;
  std::vector<Rational> row;
  for (int i = 0; i + 1 < k; ++i) row.push_back(n.inner(rho, one_minus_nu.row(i)));
  return row;
}

QMatrix c_nu_radical(const Lattice& n, const Isometry& nu, int p) {
  if (!is_integral(n)) throw std::invalid_argument("c^nu needs an integral lattice");
  if (matrix_order(nu.matrix, p) != std::optional<int>(p)) throw std::invalid_argument("nu does not have order p");
  if (!is_fixed_point_free(nu.matrix)) throw std::invalid_argument("nu has fixed points");
  QMatrix c(n.rank(), n.rank());
  QMatrix power_i = QMatrix::identity(n.rank());
  for (int i = 1; i < p; ++i) {
    power_i = power_i * nu.matrix;
    c = c + Rational(2 * i) * (power_i * n.gram);
  }
  return to_q(kernel_mod(to_z(c), Integer(2 * p)));
}

QMatrix n_cap_one_minus_nu_dual(const Lattice& n, const Isometry& nu) {
  QMatrix image = inverse(n.gram) * (QMatrix::identity(n.rank()) - nu.matrix);
  return intersect_spans(QMatrix::identity(n.rank()), image);
}

Integer r_cap_p_dual_index(const Lattice& r, int p) {
  QMatrix inter = intersect_spans(QMatrix::identity(r.rank()), Rational(p) * inverse(r.gram));
  Rational idx = Rational(boost::multiprecision::pow(Integer(p), static_cast<unsigned>(r.rank()))) / abs(determinant(inter));
  if (!is_integer(idx)) throw std::logic_error("index is not an integer");
  return num(idx);
}

Isometry reflection(const Lattice& l, const QVector& root) {
  if (l.norm(root) != 2) throw std::invalid_argument("reflection needs a vector of norm 2");
  const QVector gr = mul(root, l.gram);
  QMatrix m = QMatrix::identity(l.rank());
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j) m(i, j) -= gr[i] * root[j];
  return Isometry{m};
}

bool sigma_type_criterion(const Lattice& n, const std::vector<GlueVector>& glue) {
  bool inside = true;
  for (const auto& g : glue) {
    QVector pairing = mul(g, n.gram);
    for (const auto& x : pairing)
      if (!is_integer(x)) throw std::invalid_argument("glue vector is not in the dual lattice");
    for (const auto& x : g)
      if (!is_integer(Rational(2) * x)) inside = false;
  }
  return inside;
}

}  // namespace paraf
