#include "paraf/central_ext.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace paraf {

namespace {

constexpr std::size_t kMaxRank = 64;

F2Vec full_mask(std::size_t n) { return n >= 64 ? ~F2Vec(0) : ((F2Vec(1) << n) - 1); }

template <class F>
void for_pairs(std::size_t n, int samples, F&& f) {
  if (n <= 8) {
    for (F2Vec x = 0; x <= full_mask(n); ++x)
      for (F2Vec y = 0; y <= full_mask(n); ++y) f(x, y);
    return;
  }
  std::mt19937_64 rng(0x5eedULL + n);
  for (int s = 0; s < samples; ++s) f(rng() & full_mask(n), rng() & full_mask(n));
}

ZMatrix int_power(const ZMatrix& m, int e) {
  ZMatrix r = ZMatrix::identity(m.rows());
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

ZVector unit(std::size_t n, std::size_t i) {
  ZVector e(n, Integer(0));
  e[i] = 1;
  return e;
}

}  // namespace

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m = zero(n);
  for (std::size_t i = 0; i < n; ++i) m.rows[i] = F2Vec(1) << i;
  return m;
}

F2Matrix F2Matrix::reduce(const ZMatrix& z) {
  if (!z.is_square() || z.rows() > kMaxRank) throw std::invalid_argument("F2 matrices are square of rank <= 64");
  F2Matrix m = zero(z.rows());
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) m.set(i, j, mod_z(z(i, j), 2) == 1);
  return m;
}

void F2Matrix::set(std::size_t i, std::size_t j, bool v) {
  if (v)
    rows[i] |= F2Vec(1) << j;
  else
    rows[i] &= ~(F2Vec(1) << j);
}

F2Vec F2Matrix::apply(F2Vec x) const {
  F2Vec out = 0;
  for (std::size_t i = 0; i < n; ++i)
    if ((x >> i) & 1U) out ^= rows[i];
  return out;
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t = zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.set(j, i, get(i, j));
  return t;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
  F2Matrix c = F2Matrix::zero(a.n);
  for (std::size_t i = 0; i < a.n; ++i) c.rows[i] = b.apply(a.rows[i]);
  return c;
}

F2Matrix operator+(const F2Matrix& a, const F2Matrix& b) {
  F2Matrix c = a;
  for (std::size_t i = 0; i < a.n; ++i) c.rows[i] ^= b.rows[i];
  return c;
}

bool parity(F2Vec x) { return std::popcount(x) & 1; }

F2Vec reduce_mod2(const ZVector& v) {
  if (v.size() > kMaxRank) throw std::invalid_argument("vector too long for F2Vec");
  F2Vec out = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (mod_z(v[i], 2) == 1) out |= F2Vec(1) << i;
  return out;
}

bool F2BilinearForm::operator()(F2Vec x, F2Vec y) const { return parity(m.apply(x) & y); }

bool F2QuadraticForm::operator()(F2Vec x) const {
  bool v = parity(x & diagonal);
  const std::size_t n = polarization.dim();
  for (std::size_t i = 0; i < n; ++i)
    if ((x >> i) & 1U) {
      F2Vec above = x & ~full_mask(i + 1);
      v ^= parity(polarization.m.rows[i] & above);
    }
  return v;
}

F2BilinearForm standard_epsilon(const Lattice& l) {
  if (!is_even(l)) throw std::invalid_argument("standard epsilon needs an even lattice");
  const std::size_t n = l.rank();
  if (n > kMaxRank) throw std::invalid_argument("rank too large");
  F2Matrix e = F2Matrix::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    e.set(i, i, mod_z(num(l.gram(i, i)) / 2, 2) == 1);
    for (std::size_t j = 0; j < i; ++j) e.set(i, j, mod_z(num(l.gram(i, j)), 2) == 1);
  }
  return {e};
}

Report verify_epsilon(const Lattice& l, const F2BilinearForm& eps, int samples) {
  Report rep;
  const std::size_t n = l.rank();
  auto lift_vec = [n](F2Vec x) {
    QVector v(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) v[i] = (x >> i) & 1U;
    return v;
  };
  long long checked = 0;
  for_pairs(n, samples, [&](F2Vec x, F2Vec y) {
    ++checked;
    QVector a = lift_vec(x), b = lift_vec(y);
    bool half_norm = mod_z(num(l.norm(a)) / 2, 2) == 1;
    if (eps(x, x) != half_norm) rep.fail("eps(x,x) != <x,x>/2 at x=" + std::to_string(x));
    bool pairing = mod_z(num(l.inner(a, b)), 2) == 1;
    if ((eps(x, y) ^ eps(y, x)) != pairing)
      rep.fail("commutator identity fails at x=" + std::to_string(x) + " y=" + std::to_string(y));
  });
  rep.payload = {{"pairs_checked", checked}};
  return rep;
}

F2BilinearForm twisted_difference(const F2BilinearForm& eps, const ZMatrix& g) {
  F2Matrix m = F2Matrix::reduce(g);
  return {eps.m + m * eps.m * m.transpose()};
}

Lift lift(const Lattice& l, const ZMatrix& g, const F2BilinearForm& eps, F2Vec diagonal) {
  if (g.rows() != l.rank() || !is_isometry(l, to_q(g))) throw std::invalid_argument("lift needs an isometry of L");
  if ((diagonal & ~full_mask(l.rank())) != 0) throw std::invalid_argument("diagonal choice has wrong length");
  F2BilinearForm b = twisted_difference(eps, g);
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (b.m.get(i, i)) throw std::logic_error("b_g is not alternating");
    for (std::size_t j = 0; j < i; ++j)
      if (b.m.get(i, j) != b.m.get(j, i)) throw std::logic_error("b_g is not symmetric");
  }
  return Lift{l.gram, g, eps, F2QuadraticForm{b, diagonal}};
}

Report verify_polarization(const Lift& lf, int samples) {
  Report rep;
  for_pairs(lf.g.rows(), samples, [&](F2Vec x, F2Vec y) {
    if ((lf.eta(x ^ y) ^ lf.eta(x) ^ lf.eta(y)) != lf.eta.polarization(x, y))
      rep.fail("polarization fails at x=" + std::to_string(x) + " y=" + std::to_string(y));
  });
  return rep;
}

bool lift_power_sign(const Lift& lf, const ZVector& alpha, int n) {
  if (n < 1) throw std::invalid_argument("power must be positive");
  const F2Matrix m = F2Matrix::reduce(lf.g);
  F2Vec x = reduce_mod2(alpha);
  bool delta = false;
  for (int i = 0; i < n; ++i) {
    delta ^= lf.eta(x);
    x = m.apply(x);
  }
  return delta;
}

bool even_order_term(const Lift& lf, const ZVector& alpha, int n) {
  if (n % 2 != 0) throw std::invalid_argument("even-order term needs even n");
  ZVector image = mul(alpha, int_power(lf.g, n / 2));
  Rational v = bilinear(to_q(alpha), lf.gram, to_q(image));
  return mod_z(num(v), 2) == 1;
}

int lift_order(const Lift& lf, int cap) {
  auto m = matrix_order(to_q(lf.g), cap);
  if (!m) throw std::invalid_argument("base isometry has no finite order below the cap");
  const std::size_t n = lf.g.rows();
  for (int candidate : {*m, 2 * *m}) {
    bool trivial = true;
    for (std::size_t i = 0; i < n && trivial; ++i) trivial = !lift_power_sign(lf, unit(n, i), candidate);
    if (trivial) return candidate;
  }
  throw std::logic_error("lift order is neither m nor 2m");
}

F2Vec twist_functional(F2Vec mu, const ZMatrix& g) {
  const F2Matrix m = F2Matrix::reduce(g);
  F2Vec out = 0;
  for (std::size_t i = 0; i < m.n; ++i)
    if (parity(m.rows[i] & mu)) out |= F2Vec(1) << i;
  return out;
}

F2Vec mu_plus_mu_g_solve(const ZMatrix& g, F2Vec lambda) {
  // Row i of (I + M) applied to mu gives (mu + mu^g)(e_i).
  F2Matrix a = F2Matrix::identity(g.rows()) + F2Matrix::reduce(g);
  const std::size_t n = a.n;
  std::vector<F2Vec> rows = a.rows;
  std::vector<bool> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = (lambda >> i) & 1U;
  std::vector<std::size_t> pivot_col(n);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = r;
    while (p < n && !((rows[p] >> c) & 1U)) ++p;
    if (p == n) throw std::domain_error("mu + mu^g = lambda is singular: g is not fixed point free of odd order");
    std::swap(rows[p], rows[r]);
    bool t = rhs[p];
    rhs[p] = rhs[r];
    rhs[r] = t;
    for (std::size_t i = 0; i < n; ++i)
      if (i != r && ((rows[i] >> c) & 1U)) {
        rows[i] ^= rows[r];
        rhs[i] = rhs[i] != rhs[r];
      }
    pivot_col[r] = c;
    ++r;
  }
  F2Vec mu = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (rhs[i]) mu |= F2Vec(1) << pivot_col[i];
  return mu;
}

bool is_linear(const F2QuadraticForm& q, std::size_t dim, int samples) {
  bool ok = true;
  for_pairs(dim, samples, [&](F2Vec x, F2Vec y) { ok = ok && ((q(x ^ y) ^ q(x) ^ q(y)) == false); });
  return ok;
}

namespace {

// zeta(x) = sum_{i<m} eta(g^i x), the form of g_hat^m.
bool zeta(const Lift& g_lift, const F2Matrix& gm, F2Vec x, int m) {
  bool v = false;
  for (int i = 0; i < m; ++i) {
    v ^= g_lift.eta(x);
    x = gm.apply(x);
  }
  return v;
}

}  // namespace

Lift commuting_lift(const ZMatrix& f, const Lift& g_lift, int m) {
  const std::size_t n = f.rows();
  const QMatrix qf = to_q(f), qg = to_q(g_lift.g);
  const ZMatrix h = int_power(g_lift.g, m);
  if (qf * qg * inverse(qf) != to_q(h)) throw std::invalid_argument("f does not conjugate g to g^m");
  Lattice l{g_lift.gram, std::nullopt};
  const Lift xi = lift(l, f, g_lift.eps);
  const F2Matrix gm = F2Matrix::reduce(g_lift.g), fm = F2Matrix::reduce(f), hm = F2Matrix::reduce(h);
  auto lambda_at = [&](F2Vec x) {
    return zeta(g_lift, gm, x, m) ^ g_lift.eta(fm.apply(x)) ^ xi.eta(x) ^ xi.eta(hm.apply(x));
  };
  F2Vec lambda = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (lambda_at(F2Vec(1) << i)) lambda |= F2Vec(1) << i;
  // lambda must be a linear functional: sample the defect.
  std::mt19937_64 rng(0xc0ffeeULL);
  for (int s = 0; s < 2000; ++s) {
    F2Vec x = rng() & full_mask(n);
    if (lambda_at(x) != parity(x & lambda)) throw std::logic_error("lambda is not linear");
  }
  F2Vec mu = mu_plus_mu_g_solve(h, lambda);
  Lift phi = xi;
  phi.eta.diagonal ^= mu;
  return phi;
}

Report verify_commuting_lift(const Lift& phi, const Lift& g_lift, int m, int samples) {
  Report rep;
  const std::size_t n = phi.g.rows();
  const F2Matrix gm = F2Matrix::reduce(g_lift.g), fm = F2Matrix::reduce(phi.g);
  const F2Matrix hm = F2Matrix::reduce(int_power(g_lift.g, m));
  auto check = [&](F2Vec x) {
    bool lhs = phi.eta(hm.apply(x)) ^ g_lift.eta(fm.apply(x)) ^ phi.eta(x);
    if (lhs != zeta(g_lift, gm, x, m)) rep.fail("conjugation relation fails at x=" + std::to_string(x));
  };
  for (std::size_t i = 0; i < n; ++i) check(F2Vec(1) << i);
  std::mt19937_64 rng(0xfaceULL);
  for (int s = 0; s < samples; ++s) check(rng() & full_mask(n));
  return rep;
}

}  // namespace paraf
