#pragma once

#include "paraf/lattice.hpp"
#include "paraf/report.hpp"

#include <cstdint>
#include <vector>

namespace paraf {

// A class in L/2L, bit i being the coefficient of the i-th basis vector.
using F2Vec = std::uint64_t;

struct F2Matrix {
  std::size_t n = 0;
  std::vector<F2Vec> rows;

  static F2Matrix zero(std::size_t n) { return {n, std::vector<F2Vec>(n, 0)}; }
  static F2Matrix identity(std::size_t n);
  static F2Matrix reduce(const ZMatrix& m);
  bool get(std::size_t i, std::size_t j) const { return (rows[i] >> j) & 1U; }
  void set(std::size_t i, std::size_t j, bool v);
  // Row vector times matrix.
  F2Vec apply(F2Vec x) const;
  F2Matrix transpose() const;
  friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
  friend F2Matrix operator+(const F2Matrix& a, const F2Matrix& b);
  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;
};

struct F2BilinearForm {
  F2Matrix m;
  bool operator()(F2Vec x, F2Vec y) const;
  std::size_t dim() const { return m.n; }
};

// q(x) = sum x_i d_i + sum_{i<j} x_i x_j b_ij.
struct F2QuadraticForm {
  F2BilinearForm polarization;
  F2Vec diagonal = 0;
  bool operator()(F2Vec x) const;
};

// Lift of g to the central extension, determined by eta.
struct Lift {
  QMatrix gram;
  ZMatrix g;
  F2BilinearForm eps;
  F2QuadraticForm eta;
};

bool parity(F2Vec x);
F2Vec reduce_mod2(const ZVector& v);

F2BilinearForm standard_epsilon(const Lattice& l);
// Checks eps(x,x) = <x,x>/2 and eps(x,y)+eps(y,x) = <x,y> mod 2, exhaustively
// up to rank 8 and on `samples` random pairs above.
Report verify_epsilon(const Lattice& l, const F2BilinearForm& eps, int samples = 10000);

// b_g = eps + eps^g.
F2BilinearForm twisted_difference(const F2BilinearForm& eps, const ZMatrix& g);
Lift lift(const Lattice& l, const ZMatrix& g, const F2BilinearForm& eps, F2Vec diagonal = 0);
Report verify_polarization(const Lift& lf, int samples = 10000);

bool lift_power_sign(const Lift& lf, const ZVector& alpha, int n);
// <alpha, g^{n/2} alpha> mod 2 for even n.
bool even_order_term(const Lift& lf, const ZVector& alpha, int n);
int lift_order(const Lift& lf, int cap = 1000);

// Linear functionals on L/2L are F2Vec of their values on the basis.
// mu^g(x) = mu(gx).
F2Vec twist_functional(F2Vec mu, const ZMatrix& g);
F2Vec mu_plus_mu_g_solve(const ZMatrix& g, F2Vec lambda);
bool is_linear(const F2QuadraticForm& q, std::size_t dim, int samples = 10000);

// Lift phi of f with phi^{-1} g_hat phi = g_hat^m, where f^{-1} g f = g^m.
Lift commuting_lift(const ZMatrix& f, const Lift& g_lift, int m);
// Verifies phi^{-1} g_hat phi = g_hat^m on basis vectors and random classes.
Report verify_commuting_lift(const Lift& phi, const Lift& g_lift, int m, int samples = 2000);

}  // namespace paraf
