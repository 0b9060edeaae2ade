#include "paraf/intmat.hpp"

#include <stdexcept>

namespace paraf {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

void add_row_multiple(ZMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col_multiple(ZMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

void swap_cols(ZMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_row(ZMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}


}  // namespace

HermiteResult hermite(const ZMatrix& a) {
  HermiteResult res;
  res.h = a;
  res.u = ZMatrix::identity(a.rows());
  ZMatrix& h = res.h;
  ZMatrix& u = res.u;
  const std::size_t m = h.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < m; ++c) {
    // Euclid on column c among rows r..m-1.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (best == m || abs(h(i, c)) < abs(h(best, c)))) best = i;
      if (best == m) break;
      h.swap_rows(best, r);
      u.swap_rows(best, r);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Integer q = floor_div(h(i, c), h(r, c));
        add_row_multiple(h, i, r, -q);
        add_row_multiple(u, i, r, -q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      add_row_multiple(h, i, r, -q);
      add_row_multiple(u, i, r, -q);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

ZMatrix row_basis(const ZMatrix& a) {
  HermiteResult hr = hermite(a);
  ZMatrix b(hr.rank, a.cols());
  for (std::size_t i = 0; i < hr.rank; ++i) b.set_row(i, hr.h.row(i));
  return b;
}

ZMatrix left_kernel(const ZMatrix& a) {
  HermiteResult hr = hermite(a);
  ZMatrix k(a.rows() - hr.rank, a.rows());
  for (std::size_t i = hr.rank; i < a.rows(); ++i) k.set_row(i - hr.rank, hr.u.row(i));
  if (k.rows() == 0) return k;
  return row_basis(k);
}

SmithResult smith(const ZMatrix& a) {
  SmithResult res;
  res.d = a;
  res.u = ZMatrix::identity(a.rows());
  res.v = ZMatrix::identity(a.cols());
  ZMatrix& d = res.d;
  const std::size_t m = d.rows(), n = d.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block goes to (t,t).
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (bi == m || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == m) break;
      d.swap_rows(bi, t);
      res.u.swap_rows(bi, t);
      swap_cols(d, bj, t);
      swap_cols(res.v, bj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        Integer q = floor_div(d(i, t), d(t, t));
        add_row_multiple(d, i, t, -q);
        add_row_multiple(res.u, i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Integer q = floor_div(d(t, j), d(t, t));
        add_col_multiple(d, j, t, -q);
        add_col_multiple(res.v, j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any offending row into row t and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            add_row_multiple(d, t, i, Integer(1));
            add_row_multiple(res.u, t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(res.u, t);
    }
  }
  for (std::size_t t = 0; t < std::min(m, n); ++t) res.diagonal.push_back(d(t, t));
  return res;
}

std::vector<Integer> invariant_factors(const ZMatrix& a) {
  std::vector<Integer> out;
  for (const auto& x : smith(a).diagonal)
    if (x != 0) out.push_back(x);
  return out;
}

bool solve_integer(const ZMatrix& b, const ZVector& v, ZVector& x) {
  if (v.size() != b.cols()) throw std::invalid_argument("solve_integer length mismatch");
  HermiteResult hr = hermite(b);
  ZVector rest = v;
  ZVector y(b.rows(), Integer(0));
  for (std::size_t i = 0; i < hr.rank; ++i) {
    std::size_t c = hr.pivots[i];
    if (rest[c] % hr.h(i, c) != 0) return false;
    y[i] = rest[c] / hr.h(i, c);
    for (std::size_t j = 0; j < b.cols(); ++j) rest[j] -= y[i] * hr.h(i, j);
  }
  for (const auto& r : rest)
    if (r != 0) return false;
  x = mul(y, hr.u);
  return true;
}

bool span_contains(const ZMatrix& b, const ZMatrix& s) {
  ZMatrix basis = row_basis(b);
  ZVector x;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    if (basis.rows() == 0) {
      for (const auto& e : s.row(i))
        if (e != 0) return false;
      continue;
    }
    if (!solve_integer(basis, s.row(i), x)) return false;
  }
  return true;
}

bool same_span(const ZMatrix& a, const ZMatrix& b) { return row_basis(a) == row_basis(b); }

Integer common_denominator(const QMatrix& m) {
  Integer d = 1;
  for (const auto& x : m.data()) d = boost::multiprecision::lcm(d, den(x));
  return d;
}

namespace {
ZMatrix scaled(const QMatrix& m, const Integer& d) { return to_z(Rational(d) * m); }
QMatrix unscaled(const ZMatrix& m, const Integer& d) { return Rational(1, d) * to_q(m); }
}  // namespace

QMatrix rational_row_basis(const QMatrix& m) {
  Integer d = common_denominator(m);
  return unscaled(row_basis(scaled(m, d)), d);
}

QMatrix intersect_spans(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("intersect_spans dimension mismatch");
  Integer d = boost::multiprecision::lcm(common_denominator(a), common_denominator(b));
  ZMatrix za = row_basis(scaled(a, d));
  ZMatrix zb = row_basis(scaled(b, d));
  ZMatrix stacked(za.rows() + zb.rows(), a.cols());
  for (std::size_t i = 0; i < za.rows(); ++i) stacked.set_row(i, za.row(i));
  for (std::size_t i = 0; i < zb.rows(); ++i) stacked.set_row(za.rows() + i, zb.row(i));
  ZMatrix k = left_kernel(stacked);
  ZMatrix proj(k.rows(), za.rows());
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < za.rows(); ++j) proj(i, j) = k(i, j);
  ZMatrix inter = proj * za;
  if (inter.rows() == 0) return QMatrix(0, a.cols());
  return unscaled(row_basis(inter), d);
}

bool rational_span_contains(const QMatrix& b, const QMatrix& s) {
  Integer d = boost::multiprecision::lcm(common_denominator(b), common_denominator(s));
  return span_contains(scaled(b, d), scaled(s, d));
}

ZMatrix kernel_mod(const ZMatrix& a, const Integer& m) {
  ZMatrix stacked(a.rows() + a.cols(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) stacked.set_row(i, a.row(i));
  for (std::size_t j = 0; j < a.cols(); ++j) stacked(a.rows() + j, j) = m;
  ZMatrix k = left_kernel(stacked);
  ZMatrix proj(k.rows(), a.rows());
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) proj(i, j) = k(i, j);
  return row_basis(proj);
}

}  // namespace paraf
