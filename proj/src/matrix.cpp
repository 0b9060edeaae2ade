#include "paraf/matrix.hpp"

#include <sstream>

namespace paraf {

QMatrix to_q(const ZMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

QVector to_q(const ZVector& v) {
  QVector q;
  q.reserve(v.size());
  for (const auto& x : v) q.emplace_back(x);
  return q;
}

bool is_integral(const QMatrix& m) {
  for (const auto& x : m.data())
    if (!is_integer(x)) return false;
  return true;
}

ZMatrix to_z(const QMatrix& m) {
  ZMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw std::domain_error("matrix entry is not an integer");
      z(i, j) = num(m(i, j));
    }
  return z;
}

QVector mul(const QVector& v, const QMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix shape mismatch");
  QVector out(m.cols(), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

ZVector mul(const ZVector& v, const ZMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix shape mismatch");
  ZVector out(m.cols(), Integer(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational bilinear(const QVector& v, const QMatrix& g, const QVector& w) { return dot(mul(v, g), w); }

namespace {
// Gauss-Jordan on [m | rhs]; returns rank and leaves m in reduced form.
std::size_t eliminate(QMatrix& m, QMatrix* rhs, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    if (rhs) rhs->swap_rows(p, r);
    Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    if (rhs)
      for (std::size_t j = 0; j < rhs->cols(); ++j) (*rhs)(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
      if (rhs)
        for (std::size_t j = 0; j < rhs->cols(); ++j) (*rhs)(i, j) -= f * (*rhs)(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}
}  // namespace

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  QMatrix a = m;
  QMatrix inv = QMatrix::identity(m.rows());
  if (eliminate(a, &inv) != m.rows()) throw std::domain_error("singular matrix");
  return inv;
}

Rational determinant(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  QMatrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::size_t rank(const QMatrix& m) {
  QMatrix a = m;
  return eliminate(a, nullptr);
}

bool solve_left(const QMatrix& a, const QVector& b, QVector& x) {
  // x·A = b  <=>  Aᵀ xᵀ = bᵀ
  QMatrix at = a.transpose();
  QMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  std::vector<std::size_t> piv;
  std::size_t r = eliminate(at, &rhs, &piv);
  for (std::size_t i = r; i < at.rows(); ++i)
    if (rhs(i, 0) != 0) return false;
  x.assign(a.rows(), Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[piv[i]] = rhs(i, 0);
  return true;
}

QMatrix kronecker(const QMatrix& a, const QMatrix& b) {
  QMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s) k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
  return k;
}

QMatrix block_diagonal(const std::vector<QMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  QMatrix m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  QMatrix m = a;
  for (std::size_t i = 0; i < b.rows(); ++i) m.append_row(b.row(i));
  return m;
}

QMatrix power(const QMatrix& m, long long e) {
  if (e < 0) return power(inverse(m), -e);
  QMatrix result = QMatrix::identity(m.rows());
  QMatrix base = m;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool is_symmetric(const QMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_positive_definite(const QMatrix& m) {
  if (!is_symmetric(m)) return false;
  QMatrix a = m;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    if (a(c, c) <= 0) return false;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return true;
}

std::string format(const QMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "\n[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
    os << "]";
  }
  return os.str();
}

}  // namespace paraf
