#include "paraf/orbifold_ring.hpp"

#include "paraf/fusion_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace paraf {

namespace {

void check_label(const OrbLabel& x) {
  if (x.k < 3) throw std::invalid_argument("orbifold ring needs k >= 3");
  if (x.j < 0 || x.j > x.k / 2 || (x.eps != 0 && x.eps != 1))
    throw std::invalid_argument("invalid orbifold label " + to_string(x));
}

OrbVector flip(const OrbVector& v) {
  OrbVector out;
  for (const auto& [x, m] : v) out[{x.j, 1 - x.eps, x.k}] += m;
  return out;
}

ZVector column(const ZMatrix& m, std::size_t c) {
  ZVector v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, c);
  return v;
}

}  // namespace

std::vector<OrbLabel> orbifold_basis(int k) {
  if (k < 3) throw std::invalid_argument("orbifold ring needs k >= 3");
  std::vector<OrbLabel> out;
  for (int j = 0; j <= k / 2; ++j)
    for (int e = 0; e < 2; ++e) out.push_back({j, e, k});
  return out;
}

Rational orbifold_weight(const OrbLabel& x) {
  check_label(x);
  Rational h(x.j * (x.j + 1), x.k + 2);
  if (x.eps == 0) return h;
  if (x.j == 0) return h + 3;
  if (2 * x.j < x.k) return h + 1;
  return h + 2;  // k even, j = k/2
}

OrbVector generator_fuse(const OrbLabel& g, const OrbLabel& x) {
  check_label(g);
  check_label(x);
  if (g.k != x.k) throw std::invalid_argument("orbifold labels at different levels");
  const int k = x.k, J = k / 2;
  if (g.j == 0 && g.eps == 1) return {{{x.j, 1 - x.eps, k}, 1}};
  if (!(g.j == 1 && g.eps == 0)) throw std::invalid_argument("not a generator: " + to_string(g));
  if (x.eps == 1) return flip(generator_fuse(g, {x.j, 0, k}));
  OrbVector out;
  if (x.j == 0) {
    out[{1, 0, k}] = 1;
  } else if (x.j < J) {
    out[{x.j - 1, 0, k}] = 1;
    out[{x.j, 1, k}] = 1;
    out[{x.j + 1, 0, k}] = 1;
  } else if (k % 2 == 1) {
    out[{J - 1, 0, k}] = 1;
    out[{J, 1, k}] = 1;
  } else {
    out[{J - 1, 0, k}] = 1;
  }
  return out;
}

ZMatrix generator_matrix(const OrbLabel& g) {
  auto basis = orbifold_basis(g.k);
  ZMatrix a(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (const auto& [y, m] : generator_fuse(g, basis[c])) a(static_cast<std::size_t>(2 * y.j + y.eps), c) = m;
  return a;
}

OrbTable derive_full_table(int k) {
  OrbTable t;
  t.k = k;
  t.basis = orbifold_basis(k);
  const std::size_t n = t.basis.size();
  const int J = k / 2;
  const ZMatrix a1 = generator_matrix({0, 1, k});
  const ZMatrix a2 = generator_matrix({1, 0, k});

  // P[j] expresses (j,0) as a polynomial in the generators.
  std::vector<ZMatrix> p(J + 1);
  p[0] = ZMatrix::identity(n);
  p[1] = a2;
  for (int j = 1; j < J; ++j) p[j + 1] = a2 * p[j] - p[j - 1] - a1 * p[j];

  t.entries.assign(n, std::vector<OrbVector>(n));
  for (std::size_t x = 0; x < n; ++x) {
    const OrbLabel& lx = t.basis[x];
    ZMatrix px = lx.eps ? a1 * p[lx.j] : p[lx.j];
    ZVector e0 = column(px, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (e0[i] != (i == x ? 1 : 0))
        throw std::logic_error("polynomial for " + to_string(lx) + " does not reproduce it from the identity");
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t i = 0; i < n; ++i) {
        const Integer& c = px(i, y);
        if (c != 0) t.entries[x][y][t.basis[i]] = static_cast<int>(c);
      }
  }
  Report r = check_table(t);
  if (!r.pass) throw std::logic_error("orbifold table self-check failed at k=" + std::to_string(k) + ": " + r.findings.front());
  return t;
}

Report check_table(const OrbTable& t) {
  Report rep;
  const std::size_t n = t.basis.size();
  for (std::size_t y = 0; y < n; ++y)
    if (t.entries[0][y] != OrbVector{{t.basis[y], 1}}) rep.fail("identity row wrong at " + to_string(t.basis[y]));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (t.entries[x][y] != t.entries[y][x])
        rep.fail("not symmetric at " + to_string(t.basis[x]) + " x " + to_string(t.basis[y]));
      for (const auto& [z, m] : t.entries[x][y])
        if (m < 0) rep.fail("negative coefficient in " + to_string(t.basis[x]) + " x " + to_string(t.basis[y]));
    }
  auto times = [&](const OrbVector& v, std::size_t z, bool left) {
    OrbVector out;
    for (const auto& [w, m] : v)
      for (const auto& [u, c] : left ? t.entries[z][t.index(w)] : t.entries[t.index(w)][z]) out[u] += m * c;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (times(t.entries[x][y], z, false) != times(t.entries[y][z], x, true))
          rep.fail("not associative at (" + to_string(t.basis[x]) + "," + to_string(t.basis[y]) + "," +
                   to_string(t.basis[z]) + ")");
  return rep;
}

int sigma_sign(const OrbLabel& x) { return (x.j + x.eps) % 2 == 0 ? 1 : -1; }

Report verify_sigma_grading(const OrbTable& t) {
  Report rep;
  for (const auto& x : t.basis)
    for (const auto& y : t.basis)
      for (const auto& [z, m] : t.at(x, y))
        if (sigma_sign(z) != sigma_sign(x) * sigma_sign(y))
          rep.fail(to_string(x) + " x " + to_string(y) + " contains " + to_string(z) + " of the wrong sign");
  rep.payload = {{"k", t.k}};
  return rep;
}

Report verify_sigma_grading(int k) { return verify_sigma_grading(derive_full_table(k)); }

Report verify_collapse(const OrbTable& t) {
  Report rep;
  const int k = t.k;
  for (const auto& x : t.basis)
    for (const auto& y : t.basis) {
      std::map<int, int> halves;
      for (const auto& [z, m] : t.at(x, y)) halves[z.j] += m;
      std::map<int, int> full;
      for (const auto& [c, m] : fuse(sigma_label(x.j, k), sigma_label(y.j, k))) {
        int jj = -1;
        for (int j = 0; j <= k / 2; ++j)
          if (sigma_label(j, k) == c) jj = j;
        if (jj < 0) {
          rep.fail("non sigma-type output " + to_string(c));
          continue;
        }
        full[jj] += m;
      }
      if (halves != full) rep.fail("collapse mismatch at " + to_string(x) + " x " + to_string(y));
    }
  return rep;
}

Report verify_generator_rows(const OrbTable& t) {
  Report rep;
  for (OrbLabel g : {OrbLabel{0, 1, t.k}, OrbLabel{1, 0, t.k}})
    for (const auto& x : t.basis)
      if (t.at(g, x) != generator_fuse(g, x)) rep.fail("generator row differs at " + to_string(g) + " x " + to_string(x));
  return rep;
}

std::string to_string(const OrbLabel& x) {
  return "(" + std::to_string(x.j) + "," + std::to_string(x.eps) + ")";
}

std::string to_string(const OrbVector& v) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, m] : v) {
    os << (first ? "" : " + ");
    if (m != 1) os << m << " ";
    os << to_string(x);
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace paraf
