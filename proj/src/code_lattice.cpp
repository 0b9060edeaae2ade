#include "paraf/code_lattice.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>
#include <stdexcept>

namespace paraf {

namespace {

using Mask = std::uint64_t;

QVector scale(const Rational& c, QVector v) {
  for (auto& x : v) x *= c;
  return v;
}

void check_block(const std::vector<int>& u, int p) {
  if (static_cast<int>(u.size()) != p - 1)
    throw std::invalid_argument("block has length " + std::to_string(u.size()) + ", expected " + std::to_string(p - 1));
}

void check_word(const Codeword& c, int p, int d) {
  if (static_cast<int>(c.size()) != (p - 1) * d)
    throw std::invalid_argument("codeword has length " + std::to_string(c.size()) + ", expected " +
                                std::to_string((p - 1) * d));
  for (int b : c)
    if (b != 0 && b != 1) throw std::invalid_argument("codeword entries must be 0 or 1");
}

Mask to_mask(const std::vector<int>& bits) {
  if (bits.size() > 64) throw std::invalid_argument("words longer than 64 bits are not supported");
  Mask m = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] & 1) m |= Mask(1) << i;
  return m;
}

Codeword from_mask(Mask m, std::size_t len) {
  Codeword c(len);
  for (std::size_t i = 0; i < len; ++i) c[i] = static_cast<int>((m >> i) & 1U);
  return c;
}

std::vector<int> block(const Codeword& c, int p, int l) {
  return {c.begin() + l * (p - 1), c.begin() + (l + 1) * (p - 1)};
}

// Reduced F2 row basis of a set of masks.
std::vector<Mask> f2_basis(const std::vector<Mask>& gens) {
  std::vector<Mask> basis;
  for (Mask g : gens) {
    for (Mask b : basis) g = std::min(g, g ^ b);
    if (g == 0) continue;
    for (Mask& b : basis) b = std::min(b, b ^ g);
    basis.push_back(g);
    std::sort(basis.rbegin(), basis.rend());
  }
  return basis;
}

std::vector<Mask> span_masks(const std::vector<Mask>& basis) {
  if (basis.size() > 24) throw std::invalid_argument("code dimension too large to enumerate");
  std::vector<Mask> out(std::size_t(1) << basis.size(), 0);
  for (std::size_t s = 1; s < out.size(); ++s) {
    std::size_t low = std::countr_zero(s);
    out[s] = out[s & (s - 1)] ^ basis[low];
  }
  return out;
}

QMatrix scaled_generators(const Code& code) {
  const std::size_t n = static_cast<std::size_t>((code.p - 1) * code.d);
  QMatrix g(n + code.generators.size(), n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
  for (std::size_t r = 0; r < code.generators.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) g(n + r, j) = code.generators[r][j];
  return g;
}

}  // namespace

KSpace make_kspace(int p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd integer >= 3");
  KSpace k{p, cartan_matrix('A', p - 1)};
  if (mod_z(num(determinant(to_q(k.cartan))), 2) == 0) throw std::logic_error("form on K is degenerate");
  return k;
}

int k_inner(const std::vector<int>& u, const std::vector<int>& v, int p) {
  check_block(u, p);
  check_block(v, p);
  ZMatrix a = cartan_matrix('A', p - 1);
  Integer s = 0;
  for (int i = 0; i < p - 1; ++i)
    for (int j = 0; j < p - 1; ++j) s += Integer(u[i]) * a(i, j) * v[j];
  return static_cast<int>(mod_z(s, 2));
}

int k_quadratic(const std::vector<int>& u, int p) {
  check_block(u, p);
  ZMatrix a = cartan_matrix('A', p - 1);
  Integer s = 0;
  for (int i = 0; i < p - 1; ++i)
    for (int j = 0; j < p - 1; ++j) s += Integer(u[i]) * a(i, j) * u[j];
  return static_cast<int>(mod_z(Integer(s / 2), 2));
}

int codeword_inner(const Codeword& u, const Codeword& v, int p) {
  if (u.size() != v.size() || u.size() % (p - 1) != 0) throw std::invalid_argument("codeword length mismatch");
  int s = 0;
  for (int l = 0; l < static_cast<int>(u.size()) / (p - 1); ++l) s += k_inner(block(u, p, l), block(v, p, l), p);
  return s % 2;
}

const std::vector<int>& block_weight_table(int p) {
  static std::mutex mu;
  static std::map<int, std::vector<int>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  make_kspace(p);
  Lattice n = sqrt2_a(p);
  std::vector<int> table(std::size_t(1) << (p - 1));
  for (Mask m = 0; m < table.size(); ++m) {
    QVector shift(p - 1, Rational(0));
    for (int i = 0; i < p - 1; ++i) shift[i] = Rational(static_cast<int>((m >> i) & 1U), 2);
    Rational w = coset_min_norm(n, shift);
    table[m] = static_cast<int>(num(w));
  }
  return cache.emplace(p, std::move(table)).first->second;
}

int block_weight(const std::vector<int>& u, int p) {
  check_block(u, p);
  return block_weight_table(p)[to_mask(u)];
}

int codeword_weight(const Codeword& c, int p) {
  if (c.size() % (p - 1) != 0) throw std::invalid_argument("codeword length is not a multiple of p-1");
  int w = 0;
  for (int l = 0; l < static_cast<int>(c.size()) / (p - 1); ++l) w += block_weight(block(c, p, l), p);
  return w;
}

Codeword nu_word(const Codeword& c, int p) {
  ZMatrix nu = to_z(coxeter_nu(p).matrix);
  Codeword out(c.size(), 0);
  for (std::size_t l = 0; l < c.size() / (p - 1); ++l)
    for (int j = 0; j < p - 1; ++j) {
      Integer s = 0;
      for (int i = 0; i < p - 1; ++i) s += Integer(c[l * (p - 1) + i]) * nu(i, j);
      out[l * (p - 1) + j] = static_cast<int>(mod_z(s, 2));
    }
  return out;
}

std::vector<Codeword> code_span(const Code& code) {
  std::vector<Mask> gens;
  for (const auto& g : code.generators) {
    check_word(g, code.p, code.d);
    gens.push_back(to_mask(g));
  }
  std::vector<Codeword> out;
  for (Mask m : span_masks(f2_basis(gens))) out.push_back(from_mask(m, (code.p - 1) * code.d));
  return out;
}

CodeProperties code_properties(const Code& code) {
  make_kspace(code.p);
  const int len = (code.p - 1) * code.d;
  std::vector<Mask> gens;
  for (const auto& g : code.generators) {
    check_word(g, code.p, code.d);
    gens.push_back(to_mask(g));
  }
  std::vector<Mask> basis = f2_basis(gens);
  std::vector<Mask> words = span_masks(basis);
  std::set<Mask> word_set(words.begin(), words.end());

  CodeProperties props;
  props.size = words.size();
  props.self_orthogonal = true;
  for (Mask a : basis)
    for (Mask b : basis)
      if (codeword_inner(from_mask(a, len), from_mask(b, len), code.p) != 0) props.self_orthogonal = false;
  props.self_dual = props.self_orthogonal && basis.size() * 2 == static_cast<std::size_t>(len);
  props.nu_invariant = true;
  for (Mask b : basis)
    if (!word_set.count(to_mask(nu_word(from_mask(b, len), code.p)))) props.nu_invariant = false;
  props.totally_isotropic = true;
  props.parity_law = true;
  for (Mask m : words) {
    Codeword c = from_mask(m, len);
    int q = 0;
    for (int l = 0; l < code.d; ++l) q ^= k_quadratic(block(c, code.p, l), code.p);
    int w = codeword_weight(c, code.p);
    if (q != 0) props.totally_isotropic = false;
    if (w % 2 != q) props.parity_law = false;
    ++props.weight_distribution[w];
  }
  return props;
}

Report code_properties_report(const Code& code) {
  CodeProperties props = code_properties(code);
  Report rep;
  if (!props.parity_law) rep.fail("weight parity disagrees with q on some word");
  nlohmann::json dist = nlohmann::json::object();
  for (auto [w, n] : props.weight_distribution) dist[std::to_string(w)] = n;
  rep.payload = {{"size", props.size},
                 {"self_orthogonal", props.self_orthogonal},
                 {"self_dual", props.self_dual},
                 {"totally_isotropic", props.totally_isotropic},
                 {"nu_invariant", props.nu_invariant},
                 {"weight_distribution", dist}};
  return rep;
}

QVector beta_of(const Codeword& c) {
  QVector v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = Rational(c[i], 2);
  return v;
}

QMatrix ambient_gram(int p, int d) {
  std::vector<Lattice> parts(d, sqrt2_a(p));
  return orthogonal_sum(parts).gram;
}

QMatrix ambient_nu(int p, int d) {
  std::vector<QMatrix> parts(d, coxeter_nu(p).matrix);
  return block_diagonal(parts);
}

Rational beta_nu_pairing(const Codeword& c, int p) {
  const int d = static_cast<int>(c.size()) / (p - 1);
  QVector b = beta_of(c);
  return bilinear(b, ambient_gram(p, d), mul(b, ambient_nu(p, d)));
}

std::optional<int> weight4_type(const Codeword& c) {
  constexpr int p = 5;
  if (c.size() != 16) throw std::invalid_argument("weight-4 types are defined for p=5, d=4");
  if (codeword_weight(c, p) != 4) return std::nullopt;
  std::vector<int> ws;
  for (int l = 0; l < 4; ++l) ws.push_back(block_weight(block(c, p, l), p));
  std::sort(ws.begin(), ws.end());
  Rational pair = beta_nu_pairing(c, p);
  const std::vector<int> flat{1, 1, 1, 1}, spread{0, 1, 1, 2};
  if (ws == flat && pair == -2) return 0;
  if (ws == flat && pair == 0) return 1;
  if (ws == spread && pair == -2) return 2;
  if (ws == flat && pair == -1) return 3;
  return std::nullopt;
}

TypeCounts classify_weight4(const Code& code) {
  if (code.p != 5 || code.d != 4) throw std::invalid_argument("weight-4 classification needs p=5, d=4");
  TypeCounts out;
  std::set<Codeword> weight4;
  for (const auto& c : code_span(code)) {
    if (codeword_weight(c, code.p) != 4) continue;
    weight4.insert(c);
    if (auto t = weight4_type(c))
      ++out.by_invariant[*t];
    else
      out.unclassified.push_back(c);
  }

  // <nu> x Alt_4 orbit oracle.
  std::vector<std::array<int, 4>> alt4;
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
    if (inversions % 2 == 0) alt4.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  auto orbit = [&](const Codeword& start) {
    std::set<Codeword> seen;
    for (const auto& pi : alt4) {
      Codeword c(16);
      for (int l = 0; l < 4; ++l)
        for (int i = 0; i < 4; ++i) c[pi[l] * 4 + i] = start[l * 4 + i];
      for (int a = 0; a < 5; ++a) {
        seen.insert(c);
        c = nu_word(c, 5);
      }
    }
    return seen;
  };
  const std::array<Codeword, 4> reps{
      Codeword{1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0},
      Codeword{1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0},
      Codeword{1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0},
      Codeword{1, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 0}};
  std::size_t covered = 0;
  for (int t = 0; t < 4; ++t) {
    auto orb = orbit(reps[t]);
    out.by_orbit[t] = static_cast<int>(orb.size());
    for (const auto& c : orb) {
      if (!weight4.count(c) || weight4_type(c) != t) out.orbits_match_invariant = false;
    }
    covered += orb.size();
  }
  if (covered != weight4.size()) out.orbits_match_invariant = false;
  return out;
}

CodeLattice build_lattice(const Code& code) {
  make_kspace(code.p);
  for (const auto& g : code.generators) check_word(g, code.p, code.d);
  CodeLattice lc;
  lc.ambient = ambient_gram(code.p, code.d);
  ZMatrix b = row_basis(to_z(scaled_generators(code)));
  QMatrix basis = Rational(1, 2) * to_q(b);
  lc.lattice = Lattice{basis * lc.ambient * basis.transpose(), basis};
  lc.integral = is_integral(lc.lattice);
  lc.even = is_even(lc.lattice);
  if (!lc.integral) lc.warnings.push_back("code is not self-orthogonal: L_C is not integral");
  else if (!lc.even) lc.warnings.push_back("code is not totally isotropic: L_C is not even");
  return lc;
}

Isometry restrict_isometry(const CodeLattice& lc, const QMatrix& ambient_map) {
  const QMatrix& b = *lc.lattice.parent_basis;
  QMatrix t = b * ambient_map * inverse(b);
  if (!is_integral(t)) throw std::invalid_argument("map does not preserve the lattice");
  return Isometry{t};
}

Lattice nu_orbit_sublattice(const Lattice& l, const QVector& v, const Isometry& nu) {
  auto n = matrix_order(nu.matrix, 1000);
  if (!n) throw std::invalid_argument("isometry has no finite order");
  QMatrix rows(0, l.rank());
  QVector x = v;
  for (int i = 0; i + 1 < std::max(*n, 2); ++i) {
    rows = vstack(rows, QMatrix::from_rows({x}));
    x = mul(x, nu.matrix);
  }
  return sublattice(l, rational_row_basis(rows));
}

GlueVector lambda_p5() { return {Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5)}; }

Code builtin_code(const std::string& name) {
  if (name != "5B") throw std::invalid_argument("unknown builtin code: " + name);
  auto w = [](std::initializer_list<std::initializer_list<int>> blocks) {
    Codeword c;
    for (auto b : blocks) c.insert(c.end(), b.begin(), b.end());
    return c;
  };
  return Code{5,
              4,
              {w({{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}}),
               w({{0, 1, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}}),
               w({{0, 0, 1, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}}),
               w({{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}}),
               w({{1, 0, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 1}, {0, 0, 0, 0}}),
               w({{0, 1, 0, 0}, {1, 1, 1, 0}, {1, 0, 1, 0}, {0, 0, 0, 0}}),
               w({{0, 0, 1, 0}, {0, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 0, 0}}),
               w({{0, 0, 0, 1}, {1, 1, 0, 0}, {1, 1, 0, 1}, {0, 0, 0, 0}})}};
}

namespace {

// Bits of x + F in M/F, F = (Z gamma + Z delta)^4: gamma slots first, then delta slots.
std::optional<Mask> glue_bits(const QVector& x) {
  Mask m = 0;
  for (int l = 0; l < 4; ++l) {
    // x_l = a gamma + b delta with gamma = e1, delta = e3 + e4.
    Rational a = x[4 * l], b = x[4 * l + 2];
    if (x[4 * l + 1] != 0 || x[4 * l + 3] != b) return std::nullopt;
    if (!is_integer(Rational(2) * a) || !is_integer(Rational(2) * b)) return std::nullopt;
    if (mod_z(num(Rational(2) * a), 2) == 1) m |= Mask(1) << l;
    if (mod_z(num(Rational(2) * b), 2) == 1) m |= Mask(1) << (4 + l);
  }
  return m;
}

void check_e8_invariants(const Lattice& l, const std::string& name, Report& rep) {
  if (!is_even(l)) rep.fail(name + " is not even");
  if (det(l) != 256) rep.fail(name + " has det " + to_string(det(l)));
  Rational mn = min_norm(l);
  if (mn != 4) rep.fail(name + " has min norm " + to_string(mn));
  auto s4 = shell(l, 4).size();
  if (s4 != 240) rep.fail(name + " has " + std::to_string(s4) + " norm-4 vectors");
  if (!shell(l, 6).empty()) rep.fail(name + " has norm-6 vectors");
  rep.payload[name] = {{"det", to_string(det(l))}, {"min_norm", to_string(mn)}, {"shell4", s4}};
}

}  // namespace

EE8Pair build_ee8_pair() {
  EE8Pair out;
  Report& rep = out.report;
  const QMatrix g = ambient_gram(5, 4);
  const QMatrix nu = ambient_nu(5, 4);
  auto vec = [](std::initializer_list<std::initializer_list<Rational>> blocks) {
    QVector v;
    for (auto b : blocks) v.insert(v.end(), b.begin(), b.end());
    return v;
  };
  const Rational h(1, 2), z(0);
  QMatrix f(8, 16);
  for (int l = 0; l < 4; ++l) {
    f(2 * l, 4 * l) = 1;
    f(2 * l + 1, 4 * l + 2) = 1;
    f(2 * l + 1, 4 * l + 3) = 1;
  }
  // gamma = (1,0,0,0), delta = (0,0,1,1), gamma + delta = (1,0,1,1).
  std::vector<QVector> halves{
      vec({{h, z, z, z}, {h, z, z, z}, {h, z, z, z}, {h, z, z, z}}),
      vec({{z, z, h, h}, {z, z, h, h}, {z, z, h, h}, {z, z, h, h}}),
      vec({{h, z, z, z}, {z, z, h, h}, {h, z, h, h}, {z, z, z, z}}),
      vec({{z, z, h, h}, {h, z, h, h}, {h, z, z, z}, {z, z, z, z}})};
  const std::vector<Mask> expected_bits{0b00001111, 0b11110000, 0b01100101, 0b00110110};
  for (std::size_t i = 0; i < halves.size(); ++i) {
    auto bits = glue_bits(halves[i]);
    if (!bits || *bits != expected_bits[i]) rep.fail("glue generator " + std::to_string(i + 1) + " has unexpected bits");
  }
  out.m = rational_row_basis(vstack(f, QMatrix::from_rows(halves)));
  out.m_prime = out.m * nu * nu;

  const Lattice amb{g, std::nullopt};
  const Lattice m = sublattice(amb, out.m), mp = sublattice(amb, out.m_prime);
  check_e8_invariants(m, "M", rep);
  check_e8_invariants(mp, "M'", rep);

  // M/F is the [8,4,4] extended Hamming code.
  std::vector<Mask> glue;
  for (std::size_t r = 0; r < out.m.rows(); ++r) {
    auto bits = glue_bits(out.m.row(r));
    if (!bits) rep.fail("M is not inside (1/2)F");
    else glue.push_back(*bits);
  }
  std::vector<Mask> hamming = span_masks(f2_basis(glue));
  std::map<int, int> enumerator;
  bool self_orth = true;
  for (Mask a : hamming) {
    ++enumerator[std::popcount(a)];
    for (Mask b : hamming) self_orth = self_orth && std::popcount(a & b) % 2 == 0;
  }
  if (enumerator != std::map<int, int>{{0, 1}, {4, 14}, {8, 1}}) rep.fail("M/F weight enumerator is not 1 + 14z^4 + z^8");
  if (!self_orth || hamming.size() != 16) rep.fail("M/F is not a self-dual code of size 16");
  // [M:F]^2 = det F / det M.
  if (det(sublattice(amb, f)) / det(m) != 256) rep.fail("[M:F] != 16");
  rep.payload["hamming_enumerator"] = {{"0", enumerator[0]}, {"4", enumerator[4]}, {"8", enumerator[8]}};

  // M + M' = L_C and M ∩ M' = 0.
  CodeLattice lc = build_lattice(builtin_code("5B"));
  const QMatrix& b = *lc.lattice.parent_basis;
  QMatrix sum = vstack(out.m, out.m_prime);
  if (!rational_span_contains(sum, b) || !rational_span_contains(b, sum)) rep.fail("M + M' != L_C");
  if (rank(sum) != 16) rep.fail("M ∩ M' != 0");
  rep.payload["intersection_rank"] = 16 - static_cast<int>(rank(sum));

  // t_M t_M' = nu on L_C: composing t_M after t_M' is T_M' T_M in row convention.
  QMatrix binv = inverse(b);
  QMatrix m_l = out.m * binv, mp_l = out.m_prime * binv;
  if (!is_rssd(lc.lattice, m_l) || !is_rssd(lc.lattice, mp_l)) rep.fail("M or M' is not RSSD in L_C");
  QMatrix tm = rssd_involution(lc.lattice, m_l).matrix;
  QMatrix tmp = rssd_involution(lc.lattice, mp_l).matrix;
  QMatrix nu_l = restrict_isometry(lc, nu).matrix;
  bool composed = tmp * tm == nu_l;
  if (!composed) rep.fail("t_M t_M' != nu");
  rep.payload["t_M_t_Mprime_equals_nu"] = composed;
  rep.payload["reverse_order_equals_nu_inverse"] = tm * tmp == inverse(nu_l);
  return out;
}

Report verify_5b(bool count_norm4) {
  Report rep;
  const Code code = builtin_code("5B");

  CodeProperties props = code_properties(code);
  if (props.size != 256) rep.fail("|C| = " + std::to_string(props.size));
  if (!props.self_dual) rep.fail("C is not self-dual");
  if (!props.totally_isotropic) rep.fail("C is not totally isotropic");
  if (!props.nu_invariant) rep.fail("C is not nu-invariant");
  if (!props.parity_law) rep.fail("weight parity law fails");
  const std::map<int, long long> expected{{0, 1}, {4, 130}, {6, 120}, {8, 5}};
  if (props.weight_distribution != expected) rep.fail("weight distribution differs from {0:1,4:130,6:120,8:5}");
  rep.payload["code"] = code_properties_report(code).payload;

  TypeCounts types = classify_weight4(code);
  const std::array<int, 4> type_expected{5, 5, 60, 60};
  if (types.by_invariant != type_expected) rep.fail("invariant type counts differ from (5,5,60,60)");
  if (types.by_orbit != type_expected) rep.fail("orbit type counts differ from (5,5,60,60)");
  if (!types.unclassified.empty()) rep.fail(std::to_string(types.unclassified.size()) + " unclassified weight-4 words");
  if (!types.orbits_match_invariant) rep.fail("orbits and invariant classes disagree");
  rep.payload["types"] = {{"invariant", types.by_invariant}, {"orbit", types.by_orbit}};

  CodeLattice lc = build_lattice(code);
  const Lattice& l = lc.lattice;
  if (!lc.even) rep.fail("L_C is not even");
  if (l.rank() != 16) rep.fail("L_C has rank " + std::to_string(l.rank()));
  if (det(l) != 625) rep.fail("det L_C = " + to_string(det(l)));
  if (!shell(l, 2).empty()) rep.fail("L_C has roots");

  const QMatrix& b = *l.parent_basis;
  const QMatrix binv = inverse(b);
  Isometry nu = restrict_isometry(lc, ambient_nu(5, 4));
  if (matrix_order(nu.matrix, 10) != 5 || !is_fixed_point_free(nu.matrix)) rep.fail("nu is not fixed point free of order 5 on L_C");

  DiscriminantGroup dg = discriminant_group(l);
  if (dg.invariant_factors != std::vector<Integer>(4, Integer(5))) rep.fail("discriminant group is not (Z_5)^4");

  std::vector<QVector> lambdas;
  for (int i = 0; i < 4; ++i) {
    QVector amb(16, Rational(0));
    auto lam = lambda_p5();
    for (int j = 0; j < 4; ++j) amb[4 * i + j] = lam[j];
    lambdas.push_back(mul(amb, binv));
  }
  QMatrix lam_rows = QMatrix::from_rows(lambdas);
  QMatrix dual_basis = inverse(l.gram);
  if (!rational_span_contains(dual_basis, lam_rows)) rep.fail("lambda_i not in L_C*");
  QMatrix glued = vstack(QMatrix::identity(16), lam_rows);
  if (!rational_span_contains(glued, dual_basis)) rep.fail("lambda_i do not generate L_C*/L_C");
  nlohmann::json q_vals = nlohmann::json::array(), f_vals = nlohmann::json::array();
  for (int i = 0; i < 4; ++i) {
    Integer q1 = discriminant_q(l, lambdas[i], 5);
    Integer q2 = discriminant_q(l, scale(Rational(2), lambdas[i]), 5);
    if (q1 != 4) rep.fail("q(lambda_" + std::to_string(i + 1) + ") = " + q1.str());
    if (q2 != 1) rep.fail("q(2 lambda_" + std::to_string(i + 1) + ") = " + q2.str());
    q_vals.push_back({{"q", q1.str()}, {"q_double", q2.str()}});
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 4; ++j) {
      Rational f = Rational(5) * l.inner(lambdas[i], lambdas[j]);
      if (f != (i == j ? 8 : 0)) rep.fail("5<lambda_i, lambda_j> differs from 8 delta_ij");
      row.push_back(to_string(f));
    }
    f_vals.push_back(row);
  }
  rep.payload["lambda_q"] = q_vals;
  rep.payload["lambda_f"] = f_vals;
  rep.payload["lambda_f_mod5_diagonal"] = static_cast<int>(mod_z(num(Rational(5) * l.inner(lambdas[0], lambdas[0])), 5));

  QMatrix image = dual_basis * (QMatrix::identity(16) - nu.matrix);
  bool one_minus_nu = rational_span_contains(image, QMatrix::identity(16)) &&
                      rational_span_contains(QMatrix::identity(16), image);
  if (!one_minus_nu) rep.fail("(1-nu)L_C* != L_C");

  EE8Pair pair = build_ee8_pair();
  rep.merge(pair.report);
  rep.payload["ee8"] = pair.report.payload;

  if (count_norm4) rep.payload["shell4"] = shell(l, 4).size();
  rep.payload["det"] = to_string(det(l));
  return rep;
}

}  // namespace paraf
