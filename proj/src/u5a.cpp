#include "paraf/u5a.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace paraf {

namespace {

constexpr int kLevel = 5;

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

IrrLabel single(const FusionVector& v) {
  if (v.size() != 1 || v.begin()->second != 1) throw std::logic_error("simple current fusion is not irreducible");
  return v.begin()->first;
}

std::string cell(int i, int j) { return std::to_string(i) + "x" + std::to_string(j); }

}  // namespace

PairLabel make_pair_label(int i1, int j1, int i2, int j2) {
  return {canonical_label(i1, j1, kLevel), canonical_label(i2, j2, kLevel)};
}

std::string to_string(const PairLabel& x) {
  return "[" + std::to_string(x.left.i) + "," + std::to_string(x.left.j) + ";" + std::to_string(x.right.i) + "," +
         std::to_string(x.right.j) + "]";
}

std::string to_string(const UMultiset& m) {
  std::string out;
  for (auto [u, n] : m)
    for (int t = 0; t < n; ++t) out += (out.empty() ? "" : "+") + std::to_string(u);
  return out;
}

U5aGolden load_u5a_golden(const std::string& dir) {
  U5aGolden g;
  const std::string dec_path = dir + "/u5a_decompositions.json";
  auto dec = read_json(dec_path);
  if (!dec.contains("rows") || dec["rows"].size() != 9) throw std::runtime_error(dec_path + ": /rows must have 9 entries");
  for (int r = 0; r < 9; ++r) {
    const auto& row = dec["rows"][r];
    if (row.size() != 5) throw std::runtime_error(dec_path + ": /rows/" + std::to_string(r) + " must have 5 summands");
    for (int s = 0; s < 5; ++s) {
      const auto& t = row[s];
      if (!t.is_array() || t.size() != 4)
        throw std::runtime_error(dec_path + ": /rows/" + std::to_string(r) + "/" + std::to_string(s) + " must be [i1,j1,i2,j2]");
      g.rows[r][s] = make_pair_label(t[0], t[1], t[2], t[3]);
    }
  }
  const std::string wt_path = dir + "/u5a_weights.json";
  auto wt = read_json(wt_path);
  if (wt["weights"].size() != 9 || wt["dimensions"].size() != 9)
    throw std::runtime_error(wt_path + ": /weights and /dimensions must have 9 entries");
  for (int i = 0; i < 9; ++i) {
    g.weights[i] = parse_rational(wt["weights"][i].get<std::string>());
    g.dimensions[i] = wt["dimensions"][i];
  }
  const std::string fu_path = dir + "/u5a_fusion.json";
  auto fu = read_json(fu_path);
  for (std::size_t n = 0; n < fu["products"].size(); ++n) {
    const auto& p = fu["products"][n];
    int i = p["i"], j = p["j"];
    if (i < 0 || j < 0 || i > 8 || j > 8 || i > j)
      throw std::runtime_error(fu_path + ": /products/" + std::to_string(n) + " needs 0 <= i <= j <= 8");
    UMultiset m;
    for (int k : p["result"]) ++m[k];
    g.products[{i, j}] = m;
  }
  if (g.products.size() != 45) throw std::runtime_error(fu_path + ": expected 45 distinct products");
  return g;
}

Rational b_pairing(int p, int q, const PairLabel& x) {
  Rational v(p * (x.left.i - 2 * x.left.j) + q * (x.right.i - 2 * x.right.j), kLevel);
  return v - Rational(floor_q(v));
}

std::vector<PairLabel> irr0_list() {
  std::vector<PairLabel> out;
  for (const auto& a : all_labels(kLevel))
    for (const auto& b : all_labels(kLevel)) {
      PairLabel x{a, b};
      bool ok = true;
      for (int p = 0; p < kLevel && ok; ++p) ok = b_pairing(p, 2 * p, x) == 0;
      if (ok) out.push_back(x);
    }
  return out;
}

std::array<PairLabel, 5> simple_current_orbit(const PairLabel& x) {
  std::array<PairLabel, 5> out;
  for (int j = 0; j < kLevel; ++j)
    out[j] = {single(fuse(simple_current(j, kLevel), x.left)),
              single(fuse(simple_current((2 * j) % kLevel, kLevel), x.right))};
  return out;
}

std::vector<std::vector<PairLabel>> computed_orbits() {
  std::set<PairLabel> seen;
  std::vector<std::vector<PairLabel>> orbits;
  for (const auto& x : irr0_list()) {
    if (seen.count(x)) continue;
    auto orb = simple_current_orbit(x);
    std::vector<PairLabel> v(orb.begin(), orb.end());
    std::sort(v.begin(), v.end());
    seen.insert(v.begin(), v.end());
    orbits.push_back(v);
  }
  return orbits;
}

int induce(const PairLabel& x, const U5aGolden& g) {
  auto orb = simple_current_orbit(x);
  std::set<PairLabel> o(orb.begin(), orb.end());
  for (int r = 0; r < 9; ++r)
    if (std::set<PairLabel>(g.rows[r].begin(), g.rows[r].end()) == o) return r;
  throw std::domain_error(to_string(x) + " does not induce to any listed module");
}

std::pair<Rational, int> u_weight_dim(int i, const U5aGolden& g) {
  if (i < 0 || i > 8) throw std::invalid_argument("U label must be in 0..8");
  Rational best = -1;
  int count = 0;
  for (const auto& x : g.rows[i]) {
    Rational h = conformal_weight(x.left) + conformal_weight(x.right);
    if (best < 0 || h < best) {
      best = h;
      count = 1;
    } else if (h == best) {
      ++count;
    }
  }
  return {best, count};
}

PairVector pair_fuse(const PairLabel& x, const PairLabel& y) {
  PairVector out;
  for (auto [a, m] : fuse(x.left, y.left))
    for (auto [b, n] : fuse(x.right, y.right)) out[{a, b}] += m * n;
  return out;
}

UMultiset u_fuse(int i, int j, const U5aGolden& g, int ri, int rj) {
  UMultiset out;
  for (auto [z, m] : pair_fuse(g.rows.at(i).at(ri), g.rows.at(j).at(rj))) out[induce(z, g)] += m;
  return out;
}

std::vector<std::vector<UMultiset>> u_fusion_table(const U5aGolden& g) {
  std::vector<std::vector<UMultiset>> t(9, std::vector<UMultiset>(9));
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) t[i][j] = u_fuse(i, j, g);
  return t;
}

PairLabel contragredient(const PairLabel& x) {
  auto dual_of = [](const IrrLabel& a) {
    for (const auto& b : all_labels(kLevel)) {
      auto f = fuse(a, b);
      auto it = f.find(vacuum(kLevel));
      if (it != f.end() && it->second == 1) return b;
    }
    throw std::logic_error("no contragredient for " + paraf::to_string(a));
  };
  return {dual_of(x.left), dual_of(x.right)};
}

Report verify_appendix(const U5aGolden& g) {
  Report rep;
  const auto irr0 = irr0_list();
  if (irr0.size() != 45) rep.fail("|Irr0| = " + std::to_string(irr0.size()));
  rep.payload["irr0_size"] = irr0.size();

  // Orbits: computed partition against the listed rows, up to order.
  auto orbits = computed_orbits();
  std::set<std::set<PairLabel>> computed, listed;
  for (const auto& o : orbits) {
    if (o.size() != 5) rep.fail("orbit of size " + std::to_string(o.size()));
    computed.insert({o.begin(), o.end()});
  }
  for (int r = 0; r < 9; ++r) {
    std::set<PairLabel> s(g.rows[r].begin(), g.rows[r].end());
    if (s.size() != 5) rep.fail("row " + std::to_string(r) + " has repeated summands");
    if (!computed.count(s)) rep.fail("row " + std::to_string(r) + " is not a computed orbit");
    listed.insert(s);
    // The listed order follows j = 0..4 from the first summand.
    auto orb = simple_current_orbit(g.rows[r][0]);
    for (int j = 0; j < 5; ++j)
      if (orb[j] != g.rows[r][j]) rep.fail("row " + std::to_string(r) + " summand " + std::to_string(j) + " out of orbit order");
  }
  if (computed != listed || orbits.size() != 9) rep.fail("computed orbits differ from the listed rows");
  rep.payload["orbit_count"] = orbits.size();

  // Weight and dimension table.
  nlohmann::json wd = nlohmann::json::array();
  for (int i = 0; i < 9; ++i) {
    auto [w, d] = u_weight_dim(i, g);
    if (w != g.weights[i]) rep.fail("weight of U" + std::to_string(i) + ": computed " + to_string(w) + ", listed " + to_string(g.weights[i]));
    if (d != g.dimensions[i]) rep.fail("dimension of U" + std::to_string(i) + ": computed " + std::to_string(d) + ", listed " + std::to_string(g.dimensions[i]));
    wd.push_back({{"weight", to_string(w)}, {"dimension", d}});
  }
  rep.payload["weights"] = wd;

  // Fusion table, cell by cell, with representative independence.
  auto table = u_fusion_table(g);
  nlohmann::json mismatched = nlohmann::json::array();
  int diffs = 0;
  bool multiplicity_free = true, independent = true, commutative = true;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      const UMultiset& m = table[i][j];
      for (auto [u, n] : m) multiplicity_free = multiplicity_free && n == 1;
      if (table[j][i] != m) commutative = false;
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
          if (u_fuse(i, j, g, a, b) != m) {
            independent = false;
            rep.fail("cell " + cell(i, j) + " depends on representatives (" + std::to_string(a) + "," + std::to_string(b) + ")");
          }
      if (i > j) continue;
      auto it = g.products.find({i, j});
      if (it == g.products.end()) {
        rep.fail("cell " + cell(i, j) + " missing from the listed table");
        ++diffs;
      } else if (it->second != m) {
        rep.fail("cell " + cell(i, j) + ": computed " + to_string(m) + ", listed " + to_string(it->second));
        mismatched.push_back(cell(i, j));
        ++diffs;
      }
    }
  if (!multiplicity_free) rep.fail("some fusion coefficient exceeds 1");
  if (!commutative) rep.fail("fusion table is not symmetric");
  for (int i = 0; i < 9; ++i)
    if (table[0][i] != UMultiset{{i, 1}}) rep.fail("U0 is not the identity on U" + std::to_string(i));

  // Contragredients.
  nlohmann::json duals = nlohmann::json::array();
  for (int i = 0; i < 9; ++i) {
    int d = induce(contragredient(g.rows[i][0]), g);
    auto prod = table[i][d];
    auto it = prod.find(0);
    if (it == prod.end() || it->second != 1) rep.fail("U" + std::to_string(i) + " x its contragredient lacks U0 once");
    duals.push_back(d);
  }
  rep.payload["contragredient"] = duals;
  rep.payload["table_diffs"] = diffs;
  rep.payload["mismatched_cells"] = mismatched;
  rep.payload["multiplicity_free"] = multiplicity_free;
  rep.payload["representative_independent"] = independent;
  return rep;
}

}  // namespace paraf
