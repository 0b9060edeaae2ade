#include "paraf/fusion_ring.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace paraf {

namespace {

void check_level(int k) {
  if (k < 2) throw std::invalid_argument("level k must be at least 2, got " + std::to_string(k));
}

int mod(int a, int m) { return static_cast<int>(mod_ll(a, m)); }

// Weight formula for a presentation with 0 <= j <= i <= k.
Rational weight_formula(int i, int j, int k) {
  const long long d = i - 2 * j;
  long long numer = static_cast<long long>(k) * d - d * d + 2LL * k * (i - j + 1) * j;
  return Rational(numer, 2LL * k * (k + 2));
}

}  // namespace

IrrLabel canonical_label(int i, int j, int k) {
  check_level(k);
  if (i < 0 || i > k) throw std::invalid_argument("label index i=" + std::to_string(i) + " outside [0,k]");
  j = mod(j, k);
  if (j < i) return {i, j, k};
  return {k - i, mod(j - i, k), k};
}

IrrLabel vacuum(int k) { return canonical_label(k, 0, k); }
IrrLabel simple_current(int p, int k) { return canonical_label(k, p, k); }

std::vector<IrrLabel> all_labels(int k) {
  check_level(k);
  std::vector<IrrLabel> out;
  for (int i = 1; i <= k; ++i)
    for (int j = 0; j < i; ++j) out.push_back({i, j, k});
  return out;
}

TildeLabel to_tilde(const IrrLabel& x) { return {x.i, mod(x.i - 2 * x.j, 2 * x.k), x.k}; }

IrrLabel from_tilde(const TildeLabel& t) {
  check_level(t.k);
  if (mod(t.i - t.l, 2) != 0) throw std::invalid_argument("tilde label needs i = l mod 2");
  return canonical_label(t.i, (t.i - t.l) / 2, t.k);
}

FusionVector fuse(const IrrLabel& a, const IrrLabel& b) {
  if (a.k != b.k) throw std::invalid_argument("fusion of labels at different levels");
  const int k = a.k;
  FusionVector out;
  const int lo = std::abs(a.i - b.i);
  const int hi = std::min(a.i + b.i, 2 * k - a.i - b.i);
  for (int r = lo; r <= hi; r += 2) {
    const int twice = 2 * a.j - a.i + 2 * b.j - b.i + r;
    out[canonical_label(r, twice / 2, k)] += 1;
  }
  return out;
}

FusionVector fuse(const FusionVector& a, const FusionVector& b, const FuseFn& rule) {
  FusionVector out;
  for (const auto& [x, m] : a)
    for (const auto& [y, n] : b)
      for (const auto& [z, c] : rule(x, y)) out[z] += m * n * c;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

IrrLabel theta_dual(const IrrLabel& x) {
  if (x.k < 3) throw std::invalid_argument("theta is trivial at level 2");
  return canonical_label(x.i, x.i - x.j, x.k);
}

Rational conformal_weight(const IrrLabel& x) {
  IrrLabel c = canonical_label(x.i, x.j, x.k);
  Rational h = weight_formula(c.i, c.j, c.k);
  // The other presentation (k-i, j-i mod k) is admissible only when j = 0.
  if (c.j == 0) {
    Rational alt = weight_formula(c.k - c.i, c.k - c.i, c.k);
    if (alt != h) throw std::logic_error("weight differs between presentations of " + to_string(c));
  }
  return h;
}

IrrLabel sigma_label(int j, int k) { return canonical_label(2 * j, j, k); }

bool is_sigma_type(const IrrLabel& x) {
  for (int j = 0; j <= x.k / 2; ++j)
    if (sigma_label(j, x.k) == x) return true;
  return false;
}

Report verify_zk_grading(int k) { return verify_zk_grading(k, [](const IrrLabel& a, const IrrLabel& b) { return fuse(a, b); }); }

Report verify_zk_grading(int k, const FuseFn& rule) {
  Report rep;
  const auto labels = all_labels(k);
  long long checked = 0;
  for (const auto& a : labels)
    for (const auto& b : labels) {
      const int la = to_tilde(a).l, lb = to_tilde(b).l;
      for (const auto& [c, m] : rule(a, b)) {
        ++checked;
        if (mod(to_tilde(c).l - la - lb, k) != 0)
          rep.fail(to_string(a) + " x " + to_string(b) + " -> " + to_string(c) + " breaks l mod k");
      }
    }
  for (int i = 0; i <= k; ++i)
    for (int l = mod(i, 2); l < 2 * k; l += 2) {
      TildeLabel t{i, l, k}, u{k - i, mod(k + l, 2 * k), k};
      if (from_tilde(t) != from_tilde(u) || mod(t.l - u.l, k) != 0)
        rep.fail("identification (i,l)~(k-i,k+l) fails at i=" + std::to_string(i) + " l=" + std::to_string(l));
    }
  rep.payload = {{"k", k}, {"terms_checked", checked}};
  return rep;
}

Rational minimal_model_weight(int m, int r, int s) {
  if (m < 1) throw std::invalid_argument("minimal model index m must be positive");
  if (r < 1 || r > m + 1 || s < 1 || s > m + 2) throw std::invalid_argument("Kac label (r,s) out of range");
  const long long t = static_cast<long long>(r) * (m + 3) - static_cast<long long>(s) * (m + 2);
  return Rational(t * t - 1, 4LL * (m + 2) * (m + 3));
}

Report verify_weight_one_tops(int k) {
  if (k < 3) throw std::invalid_argument("weight-one check needs k >= 3");
  Report rep;
  const Rational h21 = conformal_weight(canonical_label(2, 1, k));
  nlohmann::json sums = nlohmann::json::array();
  for (int p = 1; p <= k - 1; ++p) {
    Rational total = minimal_model_weight(p, 1, 3) + h21;
    for (int m = p + 1; m <= k - 1; ++m) total += minimal_model_weight(m, 3, 3);
    sums.push_back(to_string(total));
    if (total != 1) rep.fail("p=" + std::to_string(p) + " sums to " + to_string(total));
  }
  rep.payload = {{"k", k}, {"sums", sums}};
  return rep;
}

Rational twisted_conformal_weight(int p) {
  if (p < 3) throw std::invalid_argument("twisted weight needs p >= 3");
  Rational s = 0;
  for (int i = 1; i < p; ++i) s += Rational(static_cast<long long>(i) * (p - i));
  s /= Rational(4LL * p * p);
  if (s != Rational(static_cast<long long>(p - 1) * (p + 1), 24LL * p))
    throw std::logic_error("twisted weight disagrees with closed form");
  if (is_integer(s)) throw std::logic_error("twisted weight unexpectedly integral");
  return s;
}

Rational untwisted_coset_weight(int j, int p) {
  if (j < 0 || j > p - 1) throw std::invalid_argument("coset index out of range");
  return Rational(static_cast<long long>(j) * (p - j), p);
}

std::string to_string(const IrrLabel& x) { return "M[" + std::to_string(x.i) + "," + std::to_string(x.j) + "]"; }

std::string to_string(const FusionVector& v) {
  // Largest i first so the output reads like the usual r-descending sum.
  std::ostringstream os;
  bool first = true;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    os << (first ? "" : " + ");
    if (it->second != 1) os << it->second << " ";
    os << to_string(it->first);
    first = false;
  }
  return first ? "0" : os.str();
}

IrrLabel parse_label(const std::string& text, int k) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("label must look like i,j: " + text);
  int i = 0, j = 0;
  try {
    std::size_t p1 = 0, p2 = 0;
    i = std::stoi(text.substr(0, comma), &p1);
    j = std::stoi(text.substr(comma + 1), &p2);
    if (p1 != comma || p2 != text.size() - comma - 1) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed label: " + text);
  }
  return canonical_label(i, j, k);
}

}  // namespace paraf
