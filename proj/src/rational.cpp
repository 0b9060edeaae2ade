#include "paraf/rational.hpp"

#include <stdexcept>

namespace paraf {

Integer floor_q(const Rational& r) {
  Integer n = num(r), d = den(r);
  Integer q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Integer ceil_q(const Rational& r) { return -floor_q(-r); }

Integer mod_z(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

long long mod_ll(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

Rational frac(const Rational& r) { return r - Rational(floor_q(r)); }

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative number");
  return boost::multiprecision::sqrt(n);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

namespace {
Integer parse_integer(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') pos = 1;
  if (pos == s.size()) throw std::invalid_argument("malformed integer: " + std::string(s));
  for (std::size_t i = pos; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer: " + std::string(s));
  Integer z(std::string(s[0] == '+' ? s.substr(1) : s));
  return z;
}
}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer d = parse_integer(text.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Integer n = parse_integer(text.substr(0, slash));
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n) / Rational(d);
}

}  // namespace paraf
