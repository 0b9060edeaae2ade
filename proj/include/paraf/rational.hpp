#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace paraf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }
inline bool is_integer(const Rational& r) { return den(r) == 1; }

// Floor and ceiling of an exact rational.
Integer floor_q(const Rational& r);
Integer ceil_q(const Rational& r);

// Non-negative residue of a modulo m (m > 0).
Integer mod_z(const Integer& a, const Integer& m);
long long mod_ll(long long a, long long m);

// Fractional part in [0,1).
Rational frac(const Rational& r);

// Largest s with s*s <= n, n >= 0.
Integer isqrt(const Integer& n);

// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);
Rational parse_rational(std::string_view text);

}  // namespace paraf
