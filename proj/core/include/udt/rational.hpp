#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace udt {

// Every quantity in this library is an exact rational; nothing is ever
// rounded implicitly. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 2^e for any integer e (negative exponents give exact fractions).
inline Rational pow2(long long e) {
  Integer p = Integer(1) << static_cast<unsigned>(e < 0 ? -e : e);
  return e < 0 ? Rational(1, p) : Rational(p);
}

// 10^e, same conventions.
inline Rational pow10(long long e) {
  Integer p = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(e < 0 ? -e : e));
  return e < 0 ? Rational(1, p) : Rational(p);
}

inline Rational rat_pow(const Rational& b, unsigned e) {
  Rational out(1);
  Rational base = b;
  for (unsigned k = e; k != 0; k >>= 1) {
    if (k & 1) out *= base;
    base *= base;
  }
  return out;
}

// Serialized form: "p/q", or just "p" when q = 1, sign on the numerator.
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

// Strict parser for the wire format above. Rejects anything else
// (whitespace, floats, zero/negative denominators).
inline Rational parse_rational(std::string_view s) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
  };
  if (s.empty()) return fail();
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') {
    neg = s[pos] == '-';
    ++pos;
  }
  std::size_t num_begin = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == num_begin) return fail();
  Integer num(std::string(s.substr(num_begin, pos - num_begin)));
  if (neg) num = -num;
  if (pos == s.size()) return Rational(num);
  if (s[pos] != '/') return fail();
  ++pos;
  std::size_t den_begin = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == den_begin || pos != s.size()) return fail();
  Integer den(std::string(s.substr(den_begin)));
  if (den == 0) return fail();
  return Rational(num, den);
}

// Decimal rendering to `digits` significant digits, round half away from
// zero. Advisory only: certified values always travel as "p/q".
inline std::string decimal_string(const Rational& r, int digits = 12) {
  if (r == 0) return "0";
  Integer n = numerator(r), d = denominator(r);
  bool neg = n < 0;
  if (neg) n = -n;
  // decimal exponent: number of digits of the integer part of n/d
  long long exp10 = 0;
  Integer a = n, b = d;
  while (a >= b) { b *= 10; ++exp10; }
  while (a * 10 < b) { a *= 10; --exp10; }  // a/b in [1/10, 1)
  // scaled = round(n/d * 10^(digits - exp10))
  long long shift = digits - exp10;
  Integer num = n, den = d;
  if (shift >= 0)
    num *= boost::multiprecision::pow(Integer(10), static_cast<unsigned>(shift));
  else
    den *= boost::multiprecision::pow(Integer(10), static_cast<unsigned>(-shift));
  Integer q = (num * 2 + den) / (den * 2);
  std::string m = q.str();
  if (static_cast<long long>(m.size()) > digits) {  // rounding carried over
    ++exp10;
    m.erase(m.size() - 1);
  }
  while (m.size() > 1 && m.back() == '0') m.pop_back();
  std::string out = neg ? "-" : "";
  if (exp10 > 0 && exp10 <= digits) {
    if (static_cast<long long>(m.size()) <= exp10)
      m.append(static_cast<std::size_t>(exp10) - m.size(), '0');
    out += m.substr(0, static_cast<std::size_t>(exp10));
    if (m.size() > static_cast<std::size_t>(exp10)) {
      out += '.';
      out += m.substr(static_cast<std::size_t>(exp10));
    }
  } else if (exp10 <= 0 && exp10 > -6) {
    out += "0.";
    out.append(static_cast<std::size_t>(-exp10), '0');
    out += m;
  } else {
    out += m.substr(0, 1);
    if (m.size() > 1) {
      out += '.';
      out += m.substr(1);
    }
    out += 'e';
    out += std::to_string(exp10 - 1);
  }
  return out;
}

}  // namespace udt
