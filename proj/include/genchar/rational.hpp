#pragma once

// Exact rational arithmetic used throughout the library. Every value is a
// reduced fraction with positive denominator; no floating point anywhere.

#include <cctype>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace genchar {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// (x)_k = x(x-1)...(x-k+1), the empty product for k = 0.
inline Int falling_factorial(long long x, int k) {
  if (k < 0) throw std::invalid_argument("falling factorial needs k >= 0");
  Int f = 1;
  for (int i = 0; i < k; ++i) f *= Int(x - i);
  return f;
}

// "p/q" reduced with q > 0, integers without the "/1".
inline std::string to_fraction_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(const std::string& s) {
  auto is_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) throw std::invalid_argument("bad rational: " + s);
    return Rational(Int(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) throw std::invalid_argument("bad rational: " + s);
  Int d(den);
  if (d == 0) throw std::invalid_argument("bad rational: zero denominator");
  return Rational(Int(num), d);
}

}  // namespace genchar
