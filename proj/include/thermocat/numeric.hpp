#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace thermocat {

// Exact arithmetic backend for everything that certifies (majorization,
// LP optima, catalyst families). Floats are used for sweeps and anything
// involving exp/log.
using Rational = boost::multiprecision::mpq_rational;

template <class T> struct is_exact_scalar : std::false_type {};
template <> struct is_exact_scalar<Rational> : std::true_type {};
template <class T>
inline constexpr bool is_exact_scalar_v = is_exact_scalar<T>::value;

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
constexpr double to_double(double x) { return x; }

// ratio<T>(p, q): the scalar p/q in the requested backend.
template <class T> T ratio(std::int64_t num, std::int64_t den);
template <> inline Rational ratio<Rational>(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  return Rational(num, den);
}
template <> inline double ratio<double>(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  return static_cast<double>(num) / static_cast<double>(den);
}

inline Rational abs_of(const Rational& x) { return x < 0 ? Rational(-x) : x; }
inline double abs_of(double x) { return std::fabs(x); }

// Integer power with nonnegative exponent (exact for Rational).
template <class T>
T pow_int(T base, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
  T acc = ratio<T>(1, 1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// m^a as int64 with overflow guard; returns -1 on overflow past `cap`.
inline std::int64_t ipow_checked(std::int64_t m, std::int64_t a, std::int64_t cap) {
  std::int64_t n = 1;
  for (std::int64_t i = 0; i < a; ++i) {
    if (n > cap / m) return -1;
    n *= m;
  }
  return n;
}

// Parses "p", "p/q" or "-p/q" (base 10). Division canonicalizes, so "2/4"
// comes back as 1/2.
inline Rational parse_rational(std::string_view s) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  const auto slash = s.find('/');
  try {
    using Int = boost::multiprecision::mpz_int;
    if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
    Int num{std::string(trim(s.substr(0, slash)))};
    Int den{std::string(trim(s.substr(slash + 1)))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num) / Rational(den);
  } catch (const std::exception& e) {
    throw std::invalid_argument("parse_rational: cannot parse '" + std::string(s) +
                                "': " + e.what());
  }
}

inline std::string to_string(const Rational& x) { return x.str(); }

// Thrown when an input is structurally valid but the requested object
// does not exist (no feasible transformation, E below the ground level, ...).
// The CLI maps this to exit code 3.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace thermocat
