#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "thermocat/thermocat.hpp"

// Shorthand constructors used across the test suite.
inline thermocat::ProbVec<thermocat::Rational> rvec(std::initializer_list<const char*> xs) {
  std::vector<thermocat::Rational> v;
  v.reserve(xs.size());
  for (const char* x : xs) v.push_back(thermocat::parse_rational(x));
  return thermocat::ProbVec<thermocat::Rational>{std::move(v)};
}

inline thermocat::ProbVec<double> dvec(std::initializer_list<double> xs) {
  return thermocat::ProbVec<double>{std::vector<double>(xs)};
}

inline thermocat::Rational rat(const char* s) { return thermocat::parse_rational(s); }
