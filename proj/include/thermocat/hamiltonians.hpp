#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thermocat/numeric.hpp"
#include "thermocat/prob_vec.hpp"

namespace thermocat {

// Spectra are spectrum-at-temperature objects: every formula downstream
// couples the levels with an inverse temperature, so beta travels with them.

// Energy levels of a finite-dimensional Hamiltonian, ascending.
struct FiniteSpectrum {
  std::vector<double> levels;
  double beta = 1.0;
};

inline void validate_beta(double beta, const char* who) {
  if (!(beta > 0) || !std::isfinite(beta))
    throw std::invalid_argument(std::string(who) + ": beta must be a positive real");
}

inline void validate_spectrum(const FiniteSpectrum& s) {
  if (s.levels.empty()) throw std::invalid_argument("FiniteSpectrum: empty spectrum");
  for (std::size_t i = 0; i < s.levels.size(); ++i) {
    if (!std::isfinite(s.levels[i]))
      throw std::invalid_argument("FiniteSpectrum: non-finite level");
    if (i > 0 && s.levels[i] < s.levels[i - 1])
      throw std::invalid_argument("FiniteSpectrum: levels must be ascending");
  }
  validate_beta(s.beta, "FiniteSpectrum");
}

inline FiniteSpectrum make_finite_spectrum(std::vector<double> levels, double beta) {
  FiniteSpectrum s{std::move(levels), beta};
  validate_spectrum(s);
  return s;
}

// n levels, all at energy zero (fully degenerate Hamiltonian).
inline FiniteSpectrum trivial_spectrum(std::int64_t n, double beta = 1.0) {
  if (n < 1) throw std::invalid_argument("trivial_spectrum: n must be >= 1");
  return make_finite_spectrum(std::vector<double>(static_cast<std::size_t>(n), 0.0), beta);
}

inline bool is_degenerate(const FiniteSpectrum& s) {
  return s.levels.front() == s.levels.back();
}

// Countably infinite ascending spectrum, described by a 1-based level
// function. `tail_gap` is a Delta > 0 with E_{j+1} - E_j >= Delta from some
// index on; the partition-function tail bound relies on it. `closed_form_Z`,
// when available (the built-in families), lets tests cross-check the
// summation bracket.
struct UnboundedSpectrum {
  std::string family;  // "harmonic" | "linear_offset" | "custom"
  std::function<double(std::int64_t)> level;
  double beta = 1.0;
  double tail_gap = 0.0;
  std::optional<double> closed_form_Z;
  std::vector<double> params;  // family parameters, kept for serialization
};

// E_j = hbar_omega * (j - 1), grounded at zero.
inline UnboundedSpectrum harmonic_spectrum(double hbar_omega, double beta) {
  if (!(hbar_omega > 0) || !std::isfinite(hbar_omega))
    throw std::invalid_argument("harmonic_spectrum: hbar_omega must be > 0");
  validate_beta(beta, "harmonic_spectrum");
  UnboundedSpectrum s;
  s.family = "harmonic";
  s.level = [hbar_omega](std::int64_t j) { return hbar_omega * static_cast<double>(j - 1); };
  s.beta = beta;
  s.tail_gap = hbar_omega;
  s.closed_form_Z = 1.0 / (1.0 - std::exp(-beta * hbar_omega));
  s.params = {hbar_omega};
  return s;
}

// E_j = c * (j - 1) + E0.
inline UnboundedSpectrum linear_offset_spectrum(double c, double e0, double beta) {
  if (!(c > 0) || !std::isfinite(c))
    throw std::invalid_argument("linear_offset_spectrum: slope must be > 0");
  if (!(e0 >= 0) || !std::isfinite(e0))
    throw std::invalid_argument("linear_offset_spectrum: offset must be >= 0");
  validate_beta(beta, "linear_offset_spectrum");
  UnboundedSpectrum s;
  s.family = "linear_offset";
  s.level = [c, e0](std::int64_t j) { return c * static_cast<double>(j - 1) + e0; };
  s.beta = beta;
  s.tail_gap = c;
  s.closed_form_Z = std::exp(-beta * e0) / (1.0 - std::exp(-beta * c));
  s.params = {c, e0};
  return s;
}

inline UnboundedSpectrum custom_spectrum(std::function<double(std::int64_t)> level,
                                         double tail_gap, double beta) {
  if (!level) throw std::invalid_argument("custom_spectrum: missing level function");
  validate_beta(beta, "custom_spectrum");
  if (!(tail_gap >= 0) || !std::isfinite(tail_gap))
    throw std::invalid_argument(
        "custom_spectrum: tail_gap must be >= 0 (0 = no tail bound available)");
  UnboundedSpectrum s;
  s.family = "custom";
  s.level = std::move(level);
  s.beta = beta;
  s.tail_gap = tail_gap;
  return s;
}

// Z with a rigorous enclosure: `value` is the midpoint, the true sum lies in
// [value - bracket_width/2, value + bracket_width/2]. Finite spectra are summed
// outright (bracket 0).
struct PartitionResult {
  double value = 0.0;
  double bracket_width = 0.0;
  std::int64_t terms = 0;
};

inline PartitionResult partition_function(const FiniteSpectrum& s) {
  validate_spectrum(s);
  double z = 0.0;
  for (double e : s.levels) z += std::exp(-s.beta * e);
  if (!std::isfinite(z))
    throw std::invalid_argument("partition_function: sum overflow");
  return {z, 0.0, static_cast<std::int64_t>(s.levels.size())};
}

// Sums exp(-beta E_j) until the geometric tail bound
// exp(-beta E_{j+1}) / (1 - exp(-beta Delta)) drops below 1e-15 of the partial
// sum, then returns midpoint + bracket. Levels are checked ascending as they
// stream by, and the gap must have reached Delta before the bound is trusted.
inline PartitionResult partition_function(const UnboundedSpectrum& s) {
  if (!s.level) throw std::invalid_argument("partition_function: missing level function");
  validate_beta(s.beta, "partition_function");
  if (!(s.tail_gap > 0)) {
    if (s.closed_form_Z) return {*s.closed_form_Z, 0.0, 0};
    throw std::invalid_argument(
        "partition_function: unbounded spectrum needs tail_gap > 0 or a closed form");
  }
  const double beta = s.beta;

  const double q = std::exp(-beta * s.tail_gap);  // geometric ratio of the tail
  const double tail_factor = 1.0 / (1.0 - q);
  constexpr std::int64_t kMaxTerms = 20'000'000;

  double partial = 0.0;
  double prev = -std::numeric_limits<double>::infinity();
  int gap_streak = 0;
  for (std::int64_t j = 1; j <= kMaxTerms; ++j) {
    const double ej = s.level(j);
    if (!std::isfinite(ej) || ej < 0)
      throw std::invalid_argument("partition_function: levels must be finite and >= 0");
    if (ej < prev) throw std::invalid_argument("partition_function: levels must be ascending");
    gap_streak = (j > 1 && ej - prev >= s.tail_gap * (1.0 - 1e-9)) ? gap_streak + 1 : 0;
    partial += std::exp(-beta * ej);
    prev = ej;
    const double next = s.level(j + 1);
    const double tail_bound = std::exp(-beta * next) * tail_factor;
    if (gap_streak >= 4 && tail_bound < 1e-15 * partial) {
      return {partial + tail_bound / 2.0, tail_bound, j};
    }
  }
  throw InfeasibleError("partition function not certified finite within iteration cap");
}

// Gibbs weights exp(-beta E_i)/Z together with the partition function.
struct ThermalWeights {
  ProbVec<double> weights;  // descending, because levels ascend
  double Z = 0.0;
};

inline ThermalWeights thermal_weights(const FiniteSpectrum& s) {
  validate_spectrum(s);
  std::vector<double> w(s.levels.size());
  // shift by the ground level so the largest weight is exactly 1 pre-normalization
  const double e0 = s.levels.front();
  double z = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(-s.beta * (s.levels[i] - e0));
    z += w[i];
  }
  for (auto& x : w) x /= z;
  return ThermalWeights{ProbVec<double>{std::move(w)}, z * std::exp(-s.beta * e0)};
}

// Exact thermal weights exist only when every Gibbs factor is the same
// rational, i.e. the spectrum is fully degenerate: uniform 1/n.
inline ProbVec<Rational> thermal_weights_exact(const FiniteSpectrum& s) {
  validate_spectrum(s);
  if (!is_degenerate(s))
    throw std::invalid_argument(
        "thermal_weights_exact: only degenerate spectra have exact weights");
  const auto n = static_cast<std::int64_t>(s.levels.size());
  return ProbVec<Rational>{
      std::vector<Rational>(s.levels.size(), Rational(1, n))};
}

// Smallest cutoff with P[E >= cutoff] <= eps guaranteed by Chebyshev:
// mean + sqrt(variance/eps). For a zero-variance (point-mass) distribution the
// guarantee is void -- the formula then returns the mean itself.
inline double chebyshev_cutoff(double mean, double variance, double eps) {
  if (!(eps > 0) || !(eps < 1) || !std::isfinite(eps))
    throw std::invalid_argument("chebyshev_cutoff: eps must be in (0,1)");
  if (variance < 0 || !std::isfinite(variance) || !std::isfinite(mean))
    throw std::invalid_argument("chebyshev_cutoff: bad moments");
  return mean + std::sqrt(variance / eps);
}

}  // namespace thermocat
