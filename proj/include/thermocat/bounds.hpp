#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thermocat/hamiltonians.hpp"
#include "thermocat/numeric.hpp"
#include "thermocat/prob_vec.hpp"

namespace thermocat {

// A lower bound on catalytic error together with everything that produced it.
// `bound` is stated in the convention of the formula it implements ("trace"
// for half-l1 trace distance, "l1" for a plain absolute sum); the canonical
// field always converts to trace distance so reports stay comparable.
struct BoundReport {
  std::string kind;  // dim_diag | dim_arbitrary | energy_diag | energy_arbitrary | energy_maintext
  double bound = 0.0;
  std::string convention;  // "trace" | "l1"
  double bound_canonical = 0.0;
  std::map<std::string, double> intermediates;
  std::vector<std::string> notes;
  std::optional<Rational> bound_exact;  // set when the inputs admit an exact value
};

// Gibbs amplification factor of the system being erased:
// A = Z_S * e^{beta E_max} = sum_i e^{beta (E_max - E_i)} >= dim-count of the
// top level; A equals the dimension m for a fully degenerate spectrum.
inline double amplification_factor(const FiniteSpectrum& sys) {
  validate_spectrum(sys);
  const double emax = sys.levels.back();
  double a = 0.0;
  for (double e : sys.levels) a += std::exp(sys.beta * (emax - e));
  return a;
}

// Error floor for erasing `sys` with a catalyst whose spectrum is `cat`:
// (A - 1) e^{-beta E_max^C} / Z_C, in trace-distance units. For fully
// degenerate spectra this is exactly (m-1)/n and the report carries the
// rational value as well.
inline BoundReport dim_bound_diag(const FiniteSpectrum& sys, const FiniteSpectrum& cat) {
  validate_spectrum(sys);
  validate_spectrum(cat);
  if (sys.beta != cat.beta)
    throw std::invalid_argument("dim_bound_diag: beta mismatch between spectra");

  const double a = amplification_factor(sys);
  const double zc = partition_function(cat).value;
  const double emax_c = cat.levels.back();
  const double bound = (a - 1.0) * std::exp(-cat.beta * emax_c) / zc;

  BoundReport rep;
  rep.kind = "dim_diag";
  rep.bound = bound;
  rep.convention = "trace";
  rep.bound_canonical = bound;
  rep.intermediates = {{"A", a},
                       {"Z_S", partition_function(sys).value},
                       {"Z_C", zc},
                       {"E_max_S", sys.levels.back()},
                       {"E_max_C", emax_c},
                       {"beta", sys.beta}};
  if (is_degenerate(sys) && is_degenerate(cat)) {
    rep.bound_exact = Rational(static_cast<std::int64_t>(sys.levels.size()) - 1,
                               static_cast<std::int64_t>(cat.levels.size()));
    rep.notes.push_back("degenerate spectra: bound is exactly (m-1)/n");
  }
  return rep;
}

// Same error floor driven by a measured divergence increase kappa1 instead of
// the system spectrum: (2^{kappa1} - 1) e^{-beta E_max^C} / Z_C. A
// non-positive kappa1 makes the bound vacuous; it clamps to 0 with a note.
inline BoundReport dim_bound_arbitrary(double kappa1, const FiniteSpectrum& cat) {
  validate_spectrum(cat);
  if (!std::isfinite(kappa1))
    throw std::invalid_argument("dim_bound_arbitrary: kappa1 must be finite");

  BoundReport rep;
  rep.kind = "dim_arbitrary";
  rep.convention = "trace";
  const double zc = partition_function(cat).value;
  const double emax_c = cat.levels.back();
  rep.intermediates = {{"kappa", kappa1},
                       {"Z_C", zc},
                       {"E_max_C", emax_c},
                       {"beta", cat.beta}};
  if (kappa1 <= 0.0) {
    rep.bound = 0.0;
    rep.bound_canonical = 0.0;
    rep.notes.push_back("kappa1 <= 0: transformation does not increase the max-divergence; bound vacuous");
    return rep;
  }
  const double bound = (std::exp2(kappa1) - 1.0) * std::exp(-cat.beta * emax_c) / zc;
  rep.bound = bound;
  rep.bound_canonical = bound;
  return rep;
}

// f(a) = a^2 / (2 (a^2 + 1)), the split-inequality constant. Only proven for
// a >= 2, hence the domain check; the value lives in [2/5, 1/2).
inline double f_of(double a) {
  if (!(a >= 2.0) || !std::isfinite(a))
    throw std::invalid_argument("f_of: a must be >= 2");
  return 0.5 * a * a / (a * a + 1.0);
}

// sqrt(x) - sqrt(a) sqrt(y) <= sqrt(|x - y|) - f(a) y on [0,1]^2, a >= 2.
// Fuzz target only; 1e-12 of slack absorbs rounding at the tight corners.
inline bool split_inequality_holds(double x, double y, double a) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
    throw std::invalid_argument("split_inequality_holds: x, y must lie in [0,1]");
  const double fa = f_of(a);  // validates a
  const double lhs = std::sqrt(x) - std::sqrt(a) * std::sqrt(y);
  const double rhs = std::sqrt(std::fabs(x - y)) - fa * y;
  return lhs <= rhs + 1e-12;
}

// Fixed-constant variant with a = 4 coefficients: sqrt(x) - 2 sqrt(y) <=
// sqrt(|x - y|) - y/3.
inline bool split_inequality_holds_maintext(double x, double y) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
    throw std::invalid_argument("split_inequality_holds_maintext: x, y must lie in [0,1]");
  const double lhs = std::sqrt(x) - 2.0 * std::sqrt(y);
  const double rhs = std::sqrt(std::fabs(x - y)) - y / 3.0;
  return lhs <= rhs + 1e-12;
}

// Which exponential base the weighted-sqrt sums use. The dual-bound pipeline
// takes gamma = e^{-beta}; the l1 pipeline takes gamma = e^{-beta/2}.
enum class GammaConvention { kFullBeta, kHalfBeta };

inline double gamma_of(double beta, GammaConvention conv) {
  return std::exp(conv == GammaConvention::kFullBeta ? -beta : -beta / 2.0);
}

struct EpsCResult {
  double value = 0.0;
  double witness_W = 0.0;        // the maximizing mass split
  std::int64_t witness_level = 0;  // 1-based level index j achieving it
  double gamma = 0.0;
  std::vector<std::string> notes;
};

namespace detail {

// Maximize W * gamma^{E_{j(W)}} over W in (0,1), where j(W) is the first
// level with E_{j+1} > E/(1-W). On each step of the staircase the value is
// linear in W, so the supremum sits at the breakpoints W_j = 1 - E/E_{j+1}
// (attained: the step uses a strict '>'). Iteration stops once the envelope
// gamma^{E_j} falls below the best candidate, which no later level can beat.
template <class LevelFn>
EpsCResult eps_c_breakpoints(LevelFn level, std::int64_t max_level, double E,
                             double gamma) {
  EpsCResult res;
  res.gamma = gamma;
  double prev = -std::numeric_limits<double>::infinity();
  constexpr std::int64_t kCap = 20'000'000;
  for (std::int64_t j = 1; j <= max_level && j <= kCap; ++j) {
    const double ej = level(j);
    if (!std::isfinite(ej) || ej < 0)
      throw std::invalid_argument("eps_c: levels must be finite and >= 0");
    if (ej < prev) throw std::invalid_argument("eps_c: levels must be ascending");
    prev = ej;
    const double env = std::pow(gamma, ej);
    if (env < res.value) return res;  // envelope argument: no later candidate wins
    if (j < max_level) {
      const double ej1 = level(j + 1);
      if (ej1 > E) {
        const double w = 1.0 - E / ej1;
        const double val = w * env;
        if (val > res.value) {
          res.value = val;
          res.witness_W = w;
          res.witness_level = j;
        }
      }
    }
  }
  if (max_level > kCap)
    throw InfeasibleError("eps_c: envelope did not terminate within the iteration cap");
  return res;
}

}  // namespace detail

// Floor on the eigenvalue-sum defect created by an average-energy budget E:
// the largest W * gamma^{E_{j(W)}} over mass splits W. E below the ground
// energy is infeasible (no distribution has that mean). Finite spectra with
// E >= E_max impose no constraint at all: the mass may sit entirely on the
// top level and the value is the W -> 1 limit, gamma^{E_max}.
inline EpsCResult eps_c(const FiniteSpectrum& cat, double E,
                        GammaConvention conv = GammaConvention::kFullBeta) {
  validate_spectrum(cat);
  if (!std::isfinite(E)) throw std::invalid_argument("eps_c: E must be finite");
  if (E < cat.levels.front())
    throw InfeasibleError("eps_c: infeasible energy constraint (E below ground energy)");
  const double gamma = gamma_of(cat.beta, conv);
  const auto n = static_cast<std::int64_t>(cat.levels.size());
  if (E >= cat.levels.back()) {
    EpsCResult res;
    res.gamma = gamma;
    res.value = std::pow(gamma, cat.levels.back());
    res.witness_W = 1.0;
    res.witness_level = n;
    res.notes.push_back("E >= E_max: constraint void; value is the W -> 1 limit");
    return res;
  }
  return detail::eps_c_breakpoints(
      [&cat](std::int64_t j) { return cat.levels[static_cast<std::size_t>(j - 1)]; }, n,
      E, gamma);
}

inline EpsCResult eps_c(const UnboundedSpectrum& cat, double E,
                        GammaConvention conv = GammaConvention::kFullBeta) {
  if (!cat.level) throw std::invalid_argument("eps_c: missing level function");
  validate_beta(cat.beta, "eps_c");
  if (!std::isfinite(E)) throw std::invalid_argument("eps_c: E must be finite");
  if (E < cat.level(1))
    throw InfeasibleError("eps_c: infeasible energy constraint (E below ground energy)");
  const double gamma = gamma_of(cat.beta, conv);
  return detail::eps_c_breakpoints(cat.level, std::numeric_limits<std::int64_t>::max(),
                                   E, gamma);
}

namespace detail {

template <class Spectrum>
BoundReport energy_bound_core(double a, const Spectrum& cat, double E,
                              const char* kind) {
  const double fa = f_of(a);
  const EpsCResult ec = eps_c(cat, E, GammaConvention::kFullBeta);
  const double zc = partition_function(cat).value;
  const double bound = 0.5 * fa * fa * ec.value * ec.value / zc;

  BoundReport rep;
  rep.kind = kind;
  rep.bound = bound;
  rep.convention = "trace";
  rep.bound_canonical = bound;
  rep.intermediates = {{"A", a},
                       {"f_A", fa},
                       {"eps_C", ec.value},
                       {"witness_W", ec.witness_W},
                       {"witness_level_j", static_cast<double>(ec.witness_level)},
                       {"Z_C", zc},
                       {"gamma", ec.gamma},
                       {"E", E}};
  for (const auto& n : ec.notes) rep.notes.push_back(n);
  return rep;
}

}  // namespace detail

// Error floor from an average-energy budget E on the catalyst:
// (1/2) f(A)^2 eps_C^2 / Z_C in trace-distance units, A from the system
// spectrum. Requires A >= 2 (single-level systems have nothing to erase).
template <class Spectrum>
BoundReport energy_bound(const FiniteSpectrum& sys, const Spectrum& cat, double E) {
  const double a = amplification_factor(sys);
  if (sys.beta != cat.beta)
    throw std::invalid_argument("energy_bound: beta mismatch between spectra");
  if (a < 2.0)
    throw std::invalid_argument("energy_bound: A < 2 (system must have at least two states)");
  auto rep = detail::energy_bound_core(a, cat, E, "energy_diag");
  rep.intermediates["Z_S"] = partition_function(sys).value;
  return rep;
}

// The l1 pipeline: (1/9) eps_1^2 / Z_C with eps_1 evaluated at
// gamma = e^{-beta/2} and the fixed split constant 1/3. The result is an l1
// (unhalved) error floor; the canonical field divides by two.
template <class Spectrum>
BoundReport energy_bound_maintext(const Spectrum& cat, double E) {
  const EpsCResult ec = eps_c(cat, E, GammaConvention::kHalfBeta);
  const double zc = partition_function(cat).value;
  const double bound = ec.value * ec.value / (9.0 * zc);

  BoundReport rep;
  rep.kind = "energy_maintext";
  rep.bound = bound;
  rep.convention = "l1";
  rep.bound_canonical = bound / 2.0;
  rep.intermediates = {{"eps_C", ec.value},
                       {"witness_W", ec.witness_W},
                       {"witness_level_j", static_cast<double>(ec.witness_level)},
                       {"Z_C", zc},
                       {"gamma", ec.gamma},
                       {"E", E}};
  rep.notes.push_back("l1 convention: halve to compare with trace distance");
  for (const auto& n : ec.notes) rep.notes.push_back(n);
  return rep;
}

// Energy floor driven by a measured order-1/2 divergence increase kappa2:
// a = 2^{kappa2} replaces A. Below a = 2 the split inequality is unproven and
// the bound clamps to 0 with a note.
template <class Spectrum>
BoundReport energy_bound_arbitrary(double kappa2, const Spectrum& cat, double E) {
  if (!std::isfinite(kappa2))
    throw std::invalid_argument("energy_bound_arbitrary: kappa2 must be finite");
  const double a = std::exp2(kappa2);
  if (a < 2.0) {
    BoundReport rep;
    rep.kind = "energy_arbitrary";
    rep.bound = 0.0;
    rep.convention = "trace";
    rep.bound_canonical = 0.0;
    rep.intermediates = {{"A", a}, {"kappa", kappa2}, {"E", E}};
    rep.notes.push_back("2^kappa2 < 2: transformation gains less than one bit; bound vacuous");
    return rep;
  }
  auto rep = detail::energy_bound_core(a, cat, E, "energy_arbitrary");
  rep.intermediates["kappa"] = kappa2;
  return rep;
}

namespace detail {

template <class LevelFn>
std::optional<double> primal_distance_impl(LevelFn level, double beta, double E,
                                           const ProbVec<double>& omega,
                                           const ProbVec<double>& omega_prime,
                                           double a) {
  if (omega.size() != omega_prime.size())
    throw std::invalid_argument("primal_feasible_distance: length mismatch");
  if (omega.size() == 0)
    throw std::invalid_argument("primal_feasible_distance: empty vectors");
  if (!(a >= 1.0) || !std::isfinite(a))
    throw std::invalid_argument("primal_feasible_distance: A must be >= 1");
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!(omega[i] >= 0.0) || !std::isfinite(omega[i]) || !(omega_prime[i] >= 0.0) ||
        !std::isfinite(omega_prime[i]))
      throw std::invalid_argument("primal_feasible_distance: entries must be finite and >= 0");
  }

  const double gamma = std::exp(-beta / 2.0);
  double sum_w = 0.0, sum_wp = 0.0, energy = 0.0, lhs = 0.0, rhs = 0.0, l1 = 0.0;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const double e = level(static_cast<std::int64_t>(i) + 1);
    const double g = std::pow(gamma, e);
    sum_w += omega[i];
    sum_wp += omega_prime[i];
    energy += e * omega[i];
    lhs += std::sqrt(omega_prime[i]) * g;
    rhs += std::sqrt(omega[i]) * g;
    l1 += std::fabs(omega[i] - omega_prime[i]);
  }
  rhs *= std::sqrt(a);

  if (std::fabs(sum_w - 1.0) > 1e-9 || std::fabs(sum_wp - 1.0) > 1e-9) return std::nullopt;
  if (energy > E) return std::nullopt;
  if (lhs < rhs) return std::nullopt;
  return l1;
}

}  // namespace detail

// Feasibility evaluator for the energy-constrained primal: if (omega,
// omega_prime), indexed against the catalyst's levels, satisfies
// normalization, the energy budget sum E_i omega_i <= E, and the sqrt
// amplification constraint sum sqrt(omega'_i) gamma^{E_i} >= sqrt(A) * sum
// sqrt(omega_i) gamma^{E_i} with gamma = e^{-beta/2}, returns the l1 distance
// sum |omega_i - omega'_i|; otherwise nullopt. Any lower bound reported by
// the energy pipeline must sit below every value this returns (after
// convention adjustment).
inline std::optional<double> primal_feasible_distance(const UnboundedSpectrum& cat,
                                                      double E,
                                                      const ProbVec<double>& omega,
                                                      const ProbVec<double>& omega_prime,
                                                      double a = 2.0) {
  if (!cat.level) throw std::invalid_argument("primal_feasible_distance: missing level function");
  validate_beta(cat.beta, "primal_feasible_distance");
  return detail::primal_distance_impl(cat.level, cat.beta, E, omega, omega_prime, a);
}

inline std::optional<double> primal_feasible_distance(const FiniteSpectrum& cat,
                                                      double E,
                                                      const ProbVec<double>& omega,
                                                      const ProbVec<double>& omega_prime,
                                                      double a = 2.0) {
  validate_spectrum(cat);
  if (omega.size() > cat.levels.size())
    throw std::invalid_argument("primal_feasible_distance: more entries than levels");
  return detail::primal_distance_impl(
      [&cat](std::int64_t j) { return cat.levels[static_cast<std::size_t>(j - 1)]; },
      cat.beta, E, omega, omega_prime, a);
}

}  // namespace thermocat
