#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "thermocat/numeric.hpp"
#include "thermocat/prob_vec.hpp"

namespace thermocat {

// Catalyst family parameters: dimension n = m^a for an m-outcome erasure step.
struct FamilyParams {
  int m = 2;
  int a = 1;
};

inline constexpr std::int64_t kMaxFamilyDim = 1 << 20;

inline std::int64_t family_dim(int m, int a) {
  if (m < 2) throw std::invalid_argument("family: m must be >= 2");
  if (a < 1) throw std::invalid_argument("family: a must be >= 1");
  const std::int64_t n = ipow_checked(m, a, kMaxFamilyDim);
  if (n < 0)
    throw std::invalid_argument("family: dimension m^a exceeds the 2^20 cap");
  return n;
}

// Smallest achievable erasure error with an n = m^a dimensional catalyst:
// (m-1) / (1 + (m-1) a).
template <class T>
T optimal_error(int m, int a) {
  family_dim(m, a);
  return ratio<T>(m - 1, 1 + static_cast<std::int64_t>(m - 1) * a);
}

// The optimal catalyst pair. The output state is constant on geometric
// blocks: entry 1 at w1 = 1/(1+(m-1)a), then entries (m^{b-1}, m^b] at
// w1 * m^{1-b} for b = 1..a. The input state doubles the first entry to
// m*w1, keeps entries 2..n/m, and is zero beyond (rank n/m).
template <class T>
CatalystPair<T> optimal_pair(int m, int a) {
  const std::int64_t n = family_dim(m, a);
  const T w1 = ratio<T>(1, 1 + static_cast<std::int64_t>(m - 1) * a);

  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(w1);
  for (int b = 1; b <= a; ++b) {
    const T val = w1 / pow_int(ratio<T>(m, 1), b - 1);
    const std::int64_t lo = ipow_checked(m, b - 1, kMaxFamilyDim);
    const std::int64_t hi = ipow_checked(m, b, kMaxFamilyDim);
    for (std::int64_t i = lo; i < hi; ++i) out.push_back(val);
  }

  std::vector<T> in;
  in.reserve(static_cast<std::size_t>(n));
  in.push_back(ratio<T>(m, 1) * w1);
  const std::int64_t rank = n / m;
  for (std::int64_t i = 1; i < rank; ++i) in.push_back(out[static_cast<std::size_t>(i)]);
  in.resize(static_cast<std::size_t>(n), ratio<T>(0, 1));

  return CatalystPair<T>{m, ProbVec<T>{std::move(in)}, ProbVec<T>{std::move(out)}};
}

// Comparison state with entries proportional to 1/i (harmonic profile),
// normalized by C(n) = sum_{i<=n} 1/i.
template <class T>
ProbVec<T> vdh_state(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("vdh_state: n must be >= 1");
  if (n > kMaxFamilyDim) throw std::invalid_argument("vdh_state: n exceeds the 2^20 cap");
  T c = ratio<T>(0, 1);
  for (std::int64_t i = 1; i <= n; ++i) c = c + ratio<T>(1, i);
  std::vector<T> v;
  v.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) v.push_back(ratio<T>(1, i) / c);
  return ProbVec<T>{std::move(v)};
}

// Normal form that piles all of the input's advantage onto its first entry:
// entries 2..k are clipped to min(w_i, w'_i) and the clipped mass moves to
// entry 1. Keeps the pair feasible, keeps it sorted, and preserves the trace
// distance (which becomes simply w_1 - w'_1).
template <class T>
CatalystPair<T> pile_slack(const CatalystPair<T>& pair) {
  validate_catalyst_pair(pair);
  const auto& w = pair.omega_in;
  const auto& wp = pair.omega_out;
  std::vector<T> tilde(w.size());
  T moved = ratio<T>(0, 1);
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] > wp[i]) {
      tilde[i] = wp[i];
      moved = moved + (w[i] - wp[i]);
    } else {
      tilde[i] = w[i];
    }
  }
  tilde[0] = w[0] + moved;
  return CatalystPair<T>{pair.m, ProbVec<T>{std::move(tilde)}, wp};
}

template <class T>
struct ReduceResult {
  CatalystPair<T> pair;        // feasible pair in dimension k/m
  T delta;                     // clipped output tail mass sum_{i > k/m} w'_i
  std::int64_t split_index;    // index s where the input was cut
  bool block_averaged;         // true when the zeta'-style block averaging ran
};

// Dimension-reduction step: maps a feasible pair in dimension k to a feasible
// pair in dimension k/m. Truncate the output to its first k/m entries and
// renormalize by 1/(1-delta); cut the input at the matching mass 1-delta,
// block-averaging the output around the cut when the cut lands strictly
// inside an input entry.
//
// For pairs at (or reduced from) the optimum the trace distance scales
// exactly by 1/(1-delta). That equality can fail only when the cut index is
// s = 1 *and* the averaging branch runs -- which requires w_1 > 1-delta,
// impossible at the optimum (it forces delta = d and w_1 = 1-delta, which
// selects the plain truncation branch).
template <class T>
ReduceResult<T> reduce_pair(const CatalystPair<T>& input) {
  validate_catalyst_pair(input);
  const int m = input.m;
  const auto k = static_cast<std::int64_t>(input.omega_in.size());
  if (m < 2) throw std::invalid_argument("reduce_pair: m must be >= 2");
  if (k % m != 0) throw std::invalid_argument("reduce_pair: dimension not divisible by m");
  if (k % (static_cast<std::int64_t>(m) * m) != 0)
    throw std::invalid_argument(
        "reduce_pair: dimension must be divisible by m^2 (no smaller block level)");
  if (!check_transformation(input))
    throw InfeasibleError("reduce_pair: infeasible input pair");

  const CatalystPair<T> nf = pile_slack(input);
  const auto& w = nf.omega_in;
  const auto& wp = nf.omega_out;
  const std::int64_t h = k / m;

  T delta = ratio<T>(0, 1);
  for (std::int64_t i = h; i < k; ++i) delta = delta + wp[static_cast<std::size_t>(i)];
  const T keep = ratio<T>(1, 1) - delta;  // >= w'_1 > 0

  // smallest s with w_1 + ... + w_s >= 1 - delta
  std::int64_t s = 0;
  T prefix = ratio<T>(0, 1);
  T hat = ratio<T>(0, 1);
  for (std::int64_t i = 0; i < k; ++i) {
    const T next = prefix + w[static_cast<std::size_t>(i)];
    if (next >= keep) {
      s = i + 1;
      hat = keep - prefix;
      break;
    }
    prefix = next;
  }
  if (s == 0 || s > k / (static_cast<std::int64_t>(m) * m))
    throw std::logic_error("reduce_pair: split index out of proven range");

  std::vector<T> red_in(static_cast<std::size_t>(h), ratio<T>(0, 1));
  for (std::int64_t i = 0; i + 1 < s; ++i) red_in[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / keep;
  red_in[static_cast<std::size_t>(s - 1)] = hat / keep;

  std::vector<T> red_out(static_cast<std::size_t>(h));
  for (std::int64_t i = 0; i < h; ++i) red_out[static_cast<std::size_t>(i)] = wp[static_cast<std::size_t>(i)] / keep;

  const bool averaged = (hat != w[static_cast<std::size_t>(s - 1)]);
  if (averaged) {
    // average the output block (s-1)m+1 .. sm and re-check the interpolated
    // prefix constraints C + (j/m) hat >= C' + j*l for j = 1..m
    T block = ratio<T>(0, 1);
    for (std::int64_t i = (s - 1) * m; i < s * m; ++i) block = block + wp[static_cast<std::size_t>(i)];
    const T l = block / ratio<T>(m, 1);
    for (std::int64_t i = (s - 1) * m; i < s * m; ++i) red_out[static_cast<std::size_t>(i)] = l / keep;

    T cw = ratio<T>(0, 1);
    for (std::int64_t i = 0; i + 1 < s; ++i) cw = cw + w[static_cast<std::size_t>(i)];
    T cp = ratio<T>(0, 1);
    for (std::int64_t i = 0; i < (s - 1) * m; ++i) cp = cp + wp[static_cast<std::size_t>(i)];
    for (int j = 1; j <= m; ++j) {
      const T lhs = cw + ratio<T>(j, m) * hat;
      const T rhs = cp + ratio<T>(j, 1) * l;
      if (lhs < rhs) throw std::logic_error("reduce_pair: interpolated prefix check failed");
    }
  }

  CatalystPair<T> reduced{m, ProbVec<T>{std::move(red_in)}, ProbVec<T>{std::move(red_out)}};
  if (!check_transformation(reduced))
    throw std::logic_error("reduce_pair: reduced pair lost feasibility");
  return ReduceResult<T>{std::move(reduced), delta, s, averaged};
}

}  // namespace thermocat
