#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "thermocat/numeric.hpp"

namespace thermocat {

// Finite probability vector over an exact (Rational) or floating (double)
// backend. Sortedness is a per-operation precondition, not a type invariant:
// divergence code needs entries kept in pairing order, majorization code
// needs them descending.
template <class T>
struct ProbVec {
  std::vector<T> p;

  ProbVec() = default;
  explicit ProbVec(std::vector<T> entries) : p(std::move(entries)) {}

  std::size_t size() const { return p.size(); }
  bool empty() const { return p.empty(); }
  const T& operator[](std::size_t i) const { return p[i]; }
  T& operator[](std::size_t i) { return p[i]; }
  auto begin() const { return p.begin(); }
  auto end() const { return p.end(); }

  friend bool operator==(const ProbVec& a, const ProbVec& b) { return a.p == b.p; }
};

// Normalization slack accepted in float mode (absolute, on the total mass
// and on each majorization prefix comparison).
inline constexpr double kFloatTol = 1e-12;

template <class T>
inline double default_majorize_tol() {
  return is_exact_scalar_v<T> ? 0.0 : kFloatTol;
}

template <class T>
T sum_of(const ProbVec<T>& v) {
  T s = ratio<T>(0, 1);
  for (const auto& x : v.p) s = s + x;
  return s;
}

template <class T>
void validate_prob_vec(const ProbVec<T>& v, bool require_normalized = true) {
  if (v.empty()) throw std::invalid_argument("ProbVec: empty vector");
  for (const auto& x : v.p) {
    if constexpr (!is_exact_scalar_v<T>) {
      if (!std::isfinite(x)) throw std::invalid_argument("ProbVec: non-finite entry");
    }
    if (x < ratio<T>(0, 1)) throw std::invalid_argument("ProbVec: negative entry");
  }
  if (require_normalized) {
    const T s = sum_of(v);
    if constexpr (is_exact_scalar_v<T>) {
      if (s != ratio<T>(1, 1))
        throw std::invalid_argument("ProbVec: entries must sum to 1 exactly, got " +
                                    to_string(s));
    } else {
      if (std::fabs(s - 1.0) > kFloatTol)
        throw std::invalid_argument("ProbVec: entries must sum to 1 within 1e-12");
    }
  }
}

template <class T>
bool is_sorted_desc(const ProbVec<T>& v) {
  return std::is_sorted(v.p.begin(), v.p.end(), std::greater<T>());
}

template <class T>
ProbVec<T> sort_desc(ProbVec<T> v) {
  std::sort(v.p.begin(), v.p.end(), std::greater<T>());
  return v;
}

// omega ⊗ (uniform over m outcomes): every entry split into m copies of x/m.
// Preserves descending order and total mass exactly.
template <class T>
ProbVec<T> tensor_uniform(const ProbVec<T>& v, int m) {
  if (m < 1) throw std::invalid_argument("tensor_uniform: m must be >= 1");
  if (v.empty()) throw std::invalid_argument("tensor_uniform: empty vector");
  std::vector<T> out;
  out.reserve(v.size() * static_cast<std::size_t>(m));
  const T mm = ratio<T>(m, 1);
  for (const auto& x : v.p) {
    const T piece = x / mm;
    for (int j = 0; j < m; ++j) out.push_back(piece);
  }
  return ProbVec<T>{std::move(out)};
}

// omega ⊗ (pure state of an m-outcome register): original entries followed by
// (m-1)*n zeros. Preserves descending order.
template <class T>
ProbVec<T> pad_pure(const ProbVec<T>& v, int m) {
  if (m < 1) throw std::invalid_argument("pad_pure: m must be >= 1");
  if (v.empty()) throw std::invalid_argument("pad_pure: empty vector");
  std::vector<T> out = v.p;
  out.resize(v.size() * static_cast<std::size_t>(m), ratio<T>(0, 1));
  return ProbVec<T>{std::move(out)};
}

// Prefix-sum dominance for vectors already sorted descending. In float mode
// each comparison allows `tol` of slack in q's favor; exact mode compares
// rationals directly (tol ignored).
template <class T>
bool majorizes(const ProbVec<T>& p, const ProbVec<T>& q,
               double tol = default_majorize_tol<T>()) {
  if (p.size() != q.size())
    throw std::invalid_argument("majorizes: length mismatch (pad first)");
  if (!is_sorted_desc(p) || !is_sorted_desc(q))
    throw std::invalid_argument("majorizes: inputs must be sorted descending");
  T sp = ratio<T>(0, 1);
  T sq = ratio<T>(0, 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    sp = sp + p[i];
    sq = sq + q[i];
    if constexpr (is_exact_scalar_v<T>) {
      if (sp < sq) return false;
    } else {
      if (sp < sq - tol) return false;
    }
  }
  return true;
}

// (1/2) * l1 distance.
template <class T>
T trace_distance(const ProbVec<T>& p, const ProbVec<T>& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("trace_distance: length mismatch");
  T s = ratio<T>(0, 1);
  for (std::size_t i = 0; i < p.size(); ++i) s = s + abs_of(p[i] - q[i]);
  return s / ratio<T>(2, 1);
}

// An input/output catalyst pair for the m-outcome erasure step; both spectra
// sorted descending over the same dimension.
template <class T>
struct CatalystPair {
  int m = 2;
  ProbVec<T> omega_in;
  ProbVec<T> omega_out;
};

template <class T>
void validate_catalyst_pair(const CatalystPair<T>& pair) {
  if (pair.m < 1) throw std::invalid_argument("CatalystPair: m must be >= 1");
  validate_prob_vec(pair.omega_in);
  validate_prob_vec(pair.omega_out);
  if (pair.omega_in.size() != pair.omega_out.size())
    throw std::invalid_argument("CatalystPair: dimension mismatch");
  if (!is_sorted_desc(pair.omega_in) || !is_sorted_desc(pair.omega_out))
    throw std::invalid_argument("CatalystPair: entries must be sorted descending");
}

// Whether omega_in ⊗ uniform(m) -> omega_out ⊗ pure(m) is reachable by a
// doubly stochastic map, i.e. the erasure of an m-outcome register succeeds
// with this catalyst pair.
template <class T>
bool check_transformation(const CatalystPair<T>& pair,
                          double tol = default_majorize_tol<T>()) {
  validate_catalyst_pair(pair);
  return majorizes(tensor_uniform(pair.omega_in, pair.m),
                   pad_pure(pair.omega_out, pair.m), tol);
}

}  // namespace thermocat
