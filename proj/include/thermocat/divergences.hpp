#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "thermocat/numeric.hpp"
#include "thermocat/prob_vec.hpp"

namespace thermocat {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline ProbVec<double> as_double(const ProbVec<Rational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v.p) out.push_back(to_double(x));
  return ProbVec<double>{std::move(out)};
}

// ---------------------------------------------------------------------------
// Renyi divergences of order alpha between probability vectors, in bits.
// Entries are paired by index, so inputs need not be sorted.
// ---------------------------------------------------------------------------

// D_alpha(p||q) for alpha in [0, inf]. Finite orders away from 1 are summed
// in the log domain so that large alpha (e.g. 1e6) neither overflows nor
// underflows. Conventions: alpha=1 is Kullback-Leibler, alpha=0 uses the
// support of p, and any support mismatch that the order penalizes gives +inf.
inline double d_alpha_diag(const ProbVec<double>& p, const ProbVec<double>& q,
                           double alpha) {
  validate_prob_vec(p);
  validate_prob_vec(q);
  if (p.size() != q.size())
    throw std::invalid_argument("d_alpha_diag: length mismatch");
  if (std::isnan(alpha) || alpha < 0.0)
    throw std::invalid_argument("d_alpha_diag: alpha must be >= 0 or inf");

  const double ln2 = std::log(2.0);
  const std::size_t n = p.size();

  if (std::isinf(alpha)) {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] <= 0.0) continue;
      if (q[i] <= 0.0) return kInf;
      best = std::max(best, p[i] / q[i]);
    }
    return std::log2(best);
  }

  if (alpha == 0.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (p[i] > 0.0) s += q[i];
    if (s <= 0.0) return kInf;
    return -std::log2(s);
  }

  if (alpha == 1.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] <= 0.0) continue;
      if (q[i] <= 0.0) return kInf;
      s += p[i] * std::log2(p[i] / q[i]);
    }
    return s;
  }

  if (alpha == 0.5) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (p[i] > 0.0 && q[i] > 0.0) s += std::sqrt(p[i] * q[i]);
    if (s <= 0.0) return kInf;
    return -2.0 * std::log2(s);
  }

  // general finite order: log-sum-exp over t_i = alpha ln p_i + (1-alpha) ln q_i
  std::vector<double> terms;
  terms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) {
      if (alpha > 1.0) return kInf;
      continue;
    }
    terms.push_back(alpha * std::log(p[i]) + (1.0 - alpha) * std::log(q[i]));
  }
  if (terms.empty()) return kInf;
  const double m = *std::max_element(terms.begin(), terms.end());
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - m);
  return (m + std::log(acc)) / ((alpha - 1.0) * ln2);
}

inline std::vector<double> default_alpha_grid() {
  return {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0, 1.1,
          1.5, 2.0, 3.0,  5.0, 10.0, 100.0, kInf};
}

struct MonotonicityReport {
  bool pass = true;
  double witness_alpha = 0.0;  // most violated order (when pass is false)
  double gap = 0.0;            // size of that violation, in bits
  std::string caveat = "grid-necessary-only";
};

// Necessary condition for reaching p_out from p_in relative to the thermal
// state tau: every order must satisfy D_alpha(p_in||tau) >= D_alpha(p_out||tau).
// The grid (always extended by the limit orders 0, 1, inf) is swept with
// 1e-10 of rounding slack; on failure the most violated order is reported.
// A pass certifies nothing beyond the sampled orders, hence the caveat.
inline MonotonicityReport monotonicity_check(
    const ProbVec<double>& p_in, const ProbVec<double>& p_out,
    const ProbVec<double>& tau, std::vector<double> grid = default_alpha_grid()) {
  validate_prob_vec(tau);
  for (std::size_t i = 0; i < tau.size(); ++i)
    if (!(tau[i] > 0.0))
      throw std::invalid_argument("monotonicity_check: tau must be strictly positive");
  grid.push_back(0.0);
  grid.push_back(1.0);
  grid.push_back(kInf);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  MonotonicityReport rep;
  for (double a : grid) {
    const double diff = d_alpha_diag(p_in, tau, a) - d_alpha_diag(p_out, tau, a);
    if (diff < -1e-10 && -diff > rep.gap) {
      rep.pass = false;
      rep.witness_alpha = a;
      rep.gap = -diff;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Dense Hermitian states and the two matrix orders we need (1/2 and inf).
// Complex matrices are handled through the real embedding
//   A + iB  ->  [[A, -B], [B, A]],
// a *-isomorphism onto its image, so spectral functions commute with it and
// every eigenvalue simply appears twice.
// ---------------------------------------------------------------------------

inline constexpr std::size_t kMaxMatrixDim = 16;

struct HermitianState {
  std::size_t dim = 0;
  std::vector<std::complex<double>> a;  // row-major, a[i*dim + j]

  std::complex<double>& operator()(std::size_t i, std::size_t j) {
    return a[i * dim + j];
  }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const {
    return a[i * dim + j];
  }
};

inline void validate_hermitian_state(const HermitianState& h);

inline HermitianState make_diag_state(const std::vector<double>& diag) {
  HermitianState h;
  h.dim = diag.size();
  h.a.assign(h.dim * h.dim, {0.0, 0.0});
  for (std::size_t i = 0; i < h.dim; ++i) h(i, i) = {diag[i], 0.0};
  validate_hermitian_state(h);
  return h;
}

// Real symmetric image of a Hermitian matrix, size 2*dim.
inline std::vector<double> embed(const HermitianState& h) {
  const std::size_t d = h.dim, n = 2 * d;
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const double re = h(i, j).real(), im = h(i, j).imag();
      e[i * n + j] = re;
      e[i * n + (j + d)] = -im;
      e[(i + d) * n + j] = im;
      e[(i + d) * n + (j + d)] = re;
    }
  }
  return e;
}

struct EigResult {
  std::size_t dim = 0;
  std::vector<double> values;   // descending
  std::vector<double> vectors;  // row-major; column j is the j-th eigenvector
};

// Cyclic Jacobi diagonalization for small dense symmetric matrices
// (dim <= 32 here, so the O(d^3)-per-sweep cost is irrelevant).
inline EigResult jacobi_eigensym(std::vector<double> a, std::size_t d) {
  if (d < 1 || d > 2 * kMaxMatrixDim)
    throw std::invalid_argument("jacobi_eigensym: dim out of range");
  if (a.size() != d * d)
    throw std::invalid_argument("jacobi_eigensym: storage does not match dim^2");

  std::vector<double> v(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) v[i * d + i] = 1.0;

  double diag_scale = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    diag_scale = std::max(diag_scale, std::abs(a[i * d + i]));
  diag_scale = std::max(diag_scale, 1.0);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q) off += a[p * d + q] * a[p * d + q];
    if (std::sqrt(off) <= 1e-13 * diag_scale) break;

    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const double apq = a[p * d + q];
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (a[q * d + q] - a[p * d + p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a[p * d + p] -= t * apq;
        a[q * d + q] += t * apq;
        a[p * d + q] = a[q * d + p] = 0.0;
        for (std::size_t r = 0; r < d; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * d + p], arq = a[r * d + q];
          a[r * d + p] = a[p * d + r] = c * arp - s * arq;
          a[r * d + q] = a[q * d + r] = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < d; ++r) {
          const double vrp = v[r * d + p], vrq = v[r * d + q];
          v[r * d + p] = c * vrp - s * vrq;
          v[r * d + q] = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a[x * d + x] > a[y * d + y];
  });

  EigResult res;
  res.dim = d;
  res.values.resize(d);
  res.vectors.assign(d * d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    res.values[j] = a[order[j] * d + order[j]];
    for (std::size_t i = 0; i < d; ++i) res.vectors[i * d + j] = v[i * d + order[j]];
  }
  return res;
}

inline void validate_hermitian_state(const HermitianState& h) {
  if (h.dim < 1 || h.dim > kMaxMatrixDim)
    throw std::invalid_argument("state dimension must be in [1, 16]");
  if (h.a.size() != h.dim * h.dim)
    throw std::invalid_argument("state storage does not match dim^2");
  double tr_re = 0.0, tr_im = 0.0;
  for (std::size_t i = 0; i < h.dim; ++i) {
    for (std::size_t j = 0; j < h.dim; ++j) {
      const auto& x = h(i, j);
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
        throw std::invalid_argument("state has a non-finite entry");
      if (std::abs(x - std::conj(h(j, i))) > 1e-12)
        throw std::invalid_argument("state is not Hermitian (tol 1e-12)");
    }
    tr_re += h(i, i).real();
    tr_im += h(i, i).imag();
  }
  if (std::abs(tr_re - 1.0) > 1e-12 || std::abs(tr_im) > 1e-12)
    throw std::invalid_argument("state trace must be 1 (tol 1e-12)");
  const auto eig = jacobi_eigensym(embed(h), 2 * h.dim);
  if (eig.values.back() < -1e-12)
    throw std::invalid_argument("state has a negative eigenvalue (tol 1e-12)");
}

inline std::vector<double> matmul(const std::vector<double>& x,
                                  const std::vector<double>& y, std::size_t d) {
  std::vector<double> z(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const double xik = x[i * d + k];
      if (xik == 0.0) continue;
      for (std::size_t j = 0; j < d; ++j) z[i * d + j] += xik * y[k * d + j];
    }
  return z;
}

namespace detail {

// sum_j fn(lambda_j) v_j v_j^T over eigenpairs selected by `keep`
template <class Fn, class Keep>
std::vector<double> spectral_build(const EigResult& e, Fn fn, Keep keep) {
  const std::size_t d = e.dim;
  std::vector<double> out(d * d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    if (!keep(e.values[j])) continue;
    const double f = fn(e.values[j]);
    for (std::size_t i = 0; i < d; ++i) {
      const double vi = e.vectors[i * d + j] * f;
      if (vi == 0.0) continue;
      for (std::size_t k = 0; k < d; ++k)
        out[i * d + k] += vi * e.vectors[k * d + j];
    }
  }
  return out;
}

inline double quad_form(const std::vector<double>& m, const EigResult& e,
                        std::size_t col) {
  const std::size_t d = e.dim;
  double acc = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    double row = 0.0;
    for (std::size_t k = 0; k < d; ++k) row += m[i * d + k] * e.vectors[k * d + col];
    acc += e.vectors[i * d + col] * row;
  }
  return acc;
}

}  // namespace detail

// Max-divergence D_inf(rho||sigma) = log2 lambda_max(sigma^{-1/2} rho sigma^{-1/2}),
// with +inf when rho puts more than 1e-10 of mass on the kernel of sigma.
inline double d_inf_matrix(const HermitianState& rho, const HermitianState& sigma) {
  validate_hermitian_state(rho);
  validate_hermitian_state(sigma);
  if (rho.dim != sigma.dim)
    throw std::invalid_argument("d_inf_matrix: dimension mismatch");

  const std::size_t n = 2 * rho.dim;
  const auto r = embed(rho);
  const auto s = embed(sigma);
  const auto es = jacobi_eigensym(s, n);
  const double cut = 1e-12 * std::max(1.0, es.values.front());

  double kernel_mass = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    if (es.values[j] <= cut) kernel_mass += detail::quad_form(r, es, j);
  kernel_mass *= 0.5;  // the embedding doubles traces
  if (kernel_mass > 1e-10) return kInf;

  const auto x = detail::spectral_build(
      es, [](double lam) { return 1.0 / std::sqrt(lam); },
      [cut](double lam) { return lam > cut; });
  const auto t = matmul(matmul(x, r, n), x, n);
  const auto et = jacobi_eigensym(t, n);
  return std::log2(std::max(et.values.front(), 1e-300));
}

// D_{1/2}(rho||sigma) = -2 log2 F with fidelity F = tr sqrt(sqrt(sigma) rho sqrt(sigma)).
inline double d_half_matrix(const HermitianState& rho, const HermitianState& sigma) {
  validate_hermitian_state(rho);
  validate_hermitian_state(sigma);
  if (rho.dim != sigma.dim)
    throw std::invalid_argument("d_half_matrix: dimension mismatch");

  const std::size_t n = 2 * rho.dim;
  const auto s = embed(sigma);
  const auto es = jacobi_eigensym(s, n);
  const auto shalf = detail::spectral_build(
      es, [](double lam) { return std::sqrt(std::max(lam, 0.0)); },
      [](double lam) { return lam > 0.0; });
  const auto m = matmul(matmul(shalf, embed(rho), n), shalf, n);
  const auto em = jacobi_eigensym(m, n);
  double f = 0.0;
  for (double lam : em.values) f += std::sqrt(std::max(lam, 0.0));
  f *= 0.5;  // embedded trace counts every eigenvalue twice
  if (f <= 1e-300) return kInf;
  return -2.0 * std::log2(f);
}

// ---------------------------------------------------------------------------
// Work-gap coefficients: divergence of the output from the thermal state
// minus that of the input, at orders inf (kappa1) and 1/2 (kappa2).
// ---------------------------------------------------------------------------

inline double kappa1(const ProbVec<double>& rho_in, const ProbVec<double>& rho_out,
                     const ProbVec<double>& tau) {
  return d_alpha_diag(rho_out, tau, kInf) - d_alpha_diag(rho_in, tau, kInf);
}

inline double kappa2(const ProbVec<double>& rho_in, const ProbVec<double>& rho_out,
                     const ProbVec<double>& tau) {
  return d_alpha_diag(rho_out, tau, 0.5) - d_alpha_diag(rho_in, tau, 0.5);
}

inline double kappa1(const HermitianState& rho_in, const HermitianState& rho_out,
                     const HermitianState& tau) {
  return d_inf_matrix(rho_out, tau) - d_inf_matrix(rho_in, tau);
}

inline double kappa2(const HermitianState& rho_in, const HermitianState& rho_out,
                     const HermitianState& tau) {
  return d_half_matrix(rho_out, tau) - d_half_matrix(rho_in, tau);
}

}  // namespace thermocat
