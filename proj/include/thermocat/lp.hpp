#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thermocat/catalysts.hpp"
#include "thermocat/numeric.hpp"
#include "thermocat/prob_vec.hpp"

namespace thermocat {

// Exact-rational linear programs: minimize c.x over x >= 0 subject to rows.
// Everything is dense and rational; no floating point enters any pivot, so an
// "optimal" answer is a certificate, not an approximation.

enum class Rel { le, ge, eq };

struct LpConstraint {
  std::vector<Rational> coef;  // dense, length num_vars
  Rel rel = Rel::le;
  Rational rhs;
};

struct LpProblem {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;  // minimized; implicit x >= 0
  Rational objective_offset;        // constant added to reported objectives
  std::vector<LpConstraint> rows;
  std::vector<std::string> var_names;  // optional, used by the text export
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> x;  // structural assignment (empty unless optimal)
  Rational objective;       // c.x + offset
  bool verified = false;    // re-substitution check passed
  std::int64_t iterations = 0;
};

struct SolveOptions {
  // Dantzig's rule prices fastest but can cycle in theory; after this many
  // pivots the solver switches to Bland's rule permanently, which terminates.
  std::int64_t bland_after = 5000;
  std::int64_t max_iters = 500000;
};

inline constexpr std::int64_t kMaxLpDim = 256;  // catalyst-dimension cap for built LPs

namespace detail {

class SimplexTableau {
 public:
  SimplexTableau(const LpProblem& p) : p_(p) {
    const std::size_t m = p.rows.size();
    // canonicalize senses so every rhs is >= 0
    std::vector<LpConstraint> rows(p.rows);
    for (auto& r : rows) {
      if (r.coef.size() != p.num_vars)
        throw std::invalid_argument("solve_lp: coefficient length mismatch");
      const bool flip = (r.rel == Rel::le && r.rhs.sign() < 0) ||
                        (r.rel == Rel::ge && r.rhs.sign() <= 0) ||
                        (r.rel == Rel::eq && r.rhs.sign() < 0);
      if (flip) {
        for (auto& c : r.coef) c = -c;
        r.rhs = -r.rhs;
        if (r.rel == Rel::le) r.rel = Rel::ge;
        else if (r.rel == Rel::ge) r.rel = Rel::le;
      }
    }

    std::size_t n_slack = 0, n_art = 0;
    for (const auto& r : rows) {
      if (r.rel != Rel::eq) ++n_slack;
      if (r.rel != Rel::le) ++n_art;
    }
    cols_ = p.num_vars + n_slack + n_art;
    art_begin_ = p.num_vars + n_slack;

    t_.assign(m, std::vector<Rational>(cols_, Rational(0)));
    b_.resize(m);
    basis_.resize(m);

    std::size_t slack = p.num_vars, art = art_begin_;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < p.num_vars; ++j) t_[i][j] = rows[i].coef[j];
      b_[i] = rows[i].rhs;
      switch (rows[i].rel) {
        case Rel::le:
          t_[i][slack] = 1;
          basis_[i] = slack++;
          break;
        case Rel::ge:
          t_[i][slack] = -1;
          ++slack;
          t_[i][art] = 1;
          basis_[i] = art++;
          break;
        case Rel::eq:
          t_[i][art] = 1;
          basis_[i] = art++;
          break;
      }
    }
  }

  LpSolution run(const SolveOptions& opt) {
    LpSolution sol;

    // phase 1: minimize the artificial sum
    if (art_begin_ < cols_) {
      std::vector<Rational> cost(cols_, Rational(0));
      for (std::size_t j = art_begin_; j < cols_; ++j) cost[j] = 1;
      load_cost(cost);
      if (!pivot_loop(opt, sol, /*forbid_artificials=*/false)) return sol;  // unbounded: impossible in phase 1
      if (zval_.sign() != 0) {
        sol.status = LpStatus::infeasible;
        return sol;
      }
      evict_artificials();
    }

    // phase 2: the real objective, artificial columns locked out
    {
      std::vector<Rational> cost(cols_, Rational(0));
      for (std::size_t j = 0; j < p_.num_vars; ++j) cost[j] = p_.objective[j];
      load_cost(cost);
      if (!pivot_loop(opt, sol, /*forbid_artificials=*/true)) {
        sol.status = LpStatus::unbounded;
        return sol;
      }
    }

    sol.status = LpStatus::optimal;
    sol.x.assign(p_.num_vars, Rational(0));
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] < p_.num_vars) sol.x[basis_[i]] = b_[i];
    sol.objective = p_.objective_offset;
    for (std::size_t j = 0; j < p_.num_vars; ++j)
      sol.objective += p_.objective[j] * sol.x[j];
    verify(sol);
    return sol;
  }

 private:
  void load_cost(const std::vector<Rational>& cost) {
    z_.assign(cost.begin(), cost.end());
    zval_ = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Rational cb = cost[basis_[i]];
      if (cb.sign() == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (t_[i][j].sign() != 0) z_[j] -= cb * t_[i][j];
      zval_ -= cb * b_[i];
    }
  }

  // returns false on unboundedness; true when reduced costs are all >= 0
  bool pivot_loop(const SolveOptions& opt, LpSolution& sol, bool forbid_artificials) {
    const std::size_t limit = forbid_artificials ? art_begin_ : cols_;
    while (true) {
      if (sol.iterations >= opt.max_iters)
        throw std::runtime_error("solve_lp: iteration cap exceeded");
      const bool bland = sol.iterations >= opt.bland_after;

      std::size_t enter = cols_;
      for (std::size_t j = 0; j < limit; ++j) {
        if (z_[j].sign() >= 0) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (enter == cols_ || z_[j] < z_[enter]) enter = j;
      }
      if (enter == cols_) return true;  // optimal for this cost

      std::size_t leave = basis_.size();
      Rational best_num, best_den;  // best ratio as a fraction pair
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (t_[i][enter].sign() <= 0) continue;
        if (leave == basis_.size()) {
          leave = i;
          best_num = b_[i];
          best_den = t_[i][enter];
          continue;
        }
        // compare b_i/t_ie < best: cross-multiplied (denominators > 0)
        const int cmp = Rational(b_[i] * best_den - best_num * t_[i][enter]).sign();
        if (cmp < 0 || (cmp == 0 && basis_[i] < basis_[leave])) {
          leave = i;
          best_num = b_[i];
          best_den = t_[i][enter];
        }
      }
      if (leave == basis_.size()) return false;  // unbounded direction

      pivot(leave, enter);
      ++sol.iterations;
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = t_[r];
    const Rational inv = Rational(1) / prow[c];
    for (auto& v : prow)
      if (v.sign() != 0) v *= inv;
    b_[r] *= inv;
    prow[c] = 1;

    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r) continue;
      const Rational f = t_[i][c];
      if (f.sign() == 0) continue;
      auto& row = t_[i];
      for (std::size_t j = 0; j < cols_; ++j)
        if (prow[j].sign() != 0) row[j] -= f * prow[j];
      row[c] = 0;
      b_[i] -= f * b_[r];
    }
    const Rational zf = z_[c];
    if (zf.sign() != 0) {
      for (std::size_t j = 0; j < cols_; ++j)
        if (prow[j].sign() != 0) z_[j] -= zf * prow[j];
      z_[c] = 0;
      zval_ -= zf * b_[r];
    }
    basis_[r] = c;
  }

  // After a feasible phase 1, pivot basic artificials (necessarily at zero)
  // onto any real column in their row; an all-zero row is redundant and its
  // artificial can stay, pinned at zero, since no pivot will ever touch it.
  void evict_artificials() {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < art_begin_) continue;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (t_[i][j].sign() != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  void verify(LpSolution& sol) const {
    for (const auto& x : sol.x)
      if (x.sign() < 0) throw std::logic_error("solve_lp: negative variable in optimum");
    for (const auto& row : p_.rows) {
      Rational lhs(0);
      for (std::size_t j = 0; j < p_.num_vars; ++j)
        if (row.coef[j].sign() != 0) lhs += row.coef[j] * sol.x[j];
      const int cmp = Rational(lhs - row.rhs).sign();
      const bool ok = (row.rel == Rel::le && cmp <= 0) ||
                      (row.rel == Rel::ge && cmp >= 0) ||
                      (row.rel == Rel::eq && cmp == 0);
      if (!ok) throw std::logic_error("solve_lp: optimum violates a constraint exactly");
    }
    sol.verified = true;
  }

  const LpProblem& p_;
  std::size_t cols_ = 0, art_begin_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> b_, z_;
  std::vector<std::size_t> basis_;
  Rational zval_;
};

}  // namespace detail

inline LpSolution solve_lp(const LpProblem& p, const SolveOptions& opt = {}) {
  if (p.objective.size() != p.num_vars)
    throw std::invalid_argument("solve_lp: objective length mismatch");
  detail::SimplexTableau tab(p);
  return tab.run(opt);
}

// Plain-text export, one constraint per line, exact rational coefficients:
//   nvars N
//   obj c_1 .. c_N offset C          (minimize; all variables are >= 0)
//   name_i: a_1 .. a_N <=|>=|= rhs
inline std::string lp_to_text(const LpProblem& p) {
  std::ostringstream os;
  os << "nvars " << p.num_vars << "\n";
  os << "obj";
  for (const auto& c : p.objective) os << ' ' << to_string(c);
  os << " offset " << to_string(p.objective_offset) << "\n";
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    os << 'r' << i << ':';
    for (const auto& c : p.rows[i].coef) os << ' ' << to_string(c);
    os << ' ' << (p.rows[i].rel == Rel::le ? "<=" : p.rows[i].rel == Rel::ge ? ">=" : "=");
    os << ' ' << to_string(p.rows[i].rhs) << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// The minimum-error catalyst problem as an LP.
//
// Over vectors sorted descending, feasibility of the m-outcome erasure step
// is equivalent to the prefix conditions
//   sum_{i<=q} w_i + (r/m) w_{q+1} >= sum_{i<=k} w'_i,   k = q m + r,
// for k = 1..n (larger k are implied: the k = n row already forces the rank
// condition). Variables are w, w', and t with t_i >= |w_i - w'_i|; the
// objective is half the t-sum, i.e. the trace distance.
// ---------------------------------------------------------------------------

inline LpProblem build_embezzle_lp(int m, std::int64_t n,
                                   bool include_redundant_tail = false) {
  if (m < 2) throw std::invalid_argument("build_embezzle_lp: m must be >= 2");
  if (n < 2 || n > kMaxLpDim)
    throw std::invalid_argument("build_embezzle_lp: n must be in [2, 256]");

  const auto un = static_cast<std::size_t>(n);
  LpProblem p;
  p.num_vars = 3 * un;  // [w | w' | t]
  p.objective.assign(p.num_vars, Rational(0));
  for (std::size_t i = 0; i < un; ++i) p.objective[2 * un + i] = Rational(1, 2);
  p.var_names.resize(p.num_vars);
  for (std::size_t i = 0; i < un; ++i) {
    p.var_names[i] = "w" + std::to_string(i + 1);
    p.var_names[un + i] = "wp" + std::to_string(i + 1);
    p.var_names[2 * un + i] = "t" + std::to_string(i + 1);
  }

  auto zero_row = [&p]() {
    LpConstraint r;
    r.coef.assign(p.num_vars, Rational(0));
    r.rel = Rel::le;
    r.rhs = 0;
    return r;
  };

  // t_i >= +-(w_i - w'_i)
  for (std::size_t i = 0; i < un; ++i) {
    auto r1 = zero_row();
    r1.coef[i] = 1;
    r1.coef[un + i] = -1;
    r1.coef[2 * un + i] = -1;
    p.rows.push_back(std::move(r1));
    auto r2 = zero_row();
    r2.coef[i] = -1;
    r2.coef[un + i] = 1;
    r2.coef[2 * un + i] = -1;
    p.rows.push_back(std::move(r2));
  }
  // descending chains
  for (std::size_t i = 0; i + 1 < un; ++i) {
    auto r1 = zero_row();
    r1.coef[i + 1] = 1;
    r1.coef[i] = -1;
    p.rows.push_back(std::move(r1));
    auto r2 = zero_row();
    r2.coef[un + i + 1] = 1;
    r2.coef[un + i] = -1;
    p.rows.push_back(std::move(r2));
  }
  // normalization
  for (int side = 0; side < 2; ++side) {
    auto r = zero_row();
    for (std::size_t i = 0; i < un; ++i) r.coef[side * un + i] = 1;
    r.rel = Rel::eq;
    r.rhs = 1;
    p.rows.push_back(std::move(r));
  }
  // prefix conditions: sum_{i<=k} w'_i - sum_{i<=q} w_i - (r/m) w_{q+1} <= 0
  const std::int64_t kmax = include_redundant_tail ? n * m : n;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    const std::int64_t q = k / m, r = k % m;
    auto row = zero_row();
    for (std::int64_t i = 0; i < std::min(k, n); ++i) row.coef[un + static_cast<std::size_t>(i)] = 1;
    for (std::int64_t i = 0; i < std::min(q, n); ++i) row.coef[static_cast<std::size_t>(i)] -= 1;
    if (r > 0 && q < n) row.coef[static_cast<std::size_t>(q)] -= Rational(r, m);
    p.rows.push_back(std::move(row));
  }
  return p;
}

enum class FixedSide { input, output };

struct PartnerResult {
  LpStatus status = LpStatus::infeasible;
  ProbVec<Rational> partner;  // full-length vector (empty unless optimal)
  Rational distance;          // trace distance to the fixed side
  std::int64_t iterations = 0;
};

namespace detail {

// Fixed output w': minimize the trace distance over feasible inputs w.
//
// Two exact reductions shrink this far below the generic LP. First, the rank
// condition pins w_i = 0 for i > h = floor(n/m). Second, piling the input's
// surplus onto its first entry (w_i <= w'_i for i >= 2, slack moved to w_1)
// never breaks feasibility and never increases the distance, so some
// optimizer has that shape and the distance collapses to w_1 - w'_1. In the
// variables u_i = w'_i - w_i >= 0 (i = 2..h) the objective is just sum u_i
// plus the clipped tail delta' = sum_{i>h} w'_i, every cap is plain
// nonnegativity, and only genuinely binding prefix rows survive.
inline PartnerResult partner_fixed_output(const ProbVec<Rational>& fixed, int m,
                                          const SolveOptions& opt) {
  const auto n = static_cast<std::int64_t>(fixed.size());
  const std::int64_t h = n / m;

  Rational delta(0);
  for (std::int64_t i = h; i < n; ++i) delta += fixed[static_cast<std::size_t>(i)];
  std::vector<Rational> pre(static_cast<std::size_t>(n) + 1, Rational(0));
  for (std::int64_t i = 0; i < n; ++i)
    pre[static_cast<std::size_t>(i + 1)] = pre[static_cast<std::size_t>(i)] + fixed[static_cast<std::size_t>(i)];

  PartnerResult res;
  LpProblem p;
  p.num_vars = static_cast<std::size_t>(h > 0 ? h - 1 : 0);  // u_2..u_h
  p.objective.assign(p.num_vars, Rational(1));
  p.objective_offset = delta;
  p.var_names.resize(p.num_vars);
  for (std::size_t i = 0; i < p.num_vars; ++i) p.var_names[i] = "u" + std::to_string(i + 2);

  auto make_row = [&p](Rel rel, Rational rhs) {
    LpConstraint r;
    r.coef.assign(p.num_vars, Rational(0));
    r.rel = rel;
    r.rhs = std::move(rhs);
    return r;
  };

  // caps w_i >= 0, i.e. u_i <= w'_i
  for (std::int64_t i = 2; i <= h; ++i) {
    auto r = make_row(Rel::le, fixed[static_cast<std::size_t>(i - 1)]);
    r.coef[static_cast<std::size_t>(i - 2)] = 1;
    p.rows.push_back(std::move(r));
  }
  // sortedness w_1 >= w_2: -sum_j u_j - u_2 <= w'_1 + delta - w'_2
  if (h >= 2) {
    auto r = make_row(Rel::le, fixed[0] + delta - fixed[1]);
    for (std::size_t j = 0; j < p.num_vars; ++j) r.coef[j] = -1;
    r.coef[0] -= 1;
    p.rows.push_back(std::move(r));
  }
  // sortedness w_i >= w_{i+1}, i = 2..h-1: u_i - u_{i+1} <= w'_i - w'_{i+1}
  for (std::int64_t i = 2; i + 1 <= h; ++i) {
    auto r = make_row(
        Rel::le, fixed[static_cast<std::size_t>(i - 1)] - fixed[static_cast<std::size_t>(i)]);
    r.coef[static_cast<std::size_t>(i - 2)] = 1;
    r.coef[static_cast<std::size_t>(i - 1)] = -1;
    p.rows.push_back(std::move(r));
  }
  // prefix conditions, k = 1..n-1 (q >= h rows are slack: their lhs is 1)
  for (std::int64_t k = 1; k < n; ++k) {
    const std::int64_t q = k / m, r = k % m;
    if (q >= h) continue;
    Rational rhs;
    LpConstraint row = make_row(Rel::ge, Rational(0));
    if (q == 0) {
      // (r/m) w_1 >= R_k
      rhs = Rational(m, r) * pre[static_cast<std::size_t>(k)] - fixed[0] - delta;
      for (std::size_t j = 0; j < p.num_vars; ++j) row.coef[j] = 1;
    } else {
      // sum_{i<=q} w_i + (r/m) w_{q+1} >= R_k
      rhs = pre[static_cast<std::size_t>(k)] - pre[static_cast<std::size_t>(q)] - delta -
            Rational(r, m) * fixed[static_cast<std::size_t>(q)];
      row.coef[static_cast<std::size_t>(q - 1)] = Rational(m - r, m);  // u_{q+1}
      for (std::int64_t j = q + 2; j <= h; ++j) row.coef[static_cast<std::size_t>(j - 2)] = 1;
    }
    if (rhs.sign() <= 0) continue;  // trivially satisfied
    bool has_var = false;
    for (const auto& c : row.coef)
      if (c.sign() != 0) {
        has_var = true;
        break;
      }
    if (!has_var) {
      res.status = LpStatus::infeasible;  // positive requirement, no variables left
      return res;
    }
    row.rhs = std::move(rhs);
    p.rows.push_back(std::move(row));
  }

  LpSolution sol = solve_lp(p, opt);
  res.iterations = sol.iterations;
  if (sol.status != LpStatus::optimal) {
    res.status = sol.status;
    return res;
  }

  std::vector<Rational> w(static_cast<std::size_t>(n), Rational(0));
  Rational usum(0);
  for (const auto& u : sol.x) usum += u;
  w[0] = fixed[0] + delta + usum;
  for (std::int64_t i = 2; i <= h; ++i)
    w[static_cast<std::size_t>(i - 1)] =
        fixed[static_cast<std::size_t>(i - 1)] - sol.x[static_cast<std::size_t>(i - 2)];

  res.status = LpStatus::optimal;
  res.partner = ProbVec<Rational>{std::move(w)};
  res.distance = sol.objective;

  CatalystPair<Rational> pair{m, res.partner, fixed};
  if (!check_transformation(pair))
    throw std::logic_error("nearest_feasible_partner: optimizer fails the exact transformation check");
  if (trace_distance(res.partner, fixed) != res.distance)
    throw std::logic_error("nearest_feasible_partner: distance mismatch");
  return res;
}

// Fixed input w: minimize over outputs w'. Small instances only; the
// straightforward formulation with t_i >= |w'_i - w_i| is used as-is.
inline PartnerResult partner_fixed_input(const ProbVec<Rational>& fixed, int m,
                                         const SolveOptions& opt) {
  const auto n = static_cast<std::int64_t>(fixed.size());
  const auto un = static_cast<std::size_t>(n);

  LpProblem p;
  p.num_vars = 2 * un;  // [w' | t]
  p.objective.assign(p.num_vars, Rational(0));
  for (std::size_t i = 0; i < un; ++i) p.objective[un + i] = Rational(1, 2);
  p.var_names.resize(p.num_vars);
  for (std::size_t i = 0; i < un; ++i) {
    p.var_names[i] = "wp" + std::to_string(i + 1);
    p.var_names[un + i] = "t" + std::to_string(i + 1);
  }

  auto make_row = [&p](Rel rel, Rational rhs) {
    LpConstraint r;
    r.coef.assign(p.num_vars, Rational(0));
    r.rel = rel;
    r.rhs = std::move(rhs);
    return r;
  };

  for (std::size_t i = 0; i < un; ++i) {
    auto r1 = make_row(Rel::le, fixed[i]);  // w'_i - t_i <= w_i
    r1.coef[i] = 1;
    r1.coef[un + i] = -1;
    p.rows.push_back(std::move(r1));
    auto r2 = make_row(Rel::le, -fixed[i]);  // -w'_i - t_i <= -w_i
    r2.coef[i] = -1;
    r2.coef[un + i] = -1;
    p.rows.push_back(std::move(r2));
  }
  for (std::size_t i = 0; i + 1 < un; ++i) {
    auto r = make_row(Rel::le, Rational(0));
    r.coef[i + 1] = 1;
    r.coef[i] = -1;
    p.rows.push_back(std::move(r));
  }
  {
    auto r = make_row(Rel::eq, Rational(1));
    for (std::size_t i = 0; i < un; ++i) r.coef[i] = 1;
    p.rows.push_back(std::move(r));
  }
  for (std::int64_t k = 1; k <= n; ++k) {
    const std::int64_t q = k / m, r = k % m;
    Rational cap(0);
    for (std::int64_t i = 0; i < q; ++i) cap += fixed[static_cast<std::size_t>(i)];
    if (r > 0 && q < n) cap += Rational(r, m) * fixed[static_cast<std::size_t>(q)];
    auto row = make_row(Rel::le, cap);
    for (std::int64_t i = 0; i < k; ++i) row.coef[static_cast<std::size_t>(i)] = 1;
    p.rows.push_back(std::move(row));
  }

  LpSolution sol = solve_lp(p, opt);
  PartnerResult res;
  res.iterations = sol.iterations;
  if (sol.status != LpStatus::optimal) {
    res.status = sol.status;
    return res;
  }
  std::vector<Rational> wp(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(un));
  res.status = LpStatus::optimal;
  res.partner = ProbVec<Rational>{std::move(wp)};
  res.distance = sol.objective;

  CatalystPair<Rational> pair{m, fixed, res.partner};
  if (!check_transformation(pair))
    throw std::logic_error("nearest_feasible_partner: optimizer fails the exact transformation check");
  if (trace_distance(fixed, res.partner) != res.distance)
    throw std::logic_error("nearest_feasible_partner: distance mismatch");
  return res;
}

}  // namespace detail

// Best feasible partner for one fixed side of the transformation, with the
// minimal trace distance. Fixing the output is the usual direction (any
// full-rank fixed input is infeasible: feasible inputs have rank <= n/m).
inline PartnerResult nearest_feasible_partner(const ProbVec<Rational>& fixed,
                                              FixedSide side, int m,
                                              const SolveOptions& opt = {}) {
  validate_prob_vec(fixed);
  if (!is_sorted_desc(fixed))
    throw std::invalid_argument("nearest_feasible_partner: fixed side must be sorted descending");
  if (m < 2) throw std::invalid_argument("nearest_feasible_partner: m must be >= 2");
  const auto n = static_cast<std::int64_t>(fixed.size());
  if (n < 2 || n > kMaxLpDim)
    throw std::invalid_argument("nearest_feasible_partner: dimension must be in [2, 256]");
  return side == FixedSide::output ? detail::partner_fixed_output(fixed, m, opt)
                                   : detail::partner_fixed_input(fixed, m, opt);
}

// Exact certification that the closed-form family error is LP-optimal at
// n = m^a: solves the full problem and compares rationals for equality.
inline bool certify_optimality(int m, int a) {
  const std::int64_t n = family_dim(m, a);
  if (n > kMaxLpDim)
    throw std::invalid_argument("certify_optimality: n = m^a exceeds the LP size cap (256)");
  const LpSolution sol = solve_lp(build_embezzle_lp(m, n));
  return sol.status == LpStatus::optimal && sol.objective == optimal_error<Rational>(m, a);
}

}  // namespace thermocat
