#pragma once

/**
 * Exact decision procedure for the convex Ramsey condition of a 0/1 matrix.
 *
 * A matrix satisfies the condition iff some convex combination P of its rows
 * has spread(P*M) <= 1/2, where spread(v) = max_j v_j - min_j v_j. The
 * optimal spread t* is computed by an exact rational simplex; the threshold
 * sits exactly on plausible optima, so every verdict-bearing comparison is
 * done in rational arithmetic. A basic-solution enumeration oracle and a
 * one-sided averaging certificate provide independent cross-checks.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramseylab/binary_matrix.hpp"
#include "ramseylab/error.hpp"
#include "ramseylab/rational.hpp"

namespace ramseylab::convex {

using matrices::BinaryMatrix;

struct ProbabilityVector {
  std::vector<Rational> weights;

  void validate() const {
    Rational sum = 0;
    for (const auto& w : weights) {
      require(w >= 0, ErrorCode::DomainError, "negative probability weight");
      sum += w;
    }
    require(sum == 1, ErrorCode::DomainError, "weights must sum to 1");
  }
};

// Column-pair selector: P*M*W = (P*M)[plus] - (P*M)[minus].
struct DiracWeight {
  std::size_t plus;
  std::size_t minus;
};

struct SpreadResult {
  std::optional<Rational> optimum;           // t*, absent on the halving path
  std::optional<ProbabilityVector> witness;  // attains t* when present
  bool satisfies = false;                    // t* <= 1/2
  std::string source;                        // "lp" | "constant-row" | "halving"
  std::optional<Rational> halving_bound;     // set when a split was evaluated
};

struct HalvingCertificate {
  std::vector<std::size_t> left_cols;
  std::vector<std::size_t> right_cols;
  Rational bound;  // <= spread(P*M) for every probability vector P
};

inline std::vector<Rational> row_image(const ProbabilityVector& p,
                                       const BinaryMatrix& m) {
  require(p.weights.size() == m.n_rows(), ErrorCode::DomainError,
          "weight count must equal row count");
  std::vector<Rational> v(m.n_cols(), Rational(0));
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    if (p.weights[i] == 0) continue;
    for (std::size_t j = 0; j < m.n_cols(); ++j)
      if (m.get(i, j)) v[j] += p.weights[i];
  }
  return v;
}

inline Rational spread(const std::vector<Rational>& v) {
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

inline Rational spread(const ProbabilityVector& p, const BinaryMatrix& m) {
  return spread(row_image(p, m));
}

namespace detail {

// Dense two-phase simplex over exact rationals, Bland's rule for entering and
// leaving variables. Small LPs only; correctness over speed.
class ExactSimplex {
 public:
  // min c.x subject to A x = b, x >= 0. A is r x n.
  ExactSimplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
               std::vector<Rational> c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
        rows_(a_.size()), n_(c_.size()) {
    for (std::size_t i = 0; i < rows_; ++i)
      if (b_[i] < 0) {
        for (auto& v : a_[i]) v = -v;
        b_[i] = -b_[i];
      }
  }

  // Returns the optimum; solution() gives x afterwards. Throws on
  // infeasible/unbounded (cannot happen for the spread LP).
  Rational solve() {
    const std::size_t total = n_ + rows_;  // artificials appended
    t_.assign(rows_, std::vector<Rational>(total + 1, Rational(0)));
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = a_[i][j];
      t_[i][n_ + i] = 1;
      t_[i][total] = b_[i];
      basis_[i] = n_ + i;
    }
    // Phase 1: minimize the sum of artificials.
    std::vector<Rational> phase1(total, Rational(0));
    for (std::size_t j = n_; j < total; ++j) phase1[j] = 1;
    Rational art = run_phase(phase1, total);
    require(art == 0, ErrorCode::DomainError, "LP infeasible");
    purge_artificials(total);
    std::vector<Rational> phase2(total, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) phase2[j] = c_[j];
    return run_phase(phase2, n_);
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = t_[i].back();
    return x;
  }

 private:
  // One simplex phase over columns [0, limit); returns the phase objective.
  Rational run_phase(const std::vector<Rational>& cost, std::size_t limit) {
    for (;;) {
      std::vector<char> in_basis(cost.size(), 0);
      for (std::size_t i = 0; i < rows_; ++i) in_basis[basis_[i]] = 1;
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (in_basis[j]) continue;
        if (reduced_cost(cost, j) < 0) { enter = j; break; }  // Bland
      }
      if (enter == limit) break;
      std::size_t leave = rows_;
      Rational best_ratio = 0;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i].back() / t_[i][enter];
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      require(leave != rows_, ErrorCode::DomainError, "LP unbounded");
      pivot(leave, enter);
    }
    Rational obj = 0;
    for (std::size_t i = 0; i < rows_; ++i) obj += cost[basis_[i]] * t_[i].back();
    return obj;
  }

  Rational reduced_cost(const std::vector<Rational>& cost, std::size_t j) const {
    Rational z = cost[j];
    for (std::size_t i = 0; i < rows_; ++i)
      if (cost[basis_[i]] != 0) z -= cost[basis_[i]] * t_[i][j];
    return z;
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = t_[row][col];
    for (auto& v : t_[row]) v /= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || t_[i][col] == 0) continue;
      Rational f = t_[i][col];
      for (std::size_t j = 0; j < t_[i].size(); ++j) t_[i][j] -= f * t_[row][j];
    }
    basis_[row] = col;
  }

  // Pivot basic artificials onto structural columns; drop rows that are
  // entirely redundant.
  void purge_artificials(std::size_t total) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < n_) continue;
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (t_[i][j] != 0) { col = j; break; }
      if (col < n_) {
        pivot(i, col);
      } else {
        t_.erase(t_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --rows_;
        --i;
      }
    }
    (void)total;
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<Rational> c_;
  std::size_t rows_, n_;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

// Exact minimum of spread(P*M) over all probability vectors P.
//
// LP formulation: minimize u - l subject to l <= (P*M)_j <= u for every
// column j and P in the standard simplex. Since every (P*M)_j lies in [0,1],
// restricting l, u >= 0 does not change the optimum, which keeps all
// variables nonnegative.
inline SpreadResult min_spread(const BinaryMatrix& m) {
  const std::size_t t = m.n_rows(), cols = m.n_cols();
  // Variables: p_0..p_{t-1}, l, u, s_0..s_{cols-1}, w_0..w_{cols-1}.
  const std::size_t n = t + 2 + 2 * cols;
  const std::size_t il = t, iu = t + 1, is = t + 2, iw = t + 2 + cols;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  {
    std::vector<Rational> row(n, Rational(0));
    for (std::size_t i = 0; i < t; ++i) row[i] = 1;
    a.push_back(row);
    b.push_back(1);
  }
  for (std::size_t j = 0; j < cols; ++j) {  // (M^T p)_j - l - s_j = 0
    std::vector<Rational> row(n, Rational(0));
    for (std::size_t i = 0; i < t; ++i) row[i] = m.get(i, j);
    row[il] = -1;
    row[is + j] = -1;
    a.push_back(row);
    b.push_back(0);
  }
  for (std::size_t j = 0; j < cols; ++j) {  // u - (M^T p)_j - w_j = 0
    std::vector<Rational> row(n, Rational(0));
    for (std::size_t i = 0; i < t; ++i) row[i] = -Rational(m.get(i, j));
    row[iu] = 1;
    row[iw + j] = -1;
    a.push_back(row);
    b.push_back(0);
  }
  std::vector<Rational> c(n, Rational(0));
  c[iu] = 1;
  c[il] = -1;

  detail::ExactSimplex lp(std::move(a), std::move(b), std::move(c));
  Rational opt = lp.solve();
  std::vector<Rational> x = lp.solution();
  ProbabilityVector witness{std::vector<Rational>(x.begin(), x.begin() + t)};
  witness.validate();
  require(spread(witness, m) == opt, ErrorCode::DomainError,
          "internal: witness does not reproduce the optimum");
  SpreadResult res;
  res.optimum = opt;
  res.witness = std::move(witness);
  res.satisfies = opt <= Rational(1, 2);
  res.source = "lp";
  return res;
}

// Averaging certificate: for any probability vector P,
//   spread(P*M) >= mean of P*M over left_cols - mean over right_cols
//               >= min over rows i of (mean_left(row_i) - mean_right(row_i)).
// A bound > 1/2 certifies failure of the convex Ramsey condition without
// solving the LP.
inline HalvingCertificate halving_lower_bound(
    const BinaryMatrix& m, const std::vector<std::size_t>& left_cols,
    const std::vector<std::size_t>& right_cols) {
  require(!left_cols.empty() && !right_cols.empty(), ErrorCode::DomainError,
          "column sets must be nonempty");
  for (std::size_t j : left_cols)
    require(j < m.n_cols(), ErrorCode::DomainError, "left column out of range");
  for (std::size_t j : right_cols) {
    require(j < m.n_cols(), ErrorCode::DomainError, "right column out of range");
    require(std::find(left_cols.begin(), left_cols.end(), j) == left_cols.end(),
            ErrorCode::DomainError, "column sets must be disjoint");
  }
  std::optional<Rational> best;
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    long long lsum = 0, rsum = 0;
    for (std::size_t j : left_cols) lsum += m.get(i, j);
    for (std::size_t j : right_cols) rsum += m.get(i, j);
    Rational v = Rational(lsum, (long long)left_cols.size()) -
                 Rational(rsum, (long long)right_cols.size());
    if (!best || v < *best) best = v;
  }
  return HalvingCertificate{left_cols, right_cols, *best};
}

namespace detail {

// Fraction-free Gauss-Jordan (Montante/Bareiss). On success every diagonal
// entry equals det of the row-permuted system and the augmented column holds
// the matching Cramer numerators, all exactly; entries stay bounded by minors
// of the input, so int64 is safe for the 0/+-1 systems the oracle builds.
inline bool bareiss_solve(std::vector<std::array<long long, 9>>& m, int dim,
                          long long& det) {
  long long prev = 1;
  for (int k = 0; k < dim; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < dim; ++i)
        if (m[i][k] != 0) { swap_row = i; break; }
      if (swap_row < 0) return false;
      std::swap(m[k], m[swap_row]);
    }
    for (int i = 0; i < dim; ++i) {
      if (i == k) continue;
      for (int j = 0; j <= dim; ++j) {
        if (j == k) continue;
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  det = prev;
  return det != 0;
}

inline Rational ratio(long long num, long long den) {
  if (den < 0) { num = -num; den = -den; }
  return Rational(num, den);
}

}  // namespace detail

// Independent verification oracle: enumerates every basic solution of the
// spread LP polyhedron in (p, l, u) space and returns the best feasible
// objective. Shares nothing with the simplex path.
inline Rational spread_oracle_small(const BinaryMatrix& m) {
  const std::size_t t = m.n_rows(), cols = m.n_cols();
  require(t <= 6 && cols <= 6, ErrorCode::SizeLimit,
          "oracle limited to 6x6 matrices");
  const int dim = (int)t + 2;  // variables p_0..p_{t-1}, l, u
  // Inequality constraints g.x >= 0: p_i >= 0; (M^T p)_j - l >= 0;
  // u - (M^T p)_j >= 0. The equality sum(p) = 1 is always active.
  std::vector<std::array<long long, 9>> cons;
  for (std::size_t i = 0; i < t; ++i) {
    std::array<long long, 9> g{};
    g[i] = 1;
    cons.push_back(g);
  }
  for (std::size_t j = 0; j < cols; ++j) {
    std::array<long long, 9> g{};
    for (std::size_t i = 0; i < t; ++i) g[i] = m.get(i, j);
    g[t] = -1;
    cons.push_back(g);
  }
  for (std::size_t j = 0; j < cols; ++j) {
    std::array<long long, 9> g{};
    for (std::size_t i = 0; i < t; ++i) g[i] = -m.get(i, j);
    g[t + 1] = 1;
    cons.push_back(g);
  }

  std::optional<Rational> best;
  const int n_cons = (int)cons.size();
  const int pick = dim - 1;  // active inequalities at a basic solution
  std::vector<int> idx(pick);
  for (int i = 0; i < pick; ++i) idx[i] = i;
  for (;;) {
    std::vector<std::array<long long, 9>> sys(dim);
    for (int j = 0; j < dim; ++j) sys[0][j] = (j < (int)t) ? 1 : 0;
    sys[0][dim] = 1;  // sum p = 1
    for (int r = 0; r < pick; ++r) {
      sys[r + 1] = cons[idx[r]];
      sys[r + 1][dim] = 0;
    }
    long long det = 0;
    if (detail::bareiss_solve(sys, dim, det)) {
      // Candidate vertex x_i = sys[i][dim] / det; check every constraint.
      bool feasible = true;
      for (int cidx = 0; cidx < n_cons && feasible; ++cidx) {
        long long val = 0;
        for (int j = 0; j < dim; ++j) val += cons[cidx][j] * sys[j][dim];
        if (det > 0 ? val < 0 : val > 0) feasible = false;
      }
      if (feasible) {
        Rational obj = detail::ratio(sys[dim - 1][dim] - sys[dim - 2][dim], det);
        if (!best || obj < *best) best = obj;
      }
    }
    int i = pick - 1;
    while (i >= 0 && idx[i] == n_cons - pick + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  require(best.has_value(), ErrorCode::DomainError,
          "internal: no feasible basic solution");
  return *best;
}

struct DecideOptions {
  // Natural column bipartition for the halving fast path, when known.
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
      halving_split;
  std::size_t exact_lp_row_limit = 256;
};

// Full decision: dedupe rows, try the cheap one-sided certificates, then the
// exact LP. The verdict source is reported in the result.
inline SpreadResult convex_ramsey_decide(const BinaryMatrix& m,
                                         const DecideOptions& opts = {}) {
  auto [distinct, mult] = matrices::dedupe_rows(m);
  (void)mult;
  for (std::size_t i = 0; i < distinct.n_rows(); ++i) {
    bool constant = true;
    int first = distinct.get(i, 0);
    for (std::size_t j = 1; j < distinct.n_cols() && constant; ++j)
      if (distinct.get(i, j) != first) constant = false;
    if (constant) {
      SpreadResult res;
      res.optimum = Rational(0);
      ProbabilityVector w{std::vector<Rational>(distinct.n_rows(), Rational(0))};
      w.weights[i] = 1;
      res.witness = std::move(w);
      res.satisfies = true;
      res.source = "constant-row";
      return res;
    }
  }
  std::optional<Rational> halving;
  if (opts.halving_split) {
    halving = halving_lower_bound(distinct, opts.halving_split->first,
                                  opts.halving_split->second)
                  .bound;
    if (*halving > Rational(1, 2)) {
      SpreadResult res;
      res.satisfies = false;
      res.source = "halving";
      res.halving_bound = halving;
      return res;
    }
  }
  SpreadResult res = min_spread(distinct);
  res.halving_bound = halving;
  return res;
}

}  // namespace ramseylab::convex
