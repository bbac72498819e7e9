#pragma once

/**
 * Monte-Carlo search for matrices that exhibit every k-configuration yet fail
 * the convex Ramsey condition: half-ones base matrix, independent Bernoulli
 * entry flips, per-trial verdicts and the associated union/tail bounds.
 *
 * Randomness comes from the counter-based stream in rng.hpp keyed by
 * (seed, trial_index, entry). Entry index is row-major (i * n + j). Trials
 * are therefore independent of evaluation order and safe to run in parallel.
 * Cross-implementation bit-exactness is not promised; tests on trial output
 * are distributional or implementation-pinned regression fixtures.
 */

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramseylab/binary_matrix.hpp"
#include "ramseylab/error.hpp"
#include "ramseylab/rational.hpp"
#include "ramseylab/rng.hpp"
#include "ramseylab/spread.hpp"

namespace ramseylab::trials {

using matrices::BinaryMatrix;

struct TrialSpec {
  std::size_t n = 0;  // even
  std::size_t k = 1;
  Rational p;  // flip probability, exact
  std::uint64_t seed = 0;
  std::size_t trial_index = 0;
};

struct TrialResult {
  bool config_ok = false;
  bool convex_failed = false;
  std::string verdict_source;
  std::vector<std::size_t> flip_counts;  // per-row Hamming distance to the base
  Rational halving_bound;                // natural bipartition certificate
  std::chrono::microseconds elapsed{0};
};

struct BoundsReport {
  double config_union_bound = 0;         // 2 n (n-1) e^{-p^2 n}
  double kl = 0;                          // D(t || p)
  std::optional<double> flip_tail_bound;  // n e^{-n D(t||p)}, only when t > p
};

// n x n matrix, every row has n/2 ones then n/2 zeros.
inline BinaryMatrix base_matrix(std::size_t n) {
  require(n >= 2 && n % 2 == 0, ErrorCode::OddDimension,
          "base matrix needs an even dimension >= 2");
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n / 2; ++j) m.set(i, j);
  return m;
}

// Each entry flips independently with probability exactly p, drawn from the
// counter stream for (seed, trial_index).
inline BinaryMatrix perturb(const BinaryMatrix& y, const Rational& p,
                            std::uint64_t seed, std::size_t trial_index) {
  require(p >= 0 && p <= 1, ErrorCode::DomainError, "p must lie in [0,1]");
  const std::uint64_t num = (std::uint64_t)numerator(p);
  const std::uint64_t den = (std::uint64_t)denominator(p);
  BinaryMatrix x = y;
  for (std::size_t i = 0; i < y.n_rows(); ++i)
    for (std::size_t j = 0; j < y.n_cols(); ++j) {
      std::uint64_t u = counter_rng(seed, trial_index, i * y.n_cols() + j);
      if (bernoulli_exact(u, num, den)) x.flip(i, j);
    }
  return x;
}

inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
natural_bipartition(std::size_t n) {
  std::vector<std::size_t> left(n / 2), right(n - n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) left[j] = j;
  for (std::size_t j = n / 2; j < n; ++j) right[j - n / 2] = j;
  return {left, right};
}

inline TrialResult run_trial(const TrialSpec& spec) {
  require(spec.k >= 1 && spec.k <= spec.n, ErrorCode::KOutOfRange,
          "k must satisfy 1 <= k <= n");
  auto start = std::chrono::steady_clock::now();
  BinaryMatrix y = base_matrix(spec.n);
  BinaryMatrix x = perturb(y, spec.p, spec.seed, spec.trial_index);

  TrialResult res;
  res.flip_counts.assign(spec.n, 0);
  for (std::size_t i = 0; i < spec.n; ++i)
    for (std::size_t j = 0; j < spec.n; ++j)
      if (x.get(i, j) != y.get(i, j)) ++res.flip_counts[i];

  res.config_ok = matrices::k_config_check(x, spec.k).holds;

  auto [left, right] = natural_bipartition(spec.n);
  convex::DecideOptions opts;
  opts.halving_split = {{left, right}};
  auto verdict = convex::convex_ramsey_decide(x, opts);
  res.convex_failed = !verdict.satisfies;
  res.verdict_source = verdict.source;
  res.halving_bound = verdict.halving_bound
                          ? *verdict.halving_bound
                          : convex::halving_lower_bound(x, left, right).bound;
  res.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return res;
}

// n^exponent rounded to a rational with denominator 10^6, clamped into (0,1).
inline Rational power_probability(std::size_t n, double exponent) {
  double v = std::pow((double)n, exponent);
  long long num = std::llround(v * 1e6);
  num = std::max<long long>(1, std::min<long long>(999999, num));
  return Rational(num, 1000000);
}

struct SweepRow {
  std::size_t n = 0;
  Rational p;
  std::size_t trials = 0;
  std::size_t config_ok = 0;
  std::size_t convex_failed = 0;
  std::size_t both = 0;
  double mean_flip_fraction = 0;
};

// For each n: p = n^(-1/k+eps) rounded to denominator 10^6, `trials`
// independent trials, empirical counts of the two conditions.
inline std::vector<SweepRow> sweep(const std::vector<std::size_t>& n_list,
                                   std::size_t k, const Rational& eps,
                                   std::size_t trial_count, std::uint64_t seed) {
  require(eps > 0, ErrorCode::DomainError, "eps must be positive");
  double exponent = -1.0 / (double)k + (double)numerator(eps) /
                                           (double)denominator(eps);
  require(exponent < 0, ErrorCode::DomainError,
          "-1/k + eps must stay negative");
  std::vector<SweepRow> rows;
  for (std::size_t n : n_list) {
    SweepRow row;
    row.n = n;
    row.p = power_probability(n, exponent);
    row.trials = trial_count;
    double flip_sum = 0;
    for (std::size_t t = 0; t < trial_count; ++t) {
      TrialSpec spec{n, k, row.p, seed, t};
      TrialResult r = run_trial(spec);
      if (r.config_ok) ++row.config_ok;
      if (r.convex_failed) ++row.convex_failed;
      if (r.config_ok && r.convex_failed) ++row.both;
      std::size_t flips = 0;
      for (auto c : r.flip_counts) flips += c;
      flip_sum += (double)flips / ((double)n * (double)n);
    }
    row.mean_flip_fraction = trial_count ? flip_sum / (double)trial_count : 0.0;
    rows.push_back(row);
  }
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "n,p_num,p_den,trials,config_ok,convex_failed,both,mean_flip_fraction\n";
  char buf[64];
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + numerator(r.p).str() + "," +
           denominator(r.p).str() + "," + std::to_string(r.trials) + "," +
           std::to_string(r.config_ok) + "," + std::to_string(r.convex_failed) +
           "," + std::to_string(r.both) + ",";
    std::snprintf(buf, sizeof buf, "%.6f", r.mean_flip_fraction);
    out += buf;
    out += "\n";
  }
  return out;
}

inline double kl_divergence(double x, double y) {
  require(x > 0 && x < 1 && y > 0 && y < 1, ErrorCode::DomainError,
          "KL divergence needs arguments in (0,1)");
  return x * std::log(x / y) + (1 - x) * std::log((1 - x) / (1 - y));
}

// The union bound for a failed k=2 configuration and the binomial tail bound
// for per-row flip counts, at flip fraction t.
inline BoundsReport bounds(std::size_t n, const Rational& p, const Rational& t) {
  require(p > 0 && p < 1, ErrorCode::DomainError, "p must lie in (0,1)");
  require(t > 0 && t < 1, ErrorCode::DomainError, "t must lie in (0,1)");
  double pd = (double)numerator(p) / (double)denominator(p);
  double td = (double)numerator(t) / (double)denominator(t);
  BoundsReport rep;
  rep.config_union_bound =
      2.0 * (double)n * ((double)n - 1) * std::exp(-pd * pd * (double)n);
  rep.kl = kl_divergence(td, pd);
  if (t > p) rep.flip_tail_bound = (double)n * std::exp(-(double)n * rep.kl);
  return rep;
}

}  // namespace ramseylab::trials
