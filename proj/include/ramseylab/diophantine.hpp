#pragma once

/**
 * Diophantine approximation of a quadratic irrational alpha: continued
 * fraction convergents and exact searches for integer pairs (r, s) landing
 * r - alpha*s in prescribed negative windows. Every returned pair is
 * re-verified with exact sign tests before it is trusted.
 */

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "ramseylab/error.hpp"
#include "ramseylab/quadratic.hpp"
#include "ramseylab/rational.hpp"

namespace ramseylab::predim {

struct ApproxPair {
  long long r = 0;
  long long s = 0;
};

namespace detail {

inline long long isqrt_floor(long long n) {
  long long s = (long long)std::sqrt((double)n);
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

inline long long floor_div(long long num, long long den) {
  long long q = num / den, r = num % den;
  return (r != 0 && ((r < 0) != (den < 0))) ? q - 1 : q;
}

// Continued fraction state for (P + sqrt(D)) / Q with Q | (D - P^2).
struct QuadCF {
  long long p, q, d, sq;

  explicit QuadCF(const Alpha& alpha) {
    long long a = alpha.a(), b = alpha.b(), c = alpha.c();
    if (b > 0) {
      p = a;
      q = c;
    } else {
      p = -a;
      q = -c;
    }
    d = checked_mul(checked_mul(b, b), alpha.d());
    if ((d - checked_mul(p, p)) % q != 0) {
      long long aq = std::llabs(q);
      p = checked_mul(p, aq);
      d = checked_mul(d, checked_mul(aq, aq));
      q = checked_mul(q, aq);
    }
    sq = isqrt_floor(d);
  }

  // Next partial quotient; sqrt(D) is irrational so floors are unambiguous.
  // For Q < 0: floor((P + sqrt(D))/Q) = -ceil((P + sqrt(D))/|Q|), and the
  // ceiling of a non-integer is its floor plus one.
  long long next() {
    long long a_i = (q > 0) ? floor_div(p + sq, q)
                            : -(floor_div(p + sq, -q) + 1);
    long long p2 = a_i * q - p;
    long long q2 = (d - checked_mul(p2, p2)) / q;
    p = p2;
    q = q2;
    return a_i;
  }
};

}  // namespace detail

// Convergents h/k of alpha with h - alpha*k < 0, in order of growing k.
// Visit returns false to stop.
template <typename Visit>
inline void for_each_lower_convergent(const Alpha& alpha, BigInt k_cap,
                                      Visit visit) {
  detail::QuadCF cf(alpha);
  BigInt h1 = 1, h2 = 0;  // h_{i-1}, h_{i-2}
  BigInt k1 = 0, k2 = 1;  // k_{i-1}, k_{i-2}
  for (int i = 0; i < 256; ++i) {
    long long a_i = cf.next();
    BigInt h = a_i * h1 + h2;
    BigInt k = a_i * k1 + k2;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    if (k > k_cap) return;
    if (i % 2 == 0) {  // even-indexed convergents sit below alpha
      if (!visit(h, k)) return;
    }
  }
}

// Smallest-denominator convergent (r, s) with s >= N and -1/N < r - alpha*s < 0.
// Any lower convergent with s >= N works: |r - alpha*s| < 1/s_next < 1/N.
// The inequality is still re-checked exactly before returning.
inline ApproxPair approx_below(const Alpha& alpha, long long n,
                               long long s_cap = 1'000'000'000'000LL) {
  require(n >= 1, ErrorCode::DomainError, "N must be positive");
  ApproxPair out;
  bool found = false;
  for_each_lower_convergent(alpha, BigInt(s_cap), [&](const BigInt& h,
                                                      const BigInt& k) {
    if (k < n) return true;
    out.r = (long long)h;
    out.s = (long long)k;
    found = true;
    return false;
  });
  require(found, ErrorCode::NotFound, "no convergent with s in [N, s_cap]");
  QuadValue err = DeltaValue(out.r, out.s).eval(alpha);
  require(err.sign() < 0, ErrorCode::DomainError, "internal: wrong error sign");
  require((err + QuadValue::rational(Rational(1, n), alpha.d())).sign() > 0,
          ErrorCode::DomainError, "internal: error not within -1/N");
  return out;
}

// Smallest integer >= x.
inline long long ceil_exact(const QuadValue& x) {
  long long n = (long long)std::ceil(x.to_double()) - 2;
  while (QuadValue::integer(n, x.d) < x) ++n;
  while (QuadValue::integer(n - 1, x.d) >= x) --n;
  return n;
}

struct HitOptions {
  long long r_min = 0;
  long long r_cap = 1'000'000;
  // Extra feasibility constraint on candidate pairs, e.g. realizability of a
  // bipartite piece with r vertices and s-r internal edges.
  std::function<bool(long long r, long long s)> accept;
};

// First (r, s), sweeping r upward from r_min, with lo < r - alpha*s <= hi
// and accept(r, s); the integer window for s is solved exactly per r.
inline ApproxPair hit_interval(const Alpha& alpha, const QuadValue& lo,
                               const QuadValue& hi, const HitOptions& opts = {}) {
  require((hi - lo).sign() > 0, ErrorCode::DomainError, "empty interval");
  require(hi.sign() <= 0, ErrorCode::DomainError,
          "interval must sit at or below zero");
  for (long long r = std::max<long long>(0, opts.r_min); r <= opts.r_cap; ++r) {
    QuadValue rq = QuadValue::integer(r, alpha.d());
    // lo < r - alpha*s <= hi  <=>  (r - hi)/alpha <= s < (r - lo)/alpha
    long long s_begin = ceil_exact((rq - hi) / alpha.value());
    long long s_end = ceil_exact((rq - lo) / alpha.value());
    for (long long s = s_begin; s < s_end; ++s) {
      if (s < 0) continue;
      QuadValue err = DeltaValue(r, s).eval(alpha);
      if (!((lo - err).sign() < 0 && (err - hi).sign() <= 0)) continue;
      if (opts.accept && !opts.accept(r, s)) continue;
      return ApproxPair{r, s};
    }
  }
  fail(ErrorCode::NotFound, "no pair hits the interval within r_cap");
}

}  // namespace ramseylab::predim
