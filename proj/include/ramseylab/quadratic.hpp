#pragma once

/**
 * Exact arithmetic in Z[sqrt(d)] with rational denominators: values of the
 * form (a + b*sqrt(d))/c. Sign tests reduce to integer comparisons of squares
 * with sign bookkeeping, so every comparison in the pre-dimension calculus is
 * exact. Restricting the edge coefficient alpha to quadratic irrationals
 * keeps signs decidable and continued fractions periodic; every worked
 * example needs nothing more general.
 */

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "ramseylab/error.hpp"
#include "ramseylab/rational.hpp"

namespace ramseylab::predim {

namespace detail {

inline long long checked_mul(long long x, long long y) {
  __int128 p = (__int128)x * y;
  require(p <= INT64_MAX / 4 && p >= INT64_MIN / 4, ErrorCode::SizeLimit,
          "quadratic value overflow");
  return (long long)p;
}

// sign of x + y*sqrt(d), d >= 0
inline int sign_of_quad(long long x, long long y, long long d) {
  if (y == 0) return x > 0 ? 1 : (x < 0 ? -1 : 0);
  if (x == 0) return y > 0 ? 1 : -1;
  if (x > 0 && y > 0) return 1;
  if (x < 0 && y < 0) return -1;
  __int128 xs = (__int128)x * x;
  __int128 ys = (__int128)y * y * d;
  if (xs == ys) return 0;  // only when d is a perfect square
  return (xs > ys) == (x > 0) ? 1 : -1;
}

}  // namespace detail

// (a + b*sqrt(d)) / c, normalized to gcd(a,b,c) = 1 and c > 0.
struct QuadValue {
  long long a = 0;
  long long b = 0;
  long long c = 1;
  long long d = 2;

  QuadValue() = default;
  QuadValue(long long a_, long long b_, long long c_, long long d_)
      : a(a_), b(b_), c(c_), d(d_) {
    require(c != 0, ErrorCode::DomainError, "zero denominator");
    require(d > 0, ErrorCode::DomainError, "radicand must be positive");
    normalize();
  }

  static QuadValue rational(const Rational& r, long long d = 2) {
    require(denominator(r) <= INT64_MAX && numerator(r) <= INT64_MAX &&
                numerator(r) >= INT64_MIN,
            ErrorCode::SizeLimit, "rational out of range");
    return QuadValue((long long)numerator(r), 0, (long long)denominator(r), d);
  }

  static QuadValue integer(long long n, long long d = 2) {
    return QuadValue(n, 0, 1, d);
  }

  void normalize() {
    if (c < 0) { a = -a; b = -b; c = -c; }
    long long g = std::gcd(std::gcd(std::llabs(a), std::llabs(b)), c);
    if (g > 1) { a /= g; b /= g; c /= g; }
  }

  bool is_rational() const { return b == 0; }

  int sign() const { return detail::sign_of_quad(a, b, d); }

  double to_double() const {
    return ((double)a + (double)b * std::sqrt((double)d)) / (double)c;
  }

  QuadValue operator-() const { return QuadValue(-a, -b, c, d); }

  friend QuadValue operator+(const QuadValue& x, const QuadValue& y) {
    long long d = merge_radicand(x, y);
    using detail::checked_mul;
    return QuadValue(checked_mul(x.a, y.c) + checked_mul(y.a, x.c),
                     checked_mul(x.b, y.c) + checked_mul(y.b, x.c),
                     checked_mul(x.c, y.c), d);
  }
  friend QuadValue operator-(const QuadValue& x, const QuadValue& y) {
    return x + (-y);
  }
  friend QuadValue operator*(const QuadValue& x, const QuadValue& y) {
    long long d = merge_radicand(x, y);
    using detail::checked_mul;
    return QuadValue(
        checked_mul(x.a, y.a) + checked_mul(checked_mul(x.b, y.b), d),
        checked_mul(x.a, y.b) + checked_mul(x.b, y.a), checked_mul(x.c, y.c), d);
  }
  // 1/x = c*(a - b*sqrt(d)) / (a^2 - b^2 d)
  QuadValue inverse() const {
    require(sign() != 0, ErrorCode::DomainError, "division by zero");
    using detail::checked_mul;
    long long denom = checked_mul(a, a) - checked_mul(checked_mul(b, b), d);
    require(denom != 0, ErrorCode::DomainError, "division by zero");
    return QuadValue(checked_mul(c, a), -checked_mul(c, b), denom, d);
  }
  friend QuadValue operator/(const QuadValue& x, const QuadValue& y) {
    return x * y.inverse();
  }

  friend bool operator<(const QuadValue& x, const QuadValue& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const QuadValue& x, const QuadValue& y) { return y < x; }
  friend bool operator<=(const QuadValue& x, const QuadValue& y) {
    return !(y < x);
  }
  friend bool operator>=(const QuadValue& x, const QuadValue& y) {
    return !(x < y);
  }
  friend bool operator==(const QuadValue& x, const QuadValue& y) {
    return (x - y).sign() == 0;
  }

  std::string str() const {
    std::string s = "(" + std::to_string(a);
    if (b != 0) {
      s += (b > 0 ? "+" : "-");
      s += std::to_string(std::llabs(b)) + "*sqrt(" + std::to_string(d) + ")";
    }
    s += ")";
    if (c != 1) s += "/" + std::to_string(c);
    return s;
  }

 private:
  static long long merge_radicand(const QuadValue& x, const QuadValue& y) {
    if (x.b == 0) return y.d;
    if (y.b == 0) return x.d;
    require(x.d == y.d, ErrorCode::DomainError,
            "mixed radicands in quadratic arithmetic");
    return x.d;
  }
};

inline bool is_squarefree(long long d) {
  if (d <= 0) return false;
  for (long long q = 2; q * q <= d; ++q)
    if (d % (q * q) == 0) return false;
  return true;
}

// Irrational coefficient alpha = (a + b*sqrt(d))/c in (0,1).
class Alpha {
 public:
  Alpha(long long a, long long b, long long c, long long d) : v_(a, b, c, d) {
    require(b != 0, ErrorCode::DomainError, "alpha must be irrational (b != 0)");
    require(d > 1 && is_squarefree(d), ErrorCode::DomainError,
            "d must be squarefree and > 1");
    require(v_.sign() > 0 && (QuadValue::integer(1, d) - v_).sign() > 0,
            ErrorCode::DomainError, "alpha must lie in (0,1)");
  }

  // Format: "quad:a,b,c,d" meaning (a + b*sqrt(d))/c.
  static Alpha parse(const std::string& text) {
    const std::string prefix = "quad:";
    require(text.rfind(prefix, 0) == 0, ErrorCode::ParseError,
            "alpha must look like 'quad:a,b,c,d'");
    std::string rest = text.substr(prefix.size());
    long long vals[4];
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
      std::size_t comma = (i < 3) ? rest.find(',', pos) : rest.size();
      require(comma != std::string::npos, ErrorCode::ParseError,
              "alpha must have four comma-separated integers");
      try {
        vals[i] = std::stoll(rest.substr(pos, comma - pos));
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad integer in alpha string");
      }
      pos = comma + 1;
    }
    return Alpha(vals[0], vals[1], vals[2], vals[3]);
  }

  const QuadValue& value() const { return v_; }
  long long a() const { return v_.a; }
  long long b() const { return v_.b; }
  long long c() const { return v_.c; }
  long long d() const { return v_.d; }
  double to_double() const { return v_.to_double(); }

  std::string str() const {
    return "quad:" + std::to_string(v_.a) + "," + std::to_string(v_.b) + "," +
           std::to_string(v_.c) + "," + std::to_string(v_.d);
  }

  // The integer m with 1/(m+1) <= alpha <= 1/m (strict by irrationality).
  long long floor_inverse() const {
    long long m = (long long)(1.0 / to_double());
    while (QuadValue::integer(m, v_.d) * v_ > QuadValue::integer(1, v_.d)) --m;
    while (QuadValue::integer(m + 1, v_.d) * v_ < QuadValue::integer(1, v_.d))
      ++m;
    return m;
  }

  bool operator==(const Alpha& o) const {
    return v_.a == o.v_.a && v_.b == o.v_.b && v_.c == o.v_.c && v_.d == o.v_.d;
  }

 private:
  QuadValue v_;
};

// v - alpha*e for integers v, e; the pre-dimension of a graph piece.
struct DeltaValue {
  long long v = 0;
  long long e = 0;

  DeltaValue() = default;
  DeltaValue(long long v_, long long e_) : v(v_), e(e_) {}

  DeltaValue operator+(const DeltaValue& o) const {
    return {v + o.v, e + o.e};
  }
  DeltaValue operator-(const DeltaValue& o) const {
    return {v - o.v, e - o.e};
  }
  bool operator==(const DeltaValue&) const = default;

  // (v*c - a*e - b*e*sqrt(d)) / c
  QuadValue eval(const Alpha& alpha) const {
    using detail::checked_mul;
    return QuadValue(checked_mul(v, alpha.c()) - checked_mul(alpha.a(), e),
                     -checked_mul(alpha.b(), e), alpha.c(), alpha.d());
  }

  double to_double(const Alpha& alpha) const {
    return (double)v - alpha.to_double() * (double)e;
  }
};

// Exact three-way comparison of v1 - alpha*e1 vs v2 - alpha*e2:
// sign of (dv*c - a*de) - b*de*sqrt(d) with dv = v1-v2, de = e1-e2.
inline int delta_compare(const DeltaValue& x, const DeltaValue& y,
                         const Alpha& alpha) {
  long long dv = x.v - y.v, de = x.e - y.e;
  using detail::checked_mul;
  return detail::sign_of_quad(
      checked_mul(dv, alpha.c()) - checked_mul(alpha.a(), de),
      -checked_mul(alpha.b(), de), alpha.d());
}

// Comparator with the engine tie-breaks: smaller delta first, then smaller
// cardinality.
struct DeltaOrder {
  const Alpha& alpha;
  bool less(const DeltaValue& x, const DeltaValue& y) const {
    return delta_compare(x, y, alpha) < 0;
  }
  bool less_with_card(const DeltaValue& x, std::size_t cx, const DeltaValue& y,
                      std::size_t cy) const {
    int c = delta_compare(x, y, alpha);
    if (c != 0) return c < 0;
    return cx < cy;
  }
};

}  // namespace ramseylab::predim
