#pragma once

/**
 * Counter-based random stream. Every draw is a pure function of
 * (seed, stream, counter), so trials can run in any order or in parallel
 * and still reproduce bit-identically within this implementation.
 */

#include <cstdint>

#include "ramseylab/error.hpp"
#include "ramseylab/rational.hpp"

namespace ramseylab {

namespace detail {

// SplitMix64 finalizer (Stafford mix13).
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

// One 64-bit word of the stream keyed by (seed, stream, counter).
inline std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t counter) {
  std::uint64_t h = detail::mix64(seed ^ (0xA0761D6478BD642FULL * (stream + 1)));
  return detail::mix64(h ^ (0xE7037ED1A0B428DBULL * (counter + 1)));
}

// Exact Bernoulli(p) draw: true with probability exactly num/den.
// u is uniform on [0, 2^64); the comparison u/2^64 < num/den is done in
// integer arithmetic, so no rounding is involved.
inline bool bernoulli_exact(std::uint64_t u, std::uint64_t num, std::uint64_t den) {
  require(den > 0 && num <= den, ErrorCode::DomainError,
          "Bernoulli probability outside [0,1]");
  using u128 = unsigned __int128;
  return (u128)u * (u128)den < ((u128)num << 64);
}

inline bool bernoulli_exact(std::uint64_t u, const Rational& p) {
  require(p >= 0 && p <= 1, ErrorCode::DomainError,
          "Bernoulli probability outside [0,1]");
  return bernoulli_exact(u, (std::uint64_t)numerator(p), (std::uint64_t)denominator(p));
}

}  // namespace ramseylab
