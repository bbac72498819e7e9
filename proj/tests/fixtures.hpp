#pragma once

// Shared test fixtures.

#include <string>

#include "ramseylab/binary_matrix.hpp"

namespace fixtures {

// 6x6 matrix that exhibits every 1-configuration yet has minimum spread 2/3:
// the classic small witness against the convex Ramsey condition.
inline const std::string kSixBySixText =
    "6 6\n"
    "111100\n"
    "111010\n"
    "111001\n"
    "011000\n"
    "101000\n"
    "110000\n";

inline ramseylab::matrices::BinaryMatrix six_by_six() {
  return ramseylab::matrices::parse_matrix(kSixBySixText);
}

// All 8 rows of {0,1}^3.
inline ramseylab::matrices::BinaryMatrix full_cube_8x3() {
  return ramseylab::matrices::BinaryMatrix::from_rows({
      {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
      {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1},
  });
}

}  // namespace fixtures
