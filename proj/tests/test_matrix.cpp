#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "fixtures.hpp"
#include "ramseylab/binary_matrix.hpp"
#include "ramseylab/rng.hpp"

using namespace ramseylab;
using namespace ramseylab::matrices;

namespace {

BinaryMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                           std::uint64_t stream) {
  BinaryMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (counter_rng(seed, stream, i * cols + j) & 1) m.set(i, j);
  return m;
}

// Naive reference checker: triple loop over (pattern, column tuple, row),
// patterns scanned from all-ones downward like the bitset implementation.
ConfigReport naive_k_config(const BinaryMatrix& m, std::size_t k) {
  std::vector<std::size_t> cols(k);
  for (unsigned pattern = (1u << k); pattern-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    for (;;) {
      bool realized = false;
      for (std::size_t r = 0; r < m.n_rows() && !realized; ++r) {
        bool match = true;
        for (std::size_t i = 0; i < k && match; ++i)
          if ((unsigned)m.get(r, cols[i]) != ((pattern >> i) & 1)) match = false;
        realized = match;
      }
      if (!realized) {
        Pattern p;
        p.columns = cols;
        for (std::size_t i = 0; i < k; ++i) p.values.push_back((pattern >> i) & 1);
        return {false, p};
      }
      std::size_t i = k;
      while (i > 0 && cols[i - 1] == m.n_cols() - k + i - 1) --i;
      if (i == 0) break;
      ++cols[i - 1];
      for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
  }
  return {true, std::nullopt};
}

}  // namespace

TEST_CASE("matrix text format round trip and rejection") {
  auto m = fixtures::six_by_six();
  REQUIRE(m.n_rows() == 6);
  REQUIRE(m.n_cols() == 6);
  REQUIRE(matrix_to_string(m) == fixtures::kSixBySixText);

  REQUIRE_THROWS_AS(parse_matrix("2 2\n01\n0x\n"), Error);
  REQUIRE_THROWS_AS(parse_matrix("2 2\n01\n"), Error);
  REQUIRE_THROWS_AS(parse_matrix("2 2\n011\n00\n"), Error);
  REQUIRE_THROWS_AS(parse_matrix("nonsense\n"), Error);
  CHECK_THROWS_MATCHES(parse_matrix("2 2\n01\n0 \n"), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("ParseError")));
}

TEST_CASE("six-by-six fixture exhibits 1-configurations but not 2") {
  auto m = fixtures::six_by_six();
  CHECK(k_config_check(m, 1).holds);

  auto rep = k_config_check(m, 2);
  REQUIRE_FALSE(rep.holds);
  REQUIRE(rep.missing.has_value());
  CHECK(rep.missing->columns == std::vector<std::size_t>{3, 4});
  CHECK(rep.missing->values == std::vector<int>{1, 1});
}

TEST_CASE("full cube realizes every 3-configuration") {
  auto m = fixtures::full_cube_8x3();
  for (std::size_t k = 1; k <= 3; ++k) CHECK(k_config_check(m, k).holds);
}

TEST_CASE("k out of range is rejected") {
  auto m = fixtures::full_cube_8x3();
  CHECK_THROWS_AS(k_config_check(m, 0), Error);
  CHECK_THROWS_AS(k_config_check(m, 4), Error);
}

TEST_CASE("dedupe_rows keeps first occurrences and multiplicities") {
  auto m = fixtures::six_by_six();
  auto [d1, mult1] = dedupe_rows(m);
  CHECK(d1 == m);
  CHECK(mult1 == std::vector<std::size_t>(6, 1));

  auto [d2, mult2] = dedupe_rows(BinaryMatrix::from_rows({{0, 1}, {0, 1}}));
  CHECK(d2 == BinaryMatrix::from_rows({{0, 1}}));
  CHECK(mult2 == std::vector<std::size_t>{2});

  auto [d3, mult3] =
      dedupe_rows(BinaryMatrix::from_rows({{1, 1}, {0, 0}, {1, 1}}));
  CHECK(d3 == BinaryMatrix::from_rows({{1, 1}, {0, 0}}));
  CHECK(mult3 == std::vector<std::size_t>{2, 1});
}

TEST_CASE("k-configuration is monotone in k") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    std::size_t rows = 1 + counter_rng(11, s, 0) % 12;
    std::size_t cols = 1 + counter_rng(11, s, 1) % 8;
    auto m = random_matrix(rows, cols, 12, s);
    std::size_t kmax = std::min<std::size_t>(cols, 3);
    for (std::size_t k = kmax; k >= 2; --k) {
      if (k_config_check(m, k).holds)
        for (std::size_t kp = 1; kp < k; ++kp) CHECK(k_config_check(m, kp).holds);
    }
  }
}

TEST_CASE("duplicate rows do not change the configuration check") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    auto m = random_matrix(2 + s % 5, 2 + s % 4, 77, s);
    // Duplicate every row once.
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
      rows.push_back(m.row(i));
      rows.push_back(m.row(i));
    }
    auto doubled = BinaryMatrix::from_rows(rows);
    auto [deduped, mult] = dedupe_rows(doubled);
    for (std::size_t k = 1; k <= std::min<std::size_t>(m.n_cols(), 3); ++k) {
      auto a = k_config_check(doubled, k);
      auto b = k_config_check(deduped, k);
      CHECK(a.holds == b.holds);
      CHECK(a.missing == b.missing);
    }
  }
}

TEST_CASE("bitset checker agrees with the naive triple loop") {
  for (std::uint64_t s = 0; s < 120; ++s) {
    std::size_t rows = 1 + counter_rng(5, s, 0) % 6;
    std::size_t cols = 1 + counter_rng(5, s, 1) % 6;
    auto m = random_matrix(rows, cols, 6, s);
    for (std::size_t k = 1; k <= cols; ++k) {
      auto fast = k_config_check(m, k);
      auto ref = naive_k_config(m, k);
      REQUIRE(fast.holds == ref.holds);
      REQUIRE(fast.missing == ref.missing);
    }
  }
}
