#include <catch2/catch_amalgamated.hpp>

#include "ramseylab/trials.hpp"

using namespace ramseylab;
using namespace ramseylab::trials;
using matrices::BinaryMatrix;

TEST_CASE("base matrix is half ones per row") {
  auto m4 = base_matrix(4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(m4.row(i) == std::vector<int>{1, 1, 0, 0});
  }
  auto m2 = base_matrix(2);
  CHECK(m2.row(0) == std::vector<int>{1, 0});
  CHECK(m2.row(1) == std::vector<int>{1, 0});

  CHECK_THROWS_MATCHES(base_matrix(5), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("OddDimension")));
  CHECK_THROWS_AS(base_matrix(0), Error);
}

TEST_CASE("perturb at the endpoints") {
  auto y = base_matrix(6);
  CHECK(perturb(y, Rational(0), 7, 3) == y);
  auto complement = perturb(y, Rational(1), 7, 3);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      CHECK(complement.get(i, j) == 1 - y.get(i, j));
  CHECK_THROWS_AS(perturb(y, Rational(3, 2), 7, 3), Error);
}

TEST_CASE("perturb regression fixture (implementation-pinned)") {
  auto x = perturb(base_matrix(4), Rational(1, 2), 42, 0);
  CHECK(matrices::matrix_to_string(x) ==
        "4 4\n"
        "1101\n"
        "1110\n"
        "0010\n"
        "0000\n");
}

TEST_CASE("flipping the same stream twice restores the base") {
  auto y = base_matrix(8);
  auto once = perturb(y, Rational(1, 3), 99, 5);
  auto twice = perturb(once, Rational(1, 3), 99, 5);
  CHECK(twice == y);
}

TEST_CASE("unperturbed trial fails configuration and carries a full certificate") {
  auto r = run_trial({8, 2, Rational(0), 2024, 0});
  CHECK_FALSE(r.config_ok);
  CHECK(r.convex_failed);
  CHECK(r.halving_bound == 1);
  CHECK(r.verdict_source == "halving");
  for (auto c : r.flip_counts) CHECK(c == 0);
}

TEST_CASE("k larger than the dimension is rejected") {
  CHECK_THROWS_AS(run_trial({4, 5, Rational(1, 4), 1, 0}), Error);
}

TEST_CASE("trials are deterministic given the spec") {
  TrialSpec spec{16, 2, Rational(1, 4), 321, 9};
  auto a = run_trial(spec);
  auto b = run_trial(spec);
  CHECK(a.config_ok == b.config_ok);
  CHECK(a.convex_failed == b.convex_failed);
  CHECK(a.flip_counts == b.flip_counts);
  CHECK(a.halving_bound == b.halving_bound);
}

TEST_CASE("mean flip count stays within five standard errors") {
  const std::size_t n = 64, trials_n = 100;
  const Rational p(1, 4);
  double total = 0;
  for (std::size_t t = 0; t < trials_n; ++t) {
    auto x = perturb(base_matrix(n), p, 5150, t);
    auto y = base_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (x.get(i, j) != y.get(i, j)) total += 1;
  }
  double draws = (double)trials_n * n * n;
  double expected = draws * 0.25;
  double se = std::sqrt(draws * 0.25 * 0.75);
  CHECK(std::abs(total - expected) <= 5 * se);
}

TEST_CASE("KL divergence and the tail bounds") {
  auto rep = bounds(1024, Rational(4, 25), Rational(4, 25) + Rational(1, 1000000));
  CHECK(rep.config_union_bound > 8.5e-6);
  CHECK(rep.config_union_bound < 8.8e-6);

  CHECK(kl_divergence(0.37, 0.37) == 0.0);
  CHECK_THAT(kl_divergence(0.25, 0.125),
             Catch::Matchers::WithinAbs(0.0576738, 1e-6));

  auto below = bounds(100, Rational(1, 2), Rational(1, 4));
  CHECK_FALSE(below.flip_tail_bound.has_value());
  auto above = bounds(100, Rational(1, 8), Rational(1, 4));
  REQUIRE(above.flip_tail_bound.has_value());
  CHECK(*above.flip_tail_bound > 0);
  CHECK(*above.flip_tail_bound < 100 * std::exp(-100 * 0.05));

  CHECK_THROWS_AS(bounds(8, Rational(1), Rational(1, 2)), Error);
  CHECK_THROWS_AS(bounds(8, Rational(1, 2), Rational(0)), Error);
}

TEST_CASE("sweep with zero trials emits an empty row") {
  auto rows = sweep({6}, 2, Rational(2356, 10000), 0, 1);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].trials == 0);
  CHECK(rows[0].config_ok == 0);
  CHECK(rows[0].both == 0);
}

TEST_CASE("sweep at k=1, n=6 finds matrices with both properties") {
  // Both properties together are rare at n=6 (roughly 1 in 400 trials):
  // flips that create 1-configurations also shrink the spread.
  auto rows = sweep({6}, 1, Rational(2356, 10000), 400, 7);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].both > 0);
  CHECK(denominator(rows[0].p) <= 1000000);
}

TEST_CASE("sweep CSV format") {
  CHECK(sweep_csv({}) ==
        "n,p_num,p_den,trials,config_ok,convex_failed,both,mean_flip_fraction\n");
  SweepRow row;
  row.n = 8;
  row.p = Rational(1, 4);
  row.trials = 2;
  row.config_ok = 1;
  row.convex_failed = 2;
  row.both = 1;
  row.mean_flip_fraction = 0.25;
  auto csv = sweep_csv({row});
  CHECK(csv.find("8,1,4,2,1,2,1,0.250000\n") != std::string::npos);
}

TEST_CASE("sweep validates epsilon") {
  CHECK_THROWS_AS(sweep({8}, 2, Rational(0), 1, 1), Error);
  CHECK_THROWS_AS(sweep({8}, 2, Rational(2, 3), 1, 1), Error);
}
