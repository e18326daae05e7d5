#include "cflab/enumeration.hpp"

#include <doctest.h>

#include <cmath>

#include "cflab/checks.hpp"

using namespace cflab;

namespace {
const Bound kTwo(2);
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(5) == 42);
  CHECK(catalan(13) == 742900);
}

TEST_CASE("length counts match the exhaustive oracle and catalan(m+1)") {
  CHECK(count_avg_bounded_length(1, kTwo) == 2);
  CHECK(count_avg_bounded_length(2, kTwo) == 5);
  CHECK(count_avg_bounded_length(3, kTwo) == 14);
  for (std::size_t m = 1; m <= 9; ++m) {
    Natural dp = count_avg_bounded_length(m, kTwo);
    CHECK(dp == checks::oracle::count_avg_bounded_length(m, 2));
    CHECK(dp == catalan(m + 1));
  }
  // Other bounds against the oracle only.
  for (int b = 3; b <= 4; ++b) {
    for (std::size_t m = 1; m <= 6; ++m) {
      CHECK(count_avg_bounded_length(m, Bound(b)) ==
            checks::oracle::count_avg_bounded_length(m, b));
    }
  }
}

TEST_CASE("continuant-bounded counts, small values") {
  CHECK(count_avg_bounded_by_continuant(2, kTwo) == 3);
  CHECK(count_avg_bounded_by_continuant(1, kTwo) == 1);
  CHECK(count_uniform_bounded_by_continuant(2, kTwo) == 3);
  // The eleven sequences over {1,2} with continuant <= 5: (1), (2), (1,1),
  // (1,2), (2,1), (2,2), (1,1,1), (1,1,2), (1,2,1), (2,1,1), (1,1,1,1).
  CHECK(count_uniform_bounded_by_continuant(5, kTwo) == 11);
  CHECK(count_uniform_bounded_by_continuant(1, kTwo) == 1);
  CHECK(count_avg_bounded_by_continuant(5, kTwo) == 13);
}

TEST_CASE("pruned search equals the naive enumeration") {
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 17, 25, 33, 47, 60, 100,
                500}) {
    CHECK(count_avg_bounded_by_continuant(n, kTwo) ==
          checks::oracle::count_avg_bounded_by_continuant_naive(n, 2));
  }
  CHECK(count_avg_bounded_by_continuant(100, Bound(3)) ==
        checks::oracle::count_avg_bounded_by_continuant_naive(100, 3));
}

TEST_CASE("average counts dominate uniform counts") {
  for (int n : {2, 10, 50, 200, 1000}) {
    CHECK(count_avg_bounded_by_continuant(n, kTwo) >=
          count_uniform_bounded_by_continuant(n, kTwo));
  }
}

TEST_CASE("lower bound certificate") {
  LowerBoundCertificate cert = lower_bound_certificate(33461);
  CHECK(cert.m == 12);
  CHECK(cert.sequence_count == 742900);
  CHECK(cert.implied_exponent == doctest::Approx(1.2976).epsilon(0.001));

  cert = lower_bound_certificate(5);
  CHECK(cert.m == 2);
  CHECK(cert.sequence_count == 5);
  CHECK(cert.implied_exponent == doctest::Approx(1.0));

  CHECK_THROWS_AS(lower_bound_certificate(4), std::invalid_argument);
}

TEST_CASE("certificate never exceeds the true count") {
  for (int n : {5, 6, 12, 29, 70, 169, 408, 985}) {
    CHECK(count_avg_bounded_by_continuant(n, kTwo) >=
          lower_bound_certificate(n).sequence_count);
  }
}

TEST_CASE("exponent table") {
  std::vector<CountRecord> rows = exponent_table({1}, kTwo);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].avg_count == 1);
  CHECK(rows[0].uniform_count == 1);
  CHECK(rows[0].avg_exponent == 0.0);

  rows = exponent_table({2, 5}, kTwo);
  CHECK(rows[0].avg_count == 3);
  CHECK(rows[1].avg_count >= 7);

  CHECK_THROWS_AS(exponent_table({}, kTwo), std::invalid_argument);
  CHECK_THROWS_AS(exponent_table({5, 2}, kTwo), std::invalid_argument);
}

TEST_CASE("shard totals merge to the single-shard total") {
  Natural whole = count_avg_bounded_by_continuant(2000, kTwo);
  for (unsigned shards : {2u, 3u, 8u}) {
    Natural merged = 0;
    for (unsigned i = 0; i < shards; ++i) {
      merged += count_avg_bounded_by_continuant(2000, kTwo,
                                                CountOptions{shards, i, 1});
    }
    CHECK(merged == whole);
  }
  // Thread count never changes the total.
  CHECK(count_avg_bounded_by_continuant(2000, kTwo, CountOptions{1, 0, 4}) ==
        whole);
  CHECK_THROWS_AS(
      count_avg_bounded_by_continuant(10, kTwo, CountOptions{2, 2, 1}),
      std::invalid_argument);
}

TEST_CASE("pointwise exponent helper") {
  CHECK(pointwise_exponent(1, 10) == 0.0);
  CHECK(pointwise_exponent(100, 10) == doctest::Approx(2.0));
  // Stays accurate far beyond double range.
  Natural huge = Natural(1) << 2000;
  CHECK(pointwise_exponent(huge, Natural(1) << 1000) ==
        doctest::Approx(2.0).epsilon(1e-9));
}
