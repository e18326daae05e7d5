#include "cflab/growth.hpp"

#include <doctest.h>

#include "cflab/cf_core.hpp"

using namespace cflab;

TEST_CASE("pell-like recurrence") {
  Bound two(2);
  CHECK(pell_like(two, 0) == 0);
  CHECK(pell_like(two, 1) == 1);
  CHECK(pell_like(two, 5) == 29);
  CHECK(pell_like(two, 13) == 33461);

  std::vector<Natural> table = pell_like_table(Bound(3), 3);
  CHECK(table == std::vector<Natural>{0, 1, 3, 10});

  table = pell_like_table(two, 13);
  CHECK(table.back() == 33461);
  for (std::size_t k = 2; k < table.size(); ++k) {
    CHECK(table[k] > table[k - 1]);
  }
}

TEST_CASE("uniform continuants") {
  CHECK(uniform_continuant(Bound(2), 2) == 5);
  CHECK(uniform_continuant(Bound(2), 12) == 33461);
  CHECK_THROWS_AS(uniform_continuant(Bound(2), 0), std::invalid_argument);

  for (std::size_t m = 1; m <= 60; ++m) {
    for (int b = 2; b <= 4; ++b) {
      CHECK(uniform_continuant(Bound(b), m) ==
            continuant(PartialQuotientSeq(
                std::vector<Natural>(m, Natural(b)))));
    }
  }
}

TEST_CASE("run-tail identity") {
  CHECK(tail_identity_check(Bound(2), 1, 3));
  CHECK(tail_identity_check(Bound(2), 2, 1));
  CHECK(tail_identity_check(Bound(3), 2, 4));
  CHECK_THROWS_AS(tail_identity_check(Bound(2), 0, 3), std::invalid_argument);
}

TEST_CASE("growth root to 30+ digits") {
  CHECK(growth_root_string(Bound(2)).substr(0, 12) == "2.4142135623");
  CHECK(growth_root_string(Bound(3)).substr(0, 12) == "3.3027756377");
  CHECK(growth_root_string(Bound(5)).substr(0, 12) == "5.1925824035");
  // 1 + sqrt(2) to 30 decimals.
  CHECK(growth_root_string(Bound(2), 30) ==
        "2.414213562373095048801688724209");
}

TEST_CASE("max admissible length") {
  Bound two(2);
  CHECK(max_admissible_length(two, 33461) == 12);
  CHECK(max_admissible_length(two, 4) == 1);
  CHECK(max_admissible_length(two, 1) == 0);
  CHECK_THROWS_AS(max_admissible_length(two, 0), std::invalid_argument);

  for (int n = 2; n <= 500; ++n) {
    std::size_t m = max_admissible_length(two, n);
    CHECK(pell_like(two, m + 1) <= n);
    CHECK(pell_like(two, m + 2) > n);
  }
}

TEST_CASE("exponential bound at reduced scale") {
  // Full scale (m <= 200) runs in the acceptance suite.
  for (int b = 2; b <= 5; ++b) {
    Natural scale = 1;
    for (int i = 0; i < 30; ++i) scale *= 10;
    Natural root = growth_root_scaled(Bound(b), 30);
    Natural root_pow = root;
    Natural scale_pow = scale;
    for (std::size_t m = 0; m <= 50; ++m) {
      if (m > 0) {
        root_pow *= root;
        scale_pow *= scale;
      }
      CHECK(pell_like(Bound(b), m + 1) * scale_pow <= root_pow);
    }
  }
}
