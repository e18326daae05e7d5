#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cflab/types.hpp"

namespace cflab::checks {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

// Brute-force oracles, deliberately independent of the library's search and
// closed-form paths.
namespace oracle {

// Generates every positive sequence of length exactly m with prefix sums
// <= B*t and returns how many there are.
Natural count_avg_bounded_length(std::size_t m, int bound);

// Counts average-B-bounded sequences with continuant <= n by enumerating
// whole length classes without continuant pruning. Lengths whose minimal
// continuant (the all-ones sequence, a Fibonacci number) already exceeds n
// contribute nothing and are skipped.
Natural count_avg_bounded_by_continuant_naive(const Natural& n, int bound);

}  // namespace oracle

// expand -> convergent round trip and continuant(expand) == n over all
// coprime pairs with denominator <= max_n.
CheckResult round_trip(std::size_t max_n = 2000);

// Every average-2-bounded sequence of length <= max_len with terms <=
// max_term: continuant dominated by the all-2 sequence of equal length, and
// the shifting normalization terminates with a nondecreasing continuant at
// every step.
CheckResult shifting_exhaustive(std::size_t max_len = 10,
                                std::size_t max_term = 6);

// The prepend recursion K(y,c_1..c_r) = y*K(c_1..c_r) + K(c_2..c_r) over
// entries <= 4, r <= 6; and the run-tail identity K(B..B[k],x) =
// F_{k+1}x + F_k over B in 2..5, k <= 20, x <= 20.
CheckResult continuant_identities();

// F_{m+1} <= ((B+sqrt(B^2+4))/2)^{m+1} for m <= 200, B in {2,3,4,5}, with
// the real side rounded down at 30-digit precision.
CheckResult growth_bound(std::size_t max_m = 200);

// The constructive certificate at n = 33461: m = 12, 742900 sequences,
// implied exponent 1.2976 +/- 0.0005, and the full count dominating it.
CheckResult certificate_chain();

// Length counts vs the exhaustive oracle for m <= max_m, plus count
// dominance (average >= uniform) on the grid {10, 10^2, 10^3, 10^4}.
CheckResult counting_crosschecks(std::size_t max_oracle_m = 12);

// corollary_chain_check reports zero violations for 9 <= n <= max_n; the
// evaluated inequality at n in {300, 1000, 2000} goes into the detail.
CheckResult density_chain(std::size_t max_n = 2000);

// Survey of members of [2, N]: every witness revalidates through the core
// expansion routines, every omission is certified by an independent full
// scan, and 1-thread vs 8-thread runs serialize byte-identically.
CheckResult survey_soundness(std::size_t max_n = 2000);

std::vector<CheckResult> run_all();

}  // namespace cflab::checks
