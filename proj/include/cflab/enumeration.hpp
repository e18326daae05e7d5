#pragma once

#include <cstddef>
#include <vector>

#include "cflab/types.hpp"

namespace cflab {

// Exact Catalan number C_j = binom(2j, j)/(j+1).
Natural catalan(std::size_t j);

// Exact count of length-m positive sequences with every prefix sum <= B*t.
// Dynamic program over the prefix slack; for B = 2 this matches
// catalan(m+1), pinned by the exhaustive oracle in the tests.
Natural count_avg_bounded_length(std::size_t m, Bound b);

// Knobs for the continuant-bounded searches. Totals are bit-identical for
// any thread count; shards partition the work by task index so that the
// shard totals sum to the single-shard total.
struct CountOptions {
  unsigned shards = 1;
  unsigned shard = 0;
  unsigned threads = 1;
};

// Exact S-bar_n(B): sequences bounded in average by B with continuant <= n,
// all lengths m >= 1. Depth-first search over (prefix-sum slack, q_{j-1},
// q_j), pruning branches whose continuant exceeds n (appending terms never
// decreases the continuant).
Natural count_avg_bounded_by_continuant(const Natural& n, Bound b,
                                        const CountOptions& opts = {});

// Exact S_n(B): same search with the per-term constraint a_j <= B.
Natural count_uniform_bounded_by_continuant(const Natural& n, Bound b,
                                            const CountOptions& opts = {});

// Constructive lower-bound certificate at B = 2: pick the largest m with
// K(2,...,2 [m]) <= n; every length-m average-2-bounded sequence then has
// continuant <= n, so their count bounds S-bar_n(2) from below.
struct LowerBoundCertificate {
  Natural n;
  std::size_t m;
  Natural sequence_count;
  double implied_exponent;
};

LowerBoundCertificate lower_bound_certificate(const Natural& n);

// One row of an exponent table.
struct CountRecord {
  Natural n;
  int bound;
  Natural avg_count;
  Natural uniform_count;
  double avg_exponent;
  double uniform_exponent;
};

std::vector<CountRecord> exponent_table(const std::vector<Natural>& grid,
                                        Bound b,
                                        const CountOptions& opts = {});

// log(count)/log(n); 0 when n <= 1 or count <= 1. Accurate for values far
// beyond double range.
double pointwise_exponent(const Natural& count, const Natural& n);

}  // namespace cflab
