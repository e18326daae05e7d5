#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cflab/types.hpp"

namespace cflab {

enum class Representation { kCanonical, kAlternate };

// Membership evidence: k/n expands to a sequence bounded in average by the
// certified B, in either the canonical or the alternate representation.
struct WitnessRecord {
  Natural n;
  Natural k;
  PartialQuotientSeq sequence;
  Representation representation;
};

// Scans k = 1..n-1 with gcd(k, n) = 1 in ascending order, testing the
// canonical expansion first and the alternate representation second;
// returns the first success. Deterministic.
std::optional<WitnessRecord> find_witness(const Natural& n, Bound b);

// Witnesses for every member of [2, N]; an n is omitted only after the full
// scan over both representations fails. Output sorted by n. The scan is
// embarrassingly parallel by n; output is independent of thread count.
std::vector<WitnessRecord> f_set(const Natural& max_n, Bound b,
                                 unsigned threads = 1);

struct DensityReport {
  Natural count;
  double exponent;
};

// count = members in [2, N]; exponent = log(count)/log(N).
DensityReport density_report(const Natural& max_n, Bound b,
                             unsigned threads = 1);

// A reduced fraction p/q, 1 < p < q, whose expansion a and tail
// a' = (a_2,...,a_m) are both bounded in average by 2.
struct USetEntry {
  ReducedFraction fraction;
  PartialQuotientSeq sequence;
  PartialQuotientSeq tail;
};

// All such fractions with q <= n, found by searching average-2-bounded
// sequences rather than scanning fractions; one entry per rational, the
// canonical representation preferred. Sorted by (q, p).
std::vector<USetEntry> u_set(const Natural& n);

// Literal verification of the doubling chain behind the density bound, over
// every average-2-bounded a' with continuant <= floor(n/3) and each prepend
// a_1 in {1, 2}:
//   (a) the prepended sequence stays bounded in average by 2;
//   (b) its continuant equals a_1*q' + p' and is <= 3*q' <= n;
//   (c) with [a] = p/q: p == q' and q - a_1*p == p', exactly.
struct CorollaryChainReport {
  Natural n;
  Natural checked;       // number of tails a' enumerated
  Natural violations_a;
  Natural violations_b;
  Natural violations_c;
  // Filled when evaluate_inequality is set: S-bar_{floor(n/3)}(2) versus
  // the squared count of distinct denominators appearing in u_set(n).
  // Reported, never asserted.
  std::optional<Natural> sbar_third;
  std::optional<Natural> denominator_count;
};

CorollaryChainReport corollary_chain_check(const Natural& n,
                                           bool evaluate_inequality = false);

}  // namespace cflab
