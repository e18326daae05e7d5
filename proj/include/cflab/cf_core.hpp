#pragma once

#include "cflab/types.hpp"

namespace cflab {

// Canonical Euclidean expansion of k/n, with the final term >= 2 whenever
// the length is >= 2. convergent(expand(f)) == f and
// continuant(expand(f)) == f.denominator.
PartialQuotientSeq expand(const ReducedFraction& f);

// The other of the two finite continued fractions for the same rational:
// (...,a_m) <-> (...,a_m - 1, 1). Rejects the sequence (1), whose value 1/1
// lies outside the ReducedFraction range.
PartialQuotientSeq alternate_rep(const PartialQuotientSeq& s);

// The continuant K(a_1,...,a_m): denominator of [0; a_1,...,a_m].
Natural continuant(const PartialQuotientSeq& s);

// Full prefix list q_0,...,q_m.
ContinuantTrace continuant_trace(const PartialQuotientSeq& s);

// Value of [0; a_1,...,a_m] in lowest terms. Rejects (1).
ReducedFraction convergent(const PartialQuotientSeq& s);

// True iff every prefix satisfies sum_{i<=t} a_i <= B*t. Integer arithmetic
// only.
bool is_avg_bounded(const PartialQuotientSeq& s, Bound b);

// max over t of (sum_{i<=t} a_i - B*t); <= 0 iff is_avg_bounded.
Integer max_prefix_excess(const PartialQuotientSeq& s, Bound b);

}  // namespace cflab
