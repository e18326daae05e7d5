#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cflab/types.hpp"

namespace cflab {

// The two local moves that push a violating partial quotient's excess one
// unit to the left, plus the fixpoint state (no term exceeds B).
enum class ShiftKind {
  kAdjacentCarry,  // a_t >= B+2 or a_{t-1} < B: move a unit to position t-1
  kRunCarry,       // a_t = B+1 behind a run of B's: move a unit to s-1
  kFixpoint,
};

// Classification of a sequence. Indices are 1-based, matching a_1..a_m.
// When kind != kFixpoint: t >= 2 and a_t > B. When kind == kRunCarry:
// 2 <= s <= t-1, a_k = B for s <= k <= t-1, a_{s-1} < B, a_t = B+1.
struct ShiftCase {
  ShiftKind kind;
  std::size_t t = 0;
  std::size_t s = 0;
};

// One applied move. The term sum and length are conserved; the continuant
// never decreases (equality is possible, e.g. K(1,1,3) = K(1,2,2)).
struct ShiftStepReport {
  ShiftCase shift_case;
  PartialQuotientSeq before;
  PartialQuotientSeq after;
  Natural continuant_before;
  Natural continuant_after;
};

// Smallest index t with a_t > B, or absent. When present t >= 2, since the
// t = 1 prefix bound forces a_1 <= B. Rejects sequences not bounded in
// average by B.
std::optional<std::size_t> first_violation(const PartialQuotientSeq& s,
                                           Bound b);

ShiftCase classify(const PartialQuotientSeq& s, Bound b);

// Applies one move. Rejects fixpoint input.
ShiftStepReport shift_step(const PartialQuotientSeq& s, Bound b);

struct NormalizeResult {
  PartialQuotientSeq result;
  std::vector<ShiftStepReport> steps;
};

// Iterates shift_step to the fixpoint: all terms <= B, same length and term
// sum, continuant never decreased. The weighted sum sum_j j*a_j strictly
// decreases each step and serves as the iteration budget; exceeding it is an
// internal error.
NormalizeResult normalize(const PartialQuotientSeq& s, Bound b);

}  // namespace cflab
