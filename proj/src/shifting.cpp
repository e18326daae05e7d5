#include "cflab/shifting.hpp"

#include "cflab/cf_core.hpp"

namespace cflab {

namespace {

void require_avg_bounded(const PartialQuotientSeq& s, Bound b) {
  if (!is_avg_bounded(s, b)) {
    throw std::invalid_argument("sequence is not bounded in average by B");
  }
}

// Loop variant: each move carries one unit strictly left, so sum_j j*a_j
// strictly decreases while sum_j a_j is conserved.
Natural weighted_sum(const PartialQuotientSeq& s) {
  Natural phi = 0;
  for (std::size_t j = 1; j <= s.length(); ++j) {
    phi += Natural(j) * s.at(j);
  }
  return phi;
}

}  // namespace

std::optional<std::size_t> first_violation(const PartialQuotientSeq& s,
                                           Bound b) {
  require_avg_bounded(s, b);
  for (std::size_t t = 1; t <= s.length(); ++t) {
    if (s.at(t) > b.value) return t;
  }
  return std::nullopt;
}

ShiftCase classify(const PartialQuotientSeq& s, Bound b) {
  auto violation = first_violation(s, b);
  if (!violation) return {ShiftKind::kFixpoint, 0, 0};
  std::size_t t = *violation;
  if (s.at(t) >= b.value + 2 || s.at(t - 1) < b.value) {
    return {ShiftKind::kAdjacentCarry, t, 0};
  }
  // a_t = B+1 and a_{t-1} = B: find the start of the maximal run of B's
  // ending at t-1. The run cannot reach index 1 (the t-prefix sum would
  // exceed B*t), so s >= 2 and a_{s-1} < B exist.
  std::size_t run_start = t - 1;
  while (run_start > 1 && s.at(run_start - 1) == b.value) --run_start;
  return {ShiftKind::kRunCarry, t, run_start};
}

ShiftStepReport shift_step(const PartialQuotientSeq& s, Bound b) {
  ShiftCase c = classify(s, b);
  if (c.kind == ShiftKind::kFixpoint) {
    throw std::invalid_argument("sequence has no term exceeding B");
  }
  std::vector<Natural> terms = s.terms();
  std::size_t dest = (c.kind == ShiftKind::kAdjacentCarry) ? c.t - 1 : c.s - 1;
  terms[dest - 1] += 1;
  terms[c.t - 1] -= 1;
  PartialQuotientSeq after(std::move(terms));

  ShiftStepReport report{c, s, after, continuant(s), continuant(after)};
  // Equality can occur even for the adjacent carry: K(1,1,3) = K(1,2,2) = 7.
  if (report.continuant_after < report.continuant_before) {
    throw std::logic_error("shift step decreased the continuant");
  }
  if (!is_avg_bounded(after, b)) {
    throw std::logic_error("shift step broke the average bound");
  }
  return report;
}

NormalizeResult normalize(const PartialQuotientSeq& s, Bound b) {
  require_avg_bounded(s, b);
  Natural budget = weighted_sum(s);
  NormalizeResult out{s, {}};
  while (classify(out.result, b).kind != ShiftKind::kFixpoint) {
    if (budget == 0) {
      throw std::logic_error("shifting iteration budget exceeded");
    }
    --budget;
    ShiftStepReport step = shift_step(out.result, b);
    out.result = step.after;
    out.steps.push_back(std::move(step));
  }
  return out;
}

}  // namespace cflab
