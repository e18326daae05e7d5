#include "cflab/cf_core.hpp"

#include <algorithm>

namespace cflab {

PartialQuotientSeq expand(const ReducedFraction& f) {
  // Euclid on (n, k). Coprimality guarantees termination at remainder 1,
  // and the last quotient is >= 2 whenever the length is >= 2.
  std::vector<Natural> terms;
  Natural hi = f.denominator;
  Natural lo = f.numerator;
  while (lo != 0) {
    Natural q = hi / lo;
    Natural r = hi % lo;
    terms.push_back(std::move(q));
    hi = std::move(lo);
    lo = std::move(r);
  }
  return PartialQuotientSeq(std::move(terms));
}

PartialQuotientSeq alternate_rep(const PartialQuotientSeq& s) {
  std::vector<Natural> terms = s.terms();
  if (terms.back() >= 2) {
    terms.back() -= 1;
    terms.emplace_back(1);
  } else if (terms.size() >= 2) {
    terms.pop_back();
    terms.back() += 1;
  } else {
    throw std::invalid_argument(
        "sequence (1) represents 1/1 and has no in-range alternate");
  }
  return PartialQuotientSeq(std::move(terms));
}

ContinuantTrace continuant_trace(const PartialQuotientSeq& s) {
  ContinuantTrace trace;
  trace.values.reserve(s.length() + 1);
  Natural prev = 0;  // q_{-1}
  Natural cur = 1;   // q_0
  trace.values.push_back(cur);
  for (const Natural& a : s.terms()) {
    Natural next = a * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
    trace.values.push_back(cur);
  }
  return trace;
}

Natural continuant(const PartialQuotientSeq& s) {
  Natural prev = 0;
  Natural cur = 1;
  for (const Natural& a : s.terms()) {
    Natural next = a * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ReducedFraction convergent(const PartialQuotientSeq& s) {
  if (s.length() == 1 && s.terms()[0] == 1) {
    throw std::invalid_argument("sequence (1) has value 1/1, out of range");
  }
  // Numerator runs the same recurrence with seeds p_0 = 0, p_1 = 1.
  Natural p_prev = 1, p_cur = 0;
  Natural q_prev = 0, q_cur = 1;
  for (const Natural& a : s.terms()) {
    Natural p_next = a * p_cur + p_prev;
    Natural q_next = a * q_cur + q_prev;
    p_prev = std::move(p_cur);
    p_cur = std::move(p_next);
    q_prev = std::move(q_cur);
    q_cur = std::move(q_next);
  }
  return ReducedFraction(std::move(p_cur), std::move(q_cur));
}

bool is_avg_bounded(const PartialQuotientSeq& s, Bound b) {
  Natural sum = 0;
  Natural cap = 0;
  for (const Natural& a : s.terms()) {
    sum += a;
    cap += b.value;
    if (sum > cap) return false;
  }
  return true;
}

Integer max_prefix_excess(const PartialQuotientSeq& s, Bound b) {
  Integer sum = 0;
  Integer cap = 0;
  bool first = true;
  Integer best = 0;
  for (const Natural& a : s.terms()) {
    sum += a;
    cap += b.value;
    Integer excess = sum - cap;
    if (first || excess > best) best = excess;
    first = false;
  }
  return best;
}

}  // namespace cflab
