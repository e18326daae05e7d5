#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cflab {

// Unbounded integers. Continuants grow like (1+sqrt(2))^m, so every value
// that feeds an exact comparison lives in this type.
using Integer = boost::multiprecision::cpp_int;
using Natural = Integer;

// A finite sequence of positive partial quotients (a_1,...,a_m), m >= 1.
// The leading 0 of [0; a_1,...,a_m] is representation-only and never stored.
class PartialQuotientSeq {
 public:
  explicit PartialQuotientSeq(std::vector<Natural> terms)
      : terms_(std::move(terms)) {
    if (terms_.empty()) {
      throw std::invalid_argument("partial quotient sequence must be nonempty");
    }
    for (const Natural& a : terms_) {
      if (a < 1) {
        throw std::invalid_argument("partial quotients must be >= 1");
      }
    }
  }

  PartialQuotientSeq(std::initializer_list<long long> terms)
      : PartialQuotientSeq(std::vector<Natural>(terms.begin(), terms.end())) {}

  const std::vector<Natural>& terms() const { return terms_; }
  std::size_t length() const { return terms_.size(); }

  // 1-based access, matching the index convention a_1..a_m.
  const Natural& at(std::size_t i) const { return terms_.at(i - 1); }

  bool operator==(const PartialQuotientSeq& other) const = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) out += ',';
      out += terms_[i].str();
    }
    return out;
  }

 private:
  std::vector<Natural> terms_;
};

// A coprime pair (k, n) with 1 <= k < n, the value k/n in (0,1).
struct ReducedFraction {
  Natural numerator;
  Natural denominator;

  ReducedFraction(Natural num, Natural den)
      : numerator(std::move(num)), denominator(std::move(den)) {
    if (numerator < 1 || numerator >= denominator) {
      throw std::invalid_argument("fraction must satisfy 1 <= k < n");
    }
    if (boost::multiprecision::gcd(numerator, denominator) != 1) {
      throw std::invalid_argument("fraction must be reduced (gcd(k,n)=1)");
    }
  }

  bool operator==(const ReducedFraction& other) const = default;
};

// The averaging bound B. B = 1 forces the all-ones sequence and is rejected.
struct Bound {
  int value;

  explicit Bound(int b) : value(b) {
    if (b < 2) {
      throw std::invalid_argument("bound must be >= 2");
    }
  }

  bool operator==(const Bound& other) const = default;
};

// Prefix continuants q_0,...,q_m with q_0 = 1, q_1 = a_1,
// q_j = a_j*q_{j-1} + q_{j-2}. Nondecreasing from q_1 onward.
struct ContinuantTrace {
  std::vector<Natural> values;
};

}  // namespace cflab
