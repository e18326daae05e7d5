#include "cflab/density.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <thread>
#include <utility>

#include "cflab/cf_core.hpp"
#include "cflab/enumeration.hpp"

namespace cflab {

namespace {

template <typename Int>
bool avg_bounded_terms(const std::vector<Int>& terms, int bound) {
  Int sum = 0, cap = 0;
  for (const Int& a : terms) {
    sum += a;
    cap += bound;
    if (sum > cap) return false;
  }
  return true;
}

// Switches a term vector to the other representation of the same rational,
// in place. Requires the value to differ from 1/1.
template <typename Int>
void flip_representation(std::vector<Int>& terms) {
  if (terms.back() >= 2) {
    terms.back() -= 1;
    terms.push_back(1);
  } else {
    terms.pop_back();
    terms.back() += 1;
  }
}

inline std::uint64_t gcd_of(std::uint64_t a, std::uint64_t b) {
  return std::gcd(a, b);
}
inline Natural gcd_of(const Natural& a, const Natural& b) {
  return boost::multiprecision::gcd(a, b);
}

template <typename Int>
std::optional<WitnessRecord> scan_witness(Int n, int bound) {
  std::vector<Int> terms;
  for (Int k = 1; k < n; ++k) {
    if (gcd_of(k, n) != Int(1)) continue;
    terms.clear();
    Int hi = n, lo = k;
    while (lo != 0) {
      Int q = hi / lo;
      Int r = hi % lo;
      terms.push_back(q);
      hi = lo;
      lo = r;
    }
    Representation rep = Representation::kCanonical;
    if (!avg_bounded_terms(terms, bound)) {
      flip_representation(terms);
      if (!avg_bounded_terms(terms, bound)) continue;
      rep = Representation::kAlternate;
    }
    return WitnessRecord{
        Natural(n), Natural(k),
        PartialQuotientSeq(std::vector<Natural>(terms.begin(), terms.end())),
        rep};
  }
  return std::nullopt;
}

std::optional<WitnessRecord> witness_dispatch(const Natural& n, Bound b) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return scan_witness<std::uint64_t>(n.convert_to<std::uint64_t>(), b.value);
  }
  return scan_witness<Natural>(n, b.value);
}

}  // namespace

std::optional<WitnessRecord> find_witness(const Natural& n, Bound b) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  return witness_dispatch(n, b);
}

std::vector<WitnessRecord> f_set(const Natural& max_n, Bound b,
                                 unsigned threads) {
  if (max_n < 2) throw std::invalid_argument("N must be >= 2");
  if (max_n > std::numeric_limits<std::uint64_t>::max()) {
    throw std::invalid_argument("survey limit too large for exhaustive scan");
  }
  std::uint64_t limit = max_n.convert_to<std::uint64_t>();
  std::vector<std::optional<WitnessRecord>> slots(limit - 1);
  unsigned workers = std::max(1u, threads);
  auto work = [&](unsigned w) {
    for (std::uint64_t n = 2 + w; n <= limit; n += workers) {
      slots[n - 2] = scan_witness<std::uint64_t>(n, b.value);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  std::vector<WitnessRecord> out;
  for (auto& slot : slots) {
    if (slot) out.push_back(std::move(*slot));
  }
  return out;
}

DensityReport density_report(const Natural& max_n, Bound b, unsigned threads) {
  std::vector<WitnessRecord> witnesses = f_set(max_n, b, threads);
  Natural count = witnesses.size();
  double exponent =
      witnesses.empty() ? 0.0 : pointwise_exponent(count, max_n);
  return DensityReport{std::move(count), exponent};
}

namespace {

// Depth-first search over average-2-bounded sequences with continuant <= n,
// carrying numerator and denominator traces.
struct SeqVisitor {
  Natural n;
  std::vector<Natural> terms;

  template <typename Fn>
  void visit(Fn&& fn) {
    descend(0, Natural(1), Natural(0), Natural(0), Natural(1), fn);
  }

 private:
  template <typename Fn>
  void descend(std::uint64_t slack, const Natural& p_prev, const Natural& p_cur,
               const Natural& q_prev, const Natural& q_cur, Fn& fn) {
    for (std::uint64_t a = 1; a <= slack + 2; ++a) {
      Natural q_next = Natural(a) * q_cur + q_prev;
      if (q_next > n) break;
      Natural p_next = Natural(a) * p_cur + p_prev;
      terms.emplace_back(a);
      fn(terms, p_next, q_next);
      descend(slack + 2 - a, p_cur, p_next, q_cur, q_next, fn);
      terms.pop_back();
    }
  }
};

}  // namespace

std::vector<USetEntry> u_set(const Natural& n) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  // Keyed by (q, p); the canonical representation (last term >= 2) wins
  // when both representations qualify.
  std::map<std::pair<Natural, Natural>, PartialQuotientSeq> chosen;
  SeqVisitor visitor{n, {}};
  visitor.visit([&](const std::vector<Natural>& terms, const Natural& p,
                    const Natural& q) {
    if (terms.size() < 2 || p <= 1) return;
    std::vector<Natural> tail(terms.begin() + 1, terms.end());
    if (!avg_bounded_terms(tail, 2)) return;
    auto key = std::make_pair(q, p);
    auto it = chosen.find(key);
    bool canonical = terms.back() >= 2;
    if (it == chosen.end()) {
      chosen.emplace(std::move(key), PartialQuotientSeq(terms));
    } else if (canonical && it->second.terms().back() < 2) {
      it->second = PartialQuotientSeq(terms);
    }
  });
  std::vector<USetEntry> out;
  out.reserve(chosen.size());
  for (const auto& [key, seq] : chosen) {
    std::vector<Natural> tail(seq.terms().begin() + 1, seq.terms().end());
    out.push_back(USetEntry{ReducedFraction(key.second, key.first), seq,
                            PartialQuotientSeq(std::move(tail))});
  }
  return out;
}

CorollaryChainReport corollary_chain_check(const Natural& n,
                                           bool evaluate_inequality) {
  if (n < 9) throw std::invalid_argument("n must be >= 9");
  Natural third = n / 3;
  CorollaryChainReport report{n, 0, 0, 0, 0, std::nullopt, std::nullopt};

  SeqVisitor visitor{third, {}};
  visitor.visit([&](const std::vector<Natural>& tail_terms,
                    const Natural& p_tail, const Natural& q_tail) {
    report.checked += 1;
    for (int lead = 1; lead <= 2; ++lead) {
      std::vector<Natural> full;
      full.reserve(tail_terms.size() + 1);
      full.emplace_back(lead);
      full.insert(full.end(), tail_terms.begin(), tail_terms.end());
      PartialQuotientSeq seq(std::move(full));

      if (!is_avg_bounded(seq, Bound(2))) report.violations_a += 1;

      Natural k_full = continuant(seq);
      if (k_full != Natural(lead) * q_tail + p_tail ||
          k_full > 3 * q_tail || 3 * q_tail > n) {
        report.violations_b += 1;
      }

      ReducedFraction value = convergent(seq);
      if (value.numerator != q_tail ||
          value.denominator - Natural(lead) * value.numerator != p_tail) {
        report.violations_c += 1;
      }
    }
  });

  if (evaluate_inequality) {
    report.sbar_third = count_avg_bounded_by_continuant(third, Bound(2));
    std::map<Natural, int> denominators;
    for (const USetEntry& e : u_set(n)) {
      denominators[e.fraction.denominator] = 1;
    }
    report.denominator_count = Natural(denominators.size());
  }
  return report;
}

}  // namespace cflab
