#include "cflab/checks.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include "cflab/cf_core.hpp"
#include "cflab/density.hpp"
#include "cflab/enumeration.hpp"
#include "cflab/growth.hpp"
#include "cflab/shifting.hpp"

namespace cflab::checks {

namespace oracle {

namespace {

void gen_avg_bounded(std::size_t remaining, std::uint64_t slack, int bound,
                     std::vector<std::uint64_t>& prefix,
                     const std::function<void(const std::vector<std::uint64_t>&)>&
                         emit) {
  if (remaining == 0) {
    emit(prefix);
    return;
  }
  for (std::uint64_t a = 1; a <= slack + static_cast<std::uint64_t>(bound);
       ++a) {
    prefix.push_back(a);
    gen_avg_bounded(remaining - 1, slack + bound - a, bound, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

Natural count_avg_bounded_length(std::size_t m, int bound) {
  Natural count = 0;
  std::vector<std::uint64_t> prefix;
  gen_avg_bounded(m, 0, bound, prefix,
                  [&](const std::vector<std::uint64_t>&) { count += 1; });
  return count;
}

Natural count_avg_bounded_by_continuant_naive(const Natural& n, int bound) {
  std::uint64_t limit = n.convert_to<std::uint64_t>();
  Natural count = 0;
  // Minimal continuant at length m is the all-ones one, i.e. Fibonacci.
  std::uint64_t min_k_prev = 1;  // length 0
  std::uint64_t min_k = 1;       // length 1
  for (std::size_t m = 1;; ++m) {
    if (min_k > limit) break;
    std::vector<std::uint64_t> prefix;
    gen_avg_bounded(m, 0, bound, prefix,
                    [&](const std::vector<std::uint64_t>& seq) {
                      std::uint64_t q_prev = 0, q_cur = 1;
                      for (std::uint64_t a : seq) {
                        std::uint64_t q_next = a * q_cur + q_prev;
                        q_prev = q_cur;
                        q_cur = q_next;
                        if (q_cur > limit) return;
                      }
                      count += 1;
                    });
    std::uint64_t next = min_k + min_k_prev;
    min_k_prev = min_k;
    min_k = next;
  }
  return count;
}

}  // namespace oracle

namespace {

CheckResult pass(std::string name, std::string detail) {
  return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

}  // namespace

CheckResult round_trip(std::size_t max_n) {
  const std::string name = "round-trip";
  std::size_t pairs = 0;
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    for (std::uint64_t k = 1; k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      ++pairs;
      ReducedFraction f{Natural(k), Natural(n)};
      PartialQuotientSeq s = expand(f);
      if (convergent(s) != f) {
        return fail(name, "convergent(expand) mismatch at " +
                              std::to_string(k) + "/" + std::to_string(n));
      }
      if (continuant(s) != Natural(n)) {
        return fail(name, "continuant(expand) != n at " + std::to_string(k) +
                              "/" + std::to_string(n));
      }
      if (s.length() >= 2 && s.terms().back() < 2) {
        return fail(name, "non-canonical expansion at " + std::to_string(k) +
                              "/" + std::to_string(n));
      }
    }
  }
  return pass(name, std::to_string(pairs) + " coprime pairs, n <= " +
                        std::to_string(max_n));
}

CheckResult shifting_exhaustive(std::size_t max_len, std::size_t max_term) {
  const std::string name = "shifting-exhaustive";
  Bound two(2);
  // Dominance targets K(2,...,2) per length, from the raw recurrence.
  std::vector<Natural> uniform_k(max_len + 1);
  for (std::size_t m = 1; m <= max_len; ++m) {
    uniform_k[m] =
        continuant(PartialQuotientSeq(std::vector<Natural>(m, Natural(2))));
  }

  std::size_t visited = 0;
  std::string failure;
  std::vector<std::uint64_t> prefix;
  std::function<void(std::uint64_t)> recurse = [&](std::uint64_t slack) {
    if (!failure.empty()) return;
    if (!prefix.empty()) {
      ++visited;
      PartialQuotientSeq s(
          std::vector<Natural>(prefix.begin(), prefix.end()));
      if (continuant(s) > uniform_k[s.length()]) {
        failure = "dominance violated by " + s.to_string();
        return;
      }
      NormalizeResult norm = normalize(s, two);
      for (const Natural& a : norm.result.terms()) {
        if (a > 2) {
          failure = "normalize left a term > 2 for " + s.to_string();
          return;
        }
      }
      const Natural* prev = nullptr;
      for (const ShiftStepReport& step : norm.steps) {
        if (step.continuant_after < step.continuant_before ||
            (prev && step.continuant_before < *prev)) {
          failure = "continuant decreased while normalizing " + s.to_string();
          return;
        }
        prev = &step.continuant_after;
      }
    }
    if (prefix.size() == max_len) return;
    std::uint64_t cap = std::min<std::uint64_t>(slack + 2, max_term);
    for (std::uint64_t a = 1; a <= cap; ++a) {
      prefix.push_back(a);
      recurse(slack + 2 - a);
      prefix.pop_back();
    }
  };
  recurse(0);
  if (!failure.empty()) return fail(name, failure);
  return pass(name, std::to_string(visited) + " sequences, length <= " +
                        std::to_string(max_len) + ", terms <= " +
                        std::to_string(max_term));
}

CheckResult continuant_identities() {
  const std::string name = "continuant-identities";
  // Prepend recursion over entries <= 4, tail length r <= 6.
  std::size_t checked = 0;
  std::vector<Natural> seq;
  std::string failure;
  std::function<void()> recurse = [&]() {
    if (!failure.empty()) return;
    if (seq.size() >= 1) {
      ++checked;
      PartialQuotientSeq full(seq);
      Natural lhs = continuant(full);
      Natural tail1 = 1, tail2 = 1;
      if (seq.size() >= 2) {
        tail1 = continuant(
            PartialQuotientSeq(std::vector<Natural>(seq.begin() + 1,
                                                    seq.end())));
      }
      if (seq.size() >= 3) {
        tail2 = continuant(
            PartialQuotientSeq(std::vector<Natural>(seq.begin() + 2,
                                                    seq.end())));
      }
      if (seq.size() >= 2 && lhs != seq[0] * tail1 + tail2) {
        failure = "prepend recursion failed for " + full.to_string();
        return;
      }
    }
    if (seq.size() == 7) return;
    for (int a = 1; a <= 4; ++a) {
      seq.emplace_back(a);
      recurse();
      seq.pop_back();
    }
  };
  recurse();
  if (!failure.empty()) return fail(name, failure);

  // Run-tail identity, cross-checked against the explicit sequence.
  for (int b = 2; b <= 5; ++b) {
    for (std::size_t k = 1; k <= 20; ++k) {
      for (int x = 1; x <= 20; ++x) {
        if (!tail_identity_check(Bound(b), k, Natural(x))) {
          return fail(name, "run-tail identity failed at B=" +
                                std::to_string(b) + " k=" + std::to_string(k) +
                                " x=" + std::to_string(x));
        }
        std::vector<Natural> run(k, Natural(b));
        run.emplace_back(x);
        Natural direct = continuant(PartialQuotientSeq(std::move(run)));
        Natural via_table = pell_like(Bound(b), k + 1) * x + pell_like(Bound(b), k);
        if (direct != via_table) {
          return fail(name, "table/continuant disagreement at B=" +
                                std::to_string(b) + " k=" + std::to_string(k) +
                                " x=" + std::to_string(x));
        }
      }
    }
  }
  return pass(name, std::to_string(checked) +
                        " prepend cases; run-tail grid B=2..5, k<=20, x<=20");
}

CheckResult growth_bound(std::size_t max_m) {
  const std::string name = "growth-bound";
  for (int b = 2; b <= 5; ++b) {
    Natural scale = 1;
    for (int i = 0; i < 30; ++i) scale *= 10;
    Natural root = growth_root_scaled(Bound(b), 30);  // floor, rounded down
    Natural root_pow = root;    // root^{m+1} scaled by scale^{m+1}
    Natural scale_pow = scale;
    std::vector<Natural> f = pell_like_table(Bound(b), max_m + 1);
    for (std::size_t m = 0; m <= max_m; ++m) {
      if (m > 0) {
        root_pow *= root;
        scale_pow *= scale;
      }
      if (f[m + 1] * scale_pow > root_pow) {
        return fail(name, "bound violated at B=" + std::to_string(b) +
                              " m=" + std::to_string(m));
      }
    }
  }
  return pass(name, "m <= " + std::to_string(max_m) +
                        ", B in {2,3,4,5}, 30-digit precision");
}

CheckResult certificate_chain() {
  const std::string name = "certificate-chain";
  Natural n = 33461;
  LowerBoundCertificate cert = lower_bound_certificate(n);
  if (cert.m != 12) {
    return fail(name, "expected m=12, got " + std::to_string(cert.m));
  }
  if (cert.sequence_count != 742900 || catalan(13) != 742900) {
    return fail(name, "expected 742900 length-12 sequences");
  }
  if (std::abs(cert.implied_exponent - 1.2976) > 0.0005) {
    return fail(name, "implied exponent " +
                          std::to_string(cert.implied_exponent) +
                          " outside 1.2976 +/- 0.0005");
  }
  Natural full = count_avg_bounded_by_continuant(n, Bound(2));
  if (full < cert.sequence_count) {
    return fail(name, "full count " + full.str() +
                          " below certificate count");
  }
  return pass(name, "m=12, 742900 sequences, exponent " +
                        std::to_string(cert.implied_exponent) +
                        ", full count " + full.str());
}

CheckResult counting_crosschecks(std::size_t max_oracle_m) {
  const std::string name = "counting-crosschecks";
  for (std::size_t m = 1; m <= max_oracle_m; ++m) {
    Natural brute = oracle::count_avg_bounded_length(m, 2);
    Natural fast = count_avg_bounded_length(m, Bound(2));
    if (brute != fast || brute != catalan(m + 1)) {
      return fail(name, "length-count mismatch at m=" + std::to_string(m) +
                            ": oracle " + brute.str() + ", dp " + fast.str() +
                            ", catalan(m+1) " + catalan(m + 1).str());
    }
  }
  std::vector<Natural> grid{10, 100, 1000, 10000};
  std::vector<CountRecord> rows = exponent_table(grid, Bound(2));
  std::ostringstream detail;
  detail << "oracle agrees for m <= " << max_oracle_m << ";";
  double prev_exp = -1.0;
  bool monotone = true;
  for (const CountRecord& row : rows) {
    if (row.avg_count < row.uniform_count) {
      return fail(name, "dominance violated at n=" + row.n.str());
    }
    monotone = monotone && row.avg_exponent >= prev_exp;
    prev_exp = row.avg_exponent;
    detail << " n=" << row.n.str() << " avg=" << row.avg_count.str()
           << " uni=" << row.uniform_count.str() << " exp=" << std::fixed
           << std::setprecision(6) << row.avg_exponent << ";";
  }
  detail << (monotone ? " exponents nondecreasing" : " exponents NOT monotone");
  return pass(name, detail.str());
}

CheckResult density_chain(std::size_t max_n) {
  const std::string name = "density-chain";
  std::ostringstream detail;
  for (std::size_t n = 9; n <= max_n; ++n) {
    bool with_inequality = (n == 300 || n == 1000 || n == 2000);
    CorollaryChainReport r =
        corollary_chain_check(Natural(n), with_inequality);
    if (r.violations_a != 0 || r.violations_b != 0 || r.violations_c != 0) {
      return fail(name, "violations at n=" + std::to_string(n));
    }
    if (with_inequality) {
      detail << " n=" << n << ": sbar(n/3)=" << r.sbar_third->str()
             << " |S|^2=" << Natural(*r.denominator_count * *r.denominator_count).str()
             << ";";
    }
  }
  return pass(name, "zero violations for n <= " + std::to_string(max_n) +
                        ";" + detail.str());
}

namespace {

std::string serialize_witnesses(const std::vector<WitnessRecord>& ws) {
  std::ostringstream out;
  for (const WitnessRecord& w : ws) {
    out << w.n.str() << ' ' << w.k.str() << ' ' << w.sequence.to_string()
        << ' '
        << (w.representation == Representation::kCanonical ? "canonical"
                                                           : "alternate")
        << '\n';
  }
  return out.str();
}

}  // namespace

CheckResult survey_soundness(std::size_t max_n) {
  const std::string name = "survey-soundness";
  Bound two(2);
  std::vector<WitnessRecord> single = f_set(Natural(max_n), two, 1);
  std::vector<WitnessRecord> threaded = f_set(Natural(max_n), two, 8);
  if (serialize_witnesses(single) != serialize_witnesses(threaded)) {
    return fail(name, "1-thread and 8-thread runs differ");
  }

  std::set<Natural> members;
  for (const WitnessRecord& w : single) {
    members.insert(w.n);
    // Revalidate through the core routines, independent of the scan.
    ReducedFraction f{w.k, w.n};
    PartialQuotientSeq canonical = expand(f);
    PartialQuotientSeq expected =
        (w.representation == Representation::kCanonical)
            ? canonical
            : alternate_rep(canonical);
    if (w.sequence != expected || !is_avg_bounded(w.sequence, two) ||
        convergent(w.sequence) != f) {
      return fail(name, "witness for n=" + w.n.str() + " failed revalidation");
    }
    // Minimality of k: no smaller coprime k admits either representation.
    for (Natural k = 1; k < w.k; ++k) {
      if (boost::multiprecision::gcd(k, w.n) != 1) continue;
      PartialQuotientSeq s = expand(ReducedFraction{k, w.n});
      if (is_avg_bounded(s, two) || is_avg_bounded(alternate_rep(s), two)) {
        return fail(name, "witness for n=" + w.n.str() + " is not minimal");
      }
    }
  }
  // Every omitted n is certified by a full scan over both representations.
  std::size_t omitted = 0;
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    if (members.count(Natural(n))) continue;
    ++omitted;
    for (std::uint64_t k = 1; k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      PartialQuotientSeq s = expand(ReducedFraction{Natural(k), Natural(n)});
      if (is_avg_bounded(s, two) || is_avg_bounded(alternate_rep(s), two)) {
        return fail(name, "n=" + std::to_string(n) +
                              " was omitted but has a witness k=" +
                              std::to_string(k));
      }
    }
  }
  return pass(name, std::to_string(single.size()) + " members and " +
                        std::to_string(omitted) + " certified omissions in [2," +
                        std::to_string(max_n) + "]; thread schedules agree");
}

std::vector<CheckResult> run_all() {
  return {round_trip(),         shifting_exhaustive(), continuant_identities(),
          growth_bound(),       certificate_chain(),   counting_crosschecks(),
          density_chain(),      survey_soundness()};
}

}  // namespace cflab::checks
