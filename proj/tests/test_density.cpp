#include "cflab/density.hpp"

#include <doctest.h>

#include <set>

#include "cflab/cf_core.hpp"
#include "cflab/enumeration.hpp"

using namespace cflab;

namespace {
const Bound kTwo(2);
}

TEST_CASE("witness search scans k ascending and tries both representations") {
  auto w = find_witness(2, kTwo);
  REQUIRE(w.has_value());
  CHECK(w->k == 1);
  CHECK(w->sequence == PartialQuotientSeq{2});
  CHECK(w->representation == Representation::kCanonical);

  // 1/3 = [0;3] fails the bound, but its alternate form [0;2,1] passes, so
  // the scan stops at k = 1.
  w = find_witness(3, kTwo);
  REQUIRE(w.has_value());
  CHECK(w->k == 1);
  CHECK(w->sequence == PartialQuotientSeq{2, 1});
  CHECK(w->representation == Representation::kAlternate);

  // Likewise 3/7 = [0;2,3] -> [0;2,2,1].
  w = find_witness(7, kTwo);
  REQUIRE(w.has_value());
  CHECK(w->k == 3);
  CHECK(w->sequence == PartialQuotientSeq{2, 2, 1});
  CHECK(w->representation == Representation::kAlternate);

  CHECK_THROWS_AS(find_witness(1, kTwo), std::invalid_argument);
}

TEST_CASE("membership survey") {
  std::vector<WitnessRecord> ws = f_set(3, kTwo);
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].n == 2);
  CHECK(ws[1].n == 3);

  ws = f_set(2, Bound(5));
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].n == 2);

  // Witness soundness at N = 200: revalidate every record independently.
  for (const WitnessRecord& w : f_set(200, kTwo)) {
    ReducedFraction f(w.k, w.n);
    PartialQuotientSeq canonical = expand(f);
    if (w.representation == Representation::kCanonical) {
      CHECK(w.sequence == canonical);
    } else {
      CHECK(w.sequence == alternate_rep(canonical));
    }
    CHECK(is_avg_bounded(w.sequence, kTwo));
    CHECK(convergent(w.sequence) == f);
  }
}

TEST_CASE("density report") {
  DensityReport r = density_report(3, kTwo);
  CHECK(r.count == 2);
  CHECK(r.exponent == doctest::Approx(0.6309).epsilon(0.001));

  r = density_report(2, kTwo);
  CHECK(r.count == 1);
  CHECK(r.exponent == 0.0);
}

TEST_CASE("membership counts are monotone in N and in B") {
  Natural prev = 0;
  for (int n : {2, 5, 10, 20, 40, 60}) {
    Natural c = density_report(n, kTwo).count;
    CHECK(c >= prev);
    prev = c;
  }
  prev = 0;
  for (int b = 2; b <= 5; ++b) {
    Natural c = density_report(50, Bound(b)).count;
    CHECK(c >= prev);
    prev = c;
  }
}

TEST_CASE("doubly bounded fraction set") {
  std::vector<USetEntry> u = u_set(3);
  REQUIRE(u.size() == 1);
  CHECK(u[0].fraction == ReducedFraction(2, 3));
  CHECK(u[0].sequence == PartialQuotientSeq{1, 2});
  CHECK(u[0].tail == PartialQuotientSeq{2});

  u = u_set(7);
  bool found = false;
  for (const USetEntry& e : u) {
    CHECK(e.fraction.numerator > 1);  // 1/q never qualifies
    CHECK(is_avg_bounded(e.sequence, kTwo));
    CHECK(is_avg_bounded(e.tail, kTwo));
    CHECK(convergent(e.sequence) == e.fraction);
    if (e.fraction == ReducedFraction(5, 7)) {
      found = true;
      CHECK(e.sequence == PartialQuotientSeq{1, 2, 2});
    }
  }
  CHECK(found);

  // One entry per rational even when both representations qualify.
  std::set<std::pair<Natural, Natural>> seen;
  for (const USetEntry& e : u_set(40)) {
    CHECK(seen.insert({e.fraction.numerator, e.fraction.denominator}).second);
  }
}

TEST_CASE("doubling chain verification") {
  CorollaryChainReport r = corollary_chain_check(9);
  CHECK(r.violations_a == 0);
  CHECK(r.violations_b == 0);
  CHECK(r.violations_c == 0);

  r = corollary_chain_check(21, true);
  CHECK(r.violations_a == 0);
  CHECK(r.violations_b == 0);
  CHECK(r.violations_c == 0);
  CHECK(r.checked == count_avg_bounded_by_continuant(7, kTwo));
  CHECK(*r.sbar_third == r.checked);

  CHECK_THROWS_AS(corollary_chain_check(8), std::invalid_argument);
}

TEST_CASE("survey is independent of thread count") {
  std::vector<WitnessRecord> a = f_set(300, kTwo, 1);
  std::vector<WitnessRecord> b = f_set(300, kTwo, 7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].n == b[i].n);
    CHECK(a[i].k == b[i].k);
    CHECK(a[i].sequence == b[i].sequence);
    CHECK(a[i].representation == b[i].representation);
  }
}
