// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run times are printed so the per-criterion budgets are visible.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "cflab/checks.hpp"

int main() {
  using cflab::checks::CheckResult;
  struct Criterion {
    int number;
    std::function<CheckResult()> run;
  };
  std::vector<Criterion> criteria{
      {1, [] { return cflab::checks::round_trip(2000); }},
      {2, [] { return cflab::checks::shifting_exhaustive(10, 6); }},
      {3, [] { return cflab::checks::continuant_identities(); }},
      {4, [] { return cflab::checks::growth_bound(200); }},
      {5, [] { return cflab::checks::certificate_chain(); }},
      {6, [] { return cflab::checks::counting_crosschecks(12); }},
      {7, [] { return cflab::checks::density_chain(2000); }},
      {8, [] { return cflab::checks::survey_soundness(2000); }},
  };

  bool ok = true;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    CheckResult r = c.run();
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::printf("%s  criterion %d  %-24s (%.1fs)  %s\n",
                r.pass ? "PASS" : "FAIL", c.number, r.name.c_str(), secs,
                r.detail.c_str());
    std::fflush(stdout);
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
