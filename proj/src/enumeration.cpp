#include "cflab/enumeration.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <thread>

#include "cflab/growth.hpp"

namespace cflab {

namespace {

constexpr std::size_t kTaskDepth = 6;

// Search over prefixes (a_1,...,a_t) with continuant <= n. The state is
// (prefix-sum slack, q_{t-1}, q_t); each child costs one multiply-add and
// one division. Pruning on the continuant is sound because appending terms
// never decreases it. Int is uint64_t when n fits, cpp_int otherwise.
template <typename Int>
struct Searcher {
  Int n;
  int bound;
  bool uniform;

  // Largest admissible child term at this state, 0 if none.
  std::uint64_t child_cap(std::uint64_t slack, const Int& q_prev,
                          const Int& q_cur) const {
    Int by_continuant = (n - q_prev) / q_cur;
    std::uint64_t by_sum =
        uniform ? static_cast<std::uint64_t>(bound) : slack + bound;
    if (by_continuant < Int(by_sum)) {
      return static_cast<std::uint64_t>(by_continuant);
    }
    return by_sum;
  }

  std::uint64_t next_slack(std::uint64_t slack, std::uint64_t a) const {
    return uniform ? 0 : slack + bound - a;
  }

  // Number of valid proper extensions of the current prefix.
  std::uint64_t count_subtree(std::uint64_t slack, const Int& q_prev,
                              const Int& q_cur) const {
    std::uint64_t total = 0;
    std::uint64_t cap = child_cap(slack, q_prev, q_cur);
    for (std::uint64_t a = 1; a <= cap; ++a) {
      Int q_next = Int(a) * q_cur + q_prev;
      total += 1 + count_subtree(next_slack(slack, a), q_cur, q_next);
    }
    return total;
  }

  struct Task {
    std::uint64_t slack;
    Int q_prev;
    Int q_cur;
  };

  // Collects the nodes at depth kTaskDepth (in DFS order) as parallel /
  // shardable tasks; nodes above that depth are tallied into `shallow`.
  void gather_tasks(std::size_t depth, std::uint64_t slack, const Int& q_prev,
                    const Int& q_cur, std::vector<Task>& tasks,
                    std::uint64_t& shallow) const {
    std::uint64_t cap = child_cap(slack, q_prev, q_cur);
    for (std::uint64_t a = 1; a <= cap; ++a) {
      Int q_next = Int(a) * q_cur + q_prev;
      std::uint64_t child_slack = next_slack(slack, a);
      if (depth + 1 == kTaskDepth) {
        tasks.push_back(Task{child_slack, q_cur, q_next});
      } else {
        ++shallow;
        gather_tasks(depth + 1, child_slack, q_cur, q_next, tasks, shallow);
      }
    }
  }

  Natural run(const CountOptions& opts) const {
    std::vector<Task> tasks;
    std::uint64_t shallow = 0;
    gather_tasks(0, 0, Int(0), Int(1), tasks, shallow);

    std::vector<std::size_t> mine;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (i % opts.shards == opts.shard) mine.push_back(i);
    }

    std::vector<std::uint64_t> results(mine.size(), 0);
    auto work = [&](std::size_t worker, std::size_t workers) {
      for (std::size_t j = worker; j < mine.size(); j += workers) {
        const Task& t = tasks[mine[j]];
        results[j] = 1 + count_subtree(t.slack, t.q_prev, t.q_cur);
      }
    };
    unsigned workers = std::max(1u, opts.threads);
    if (workers == 1 || mine.size() < 2) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(work, w, workers);
      }
      for (auto& th : pool) th.join();
    }

    // Shallow nodes belong to shard 0 so that shard totals sum exactly.
    Natural total = (opts.shard == 0) ? Natural(shallow) : Natural(0);
    for (std::uint64_t r : results) total += r;
    return total;
  }
};

void validate_options(const CountOptions& opts) {
  if (opts.shards < 1 || opts.shard >= opts.shards) {
    throw std::invalid_argument("need shards >= 1 and shard < shards");
  }
}

Natural run_count(const Natural& n, Bound b, bool uniform,
                  const CountOptions& opts) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  validate_options(opts);
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    Searcher<std::uint64_t> s{n.convert_to<std::uint64_t>(), b.value, uniform};
    return s.run(opts);
  }
  Searcher<Natural> s{n, b.value, uniform};
  return s.run(opts);
}

}  // namespace

Natural catalan(std::size_t j) {
  // binom(2j, j)/(j+1), exact at every intermediate step.
  Natural binom = 1;
  for (std::size_t i = 1; i <= j; ++i) {
    binom = binom * (j + i) / i;
  }
  return binom / (j + 1);
}

Natural count_avg_bounded_length(std::size_t m, Bound b) {
  if (m < 1) throw std::invalid_argument("length must be >= 1");
  // DP over slack B*t - sum(a_1..a_t); a term a costs B - a slack.
  std::size_t max_slack = static_cast<std::size_t>(b.value - 1) * m;
  std::vector<Natural> cur(max_slack + 1, 0), next(max_slack + 1, 0);
  cur[0] = 1;
  for (std::size_t t = 0; t < m; ++t) {
    std::fill(next.begin(), next.end(), Natural(0));
    for (std::size_t slack = 0; slack <= max_slack; ++slack) {
      if (cur[slack] == 0) continue;
      for (std::size_t a = 1; a <= slack + b.value; ++a) {
        std::size_t ns = slack + b.value - a;
        if (ns <= max_slack) next[ns] += cur[slack];
      }
    }
    std::swap(cur, next);
  }
  Natural total = 0;
  for (const Natural& c : cur) total += c;
  return total;
}

Natural count_avg_bounded_by_continuant(const Natural& n, Bound b,
                                        const CountOptions& opts) {
  return run_count(n, b, /*uniform=*/false, opts);
}

Natural count_uniform_bounded_by_continuant(const Natural& n, Bound b,
                                            const CountOptions& opts) {
  return run_count(n, b, /*uniform=*/true, opts);
}

double pointwise_exponent(const Natural& count, const Natural& n) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  if (n <= 1 || count == 1) return 0.0;
  auto natural_log = [](const Natural& x) {
    std::size_t bits = boost::multiprecision::msb(x);
    if (bits <= 52) return std::log(x.convert_to<double>());
    Natural top = x >> (bits - 52);
    return std::log(top.convert_to<double>()) +
           static_cast<double>(bits - 52) * std::log(2.0);
  };
  return natural_log(count) / natural_log(n);
}

LowerBoundCertificate lower_bound_certificate(const Natural& n) {
  if (n < 5) throw std::invalid_argument("need n >= 5 so that m >= 2");
  Bound two(2);
  std::size_t m = max_admissible_length(two, n);
  Natural count = count_avg_bounded_length(m, two);
  double exponent = pointwise_exponent(count, n);
  return LowerBoundCertificate{n, m, std::move(count), exponent};
}

std::vector<CountRecord> exponent_table(const std::vector<Natural>& grid,
                                        Bound b, const CountOptions& opts) {
  if (grid.empty()) throw std::invalid_argument("grid must be nonempty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) {
      throw std::invalid_argument("grid must be strictly ascending");
    }
  }
  std::vector<CountRecord> rows;
  rows.reserve(grid.size());
  for (const Natural& n : grid) {
    Natural avg = count_avg_bounded_by_continuant(n, b, opts);
    Natural uni = count_uniform_bounded_by_continuant(n, b, opts);
    double avg_exp = pointwise_exponent(avg, n);
    double uni_exp = pointwise_exponent(uni, n);
    rows.push_back(
        CountRecord{n, b.value, std::move(avg), std::move(uni), avg_exp,
                    uni_exp});
  }
  return rows;
}

}  // namespace cflab
