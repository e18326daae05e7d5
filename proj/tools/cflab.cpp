// cflab: continued fractions with partial quotients bounded in average.
// Batch CLI over the library: expansion, shifting, exact counts, density
// surveys. All output is deterministic; see --help of each subcommand for
// the row schema.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cflab/cf_core.hpp"
#include "cflab/checks.hpp"
#include "cflab/density.hpp"
#include "cflab/enumeration.hpp"
#include "cflab/growth.hpp"
#include "cflab/shifting.hpp"

namespace {

using cflab::Bound;
using cflab::Natural;
using cflab::PartialQuotientSeq;

enum class FieldKind { kInt, kReal, kString };

struct Field {
  std::string key;
  std::string value;
  FieldKind kind;
};

using Row = std::vector<Field>;

Field int_field(std::string key, const Natural& v) {
  return {std::move(key), v.str(), FieldKind::kInt};
}

Field int_field(std::string key, std::uint64_t v) {
  return {std::move(key), std::to_string(v), FieldKind::kInt};
}

Field real_field(std::string key, double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << v;
  return {std::move(key), out.str(), FieldKind::kReal};
}

Field str_field(std::string key, std::string v) {
  return {std::move(key), std::move(v), FieldKind::kString};
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

struct Emitter {
  std::string format = "json";  // json | csv
  std::ostream* out = &std::cout;
  bool header_written = false;

  void emit(const Row& row) {
    if (format == "csv") {
      if (!header_written) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) *out << ',';
          *out << csv_escape(row[i].key);
        }
        *out << '\n';
        header_written = true;
      }
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) *out << ',';
        *out << csv_escape(row[i].value);
      }
      *out << '\n';
    } else {
      *out << '{';
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) *out << ',';
        *out << json_escape(row[i].key) << ':';
        if (row[i].kind == FieldKind::kString || row[i].value.empty()) {
          *out << json_escape(row[i].value);
        } else {
          *out << row[i].value;
        }
      }
      *out << "}\n";
    }
  }
};

PartialQuotientSeq parse_sequence(const std::string& text) {
  std::vector<Natural> terms;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed sequence term '" + item + "'");
    }
    terms.emplace_back(Natural(item));
  }
  return PartialQuotientSeq(std::move(terms));
}

std::vector<Natural> parse_grid(const std::string& text) {
  std::vector<Natural> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed grid entry '" + item + "'");
    }
    grid.emplace_back(Natural(item));
  }
  if (grid.empty()) throw std::invalid_argument("empty grid");
  return grid;
}

unsigned env_threads() {
  const char* env = std::getenv("CF_LAB_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v > 0 ? static_cast<unsigned>(v) : 1;
}

std::string trace_string(const cflab::ContinuantTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.values.size(); ++i) {
    if (i) out += ',';
    out += trace.values[i].str();
  }
  return out;
}

double max_prefix_average(const PartialQuotientSeq& s) {
  double best = 0.0;
  Natural sum = 0;
  for (std::size_t t = 1; t <= s.length(); ++t) {
    sum += s.at(t);
    best = std::max(best, sum.convert_to<double>() / static_cast<double>(t));
  }
  return best;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"continued fractions with partial quotients bounded in average"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "output format: json (line-delimited) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "write output to FILE instead of stdout");

  // expand
  auto* cmd_expand = app.add_subcommand(
      "expand", "continued fraction of k/n: sequence, continuant trace, "
                "both representations, max prefix average");
  std::string arg_k, arg_n;
  int expand_bound = 2;
  cmd_expand->add_option("k", arg_k, "numerator")->required();
  cmd_expand->add_option("n", arg_n, "denominator")->required();
  cmd_expand->add_option("--bound", expand_bound, "averaging bound B");

  // shift
  auto* cmd_shift = app.add_subcommand(
      "shift", "normalization trace of a sequence: one row per step with "
               "case, indices, continuants before/after");
  std::string arg_seq;
  int shift_bound = 2;
  cmd_shift->add_option("sequence", arg_seq, "comma-separated terms")
      ->required();
  cmd_shift->add_option("--bound", shift_bound, "averaging bound B");

  // count
  auto* cmd_count = app.add_subcommand(
      "count", "exact counts of bounded sequences with continuant <= n per "
               "grid point, with the constructive lower-bound certificate");
  std::string arg_grid;
  int count_bound = 2;
  unsigned shards = 1, shard = 0;
  cmd_count->add_option("--grid", arg_grid, "comma-separated ascending n values")
      ->required();
  cmd_count->add_option("--bound", count_bound, "averaging bound B");
  cmd_count->add_option("--shards", shards, "number of shards");
  cmd_count->add_option("--shard", shard, "this shard's index (0-based)");

  // catalan
  auto* cmd_catalan =
      app.add_subcommand("catalan", "exact Catalan numbers");
  std::uint64_t arg_j = 0;
  bool upto = false;
  cmd_catalan->add_option("j", arg_j, "index")->required();
  cmd_catalan->add_flag("--upto", upto, "list all indices 0..j");

  // pell
  auto* cmd_pell = app.add_subcommand(
      "pell", "the recurrence F_k = B*F_{k-1} + F_{k-2} and its growth root");
  std::uint64_t arg_pk = 0;
  int pell_bound = 2;
  bool pell_upto = false, pell_root = false;
  cmd_pell->add_option("k", arg_pk, "index")->required();
  cmd_pell->add_option("--bound", pell_bound, "recurrence parameter B");
  cmd_pell->add_flag("--upto", pell_upto, "list all indices 0..k");
  cmd_pell->add_flag("--root", pell_root,
                     "also print (B+sqrt(B^2+4))/2 to 30+ digits");

  // density
  auto* cmd_density = app.add_subcommand(
      "density", "survey of denominators in [2,N] admitting an "
                 "average-bounded fraction; witness rows then a summary row");
  std::string arg_maxn;
  int density_bound = 2;
  bool summary_only = false, verify_corollary = false;
  cmd_density->add_option("N", arg_maxn, "survey limit")->required();
  cmd_density->add_option("--bound", density_bound, "averaging bound B");
  cmd_density->add_flag("--summary", summary_only, "emit only the summary row");
  cmd_density->add_flag("--verify-corollary", verify_corollary,
                        "also run the doubling-chain verification at N");

  // verify
  auto* cmd_verify = app.add_subcommand(
      "verify", "run the full property suite (several minutes at full scale)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  std::ofstream file_out;
  Emitter emitter;
  emitter.format = format;
  if (!out_path.empty()) {
    file_out.open(out_path);
    if (!file_out) throw std::invalid_argument("cannot open " + out_path);
    emitter.out = &file_out;
  }

  if (*cmd_expand) {
    cflab::ReducedFraction f{Natural(arg_k), Natural(arg_n)};
    PartialQuotientSeq seq = cflab::expand(f);
    Row row{int_field("k", f.numerator),
            int_field("n", f.denominator),
            str_field("sequence", seq.to_string()),
            str_field("alternate", cflab::alternate_rep(seq).to_string()),
            str_field("continuants", trace_string(cflab::continuant_trace(seq))),
            real_field("max_prefix_average", max_prefix_average(seq)),
            int_field("bound", Natural(Bound(expand_bound).value)),
            str_field("avg_bounded",
                      cflab::is_avg_bounded(seq, Bound(expand_bound))
                          ? "true" : "false")};
    emitter.emit(row);
    return 0;
  }

  if (*cmd_shift) {
    PartialQuotientSeq seq = parse_sequence(arg_seq);
    cflab::NormalizeResult norm = cflab::normalize(seq, Bound(shift_bound));
    std::uint64_t step_no = 0;
    for (const cflab::ShiftStepReport& step : norm.steps) {
      const char* kind =
          step.shift_case.kind == cflab::ShiftKind::kAdjacentCarry
              ? "adjacent-carry" : "run-carry";
      emitter.emit(Row{
          int_field("step", ++step_no),
          str_field("case", kind),
          int_field("t", static_cast<std::uint64_t>(step.shift_case.t)),
          int_field("s", static_cast<std::uint64_t>(step.shift_case.s)),
          str_field("before", step.before.to_string()),
          str_field("after", step.after.to_string()),
          int_field("continuant_before", step.continuant_before),
          int_field("continuant_after", step.continuant_after)});
    }
    return 0;
  }

  if (*cmd_count) {
    std::vector<Natural> grid = parse_grid(arg_grid);
    cflab::CountOptions opts{shards, shard, env_threads()};
    if (shards > 1) {
      // Partial totals; sum the avg/uniform counts across shards to merge.
      for (const Natural& n : grid) {
        emitter.emit(Row{
            int_field("n", n), int_field("bound", Natural(count_bound)),
            int_field("shard", shard), int_field("shards", shards),
            int_field("avg_count",
                      cflab::count_avg_bounded_by_continuant(
                          n, Bound(count_bound), opts)),
            int_field("uniform_count",
                      cflab::count_uniform_bounded_by_continuant(
                          n, Bound(count_bound), opts))});
      }
      return 0;
    }
    std::vector<cflab::CountRecord> rows =
        cflab::exponent_table(grid, Bound(count_bound), opts);
    for (const cflab::CountRecord& rec : rows) {
      Row row{int_field("n", rec.n),
              int_field("bound", Natural(rec.bound)),
              int_field("avg_count", rec.avg_count),
              int_field("uniform_count", rec.uniform_count),
              real_field("avg_exponent", rec.avg_exponent),
              real_field("uniform_exponent", rec.uniform_exponent)};
      if (rec.bound == 2 && rec.n >= 5) {
        cflab::LowerBoundCertificate cert =
            cflab::lower_bound_certificate(rec.n);
        row.push_back(int_field("certificate_m",
                                static_cast<std::uint64_t>(cert.m)));
        row.push_back(int_field("certificate_count", cert.sequence_count));
        row.push_back(real_field("certificate_exponent",
                                 cert.implied_exponent));
      } else {
        row.push_back(str_field("certificate_m", ""));
        row.push_back(str_field("certificate_count", ""));
        row.push_back(str_field("certificate_exponent", ""));
      }
      emitter.emit(row);
    }
    return 0;
  }

  if (*cmd_catalan) {
    std::uint64_t from = upto ? 0 : arg_j;
    for (std::uint64_t j = from; j <= arg_j; ++j) {
      emitter.emit(Row{int_field("j", j),
                       int_field("catalan", cflab::catalan(j))});
    }
    return 0;
  }

  if (*cmd_pell) {
    Bound b(pell_bound);
    std::uint64_t from = pell_upto ? 0 : arg_pk;
    for (std::uint64_t k = from; k <= arg_pk; ++k) {
      Row row{int_field("k", k), int_field("bound", Natural(b.value)),
              int_field("value", cflab::pell_like(b, k))};
      if (pell_root) {
        row.push_back(str_field("growth_root", cflab::growth_root_string(b)));
      }
      emitter.emit(row);
    }
    return 0;
  }

  if (*cmd_density) {
    Natural max_n(arg_maxn);
    Bound b(density_bound);
    unsigned threads = env_threads();
    std::vector<cflab::WitnessRecord> witnesses =
        cflab::f_set(max_n, b, threads);
    if (!summary_only) {
      for (const cflab::WitnessRecord& w : witnesses) {
        emitter.emit(Row{
            int_field("n", w.n), int_field("k", w.k),
            str_field("sequence", w.sequence.to_string()),
            str_field("representation",
                      w.representation == cflab::Representation::kCanonical
                          ? "canonical" : "alternate")});
      }
    }
    Natural count = witnesses.size();
    double exponent =
        witnesses.empty() ? 0.0 : cflab::pointwise_exponent(count, max_n);
    Emitter summary_emitter = emitter;  // separate schema, fresh CSV header
    summary_emitter.header_written = false;
    if (emitter.format == "csv" && !summary_only && emitter.header_written) {
      *emitter.out << "--\n";
    }
    summary_emitter.emit(Row{int_field("N", max_n),
                             int_field("bound", Natural(b.value)),
                             int_field("count", count),
                             real_field("exponent", exponent)});
    if (verify_corollary) {
      cflab::CorollaryChainReport r = cflab::corollary_chain_check(max_n, true);
      Emitter chain_emitter = emitter;
      chain_emitter.header_written = false;
      if (emitter.format == "csv") *emitter.out << "--\n";
      chain_emitter.emit(Row{
          int_field("n", r.n), int_field("checked", r.checked),
          int_field("violations_a", r.violations_a),
          int_field("violations_b", r.violations_b),
          int_field("violations_c", r.violations_c),
          int_field("sbar_third", *r.sbar_third),
          int_field("denominator_count", *r.denominator_count)});
    }
    return 0;
  }

  if (*cmd_verify) {
    bool ok = true;
    for (const cflab::checks::CheckResult& r : cflab::checks::run_all()) {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  "
                << r.detail << "\n";
      ok = ok && r.pass;
    }
    return ok ? 0 : 1;
  }

  return 2;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
