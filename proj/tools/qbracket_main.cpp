// qbracket CLI: compute q-bracket series tables, run the identity
// verification suite, and emit machine-readable reports.
//
// Exit codes: 0 pass, 1 identity failure, 2 usage error, 3 io error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qbracket/qbracket.hpp"
#include "qbracket/report_io.hpp"
#include "qbracket/verify.hpp"

namespace {

using namespace qbracket;

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// Resolves the output stream. A relative --output path lands inside
// QBRACKET_OUTPUT_DIR when that is set; an empty --output means stdout.
class OutputStream {
 public:
  explicit OutputStream(const std::string& path) {
    if (path.empty()) return;
    std::filesystem::path p = path;
    if (const char* dir = std::getenv("QBRACKET_OUTPUT_DIR"); dir && *dir && p.is_relative()) {
      p = std::filesystem::path(dir) / p;
    }
    file_.open(p, std::ios::binary);
    if (!file_) {
      failed_path_ = p.string();
    }
  }

  bool ok() const { return failed_path_.empty(); }
  const std::string& failed_path() const { return failed_path_; }
  std::ostream& get() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

  bool flush_ok() {
    get().flush();
    return static_cast<bool>(get());
  }

 private:
  std::ofstream file_;
  std::string failed_path_;
};

// Distinct label for fixed-f identities so reports are self-describing
// even when --f was not given.
std::string default_f_label(IdentityId id, std::optional<std::int64_t> alpha) {
  switch (id) {
    case IdentityId::kStanley: return "e1";
    case IdentityId::kContainingOne: return "moebius";
    case IdentityId::kSquarefreeParity: return "moebius_sq";
    case IdentityId::kDistinctSquares: return "liouville";
    case IdentityId::kMangoldtProduct: return "mangoldt";
    case IdentityId::kEulerMoment:
      return alpha ? "power:" + std::to_string(*alpha) : "power";
    case IdentityId::kJordanDual:
      return alpha ? "jordan:" + std::to_string(*alpha) : "jordan";
    case IdentityId::kEisensteinMoment:
      return alpha ? "power:" + std::to_string(2 * *alpha - 1) : "power";
    default: return "identity";
  }
}

int run_verify(RunConfig cfg, std::optional<std::int64_t> alpha) {
  const std::size_t oracle = std::min(cfg.n_oracle, cfg.n_fast);
  cfg.n_oracle = oracle;
  std::vector<IdentityCase> cases;
  if (cfg.identity == "all") {
    cases = default_catalog(cfg.n_fast, oracle);
  } else {
    const auto id = identity_from_string(cfg.identity);
    if (!id) {
      std::cerr << "error: unknown identity \"" << cfg.identity << "\"\n";
      return kExitUsage;
    }
    const bool takes_f = (*id == IdentityId::kTheorem1 || *id == IdentityId::kTheorem3 ||
                          *id == IdentityId::kMultCor);
    if (takes_f && cfg.f_spec == "all") {
      for (const auto& f : catalog_f_specs()) {
        cases.push_back({*id, f, std::nullopt, cfg.n_fast, oracle});
      }
    } else {
      std::string label = cfg.f_spec;
      if (label.empty()) label = takes_f ? "identity" : default_f_label(*id, alpha);
      cases.push_back({*id, label, alpha, cfg.n_fast, oracle});
    }
  }

  const std::vector<VerificationReport> reports = run_cases(cases);

  OutputStream out(cfg.output);
  if (!out.ok()) {
    std::cerr << "error: cannot open output file: " << out.failed_path() << '\n';
    return kExitIo;
  }
  if (cfg.format == "json") {
    write_verify_json(out.get(), cfg, reports);
  } else if (cfg.format == "csv") {
    write_verify_csv(out.get(), reports);
  } else {
    write_verify_text(out.get(), reports);
  }
  if (!out.flush_ok()) {
    std::cerr << "error: write failed\n";
    return kExitIo;
  }
  return all_pass(reports) ? kExitPass : kExitIdentityFailure;
}

int run_compute(const RunConfig& cfg) {
  const auto mode = stat_mode_from_string(cfg.mode);
  if (!mode) {
    std::cerr << "error: unknown mode \"" << cfg.mode << "\"\n";
    return kExitUsage;
  }
  const FunctionTable f = build_table_from_spec(cfg.f_spec, cfg.n_fast);
  const StatisticVector stat = (*mode == StatMode::kAllParts)
                                   ? stat_all_parts_fast(f, cfg.n_fast)
                                   : stat_distinct_parts_fast(f, cfg.n_fast);
  const TruncatedSeries bracket = q_bracket(stat, cfg.n_fast);
  const TruncatedSeries closed = (*mode == StatMode::kAllParts)
                                     ? lambert_series(f, cfg.n_fast)
                                     : power_series(f, cfg.n_fast);
  std::vector<ComputeRow> rows;
  rows.reserve(cfg.n_fast + 1);
  for (std::size_t n = 0; n <= cfg.n_fast; ++n) {
    rows.push_back({n, bracket[n], closed[n]});
  }

  OutputStream out(cfg.output);
  if (!out.ok()) {
    std::cerr << "error: cannot open output file: " << out.failed_path() << '\n';
    return kExitIo;
  }
  if (cfg.format == "json") {
    write_compute_json(out.get(), cfg, rows);
  } else if (cfg.format == "csv") {
    write_compute_csv(out.get(), rows);
  } else {
    write_compute_text(out.get(), cfg, rows);
  }
  if (!out.flush_ok()) {
    std::cerr << "error: write failed\n";
    return kExitIo;
  }
  return kExitPass;
}

int run_table(const RunConfig& cfg) {
  SequenceTable table;
  table.name = cfg.seq;
  const std::size_t n = cfg.n_fast;
  if (cfg.seq == "p") {
    table.values = partition_count_table(n);
  } else if (cfg.seq == "Q") {
    // Squarefree parts over all partitions: sum p(n-k) 2^omega(k).
    table.values = detail::convolve_with_partition_counts(two_omega_table(n), n);
  } else if (cfg.seq == "distinct_squares") {
    const auto p = partition_count_table(n);
    table.values.assign(n + 1, BigInt(0));
    for (std::size_t m = 1; m <= n; ++m) {
      for (std::size_t k = 1; k * k <= m; ++k) table.values[m] += p[m - k * k];
    }
  } else if (cfg.seq == "stat") {
    const auto mode = stat_mode_from_string(cfg.mode);
    if (!mode) {
      std::cerr << "error: unknown mode \"" << cfg.mode << "\"\n";
      return kExitUsage;
    }
    if (cfg.f_spec.empty()) {
      std::cerr << "error: --seq stat needs --f\n";
      return kExitUsage;
    }
    const FunctionTable f = build_table_from_spec(cfg.f_spec, n);
    table.values = (*mode == StatMode::kAllParts) ? stat_all_parts_fast(f, n).values
                                                  : stat_distinct_parts_fast(f, n).values;
    table.name = "stat:" + cfg.f_spec + ":" + cfg.mode;
  } else {
    std::cerr << "error: unknown sequence \"" << cfg.seq
              << "\" (expected p, Q, distinct_squares, or stat)\n";
    return kExitUsage;
  }

  OutputStream out(cfg.output);
  if (!out.ok()) {
    std::cerr << "error: cannot open output file: " << out.failed_path() << '\n';
    return kExitIo;
  }
  if (cfg.format == "json") {
    write_table_json(out.get(), cfg, table);
  } else if (cfg.format == "csv") {
    write_table_csv(out.get(), table);
  } else {
    write_table_text(out.get(), table);
  }
  if (!out.flush_ok()) {
    std::cerr << "error: write failed\n";
    return kExitIo;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-bracket operator on partition statistics"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::int64_t alpha_value = 0;

  const auto format_check = CLI::IsMember({"json", "csv", "text"});
  const auto mode_check = CLI::IsMember({"all-parts", "distinct-parts"});

  auto* compute = app.add_subcommand(
      "compute", "q-bracket series of a catalog statistic, next to its closed form");
  compute->add_option("--f", cfg.f_spec, "catalog function, e.g. identity, moebius, sigma:2")
      ->required();
  compute->add_option("--mode", cfg.mode, "all-parts or distinct-parts")->check(mode_check);
  compute->add_option("--n", cfg.n_fast, "series order (inclusive)");
  compute->add_option("--format", cfg.format, "json, csv, or text")->check(format_check);
  compute->add_option("--output", cfg.output, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check catalog identities to exact equality");
  verify->add_option("--identity", cfg.identity,
                     "identity name or \"all\" (theorem1, theorem3, multcor, stanley, "
                     "containing_one, euler_moment, jordan_dual, squarefree_parity, "
                     "distinct_squares, mangoldt_product, eisenstein_moment)");
  verify->add_option("--f", cfg.f_spec, "catalog function for theorem1/theorem3/multcor, or \"all\"");
  auto* alpha_opt = verify->add_option("--alpha", alpha_value,
                                       "parameter for euler_moment / jordan_dual / eisenstein_moment");
  verify->add_option("--n", cfg.n_fast, "fast/algebraic bound");
  verify->add_option("--oracle", cfg.n_oracle, "enumeration bound (clamped to --n)");
  verify->add_option("--seed", cfg.seed, "seed recorded in the config (property suites use it)");
  verify->add_option("--format", cfg.format, "json, csv, or text")->check(format_check);
  verify->add_option("--output", cfg.output, "output file (default stdout)");

  auto* table = app.add_subcommand("table", "emit a derived integer sequence");
  table->add_option("--seq", cfg.seq, "p, Q, distinct_squares, or stat")->required();
  table->add_option("--f", cfg.f_spec, "catalog function (for --seq stat)");
  table->add_option("--mode", cfg.mode, "all-parts or distinct-parts (for --seq stat)")
      ->check(mode_check);
  table->add_option("--n", cfg.n_fast, "last index to emit");
  table->add_option("--format", cfg.format, "json, csv, or text")->check(format_check);
  table->add_option("--output", cfg.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      cfg.command = "compute";
      return run_compute(cfg);
    }
    if (verify->parsed()) {
      cfg.command = "verify";
      std::optional<std::int64_t> alpha;
      if (alpha_opt->count() > 0) alpha = alpha_value;
      return run_verify(cfg, alpha);
    }
    cfg.command = "table";
    return run_table(cfg);
  } catch (const std::invalid_argument& e) {
    // Covers unknown functions/identities, bad parameters, malformed cases.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
