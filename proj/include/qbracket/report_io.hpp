#pragma once

// Serialization of verification reports, computed series, and sequence
// tables. All three formats are fully deterministic: big integers are
// rendered as decimal strings (they exceed both 64-bit and double range),
// key order is fixed, and wall-clock timings never reach an output file, so
// identical run configurations produce byte-identical output.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qbracket/series.hpp"
#include "qbracket/verify.hpp"
#include "qbracket/version.hpp"

namespace qbracket {

struct RunConfig {
  std::string command;            // compute | verify | table
  std::string identity = "all";   // verify
  std::string f_spec;             // compute, table --seq stat, verify theorem cases
  std::string mode = "all-parts"; // all-parts | distinct-parts
  std::string seq;                // table
  std::size_t n_fast = 200;
  std::size_t n_oracle = 30;
  std::string format = "text";    // json | csv | text
  std::uint64_t seed = 1729;
  std::string output;             // empty = stdout
};

struct ComputeRow {
  std::size_t n;
  BigInt qbracket;
  BigInt closed_form;
};

struct SequenceTable {
  std::string name;
  std::vector<BigInt> values;  // index 0..N
};

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json config_json(const RunConfig& cfg) {
  ordered_json j;
  j["command"] = cfg.command;
  j["identity"] = cfg.identity;
  j["f"] = cfg.f_spec;
  j["mode"] = cfg.mode;
  j["seq"] = cfg.seq;
  j["n_fast"] = cfg.n_fast;
  j["n_oracle"] = cfg.n_oracle;
  j["format"] = cfg.format;
  j["seed"] = cfg.seed;
  j["output"] = cfg.output.empty() ? "-" : cfg.output;
  return j;
}

inline ordered_json report_json(const VerificationReport& r) {
  ordered_json j;
  j["identity"] = std::string(to_string(r.target.id));
  j["f"] = r.target.f_name;
  if (r.target.alpha) {
    j["alpha"] = *r.target.alpha;
  } else {
    j["alpha"] = nullptr;
  }
  j["n_fast"] = r.target.n_fast;
  j["n_oracle"] = r.target.n_oracle;
  j["overall"] = r.overall;
  j["notes"] = r.notes;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.per_n) {
    ordered_json row;
    row["n"] = c.n;
    row["check"] = c.check;
    row["lhs"] = c.lhs;
    row["rhs"] = c.rhs;
    row["pass"] = c.pass;
    checks.push_back(std::move(row));
  }
  j["checks"] = std::move(checks);
  return j;
}

inline std::string csv_alpha(const VerificationReport& r) {
  return r.target.alpha ? std::to_string(*r.target.alpha) : std::string();
}

}  // namespace detail

// --------------------------- verify ---------------------------------------

inline void write_verify_json(std::ostream& os, const RunConfig& cfg,
                              const std::vector<VerificationReport>& reports) {
  detail::ordered_json j;
  j["config"] = detail::config_json(cfg);
  detail::ordered_json rs = detail::ordered_json::array();
  for (const auto& r : reports) rs.push_back(detail::report_json(r));
  j["reports"] = std::move(rs);
  j["version"] = kVersion;
  os << j.dump(2) << '\n';
}

inline void write_verify_csv(std::ostream& os,
                             const std::vector<VerificationReport>& reports) {
  os << "identity,f,alpha,n,check,lhs,rhs,pass\n";
  for (const auto& r : reports) {
    const std::string alpha = detail::csv_alpha(r);
    for (const auto& c : r.per_n) {
      os << to_string(r.target.id) << ',' << r.target.f_name << ',' << alpha << ',' << c.n
         << ',' << c.check << ',' << c.lhs << ',' << c.rhs << ','
         << (c.pass ? "true" : "false") << '\n';
    }
  }
}

inline void write_verify_text(std::ostream& os,
                              const std::vector<VerificationReport>& reports) {
  std::size_t passed = 0;
  for (const auto& r : reports) {
    os << (r.overall ? "[PASS] " : "[FAIL] ") << to_string(r.target.id);
    if (!r.target.f_name.empty()) os << " f=" << r.target.f_name;
    if (r.target.alpha) os << " alpha=" << *r.target.alpha;
    os << " n_fast=" << r.target.n_fast << " n_oracle=" << r.target.n_oracle
       << " checks=" << r.per_n.size() << '\n';
    if (!r.overall) {
      std::size_t shown = 0;
      for (const auto& c : r.per_n) {
        if (c.pass) continue;
        os << "  n=" << c.n << ' ' << c.check << ": " << c.lhs << " != " << c.rhs << '\n';
        if (++shown == 10) {
          os << "  ...\n";
          break;
        }
      }
    }
    if (!r.notes.empty()) os << "  note: " << r.notes << '\n';
    if (r.overall) ++passed;
  }
  os << "overall: " << (passed == reports.size() ? "PASS" : "FAIL") << " (" << passed << '/'
     << reports.size() << " cases)\n";
}

// --------------------------- compute ---------------------------------------

inline void write_compute_json(std::ostream& os, const RunConfig& cfg,
                               const std::vector<ComputeRow>& rows) {
  detail::ordered_json j;
  j["config"] = detail::config_json(cfg);
  detail::ordered_json report;
  report["identity"] = "compute";
  report["f"] = cfg.f_spec;
  report["mode"] = cfg.mode;
  report["n_fast"] = cfg.n_fast;
  detail::ordered_json checks = detail::ordered_json::array();
  for (const auto& r : rows) {
    detail::ordered_json row;
    row["n"] = r.n;
    row["qbracket"] = r.qbracket.str();
    row["closed_form"] = r.closed_form.str();
    checks.push_back(std::move(row));
  }
  report["checks"] = std::move(checks);
  j["reports"] = detail::ordered_json::array({std::move(report)});
  j["version"] = kVersion;
  os << j.dump(2) << '\n';
}

inline void write_compute_csv(std::ostream& os, const std::vector<ComputeRow>& rows) {
  os << "n,qbracket_coeff,closed_form_coeff\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.qbracket.str() << ',' << r.closed_form.str() << '\n';
  }
}

inline void write_compute_text(std::ostream& os, const RunConfig& cfg,
                               const std::vector<ComputeRow>& rows) {
  os << "# f=" << cfg.f_spec << " mode=" << cfg.mode << '\n';
  os << "n qbracket closed_form\n";
  for (const auto& r : rows) {
    os << r.n << ' ' << r.qbracket.str() << ' ' << r.closed_form.str() << '\n';
  }
}

// --------------------------- table -----------------------------------------

inline void write_table_json(std::ostream& os, const RunConfig& cfg,
                             const SequenceTable& table) {
  detail::ordered_json j;
  j["config"] = detail::config_json(cfg);
  j["reports"] = detail::ordered_json::array();
  detail::ordered_json seq;
  seq["name"] = table.name;
  detail::ordered_json values = detail::ordered_json::array();
  for (const auto& v : table.values) values.push_back(v.str());
  seq["values"] = std::move(values);
  j["sequence"] = std::move(seq);
  j["version"] = kVersion;
  os << j.dump(2) << '\n';
}

inline void write_table_csv(std::ostream& os, const SequenceTable& table) {
  os << "n,value\n";
  for (std::size_t n = 0; n < table.values.size(); ++n) {
    os << n << ',' << table.values[n].str() << '\n';
  }
}

inline void write_table_text(std::ostream& os, const SequenceTable& table) {
  for (std::size_t n = 0; n < table.values.size(); ++n) {
    if (n > 0) os << ',';
    os << table.values[n].str();
  }
  os << '\n';
}

}  // namespace qbracket
