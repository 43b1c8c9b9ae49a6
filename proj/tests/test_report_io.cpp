#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qbracket/report_io.hpp"

using namespace qbracket;

namespace {

RunConfig verify_config() {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.identity = "euler_moment";
  cfg.format = "json";
  cfg.n_fast = 25;
  cfg.n_oracle = 8;
  return cfg;
}

std::vector<VerificationReport> sample_reports() {
  return run_cases({{IdentityId::kEulerMoment, "power:1", 1, 25, 8},
                    {IdentityId::kStanley, "e1", std::nullopt, 25, 8}});
}

}  // namespace

TEST_CASE("json output carries config, reports, and version") {
  const auto reports = sample_reports();
  std::ostringstream os;
  write_verify_json(os, verify_config(), reports);
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j.at("version") == kVersion);
  CHECK(j.at("config").at("command") == "verify");
  CHECK(j.at("config").at("n_fast") == 25);
  REQUIRE(j.at("reports").size() == 2);
  const auto& first = j.at("reports").at(0);
  CHECK(first.at("identity") == "euler_moment");
  CHECK(first.at("alpha") == 1);
  CHECK(first.at("overall") == true);
  CHECK(j.at("reports").at(1).at("alpha").is_null());
}

TEST_CASE("big integers serialize as decimal strings") {
  // The fifth-moment statistic at n=200 has 21 digits, past 64-bit range;
  // the witness fields must be strings, not JSON numbers.
  const auto reports = run_cases({{IdentityId::kEulerMoment, "power:5", 5, 200, 0}});
  std::ostringstream os;
  RunConfig cfg = verify_config();
  cfg.n_fast = 200;
  cfg.n_oracle = 0;
  write_verify_json(os, cfg, reports);
  const auto j = nlohmann::json::parse(os.str());
  bool saw_large = false;
  for (const auto& row : j.at("reports").at(0).at("checks")) {
    REQUIRE(row.at("lhs").is_string());
    REQUIRE(row.at("rhs").is_string());
    if (row.at("lhs").get<std::string>().size() > 19) saw_large = true;
  }
  CHECK(saw_large);
}

TEST_CASE("serialization is deterministic") {
  const auto reports = sample_reports();
  std::ostringstream a, b;
  write_verify_json(a, verify_config(), reports);
  write_verify_json(b, verify_config(), reports);
  CHECK(a.str() == b.str());
  std::ostringstream c, d;
  write_verify_csv(c, reports);
  write_verify_csv(d, reports);
  CHECK(c.str() == d.str());
}

TEST_CASE("csv shape: header, no trailing comma, newline-terminated") {
  const auto reports = sample_reports();
  std::ostringstream os;
  write_verify_csv(os, reports);
  const std::string text = os.str();
  REQUIRE(!text.empty());
  CHECK(text.back() == '\n');
  std::istringstream lines(text);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "identity,f,alpha,n,check,lhs,rhs,pass");
  while (std::getline(lines, line)) {
    REQUIRE(!line.empty());
    CHECK(line.back() != ',');
  }
}

TEST_CASE("csv and json carry identical numeric payloads") {
  const auto reports = sample_reports();
  const RunConfig cfg = verify_config();

  std::ostringstream jos;
  write_verify_json(jos, cfg, reports);
  const auto j = nlohmann::json::parse(jos.str());
  std::vector<std::array<std::string, 3>> json_rows;
  for (const auto& rep : j.at("reports")) {
    for (const auto& row : rep.at("checks")) {
      json_rows.push_back({std::to_string(row.at("n").get<std::size_t>()),
                           row.at("lhs").get<std::string>(),
                           row.at("rhs").get<std::string>()});
    }
  }

  std::ostringstream cos;
  write_verify_csv(cos, reports);
  std::istringstream lines(cos.str());
  std::string line;
  std::getline(lines, line);  // header
  std::vector<std::array<std::string, 3>> csv_rows;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 8);
    csv_rows.push_back({cells[3], cells[5], cells[6]});
  }
  CHECK(json_rows == csv_rows);
}

TEST_CASE("text format summarizes cases and surfaces failures") {
  auto reports = sample_reports();
  std::ostringstream ok;
  write_verify_text(ok, reports);
  CHECK(ok.str().find("[PASS] euler_moment") != std::string::npos);
  CHECK(ok.str().find("overall: PASS (2/2 cases)") != std::string::npos);

  // Fabricate a failing row; the emitters must flag it and exit text shows it.
  reports[0].per_n.push_back({4, "fabricated", "1", "2", false});
  reports[0].overall = false;
  std::ostringstream bad;
  write_verify_text(bad, reports);
  CHECK(bad.str().find("[FAIL] euler_moment") != std::string::npos);
  CHECK(bad.str().find("n=4 fabricated: 1 != 2") != std::string::npos);
  CHECK(bad.str().find("overall: FAIL (1/2 cases)") != std::string::npos);
  CHECK(!all_pass(reports));
}

TEST_CASE("compute rows serialize to matching csv and json payloads") {
  RunConfig cfg;
  cfg.command = "compute";
  cfg.f_spec = "identity";
  cfg.mode = "all-parts";
  cfg.n_fast = 6;
  const std::vector<ComputeRow> rows = {{0, BigInt(0), BigInt(0)}, {1, BigInt(1), BigInt(1)},
                                        {4, BigInt(7), BigInt(7)}};
  std::ostringstream cos;
  write_compute_csv(cos, rows);
  CHECK(cos.str() == "n,qbracket_coeff,closed_form_coeff\n0,0,0\n1,1,1\n4,7,7\n");

  std::ostringstream jos;
  write_compute_json(jos, cfg, rows);
  const auto j = nlohmann::json::parse(jos.str());
  CHECK(j.at("reports").at(0).at("identity") == "compute");
  CHECK(j.at("reports").at(0).at("checks").at(2).at("qbracket") == "7");
}

TEST_CASE("sequence tables render as a comma-joined line in text mode") {
  const SequenceTable table{"p", partition_count_table(10)};
  std::ostringstream os;
  write_table_text(os, table);
  CHECK(os.str() == "1,1,2,3,5,7,11,15,22,30,42\n");

  std::ostringstream csv;
  write_table_csv(csv, table);
  CHECK(csv.str().rfind("n,value\n0,1\n1,1\n2,2\n", 0) == 0);

  RunConfig cfg;
  cfg.command = "table";
  cfg.seq = "p";
  cfg.n_fast = 10;
  std::ostringstream jos;
  write_table_json(jos, cfg, table);
  const auto j = nlohmann::json::parse(jos.str());
  CHECK(j.at("sequence").at("name") == "p");
  CHECK(j.at("sequence").at("values").at(10) == "42");
}
