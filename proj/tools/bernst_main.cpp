// bernst: exact Stirling/Bernoulli tables and mechanical identity verification.
//
// Subcommands:
//   table   print a sequence or triangle (csv, json, or text)
//   verify  run identity checkers and report pass/fail with counterexamples
//
// Exit codes: 0 success (all identities pass), 1 identity counterexample
// found, 2 usage error. All values are exact rationals serialized as "p/q"
// (or "p" for integers); nothing is ever rounded.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bernst/bernoulli.hpp"
#include "bernst/identities.hpp"
#include "bernst/polynomial.hpp"
#include "bernst/stirling.hpp"

namespace {

using bernst::IdentityReport;
using bernst::VerifyConfig;

const std::vector<std::string> kFamilies = {"stirling1", "stirling1u", "stirling2",
                                            "bernoulli1", "bernoulli2", "bernpoly"};

bool valid_format(const std::string& format) {
  return format == "csv" || format == "json" || format == "text";
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::vector<std::vector<std::string>> table_rows(const std::string& family, int max_n) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    std::vector<std::string> row;
    if (family == "stirling1" || family == "stirling1u" || family == "stirling2") {
      for (int k = 0; k <= n; ++k) {
        if (family == "stirling1") {
          row.push_back(bernst::stirling1(n, k).to_string());
        } else if (family == "stirling1u") {
          row.push_back(bernst::stirling1_unsigned(n, k).to_string());
        } else {
          row.push_back(bernst::stirling2(n, k).to_string());
        }
      }
    } else if (family == "bernoulli1") {
      row.push_back(bernst::bernoulli_first(n).to_string());
    } else if (family == "bernoulli2") {
      row.push_back(bernst::bernoulli_second(n).to_string());
    } else {  // bernpoly: monomial coefficients of B_n(X), low degree first
      const bernst::Polynomial poly = bernst::bernoulli_polynomial(n);
      for (const auto& coeff : poly.coeffs()) {
        row.push_back(coeff.to_string());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_table(const std::string& family, int max_n, const std::string& format) {
  auto rows = table_rows(family, max_n);
  if (format == "csv") {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << row[i];
      }
      std::cout << '\n';
    }
  } else if (format == "text") {
    for (std::size_t n = 0; n < rows.size(); ++n) {
      std::cout << n << ':';
      for (const auto& value : rows[n]) std::cout << ' ' << value;
      std::cout << '\n';
    }
  } else {
    nlohmann::json doc;
    doc["family"] = family;
    doc["params"]["max_n"] = max_n;
    doc["rows"] = rows;
    std::cout << doc.dump() << '\n';
  }
  return 0;
}

nlohmann::json report_to_json(const IdentityReport& report) {
  nlohmann::json entry;
  entry["id"] = std::string(bernst::to_string(report.id));
  entry["status"] = report.passed ? "pass" : "fail";
  entry["checks_performed"] = report.checks_performed;
  entry["range"] = report.range;
  if (report.counterexample) {
    entry["counterexample"] = {{"params", report.counterexample->params},
                               {"lhs", report.counterexample->lhs},
                               {"rhs", report.counterexample->rhs}};
  } else {
    entry["counterexample"] = nullptr;
  }
  entry["notes"] = report.notes;
  return entry;
}

void print_reports_text(const std::vector<IdentityReport>& reports) {
  for (const auto& report : reports) {
    std::cout << bernst::to_string(report.id) << ' ' << (report.passed ? "pass" : "fail")
              << " checks=" << report.checks_performed << " range=\"" << report.range
              << '"';
    if (report.counterexample) {
      std::cout << " counterexample=\"" << report.counterexample->params << "\" lhs=\""
                << report.counterexample->lhs << "\" rhs=\"" << report.counterexample->rhs
                << '"';
    }
    if (!report.notes.empty()) std::cout << " note=\"" << report.notes << '"';
    std::cout << '\n';
  }
}

void print_reports_csv(const std::vector<IdentityReport>& reports) {
  std::cout << "id,status,checks_performed,range,counterexample_params,"
               "counterexample_lhs,counterexample_rhs,notes\n";
  for (const auto& report : reports) {
    std::cout << bernst::to_string(report.id) << ',' << (report.passed ? "pass" : "fail")
              << ',' << report.checks_performed << ',' << csv_escape(report.range) << ',';
    if (report.counterexample) {
      std::cout << csv_escape(report.counterexample->params) << ','
                << csv_escape(report.counterexample->lhs) << ','
                << csv_escape(report.counterexample->rhs);
    } else {
      std::cout << ",,";
    }
    std::cout << ',' << csv_escape(report.notes) << '\n';
  }
}

int run_verify(const std::string& identity, const VerifyConfig& config,
               const std::string& format) {
  std::vector<IdentityReport> reports;
  if (identity == "all") {
    reports = bernst::run_all(config);
  } else {
    std::optional<bernst::IdentityId> id = bernst::parse_identity_id(identity);
    if (!id) {
      std::cerr << "bernst: unknown identity '" << identity << "'\n";
      return 2;
    }
    reports.push_back(bernst::run_identity(*id, config));
  }

  if (format == "text") {
    print_reports_text(reports);
  } else if (format == "csv") {
    print_reports_csv(reports);
  } else {
    nlohmann::json doc;
    doc["identity"] = identity;
    doc["params"] = {{"max_n", config.max_n},
                     {"max_r", config.max_r},
                     {"trials", config.trials},
                     {"seed", config.seed}};
    doc["reports"] = nlohmann::json::array();
    for (const auto& report : reports) doc["reports"].push_back(report_to_json(report));
    std::cout << doc.dump() << '\n';
  }

  for (const auto& report : reports) {
    if (!report.passed) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Stirling and Bernoulli number toolkit"};
  app.require_subcommand(1);

  std::string family;
  int table_max_n = 0;
  std::string table_format = "csv";
  CLI::App* table = app.add_subcommand(
      "table", "Print a table: triangles row by row, sequences one value per row, "
               "polynomial coefficients low degree first");
  table->add_option("family,--family", family,
                    "One of: stirling1, stirling1u, stirling2, bernoulli1, bernoulli2, "
                    "bernpoly")
      ->required();
  table->add_option("--max-n", table_max_n, "Last row index (>= 0)")->required();
  table->add_option("--format", table_format, "Output format: csv, json, or text");

  std::string identity = "all";
  VerifyConfig config;
  long long seed = 0;
  std::string verify_format = "text";
  CLI::App* verify = app.add_subcommand(
      "verify", "Check identities over a parameter range with exact arithmetic; "
                "exit 0 only if every report passes");
  verify->add_option("--identity", identity, "Identity id (e.g. T5) or 'all'");
  verify->add_option("--max-n", config.max_n, "Sweep bound for n and k (>= 1)");
  verify->add_option("--max-r", config.max_r, "Sweep bound for r (>= 1)");
  verify->add_option("--trials", config.trials, "Randomized inversion round-trips (>= 1)");
  verify->add_option("--seed", seed, "Seed for the randomized trials");
  verify->add_option("--format", verify_format, "Output format: csv, json, or text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    std::cerr << "bernst: " << error.what() << '\n';
    return 2;
  }

  try {
    if (table->parsed()) {
      if (!valid_format(table_format)) {
        std::cerr << "bernst: unknown format '" << table_format << "'\n";
        return 2;
      }
      bool known_family = false;
      for (const auto& candidate : kFamilies) known_family |= candidate == family;
      if (!known_family) {
        std::cerr << "bernst: unknown family '" << family << "'\n";
        return 2;
      }
      if (table_max_n < 0) {
        std::cerr << "bernst: --max-n must be >= 0\n";
        return 2;
      }
      return run_table(family, table_max_n, table_format);
    }
    if (!valid_format(verify_format)) {
      std::cerr << "bernst: unknown format '" << verify_format << "'\n";
      return 2;
    }
    if (config.max_n < 1 || config.max_r < 1 || config.trials < 1) {
      std::cerr << "bernst: --max-n, --max-r, and --trials must be >= 1\n";
      return 2;
    }
    config.seed = static_cast<std::uint64_t>(seed);
    return run_verify(identity, config, verify_format);
  } catch (const std::exception& error) {
    std::cerr << "bernst: " << error.what() << '\n';
    return 2;
  }
}
