#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "test_support.hpp"

using testsupport::CommandResult;
using testsupport::split_lines;

namespace {

CommandResult cli(const std::string& args) {
  return testsupport::run_command(std::string(BERNST_CLI_PATH) + " " + args +
                                  " 2>/dev/null");
}

// Minimal CSV row parser matching the writer's quoting rules.
std::vector<std::string> parse_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

TEST_CASE("table: unsigned first-kind triangle rows") {
  CommandResult result = cli("table stirling1u --max-n 3");
  CHECK(result.exit_code == 0);
  CHECK(split_lines(result.output) ==
        std::vector<std::string>{"1", "0,1", "0,1,1", "0,2,3,1"});
}

TEST_CASE("table: --family flag form matches the positional form") {
  CommandResult positional = cli("table stirling2 --max-n 5");
  CommandResult flagged = cli("table --family stirling2 --max-n 5");
  CHECK(positional.exit_code == 0);
  CHECK(flagged.exit_code == 0);
  CHECK(positional.output == flagged.output);
}

TEST_CASE("table: bernoulli sequences, one value per row") {
  CommandResult result = cli("table bernoulli2 --max-n 2");
  CHECK(result.exit_code == 0);
  CHECK(split_lines(result.output) == std::vector<std::string>{"1", "1/2", "-1/6"});

  CommandResult degenerate = cli("table bernoulli1 --max-n 0");
  CHECK(degenerate.exit_code == 0);
  CHECK(split_lines(degenerate.output) == std::vector<std::string>{"1"});
}

TEST_CASE("table: bernoulli polynomial coefficients, low degree first") {
  CommandResult result = cli("table bernpoly --max-n 2");
  CHECK(result.exit_code == 0);
  CHECK(split_lines(result.output) ==
        std::vector<std::string>{"1", "-1/2,1", "1/6,-1,1"});
}

TEST_CASE("table: csv and json encode identical data") {
  CommandResult csv = cli("table stirling1 --max-n 8 --format csv");
  CommandResult json = cli("table stirling1 --max-n 8 --format json");
  REQUIRE(csv.exit_code == 0);
  REQUIRE(json.exit_code == 0);

  auto doc = nlohmann::json::parse(json.output);
  CHECK(doc["family"] == "stirling1");
  CHECK(doc["params"]["max_n"] == 8);
  auto lines = split_lines(csv.output);
  REQUIRE(doc["rows"].size() == lines.size());
  for (std::size_t n = 0; n < lines.size(); ++n) {
    auto fields = parse_csv_row(lines[n]);
    REQUIRE(doc["rows"][n].size() == fields.size());
    for (std::size_t k = 0; k < fields.size(); ++k) {
      CHECK(doc["rows"][n][k].get<std::string>() == fields[k]);
    }
  }
}

TEST_CASE("table: text format carries a row index prefix") {
  CommandResult result = cli("table stirling1u --max-n 3 --format text");
  CHECK(result.exit_code == 0);
  auto lines = split_lines(result.output);
  REQUIRE(lines.size() == 4);
  CHECK(lines[3] == "3: 0 2 3 1");
}

TEST_CASE("verify: single identity passes with exit 0") {
  CommandResult result = cli("verify --identity C6 --max-n 50");
  CHECK(result.exit_code == 0);
  auto lines = split_lines(result.output);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].find("C6 pass") == 0);
  CHECK(lines[0].find("checks=") != std::string::npos);
}

TEST_CASE("verify: csv and json encode identical reports") {
  const std::string bounds = " --max-n 8 --max-r 2 --trials 5 --seed 3";
  CommandResult csv = cli("verify --identity all --format csv" + bounds);
  CommandResult json = cli("verify --identity all --format json" + bounds);
  REQUIRE(csv.exit_code == 0);
  REQUIRE(json.exit_code == 0);

  auto doc = nlohmann::json::parse(json.output);
  CHECK(doc["identity"] == "all");
  CHECK(doc["params"]["max_n"] == 8);
  CHECK(doc["params"]["seed"] == 3);
  auto lines = split_lines(csv.output);
  REQUIRE(lines.size() == doc["reports"].size() + 1);  // header row
  CHECK(parse_csv_row(lines[0])[0] == "id");
  for (std::size_t i = 0; i < doc["reports"].size(); ++i) {
    auto fields = parse_csv_row(lines[i + 1]);
    REQUIRE(fields.size() == 8);
    const auto& report = doc["reports"][i];
    CHECK(fields[0] == report["id"].get<std::string>());
    CHECK(fields[1] == report["status"].get<std::string>());
    CHECK(fields[2] == std::to_string(report["checks_performed"].get<std::uint64_t>()));
    CHECK(fields[3] == report["range"].get<std::string>());
    if (report["counterexample"].is_null()) {
      CHECK(fields[4].empty());
      CHECK(fields[5].empty());
      CHECK(fields[6].empty());
    }
    CHECK(fields[7] == report["notes"].get<std::string>());
  }
}

TEST_CASE("verify: full run reports every identity exactly once") {
  CommandResult result =
      cli("verify --identity all --max-n 6 --max-r 2 --trials 3 --format json");
  REQUIRE(result.exit_code == 0);
  auto doc = nlohmann::json::parse(result.output);
  REQUIRE(doc["reports"].size() == 26);
  for (const auto& report : doc["reports"]) {
    CHECK(report["status"] == "pass");
    CHECK(report["checks_performed"].get<std::uint64_t>() > 0);
  }
}

TEST_CASE("verify: runs are byte-identical for a fixed seed") {
  const std::string args =
      "verify --identity L1_INVERSION --max-n 10 --trials 20 --seed 7";
  CommandResult first = cli(args);
  CommandResult second = cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("exit code 2 on usage errors") {
  CHECK(cli("table nosuchfamily --max-n 3").exit_code == 2);
  CHECK(cli("table stirling1 --max-n 3 --format yaml").exit_code == 2);
  CHECK(cli("table stirling1 --max-n notanumber").exit_code == 2);
  CHECK(cli("table stirling1 --max-n -1").exit_code == 2);
  CHECK(cli("table stirling1").exit_code == 2);  // --max-n is required
  CHECK(cli("verify --identity T5 --max-r 0").exit_code == 2);
  CHECK(cli("verify --identity NOPE").exit_code == 2);
  CHECK(cli("verify --format yaml").exit_code == 2);
  CHECK(cli("").exit_code == 2);  // a subcommand is required
  CHECK(cli("frobnicate").exit_code == 2);
}

TEST_CASE("help exits 0") {
  CHECK(cli("--help").exit_code == 0);
  CHECK(cli("table --help").exit_code == 0);
}
