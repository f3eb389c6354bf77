#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hdc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// label -> value_exact for each CSV row.
std::map<std::string, std::string> exact_by_label(const std::string& csv) {
  std::map<std::string, std::string> out;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("n,", 0) == 0) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream fields(line);
    for (int i = 0; i < 8 && std::getline(fields, cell, ','); ++i) cells.push_back(cell);
    REQUIRE(cells.size() == 8);
    out[cells[3]] = cells[7];
  }
  return out;
}

}  // namespace

TEST_CASE("construct emits the code parameters") {
  const auto r = run({"construct", "--m", "6", "--c", "2", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 63);
  CHECK(j["k"] == 12);
  CHECK(j["designed_distance"] == 16);
  CHECK(j["generator_hex"].get<std::string>().rfind("0x", 0) == 0);
}

TEST_CASE("distance and eigen subcommands") {
  const auto d = nlohmann::json::parse(run({"distance", "--m", "4", "--c", "1"}).out);
  CHECK(d["d_min"] == 6);
  CHECK(d["meets_theorem1"] == true);

  const auto e = nlohmann::json::parse(run({"eigen", "--r", "3", "--asymptotic"}).out);
  CHECK(e["n"] == "asymptotic");
  CHECK(e["lambda_float"].get<std::string>().rfind("2.334414", 0) == 0);
  const auto f = nlohmann::json::parse(run({"eigen", "--r", "3", "--n", "15"}).out);
  CHECK(f["lambda_float"].get<std::string>().rfind("8.608477", 0) == 0);
}

TEST_CASE("bounds at (15, 6)") {
  const auto r = run({"bounds", "--n", "15", "--d", "6"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# hdcodes bound table v1\n", 0) == 0);
  const auto v = exact_by_label(r.out);
  CHECK(v.at("gv") == "7");
  CHECK(v.at("hamming") == "270");
  CHECK(v.at("singleton") == "1024");
  CHECK(v.at("plotkin") == "192");
  CHECK(v.at("mceliece") == "75");
  CHECK(v.at("new_r3") == "1540");
  const auto j = nlohmann::json::parse(run({"bounds", "--n", "15", "--d", "6", "--json"}).out);
  CHECK(j.size() == v.size());
}

TEST_CASE("table output is stable and matches the committed golden file") {
  const auto one = run({"table", "--workers", "1"});
  const auto again = run({"table", "--workers", "1"});
  const auto four = run({"table", "--workers", "4"});
  REQUIRE(one.code == 0);
  CHECK(one.out == again.out);
  CHECK(one.out == four.out);
  CHECK(one.out == read_file(std::filesystem::path(HDC_GOLDEN_DIR) / "table.csv"));
}

TEST_CASE("exit codes and error prefixes") {
  const auto invalid = run({"construct", "--m", "6", "--c", "3"});
  CHECK(invalid.code == hdc::cli::kInvalidParameters);
  CHECK(invalid.err.rfind("error[InvalidParameters]:", 0) == 0);
  CHECK(run({"construct", "--m", "6", "--c", "2", "--bogus"}).code == hdc::cli::kInvalidParameters);
  CHECK(run({"frobnicate"}).code == hdc::cli::kInvalidParameters);
  CHECK(run({"construct", "--m", "6", "--c", "2", "--csv"}).code == hdc::cli::kInvalidParameters);

  const auto na = run({"replay", "--code", "0000000000,1100000000", "--r", "1"});
  CHECK(na.code == hdc::cli::kNotApplicable);
  CHECK(na.err.rfind("error[NotApplicable]:", 0) == 0);

  const auto budget = run({"distance", "--m", "8", "--c", "3", "--max-dimension", "20"});
  CHECK(budget.code == hdc::cli::kBudgetExceeded);
  CHECK(budget.err.rfind("error[BudgetExceeded]:", 0) == 0);
}

TEST_CASE("replay subcommand") {
  const auto j = nlohmann::json::parse(run({"replay", "--m", "4", "--c", "1", "--r", "3"}).out);
  CHECK(j["pass"] == true);
  CHECK(j["d"] == 6);
  const auto k = nlohmann::json::parse(run({"replay", "--code", "000,111", "--r", "1"}).out);
  CHECK(k["pass"] == true);
}

TEST_CASE("output directory override") {
  const auto dir = std::filesystem::temp_directory_path() / "hdcodes_cli_test";
  std::filesystem::remove_all(dir);
  ::setenv("HDC_OUTPUT_DIR", dir.c_str(), 1);
  const auto r = run({"bounds", "--n", "15", "--d", "6", "--out", "b.csv"});
  ::unsetenv("HDC_OUTPUT_DIR");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read_file(dir / "b.csv") == run({"bounds", "--n", "15", "--d", "6"}).out);
  std::filesystem::remove_all(dir);
}
