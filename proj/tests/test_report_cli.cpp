#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lcom/cli.hpp"
#include "lcom/crm.hpp"
#include "lcom/report.hpp"

namespace lcom {
namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = LCOM_FIXTURES_DIR;
const std::string kCases = (kFixtures / "cases" / "source").string();

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const CliHooks& hooks = {}) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream cells_in(line);
    for (std::string cell; std::getline(cells_in, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

TEST(FormatNumber, FourDecimalsWithoutNegativeZero) {
  EXPECT_EQ(format_number(2.0 / 3.0), "0.6667");
  EXPECT_EQ(format_number(-1.0), "-1.0000");
  EXPECT_EQ(format_number(-0.00001), "0.0000");
  EXPECT_EQ(format_number(5.0), "5.0000");
}

TEST(Analyze, FixturesCsv) {
  const auto r = run({"analyze", kCases});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 10U);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"repo", "qualified_name", "kind", "n_methods", "n_attributes",
                                               "lcom1", "lcom2", "lcom3", "lcom4", "lcom5", "yalcom"}));
  EXPECT_EQ(rows[1], (std::vector<std::string>{"source", "Case1", "class", "3", "3", "1", "0", "1", "1", "0.6667",
                                               "0.0000"}));
  EXPECT_EQ(rows[8], (std::vector<std::string>{"source", "Case7", "interface", "3", "0", "3", "0", "3", "3",
                                               "0.0000", "-1.0000"}));
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
  EXPECT_NE(r.err.find("diagnostics: 0 info, 0 warn"), std::string::npos);
}

TEST(Analyze, CsvAndJsonCarryTheSameNumbers) {
  const auto csv = run({"analyze", kCases, (kFixtures / "figures").string(), "--format", "csv"});
  const auto json = run({"analyze", kCases, (kFixtures / "figures").string(), "--format", "json"});
  ASSERT_EQ(csv.code, 0);
  ASSERT_EQ(json.code, 0);
  const auto rows = csv_rows(csv.out);
  const auto doc = nlohmann::json::parse(json.out);
  const auto& records = doc["records"];
  ASSERT_EQ(records.size() + 1, rows.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& row = rows[i + 1];
    const auto& rec = records[i];
    EXPECT_EQ(rec["repo"], row[0]);
    EXPECT_EQ(rec["qualified_name"], row[1]);
    EXPECT_EQ(rec["kind"], row[2]);
    for (std::size_t c = 3; c < row.size(); ++c) {
      const auto& key = rows[0][c];
      EXPECT_EQ(format_number(rec[key].get<double>()), format_number(std::stod(row[c]))) << key;
    }
  }
  EXPECT_EQ(doc["options"]["input_format"], "source");
}

TEST(Analyze, EmptyDirectoryGivesHeaderOnly) {
  const auto dir = fs::temp_directory_path() / "lcom_cli_empty";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto r = run({"analyze", dir.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(csv_rows(r.out).size(), 1U);
}

TEST(Analyze, ExitCodes) {
  EXPECT_EQ(run({"analyze", "/definitely/not/here"}).code, 2);
  EXPECT_EQ(run({"analyze"}).code, 1);
  EXPECT_EQ(run({"analyze", kCases, "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"analyze", kCases, "--input-format", "bytecode"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Analyze, OutFileAndFlags) {
  const auto out = fs::temp_directory_path() / "lcom_cli_out.csv";
  fs::remove(out);
  const auto r = run({"analyze", kCases, "--out", out.string(), "--strict-algorithm1", "--workers", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("source,Case8,class,3,0,3,0,3,2,0.0000,0.6667"), std::string::npos) << text.str();
}

TEST(Analyze, CrmInput) {
  const auto r = run({"analyze", (kFixtures / "cases" / "crm").string(), "--input-format", "crm"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(csv_rows(r.out).size(), 10U);
}

TEST(Compare, FixturesAgainstYalcom) {
  const auto r = run({"compare", kCases, "--baseline", "yalcom"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("*,yalcom,lcom5,6,3,1.3540,"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("*,yalcom,yalcom,6,3,0.0000,0.0000"), std::string::npos);
  EXPECT_NE(r.err.find("excluded as not computable: 3"), std::string::npos);

  const auto json = nlohmann::json::parse(run({"compare", kCases, "--format", "json"}).out);
  EXPECT_EQ(json["excluded_not_computable"], 3);
  EXPECT_EQ(json["false_zero_audit"].size(), 3U);
}

TEST(Compare, SelfComparisonAndErrors) {
  const auto r = run({"compare", kCases, "--baseline", "lcom3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("*,lcom3,lcom3,6,3,0.0000,0.0000"), std::string::npos);
  EXPECT_EQ(run({"compare", kCases, "--baseline", "lcom9"}).code, 1);
  EXPECT_EQ(run({"compare", "/definitely/not/here"}).code, 2);
}

TEST(Compare, AllNotComputableWarns) {
  const auto dir = fs::temp_directory_path() / "lcom_cli_ifaces";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "I.java") << "interface I { void a(); void b(); }";
  const auto r = run({"compare", dir.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("comparison is empty"), std::string::npos);
}

TEST(Cases, PristineBuildMatchesAllCells) {
  const auto r = run({"cases"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("96/96 cells match"), std::string::npos);
  EXPECT_NE(r.out.find("Partially cohesive"), std::string::npos);
  EXPECT_NE(r.out.find("Could not be determined"), std::string::npos);
  EXPECT_EQ(count(r.out, "Cohesive"), 8U);
  EXPECT_NE(run({"cases", "--route", "crm"}).out.find("48/48 cells match"), std::string::npos);
}

TEST(Cases, StaticsCountedInLcom1IsDetected) {
  // A deliberately wrong LCOM1 that treats static attributes as instance state.
  CliHooks hooks;
  hooks.case_metric = [](const TypeModel& type, const TypeRegistry& registry) {
    auto v = compute_all(type, registry);
    auto widened = type;
    for (auto& a : widened.attributes) a.is_static = false;
    v.lcom1 = lcom1(widened);
    return v;
  };
  const auto r = run({"cases"}, hooks);
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("crm Case2 lcom1"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("source Case2 lcom1"), std::string::npos);
  EXPECT_EQ(count(r.err, "mismatch:"), 2U);
}

TEST(Graph, ReferenceCases) {
  const auto case6 = run({"graph", "Case6"});
  ASSERT_EQ(case6.code, 0);
  EXPECT_EQ(count(case6.out, "shape=box"), 6U);
  EXPECT_EQ(count(case6.out, " -> "), 5U);
  EXPECT_EQ(count(case6.out, "style=dashed"), 1U);

  const auto case7 = run({"graph", "Case7", kCases});
  ASSERT_EQ(case7.code, 0);
  EXPECT_EQ(count(case7.out, "shape=box"), 3U);
  EXPECT_EQ(count(case7.out, "style=rounded"), 0U);
  EXPECT_EQ(count(case7.out, " -> "), 0U);

  EXPECT_EQ(run({"graph", "NoSuchType"}).code, 1);
}

TEST(Graph, EmptyClass) {
  const auto dir = fs::temp_directory_path() / "lcom_cli_emptyclass";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "E.java") << "class E { }";
  const auto r = run({"graph", "E", dir.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "digraph \"E\" {\n  graph [rankdir=LR];\n  edge [arrowhead=none];\n}\n");
}

TEST(Schema, PrintsSchema) {
  const auto r = run({"schema"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, crm_schema());
}

TEST(Determinism, RepeatedRunsAreByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", kFixtures.string(), "--format", "csv", "--workers", "4"},
           {"analyze", kFixtures.string(), "--format", "json", "--workers", "4"},
           {"compare", kFixtures.string(), "--format", "json"},
           {"graph", "ColumnTypeResolver", (kFixtures / "figures").string()}}) {
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
  }
}

}  // namespace
}  // namespace lcom
