#include "greyrel/pipeline.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "greyrel/problem.hpp"
#include "greyrel/report_io.hpp"

namespace greyrel {
namespace {

using nlohmann::json;

const std::string kExample = GREYREL_DATA_DIR "/fighter_development.json";

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json two_plan_problem(const json& second_row) {
  json doc = json::parse(R"({
    "schema": 1,
    "plans": ["P", "Q"],
    "attributes": [
      {"id": "a", "kind": "real", "direction": "benefit"},
      {"id": "b", "kind": "uncertain-linguistic", "direction": "cost"}
    ],
    "matrix": [[{"real": 4}, {"uling": ["low", "high"]}]],
    "subjective_weights": {"intervals": [[0.4, 0.6], [0.4, 0.6]]},
    "preferences": [[0.2, 0.3, 0.3, 0.4], [0.2, 0.3, 0.3, 0.4]]
  })");
  doc["matrix"].push_back(second_row);
  return doc;
}

TEST(Pipeline, BundledExampleFinalOrder) {
  const Report r = run_pipeline(parse_problem(kExample));
  EXPECT_EQ(r.ranking.final_ranks, (std::vector<int>{3, 1, 4, 5, 2}));
  EXPECT_EQ(format_final_order(r), "G2 > G5 > G1 > G3 > G4");
  for (const auto& m : r.ranking.per_method) {
    EXPECT_EQ(m.ranks[1], 1) << to_string(m.method);
    EXPECT_EQ(m.ranks[4], 2) << to_string(m.method);
  }
}

TEST(Pipeline, SinglePlanIsTrivial) {
  json doc = two_plan_problem(json::array());
  doc["plans"] = {"P"};
  doc["matrix"].erase(1);
  doc["preferences"].erase(1);
  const Report r = run_pipeline(problem_from_json(doc));
  EXPECT_EQ(r.ranking.final_ranks, std::vector<int>{1});
  for (const auto& m : r.ranking.per_method) EXPECT_EQ(m.ranks, std::vector<int>{1});
  EXPECT_DOUBLE_EQ(r.evaluation.methods[0].scores[0], 0.5);
  EXPECT_DOUBLE_EQ(r.evaluation.g_plus[0], 1.0);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Pipeline, IdenticalPlansTieEverywhere) {
  const json doc = two_plan_problem(json::array({{{"real", 4}}, {{"uling", {"low", "high"}}}}));
  const Report r = run_pipeline(problem_from_json(doc));
  EXPECT_EQ(r.ranking.final_ranks, (std::vector<int>{1, 1}));
  for (const auto& m : r.ranking.per_method) EXPECT_EQ(m.ranks, (std::vector<int>{1, 1}));
  EXPECT_EQ(r.normalized(0, 0), r.normalized(1, 0));
  EXPECT_EQ(format_final_order(r), "P = Q");
}

TEST(Pipeline, ErrorsCarryStageName) {
  const json doc = two_plan_problem(json::array({{{"real", 0}}, {{"uling", {"low", "high"}}}}));
  json cost = doc;
  cost["attributes"][0]["direction"] = "cost";
  try {
    run_pipeline(problem_from_json(cost));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("[normalize] ", 0), 0u) << e.what();
  }
}

TEST(Pipeline, SettingsEchoEveryDefault) {
  const Report r = run_pipeline(problem_from_json(two_plan_problem(json::array({{{"real", 5}}, {{"uling", {"very low", "low"}}}}))));
  std::map<std::string, std::string> settings(r.settings.begin(), r.settings.end());
  for (const char* key : {"rho", "theta_plus", "theta_minus", "borda_weights", "tie_break", "linguistic_aliases"}) {
    ASSERT_TRUE(settings.contains(key)) << key;
    EXPECT_NE(settings[key].find("(default)"), std::string::npos) << key;
  }
  EXPECT_NE(settings["attributes"].find("b:uncertain-linguistic:cost"), std::string::npos);
}

TEST(Report, DeterministicBytes) {
  const DecisionProblem p = parse_problem(kExample);
  for (auto format : {ReportFormat::Text, ReportFormat::Csv, ReportFormat::Json}) {
    EXPECT_EQ(emit_report(run_pipeline(p), format), emit_report(run_pipeline(p), format));
  }
}

TEST(Report, JsonRoundTrip) {
  const Report r = run_pipeline(parse_problem(kExample));
  const json doc = report_to_json(r);
  const Report back = report_from_json(json::parse(doc.dump()));
  EXPECT_EQ(report_to_json(back), doc);
  const Report rerun = run_pipeline(problem_from_json(doc));
  EXPECT_EQ(rerun.ranking.final_ranks, r.ranking.final_ranks);
  EXPECT_EQ(emit_report(rerun, ReportFormat::Json), emit_report(r, ReportFormat::Json));
}

TEST(Report, CsvMethodSections) {
  const std::string csv = emit_report(run_pipeline(parse_problem(kExample)), ReportFormat::Csv);
  const auto at = csv.find("# topsis\nplan,score,rank\n");
  ASSERT_NE(at, std::string::npos);
  std::istringstream rest(csv.substr(at));
  std::string line;
  std::getline(rest, line);
  std::getline(rest, line);
  int rows = 0;
  while (std::getline(rest, line) && !line.empty() && line[0] != '#') ++rows;
  EXPECT_EQ(rows, 5);
  for (const char* section : {"# grey-approach", "# membership", "# max-entropy", "# final", "# settings"}) {
    EXPECT_NE(csv.find(section), std::string::npos) << section;
  }
}

TEST(Report, TextMatchesGolden) {
  const std::string text = emit_report(run_pipeline(parse_problem(kExample)), ReportFormat::Text);
  EXPECT_EQ(text, read_file(GREYREL_GOLDEN_DIR "/fighter_development.txt"));
  for (const char* line : {"topsis", "grey-approach", "membership", "max-entropy", "final"}) {
    EXPECT_NE(text.find(line), std::string::npos);
  }
}

TEST(Report, UnwritableDestination) {
  const Report r = run_pipeline(parse_problem(kExample));
  EXPECT_THROW(write_report(r, ReportFormat::Text, "/nonexistent-dir/report.txt"), Error);
}

#ifdef GREYREL_CLI_PATH

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + GREYREL_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("greyrel_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const auto path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli("solve \"" + kExample + "\""), 0);
  EXPECT_EQ(run_cli("solve /nonexistent/file.json"), 1);
  EXPECT_EQ(run_cli("solve \"" + kExample + "\" --rho 2"), 2);
  EXPECT_EQ(run_cli("solve \"" + kExample + "\" --format yaml"), 2);

  json bad = two_plan_problem(json::array({{{"interval", {485, 465}}}, {{"uling", {"low", "high"}}}}));
  bad["attributes"][0]["kind"] = "interval";
  bad["matrix"][0][0] = json{{"interval", {1, 2}}};
  EXPECT_EQ(run_cli("solve " + write("bad.json", bad.dump())), 2);

  json zero_alpha = two_plan_problem(json::array({{{"real", 5}}, {{"uling", {"low", "high"}}}}));
  zero_alpha["subjective_weights"]["intervals"] = {{0, 0}, {0, 0}};
  EXPECT_EQ(run_cli("solve " + write("zero.json", zero_alpha.dump())), 3);
}

TEST_F(CliTest, OutputFileAndRoundTrip) {
  const std::string a = (dir_ / "a.json").string();
  const std::string b = (dir_ / "b.json").string();
  ASSERT_EQ(run_cli("solve \"" + kExample + "\" --format json-report --out " + a), 0);
  ASSERT_EQ(run_cli("solve \"" + kExample + "\" --format json-report --out " + b), 0);
  EXPECT_EQ(read_file(a), read_file(b));
  const std::string c = (dir_ / "c.json").string();
  ASSERT_EQ(run_cli("solve " + a + " --format json-report --out " + c), 0);
  EXPECT_EQ(json::parse(read_file(c))["borda"]["order"], json::parse(read_file(a))["borda"]["order"]);
}

TEST_F(CliTest, OverridesAreMarkedExplicit) {
  const std::string out = (dir_ / "r.json").string();
  ASSERT_EQ(run_cli("solve \"" + kExample + "\" --format json --rho 0.3 --borda-weights 1,0,0,0 --out " + out), 0);
  const json doc = json::parse(read_file(out));
  EXPECT_EQ(doc["problem"]["params"]["rho"], 0.3);
  EXPECT_EQ(doc["borda"]["final_ranks"], doc["methods"][0]["ranks"]);
}

#endif

}  // namespace
}  // namespace greyrel
