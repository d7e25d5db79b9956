/*
 * Copyright 2026 The rashomon-surv Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Drives the rashomon-surv executable and checks exit codes and outputs.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
  const std::string cmd = std::string(RSURV_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rsurv_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write_config(const std::string& name, const nlohmann::json& doc) const {
    std::ofstream(dir_ / name) << doc.dump(2);
  }

  nlohmann::json small_config(const std::vector<double>& censor_times) const {
    return {{"data_path", dir_.string()},
            {"subset", "FD001"},
            {"censor_times", censor_times},
            {"output_dir", path("out")},
            {"zoo",
             {{{"model_id", "km"}, {"family", "kaplan_meier"}},
              {{"model_id", "cox"}, {"family", "cox_ridge"}, {"hyperparameters", {{"l2", 0.1}}}},
              {{"model_id", "tree"}, {"family", "survival_tree"}}}}};
  }

  fs::path dir_;
};

TEST_F(CliTest, SimulateIngestRunPlotCompare) {
  ASSERT_EQ(run("simulate --subset FD001 --units 60 --out " + path("train_FD001.txt")), 0);
  ASSERT_EQ(run("ingest --data " + dir_.string() + " --subset FD001 --censor-time 200 --out " +
                path("ds.csv")),
            0);
  EXPECT_EQ(slurp(path("ds.csv")).rfind("unit_id,time,event,", 0), 0u);

  write_config("a.json", small_config({200}));
  ASSERT_EQ(run("run --config " + path("a.json")), 0);
  const fs::path report = dir_ / "out" / "FD001_report.json";
  ASSERT_TRUE(fs::exists(report));

  ASSERT_EQ(run("run --config " + path("a.json") + " --output-dir " + path("out2") + " --seed 7"), 0);
  const auto doc = nlohmann::json::parse(slurp(dir_ / "out2" / "FD001_report.json"));
  EXPECT_EQ(doc.at("config").at("seed"), 7);
  EXPECT_EQ(doc.at("config").at("output_dir"), path("out2"));

  ASSERT_EQ(run("plot --envelope " + (dir_ / "out" / "FD001_t200_envelope.csv").string() + " --out " +
                path("re.svg")),
            0);
  EXPECT_NE(slurp(path("re.svg")).find("class=\"reference\""), std::string::npos);

  write_config("b.json", small_config({250}));
  auto b = small_config({250});
  b["output_dir"] = path("outb");
  write_config("b.json", b);
  ASSERT_EQ(run("run --config " + path("b.json")), 0);
  ASSERT_EQ(run("compare --reports " + report.string() + " " + path("outb/FD001_report.json") +
                " --out " + path("cmp.csv")),
            0);
  const std::string cmp = slurp(path("cmp.csv"));
  EXPECT_EQ(std::count(cmp.begin(), cmp.end(), '\n'), 3);
}

TEST_F(CliTest, PartialFailureExitsOne) {
  ASSERT_EQ(run("simulate --units 40 --out " + path("train_FD001.txt")), 0);
  write_config("p.json", small_config({1, 200}));
  EXPECT_EQ(run("run --config " + path("p.json")), 1);
}

TEST_F(CliTest, ConfigurationErrorsExitTwo) {
  EXPECT_EQ(run("run --config " + path("missing.json")), 2);
  std::ofstream(dir_ / "broken.json") << "{ not json";
  EXPECT_EQ(run("run --config " + path("broken.json")), 2);
  auto bad = small_config({200});
  bad["epsilon"] = -1;
  write_config("bad.json", bad);
  EXPECT_EQ(run("run --config " + path("bad.json")), 2);
  write_config("nodata.json", small_config({200}));
  EXPECT_EQ(run("run --config " + path("nodata.json")), 2);
  EXPECT_EQ(run("run"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("ingest --data " + dir_.string() + " --subset FD009"), 2);
}

TEST_F(CliTest, MalformedDataExitsOne) {
  std::ofstream(dir_ / "train_FD001.txt") << "1 1 0.1\n";
  write_config("c.json", small_config({200}));
  EXPECT_EQ(run("run --config " + path("c.json")), 1);
}

TEST_F(CliTest, ThreadCapDoesNotChangeOutput) {
  ASSERT_EQ(run("simulate --units 50 --out " + path("train_FD001.txt")), 0);
  auto c = small_config({200});
  c["zoo"].push_back({{"model_id", "rsf"},
                      {"family", "random_survival_forest"},
                      {"hyperparameters", {{"n_trees", 20}}}});
  write_config("t.json", c);
  ASSERT_EQ(run("run --config " + path("t.json")), 0);
  const std::string one = slurp(dir_ / "out" / "FD001_report.json");
  const std::string cmd = "RASHOMON_SURV_THREADS=1 ";
  const int status = std::system((cmd + RSURV_CLI_PATH + " run --config " + path("t.json") +
                                  " >/dev/null 2>&1").c_str());
  ASSERT_EQ(WEXITSTATUS(status), 0);
  EXPECT_EQ(slurp(dir_ / "out" / "FD001_report.json"), one);
}

}  // namespace
