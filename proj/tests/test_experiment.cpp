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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rsurv/experiment.hpp"
#include "rsurv/synth.hpp"

namespace rsurv {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class ExperimentTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rsurv_exp_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    std::ofstream out(dir_ / "train_FD001.txt");
    write_cmapss(out, simulate_cmapss(CmapssSimOptions{}));
  }
  void TearDown() override { fs::remove_all(dir_); }

  ExperimentConfig config() const {
    ExperimentConfig c;
    c.data_path = dir_.string();
    c.output_dir = (dir_ / "out").string();
    for (auto& m : c.zoo) {
      if (m.family == ModelFamily::kRandomSurvivalForest) m.hyperparameters["n_trees"] = 40;
    }
    return c;
  }

  fs::path dir_;
};

TEST_F(ExperimentTest, ConfigJsonRoundTrip) {
  auto c = config();
  c.censor_times = {180, 240};
  c.epsilon = 0.02;
  c.covariates.strategy = CovariateStrategy::kFirstCycle;
  c.seed = 123456789012345ULL;
  const auto doc = config_to_json(c);
  const auto back = config_from_json(nlohmann::json::parse(doc.dump()));
  EXPECT_EQ(config_to_json(back), doc);
  EXPECT_EQ(back.seed, c.seed);
  EXPECT_EQ(back.zoo, c.zoo);
}

TEST_F(ExperimentTest, MissingKeysTakeDefaults) {
  const auto c = config_from_json(nlohmann::json{{"data_path", "x"}});
  EXPECT_EQ(c.censor_times, (std::vector<double>{200, 225, 250}));
  EXPECT_EQ(c.epsilon, 0.05);
  EXPECT_EQ(c.train_fraction, 0.8);
  EXPECT_EQ(c.zoo.size(), 8u);
}

TEST_F(ExperimentTest, InvalidConfigsRejected) {
  const auto base = config_to_json(config());
  auto bad = [&](const char* key, nlohmann::json value) {
    auto doc = base;
    doc[key] = value;
    EXPECT_THROW(config_from_json(doc), ConfigError) << key;
  };
  bad("censor_times", nlohmann::json::array());
  bad("censor_times", {200, -1});
  bad("epsilon", -0.01);
  bad("train_fraction", 1.0);
  bad("train_fraction", 0.0);
  bad("loss", "auc");
  bad("subset", "FD005");
  bad("grid_step", 0.0);
  bad("epsilon", "big");
  auto dup = base;
  dup["zoo"].push_back(dup["zoo"][0]);
  EXPECT_THROW(config_from_json(dup), ConfigError);
  auto fam = base;
  fam["zoo"][0]["family"] = "svm";
  EXPECT_THROW(config_from_json(fam), ConfigError);
}

TEST_F(ExperimentTest, EndToEndReport) {
  const auto c = config();
  const auto report = run_experiment(c);
  EXPECT_FALSE(report.partial);
  const auto& doc = report.doc;
  ASSERT_EQ(doc.at("blocks").size(), 3u);
  EXPECT_EQ(config_to_json(config_from_json(doc.at("config"))), config_to_json(c));
  for (const auto& b : doc.at("blocks")) {
    ASSERT_EQ(b.at("status"), "ok");
    const auto& r = b.at("rashomon");
    const std::size_t size = r.at("size");
    EXPECT_GE(size, 1u);
    EXPECT_LE(size, 8u);
    // Independent scan of the evaluation records.
    double best = 1.0;
    for (const auto& e : b.at("evaluation")) best = std::min(best, 1.0 - e.at("c_index").get<double>());
    std::size_t members = 0;
    for (const auto& e : b.at("evaluation")) members += 1.0 - e.at("c_index").get<double>() <= best + 0.05 + 1e-12;
    EXPECT_EQ(members, size);
    EXPECT_NEAR(r.at("best_loss").get<double>(), best, 1e-15);
    for (const auto& [k, file] : b.at("artifacts").items()) {
      EXPECT_TRUE(fs::exists(fs::path(c.output_dir) / file.get<std::string>())) << file;
    }
    EXPECT_EQ(b.at("evaluation").size(), 8u);
  }
  EXPECT_TRUE(fs::exists(report.path));
  EXPECT_EQ(nlohmann::json::parse(slurp(report.path)), doc);
  EXPECT_EQ(doc.at("published_reference").at("rashomon_set_size"), 5);
  EXPECT_EQ(doc.at("published_reference").at("member_c_index_mean"), 0.8259);
  EXPECT_EQ(doc.at("published_reference").at("member_c_index_sd"), 0.0204);
}

TEST_F(ExperimentTest, DeterministicArtifacts) {
  const auto c = config();
  const auto first = run_experiment(c);
  std::map<std::string, std::string> bytes;
  for (const auto& e : fs::directory_iterator(c.output_dir)) bytes[e.path().filename()] = slurp(e.path());
  run_experiment(c);
  std::size_t seen = 0;
  for (const auto& e : fs::directory_iterator(c.output_dir)) {
    EXPECT_EQ(slurp(e.path()), bytes.at(e.path().filename())) << e.path();
    ++seen;
  }
  EXPECT_EQ(seen, bytes.size());
  EXPECT_EQ(seen, 13u);
}

TEST_F(ExperimentTest, CachedModelsAreReusedOnlyForTheSameSplit) {
  auto c = config();
  c.censor_times = {225.0};
  const auto first = run_experiment(c);
  const fs::path cache = fs::path(c.output_dir) / "FD001_t225_models.json";
  auto doc = nlohmann::json::parse(slurp(cache));
  EXPECT_EQ(doc.at("format"), "rashomon-surv-model-set");
  EXPECT_EQ(doc.at("models").size(), 8u);
  auto c_index_of = [](const nlohmann::json& report, const std::string& id) {
    for (const auto& e : report.at("blocks")[0].at("evaluation")) {
      if (e.at("model_id") == id) return e.at("c_index").get<double>();
    }
    return -1.0;
  };
  const double original = c_index_of(first.doc, "boosted_cox");
  ASSERT_NE(original, 0.5);

  // A zeroed cached model ranks everyone equally; the rerun must pick it up.
  for (auto& m : doc["models"]) {
    if (m.at("spec").at("model_id") == "boosted_cox") {
      for (auto& b : m["state"]["beta"]) b = 0.0;
    }
  }
  std::ofstream(cache) << doc.dump();
  EXPECT_EQ(c_index_of(run_experiment(c).doc, "boosted_cox"), 0.5);

  // The same tampered file under another fingerprint is ignored.
  doc["train_fingerprint"] = "0000000000000000";
  std::ofstream(cache) << doc.dump();
  EXPECT_EQ(c_index_of(run_experiment(c).doc, "boosted_cox"), original);
}

TEST_F(ExperimentTest, FailingBlockMarksReportPartial) {
  auto c = config();
  c.censor_times = {1.0, 200.0};
  const auto report = run_experiment(c);
  EXPECT_TRUE(report.partial);
  EXPECT_EQ(report.doc.at("blocks")[0].at("status"), "failed");
  EXPECT_FALSE(report.doc.at("blocks")[0].at("error").get<std::string>().empty());
  EXPECT_EQ(report.doc.at("blocks")[1].at("status"), "ok");
  EXPECT_TRUE(report.doc.at("partial").get<bool>());
}

TEST_F(ExperimentTest, MissingDataIsConfigError) {
  auto c = config();
  c.data_path = (dir_ / "nope.txt").string();
  EXPECT_THROW(run_experiment(c), ConfigError);
}

TEST_F(ExperimentTest, CompareCensoringTimes) {
  std::vector<nlohmann::json> reports;
  for (double t : {250.0, 200.0, 225.0}) {
    auto c = config();
    c.censor_times = {t};
    c.output_dir = (dir_ / ("out" + std::to_string(int(t)))).string();
    reports.push_back(run_experiment(c).doc);
  }
  const auto rows = compare_censoring(reports);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].censor_time, 200.0);
  EXPECT_EQ(rows[2].censor_time, 250.0);
  for (const auto& r : rows) {
    EXPECT_EQ(r.subset, "FD001");
    EXPECT_GE(r.max_width, r.mean_width);
    EXPECT_FALSE(r.width_at.empty());
  }
  const auto single = compare_censoring({reports[0]});
  ASSERT_EQ(single.size(), 1u);
  const auto twice = compare_censoring({reports[1], reports[1]});
  ASSERT_EQ(twice.size(), 2u);
  EXPECT_EQ(twice[0].mean_width, twice[1].mean_width);
  EXPECT_EQ(twice[0].width_at, twice[1].width_at);

  std::ostringstream csv;
  write_comparison_csv(csv, rows);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')),
            "subset,censor_time,set_size,mean_width,max_width,width@50,width@100,width@150,"
            "width@200,width@225,width@250");

  auto other = reports[0];
  other["config"]["epsilon"] = 0.1;
  EXPECT_THROW(compare_censoring({reports[1], other}), ConfigError);
  EXPECT_THROW(compare_censoring({}), ConfigError);
}

TEST(EnvelopeCsv, RoundTrip) {
  const VectorXd grid{{1, 2, 3}};
  const auto env = envelope_from_curves(
      {{"a", SurvivalCurve(grid, VectorXd{{0.9, 0.7, 0.1}})},
       {"b", SurvivalCurve(grid, VectorXd{{0.95, 0.6, 0.3}})}},
      "a", grid);
  std::stringstream io;
  write_envelope_csv(io, env);
  EXPECT_EQ(io.str(), "time,lower,reference,upper\n1,0.9,0.9,0.95\n2,0.6,0.7,0.7\n3,0.1,0.1,0.3\n");
  const auto back = read_envelope_csv(io);
  EXPECT_EQ(back.grid, env.grid);
  EXPECT_EQ(back.lower, env.lower);
  EXPECT_EQ(back.upper, env.upper);
  EXPECT_EQ(back.reference, env.reference);
}

TEST(EnvelopeCsv, RejectsMalformedInput) {
  std::istringstream header("t,l,r,u\n1,0.5,0.5,0.5\n");
  EXPECT_THROW(read_envelope_csv(header), ParseError);
  std::istringstream order("time,lower,reference,upper\n1,0.6,0.5,0.7\n");
  EXPECT_THROW(read_envelope_csv(order), ParseError);
  std::istringstream empty("time,lower,reference,upper\n");
  EXPECT_THROW(read_envelope_csv(empty), ParseError);
}

TEST(CurveFormats, CsvAndJsonRoundTrip) {
  const SurvivalCurve c(VectorXd{{0.5, 2, 7.25}}, VectorXd{{0.999, 0.1 + 0.2, 0.0}});
  std::stringstream io;
  write_curve_csv(io, c);
  EXPECT_EQ(read_curve_csv(io), c);
  EXPECT_EQ(curve_from_json(nlohmann::json::parse(curve_to_json(c).dump())), c);
  std::istringstream bad("time,prob\n1,0.5\n2,0.7\n");
  EXPECT_THROW(read_curve_csv(bad), ParseError);
}

}  // namespace
}  // namespace rsurv
