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

// CMAPSS run-to-failure files -> right-censored per-unit datasets.
//
// Each input line holds 26 whitespace separated numbers: unit number, cycle,
// three operational settings and 21 sensor channels. A unit's last cycle is
// its failure cycle. Administrative censoring at `censor_time` turns every
// unit still running at that cycle into a censored observation.

#ifndef RSURV_INGEST_HPP_
#define RSURV_INGEST_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rsurv/core.hpp"

namespace rsurv {

inline constexpr int kCmapssColumns = 26;
inline constexpr int kCmapssFeatures = 24;

// op_set_1..op_set_3, sensor_1..sensor_21.
const std::array<std::string, kCmapssFeatures>& cmapss_feature_names();

struct CmapssRecord {
  int unit_number = 0;
  int time_in_cycles = 0;
  std::array<double, kCmapssFeatures> values{};
};

// Throws ParseError (with the 1-based line number) on a wrong column count, a
// non-numeric token or non-consecutive cycles within a unit. Blank lines are
// skipped.
std::vector<CmapssRecord> parse_cmapss(std::istream& in);
std::vector<CmapssRecord> parse_cmapss_file(const std::filesystem::path& path);

// Per-cycle feature table; one row per input record.
struct CmapssTable {
  std::vector<int> unit_number;
  std::vector<int> cycle;
  MatrixXd features;
  std::vector<std::string> feature_names;

  static CmapssTable from_records(const std::vector<CmapssRecord>& records);
  Index rows() const { return features.rows(); }
};

struct ColumnDropResult {
  CmapssTable table;
  std::vector<std::string> dropped;
};

// Removes feature columns holding a single distinct value across all rows.
// Throws DegenerateData when no feature column survives.
ColumnDropResult drop_constant_columns(const CmapssTable& table);

struct CensoringSpec {
  double censor_time = 200.0;
};

enum class CovariateStrategy { kFirstCycle, kWindowMean };

struct CovariateSpec {
  CovariateStrategy strategy = CovariateStrategy::kWindowMean;
  int window_length = 30;
};

std::string_view to_string(CovariateStrategy s);
CovariateStrategy parse_covariate_strategy(std::string_view name);

// One row per unit in order of first appearance. Covariates only read cycles
// <= min(failure cycle, censor_time).
TimeToEventDataset build_survival_dataset(const CmapssTable& table, const CensoringSpec& censoring,
                                          const CovariateSpec& covariates);
TimeToEventDataset build_survival_dataset(const std::vector<CmapssRecord>& records,
                                          const CensoringSpec& censoring,
                                          const CovariateSpec& covariates);

struct TrainTestSplit {
  TimeToEventDataset train;
  TimeToEventDataset test;
};

// Unit-level random partition with round(n * train_fraction) training units.
// Both sides keep the original row order.
TrainTestSplit split_train_test(const TimeToEventDataset& data, double train_fraction,
                                std::uint64_t seed);

// Per-feature z-scoring with statistics taken from one dataset (the training
// split) and applied to others. Zero-variance features get unit scale.
class Standardizer {
 public:
  static Standardizer fit(const MatrixXd& x);
  MatrixXd apply(const MatrixXd& x) const;
  TimeToEventDataset apply(const TimeToEventDataset& data) const;
  const VectorXd& mean() const { return mean_; }
  const VectorXd& scale() const { return scale_; }

 private:
  VectorXd mean_;
  VectorXd scale_;
};

// Canonical dataset CSV: unit_id,time,event,<feature names>.
void write_dataset_csv(std::ostream& out, const TimeToEventDataset& data);
TimeToEventDataset read_dataset_csv(std::istream& in);

}  // namespace rsurv

#endif  // RSURV_INGEST_HPP_
