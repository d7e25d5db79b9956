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

// Configuration-driven pipeline: parse -> drop constant columns -> censor ->
// split -> standardize -> fit zoo -> evaluate -> Rashomon set -> population
// envelope -> CSV / SVG / JSON report, once per configured censoring time.

#ifndef RSURV_EXPERIMENT_HPP_
#define RSURV_EXPERIMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "rsurv/eval.hpp"
#include "rsurv/ingest.hpp"
#include "rsurv/rashomon.hpp"

namespace rsurv {

inline constexpr const char* kToolName = "rashomon-surv";
inline constexpr const char* kToolVersion = "1.0.0";

struct ExperimentConfig {
  std::string data_path;
  std::string subset = "FD001";
  std::vector<double> censor_times{200.0, 225.0, 250.0};
  double epsilon = 0.05;
  std::string loss = "c_index";
  double train_fraction = 0.8;
  std::uint64_t seed = 42;
  CovariateSpec covariates;
  std::vector<ModelSpec> zoo = default_zoo();
  double grid_step = 1.0;
  // Envelope widths are also reported at these times when <= censor_time.
  std::vector<double> probe_times{50.0, 100.0, 150.0, 200.0, 225.0, 250.0};
  std::string output_dir = "rashomon_out";
};

// Missing keys take the defaults above. Throws ConfigError on bad values.
ExperimentConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig load_config(const std::filesystem::path& path);
void validate_config(const ExperimentConfig& config);

// A directory resolves to the canonical `train_<subset>.txt` inside it; a
// file path is returned unchanged.
std::filesystem::path resolve_data_path(const std::filesystem::path& path,
                                        const std::string& subset);

// The report is a JSON document; see README for the schema. It carries no
// timestamps, so identical configs give byte-identical files.
struct ExperimentReport {
  nlohmann::json doc;
  bool partial = false;
  std::filesystem::path path;  // where the report was written
};

// Writes `<subset>_report.json`, and per censoring time
// `<subset>_t<c>_{envelope.csv,evaluation.csv,envelope.svg}`, into
// config.output_dir. A failing censoring block is recorded and the remaining
// blocks still run; the report is then marked partial. Throws ConfigError for
// an invalid config and Error when the data cannot be read.
ExperimentReport run_experiment(const ExperimentConfig& config);

// Survival curve exchange formats: CSV with header time,prob and JSON
// {"times": [...], "probs": [...]}. Readers validate the curve invariants.
void write_curve_csv(std::ostream& out, const SurvivalCurve& curve);
SurvivalCurve read_curve_csv(std::istream& in);
nlohmann::json curve_to_json(const SurvivalCurve& curve);
SurvivalCurve curve_from_json(const nlohmann::json& doc);

// time,lower,reference,upper
void write_envelope_csv(std::ostream& out, const RashomonEnvelope& env);
RashomonEnvelope read_envelope_csv(std::istream& in);

// model_id,c_index,n_comparable_pairs,integrated_brier,brier@<t>...
void write_evaluation_csv(std::ostream& out, const std::vector<EvaluationRecord>& records);

struct CensoringComparisonRow {
  std::string subset;
  double censor_time = 0.0;
  std::size_t set_size = 0;
  double mean_width = 0.0;
  double max_width = 0.0;
  std::map<double, double> width_at;
};

// One row per successful censoring block across `reports`, sorted by censor
// time. Reports must agree on every config field except censor_times and
// output_dir; otherwise ConfigError.
std::vector<CensoringComparisonRow> compare_censoring(const std::vector<nlohmann::json>& reports);
void write_comparison_csv(std::ostream& out, const std::vector<CensoringComparisonRow>& rows);

}  // namespace rsurv

#endif  // RSURV_EXPERIMENT_HPP_
