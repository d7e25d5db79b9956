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

// rashomon-surv command line: run, ingest, plot, compare, simulate.
// Exit codes: 0 success, 1 failure or partial report, 2 configuration error.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "rsurv/experiment.hpp"
#include "rsurv/plot.hpp"
#include "rsurv/synth.hpp"
#include "rsurv/text.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

// Writes to `path`, or stdout when the path is empty.
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rsurv::Error("cannot write " + path);
  fn(out);
  if (!out) throw rsurv::Error("failed writing " + path);
}

int cmd_run(const std::string& config_path, const std::string& output_dir,
            std::optional<std::uint64_t> seed) {
  rsurv::ExperimentConfig config = rsurv::load_config(config_path);
  if (!output_dir.empty()) config.output_dir = output_dir;
  if (seed) config.seed = *seed;
  rsurv::validate_config(config);

  const rsurv::ExperimentReport report = rsurv::run_experiment(config);
  for (const auto& b : report.doc.at("blocks")) {
    std::cout << "t=" << b.at("censor_time").get<double>() << ": ";
    if (b.at("status") == "ok") {
      const auto& r = b.at("rashomon");
      std::cout << "set size " << r.at("size").get<std::size_t>() << ", member C-index "
                << r.at("member_c_index_mean").get<double>() << " +/- "
                << r.at("member_c_index_sd").get<double>() << ", mean width "
                << b.at("envelope").at("mean_width").get<double>() << '\n';
    } else {
      std::cout << "FAILED: " << b.at("error").get<std::string>() << '\n';
    }
  }
  const auto& trend = report.doc.at("trend");
  if (trend.contains("flag") && !trend.at("flag").is_null()) {
    std::cout << "trend flag: " << trend.at("flag").get<std::string>() << '\n';
  }
  std::cout << "report: " << report.path.string() << '\n';
  return report.partial ? kExitFailure : kExitOk;
}

int cmd_ingest(const std::string& data, const std::string& subset, double censor_time,
               const std::string& strategy, int window, const std::string& out_path) {
  if (subset != "FD001" && subset != "FD002" && subset != "FD003" && subset != "FD004") {
    throw rsurv::ConfigError("subset must be one of FD001..FD004");
  }
  rsurv::CovariateSpec covariates;
  try {
    covariates.strategy = rsurv::parse_covariate_strategy(strategy);
  } catch (const rsurv::InvalidArgument& e) {
    throw rsurv::ConfigError(e.what());
  }
  if (window < 1) throw rsurv::ConfigError("--window must be >= 1");
  covariates.window_length = window;
  if (!(censor_time > 0.0)) throw rsurv::ConfigError("--censor-time must be > 0");

  const auto file = rsurv::resolve_data_path(data, subset);
  if (!std::filesystem::is_regular_file(file)) {
    throw rsurv::ConfigError("data file " + file.string() + " not found");
  }
  const auto records = rsurv::parse_cmapss_file(file);
  const auto dropped = rsurv::drop_constant_columns(rsurv::CmapssTable::from_records(records));
  const auto dataset =
      rsurv::build_survival_dataset(dropped.table, rsurv::CensoringSpec{censor_time}, covariates);
  with_output(out_path, [&](std::ostream& out) { rsurv::write_dataset_csv(out, dataset); });

  std::cerr << subset << ": " << records.size() << " records, " << dataset.size() << " units, "
            << dataset.n_events() << " events; dropped constant columns:";
  for (const auto& name : dropped.dropped) std::cerr << ' ' << name;
  std::cerr << '\n';
  return kExitOk;
}

int cmd_plot(const std::string& envelope_path, const std::string& out_path,
             const std::string& title) {
  std::ifstream in(envelope_path);
  if (!in) throw rsurv::ConfigError("cannot open envelope CSV " + envelope_path);
  const rsurv::RashomonEnvelope env = rsurv::read_envelope_csv(in);
  const rsurv::EnvelopeStats stats = rsurv::envelope_stats(env, rsurv::VectorXd());
  rsurv::emit_plot(env, stats, out_path, title);
  return kExitOk;
}

int cmd_compare(const std::vector<std::string>& paths, const std::string& out_path) {
  std::vector<nlohmann::json> reports;
  for (const auto& p : paths) {
    std::ifstream in(p);
    if (!in) throw rsurv::ConfigError("cannot open report " + p);
    try {
      reports.push_back(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw rsurv::ConfigError("report " + p + " is not valid JSON: " + e.what());
    }
  }
  const auto rows = rsurv::compare_censoring(reports);
  with_output(out_path, [&](std::ostream& out) { rsurv::write_comparison_csv(out, rows); });
  return kExitOk;
}

int cmd_simulate(const std::string& subset, int units, std::uint64_t seed,
                 const std::string& out_path) {
  rsurv::CmapssSimOptions options;
  try {
    options.profile = rsurv::parse_cmapss_profile(subset);
  } catch (const rsurv::InvalidArgument& e) {
    throw rsurv::ConfigError(e.what());
  }
  options.n_units = units;
  options.seed = seed;
  const auto records = rsurv::simulate_cmapss(options);
  with_output(out_path, [&](std::ostream& out) { rsurv::write_cmapss(out, records); });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rashomon survival sets and envelopes for CMAPSS turbofan data"};
  app.set_version_flag("--version", std::string(rsurv::kToolVersion));
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run the full experiment pipeline from a JSON config");
  std::string config_path, output_dir;
  std::optional<std::uint64_t> seed;
  run->add_option("--config", config_path, "Experiment config (JSON)")->required();
  run->add_option("--output-dir", output_dir, "Override config output_dir");
  run->add_option("--seed", seed, "Override config seed");

  auto* ingest = app.add_subcommand("ingest", "Parse a CMAPSS file into the canonical dataset CSV");
  std::string data, subset = "FD001", strategy = "window_mean", ingest_out;
  double censor_time = std::numeric_limits<double>::infinity();
  int window = 30;
  ingest->add_option("--data", data, "CMAPSS text file or directory holding train_<subset>.txt")
      ->required();
  ingest->add_option("--subset", subset, "FD001, FD002, FD003 or FD004")->required();
  ingest->add_option("--censor-time", censor_time, "Administrative censoring time (default none)");
  ingest->add_option("--covariates", strategy, "window_mean or first_cycle");
  ingest->add_option("--window", window, "Window length for window_mean");
  ingest->add_option("--out", ingest_out, "Output CSV (default stdout)");

  auto* plot = app.add_subcommand("plot", "Render an SVG from a saved envelope CSV");
  std::string envelope_path, svg_out, title;
  plot->add_option("--envelope", envelope_path, "Envelope CSV (time,lower,reference,upper)")
      ->required();
  plot->add_option("--out", svg_out, "Output SVG")->required();
  plot->add_option("--title", title, "Plot title");

  auto* compare = app.add_subcommand("compare", "Tabulate envelope widths across censoring times");
  std::vector<std::string> report_paths;
  std::string compare_out;
  compare->add_option("--reports", report_paths, "Report JSON files")->required();
  compare->add_option("--out", compare_out, "Output CSV (default stdout)");

  auto* simulate =
      app.add_subcommand("simulate", "Write a synthetic CMAPSS-format file for testing");
  std::string sim_subset = "FD001", sim_out;
  int sim_units = 0;
  std::uint64_t sim_seed = 2008;
  simulate->add_option("--subset", sim_subset, "Profile to imitate: FD001..FD004");
  simulate->add_option("--units", sim_units, "Number of units (default: profile size)");
  simulate->add_option("--seed", sim_seed, "Random seed");
  simulate->add_option("--out", sim_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) return cmd_run(config_path, output_dir, seed);
    if (*ingest) return cmd_ingest(data, subset, censor_time, strategy, window, ingest_out);
    if (*plot) return cmd_plot(envelope_path, svg_out, title);
    if (*compare) return cmd_compare(report_paths, compare_out);
    if (*simulate) return cmd_simulate(sim_subset, sim_units, sim_seed, sim_out);
  } catch (const rsurv::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitConfig;
}
