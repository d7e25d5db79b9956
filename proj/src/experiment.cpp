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

#include "rsurv/experiment.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "rsurv/nonparametric.hpp"
#include "rsurv/parallel.hpp"
#include "rsurv/plot.hpp"
#include "rsurv/text.hpp"

namespace rsurv {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

void validate_config(const ExperimentConfig& c) {
  static const std::set<std::string> subsets{"FD001", "FD002", "FD003", "FD004"};
  if (!subsets.count(c.subset)) throw ConfigError("subset must be one of FD001..FD004");
  if (c.censor_times.empty()) throw ConfigError("censor_times must not be empty");
  for (double t : c.censor_times) {
    if (!(t > 0.0) || !std::isfinite(t)) throw ConfigError("censor_times must be finite and > 0");
  }
  if (!(c.epsilon >= 0.0) || !std::isfinite(c.epsilon)) throw ConfigError("epsilon must be >= 0");
  if (c.loss != "c_index" && c.loss != "integrated_brier") {
    throw ConfigError("loss must be c_index or integrated_brier");
  }
  if (!(c.train_fraction > 0.0 && c.train_fraction < 1.0)) {
    throw ConfigError("train_fraction must lie in (0, 1)");
  }
  if (!(c.grid_step > 0.0) || !std::isfinite(c.grid_step)) throw ConfigError("grid_step must be > 0");
  if (c.covariates.window_length < 1) throw ConfigError("covariate_spec.window_length must be >= 1");
  if (c.zoo.empty()) throw ConfigError("zoo must list at least one model");
  std::set<std::string> ids;
  for (const auto& m : c.zoo) {
    if (m.model_id.empty()) throw ConfigError("every zoo entry needs a model_id");
    if (!ids.insert(m.model_id).second) throw ConfigError("duplicate model_id " + m.model_id);
  }
  if (c.output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

ExperimentConfig config_from_json(const json& doc) {
  try {
    ExperimentConfig c;
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    c.data_path = doc.value("data_path", c.data_path);
    c.subset = doc.value("subset", c.subset);
    c.censor_times = doc.value("censor_times", c.censor_times);
    c.epsilon = doc.value("epsilon", c.epsilon);
    c.loss = doc.value("loss", c.loss);
    c.train_fraction = doc.value("train_fraction", c.train_fraction);
    c.seed = doc.value("seed", c.seed);
    if (doc.contains("covariate_spec")) {
      const json& cv = doc.at("covariate_spec");
      c.covariates.strategy =
          parse_covariate_strategy(cv.value("strategy", std::string("window_mean")));
      c.covariates.window_length = cv.value("window_length", c.covariates.window_length);
    }
    if (doc.contains("zoo")) {
      c.zoo.clear();
      for (const auto& m : doc.at("zoo")) c.zoo.push_back(spec_from_json(m));
    }
    c.grid_step = doc.value("grid_step", c.grid_step);
    c.probe_times = doc.value("probe_times", c.probe_times);
    c.output_dir = doc.value("output_dir", c.output_dir);
    validate_config(c);
    return c;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
}

json config_to_json(const ExperimentConfig& c) {
  json zoo = json::array();
  for (const auto& m : c.zoo) zoo.push_back(spec_to_json(m));
  return {{"data_path", c.data_path},
          {"subset", c.subset},
          {"censor_times", c.censor_times},
          {"epsilon", c.epsilon},
          {"loss", c.loss},
          {"train_fraction", c.train_fraction},
          {"seed", c.seed},
          {"covariate_spec",
           {{"strategy", std::string(to_string(c.covariates.strategy))},
            {"window_length", c.covariates.window_length}}},
          {"zoo", zoo},
          {"grid_step", c.grid_step},
          {"probe_times", c.probe_times},
          {"output_dir", c.output_dir}};
}

std::filesystem::path resolve_data_path(const std::filesystem::path& path,
                                        const std::string& subset) {
  if (std::filesystem::is_directory(path)) return path / ("train_" + subset + ".txt");
  return path;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return config_from_json(doc);
}

// ---------------------------------------------------------------------------
// CSV artifacts
// ---------------------------------------------------------------------------

void write_curve_csv(std::ostream& out, const SurvivalCurve& curve) {
  out << "time,prob\n";
  for (Index i = 0; i < curve.size(); ++i) {
    out << format_double(curve.times()[i]) << ',' << format_double(curve.probs()[i]) << '\n';
  }
}

SurvivalCurve read_curve_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "time,prob") {
    throw ParseError(1, "curve CSV header must be time,prob");
  }
  std::vector<double> t, s;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto l = trim(line);
    if (l.empty()) continue;
    const auto cells = split_char(l, ',');
    if (cells.size() != 2) throw ParseError(line_no, "expected 2 cells");
    const auto a = parse_double(cells[0]);
    const auto b = parse_double(cells[1]);
    if (!a || !b) throw ParseError(line_no, "non-numeric cell");
    t.push_back(*a);
    s.push_back(*b);
  }
  try {
    return SurvivalCurve(Eigen::Map<const VectorXd>(t.data(), Index(t.size())),
                         Eigen::Map<const VectorXd>(s.data(), Index(s.size())));
  } catch (const InvalidArgument& e) {
    throw ParseError(line_no, std::string("curve CSV: ") + e.what());
  }
}

json curve_to_json(const SurvivalCurve& curve) {
  const VectorXd& t = curve.times();
  const VectorXd& s = curve.probs();
  return {{"times", std::vector<double>(t.data(), t.data() + t.size())},
          {"probs", std::vector<double>(s.data(), s.data() + s.size())}};
}

SurvivalCurve curve_from_json(const json& doc) {
  const auto t = doc.at("times").get<std::vector<double>>();
  const auto s = doc.at("probs").get<std::vector<double>>();
  return SurvivalCurve(Eigen::Map<const VectorXd>(t.data(), Index(t.size())),
                       Eigen::Map<const VectorXd>(s.data(), Index(s.size())));
}

void write_envelope_csv(std::ostream& out, const RashomonEnvelope& env) {
  out << "time,lower,reference,upper\n";
  for (Index i = 0; i < env.grid.size(); ++i) {
    out << format_double(env.grid[i]) << ',' << format_double(env.lower[i]) << ','
        << format_double(curve_eval(env.reference, env.grid[i])) << ','
        << format_double(env.upper[i]) << '\n';
  }
}

RashomonEnvelope read_envelope_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "time,lower,reference,upper") {
    throw ParseError(1, "envelope CSV header must be time,lower,reference,upper");
  }
  std::vector<double> t, lo, ref, up;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto l = trim(line);
    if (l.empty()) continue;
    const auto cells = split_char(l, ',');
    if (cells.size() != 4) throw ParseError(line_no, "expected 4 cells");
    double v[4];
    for (int k = 0; k < 4; ++k) {
      const auto d = parse_double(cells[std::size_t(k)]);
      if (!d) throw ParseError(line_no, "non-numeric cell '" + std::string(cells[std::size_t(k)]) + "'");
      v[k] = *d;
    }
    if (!(v[1] <= v[2] && v[2] <= v[3] && v[1] >= 0.0 && v[3] <= 1.0)) {
      throw ParseError(line_no, "need 0 <= lower <= reference <= upper <= 1");
    }
    t.push_back(v[0]);
    lo.push_back(v[1]);
    ref.push_back(v[2]);
    up.push_back(v[3]);
  }
  if (t.empty()) throw ParseError(line_no, "envelope CSV has no rows");
  auto to_vec = [](const std::vector<double>& v) {
    return VectorXd(Eigen::Map<const VectorXd>(v.data(), Index(v.size())));
  };
  RashomonEnvelope env;
  env.grid = to_vec(t);
  try {
    validate_grid(env.grid);
    env.reference = SurvivalCurve(env.grid, to_vec(ref));
    SurvivalCurve(env.grid, to_vec(lo));
    SurvivalCurve(env.grid, to_vec(up));
  } catch (const InvalidArgument& e) {
    throw ParseError(0, std::string("envelope CSV: ") + e.what());
  }
  env.lower = to_vec(lo);
  env.upper = to_vec(up);
  return env;
}

void write_evaluation_csv(std::ostream& out, const std::vector<EvaluationRecord>& records) {
  std::set<double> horizons;
  for (const auto& r : records) {
    for (const auto& [t, b] : r.brier_at) horizons.insert(t);
  }
  out << "model_id,c_index,n_comparable_pairs,integrated_brier";
  for (double t : horizons) out << ",brier@" << format_double(t);
  out << '\n';
  for (const auto& r : records) {
    out << r.model_id << ',' << format_double(r.c_index) << ',' << r.n_comparable_pairs << ','
        << format_double(r.integrated_brier);
    for (double t : horizons) {
      out << ',';
      auto it = r.brier_at.find(t);
      if (it != r.brier_at.end()) out << format_double(it->second);
    }
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

namespace {

constexpr const char* kModelSetFormat = "rashomon-surv-model-set";
constexpr int kModelSetVersion = 1;

// Summary statistics reported for each subset by the original study. They
// come from a different 19-model zoo with unknown seeds and covariates.
json published_reference(const std::string& subset) {
  struct Ref {
    const char* subset;
    int size;
    double mean, sd;
  };
  static constexpr Ref kRefs[] = {{"FD001", 5, 0.8259, 0.0204},
                                  {"FD002", 4, 0.7189, 0.0124},
                                  {"FD003", 4, 0.8707, 0.0181},
                                  {"FD004", 8, 0.8027, 0.0146}};
  for (const auto& r : kRefs) {
    if (subset == r.subset) {
      return {{"status", "reference (not reproducible)"},
              {"note", "published Rashomon set summary from a different 19-model zoo; seeds, "
                       "covariate construction and censoring split unknown"},
              {"rashomon_set_size", r.size},
              {"member_c_index_mean", r.mean},
              {"member_c_index_sd", r.sd}};
    }
  }
  return nullptr;
}

// 64-bit FNV-1a; identifies the exact training split behind cached models.
std::string fingerprint(const TimeToEventDataset& train) {
  std::ostringstream csv;
  write_dataset_csv(csv, train);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : csv.str()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Models cached by an earlier run on the same training split, keyed by id.
// An unreadable or mismatched cache is ignored.
std::map<std::string, ModelPtr> load_model_cache(const std::filesystem::path& path,
                                                 const std::string& train_fingerprint) {
  std::map<std::string, ModelPtr> cache;
  std::ifstream in(path);
  if (!in) return cache;
  try {
    const json doc = json::parse(in);
    if (doc.value("format", "") != kModelSetFormat || doc.value("version", 0) != kModelSetVersion ||
        doc.value("train_fingerprint", "") != train_fingerprint) {
      return cache;
    }
    for (const auto& m : doc.at("models")) {
      ModelPtr model = model_from_json(m);
      cache.emplace(model->id(), std::move(model));
    }
  } catch (const std::exception&) {
    cache.clear();
  }
  return cache;
}

std::string block_prefix(const ExperimentConfig& c, double censor_time) {
  return c.subset + "_t" + format_double(censor_time);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("failed writing " + path.string());
}

json records_to_json(const std::vector<EvaluationRecord>& records) {
  json out = json::array();
  for (const auto& r : records) {
    json brier = json::array();
    for (const auto& [t, b] : r.brier_at) brier.push_back({{"time", t}, {"brier", b}});
    out.push_back({{"model_id", r.model_id},
                   {"c_index", r.c_index},
                   {"n_comparable_pairs", r.n_comparable_pairs},
                   {"integrated_brier", r.integrated_brier},
                   {"brier_at", brier}});
  }
  return out;
}

json stats_to_json(const EnvelopeStats& s) {
  json width_at = json::array();
  for (const auto& [t, w] : s.width_at) width_at.push_back({{"time", t}, {"width", w}});
  return {{"mean_width", s.mean_width},
          {"max_width", s.max_width},
          {"argmax_time", s.argmax_time},
          {"width_at", width_at}};
}

json run_block(const ExperimentConfig& config, const CmapssTable& table, double censor_time) {
  json block;
  block["censor_time"] = censor_time;

  const TimeToEventDataset data =
      build_survival_dataset(table, CensoringSpec{censor_time}, config.covariates);
  const TrainTestSplit split = split_train_test(data, config.train_fraction, config.seed);
  const Standardizer scaler = Standardizer::fit(split.train.covariates());
  const TimeToEventDataset train = scaler.apply(split.train);
  const TimeToEventDataset test = scaler.apply(split.test);
  block["data"] = {{"n_units", data.size()},
                   {"n_events", data.n_events()},
                   {"n_train", train.size()},
                   {"n_train_events", train.n_events()},
                   {"n_test", test.size()},
                   {"n_test_events", test.n_events()}};

  const std::filesystem::path dir(config.output_dir);
  const std::string prefix = block_prefix(config, censor_time);
  const std::string train_fingerprint = fingerprint(train);
  const auto cache = load_model_cache(dir / (prefix + "_models.json"), train_fingerprint);

  // A model that cannot be fitted on this block is left out of the
  // hypothesis space and listed.
  std::vector<ModelPtr> fitted(config.zoo.size());
  std::vector<std::string> fit_errors(config.zoo.size());
  parallel_for(config.zoo.size(), [&](std::size_t m) {
    const auto hit = cache.find(config.zoo[m].model_id);
    if (hit != cache.end() && hit->second->spec() == config.zoo[m]) {
      fitted[m] = hit->second;
      return;
    }
    try {
      fitted[m] = fit_model(config.zoo[m], train);
    } catch (const std::exception& e) {
      fit_errors[m] = e.what();
    }
  });
  std::vector<ModelPtr> models;
  json failures = json::array();
  for (std::size_t m = 0; m < fitted.size(); ++m) {
    if (fitted[m]) {
      models.push_back(fitted[m]);
    } else {
      failures.push_back({{"model_id", config.zoo[m].model_id}, {"error", fit_errors[m]}});
    }
  }
  block["fit_failures"] = failures;
  if (models.empty()) throw Error("no model could be fitted");

  const SurvivalCurve censoring = censoring_survival(train.times(), train.events());
  EvaluationOptions eval;
  eval.risk_horizon = censor_time;
  eval.brier_horizons.resize(10);
  for (Index k = 0; k < 10; ++k) eval.brier_horizons[k] = censor_time * double(k + 1) / 10.0;
  const auto records = evaluate_zoo(models, test, censoring, eval);
  block["evaluation"] = records_to_json(records);

  const RashomonSet set = build_rashomon_set(records, config.epsilon, config.loss);
  std::vector<double> member_c;
  json members = json::array();
  for (const auto& m : set.members) {
    for (const auto& r : records) {
      if (r.model_id == m.model_id) member_c.push_back(r.c_index);
    }
    members.push_back({{"model_id", m.model_id}, {"loss", m.loss}, {"c_index", member_c.back()}});
  }
  double mean = 0.0, sd = 0.0;
  for (double v : member_c) mean += v;
  mean /= double(member_c.size());
  if (member_c.size() > 1) {
    for (double v : member_c) sd += (v - mean) * (v - mean);
    sd = std::sqrt(sd / double(member_c.size() - 1));
  }
  block["rashomon"] = {{"epsilon", set.epsilon},
                       {"loss", set.loss_name},
                       {"best_model_id", set.best_model_id},
                       {"best_loss", set.best_loss},
                       {"size", set.size()},
                       {"members", members},
                       {"member_c_index_mean", mean},
                       {"member_c_index_sd", sd}};

  const VectorXd grid = make_grid(config.grid_step, censor_time);
  const RashomonEnvelope env = build_envelope(set, models, test, grid);
  std::vector<double> probes;
  for (double t : config.probe_times) {
    if (t >= grid[0] && t <= censor_time) probes.push_back(t);
  }
  const EnvelopeStats stats =
      envelope_stats(env, Eigen::Map<const VectorXd>(probes.data(), Index(probes.size())));
  block["envelope"] = stats_to_json(stats);
  block["envelope"]["mode"] = "population (mean over test units)";

  json model_set = {{"format", kModelSetFormat},
                    {"version", kModelSetVersion},
                    {"train_fingerprint", train_fingerprint},
                    {"models", json::array()}};
  for (const auto& m : models) model_set["models"].push_back(model_to_json(*m));
  write_file(dir / (prefix + "_models.json"), model_set.dump() + "\n");

  std::ostringstream env_csv, eval_csv;
  write_envelope_csv(env_csv, env);
  write_evaluation_csv(eval_csv, records);
  write_file(dir / (prefix + "_envelope.csv"), env_csv.str());
  write_file(dir / (prefix + "_evaluation.csv"), eval_csv.str());
  char title[160];
  std::snprintf(title, sizeof(title), "%s, censoring at %g cycles: %zu-model Rashomon set",
                config.subset.c_str(), censor_time, set.size());
  emit_plot(env, stats, dir / (prefix + "_envelope.svg"), title);
  block["artifacts"] = {{"envelope_csv", prefix + "_envelope.csv"},
                        {"evaluation_csv", prefix + "_evaluation.csv"},
                        {"plot_svg", prefix + "_envelope.svg"},
                        {"models_json", prefix + "_models.json"}};
  block["status"] = "ok";
  return block;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
  validate_config(config);
  const auto data_file = resolve_data_path(config.data_path, config.subset);
  if (!std::filesystem::is_regular_file(data_file)) {
    throw ConfigError("data_path " + data_file.string() + " is not a readable file");
  }
  const auto records = parse_cmapss_file(data_file);
  if (records.empty()) throw Error("data file " + config.data_path + " holds no records");
  const CmapssTable raw = CmapssTable::from_records(records);
  const ColumnDropResult dropped = drop_constant_columns(raw);

  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec) throw Error("cannot create output_dir " + config.output_dir + ": " + ec.message());

  ExperimentReport report;
  json& doc = report.doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["config"] = config_to_json(config);
  std::set<int> units(raw.unit_number.begin(), raw.unit_number.end());
  doc["provenance"] = {
      {"data_file", data_file.string()},
      {"n_records", raw.rows()},
      {"n_units", units.size()},
      {"dropped_columns", dropped.dropped},
      {"features", dropped.table.feature_names},
      {"censoring", "administrative at each censor_time, applied to all units before the split"},
      {"evaluation", "C-index and IPCW Brier on the held-out test split; censoring distribution "
                     "estimated on the training split"},
      {"risk_score", "linear predictor for Cox-type models, 1 - S(censor_time | x) otherwise"},
      {"standardization", "z-score with training-split statistics"}};

  json blocks = json::array();
  for (double c : config.censor_times) {
    try {
      blocks.push_back(run_block(config, dropped.table, c));
    } catch (const std::exception& e) {
      report.partial = true;
      blocks.push_back({{"censor_time", c}, {"status", "failed"}, {"error", e.what()}});
    }
  }
  doc["blocks"] = blocks;

  // Does envelope width grow with censoring time?
  std::vector<std::pair<double, double>> widths;
  for (const auto& b : blocks) {
    if (b.at("status") == "ok") {
      widths.emplace_back(b.at("censor_time").get<double>(),
                          b.at("envelope").at("mean_width").get<double>());
    }
  }
  std::sort(widths.begin(), widths.end());
  json trend = {{"censor_times", json::array()}, {"mean_width", json::array()}};
  bool monotone = true;
  for (std::size_t i = 0; i < widths.size(); ++i) {
    trend["censor_times"].push_back(widths[i].first);
    trend["mean_width"].push_back(widths[i].second);
    if (i > 0 && widths[i].second < widths[i - 1].second) monotone = false;
  }
  if (widths.size() >= 2) {
    const bool grows = widths.back().second >= widths.front().second;
    trend["last_vs_first_non_decreasing"] = grows;
    trend["non_decreasing"] = monotone;
    trend["flag"] = grows ? json(nullptr)
                          : json("mean envelope width at the longest censoring time is below "
                                 "the width at the shortest");
  }
  doc["trend"] = trend;
  doc["published_reference"] = published_reference(config.subset);
  doc["partial"] = report.partial;

  report.path = std::filesystem::path(config.output_dir) / (config.subset + "_report.json");
  write_file(report.path, doc.dump(2) + "\n");
  return report;
}

// ---------------------------------------------------------------------------
// Censoring comparison
// ---------------------------------------------------------------------------

std::vector<CensoringComparisonRow> compare_censoring(const std::vector<json>& reports) {
  if (reports.empty()) throw ConfigError("compare: no reports given");
  auto comparable = [](const json& report) {
    if (!report.contains("config") || !report.contains("blocks")) {
      throw ConfigError("compare: document is not an experiment report");
    }
    json c = report.at("config");
    c.erase("censor_times");
    c.erase("output_dir");
    return c;
  };
  const json reference = comparable(reports.front());
  std::vector<CensoringComparisonRow> rows;
  for (const auto& r : reports) {
    if (comparable(r) != reference) {
      throw ConfigError("compare: reports differ in configuration beyond censor_times");
    }
    for (const auto& b : r.at("blocks")) {
      if (b.at("status") != "ok") continue;
      CensoringComparisonRow row;
      row.subset = r.at("config").at("subset").get<std::string>();
      row.censor_time = b.at("censor_time").get<double>();
      row.set_size = b.at("rashomon").at("size").get<std::size_t>();
      row.mean_width = b.at("envelope").at("mean_width").get<double>();
      row.max_width = b.at("envelope").at("max_width").get<double>();
      for (const auto& w : b.at("envelope").at("width_at")) {
        row.width_at[w.at("time").get<double>()] = w.at("width").get<double>();
      }
      rows.push_back(std::move(row));
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.censor_time < b.censor_time; });
  return rows;
}

void write_comparison_csv(std::ostream& out, const std::vector<CensoringComparisonRow>& rows) {
  std::set<double> probes;
  for (const auto& r : rows) {
    for (const auto& [t, w] : r.width_at) probes.insert(t);
  }
  out << "subset,censor_time,set_size,mean_width,max_width";
  for (double t : probes) out << ",width@" << format_double(t);
  out << '\n';
  for (const auto& r : rows) {
    out << r.subset << ',' << format_double(r.censor_time) << ',' << r.set_size << ','
        << format_double(r.mean_width) << ',' << format_double(r.max_width);
    for (double t : probes) {
      out << ',';
      auto it = r.width_at.find(t);
      if (it != r.width_at.end()) out << format_double(it->second);
    }
    out << '\n';
  }
}

}  // namespace rsurv
