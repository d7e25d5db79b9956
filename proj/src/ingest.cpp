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

#include "rsurv/ingest.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "rsurv/random.hpp"
#include "rsurv/text.hpp"

namespace rsurv {

const std::array<std::string, kCmapssFeatures>& cmapss_feature_names() {
  static const std::array<std::string, kCmapssFeatures> names = [] {
    std::array<std::string, kCmapssFeatures> n;
    for (int i = 0; i < 3; ++i) n[std::size_t(i)] = "op_set_" + std::to_string(i + 1);
    for (int i = 0; i < 21; ++i) n[std::size_t(i + 3)] = "sensor_" + std::to_string(i + 1);
    return n;
  }();
  return names;
}

namespace {

int parse_positive_int(std::string_view tok, std::size_t line, const char* what) {
  const auto v = parse_double(tok);
  if (!v || *v < 1.0 || *v != std::floor(*v) || *v > 1e9) {
    throw ParseError(line, std::string(what) + " must be a positive integer, got '" +
                               std::string(tok) + "'");
  }
  return int(*v);
}

}  // namespace

std::vector<CmapssRecord> parse_cmapss(std::istream& in) {
  std::vector<CmapssRecord> records;
  std::unordered_map<int, int> last_cycle;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_whitespace(line);
    if (tokens.empty()) continue;
    if (tokens.size() != std::size_t(kCmapssColumns)) {
      throw ParseError(line_no, "expected " + std::to_string(kCmapssColumns) + " columns, got " +
                                    std::to_string(tokens.size()));
    }
    CmapssRecord rec;
    rec.unit_number = parse_positive_int(tokens[0], line_no, "unit_number");
    rec.time_in_cycles = parse_positive_int(tokens[1], line_no, "time_in_cycles");
    for (int k = 0; k < kCmapssFeatures; ++k) {
      const auto tok = tokens[std::size_t(k + 2)];
      const auto v = parse_double(tok);
      if (!v || !std::isfinite(*v)) {
        throw ParseError(line_no, "non-numeric token '" + std::string(tok) + "' in column " +
                                      std::to_string(k + 3));
      }
      rec.values[std::size_t(k)] = *v;
    }
    auto [it, inserted] = last_cycle.try_emplace(rec.unit_number, 0);
    if (rec.time_in_cycles != it->second + 1) {
      throw ParseError(line_no, "unit " + std::to_string(rec.unit_number) + ": cycle " +
                                    std::to_string(rec.time_in_cycles) + " does not follow cycle " +
                                    std::to_string(it->second));
    }
    it->second = rec.time_in_cycles;
    records.push_back(rec);
  }
  return records;
}

std::vector<CmapssRecord> parse_cmapss_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open CMAPSS file " + path.string());
  return parse_cmapss(in);
}

CmapssTable CmapssTable::from_records(const std::vector<CmapssRecord>& records) {
  CmapssTable t;
  const Index n = Index(records.size());
  t.unit_number.reserve(records.size());
  t.cycle.reserve(records.size());
  t.features.resize(n, kCmapssFeatures);
  for (Index i = 0; i < n; ++i) {
    const auto& r = records[std::size_t(i)];
    t.unit_number.push_back(r.unit_number);
    t.cycle.push_back(r.time_in_cycles);
    for (int k = 0; k < kCmapssFeatures; ++k) t.features(i, k) = r.values[std::size_t(k)];
  }
  const auto& names = cmapss_feature_names();
  t.feature_names.assign(names.begin(), names.end());
  return t;
}

ColumnDropResult drop_constant_columns(const CmapssTable& table) {
  if (table.rows() == 0) throw InvalidArgument("drop_constant_columns: empty table");
  std::vector<Index> keep;
  ColumnDropResult out;
  for (Index j = 0; j < table.features.cols(); ++j) {
    const auto col = table.features.col(j);
    if ((col.array() != col[0]).any()) {
      keep.push_back(j);
    } else {
      out.dropped.push_back(table.feature_names[std::size_t(j)]);
    }
  }
  if (keep.empty()) throw DegenerateData("drop_constant_columns: every feature column is constant");
  out.table.unit_number = table.unit_number;
  out.table.cycle = table.cycle;
  out.table.features = table.features(Eigen::all, keep);
  for (Index j : keep) out.table.feature_names.push_back(table.feature_names[std::size_t(j)]);
  return out;
}

std::string_view to_string(CovariateStrategy s) {
  return s == CovariateStrategy::kFirstCycle ? "first_cycle" : "window_mean";
}

CovariateStrategy parse_covariate_strategy(std::string_view name) {
  if (name == "first_cycle") return CovariateStrategy::kFirstCycle;
  if (name == "window_mean") return CovariateStrategy::kWindowMean;
  throw InvalidArgument("unknown covariate strategy '" + std::string(name) + "'");
}

TimeToEventDataset build_survival_dataset(const CmapssTable& table, const CensoringSpec& censoring,
                                          const CovariateSpec& covariates) {
  if (table.rows() == 0) throw InvalidArgument("build_survival_dataset: no records");
  if (!(censoring.censor_time > 0.0)) throw InvalidArgument("censor_time must be > 0");
  if (covariates.window_length < 1) throw InvalidArgument("window_length must be >= 1");

  // Row indices per unit, units in order of first appearance.
  std::vector<int> order;
  std::map<int, std::vector<Index>> rows_of;
  for (Index i = 0; i < table.rows(); ++i) {
    auto [it, inserted] = rows_of.try_emplace(table.unit_number[std::size_t(i)]);
    if (inserted) order.push_back(it->first);
    it->second.push_back(i);
  }

  const Index n = Index(order.size());
  const Index p = table.features.cols();
  std::vector<std::string> ids;
  VectorXd times(n);
  BoolArray events(n);
  MatrixXd x(n, p);
  const int last_window_cycle = covariates.strategy == CovariateStrategy::kFirstCycle
                                    ? 1
                                    : covariates.window_length;

  for (Index u = 0; u < n; ++u) {
    const int unit = order[std::size_t(u)];
    const auto& rows = rows_of[unit];
    int t_fail = 0;
    for (Index r : rows) t_fail = std::max(t_fail, table.cycle[std::size_t(r)]);
    const double c = censoring.censor_time;
    ids.push_back(std::to_string(unit));
    if (double(t_fail) <= c) {
      times[u] = double(t_fail);
      events[u] = true;
    } else {
      times[u] = c;
      events[u] = false;
    }
    const double observed_until = std::min(double(t_fail), c);
    VectorXd sum = VectorXd::Zero(p);
    int count = 0;
    for (Index r : rows) {
      const int cyc = table.cycle[std::size_t(r)];
      if (double(cyc) > observed_until || cyc > last_window_cycle) continue;
      sum += table.features.row(r).transpose();
      ++count;
    }
    if (count == 0) {
      throw InvalidArgument("unit " + ids.back() + ": no cycles observed before censor_time");
    }
    x.row(u) = (sum / double(count)).transpose();
  }
  return TimeToEventDataset(std::move(ids), std::move(times), std::move(events), std::move(x),
                            table.feature_names);
}

TimeToEventDataset build_survival_dataset(const std::vector<CmapssRecord>& records,
                                          const CensoringSpec& censoring,
                                          const CovariateSpec& covariates) {
  if (records.empty()) throw InvalidArgument("build_survival_dataset: no records");
  return build_survival_dataset(CmapssTable::from_records(records), censoring, covariates);
}

TrainTestSplit split_train_test(const TimeToEventDataset& data, double train_fraction,
                                std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw InvalidArgument("train_fraction must lie in (0, 1)");
  }
  const Index n = data.size();
  if (n < 2) throw InvalidArgument("split_train_test: need at least 2 units");
  const Index n_train = Index(std::llround(double(n) * train_fraction));
  if (n_train < 1 || n_train >= n) {
    throw InvalidArgument("split_train_test: fraction leaves one side empty");
  }
  Rng rng(seed);
  auto perm = random_permutation<Index>(rng, n);
  std::vector<Index> train(perm.begin(), perm.begin() + n_train);
  std::vector<Index> test(perm.begin() + n_train, perm.end());
  std::sort(train.begin(), train.end());
  std::sort(test.begin(), test.end());
  return {data.subset(train), data.subset(test)};
}

Standardizer Standardizer::fit(const MatrixXd& x) {
  if (x.rows() == 0) throw InvalidArgument("Standardizer::fit: no rows");
  Standardizer s;
  s.mean_ = x.colwise().mean().transpose();
  s.scale_.resize(x.cols());
  for (Index j = 0; j < x.cols(); ++j) {
    const double var =
        x.rows() > 1 ? (x.col(j).array() - s.mean_[j]).square().sum() / double(x.rows() - 1) : 0.0;
    const double sd = std::sqrt(var);
    s.scale_[j] = sd > 0.0 ? sd : 1.0;
  }
  return s;
}

MatrixXd Standardizer::apply(const MatrixXd& x) const {
  if (x.cols() != mean_.size()) throw InvalidArgument("Standardizer: feature count mismatch");
  return (x.rowwise() - mean_.transpose()).array().rowwise() / scale_.transpose().array();
}

TimeToEventDataset Standardizer::apply(const TimeToEventDataset& data) const {
  return data.with_covariates(apply(data.covariates()));
}

void write_dataset_csv(std::ostream& out, const TimeToEventDataset& data) {
  out << "unit_id,time,event";
  for (const auto& name : data.feature_names()) out << ',' << name;
  out << '\n';
  for (Index i = 0; i < data.size(); ++i) {
    out << data.unit_ids()[std::size_t(i)] << ',' << format_double(data.time(i)) << ','
        << (data.event(i) ? 1 : 0);
    for (Index j = 0; j < data.n_features(); ++j) {
      out << ',' << format_double(data.covariates()(i, j));
    }
    out << '\n';
  }
}

TimeToEventDataset read_dataset_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  const auto header = split_char(trim(line), ',');
  if (header.size() < 3 || header[0] != "unit_id" || header[1] != "time" || header[2] != "event") {
    throw ParseError(1, "header must start with unit_id,time,event");
  }
  std::vector<std::string> names;
  for (std::size_t k = 3; k < header.size(); ++k) names.emplace_back(header[k]);
  std::vector<TimeToEventRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto l = trim(line);
    if (l.empty()) continue;
    const auto cells = split_char(l, ',');
    if (cells.size() != header.size()) {
      throw ParseError(line_no, "expected " + std::to_string(header.size()) + " cells");
    }
    TimeToEventRow row;
    row.unit_id = std::string(cells[0]);
    const auto t = parse_double(cells[1]);
    if (!t) throw ParseError(line_no, "bad time");
    row.time = *t;
    if (cells[2] != "0" && cells[2] != "1") throw ParseError(line_no, "event must be 0 or 1");
    row.event = cells[2] == "1";
    row.covariates.resize(Index(names.size()));
    for (std::size_t k = 0; k < names.size(); ++k) {
      const auto v = parse_double(cells[k + 3]);
      if (!v) throw ParseError(line_no, "bad covariate '" + std::string(cells[k + 3]) + "'");
      row.covariates[Index(k)] = *v;
    }
    rows.push_back(std::move(row));
  }
  return TimeToEventDataset::from_rows(rows, std::move(names));
}

}  // namespace rsurv
