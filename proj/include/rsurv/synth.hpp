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

// Surrogate run-to-failure trajectories in the CMAPSS text layout.
//
// Each unit carries a latent initial-wear level that both shortens its life
// and shifts its early sensor readings. Sensors follow
//
//   value = base + direction * amplitude * health(t) + noise,
//   health(t) = w0 + (1 - w0) * (exp(g t / L) - 1) / (exp(g) - 1),
//
// for lifetime L, so degradation accelerates toward failure. Column
// baselines, noise levels and constant channels mimic the public subsets.
// Used for tests, demos and as a stand-in when the real files are absent;
// results on it say nothing about the real data.

#ifndef RSURV_SYNTH_HPP_
#define RSURV_SYNTH_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rsurv/ingest.hpp"

namespace rsurv {

enum class CmapssProfile { kFD001, kFD002, kFD003, kFD004 };

CmapssProfile parse_cmapss_profile(std::string_view subset);

struct CmapssSimOptions {
  CmapssProfile profile = CmapssProfile::kFD001;
  int n_units = 0;  // 0 = the subset's usual unit count
  std::uint64_t seed = 2008;
};

std::vector<CmapssRecord> simulate_cmapss(const CmapssSimOptions& options);

// Space separated, one record per line, CMAPSS column order.
void write_cmapss(std::ostream& out, const std::vector<CmapssRecord>& records);

}  // namespace rsurv

#endif  // RSURV_SYNTH_HPP_
