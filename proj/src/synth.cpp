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

#include "rsurv/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "rsurv/random.hpp"

namespace rsurv {
namespace {

struct Channel {
  double base;
  double spread;     // typical between-unit spread of the real channel
  int direction;     // +1 rises with wear, -1 falls, 0 flat
  int decimals;
};

// op_set_1..3 then sensor_1..21, single-condition baselines.
constexpr std::array<Channel, kCmapssFeatures> kChannels{{
    {0.0, 0.0022, 0, 4},     // op_set_1
    {0.0, 0.0003, 0, 4},     // op_set_2
    {100.0, 0.0, 0, 1},      // op_set_3
    {518.67, 0.0, 0, 2},     // sensor_1
    {642.68, 0.50, 1, 2},    // sensor_2
    {1590.52, 6.13, 1, 2},   // sensor_3
    {1408.93, 9.00, 1, 2},   // sensor_4
    {14.62, 0.0, 0, 2},      // sensor_5
    {21.61, 0.0, 0, 2},      // sensor_6 (handled separately)
    {553.37, 0.88, -1, 2},   // sensor_7
    {2388.10, 0.07, 1, 2},   // sensor_8
    {9065.24, 22.1, 1, 2},   // sensor_9
    {1.30, 0.0, 0, 2},       // sensor_10
    {47.54, 0.27, 1, 2},     // sensor_11
    {521.41, 0.74, -1, 2},   // sensor_12
    {2388.10, 0.07, 1, 2},   // sensor_13
    {8143.75, 19.1, 1, 2},   // sensor_14
    {8.4421, 0.0375, 1, 4},  // sensor_15
    {0.03, 0.0, 0, 2},       // sensor_16
    {393.21, 1.55, 1, 0},    // sensor_17
    {2388.0, 0.0, 0, 0},     // sensor_18
    {100.0, 0.0, 0, 2},      // sensor_19
    {38.82, 0.18, -1, 2},    // sensor_20
    {23.2896, 0.108, -1, 4}, // sensor_21
}};

struct Profile {
  int n_units;
  double log_median_life;
  double wear_effect;  // sd of log-life explained by initial wear
  double life_noise;   // residual sd of log-life
  int min_life;
  int max_life;
  bool six_conditions;
  bool two_fault_modes;
};

Profile profile_of(CmapssProfile p) {
  switch (p) {
    case CmapssProfile::kFD001:
      return {100, std::log(200.0), 0.17, 0.13, 128, 362, false, false};
    case CmapssProfile::kFD002:
      return {260, std::log(200.0), 0.17, 0.15, 128, 378, true, false};
    case CmapssProfile::kFD003:
      return {100, std::log(235.0), 0.20, 0.15, 145, 525, false, true};
    case CmapssProfile::kFD004:
      return {249, std::log(235.0), 0.20, 0.17, 128, 543, true, true};
  }
  return {};
}

// Operating regimes: op settings and a level factor applied to sensor bases.
struct Regime {
  double op1, op2, op3, level;
};
constexpr std::array<Regime, 6> kRegimes{{
    {0.0, 0.0, 100.0, 1.000},
    {10.0, 0.25, 100.0, 0.943},
    {20.0, 0.70, 100.0, 0.892},
    {25.0, 0.62, 60.0, 0.858},
    {35.0, 0.84, 100.0, 0.867},
    {42.0, 0.84, 100.0, 0.947},
}};

double round_to(double v, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(v * scale) / scale;
}

}  // namespace

CmapssProfile parse_cmapss_profile(std::string_view subset) {
  if (subset == "FD001") return CmapssProfile::kFD001;
  if (subset == "FD002") return CmapssProfile::kFD002;
  if (subset == "FD003") return CmapssProfile::kFD003;
  if (subset == "FD004") return CmapssProfile::kFD004;
  throw InvalidArgument("unknown CMAPSS subset '" + std::string(subset) + "'");
}

std::vector<CmapssRecord> simulate_cmapss(const CmapssSimOptions& options) {
  const Profile prof = profile_of(options.profile);
  const int n_units = options.n_units > 0 ? options.n_units : prof.n_units;
  Rng rng(options.seed);
  std::vector<CmapssRecord> out;

  for (int unit = 1; unit <= n_units; ++unit) {
    const double wear = standard_normal(rng);
    const int mode = prof.two_fault_modes && uniform_unit(rng) < 0.5 ? 1 : 0;
    const double log_life = prof.log_median_life + (mode == 1 ? 0.08 : 0.0) -
                            prof.wear_effect * wear + prof.life_noise * standard_normal(rng);
    const int life =
        std::clamp(int(std::lround(std::exp(log_life))), prof.min_life, prof.max_life);
    const double w0 = std::clamp(0.12 + 0.06 * wear, 0.0, 0.4);
    constexpr double kGrowth = 5.0;
    const double denom = std::exp(kGrowth) - 1.0;

    for (int cycle = 1; cycle <= life; ++cycle) {
      const double frac = double(cycle) / double(life);
      const double health = w0 + (1.0 - w0) * (std::exp(kGrowth * frac) - 1.0) / denom;
      const Regime& regime = prof.six_conditions
                                 ? kRegimes[uniform_index(rng, kRegimes.size())]
                                 : kRegimes[0];
      CmapssRecord rec;
      rec.unit_number = unit;
      rec.time_in_cycles = cycle;
      for (int k = 0; k < kCmapssFeatures; ++k) {
        const Channel& ch = kChannels[std::size_t(k)];
        double v;
        if (k < 3) {
          const double setting = k == 0 ? regime.op1 : k == 1 ? regime.op2 : regime.op3;
          v = setting + ch.spread * standard_normal(rng);
        } else if (k == 8) {
          v = uniform_unit(rng) < 0.02 ? 21.60 : 21.61;  // sensor_6
          v *= regime.level;
        } else {
          int direction = ch.direction;
          // Second fault mode: fan-speed channels move the other way.
          if (mode == 1 && (k == 10 || k == 15)) direction = -direction;
          double level = ch.base * regime.level;
          if (prof.two_fault_modes && k == 12) {  // sensor_10 varies with the fan fault
            level += mode * 0.02 * health;
          }
          v = level + direction * 4.0 * ch.spread * health +
              0.5 * ch.spread * standard_normal(rng);
        }
        rec.values[std::size_t(k)] = round_to(v, ch.decimals);
      }
      out.push_back(rec);
    }
  }
  return out;
}

void write_cmapss(std::ostream& out, const std::vector<CmapssRecord>& records) {
  char buf[64];
  for (const auto& r : records) {
    out << r.unit_number << ' ' << r.time_in_cycles;
    for (int k = 0; k < kCmapssFeatures; ++k) {
      std::snprintf(buf, sizeof(buf), " %.*f", kChannels[std::size_t(k)].decimals,
                    r.values[std::size_t(k)]);
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace rsurv
