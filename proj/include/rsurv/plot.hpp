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

// Standalone SVG rendering of a survival envelope: the reference curve as a
// step line over a shaded band between the lower and upper bounds.

#ifndef RSURV_PLOT_HPP_
#define RSURV_PLOT_HPP_

#include <filesystem>
#include <string>

#include "rsurv/rashomon.hpp"

namespace rsurv {

// Fixed canvas; data space is [0, t_max] x [0, 1].
struct PlotGeometry {
  double width = 720.0;
  double height = 440.0;
  double left = 70.0;
  double right = 24.0;
  double top = 44.0;
  double bottom = 60.0;

  double x_px(double t, double t_max) const { return left + (width - left - right) * t / t_max; }
  double y_px(double s) const { return top + (height - top - bottom) * (1.0 - s); }
  double t_of(double px, double t_max) const { return (px - left) * t_max / (width - left - right); }
  double s_of(double py) const { return 1.0 - (py - top) / (height - top - bottom); }
};

// Band vertices (class "band") are the upper bound's step path followed by
// the lower bound's step path reversed; omitted when the envelope has zero
// width everywhere. The reference is a polyline of class "reference".
std::string render_envelope_svg(const RashomonEnvelope& env, const EnvelopeStats& stats,
                                const std::string& title, const PlotGeometry& geometry = {});

// Throws Error when `path` cannot be written.
void emit_plot(const RashomonEnvelope& env, const EnvelopeStats& stats,
               const std::filesystem::path& path, const std::string& title = "");

}  // namespace rsurv

#endif  // RSURV_PLOT_HPP_
