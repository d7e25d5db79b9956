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

#include "rsurv/plot.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace rsurv {
namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// (t0, v0) (t1, v0) (t1, v1) ... (t_last, v_last)
std::vector<std::pair<double, double>> step_path(const VectorXd& t, const VectorXd& v) {
  std::vector<std::pair<double, double>> pts;
  for (Index i = 0; i < t.size(); ++i) {
    if (i > 0) pts.emplace_back(t[i], v[i - 1]);
    pts.emplace_back(t[i], v[i]);
  }
  return pts;
}

std::string points_attr(const std::vector<std::pair<double, double>>& pts, double t_max,
                        const PlotGeometry& g) {
  std::string out;
  for (const auto& [t, s] : pts) {
    if (!out.empty()) out += ' ';
    out += fmt("%.3f", g.x_px(t, t_max)) + ',' + fmt("%.3f", g.y_px(s));
  }
  return out;
}

double nice_step(double span) {
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    if (m * mag >= raw) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

std::string render_envelope_svg(const RashomonEnvelope& env, const EnvelopeStats& stats,
                                const std::string& title, const PlotGeometry& g) {
  validate_grid(env.grid);
  const double t_max = env.grid[env.grid.size() - 1];
  if (!(t_max > 0.0)) throw InvalidArgument("plot: grid must extend past t = 0");
  const VectorXd ref = env.reference.probs();
  const double x0 = g.left, x1 = g.width - g.right, y0 = g.top, y1 = g.height - g.bottom;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << g.width << "\" height=\""
      << g.height << "\" viewBox=\"0 0 " << g.width << ' ' << g.height << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << g.width << "\" height=\"" << g.height
      << "\" fill=\"white\"/>\n";
  if (!title.empty()) {
    svg << "<text x=\"" << fmt("%.1f", 0.5 * (x0 + x1)) << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << escape_xml(title) << "</text>\n";
  }

  // Grid lines and tick labels.
  svg << "<g class=\"axes\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  const double step = nice_step(t_max);
  for (double t = 0.0; t <= t_max + 1e-9; t += step) {
    const double px = g.x_px(t, t_max);
    svg << "<line x1=\"" << fmt("%.3f", px) << "\" y1=\"" << y0 << "\" x2=\"" << fmt("%.3f", px)
        << "\" y2=\"" << y1 << "\" stroke=\"#e5e5e5\"/>\n";
    svg << "<text x=\"" << fmt("%.3f", px) << "\" y=\"" << y1 + 16
        << "\" text-anchor=\"middle\">" << fmt("%g", t) << "</text>\n";
  }
  for (int k = 0; k <= 4; ++k) {
    const double s = 0.25 * k;
    const double py = g.y_px(s);
    svg << "<line x1=\"" << x0 << "\" y1=\"" << fmt("%.3f", py) << "\" x2=\"" << x1 << "\" y2=\""
        << fmt("%.3f", py) << "\" stroke=\"#e5e5e5\"/>\n";
    svg << "<text x=\"" << x0 - 8 << "\" y=\"" << fmt("%.3f", py + 4)
        << "\" text-anchor=\"end\">" << fmt("%.2f", s) << "</text>\n";
  }
  svg << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << x1 - x0 << "\" height=\""
      << y1 - y0 << "\" fill=\"none\" stroke=\"#333\"/>\n";
  svg << "<text x=\"" << fmt("%.1f", 0.5 * (x0 + x1)) << "\" y=\"" << g.height - 16
      << "\" text-anchor=\"middle\" font-size=\"13\">Time (cycles)</text>\n";
  svg << "<text x=\"18\" y=\"" << fmt("%.1f", 0.5 * (y0 + y1))
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
      << fmt("%.1f", 0.5 * (y0 + y1)) << ")\">Survival probability</text>\n";
  svg << "</g>\n";

  if (stats.max_width > 0.0) {
    auto pts = step_path(env.grid, env.upper);
    auto low = step_path(env.grid, env.lower);
    pts.insert(pts.end(), low.rbegin(), low.rend());
    svg << "<polygon class=\"band\" fill=\"#9e9e9e\" fill-opacity=\"0.45\" stroke=\"none\" "
        << "points=\"" << points_attr(pts, t_max, g) << "\"/>\n";
  }
  svg << "<polyline class=\"reference\" fill=\"none\" stroke=\"black\" stroke-width=\"1.6\" "
      << "points=\"" << points_attr(step_path(env.grid, ref), t_max, g) << "\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

void emit_plot(const RashomonEnvelope& env, const EnvelopeStats& stats,
               const std::filesystem::path& path, const std::string& title) {
  const std::string svg = render_envelope_svg(env, stats, title);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write plot to " + path.string());
  out << svg;
  if (!out) throw Error("failed writing plot to " + path.string());
}

}  // namespace rsurv
