#pragma once

// Artifact writers for the command-line tool: JSON views of the algebraic
// types, fixed-precision CSV and a dependency-free SVG line plot.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lapsch/oscillators.hpp"
#include "lapsch/pathology.hpp"
#include "lapsch/sdomain.hpp"
#include "lapsch/transforms.hpp"
#include "lapsch/verify.hpp"

namespace lapsch {

using json = nlohmann::ordered_json;

inline json to_json(const SDomainFn& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    json factors = json::array();
    for (const auto& fac : t.factors()) factors.push_back({{"pole", fac.pole}, {"exponent", fac.exponent}});
    terms.push_back({{"coeff", t.coeff()}, {"factors", factors}, {"exp_poly", t.exp_poly()}});
  }
  return {{"expression", to_string(f)}, {"terms", terms}, {"unit", "dimensionless"}};
}

inline std::string to_string(const PolyExp& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto num = [](double x) { return detail::format_number(x); };
  for (const auto& t : f.smooth_terms()) {
    if (!out.empty()) out += " + ";
    out += num(t.coeff);
    if (t.power > 0) out += "*xi^" + std::to_string(t.power);
    if (t.decay != 0.0) out += "*exp(" + num(-t.decay) + "*xi)";
  }
  for (const auto& t : f.distributional_terms()) {
    if (!out.empty()) out += " + ";
    out += num(t.coeff) + "*delta^(" + std::to_string(t.order) + ")(xi)";
  }
  return out;
}

inline json to_json(const PolyExp& f) {
  json smooth = json::array(), dist = json::array();
  for (const auto& t : f.smooth_terms()) smooth.push_back({{"coeff", t.coeff}, {"power", t.power}, {"decay", t.decay}});
  for (const auto& t : f.distributional_terms()) dist.push_back({{"coeff", t.coeff}, {"delta_order", t.order}});
  return {{"expression", to_string(f)}, {"smooth_terms", smooth}, {"distributional_terms", dist}, {"unit", "dimensionless"}};
}

inline json to_json(const VerifyReport& r) {
  json checks = json::array(), failed = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"metric", c.metric}, {"metric_unit", "dimensionless"},
                      {"detail", c.detail}});
    if (!c.passed) failed.push_back(c.name);
  }
  return {{"all_passed", r.all_passed()}, {"checks", checks}, {"failed", failed}};
}

/// 17 significant digits: round-trip exact for doubles.
inline std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_profile_csv(std::ostream& os, const PathologyProfile& p) {
  os << "xi,gamma_xi_over_2pi,xi_over_gamma,g,abs_g\n";
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < p.xi_grid.size(); ++i) {
    const double xi = p.xi_grid[i], g = p.rescaled_values[i];
    os << csv_number(xi) << ',' << csv_number(p.gamma * xi / two_pi) << ',' << csv_number(xi / p.gamma) << ','
       << csv_number(g) << ',' << csv_number(std::abs(g)) << '\n';
  }
}

struct PlotSeries {
  std::string label;
  std::vector<double> x, y;
};

struct PlotPanel {
  std::string title, x_label, y_label;
  std::vector<PlotSeries> series;
};

namespace detail {

inline std::string svg_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

inline std::string svg_tick(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

inline void write_panel(std::ostream& os, const PlotPanel& panel, double left, double top, double width, double height) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
  for (const auto& s : panel.series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;
  const double pl = left + 55, pt = top + 30, pw = width - 70, ph = height - 75;
  const auto X = [&](double x) { return pl + (x - xmin) / (xmax - xmin) * pw; };
  const auto Y = [&](double y) { return pt + ph - (y - ymin) / (ymax - ymin) * ph; };

  os << "<rect x=\"" << svg_num(pl) << "\" y=\"" << svg_num(pt) << "\" width=\"" << svg_num(pw) << "\" height=\""
     << svg_num(ph) << "\" fill=\"none\" stroke=\"#000\"/>\n";
  os << "<text x=\"" << svg_num(pl + pw / 2) << "\" y=\"" << svg_num(top + 18)
     << "\" text-anchor=\"middle\" font-size=\"14\">" << panel.title << "</text>\n";
  os << "<text x=\"" << svg_num(pl + pw / 2) << "\" y=\"" << svg_num(pt + ph + 38)
     << "\" text-anchor=\"middle\" font-size=\"12\">" << panel.x_label << "</text>\n";
  os << "<text x=\"" << svg_num(left + 12) << "\" y=\"" << svg_num(pt + ph / 2) << "\" text-anchor=\"middle\" font-size=\"12\" "
     << "transform=\"rotate(-90 " << svg_num(left + 12) << ' ' << svg_num(pt + ph / 2) << ")\">" << panel.y_label
     << "</text>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = xmin + (xmax - xmin) * k / 4.0, yv = ymin + (ymax - ymin) * k / 4.0;
    os << "<text x=\"" << svg_num(X(xv)) << "\" y=\"" << svg_num(pt + ph + 16)
       << "\" text-anchor=\"middle\" font-size=\"10\">" << svg_tick(xv) << "</text>\n";
    os << "<text x=\"" << svg_num(pl - 4) << "\" y=\"" << svg_num(Y(yv) + 3)
       << "\" text-anchor=\"end\" font-size=\"10\">" << svg_tick(yv) << "</text>\n";
  }
  for (std::size_t si = 0; si < panel.series.size(); ++si) {
    const auto& s = panel.series[si];
    const char* color = colors[si % 5];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) os << (i ? " " : "") << svg_num(X(s.x[i])) << ',' << svg_num(Y(s.y[i]));
    os << "\"/>\n";
    const double ly = pt + 14 + 14 * static_cast<double>(si);
    os << "<line x1=\"" << svg_num(pl + pw - 90) << "\" y1=\"" << svg_num(ly - 4) << "\" x2=\"" << svg_num(pl + pw - 72)
       << "\" y2=\"" << svg_num(ly - 4) << "\" stroke=\"" << color << "\"/>\n";
    os << "<text x=\"" << svg_num(pl + pw - 68) << "\" y=\"" << svg_num(ly) << "\" font-size=\"10\">" << s.label
       << "</text>\n";
  }
}

}  // namespace detail

/// Panels laid out side by side in a fixed 800x500 view box.
inline void write_svg(std::ostream& os, const std::vector<PlotPanel>& panels) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" width=\"800\" height=\"500\">\n"
     << "<rect width=\"800\" height=\"500\" fill=\"#fff\"/>\n";
  const double w = 800.0 / static_cast<double>(std::max<std::size_t>(panels.size(), 1));
  for (std::size_t i = 0; i < panels.size(); ++i) detail::write_panel(os, panels[i], w * static_cast<double>(i), 0.0, w, 500.0);
  os << "</svg>\n";
}

}  // namespace lapsch
