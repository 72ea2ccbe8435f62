// Copyright 2026 The magnon-sagnac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#ifndef MAGNON_SAGNAC_OUTPUT_HPP
#define MAGNON_SAGNAC_OUTPUT_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "magnon_sagnac/error.hpp"
#include "magnon_sagnac/presets.hpp"
#include "magnon_sagnac/sweep.hpp"

namespace magnon_sagnac {

inline constexpr const char* kCsvHeader =
    "axis1,axis2,T12,T21,R,I_signed_db,I_abs_db,direction,error_code";

/// Scientific notation with 17 significant digits; non-finite values as
/// `inf`, `-inf`, `nan`. Locale-independent.
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

inline void write_csv(const SweepResult& result, std::ostream& out) {
  out << kCsvHeader << '\n';
  const bool two_d = result.axes.size() > 1;
  for (const SweepPoint& pt : result.points) {
    out << format_number(pt.axis1) << ',';
    if (two_d) out << format_number(pt.axis2);
    out << ',';
    if (pt.report) {
      const TransmissionReport& r = *pt.report;
      out << format_number(r.t12) << ',' << format_number(r.t21) << ',' << format_number(r.r)
          << ',' << format_number(r.i_signed_db) << ',' << format_number(r.i_abs_db) << ','
          << to_string(pt.direction);
    } else {
      out << ",,,,,";
    }
    out << ',' << pt.error_code << '\n';
  }
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "IO_ERROR", "cannot open '" + path + "' for writing");
  return out;
}

inline void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "IO_ERROR", "failed writing '" + path + "'");
}

inline void write_csv(const SweepResult& result, const std::string& path) {
  auto out = open_output(path);
  write_csv(result, out);
  finish_output(out, path);
}

inline void write_ridge_csv(const SweepResult& result, std::ostream& out) {
  out << "axis2,axis1,delta_f_mhz,I_abs_db,error_code\n";
  for (const RidgePoint& r : result.ridge) {
    out << format_number(r.axis2) << ',' << format_number(r.axis1) << ','
        << format_number(r.delta_f_mhz) << ',' << format_number(r.i_abs_db) << ','
        << r.error_code << '\n';
  }
}

namespace detail {

inline nlohmann::ordered_json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

}  // namespace detail

/// Array of records with the CSV columns; non-finite numbers become strings.
inline nlohmann::ordered_json to_json(const SweepResult& result) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  const bool two_d = result.axes.size() > 1;
  for (const SweepPoint& pt : result.points) {
    nlohmann::ordered_json rec;
    rec["axis1"] = detail::json_number(pt.axis1);
    rec["axis2"] = two_d ? detail::json_number(pt.axis2) : nlohmann::ordered_json(nullptr);
    if (pt.report) {
      rec["T12"] = detail::json_number(pt.report->t12);
      rec["T21"] = detail::json_number(pt.report->t21);
      rec["R"] = detail::json_number(pt.report->r);
      rec["I_signed_db"] = detail::json_number(pt.report->i_signed_db);
      rec["I_abs_db"] = detail::json_number(pt.report->i_abs_db);
      rec["direction"] = to_string(pt.direction);
    } else {
      for (const char* k : {"T12", "T21", "R", "I_signed_db", "I_abs_db", "direction"}) {
        rec[k] = nullptr;
      }
    }
    rec["error_code"] = pt.error_code;
    arr.push_back(std::move(rec));
  }
  return arr;
}

inline void write_json(const SweepResult& result, std::ostream& out) {
  out << to_json(result).dump(1) << '\n';
}

// ---------------------------------------------------------------------------
// SVG: polylines for curve families, rectangle cells for heatmaps. Heatmap
// colour is a linear ramp from #2c7bb6 (minimum) to #d7191c (maximum) of the
// finite I_abs values.
// ---------------------------------------------------------------------------

namespace detail {

inline double column_value(const SweepPoint& pt, const std::string& column) {
  if (!pt.report) return std::numeric_limits<double>::quiet_NaN();
  const TransmissionReport& r = *pt.report;
  if (column == "T12") return r.t12;
  if (column == "T21") return r.t21;
  if (column == "R") return r.r;
  if (column == "I_signed_db") return r.i_signed_db;
  return r.i_abs_db;
}

inline std::string svg_num(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

inline std::string ramp_colour(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(0x2c + t * (0xd7 - 0x2c)));
  const int g = static_cast<int>(std::lround(0x7b + t * (0x19 - 0x7b)));
  const int b = static_cast<int>(std::lround(0xb6 + t * (0x1c - 0xb6)));
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

inline const char* series_colour(std::size_t i) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  return palette[i % 8];
}

}  // namespace detail

inline void write_svg(const SweepResult& result, const FigurePreset& preset, std::ostream& out) {
  constexpr double width = 640, height = 420, left = 70, right = 20, top = 40, bottom = 50;
  const double pw = width - left - right;
  const double ph = height - top - bottom;
  const Axis& ax1 = result.axes.front();
  const std::size_t n1 = ax1.count;
  const std::size_t n2 = result.axes.size() > 1 ? result.axes[1].count : 1;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << preset.title << "</text>\n";

  if (preset.style == PlotStyle::Heatmap && result.axes.size() == 2) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& pt : result.points) {
      const double v = detail::column_value(pt, "I_abs_db");
      if (std::isfinite(v)) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    if (!(hi > lo)) hi = lo + 1.0;
    // at most ~150 cells per side; each drawn cell shows its first grid point
    const std::size_t s1 = (n1 + 149) / 150;
    const std::size_t s2 = (n2 + 149) / 150;
    const double cw = pw / static_cast<double>(n1);
    const double ch = ph / static_cast<double>(n2);
    for (std::size_t i2 = 0; i2 < n2; i2 += s2) {
      const std::size_t h2 = std::min(s2, n2 - i2);
      for (std::size_t i1 = 0; i1 < n1; i1 += s1) {
        const std::size_t w1 = std::min(s1, n1 - i1);
        const double v = detail::column_value(result.at(i1, i2), "I_abs_db");
        const std::string fill =
            std::isnan(v) ? "#bbbbbb" : detail::ramp_colour(std::isinf(v) ? 1.0 : (v - lo) / (hi - lo));
        out << "<rect x=\"" << detail::svg_num(left + cw * i1) << "\" y=\""
            << detail::svg_num(top + ph - ch * (i2 + h2)) << "\" width=\"" << detail::svg_num(cw * w1)
            << "\" height=\"" << detail::svg_num(ch * h2) << "\" fill=\"" << fill << "\"/>\n";
      }
    }
    out << "<text x=\"" << width - right << "\" y=\"" << top - 6
        << "\" text-anchor=\"end\" font-size=\"11\">I_abs_db " << detail::svg_num(lo) << " .. "
        << detail::svg_num(hi) << "</text>\n";
  } else {
    double ylo = std::numeric_limits<double>::infinity();
    double yhi = -ylo;
    for (const auto& pt : result.points) {
      for (const auto& c : preset.columns) {
        const double v = detail::column_value(pt, c);
        if (std::isfinite(v)) {
          ylo = std::min(ylo, v);
          yhi = std::max(yhi, v);
        }
      }
    }
    if (!(yhi > ylo)) yhi = ylo + 1.0;
    auto sx = [&](double x) { return left + pw * (x - ax1.min) / (ax1.max - ax1.min); };
    auto sy = [&](double y) { return top + ph - ph * (y - ylo) / (yhi - ylo); };
    std::size_t series = 0;
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
      for (const auto& c : preset.columns) {
        out << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\""
            << detail::series_colour(series++) << "\" points=\"";
        for (std::size_t i1 = 0; i1 < n1; ++i1) {
          const SweepPoint& pt = result.at(i1, i2);
          const double v = detail::column_value(pt, c);
          if (!std::isfinite(v)) continue;
          out << detail::svg_num(sx(pt.axis1)) << ',' << detail::svg_num(sy(v)) << ' ';
        }
        out << "\"/>\n";
      }
    }
    out << "<text x=\"" << left - 6 << "\" y=\"" << top + 4
        << "\" text-anchor=\"end\" font-size=\"11\">" << detail::svg_num(yhi) << "</text>\n";
    out << "<text x=\"" << left - 6 << "\" y=\"" << top + ph
        << "\" text-anchor=\"end\" font-size=\"11\">" << detail::svg_num(ylo) << "</text>\n";
  }

  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<text x=\"" << left << "\" y=\"" << height - 30 << "\" font-size=\"11\">"
      << detail::svg_num(ax1.min) << "</text>\n";
  out << "<text x=\"" << left + pw << "\" y=\"" << height - 30
      << "\" text-anchor=\"end\" font-size=\"11\">" << detail::svg_num(ax1.max) << "</text>\n";
  out << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-size=\"12\">" << ax1.label() << "</text>\n";
  if (result.axes.size() > 1) {
    const Axis& ax2 = result.axes[1];
    out << "<text x=\"14\" y=\"" << top + ph / 2 << "\" font-size=\"12\" transform=\"rotate(-90 14 "
        << top + ph / 2 << ")\" text-anchor=\"middle\">" << ax2.label() << " "
        << detail::svg_num(ax2.min) << " .. " << detail::svg_num(ax2.max) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace magnon_sagnac

#endif  // MAGNON_SAGNAC_OUTPUT_HPP
