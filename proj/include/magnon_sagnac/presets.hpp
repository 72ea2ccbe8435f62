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

#ifndef MAGNON_SAGNAC_PRESETS_HPP
#define MAGNON_SAGNAC_PRESETS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "magnon_sagnac/error.hpp"
#include "magnon_sagnac/model.hpp"
#include "magnon_sagnac/sweep.hpp"

namespace magnon_sagnac {

// Which CSV columns a figure plots. Heatmaps colour I_abs_db.
enum class PlotStyle { Lines, Heatmap };

struct FigurePreset {
  std::string name;
  std::string title;
  SystemParams base;
  std::vector<Axis> axes;
  SweepOptions options;
  PlotStyle style = PlotStyle::Lines;
  std::vector<std::string> columns;  // plotted columns for line plots
};

inline const std::vector<std::string>& figure_preset_names() {
  static const std::vector<std::string> names{"fig2a", "fig2b", "fig3a", "fig3b", "fig4a", "fig4b",
                                              "fig5a", "fig5b", "fig6",  "fig7a", "fig7b"};
  return names;
}

/// Parameter set and grid for one figure. All start from the symmetric
/// experimental set with omega_s = 0. Heatmap axes start at the parameter
/// value where the quoted maximum occurs, because |I| keeps growing as
/// gamma_m or kappa shrinks.
inline FigurePreset figure_preset(std::string_view name) {
  FigurePreset f;
  f.name = std::string(name);
  f.base = symmetric_params();
  f.options.preset = f.name;
  const double kappa = 1.1;
  const double gamma_m = 4.0;
  const double band = 65.0;

  if (name == "fig2a" || name == "fig2b") {
    f.axes = {{SweepParameter::DeltaF, -16.0, 16.0, 3201, SweepParameter::GammaM}};
    if (name == "fig2a") {
      f.title = "Transmission vs Delta_F/gamma_m";
      f.columns = {"T12", "T21"};
    } else {
      f.title = "Isolation vs Delta_F/gamma_m";
      f.columns = {"I_abs_db"};
    }
  } else if (name == "fig3a" || name == "fig3b") {
    const bool detuned = name == "fig3b";
    f.base.delta = Frequency::mhz(detuned ? 20.0 * kappa : 0.0);
    f.axes = {{SweepParameter::DeltaF, -band / kappa, band / kappa, 301, SweepParameter::Kappa},
              {SweepParameter::GammaM, detuned ? 1.503 : 1.5, 12.0, 301, std::nullopt}};
    f.title = detuned ? "Isolation vs Delta_F/kappa and gamma_m (Delta/kappa = 20)"
                      : "Isolation vs Delta_F/kappa and gamma_m (Delta = 0)";
    f.style = PlotStyle::Heatmap;
  } else if (name == "fig4a" || name == "fig4b") {
    const bool detuned = name == "fig4b";
    f.base.delta = Frequency::mhz(detuned ? 5.0 * gamma_m : 0.0);
    f.axes = {{SweepParameter::DeltaF, -band / gamma_m, band / gamma_m, 301, SweepParameter::GammaM},
              {SweepParameter::Kappa, detuned ? 0.112 : 0.114, 2.0, 301, std::nullopt}};
    f.title = detuned ? "Isolation vs Delta_F/gamma_m and kappa (Delta/gamma_m = 5)"
                      : "Isolation vs Delta_F/gamma_m and kappa (Delta = 0)";
    f.style = PlotStyle::Heatmap;
  } else if (name == "fig5a") {
    f.axes = {{SweepParameter::GammaM, 1.0, 12.0, 1101, std::nullopt},
              {SweepParameter::Delta, 0.0, 20.0 * kappa, 3, std::nullopt}};
    f.options.optimal = OptimalDeltaF{Branch::Positive, true};
    f.title = "Signed isolation at optimal Delta_F vs gamma_m (Delta/kappa = 0, 10, 20)";
    f.columns = {"I_signed_db"};
  } else if (name == "fig5b") {
    f.axes = {{SweepParameter::Kappa, 0.1, 5.0, 981, std::nullopt},
              {SweepParameter::Delta, 0.0, 20.0, 3, std::nullopt}};
    f.options.optimal = OptimalDeltaF{Branch::Positive, true};
    f.title = "Signed isolation at optimal Delta_F vs kappa (Delta = 0, 10, 20 MHz)";
    f.columns = {"I_signed_db"};
  } else if (name == "fig6") {
    f.axes = {{SweepParameter::GammaM, 1.0, 12.0, 1101, std::nullopt},
              {SweepParameter::G, 0.0, 1.0, 5, std::nullopt}};
    f.options.optimal = OptimalDeltaF{Branch::Positive, false};
    f.title = "Maximum isolation vs gamma_m for G = 0 ... 1";
    f.columns = {"I_abs_db"};
  } else if (name == "fig7a" || name == "fig7b") {
    const bool negative = name == "fig7b";
    f.axes = {{SweepParameter::GammaM, 1.0, 12.0, 1101, std::nullopt},
              {SweepParameter::G2OverG1, 0.5, 2.0, 4, std::nullopt}};
    f.options.optimal = OptimalDeltaF{negative ? Branch::Negative : Branch::Positive, true};
    f.title = negative ? "Maximum isolation for Delta_F < 0 vs gamma_m, g2'/g1' = 0.5 ... 2"
                       : "Maximum isolation for Delta_F > 0 vs gamma_m, g2'/g1' = 0.5 ... 2";
    f.columns = {"I_abs_db"};
  } else {
    throw validation_error("UNKNOWN_PRESET", "unknown figure preset '" + std::string(name) + "'");
  }
  return f;
}

inline SweepResult run_preset(const FigurePreset& f, unsigned threads = 0) {
  SweepOptions opt = f.options;
  opt.threads = threads;
  return sweep(f.base, f.axes, opt);
}

}  // namespace magnon_sagnac

#endif  // MAGNON_SAGNAC_PRESETS_HPP
