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

#ifndef MAGNON_SAGNAC_CLI_HPP
#define MAGNON_SAGNAC_CLI_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "magnon_sagnac/analysis.hpp"
#include "magnon_sagnac/config.hpp"
#include "magnon_sagnac/error.hpp"
#include "magnon_sagnac/model.hpp"
#include "magnon_sagnac/output.hpp"
#include "magnon_sagnac/presets.hpp"
#include "magnon_sagnac/steady_state.hpp"
#include "magnon_sagnac/sweep.hpp"
#include "magnon_sagnac/version.hpp"

namespace magnon_sagnac::cli {

enum ExitCode : int { kOk = 0, kPhysics = 1, kIo = 2, kUsage = 3 };

namespace detail {

using ordered_json = nlohmann::ordered_json;

// Collects name/value pairs and prints them as `name = value` lines or as a
// JSON object, depending on --format.
class Report {
 public:
  void add(const std::string& key, double v) { j_[key] = magnon_sagnac::detail::json_number(v); text_.emplace_back(key, format_number(v)); }
  void add(const std::string& key, const std::string& v) { j_[key] = v; text_.emplace_back(key, v); }
  void add(const std::string& key, bool v) { j_[key] = v; text_.emplace_back(key, v ? "true" : "false"); }

  void print(std::ostream& out, bool as_json) const {
    if (as_json) {
      out << j_.dump(1) << '\n';
      return;
    }
    for (const auto& [k, v] : text_) out << k << " = " << v << '\n';
  }

 private:
  ordered_json j_ = ordered_json::object();
  std::vector<std::pair<std::string, std::string>> text_;
};

inline unsigned threads_from_env() {
  const char* env = std::getenv("MAGNON_SAGNAC_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  try {
    return static_cast<unsigned>(std::stoul(env));
  } catch (const std::exception&) {
    throw Error(ErrorKind::Usage, "BAD_ENV", "MAGNON_SAGNAC_THREADS must be a non-negative integer");
  }
}

// param:min:max:count[:normalization]
inline Axis parse_axis(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  auto bad = [&] {
    return Error(ErrorKind::Usage, "BAD_AXIS",
                 "axis must look like param:min:max:count[:normalization], got '" + spec + "'");
  };
  if (parts.size() != 4 && parts.size() != 5) throw bad();
  Axis a;
  const auto param = parse_sweep_parameter(parts[0]);
  if (!param) throw bad();
  a.parameter = *param;
  try {
    a.min = std::stod(parts[1]);
    a.max = std::stod(parts[2]);
    a.count = static_cast<std::size_t>(std::stoul(parts[3]));
  } catch (const std::exception&) {
    throw bad();
  }
  if (parts.size() == 5) {
    const auto norm = parse_sweep_parameter(parts[4]);
    if (!norm) throw bad();
    a.normalization = *norm;
  }
  return a;
}

inline Band parse_band(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("band");
    return {Frequency::mhz(std::stod(text.substr(0, comma))),
            Frequency::mhz(std::stod(text.substr(comma + 1)))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::Usage, "BAD_BAND", "--band expects min,max in MHz, got '" + text + "'");
  }
}

inline void require_valid_params(const SystemParams& p) {
  const auto violations = validate(p);
  if (violations.empty()) return;
  std::string msg = "invalid parameters:";
  for (const auto& v : violations) msg += " " + v.code + " (" + v.message + ");";
  throw validation_error(violations.front().code, msg);
}

inline Solver parse_solver(const std::string& s) {
  return s == "generic" ? Solver::Generic : Solver::ClosedForm;
}

}  // namespace detail

/// Entry point of the command-line tool. Exit codes: 0 success, 1 validation
/// or physics error, 2 I/O error, 3 unknown command or flag.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Nonreciprocal transmission of a spinning WGM cavity coupled to a squeezed magnon mode",
               "magnon_sagnac"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> config_path;
  std::vector<std::string> overrides;
  std::string format = "csv";
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--set", overrides, "Override a config key, e.g. --set delta_f_mhz=33.18")
      ->take_all()
      ->allow_extra_args(false);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto* fizeau_cmd = app.add_subcommand("fizeau", "Fizeau shift from the rotation block");
  bool first_term_only = false;
  fizeau_cmd->add_flag("--first-term-only", first_term_only, "Keep only the leading 1 of the bracket");

  auto* steady_cmd = app.add_subcommand("steady", "Steady-state amplitudes for one driven port");
  std::string side = "left";
  std::string solver = "closed";
  steady_cmd->add_option("--side", side, "Driven port")->check(CLI::IsMember({"left", "right"}));
  steady_cmd->add_option("--solver", solver, "Solver")->check(CLI::IsMember({"closed", "generic"}));

  auto* isolate_cmd = app.add_subcommand("isolate", "Transmissions and isolation");
  isolate_cmd->add_option("--solver", solver, "Solver")->check(CLI::IsMember({"closed", "generic"}));

  auto* optimize_cmd = app.add_subcommand("optimize", "Fizeau shift maximising the isolation");
  std::optional<std::string> band_text;
  bool analytic = false;
  bool brute = false;
  optimize_cmd->add_option("--band", band_text, "Search band min,max in MHz");
  auto* analytic_flag = optimize_cmd->add_flag("--analytic", analytic, "Closed-form extremum");
  auto* brute_flag = optimize_cmd->add_flag("--brute", brute, "Grid + golden-section search");
  analytic_flag->excludes(brute_flag);

  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a 1D or 2D parameter grid");
  std::string axis1_text;
  std::optional<std::string> axis2_text;
  std::string sweep_out;
  std::optional<std::string> ridge_out;
  std::optional<std::string> optimal_text;
  bool unclamped = false;
  std::optional<unsigned> threads_opt;
  sweep_cmd->add_option("--axis", axis1_text, "param:min:max:count[:normalization]")->required();
  sweep_cmd->add_option("--axis2", axis2_text, "Second axis");
  sweep_cmd->add_option("--out", sweep_out, "Output file")->required();
  sweep_cmd->add_option("--ridge-out", ridge_out, "Per-row maximum along a delta_f first axis");
  sweep_cmd->add_option("--optimal", optimal_text, "Move delta_f to the branch optimum per point")
      ->check(CLI::IsMember({"positive", "negative"}));
  sweep_cmd->add_flag("--unclamped", unclamped, "Ignore band_mhz for --optimal");
  sweep_cmd->add_option("--threads", threads_opt, "Worker threads (0 = auto)");

  auto* reproduce_cmd = app.add_subcommand("reproduce", "Regenerate one figure's data and plot");
  std::string figure;
  std::string out_dir;
  reproduce_cmd->add_option("figure", figure, "Figure preset")
      ->required()
      ->check(CLI::IsMember(figure_preset_names()));
  reproduce_cmd->add_option("--out", out_dir, "Output directory")->required();
  reproduce_cmd->add_option("--threads", threads_opt, "Worker threads (0 = auto)");

  auto* validate_cmd = app.add_subcommand("validate", "Check the resolved parameters");
  bool print_resolved = false;
  validate_cmd->add_flag("--print-resolved", print_resolved, "Print the resolved configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(kVersion) + "\n"
                                                            : app.help());
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const bool as_json = format == "json";
  try {
    const ConfigDocument cfg = resolve_config(config_path, overrides);

    if (*fizeau_cmd) {
      const RotationSpec rot = rotation_spec(cfg);
      const auto violations = validate(rot);
      if (!violations.empty()) throw validation_error(violations.front().code, violations.front().message);
      const bool first_only = first_term_only;
      const Frequency shift = fizeau_shift(rot, first_only);
      detail::Report rep;
      rep.add("delta_f_a1_mhz", shift.mhz());
      rep.add("delta_f_a2_mhz", -shift.mhz());
      rep.add("first_term_only", first_only);
      rep.print(out, as_json);
      return kOk;
    }

    if (*validate_cmd) {
      if (print_resolved) out << config_to_json(cfg).dump(2) << '\n';
      const SystemParams p = to_system_params(cfg);
      auto violations = validate(p);
      if (cfg.rotation) {
        for (auto& v : validate(rotation_spec(cfg))) violations.push_back(v);
      }
      if (!(cfg.band_mhz[0] < cfg.band_mhz[1])) {
        violations.push_back({"EMPTY_BAND", "band_mhz must satisfy min < max"});
      }
      if (violations.empty()) {
        out << "valid\n";
        return kOk;
      }
      for (const auto& v : violations) out << v.code << ": " << v.message << '\n';
      return kPhysics;
    }

    const SystemParams params = to_system_params(cfg);
    detail::require_valid_params(params);

    if (*steady_cmd) {
      const DriveSide ds = side == "left" ? DriveSide::Left : DriveSide::Right;
      const SteadyState s = solve(params, ds, detail::parse_solver(solver));
      const auto residuals = langevin_residuals(s, params, ds);
      const OutputFields o = output_fields(s, params);
      detail::Report rep;
      rep.add("side", side);
      rep.add("A1_re", s.a1.real());
      rep.add("A1_im", s.a1.imag());
      rep.add("A2_re", s.a2.real());
      rep.add("A2_im", s.a2.imag());
      rep.add("M_re", s.m.real());
      rep.add("M_im", s.m.imag());
      rep.add("A1_out_abs", std::abs(o.a1_out));
      rep.add("A2_out_abs", std::abs(o.a2_out));
      rep.add("residual_1", residuals[0]);
      rep.add("residual_2", residuals[1]);
      rep.add("residual_3", residuals[2]);
      rep.print(out, as_json);
      return kOk;
    }

    if (*isolate_cmd) {
      const TransmissionReport r = transmissions(params, detail::parse_solver(solver));
      detail::Report rep;
      rep.add("delta_f_mhz", params.delta_f.mhz());
      rep.add("T12", r.t12);
      rep.add("T21", r.t21);
      rep.add("R", r.r);
      rep.add("I_db", r.i_abs_db);
      rep.add("I_signed_db", r.i_signed_db);
      rep.add("direction", std::string(to_string(classify_direction(r))));
      if (r.infinite_isolation) rep.add("error_code", std::string("INF_ISOLATION"));
      rep.print(out, as_json);
      return kOk;
    }

    if (*optimize_cmd) {
      const Band b = band_text ? detail::parse_band(*band_text) : band(cfg);
      if (b.empty()) throw validation_error("EMPTY_BAND", "band must satisfy min < max");
      const bool closed_form_ok = has_symmetric_ports(params);
      if (analytic && !closed_form_ok) {
        throw validation_error("USE_GENERAL_FORM",
                               "analytic optimum needs equal kappa, eta and drives on both ports");
      }
      detail::Report rep;
      if (!brute && closed_form_ok) {
        const GeneralExtremumReport ext = extremal_fizeau_general(params, b);
        std::optional<std::pair<Frequency, double>> best;
        for (const auto& [df, r] : {std::pair{ext.delta_f_1, ext.r_1}, std::pair{ext.delta_f_2, ext.r_2}}) {
          if (!b.contains(df)) continue;
          const double i_db = std::abs(10.0 * std::log10(r));
          if (!best || i_db > best->second * (1.0 + 1e-12)) best = std::pair{df, i_db};
        }
        if (!best) {
          throw physics_error("NO_EXTREMUM_IN_BAND", "neither analytic extremum lies inside the band");
        }
        rep.add("method", std::string("analytic"));
        rep.add("delta_f_mhz", best->first.mhz());
        rep.add("I_db", best->second);
      } else {
        const Optimum o = brute_force_optimum(params, b);
        rep.add("method", std::string("brute"));
        rep.add("delta_f_mhz", o.delta_f.mhz());
        rep.add("I_db", o.i_abs_db);
      }
      rep.print(out, as_json);
      return kOk;
    }

    const unsigned threads = threads_opt ? *threads_opt : detail::threads_from_env();

    if (*sweep_cmd) {
      std::vector<Axis> axes{detail::parse_axis(axis1_text)};
      if (axis2_text) axes.push_back(detail::parse_axis(*axis2_text));
      SweepOptions opt;
      opt.threads = threads;
      opt.band = band(cfg);
      if (optimal_text) {
        opt.optimal = OptimalDeltaF{*optimal_text == "negative" ? Branch::Negative : Branch::Positive,
                                    !unclamped};
      }
      opt.ridge = ridge_out.has_value();
      const SweepResult result = sweep(params, axes, opt);
      auto file = open_output(sweep_out);
      if (as_json) {
        write_json(result, file);
      } else {
        write_csv(result, file);
      }
      finish_output(file, sweep_out);
      if (ridge_out) {
        auto rf = open_output(*ridge_out);
        write_ridge_csv(result, rf);
        finish_output(rf, *ridge_out);
      }
      out << "wrote " << result.points.size() << " points to " << sweep_out << '\n';
      return kOk;
    }

    if (*reproduce_cmd) {
      const FigurePreset preset = figure_preset(figure);
      const SweepResult result = run_preset(preset, threads);
      std::error_code ec;
      std::filesystem::create_directories(out_dir, ec);
      if (ec) throw Error(ErrorKind::Io, "IO_ERROR", "cannot create '" + out_dir + "': " + ec.message());
      const std::filesystem::path dir(out_dir);
      const std::string data_path = (dir / (figure + (as_json ? ".json" : ".csv"))).string();
      auto data = open_output(data_path);
      if (as_json) {
        write_json(result, data);
      } else {
        write_csv(result, data);
      }
      finish_output(data, data_path);
      const std::string svg_path = (dir / (figure + ".svg")).string();
      auto svg = open_output(svg_path);
      write_svg(result, preset, svg);
      finish_output(svg, svg_path);
      out << "wrote " << data_path << '\n' << "wrote " << svg_path << '\n';
      if (!result.ridge.empty()) {
        const std::string ridge_path = (dir / (figure + "_ridge.csv")).string();
        auto rf = open_output(ridge_path);
        write_ridge_csv(result, rf);
        finish_output(rf, ridge_path);
        out << "wrote " << ridge_path << '\n';
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error [" << e.code() << "]: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Io: return kIo;
      case ErrorKind::Usage: return kUsage;
      default: return kPhysics;
    }
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace magnon_sagnac::cli

#endif  // MAGNON_SAGNAC_CLI_HPP
