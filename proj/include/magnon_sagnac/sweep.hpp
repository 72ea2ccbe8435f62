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

#ifndef MAGNON_SAGNAC_SWEEP_HPP
#define MAGNON_SAGNAC_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <ctime>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "magnon_sagnac/analysis.hpp"
#include "magnon_sagnac/error.hpp"
#include "magnon_sagnac/model.hpp"
#include "magnon_sagnac/steady_state.hpp"
#include "magnon_sagnac/version.hpp"

namespace magnon_sagnac {

enum class SweepParameter { DeltaF, GammaM, Kappa, Delta, G, G2OverG1, OmegaS };

inline const char* to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::DeltaF: return "delta_f";
    case SweepParameter::GammaM: return "gamma_m";
    case SweepParameter::Kappa: return "kappa";
    case SweepParameter::Delta: return "delta";
    case SweepParameter::G: return "G";
    case SweepParameter::G2OverG1: return "g2_over_g1";
    case SweepParameter::OmegaS: return "omega_s";
  }
  return "?";
}

inline std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) {
  for (SweepParameter p : {SweepParameter::DeltaF, SweepParameter::GammaM, SweepParameter::Kappa,
                           SweepParameter::Delta, SweepParameter::G, SweepParameter::G2OverG1,
                           SweepParameter::OmegaS}) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

// Current value of a sweepable quantity (MHz for frequencies).
inline double parameter_value(const SystemParams& p, SweepParameter which) {
  switch (which) {
    case SweepParameter::DeltaF: return p.delta_f.mhz();
    case SweepParameter::GammaM: return p.magnon.gamma_m.mhz();
    case SweepParameter::Kappa: return p.cavity_1.kappa_total.mhz();
    case SweepParameter::Delta: return p.delta.mhz();
    case SweepParameter::G: return p.squeeze.G;
    case SweepParameter::G2OverG1: return p.g0_2 / p.g0_1;
    case SweepParameter::OmegaS:
      return p.squeeze.omega_s_override ? p.squeeze.omega_s_override->mhz()
                                        : derive_effective(p).omega_s.mhz();
  }
  return 0.0;
}

inline void set_parameter(SystemParams& p, SweepParameter which, double value) {
  switch (which) {
    case SweepParameter::DeltaF: p.delta_f = Frequency::mhz(value); break;
    case SweepParameter::GammaM: p.magnon.gamma_m = Frequency::mhz(value); break;
    case SweepParameter::Kappa: set_kappa(p, Frequency::mhz(value)); break;
    case SweepParameter::Delta: p.delta = Frequency::mhz(value); break;
    case SweepParameter::G:
      p.squeeze.mode = SqueezeMode::DirectG;
      p.squeeze.G = value;
      break;
    case SweepParameter::G2OverG1: p.g0_2 = p.g0_1 * value; break;
    case SweepParameter::OmegaS: p.squeeze.omega_s_override = Frequency::mhz(value); break;
  }
}

// Uniform grid over one parameter. With a normalization the axis values are
// in units of that parameter (e.g. Delta_F / gamma_m), resolved per point.
struct Axis {
  SweepParameter parameter = SweepParameter::DeltaF;
  double min = 0.0;
  double max = 1.0;
  std::size_t count = 2;
  std::optional<SweepParameter> normalization{};

  double value(std::size_t i) const {
    if (i + 1 == count) return max;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
  }

  std::string label() const {
    std::string s = to_string(parameter);
    if (normalization) s += std::string("/") + to_string(*normalization);
    return s;
  }
};

struct OptimalDeltaF {
  Branch branch = Branch::Positive;
  bool clamp = true;  // restrict to SweepOptions::band
};

struct SweepOptions {
  // When set, every point first moves Delta_F to the branch optimum.
  std::optional<OptimalDeltaF> optimal;
  Band band = Band::feasible();
  unsigned threads = 0;  // 0 = hardware concurrency
  bool ridge = true;     // per-row refined maximum for Delta_F x p heatmaps
  std::string preset;
};

struct ResolvedPoint {
  double delta_f_mhz = 0.0;
  double gamma_m_mhz = 0.0;
  double kappa_mhz = 0.0;
  double delta_mhz = 0.0;
  double G = 0.0;
  double g2_over_g1 = 1.0;
  double omega_s_mhz = 0.0;
};

struct SweepPoint {
  double axis1 = 0.0;
  double axis2 = std::numeric_limits<double>::quiet_NaN();  // NaN for 1D sweeps
  ResolvedPoint resolved;
  std::optional<TransmissionReport> report;
  Direction direction = Direction::Reciprocal;
  std::string error_code;  // empty on success; INF_ISOLATION keeps the report
};

// Maximum of |I| along the Delta_F axis for one value of the second axis,
// located by brute_force_optimum over that row's Delta_F range.
struct RidgePoint {
  double axis2 = 0.0;
  double delta_f_mhz = 0.0;
  double axis1 = 0.0;  // delta_f in axis-1 units
  double i_abs_db = 0.0;
  std::string error_code;
};

struct SweepMeta {
  std::string preset;
  std::string timestamp;
  std::string tool_version = kVersion;
};

struct SweepResult {
  std::vector<Axis> axes;
  SystemParams base;
  std::vector<SweepPoint> points;  // row-major: axis2 outer, axis1 inner
  std::vector<RidgePoint> ridge;
  SweepMeta meta;

  const SweepPoint& at(std::size_t i1, std::size_t i2 = 0) const {
    return points[i2 * axes.front().count + i1];
  }
};

namespace detail {

inline void check_axes(const std::vector<Axis>& axes, const SweepOptions& opt) {
  if (axes.empty() || axes.size() > 2) {
    throw validation_error("INVALID_AXIS", "a sweep takes one or two axes");
  }
  for (const Axis& a : axes) {
    if (a.count < 2) throw validation_error("INVALID_AXIS", "axis count must be >= 2");
    if (!std::isfinite(a.min) || !std::isfinite(a.max) || !(a.min < a.max)) {
      throw validation_error("INVALID_AXIS", "axis needs finite min < max");
    }
    if (a.normalization && (*a.normalization == a.parameter ||
                            *a.normalization == SweepParameter::DeltaF)) {
      throw validation_error("INVALID_AXIS", "invalid axis normalization");
    }
    if (opt.optimal && a.parameter == SweepParameter::DeltaF) {
      throw validation_error("INVALID_AXIS", "delta_f cannot be swept when it is optimised");
    }
  }
  if (axes.size() == 2 && axes[0].parameter == axes[1].parameter) {
    throw validation_error("INVALID_AXIS", "axes must sweep different parameters");
  }
}

// Applies axis values: plain axes first, then normalized ones so their
// divisor reflects the other axis.
inline SystemParams resolve(const SystemParams& base, const std::vector<Axis>& axes,
                            const std::vector<double>& values) {
  SystemParams p = base;
  for (std::size_t k = 0; k < axes.size(); ++k) {
    if (!axes[k].normalization) set_parameter(p, axes[k].parameter, values[k]);
  }
  for (std::size_t k = 0; k < axes.size(); ++k) {
    if (axes[k].normalization) {
      set_parameter(p, axes[k].parameter, values[k] * parameter_value(p, *axes[k].normalization));
    }
  }
  return p;
}

inline ResolvedPoint describe(const SystemParams& p) {
  ResolvedPoint r;
  r.delta_f_mhz = p.delta_f.mhz();
  r.gamma_m_mhz = p.magnon.gamma_m.mhz();
  r.kappa_mhz = p.cavity_1.kappa_total.mhz();
  r.delta_mhz = p.delta.mhz();
  r.omega_s_mhz = p.squeeze.omega_s_override ? p.squeeze.omega_s_override->mhz() : 0.0;
  try {
    const EffectiveParams eff = derive_effective(p);
    r.G = eff.G;
    r.omega_s_mhz = eff.omega_s.mhz();
  } catch (const Error&) {
    r.G = p.squeeze.G;
  }
  r.g2_over_g1 = p.g0_1.mhz() != 0.0 ? p.g0_2 / p.g0_1 : std::numeric_limits<double>::quiet_NaN();
  return r;
}

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs body(i) for i in [0, n) on up to `threads` workers. Each index is
// written by exactly one worker, so results do not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline SweepPoint evaluate_point(const SystemParams& base, const std::vector<Axis>& axes,
                                 const std::vector<double>& values, const SweepOptions& opt) {
  SweepPoint pt;
  pt.axis1 = values[0];
  if (values.size() > 1) pt.axis2 = values[1];
  SystemParams p = resolve(base, axes, values);
  try {
    const auto violations = validate(p);
    if (!violations.empty()) {
      pt.resolved = describe(p);
      pt.error_code = violations.front().code;
      return pt;
    }
    if (opt.optimal) {
      p.delta_f = optimal_delta_f(p, opt.optimal->branch, opt.band, opt.optimal->clamp).delta_f;
    }
    pt.resolved = describe(p);
    const TransmissionReport rep = transmissions(p);
    pt.direction = classify_direction(rep);
    if (rep.infinite_isolation) pt.error_code = "INF_ISOLATION";
    pt.report = rep;
  } catch (const Error& e) {
    pt.resolved = describe(p);
    pt.error_code = e.code();
  }
  return pt;
}

}  // namespace detail

/// Evaluates transmissions on the uniform grid spanned by `axes`. Failing
/// points carry an error code and do not stop the sweep; a sweep in which
/// every point fails throws ALL_POINTS_FAILED.
inline SweepResult sweep(const SystemParams& base, const std::vector<Axis>& axes,
                         const SweepOptions& opt = {}) {
  detail::check_axes(axes, opt);
  SweepResult result;
  result.axes = axes;
  result.base = base;
  result.meta.preset = opt.preset;
  result.meta.timestamp = detail::utc_timestamp();

  const std::size_t n1 = axes[0].count;
  const std::size_t n2 = axes.size() > 1 ? axes[1].count : 1;
  result.points.resize(n1 * n2);
  const unsigned threads = detail::resolve_threads(opt.threads);

  detail::parallel_for(n1 * n2, threads, [&](std::size_t idx) {
    const std::size_t i1 = idx % n1;
    const std::size_t i2 = idx / n1;
    std::vector<double> values{axes[0].value(i1)};
    if (axes.size() > 1) values.push_back(axes[1].value(i2));
    result.points[idx] = detail::evaluate_point(base, axes, values, opt);
  });

  const bool any_ok = std::any_of(result.points.begin(), result.points.end(),
                                  [](const SweepPoint& p) { return p.report.has_value(); });
  if (!any_ok) throw physics_error("ALL_POINTS_FAILED", "every sweep point failed");

  if (opt.ridge && !opt.optimal && axes.size() == 2 &&
      axes[0].parameter == SweepParameter::DeltaF) {
    result.ridge.resize(n2);
    detail::parallel_for(n2, threads, [&](std::size_t i2) {
      RidgePoint rp;
      rp.axis2 = axes[1].value(i2);
      SystemParams p = detail::resolve(base, axes, {axes[0].min, rp.axis2});
      const double scale =
          axes[0].normalization ? parameter_value(p, *axes[0].normalization) : 1.0;
      try {
        require_valid(p);
        const Band row{Frequency::mhz(axes[0].min * scale), Frequency::mhz(axes[0].max * scale)};
        const Optimum best = brute_force_optimum(p, row);
        rp.delta_f_mhz = best.delta_f.mhz();
        rp.axis1 = rp.delta_f_mhz / scale;
        rp.i_abs_db = best.i_abs_db;
      } catch (const Error& e) {
        rp.error_code = e.code();
        rp.i_abs_db = std::numeric_limits<double>::quiet_NaN();
      }
      result.ridge[i2] = rp;
    });
  }
  return result;
}

}  // namespace magnon_sagnac

#endif  // MAGNON_SAGNAC_SWEEP_HPP
