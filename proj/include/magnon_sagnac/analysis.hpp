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

#ifndef MAGNON_SAGNAC_ANALYSIS_HPP
#define MAGNON_SAGNAC_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <string>

#include "magnon_sagnac/error.hpp"
#include "magnon_sagnac/golden_section.hpp"
#include "magnon_sagnac/model.hpp"
#include "magnon_sagnac/steady_state.hpp"

namespace magnon_sagnac {

// Closed interval of Fizeau shifts. Mechanical spin rates below ~10 kHz keep
// |Delta_F| within about 65 MHz, hence the default.
struct Band {
  Frequency lo = Frequency::mhz(-65.0);
  Frequency hi = Frequency::mhz(65.0);

  bool contains(Frequency f) const { return lo <= f && f <= hi; }
  bool empty() const { return !(lo < hi); }

  static Band feasible() { return {}; }
};

struct ExtremumReport {
  Frequency delta_f_1;  // positive root
  Frequency delta_f_2;  // negative root
  double r_1 = 1.0;
  double r_2 = 1.0;
  double i_db = 0.0;
  bool in_band_1 = true;
  bool in_band_2 = true;
};

struct GeneralExtremumReport {
  double u1 = 0.0;  // MHz
  double u2 = 0.0;  // MHz^2
  Frequency delta_f_1;
  Frequency delta_f_2;
  double r_1 = 1.0;
  double r_2 = 1.0;
  bool in_band_1 = true;
  bool in_band_2 = true;
};

struct ReciprocalPoints {
  Frequency gamma0;
  Frequency kappa0;
  bool matched = false;
  bool finite = true;
};

struct Optimum {
  Frequency delta_f;
  double i_abs_db = 0.0;
};

enum class Direction { Forward, Backward, Reciprocal };

inline const char* to_string(Direction d) {
  switch (d) {
    case Direction::Forward: return "FORWARD";
    case Direction::Backward: return "BACKWARD";
    case Direction::Reciprocal: return "RECIPROCAL";
  }
  return "?";
}

namespace detail {

inline bool same_rel(double a, double b, double rel = 1e-12) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace detail

/// True when both cavity modes share kappa and eta, both optical drives are
/// equal and the magnon drive term matches (eta3 eps3'^2 = eta eps^2). These
/// are the conditions the closed-form extremum expressions rely on.
inline bool has_symmetric_ports(const SystemParams& p) {
  const EffectiveParams eff = derive_effective(p);
  const double eps3 = p.drives.eps3_eff(eff);
  return detail::same_rel(p.cavity_1.kappa_total.mhz(), p.cavity_2.kappa_total.mhz()) &&
         detail::same_rel(p.cavity_1.eta, p.cavity_2.eta) &&
         detail::same_rel(p.drives.eps_1, p.drives.eps_2) &&
         detail::same_rel(p.magnon.eta3 * eps3 * eps3,
                          p.cavity_1.eta * p.drives.eps_1 * p.drives.eps_1);
}

inline bool has_equal_couplings(const SystemParams& p) {
  return detail::same_rel(p.g0_1.mhz(), p.g0_2.mhz());
}

namespace detail {

// Intensity ratio at the extrema. With a = Delta - g1' sqrt(kappa/gamma_m),
// b = Delta - g2' sqrt(kappa/gamma_m), w = a + b and q = sqrt(w^2 + kappa^2),
// the ratio at the root (b - a + q)/2 is (g1'/g2')^2 (q - w)/(q + w) and at the
// other root its (g1'/g2')^2-scaled reciprocal. Written so that neither branch
// subtracts nearly equal numbers.
inline std::pair<double, double> extremal_ratios(double w, double kappa, double coupling_ratio_sq) {
  const double q = std::hypot(w, kappa);
  const double k2 = kappa * kappa;
  double plus = 0.0;  // (q - w)/(q + w)
  if (w >= 0.0) {
    plus = k2 / ((q + w) * (q + w));
  } else {
    plus = (q - w) * (q - w) / k2;
  }
  return {coupling_ratio_sq * plus, coupling_ratio_sq / plus};
}

}  // namespace detail

/// Analytic extrema of R(Delta_F) for the symmetric configuration:
/// Delta_F = +-sqrt(kappa^2/4 + u^2), u = Delta - g' sqrt(kappa/gamma_m), with
/// R(+) = (s - u)/(s + u) and R(-) = 1/R(+).
inline ExtremumReport extremal_fizeau_symmetric(const SystemParams& p, Band band = Band::feasible()) {
  if (!has_symmetric_ports(p) || !has_equal_couplings(p)) {
    throw validation_error("USE_GENERAL_FORM",
                           "symmetric extremum needs equal kappa, eta, drives and couplings; "
                           "use the general form");
  }
  const EffectiveParams eff = derive_effective(p);
  const double kappa = p.cavity_1.kappa_total.mhz();
  const double gm = p.magnon.gamma_m.mhz();
  const double u = p.delta.mhz() - eff.g_eff_1.mhz() * std::sqrt(kappa / gm);
  const double s = std::hypot(kappa / 2.0, u);

  ExtremumReport rep;
  rep.delta_f_1 = Frequency::mhz(s);
  rep.delta_f_2 = Frequency::mhz(-s);
  const auto [r1, r2] = detail::extremal_ratios(2.0 * u, kappa, 1.0);
  rep.r_1 = r1;
  rep.r_2 = r2;
  rep.i_db = std::abs(10.0 * std::log10(r1));
  rep.in_band_1 = band.contains(rep.delta_f_1);
  rep.in_band_2 = band.contains(rep.delta_f_2);
  return rep;
}

/// Extrema of R(Delta_F) for unequal couplings g1' != g2' (equal kappa, eta
/// and drives): Delta_F = (U1 +- sqrt(U1^2 + U2))/2 with
/// U1 = sqrt(kappa/gamma_m)(g1' - g2') and
/// U2 = kappa^2 + 4(Delta - g1' sqrt(kappa/gamma_m))(Delta - g2' sqrt(kappa/gamma_m)).
inline GeneralExtremumReport extremal_fizeau_general(const SystemParams& p,
                                                     Band band = Band::feasible()) {
  if (!has_symmetric_ports(p)) {
    throw validation_error("USE_GENERAL_FORM",
                           "extremum formula needs equal kappa, eta and drives on both ports");
  }
  const EffectiveParams eff = derive_effective(p);
  const double kappa = p.cavity_1.kappa_total.mhz();
  const double root = std::sqrt(kappa / p.magnon.gamma_m.mhz());
  const double g1 = eff.g_eff_1.mhz();
  const double g2 = eff.g_eff_2.mhz();
  const double delta = p.delta.mhz();
  const double a = delta - g1 * root;
  const double b = delta - g2 * root;

  GeneralExtremumReport rep;
  rep.u1 = root * (g1 - g2);
  rep.u2 = kappa * kappa + 4.0 * a * b;
  const double disc = rep.u1 * rep.u1 + rep.u2;
  if (disc < 0.0) {
    std::ostringstream msg;
    msg << "no real extremum: U1^2 + U2 = " << disc << " < 0 (complex roots share real part "
        << rep.u1 / 2.0 << " MHz)";
    throw physics_error("NO_REAL_EXTREMUM", msg.str());
  }
  if (g2 == 0.0) {
    throw physics_error("NO_REAL_EXTREMUM", "no real extremum: g2' = 0 leaves R unbounded");
  }
  const double sq = std::sqrt(disc);
  rep.delta_f_1 = Frequency::mhz(0.5 * (rep.u1 + sq));
  rep.delta_f_2 = Frequency::mhz(0.5 * (rep.u1 - sq));
  const auto [r1, r2] = detail::extremal_ratios(a + b, kappa, (g1 / g2) * (g1 / g2));
  rep.r_1 = r1;
  rep.r_2 = r2;
  rep.in_band_1 = band.contains(rep.delta_f_1);
  rep.in_band_2 = band.contains(rep.delta_f_2);
  return rep;
}

/// Parameter values satisfying the impedance-matching condition
/// Delta = g' sqrt(kappa/gamma_m): gamma0 = g'^2 kappa / Delta^2 and
/// kappa0 = Delta^2 gamma_m / g'^2. The identity needs Delta > 0; otherwise
/// no finite point exists.
inline ReciprocalPoints reciprocal_points(const SystemParams& p) {
  const EffectiveParams eff = derive_effective(p);
  const double g = eff.g_eff_1.mhz();
  const double kappa = p.cavity_1.kappa_total.mhz();
  const double gm = p.magnon.gamma_m.mhz();
  const double delta = p.delta.mhz();

  ReciprocalPoints rp;
  if (!(delta > 0.0)) {
    rp.gamma0 = Frequency::mhz(std::numeric_limits<double>::infinity());
    rp.kappa0 = rp.gamma0;
    rp.finite = false;
    rp.matched = false;
    return rp;
  }
  rp.gamma0 = Frequency::mhz(g * g * kappa / (delta * delta));
  rp.kappa0 = Frequency::mhz(delta * delta * gm / (g * g));
  rp.matched = std::abs(delta - g * std::sqrt(kappa / gm)) <= 1e-9 * std::max(std::abs(delta), g);
  return rp;
}

/// Isolation |I| at a given Fizeau shift, leaving every other parameter of
/// `p` unchanged.
inline TransmissionReport transmissions_at(SystemParams p, Frequency delta_f,
                                           Solver solver = Solver::ClosedForm) {
  p.delta_f = delta_f;
  return transmissions(p, solver);
}

/// Grid-plus-golden-section maximisation of |I| over `band`. Used as the
/// numerical check of the analytic extremum formulas. Values within 1e-12
/// relative count as ties; ties go to the smaller |Delta_F|, then to the
/// positive side.
inline Optimum brute_force_optimum(const SystemParams& p, Band band = Band::feasible(),
                                   std::size_t grid_points = 2001) {
  if (band.empty() || !band.lo.is_finite() || !band.hi.is_finite()) {
    throw validation_error("EMPTY_BAND", "optimisation band must satisfy lo < hi");
  }
  if (grid_points < 11) {
    throw validation_error("GRID_TOO_COARSE", "brute-force optimisation needs >= 11 grid points");
  }
  const double lo = band.lo.mhz();
  const double hi = band.hi.mhz();
  const double step = (hi - lo) / static_cast<double>(grid_points - 1);
  auto isolation = [&p](double df) {
    try {
      return transmissions_at(p, Frequency::mhz(df)).i_abs_db;
    } catch (const Error& e) {
      if (e.code() == "NO_TRANSMISSION") return -std::numeric_limits<double>::infinity();
      throw;
    }
  };
  auto better = [step](double x, double fx, double best_x, double best_f) {
    if (std::isinf(fx) && std::isinf(best_f) && fx == best_f) {
      // fall through to tie-break
    } else if (!(std::abs(fx - best_f) <= 1e-12 * std::max(std::abs(fx), std::abs(best_f)))) {
      return fx > best_f;
    }
    if (std::abs(std::abs(x) - std::abs(best_x)) > 1e-9 * step) return std::abs(x) < std::abs(best_x);
    return x > best_x;
  };

  std::size_t best_i = 0;
  double best_x = lo;
  double best_f = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double x = i + 1 == grid_points ? hi : lo + step * static_cast<double>(i);
    const double fx = isolation(x);
    if (i == 0 || better(x, fx, best_x, best_f)) {
      best_i = i;
      best_x = x;
      best_f = fx;
    }
  }
  if (std::isinf(best_f)) return {Frequency::mhz(best_x), best_f};

  const double left = best_i == 0 ? lo : lo + step * static_cast<double>(best_i - 1);
  const double right = best_i + 1 >= grid_points ? hi : lo + step * static_cast<double>(best_i + 1);
  const ScalarOptimum refined = golden_section_maximize(isolation, left, right, 1e-6);
  if (refined.value >= best_f) {
    return {Frequency::mhz(refined.x), refined.value};
  }
  return {Frequency::mhz(best_x), best_f};
}

inline Direction classify_direction(const TransmissionReport& rep, double tol_db = 1e-9) {
  if (std::abs(rep.i_signed_db) <= tol_db) return Direction::Reciprocal;
  return rep.i_signed_db > 0.0 ? Direction::Forward : Direction::Backward;
}

// ---------------------------------------------------------------------------
// Optimal Fizeau shift on one branch, used by the curve presets.
// ---------------------------------------------------------------------------

enum class Branch { Positive, Negative };

struct BranchOptimum {
  Frequency delta_f;
  bool analytic = true;  // false when the band-limited numerical search was used
};

/// Extremum on the requested branch. Uses the closed-form roots when their
/// preconditions hold; otherwise, or when `clamp` is set and the root lies
/// outside `band`, searches the branch half of `band` numerically.
inline BranchOptimum optimal_delta_f(const SystemParams& p, Branch branch, Band band, bool clamp) {
  if (has_symmetric_ports(p)) {
    try {
      const GeneralExtremumReport ext = extremal_fizeau_general(p, band);
      const Frequency root = branch == Branch::Positive ? ext.delta_f_1 : ext.delta_f_2;
      if (!clamp || band.contains(root)) return {root, true};
    } catch (const Error& e) {
      if (e.code() != "NO_REAL_EXTREMUM") throw;
    }
  }
  Band half = band;
  if (branch == Branch::Positive) {
    half.lo = std::max(band.lo, Frequency::mhz(0.0));
  } else {
    half.hi = std::min(band.hi, Frequency::mhz(0.0));
  }
  return {brute_force_optimum(p, half).delta_f, false};
}

}  // namespace magnon_sagnac

#endif  // MAGNON_SAGNAC_ANALYSIS_HPP
