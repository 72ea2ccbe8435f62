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

#ifndef MAGNON_SAGNAC_MODEL_HPP
#define MAGNON_SAGNAC_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "magnon_sagnac/error.hpp"
#include "magnon_sagnac/units.hpp"

namespace magnon_sagnac {

// ---------------------------------------------------------------------------
// Parameter records
// ---------------------------------------------------------------------------

enum class RotationDirection { Cw, Ccw, None };

// Spinning-resonator geometry. Rotation rate and wavelength are SI; the
// optical resonance is a Frequency (e.g. 193 THz).
struct RotationSpec {
  double omega_rot_hz = 6.6e3;  // Omega/2pi, magnitude
  RotationDirection direction = RotationDirection::Cw;
  double n = 2.2;
  double radius_m = 1.1e-3;
  double lambda_m = PhysicalConstants::speed_of_light / 193e12;
  double dn_dlambda = 0.0;  // 1/m; dispersion is usually negligible
  Frequency omega0 = Frequency::thz(193.0);
};

struct CavityModeParams {
  Frequency kappa_total;
  Frequency kappa_external;
  Frequency kappa_intrinsic;
  double eta = 0.0;  // kappa_external / kappa_total

  static CavityModeParams from_total(Frequency total, double eta) {
    return {total, total * eta, total * (1.0 - eta), eta};
  }
  static CavityModeParams from_parts(Frequency intrinsic, Frequency external) {
    const Frequency total = intrinsic + external;
    return {total, external, intrinsic, external / total};
  }
};

struct MagnonParams {
  Frequency omega_m = Frequency::ghz(10.1);
  Frequency gamma_m = Frequency::mhz(4.0);
  double eta3 = 0.5;
  std::optional<double> bias_field_t;  // when set, omega_m must equal gamma*H
};

enum class SqueezeMode { DirectG, FromPump };

struct SqueezeSpec {
  SqueezeMode mode = SqueezeMode::DirectG;
  double G = 0.0;
  Frequency delta_m;  // FromPump only
  Frequency e_pump;   // FromPump only
  std::optional<Frequency> omega_s_override;

  static SqueezeSpec direct(double g, std::optional<Frequency> omega_s = std::nullopt) {
    SqueezeSpec s;
    s.G = g;
    s.omega_s_override = omega_s;
    return s;
  }
  static SqueezeSpec from_pump(Frequency delta_m, Frequency e_pump,
                               std::optional<Frequency> omega_s = std::nullopt) {
    SqueezeSpec s;
    s.mode = SqueezeMode::FromPump;
    s.delta_m = delta_m;
    s.e_pump = e_pump;
    s.omega_s_override = omega_s;
    return s;
  }
};

// Quantities after the Bogoliubov transformation of the magnon mode.
struct EffectiveParams {
  double G = 0.0;
  Frequency g_eff_1;
  Frequency g_eff_2;
  double eps3_eff_factor = 1.0;  // e^{-G}
  Frequency omega_s;
};

// Drive amplitudes in s^-1/2. eps_3 is the bare magnon drive; the effective
// drive seen by the squeezed mode is eps_3 * e^{-G} unless eps3_eff_fixed
// pins it (the symmetric preset sets eps1 = eps2 = eps3').
struct DriveParams {
  double power_1 = 0.0;  // W
  double power_2 = 0.0;
  double power_3 = 0.0;
  Frequency omega_p = Frequency::thz(193.0);
  double eps_1 = 0.0;
  double eps_2 = 0.0;
  double eps_3 = 0.0;
  std::optional<double> eps3_eff_fixed;

  double eps3_eff(const EffectiveParams& eff) const {
    return eps3_eff_fixed ? *eps3_eff_fixed : eps_3 * eff.eps3_eff_factor;
  }
};

struct SystemParams {
  CavityModeParams cavity_1;
  CavityModeParams cavity_2;
  MagnonParams magnon;
  SqueezeSpec squeeze;
  DriveParams drives;
  Frequency g0_1;
  Frequency g0_2;
  Frequency delta;    // omega_0 - omega_d/2
  Frequency delta_f;  // signed Fizeau shift of mode a1; a2 sees -delta_f

  Frequency detuning_1() const { return delta + delta_f; }
  Frequency detuning_2() const { return delta - delta_f; }
};

// ---------------------------------------------------------------------------
// Derived-parameter maps
// ---------------------------------------------------------------------------

/// Rotation-induced Fizeau shift of the counter-clockwise mode a1 (mode a2
/// gets the negation). CW spin gives a positive shift, CCW the mirror image.
/// With `first_term_only` the material bracket is replaced by 1.
inline Frequency fizeau_shift(const RotationSpec& rot, bool first_term_only = false) {
  double sign = 0.0;
  switch (rot.direction) {
    case RotationDirection::Cw: sign = 1.0; break;
    case RotationDirection::Ccw: sign = -1.0; break;
    case RotationDirection::None: return Frequency::mhz(0.0);
  }
  const double bracket =
      first_term_only ? 1.0
                      : 1.0 - 1.0 / (rot.n * rot.n) - (rot.lambda_m / rot.n) * rot.dn_dlambda;
  // Angular shift Omega n r omega0 / c divided by 2pi, with Omega = 2pi f_rot
  // and omega0 = 2pi f0.
  const double shift_hz = 2.0 * kPi * rot.omega_rot_hz * rot.n * rot.radius_m *
                          rot.omega0.hz() / PhysicalConstants::speed_of_light;
  return Frequency::hz(sign * shift_hz * bracket);
}

/// Coherent drive amplitude sqrt(P / (hbar * omega_p)) in s^-1/2.
inline double drive_amplitude(double power_w, Frequency omega_p) {
  if (!(power_w >= 0.0) || !std::isfinite(power_w)) {
    throw validation_error("POWER_NEGATIVE", "drive power must be finite and >= 0");
  }
  if (!(omega_p.mhz() > 0.0) || !omega_p.is_finite()) {
    throw validation_error("OMEGA_P_NONPOSITIVE", "drive frequency must be > 0");
  }
  return std::sqrt(power_w / (PhysicalConstants::hbar * 2.0 * kPi * omega_p.hz()));
}

inline DriveParams drives_from_powers(double p1, double p2, double p3, Frequency omega_p) {
  DriveParams d;
  d.power_1 = p1;
  d.power_2 = p2;
  d.power_3 = p3;
  d.omega_p = omega_p;
  d.eps_1 = drive_amplitude(p1, omega_p);
  d.eps_2 = drive_amplitude(p2, omega_p);
  d.eps_3 = drive_amplitude(p3, omega_p);
  return d;
}

/// Squeezing parameter from the parametric pump: G = ln((dm+E)/(dm-E)) / 4.
inline double squeezing_from_pump(Frequency delta_m, Frequency e_pump) {
  const double dm = delta_m.mhz();
  const double e = e_pump.mhz();
  const double ratio = (dm + e) / (dm - e);
  if (!(std::abs(e) < std::abs(dm)) || !(ratio > 0.0) || !std::isfinite(ratio)) {
    throw physics_error("SQUEEZING_INSTABILITY",
                        "squeezing instability: parametric pump |E| must be below |delta_m|");
  }
  return 0.25 * std::log(ratio);
}

inline EffectiveParams derive_effective(const SystemParams& p) {
  EffectiveParams eff;
  Frequency omega_s = Frequency::mhz(0.0);
  if (p.squeeze.mode == SqueezeMode::FromPump) {
    eff.G = squeezing_from_pump(p.squeeze.delta_m, p.squeeze.e_pump);
    const double dm = p.squeeze.delta_m.mhz();
    const double e = p.squeeze.e_pump.mhz();
    omega_s = Frequency::mhz(std::sqrt(dm * dm - e * e));
  } else {
    if (!std::isfinite(p.squeeze.G)) {
      throw validation_error("G_NONFINITE", "squeezing parameter G must be finite");
    }
    eff.G = p.squeeze.G;
  }
  if (p.squeeze.omega_s_override) omega_s = *p.squeeze.omega_s_override;

  const double enhancement = std::cosh(2.0 * eff.G);
  eff.g_eff_1 = p.g0_1 * enhancement;
  eff.g_eff_2 = p.g0_2 * enhancement;
  eff.eps3_eff_factor = std::exp(-eff.G);
  eff.omega_s = omega_s;
  return eff;
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

// Inputs of the symmetric configuration used for all single-coupling results:
// kappa1 = kappa2, eta1 = eta2 = eta3, g'1 = g'2 and eps1 = eps2 = eps3'.
// Defaults are the commonly used experimental set (Delta = 0, g0 = 41 MHz,
// G = 0.5, kappa = 1.1 MHz, gamma_m = 4 MHz, eta = 0.5, 100 mW drives).
struct SymmetricSetup {
  Frequency g0 = Frequency::mhz(41.0);
  double G = 0.5;
  Frequency kappa = Frequency::mhz(1.1);
  Frequency gamma_m = Frequency::mhz(4.0);
  double eta = 0.5;
  Frequency delta = Frequency::mhz(0.0);
  Frequency delta_f = Frequency::mhz(0.0);
  Frequency omega_m = Frequency::ghz(10.1);
  Frequency omega_s = Frequency::mhz(0.0);
  double power_w = 0.1;
  Frequency omega_p = Frequency::thz(193.0);
};

inline SystemParams symmetric_params(const SymmetricSetup& s = {}) {
  SystemParams p;
  p.cavity_1 = CavityModeParams::from_total(s.kappa, s.eta);
  p.cavity_2 = p.cavity_1;
  p.magnon.omega_m = s.omega_m;
  p.magnon.gamma_m = s.gamma_m;
  p.magnon.eta3 = s.eta;
  p.squeeze = SqueezeSpec::direct(s.G, s.omega_s);
  p.drives = drives_from_powers(s.power_w, s.power_w, s.power_w, s.omega_p);
  p.drives.eps3_eff_fixed = p.drives.eps_1;
  p.g0_1 = s.g0;
  p.g0_2 = s.g0;
  p.delta = s.delta;
  p.delta_f = s.delta_f;
  return p;
}

// Sets the total loss of both cavity modes, keeping each mode's eta.
inline void set_kappa(SystemParams& p, Frequency kappa) {
  p.cavity_1 = CavityModeParams::from_total(kappa, p.cavity_1.eta);
  p.cavity_2 = CavityModeParams::from_total(kappa, p.cavity_2.eta);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct Violation {
  std::string code;
  std::string message;
};

namespace detail {

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

inline void check_cavity(const CavityModeParams& c, const std::string& name,
                         std::vector<Violation>& out) {
  const double total = c.kappa_total.mhz();
  const double ext = c.kappa_external.mhz();
  const double intr = c.kappa_intrinsic.mhz();
  if (!std::isfinite(total) || !std::isfinite(ext) || !std::isfinite(intr) ||
      !std::isfinite(c.eta)) {
    out.push_back({"NONFINITE", name + ": non-finite loss rate or eta"});
    return;
  }
  if (!(total > 0.0)) out.push_back({"KAPPA_NONPOSITIVE", name + ": kappa_total must be > 0"});
  if (ext < 0.0 || intr < 0.0) {
    out.push_back({"KAPPA_NEGATIVE", name + ": loss components must be >= 0"});
  }
  if (!close_rel(intr + ext, total, 1e-12)) {
    out.push_back({"KAPPA_DECOMP", name + ": kappa_intrinsic + kappa_external != kappa_total"});
  }
  if (c.eta < 0.0 || c.eta > 1.0) {
    out.push_back({"ETA_RANGE", name + ": eta must lie in [0, 1]"});
  } else if (total > 0.0 && !close_rel(c.eta, ext / total, 1e-12) &&
             std::abs(c.eta - ext / total) > 1e-15) {
    out.push_back({"ETA_MISMATCH", name + ": eta != kappa_external / kappa_total"});
  }
}

}  // namespace detail

/// Every violated invariant of `p`; empty means valid.
inline std::vector<Violation> validate(const SystemParams& p) {
  std::vector<Violation> out;
  detail::check_cavity(p.cavity_1, "cavity_1", out);
  detail::check_cavity(p.cavity_2, "cavity_2", out);

  const MagnonParams& m = p.magnon;
  if (!m.gamma_m.is_finite() || !m.omega_m.is_finite() || !std::isfinite(m.eta3)) {
    out.push_back({"NONFINITE", "magnon: non-finite parameter"});
  } else {
    if (!(m.gamma_m.mhz() > 0.0)) {
      out.push_back({"GAMMA_M_NONPOSITIVE", "magnon: gamma_m must be > 0"});
    }
    if (m.eta3 < 0.0 || m.eta3 > 1.0) out.push_back({"ETA3_RANGE", "magnon: eta3 must lie in [0, 1]"});
    if (m.bias_field_t) {
      const double expected = PhysicalConstants::gyromagnetic_ratio_hz_per_t * *m.bias_field_t;
      if (!detail::close_rel(m.omega_m.hz(), expected, 1e-9)) {
        out.push_back({"BIAS_FIELD_MISMATCH", "magnon: omega_m != gamma * bias_field"});
      }
    }
  }

  const SqueezeSpec& sq = p.squeeze;
  if (sq.mode == SqueezeMode::FromPump) {
    const double dm = sq.delta_m.mhz();
    const double e = sq.e_pump.mhz();
    if (!(std::abs(e) < std::abs(dm)) || !((dm + e) / (dm - e) > 0.0)) {
      out.push_back({"SQUEEZING_INSTABILITY", "squeeze: |E| must be below |delta_m|"});
    }
  } else if (!std::isfinite(sq.G)) {
    out.push_back({"G_NONFINITE", "squeeze: G must be finite"});
  }
  if (sq.omega_s_override && !sq.omega_s_override->is_finite()) {
    out.push_back({"NONFINITE", "squeeze: omega_s must be finite"});
  }

  const DriveParams& d = p.drives;
  for (double v : {d.power_1, d.power_2, d.power_3}) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      out.push_back({"POWER_NEGATIVE", "drives: powers must be finite and >= 0"});
      break;
    }
  }
  bool bad_eps = false;
  for (double v : {d.eps_1, d.eps_2, d.eps_3}) bad_eps |= !(v >= 0.0) || !std::isfinite(v);
  if (d.eps3_eff_fixed) bad_eps |= !(*d.eps3_eff_fixed >= 0.0) || !std::isfinite(*d.eps3_eff_fixed);
  if (bad_eps) out.push_back({"DRIVE_NEGATIVE", "drives: amplitudes must be finite and >= 0"});

  if (!p.g0_1.is_finite() || !p.g0_2.is_finite() || !p.delta.is_finite() ||
      !p.delta_f.is_finite()) {
    out.push_back({"NONFINITE", "couplings and detunings must be finite"});
  } else if (p.g0_1.mhz() < 0.0 || p.g0_2.mhz() < 0.0) {
    out.push_back({"COUPLING_NEGATIVE", "bare couplings must be >= 0"});
  }
  return out;
}

inline std::vector<Violation> validate(const RotationSpec& r) {
  std::vector<Violation> out;
  if (!(r.omega_rot_hz >= 0.0) || !std::isfinite(r.omega_rot_hz)) {
    out.push_back({"ROTATION_RATE", "rotation: omega_rot must be finite and >= 0"});
  }
  if (!(r.n > 1.0) || !std::isfinite(r.n)) out.push_back({"ROTATION_INDEX", "rotation: n must be > 1"});
  if (!(r.radius_m > 0.0) || !std::isfinite(r.radius_m)) {
    out.push_back({"ROTATION_RADIUS", "rotation: radius must be > 0"});
  }
  if (!(r.lambda_m > 0.0) || !std::isfinite(r.lambda_m)) {
    out.push_back({"ROTATION_WAVELENGTH", "rotation: wavelength must be > 0"});
  }
  if (!std::isfinite(r.dn_dlambda) || !r.omega0.is_finite()) {
    out.push_back({"NONFINITE", "rotation: non-finite dispersion or resonance"});
  }
  return out;
}

inline void require_valid(const SystemParams& p) {
  const auto violations = validate(p);
  if (!violations.empty()) {
    throw validation_error(violations.front().code, violations.front().message);
  }
}

}  // namespace magnon_sagnac

#endif  // MAGNON_SAGNAC_MODEL_HPP
