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

#ifndef MAGNON_SAGNAC_STEADY_STATE_HPP
#define MAGNON_SAGNAC_STEADY_STATE_HPP

#include <array>
#include <cmath>
#include <complex>
#include <limits>

#include "magnon_sagnac/error.hpp"
#include "magnon_sagnac/linear_solve.hpp"
#include "magnon_sagnac/model.hpp"

namespace magnon_sagnac {

using Complex = std::complex<double>;

// Which optical port is driven. Exactly one of eps1/eps2 is active per solve;
// the magnon drive eps3' is always on.
enum class DriveSide { Left, Right };

struct SteadyState {
  Complex a1;
  Complex a2;
  Complex m;
};

struct OutputFields {
  Complex a1_out;
  Complex a2_out;
};

// Coefficients of the steady-state equations
//   -D1 A1 - i g1 M + F1 = 0
//   -D2 A2 - i g2 M + F2 = 0
//   -Dm M - i g1 A1 - i g2 A2 + F3 = 0
// with Dj = i Delta_j + kappa_j/2, Dm = i omega_s + gamma_m/2 (all in MHz).
struct LangevinCoefficients {
  Complex d1;
  Complex d2;
  Complex dm;
  double g1 = 0.0;
  double g2 = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
};

inline LangevinCoefficients langevin_coefficients(const SystemParams& p, DriveSide side) {
  const EffectiveParams eff = derive_effective(p);
  const double k1 = p.cavity_1.kappa_total.mhz();
  const double k2 = p.cavity_2.kappa_total.mhz();
  const double gm = p.magnon.gamma_m.mhz();

  LangevinCoefficients c;
  c.d1 = Complex(k1 / 2.0, p.detuning_1().mhz());
  c.d2 = Complex(k2 / 2.0, p.detuning_2().mhz());
  c.dm = Complex(gm / 2.0, eff.omega_s.mhz());
  c.g1 = eff.g_eff_1.mhz();
  c.g2 = eff.g_eff_2.mhz();
  const double eps1 = side == DriveSide::Left ? p.drives.eps_1 : 0.0;
  const double eps2 = side == DriveSide::Right ? p.drives.eps_2 : 0.0;
  c.f1 = std::sqrt(p.cavity_1.eta * k1) * eps1;
  c.f2 = std::sqrt(p.cavity_2.eta * k2) * eps2;
  c.f3 = std::sqrt(p.magnon.eta3 * gm) * p.drives.eps3_eff(eff);
  return c;
}

namespace detail {

inline void require_positive_rates(const SystemParams& p) {
  if (!(p.cavity_1.kappa_total.mhz() > 0.0) || !(p.cavity_2.kappa_total.mhz() > 0.0) ||
      !(p.magnon.gamma_m.mhz() > 0.0)) {
    throw validation_error("RATE_NONPOSITIVE", "loss rates kappa_1, kappa_2, gamma_m must be > 0");
  }
}

}  // namespace detail

/// Steady state by Gaussian elimination of the full 3x3 system.
inline SteadyState solve_generic(const SystemParams& p, DriveSide side) {
  detail::require_positive_rates(p);
  const LangevinCoefficients c = langevin_coefficients(p, side);
  const Complex i(0.0, 1.0);

  ComplexMatrix<3> a{};
  a[0] = {-c.d1, 0.0, -i * c.g1};
  a[1] = {0.0, -c.d2, -i * c.g2};
  a[2] = {-i * c.g1, -i * c.g2, -c.dm};
  const ComplexVector<3> b{-c.f1, -c.f2, -c.f3};

  const PivotedLU<3> lu(a);
  if (lu.singular() || !(lu.condition_1norm() <= 1e14)) {
    throw physics_error("DEGENERATE_SYSTEM", "degenerate system: steady-state matrix is singular");
  }
  const auto x = lu.solve(b);
  return {x[0], x[1], x[2]};
}

/// Steady state from the closed-form elimination with common denominator
/// Den = D1 D2 Dm + D2 g1'^2 + D1 g2'^2. The right-driven case is the mirror
/// image (1 <-> 2) of the left-driven one.
inline SteadyState solve_closed_form(const SystemParams& p, DriveSide side) {
  detail::require_positive_rates(p);
  const LangevinCoefficients c = langevin_coefficients(p, side);
  const Complex i(0.0, 1.0);
  const Complex den = c.d1 * c.d2 * c.dm + c.d2 * c.g1 * c.g1 + c.d1 * c.g2 * c.g2;
  if (std::abs(den) == 0.0 || !std::isfinite(std::abs(den))) {
    throw physics_error("DEGENERATE_DENOMINATOR", "degenerate denominator in closed-form solution");
  }

  SteadyState s;
  if (side == DriveSide::Left) {
    const Complex core = c.d1 * c.f3 - i * c.g1 * c.f1;
    s.m = c.d2 * core / den;
    // F1/D1 - i g1 (D1 D2 F3 - i g1 D2 F1)/(D1 Den) with the g1^2 terms cancelled
    s.a1 = (c.f1 * (c.d2 * c.dm + c.g2 * c.g2) - i * c.g1 * c.d2 * c.f3) / den;
    s.a2 = -i * c.g2 * core / den;
  } else {
    const Complex core = c.d2 * c.f3 - i * c.g2 * c.f2;
    s.m = c.d1 * core / den;
    s.a2 = (c.f2 * (c.d1 * c.dm + c.g1 * c.g1) - i * c.g2 * c.d1 * c.f3) / den;
    s.a1 = -i * c.g1 * core / den;
  }
  return s;
}

/// |lhs| of each steady-state equation evaluated at `s`.
inline std::array<double, 3> langevin_residuals(const SteadyState& s, const SystemParams& p,
                                                DriveSide side) {
  const LangevinCoefficients c = langevin_coefficients(p, side);
  const Complex i(0.0, 1.0);
  return {
      std::abs(-c.d1 * s.a1 - i * c.g1 * s.m + c.f1),
      std::abs(-c.d2 * s.a2 - i * c.g2 * s.m + c.f2),
      std::abs(-c.dm * s.m - i * c.g1 * s.a1 - i * c.g2 * s.a2 + c.f3),
  };
}

// Residual bound 1e-10 * max(1, largest drive term of the system).
inline bool satisfies_residual_bound(const SteadyState& s, const SystemParams& p, DriveSide side) {
  const LangevinCoefficients c = langevin_coefficients(p, side);
  const double scale = std::max({1.0, std::abs(c.f1), std::abs(c.f2), std::abs(c.f3)});
  for (double r : langevin_residuals(s, p, side)) {
    if (!(r <= 1e-10 * scale)) return false;
  }
  return true;
}

inline OutputFields output_fields(const SteadyState& s, const SystemParams& p) {
  return {std::sqrt(p.cavity_1.eta * p.cavity_1.kappa_total.mhz()) * s.a1,
          std::sqrt(p.cavity_2.eta * p.cavity_2.kappa_total.mhz()) * s.a2};
}

// ---------------------------------------------------------------------------
// Transmission and isolation
// ---------------------------------------------------------------------------

struct TransmissionReport {
  double t12 = 0.0;  // |A1,out / eps2| under right drive
  double t21 = 0.0;  // |A2,out / eps1| under left drive
  double r = 0.0;    // |A1,out|^2 / |A2,out|^2
  double i_signed_db = 0.0;
  double i_abs_db = 0.0;
  bool infinite_isolation = false;  // one output exactly zero
  Complex a1_out;                   // from the right-driven solve
  Complex a2_out;                   // from the left-driven solve
};

enum class Solver { ClosedForm, Generic };

inline SteadyState solve(const SystemParams& p, DriveSide side, Solver solver = Solver::ClosedForm) {
  return solver == Solver::ClosedForm ? solve_closed_form(p, side) : solve_generic(p, side);
}

inline TransmissionReport transmissions(const SystemParams& p, Solver solver = Solver::ClosedForm) {
  const double eps1 = p.drives.eps_1;
  const double eps2 = p.drives.eps_2;
  if (!(eps1 > 0.0) || !(eps2 > 0.0)) {
    throw validation_error("DRIVE_MISSING", "transmissions need both eps_1 and eps_2 > 0");
  }
  const OutputFields right = output_fields(solve(p, DriveSide::Right, solver), p);
  const OutputFields left = output_fields(solve(p, DriveSide::Left, solver), p);

  TransmissionReport rep;
  rep.a1_out = right.a1_out;
  rep.a2_out = left.a2_out;
  rep.t12 = std::abs(right.a1_out) / eps2;
  rep.t21 = std::abs(left.a2_out) / eps1;

  const double forward = std::norm(right.a1_out);
  const double backward = std::norm(left.a2_out);
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (forward == 0.0 && backward == 0.0) {
    throw physics_error("NO_TRANSMISSION", "no transmission: both output fields vanish");
  }
  if (backward == 0.0) {
    rep.r = inf;
    rep.i_signed_db = inf;
    rep.i_abs_db = inf;
    rep.infinite_isolation = true;
  } else if (forward == 0.0) {
    rep.r = 0.0;
    rep.i_signed_db = -inf;
    rep.i_abs_db = inf;
    rep.infinite_isolation = true;
  } else {
    rep.r = forward / backward;
    rep.i_signed_db = 10.0 * std::log10(rep.r);
    rep.i_abs_db = std::abs(rep.i_signed_db);
  }
  return rep;
}

}  // namespace magnon_sagnac

#endif  // MAGNON_SAGNAC_STEADY_STATE_HPP
