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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "magnon_sagnac/model.hpp"
#include "test_helpers.hpp"

namespace ms = magnon_sagnac;
using ms::Frequency;

namespace {

// Fizeau shift evaluated by hand for n = 2.2, r = 1.1 mm, Omega/2pi = 6.6 kHz,
// omega0/2pi = 193 THz: Delta_F/2pi = (2pi 6600)(2.2)(1.1e-3)(193e12)/c.
double hand_fizeau_mhz() {
  const double omega = 2.0 * 3.141592653589793 * 6600.0;
  return omega * 2.2 * 1.1e-3 * 193e12 / 2.99792458e8 / 1e6;
}

}  // namespace

TEST(Fizeau, FeasibilityParamsFirstTermOnly) {
  const ms::RotationSpec rot;  // defaults are the feasibility set, CW
  const double shift = ms::fizeau_shift(rot, true).mhz();
  EXPECT_NEAR(shift, hand_fizeau_mhz(), 1e-9);
  EXPECT_NEAR(shift, 64.61, 0.005);
  EXPECT_NEAR(shift, 65.0, 0.5);
}

TEST(Fizeau, FullBracketWithoutDispersion) {
  const ms::RotationSpec rot;
  const double expected = hand_fizeau_mhz() * (1.0 - 1.0 / (2.2 * 2.2));
  EXPECT_NEAR(ms::fizeau_shift(rot, false).mhz(), expected, 1e-9);
  EXPECT_NEAR(ms::fizeau_shift(rot, false).mhz(), 51.26, 0.005);
}

TEST(Fizeau, DispersionTermEntersBracket) {
  ms::RotationSpec rot;
  rot.dn_dlambda = -1e5;  // 1/m
  const double bracket = 1.0 - 1.0 / (2.2 * 2.2) - (rot.lambda_m / 2.2) * rot.dn_dlambda;
  EXPECT_NEAR(ms::fizeau_shift(rot).mhz(), hand_fizeau_mhz() * bracket, 1e-9);
}

TEST(Fizeau, NoRotationNoShift) {
  ms::RotationSpec rot;
  rot.direction = ms::RotationDirection::None;
  EXPECT_EQ(ms::fizeau_shift(rot, true).mhz(), 0.0);
  EXPECT_EQ(ms::fizeau_shift(rot, false).mhz(), 0.0);
}

TEST(Fizeau, OddInDirectionAndLinearInRate) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rate(0.0, 1e4);
  std::uniform_real_distribution<double> index(1.1, 3.5);
  for (int i = 0; i < 200; ++i) {
    ms::RotationSpec rot;
    rot.omega_rot_hz = rate(rng);
    rot.n = index(rng);
    const bool first = i % 2 == 0;
    const double cw = ms::fizeau_shift(rot, first).mhz();
    rot.direction = ms::RotationDirection::Ccw;
    EXPECT_EQ(ms::fizeau_shift(rot, first).mhz(), -cw);
    rot.direction = ms::RotationDirection::Cw;
    rot.omega_rot_hz *= 2.0;
    EXPECT_EQ(ms::fizeau_shift(rot, first).mhz(), 2.0 * cw);
  }
}

TEST(DriveAmplitude, ZeroPower) {
  EXPECT_EQ(ms::drive_amplitude(0.0, Frequency::thz(193.0)), 0.0);
}

TEST(DriveAmplitude, HundredMilliwattsAt193THz) {
  const double photon_energy = 1.054571817e-34 * 2.0 * 3.141592653589793 * 193e12;
  EXPECT_NEAR(photon_energy, 1.279e-19, 0.001e-19);
  const double eps = ms::drive_amplitude(0.1, Frequency::thz(193.0));
  EXPECT_NEAR(eps, std::sqrt(0.1 / photon_energy), 1e-6 * eps);
  EXPECT_NEAR(eps, 8.84e8, 0.01e8);
}

TEST(DriveAmplitude, SquareRootScaling) {
  const double e100 = ms::drive_amplitude(0.1, Frequency::thz(193.0));
  EXPECT_EQ(ms::drive_amplitude(0.4, Frequency::thz(193.0)), 2.0 * e100);
}

TEST(DriveAmplitude, RejectsNegativePower) {
  try {
    ms::drive_amplitude(-1e-3, Frequency::thz(193.0));
    FAIL() << "expected an error";
  } catch (const ms::Error& e) {
    EXPECT_EQ(e.kind(), ms::ErrorKind::Validation);
    EXPECT_EQ(e.code(), "POWER_NEGATIVE");
  }
  EXPECT_THROW(ms::drive_amplitude(0.1, Frequency::mhz(0.0)), ms::Error);
}

TEST(DeriveEffective, IdentitySqueeze) {
  ms::SymmetricSetup s;
  s.G = 0.0;
  s.omega_s = Frequency::mhz(3.5);
  const auto eff = ms::derive_effective(ms::symmetric_params(s));
  EXPECT_EQ(eff.g_eff_1.mhz(), 41.0);
  EXPECT_EQ(eff.g_eff_2.mhz(), 41.0);
  EXPECT_EQ(eff.eps3_eff_factor, 1.0);
  EXPECT_EQ(eff.omega_s.mhz(), 3.5);
}

TEST(DeriveEffective, HalfSqueezeEnhancesCoupling) {
  const auto eff = ms::derive_effective(ms::testing::headline_params());
  const double cosh1 = 0.5 * (std::exp(1.0) + std::exp(-1.0));
  EXPECT_NEAR(eff.g_eff_1.mhz(), 41.0 * cosh1, 1e-12);
  EXPECT_NEAR(eff.g_eff_1.mhz(), 63.2663, 5e-5);
  EXPECT_NEAR(eff.eps3_eff_factor, std::exp(-0.5), 1e-15);
  EXPECT_EQ(eff.omega_s.mhz(), 0.0);
}

TEST(DeriveEffective, PumpAtInstabilityBoundary) {
  auto p = ms::testing::headline_params();
  p.squeeze = ms::SqueezeSpec::from_pump(Frequency::mhz(10.0), Frequency::mhz(10.0));
  try {
    ms::derive_effective(p);
    FAIL() << "expected squeezing instability";
  } catch (const ms::Error& e) {
    EXPECT_EQ(e.code(), "SQUEEZING_INSTABILITY");
  }
  p.squeeze = ms::SqueezeSpec::from_pump(Frequency::mhz(10.0), Frequency::mhz(-12.0));
  EXPECT_THROW(ms::derive_effective(p), ms::Error);
}

TEST(DeriveEffective, PumpRoundTripAndOmegaS) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dm(0.5, 50.0);
  std::uniform_real_distribution<double> frac(-0.99, 0.99);
  auto p = ms::testing::headline_params();
  for (int i = 0; i < 500; ++i) {
    const double delta_m = dm(rng);
    const double e = frac(rng) * delta_m;
    p.squeeze = ms::SqueezeSpec::from_pump(Frequency::mhz(delta_m), Frequency::mhz(e));
    const auto eff = ms::derive_effective(p);
    EXPECT_NEAR(delta_m * std::tanh(2.0 * eff.G), e, 1e-12 * std::max(std::abs(e), delta_m));
    EXPECT_NEAR(eff.omega_s.mhz(), std::sqrt(delta_m * delta_m - e * e), 1e-12 * delta_m);
    EXPECT_NEAR(eff.omega_s.mhz(), delta_m / std::cosh(2.0 * eff.G), 1e-11 * delta_m);
  }
}

TEST(DeriveEffective, OverrideWinsOverPumpFrequency) {
  auto p = ms::testing::headline_params();
  p.squeeze = ms::SqueezeSpec::from_pump(Frequency::mhz(10.0), Frequency::mhz(6.0), Frequency::mhz(0.0));
  EXPECT_EQ(ms::derive_effective(p).omega_s.mhz(), 0.0);
}

TEST(DeriveEffective, CouplingNeverDecreases) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> g(-3.0, 3.0);
  auto p = ms::testing::headline_params();
  for (int i = 0; i < 200; ++i) {
    p.squeeze.G = g(rng);
    const auto eff = ms::derive_effective(p);
    EXPECT_GE(eff.g_eff_1.mhz(), p.g0_1.mhz());
    EXPECT_GE(eff.g_eff_2.mhz(), p.g0_2.mhz());
  }
}

TEST(Validate, DefaultParamsAreValid) {
  EXPECT_TRUE(ms::validate(ms::testing::headline_params()).empty());
  EXPECT_TRUE(ms::validate(ms::RotationSpec{}).empty());
}

TEST(Validate, EtaOutOfRange) {
  auto p = ms::testing::headline_params();
  p.cavity_1.eta = 1.2;
  const auto v = ms::validate(p);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].code, "ETA_RANGE");
}

TEST(Validate, KappaDecomposition) {
  auto p = ms::testing::headline_params();
  p.cavity_2.kappa_intrinsic = Frequency::mhz(0.7);
  const auto v = ms::validate(p);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].code, "KAPPA_DECOMP");
}

TEST(Validate, CavityFromParts) {
  const auto c = ms::CavityModeParams::from_parts(Frequency::mhz(0.3), Frequency::mhz(0.9));
  EXPECT_NEAR(c.kappa_total.mhz(), 1.2, 1e-15);
  EXPECT_NEAR(c.eta, 0.75, 1e-15);
  auto p = ms::testing::headline_params();
  p.cavity_1 = c;
  EXPECT_TRUE(ms::validate(p).empty());
}

TEST(Validate, ReportsEveryViolation) {
  auto p = ms::testing::headline_params();
  p.magnon.gamma_m = Frequency::mhz(-1.0);
  p.magnon.eta3 = 2.0;
  p.drives.eps_1 = -1.0;
  p.squeeze = ms::SqueezeSpec::from_pump(Frequency::mhz(1.0), Frequency::mhz(2.0));
  const auto v = ms::validate(p);
  auto has = [&](const char* code) {
    return std::any_of(v.begin(), v.end(), [&](const ms::Violation& x) { return x.code == code; });
  };
  EXPECT_TRUE(has("GAMMA_M_NONPOSITIVE"));
  EXPECT_TRUE(has("ETA3_RANGE"));
  EXPECT_TRUE(has("DRIVE_NEGATIVE"));
  EXPECT_TRUE(has("SQUEEZING_INSTABILITY"));
}

TEST(Validate, BiasFieldMustMatchMagnonFrequency) {
  auto p = ms::testing::headline_params();
  p.magnon.bias_field_t = 10.1e9 / 28e9;
  EXPECT_TRUE(ms::validate(p).empty());
  p.magnon.bias_field_t = 0.3;
  ASSERT_EQ(ms::validate(p).size(), 1u);
  EXPECT_EQ(ms::validate(p)[0].code, "BIAS_FIELD_MISMATCH");
}

TEST(Validate, RotationSpec) {
  ms::RotationSpec r;
  r.n = 1.0;
  r.radius_m = 0.0;
  EXPECT_EQ(ms::validate(r).size(), 2u);
}

TEST(SystemParams, DetuningsCarryOppositeFizeauShifts) {
  auto p = ms::testing::headline_params(12.5);
  p.delta = Frequency::mhz(3.0);
  EXPECT_EQ(p.detuning_1().mhz(), 15.5);
  EXPECT_EQ(p.detuning_2().mhz(), -9.5);
}

TEST(SystemParams, SymmetricPresetPinsMagnonDrive) {
  const auto p = ms::testing::headline_params();
  const auto eff = ms::derive_effective(p);
  EXPECT_EQ(p.drives.eps3_eff(eff), p.drives.eps_1);
  EXPECT_EQ(p.drives.eps_1, p.drives.eps_2);
  auto q = p;
  q.drives.eps3_eff_fixed.reset();
  EXPECT_NEAR(q.drives.eps3_eff(eff), q.drives.eps_3 * std::exp(-0.5), 1e-6);
}
