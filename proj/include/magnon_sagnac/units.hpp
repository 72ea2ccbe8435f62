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

#ifndef MAGNON_SAGNAC_UNITS_HPP
#define MAGNON_SAGNAC_UNITS_HPP

#include <cmath>
#include <compare>

namespace magnon_sagnac {

// Frequency-like quantity stored as a linear frequency in MHz. Angular
// quantities X are stored as X/2pi, so a coupling quoted as "g/2pi = 41 MHz"
// is Frequency::mhz(41). All steady-state formulas are homogeneous in
// frequency, which makes the dimensionless outputs unit-independent.
class Frequency {
 public:
  constexpr Frequency() = default;

  static constexpr Frequency mhz(double v) { return Frequency(v); }
  static constexpr Frequency hz(double v) { return Frequency(v * 1e-6); }
  static constexpr Frequency ghz(double v) { return Frequency(v * 1e3); }
  static constexpr Frequency thz(double v) { return Frequency(v * 1e6); }

  constexpr double mhz() const { return value_; }
  constexpr double hz() const { return value_ * 1e6; }

  bool is_finite() const { return std::isfinite(value_); }

  constexpr Frequency operator-() const { return Frequency(-value_); }
  constexpr Frequency& operator+=(Frequency o) { value_ += o.value_; return *this; }
  constexpr Frequency& operator-=(Frequency o) { value_ -= o.value_; return *this; }
  constexpr Frequency& operator*=(double s) { value_ *= s; return *this; }

  friend constexpr Frequency operator+(Frequency a, Frequency b) { return a += b; }
  friend constexpr Frequency operator-(Frequency a, Frequency b) { return a -= b; }
  friend constexpr Frequency operator*(Frequency a, double s) { return a *= s; }
  friend constexpr Frequency operator*(double s, Frequency a) { return a *= s; }
  friend constexpr Frequency operator/(Frequency a, double s) { return Frequency(a.value_ / s); }
  friend constexpr double operator/(Frequency a, Frequency b) { return a.value_ / b.value_; }

  friend constexpr auto operator<=>(Frequency, Frequency) = default;

 private:
  constexpr explicit Frequency(double v) : value_(v) {}
  double value_ = 0.0;
};

struct PhysicalConstants {
  static constexpr double speed_of_light = 2.99792458e8;      // m/s
  static constexpr double hbar = 1.054571817e-34;             // J s
  static constexpr double gyromagnetic_ratio_hz_per_t = 28e9;  // gamma/2pi
};

inline constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace magnon_sagnac

#endif  // MAGNON_SAGNAC_UNITS_HPP
