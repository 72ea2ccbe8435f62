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

// Sweeps the magnon damping at the analytic optimum for three detunings and
// writes the curves as CSV to stdout.

#include <iostream>

#include "magnon_sagnac.hpp"

namespace ms = magnon_sagnac;

int main() {
  ms::SymmetricSetup setup;
  setup.G = 0.75;
  const ms::SystemParams base = ms::symmetric_params(setup);

  const std::vector<ms::Axis> axes{
      {ms::SweepParameter::GammaM, 1.0, 12.0, 45},
      {ms::SweepParameter::Delta, 0.0, 22.0, 3},
  };
  ms::SweepOptions opt;
  opt.optimal = ms::OptimalDeltaF{ms::Branch::Positive, true};

  try {
    const ms::SweepResult result = ms::sweep(base, axes, opt);
    ms::write_csv(result, std::cout);
  } catch (const ms::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}
