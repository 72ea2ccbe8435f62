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

#ifndef MAGNON_SAGNAC_MAGNON_SAGNAC_HPP
#define MAGNON_SAGNAC_MAGNON_SAGNAC_HPP

#include "magnon_sagnac/analysis.hpp"
#include "magnon_sagnac/config.hpp"
#include "magnon_sagnac/error.hpp"
#include "magnon_sagnac/model.hpp"
#include "magnon_sagnac/output.hpp"
#include "magnon_sagnac/presets.hpp"
#include "magnon_sagnac/steady_state.hpp"
#include "magnon_sagnac/sweep.hpp"
#include "magnon_sagnac/units.hpp"
#include "magnon_sagnac/version.hpp"

#endif  // MAGNON_SAGNAC_MAGNON_SAGNAC_HPP
