// Copyright 2026 The chiralpulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHIRALPULSE_ORACLE_H
#define CHIRALPULSE_ORACLE_H

#include <span>

#include "chiralpulse/protocols.h"

namespace chiralpulse {

/// Each pulse step lasts `duration` and is cut into `step_count` equal slices.
struct TimeGrid {
    int step_count = 1;
    double duration = 1.0;
};

/// Brute-force evolution: build each step's Hamiltonian, exponentiate it
/// numerically slice by slice, and compose in time order. Shares no code
/// with the closed-form propagators.
CMat3 evolve_piecewise(std::span<const PulseStep> steps, Chirality chi, ErrorModel err, TimeGrid grid = {});

/// run() through the oracle path.
RunResult run_oracle(const Protocol &protocol, const SubstitutionPlan &plan, ErrorModel err, TimeGrid grid = {});

}  // namespace chiralpulse

#endif
