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

#include "chiralpulse/oracle.h"

#include <stdexcept>
#include <string>

namespace chiralpulse {

CMat3 evolve_piecewise(std::span<const PulseStep> steps, Chirality chi, ErrorModel err, TimeGrid grid) {
    if (grid.step_count < 1) {
        throw std::invalid_argument("time grid needs at least one slice per step, got " +
                                    std::to_string(grid.step_count));
    }
    double slice = grid.duration / grid.step_count;
    CMat3 total = CMat3::identity();
    for (const auto &step : steps) {
        HMat3 h = step_hamiltonian(step, chi, err, grid.duration);
        CMat3 slice_u = expm_hermitian(h, slice);
        for (int k = 0; k < grid.step_count; k++) {
            total = slice_u * total;
        }
    }
    return total;
}

RunResult run_oracle(const Protocol &protocol, const SubstitutionPlan &plan, ErrorModel err, TimeGrid grid) {
    auto steps = compile(protocol, plan);
    RunResult result{
        evolve_piecewise(steps, Chirality::L, err, grid),
        evolve_piecewise(steps, Chirality::R, err, grid),
        {},
        {},
    };
    result.populations_l = populations_from(result.propagator_l);
    result.populations_r = populations_from(result.propagator_r);
    return result;
}

}  // namespace chiralpulse
