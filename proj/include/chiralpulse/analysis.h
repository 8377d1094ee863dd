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

#ifndef CHIRALPULSE_ANALYSIS_H
#define CHIRALPULSE_ANALYSIS_H

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chiralpulse/protocols.h"

namespace chiralpulse {

/// Which propagator path evaluates each sweep point.
enum class Engine { Analytic, Oracle };

struct SweepProfile {
    std::string protocol;
    SubstitutionPlan plan;
    ResolvedOrder order;
    std::vector<double> epsilons;
    std::vector<Populations> pops_l;
    std::vector<Populations> pops_r;
};

/// n points from eps_min to eps_max inclusive; both endpoints are exact.
std::vector<double> uniform_grid(double eps_min, double eps_max, int n);

/// Points are independent and evaluated in parallel on `threads` workers
/// (0 picks the hardware concurrency); results are stored by grid index, so
/// the profile does not depend on the thread count.
SweepProfile sweep(const Protocol &protocol, const SubstitutionPlan &plan, double eps_min, double eps_max, int n,
                   Engine engine = Engine::Analytic, unsigned threads = 0);

/// P_state(L) - P_state(R) per grid point; state is one-based.
std::vector<double> contrast(const SweepProfile &profile, int state);

/// Width of the largest contiguous run of grid points around eps = 0 (the
/// grid point nearest zero) with contrast >= threshold; 0 when that point
/// itself is below the threshold.
double robustness_window(std::span<const double> epsilons, std::span<const double> contrast, double threshold);
double robustness_window(const SweepProfile &profile, int state, double threshold);

/// Phases of the symmetric pi/2 Q-pulse and Raman propagator forms.
struct SymmetryPhases {
    double alpha = 0;
    double beta = 0;
    double gamma1 = 0;
    double gamma2 = 0;
    double gamma3 = 0;
    double gamma4 = 0;
};

/// Thrown when a propagator's moduli are too far from the symmetric form.
class PatternMismatch : public std::runtime_error {
   public:
    PatternMismatch(const std::string &what, double max_deviation)
        : std::runtime_error(what), max_deviation_(max_deviation) {
    }
    double max_deviation() const {
        return max_deviation_;
    }

   private:
    double max_deviation_;
};

/// Largest |(|u_jk|) - pattern_jk| against (1/sqrt2, 0, 1/sqrt2; 0, 1, 0; ...).
double q_pattern_deviation(const CMat3 &u_q);
/// Same against (1/2, 1/sqrt2, 1/2; 1/sqrt2, 0, 1/sqrt2; 1/2, 1/sqrt2, 1/2).
double raman_pattern_deviation(const CMat3 &u_raman);

/// alpha = arg U11 and beta = arg(kappa U13) of the Q propagator for
/// chirality `chi`; gamma1..gamma3 = arg of the Raman first column,
/// gamma4 = arg U12. All angles in (-pi, pi].
SymmetryPhases extract_symmetry_phases(const CMat3 &u_q, const CMat3 &u_raman, double tol,
                                       Chirality chi = Chirality::L);

/// Circular distance in [0, pi] between 2 gamma2 + alpha + beta and pi/2.
double resolution_residual(const SymmetryPhases &phases);

/// U21 = 1/2 e^{-i(gamma2 + beta)} [kappa i + e^{i(2 gamma2 + alpha + beta)}]
/// of the symmetric Q-Raman-Q product.
cplx u21_prediction(const SymmetryPhases &phases, Chirality chi);

/// Maps an angle into (-pi, pi].
double wrap_angle(double angle);

/// Composite (or bare) Q(pi/2) block and Raman block of the
/// single-Raman-single sequence under a plan, each as a propagator.
struct SrsBlocks {
    CMat3 q;
    CMat3 raman;
};
SrsBlocks srs_blocks(const SubstitutionPlan &plan, Chirality chi, ErrorModel err);

}  // namespace chiralpulse

#endif
