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

#ifndef CHIRALPULSE_PULSE_MODEL_H
#define CHIRALPULSE_PULSE_MODEL_H

#include <cmath>
#include <numbers>
#include <span>
#include <string_view>
#include <utility>
#include <variant>

#include "chiralpulse/qmat.h"

namespace chiralpulse {

inline constexpr double kPi = std::numbers::pi;

/// Raman field-area factors of the Raman-single sequence.
/// xi1^2 + xi2^2 == 4, so the RMS area of [P(xi1 pi), S(xi2 pi)] is 2 pi.
inline double xi1() {
    return std::sqrt(2.0 + std::numbers::sqrt2);
}
inline double xi2() {
    return std::sqrt(2.0 - std::numbers::sqrt2);
}

enum class Chirality { L, R };

/// Sign multiplying the |1>-|3> coupling: +1 for L, -1 for R.
constexpr int kappa(Chirality chi) {
    return chi == Chirality::L ? +1 : -1;
}

std::string_view chirality_name(Chirality chi);

/// P couples |1>-|2>, S couples |2>-|3>, Q couples |1>-|3>.
enum class Transition { P, S, Q };

/// Zero-based (lower, upper) state pair driven by a transition.
std::pair<std::size_t, std::size_t> coupled_pair(Transition t);

std::string_view transition_name(Transition t);

/// One resonant field. `area` is the nominal pulse area in radians (the error
/// model scales it at propagation time); a sign flip is a phase shift of pi.
struct FieldPulse {
    Transition transition;
    double area;
    double phase;

    bool operator==(const FieldPulse &) const = default;
};

struct SinglePulse {
    FieldPulse pulse;
    bool operator==(const SinglePulse &) const = default;
};

/// Simultaneous, co-terminous P and S fields sharing |2>.
struct RamanPulse {
    FieldPulse p;
    FieldPulse s;
    bool operator==(const RamanPulse &) const = default;
};

using PulseStep = std::variant<SinglePulse, RamanPulse>;

/// Systematic relative pulse-area error common to every field of a run.
struct ErrorModel {
    double epsilon = 0.0;

    double scale(double nominal_area) const {
        return nominal_area * (1.0 + epsilon);
    }
};

PulseStep make_single(Transition t, double area, double phase);
PulseStep make_raman(double p_area, double p_phase, double s_area, double s_phase);

/// Identity outside the driven pair; inside it, cos(A/2) on the diagonal and
/// -i kappa e^{+-i phi} sin(A/2) off it. kappa applies to Q only.
CMat3 single_propagator(const FieldPulse &pulse, Chirality chi, ErrorModel err);

/// Exact resonant Raman propagator via the bright/dark decomposition.
/// Chirality-independent.
CMat3 raman_propagator(const FieldPulse &p, const FieldPulse &s, ErrorModel err);

CMat3 step_propagator(const PulseStep &step, Chirality chi, ErrorModel err);

/// Time-ordered product U_n ... U_1 (the first step acts first).
CMat3 sequence_propagator(std::span<const PulseStep> steps, Chirality chi, ErrorModel err);

/// Rectangular-pulse RWA Hamiltonian whose exponential over `duration`
/// reproduces step_propagator.
HMat3 step_hamiltonian(const PulseStep &step, Chirality chi, ErrorModel err, double duration);

/// Bright state (A_p e^{i phi_p}|1> + A_s e^{-i phi_s}|3>)/A of a Raman pair.
CVec3 raman_bright_state(const FieldPulse &p, const FieldPulse &s, ErrorModel err);
/// Dark state (A_s e^{i phi_s}|1> - A_p e^{-i phi_p}|3>)/A of a Raman pair.
CVec3 raman_dark_state(const FieldPulse &p, const FieldPulse &s, ErrorModel err);

}  // namespace chiralpulse

#endif
