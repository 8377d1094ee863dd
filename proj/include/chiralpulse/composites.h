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

#ifndef CHIRALPULSE_COMPOSITES_H
#define CHIRALPULSE_COMPOSITES_H

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "chiralpulse/pulse_model.h"

namespace chiralpulse {

/// Pseudo-template name meaning "no substitution": the bare pulse is kept.
inline constexpr std::string_view kSingleTemplate = "SINGLE";

enum class RotationKind { Constant, Variable };
enum class RotationTarget { HalfPi, TwoPi };

struct CompositeSegment {
    double nominal_area;
    double phase;
};

struct CompositeTemplate {
    std::string name;
    std::vector<CompositeSegment> segments;
    RotationKind rotation_kind;
    RotationTarget target;

    double total_nominal_area() const;
};

/// CP1, CP2, BB1, TWO_PI_5, TWO_PI_9, VR in that order.
const std::vector<CompositeTemplate> &builtin_templates();

/// Throws std::invalid_argument for unknown names (including SINGLE, which
/// has no template).
const CompositeTemplate &find_template(std::string_view name);

/// True for every builtin template name and for SINGLE.
bool is_known_template(std::string_view name);

std::string_view rotation_target_name(RotationTarget target);

/// How one template segment becomes a field or a Raman field pair.
///
/// raman_lift, segment k:
///   P area = field_scale_p * a_k,  phi_p = phi_k
///   S area = field_scale_s * a_k,  phi_s = s_phase_offset + s_phase_sign * phi_k
/// s_phase_sign = +1 is the spin-1 (Majorana) lift of equal fields; -1 keeps
/// the bright state fixed, so the composite phase lands on the Morris-Shore
/// coupling for unequal fields.
struct SubstitutionRule {
    enum class Mode { QSingle, RamanLift };

    Mode mode = Mode::QSingle;
    double field_scale_p = 1.0;
    double field_scale_s = 1.0;
    double s_phase_offset = 0.0;
    double s_phase_sign = 1.0;
    bool reversed = false;
};

/// Expands a segment list under a rule. For QSingle, `base_phase` is added to
/// each segment phase; it is ignored for RamanLift.
std::vector<PulseStep> apply_rule(const CompositeTemplate &tmpl, const SubstitutionRule &rule, double base_phase = 0.0);

/// Composite replacement of a Q(pi/2) pulse. base_phase = pi realizes -Q(pi/2).
/// Areas are nominal; the error model is applied at propagation time.
std::vector<PulseStep> expand_q(const CompositeTemplate &tmpl, double base_phase, bool reversed);

/// Composite replacement of the Raman pair [P(p_total), iS(s_total)].
///
/// half-pi templates need p_total == s_total == pi/sqrt2 and use the
/// Majorana lift (both fields sqrt2 * a_k, common phase). two-pi templates
/// need {p_total, s_total} == {xi1 pi, xi2 pi} and split each segment
/// proportionally with the Morris-Shore phase rule.
std::vector<PulseStep> expand_raman(const CompositeTemplate &tmpl, double p_total, double s_total, bool reversed);

/// Rule used by expand_raman; exposed for inspection and tests.
SubstitutionRule raman_rule(const CompositeTemplate &tmpl, double p_total, double s_total, bool reversed);

/// RMS area sqrt(A_p^2 + A_s^2) with the error applied: the pulse area of the
/// equivalent two-state (Morris-Shore) system.
double ms_reduce(double p_total, double s_total, ErrorModel err);

/// Two-state propagator [[cos, -i e^{i phi} sin], [-i e^{-i phi} sin, cos]]
/// of a segment list, time ordered, with the error applied.
using CMat2 = std::array<std::array<cplx, 2>, 2>;
CMat2 two_state_propagator(std::span<const CompositeSegment> segments, ErrorModel err, bool reversed = false);

}  // namespace chiralpulse

#endif
