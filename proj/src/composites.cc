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

#include "chiralpulse/composites.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace chiralpulse {

namespace {

constexpr double kTotalsTolerance = 1e-12;

std::vector<CompositeTemplate> make_builtin_templates() {
    const double pi = kPi;
    const double chi = std::acos(-1.0 / 8.0);
    std::vector<CompositeTemplate> out;

    // Phase constants are kept exactly as tabulated (units of pi, 4 decimals).
    out.push_back({"CP1",
                   {{0.6399 * pi, 1.6558 * pi}, {pi, 0.4413 * pi}, {0.6399 * pi, 1.6558 * pi}},
                   RotationKind::Constant,
                   RotationTarget::HalfPi});
    out.push_back({"CP2",
                   {{0.45 * pi, 1.4494 * pi},
                    {pi, 0.0106 * pi},
                    {pi, 0.8179 * pi},
                    {pi, 0.0106 * pi},
                    {0.45 * pi, 1.4494 * pi}},
                   RotationKind::Constant,
                   RotationTarget::HalfPi});
    out.push_back({"BB1",
                   {{pi / 2, 0.0}, {pi, chi}, {pi, 3 * chi}, {pi, 3 * chi}, {pi, chi}},
                   RotationKind::Constant,
                   RotationTarget::HalfPi});
    out.push_back({"TWO_PI_5",
                   {{pi, 0.0}, {pi, 2 * pi / 3}, {2 * pi, 0.0}, {pi, 2 * pi / 3}, {pi, 0.0}},
                   RotationKind::Constant,
                   RotationTarget::TwoPi});
    out.push_back({"TWO_PI_9",
                   {{pi, 0.0},
                    {pi, 2 * pi / 5},
                    {pi, 6 * pi / 5},
                    {pi, 2 * pi / 5},
                    {2 * pi, 0.0},
                    {pi, 2 * pi / 5},
                    {pi, 6 * pi / 5},
                    {pi, 2 * pi / 5},
                    {pi, 0.0}},
                   RotationKind::Constant,
                   RotationTarget::TwoPi});
    out.push_back({"VR",
                   {{pi / 2, -pi / 2}, {pi, pi / 4}, {pi / 2, pi / 2}},
                   RotationKind::Variable,
                   RotationTarget::HalfPi});
    return out;
}

bool near(double a, double b) {
    return std::abs(a - b) <= kTotalsTolerance;
}

}  // namespace

double CompositeTemplate::total_nominal_area() const {
    return std::accumulate(segments.begin(), segments.end(), 0.0,
                           [](double acc, const CompositeSegment &s) { return acc + s.nominal_area; });
}

const std::vector<CompositeTemplate> &builtin_templates() {
    static const std::vector<CompositeTemplate> templates = make_builtin_templates();
    return templates;
}

const CompositeTemplate &find_template(std::string_view name) {
    for (const auto &t : builtin_templates()) {
        if (t.name == name) {
            return t;
        }
    }
    throw std::invalid_argument("unknown composite template '" + std::string(name) + "'");
}

bool is_known_template(std::string_view name) {
    if (name == kSingleTemplate) {
        return true;
    }
    return std::any_of(builtin_templates().begin(), builtin_templates().end(),
                       [&](const CompositeTemplate &t) { return t.name == name; });
}

std::string_view rotation_target_name(RotationTarget target) {
    return target == RotationTarget::HalfPi ? "half_pi_rotation" : "two_pi_rotation";
}

std::vector<PulseStep> apply_rule(const CompositeTemplate &tmpl, const SubstitutionRule &rule, double base_phase) {
    if (tmpl.segments.empty()) {
        throw std::invalid_argument("composite template '" + tmpl.name + "' has no segments");
    }
    std::vector<PulseStep> steps;
    steps.reserve(tmpl.segments.size());
    for (const auto &seg : tmpl.segments) {
        if (!(seg.nominal_area >= 0.0)) {
            throw std::invalid_argument("composite template '" + tmpl.name + "' has a negative segment area");
        }
        if (rule.mode == SubstitutionRule::Mode::QSingle) {
            steps.push_back(make_single(Transition::Q, seg.nominal_area, seg.phase + base_phase));
        } else {
            steps.push_back(make_raman(rule.field_scale_p * seg.nominal_area, seg.phase,
                                       rule.field_scale_s * seg.nominal_area,
                                       rule.s_phase_offset + rule.s_phase_sign * seg.phase));
        }
    }
    if (rule.reversed) {
        std::reverse(steps.begin(), steps.end());
    }
    return steps;
}

std::vector<PulseStep> expand_q(const CompositeTemplate &tmpl, double base_phase, bool reversed) {
    if (tmpl.target != RotationTarget::HalfPi) {
        throw std::invalid_argument("template '" + tmpl.name + "' is a " +
                                    std::string(rotation_target_name(tmpl.target)) +
                                    "; a Q(pi/2) pulse needs a half_pi_rotation template");
    }
    SubstitutionRule rule;
    rule.mode = SubstitutionRule::Mode::QSingle;
    rule.reversed = reversed;
    return apply_rule(tmpl, rule, base_phase);
}

SubstitutionRule raman_rule(const CompositeTemplate &tmpl, double p_total, double s_total, bool reversed) {
    SubstitutionRule rule;
    rule.mode = SubstitutionRule::Mode::RamanLift;
    rule.s_phase_offset = kPi / 2;
    rule.reversed = reversed;

    if (tmpl.target == RotationTarget::HalfPi) {
        double expected = kPi / std::numbers::sqrt2;
        if (!near(p_total, expected) || !near(s_total, expected)) {
            throw std::invalid_argument("half_pi template '" + tmpl.name +
                                        "' can only replace the Raman pair [P(pi/sqrt2), iS(pi/sqrt2)]");
        }
        rule.field_scale_p = std::numbers::sqrt2;
        rule.field_scale_s = std::numbers::sqrt2;
        rule.s_phase_sign = +1.0;
        return rule;
    }

    double big = xi1() * kPi;
    double small = xi2() * kPi;
    bool ok = (near(p_total, big) && near(s_total, small)) || (near(p_total, small) && near(s_total, big));
    if (!ok) {
        throw std::invalid_argument("two_pi template '" + tmpl.name +
                                    "' can only replace [P(xi1 pi), iS(xi2 pi)] or [P(xi2 pi), iS(xi1 pi)]");
    }
    rule.field_scale_p = p_total / (2 * kPi);
    rule.field_scale_s = s_total / (2 * kPi);
    rule.s_phase_sign = -1.0;
    return rule;
}

std::vector<PulseStep> expand_raman(const CompositeTemplate &tmpl, double p_total, double s_total, bool reversed) {
    return apply_rule(tmpl, raman_rule(tmpl, p_total, s_total, reversed));
}

double ms_reduce(double p_total, double s_total, ErrorModel err) {
    return std::hypot(err.scale(p_total), err.scale(s_total));
}

CMat2 two_state_propagator(std::span<const CompositeSegment> segments, ErrorModel err, bool reversed) {
    constexpr cplx kI{0.0, 1.0};
    CMat2 total{{{1.0, 0.0}, {0.0, 1.0}}};
    auto apply = [&](const CompositeSegment &seg) {
        double half = 0.5 * err.scale(seg.nominal_area);
        CMat2 u{{{std::cos(half), -kI * std::polar(1.0, seg.phase) * std::sin(half)},
                 {-kI * std::polar(1.0, -seg.phase) * std::sin(half), std::cos(half)}}};
        CMat2 next{};
        for (int r = 0; r < 2; r++) {
            for (int c = 0; c < 2; c++) {
                next[r][c] = u[r][0] * total[0][c] + u[r][1] * total[1][c];
            }
        }
        total = next;
    };
    if (reversed) {
        std::for_each(segments.rbegin(), segments.rend(), apply);
    } else {
        std::for_each(segments.begin(), segments.end(), apply);
    }
    return total;
}

}  // namespace chiralpulse
