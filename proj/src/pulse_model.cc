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

#include "chiralpulse/pulse_model.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chiralpulse {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_nonnegative_area(const FieldPulse &pulse) {
    if (!(pulse.area >= 0.0)) {
        throw std::invalid_argument(
            "pulse area must be >= 0 (use a phase shift of pi for a sign flip), got " + std::to_string(pulse.area));
    }
}

void require_raman_pair(const FieldPulse &p, const FieldPulse &s) {
    if (p.transition != Transition::P || s.transition != Transition::S) {
        throw std::invalid_argument("Raman pulse needs a P field and an S field, got " +
                                    std::string(transition_name(p.transition)) + " and " +
                                    std::string(transition_name(s.transition)));
    }
    require_nonnegative_area(p);
    require_nonnegative_area(s);
}

}  // namespace

std::string_view chirality_name(Chirality chi) {
    return chi == Chirality::L ? "L" : "R";
}

std::pair<std::size_t, std::size_t> coupled_pair(Transition t) {
    switch (t) {
        case Transition::P:
            return {0, 1};
        case Transition::S:
            return {1, 2};
        case Transition::Q:
            return {0, 2};
    }
    throw std::invalid_argument("unknown transition");
}

std::string_view transition_name(Transition t) {
    switch (t) {
        case Transition::P:
            return "P";
        case Transition::S:
            return "S";
        case Transition::Q:
            return "Q";
    }
    return "?";
}

PulseStep make_single(Transition t, double area, double phase) {
    return SinglePulse{FieldPulse{t, area, phase}};
}

PulseStep make_raman(double p_area, double p_phase, double s_area, double s_phase) {
    return RamanPulse{FieldPulse{Transition::P, p_area, p_phase}, FieldPulse{Transition::S, s_area, s_phase}};
}

CMat3 single_propagator(const FieldPulse &pulse, Chirality chi, ErrorModel err) {
    require_nonnegative_area(pulse);
    double area = err.scale(pulse.area);
    double sign = pulse.transition == Transition::Q ? kappa(chi) : 1.0;
    auto [j, k] = coupled_pair(pulse.transition);

    double c = std::cos(0.5 * area);
    double s = std::sin(0.5 * area);
    CMat3 u = CMat3::identity();
    u(j, j) = c;
    u(k, k) = c;
    u(j, k) = -kI * sign * std::polar(1.0, pulse.phase) * s;
    u(k, j) = -kI * sign * std::polar(1.0, -pulse.phase) * s;
    return u;
}

CVec3 raman_bright_state(const FieldPulse &p, const FieldPulse &s, ErrorModel err) {
    double ap = err.scale(p.area);
    double as = err.scale(s.area);
    double rms = std::hypot(ap, as);
    return {ap * std::polar(1.0, p.phase) / rms, 0.0, as * std::polar(1.0, -s.phase) / rms};
}

CVec3 raman_dark_state(const FieldPulse &p, const FieldPulse &s, ErrorModel err) {
    double ap = err.scale(p.area);
    double as = err.scale(s.area);
    double rms = std::hypot(ap, as);
    return {as * std::polar(1.0, s.phase) / rms, 0.0, -ap * std::polar(1.0, -p.phase) / rms};
}

CMat3 raman_propagator(const FieldPulse &p, const FieldPulse &s, ErrorModel err) {
    require_raman_pair(p, s);
    double rms = std::hypot(err.scale(p.area), err.scale(s.area));
    if (rms == 0.0) {
        return CMat3::identity();
    }
    CVec3 bright = raman_bright_state(p, s, err);
    CVec3 dark = raman_dark_state(p, s, err);
    CVec3 middle{0.0, 1.0, 0.0};

    double c = std::cos(0.5 * rms);
    double sn = std::sin(0.5 * rms);
    CMat3 u = CMat3::outer(dark, dark);
    u += c * (CMat3::outer(bright, bright) + CMat3::outer(middle, middle));
    u += (-kI * sn) * (CMat3::outer(bright, middle) + CMat3::outer(middle, bright));
    return u;
}

CMat3 step_propagator(const PulseStep &step, Chirality chi, ErrorModel err) {
    if (const auto *single = std::get_if<SinglePulse>(&step)) {
        return single_propagator(single->pulse, chi, err);
    }
    const auto &raman = std::get<RamanPulse>(step);
    return raman_propagator(raman.p, raman.s, err);
}

CMat3 sequence_propagator(std::span<const PulseStep> steps, Chirality chi, ErrorModel err) {
    CMat3 total = CMat3::identity();
    for (const auto &step : steps) {
        total = step_propagator(step, chi, err) * total;
    }
    return total;
}

HMat3 step_hamiltonian(const PulseStep &step, Chirality chi, ErrorModel err, double duration) {
    if (!(duration > 0.0)) {
        throw std::invalid_argument("step duration must be > 0, got " + std::to_string(duration));
    }
    HMat3 h;
    auto add_field = [&](const FieldPulse &field) {
        require_nonnegative_area(field);
        double rabi = err.scale(field.area) / duration;
        double sign = field.transition == Transition::Q ? kappa(chi) : 1.0;
        auto [j, k] = coupled_pair(field.transition);
        h.add_upper(j, k, 0.5 * rabi * sign * std::polar(1.0, field.phase));
    };
    if (const auto *single = std::get_if<SinglePulse>(&step)) {
        add_field(single->pulse);
    } else {
        const auto &raman = std::get<RamanPulse>(step);
        require_raman_pair(raman.p, raman.s);
        add_field(raman.p);
        add_field(raman.s);
    }
    return h;
}

}  // namespace chiralpulse
