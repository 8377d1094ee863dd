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

#include "chiralpulse/protocols.h"

#include <algorithm>
#include <stdexcept>

namespace chiralpulse {

namespace {

std::vector<Protocol> make_builtin_protocols() {
    const double raman_half = kPi / std::numbers::sqrt2;
    const RamanPS half_pi_pair{raman_half, raman_half};
    const double big = xi1() * kPi;
    const double small = xi2() * kPi;

    auto srs = [&](std::string name, int first, int last, int l, int r) {
        return Protocol{std::move(name),
                        ProtocolFamily::SingleRamanSingle,
                        {SingleQ{first}, half_pi_pair, SingleQ{last}},
                        l,
                        r};
    };
    return {
        srs("SRS_PP", +1, +1, 2, 3),
        srs("SRS_PM", +1, -1, 2, 1),
        srs("SRS_MP", -1, +1, 1, 2),
        srs("SRS_MM", -1, -1, 3, 2),
        Protocol{"RS_12", ProtocolFamily::RamanSingle, {RamanPS{big, small}, SingleQ{+1}}, 3, 1},
        Protocol{"RS_21", ProtocolFamily::RamanSingle, {RamanPS{small, big}, SingleQ{+1}}, 1, 3},
    };
}

bool reversed_for(SegmentOrder order, std::string_view template_name, bool variable_rule_reverses) {
    switch (order) {
        case SegmentOrder::Forward:
            return false;
        case SegmentOrder::Reversed:
            return true;
        case SegmentOrder::Auto:
            break;
    }
    if (template_name == kSingleTemplate) {
        return false;
    }
    return find_template(template_name).rotation_kind == RotationKind::Variable && variable_rule_reverses;
}

}  // namespace

const std::vector<Protocol> &builtin_protocols() {
    static const std::vector<Protocol> protocols = make_builtin_protocols();
    return protocols;
}

const Protocol &find_protocol(std::string_view name) {
    for (const auto &p : builtin_protocols()) {
        if (p.name == name) {
            return p;
        }
    }
    throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
}

bool is_known_protocol(std::string_view name) {
    const auto &all = builtin_protocols();
    return std::any_of(all.begin(), all.end(), [&](const Protocol &p) { return p.name == name; });
}

std::string_view segment_order_name(SegmentOrder order) {
    switch (order) {
        case SegmentOrder::Auto:
            return "auto";
        case SegmentOrder::Forward:
            return "forward";
        case SegmentOrder::Reversed:
            return "reversed";
    }
    return "?";
}

std::optional<SegmentOrder> parse_segment_order(std::string_view text) {
    if (text == "auto") {
        return SegmentOrder::Auto;
    }
    if (text == "forward") {
        return SegmentOrder::Forward;
    }
    if (text == "reversed") {
        return SegmentOrder::Reversed;
    }
    return std::nullopt;
}

void validate_plan(const Protocol &protocol, const SubstitutionPlan &plan) {
    for (const auto *name : {&plan.q_template, &plan.raman_template}) {
        if (!is_known_template(*name)) {
            throw std::invalid_argument("unknown composite template '" + *name + "'");
        }
    }
    if (plan.q_template != kSingleTemplate) {
        const auto &t = find_template(plan.q_template);
        if (t.target != RotationTarget::HalfPi) {
            throw std::invalid_argument("Q template '" + t.name + "' is a two_pi_rotation; Q(pi/2) pulses need a " +
                                        "half_pi_rotation template (CP1, CP2, BB1, VR)");
        }
    }
    if (plan.raman_template != kSingleTemplate) {
        const auto &t = find_template(plan.raman_template);
        RotationTarget needed =
            protocol.family == ProtocolFamily::SingleRamanSingle ? RotationTarget::HalfPi : RotationTarget::TwoPi;
        if (t.target != needed) {
            throw std::invalid_argument(
                "Raman template '" + t.name + "' is a " + std::string(rotation_target_name(t.target)) +
                " but protocol '" + protocol.name + "' needs a " + std::string(rotation_target_name(needed)) +
                (needed == RotationTarget::HalfPi ? " template (CP1, CP2, BB1, VR)" : " template (TWO_PI_5, TWO_PI_9)"));
        }
    }
}

ResolvedOrder resolve_order(const Protocol &protocol, const SubstitutionPlan &plan) {
    bool srs = protocol.family == ProtocolFamily::SingleRamanSingle;
    return ResolvedOrder{
        reversed_for(plan.q_order, plan.q_template, !srs),
        reversed_for(plan.raman_order, plan.raman_template, srs),
    };
}

std::vector<PulseStep> compile(const Protocol &protocol, const SubstitutionPlan &plan) {
    validate_plan(protocol, plan);
    ResolvedOrder order = resolve_order(protocol, plan);

    std::vector<PulseStep> steps;
    for (const auto &interaction : protocol.interactions) {
        if (const auto *q = std::get_if<SingleQ>(&interaction)) {
            double base_phase = q->sign < 0 ? kPi : 0.0;
            if (plan.q_template == kSingleTemplate) {
                steps.push_back(make_single(Transition::Q, kPi / 2, base_phase));
            } else {
                auto expanded = expand_q(find_template(plan.q_template), base_phase, order.q_reversed);
                steps.insert(steps.end(), expanded.begin(), expanded.end());
            }
            continue;
        }
        const auto &raman = std::get<RamanPS>(interaction);
        if (plan.raman_template == kSingleTemplate) {
            steps.push_back(make_raman(raman.p_area, 0.0, raman.s_area, kPi / 2));
        } else {
            auto expanded =
                expand_raman(find_template(plan.raman_template), raman.p_area, raman.s_area, order.raman_reversed);
            steps.insert(steps.end(), expanded.begin(), expanded.end());
        }
    }
    return steps;
}

Populations populations_from(const CMat3 &u) {
    return {std::norm(u(0, 0)), std::norm(u(1, 0)), std::norm(u(2, 0))};
}

RunResult run_steps(std::span<const PulseStep> steps, ErrorModel err) {
    RunResult result{
        sequence_propagator(steps, Chirality::L, err),
        sequence_propagator(steps, Chirality::R, err),
        {},
        {},
    };
    result.populations_l = populations_from(result.propagator_l);
    result.populations_r = populations_from(result.propagator_r);
    return result;
}

RunResult run(const Protocol &protocol, const SubstitutionPlan &plan, ErrorModel err) {
    auto steps = compile(protocol, plan);
    return run_steps(steps, err);
}

}  // namespace chiralpulse
