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

#ifndef CHIRALPULSE_PROTOCOLS_H
#define CHIRALPULSE_PROTOCOLS_H

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chiralpulse/composites.h"
#include "chiralpulse/pulse_model.h"

namespace chiralpulse {

enum class ProtocolFamily { SingleRamanSingle, RamanSingle };

/// Q(pi/2) with sign +1, or -Q(pi/2) with sign -1.
struct SingleQ {
    int sign = +1;
};

/// [P(p_area), iS(s_area)]: the S field carries an extra pi/2 phase.
struct RamanPS {
    double p_area;
    double s_area;
};

using Interaction = std::variant<SingleQ, RamanPS>;

struct Protocol {
    std::string name;
    ProtocolFamily family;
    /// Time order: front() acts first.
    std::vector<Interaction> interactions;
    /// One-based final states at eps = 0 for the bare sequence.
    int final_state_l;
    int final_state_r;
    int initial_state = 1;

    int final_state(Chirality chi) const {
        return chi == Chirality::L ? final_state_l : final_state_r;
    }
    /// State whose population separates the enantiomers (the L target).
    int discriminator_state() const {
        return final_state_l;
    }
};

/// SRS_PP, SRS_PM, SRS_MP, SRS_MM, RS_12, RS_21.
const std::vector<Protocol> &builtin_protocols();
const Protocol &find_protocol(std::string_view name);
bool is_known_protocol(std::string_view name);

enum class SegmentOrder { Auto, Forward, Reversed };

std::string_view segment_order_name(SegmentOrder order);
std::optional<SegmentOrder> parse_segment_order(std::string_view text);

/// Which composites replace the Q pulses and the Raman pair.
///
/// Auto ordering keeps constant-rotation templates forward. Variable-rotation
/// templates follow the phase-symmetry rule: in single-Raman-single the Q
/// composites run forward and the Raman composite reversed; in Raman-single
/// the Q composite runs reversed.
struct SubstitutionPlan {
    std::string q_template{kSingleTemplate};
    std::string raman_template{kSingleTemplate};
    SegmentOrder q_order = SegmentOrder::Auto;
    SegmentOrder raman_order = SegmentOrder::Auto;
};

/// Resolved segment reversal for the Q and Raman roles of a plan.
struct ResolvedOrder {
    bool q_reversed;
    bool raman_reversed;
};

/// Throws std::invalid_argument naming the offending template and role.
void validate_plan(const Protocol &protocol, const SubstitutionPlan &plan);
ResolvedOrder resolve_order(const Protocol &protocol, const SubstitutionPlan &plan);

/// Concrete pulse steps with nominal areas, in time order.
std::vector<PulseStep> compile(const Protocol &protocol, const SubstitutionPlan &plan);

using Populations = std::array<double, 3>;

struct RunResult {
    CMat3 propagator_l;
    CMat3 propagator_r;
    Populations populations_l;
    Populations populations_r;

    const CMat3 &propagator(Chirality chi) const {
        return chi == Chirality::L ? propagator_l : propagator_r;
    }
    const Populations &populations(Chirality chi) const {
        return chi == Chirality::L ? populations_l : populations_r;
    }
};

/// Squared moduli of the first column (initial state |1>).
Populations populations_from(const CMat3 &u);

RunResult run(const Protocol &protocol, const SubstitutionPlan &plan, ErrorModel err);
RunResult run_steps(std::span<const PulseStep> steps, ErrorModel err);

}  // namespace chiralpulse

#endif
