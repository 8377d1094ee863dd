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

#include <algorithm>
#include <random>
#include <sstream>

#include "chiralpulse/oracle.h"
#include "cli.h"

namespace chiralpulse::cli {

namespace {

constexpr cplx kI{0.0, 1.0};
const double kH = 1.0 / std::numbers::sqrt2;

struct Fixture {
    std::string label;
    CMat3 computed;
    CMat3 expected;
};

std::vector<Fixture> matrix_fixtures() {
    const double half = kPi / std::numbers::sqrt2;
    const FieldPulse q_half{Transition::Q, kPi / 2, 0.0};
    const auto &srs = find_protocol("SRS_PP");
    const auto &rs = find_protocol("RS_12");
    RunResult srs_run = run(srs, {}, {});
    RunResult rs_run = run(rs, {}, {});

    return {
        {"U_Q (L)", single_propagator(q_half, Chirality::L, {}), CMat3{kH, 0, -kI * kH, 0, 1, 0, -kI * kH, 0, kH}},
        {"U_Q (R)", single_propagator(q_half, Chirality::R, {}), CMat3{kH, 0, kI * kH, 0, 1, 0, kI * kH, 0, kH}},
        {"U_[P,iS] pi/sqrt2",
         raman_propagator({Transition::P, half, 0.0}, {Transition::S, half, kPi / 2}, {}),
         CMat3{0.5, -kI * kH, -kI * 0.5, -kI * kH, 0, kH, kI * 0.5, -kH, 0.5}},
        {"SRS_PP U(L)", srs_run.propagator_l, CMat3{0, 0, -kI, -kI, 0, 0, 0, -1, 0}},
        {"SRS_PP U(R)", srs_run.propagator_r, CMat3{0, -kI, 0, 0, 0, 1, kI, 0, 0}},
        {"U_[P,iS] xi1/xi2",
         raman_propagator({Transition::P, xi1() * kPi, 0.0}, {Transition::S, xi2() * kPi, kPi / 2}, {}),
         CMat3{-kH, 0, -kI * kH, 0, -1, 0, kI * kH, 0, kH}},
        {"RS_12 U(L)", rs_run.propagator_l, CMat3{0, 0, -kI, 0, -1, 0, kI, 0, 0}},
        {"RS_12 U(R)", rs_run.propagator_r, CMat3::diagonal(-1, -1, 1)},
    };
}

std::string pick(std::mt19937_64 &rng, const std::vector<std::string> &options) {
    std::uniform_int_distribution<std::size_t> dist(0, options.size() - 1);
    return options[dist(rng)];
}

}  // namespace

std::vector<Table1Row> table1_rows(double s_phase_offset) {
    std::vector<Table1Row> rows;
    for (const auto &protocol : builtin_protocols()) {
        auto steps = compile(protocol, {});
        for (auto &step : steps) {
            if (auto *raman = std::get_if<RamanPulse>(&step)) {
                raman->s.phase += s_phase_offset;
            }
        }
        RunResult result = run_steps(steps, {});
        auto argmax = [](const Populations &p) {
            return static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin()) + 1;
        };
        Table1Row row{protocol.name, argmax(result.populations_l), argmax(result.populations_r), true};
        for (Chirality chi : {Chirality::L, Chirality::R}) {
            double landed = result.populations(chi)[static_cast<std::size_t>(protocol.final_state(chi) - 1)];
            row.pass = row.pass && std::abs(landed - 1.0) <= 1e-10;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<FigurePanel> figure_panels() {
    auto plan = [](std::string q, std::string r) {
        SubstitutionPlan p;
        p.q_template = std::move(q);
        p.raman_template = std::move(r);
        return p;
    };
    return {
        {"fig4_single.csv", "SRS_PP", plan("SINGLE", "SINGLE")},
        {"fig4_cp1.csv", "SRS_PP", plan("CP1", "CP1")},
        {"fig4_cp2.csv", "SRS_PP", plan("CP2", "CP2")},
        {"fig4_bb1.csv", "SRS_PP", plan("BB1", "BB1")},
        {"fig5_single.csv", "RS_12", plan("SINGLE", "SINGLE")},
        {"fig5_cp1.csv", "RS_12", plan("CP1", "TWO_PI_5")},
        {"fig5_cp2.csv", "RS_12", plan("CP2", "TWO_PI_5")},
        {"fig5_bb1.csv", "RS_12", plan("BB1", "TWO_PI_5")},
        {"fig6_single.csv", "SRS_PP", plan("SINGLE", "SINGLE")},
        {"fig6_vr.csv", "SRS_PP", plan("VR", "SINGLE")},
        {"fig6_vr_raman_vr.csv", "SRS_PP", plan("VR", "VR")},
        {"fig7_single.csv", "RS_12", plan("SINGLE", "SINGLE")},
        {"fig7_vr.csv", "RS_12", plan("VR", "TWO_PI_5")},
    };
}

std::vector<SuiteReport> verify_suites(std::uint64_t seed, int trials) {
    std::vector<SuiteReport> reports;
    double worst_defect = 0;
    auto track = [&](const CMat3 &u) {
        worst_defect = std::max(worst_defect, unitarity_defect(u));
        return u;
    };

    {
        double worst = 0;
        std::string worst_label;
        for (const auto &f : matrix_fixtures()) {
            double d = max_abs_diff(track(f.computed), f.expected);
            if (d >= worst) {
                worst = d;
                worst_label = f.label;
            }
        }
        reports.push_back({"fixtures", worst, 1e-10, worst <= 1e-10, "worst: " + worst_label});
    }

    {
        auto rows = table1_rows();
        int passed = static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const auto &r) { return r.pass; }));
        double worst = 0;
        for (const auto &protocol : builtin_protocols()) {
            RunResult r = run(protocol, {}, {});
            for (Chirality chi : {Chirality::L, Chirality::R}) {
                track(r.propagator(chi));
                worst = std::max(worst, std::abs(1.0 - r.populations(chi)[protocol.final_state(chi) - 1]));
            }
        }
        reports.push_back({"table1", worst, 1e-10, passed == static_cast<int>(rows.size()) && worst <= 1e-10,
                           std::to_string(passed) + "/" + std::to_string(rows.size()) + " rows"});
    }

    {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> eps_dist(-0.5, 0.5);
        const std::vector<std::string> q_names{"SINGLE", "CP1", "CP2", "BB1", "VR"};
        const std::vector<std::string> srs_raman{"SINGLE", "CP1", "CP2", "BB1", "VR"};
        const std::vector<std::string> rs_raman{"SINGLE", "TWO_PI_5", "TWO_PI_9"};
        const std::vector<std::string> orders{"auto", "forward", "reversed"};
        std::uniform_int_distribution<std::size_t> protocol_dist(0, builtin_protocols().size() - 1);

        double worst_oracle = 0;
        double worst_slicing = 0;
        for (int t = 0; t < trials; t++) {
            const Protocol &protocol = builtin_protocols()[protocol_dist(rng)];
            SubstitutionPlan plan;
            plan.q_template = pick(rng, q_names);
            plan.raman_template =
                pick(rng, protocol.family == ProtocolFamily::SingleRamanSingle ? srs_raman : rs_raman);
            plan.q_order = *parse_segment_order(pick(rng, orders));
            plan.raman_order = *parse_segment_order(pick(rng, orders));
            ErrorModel err{eps_dist(rng)};

            auto steps = compile(protocol, plan);
            for (Chirality chi : {Chirality::L, Chirality::R}) {
                CMat3 analytic = track(sequence_propagator(steps, chi, err));
                CMat3 oracle = track(evolve_piecewise(steps, chi, err, {1, 1.0}));
                worst_oracle = std::max(worst_oracle, max_abs_diff(analytic, oracle));
                for (int slices : {7, 64}) {
                    CMat3 sliced = track(evolve_piecewise(steps, chi, err, {slices, 1.0}));
                    worst_slicing = std::max(worst_slicing, max_abs_diff(sliced, oracle));
                }
            }
        }
        reports.push_back({"oracle-equivalence", worst_oracle, 1e-10, worst_oracle <= 1e-10,
                           std::to_string(trials) + " random trials, seed " + std::to_string(seed)});
        reports.push_back({"slicing-invariance", worst_slicing, 1e-12, worst_slicing <= 1e-12, "slices 1/7/64"});
    }

    {
        double worst_residual = 0;
        double worst_u21 = 0;
        RunResult bare = run(find_protocol("SRS_PP"), {}, {});
        for (Chirality chi : {Chirality::L, Chirality::R}) {
            SrsBlocks blocks = srs_blocks({}, chi, {});
            SymmetryPhases phases = extract_symmetry_phases(track(blocks.q), track(blocks.raman), 1e-6, chi);
            worst_residual = std::max(worst_residual, resolution_residual(phases));
            double predicted = std::abs(u21_prediction(phases, chi));
            worst_u21 = std::max(worst_u21, std::abs(predicted - std::abs(bare.propagator(chi)(1, 0))));
        }
        reports.push_back({"resolution-residual", worst_residual, 1e-10, worst_residual <= 1e-10, "bare, eps = 0"});
        reports.push_back({"u21-prediction", worst_u21, 1e-6, worst_u21 <= 1e-6, "bare, eps = 0"});
    }

    reports.push_back({"unitarity", worst_defect, 1e-12, worst_defect <= 1e-12, "all propagators above"});

    for (const auto &[protocol_name, state, raman_for] :
         {std::tuple{"SRS_PP", 2, std::string("")}, std::tuple{"RS_12", 3, std::string("TWO_PI_5")}}) {
        const Protocol &protocol = find_protocol(protocol_name);
        std::vector<double> widths;
        std::ostringstream detail;
        for (const char *name : {"SINGLE", "CP1", "CP2", "BB1"}) {
            SubstitutionPlan plan;
            plan.q_template = name;
            plan.raman_template = raman_for.empty() || plan.q_template == kSingleTemplate ? name : raman_for;
            double w = robustness_window(sweep(protocol, plan, -0.5, 0.5, 2001), state, 0.98);
            widths.push_back(w);
            detail << name << "=" << w << " ";
        }
        bool ordered = widths[0] < widths[1] && widths[1] < widths[2] && widths[3] > widths[0] &&
                       widths[3] >= widths[1];
        reports.push_back({std::string("window-ordering ") + protocol_name, widths[2], 0.0, ordered, detail.str()});
    }
    return reports;
}

}  // namespace chiralpulse::cli
