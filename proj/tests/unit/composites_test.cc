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

#include "gtest/gtest.h"
#include "test_util.h"

using namespace chiralpulse;
using namespace chiralpulse::testing;

namespace {

const double kPiOverSqrt2 = kPi / std::numbers::sqrt2;

CompositeTemplate one_segment(double area, double phase, RotationTarget target) {
    return {"ONE", {{area, phase}}, RotationKind::Constant, target};
}

/// |1> -> |3> probability of the composite Q block, i.e. the two-state
/// transition probability of the template.
double q_transfer(const CompositeTemplate &t, double eps) {
    auto steps = expand_q(t, 0.0, false);
    return std::norm(sequence_propagator(steps, Chirality::L, {eps})(2, 0));
}

double max_deviation_over(const CompositeTemplate &t, double eps_bound) {
    double p0 = q_transfer(t, 0.0);
    double worst = 0;
    for (int k = -200; k <= 200; k++) {
        worst = std::max(worst, std::abs(q_transfer(t, eps_bound * k / 200.0) - p0));
    }
    return worst;
}

/// Spin-1 image of an SU(2) matrix in the basis (|+1>, |0>, |-1>).
CMat3 spin_one(const CMat2 &u) {
    cplx a = u[0][0], b = u[0][1], c = u[1][0], d = u[1][1];
    const double r2 = std::numbers::sqrt2;
    return CMat3{a * a, r2 * a * b, b * b, r2 * a * c, a * d + b * c, r2 * b * d, c * c, r2 * c * d, d * d};
}

}  // namespace

TEST(composites, builtin_library) {
    const auto &all = builtin_templates();
    ASSERT_EQ(all.size(), 6u);
    std::vector<std::string> names;
    for (const auto &t : all) {
        names.push_back(t.name);
    }
    EXPECT_EQ(names, (std::vector<std::string>{"CP1", "CP2", "BB1", "TWO_PI_5", "TWO_PI_9", "VR"}));

    EXPECT_NEAR(find_template("CP1").total_nominal_area(), 2.2798 * kPi, 1e-12);
    EXPECT_NEAR(find_template("CP2").total_nominal_area(), 3.9 * kPi, 1e-12);
    EXPECT_NEAR(find_template("BB1").total_nominal_area(), 4.5 * kPi, 1e-12);
    EXPECT_NEAR(find_template("TWO_PI_5").total_nominal_area(), 6 * kPi, 1e-12);
    EXPECT_NEAR(find_template("TWO_PI_9").total_nominal_area(), 10 * kPi, 1e-12);
    EXPECT_NEAR(find_template("VR").total_nominal_area(), 2 * kPi, 1e-12);

    const auto &bb1 = find_template("BB1");
    double chi = std::acos(-1.0 / 8.0);
    EXPECT_NEAR(chi / kPi, 0.5399, 1e-4);
    EXPECT_EQ(bb1.segments[1].phase, chi);
    EXPECT_EQ(bb1.segments[2].phase, 3 * chi);

    EXPECT_EQ(find_template("VR").rotation_kind, RotationKind::Variable);
    EXPECT_EQ(find_template("TWO_PI_9").target, RotationTarget::TwoPi);
    EXPECT_EQ(find_template("CP2").segments[2].phase, 0.8179 * kPi);
}

TEST(composites, name_lookup) {
    EXPECT_TRUE(is_known_template("SINGLE"));
    EXPECT_TRUE(is_known_template("TWO_PI_5"));
    EXPECT_FALSE(is_known_template("CP3"));
    EXPECT_THROW(find_template("CP3"), std::invalid_argument);
    EXPECT_THROW(find_template("SINGLE"), std::invalid_argument);
}

TEST(composites, expand_q_cp1) {
    auto steps = expand_q(find_template("CP1"), 0.0, false);
    ASSERT_EQ(steps.size(), 3u);
    const double areas[] = {0.6399 * kPi, kPi, 0.6399 * kPi};
    const double phases[] = {1.6558 * kPi, 0.4413 * kPi, 1.6558 * kPi};
    for (std::size_t k = 0; k < 3; k++) {
        const auto &pulse = std::get<SinglePulse>(steps[k]).pulse;
        EXPECT_EQ(pulse.transition, Transition::Q);
        EXPECT_EQ(pulse.area, areas[k]);
        EXPECT_EQ(pulse.phase, phases[k]);
    }
}

TEST(composites, expand_q_base_phase_and_reversal) {
    auto steps = expand_q(find_template("VR"), kPi, true);
    ASSERT_EQ(steps.size(), 3u);
    EXPECT_EQ(std::get<SinglePulse>(steps[0]).pulse.phase, kPi / 2 + kPi);
    EXPECT_EQ(std::get<SinglePulse>(steps[2]).pulse.phase, -kPi / 2 + kPi);
    EXPECT_EQ(std::get<SinglePulse>(steps[1]).pulse.area, kPi);
}

TEST(composites, expand_q_degenerate_template) {
    auto steps = expand_q(one_segment(kPi / 2, 0.0, RotationTarget::HalfPi), 0.0, false);
    ASSERT_EQ(steps.size(), 1u);
    EXPECT_EQ(steps[0], make_single(Transition::Q, kPi / 2, 0.0));
}

TEST(composites, expand_q_rejects_two_pi_templates) {
    EXPECT_THROW(expand_q(find_template("TWO_PI_5"), 0.0, false), std::invalid_argument);
}

TEST(composites, cp1_is_a_half_pi_rotation) {
    // Phase constants carry four decimals, so the target is met to ~1e-4.
    auto steps = expand_q(find_template("CP1"), 0.0, false);
    CMat3 u = sequence_propagator(steps, Chirality::L, {});
    EXPECT_NEAR(std::norm(u(0, 2)), 0.5, 1e-4);
    EXPECT_LE(unitarity_defect(u), 1e-12);
}

TEST(composites, half_pi_template_fidelity) {
    for (const char *name : {"CP1", "BB1", "VR"}) {
        auto steps = expand_q(find_template(name), 0.0, false);
        CMat3 u = sequence_propagator(steps, Chirality::L, {});
        EXPECT_NEAR(std::norm(u(0, 0)), 0.5, 1e-4) << name;
        EXPECT_NEAR(std::norm(u(0, 2)), 0.5, 1e-4) << name;
    }
    // CP2's tabulated phases land 2.8e-4 away from an exact pi/2 rotation.
    auto steps = expand_q(find_template("CP2"), 0.0, false);
    CMat3 u = sequence_propagator(steps, Chirality::L, {});
    EXPECT_NEAR(std::norm(u(0, 2)), 0.5, 5e-4);
    EXPECT_GT(std::abs(std::norm(u(0, 2)) - 0.5), 1e-4);
}

TEST(composites, error_compensation_order) {
    EXPECT_LE(max_deviation_over(find_template("CP1"), 0.1), 1e-2);
    EXPECT_LE(max_deviation_over(find_template("CP2"), 0.1), 1e-3);
    // Single pulse for comparison: first-order deviation ~ (pi/4) eps.
    EXPECT_GT(max_deviation_over(one_segment(kPi / 2, 0, RotationTarget::HalfPi), 0.1), 0.07);
}

TEST(composites, bb1_residual_error_is_third_order) {
    const auto &bb1 = find_template("BB1");
    double p0 = q_transfer(bb1, 0.0);
    double d_small = std::abs(q_transfer(bb1, 0.05) - p0);
    double d_big = std::abs(q_transfer(bb1, 0.1) - p0);
    EXPECT_NEAR(d_big / d_small, 8.0, 0.1);
    EXPECT_LE(max_deviation_over(bb1, 0.09), 1e-3);
    EXPECT_NEAR(d_big, 1.2677e-3, 1e-6);
}

TEST(composites, two_pi_5_is_a_full_rotation) {
    auto u = two_state_propagator(find_template("TWO_PI_5").segments, {});
    EXPECT_LE(std::norm(u[1][0]), 1e-10);
    auto u9 = two_state_propagator(find_template("TWO_PI_9").segments, {});
    EXPECT_LE(std::norm(u9[1][0]), 1e-10);
}

TEST(composites, raman_lift_cp1) {
    auto steps = expand_raman(find_template("CP1"), kPiOverSqrt2, kPiOverSqrt2, false);
    ASSERT_EQ(steps.size(), 3u);
    const double areas[] = {0.6399 * kPi, kPi, 0.6399 * kPi};
    const double phases[] = {1.6558 * kPi, 0.4413 * kPi, 1.6558 * kPi};
    for (std::size_t k = 0; k < 3; k++) {
        const auto &r = std::get<RamanPulse>(steps[k]);
        EXPECT_NEAR(r.p.area, std::numbers::sqrt2 * areas[k], 1e-14);
        EXPECT_NEAR(r.s.area, std::numbers::sqrt2 * areas[k], 1e-14);
        EXPECT_EQ(r.p.phase, phases[k]);
        EXPECT_NEAR(r.s.phase, phases[k] + kPi / 2, 1e-14);
    }
}

TEST(composites, raman_lift_two_pi_5) {
    const double big = xi1() * kPi;
    const double small = xi2() * kPi;
    auto steps = expand_raman(find_template("TWO_PI_5"), big, small, false);
    ASSERT_EQ(steps.size(), 5u);
    const double p_areas[] = {big / 2, big / 2, big, big / 2, big / 2};
    const double phases[] = {0, 2 * kPi / 3, 0, 2 * kPi / 3, 0};
    for (std::size_t k = 0; k < 5; k++) {
        const auto &r = std::get<RamanPulse>(steps[k]);
        EXPECT_NEAR(r.p.area, p_areas[k], 1e-14);
        EXPECT_NEAR(r.s.area, p_areas[k] * small / big, 1e-14);
        EXPECT_NEAR(r.p.phase, phases[k], 1e-15);
        // The S phase is conjugated so the bright state stays fixed.
        EXPECT_NEAR(r.s.phase, kPi / 2 - phases[k], 1e-15);
    }
}

TEST(composites, raman_lift_degenerate_two_pi_template) {
    auto steps = expand_raman(one_segment(2 * kPi, 0.0, RotationTarget::TwoPi), xi1() * kPi, xi2() * kPi, false);
    ASSERT_EQ(steps.size(), 1u);
    const auto &r = std::get<RamanPulse>(steps[0]);
    EXPECT_NEAR(r.p.area, xi1() * kPi, 1e-14);
    EXPECT_NEAR(r.s.area, xi2() * kPi, 1e-14);
    EXPECT_EQ(r.p.phase, 0.0);
    EXPECT_EQ(r.s.phase, kPi / 2);
}

TEST(composites, raman_lift_rejects_mismatched_totals) {
    EXPECT_THROW(expand_raman(find_template("CP1"), xi1() * kPi, xi2() * kPi, false), std::invalid_argument);
    EXPECT_THROW(expand_raman(find_template("TWO_PI_5"), kPiOverSqrt2, kPiOverSqrt2, false), std::invalid_argument);
    EXPECT_THROW(expand_raman(find_template("TWO_PI_5"), xi1() * kPi, xi1() * kPi, false), std::invalid_argument);
    EXPECT_NO_THROW(expand_raman(find_template("TWO_PI_9"), xi2() * kPi, xi1() * kPi, true));
}

TEST(composites, ms_reduce_values) {
    EXPECT_NEAR(ms_reduce(xi1() * kPi, xi2() * kPi, {}), 2 * kPi, 1e-12);
    EXPECT_NEAR(ms_reduce(kPiOverSqrt2, kPiOverSqrt2, {}), kPi, 1e-14);
    EXPECT_EQ(ms_reduce(0, 0, {}), 0.0);
    EXPECT_NEAR(ms_reduce(xi1() * kPi, xi2() * kPi, {0.1}), 2.2 * kPi, 1e-12);
}

TEST(composites, half_pi_lift_is_spin_one_image) {
    // Equal P and S fields with a common phase drive the three states as a
    // spin-1; the frame W absorbs the fixed pi/2 on S.
    CMat3 frame = CMat3::diagonal(1, 1, -kI);
    for (const char *name : {"CP1", "CP2", "BB1", "VR"}) {
        const auto &t = find_template(name);
        for (double eps : {0.0, 0.13, -0.37}) {
            for (bool reversed : {false, true}) {
                auto steps = expand_raman(t, kPiOverSqrt2, kPiOverSqrt2, reversed);
                CMat3 lifted = sequence_propagator(steps, Chirality::L, {eps});
                CMat3 expected = frame * spin_one(two_state_propagator(t.segments, {eps}, reversed)) * frame.adjoint();
                EXPECT_TRUE(mat_near(lifted, expected, 1e-10)) << name << " eps=" << eps;
            }
        }
    }
}

TEST(composites, two_pi_lift_acts_on_fixed_bright_state) {
    const double big = xi1() * kPi;
    const double small = xi2() * kPi;
    for (const char *name : {"TWO_PI_5", "TWO_PI_9"}) {
        const auto &t = find_template(name);
        for (double eps : {0.0, 0.2, -0.31}) {
            for (auto [p, s] : {std::pair{big, small}, std::pair{small, big}}) {
                auto steps = expand_raman(t, p, s, false);
                CMat3 lifted = sequence_propagator(steps, Chirality::R, {eps});
                CVec3 bright{p / (2 * kPi), 0, -kI * s / (2 * kPi)};
                CVec3 middle{0, 1, 0};
                CMat2 two = two_state_propagator(t.segments, {eps});
                const CVec3 *basis[] = {&bright, &middle};
                for (int r = 0; r < 2; r++) {
                    for (int c = 0; c < 2; c++) {
                        CVec3 image = lifted * *basis[c];
                        const CVec3 &row = *basis[r];
                        cplx element = std::conj(row[0]) * image[0] + std::conj(row[1]) * image[1] +
                                       std::conj(row[2]) * image[2];
                        EXPECT_NEAR(std::abs(element - two[r][c]), 0.0, 1e-10) << name << " eps=" << eps;
                    }
                }
            }
        }
    }
}
