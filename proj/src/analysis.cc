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

#include "chiralpulse/analysis.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "chiralpulse/oracle.h"

namespace chiralpulse {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

double pattern_deviation(const CMat3 &u, const std::array<double, 9> &pattern) {
    double worst = 0;
    for (std::size_t r = 0; r < 3; r++) {
        for (std::size_t c = 0; c < 3; c++) {
            worst = std::max(worst, std::abs(std::abs(u(r, c)) - pattern[r * 3 + c]));
        }
    }
    return worst;
}

void require_state(int state) {
    if (state < 1 || state > 3) {
        throw std::invalid_argument("state index must be 1, 2 or 3, got " + std::to_string(state));
    }
}

}  // namespace

std::vector<double> uniform_grid(double eps_min, double eps_max, int n) {
    if (n < 2 || !(eps_min < eps_max)) {
        std::ostringstream msg;
        msg << "sweep grid needs n >= 2 and eps_min < eps_max, got n=" << n << " range [" << eps_min << ", "
            << eps_max << "]";
        throw std::invalid_argument(msg.str());
    }
    std::vector<double> grid(static_cast<std::size_t>(n));
    double span = eps_max - eps_min;
    for (int i = 0; i < n; i++) {
        grid[static_cast<std::size_t>(i)] = eps_min + span * (static_cast<double>(i) / static_cast<double>(n - 1));
    }
    grid.back() = eps_max;
    return grid;
}

SweepProfile sweep(const Protocol &protocol, const SubstitutionPlan &plan, double eps_min, double eps_max, int n,
                   Engine engine, unsigned threads) {
    SweepProfile profile;
    profile.protocol = protocol.name;
    profile.plan = plan;
    profile.epsilons = uniform_grid(eps_min, eps_max, n);
    profile.order = resolve_order(protocol, plan);
    auto steps = compile(protocol, plan);

    std::size_t count = profile.epsilons.size();
    profile.pops_l.resize(count);
    profile.pops_r.resize(count);

    auto evaluate = [&](std::size_t i) {
        ErrorModel err{profile.epsilons[i]};
        for (Chirality chi : {Chirality::L, Chirality::R}) {
            CMat3 u = engine == Engine::Analytic ? sequence_propagator(steps, chi, err)
                                                 : evolve_piecewise(steps, chi, err);
            (chi == Chirality::L ? profile.pops_l : profile.pops_r)[i] = populations_from(u);
        }
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; i++) {
            evaluate(i);
        }
        return profile;
    }
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; w++) {
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += threads) {
                evaluate(i);
            }
        });
    }
    workers.clear();
    return profile;
}

std::vector<double> contrast(const SweepProfile &profile, int state) {
    require_state(state);
    auto k = static_cast<std::size_t>(state - 1);
    std::vector<double> out(profile.epsilons.size());
    for (std::size_t i = 0; i < out.size(); i++) {
        out[i] = profile.pops_l[i][k] - profile.pops_r[i][k];
    }
    return out;
}

double robustness_window(std::span<const double> epsilons, std::span<const double> contrast, double threshold) {
    if (epsilons.size() != contrast.size() || epsilons.empty()) {
        throw std::invalid_argument("robustness window needs equal-length, nonempty grids");
    }
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw std::invalid_argument("robustness threshold must lie in (0, 1)");
    }
    auto nearest = std::min_element(epsilons.begin(), epsilons.end(),
                                    [](double a, double b) { return std::abs(a) < std::abs(b); });
    std::size_t center = static_cast<std::size_t>(nearest - epsilons.begin());
    if (!(contrast[center] >= threshold)) {
        return 0.0;
    }
    std::size_t lo = center;
    std::size_t hi = center;
    while (lo > 0 && contrast[lo - 1] >= threshold) {
        lo--;
    }
    while (hi + 1 < contrast.size() && contrast[hi + 1] >= threshold) {
        hi++;
    }
    return epsilons[hi] - epsilons[lo];
}

double robustness_window(const SweepProfile &profile, int state, double threshold) {
    auto c = contrast(profile, state);
    return robustness_window(profile.epsilons, c, threshold);
}

double q_pattern_deviation(const CMat3 &u_q) {
    return pattern_deviation(u_q, {kInvSqrt2, 0, kInvSqrt2, 0, 1, 0, kInvSqrt2, 0, kInvSqrt2});
}

double raman_pattern_deviation(const CMat3 &u_raman) {
    return pattern_deviation(u_raman, {0.5, kInvSqrt2, 0.5, kInvSqrt2, 0, kInvSqrt2, 0.5, kInvSqrt2, 0.5});
}

double wrap_angle(double angle) {
    double wrapped = std::remainder(angle, 2 * kPi);
    if (wrapped <= -kPi) {
        wrapped += 2 * kPi;
    }
    return wrapped;
}

SymmetryPhases extract_symmetry_phases(const CMat3 &u_q, const CMat3 &u_raman, double tol, Chirality chi) {
    double q_dev = q_pattern_deviation(u_q);
    double r_dev = raman_pattern_deviation(u_raman);
    double worst = std::max(q_dev, r_dev);
    if (!(worst <= tol)) {
        std::ostringstream msg;
        msg << "propagator moduli deviate from the symmetric form by " << worst << " (Q " << q_dev << ", Raman "
            << r_dev << "), tolerance " << tol;
        throw PatternMismatch(msg.str(), worst);
    }
    auto arg = [](cplx z) { return wrap_angle(std::arg(z)); };
    SymmetryPhases phases;
    phases.alpha = arg(u_q(0, 0));
    phases.beta = arg(static_cast<double>(kappa(chi)) * u_q(0, 2));
    phases.gamma1 = arg(u_raman(0, 0));
    phases.gamma2 = arg(u_raman(1, 0));
    phases.gamma3 = arg(u_raman(2, 0));
    phases.gamma4 = arg(u_raman(0, 1));
    return phases;
}

double resolution_residual(const SymmetryPhases &phases) {
    double d = wrap_angle(2 * phases.gamma2 + phases.alpha + phases.beta - kPi / 2);
    return std::abs(d);
}

cplx u21_prediction(const SymmetryPhases &phases, Chirality chi) {
    constexpr cplx kI{0.0, 1.0};
    cplx bracket = static_cast<double>(kappa(chi)) * kI +
                   std::polar(1.0, 2 * phases.gamma2 + phases.alpha + phases.beta);
    return 0.5 * std::polar(1.0, -(phases.gamma2 + phases.beta)) * bracket;
}

SrsBlocks srs_blocks(const SubstitutionPlan &plan, Chirality chi, ErrorModel err) {
    const Protocol &srs = find_protocol("SRS_PP");
    validate_plan(srs, plan);
    ResolvedOrder order = resolve_order(srs, plan);

    std::vector<PulseStep> q_steps;
    if (plan.q_template == kSingleTemplate) {
        q_steps.push_back(make_single(Transition::Q, kPi / 2, 0.0));
    } else {
        q_steps = expand_q(find_template(plan.q_template), 0.0, order.q_reversed);
    }

    const double half = kPi / std::numbers::sqrt2;
    std::vector<PulseStep> raman_steps;
    if (plan.raman_template == kSingleTemplate) {
        raman_steps.push_back(make_raman(half, 0.0, half, kPi / 2));
    } else {
        raman_steps = expand_raman(find_template(plan.raman_template), half, half, order.raman_reversed);
    }
    return SrsBlocks{sequence_propagator(q_steps, chi, err), sequence_propagator(raman_steps, chi, err)};
}

}  // namespace chiralpulse
