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

#ifndef CHIRALPULSE_TESTS_TEST_UTIL_H
#define CHIRALPULSE_TESTS_TEST_UTIL_H

#include <cmath>
#include <numbers>
#include <random>

#include "chiralpulse/qmat.h"
#include "gtest/gtest.h"

namespace chiralpulse::testing {

inline constexpr cplx kI{0.0, 1.0};
inline const double kH = 1.0 / std::numbers::sqrt2;

inline ::testing::AssertionResult mat_near(const CMat3 &actual, const CMat3 &expected, double tol) {
    double d = max_abs_diff(actual, expected);
    if (d <= tol) {
        return ::testing::AssertionSuccess();
    }
    return ::testing::AssertionFailure() << "max entry deviation " << d << " > " << tol << "\n  actual   " << actual
                                         << "\n  expected " << expected;
}

inline cplx random_complex(std::mt19937_64 &rng) {
    std::normal_distribution<double> d;
    return {d(rng), d(rng)};
}

inline HMat3 random_hermitian(std::mt19937_64 &rng, double scale = 3.0) {
    std::uniform_real_distribution<double> d(-scale, scale);
    HMat3 h;
    for (std::size_t i = 0; i < 3; i++) {
        h.set_diagonal(i, d(rng));
    }
    h.set_upper(0, 1, {d(rng), d(rng)});
    h.set_upper(0, 2, {d(rng), d(rng)});
    h.set_upper(1, 2, {d(rng), d(rng)});
    return h;
}

/// Haar-ish random unitary from Gram-Schmidt on Gaussian columns. Independent
/// of the exponential path.
inline CMat3 random_unitary(std::mt19937_64 &rng) {
    std::array<CVec3, 3> cols;
    for (std::size_t c = 0; c < 3; c++) {
        CVec3 v{random_complex(rng), random_complex(rng), random_complex(rng)};
        for (std::size_t p = 0; p < c; p++) {
            cplx overlap = std::conj(cols[p][0]) * v[0] + std::conj(cols[p][1]) * v[1] + std::conj(cols[p][2]) * v[2];
            for (std::size_t k = 0; k < 3; k++) {
                v[k] -= overlap * cols[p][k];
            }
        }
        double norm = std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
        for (auto &x : v) {
            x /= norm;
        }
        cols[c] = v;
    }
    CMat3 u;
    for (std::size_t r = 0; r < 3; r++) {
        for (std::size_t c = 0; c < 3; c++) {
            u(r, c) = cols[c][r];
        }
    }
    return u;
}

}  // namespace chiralpulse::testing

#endif
