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

#ifndef CHIRALPULSE_QMAT_H
#define CHIRALPULSE_QMAT_H

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>

namespace chiralpulse {

using cplx = std::complex<double>;

/// Column vector over the basis |1>, |2>, |3>.
using CVec3 = std::array<cplx, 3>;

/// Dense 3x3 complex matrix, row-major in state order |1>, |2>, |3>.
///
/// Indices are zero-based: `m(0, 2)` is the |1><3| element.
class CMat3 {
   public:
    constexpr CMat3() = default;

    /// Row-major construction; exactly nine entries.
    CMat3(std::initializer_list<cplx> row_major);

    static CMat3 identity();
    static CMat3 diagonal(cplx d0, cplx d1, cplx d2);
    /// |a><b|
    static CMat3 outer(const CVec3 &a, const CVec3 &b);

    cplx &operator()(std::size_t row, std::size_t col) {
        return entries_[row * 3 + col];
    }
    const cplx &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * 3 + col];
    }

    CMat3 adjoint() const;
    cplx determinant() const;
    CVec3 column(std::size_t col) const;

    CMat3 &operator+=(const CMat3 &other);
    CMat3 &operator-=(const CMat3 &other);
    CMat3 &operator*=(cplx scale);

    bool operator==(const CMat3 &other) const = default;

   private:
    std::array<cplx, 9> entries_{};
};

CMat3 operator+(CMat3 a, const CMat3 &b);
CMat3 operator-(CMat3 a, const CMat3 &b);
CMat3 operator*(CMat3 a, cplx scale);
CMat3 operator*(cplx scale, CMat3 a);
CVec3 operator*(const CMat3 &m, const CVec3 &v);

/// Standard matrix product a*b.
CMat3 mat_mul(const CMat3 &a, const CMat3 &b);
CMat3 operator*(const CMat3 &a, const CMat3 &b);

/// Frobenius norm of U^dagger U - I.
double unitarity_defect(const CMat3 &u);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const CMat3 &a, const CMat3 &b);

double frobenius_norm(const CMat3 &m);

/// Hermitian 3x3 generator in angular-frequency units.
///
/// Only the diagonal and the strict upper triangle are stored; the lower
/// triangle is always the conjugate mirror, so the matrix is Hermitian by
/// construction.
class HMat3 {
   public:
    constexpr HMat3() = default;

    /// Validates Hermiticity of an arbitrary matrix (Frobenius defect of
    /// m - m^dagger at most 1e-12); throws std::invalid_argument otherwise.
    static HMat3 from_matrix(const CMat3 &m);

    double diagonal(std::size_t i) const {
        return diag_[i];
    }
    void set_diagonal(std::size_t i, double value) {
        diag_[i] = value;
    }

    /// Element (row, col) for any row/col; lower entries are conjugates.
    cplx operator()(std::size_t row, std::size_t col) const;

    /// Sets the (row, col) coupling with row < col; the mirror follows.
    void set_upper(std::size_t row, std::size_t col, cplx value);
    void add_upper(std::size_t row, std::size_t col, cplx value);

    CMat3 to_matrix() const;

    bool operator==(const HMat3 &other) const = default;

   private:
    static std::size_t upper_slot(std::size_t row, std::size_t col);

    std::array<double, 3> diag_{};
    // (0,1), (0,2), (1,2)
    std::array<cplx, 3> upper_{};
};

/// exp(-i h t) via eigendecomposition of the Hermitian generator. Any real t
/// is accepted; negative t runs the evolution backwards.
CMat3 expm_hermitian(const HMat3 &h, double t);

std::ostream &operator<<(std::ostream &out, const CMat3 &m);

}  // namespace chiralpulse

#endif
