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

#include "chiralpulse/qmat.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace chiralpulse {

CMat3::CMat3(std::initializer_list<cplx> row_major) {
    if (row_major.size() != 9) {
        throw std::invalid_argument("CMat3 needs exactly 9 entries, got " + std::to_string(row_major.size()));
    }
    std::copy(row_major.begin(), row_major.end(), entries_.begin());
}

CMat3 CMat3::identity() {
    return diagonal(1.0, 1.0, 1.0);
}

CMat3 CMat3::diagonal(cplx d0, cplx d1, cplx d2) {
    CMat3 m;
    m(0, 0) = d0;
    m(1, 1) = d1;
    m(2, 2) = d2;
    return m;
}

CMat3 CMat3::outer(const CVec3 &a, const CVec3 &b) {
    CMat3 m;
    for (std::size_t r = 0; r < 3; r++) {
        for (std::size_t c = 0; c < 3; c++) {
            m(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return m;
}

CMat3 CMat3::adjoint() const {
    CMat3 m;
    for (std::size_t r = 0; r < 3; r++) {
        for (std::size_t c = 0; c < 3; c++) {
            m(r, c) = std::conj((*this)(c, r));
        }
    }
    return m;
}

cplx CMat3::determinant() const {
    const CMat3 &m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

CVec3 CMat3::column(std::size_t col) const {
    return {(*this)(0, col), (*this)(1, col), (*this)(2, col)};
}

CMat3 &CMat3::operator+=(const CMat3 &other) {
    for (std::size_t k = 0; k < 9; k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

CMat3 &CMat3::operator-=(const CMat3 &other) {
    for (std::size_t k = 0; k < 9; k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

CMat3 &CMat3::operator*=(cplx scale) {
    for (auto &e : entries_) {
        e *= scale;
    }
    return *this;
}

CMat3 operator+(CMat3 a, const CMat3 &b) {
    a += b;
    return a;
}

CMat3 operator-(CMat3 a, const CMat3 &b) {
    a -= b;
    return a;
}

CMat3 operator*(CMat3 a, cplx scale) {
    a *= scale;
    return a;
}

CMat3 operator*(cplx scale, CMat3 a) {
    a *= scale;
    return a;
}

CVec3 operator*(const CMat3 &m, const CVec3 &v) {
    CVec3 out{};
    for (std::size_t r = 0; r < 3; r++) {
        out[r] = m(r, 0) * v[0] + m(r, 1) * v[1] + m(r, 2) * v[2];
    }
    return out;
}

CMat3 mat_mul(const CMat3 &a, const CMat3 &b) {
    CMat3 out;
    for (std::size_t r = 0; r < 3; r++) {
        for (std::size_t c = 0; c < 3; c++) {
            out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
        }
    }
    return out;
}

CMat3 operator*(const CMat3 &a, const CMat3 &b) {
    return mat_mul(a, b);
}

double frobenius_norm(const CMat3 &m) {
    double total = 0;
    for (std::size_t r = 0; r < 3; r++) {
        for (std::size_t c = 0; c < 3; c++) {
            total += std::norm(m(r, c));
        }
    }
    return std::sqrt(total);
}

double unitarity_defect(const CMat3 &u) {
    return frobenius_norm(u.adjoint() * u - CMat3::identity());
}

double max_abs_diff(const CMat3 &a, const CMat3 &b) {
    double worst = 0;
    for (std::size_t r = 0; r < 3; r++) {
        for (std::size_t c = 0; c < 3; c++) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

HMat3 HMat3::from_matrix(const CMat3 &m) {
    double defect = frobenius_norm(m - m.adjoint());
    if (!(defect <= 1e-12)) {
        throw std::invalid_argument("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    HMat3 h;
    for (std::size_t i = 0; i < 3; i++) {
        h.diag_[i] = m(i, i).real();
    }
    // Average the two triangles so tiny asymmetries do not bias the result.
    h.set_upper(0, 1, 0.5 * (m(0, 1) + std::conj(m(1, 0))));
    h.set_upper(0, 2, 0.5 * (m(0, 2) + std::conj(m(2, 0))));
    h.set_upper(1, 2, 0.5 * (m(1, 2) + std::conj(m(2, 1))));
    return h;
}

std::size_t HMat3::upper_slot(std::size_t row, std::size_t col) {
    if (row == 0 && col == 1) {
        return 0;
    }
    if (row == 0 && col == 2) {
        return 1;
    }
    if (row == 1 && col == 2) {
        return 2;
    }
    throw std::invalid_argument("HMat3 upper-triangle access needs row < col < 3");
}

cplx HMat3::operator()(std::size_t row, std::size_t col) const {
    if (row == col) {
        return diag_[row];
    }
    if (row < col) {
        return upper_[upper_slot(row, col)];
    }
    return std::conj(upper_[upper_slot(col, row)]);
}

void HMat3::set_upper(std::size_t row, std::size_t col, cplx value) {
    upper_[upper_slot(row, col)] = value;
}

void HMat3::add_upper(std::size_t row, std::size_t col, cplx value) {
    upper_[upper_slot(row, col)] += value;
}

CMat3 HMat3::to_matrix() const {
    CMat3 m;
    for (std::size_t r = 0; r < 3; r++) {
        for (std::size_t c = 0; c < 3; c++) {
            m(r, c) = (*this)(r, c);
        }
    }
    return m;
}

CMat3 expm_hermitian(const HMat3 &h, double t) {
    Eigen::Matrix3cd dense;
    for (int r = 0; r < 3; r++) {
        for (int c = 0; c < 3; c++) {
            dense(r, c) = h(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(dense);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigensolver did not converge");
    }
    const Eigen::Matrix3cd &vectors = solver.eigenvectors();
    const Eigen::Vector3d &values = solver.eigenvalues();

    Eigen::Vector3cd phases;
    for (int k = 0; k < 3; k++) {
        phases(k) = std::polar(1.0, -values(k) * t);
    }
    Eigen::Matrix3cd result = vectors * phases.asDiagonal() * vectors.adjoint();
    // One Newton-Schulz polar step removes the residual non-unitarity, which
    // would otherwise add up coherently when a slice is applied many times.
    result = 0.5 * result * (3.0 * Eigen::Matrix3cd::Identity() - result.adjoint() * result);

    CMat3 out;
    for (int r = 0; r < 3; r++) {
        for (int c = 0; c < 3; c++) {
            out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = result(r, c);
        }
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const CMat3 &m) {
    out << "[";
    for (std::size_t r = 0; r < 3; r++) {
        out << (r ? ", [" : "[");
        for (std::size_t c = 0; c < 3; c++) {
            out << (c ? ", " : "") << m(r, c);
        }
        out << "]";
    }
    return out << "]";
}

}  // namespace chiralpulse
