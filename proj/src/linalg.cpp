// Copyright 2026 The trimesh Authors
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

#include "trimesh/linalg.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trimesh/errors.hpp"
#include "trimesh/random.hpp"

namespace trimesh {

namespace {

void require_square(const ComplexMatrix &m, const char *op) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw DimensionError(std::string(op) + ": expected a non-empty square matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

}  // namespace

double principal_arg(Complex z) {
    double a = std::arg(z);
    // std::arg returns -pi for (-x, -0.0); fold it onto the closed end of the branch.
    if (a <= -std::numbers::pi) {
        a = std::numbers::pi;
    }
    return a;
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("frobenius_distance: shape mismatch");
    }
    return (a - b).norm();
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    require_square(m, "is_unitary");
    const auto n = m.rows();
    return (m.adjoint() * m - ComplexMatrix::Identity(n, n)).norm() <= tol;
}

Complex determinant(const ComplexMatrix &m) {
    require_square(m, "determinant");
    return Eigen::PartialPivLU<ComplexMatrix>(m).determinant();
}

SpecialUnitaryProjection project_to_su(const ComplexMatrix &m, double tol) {
    if (!is_unitary(m, tol)) {
        throw ValidationError("project_to_su: input is not unitary within tolerance");
    }
    const double phase = principal_arg(determinant(m)) / static_cast<double>(m.rows());
    return {phase, std::polar(1.0, -phase) * m};
}

ComplexMatrix expm_skew_hermitian(const ComplexMatrix &h, double tol) {
    require_square(h, "expm_skew_hermitian");
    if ((h + h.adjoint()).norm() > tol) {
        throw ValidationError("expm_skew_hermitian: input is not anti-Hermitian");
    }
    // i*h is Hermitian; h = -i * V diag(lambda) V^dagger.
    const ComplexMatrix hermitian = Complex(0.0, 1.0) * h;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitian);
    if (eig.info() != Eigen::Success) {
        throw ValidationError("expm_skew_hermitian: eigendecomposition failed");
    }
    const auto &v = eig.eigenvectors();
    Eigen::VectorXcd phases(v.cols());
    for (Eigen::Index k = 0; k < v.cols(); ++k) {
        phases(k) = std::polar(1.0, -eig.eigenvalues()(k));
    }
    return v * phases.asDiagonal() * v.adjoint();
}

ComplexMatrix random_unitary_qr(int n, std::uint64_t seed) {
    if (n < 1) {
        throw DimensionError("random_unitary_qr: n must be positive");
    }
    Rng rng(seed);
    ComplexMatrix z(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const double re = rng.normal();
            const double im = rng.normal();
            z(r, c) = Complex(re, im) / std::numbers::sqrt2;
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    const ComplexMatrix &packed = qr.matrixQR();
    for (int k = 0; k < n; ++k) {
        const Complex rkk = packed(k, k);
        const double mag = std::abs(rkk);
        // Z = (Q L)(L^-1 R) with L = diag(r_kk/|r_kk|) makes diag(R) positive.
        q.col(k) *= mag > 0.0 ? rkk / mag : Complex(1.0, 0.0);
    }
    return q;
}

}  // namespace trimesh
