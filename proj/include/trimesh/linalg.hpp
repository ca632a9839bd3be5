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

#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace trimesh {

using Complex = std::complex<double>;

/// Dense complex matrix; the carrier of every unitary in the library.
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kRoundtripTol = 1e-12;

/// Principal argument in (-pi, pi]; the negative real axis maps to +pi.
double principal_arg(Complex z);

/// ||M^dagger M - I||_F <= tol. Throws DimensionError for non-square M.
bool is_unitary(const ComplexMatrix &m, double tol = kUnitaryTol);

/// Determinant via LU with partial pivoting.
Complex determinant(const ComplexMatrix &m);

struct SpecialUnitaryProjection {
    double phase = 0.0;  ///< m = exp(i * phase) * special
    ComplexMatrix special;
};

/// Splits a unitary into a global phase and a determinant-one factor.
///
/// The phase is Arg(det m) / n with Arg taken on the principal branch, so the
/// result is deterministic: a determinant on the negative real axis yields
/// phase = pi / n.
SpecialUnitaryProjection project_to_su(const ComplexMatrix &m, double tol = kUnitaryTol);

/// exp(h) for anti-Hermitian h, through the eigendecomposition of the
/// Hermitian matrix i*h. Throws ValidationError when ||h + h^dagger||_F > tol.
ComplexMatrix expm_skew_hermitian(const ComplexMatrix &h, double tol = kUnitaryTol);

/// Haar-distributed U(n) sample: QR of a complex Gaussian matrix with the
/// phases of diag(R) moved into Q. Test oracle only.
ComplexMatrix random_unitary_qr(int n, std::uint64_t seed);

/// Frobenius norm of a - b.
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace trimesh
