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

#include <Eigen/Dense>

#include "trimesh/linalg.hpp"

namespace trimesh {

using Su2Matrix = Eigen::Matrix2cd;

/// z-y-z Euler angles of one SU(2) coupler, in radians.
///
/// K(alpha, beta, gamma) = Rz(alpha) Ry(beta) Rz(gamma) with
/// Rz(t) = diag(e^{it/2}, e^{-it/2}) and Ry(t) the real rotation by t/2.
/// After normalize(): beta in [0, pi], alpha and gamma in (-2pi, 2pi].
struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    friend bool operator==(const EulerAngles &, const EulerAngles &) = default;
};

Su2Matrix su2_from_euler(const EulerAngles &a);

/// Reduces angles to the normalized domain without changing su2_from_euler(a).
EulerAngles normalize(const EulerAngles &a);

/// Inverse of su2_from_euler on the normalized domain.
///
/// beta = 2 atan2(|u21|, |u11|). When beta is within tol of 0 or pi the
/// decomposition is gimbal-locked; gamma is then pinned to 0 and the whole
/// phase goes into alpha. Throws ValidationError unless u is 2x2, unitary and
/// has unit determinant within tol.
EulerAngles euler_from_su2(const ComplexMatrix &u, double tol = kUnitaryTol);

/// Angles of the SU(2) matrix whose first column is (a, b) / |(a, b)|.
///
/// Applying the inverse of that matrix to (a, b) gives (|(a, b)|, 0). A zero
/// component has argument 0. Throws DegenerateInputError when a = b = 0.
EulerAngles zeroing_angles(Complex a, Complex b);

enum class PhaseSide { left, right };

struct PhasePush {
    EulerAngles angles;
    double common_phase = 0.0;
};

/// Moves a two-mode phase diag(e^{i theta_i}, e^{i theta_j}) into a coupler.
///
/// left:  diag(theta) K(a, b, g) = e^{i mu} K(a + theta_i - theta_j, b, g)
/// right: K(a, b, g) diag(theta) = e^{i mu} K(a, b, g + theta_i - theta_j)
/// with mu = (theta_i + theta_j) / 2 returned as common_phase.
PhasePush push_phase_through_coupler(double theta_i, double theta_j, const EulerAngles &a,
                                     PhaseSide side = PhaseSide::left);

/// Angles of diag(e^{i in_i}, e^{i in_j}) K(a) diag(e^{-i out_i}, e^{-i out_j}).
///
/// Valid only when in_i + in_j == out_i + out_j, in which case the result is
/// again special unitary. Used to slide diagonal phase layers through a mesh
/// while moving any amount of phase between the two modes of a coupler.
EulerAngles transfer_phases(const EulerAngles &a, double in_i, double in_j, double out_i,
                            double out_j);

}  // namespace trimesh
