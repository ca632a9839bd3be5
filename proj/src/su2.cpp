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

#include "trimesh/su2.hpp"

#include <cmath>
#include <numbers>

#include "trimesh/errors.hpp"

namespace trimesh {

namespace {

constexpr double kPi = std::numbers::pi;

double arg_or_zero(Complex z) { return z == Complex(0.0, 0.0) ? 0.0 : principal_arg(z); }

// Shift by multiples of 4*pi into (-2pi, 2pi]; Rz is 4pi-periodic.
double wrap_half_turn_phase(double t) {
    constexpr double period = 4.0 * kPi;
    double r = std::fmod(t, period);
    if (r > 2.0 * kPi) {
        r -= period;
    } else if (r <= -2.0 * kPi) {
        r += period;
    }
    return r;
}

}  // namespace

Su2Matrix su2_from_euler(const EulerAngles &a) {
    const double c = std::cos(0.5 * a.beta);
    const double s = std::sin(0.5 * a.beta);
    const double sum = 0.5 * (a.alpha + a.gamma);
    const double diff = 0.5 * (a.alpha - a.gamma);
    Su2Matrix k;
    k(0, 0) = std::polar(c, sum);
    k(0, 1) = -std::polar(s, diff);
    k(1, 0) = std::polar(s, -diff);
    k(1, 1) = std::polar(c, -sum);
    return k;
}

EulerAngles normalize(const EulerAngles &a) {
    EulerAngles out = a;
    // Ry(beta + 2pi) = -Ry(beta) and -I = Rz(2pi).
    double beta = std::fmod(out.beta, 4.0 * kPi);
    if (beta < 0.0) {
        beta += 4.0 * kPi;
    }
    if (beta >= 2.0 * kPi) {
        beta -= 2.0 * kPi;
        out.alpha += 2.0 * kPi;
    }
    // Ry(2pi - x) = -Rz(pi) Ry(x) Rz(-pi).
    if (beta > kPi) {
        beta = 2.0 * kPi - beta;
        out.alpha += 3.0 * kPi;
        out.gamma -= kPi;
    }
    out.beta = beta;
    out.alpha = wrap_half_turn_phase(out.alpha);
    out.gamma = wrap_half_turn_phase(out.gamma);
    return out;
}

EulerAngles euler_from_su2(const ComplexMatrix &u, double tol) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw DimensionError("euler_from_su2: expected a 2x2 matrix");
    }
    if (!is_unitary(u, tol) || std::abs(determinant(u) - Complex(1.0, 0.0)) > tol) {
        throw ValidationError("euler_from_su2: matrix is not special unitary within tolerance");
    }
    EulerAngles a;
    a.beta = 2.0 * std::atan2(std::abs(u(1, 0)), std::abs(u(0, 0)));
    if (a.beta <= tol) {
        a.alpha = 2.0 * arg_or_zero(u(0, 0));
        a.gamma = 0.0;
    } else if (kPi - a.beta <= tol) {
        a.alpha = -2.0 * arg_or_zero(u(1, 0));
        a.gamma = 0.0;
    } else {
        const double sum = arg_or_zero(u(0, 0));    // (alpha + gamma) / 2
        const double diff = -arg_or_zero(u(1, 0));  // (alpha - gamma) / 2
        a.alpha = sum + diff;
        a.gamma = sum - diff;
    }
    return a;
}

EulerAngles zeroing_angles(Complex a, Complex b) {
    const double norm = std::hypot(std::abs(a), std::abs(b));
    if (norm == 0.0) {
        throw DegenerateInputError("zeroing_angles: both components are zero");
    }
    const double arg_a = arg_or_zero(a);
    const double arg_b = arg_or_zero(b);
    return {arg_a - arg_b, 2.0 * std::atan2(std::abs(b), std::abs(a)), arg_a + arg_b};
}

PhasePush push_phase_through_coupler(double theta_i, double theta_j, const EulerAngles &a,
                                     PhaseSide side) {
    PhasePush out{a, 0.5 * (theta_i + theta_j)};
    if (side == PhaseSide::left) {
        out.angles.alpha += theta_i - theta_j;
    } else {
        out.angles.gamma += theta_i - theta_j;
    }
    return out;
}

EulerAngles transfer_phases(const EulerAngles &a, double in_i, double in_j, double out_i,
                            double out_j) {
    const PhasePush left = push_phase_through_coupler(in_i, in_j, a, PhaseSide::left);
    const PhasePush right =
        push_phase_through_coupler(-out_i, -out_j, left.angles, PhaseSide::right);
    // The common phases cancel because in_i + in_j == out_i + out_j.
    return right.angles;
}

}  // namespace trimesh
