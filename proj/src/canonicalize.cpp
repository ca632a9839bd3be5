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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "trimesh/decompose.hpp"
#include "trimesh/errors.hpp"

namespace trimesh {

namespace {

struct SweepOutput {
    std::vector<Coupler> couplers;
    Eigen::VectorXd theta;  // diagonal phase layer left after the last coupler
};

bool is_chain_head(const Coupler &c, int n) { return c.i == n - 1; }

// Slides a diagonal phase layer left to right through the plan. A chain head
// takes free_transfer[k] as the relative phase it hands on; any other
// coupler hands on exactly what makes its own angles satisfy gamma = alpha.
SweepOutput sweep(const std::vector<Coupler> &raw, int n, const Eigen::VectorXd &free_transfer) {
    SweepOutput out;
    out.couplers.reserve(raw.size());
    out.theta = Eigen::VectorXd::Zero(n);
    Eigen::Index head = 0;
    for (const Coupler &c : raw) {
        double &ti = out.theta(c.i - 1);
        double &tj = out.theta(c.j - 1);
        const double sum = ti + tj;
        Coupler next = c;
        double rel_out = 0.0;
        if (is_chain_head(c, n)) {
            rel_out = free_transfer(head++);
            next.arity = Arity::full3;
        } else {
            const double alpha = c.angles.alpha + (ti - tj);
            rel_out = c.angles.gamma - alpha;
            next.arity = Arity::constrained2;
        }
        const double out_i = 0.5 * (sum + rel_out);
        const double out_j = 0.5 * (sum - rel_out);
        next.angles = transfer_phases(c.angles, ti, tj, out_i, out_j);
        if (next.arity == Arity::constrained2) {
            next.angles.gamma = next.angles.alpha;
        }
        ti = out_i;
        tj = out_j;
        out.couplers.push_back(next);
    }
    return out;
}

MeshPlan with_couplers(const MeshPlan &base, std::vector<Coupler> couplers) {
    MeshPlan plan;
    plan.n = base.n;
    plan.global_phase = base.global_phase;
    plan.couplers = std::move(couplers);
    return plan;
}

// Free angles of a canonical plan, in coupler order: alpha, beta[, gamma].
Eigen::VectorXd pack(const std::vector<Coupler> &cs) {
    std::vector<double> v;
    for (const Coupler &c : cs) {
        v.push_back(c.angles.alpha);
        v.push_back(c.angles.beta);
        if (c.arity == Arity::full3) {
            v.push_back(c.angles.gamma);
        }
    }
    return Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

void unpack(const Eigen::VectorXd &x, std::vector<Coupler> &cs) {
    Eigen::Index k = 0;
    for (Coupler &c : cs) {
        c.angles.alpha = x(k++);
        c.angles.beta = x(k++);
        c.angles.gamma = c.arity == Arity::full3 ? x(k++) : c.angles.alpha;
    }
}

Eigen::VectorXd residual_vector(const MeshPlan &plan, const ComplexMatrix &target) {
    const ComplexMatrix diff = reconstruct(plan) - target;
    Eigen::VectorXd r(2 * diff.size());
    for (Eigen::Index k = 0; k < diff.size(); ++k) {
        r(2 * k) = diff.data()[k].real();
        r(2 * k + 1) = diff.data()[k].imag();
    }
    return r;
}

struct Refined {
    MeshPlan plan;
    double residual = 0.0;
    int iterations = 0;
};

// Levenberg-Marquardt on the canonical angles with a central-difference
// Jacobian.
Refined refine(MeshPlan plan, const ComplexMatrix &target, double goal, int max_iterations) {
    constexpr double kStep = 1e-7;
    Eigen::VectorXd x = pack(plan.couplers);
    Eigen::VectorXd r = residual_vector(plan, target);
    double cost = r.squaredNorm();
    double lambda = 1e-3;
    int it = 0;
    for (; it < max_iterations && std::sqrt(cost) > goal; ++it) {
        Eigen::MatrixXd jac(r.size(), x.size());
        for (Eigen::Index p = 0; p < x.size(); ++p) {
            Eigen::VectorXd xp = x;
            Eigen::VectorXd xm = x;
            xp(p) += kStep;
            xm(p) -= kStep;
            unpack(xp, plan.couplers);
            const Eigen::VectorXd rp = residual_vector(plan, target);
            unpack(xm, plan.couplers);
            const Eigen::VectorXd rm = residual_vector(plan, target);
            jac.col(p) = (rp - rm) / (2.0 * kStep);
        }
        const Eigen::MatrixXd jtj = jac.transpose() * jac;
        const Eigen::VectorXd grad = jac.transpose() * r;
        bool improved = false;
        for (int attempt = 0; attempt < 12 && !improved; ++attempt) {
            Eigen::MatrixXd damped = jtj;
            damped.diagonal().array() += lambda * (jtj.diagonal().array() + 1e-12);
            const Eigen::VectorXd step = damped.ldlt().solve(-grad);
            const Eigen::VectorXd trial = x + step;
            unpack(trial, plan.couplers);
            const Eigen::VectorXd rt = residual_vector(plan, target);
            const double trial_cost = rt.squaredNorm();
            if (trial_cost < cost) {
                x = trial;
                r = rt;
                cost = trial_cost;
                lambda = std::max(lambda / 3.0, 1e-12);
                improved = true;
            } else {
                lambda *= 4.0;
            }
        }
        if (!improved) {
            break;
        }
    }
    unpack(x, plan.couplers);
    return {plan, std::sqrt(cost), it};
}

}  // namespace

std::string_view to_string(CanonicalMethod method) {
    return method == CanonicalMethod::analytic ? "analytic" : "refinement";
}

CanonicalResult canonicalize(const MeshPlan &plan, const ComplexMatrix &m, double tol,
                             const CanonicalOptions &options) {
    validate_plan(plan);
    const int n = plan.n;
    if (m.rows() != n || m.cols() != n) {
        throw DimensionError("canonicalize: matrix size does not match the plan");
    }
    const std::vector<int> expected = triangle_lower_modes(n);
    bool ordered = plan.couplers.size() == expected.size();
    for (std::size_t k = 0; ordered && k < expected.size(); ++k) {
        ordered = plan.couplers[k].adjacent() && plan.couplers[k].i == expected[k];
    }
    if (!ordered) {
        throw ValidationError("canonicalize: plan is not a triangle plan");
    }

    const double goal = 10.0 * tol;
    const Eigen::Index heads = n - 1;

    // theta_final is affine in the free transfers: probe it column by column.
    const SweepOutput base = sweep(plan.couplers, n, Eigen::VectorXd::Zero(heads));
    Eigen::MatrixXd response(n, heads);
    for (Eigen::Index h = 0; h < heads; ++h) {
        response.col(h) = sweep(plan.couplers, n, Eigen::VectorXd::Unit(heads, h)).theta - base.theta;
    }
    const Eigen::VectorXd transfers = response.colPivHouseholderQr().solve(-base.theta);
    SweepOutput solved = sweep(plan.couplers, n, transfers);

    MeshPlan analytic = with_couplers(plan, solved.couplers);
    const double analytic_residual = frobenius_distance(reconstruct(analytic), m);
    if (!options.force_refinement && analytic_residual <= goal) {
        return {std::move(analytic), CanonicalMethod::analytic, analytic_residual, 0};
    }

    MeshPlan start = analytic;
    if (options.force_refinement) {
        // Start from the raw angles, dropping each constrained coupler's gamma.
        start = with_couplers(plan, base.couplers);
        for (std::size_t k = 0; k < start.couplers.size(); ++k) {
            start.couplers[k].angles = plan.couplers[k].angles;
            if (start.couplers[k].arity == Arity::constrained2) {
                start.couplers[k].angles.gamma = start.couplers[k].angles.alpha;
            }
        }
    }
    Refined refined = refine(std::move(start), m, goal, options.max_iterations);
    if (refined.residual > goal) {
        throw CanonicalizationError("canonicalize: refinement stopped at residual " +
                                        std::to_string(refined.residual),
                                    refined.residual);
    }
    return {std::move(refined.plan), CanonicalMethod::refinement, refined.residual,
            refined.iterations};
}

}  // namespace trimesh
