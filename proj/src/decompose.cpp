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

#include "trimesh/decompose.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <utility>

#include "trimesh/errors.hpp"

namespace trimesh {

namespace {

void require_decomposable(const ComplexMatrix &m, double tol, const char *op) {
    if (m.rows() != m.cols() || m.rows() < 2) {
        throw DimensionError(std::string(op) + ": need a square matrix with n >= 2");
    }
    if (!is_unitary(m, tol)) {
        throw ValidationError(std::string(op) + ": input is not unitary within tolerance");
    }
}

// Angles that clear b against a; an exactly-zero pair gives the identity.
EulerAngles zeroing_or_identity(Complex a, Complex b) {
    if (a == Complex(0.0, 0.0) && b == Complex(0.0, 0.0)) {
        return {};
    }
    return zeroing_angles(a, b);
}

// rows (r1, r2) <- K^dagger * rows (r1, r2), 0-based.
void apply_inverse_on_rows(ComplexMatrix &w, Eigen::Index r1, Eigen::Index r2,
                           const EulerAngles &angles) {
    const Su2Matrix kd = su2_from_euler(angles).adjoint();
    for (Eigen::Index c = 0; c < w.cols(); ++c) {
        const Complex x = w(r1, c);
        const Complex y = w(r2, c);
        w(r1, c) = kd(0, 0) * x + kd(0, 1) * y;
        w(r2, c) = kd(1, 0) * x + kd(1, 1) * y;
    }
}

// cols (c1, c2) <- cols (c1, c2) * K^dagger, 0-based.
void apply_inverse_on_cols(ComplexMatrix &w, Eigen::Index c1, Eigen::Index c2,
                           const EulerAngles &angles) {
    const Su2Matrix kd = su2_from_euler(angles).adjoint();
    for (Eigen::Index r = 0; r < w.rows(); ++r) {
        const Complex x = w(r, c1);
        const Complex y = w(r, c2);
        w(r, c1) = x * kd(0, 0) + y * kd(1, 0);
        w(r, c2) = x * kd(0, 1) + y * kd(1, 1);
    }
}

int checked_size(const ComplexMatrix &m) { return static_cast<int>(m.rows()); }

}  // namespace

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::triangle:
            return "triangle";
        case Scheme::reck:
            return "reck";
        case Scheme::clements:
            return "clements";
    }
    return "triangle";
}

Scheme scheme_from_string(std::string_view text) {
    if (text == "triangle") {
        return Scheme::triangle;
    }
    if (text == "reck") {
        return Scheme::reck;
    }
    if (text == "clements") {
        return Scheme::clements;
    }
    throw ValidationError("unknown scheme '" + std::string(text) + "'");
}

std::vector<int> triangle_lower_modes(int n) {
    std::vector<int> modes;
    for (int k = 1; k <= n - 1; ++k) {
        for (int r = n - 1; r >= k; --r) {
            modes.push_back(r);
        }
    }
    return modes;
}

MeshPlan triangle_decompose(const ComplexMatrix &m, double tol) {
    require_decomposable(m, tol, "triangle_decompose");
    const int n = checked_size(m);
    auto [phase, w] = project_to_su(m, tol);

    MeshPlan plan;
    plan.n = n;
    plan.global_phase = phase;
    plan.couplers.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int k = 0; k < n - 1; ++k) {
        for (int r = n - 2; r >= k; --r) {
            // The pivot left in (r, k) is the norm of the uncleared sub-column.
            const EulerAngles angles = zeroing_or_identity(w(r, k), w(r + 1, k));
            apply_inverse_on_rows(w, r, r + 1, angles);
            plan.couplers.push_back(adjacent_coupler(r + 1, angles));
        }
    }
    return plan;
}

MeshPlan reck_decompose(const ComplexMatrix &m, double tol) {
    require_decomposable(m, tol, "reck_decompose");
    const int n = checked_size(m);
    auto [phase, w] = project_to_su(m, tol);

    MeshPlan plan;
    plan.n = n;
    plan.global_phase = phase;
    for (int k = 0; k < n - 1; ++k) {
        for (int r = k + 1; r < n; ++r) {
            const EulerAngles angles = zeroing_or_identity(w(k, k), w(r, k));
            apply_inverse_on_rows(w, k, r, angles);
            plan.couplers.push_back(Coupler{k + 1, r + 1, angles, Arity::full3});
        }
    }
    return plan;
}

MeshPlan clements_decompose(const ComplexMatrix &m, double tol) {
    require_decomposable(m, tol, "clements_decompose");
    const int n = checked_size(m);
    ComplexMatrix w = m;

    // After nulling: L_k...L_1 * m * T_1...T_l = D, with each L and T^-1 a
    // coupler K, so m = K_L1 ... K_Lk * D * K_Tl ... K_T1.
    std::vector<Coupler> left;
    std::vector<Coupler> right;
    for (int i = 0; i < n - 1; ++i) {
        if (i % 2 == 0) {
            for (int j = 0; j <= i; ++j) {
                const int r = n - 1 - j;
                const int c = i - j;
                // (x, y) * K^dagger = (0, |(x, y)|) for K with first column (conj y, x).
                const EulerAngles angles =
                    zeroing_or_identity(std::conj(w(r, c + 1)), w(r, c));
                apply_inverse_on_cols(w, c, c + 1, angles);
                right.push_back(adjacent_coupler(c + 1, angles));
            }
        } else {
            for (int j = 1; j <= i + 1; ++j) {
                const int r = n + j - i - 2;
                const int c = j - 1;
                const EulerAngles angles = zeroing_or_identity(w(r - 1, c), w(r, c));
                apply_inverse_on_rows(w, r - 1, r, angles);
                left.push_back(adjacent_coupler(r, angles));
            }
        }
    }

    std::vector<double> theta(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        theta[static_cast<std::size_t>(k)] = principal_arg(w(k, k));
    }

    // Slide D to the front: K D = D (D^-1 K D).
    for (Coupler &c : left) {
        const double ti = theta[static_cast<std::size_t>(c.i - 1)];
        const double tj = theta[static_cast<std::size_t>(c.j - 1)];
        c.angles = transfer_phases(c.angles, -ti, -tj, -ti, -tj);
    }

    MeshPlan plan;
    plan.n = n;
    plan.couplers = std::move(left);
    plan.couplers.insert(plan.couplers.end(), right.rbegin(), right.rend());

    // Sweep D back through every coupler. The first coupler met on each pair
    // (k, k+1) moves the running surplus sum_{m<=k}(theta_m - psi) from mode k
    // to k+1, which leaves every mode at the mean phase psi.
    double psi = 0.0;
    for (double t : theta) {
        psi += t;
    }
    psi /= n;
    std::vector<double> surplus(static_cast<std::size_t>(n), 0.0);
    double running = 0.0;
    for (int k = 0; k < n; ++k) {
        running += theta[static_cast<std::size_t>(k)] - psi;
        surplus[static_cast<std::size_t>(k)] = running;
    }
    std::vector<bool> spent(static_cast<std::size_t>(n), false);
    for (Coupler &c : plan.couplers) {
        auto &ti = theta[static_cast<std::size_t>(c.i - 1)];
        auto &tj = theta[static_cast<std::size_t>(c.j - 1)];
        double moved = 0.0;
        if (!spent[static_cast<std::size_t>(c.i - 1)]) {
            spent[static_cast<std::size_t>(c.i - 1)] = true;
            moved = surplus[static_cast<std::size_t>(c.i - 1)];
        }
        c.angles = transfer_phases(c.angles, ti, tj, ti - moved, tj + moved);
        ti -= moved;
        tj += moved;
    }
    plan.global_phase = psi;
    return plan;
}

MeshPlan decompose(Scheme scheme, const ComplexMatrix &m, double tol) {
    switch (scheme) {
        case Scheme::triangle:
            return triangle_decompose(m, tol);
        case Scheme::reck:
            return reck_decompose(m, tol);
        case Scheme::clements:
            return clements_decompose(m, tol);
    }
    throw ValidationError("decompose: unknown scheme");
}

std::vector<Coupler> RecursiveView::flatten() const {
    std::vector<Coupler> out = left_chain;
    if (middle) {
        out.push_back(*middle);
    }
    if (right) {
        const std::vector<Coupler> rest = right->flatten();
        out.insert(out.end(), rest.begin(), rest.end());
    }
    if (terminal) {
        out.push_back(*terminal);
    }
    return out;
}

namespace {

RecursiveView view_of_chains(const std::vector<Coupler> &couplers, std::size_t begin, int first,
                             int n) {
    RecursiveView view;
    if (n - first == 1) {
        view.terminal = couplers[begin];
        return view;
    }
    const std::size_t chain_len = static_cast<std::size_t>(n - first);
    for (std::size_t k = 0; k + 1 < chain_len; ++k) {
        view.left_chain.push_back(couplers[begin + k]);
    }
    view.middle = couplers[begin + chain_len - 1];
    view.right = std::make_unique<RecursiveView>(
        view_of_chains(couplers, begin + chain_len, first + 1, n));
    return view;
}

}  // namespace

RecursiveView recursive_view(const MeshPlan &plan) {
    validate_plan(plan);
    const int n = plan.n;
    const std::vector<int> expected = triangle_lower_modes(n);
    if (n < 2 || plan.couplers.size() != expected.size()) {
        throw ValidationError("recursive_view: plan is not in canonical chain order");
    }
    for (std::size_t k = 0; k < expected.size(); ++k) {
        const Coupler &c = plan.couplers[k];
        const bool chain_head = c.i == n - 1;
        const Arity want = chain_head ? Arity::full3 : Arity::constrained2;
        if (!c.adjacent() || c.i != expected[k] || c.arity != want) {
            throw ValidationError("recursive_view: plan is not in canonical chain order");
        }
    }
    return view_of_chains(plan.couplers, 0, 1, n);
}

GeneratorLedger generator_ledger(Scheme scheme, int n) {
    if (n < 2) {
        throw DimensionError("generator_ledger: n must be at least 2");
    }
    GeneratorLedger ledger;
    ledger.diagonal = n;
    if (scheme == Scheme::reck) {
        ledger.offdiag_pairs = n * (n - 1) / 2;
        ledger.savings_vs_reck = 0;
    } else {
        ledger.offdiag_pairs = n - 1;
        ledger.savings_vs_reck = (n - 1) * (n - 2) / 2;
    }
    return ledger;
}

GeneratorLedger generator_ledger(const MeshPlan &plan) {
    validate_plan(plan);
    std::set<std::pair<int, int>> pairs;
    for (const Coupler &c : plan.couplers) {
        pairs.emplace(c.i, c.j);
    }
    GeneratorLedger ledger;
    ledger.offdiag_pairs = static_cast<int>(pairs.size());
    ledger.diagonal = plan.n;
    ledger.savings_vs_reck = plan.n * (plan.n - 1) / 2 - ledger.offdiag_pairs;
    return ledger;
}

std::vector<ModeLoss> loss_analysis(const MeshPlan &plan, double per_coupler_loss_db) {
    validate_plan(plan);
    if (!(per_coupler_loss_db >= 0.0)) {
        throw ValidationError("loss_analysis: loss must be non-negative");
    }
    const auto n = static_cast<std::size_t>(plan.n);
    constexpr int kUnreached = -1;

    std::vector<ModeLoss> out;
    out.reserve(n);
    for (std::size_t input = 0; input < n; ++input) {
        std::vector<int> lo(n, kUnreached);
        std::vector<int> hi(n, kUnreached);
        lo[input] = 0;
        hi[input] = 0;
        for (auto it = plan.couplers.rbegin(); it != plan.couplers.rend(); ++it) {
            const auto a = static_cast<std::size_t>(it->i - 1);
            const auto b = static_cast<std::size_t>(it->j - 1);
            if (lo[a] == kUnreached && lo[b] == kUnreached) {
                continue;
            }
            int new_lo = std::numeric_limits<int>::max();
            int new_hi = 0;
            for (std::size_t k : {a, b}) {
                if (lo[k] != kUnreached) {
                    new_lo = std::min(new_lo, lo[k]);
                    new_hi = std::max(new_hi, hi[k]);
                }
            }
            lo[a] = lo[b] = new_lo + 1;
            hi[a] = hi[b] = new_hi + 1;
        }
        ModeLoss ml;
        ml.mode = static_cast<int>(input) + 1;
        ml.rail_couplers = static_cast<int>(
            std::count_if(plan.couplers.begin(), plan.couplers.end(), [&](const Coupler &c) {
                return c.i == ml.mode || c.j == ml.mode;
            }));
        ml.best_path = std::numeric_limits<int>::max();
        for (std::size_t k = 0; k < n; ++k) {
            if (lo[k] != kUnreached) {
                ml.best_path = std::min(ml.best_path, lo[k]);
                ml.worst_path = std::max(ml.worst_path, hi[k]);
            }
        }
        ml.rail_db = per_coupler_loss_db * ml.rail_couplers;
        ml.best_db = per_coupler_loss_db * ml.best_path;
        ml.worst_db = per_coupler_loss_db * ml.worst_path;
        out.push_back(ml);
    }
    return out;
}

}  // namespace trimesh
