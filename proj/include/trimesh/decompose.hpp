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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trimesh/linalg.hpp"
#include "trimesh/mesh.hpp"

namespace trimesh {

enum class Scheme { triangle, reck, clements };

std::string_view to_string(Scheme scheme);
Scheme scheme_from_string(std::string_view text);

/// Adjacent-mode triangular factorization by bottom-up column zeroing.
///
/// Column k is cleared from the bottom with couplers (n-1, n), ..., (k, k+1),
/// each chosen by zeroing_angles so the surviving entry is real and
/// non-negative; the trailing block is then special unitary and is handled
/// the same way. The plan lists the chains C_1, ..., C_{n-1} in order, so
/// coupler (i, i+1) appears exactly i times and every coupler is full3.
/// A pair that is exactly zero yields an identity coupler, keeping the shape
/// fixed. Throws DimensionError for n < 2 and ValidationError for
/// non-unitary input.
MeshPlan triangle_decompose(const ComplexMatrix &m, double tol = kUnitaryTol);

/// Mode pairs, in order, of the triangle plan for n modes.
std::vector<int> triangle_lower_modes(int n);

enum class CanonicalMethod { analytic, refinement };

std::string_view to_string(CanonicalMethod method);

struct CanonicalOptions {
    bool force_refinement = false;  ///< skip the analytic pass (testing aid)
    int max_iterations = 200;
};

struct CanonicalResult {
    MeshPlan plan;
    CanonicalMethod method = CanonicalMethod::analytic;
    double residual = 0.0;  ///< ||reconstruct(plan) - m||_F
    int iterations = 0;     ///< refinement iterations (0 for the analytic path)
};

/// Rewrites a triangle plan so that only the first coupler of each chain
/// keeps three angles and every other coupler satisfies gamma = alpha,
/// leaving n^2 - 1 parameters.
///
/// The analytic pass slides the surplus z-phase of each constrained coupler
/// to the right as a diagonal layer (transfer_phases). The first coupler of
/// each chain is free to move phase between its two modes; those n-1 free
/// transfers are chosen by a linear solve so the layer leaving the mesh is
/// trivial. If that leaves a residual above 10*tol, a damped Gauss-Newton
/// refinement of the n^2 - 1 angles takes over. Throws CanonicalizationError
/// with the best residual if neither reaches 10*tol.
CanonicalResult canonicalize(const MeshPlan &plan, const ComplexMatrix &m,
                             double tol = kUnitaryTol, const CanonicalOptions &options = {});

/// Nested split of a canonical plan into coset chain, middle coupler and the
/// full subgroup factor on the remaining modes.
struct RecursiveView {
    std::vector<Coupler> left_chain;
    std::optional<Coupler> middle;
    std::unique_ptr<RecursiveView> right;  ///< view of the remaining chains, set for n >= 3
    std::optional<Coupler> terminal;       ///< the lone coupler of the two-mode base case

    std::vector<Coupler> flatten() const;
};

/// Throws ValidationError unless the plan is in canonical chain order with
/// the canonical arity pattern.
RecursiveView recursive_view(const MeshPlan &plan);

/// Rectangular mesh with alternating column and row nulling. The diagonal
/// left over after nulling is slid through the mesh with transfer_phases and
/// ends as a scalar, which becomes global_phase.
MeshPlan clements_decompose(const ComplexMatrix &m, double tol = kUnitaryTol);

/// Triangular reference scheme that clears column k with couplers (k, r),
/// r = k+1..n, so most couplers act on non-adjacent modes.
MeshPlan reck_decompose(const ComplexMatrix &m, double tol = kUnitaryTol);

MeshPlan decompose(Scheme scheme, const ComplexMatrix &m, double tol = kUnitaryTol);

struct GeneratorLedger {
    int offdiag_pairs = 0;  ///< distinct C_ij with j > i
    int diagonal = 0;       ///< C_ii
    int savings_vs_reck = 0;
};

/// Distinct generator types a scheme must evaluate. Adjacent-only schemes
/// (triangle, clements) need the n-1 nearest-neighbour C_{i,i+1}; Reck needs
/// every pair.
GeneratorLedger generator_ledger(Scheme scheme, int n);

/// The same count read off a concrete plan: distinct mode pairs used.
GeneratorLedger generator_ledger(const MeshPlan &plan);

struct ModeLoss {
    int mode = 1;
    int rail_couplers = 0;  ///< couplers touching this rail
    int best_path = 0;      ///< fewest couplers on any path from this input
    int worst_path = 0;     ///< most couplers on any path from this input
    double rail_db = 0.0;
    double best_db = 0.0;
    double worst_db = 0.0;
};

/// Uniform insertion-loss model: each coupler costs per_coupler_loss_db.
/// Paths follow the physical direction (last plan element first) and may
/// leave on either output of every coupler they meet.
std::vector<ModeLoss> loss_analysis(const MeshPlan &plan, double per_coupler_loss_db);

}  // namespace trimesh
