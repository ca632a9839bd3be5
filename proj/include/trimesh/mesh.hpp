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

#include <string>
#include <string_view>
#include <vector>

#include "trimesh/linalg.hpp"
#include "trimesh/su2.hpp"

namespace trimesh {

/// Number of free angles carried by a coupler: R(a, b, g) or R(a, b, a).
enum class Arity { full3, constrained2 };

std::string_view to_string(Arity arity);
Arity arity_from_string(std::string_view text);

/// One SU(2) element of a mesh, coupling modes i < j (1-based).
struct Coupler {
    int i = 1;
    int j = 2;
    EulerAngles angles;
    Arity arity = Arity::full3;

    bool adjacent() const { return j == i + 1; }
    bool shares_mode(const Coupler &other) const {
        return i == other.i || i == other.j || j == other.i || j == other.j;
    }
    bool same_modes(const Coupler &other) const { return i == other.i && j == other.j; }
};

/// Builds a coupler on (i, i + 1).
Coupler adjacent_coupler(int i, const EulerAngles &angles, Arity arity = Arity::full3);

/// Ordered factorization of an n-mode unitary.
///
/// The list head is the leftmost factor:
///     U = exp(i * global_phase) * B_1 * B_2 * ... * B_m,
/// so B_m is the first element an input field passes through.
struct MeshPlan {
    int n = 2;
    double global_phase = 0.0;
    std::vector<Coupler> couplers;
};

/// Throws DimensionError for indices outside [1, n] or i >= j, and
/// ValidationError when a constrained2 coupler has gamma != alpha.
void validate_plan(const MeshPlan &plan);

/// Throws ValidationError if any coupler is non-adjacent.
void require_adjacent(const MeshPlan &plan, const char *op);

ComplexMatrix embed_coupler(int n, const Coupler &c);

ComplexMatrix reconstruct(const MeshPlan &plan);

/// Layer (1-based) of every coupler under greedy left-to-right scheduling:
/// each coupler goes one layer after the latest coupler sharing a mode.
std::vector<int> schedule_layers(const MeshPlan &plan);

int depth(const MeshPlan &plan);

/// Number of couplers whose lower mode is i.
int multiplicity(const MeshPlan &plan, int i);

/// Sum of 3 per full3 and 2 per constrained2 coupler.
int parameter_count(const MeshPlan &plan);

/// Fuses same-pair couplers that are separated only by couplers on disjoint
/// modes. The fused coupler takes the position of the later one, so the
/// earlier factor is pushed right through the commuting boxes. Repeats to a
/// fixpoint; fused couplers are full3.
MeshPlan merge_adjacent(const MeshPlan &plan);

enum class RenderFormat { ascii, svg };

std::string render(const MeshPlan &plan, RenderFormat format);

/// Accepts "ascii" or "svg"; anything else throws ValidationError.
std::string render(const MeshPlan &plan, std::string_view format);

}  // namespace trimesh
