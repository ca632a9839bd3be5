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

#include "trimesh/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trimesh/errors.hpp"

namespace trimesh {

namespace {

constexpr double kConstraintTol = 1e-12;
constexpr double kMergeTol = 1e-12;

void apply_on_right(ComplexMatrix &m, const Coupler &c) {
    const Su2Matrix k = su2_from_euler(c.angles);
    const Eigen::Index a = c.i - 1;
    const Eigen::Index b = c.j - 1;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        const Complex x = m(r, a);
        const Complex y = m(r, b);
        m(r, a) = x * k(0, 0) + y * k(1, 0);
        m(r, b) = x * k(0, 1) + y * k(1, 1);
    }
}

}  // namespace

std::string_view to_string(Arity arity) {
    return arity == Arity::full3 ? "full3" : "constrained2";
}

Arity arity_from_string(std::string_view text) {
    if (text == "full3") {
        return Arity::full3;
    }
    if (text == "constrained2") {
        return Arity::constrained2;
    }
    throw ValidationError("unknown coupler arity '" + std::string(text) + "'");
}

Coupler adjacent_coupler(int i, const EulerAngles &angles, Arity arity) {
    return Coupler{i, i + 1, angles, arity};
}

void validate_plan(const MeshPlan &plan) {
    if (plan.n < 1) {
        throw DimensionError("mesh plan needs at least one mode");
    }
    for (const Coupler &c : plan.couplers) {
        if (c.i < 1 || c.j > plan.n || c.i >= c.j) {
            throw DimensionError("coupler (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                                 ") is invalid for " + std::to_string(plan.n) + " modes");
        }
        if (c.arity == Arity::constrained2 &&
            std::abs(c.angles.gamma - c.angles.alpha) > kConstraintTol) {
            throw ValidationError("constrained2 coupler has gamma != alpha");
        }
    }
}

void require_adjacent(const MeshPlan &plan, const char *op) {
    for (const Coupler &c : plan.couplers) {
        if (!c.adjacent()) {
            throw ValidationError(std::string(op) + ": non-adjacent coupler (" +
                                  std::to_string(c.i) + "," + std::to_string(c.j) +
                                  ") is not supported");
        }
    }
}

ComplexMatrix embed_coupler(int n, const Coupler &c) {
    if (c.i < 1 || c.j > n || c.i >= c.j) {
        throw DimensionError("embed_coupler: mode pair out of range");
    }
    ComplexMatrix m = ComplexMatrix::Identity(n, n);
    const Su2Matrix k = su2_from_euler(c.angles);
    m(c.i - 1, c.i - 1) = k(0, 0);
    m(c.i - 1, c.j - 1) = k(0, 1);
    m(c.j - 1, c.i - 1) = k(1, 0);
    m(c.j - 1, c.j - 1) = k(1, 1);
    return m;
}

ComplexMatrix reconstruct(const MeshPlan &plan) {
    validate_plan(plan);
    ComplexMatrix m = ComplexMatrix::Identity(plan.n, plan.n);
    for (const Coupler &c : plan.couplers) {
        apply_on_right(m, c);
    }
    return std::polar(1.0, plan.global_phase) * m;
}

std::vector<int> schedule_layers(const MeshPlan &plan) {
    validate_plan(plan);
    std::vector<int> last(static_cast<std::size_t>(plan.n) + 1, 0);
    std::vector<int> layers;
    layers.reserve(plan.couplers.size());
    for (const Coupler &c : plan.couplers) {
        const int layer = std::max(last[c.i], last[c.j]) + 1;
        last[c.i] = layer;
        last[c.j] = layer;
        layers.push_back(layer);
    }
    return layers;
}

int depth(const MeshPlan &plan) {
    const std::vector<int> layers = schedule_layers(plan);
    return layers.empty() ? 0 : *std::max_element(layers.begin(), layers.end());
}

int multiplicity(const MeshPlan &plan, int i) {
    validate_plan(plan);
    require_adjacent(plan, "multiplicity");
    if (i < 1 || i > plan.n - 1) {
        throw DimensionError("multiplicity: lower mode index out of range");
    }
    return static_cast<int>(std::count_if(plan.couplers.begin(), plan.couplers.end(),
                                          [i](const Coupler &c) { return c.i == i; }));
}

int parameter_count(const MeshPlan &plan) {
    validate_plan(plan);
    require_adjacent(plan, "parameter_count");
    int total = 0;
    for (const Coupler &c : plan.couplers) {
        total += c.arity == Arity::full3 ? 3 : 2;
    }
    return total;
}

MeshPlan merge_adjacent(const MeshPlan &plan) {
    validate_plan(plan);
    require_adjacent(plan, "merge_adjacent");
    MeshPlan out = plan;
    auto &cs = out.couplers;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < cs.size() && !changed; ++a) {
            auto next = std::find_if(cs.begin() + static_cast<std::ptrdiff_t>(a) + 1, cs.end(),
                                     [&](const Coupler &c) { return c.shares_mode(cs[a]); });
            if (next == cs.end() || !next->same_modes(cs[a])) {
                continue;
            }
            const Su2Matrix product = su2_from_euler(cs[a].angles) * su2_from_euler(next->angles);
            next->angles = euler_from_su2(product, kMergeTol);
            next->arity = Arity::full3;
            cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(a));
            changed = true;
        }
    }
    return out;
}

std::string render(const MeshPlan &plan, std::string_view format) {
    if (format == "ascii") {
        return render(plan, RenderFormat::ascii);
    }
    if (format == "svg") {
        return render(plan, RenderFormat::svg);
    }
    throw ValidationError("render: unsupported format '" + std::string(format) + "'");
}

}  // namespace trimesh
