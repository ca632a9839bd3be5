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
#include <numbers>
#include <regex>

#include <gtest/gtest.h>

#include "trimesh/decompose.hpp"
#include "trimesh/errors.hpp"
#include "trimesh/mesh.hpp"
#include "trimesh/random.hpp"

using namespace trimesh;

namespace {

constexpr double kPi = std::numbers::pi;

EulerAngles random_angles(Rng &rng) {
    return {2 * kPi * rng.uniform(), kPi * rng.uniform(), 2 * kPi * rng.uniform()};
}

MeshPlan random_plan(int n, int boxes, std::uint64_t seed) {
    Rng rng(seed, 1);
    MeshPlan plan;
    plan.n = n;
    plan.global_phase = rng.uniform();
    for (int k = 0; k < boxes; ++k) {
        const int i = 1 + static_cast<int>(rng.uniform() * (n - 1));
        plan.couplers.push_back(adjacent_coupler(i, random_angles(rng)));
    }
    return plan;
}

MeshPlan canonical(int n, std::uint64_t seed) {
    const ComplexMatrix m = random_unitary_qr(n, seed);
    return canonicalize(triangle_decompose(m), m).plan;
}

std::size_t count(const std::string &text, const std::string &needle) {
    std::size_t c = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        ++c;
    }
    return c;
}

}  // namespace

TEST(mesh, embed_examples) {
    EXPECT_EQ(embed_coupler(3, adjacent_coupler(2, {0, 0, 0})), ComplexMatrix::Identity(3, 3));
    ComplexMatrix expect = ComplexMatrix::Zero(3, 3);
    expect(0, 1) = -1.0;
    expect(1, 0) = 1.0;
    expect(2, 2) = 1.0;
    EXPECT_LT(frobenius_distance(embed_coupler(3, adjacent_coupler(1, {0, kPi, 0})), expect), 1e-15);
}

TEST(mesh, disjoint_couplers_commute) {
    Rng rng(2, 0);
    for (int k = 0; k < 100; ++k) {
        const ComplexMatrix a = embed_coupler(4, adjacent_coupler(3, random_angles(rng)));
        const ComplexMatrix b = embed_coupler(4, adjacent_coupler(1, random_angles(rng)));
        EXPECT_LT((a * b - b * a).norm(), 1e-14);
    }
}

TEST(mesh, reconstruct_examples) {
    MeshPlan empty;
    empty.n = 5;
    EXPECT_EQ(reconstruct(empty), ComplexMatrix::Identity(5, 5));
    MeshPlan one;
    one.n = 4;
    one.couplers.push_back(adjacent_coupler(2, {0.3, 1.0, -0.4}));
    EXPECT_LT(frobenius_distance(reconstruct(one), embed_coupler(4, one.couplers[0])), 1e-15);
}

TEST(mesh, reconstruct_is_ordered_product) {
    const MeshPlan plan = random_plan(5, 12, 3);
    ComplexMatrix expect = ComplexMatrix::Identity(5, 5);
    for (const Coupler &c : plan.couplers) {
        expect = expect * embed_coupler(5, c);
    }
    expect *= std::polar(1.0, plan.global_phase);
    EXPECT_LT(frobenius_distance(reconstruct(plan), expect), 1e-13);
}

TEST(mesh, reconstruct_order_sensitive) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed, 4);
        MeshPlan plan;
        plan.n = 3;
        plan.couplers = {adjacent_coupler(1, random_angles(rng)), adjacent_coupler(2, random_angles(rng))};
        MeshPlan swapped = plan;
        std::swap(swapped.couplers[0], swapped.couplers[1]);
        EXPECT_GT(frobenius_distance(reconstruct(plan), reconstruct(swapped)), 1e-6);
    }
}

TEST(mesh, validate_rejects) {
    MeshPlan bad;
    bad.n = 3;
    bad.couplers.push_back({3, 4, {}, Arity::full3});
    EXPECT_THROW(validate_plan(bad), DimensionError);
    bad.couplers = {{2, 2, {}, Arity::full3}};
    EXPECT_THROW(validate_plan(bad), DimensionError);
    bad.couplers = {adjacent_coupler(1, {0.1, 0.2, 0.3}, Arity::constrained2)};
    EXPECT_THROW(validate_plan(bad), ValidationError);
}

TEST(mesh, depth_examples) {
    EXPECT_EQ(depth(canonical(4, 1)), 5);
    EXPECT_EQ(depth(canonical(2, 1)), 1);
    EXPECT_EQ(depth(clements_decompose(random_unitary_qr(4, 1))), 4);
}

TEST(mesh, depth_formulas) {
    for (int n = 3; n <= 12; ++n) {
        const ComplexMatrix m = random_unitary_qr(n, 50 + n);
        const MeshPlan t = triangle_decompose(m);
        EXPECT_EQ(depth(t), 2 * n - 3) << n;
        EXPECT_EQ(static_cast<int>(t.couplers.size()), n * (n - 1) / 2);
        for (int i = 1; i < n; ++i) {
            EXPECT_EQ(multiplicity(t, i), i);
        }
        EXPECT_EQ(depth(clements_decompose(m)), n) << n;
    }
}

TEST(mesh, schedule_layers_respect_shared_modes) {
    const MeshPlan plan = random_plan(6, 30, 5);
    const std::vector<int> layer = schedule_layers(plan);
    for (std::size_t a = 0; a < plan.couplers.size(); ++a) {
        for (std::size_t b = a + 1; b < plan.couplers.size(); ++b) {
            if (plan.couplers[a].shares_mode(plan.couplers[b])) {
                EXPECT_LT(layer[a], layer[b]);
            }
        }
    }
    EXPECT_EQ(depth(plan), *std::max_element(layer.begin(), layer.end()));
}

TEST(mesh, multiplicity_examples) {
    const MeshPlan t4 = canonical(4, 2);
    EXPECT_EQ(multiplicity(t4, 3), 3);
    EXPECT_EQ(multiplicity(t4, 1), 1);
    const MeshPlan t6 = canonical(6, 2);
    int total = 0;
    for (int i = 1; i < 6; ++i) {
        total += multiplicity(t6, i);
    }
    EXPECT_EQ(total, 15);
    EXPECT_THROW(multiplicity(t4, 4), DimensionError);
}

TEST(mesh, parameter_count_examples) {
    EXPECT_EQ(parameter_count(canonical(3, 3)), 8);
    EXPECT_EQ(parameter_count(canonical(4, 3)), 15);
    EXPECT_EQ(parameter_count(canonical(5, 3)), 24);
    EXPECT_THROW(parameter_count(reck_decompose(random_unitary_qr(4, 3))), ValidationError);
}

TEST(mesh, merge_through_commuting_box) {
    Rng rng(8, 0);
    MeshPlan plan;
    plan.n = 4;
    plan.couplers = {adjacent_coupler(3, random_angles(rng)), adjacent_coupler(1, random_angles(rng)),
                     adjacent_coupler(3, random_angles(rng))};
    const MeshPlan merged = merge_adjacent(plan);
    ASSERT_EQ(merged.couplers.size(), 2u);
    EXPECT_LT(frobenius_distance(reconstruct(merged), reconstruct(plan)), 1e-10);
}

TEST(mesh, merge_naive_su4_to_six) {
    // SU(3) triangle on modes 2..4, the (1,2) box, then a second SU(3) triangle.
    Rng rng(9, 0);
    MeshPlan plan;
    plan.n = 4;
    for (int i : {3, 2, 3, 1, 3, 2, 3}) {
        plan.couplers.push_back(adjacent_coupler(i, random_angles(rng)));
    }
    const MeshPlan merged = merge_adjacent(plan);
    EXPECT_EQ(merged.couplers.size(), 6u);
    EXPECT_EQ(depth(merged), 5);
    EXPECT_LT(frobenius_distance(reconstruct(merged), reconstruct(plan)), 1e-10);
}

TEST(mesh, merge_fixpoint_and_properties) {
    const MeshPlan t = canonical(5, 4);
    const MeshPlan same = merge_adjacent(t);
    EXPECT_EQ(same.couplers.size(), t.couplers.size());
    EXPECT_LT(frobenius_distance(reconstruct(same), reconstruct(t)), 1e-10);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const MeshPlan p = random_plan(4, 10, seed);
        const MeshPlan m = merge_adjacent(p);
        EXPECT_LE(m.couplers.size(), p.couplers.size());
        EXPECT_LT(frobenius_distance(reconstruct(m), reconstruct(p)), 1e-10);
        EXPECT_EQ(merge_adjacent(m).couplers.size(), m.couplers.size());
    }
}

TEST(mesh, render_ascii_examples) {
    MeshPlan empty;
    empty.n = 5;
    const std::string e = render(empty, RenderFormat::ascii);
    EXPECT_EQ(std::count(e.begin(), e.end(), '\n'), 5);

    const std::string t = render(canonical(3, 5), RenderFormat::ascii);
    EXPECT_EQ(count(t, "|3|"), 2u);
    EXPECT_EQ(count(t, "|2|"), 1u);
    for (char ch : t) {
        EXPECT_LT(static_cast<unsigned char>(ch), 128);
    }
}

TEST(mesh, render_box_count_matches) {
    for (int n = 2; n <= 7; ++n) {
        const MeshPlan p = canonical(n, 6);
        const std::string a = render(p, "ascii");
        EXPECT_EQ(count(a, "|3|") + count(a, "|2|"), p.couplers.size());
        const std::string s = render(p, "svg");
        EXPECT_EQ(count(s, "<rect class=\"coupler"), p.couplers.size());
        EXPECT_EQ(s.find("href"), std::string::npos);
    }
    EXPECT_THROW(render(canonical(3, 1), "png"), ValidationError);
    EXPECT_THROW(render(reck_decompose(random_unitary_qr(3, 1)), "ascii"), ValidationError);
}
