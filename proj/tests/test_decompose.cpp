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


#include <cmath>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "trimesh/decompose.hpp"
#include "trimesh/errors.hpp"
#include "trimesh/random.hpp"

using namespace trimesh;

namespace {


bool is_identity_coupler(const Coupler &c) {
    return std::abs(su2_from_euler(c.angles)(0, 0) - 1.0) < 1e-12;
}

}  // namespace

TEST(decompose, triangle_identity) {
    const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
    const MeshPlan plan = triangle_decompose(id);
    EXPECT_EQ(plan.couplers.size(), 6u);
    for (const Coupler &c : plan.couplers) {
        EXPECT_TRUE(is_identity_coupler(c));
    }
    EXPECT_LT(frobenius_distance(reconstruct(plan), id), 1e-15);
}

TEST(decompose, triangle_single_coupler) {
    const Coupler c = adjacent_coupler(2, {0.4, 1.0, -0.2});
    const ComplexMatrix m = embed_coupler(3, c);
    const MeshPlan plan = triangle_decompose(m);
    int nontrivial = 0;
    for (const Coupler &b : plan.couplers) {
        if (!is_identity_coupler(b)) {
            ++nontrivial;
            EXPECT_EQ(b.i, 2);
        }
    }
    EXPECT_EQ(nontrivial, 1);
    EXPECT_LT(frobenius_distance(reconstruct(plan), m), 1e-12);
}

TEST(decompose, triangle_roundtrip) {
    for (int n = 2; n <= 10; ++n) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const ComplexMatrix m = random_unitary_qr(n, seed);
            const MeshPlan plan = triangle_decompose(m);
            EXPECT_LT(frobenius_distance(reconstruct(plan), m), 1e-10) << n << " " << seed;
        }
    }
}

TEST(decompose, triangle_order_and_arity) {
    const std::vector<int> lower = triangle_lower_modes(4);
    EXPECT_EQ(lower, (std::vector<int>{3, 2, 1, 3, 2, 3}));
    const MeshPlan plan = triangle_decompose(random_unitary_qr(4, 1));
    for (std::size_t k = 0; k < plan.couplers.size(); ++k) {
        EXPECT_EQ(plan.couplers[k].i, lower[k]);
        EXPECT_EQ(plan.couplers[k].arity, Arity::full3);
    }
}

TEST(decompose, rejects_bad_input) {
    EXPECT_THROW(triangle_decompose(ComplexMatrix::Identity(3, 3) * 2.0), ValidationError);
    EXPECT_THROW(triangle_decompose(ComplexMatrix::Zero(2, 3)), DimensionError);
    EXPECT_THROW(triangle_decompose(ComplexMatrix::Identity(1, 1)), DimensionError);
    EXPECT_THROW(clements_decompose(ComplexMatrix::Identity(3, 3) * 2.0), ValidationError);
    EXPECT_THROW(reck_decompose(ComplexMatrix::Identity(3, 3) * 2.0), ValidationError);
}

TEST(decompose, canonical_parameter_counts) {
    const int expect[] = {0, 0, 3, 8, 15, 24};
    for (int n = 2; n <= 5; ++n) {
        const ComplexMatrix m = random_unitary_qr(n, 7) * std::polar(1.0, 0.3);
        const CanonicalResult r = canonicalize(triangle_decompose(m), m);
        EXPECT_EQ(r.method, CanonicalMethod::analytic);
        EXPECT_EQ(static_cast<int>(r.plan.couplers.size()), n * (n - 1) / 2);
        EXPECT_EQ(parameter_count(r.plan), expect[n]);
        EXPECT_LT(frobenius_distance(reconstruct(r.plan), m), 1e-10);
    }
}

TEST(decompose, canonical_su3_arities) {
    const ComplexMatrix m = random_unitary_qr(3, 11);
    const MeshPlan plan = canonicalize(triangle_decompose(m), m).plan;
    ASSERT_EQ(plan.couplers.size(), 3u);
    EXPECT_EQ(plan.couplers[0].arity, Arity::full3);
    EXPECT_EQ(plan.couplers[1].arity, Arity::constrained2);
    EXPECT_EQ(plan.couplers[2].arity, Arity::full3);
}

TEST(decompose, canonical_general) {
    for (int n = 2; n <= 10; ++n) {
        const ComplexMatrix m = random_unitary_qr(n, 100 + n);
        const CanonicalResult r = canonicalize(triangle_decompose(m), m);
        EXPECT_EQ(parameter_count(r.plan), n * n - 1) << n;
        EXPECT_LT(r.residual, 1e-9);
        for (const Coupler &c : r.plan.couplers) {
            if (c.arity == Arity::constrained2) {
                EXPECT_NEAR(c.angles.gamma, c.angles.alpha, 1e-9);
            }
        }
    }
}

TEST(decompose, canonical_refinement_path) {
    for (int n = 3; n <= 5; ++n) {
        const ComplexMatrix m = random_unitary_qr(n, 200 + n);
        CanonicalOptions opt;
        opt.force_refinement = true;
        const CanonicalResult r = canonicalize(triangle_decompose(m), m, kUnitaryTol, opt);
        EXPECT_EQ(r.method, CanonicalMethod::refinement);
        EXPECT_LT(r.residual, 1e-9);
        EXPECT_EQ(parameter_count(r.plan), n * n - 1);
    }
}

TEST(decompose, recursive_view_examples) {
    const ComplexMatrix m3 = random_unitary_qr(3, 5);
    const RecursiveView v3 = recursive_view(canonicalize(triangle_decompose(m3), m3).plan);
    ASSERT_EQ(v3.left_chain.size(), 1u);
    EXPECT_EQ(v3.left_chain[0].i, 2);
    ASSERT_TRUE(v3.middle.has_value());
    EXPECT_EQ(v3.middle->i, 1);
    EXPECT_EQ(v3.middle->arity, Arity::constrained2);
    ASSERT_TRUE(v3.right);
    EXPECT_FALSE(v3.terminal.has_value());
    EXPECT_TRUE(v3.right->left_chain.empty());
    ASSERT_TRUE(v3.right->terminal.has_value());
    EXPECT_EQ(v3.right->terminal->i, 2);

    const ComplexMatrix m2 = random_unitary_qr(2, 5);
    const RecursiveView v2 = recursive_view(canonicalize(triangle_decompose(m2), m2).plan);
    EXPECT_TRUE(v2.left_chain.empty());
    EXPECT_FALSE(v2.middle.has_value());
    EXPECT_TRUE(v2.terminal.has_value());

    const ComplexMatrix m5 = random_unitary_qr(5, 5);
    const MeshPlan p5 = canonicalize(triangle_decompose(m5), m5).plan;
    const RecursiveView v5 = recursive_view(p5);
    EXPECT_EQ(v5.left_chain.size(), 3u);
    ASSERT_TRUE(v5.middle.has_value());
    EXPECT_EQ(v5.middle->i, 1);
    ASSERT_TRUE(v5.right);
    EXPECT_EQ(v5.right->left_chain.size(), 2u);

    const std::vector<Coupler> flat = v5.flatten();
    ASSERT_EQ(flat.size(), p5.couplers.size());
    for (std::size_t k = 0; k < flat.size(); ++k) {
        EXPECT_EQ(flat[k].i, p5.couplers[k].i);
        EXPECT_EQ(flat[k].angles, p5.couplers[k].angles);
    }
}

TEST(decompose, clements_examples) {
    const MeshPlan id = clements_decompose(ComplexMatrix::Identity(4, 4));
    EXPECT_LE(depth(id), 4);
    EXPECT_LT(frobenius_distance(reconstruct(id), ComplexMatrix::Identity(4, 4)), 1e-14);
    EXPECT_EQ(depth(clements_decompose(random_unitary_qr(4, 3))), 4);
    const ComplexMatrix m6 = random_unitary_qr(6, 3);
    EXPECT_LT(frobenius_distance(reconstruct(clements_decompose(m6)), m6), 1e-10);
}

TEST(decompose, clements_depth_and_roundtrip) {
    for (int n = 3; n <= 12; ++n) {
        const ComplexMatrix m = random_unitary_qr(n, 300 + n);
        const MeshPlan plan = clements_decompose(m);
        EXPECT_EQ(depth(plan), n);
        EXPECT_EQ(static_cast<int>(plan.couplers.size()), n * (n - 1) / 2);
        EXPECT_LT(frobenius_distance(reconstruct(plan), m), 1e-10);
    }
}

TEST(decompose, reck_examples) {
    const MeshPlan id = reck_decompose(ComplexMatrix::Identity(3, 3));
    EXPECT_LT(frobenius_distance(reconstruct(id), ComplexMatrix::Identity(3, 3)), 1e-14);

    const MeshPlan p4 = reck_decompose(random_unitary_qr(4, 9));
    bool nonadjacent = false;
    for (const Coupler &c : p4.couplers) {
        nonadjacent = nonadjacent || !c.adjacent();
    }
    EXPECT_TRUE(nonadjacent);
    const ComplexMatrix m5 = random_unitary_qr(5, 9);
    EXPECT_LT(frobenius_distance(reconstruct(reck_decompose(m5)), m5), 1e-10);
}

TEST(decompose, generator_ledger_examples) {
    const GeneratorLedger t9 = generator_ledger(Scheme::triangle, 9);
    EXPECT_EQ(t9.offdiag_pairs, 8);
    EXPECT_EQ(t9.diagonal, 9);
    EXPECT_EQ(t9.savings_vs_reck, 28);
    EXPECT_EQ(generator_ledger(Scheme::reck, 9).offdiag_pairs, 36);
    EXPECT_EQ(generator_ledger(Scheme::triangle, 2).savings_vs_reck, 0);
    for (int n = 2; n <= 12; ++n) {
        const GeneratorLedger t = generator_ledger(Scheme::triangle, n);
        EXPECT_EQ(t.offdiag_pairs, n - 1);
        EXPECT_EQ(generator_ledger(Scheme::reck, n).offdiag_pairs, n * (n - 1) / 2);
        EXPECT_EQ(t.savings_vs_reck, (n - 1) * (n - 2) / 2);
    }
}

TEST(decompose, generator_ledger_of_plans) {
    const ComplexMatrix m = random_unitary_qr(9, 4);
    EXPECT_EQ(generator_ledger(triangle_decompose(m)).offdiag_pairs, 8);
    EXPECT_EQ(generator_ledger(reck_decompose(m)).offdiag_pairs, 36);
}

TEST(decompose, loss_examples) {
    const MeshPlan t4 = triangle_decompose(random_unitary_qr(4, 2));
    for (const ModeLoss &ml : loss_analysis(t4, 0.0)) {
        EXPECT_EQ(ml.rail_db, 0.0);
        EXPECT_EQ(ml.worst_db, 0.0);
    }
    const std::vector<ModeLoss> l = loss_analysis(t4, 0.2);
    ASSERT_EQ(l.size(), 4u);
    int on_34 = 0;
    for (const Coupler &c : t4.couplers) {
        on_34 += c.i == 3 ? 1 : 0;
    }
    EXPECT_EQ(on_34, 3);
    for (const ModeLoss &ml : l) {
        EXPECT_DOUBLE_EQ(ml.rail_db, 0.2 * ml.rail_couplers);
        EXPECT_DOUBLE_EQ(ml.worst_db, 0.2 * ml.worst_path);
        EXPECT_LE(ml.best_path, ml.worst_path);
    }
    const MeshPlan c4 = clements_decompose(random_unitary_qr(4, 2));
    for (const ModeLoss &ml : loss_analysis(c4, 0.2)) {
        EXPECT_LE(ml.rail_couplers, depth(c4));
        EXPECT_LE(ml.worst_path, depth(c4));
    }
}

TEST(decompose, scheme_strings) {
    for (Scheme s : {Scheme::triangle, Scheme::reck, Scheme::clements}) {
        EXPECT_EQ(scheme_from_string(to_string(s)), s);
    }
    EXPECT_THROW(scheme_from_string("bogus"), ValidationError);
}
