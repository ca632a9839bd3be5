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
#include <numbers>
#include <numeric>

#include <gtest/gtest.h>

#include "trimesh/decompose.hpp"
#include "trimesh/errors.hpp"
#include "trimesh/haar.hpp"
#include "trimesh/random.hpp"
#include "trimesh/symrep.hpp"

using namespace trimesh;

namespace {

constexpr double kPi = std::numbers::pi;

Complex brute_permanent(const ComplexMatrix &a) {
    std::vector<int> perm(a.rows());
    std::iota(perm.begin(), perm.end(), 0);
    Complex total = 0.0;
    do {
        Complex prod = 1.0;
        for (int r = 0; r < a.rows(); ++r) {
            prod *= a(r, perm[r]);
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Eigen::MatrixXd dense(const RealSparse &s) { return Eigen::MatrixXd(s); }

Eigen::MatrixXd generator(const FockBasis &b, int i, int j) {
    // C_ji is the transpose of C_ij.
    return i <= j ? dense(lifted_generator(b, i, j)) : dense(lifted_generator(b, j, i)).transpose();
}

double max_abs(const ComplexMatrix &m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(symrep, basis_dimension_examples) {
    EXPECT_EQ(basis_dimension(9, 5), 1287u);
    EXPECT_EQ(basis_dimension(2, 1), 2u);
    EXPECT_EQ(basis_dimension(4, 3), 20u);
    EXPECT_EQ(basis_dimension(5, 0), 1u);
    EXPECT_EQ(basis_dimension(1, 7), 1u);
    EXPECT_EQ(basis_dimension(35, 33), 14226520737620288370u);
    EXPECT_THROW(basis_dimension(36, 33), ResourceError);
    EXPECT_THROW(basis_dimension(0, 2), DimensionError);
    EXPECT_THROW(basis_dimension(2, -1), DimensionError);
    EXPECT_THROW(basis_dimension(1000, 1000), ResourceError);
}

TEST(symrep, basis_order_and_lookup) {
    const FockBasis b(3, 2);
    const std::vector<Occupation> expect = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
    EXPECT_EQ(b.states(), expect);
    for (std::size_t k = 0; k < b.size(); ++k) {
        EXPECT_EQ(b.index_of(b.state(k)), k);
    }
    EXPECT_EQ(b.index_of({1, 1, 1}), b.size());
    EXPECT_THROW(FockBasis(13, 5), ResourceError);
    EXPECT_NO_THROW(FockBasis(13, 5, 7000));
}

TEST(symrep, generator_examples) {
    const FockBasis b1(2, 1);
    Eigen::MatrixXd c12(2, 2);
    c12 << 0, 1, 0, 0;
    EXPECT_EQ(dense(lifted_generator(b1, 1, 2)), c12);

    const FockBasis b2(2, 2);
    EXPECT_EQ(dense(lifted_generator(b2, 1, 1)), Eigen::Vector3d(2, 1, 0).asDiagonal().toDenseMatrix());
}

TEST(symrep, commutation_relations) {
    for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {4, 3}}) {
        const FockBasis b(n, p);
        for (int a = 1; a <= n; ++a) {
            for (int bb = 1; bb <= n; ++bb) {
                for (int c = 1; c <= n; ++c) {
                    for (int d = 1; d <= n; ++d) {
                        const Eigen::MatrixXd x = generator(b, a, bb);
                        const Eigen::MatrixXd y = generator(b, c, d);
                        Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(b.size(), b.size());
                        if (bb == c) {
                            expect += generator(b, a, d);
                        }
                        if (d == a) {
                            expect -= generator(b, c, bb);
                        }
                        EXPECT_LE((x * y - y * x - expect).cwiseAbs().maxCoeff(), 1e-12);
                    }
                }
            }
        }
    }
}

TEST(symrep, lift_coupler_examples) {
    const FockBasis b(3, 2);
    const ComplexMatrix id = lift_coupler(b, adjacent_coupler(1, {0, 0, 0}));
    EXPECT_LT(max_abs(id - ComplexMatrix::Identity(6, 6)), 1e-15);
    EXPECT_THROW(lift_coupler(b, {1, 3, {}, Arity::full3}), ValidationError);
}

TEST(symrep, p1_equals_fundamental) {
    Rng rng(4, 0);
    for (int n = 2; n <= 5; ++n) {
        const FockBasis b(n, 1);
        for (int i = 1; i < n; ++i) {
            const Coupler c = adjacent_coupler(i, {2 * kPi * rng.uniform(), kPi * rng.uniform(), 2 * kPi * rng.uniform()});
            EXPECT_LT(max_abs(lift_coupler(b, c) - embed_coupler(n, c)), 1e-12);
        }
        const MeshPlan plan = sample_haar({n, 9, HaarMode::group, 0});
        EXPECT_LT(max_abs(lift_plan(b, plan) - reconstruct(plan)), 1e-12);
    }
}

TEST(symrep, beta_only_coupler_vs_permanents) {
    const FockBasis b(2, 2);
    const Coupler c = adjacent_coupler(1, {0, 1.3, 0});
    const ComplexMatrix via = lift_via_permanents(b, embed_coupler(2, c));
    EXPECT_LT(max_abs(lift_coupler(b, c) - via), 1e-10);
}

TEST(symrep, lift_plan_examples) {
    const FockBasis b(3, 2);
    MeshPlan empty;
    empty.n = 3;
    EXPECT_LT(max_abs(lift_plan(b, empty) - ComplexMatrix::Identity(6, 6)), 1e-15);

    const MeshPlan plan = sample_haar({3, 21, HaarMode::group, 0});
    EXPECT_LT(max_abs(lift_plan(b, plan) - lift_via_permanents(b, reconstruct(plan))), 1e-8);

    MeshPlan wrong = plan;
    wrong.n = 4;
    EXPECT_THROW(lift_plan(b, wrong), DimensionError);
}

TEST(symrep, routes_agree_with_global_phase) {
    for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
        const FockBasis b(n, p);
        const ComplexMatrix m = random_unitary_qr(n, 31 * n + p);
        const MeshPlan plan = canonicalize(triangle_decompose(m), m).plan;
        const ComplexMatrix mesh = lift_plan(b, plan);
        EXPECT_LT(max_abs(mesh - lift_via_permanents(b, m)), 1e-8) << n << " " << p;
        EXPECT_TRUE(is_unitary(mesh, 1e-10));
    }
}

TEST(symrep, generator_economy) {
    const FockBasis b(9, 5);
    ASSERT_EQ(b.size(), 1287u);
    const MeshPlan plan = sample_haar({9, 1, HaarMode::group, 0});
    LiftStats stats;
    const ComplexMatrix big = lift_plan(b, plan, &stats);
    EXPECT_EQ(stats.offdiag_generators, 8u);
    EXPECT_EQ(stats.diagonal_generators, 9u);
    EXPECT_EQ(big.rows(), 1287);
}

TEST(symrep, permanent_examples) {
    EXPECT_NEAR(std::abs(permanent_ryser(ComplexMatrix::Identity(3, 3)) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(permanent_ryser(ComplexMatrix::Ones(3, 3)) - 6.0), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(permanent_ryser(ComplexMatrix(0, 0)) - 1.0), 0.0, 0.0);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed, 3);
        const int n = 1 + static_cast<int>(seed % 6);
        ComplexMatrix a(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                a(i, j) = Complex(rng.normal(), rng.normal());
            }
        }
        EXPECT_LT(std::abs(permanent_ryser(a) - brute_permanent(a)), 1e-12 * (1 + std::abs(brute_permanent(a))));
    }
    EXPECT_THROW(permanent_ryser(ComplexMatrix::Identity(21, 21)), ResourceError);
    EXPECT_THROW(permanent_ryser(ComplexMatrix::Identity(2, 3)), DimensionError);
}

TEST(symrep, permanent_lift_examples) {
    const FockBasis b(4, 2);
    EXPECT_LT(max_abs(lift_via_permanents(b, ComplexMatrix::Identity(4, 4)) - ComplexMatrix::Identity(10, 10)),
              1e-15);

    const double beta = 0.9;
    const FockBasis b2(2, 2);
    const ComplexMatrix ry = embed_coupler(2, adjacent_coupler(1, {0, beta, 0}));
    const ComplexMatrix up = lift_via_permanents(b2, ry);
    // <(1,1)| U_p |(2,0)>
    EXPECT_NEAR(std::abs(up(1, 0) - std::sqrt(2.0) * std::cos(beta / 2) * std::sin(beta / 2)), 0.0, 1e-14);

    const FockBasis b3(3, 3);
    EXPECT_TRUE(is_unitary(lift_via_permanents(b3, random_unitary_qr(3, 2)), 1e-9));
}

TEST(symrep, permanent_threads_identical) {
    const FockBasis b(4, 3);
    const ComplexMatrix u = random_unitary_qr(4, 17);
    EXPECT_EQ(lift_via_permanents(b, u, 1), lift_via_permanents(b, u, 5));
}
