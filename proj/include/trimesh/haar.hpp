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

#include <cstdint>
#include <functional>
#include <vector>

#include "trimesh/linalg.hpp"
#include "trimesh/mesh.hpp"

namespace trimesh {

enum class HaarMode { group, coset };

struct HaarSpec {
    int n = 2;
    std::uint64_t seed = 0;
    HaarMode mode = HaarMode::group;
    std::uint64_t stream = 0;  ///< independent sub-stream, e.g. the sample index
};

/// Unnormalized density sin(beta) * sin^{2(level-1)}(beta / 2) on [0, pi].
/// Level 1 is the SU(2) factor sin(beta); the middle coupler of SU(n) has
/// level n - 1.
double beta_density(int level, double beta);

/// Inverse-CDF draw from beta_density: with t = sin^2(beta/2) the density is
/// proportional to t^{level-1} dt, so beta = 2 asin(u^{1/(2 level)}).
double sample_beta(int level, double u);

/// Density level of coupler (i, i+1) in an n-mode canonical plan: n - i.
int beta_level(int n, int lower_mode);

/// Haar-random SU(n) element as a canonical triangle plan.
///
/// Coupler (i, i+1) draws beta at level n - i. Chain heads draw alpha on
/// [0, 2pi) and gamma on [0, 4pi); constrained couplers draw alpha on
/// [0, 2pi) and copy it to gamma. Each coupler consumes one uniform for beta
/// then one per phase, in that order.
MeshPlan sample_haar(const HaarSpec &spec);

/// First descending chain only: a sample of the coset SU(n)/SU(n-1), i.e.
/// the first column of a Haar unitary. For n = 2 this is sample_haar.
MeshPlan sample_coset(const HaarSpec &spec);

/// Produces the unitary for sample index k.
using UnitarySampler = std::function<ComplexMatrix(std::uint64_t index)>;

struct HaarReport {
    int n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    double significance = 0.01;

    Eigen::MatrixXd mean_abs2;    ///< per-entry mean of |U_ij|^2
    Eigen::MatrixXd stderr_abs2;  ///< standard error of that mean
    double max_z = 0.0;           ///< max |mean - 1/n| / stderr
    bool moments_pass = false;

    double ks_statistic = 0.0;  ///< |U_11|^2 against 1 - (1 - s)^{n-1}
    double ks_pvalue = 0.0;
    bool ks_pass = false;

    double invariance_statistic = 0.0;  ///< |(V U)_11|^2 against the same law
    double invariance_pvalue = 0.0;
    bool invariance_pass = false;

    bool pass() const { return moments_pass && ks_pass && invariance_pass; }
};

/// Statistical harness for a U(n) sampler.
///
/// Checks E|U_ij|^2 = 1/n within 3 standard errors, a KS test of |U_11|^2
/// against the exact law P(|U_11|^2 > s) = (1 - s)^{n-1}, and left
/// invariance by running the same KS test on V U for a fixed random V.
/// Throws ValidationError for fewer than 1000 samples. Samples are split
/// across threads by index, so the report does not depend on the thread
/// count.
HaarReport validate_haar(int n, int samples, std::uint64_t seed, const UnitarySampler &sampler,
                         double significance = 0.01, int threads = 1);

/// Same harness driven by sample_haar with stream = sample index.
HaarReport validate_haar(int n, int samples, std::uint64_t seed, int threads = 1);

}  // namespace trimesh
