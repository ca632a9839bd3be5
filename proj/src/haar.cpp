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

#include "trimesh/haar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "trimesh/decompose.hpp"
#include "trimesh/errors.hpp"
#include "trimesh/random.hpp"
#include "trimesh/stats.hpp"

namespace trimesh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint64_t kInvarianceSalt = 0x9e3779b97f4a7c15ULL;

Coupler draw_coupler(Rng &rng, int n, int lower_mode, bool chain_head) {
    Coupler c = adjacent_coupler(lower_mode, {}, chain_head ? Arity::full3 : Arity::constrained2);
    c.angles.beta = sample_beta(beta_level(n, lower_mode), rng.uniform());
    c.angles.alpha = kTwoPi * rng.uniform();
    c.angles.gamma = chain_head ? 2.0 * kTwoPi * rng.uniform() : c.angles.alpha;
    return c;
}

void require_modes(int n) {
    if (n < 2) {
        throw DimensionError("Haar sampling needs n >= 2");
    }
}

}  // namespace

double beta_density(int level, double beta) {
    if (level < 1) {
        throw ValidationError("beta_density: level must be >= 1");
    }
    if (!(beta >= 0.0 && beta <= std::numbers::pi)) {
        throw ValidationError("beta_density: beta outside [0, pi]");
    }
    return std::sin(beta) * std::pow(std::sin(0.5 * beta), 2 * (level - 1));
}

double sample_beta(int level, double u) {
    if (level < 1) {
        throw ValidationError("sample_beta: level must be >= 1");
    }
    if (!(u >= 0.0 && u < 1.0)) {
        throw ValidationError("sample_beta: u outside [0, 1)");
    }
    return 2.0 * std::asin(std::pow(u, 1.0 / (2.0 * level)));
}

int beta_level(int n, int lower_mode) { return n - lower_mode; }

MeshPlan sample_haar(const HaarSpec &spec) {
    require_modes(spec.n);
    if (spec.mode != HaarMode::group) {
        throw ValidationError("sample_haar: spec.mode must be group");
    }
    Rng rng(spec.seed, spec.stream);
    MeshPlan plan;
    plan.n = spec.n;
    for (int lower : triangle_lower_modes(spec.n)) {
        plan.couplers.push_back(draw_coupler(rng, spec.n, lower, lower == spec.n - 1));
    }
    return plan;
}

MeshPlan sample_coset(const HaarSpec &spec) {
    require_modes(spec.n);
    if (spec.mode != HaarMode::coset) {
        throw ValidationError("sample_coset: spec.mode must be coset");
    }
    if (spec.n == 2) {
        return sample_haar({spec.n, spec.seed, HaarMode::group, spec.stream});
    }
    Rng rng(spec.seed, spec.stream);
    MeshPlan plan;
    plan.n = spec.n;
    for (int lower = spec.n - 1; lower >= 1; --lower) {
        plan.couplers.push_back(draw_coupler(rng, spec.n, lower, lower == spec.n - 1));
    }
    return plan;
}

HaarReport validate_haar(int n, int samples, std::uint64_t seed, const UnitarySampler &sampler,
                         double significance, int threads) {
    require_modes(n);
    if (samples < 1000) {
        throw ValidationError("validate_haar: need at least 1000 samples");
    }
    const auto count = static_cast<std::size_t>(samples);
    const auto entries = static_cast<std::size_t>(n * n);
    const ComplexMatrix v = random_unitary_qr(n, seed ^ kInvarianceSalt);

    // abs2[k * entries + (i * n + j)] = |U_ij|^2 of sample k.
    std::vector<double> abs2(count * entries);
    std::vector<double> rotated(count);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const ComplexMatrix u = sampler(k);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    abs2[k * entries + static_cast<std::size_t>(i * n + j)] = std::norm(u(i, j));
                }
            }
            rotated[k] = std::norm((v.row(0) * u.col(0))(0, 0));
        }
    };
    const auto workers = static_cast<std::size_t>(std::clamp(threads, 1, samples));
    if (workers == 1) {
        work(0, count);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (count + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work, w * chunk, std::min(count, (w + 1) * chunk));
        }
    }

    HaarReport report;
    report.n = n;
    report.samples = samples;
    report.seed = seed;
    report.significance = significance;
    report.mean_abs2.resize(n, n);
    report.stderr_abs2.resize(n, n);
    std::vector<double> column(count);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < count; ++k) {
                column[k] = abs2[k * entries + static_cast<std::size_t>(i * n + j)];
            }
            const MeanEstimate est = mean_with_stderr(column);
            report.mean_abs2(i, j) = est.mean;
            report.stderr_abs2(i, j) = est.std_error;
            report.max_z = std::max(report.max_z, std::abs(est.mean - 1.0 / n) / est.std_error);
        }
    }
    report.moments_pass = report.max_z <= 3.0;

    const auto law = [n](double s) { return 1.0 - std::pow(1.0 - std::clamp(s, 0.0, 1.0), n - 1); };
    for (std::size_t k = 0; k < count; ++k) {
        column[k] = abs2[k * entries];
    }
    const KsResult ks = ks_test(column, law);
    report.ks_statistic = ks.statistic;
    report.ks_pvalue = ks.pvalue;
    report.ks_pass = ks.pvalue >= significance;

    const KsResult inv = ks_test(rotated, law);
    report.invariance_statistic = inv.statistic;
    report.invariance_pvalue = inv.pvalue;
    report.invariance_pass = inv.pvalue >= significance;
    return report;
}

HaarReport validate_haar(int n, int samples, std::uint64_t seed, int threads) {
    const UnitarySampler sampler = [n, seed](std::uint64_t index) {
        return reconstruct(sample_haar({n, seed, HaarMode::group, index}));
    };
    return validate_haar(n, samples, seed, sampler, 0.01, threads);
}

}  // namespace trimesh
