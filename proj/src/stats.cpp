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

#include "trimesh/stats.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "trimesh/errors.hpp"

namespace trimesh {

double kolmogorov_pvalue(double d, std::size_t n) {
    if (n == 0) {
        return 1.0;
    }
    const double root_n = std::sqrt(static_cast<double>(n));
    const double lambda = (root_n + 0.12 + 0.11 / root_n) * d;
    if (lambda < 0.2) {
        return 1.0;
    }
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += sign * term;
        if (term < 1e-16 * std::abs(sum)) {
            break;
        }
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(std::vector<double> samples, const std::function<double(double)> &cdf) {
    if (samples.empty()) {
        throw ValidationError("ks_test: no samples");
    }
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const double f = cdf(samples[k]);
        d = std::max({d, (static_cast<double>(k) + 1.0) / n - f, f - static_cast<double>(k) / n});
    }
    return {d, kolmogorov_pvalue(d, samples.size())};
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) {
        throw ValidationError("ks_two_sample: no samples");
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t ia = 0;
    std::size_t ib = 0;
    double d = 0.0;
    while (ia < a.size() && ib < b.size()) {
        const double x = std::min(a[ia], b[ib]);
        while (ia < a.size() && a[ia] == x) {
            ++ia;
        }
        while (ib < b.size() && b[ib] == x) {
            ++ib;
        }
        d = std::max(d, std::abs(static_cast<double>(ia) / na - static_cast<double>(ib) / nb));
    }
    const auto eff = static_cast<std::size_t>(std::llround(na * nb / (na + nb)));
    return {d, kolmogorov_pvalue(d, std::max<std::size_t>(eff, 1))};
}

MeanEstimate mean_with_stderr(std::span<const double> values) {
    if (values.size() < 2) {
        throw ValidationError("mean_with_stderr: need at least two values");
    }
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) {
        mean += v;
    }
    mean /= n;
    double var = 0.0;
    for (double v : values) {
        var += (v - mean) * (v - mean);
    }
    var /= n - 1.0;
    return {mean, std::sqrt(var / n)};
}

double histogram_mode(std::span<const double> samples, double lo, double hi, int bins,
                      double half_window) {
    if (bins < 3 || !(hi > lo) || samples.empty()) {
        throw ValidationError("histogram_mode: bad binning or no samples");
    }
    const double width = (hi - lo) / bins;
    std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
    for (double s : samples) {
        const auto b = static_cast<long>(std::floor((s - lo) / width));
        if (b >= 0 && b < bins) {
            counts[static_cast<std::size_t>(b)] += 1.0;
        }
    }
    const auto peak = static_cast<long>(std::max_element(counts.begin(), counts.end()) -
                                        counts.begin());
    auto centre = [&](long b) { return lo + (static_cast<double>(b) + 0.5) * width; };
    const double peak_x = centre(peak);

    std::vector<double> xs;
    std::vector<double> ys;
    for (long b = 0; b < bins; ++b) {
        if (std::abs(centre(b) - peak_x) <= half_window) {
            xs.push_back(centre(b) - peak_x);
            ys.push_back(counts[static_cast<std::size_t>(b)]);
        }
    }
    if (xs.size() < 3) {
        return peak_x;
    }
    Eigen::MatrixXd design(static_cast<Eigen::Index>(xs.size()), 3);
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(xs.size()));
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const auto r = static_cast<Eigen::Index>(k);
        design(r, 0) = 1.0;
        design(r, 1) = xs[k];
        design(r, 2) = xs[k] * xs[k];
        rhs(r) = ys[k];
    }
    const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(rhs);
    if (!(coef(2) < 0.0)) {
        return peak_x;
    }
    const double vertex = -coef(1) / (2.0 * coef(2));
    return std::abs(vertex) <= half_window ? peak_x + vertex : peak_x;
}

}  // namespace trimesh
