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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace trimesh {

struct KsResult {
    double statistic = 0.0;
    double pvalue = 1.0;
};

/// Asymptotic Kolmogorov tail probability P(D_n > d), with Stephens'
/// small-sample correction of the scaling.
double kolmogorov_pvalue(double d, std::size_t n);

/// One-sample Kolmogorov-Smirnov test against a continuous CDF.
KsResult ks_test(std::vector<double> samples, const std::function<double(double)> &cdf);

/// Two-sample Kolmogorov-Smirnov test; the p-value uses the effective size
/// n m / (n + m).
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

struct MeanEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

MeanEstimate mean_with_stderr(std::span<const double> values);

/// Location of the peak of a sample density.
///
/// Bins the samples on [lo, hi), takes the fullest bin and fits a parabola to
/// the counts within +-half_window of it; the vertex is returned. Plain
/// histogram argmax is too noisy near a flat maximum.
double histogram_mode(std::span<const double> samples, double lo, double hi, int bins,
                      double half_window);

}  // namespace trimesh
