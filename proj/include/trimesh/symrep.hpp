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
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Sparse>

#include "trimesh/linalg.hpp"
#include "trimesh/mesh.hpp"

namespace trimesh {

inline constexpr std::size_t kDefaultDimCap = 5000;
inline constexpr int kMaxPermanentSize = 20;

using Occupation = std::vector<int>;
using RealSparse = Eigen::SparseMatrix<double>;

/// C(n + p - 1, p) in exact integer arithmetic. Throws DimensionError for
/// n < 1 or p < 0 and ResourceError if the value does not fit in 64 bits.
std::uint64_t basis_dimension(int n, int p);

/// p photons in n modes, occupations listed in lexicographically descending
/// order: (p, 0, ..., 0) first, (0, ..., 0, p) last. Immutable; shared by
/// both lifting routes so their matrices are entrywise comparable.
class FockBasis {
   public:
    /// Throws ResourceError when the dimension exceeds dim_cap.
    FockBasis(int n, int p, std::size_t dim_cap = kDefaultDimCap);

    int modes() const { return n_; }
    int photons() const { return p_; }
    std::size_t size() const { return states_.size(); }
    const std::vector<Occupation> &states() const { return states_; }
    const Occupation &state(std::size_t k) const { return states_[k]; }

    /// Position of an occupation vector, or size() if it is not in the basis.
    std::size_t index_of(const Occupation &m) const;

   private:
    int n_;
    int p_;
    std::vector<Occupation> states_;
    std::map<Occupation, std::size_t> index_;
};

/// Matrix of C_ij = a_i^dagger a_j on the basis (1-based modes):
/// <m + e_i - e_j| C_ij |m> = sqrt((m_i + 1) m_j) for i != j, and C_ii is
/// diag(m_i). Entries are real, so C_ji is the transpose of C_ij.
RealSparse lifted_generator(const FockBasis &basis, int i, int j);

/// Evaluates each generator at most once and counts what was needed.
class GeneratorCache {
   public:
    explicit GeneratorCache(const FockBasis &basis) : basis_(basis) {}

    /// C_ij for i < j; C_ji is obtained by transposition and not counted.
    const RealSparse &offdiag(int i, int j);
    const RealSparse &diagonal(int i);

    std::size_t offdiag_evaluated() const { return offdiag_.size(); }
    std::size_t diagonal_evaluated() const { return diagonal_.size(); }

   private:
    const FockBasis &basis_;
    std::map<std::pair<int, int>, RealSparse> offdiag_;
    std::map<int, RealSparse> diagonal_;
};

/// p-photon image of one adjacent coupler:
/// exp(+i a/2 (C_ii - C_jj)) exp(-b/2 (C_ij - C_ji)) exp(+i g/2 (C_ii - C_jj)).
/// The z-sign makes p = 1 reproduce embed_coupler. The middle factor is
/// block-diagonal over states that differ only on modes i, j; each block goes
/// through expm_skew_hermitian. Throws ValidationError for non-adjacent
/// couplers.
ComplexMatrix lift_coupler(const FockBasis &basis, const Coupler &c);

struct LiftStats {
    std::size_t offdiag_generators = 0;  ///< distinct C_ij (i < j) evaluated
    std::size_t diagonal_generators = 0;
};

/// Ordered product of lift_coupler over the plan times e^{i p global_phase}.
/// Couplers are applied block-wise, so no dense coupler matrix is formed.
ComplexMatrix lift_plan(const FockBasis &basis, const MeshPlan &plan, LiftStats *stats = nullptr);

/// Permanent by Ryser's inclusion-exclusion over a Gray code, O(2^p p).
/// Throws ResourceError above kMaxPermanentSize rows.
Complex permanent_ryser(const ComplexMatrix &a);

/// Symmetric-power matrix from permanents:
/// <m'|U_p|m> = per(U[m', m]) / sqrt(prod m'_i! prod m_j!), where U[m', m]
/// repeats row i of U m'_i times and column j m_j times. Output rows are
/// split across threads; the result does not depend on the thread count.
ComplexMatrix lift_via_permanents(const FockBasis &basis, const ComplexMatrix &u, int threads = 1);

}  // namespace trimesh
