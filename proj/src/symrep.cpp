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


#include "trimesh/symrep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "trimesh/errors.hpp"

namespace trimesh {

namespace {

void enumerate(int mode, int remaining, Occupation &cur, std::vector<Occupation> &out) {
    const int n = static_cast<int>(cur.size());
    if (mode == n - 1) {
        cur[mode] = remaining;
        out.push_back(cur);
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        cur[mode] = k;
        enumerate(mode + 1, remaining - k, cur, out);
    }
}

void check_mode(const FockBasis &basis, int i, const char *what) {
    if (i < 1 || i > basis.modes()) {
        throw DimensionError(std::string(what) + ": mode " + std::to_string(i) + " outside 1.." +
                             std::to_string(basis.modes()));
    }
}

// Groups basis indices into the invariant subspaces of a two-mode coupler:
// states equal outside modes a, b (0-based). Within a group the indices are
// ascending, i.e. occupation of a descending.
std::vector<std::vector<std::size_t>> orbits(const FockBasis &basis, int a, int b) {
    std::map<Occupation, std::size_t> slot;
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Occupation key = basis.state(k);
        key[a] += key[b];
        key[b] = 0;
        auto [it, fresh] = slot.emplace(key, out.size());
        if (fresh) {
            out.emplace_back();
        }
        out[it->second].push_back(k);
    }
    return out;
}

struct PairData {
    std::vector<std::vector<std::size_t>> orbits;
    const RealSparse *c_ab = nullptr;
    const RealSparse *n_a = nullptr;
    const RealSparse *n_b = nullptr;
};

// r <- r * lift(c), touching only the columns of each orbit.
void apply_right(ComplexMatrix &r, const Coupler &c, const PairData &d) {
    const double half_b = 0.5 * c.angles.beta;
    for (const auto &orb : d.orbits) {
        const auto s = static_cast<Eigen::Index>(orb.size());
        ComplexMatrix x = ComplexMatrix::Zero(s, s);
        Eigen::VectorXd diff(s);
        for (Eigen::Index p = 0; p < s; ++p) {
            diff(p) = d.n_a->coeff(orb[p], orb[p]) - d.n_b->coeff(orb[p], orb[p]);
            for (Eigen::Index q = 0; q < s; ++q) {
                const double g = d.c_ab->coeff(orb[p], orb[q]) - d.c_ab->coeff(orb[q], orb[p]);
                x(p, q) = -half_b * g;
            }
        }
        ComplexMatrix block = s == 1 ? ComplexMatrix::Identity(1, 1) : expm_skew_hermitian(x);
        for (Eigen::Index p = 0; p < s; ++p) {
            block.row(p) *= std::polar(1.0, 0.5 * c.angles.alpha * diff(p));
            block.col(p) *= std::polar(1.0, 0.5 * c.angles.gamma * diff(p));
        }
        ComplexMatrix cols(r.rows(), s);
        for (Eigen::Index q = 0; q < s; ++q) {
            cols.col(q) = r.col(static_cast<Eigen::Index>(orb[q]));
        }
        const ComplexMatrix mixed = cols * block;
        for (Eigen::Index q = 0; q < s; ++q) {
            r.col(static_cast<Eigen::Index>(orb[q])) = mixed.col(q);
        }
    }
}

PairData pair_data(const FockBasis &basis, GeneratorCache &cache, const Coupler &c) {
    PairData d;
    d.orbits = orbits(basis, c.i - 1, c.j - 1);
    d.c_ab = &cache.offdiag(c.i, c.j);
    d.n_a = &cache.diagonal(c.i);
    d.n_b = &cache.diagonal(c.j);
    return d;
}

void require_lift_adjacent(const FockBasis &basis, const Coupler &c) {
    if (!c.adjacent()) {
        throw ValidationError("lift: coupler (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                              ") is not adjacent");
    }
    check_mode(basis, c.i, "lift");
    check_mode(basis, c.j, "lift");
}

double factorial(int k) {
    if (k <= 20) {
        double f = 1.0;
        for (int t = 2; t <= k; ++t) {
            f *= t;
        }
        return f;
    }
    return std::exp(std::lgamma(k + 1.0));
}

}  // namespace

std::uint64_t basis_dimension(int n, int p) {
    if (n < 1 || p < 0) {
        throw DimensionError("basis_dimension: need n >= 1 and p >= 0");
    }
    // acc * m / k is exact; dividing out gcd(acc, k) first keeps it in range.
    std::uint64_t acc = 1;
    for (int k = 1; k <= p; ++k) {
        const std::uint64_t m = static_cast<std::uint64_t>(n) - 1 + static_cast<std::uint64_t>(k);
        const std::uint64_t g = std::gcd(acc, static_cast<std::uint64_t>(k));
        const std::uint64_t lhs = acc / g;
        const std::uint64_t rhs = m / (static_cast<std::uint64_t>(k) / g);
        if (rhs != 0 && lhs > std::numeric_limits<std::uint64_t>::max() / rhs) {
            throw ResourceError("basis_dimension: C(" + std::to_string(n + p - 1) + "," +
                                std::to_string(p) + ") overflows 64 bits");
        }
        acc = lhs * rhs;
    }
    return acc;
}

FockBasis::FockBasis(int n, int p, std::size_t dim_cap) : n_(n), p_(p) {
    const std::uint64_t dim = basis_dimension(n, p);
    if (dim > dim_cap) {
        throw ResourceError("Fock basis dimension " + std::to_string(dim) + " exceeds cap " +
                            std::to_string(dim_cap));
    }
    states_.reserve(dim);
    Occupation cur(n, 0);
    enumerate(0, p, cur, states_);
    for (std::size_t k = 0; k < states_.size(); ++k) {
        index_.emplace(states_[k], k);
    }
}

std::size_t FockBasis::index_of(const Occupation &m) const {
    auto it = index_.find(m);
    return it == index_.end() ? states_.size() : it->second;
}

RealSparse lifted_generator(const FockBasis &basis, int i, int j) {
    check_mode(basis, i, "lifted_generator");
    check_mode(basis, j, "lifted_generator");
    const auto dim = static_cast<Eigen::Index>(basis.size());
    std::vector<Eigen::Triplet<double>> trips;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const Occupation &m = basis.state(k);
        if (i == j) {
            if (m[i - 1] != 0) {
                trips.emplace_back(k, k, static_cast<double>(m[i - 1]));
            }
            continue;
        }
        if (m[j - 1] == 0) {
            continue;
        }
        Occupation to = m;
        to[i - 1] += 1;
        to[j - 1] -= 1;
        const double amp = std::sqrt(static_cast<double>(m[i - 1] + 1) * m[j - 1]);
        trips.emplace_back(basis.index_of(to), k, amp);
    }
    RealSparse g(dim, dim);
    g.setFromTriplets(trips.begin(), trips.end());
    return g;
}

const RealSparse &GeneratorCache::offdiag(int i, int j) {
    auto key = std::make_pair(i, j);
    auto it = offdiag_.find(key);
    if (it == offdiag_.end()) {
        it = offdiag_.emplace(key, lifted_generator(basis_, i, j)).first;
    }
    return it->second;
}

const RealSparse &GeneratorCache::diagonal(int i) {
    auto it = diagonal_.find(i);
    if (it == diagonal_.end()) {
        it = diagonal_.emplace(i, lifted_generator(basis_, i, i)).first;
    }
    return it->second;
}

ComplexMatrix lift_coupler(const FockBasis &basis, const Coupler &c) {
    require_lift_adjacent(basis, c);
    GeneratorCache cache(basis);
    const auto dim = static_cast<Eigen::Index>(basis.size());
    ComplexMatrix r = ComplexMatrix::Identity(dim, dim);
    apply_right(r, c, pair_data(basis, cache, c));
    return r;
}

ComplexMatrix lift_plan(const FockBasis &basis, const MeshPlan &plan, LiftStats *stats) {
    if (plan.n != basis.modes()) {
        throw DimensionError("lift_plan: plan has " + std::to_string(plan.n) + " modes, basis has " +
                             std::to_string(basis.modes()));
    }
    validate_plan(plan);
    GeneratorCache cache(basis);
    std::map<std::pair<int, int>, PairData> pairs;
    const auto dim = static_cast<Eigen::Index>(basis.size());
    ComplexMatrix r = ComplexMatrix::Identity(dim, dim);
    for (const Coupler &c : plan.couplers) {
        require_lift_adjacent(basis, c);
        auto key = std::make_pair(c.i, c.j);
        auto it = pairs.find(key);
        if (it == pairs.end()) {
            it = pairs.emplace(key, pair_data(basis, cache, c)).first;
        }
        apply_right(r, c, it->second);
    }
    r *= std::polar(1.0, basis.photons() * plan.global_phase);
    if (stats != nullptr) {
        stats->offdiag_generators = cache.offdiag_evaluated();
        stats->diagonal_generators = cache.diagonal_evaluated();
    }
    return r;
}

Complex permanent_ryser(const ComplexMatrix &a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("permanent: matrix must be square");
    }
    const int p = static_cast<int>(a.rows());
    if (p > kMaxPermanentSize) {
        throw ResourceError("permanent: size " + std::to_string(p) + " exceeds " +
                            std::to_string(kMaxPermanentSize));
    }
    if (p == 0) {
        return {1.0, 0.0};
    }
    Eigen::VectorXcd rowsum = Eigen::VectorXcd::Zero(p);
    Complex total = 0.0;
    std::uint32_t gray = 0;
    const std::uint32_t count = 1u << p;
    for (std::uint32_t k = 1; k < count; ++k) {
        const int bit = std::countr_zero(k);
        gray ^= 1u << bit;
        if (gray & (1u << bit)) {
            rowsum += a.col(bit);
        } else {
            rowsum -= a.col(bit);
        }
        Complex prod = rowsum.prod();
        total += (std::popcount(gray) & 1) ? -prod : prod;
    }
    return (p & 1) ? -total : total;
}

ComplexMatrix lift_via_permanents(const FockBasis &basis, const ComplexMatrix &u, int threads) {
    if (u.rows() != basis.modes() || u.cols() != basis.modes()) {
        throw DimensionError("lift_via_permanents: matrix size does not match basis");
    }
    const int p = basis.photons();
    if (p > kMaxPermanentSize) {
        throw ResourceError("lift_via_permanents: " + std::to_string(p) + " photons exceeds " +
                            std::to_string(kMaxPermanentSize));
    }
    const auto dim = static_cast<Eigen::Index>(basis.size());
    const int n = basis.modes();

    std::vector<std::vector<int>> expand(basis.size());
    std::vector<double> norm(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const Occupation &m = basis.state(k);
        double f = 1.0;
        for (int mode = 0; mode < n; ++mode) {
            expand[k].insert(expand[k].end(), m[mode], mode);
            f *= factorial(m[mode]);
        }
        norm[k] = std::sqrt(f);
    }

    ComplexMatrix out(dim, dim);
    auto work = [&](Eigen::Index lo, Eigen::Index hi) {
        ComplexMatrix sub(p, p);
        for (Eigen::Index r = lo; r < hi; ++r) {
            for (Eigen::Index c = 0; c < dim; ++c) {
                for (int x = 0; x < p; ++x) {
                    for (int y = 0; y < p; ++y) {
                        sub(x, y) = u(expand[r][x], expand[c][y]);
                    }
                }
                out(r, c) = permanent_ryser(sub) / (norm[r] * norm[c]);
            }
        }
    };

    const int t = std::clamp(threads, 1, static_cast<int>(std::max<Eigen::Index>(dim, 1)));
    if (t == 1) {
        work(0, dim);
        return out;
    }
    {
        std::vector<std::jthread> pool;
        const Eigen::Index chunk = (dim + t - 1) / t;
        for (int w = 0; w < t; ++w) {
            const Eigen::Index lo = w * chunk;
            const Eigen::Index hi = std::min(dim, lo + chunk);
            if (lo < hi) {
                pool.emplace_back(work, lo, hi);
            }
        }
    }
    return out;
}

}  // namespace trimesh
