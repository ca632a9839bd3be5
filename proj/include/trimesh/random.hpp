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
#include <random>

namespace trimesh {

/// Seeded random stream with platform-independent output.
///
/// Engine bits come from std::mt19937_64, whose sequence is fixed by the
/// standard. The value conversions below are written out by hand because the
/// standard distributions are implementation-defined. A stream is identified
/// by (seed, stream index) so batches can be split across threads without
/// changing any individual draw.
class Rng {
   public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Standard normal via Box-Muller; consumes exactly two uniforms.
    double normal();

   private:
    std::mt19937_64 engine_;
};

}  // namespace trimesh
