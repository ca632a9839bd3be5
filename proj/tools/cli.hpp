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
#include <iosfwd>
#include <string>

#include "trimesh/decompose.hpp"
#include "trimesh/symrep.hpp"

namespace trimesh::cli {

enum ExitCode : int {
    kOk = 0,
    kIoError = 1,
    kToleranceError = 2,
    kValidationError = 3,
    kResourceError = 4,
};

struct RunConfig {
    std::string command;
    std::string input;
    std::string output;
    Scheme scheme = Scheme::triangle;
    double tol = 1e-10;
    std::uint64_t seed = 0;
    int n = 0;
    int p = 1;
    int samples = 10000;
    std::string format;  ///< empty picks the command default
    int threads = 1;
    double loss_db = 0.2;
    bool raw = false;             ///< decompose: skip canonicalization
    bool coset = false;           ///< sample-haar: coset sampler
    bool as_matrix = false;       ///< sample-haar: emit the reconstructed matrix
    bool dimension_only = false;  ///< lift: print the basis dimension and stop
    std::string route = "mesh";   ///< lift: mesh | permanent
    std::size_t dim_cap = kDefaultDimCap;
};

/// Runs one command. Payloads go to config.output (or `out` when unset);
/// summaries go to `out` when a file was written and to `err` otherwise, so
/// stdout stays machine-readable.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv and dispatches to run(). Reads TRIMESH_DIM_CAP.
int main(int argc, char **argv, std::ostream &out, std::ostream &err);

}  // namespace trimesh::cli
