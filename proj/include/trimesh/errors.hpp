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

#include <stdexcept>
#include <string>

namespace trimesh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Shape mismatch: non-square input, zero size, index outside the mode range.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// Input violates a numerical precondition (not unitary, det != 1, out-of-range angle).
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// Both components of a pair to be zeroed vanish.
class DegenerateInputError : public Error {
   public:
    using Error::Error;
};

/// A size cap or integer range would be exceeded.
class ResourceError : public Error {
   public:
    using Error::Error;
};

/// Malformed JSON or schema violation while reading a file.
class ParseError : public Error {
   public:
    using Error::Error;
};

/// Canonical-form refinement did not reach the requested tolerance.
class CanonicalizationError : public Error {
   public:
    CanonicalizationError(const std::string &what, double best_residual)
        : Error(what), best_residual_(best_residual) {}

    double best_residual() const noexcept { return best_residual_; }

   private:
    double best_residual_;
};

}  // namespace trimesh
