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

#include <string>

#include "json.hpp"

#include "trimesh/linalg.hpp"
#include "trimesh/mesh.hpp"

namespace trimesh {

using Json = nlohmann::ordered_json;

/// Recorded in every plan document so readers know how to multiply.
inline constexpr const char *kProductOrder =
    "U = exp(i global_phase) * B[0] * B[1] * ... ; couplers[0] is the leftmost factor";

/// {"n": n, "entries": [[[re, im], ...], ...]}, row-major.
Json matrix_to_json(const ComplexMatrix &m);

/// Throws ParseError when the shape or element types are wrong. Extra keys
/// (such as "meta") are ignored.
ComplexMatrix matrix_from_json(const Json &j);

/// {"n", "global_phase", "product_order", "couplers": [{"i", "j", "alpha",
/// "beta", "gamma", "arity"}, ...]}.
Json plan_to_json(const MeshPlan &plan);

/// Structural checks only (types, mode range, arity names); numerical
/// constraints are left to validate_plan.
MeshPlan plan_from_json(const Json &j);

/// True for documents carrying a "couplers" array.
bool is_plan_json(const Json &j);

/// Parses text. Throws ParseError with the parser diagnostic.
Json parse_json(const std::string &text);

/// Reads and parses a file. Throws ParseError on I/O or syntax failure.
Json read_json_file(const std::string &path);

/// Two-space indent and a trailing newline. Doubles use the shortest text
/// that reads back to the same value.
std::string dump_json(const Json &j);

/// Writes text to a file, or to stdout when path is empty or "-".
void write_text(const std::string &path, const std::string &text);

}  // namespace trimesh
