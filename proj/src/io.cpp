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


#include "trimesh/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "trimesh/errors.hpp"

namespace trimesh {

namespace {

double number(const Json &j, const char *what) {
    if (!j.is_number()) {
        throw ParseError(std::string(what) + ": expected a number");
    }
    return j.get<double>();
}

int integer(const Json &j, const char *what) {
    if (!j.is_number_integer()) {
        throw ParseError(std::string(what) + ": expected an integer");
    }
    return j.get<int>();
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

}  // namespace

Json matrix_to_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    Json out;
    out["n"] = m.rows();
    out["entries"] = std::move(rows);
    return out;
}

ComplexMatrix matrix_from_json(const Json &j) {
    const int n = integer(field(j, "n"), "n");
    if (n < 1) {
        throw ParseError("n must be positive");
    }
    const Json &rows = field(j, "entries");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) {
        throw ParseError("entries: expected " + std::to_string(n) + " rows");
    }
    ComplexMatrix m(n, n);
    for (int r = 0; r < n; ++r) {
        const Json &row = rows[r];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
            throw ParseError("entries: row " + std::to_string(r) + " must have " + std::to_string(n) +
                             " elements");
        }
        for (int c = 0; c < n; ++c) {
            const Json &z = row[c];
            if (!z.is_array() || z.size() != 2) {
                throw ParseError("entries: element must be [re, im]");
            }
            m(r, c) = Complex(number(z[0], "re"), number(z[1], "im"));
        }
    }
    return m;
}

Json plan_to_json(const MeshPlan &plan) {
    Json out;
    out["n"] = plan.n;
    out["global_phase"] = plan.global_phase;
    out["product_order"] = kProductOrder;
    Json list = Json::array();
    for (const Coupler &c : plan.couplers) {
        Json e;
        e["i"] = c.i;
        e["j"] = c.j;
        e["alpha"] = c.angles.alpha;
        e["beta"] = c.angles.beta;
        e["gamma"] = c.angles.gamma;
        e["arity"] = std::string(to_string(c.arity));
        list.push_back(std::move(e));
    }
    out["couplers"] = std::move(list);
    return out;
}

MeshPlan plan_from_json(const Json &j) {
    MeshPlan plan;
    plan.n = integer(field(j, "n"), "n");
    if (plan.n < 1) {
        throw ParseError("n must be positive");
    }
    plan.global_phase = j.contains("global_phase") ? number(j.at("global_phase"), "global_phase") : 0.0;
    const Json &list = field(j, "couplers");
    if (!list.is_array()) {
        throw ParseError("couplers: expected an array");
    }
    for (const Json &e : list) {
        Coupler c;
        c.i = integer(field(e, "i"), "i");
        c.j = integer(field(e, "j"), "j");
        if (c.i < 1 || c.j <= c.i || c.j > plan.n) {
            throw ParseError("coupler modes (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                             ") invalid for n = " + std::to_string(plan.n));
        }
        c.angles.alpha = number(field(e, "alpha"), "alpha");
        c.angles.beta = number(field(e, "beta"), "beta");
        c.angles.gamma = number(field(e, "gamma"), "gamma");
        const Json &arity = field(e, "arity");
        if (!arity.is_string()) {
            throw ParseError("arity: expected a string");
        }
        try {
            c.arity = arity_from_string(arity.get<std::string>());
        } catch (const Error &err) {
            throw ParseError(err.what());
        }
        plan.couplers.push_back(c);
    }
    return plan;
}

bool is_plan_json(const Json &j) { return j.is_object() && j.contains("couplers"); }

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(e.what());
    }
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

std::string dump_json(const Json &j) { return j.dump(2) + "\n"; }

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write " + path);
    }
    out << text;
    if (!out) {
        throw ParseError("write failed for " + path);
    }
}

}  // namespace trimesh
