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


#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "trimesh/errors.hpp"
#include "trimesh/haar.hpp"
#include "trimesh/io.hpp"
#include "trimesh/mesh.hpp"

namespace trimesh::cli {

namespace {

constexpr const char *kVersion = "0.1.0";

// Locale-independent shortest round-trip text.
std::string num(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string sci(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 3);
    return std::string(buf, res.ptr);
}

Json meta(const RunConfig &c) {
    Json m;
    m["tool"] = "trimesh";
    m["version"] = kVersion;
    m["command"] = c.command;
    m["tol"] = c.tol;
    m["seed"] = c.seed;
    m["scheme"] = std::string(to_string(c.scheme));
    return m;
}

// Puts "meta" first, then the body's own keys.
Json with_meta(Json head, const Json &body) {
    Json doc;
    doc["meta"] = std::move(head);
    for (auto it = body.begin(); it != body.end(); ++it) {
        doc[it.key()] = it.value();
    }
    return doc;
}

Json load_input(const RunConfig &c) {
    if (c.input.empty()) {
        throw ParseError(c.command + ": an input file is required");
    }
    return read_json_file(c.input);
}

std::string format_or(const RunConfig &c, const char *fallback) {
    return c.format.empty() ? fallback : c.format;
}

void require_format(const std::string &format, std::initializer_list<const char *> allowed,
                    const std::string &command) {
    for (const char *a : allowed) {
        if (format == a) {
            return;
        }
    }
    throw ValidationError(command + ": unsupported format '" + format + "'");
}

void emit(const RunConfig &c, const std::string &payload, std::ostream &out) {
    if (c.output.empty() || c.output == "-") {
        out << payload;
        out.flush();
    } else {
        write_text(c.output, payload);
    }
}

std::ostream &summary_stream(const RunConfig &c, std::ostream &out, std::ostream &err) {
    return c.output.empty() || c.output == "-" ? err : out;
}

int integer_modes(const Json &doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.at("n").is_number_integer()) {
        throw ParseError("input has no integer \"n\"");
    }
    return doc.at("n").get<int>();
}

bool all_adjacent(const MeshPlan &plan) {
    return std::all_of(plan.couplers.begin(), plan.couplers.end(),
                       [](const Coupler &cp) { return cp.adjacent(); });
}

// Coupler parameters: 3 per full3 box and 2 per constrained2 box. The global
// phase is reported separately.
int coupler_parameters(const MeshPlan &plan) {
    if (all_adjacent(plan)) {
        return parameter_count(plan);
    }
    return 3 * static_cast<int>(plan.couplers.size());
}

struct Decomposed {
    MeshPlan plan;
    std::string canonical = "none";
};

// Input checks never go tighter than the library default, so a tiny --tol
// reports a tolerance failure on the residual instead of rejecting the input.
double input_tol(const RunConfig &c) { return std::max(c.tol, kUnitaryTol); }

Decomposed decompose_matrix(const RunConfig &c, Scheme scheme, const ComplexMatrix &m) {
    Decomposed d{decompose(scheme, m, input_tol(c)), "none"};
    if (scheme == Scheme::triangle && !c.raw) {
        CanonicalResult r = canonicalize(d.plan, m, input_tol(c));
        d.plan = std::move(r.plan);
        d.canonical = std::string(to_string(r.method));
    }
    return d;
}

MeshPlan plan_from_document(const RunConfig &c, const Json &doc) {
    if (is_plan_json(doc)) {
        MeshPlan plan = plan_from_json(doc);
        validate_plan(plan);
        return plan;
    }
    return decompose_matrix(c, Scheme::triangle, matrix_from_json(doc)).plan;
}

int cmd_decompose(const RunConfig &c, std::ostream &out, std::ostream &err) {
    require_format(format_or(c, "json"), {"json"}, c.command);
    const ComplexMatrix m = matrix_from_json(load_input(c));
    const Decomposed d = decompose_matrix(c, c.scheme, m);
    const double residual = frobenius_distance(reconstruct(d.plan), m);

    Json head = meta(c);
    head["canonical"] = d.canonical;
    emit(c, dump_json(with_meta(head, plan_to_json(d.plan))), out);

    std::ostream &s = summary_stream(c, out, err);
    s << "scheme: " << to_string(c.scheme) << "\n"
      << "boxes: " << d.plan.couplers.size() << "\n"
      << "depth: " << depth(d.plan) << "\n"
      << "parameters: " << coupler_parameters(d.plan) << "\n"
      << "global_phase: " << num(d.plan.global_phase) << "\n"
      << "residual: " << sci(residual) << "\n";
    if (!(residual < c.tol)) {
        err << "error: roundtrip residual " << sci(residual) << " exceeds tol " << sci(c.tol) << "\n";
        return kToleranceError;
    }
    return kOk;
}

int cmd_reconstruct(const RunConfig &c, std::ostream &out, std::ostream &) {
    require_format(format_or(c, "json"), {"json"}, c.command);
    MeshPlan plan = plan_from_json(load_input(c));
    validate_plan(plan);
    emit(c, dump_json(with_meta(meta(c), matrix_to_json(reconstruct(plan)))), out);
    return kOk;
}

struct SchemeRow {
    Scheme scheme;
    int depth;
    int boxes;
    GeneratorLedger ledger;
    int max_mode_couplers;
    std::vector<ModeLoss> losses;
};

int cmd_compare(const RunConfig &c, std::ostream &out, std::ostream &) {
    const std::string format = format_or(c, "json");
    require_format(format, {"json", "csv"}, c.command);
    ComplexMatrix m;
    if (!c.input.empty()) {
        m = matrix_from_json(read_json_file(c.input));
    } else if (c.n >= 1) {
        m = random_unitary_qr(c.n, c.seed);
    } else {
        throw ParseError("compare: provide --n or an input matrix");
    }
    if (m.rows() < 2) {
        throw DimensionError("compare: need at least two modes");
    }

    std::vector<SchemeRow> rows;
    for (Scheme s : {Scheme::triangle, Scheme::reck, Scheme::clements}) {
        const MeshPlan plan = decompose_matrix(c, s, m).plan;
        SchemeRow row{s, depth(plan), static_cast<int>(plan.couplers.size()), generator_ledger(plan), 0,
                      loss_analysis(plan, c.loss_db)};
        for (const ModeLoss &ml : row.losses) {
            row.max_mode_couplers = std::max(row.max_mode_couplers, ml.rail_couplers);
        }
        rows.push_back(std::move(row));
    }

    if (format == "csv") {
        std::ostringstream csv;
        csv << "scheme,depth,boxes,offdiag_generators,diagonal_generators,max_mode_couplers,"
               "mode,rail_couplers,best_path,worst_path,rail_db,best_db,worst_db\n";
        for (const SchemeRow &r : rows) {
            for (const ModeLoss &ml : r.losses) {
                csv << to_string(r.scheme) << ',' << r.depth << ',' << r.boxes << ',' << r.ledger.offdiag_pairs
                    << ',' << r.ledger.diagonal << ',' << r.max_mode_couplers << ',' << ml.mode << ','
                    << ml.rail_couplers << ',' << ml.best_path << ',' << ml.worst_path << ',' << num(ml.rail_db)
                    << ',' << num(ml.best_db) << ',' << num(ml.worst_db) << '\n';
            }
        }
        emit(c, csv.str(), out);
        return kOk;
    }

    Json head = meta(c);
    head.erase("scheme");
    head["n"] = m.rows();
    head["loss_db"] = c.loss_db;
    head["matrix"] = c.input.empty() ? "random_unitary_qr(n, seed)" : c.input;
    Json list = Json::array();
    for (const SchemeRow &r : rows) {
        Json e;
        e["scheme"] = std::string(to_string(r.scheme));
        e["depth"] = r.depth;
        e["boxes"] = r.boxes;
        e["offdiag_generators"] = r.ledger.offdiag_pairs;
        e["diagonal_generators"] = r.ledger.diagonal;
        e["max_mode_couplers"] = r.max_mode_couplers;
        Json modes = Json::array();
        for (const ModeLoss &ml : r.losses) {
            modes.push_back({{"mode", ml.mode},
                             {"rail_couplers", ml.rail_couplers},
                             {"best_path", ml.best_path},
                             {"worst_path", ml.worst_path},
                             {"rail_db", ml.rail_db},
                             {"best_db", ml.best_db},
                             {"worst_db", ml.worst_db}});
        }
        e["modes"] = std::move(modes);
        list.push_back(std::move(e));
    }
    Json body;
    body["schemes"] = std::move(list);
    emit(c, dump_json(with_meta(head, body)), out);
    return kOk;
}

int cmd_sample_haar(const RunConfig &c, std::ostream &out, std::ostream &) {
    require_format(format_or(c, "json"), {"json"}, c.command);
    if (c.n < 2) {
        throw DimensionError("sample-haar: --n must be at least 2");
    }
    HaarSpec spec;
    spec.n = c.n;
    spec.seed = c.seed;
    spec.mode = c.coset ? HaarMode::coset : HaarMode::group;
    const MeshPlan plan = c.coset ? sample_coset(spec) : sample_haar(spec);
    Json head = meta(c);
    head["mode"] = c.coset ? "coset" : "group";
    const Json body = c.as_matrix ? matrix_to_json(reconstruct(plan)) : plan_to_json(plan);
    emit(c, dump_json(with_meta(head, body)), out);
    return kOk;
}

int cmd_validate_haar(const RunConfig &c, std::ostream &out, std::ostream &err) {
    require_format(format_or(c, "json"), {"json"}, c.command);
    if (c.n < 2 || c.samples < 2) {
        throw DimensionError("validate-haar: need --n >= 2 and --samples >= 2");
    }
    const HaarReport r = validate_haar(c.n, c.samples, c.seed, c.threads);
    Json mean = Json::array();
    for (Eigen::Index i = 0; i < r.mean_abs2.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < r.mean_abs2.cols(); ++j) {
            row.push_back(r.mean_abs2(i, j));
        }
        mean.push_back(std::move(row));
    }
    Json head = meta(c);
    head.erase("scheme");
    Json body;
    body["n"] = r.n;
    body["samples"] = r.samples;
    body["significance"] = r.significance;
    body["pass"] = r.pass();
    body["moments"] = {{"expected", 1.0 / r.n}, {"mean_abs2", mean}, {"max_z", r.max_z}, {"pass", r.moments_pass}};
    body["ks"] = {{"stat", r.ks_statistic}, {"pvalue", r.ks_pvalue}, {"pass", r.ks_pass}};
    body["invariance"] = {
        {"stat", r.invariance_statistic}, {"pvalue", r.invariance_pvalue}, {"pass", r.invariance_pass}};
    emit(c, dump_json(with_meta(head, body)), out);
    if (!r.pass()) {
        err << "error: Haar validation failed\n";
        return kValidationError;
    }
    return kOk;
}

int cmd_lift(const RunConfig &c, std::ostream &out, std::ostream &) {
    if (c.p < 0) {
        throw DimensionError("lift: --p must be non-negative");
    }
    if (c.dimension_only) {
        int n = c.n;
        if (n < 1) {
            const Json doc = load_input(c);
            n = integer_modes(doc);
        }
        out << basis_dimension(n, c.p) << "\n";
        return kOk;
    }
    require_format(format_or(c, "json"), {"json"}, c.command);
    if (c.route != "mesh" && c.route != "permanent") {
        throw ValidationError("lift: unknown route '" + c.route + "'");
    }
    const Json doc = load_input(c);
    const MeshPlan plan = plan_from_document(c, doc);
    const FockBasis basis(plan.n, c.p, c.dim_cap);

    ComplexMatrix lifted;
    LiftStats stats;
    if (c.route == "mesh") {
        lifted = lift_plan(basis, plan, &stats);
    } else {
        const ComplexMatrix u = is_plan_json(doc) ? reconstruct(plan) : matrix_from_json(doc);
        lifted = lift_via_permanents(basis, u, c.threads);
    }

    Json head = meta(c);
    head["n"] = plan.n;
    head["p"] = c.p;
    head["dimension"] = basis.size();
    head["route"] = c.route;
    if (c.route == "mesh") {
        head["offdiag_generators"] = stats.offdiag_generators;
        head["diagonal_generators"] = stats.diagonal_generators;
    }
    emit(c, dump_json(with_meta(head, matrix_to_json(lifted))), out);
    return kOk;
}

int cmd_render(const RunConfig &c, std::ostream &out, std::ostream &) {
    const std::string format = format_or(c, "ascii");
    require_format(format, {"ascii", "svg"}, c.command);
    const MeshPlan plan = plan_from_document(c, load_input(c));
    emit(c, render(plan, format), out);
    return kOk;
}

}  // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        if (!(config.tol > 0.0)) {
            throw ValidationError("tol must be positive");
        }
        if (config.command == "decompose") {
            return cmd_decompose(config, out, err);
        }
        if (config.command == "reconstruct") {
            return cmd_reconstruct(config, out, err);
        }
        if (config.command == "compare") {
            return cmd_compare(config, out, err);
        }
        if (config.command == "sample-haar") {
            return cmd_sample_haar(config, out, err);
        }
        if (config.command == "validate-haar") {
            return cmd_validate_haar(config, out, err);
        }
        if (config.command == "lift") {
            return cmd_lift(config, out, err);
        }
        if (config.command == "render") {
            return cmd_render(config, out, err);
        }
        err << "error: unknown command '" << config.command << "'\n";
        return kIoError;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const CanonicalizationError &e) {
        err << "error: " << e.what() << "\n";
        return kToleranceError;
    } catch (const ResourceError &e) {
        err << "error: " << e.what() << "\n";
        return kResourceError;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    }
}

int main(int argc, char **argv, std::ostream &out, std::ostream &err) {
    RunConfig config;
    if (const char *cap = std::getenv("TRIMESH_DIM_CAP")) {
        const std::string text(cap);
        std::size_t value = 0;
        auto res = std::from_chars(text.data(), text.data() + text.size(), value);
        if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
            err << "error: TRIMESH_DIM_CAP must be a non-negative integer\n";
            return kIoError;
        }
        config.dim_cap = value;
    }

    CLI::App app{"trimesh: triangular SU(2) meshes for U(n)"};
    app.require_subcommand(1);
    app.footer(
        "Defaults: --tol 1e-10, --seed 0. Both are echoed into the \"meta\" header of every JSON output.\n"
        "Plans list couplers left to right: U = exp(i global_phase) * B[0] * B[1] * ...\n"
        "Exit codes: 0 success, 1 I/O or parse error, 2 tolerance exceeded, 3 validation error,\n"
        "            4 resource limit (TRIMESH_DIM_CAP overrides the Fock dimension cap, default 5000).");

    std::string scheme = "triangle";
    auto common = [&](CLI::App *sub) {
        sub->add_option("input", config.input, "Input JSON file");
        sub->add_option("--output,-o", config.output, "Output file (default stdout)");
        sub->add_option("--tol", config.tol, "Tolerance")->capture_default_str();
        sub->add_option("--seed", config.seed, "Random seed")->capture_default_str();
        sub->add_option("--format", config.format, "json | csv | ascii | svg");
        sub->add_option("--threads", config.threads, "Worker threads")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
    };

    CLI::App *dec = app.add_subcommand("decompose", "Matrix JSON to plan JSON");
    common(dec);
    dec->add_option("--scheme", scheme, "triangle | reck | clements")
        ->capture_default_str()
        ->check(CLI::IsMember({"triangle", "reck", "clements"}));
    dec->add_flag("--raw", config.raw, "Skip canonicalization of triangle plans");

    CLI::App *rec = app.add_subcommand("reconstruct", "Plan JSON to matrix JSON");
    common(rec);

    CLI::App *cmp = app.add_subcommand("compare", "Depth, generators and loss for every scheme");
    common(cmp);
    cmp->add_option("--n", config.n, "Number of modes (random input)");
    cmp->add_option("--loss-db", config.loss_db, "Loss per coupler in dB")->capture_default_str();

    CLI::App *sh = app.add_subcommand("sample-haar", "Haar-random plan");
    common(sh);
    sh->add_option("--n", config.n, "Number of modes")->required();
    sh->add_flag("--coset", config.coset, "Sample the coset U(n)/U(n-1) only");
    sh->add_flag("--matrix", config.as_matrix, "Emit the reconstructed matrix");

    CLI::App *vh = app.add_subcommand("validate-haar", "Statistical check of the Haar sampler");
    common(vh);
    vh->add_option("--n", config.n, "Number of modes")->required();
    vh->add_option("--samples", config.samples, "Number of samples")->capture_default_str();

    CLI::App *lf = app.add_subcommand("lift", "p-photon representation of a plan or matrix");
    common(lf);
    lf->add_option("--n", config.n, "Number of modes (with --dimension-only)");
    lf->add_option("--p", config.p, "Photon number")->capture_default_str();
    lf->add_option("--route", config.route, "mesh | permanent")
        ->capture_default_str()
        ->check(CLI::IsMember({"mesh", "permanent"}));
    lf->add_flag("--dimension-only", config.dimension_only, "Print the Fock dimension and exit");

    CLI::App *rd = app.add_subcommand("render", "ASCII or SVG diagram of a plan");
    common(rd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kIoError;
    }

    config.command = app.get_subcommands().front()->get_name();
    config.scheme = scheme_from_string(scheme);
    return run(config, out, err);
}

}  // namespace trimesh::cli
