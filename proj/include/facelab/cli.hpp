#pragma once

/**
 * @file cli.hpp
 * @brief The `facelab` command-line front end as a library function.
 *
 * Every command prints one JSON document:
 *
 *     {"command": ..., "inputs": {...}, "status": "ok", "output": {...}}
 *
 * or, on failure, {"command", "inputs", "status": "error", "message"} with no
 * partial output. `--pretty` replaces the JSON with a short human summary.
 */

#include <cstdlib>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include "facelab/error.hpp"
#include "facelab/face_hypergraph.hpp"
#include "facelab/generators.hpp"
#include "facelab/io.hpp"
#include "facelab/polytope.hpp"
#include "facelab/ridge_path.hpp"
#include "facelab/section.hpp"

namespace facelab::cli {

struct CommandResult {
    std::string command;
    json inputs = json::object();
    json output = json::object();
    bool ok = true;
    std::string message;
    /// 0 success, 1 error, 2 a requested check failed.
    int exit_code = 0;
    /// Human-readable rendering, used with --pretty.
    std::string pretty;
    bool want_pretty = false;

    std::string render() const {
        if (want_pretty && ok) return pretty;
        json doc = {{"command", command}, {"inputs", inputs}, {"status", ok ? "ok" : "error"}};
        if (ok) doc["output"] = output;
        else doc["message"] = message;
        return doc.dump(2) + "\n";
    }
};

/// Worker count for exhaustive enumeration, from FACELAB_THREADS.
inline unsigned thread_budget() {
    const char* env = std::getenv("FACELAB_THREADS");
    if (!env) return 1;
    try {
        const long v = std::stol(env);
        return v >= 1 ? static_cast<unsigned>(v) : 1U;
    } catch (const std::exception&) {
        return 1;
    }
}

namespace detail {

inline std::string join(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

inline json vertices_json(const VPolytope& p) {
    json arr = json::array();
    for (const auto& v : p.vertices()) arr.push_back(to_json(v));
    return arr;
}

} // namespace detail

struct Options {
    std::string file;
    std::string out;
    std::string family = "simplex";
    std::string base = "cube";
    int dim = 0;
    int n = 0;
    std::uint64_t seed = 0;
    int bound = 10;
    int k = -1;
    int cap = 0;
    bool witness = false;
    std::string blocked;
    std::string from;
    std::string to;
    bool verify = false;
    std::string plane;
    bool all_k = false;
    int cap_override = 0;
    bool pretty = false;
};

inline void cmd_gen(const Options& o, CommandResult& r) {
    GeneratorSpec spec;
    spec.family = parse_family(o.family);
    spec.dim = o.dim;
    spec.n = o.n;
    spec.seed = o.seed;
    spec.coordinate_bound = o.bound;
    spec.base = parse_family(o.base);
    r.inputs = {{"family", o.family}, {"dim", o.dim}, {"n", o.n}, {"seed", o.seed}, {"bound", o.bound},
                {"base", o.base},     {"out", o.out}};
    const VPolytope p = generate(spec);
    if (!o.out.empty()) write_polytope_file(p, o.out);
    r.output = {{"dim", p.ambient_dim()}, {"num_vertices", p.num_vertices()}, {"vertices", detail::vertices_json(p)}};
    r.pretty = format_polytope(p);
}

inline void cmd_lattice(const Options& o, CommandResult& r) {
    r.inputs = {{"file", o.file}};
    const auto l = face_lattice(read_polytope_file(o.file));
    r.output = lattice_json(l);
    r.pretty = "dim " + std::to_string(l.dim()) + "\nf-vector " + detail::join(l.f_vector()) + "\n";
}

inline int resolve_k(const Options& o, const FaceLattice& l) {
    require(o.k >= 0 && o.k <= l.dim() - 1, "--k must lie in [0, " + std::to_string(l.dim() - 1) + "]");
    return o.k;
}

inline void cmd_hypergraph(const Options& o, CommandResult& r) {
    r.inputs = {{"file", o.file}, {"k", o.k}};
    const auto l = face_lattice(read_polytope_file(o.file));
    const auto hg = build_hypergraph(l, resolve_k(o, l));
    r.output = hypergraph_json(l, hg);
    r.pretty = "H_" + std::to_string(hg.k()) + ": " + std::to_string(hg.num_nodes()) + " nodes, " +
               std::to_string(hg.num_edges()) + " hyperedges\n";
}

inline void cmd_connectivity(const Options& o, CommandResult& r) {
    const auto l = face_lattice(read_polytope_file(o.file));
    const int k = resolve_k(o, l);
    const int cap = o.cap > 0 ? o.cap : l.dim() - k + 1;
    r.inputs = {{"file", o.file}, {"k", k}, {"cap", cap}, {"witness", o.witness}};
    const auto hg = build_hypergraph(l, k);
    const auto report = strong_connectivity(hg, cap, thread_budget());
    r.output = report_json(l, hg, report, o.witness);
    r.pretty = "H_" + std::to_string(k) + ": alpha " + (report.capped ? ">= " : "= ") + std::to_string(report.alpha) +
               "\n";
}

inline void cmd_ridge_path(const Options& o, CommandResult& r) {
    r.inputs = {{"file", o.file}, {"k", o.k},   {"blocked", o.blocked}, {"from", o.from},
                {"to", o.to},     {"seed", o.seed}, {"verify", o.verify}};
    auto q = std::make_shared<const Polytope>(read_polytope_file(o.file));
    const auto& l = q->lattice();
    const int k = resolve_k(o, l);
    std::vector<FaceId> blocked;
    for (const auto& id : detail::split(o.blocked, ',')) blocked.push_back(l.parse_id(id));
    const auto b = make_blocked_set(l, k, std::move(blocked));
    const FaceId f = l.parse_id(o.from);
    const FaceId g = l.parse_id(o.to);
    const auto result = find_ridge_path(q, k, b, f, g, o.seed);
    const bool verified = verify_ridge_path(l, k, b, result.path, f, g);
    r.output = ridge_path_json(l, result, verified);
    if (o.verify && !verified) r.exit_code = 2;
    std::string chain;
    for (auto x : result.path.faces) chain += (chain.empty() ? "" : " -> ") + l.id_string(x);
    r.pretty = chain + "\n";
}

inline void cmd_dual(const Options& o, CommandResult& r) {
    r.inputs = {{"file", o.file}, {"out", o.out}};
    const auto p = read_polytope_file(o.file);
    const auto dual = polar_dual(p);
    const auto m = duality_map(p);
    if (!o.out.empty()) write_polytope_file(dual, o.out);
    r.output = {{"dim", dual.ambient_dim()},
                {"vertices", detail::vertices_json(dual)},
                {"f_vector", m.primal.f_vector()},
                {"dual_f_vector", m.dual.f_vector()},
                {"anti_isomorphic", is_anti_isomorphism(m)}};
    r.pretty = format_polytope(dual);
}

inline void cmd_section(const Options& o, CommandResult& r) {
    r.inputs = {{"file", o.file}, {"plane", o.plane}};
    auto q = std::make_shared<const Polytope>(read_polytope_file(o.file));
    const SectionMap s(q, parse_hyperplane(o.plane));
    const auto& base = q->lattice();
    const auto& slice = s.sliced().lattice();
    json phi = json::array();
    for (FaceId id = 0; id < base.size(); ++id)
        if (auto img = s.phi(id)) phi.push_back({base.id_string(id), slice.id_string(*img)});
    r.output = {{"plane", to_json(s.plane())},
                {"slice_vertices", detail::vertices_json(s.sliced().shape())},
                {"slice_dim", slice.dim()},
                {"f_vector", slice.f_vector()},
                {"phi", phi},
                {"slice_lattice", lattice_json(slice)}};
    r.pretty = "slice f-vector " + detail::join(slice.f_vector()) + "\n";
}

inline void cmd_verify_theorem(const Options& o, CommandResult& r) {
    const auto l = face_lattice(read_polytope_file(o.file));
    const int d = l.dim();
    std::vector<int> ks;
    if (o.all_k || o.k < 0) {
        for (int k = 0; k < d; ++k) ks.push_back(k);
    } else {
        ks.push_back(resolve_k(o, l));
    }
    r.inputs = {{"file", o.file}, {"k", o.all_k || o.k < 0 ? json("all") : json(o.k)}, {"cap_override", o.cap_override}};
    json results = json::array();
    bool all_pass = true;
    for (int k : ks) {
        const int required = d - k;
        const int cap = o.cap_override > 0 ? o.cap_override : required;
        const auto hg = build_hypergraph(l, k);
        const auto report = strong_connectivity(hg, cap, thread_budget());
        const bool pass = report.alpha >= required;
        all_pass = all_pass && pass;
        results.push_back({{"k", k},
                           {"required", required},
                           {"cap", cap},
                           {"alpha", report.alpha},
                           {"capped", report.capped},
                           {"pass", pass}});
        r.pretty += "k=" + std::to_string(k) + " strongly " + std::to_string(required) + "-connected: " +
                    (pass ? "pass" : "FAIL") + "\n";
    }
    r.output = {{"dim", d}, {"results", results}, {"pass", all_pass}};
    if (!all_pass) r.exit_code = 2;
}

/// Runs one invocation. argv[0] is the program name.
inline CommandResult run(const std::vector<std::string>& argv) {
    CLI::App app{"facelab: exact face lattices, face hypergraph connectivity and ridge paths", "facelab"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--pretty", o.pretty, "human-readable summary instead of JSON");

    auto* gen = app.add_subcommand("gen", "generate a polytope");
    gen->add_option("--family", o.family, "simplex|cube|cross|cyclic|random|pyramid|prism")->required();
    gen->add_option("--dim", o.dim, "dimension")->required();
    gen->add_option("--n", o.n, "vertex count (cyclic, random)");
    gen->add_option("--seed", o.seed, "seed (random)");
    gen->add_option("--bound", o.bound, "coordinate bound (random)");
    gen->add_option("--base", o.base, "base family (pyramid, prism)");
    gen->add_option("--out", o.out, "output polytope file");

    auto* lattice = app.add_subcommand("lattice", "face lattice as JSON");
    lattice->add_option("file", o.file)->required();

    auto* hypergraph = app.add_subcommand("hypergraph", "the face hypergraph H_k");
    hypergraph->add_option("file", o.file)->required();
    hypergraph->add_option("--k", o.k)->required();

    auto* conn = app.add_subcommand("connectivity", "strong vertex connectivity of H_k");
    conn->add_option("file", o.file)->required();
    conn->add_option("--k", o.k)->required();
    conn->add_option("--cap", o.cap, "test removal sets of size < cap (default d-k+1)");
    conn->add_flag("--witness", o.witness, "include a disconnecting set");

    auto* ridge = app.add_subcommand("ridge-path", "ridge path avoiding blocked k-faces");
    ridge->add_option("file", o.file)->required();
    ridge->add_option("--k", o.k)->required();
    ridge->add_option("--blocked", o.blocked, "comma-separated face ids");
    ridge->add_option("--from", o.from)->required();
    ridge->add_option("--to", o.to)->required();
    ridge->add_option("--seed", o.seed);
    ridge->add_flag("--verify", o.verify, "exit with status 2 unless the path verifies");

    auto* dual = app.add_subcommand("dual", "polar dual");
    dual->add_option("file", o.file)->required();
    dual->add_option("--out", o.out, "output polytope file");

    auto* sec = app.add_subcommand("section", "hyperplane section and its face correspondence");
    sec->add_option("file", o.file)->required();
    sec->add_option("--plane", o.plane, "a1,...,ad;c")->required();

    auto* thm = app.add_subcommand("verify-theorem", "certify strong (d-k)-connectivity of H_k");
    thm->add_option("file", o.file)->required();
    auto* k_opt = thm->add_option("--k", o.k);
    thm->add_flag("--all-k", o.all_k)->excludes(k_opt);
    thm->add_option("--cap-override", o.cap_override);

    CommandResult r;
    std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        r.command = "help";
        r.want_pretty = true;
        r.pretty = app.help();
        return r;
    } catch (const CLI::ParseError& e) {
        r.command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
        r.ok = false;
        r.message = e.what();
        r.exit_code = 1;
        return r;
    }

    auto* sub = app.get_subcommands().front();
    r.command = sub->get_name();
    r.want_pretty = o.pretty;
    try {
        if (sub == gen) cmd_gen(o, r);
        else if (sub == lattice) cmd_lattice(o, r);
        else if (sub == hypergraph) cmd_hypergraph(o, r);
        else if (sub == conn) cmd_connectivity(o, r);
        else if (sub == ridge) cmd_ridge_path(o, r);
        else if (sub == dual) cmd_dual(o, r);
        else if (sub == sec) cmd_section(o, r);
        else if (sub == thm) cmd_verify_theorem(o, r);
    } catch (const std::exception& e) {
        r.ok = false;
        r.output = json::object();
        r.message = e.what();
        r.exit_code = 1;
    }
    return r;
}

} // namespace facelab::cli
