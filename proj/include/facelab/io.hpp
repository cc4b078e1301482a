#pragma once

/**
 * @file io.hpp
 * @brief Text polytope files, hyperplane syntax and JSON exports.
 *
 * Polytope file:
 *
 *     polytope <d> <n>
 *     <n lines of d whitespace-separated rationals>
 *
 * Blank lines and lines starting with '#' are ignored.
 * Hyperplane syntax: "a1,a2,...,ad;c" meaning a . x = c.
 */

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "facelab/error.hpp"
#include "facelab/exact_geometry.hpp"
#include "facelab/face_hypergraph.hpp"
#include "facelab/polytope.hpp"
#include "facelab/ridge_path.hpp"

namespace facelab {

using json = nlohmann::ordered_json;

inline VPolytope read_polytope(std::istream& in) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("empty polytope file");

    std::istringstream header(lines.front());
    std::string tag;
    long d = -1;
    long n = -1;
    std::string extra;
    if (!(header >> tag >> d >> n) || tag != "polytope" || (header >> extra))
        throw ParseError("polytope file must start with 'polytope <d> <n>'");
    if (d < 1 || n < 1) throw ParseError("polytope header needs d >= 1 and n >= 1");
    if (static_cast<long>(lines.size()) - 1 != n)
        throw ParseError("header announces " + std::to_string(n) + " points but file has " +
                         std::to_string(lines.size() - 1));

    std::vector<QVector> pts;
    for (long i = 0; i < n; ++i) {
        std::istringstream row(lines[static_cast<std::size_t>(i) + 1]);
        std::vector<Rational> coords;
        for (std::string tok; row >> tok;) coords.push_back(parse_rational(tok));
        if (static_cast<long>(coords.size()) != d)
            throw ParseError("point " + std::to_string(i) + " has " + std::to_string(coords.size()) +
                             " coordinates, expected " + std::to_string(d));
        pts.emplace_back(std::move(coords));
    }
    return VPolytope(std::move(pts));
}

inline VPolytope read_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open polytope file '" + path + "'");
    return read_polytope(in);
}

inline std::string format_polytope(const VPolytope& p) {
    std::ostringstream out;
    out << "polytope " << p.ambient_dim() << ' ' << p.num_vertices() << '\n';
    for (const auto& v : p.vertices()) {
        for (std::size_t i = 0; i < v.dim(); ++i) out << (i ? " " : "") << to_string(v[i]);
        out << '\n';
    }
    return out.str();
}

inline void write_polytope_file(const VPolytope& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << format_polytope(p);
}

inline Hyperplane parse_hyperplane(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError("hyperplane must look like 'a1,...,ad;c'");
    std::vector<Rational> normal;
    std::string_view coeffs = text.substr(0, semi);
    for (std::size_t start = 0;;) {
        const auto comma = coeffs.find(',', start);
        normal.push_back(parse_rational(coeffs.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    QVector a(std::move(normal));
    if (a.is_zero()) throw ParseError("hyperplane normal must be nonzero");
    return Hyperplane(std::move(a), parse_rational(text.substr(semi + 1)));
}

inline std::string format_hyperplane(const Hyperplane& h) {
    std::string out;
    for (std::size_t i = 0; i < h.dim(); ++i) out += (i ? "," : "") + to_string(h.normal()[i]);
    return out + ";" + to_string(h.offset());
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline json to_json(const QVector& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(to_string(x));
    return arr;
}

inline json to_json(const Hyperplane& h) { return {{"normal", to_json(h.normal())}, {"offset", to_string(h.offset())}}; }

inline json ids_json(const FaceLattice& l, const std::vector<FaceId>& ids) {
    json arr = json::array();
    for (auto id : ids) arr.push_back(l.id_string(id));
    return arr;
}

/// {dim, f_vector, faces:[{id, dim, vertices}], inclusions:[[child, parent]]} with covering pairs only.
inline json lattice_json(const FaceLattice& l) {
    json faces = json::array();
    json inclusions = json::array();
    for (FaceId id = 0; id < l.size(); ++id) {
        faces.push_back({{"id", l.id_string(id)}, {"dim", l.dim_of(id)}, {"vertices", l.face(id).vertices.indices()}});
        for (auto up : l.covers_up(id)) inclusions.push_back({l.id_string(id), l.id_string(up)});
    }
    return {{"dim", l.dim()}, {"f_vector", l.f_vector()}, {"faces", faces}, {"inclusions", inclusions}};
}

inline json hypergraph_json(const FaceLattice& l, const FaceHypergraph& hg) {
    json edges = json::array();
    for (std::size_t e = 0; e < hg.num_edges(); ++e) {
        json members = json::array();
        for (auto n : hg.members(e)) members.push_back(l.id_string(hg.node_faces()[n]));
        edges.push_back({{"id", l.id_string(hg.edge_faces()[e])}, {"nodes", members}});
    }
    return {{"k", hg.k()}, {"nodes", ids_json(l, hg.node_faces())}, {"hyperedges", edges}};
}

inline json node_ids_json(const FaceLattice& l, const FaceHypergraph& hg, const NodeSet& nodes) {
    json arr = json::array();
    for (auto n : nodes) arr.push_back(l.id_string(hg.node_faces()[n]));
    return arr;
}

inline json report_json(const FaceLattice& l, const FaceHypergraph& hg, const ConnectivityReport& r, bool with_witness) {
    json out = {{"k", hg.k()}, {"alpha", r.alpha}, {"capped", r.capped}, {"witness", nullptr}};
    if (with_witness && r.witness)
        out["witness"] = {{"removed", node_ids_json(l, hg, r.witness->removed)},
                          {"component_a", node_ids_json(l, hg, r.witness->component_a)},
                          {"component_b", node_ids_json(l, hg, r.witness->component_b)}};
    return out;
}

inline json ridge_path_json(const FaceLattice& l, const RidgePathResult& r, bool verified) {
    json planes = json::array();
    for (const auto& h : r.hyperplanes) planes.push_back(to_json(h));
    return {{"path", ids_json(l, r.path.faces)},
            {"ridges", ids_json(l, r.path.ridges)},
            {"verified", verified},
            {"depth", r.depth},
            {"hyperplanes", planes}};
}

} // namespace facelab
