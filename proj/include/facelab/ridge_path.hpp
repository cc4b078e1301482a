#pragma once

/**
 * @file ridge_path.hpp
 * @brief Ridge paths between k-faces that avoid a set of blocked k-faces.
 *
 * A ridge path is a sequence of k-faces in which consecutive faces meet in a
 * (k-1)-face not contained in any blocked face. With at most k blocked faces
 * such a path always exists. The solver finds one by induction on k: slice
 * the polytope with a hyperplane through both endpoints that misses one
 * blocked face, solve the (k-1)-problem in the slice, and lift the answer.
 */

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <vector>

#include "facelab/error.hpp"
#include "facelab/exact_geometry.hpp"
#include "facelab/generators.hpp"
#include "facelab/polytope.hpp"
#include "facelab/section.hpp"

namespace facelab {

struct BlockedSet {
    int k = 0;
    std::vector<FaceId> faces; ///< sorted, distinct

    bool contains(FaceId f) const { return std::binary_search(faces.begin(), faces.end(), f); }
};

inline BlockedSet make_blocked_set(const FaceLattice& l, int k, std::vector<FaceId> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (auto f : faces) require(l.dim_of(f) == k, "blocked face " + l.id_string(f) + " is not a " + std::to_string(k) + "-face");
    require(faces.size() <= static_cast<std::size_t>(std::max(k, 0)),
            "at most k = " + std::to_string(k) + " faces may be blocked, got " + std::to_string(faces.size()));
    return {k, std::move(faces)};
}

struct RidgePath {
    std::vector<FaceId> faces;
    std::vector<FaceId> ridges; ///< ridges[i] = faces[i] ∩ faces[i+1]
};

struct HyperplaneSearchResult {
    Hyperplane plane;
    int samples = 0; ///< candidates drawn, including the accepted one
};

/// Conditions on a hyperplane H for faces f, g, r of q: H contains the
/// barycenters of f and g, all vertices of r lie strictly on one side, and H
/// passes through no vertex of q.
inline bool is_cutting_hyperplane(const Polytope& q, FaceId f, FaceId g, FaceId r, const Hyperplane& h) {
    if (side(h, q.barycenter_of(f)) != 0 || side(h, q.barycenter_of(g)) != 0) return false;
    for (const auto& v : q.shape().vertices())
        if (side(h, v) == 0) return false;
    const auto rv = q.points_of(r);
    const int s = side(h, rv.front());
    return std::all_of(rv.begin(), rv.end(), [&](const QVector& v) { return side(h, v) == s; });
}

/// Coefficient range for the i-th sample: {-3..3}, then {-10..10}, then {-100..100}.
inline int sample_coefficient_range(int i) { return i < 1000 ? 3 : i < 3000 ? 10 : 100; }

inline constexpr int default_hyperplane_budget = 10000;

namespace detail {

/// Linear part M of an affine map sending a simplex of vertices of p to the
/// standard simplex (of its affine hull, completed by unit vectors). Vertices
/// listed in `preferred` are tried first.
inline RationalMatrix normalizing_frame(const VPolytope& p, const std::vector<std::size_t>& preferred) {
    const auto d = static_cast<std::size_t>(p.ambient_dim());
    std::vector<std::size_t> order = preferred;
    for (std::size_t v = 0; v < p.num_vertices(); ++v)
        if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);

    const QVector& origin = p.vertex(order.front());
    RationalMatrix cols;
    for (std::size_t i = 1; i < order.size() && cols.size() < d; ++i) {
        cols.push_back((p.vertex(order[i]) - origin).coords());
        if (matrix_rank(cols) < static_cast<int>(cols.size())) cols.pop_back();
    }
    // slices sit in a hyperplane of the ambient space
    for (std::size_t i = 0; i < d && cols.size() < d; ++i) {
        cols.push_back(QVector(d).coords());
        cols.back()[i] = 1;
        if (matrix_rank(cols) < static_cast<int>(cols.size())) cols.pop_back();
    }
    RationalMatrix b(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) b[i][j] = cols[j][i];
    return inverse(b);
}

inline QVector apply(const RationalMatrix& m, const QVector& x) {
    QVector out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < x.dim(); ++j) out[i] += m[i][j] * x[j];
    return out;
}

inline QVector apply_transposed(const RationalMatrix& m, const QVector& x) {
    QVector out(m.front().size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < out.dim(); ++j) out[j] += m[i][j] * x[i];
    return out;
}

} // namespace detail

/// Seeded search for a hyperplane through the barycenters of f and g that
/// misses r and every vertex. Random integer normals are drawn in a frame
/// where a simplex of vertices of r, f and g is the standard simplex, projected
/// orthogonally to g - f there, and pulled back. The conditions are affine
/// invariants and valid normals form an open set, so the search terminates;
/// running out of budget means a bug.
inline HyperplaneSearchResult find_cutting_hyperplane(const Polytope& q, FaceId f, FaceId g, FaceId r,
                                                      std::uint64_t seed, int budget = default_hyperplane_budget) {
    const auto& l = q.lattice();
    const int k = l.dim_of(f);
    require(f != g && f != r && g != r, "cutting hyperplane needs three distinct faces");
    require(l.dim_of(g) == k && l.dim_of(r) == k, "cutting hyperplane needs faces of equal dimension");
    require(k >= 1 && k <= l.dim() - 1, "cutting hyperplane needs 1 <= k <= d-1");

    std::vector<std::size_t> local;
    for (auto x : {r, f, g})
        for (auto v : l.face(x).vertices.indices())
            if (std::find(local.begin(), local.end(), v) == local.end()) local.push_back(v);
    const RationalMatrix frame = detail::normalizing_frame(q.shape(), local);
    const QVector bf = q.barycenter_of(f);
    const QVector w = detail::apply(frame, q.barycenter_of(g) - bf);
    const Rational ww = dot(w, w);
    const auto d = static_cast<std::size_t>(q.shape().ambient_dim());

    IntegerStream stream(seed);
    for (int i = 0; i < budget; ++i) {
        const int range = sample_coefficient_range(i);
        QVector u(d);
        for (std::size_t j = 0; j < d; ++j) u[j] = static_cast<long>(stream.uniform(-range, range));
        const QVector projected = u - w * (dot(u, w) / ww);
        if (projected.is_zero()) continue;
        QVector a = primitive_direction(detail::apply_transposed(frame, projected));
        Rational c = dot(a, bf);
        Hyperplane h(std::move(a), std::move(c));
        if (is_cutting_hyperplane(q, f, g, r, h)) return {std::move(h), i + 1};
    }
    throw InternalError("no cutting hyperplane found within " + std::to_string(budget) + " samples");
}

/// True iff `path` is a ridge path from f to g among the k-faces of l that
/// avoids b. Uses only vertex-set operations on the lattice.
inline bool verify_ridge_path(const FaceLattice& l, int k, const BlockedSet& b, const RidgePath& path, FaceId f,
                              FaceId g) {
    if (k < 0 || k > l.dim() - 1 || b.k != k) return false;
    if (path.faces.empty() || path.ridges.size() + 1 != path.faces.size()) return false;
    if (path.faces.front() != f || path.faces.back() != g) return false;
    auto valid = [&](FaceId id) { return id < l.size(); };
    for (auto x : b.faces)
        if (!valid(x) || l.dim_of(x) != k) return false;
    for (auto x : path.faces) {
        if (!valid(x) || l.dim_of(x) != k) return false;
        if (std::find(b.faces.begin(), b.faces.end(), x) != b.faces.end()) return false;
    }
    for (std::size_t i = 0; i < path.ridges.size(); ++i) {
        const FaceId a = path.faces[i];
        const FaceId c = path.faces[i + 1];
        const FaceId r = path.ridges[i];
        if (a == c || !valid(r)) return false;
        const VertexSet shared = l.face(a).vertices & l.face(c).vertices;
        if (shared != l.face(r).vertices || l.dim_of(r) != k - 1) return false;
        for (auto x : b.faces)
            if (l.face(r).vertices.is_subset_of(l.face(x).vertices)) return false;
    }
    return true;
}

/// Breadth-first search on the k-face ridge graph after removing the
/// blocked faces and every ridge inside one of them.
inline std::optional<RidgePath> ridge_graph_path(const FaceLattice& l, int k, const BlockedSet& b, FaceId f, FaceId g) {
    require(l.dim_of(f) == k && l.dim_of(g) == k, "endpoints must be k-faces");
    auto ridge_blocked = [&](FaceId r) {
        return std::any_of(b.faces.begin(), b.faces.end(), [&](FaceId x) { return l.contains(x, r); });
    };
    std::vector<std::optional<std::pair<FaceId, FaceId>>> prev(l.size()); // (previous face, ridge)
    std::vector<char> seen(l.size(), 0);
    std::deque<FaceId> queue{f};
    seen[f] = 1;
    while (!queue.empty() && !seen[g]) {
        const FaceId cur = queue.front();
        queue.pop_front();
        for (auto r : l.covers_down(cur)) {
            if (ridge_blocked(r)) continue;
            for (auto next : l.covers_up(r)) {
                if (seen[next] || b.contains(next)) continue;
                seen[next] = 1;
                prev[next] = {cur, r};
                queue.push_back(next);
            }
        }
    }
    if (!seen[g]) return std::nullopt;
    RidgePath path;
    for (FaceId cur = g; cur != f; cur = prev[cur]->first) {
        path.faces.push_back(cur);
        path.ridges.push_back(prev[cur]->second);
    }
    path.faces.push_back(f);
    std::reverse(path.faces.begin(), path.faces.end());
    std::reverse(path.ridges.begin(), path.ridges.end());
    return path;
}

struct RidgePathResult {
    RidgePath path;
    int depth = 0;                         ///< number of slicing levels used
    std::vector<Hyperplane> hyperplanes;   ///< one per level, outermost first
    std::vector<int> samples;              ///< hyperplane samples drawn per level
};

namespace detail {

inline void solve_ridge_path(const std::shared_ptr<const Polytope>& q, int k, const BlockedSet& b, FaceId f, FaceId g,
                             std::uint64_t seed, RidgePathResult& out, RidgePath& path) {
    const auto& l = q->lattice();
    if (b.contains(f) || b.contains(g)) throw InternalError("endpoint lies in the blocked set");

    if (f == g) {
        path = {{f}, {}};
        return;
    }
    if (k == 0) {
        // Nothing can be blocked and any two vertices meet in the empty face.
        path = {{f, g}, {l.empty_face()}};
        return;
    }
    if (b.faces.empty() || k == 1) {
        auto p = ridge_graph_path(l, k, b, f, g);
        if (!p) throw InternalError("ridge graph is disconnected although at most k faces are blocked");
        path = std::move(*p);
        return;
    }

    const FaceId blocker = b.faces.front();
    const std::uint64_t level_seed = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(out.depth + 1);
    auto found = find_cutting_hyperplane(*q, f, g, blocker, level_seed);
    out.hyperplanes.push_back(found.plane);
    out.samples.push_back(found.samples);
    ++out.depth;

    const SectionMap s(q, found.plane);
    const auto f_slice = s.phi(f);
    const auto g_slice = s.phi(g);
    if (!f_slice || !g_slice) throw InternalError("cutting hyperplane misses an endpoint");

    std::vector<FaceId> sub_blocked;
    for (auto x : b.faces) {
        if (x == blocker) continue;
        if (auto img = s.phi(x)) sub_blocked.push_back(*img);
    }
    const BlockedSet sub = make_blocked_set(s.sliced().lattice(), k - 1, std::move(sub_blocked));
    if (sub.contains(*f_slice) || sub.contains(*g_slice)) throw InternalError("section map is not injective");

    RidgePath inner;
    solve_ridge_path(s.sliced_ptr(), k - 1, sub, *f_slice, *g_slice, seed, out, inner);

    path.faces.clear();
    path.ridges.clear();
    for (auto x : inner.faces) path.faces.push_back(s.lift(x));
    for (auto x : inner.ridges) path.ridges.push_back(s.lift(x));
}

} // namespace detail

inline RidgePathResult find_ridge_path(std::shared_ptr<const Polytope> q, int k, const BlockedSet& b, FaceId f,
                                       FaceId g, std::uint64_t seed = 0) {
    const auto& l = q->lattice();
    require(k >= 0 && k <= l.dim() - 1, "k must lie in [0, d-1], got " + std::to_string(k));
    require(b.k == k, "blocked set has the wrong dimension");
    require(b.faces.size() <= static_cast<std::size_t>(k), "at most k faces may be blocked");
    require(f < l.size() && g < l.size(), "unknown face id");
    require(l.dim_of(f) == k && l.dim_of(g) == k, "endpoints must be k-faces");
    require(!b.contains(f) && !b.contains(g), "endpoints must not be blocked");

    RidgePathResult out;
    detail::solve_ridge_path(q, k, b, f, g, seed, out, out.path);
    if (!verify_ridge_path(l, k, b, out.path, f, g)) throw InternalError("lifted ridge path failed verification");
    return out;
}

} // namespace facelab
