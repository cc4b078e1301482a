#pragma once

/**
 * @file polytope.hpp
 * @brief V-polytopes, facet enumeration, face lattices and polar duality.
 *
 * A face is identified by the sorted set of polytope vertices lying on it.
 * Lattices store faces sorted by (dimension, vertex set), so a FaceId is
 * stable for a given polytope and the faces of one dimension are contiguous.
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "facelab/combinatorics.hpp"
#include "facelab/error.hpp"
#include "facelab/exact_geometry.hpp"
#include "facelab/vertex_set.hpp"

namespace facelab {

/// Tag for constructors that skip the (costly) all-points-are-vertices check
/// because the caller constructs vertices that are vertices by construction.
struct trusted_vertices_t {
    explicit trusted_vertices_t() = default;
};
inline constexpr trusted_vertices_t trusted_vertices{};

class VPolytope {
public:
    VPolytope() = default;

    /// Checks that every point is a vertex of the convex hull.
    explicit VPolytope(std::vector<QVector> vertices) : VPolytope(std::move(vertices), trusted_vertices) {
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            std::vector<QVector> others;
            others.reserve(vertices_.size() - 1);
            for (std::size_t j = 0; j < vertices_.size(); ++j)
                if (j != i) others.push_back(vertices_[j]);
            if (!others.empty() && point_in_hull(others, vertices_[i]))
                throw PreconditionError("point " + std::to_string(i) + " is not a vertex of the convex hull");
        }
    }

    VPolytope(std::vector<QVector> vertices, trusted_vertices_t) : vertices_(std::move(vertices)) {
        require(!vertices_.empty(), "a polytope needs at least one vertex");
        ambient_dim_ = static_cast<int>(vertices_.front().dim());
        for (const auto& v : vertices_)
            require(static_cast<int>(v.dim()) == ambient_dim_, "vertices have inconsistent dimensions");
        dim_ = affine_rank(vertices_);
    }

    const std::vector<QVector>& vertices() const { return vertices_; }
    const QVector& vertex(std::size_t i) const { return vertices_.at(i); }
    std::size_t num_vertices() const { return vertices_.size(); }
    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return dim_; }
    bool full_dimensional() const { return dim_ == ambient_dim_; }

    std::vector<QVector> points_of(const VertexSet& s) const {
        std::vector<QVector> out;
        for (auto i : s.indices()) out.push_back(vertices_.at(i));
        return out;
    }

    friend bool operator==(const VPolytope&, const VPolytope&) = default;

private:
    std::vector<QVector> vertices_;
    int ambient_dim_ = 0;
    int dim_ = -1;
};

struct Face {
    VertexSet vertices;
    int dim = -1;

    friend bool operator==(const Face&, const Face&) = default;
};

using FaceId = std::size_t;

/// The graded lattice of all faces of a polytope, empty and full face included.
class FaceLattice {
public:
    FaceLattice() = default;

    /// Builds a lattice from an explicit face list. The list must contain
    /// exactly one face of dimension -1 and one of dimension `dim`.
    static FaceLattice from_faces(std::size_t num_vertices, int dim, std::vector<Face> faces) {
        FaceLattice l;
        l.num_vertices_ = num_vertices;
        l.dim_ = dim;
        std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
            return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
        });
        for (const auto& f : faces) {
            require(f.vertices.universe() == num_vertices, "face over a different vertex universe");
            require(f.dim >= -1 && f.dim <= dim, "face dimension out of range");
        }
        l.faces_ = std::move(faces);
        l.dim_start_.assign(static_cast<std::size_t>(dim) + 3, 0);
        for (const auto& f : l.faces_) ++l.dim_start_[static_cast<std::size_t>(f.dim + 2)];
        std::partial_sum(l.dim_start_.begin(), l.dim_start_.end(), l.dim_start_.begin());
        require(l.faces_of_dim(-1).size() == 1, "lattice must have exactly one empty face");
        require(l.faces_of_dim(dim).size() == 1, "lattice must have exactly one full face");

        for (FaceId id = 0; id < l.faces_.size(); ++id) {
            if (!l.index_.emplace(l.faces_[id].vertices, id).second)
                throw PreconditionError("duplicate face " + face_id_string(l.faces_[id].vertices));
        }
        l.up_.assign(l.faces_.size(), {});
        l.down_.assign(l.faces_.size(), {});
        for (int k = -1; k < dim; ++k) {
            for (auto lo : l.faces_of_dim(k))
                for (auto hi : l.faces_of_dim(k + 1))
                    if (l.faces_[lo].vertices.is_subset_of(l.faces_[hi].vertices)) {
                        l.up_[lo].push_back(hi);
                        l.down_[hi].push_back(lo);
                    }
        }
        return l;
    }

    int dim() const { return dim_; }
    std::size_t num_vertices() const { return num_vertices_; }
    std::size_t size() const { return faces_.size(); }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(FaceId id) const { return faces_.at(id); }
    int dim_of(FaceId id) const { return faces_.at(id).dim; }

    /// Ids of the k-faces, -1 <= k <= dim. Contiguous and in canonical order.
    std::vector<FaceId> faces_of_dim(int k) const {
        require(k >= -1 && k <= dim_, "face dimension " + std::to_string(k) + " out of range");
        const auto lo = dim_start_[static_cast<std::size_t>(k + 1)];
        const auto hi = dim_start_[static_cast<std::size_t>(k + 2)];
        std::vector<FaceId> out(hi - lo);
        std::iota(out.begin(), out.end(), lo);
        return out;
    }
    std::size_t count_of_dim(int k) const {
        if (k < -1 || k > dim_) return 0;
        return dim_start_[static_cast<std::size_t>(k + 2)] - dim_start_[static_cast<std::size_t>(k + 1)];
    }

    /// f-vector (f_0, ..., f_{d-1}).
    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> f;
        for (int k = 0; k < dim_; ++k) f.push_back(count_of_dim(k));
        return f;
    }

    FaceId empty_face() const { return 0; }
    FaceId full_face() const { return faces_.size() - 1; }

    std::optional<FaceId> find(const VertexSet& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    FaceId id_of(const VertexSet& s) const {
        auto id = find(s);
        if (!id) throw PreconditionError("'" + face_id_string(s) + "' is not a face");
        return *id;
    }

    std::string id_string(FaceId id) const { return face_id_string(face(id).vertices); }
    FaceId parse_id(std::string_view text) const { return id_of(parse_face_id(text, num_vertices_)); }

    /// True when face a is contained in face b.
    bool contains(FaceId b, FaceId a) const { return face(a).vertices.is_subset_of(face(b).vertices); }

    /// Faces covering `id` (one dimension up) and covered by it.
    const std::vector<FaceId>& covers_up(FaceId id) const { return up_.at(id); }
    const std::vector<FaceId>& covers_down(FaceId id) const { return down_.at(id); }

    /// Lattice meet. Faces are closed under intersection.
    FaceId meet(FaceId a, FaceId b) const {
        auto id = find(face(a).vertices & face(b).vertices);
        if (!id) throw InternalError("face lattice not closed under intersection");
        return *id;
    }

    /// Lattice join: the smallest face containing both.
    FaceId join(FaceId a, FaceId b) const {
        const VertexSet both = face(a).vertices | face(b).vertices;
        FaceId cur = full_face();
        // Walk down while some covered face still contains both.
        for (bool moved = true; moved;) {
            moved = false;
            for (auto lower : covers_down(cur))
                if (both.is_subset_of(face(lower).vertices)) {
                    cur = lower;
                    moved = true;
                    break;
                }
        }
        return cur;
    }

private:
    std::size_t num_vertices_ = 0;
    int dim_ = -1;
    std::vector<Face> faces_;
    std::vector<std::size_t> dim_start_;
    std::unordered_map<VertexSet, FaceId> index_;
    std::vector<std::vector<FaceId>> up_;
    std::vector<std::vector<FaceId>> down_;
};

struct Facet {
    VertexSet vertices;
    Hyperplane plane; ///< oriented so that normal . v <= offset for every vertex
};

/// All facets of a full-dimensional polytope, in canonical vertex-set order.
///
/// Brute force over affinely independent d-subsets of vertices. A subset
/// already contained in a known facet spans that facet's hyperplane, so it is
/// skipped without any arithmetic.
inline std::vector<Facet> facets(const VPolytope& p) {
    require(p.full_dimensional(), "polytope is not full-dimensional (dim " + std::to_string(p.dim()) +
                                      " in ambient " + std::to_string(p.ambient_dim()) + ")");
    const auto d = static_cast<std::size_t>(p.ambient_dim());
    const std::size_t n = p.num_vertices();
    require(d >= 1, "facets need dimension at least 1");

    std::vector<Facet> out;
    for_each_combination(n, d, [&](const std::vector<std::size_t>& idx) {
        const VertexSet subset = VertexSet::of(n, idx);
        if (std::any_of(out.begin(), out.end(), [&](const Facet& f) { return subset.is_subset_of(f.vertices); }))
            return true;
        RationalMatrix diffs;
        for (std::size_t i = 1; i < d; ++i) diffs.push_back((p.vertex(idx[i]) - p.vertex(idx[0])).coords());
        auto kernel = nullspace(std::move(diffs), d);
        if (kernel.size() != 1) return true; // affinely dependent subset

        QVector normal = primitive_direction(kernel.front());
        Rational offset = dot(normal, p.vertex(idx[0]));
        bool pos = false;
        bool neg = false;
        VertexSet on(n);
        for (std::size_t v = 0; v < n && !(pos && neg); ++v) {
            const int s = sign(dot(normal, p.vertex(v)) - offset);
            if (s > 0) pos = true;
            else if (s < 0) neg = true;
            else on.insert(v);
        }
        if (pos && neg) return true;
        if (pos) {
            normal = -normal;
            offset = -offset;
        }
        out.push_back({std::move(on), Hyperplane(std::move(normal), std::move(offset))});
        return true;
    });
    std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
    return out;
}

/// Intersection closure of the facet vertex sets, plus the empty and full faces.
inline FaceLattice face_lattice(const VPolytope& p, const std::vector<Facet>& fs) {
    const std::size_t n = p.num_vertices();
    std::unordered_set<VertexSet> seen;
    std::vector<VertexSet> sets;
    auto add = [&](VertexSet s) {
        if (seen.insert(s).second) sets.push_back(std::move(s));
    };
    add(VertexSet::full(n));
    add(VertexSet(n));
    for (const auto& f : fs) add(f.vertices);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (const auto& f : fs) add(sets[i] & f.vertices);

    std::vector<Face> faces;
    faces.reserve(sets.size());
    for (auto& s : sets) {
        const int dim = affine_rank(p.points_of(s));
        faces.push_back({std::move(s), dim});
    }
    return FaceLattice::from_faces(n, p.dim(), std::move(faces));
}

inline FaceLattice face_lattice(const VPolytope& p) { return face_lattice(p, facets(p)); }

inline std::vector<FaceId> faces_of_dim(const FaceLattice& l, int k) { return l.faces_of_dim(k); }

inline FaceId smallest_face_containing(const FaceLattice& l, FaceId a, FaceId b) { return l.join(a, b); }

/// A polytope together with its face lattice.
class Polytope {
public:
    Polytope(VPolytope shape, FaceLattice lattice) : shape_(std::move(shape)), lattice_(std::move(lattice)) {}

    explicit Polytope(VPolytope shape) : shape_(std::move(shape)), lattice_(face_lattice(shape_)) {}

    const VPolytope& shape() const { return shape_; }
    const FaceLattice& lattice() const { return lattice_; }
    int dim() const { return lattice_.dim(); }

    std::vector<QVector> points_of(FaceId id) const { return shape_.points_of(lattice_.face(id).vertices); }
    QVector barycenter_of(FaceId id) const { return barycenter(points_of(id)); }

private:
    VPolytope shape_;
    FaceLattice lattice_;
};

/// Polar dual about the vertex barycenter. Vertex i of the result is the
/// polar of facet i of `facets(p)`.
inline VPolytope polar_dual(const VPolytope& p, const std::vector<Facet>& fs) {
    require(p.full_dimensional(), "polar dual needs a full-dimensional polytope");
    const QVector center = barycenter(p.vertices());
    std::vector<QVector> dual;
    dual.reserve(fs.size());
    for (const auto& f : fs) {
        const Rational c = f.plane.offset() - dot(f.plane.normal(), center);
        if (c <= 0) throw InternalError("barycenter is not interior to the polytope");
        dual.push_back(f.plane.normal() / c);
    }
    return VPolytope(std::move(dual), trusted_vertices);
}

inline VPolytope polar_dual(const VPolytope& p) { return polar_dual(p, facets(p)); }

} // namespace facelab
