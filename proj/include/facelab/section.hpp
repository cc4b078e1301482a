#pragma once

/**
 * @file section.hpp
 * @brief Hyperplane sections Q ∩ H with the face correspondence F ↦ F ∩ H.
 *
 * For a hyperplane through no vertex of Q, the faces of Q that H meets are in
 * inclusion-preserving bijection with the nonempty faces of Q ∩ H, and the
 * dimension drops by exactly one. The slice is therefore built purely
 * combinatorially: its vertices are the edges of Q crossed by H, and the
 * image of a face F is the set of crossed edges lying in F.
 */

#include <memory>
#include <optional>
#include <vector>

#include "facelab/error.hpp"
#include "facelab/exact_geometry.hpp"
#include "facelab/polytope.hpp"

namespace facelab {

/// True iff the vertices of face f lie strictly on both sides of h.
/// No vertex of the polytope may lie on h.
inline bool cuts_face(const Hyperplane& h, const VertexSet& f, const VPolytope& p) {
    bool pos = false;
    bool neg = false;
    for (auto v : f.indices()) {
        const int s = side(h, p.vertex(v));
        if (s == 0) throw PreconditionError("vertex " + std::to_string(v) + " lies on the hyperplane");
        (s > 0 ? pos : neg) = true;
    }
    return pos && neg;
}

class SectionMap {
public:
    SectionMap(std::shared_ptr<const Polytope> base, Hyperplane plane) : base_(std::move(base)), plane_(std::move(plane)) {
        const VPolytope& q = base_->shape();
        const FaceLattice& lat = base_->lattice();
        require(static_cast<int>(plane_.dim()) == q.ambient_dim(), "hyperplane dimension does not match the polytope");
        for (std::size_t v = 0; v < q.num_vertices(); ++v)
            if (side(plane_, q.vertex(v)) == 0)
                throw PreconditionError("vertex " + std::to_string(v) + " lies on the section hyperplane");

        std::vector<char> cut(lat.size(), 0);
        for (FaceId id = 0; id < lat.size(); ++id) cut[id] = cuts_face(plane_, lat.face(id).vertices, q);
        if (!cut[lat.full_face()]) throw PreconditionError("hyperplane misses the interior of the polytope");

        // slice vertices <-> crossed edges, in canonical edge order
        std::vector<FaceId> crossed;
        std::vector<QVector> points;
        for (auto e : lat.faces_of_dim(1)) {
            if (!cut[e]) continue;
            const auto ends = lat.face(e).vertices.indices();
            points.push_back(segment_hyperplane_intersection(q.vertex(ends[0]), q.vertex(ends[1]), plane_));
            crossed.push_back(e);
        }
        const std::size_t m = crossed.size();

        std::vector<Face> slice_faces{{VertexSet(m), -1}};
        std::vector<FaceId> preimage{};
        for (FaceId id = 0; id < lat.size(); ++id) {
            if (!cut[id]) continue;
            VertexSet image(m);
            for (std::size_t i = 0; i < m; ++i)
                if (lat.face(crossed[i]).vertices.is_subset_of(lat.face(id).vertices)) image.insert(i);
            slice_faces.push_back({image, lat.dim_of(id) - 1});
            preimage.push_back(id);
        }

        std::vector<std::pair<VertexSet, FaceId>> keyed;
        for (std::size_t i = 0; i < preimage.size(); ++i) keyed.emplace_back(slice_faces[i + 1].vertices, preimage[i]);

        VPolytope slice_shape(std::move(points), trusted_vertices);
        FaceLattice slice_lattice = FaceLattice::from_faces(m, lat.dim() - 1, std::move(slice_faces));
        sliced_ = std::make_shared<const Polytope>(std::move(slice_shape), std::move(slice_lattice));

        phi_.assign(lat.size(), std::nullopt);
        phi_inverse_.assign(sliced_->lattice().size(), std::nullopt);
        for (const auto& [vs, base_id] : keyed) {
            const FaceId slice_id = sliced_->lattice().id_of(vs);
            if (phi_inverse_[slice_id]) throw InternalError("section map is not injective");
            phi_[base_id] = slice_id;
            phi_inverse_[slice_id] = base_id;
        }
    }

    const Polytope& base() const { return *base_; }
    const Polytope& sliced() const { return *sliced_; }
    std::shared_ptr<const Polytope> sliced_ptr() const { return sliced_; }
    const Hyperplane& plane() const { return plane_; }

    /// φ(F) if H meets F.
    std::optional<FaceId> phi(FaceId base_face) const { return phi_.at(base_face); }

    /// The face of Q whose section is `slice_face`. Every nonempty slice face has one.
    FaceId lift(FaceId slice_face) const {
        if (slice_face >= phi_inverse_.size()) throw PreconditionError("unknown slice face id");
        const auto& pre = phi_inverse_[slice_face];
        if (!pre) throw PreconditionError("the empty slice face has no preimage");
        return *pre;
    }

private:
    std::shared_ptr<const Polytope> base_;
    Hyperplane plane_;
    std::shared_ptr<const Polytope> sliced_;
    std::vector<std::optional<FaceId>> phi_;
    std::vector<std::optional<FaceId>> phi_inverse_;
};

inline SectionMap section(std::shared_ptr<const Polytope> q, const Hyperplane& h) { return SectionMap(std::move(q), h); }

inline FaceId lift(const SectionMap& s, FaceId slice_face) { return s.lift(slice_face); }

} // namespace facelab
