#include <gtest/gtest.h>

#include <algorithm>
#include <memory>
#include <vector>

#include "facelab/generators.hpp"
#include "facelab/ridge_path.hpp"
#include "oracles.hpp"

using namespace facelab;

namespace {

std::shared_ptr<const Polytope> shared(const GeneratorSpec& spec) {
    return std::make_shared<const Polytope>(generate(spec));
}

FaceId face(const FaceLattice& l, std::size_t n, std::initializer_list<std::size_t> vs) {
    return l.id_of(VertexSet::of(n, vs));
}

} // namespace

TEST(CuttingHyperplane, SquareEdges) {
    auto q = shared({Family::cube, 2});
    const auto& l = q->lattice();
    // vertices 00, 01, 10, 11
    const FaceId left = face(l, 4, {0, 1});
    const FaceId right = face(l, 4, {2, 3});
    const FaceId bottom = face(l, 4, {0, 2});
    const auto res = find_cutting_hyperplane(*q, left, right, bottom, 5);
    EXPECT_TRUE(oracle::cutting_plane_holds(*q, left, right, bottom, res.plane));
    EXPECT_TRUE(is_cutting_hyperplane(*q, left, right, bottom, res.plane));
    EXPECT_GE(res.samples, 1);
    // y = 1/2 is the only line through both midpoints
    EXPECT_EQ(res.plane.normal()[0], 0);
}

TEST(CuttingHyperplane, CubeFacetsMissingAThird) {
    auto q = shared({Family::cube, 3});
    const auto& l = q->lattice();
    const auto fs = l.faces_of_dim(2);
    for (auto f : fs)
        for (auto g : fs)
            for (auto r : fs) {
                if (f == g || f == r || g == r) continue;
                const auto res = find_cutting_hyperplane(*q, f, g, r, f * 31 + g * 7 + r);
                EXPECT_TRUE(oracle::cutting_plane_holds(*q, f, g, r, res.plane));
            }
}

TEST(CuttingHyperplane, Deterministic) {
    auto q = shared({Family::cross, 3});
    const auto edges = q->lattice().faces_of_dim(1);
    const auto a = find_cutting_hyperplane(*q, edges[0], edges[5], edges[9], 42);
    const auto b = find_cutting_hyperplane(*q, edges[0], edges[5], edges[9], 42);
    EXPECT_EQ(a.plane.normal(), b.plane.normal());
    EXPECT_EQ(a.plane.offset(), b.plane.offset());
    EXPECT_EQ(a.samples, b.samples);
}

TEST(CuttingHyperplane, Preconditions) {
    auto q = shared({Family::cube, 3});
    const auto& l = q->lattice();
    const auto fs = l.faces_of_dim(2);
    const auto es = l.faces_of_dim(1);
    EXPECT_THROW(find_cutting_hyperplane(*q, fs[0], fs[0], fs[1], 0), PreconditionError);
    EXPECT_THROW(find_cutting_hyperplane(*q, fs[0], fs[1], es[0], 0), PreconditionError);
    const auto vs = l.faces_of_dim(0);
    EXPECT_THROW(find_cutting_hyperplane(*q, vs[0], vs[1], vs[2], 0), PreconditionError);
}

TEST(CuttingHyperplane, CoefficientRangesEscalate) {
    EXPECT_EQ(sample_coefficient_range(0), 3);
    EXPECT_EQ(sample_coefficient_range(999), 3);
    EXPECT_EQ(sample_coefficient_range(1000), 10);
    EXPECT_EQ(sample_coefficient_range(2999), 10);
    EXPECT_EQ(sample_coefficient_range(3000), 100);
}

TEST(RidgePath, CubeEdgesAroundABlockedEdge) {
    auto q = shared({Family::cube, 3});
    const auto& l = q->lattice();
    const FaceId blocked = face(l, 8, {0, 1});
    const FaceId from = face(l, 8, {0, 2});
    const FaceId to = face(l, 8, {1, 3});
    const auto b = make_blocked_set(l, 1, {blocked});
    const auto res = find_ridge_path(q, 1, b, from, to, 0);
    EXPECT_TRUE(oracle::ridge_path_holds(*q, 1, {blocked}, res.path, from, to));
    // 0 and 1 sit in the blocked edge, so the path cannot pass through them
    for (auto r : res.path.ridges) EXPECT_FALSE(l.face(r).vertices.contains(0) || l.face(r).vertices.contains(1));
    EXPECT_EQ(res.depth, 0);
}

TEST(RidgePath, CubeFacetsWithTwoBlocked) {
    auto q = shared({Family::cube, 3});
    const auto& l = q->lattice();
    const auto fs = l.faces_of_dim(2);
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            const std::vector<FaceId> blocked{fs[i], fs[j]};
            const auto b = make_blocked_set(l, 2, blocked);
            for (auto f : fs)
                for (auto g : fs) {
                    if (b.contains(f) || b.contains(g)) continue;
                    ASSERT_TRUE(oracle::ridge_path_exists(*q, 2, blocked, f, g));
                    const auto res = find_ridge_path(q, 2, b, f, g, i * 100 + j);
                    EXPECT_TRUE(oracle::ridge_path_holds(*q, 2, blocked, res.path, f, g));
                    EXPECT_TRUE(verify_ridge_path(l, 2, b, res.path, f, g));
                    if (f != g) {
                        EXPECT_EQ(res.depth, 1);
                    }
                }
        }
}

TEST(RidgePath, SameEndpointIsTrivial) {
    auto q = shared({Family::cross, 3});
    const auto& l = q->lattice();
    const auto es = l.faces_of_dim(1);
    const auto res = find_ridge_path(q, 1, make_blocked_set(l, 1, {es[3]}), es[0], es[0]);
    EXPECT_EQ(res.path.faces, std::vector<FaceId>{es[0]});
    EXPECT_TRUE(res.path.ridges.empty());
}

TEST(RidgePath, VerticesMeetInTheEmptyFace) {
    auto q = shared({Family::simplex, 3});
    const auto& l = q->lattice();
    const auto vs = l.faces_of_dim(0);
    const auto res = find_ridge_path(q, 0, make_blocked_set(l, 0, {}), vs[0], vs[3]);
    EXPECT_EQ(res.path.faces, (std::vector<FaceId>{vs[0], vs[3]}));
    EXPECT_EQ(res.path.ridges, std::vector<FaceId>{l.empty_face()});
}

TEST(RidgePath, RejectsBadInput) {
    auto q = shared({Family::cube, 3});
    const auto& l = q->lattice();
    const auto fs = l.faces_of_dim(2);
    EXPECT_THROW(make_blocked_set(l, 1, {fs[0]}), PreconditionError);
    EXPECT_THROW(make_blocked_set(l, 2, {fs[0], fs[1], fs[2]}), PreconditionError);
    const auto b = make_blocked_set(l, 2, {fs[0]});
    EXPECT_THROW(find_ridge_path(q, 2, b, fs[0], fs[1]), PreconditionError);
    EXPECT_THROW(find_ridge_path(q, 3, b, fs[1], fs[2]), PreconditionError);
    EXPECT_THROW(find_ridge_path(q, 2, b, l.faces_of_dim(1)[0], fs[2]), PreconditionError);
}

TEST(VerifyRidgePath, RejectsBrokenPaths) {
    auto q = shared({Family::cube, 3});
    const auto& l = q->lattice();
    const FaceId x0 = face(l, 8, {0, 1, 2, 3});
    const FaceId x1 = face(l, 8, {4, 5, 6, 7});
    const FaceId y0 = face(l, 8, {0, 1, 4, 5});
    const FaceId ridge_x0_y0 = face(l, 8, {0, 1});
    const FaceId ridge_y0_x1 = face(l, 8, {4, 5});
    const RidgePath good{{x0, y0, x1}, {ridge_x0_y0, ridge_y0_x1}};
    EXPECT_TRUE(verify_ridge_path(l, 2, make_blocked_set(l, 2, {}), good, x0, x1));
    // middle face blocked
    EXPECT_FALSE(verify_ridge_path(l, 2, make_blocked_set(l, 2, {y0}), good, x0, x1));
    // a ridge inside a blocked face: edges 0-1 and 1-3 meet at vertex 1, which lies on edge 1-5
    const FaceId e01 = face(l, 8, {0, 1});
    const FaceId e13 = face(l, 8, {1, 3});
    const RidgePath corner{{e01, e13}, {face(l, 8, {1})}};
    EXPECT_TRUE(verify_ridge_path(l, 1, make_blocked_set(l, 1, {}), corner, e01, e13));
    EXPECT_FALSE(verify_ridge_path(l, 1, make_blocked_set(l, 1, {face(l, 8, {1, 5})}), corner, e01, e13));
    // opposite facets only meet in the empty face
    const RidgePath jump{{x0, x1}, {l.empty_face()}};
    EXPECT_FALSE(verify_ridge_path(l, 2, make_blocked_set(l, 2, {}), jump, x0, x1));
    // wrong ridge label
    const RidgePath mislabeled{{x0, y0, x1}, {ridge_y0_x1, ridge_y0_x1}};
    EXPECT_FALSE(verify_ridge_path(l, 2, make_blocked_set(l, 2, {}), mislabeled, x0, x1));
    // wrong endpoints
    EXPECT_FALSE(verify_ridge_path(l, 2, make_blocked_set(l, 2, {}), good, x0, y0));
}

TEST(RidgePath, SolverAgreesWithOracleOnRandomInstances) {
    IntegerStream rng(77);
    int solved = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int d = 3 + static_cast<int>(seed % 2);
        auto q = shared({.family = Family::random, .dim = d, .n = d + 3, .seed = seed, .coordinate_bound = 5});
        const auto& l = q->lattice();
        const int k = static_cast<int>(rng.uniform(2, d - 1));
        auto nodes = l.faces_of_dim(k);
        std::vector<FaceId> blocked;
        while (blocked.size() < static_cast<std::size_t>(k)) {
            const auto pick = nodes[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(nodes.size()) - 1))];
            if (std::find(blocked.begin(), blocked.end(), pick) == blocked.end()) blocked.push_back(pick);
        }
        std::vector<FaceId> free;
        for (auto x : nodes)
            if (std::find(blocked.begin(), blocked.end(), x) == blocked.end()) free.push_back(x);
        const auto f = free[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(free.size()) - 1))];
        const auto g = free[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(free.size()) - 1))];
        const auto b = make_blocked_set(l, k, blocked);
        EXPECT_TRUE(oracle::ridge_path_exists(*q, k, blocked, f, g)) << "seed " << seed;
        const auto res = find_ridge_path(q, k, b, f, g, seed);
        EXPECT_TRUE(oracle::ridge_path_holds(*q, k, blocked, res.path, f, g)) << "seed " << seed;
        EXPECT_EQ(res.hyperplanes.size(), static_cast<std::size_t>(res.depth));
        ++solved;
    }
    EXPECT_EQ(solved, 30);
}
