#pragma once

/**
 * @file generators.hpp
 * @brief Deterministic and seeded-random polytope constructors.
 *
 * Random instances draw from std::mt19937_64 seeded with the user seed.
 * An integer in [lo, hi] is taken as lo + (x mod (hi - lo + 1)) where x is
 * the next raw 64-bit output, so the stream is reproducible by any
 * MT19937-64 implementation (std::uniform_int_distribution is not, since its
 * algorithm is implementation-defined).
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "facelab/combinatorics.hpp"
#include "facelab/error.hpp"
#include "facelab/exact_geometry.hpp"
#include "facelab/polytope.hpp"

namespace facelab {

enum class Family { simplex, cube, cross, cyclic, random, pyramid, prism };

inline std::string_view to_string(Family f) {
    switch (f) {
    case Family::simplex: return "simplex";
    case Family::cube: return "cube";
    case Family::cross: return "cross";
    case Family::cyclic: return "cyclic";
    case Family::random: return "random";
    case Family::pyramid: return "pyramid";
    case Family::prism: return "prism";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    for (auto f : {Family::simplex, Family::cube, Family::cross, Family::cyclic, Family::random, Family::pyramid,
                   Family::prism})
        if (to_string(f) == s) return f;
    throw ParseError("unknown polytope family '" + std::string(s) + "'");
}

struct GeneratorSpec {
    Family family = Family::simplex;
    int dim = 2;
    int n = 0;                  ///< vertex count for cyclic and random
    std::uint64_t seed = 0;     ///< random only
    int coordinate_bound = 10;  ///< random only: coordinates in [-bound, bound]
    Family base = Family::cube; ///< pyramid and prism: family of the (dim-1)-dimensional base
};

/// Draws integers in [lo, hi] from a raw MT19937-64 stream.
class IntegerStream {
public:
    explicit IntegerStream(std::uint64_t seed) : engine_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
};

namespace detail {

inline VPolytope make_simplex(int d) {
    std::vector<QVector> pts(static_cast<std::size_t>(d) + 1, QVector(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i) pts[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(i)] = 1;
    return VPolytope(std::move(pts), trusted_vertices);
}

inline VPolytope make_cube(int d) {
    std::vector<QVector> pts;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        QVector v(static_cast<std::size_t>(d));
        // first coordinate is the most significant bit, so vertices come out lexicographically
        for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = static_cast<long>(mask >> (d - 1 - i) & 1U);
        pts.push_back(std::move(v));
    }
    return VPolytope(std::move(pts), trusted_vertices);
}

inline VPolytope make_cross(int d) {
    std::vector<QVector> pts;
    for (int i = 0; i < d; ++i)
        for (long s : {1L, -1L}) {
            QVector v(static_cast<std::size_t>(d));
            v[static_cast<std::size_t>(i)] = s;
            pts.push_back(std::move(v));
        }
    return VPolytope(std::move(pts), trusted_vertices);
}

inline VPolytope make_cyclic(int n, int d) {
    std::vector<QVector> pts;
    for (long t = 1; t <= n; ++t) {
        QVector v(static_cast<std::size_t>(d));
        Integer power = 1;
        for (int i = 0; i < d; ++i) {
            power *= t;
            v[static_cast<std::size_t>(i)] = Rational(power);
        }
        pts.push_back(std::move(v));
    }
    return VPolytope(std::move(pts), trusted_vertices);
}

// Accepts a candidate only if the enlarged set stays in convex and general
// position: no point inside the hull of the others, no d+1 points on a
// common hyperplane.
inline bool keeps_general_position(const std::vector<QVector>& current, const QVector& cand, int d) {
    for (const auto& q : current)
        if (q == cand) return false;

    // affine independence of cand with every min(|current|, d)-subset
    const std::size_t m = std::min(current.size(), static_cast<std::size_t>(d));
    const bool independent = for_each_combination(current.size(), m, [&](const std::vector<std::size_t>& idx) {
        std::vector<QVector> pts{cand};
        for (auto i : idx) pts.push_back(current[i]);
        return affine_rank(pts) == static_cast<int>(m);
    });
    if (!independent) return false;

    if (current.size() <= static_cast<std::size_t>(d)) return true; // simplices are in convex position
    if (point_in_hull(current, cand)) return false;
    for (std::size_t i = 0; i < current.size(); ++i) {
        std::vector<QVector> others{cand};
        for (std::size_t j = 0; j < current.size(); ++j)
            if (j != i) others.push_back(current[j]);
        if (point_in_hull(others, current[i])) return false;
    }
    return true;
}

inline VPolytope make_random(int n, int d, std::uint64_t seed, int bound) {
    require(bound >= 1, "coordinate bound must be positive");
    IntegerStream stream(seed);
    std::vector<QVector> pts;
    constexpr int max_draws = 200000;
    // a greedy prefix can admit no extension at all; start over on the same stream
    constexpr int restart_after = 2000;
    int since_accept = 0;
    for (int draw = 0; draw < max_draws && static_cast<int>(pts.size()) < n; ++draw) {
        QVector cand(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) cand[static_cast<std::size_t>(i)] = static_cast<long>(stream.uniform(-bound, bound));
        if (keeps_general_position(pts, cand, d)) {
            pts.push_back(std::move(cand));
            since_accept = 0;
        } else if (++since_accept == restart_after) {
            pts.clear();
            since_accept = 0;
        }
    }
    if (static_cast<int>(pts.size()) < n)
        throw PreconditionError("could not place " + std::to_string(n) + " points in general convex position in [-" +
                                std::to_string(bound) + "," + std::to_string(bound) + "]^" + std::to_string(d));
    return VPolytope(std::move(pts), trusted_vertices);
}

inline VPolytope lift(const VPolytope& base, bool prism) {
    const auto d = static_cast<std::size_t>(base.ambient_dim());
    auto raise = [&](const QVector& v, const Rational& h) {
        QVector out(d + 1);
        for (std::size_t i = 0; i < d; ++i) out[i] = v[i];
        out[d] = h;
        return out;
    };
    std::vector<QVector> pts;
    for (const auto& v : base.vertices()) pts.push_back(raise(v, 0));
    if (prism) {
        for (const auto& v : base.vertices()) pts.push_back(raise(v, 1));
    } else {
        pts.push_back(raise(barycenter(base.vertices()), 1));
    }
    return VPolytope(std::move(pts), trusted_vertices);
}

} // namespace detail

inline VPolytope generate(const GeneratorSpec& spec) {
    require(spec.dim >= 1, "dimension must be at least 1");
    switch (spec.family) {
    case Family::simplex: return detail::make_simplex(spec.dim);
    case Family::cube: return detail::make_cube(spec.dim);
    case Family::cross: return detail::make_cross(spec.dim);
    case Family::cyclic:
        require(spec.n >= spec.dim + 1, "cyclic polytope needs n >= dim + 1");
        return detail::make_cyclic(spec.n, spec.dim);
    case Family::random:
        require(spec.n >= spec.dim + 1, "random polytope needs n >= dim + 1");
        return detail::make_random(spec.n, spec.dim, spec.seed, spec.coordinate_bound);
    case Family::pyramid:
    case Family::prism: {
        require(spec.dim >= 2, "pyramid and prism need dimension at least 2");
        require(spec.base != Family::pyramid && spec.base != Family::prism, "nested lifts are not supported");
        GeneratorSpec base = spec;
        base.family = spec.base;
        base.dim = spec.dim - 1;
        if ((base.family == Family::cyclic || base.family == Family::random) && base.n < base.dim + 1)
            base.n = base.dim + 1;
        return detail::lift(generate(base), spec.family == Family::prism);
    }
    }
    throw PreconditionError("unknown family");
}

} // namespace facelab
