#pragma once

/**
 * @file face_hypergraph.hpp
 * @brief The face hypergraph H_k: nodes are k-faces, hyperedges (k+1)-faces.
 *
 * Removing a node deletes it together with every hyperedge containing it.
 * Surviving nodes are adjacent when they share a surviving hyperedge. This is
 * strictly stronger than deleting the node from the 2-section graph.
 */

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "facelab/combinatorics.hpp"
#include "facelab/error.hpp"
#include "facelab/polytope.hpp"

namespace facelab {

using NodeSet = std::vector<std::size_t>;

class FaceHypergraph {
public:
    FaceHypergraph(int k, std::vector<FaceId> nodes, std::vector<FaceId> edges, std::vector<NodeSet> members)
        : k_(k), nodes_(std::move(nodes)), edges_(std::move(edges)), members_(std::move(members)),
          incident_(nodes_.size()) {
        require(members_.size() == edges_.size(), "one member list per hyperedge");
        for (std::size_t e = 0; e < members_.size(); ++e)
            for (auto n : members_[e]) {
                require(n < nodes_.size(), "hyperedge member out of range");
                incident_[n].push_back(e);
            }
    }

    int k() const { return k_; }
    std::size_t num_nodes() const { return nodes_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    /// Lattice face ids of nodes / hyperedges, indexed by local position.
    const std::vector<FaceId>& node_faces() const { return nodes_; }
    const std::vector<FaceId>& edge_faces() const { return edges_; }

    const NodeSet& members(std::size_t edge) const { return members_.at(edge); }
    const std::vector<std::size_t>& incident(std::size_t node) const { return incident_.at(node); }

    /// Connected components of the survivors after removing `removed`,
    /// each sorted, ordered by smallest member.
    std::vector<NodeSet> components_after_removal(std::span<const std::size_t> removed) const {
        std::vector<char> gone(nodes_.size(), 0);
        for (auto r : removed) {
            require(r < nodes_.size(), "unknown node " + std::to_string(r));
            gone[r] = 1;
        }
        std::vector<std::size_t> parent(nodes_.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& m : members_) {
            if (std::any_of(m.begin(), m.end(), [&](std::size_t n) { return gone[n] != 0; })) continue;
            for (std::size_t i = 1; i < m.size(); ++i) {
                auto a = find(m[0]);
                auto b = find(m[i]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        std::vector<NodeSet> comps;
        std::vector<std::size_t> slot(nodes_.size(), nodes_.size());
        for (std::size_t n = 0; n < nodes_.size(); ++n) {
            if (gone[n]) continue;
            const auto root = find(n);
            if (slot[root] == nodes_.size()) {
                slot[root] = comps.size();
                comps.emplace_back();
            }
            comps[slot[root]].push_back(n);
        }
        return comps;
    }

private:
    int k_;
    std::vector<FaceId> nodes_;
    std::vector<FaceId> edges_;
    std::vector<NodeSet> members_;
    std::vector<std::vector<std::size_t>> incident_;
};

inline FaceHypergraph build_hypergraph(const FaceLattice& l, int k) {
    require(k >= 0 && k <= l.dim() - 1, "k must lie in [0, d-1], got " + std::to_string(k));
    auto nodes = l.faces_of_dim(k);
    auto edges = l.faces_of_dim(k + 1);
    std::vector<NodeSet> members;
    members.reserve(edges.size());
    for (auto e : edges) {
        NodeSet m;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (l.contains(e, nodes[i])) m.push_back(i);
        members.push_back(std::move(m));
    }
    return FaceHypergraph(k, std::move(nodes), std::move(edges), std::move(members));
}

/// Zero or one survivor counts as connected.
inline bool is_connected_after_removal(const FaceHypergraph& hg, std::span<const std::size_t> removed) {
    return hg.components_after_removal(removed).size() <= 1;
}

struct DisconnectionWitness {
    NodeSet removed;
    NodeSet component_a;
    NodeSet component_b;
};

struct ConnectivityReport {
    int alpha = 0;
    /// True when no disconnecting set below `cap` exists, so alpha is a lower bound.
    bool capped = false;
    std::optional<DisconnectionWitness> witness;
};

/// Exhaustive certification: tries every removal set of size 0..cap-1 in
/// lexicographic order. The first disconnecting set (smallest size, then
/// lexicographically least) fixes alpha and is the witness. `threads` > 1
/// fans the candidates of one size out to workers; the result is identical.
inline ConnectivityReport strong_connectivity(const FaceHypergraph& hg, int cap, unsigned threads = 1) {
    require(cap >= 1, "cap must be at least 1");
    const std::size_t n = hg.num_nodes();
    threads = std::max(1U, threads);

    for (int size = 0; size < cap && static_cast<std::size_t>(size) <= n; ++size) {
        std::optional<NodeSet> hit;
        if (threads == 1) {
            for_each_combination(n, static_cast<std::size_t>(size), [&](const NodeSet& s) {
                if (is_connected_after_removal(hg, s)) return true;
                hit = s;
                return false;
            });
        } else {
            constexpr std::size_t batch_size = 4096;
            std::vector<NodeSet> batch;
            auto flush = [&] {
                std::atomic<std::size_t> first{batch.size()};
                std::vector<std::thread> pool;
                for (unsigned t = 0; t < threads; ++t)
                    pool.emplace_back([&, t] {
                        for (std::size_t i = t; i < batch.size() && i < first.load(); i += threads)
                            if (!is_connected_after_removal(hg, batch[i])) {
                                auto cur = first.load();
                                while (i < cur && !first.compare_exchange_weak(cur, i)) {}
                                break;
                            }
                    });
                for (auto& th : pool) th.join();
                if (first.load() < batch.size()) hit = batch[first.load()];
                batch.clear();
            };
            for_each_combination(n, static_cast<std::size_t>(size), [&](const NodeSet& s) {
                batch.push_back(s);
                if (batch.size() == batch_size) flush();
                return !hit;
            });
            if (!hit && !batch.empty()) flush();
        }
        if (hit) {
            auto comps = hg.components_after_removal(*hit);
            return {size, false, DisconnectionWitness{*hit, comps.at(0), comps.at(1)}};
        }
    }
    return {cap, true, std::nullopt};
}

/// Tries to cut `node` off: one other node from each hyperedge through it,
/// reusing an already picked node when the hyperedge contains one. Returns
/// the set if removing it isolates `node` while some other node survives.
inline std::optional<NodeSet> find_isolating_set(const FaceHypergraph& hg, std::size_t node) {
    require(node < hg.num_nodes(), "unknown node " + std::to_string(node));
    NodeSet picked;
    for (auto e : hg.incident(node)) {
        const auto& m = hg.members(e);
        if (std::any_of(m.begin(), m.end(), [&](std::size_t x) {
                return std::find(picked.begin(), picked.end(), x) != picked.end();
            }))
            continue;
        auto other = std::find_if(m.begin(), m.end(), [&](std::size_t x) { return x != node; });
        if (other == m.end()) return std::nullopt;
        picked.push_back(*other);
    }
    std::sort(picked.begin(), picked.end());
    if (picked.size() + 1 >= hg.num_nodes()) return std::nullopt;
    auto comps = hg.components_after_removal(picked);
    const bool isolated = std::any_of(comps.begin(), comps.end(), [&](const NodeSet& c) {
        return c.size() == 1 && c.front() == node;
    });
    if (!isolated || comps.size() < 2) return std::nullopt;
    return picked;
}

// ---------------------------------------------------------------------------
// Polar duality
// ---------------------------------------------------------------------------

/// Primal lattice, dual lattice (computed independently from the dual's
/// coordinates) and the candidate map F ↦ {facets containing F}.
struct DualityMap {
    FaceLattice primal;
    FaceLattice dual;
    /// image[f] = dual face id of primal face f, if the facet set is a dual face.
    std::vector<std::optional<FaceId>> image;
};

inline DualityMap duality_map(const VPolytope& p) {
    const auto fs = facets(p);
    DualityMap m{face_lattice(p, fs), face_lattice(polar_dual(p, fs)), {}};
    m.image.resize(m.primal.size());
    for (FaceId f = 0; f < m.primal.size(); ++f) {
        VertexSet containing(fs.size());
        for (std::size_t j = 0; j < fs.size(); ++j)
            if (m.primal.face(f).vertices.is_subset_of(fs[j].vertices)) containing.insert(j);
        m.image[f] = m.dual.find(containing);
    }
    return m;
}

/// The map is an inclusion-reversing bijection with dim ↦ d - 1 - dim.
inline bool is_anti_isomorphism(const DualityMap& m) {
    const int d = m.primal.dim();
    if (m.primal.size() != m.dual.size()) return false;
    std::vector<char> hit(m.dual.size(), 0);
    for (FaceId f = 0; f < m.primal.size(); ++f) {
        if (!m.image[f] || hit[*m.image[f]]) return false;
        hit[*m.image[f]] = 1;
        if (m.dual.dim_of(*m.image[f]) != d - 1 - m.primal.dim_of(f)) return false;
    }
    for (FaceId a = 0; a < m.primal.size(); ++a)
        for (FaceId b = 0; b < m.primal.size(); ++b)
            if (m.primal.contains(b, a) != m.dual.contains(*m.image[a], *m.image[b])) return false;
    return true;
}

/// H_k(P) against the (d-k-1)-skeleton of the polar dual: nodes go to
/// maximal skeleton faces, hyperedges to skeleton ridges ((d-k-2)-faces,
/// the empty face when k = d-1), and node ∈ hyperedge exactly when the
/// ridge lies in the maximal face.
inline bool check_duality_equivalence(const VPolytope& p, int k) {
    const auto m = duality_map(p);
    const int d = m.primal.dim();
    require(k >= 0 && k <= d - 1, "k must lie in [0, d-1], got " + std::to_string(k));
    const auto hg = build_hypergraph(m.primal, k);

    const auto maximal = m.dual.faces_of_dim(d - k - 1);
    const auto ridges = m.dual.faces_of_dim(d - k - 2);
    if (maximal.size() != hg.num_nodes() || ridges.size() != hg.num_edges()) return false;

    std::vector<FaceId> node_image;
    for (auto f : hg.node_faces()) {
        if (!m.image[f] || m.dual.dim_of(*m.image[f]) != d - k - 1) return false;
        node_image.push_back(*m.image[f]);
    }
    std::vector<FaceId> edge_image;
    for (auto f : hg.edge_faces()) {
        if (!m.image[f] || m.dual.dim_of(*m.image[f]) != d - k - 2) return false;
        edge_image.push_back(*m.image[f]);
    }
    auto distinct = [](std::vector<FaceId> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    if (!distinct(node_image) || !distinct(edge_image)) return false;

    for (std::size_t e = 0; e < hg.num_edges(); ++e) {
        const auto& mem = hg.members(e);
        for (std::size_t n = 0; n < hg.num_nodes(); ++n) {
            const bool in_hypergraph = std::binary_search(mem.begin(), mem.end(), n);
            const bool in_skeleton = m.dual.contains(node_image[n], edge_image[e]);
            if (in_hypergraph != in_skeleton) return false;
        }
    }
    return true;
}

} // namespace facelab
