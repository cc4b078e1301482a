// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic only.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "facelab/cli.hpp"
#include "oracles.hpp"

using namespace facelab;

namespace {

struct Named {
    std::string name;
    GeneratorSpec spec;
    bool simple = false; ///< every vertex on exactly d facets
};

std::vector<Named> theorem_family() {
    std::vector<Named> out;
    for (int d = 2; d <= 4; ++d) {
        out.push_back({"simplex(" + std::to_string(d) + ")", {Family::simplex, d}, true});
        out.push_back({"cube(" + std::to_string(d) + ")", {Family::cube, d}, true});
        out.push_back({"cross(" + std::to_string(d) + ")", {Family::cross, d}, d == 2});
    }
    out.push_back({"cyclic(6,3)", {.family = Family::cyclic, .dim = 3, .n = 6}, false});
    out.push_back({"cyclic(7,4)", {.family = Family::cyclic, .dim = 4, .n = 7}, false});
    return out;
}

// Polytopes for the random criteria, cycling through every generator family.
GeneratorSpec sample_spec(IntegerStream& rng, int d, std::uint64_t seed) {
    static const Family families[] = {Family::simplex, Family::cube,    Family::cross, Family::cyclic,
                                      Family::random,  Family::pyramid, Family::prism};
    const auto fam = families[rng.uniform(0, 6)];
    GeneratorSpec spec{.family = fam, .dim = d, .seed = seed, .coordinate_bound = 6};
    if (fam == Family::cyclic) spec.n = d + static_cast<int>(rng.uniform(2, 4));
    if (fam == Family::random) spec.n = d + static_cast<int>(rng.uniform(2, 5));
    if (fam == Family::pyramid || fam == Family::prism)
        spec.base = std::array{Family::simplex, Family::cube, Family::cross}[rng.uniform(0, 2)];
    return spec;
}

std::size_t pick(IntegerStream& rng, std::size_t n) {
    return static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
}

// Every lattice built during the run, checked again by criterion 7.
struct LatticeLog {
    struct Entry {
        std::string name;
        FaceLattice lattice;
        bool simple;
    };
    std::vector<Entry> entries;
    void add(std::string name, const FaceLattice& l, bool simple) { entries.push_back({std::move(name), l, simple}); }
};

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string failure;

    void fail(const std::string& why) {
        if (pass) failure = why;
        pass = false;
    }
};

Outcome criterion_theorem(LatticeLog& log) {
    Outcome out;
    const auto dir = std::filesystem::temp_directory_path() / "facelab_acceptance";
    std::filesystem::create_directories(dir);
    int checks = 0;
    for (const auto& item : theorem_family()) {
        const auto p = generate(item.spec);
        const auto file = (dir / (item.name + ".poly")).string();
        write_polytope_file(p, file);
        log.add(item.name, face_lattice(p), item.simple);

        const auto r = cli::run({"facelab", "verify-theorem", file, "--all-k"});
        if (!r.ok || r.exit_code != 0 || r.output["pass"] != true) {
            out.fail(item.name + ": " + (r.ok ? r.output.dump() : r.message));
            continue;
        }
        for (const auto& row : r.output["results"]) {
            ++checks;
            if (row["alpha"].get<int>() < row["required"].get<int>()) out.fail(item.name + " k=" + row["k"].dump());
        }
    }
    std::filesystem::remove_all(dir);
    out.detail = std::to_string(checks) + " (polytope, k) pairs certified by exhaustive removal";
    return out;
}

Outcome criterion_tightness() {
    Outcome out;
    int checks = 0;
    for (int d = 2; d <= 4; ++d) {
        const auto l = face_lattice(generate({Family::cube, d}));
        for (int k = 0; k <= d - 2; ++k) {
            const auto hg = build_hypergraph(l, k);
            const auto set = find_isolating_set(hg, 0);
            const std::string tag = "cube(" + std::to_string(d) + ") k=" + std::to_string(k);
            if (!set || set->size() != static_cast<std::size_t>(d - k) || is_connected_after_removal(hg, *set)) {
                out.fail(tag + ": no disconnecting set of size d-k");
                continue;
            }
            const auto report = strong_connectivity(hg, d - k + 1);
            if (report.capped || report.alpha != d - k) out.fail(tag + ": alpha = " + std::to_string(report.alpha));
            ++checks;
        }
    }
    out.detail = std::to_string(checks) + " cube hypergraphs with alpha = d-k exactly";
    return out;
}

Outcome criterion_section(LatticeLog& log) {
    Outcome out;
    IntegerStream rng(3141);
    int pairs = 0;
    for (std::uint64_t seed = 0; pairs < 120; ++seed) {
        const int d = 3 + static_cast<int>(seed % 2);
        auto q = std::make_shared<const Polytope>(generate(sample_spec(rng, d, seed)));
        const auto h = oracle::random_splitting_plane(q->shape(), rng);
        if (!h) continue;
        const SectionMap s(q, *h);
        if (!oracle::section_is_isomorphism(s)) out.fail("seed " + std::to_string(seed));
        log.add("section seed " + std::to_string(seed), s.sliced().lattice(), false);
        ++pairs;
    }
    out.detail = std::to_string(pairs) + " (polytope, hyperplane) pairs, d in {3,4}";
    return out;
}

Outcome criterion_hyperplane() {
    Outcome out;
    IntegerStream rng(2718);
    std::vector<int> samples;
    std::map<std::string, int> per_family;
    for (std::uint64_t seed = 0; samples.size() < 540; ++seed) {
        const int d = 2 + static_cast<int>(seed % 3);
        const auto spec = sample_spec(rng, d, seed);
        const Polytope q(generate(spec));
        const int k = static_cast<int>(rng.uniform(1, d - 1));
        const auto faces = q.lattice().faces_of_dim(k);
        if (faces.size() < 3) continue;
        const auto f = faces[pick(rng, faces.size())];
        const auto g = faces[pick(rng, faces.size())];
        const auto r = faces[pick(rng, faces.size())];
        if (f == g || f == r || g == r) continue;
        const auto& l = q.lattice();
        const std::string tag = "seed " + std::to_string(seed) + " " + std::string(to_string(spec.family)) + "(" +
                                std::to_string(d) + ") k=" + std::to_string(k) + " F=" + l.id_string(f) +
                                " G=" + l.id_string(g) + " R=" + l.id_string(r);
        try {
            const auto found = find_cutting_hyperplane(q, f, g, r, seed);
            if (!oracle::cutting_plane_holds(q, f, g, r, found.plane)) out.fail(tag);
            samples.push_back(found.samples);
            ++per_family[std::string(to_string(spec.family))];
        } catch (const Error& e) {
            out.fail(tag + ": " + e.what());
            samples.push_back(default_hyperplane_budget);
        }
    }
    std::sort(samples.begin(), samples.end());
    long total = 0;
    for (int s : samples) total += s;
    auto q = [&](double p) { return samples[static_cast<std::size_t>(p * static_cast<double>(samples.size() - 1))]; };
    const auto ones = std::count(samples.begin(), samples.end(), 1);
    std::ostringstream os;
    os << samples.size() << " triples; samples min " << samples.front() << " median " << q(0.5) << " p90 " << q(0.9)
       << " p99 " << q(0.99) << " max " << samples.back() << " mean "
       << static_cast<double>(total) / static_cast<double>(samples.size()) << "; first-try " << ones << "; families";
    for (const auto& [name, count] : per_family) os << " " << name << "=" << count;
    out.detail = os.str();
    return out;
}

Outcome criterion_ridge_path(LatticeLog& log) {
    Outcome out;
    IntegerStream rng(1618);
    int instances = 0;
    std::map<int, int> per_k;
    for (std::uint64_t seed = 0; instances < 240; ++seed) {
        const int d = 3 + static_cast<int>(seed % 2);
        const auto spec = sample_spec(rng, d, seed);
        auto q = std::make_shared<const Polytope>(generate(spec));
        const auto& l = q->lattice();
        const int k = static_cast<int>(rng.uniform(2, d - 1));
        const auto nodes = l.faces_of_dim(k);
        if (nodes.size() < static_cast<std::size_t>(k) + 1) continue;

        std::vector<FaceId> blocked;
        while (blocked.size() < static_cast<std::size_t>(k)) {
            const auto x = nodes[pick(rng, nodes.size())];
            if (std::find(blocked.begin(), blocked.end(), x) == blocked.end()) blocked.push_back(x);
        }
        std::vector<FaceId> free;
        for (auto x : nodes)
            if (std::find(blocked.begin(), blocked.end(), x) == blocked.end()) free.push_back(x);
        const auto f = free[pick(rng, free.size())];
        const auto g = free[pick(rng, free.size())];
        const auto b = make_blocked_set(l, k, blocked);

        const std::string tag = "seed " + std::to_string(seed) + " " + std::string(to_string(spec.family));
        const bool exists = oracle::ridge_path_exists(*q, k, blocked, f, g);
        bool solved = false;
        try {
            const auto res = find_ridge_path(q, k, b, f, g, seed);
            solved = verify_ridge_path(l, k, b, res.path, f, g) && oracle::ridge_path_holds(*q, k, blocked, res.path, f, g);
        } catch (const Error& e) {
            out.fail(tag + ": " + e.what());
        }
        if (solved != exists) out.fail(tag + ": solver and oracle disagree");
        if (!exists) out.fail(tag + ": oracle found no path");
        if (instances % 8 == 0) log.add(tag, l, false);
        ++per_k[k];
        ++instances;
    }
    std::ostringstream os;
    os << instances << " instances with |B| = k, solver and BFS oracle agree;";
    for (const auto& [k, count] : per_k) os << " k=" << k << ":" << count;
    out.detail = os.str();
    return out;
}

Outcome criterion_duality(LatticeLog& log) {
    Outcome out;
    int checks = 0;
    std::vector<Named> items = theorem_family();
    items.push_back({"pyramid(3)", {Family::pyramid, 3}, false});
    items.push_back({"prism(4)", {Family::prism, 4, 0, 0, 10, Family::simplex}, true});
    items.push_back({"random(8,4)", {.family = Family::random, .dim = 4, .n = 8, .seed = 9}, false});
    for (const auto& item : items) {
        const auto p = generate(item.spec);
        const auto m = duality_map(p);
        if (!is_anti_isomorphism(m)) out.fail(item.name + ": lattice anti-isomorphism");
        for (int k = 0; k < p.dim(); ++k) {
            if (!check_duality_equivalence(p, k)) out.fail(item.name + " k=" + std::to_string(k));
            ++checks;
        }
        // the polar of a simplicial polytope is simple
        const bool simplicial = item.spec.family == Family::cross || item.spec.family == Family::cyclic ||
                                item.spec.family == Family::simplex || item.spec.family == Family::random;
        log.add("dual of " + item.name, m.dual, simplicial);
    }
    out.detail = std::to_string(items.size()) + " polytopes anti-isomorphic to their duals, " + std::to_string(checks) +
                 " (polytope, k) hypergraph/skeleton equivalences";
    return out;
}

Outcome criterion_structure(const LatticeLog& log) {
    Outcome out;
    int simple = 0;
    for (const auto& e : log.entries) {
        if (!oracle::euler_relation(e.lattice)) out.fail(e.name + ": Euler relation");
        if (!oracle::intersection_closed(e.lattice)) out.fail(e.name + ": intersection closure");
        if (!oracle::graded(e.lattice)) out.fail(e.name + ": grading");
        if (e.simple) {
            ++simple;
            if (!oracle::simple_containment_counts(e.lattice)) out.fail(e.name + ": containment counts");
        }
    }
    out.detail = std::to_string(log.entries.size()) + " lattices (" + std::to_string(simple) + " simple)";
    return out;
}

} // namespace

int main() {
    LatticeLog log;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 strong connectivity of H_k", [&] { return criterion_theorem(log); }},
        {"AC2 tightness on cubes", [] { return criterion_tightness(); }},
        {"AC3 section isomorphism", [&] { return criterion_section(log); }},
        {"AC4 cutting hyperplanes", [] { return criterion_hyperplane(); }},
        {"AC5 ridge paths", [&] { return criterion_ridge_path(log); }},
        {"AC6 polar duality", [&] { return criterion_duality(log); }},
        {"AC7 lattice invariants", [&] { return criterion_structure(log); }},
    };

    bool all = true;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail;
        if (!o.pass) std::cout << " [first failure: " << o.failure << "]";
        std::cout << " (" << ms << " ms)" << std::endl;
    }
    return all ? 0 : 1;
}
