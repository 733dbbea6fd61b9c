// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "thicklab/composer.hpp"
#include "thicklab/planarity.hpp"
#include "thicklab/thickness.hpp"
#include "thicklab/verify.hpp"

using namespace thicklab;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %-48s %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.ok;
}

// Solves both operands and the amalgam, composes, and checks the amalgam's
// exact thickness against [lower, upper] plus the composer's size contract.
Outcome amalgamation_campaign(AmalgamationKind kind, std::uint64_t seed) {
    CampaignConfig config;
    config.kind = kind;
    config.count = 50;
    config.seed = seed;
    const auto instances = campaign_instances(config);

    int checked = 0;
    int nontrivial = 0;
    int tight = 0;
    std::ostringstream problems;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& inst = instances[i];
        const auto c1 = exact_thickness(inst.g1);
        const auto c2 = exact_thickness(inst.g2);
        const auto out = compose(c1.witness, c2.witness, inst.spec);
        const auto c = exact_thickness(out.amalgam.graph);
        if (!c1.exact() || !c2.exact() || !c.exact()) {
            problems << " #" << i << " unsolved";
            continue;
        }
        const int n1 = c1.value;
        const int n2 = c2.value;
        const int lo = bound_lower(kind, n1, n2);
        const int hi = bound_upper(kind, n1, n2);
        const auto parts = out.decomposition.parts.size();
        const auto nonempty = out.decomposition.nonempty_parts();

        bool size_ok = false;
        switch (kind) {
            case AmalgamationKind::vertex:
                size_ok = parts == static_cast<std::size_t>(std::max(n1, n2));
                break;
            case AmalgamationKind::bar:
                size_ok = parts == static_cast<std::size_t>(std::max({n1, n2, 1}));
                break;
            case AmalgamationKind::edge:
                size_ok = parts == static_cast<std::size_t>(n1 + n2 - 1);
                break;
            case AmalgamationKind::two_vertex:
                size_ok = nonempty <= static_cast<std::size_t>(n1 + n2);
                break;
        }
        const bool valid = validate_decomposition(out.decomposition).valid();
        const bool bounds = lo <= c.value && c.value <= hi && c.value <= static_cast<int>(nonempty);
        if (!size_ok || !valid || !bounds) {
            problems << " #" << i << " theta=" << c.value << " in [" << lo << "," << hi << "] parts=" << parts
                     << (valid ? "" : " invalid");
            continue;
        }
        ++checked;
        nontrivial += std::max(n1, n2) >= 2;
        tight += c.value == hi;
    }
    std::ostringstream detail;
    detail << checked << "/" << instances.size() << " instances, " << nontrivial << " with an operand of thickness >= 2, "
           << tight << " at the upper bound" << problems.str();
    return {checked == static_cast<int>(instances.size()), detail.str()};
}

Outcome solver_vs_enumeration() {
    oracle::MinorPlanarity minor;
    auto planar = [&](const Graph& g) { return minor.planar(g); };
    long long graphs = 0;
    std::ostringstream problems;
    // Every graph with at most 8 edges on at most 8 vertices, labelled.
    for (int n = 1; n <= 8; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            if (__builtin_popcount(mask) > 8) {
                continue;
            }
            const Graph g = oracle::graph_from_mask(n, mask);
            const int expected = oracle::brute_force_thickness(g, 3, planar);
            const auto c = exact_thickness(g);
            ++graphs;
            if (!c.exact() || c.value != expected) {
                problems << " n=" << n << " mask=" << mask;
            }
        }
    }
    // Denser graphs where enumeration over 2 and 3 classes actually matters.
    std::mt19937_64 rng(5);
    int dense = 0;
    while (dense < 300) {
        const int n = 5 + static_cast<int>(rng() % 3);
        const Graph g = oracle::random_graph(rng, n, 0.75);
        if (g.size() < 9 || g.size() > 13) {
            continue;
        }
        ++dense;
        const int expected = oracle::brute_force_thickness(g, 3, planar);
        const auto c = exact_thickness(g);
        if (!c.exact() || c.value != expected) {
            problems << " dense n=" << n << " m=" << g.size();
        }
    }
    std::ostringstream detail;
    detail << graphs << " graphs with <= 8 edges, plus " << dense << " with 9-13 edges" << problems.str();
    return {problems.str().empty(), detail.str()};
}

Outcome known_values() {
    struct Fixture {
        std::string name;
        Graph g;
        GraphFamily family;
        std::vector<int> params;
        int expected;
    };
    std::vector<Fixture> fixtures;
    for (int n = 1; n <= 8; ++n) {
        fixtures.push_back({"K" + std::to_string(n), make_complete(n), GraphFamily::complete, {n}, n == 1 ? 0 : n <= 4 ? 1 : 2});
    }
    fixtures.push_back({"K3,3", make_complete_bipartite(3, 3), GraphFamily::complete_bipartite, {3, 3}, 2});
    fixtures.push_back({"K4,4", make_complete_bipartite(4, 4), GraphFamily::complete_bipartite, {4, 4}, 2});
    fixtures.push_back({"Q3", make_hypercube(3), GraphFamily::hypercube, {3}, 1});
    fixtures.push_back({"Q4", make_hypercube(4), GraphFamily::hypercube, {4}, 2});

    std::ostringstream problems;
    double slowest = 0;
    for (const auto& f : fixtures) {
        const auto start = std::chrono::steady_clock::now();
        const auto c = exact_thickness(f.g, Budget{50'000'000, 30.0});
        slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        const int formula = thickness_oracle(f.family, f.params);
        if (!c.exact() || c.value != f.expected || formula != f.expected ||
            !validate_decomposition(c.witness).valid()) {
            problems << " " << f.name << " solver=" << c.value << " formula=" << formula;
        }
    }
    std::ostringstream detail;
    detail << fixtures.size() << " fixtures, slowest " << slowest << "s" << problems.str();
    return {problems.str().empty() && slowest <= 30.0, detail.str()};
}

Outcome planarity_vs_minors() {
    oracle::MinorPlanarity minor;
    long long graphs = 0;
    std::ostringstream problems;
    auto check = [&](const Graph& g) {
        ++graphs;
        if (is_planar(g).planar != minor.planar(g)) {
            problems << " n=" << g.order() << " m=" << g.size();
        }
    };
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            check(oracle::graph_from_mask(n, mask));
        }
    }
    const long long exhaustive = graphs;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20000; ++i) {
        check(oracle::graph_from_mask(7, static_cast<std::uint32_t>(rng() & ((1u << 21) - 1))));
    }
    std::ostringstream detail;
    detail << exhaustive << " exhaustive (n <= 6) + " << graphs - exhaustive << " random n = 7" << problems.str();
    return {problems.str().empty(), detail.str()};
}

Outcome composer_validity() {
    const AmalgamationKind kinds[] = {AmalgamationKind::vertex, AmalgamationKind::bar, AmalgamationKind::edge,
                                      AmalgamationKind::two_vertex};
    int calls = 0;
    std::ostringstream problems;
    for (int k = 0; k < 4; ++k) {
        CampaignConfig config;
        config.kind = kinds[k];
        config.count = 125;
        config.seed = 1000 + static_cast<std::uint64_t>(k);
        const auto instances = campaign_instances(config);
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const auto& inst = instances[i];
            // alternate heuristic and exact operand decompositions
            const auto d1 = i % 2 ? heuristic_thickness(inst.g1) : exact_thickness(inst.g1).witness;
            const auto d2 = i % 2 ? heuristic_thickness(inst.g2) : exact_thickness(inst.g2).witness;
            const auto k1 = d1.nonempty_parts();
            const auto k2 = d2.nonempty_parts();
            const auto out = compose(d1, d2, inst.spec);
            ++calls;
            const auto parts = out.decomposition.parts.size();
            bool size_ok = false;
            switch (inst.spec.kind) {
                case AmalgamationKind::vertex:
                    size_ok = parts == std::max(k1, k2);
                    break;
                case AmalgamationKind::bar:
                    size_ok = parts == std::max({k1, k2, std::size_t{1}});
                    break;
                case AmalgamationKind::edge:
                    size_ok = parts == k1 + k2 - 1;
                    break;
                case AmalgamationKind::two_vertex:
                    size_ok = out.decomposition.nonempty_parts() <= k1 + k2;
                    break;
            }
            const bool valid = validate_decomposition(out.decomposition).valid() &&
                               out.decomposition.base == amalgamate(inst.g1, inst.g2, inst.spec).graph;
            if (!size_ok || !valid) {
                problems << " " << to_string(inst.spec.kind) << "#" << i;
            }
        }
    }
    std::ostringstream detail;
    detail << calls << " compose calls across 4 kinds" << problems.str();
    return {problems.str().empty() && calls == 500, detail.str()};
}

}  // namespace

int main() {
    report("vertex amalgamation: theta = max", [] { return amalgamation_campaign(AmalgamationKind::vertex, 11); });
    report("bar amalgamation: theta = max", [] { return amalgamation_campaign(AmalgamationKind::bar, 12); });
    report("edge amalgamation: max <= theta <= n1+n2-1", [] { return amalgamation_campaign(AmalgamationKind::edge, 13); });
    report("2-vertex amalgamation: max <= theta <= n1+n2",
           [] { return amalgamation_campaign(AmalgamationKind::two_vertex, 14); });
    report("exact solver matches edge-partition enumeration", solver_vs_enumeration);
    report("known thickness values", known_values);
    report("planarity matches minor-based oracle", planarity_vs_minors);
    report("composed decompositions valid and sized", composer_validity);
    std::printf("SKIP  %-48s %s\n", "thickness of K9 and K10 by exhaustion", "not attempted (optional long run)");
    std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria FAILED");
    return failures == 0 ? 0 : 1;
}
