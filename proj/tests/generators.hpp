// Random operand generators shared by the composer and amalgamation tests.
#ifndef THICKLAB_TESTS_GENERATORS_HPP
#define THICKLAB_TESTS_GENERATORS_HPP

#include <random>

#include "oracles.hpp"
#include "thicklab/amalgamation.hpp"
#include "thicklab/planarity.hpp"

namespace gen {

inline thicklab::Graph operand(std::mt19937_64& rng, int min_n, int max_n, double p_lo, double p_hi,
                               std::size_t min_edges = 0) {
    while (true) {
        const int n = min_n + static_cast<int>(rng() % static_cast<unsigned>(max_n - min_n + 1));
        const double p = p_lo + (p_hi - p_lo) * static_cast<double>(rng() % 1000) / 1000.0;
        auto g = oracle::random_graph(rng, n, p);
        if (g.size() >= min_edges) {
            return g;
        }
    }
}

inline thicklab::Graph planar_operand(std::mt19937_64& rng, int min_n, int max_n) {
    while (true) {
        auto g = operand(rng, min_n, max_n, 0.2, 0.6, 1);
        if (thicklab::is_planar(g).planar) {
            return g;
        }
    }
}

inline thicklab::Vertex pick(std::mt19937_64& rng, const thicklab::Graph& g) {
    return static_cast<thicklab::Vertex>(rng() % static_cast<unsigned>(g.order()));
}

inline thicklab::Edge pick_edge(std::mt19937_64& rng, const thicklab::Graph& g) {
    const auto e = g.edges()[rng() % g.size()];
    return (rng() & 1) ? e : thicklab::Edge(e.v, e.u);
}

inline bool is_complete(const thicklab::Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    return g.size() == n * (n - 1) / 2;
}

// Spec for `kind` valid for (g1, g2); operands must have >= 2 vertices,
// at least one edge for the edge kind, and not both be complete for the
// two-vertex kind.
inline thicklab::AmalgamationSpec spec_for(std::mt19937_64& rng, thicklab::AmalgamationKind kind,
                                           const thicklab::Graph& g1, const thicklab::Graph& g2) {
    using thicklab::AmalgamationSpec;
    switch (kind) {
        case thicklab::AmalgamationKind::vertex:
            return AmalgamationSpec::vertex(pick(rng, g1), pick(rng, g2));
        case thicklab::AmalgamationKind::bar:
            return AmalgamationSpec::bar(pick(rng, g1), pick(rng, g2));
        case thicklab::AmalgamationKind::edge: {
            // orientation explicit: pick_edge may flip the stored order
            const auto a = g1.edges()[rng() % g1.size()];
            const auto b = g2.edges()[rng() % g2.size()];
            const bool flip = rng() & 1;
            return AmalgamationSpec::edge(a.u, a.v, flip ? b.v : b.u, flip ? b.u : b.v);
        }
        case thicklab::AmalgamationKind::two_vertex:
            while (true) {
                const auto v1 = pick(rng, g1);
                const auto u1 = pick(rng, g1);
                const auto v2 = pick(rng, g2);
                const auto u2 = pick(rng, g2);
                if (v1 != u1 && v2 != u2 && !(g1.has_edge(v1, u1) && g2.has_edge(v2, u2))) {
                    return AmalgamationSpec::two_vertex(v1, u1, v2, u2);
                }
            }
    }
    return {};
}

}  // namespace gen

#endif
