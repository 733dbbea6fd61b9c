#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "thicklab/amalgamation.hpp"
#include "thicklab/planarity.hpp"

using namespace thicklab;

namespace {

Graph k5_minus_edge() { return make_complete(5).without_edge({0, 1}); }
Graph k33_minus_edge() { return make_complete_bipartite(3, 3).without_edge({0, 3}); }

void check_structure(const Graph& g1, const Graph& g2, const AmalgamationResult& r, AmalgamationKind kind) {
    const int n = r.graph.order();
    const Graph img1 = induced_relabel(g1, r.map1, n);
    const Graph img2 = induced_relabel(g2, r.map2, n);
    CHECK(is_subgraph(img1, r.graph));
    CHECK(is_subgraph(img2, r.graph));

    std::set<Vertex> a(r.map1.image.begin(), r.map1.image.end());
    std::set<Vertex> b(r.map2.image.begin(), r.map2.image.end());
    std::vector<Vertex> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    auto shared = r.shared;
    std::sort(shared.begin(), shared.end());
    CHECK(common == shared);

    EdgeList both = img1.edges();
    both.insert(both.end(), img2.edges().begin(), img2.edges().end());
    if (r.bar_edge) {
        both.push_back(*r.bar_edge);
    }
    std::sort(both.begin(), both.end());
    both.erase(std::unique(both.begin(), both.end()), both.end());
    CHECK(both == r.graph.edges());

    const auto n1 = static_cast<std::size_t>(g1.order());
    const auto n2 = static_cast<std::size_t>(g2.order());
    const auto m1 = g1.size();
    const auto m2 = g2.size();
    const auto nv = static_cast<std::size_t>(r.graph.order());
    switch (kind) {
        case AmalgamationKind::vertex:
            CHECK(nv == n1 + n2 - 1);
            CHECK(r.graph.size() == m1 + m2);
            CHECK(r.shared.size() == 1);
            break;
        case AmalgamationKind::two_vertex:
            CHECK(nv == n1 + n2 - 2);
            CHECK(r.graph.size() == m1 + m2);
            CHECK(r.shared.size() == 2);
            break;
        case AmalgamationKind::edge:
            CHECK(nv == n1 + n2 - 2);
            CHECK(r.graph.size() == m1 + m2 - 1);
            CHECK(r.shared.size() == 2);
            break;
        case AmalgamationKind::bar:
            CHECK(nv == n1 + n2);
            CHECK(r.graph.size() == m1 + m2 + 1);
            CHECK(r.shared.empty());
            CHECK(r.bar_edge.has_value());
            break;
    }
}

}  // namespace

TEST_CASE("vertex amalgamation") {
    const auto k3 = make_complete(3);
    auto r = vertex_amalgamate(k3, 0, k3, 2);
    CHECK(r.graph.order() == 5);
    CHECK(r.graph.size() == 6);
    CHECK(r.graph.degrees()[0] == 4);  // bowtie centre
    CHECK(r.map2.image == std::vector<Vertex>{3, 4, 0});
    CHECK(r.shared == std::vector<Vertex>{0});

    r = vertex_amalgamate(make_complete(1), 0, make_complete(1), 0);
    CHECK(r.graph.order() == 1);
    CHECK(r.graph.size() == 0);

    const auto k5 = make_complete(5);
    r = vertex_amalgamate(k5, 3, k5, 1);
    CHECK(r.graph.order() == 9);
    CHECK(r.graph.size() == 20);

    CHECK_THROWS_AS(vertex_amalgamate(k3, 3, k3, 0), AmalgamationError);
    CHECK_THROWS_AS(vertex_amalgamate(k3, 0, k3, -1), AmalgamationError);
}

TEST_CASE("two-vertex amalgamation") {
    const auto p3 = make_path(3);  // 0-1-2, ends non-adjacent
    auto r = two_vertex_amalgamate(p3, 0, 2, p3, 0, 2);
    CHECK(r.graph.order() == 4);
    CHECK(r.graph.size() == 4);
    CHECK(r.graph.degrees() == std::vector<int>{2, 2, 2, 2});
    CHECK_FALSE(r.shared_pair_adjacent_in_one_operand);

    const auto k5e = k5_minus_edge();
    r = two_vertex_amalgamate(k5e, 0, 1, k5e, 0, 1);
    CHECK(r.graph.order() == 8);
    CHECK(r.graph.size() == 18);

    const auto k3 = make_complete(3);
    CHECK_THROWS_AS(two_vertex_amalgamate(k3, 0, 1, k3, 0, 1), AmalgamationError);
    CHECK_THROWS_AS(two_vertex_amalgamate(p3, 0, 0, p3, 0, 2), AmalgamationError);
    CHECK_THROWS_AS(two_vertex_amalgamate(p3, 0, 2, p3, 1, 1), AmalgamationError);

    // edge between the shared pair in exactly one operand: allowed and flagged
    r = two_vertex_amalgamate(k3, 0, 1, p3, 0, 2);
    CHECK(r.shared_pair_adjacent_in_one_operand);
    CHECK(r.graph.size() == 5);
}

TEST_CASE("edge amalgamation") {
    const auto k3 = make_complete(3);
    auto r = edge_amalgamate(k3, {0, 1}, k3, {0, 1});
    CHECK(r.graph.order() == 4);
    CHECK(r.graph.size() == 5);

    const auto k5 = make_complete(5);
    r = edge_amalgamate(k5, {0, 1}, k5, {2, 3});
    CHECK(r.graph.order() == 8);
    CHECK(r.graph.size() == 19);

    // orientation is explicit: v2 -> v1, u2 -> u1
    const auto p3 = make_path(3);
    const auto fwd = edge_amalgamate(p3, 0, 1, p3, 0, 1);
    const auto rev = edge_amalgamate(p3, 0, 1, p3, 1, 0);
    CHECK(fwd.map2(0) == 0);
    CHECK(rev.map2(0) == 1);
    CHECK(fwd.graph != rev.graph);

    CHECK_THROWS_AS(edge_amalgamate(p3, 0, 2, p3, 0, 1), AmalgamationError);
    CHECK_THROWS_AS(edge_amalgamate(p3, 0, 1, p3, 2, 0), AmalgamationError);
}

TEST_CASE("bar amalgamation") {
    const auto a = make_complete(1);
    const auto b = make_complete(1);
    auto r = bar_amalgamate(a, 0, b, 0);
    CHECK(r.graph.order() == 2);
    CHECK(r.graph.size() == 1);
    CHECK(r.bar_edge == Edge(0, 1));

    const auto k3 = make_complete(3);
    const auto k3b = make_complete(3);
    r = bar_amalgamate(k3, 2, k3b, 1);
    CHECK(r.graph.order() == 6);
    CHECK(r.graph.size() == 7);
    CHECK(r.bar_edge == Edge(2, 4));

    const auto k5 = make_complete(5);
    const auto k5b = make_complete(5);
    r = bar_amalgamate(k5, 0, k5b, 0);
    CHECK(r.graph.order() == 10);
    CHECK(r.graph.size() == 21);

    CHECK_THROWS_AS(bar_amalgamate(k3, 0, k3, 1), AmalgamationError);
    CHECK_THROWS_AS(bar_amalgamate(k3, 0, k3b, 3), AmalgamationError);
}

TEST_CASE("spec syntax") {
    CHECK(parse_amalgamation_spec("vertex 0 0") == AmalgamationSpec::vertex(0, 0));
    CHECK(parse_amalgamation_spec("2vertex 1 2 3 4") == AmalgamationSpec::two_vertex(1, 2, 3, 4));
    CHECK(parse_amalgamation_spec("edge 0 1 1 0") == AmalgamationSpec::edge(0, 1, 1, 0));
    CHECK(parse_amalgamation_spec("  bar 4 5 ") == AmalgamationSpec::bar(4, 5));
    for (const char* s : {"vertex 1 2", "2vertex 0 1 2 3", "edge 3 2 1 0", "bar 0 9"}) {
        CHECK(to_string(parse_amalgamation_spec(s)) == s);
    }
    CHECK_THROWS_AS(parse_amalgamation_spec(""), AmalgamationError);
    CHECK_THROWS_AS(parse_amalgamation_spec("vertex 1"), AmalgamationError);
    CHECK_THROWS_AS(parse_amalgamation_spec("vertex 1 2 3"), AmalgamationError);
    CHECK_THROWS_AS(parse_amalgamation_spec("edge 1 2 3"), AmalgamationError);
    CHECK_THROWS_AS(parse_amalgamation_spec("glue 1 2"), AmalgamationError);
}

TEST_CASE("structure and counts for random operand pairs") {
    std::mt19937_64 rng(500);
    const AmalgamationKind kinds[] = {AmalgamationKind::vertex, AmalgamationKind::two_vertex,
                                      AmalgamationKind::edge, AmalgamationKind::bar};
    for (int t = 0; t < 500; ++t) {
        const auto kind = kinds[t % 4];
        const Graph g1 = gen::operand(rng, 2, 9, 0.1, 0.8, 1);
        Graph g2 = gen::operand(rng, 2, 9, 0.1, 0.8, 1);
        while (kind == AmalgamationKind::two_vertex && gen::is_complete(g1) && gen::is_complete(g2)) {
            g2 = gen::operand(rng, 2, 9, 0.1, 0.8, 1);
        }
        const auto spec = gen::spec_for(rng, kind, g1, g2);
        const auto r = amalgamate(g1, g2, spec);
        check_structure(g1, g2, r, kind);
    }
}

TEST_CASE("planar operands stay planar under vertex, edge and bar amalgamation") {
    std::mt19937_64 rng(200);
    for (int t = 0; t < 200; ++t) {
        const Graph g1 = gen::planar_operand(rng, 3, 9);
        const Graph g2 = gen::planar_operand(rng, 3, 9);
        const auto v = amalgamate(g1, g2, gen::spec_for(rng, AmalgamationKind::vertex, g1, g2));
        const auto e = amalgamate(g1, g2, gen::spec_for(rng, AmalgamationKind::edge, g1, g2));
        const auto b = amalgamate(g1, g2, gen::spec_for(rng, AmalgamationKind::bar, g1, g2));
        CHECK(is_planar(v.graph).planar);
        CHECK(is_planar(e.graph).planar);
        CHECK(is_planar(b.graph).planar);
    }
}

TEST_CASE("two-vertex amalgamation of planar graphs can be non-planar") {
    const auto h = k33_minus_edge();
    REQUIRE(is_planar(h).planar);
    const auto r = two_vertex_amalgamate(h, 0, 3, h, 0, 3);
    CHECK_FALSE(is_planar(r.graph).planar);
    CHECK(r.graph.order() == 10);
    CHECK(r.graph.size() == 16);
}
