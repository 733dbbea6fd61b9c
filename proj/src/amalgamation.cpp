#include "thicklab/amalgamation.hpp"

#include <sstream>

namespace thicklab {

namespace {

void require_vertex(const Graph& g, Vertex v, const char* operand) {
    if (!g.has_vertex(v)) {
        throw AmalgamationError(std::string("vertex ") + std::to_string(v) + " is not in " + operand + " (order " +
                                std::to_string(g.order()) + ")");
    }
}

// Glue g2 onto g1 with g2's vertex `from[i]` identified to g1's `to[i]`.
AmalgamationResult glue(const Graph& g1, const Graph& g2, const std::vector<std::pair<Vertex, Vertex>>& identify) {
    AmalgamationResult r;
    const int n1 = g1.order();
    r.map1.operand = 1;
    r.map2.operand = 2;
    for (Vertex v = 0; v < n1; ++v) {
        r.map1.image.push_back(v);
    }
    r.map2.image.assign(static_cast<std::size_t>(g2.order()), -1);
    for (const auto& [from, to] : identify) {
        r.map2.image[from] = to;
        r.shared.push_back(to);
    }
    Vertex next = n1;
    for (auto& w : r.map2.image) {
        if (w < 0) {
            w = next++;
        }
    }
    EdgeList es = g1.edges();
    for (const auto& e : g2.edges()) {
        const Edge mapped = r.map2(e);
        if (!g1.has_edge(mapped)) {
            es.push_back(mapped);
        }
    }
    r.graph = Graph(next, std::move(es));
    return r;
}

}  // namespace

std::string to_string(AmalgamationKind kind) {
    switch (kind) {
        case AmalgamationKind::vertex:
            return "vertex";
        case AmalgamationKind::two_vertex:
            return "2vertex";
        case AmalgamationKind::edge:
            return "edge";
        case AmalgamationKind::bar:
            return "bar";
    }
    return "?";
}

AmalgamationKind parse_amalgamation_kind(const std::string& s) {
    if (s == "vertex") {
        return AmalgamationKind::vertex;
    }
    if (s == "2vertex" || s == "two-vertex") {
        return AmalgamationKind::two_vertex;
    }
    if (s == "edge") {
        return AmalgamationKind::edge;
    }
    if (s == "bar") {
        return AmalgamationKind::bar;
    }
    throw AmalgamationError("unknown amalgamation kind '" + s + "'");
}

AmalgamationSpec parse_amalgamation_spec(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    if (!(in >> word)) {
        throw AmalgamationError("empty amalgamation spec");
    }
    AmalgamationSpec spec;
    spec.kind = parse_amalgamation_kind(word);
    const bool pairs = spec.kind == AmalgamationKind::two_vertex || spec.kind == AmalgamationKind::edge;
    bool ok = false;
    if (pairs) {
        ok = static_cast<bool>(in >> spec.v1 >> spec.u1 >> spec.v2 >> spec.u2);
    } else {
        ok = static_cast<bool>(in >> spec.v1 >> spec.v2);
    }
    std::string rest;
    if (!ok || (in >> rest)) {
        throw AmalgamationError("malformed amalgamation spec '" + text + "'; expected '" + word +
                                (pairs ? " v1 u1 v2 u2'" : " v1 v2'"));
    }
    return spec;
}

std::string to_string(const AmalgamationSpec& spec) {
    std::ostringstream out;
    out << to_string(spec.kind) << ' ' << spec.v1;
    if (spec.kind == AmalgamationKind::two_vertex || spec.kind == AmalgamationKind::edge) {
        out << ' ' << spec.u1 << ' ' << spec.v2 << ' ' << spec.u2;
    } else {
        out << ' ' << spec.v2;
    }
    return out.str();
}

AmalgamationResult vertex_amalgamate(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
    require_vertex(g1, v1, "the first operand");
    require_vertex(g2, v2, "the second operand");
    return glue(g1, g2, {{v2, v1}});
}

AmalgamationResult two_vertex_amalgamate(const Graph& g1, Vertex v1, Vertex u1, const Graph& g2, Vertex v2,
                                         Vertex u2) {
    require_vertex(g1, v1, "the first operand");
    require_vertex(g1, u1, "the first operand");
    require_vertex(g2, v2, "the second operand");
    require_vertex(g2, u2, "the second operand");
    if (v1 == u1 || v2 == u2) {
        throw AmalgamationError("2-vertex amalgamation needs two distinct vertices in each operand");
    }
    const bool in1 = g1.has_edge(v1, u1);
    const bool in2 = g2.has_edge(v2, u2);
    if (in1 && in2) {
        throw AmalgamationError("both operands contain the edge between the identified vertices; use edge_amalgamate");
    }
    auto r = glue(g1, g2, {{v2, v1}, {u2, u1}});
    r.shared_pair_adjacent_in_one_operand = in1 || in2;
    return r;
}

AmalgamationResult edge_amalgamate(const Graph& g1, Vertex v1, Vertex u1, const Graph& g2, Vertex v2, Vertex u2) {
    require_vertex(g1, v1, "the first operand");
    require_vertex(g1, u1, "the first operand");
    require_vertex(g2, v2, "the second operand");
    require_vertex(g2, u2, "the second operand");
    if (!g1.has_edge(v1, u1)) {
        throw AmalgamationError("edge {" + std::to_string(v1) + "," + std::to_string(u1) +
                                "} is not in the first operand");
    }
    if (!g2.has_edge(v2, u2)) {
        throw AmalgamationError("edge {" + std::to_string(v2) + "," + std::to_string(u2) +
                                "} is not in the second operand");
    }
    return glue(g1, g2, {{v2, v1}, {u2, u1}});
}

AmalgamationResult edge_amalgamate(const Graph& g1, const Edge& e1, const Graph& g2, const Edge& e2) {
    return edge_amalgamate(g1, e1.u, e1.v, g2, e2.u, e2.v);
}

AmalgamationResult bar_amalgamate(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
    if (&g1 == &g2) {
        throw AmalgamationError("bar amalgamation of a graph with itself is not supported");
    }
    require_vertex(g1, v1, "the first operand");
    require_vertex(g2, v2, "the second operand");
    auto r = glue(g1, g2, {});
    const Edge bar(v1, r.map2(v2));
    r.graph = r.graph.with_edge(bar);
    r.bar_edge = bar;
    return r;
}

AmalgamationResult amalgamate(const Graph& g1, const Graph& g2, const AmalgamationSpec& spec) {
    switch (spec.kind) {
        case AmalgamationKind::vertex:
            return vertex_amalgamate(g1, spec.v1, g2, spec.v2);
        case AmalgamationKind::two_vertex:
            return two_vertex_amalgamate(g1, spec.v1, spec.u1, g2, spec.v2, spec.u2);
        case AmalgamationKind::edge:
            return edge_amalgamate(g1, spec.v1, spec.u1, g2, spec.v2, spec.u2);
        case AmalgamationKind::bar:
            return bar_amalgamate(g1, spec.v1, g2, spec.v2);
    }
    throw AmalgamationError("unknown amalgamation kind");
}

}  // namespace thicklab
