#ifndef THICKLAB_AMALGAMATION_HPP
#define THICKLAB_AMALGAMATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "thicklab/graph.hpp"

namespace thicklab {

enum class AmalgamationKind { vertex, two_vertex, edge, bar };

std::string to_string(AmalgamationKind kind);
AmalgamationKind parse_amalgamation_kind(const std::string& s);

class AmalgamationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Identification data. Vertices v1/u1 live in the first operand, v2/u2 in the
// second; v1 is identified with v2 and u1 with u2. For vertex and bar kinds
// only v1/v2 are used. For edge kind {v1,u1} and {v2,u2} name the edges.
struct AmalgamationSpec {
    AmalgamationKind kind = AmalgamationKind::vertex;
    Vertex v1 = 0;
    Vertex u1 = 0;
    Vertex v2 = 0;
    Vertex u2 = 0;

    static AmalgamationSpec vertex(Vertex v1, Vertex v2) { return {AmalgamationKind::vertex, v1, 0, v2, 0}; }
    static AmalgamationSpec bar(Vertex v1, Vertex v2) { return {AmalgamationKind::bar, v1, 0, v2, 0}; }
    static AmalgamationSpec two_vertex(Vertex v1, Vertex u1, Vertex v2, Vertex u2) {
        return {AmalgamationKind::two_vertex, v1, u1, v2, u2};
    }
    static AmalgamationSpec edge(Vertex v1, Vertex u1, Vertex v2, Vertex u2) {
        return {AmalgamationKind::edge, v1, u1, v2, u2};
    }

    bool operator==(const AmalgamationSpec&) const = default;
};

// Text form: "vertex v1 v2", "2vertex v1 u1 v2 u2", "edge v1 u1 v2 u2", "bar v1 v2".
AmalgamationSpec parse_amalgamation_spec(const std::string& text);
std::string to_string(const AmalgamationSpec& spec);

// Result labels: operand 1 keeps 0..n1-1, operand 2's non-identified vertices
// follow in increasing order from n1, identified vertices take operand 1's labels.
struct AmalgamationResult {
    Graph graph;
    VertexMap map1;
    VertexMap map2;
    std::vector<Vertex> shared;
    std::optional<Edge> bar_edge;
    // Two-vertex kind only: the shared pair is adjacent in exactly one operand.
    bool shared_pair_adjacent_in_one_operand = false;
};

AmalgamationResult vertex_amalgamate(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);
AmalgamationResult two_vertex_amalgamate(const Graph& g1, Vertex v1, Vertex u1, const Graph& g2, Vertex v2, Vertex u2);
AmalgamationResult edge_amalgamate(const Graph& g1, const Edge& e1, const Graph& g2, const Edge& e2);
AmalgamationResult edge_amalgamate(const Graph& g1, Vertex v1, Vertex u1, const Graph& g2, Vertex v2, Vertex u2);
// The operands must be distinct objects.
AmalgamationResult bar_amalgamate(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

AmalgamationResult amalgamate(const Graph& g1, const Graph& g2, const AmalgamationSpec& spec);

}  // namespace thicklab

#endif
