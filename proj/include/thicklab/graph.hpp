#ifndef THICKLAB_GRAPH_HPP
#define THICKLAB_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thicklab {

using Vertex = int;

// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool touches(Vertex x) const { return u == x || v == x; }
    auto operator<=>(const Edge&) const = default;
};

using EdgeList = std::vector<Edge>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built; the edge
// list is kept sorted and duplicate free so equality is label-sensitive.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, EdgeList edges = {});

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const EdgeList& edges() const { return edges_; }

    bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }
    bool has_edge(Vertex a, Vertex b) const;
    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    std::vector<int> degrees() const;
    std::vector<std::vector<Vertex>> adjacency() const;

    // Spanning subgraph on the same vertex set. Every edge must belong to this graph.
    Graph spanning_subgraph(std::span<const Edge> subset) const;
    Graph with_edge(const Edge& e) const;
    Graph without_edge(const Edge& e) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    EdgeList edges_;
};

struct VertexMap {
    int operand = 1;
    // image[v] is the result label of operand vertex v.
    std::vector<Vertex> image;

    Vertex operator()(Vertex v) const { return image.at(static_cast<std::size_t>(v)); }
    Edge operator()(const Edge& e) const { return Edge((*this)(e.u), (*this)(e.v)); }
};

struct UnionResult {
    Graph graph;
    VertexMap map1;
    VertexMap map2;
};

Graph make_complete(int n);
Graph make_complete_bipartite(int m, int n);
Graph make_hypercube(int d);
Graph make_path(int n);
Graph make_cycle(int n);

UnionResult disjoint_union(const Graph& g1, const Graph& g2);

// Copy of g with every vertex v renamed to map(v). The result has
// max(g.order(), max image + 1) vertices unless target_order is given.
Graph induced_relabel(const Graph& g, const VertexMap& map, int target_order = -1);

bool is_subgraph(const Graph& sub, const Graph& super);

std::string to_string(const Edge& e);

}  // namespace thicklab

#endif
