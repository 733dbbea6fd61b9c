#include "thicklab/graph.hpp"

#include <algorithm>

namespace thicklab {

Graph::Graph(int n, EdgeList edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) {
        throw GraphError("negative vertex count");
    }
    for (const auto& e : edges_) {
        if (e.u == e.v) {
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u < 0 || e.v >= n_) {
            throw GraphError("edge " + to_string(e) + " out of range for " + std::to_string(n_) + " vertices");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw GraphError("duplicate edge");
    }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a == b) {
        return false;
    }
    return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n_));
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

Graph Graph::spanning_subgraph(std::span<const Edge> subset) const {
    for (const auto& e : subset) {
        if (!has_edge(e)) {
            throw GraphError("edge " + to_string(e) + " is not in the base graph");
        }
    }
    return Graph(n_, EdgeList(subset.begin(), subset.end()));
}

Graph Graph::with_edge(const Edge& e) const {
    EdgeList es = edges_;
    es.push_back(e);
    return Graph(n_, std::move(es));
}

Graph Graph::without_edge(const Edge& e) const {
    EdgeList es;
    es.reserve(edges_.size());
    for (const auto& f : edges_) {
        if (f != e) {
            es.push_back(f);
        }
    }
    if (es.size() == edges_.size()) {
        throw GraphError("edge " + to_string(e) + " is not in the graph");
    }
    return Graph(n_, std::move(es));
}

Graph make_complete(int n) {
    if (n < 1) {
        throw GraphError("complete graph needs at least one vertex");
    }
    EdgeList es;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            es.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(es));
}

Graph make_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) {
        throw GraphError("complete bipartite graph needs non-empty parts");
    }
    EdgeList es;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            es.emplace_back(i, m + j);
        }
    }
    return Graph(m + n, std::move(es));
}

Graph make_hypercube(int d) {
    if (d < 0 || d > 10) {
        throw GraphError("hypercube dimension must be in [0, 10]");
    }
    const int n = 1 << d;
    EdgeList es;
    for (int v = 0; v < n; ++v) {
        for (int b = 0; b < d; ++b) {
            const int w = v ^ (1 << b);
            if (v < w) {
                es.emplace_back(v, w);
            }
        }
    }
    return Graph(n, std::move(es));
}

Graph make_path(int n) {
    if (n < 1) {
        throw GraphError("path needs at least one vertex");
    }
    EdgeList es;
    for (int i = 0; i + 1 < n; ++i) {
        es.emplace_back(i, i + 1);
    }
    return Graph(n, std::move(es));
}

Graph make_cycle(int n) {
    if (n < 3) {
        throw GraphError("cycle needs at least three vertices");
    }
    EdgeList es;
    for (int i = 0; i < n; ++i) {
        es.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, std::move(es));
}

UnionResult disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order();
    const int n2 = g2.order();
    UnionResult r;
    r.map1.operand = 1;
    r.map2.operand = 2;
    for (int v = 0; v < n1; ++v) {
        r.map1.image.push_back(v);
    }
    for (int v = 0; v < n2; ++v) {
        r.map2.image.push_back(n1 + v);
    }
    EdgeList es = g1.edges();
    for (const auto& e : g2.edges()) {
        es.push_back(r.map2(e));
    }
    r.graph = Graph(n1 + n2, std::move(es));
    return r;
}

Graph induced_relabel(const Graph& g, const VertexMap& map, int target_order) {
    if (map.image.size() != static_cast<std::size_t>(g.order())) {
        throw GraphError("vertex map covers " + std::to_string(map.image.size()) + " of " +
                         std::to_string(g.order()) + " vertices");
    }
    int order = target_order;
    if (order < 0) {
        order = g.order();
        for (Vertex w : map.image) {
            order = std::max(order, w + 1);
        }
    }
    std::vector<char> used(static_cast<std::size_t>(order), 0);
    for (Vertex w : map.image) {
        if (w < 0 || w >= order) {
            throw GraphError("vertex map image " + std::to_string(w) + " out of range");
        }
        if (used[w]) {
            throw GraphError("vertex map is not injective at " + std::to_string(w));
        }
        used[w] = 1;
    }
    EdgeList es;
    es.reserve(g.size());
    for (const auto& e : g.edges()) {
        es.push_back(map(e));
    }
    return Graph(order, std::move(es));
}

bool is_subgraph(const Graph& sub, const Graph& super) {
    if (sub.order() > super.order()) {
        return false;
    }
    return std::includes(super.edges().begin(), super.edges().end(), sub.edges().begin(), sub.edges().end());
}

std::string to_string(const Edge& e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace thicklab
