#ifndef THICKLAB_PLANARITY_HPP
#define THICKLAB_PLANARITY_HPP

#include <optional>
#include <span>
#include <vector>

#include "thicklab/graph.hpp"

namespace thicklab {

// Combinatorial embedding: for every vertex, its neighbours in clockwise order.
struct RotationSystem {
    std::vector<std::vector<Vertex>> rotation;

    int face_count() const;
};

enum class Witness { none, full };

struct PlanarityVerdict {
    bool planar = false;
    std::optional<RotationSystem> embedding;          // planar and witness requested
    std::optional<EdgeList> obstruction;              // non-planar and witness requested

    explicit operator bool() const { return planar; }
};

// Left-right planarity test. Witnesses are only built when asked for: the
// embedding comes from the same run, the obstruction is a minimal non-planar
// edge subset (a Kuratowski subdivision) found by edge deletion.
PlanarityVerdict is_planar(const Graph& g, Witness witness = Witness::none);

// Boolean form over a raw edge list; edges must be simple and within [0, n).
bool planar_edges(int n, std::span<const Edge> edges);

// Checks that the rotation system is a valid embedding of g with
// faces - edges + vertices = 1 + components.
bool satisfies_euler(const Graph& g, const RotationSystem& embedding);

int connected_components(int n, std::span<const Edge> edges);

// Grows a planar graph one edge at a time. A rejected edge leaves the session
// untouched; pop() undoes the most recent accepted edge.
class PlanaritySession {
public:
    explicit PlanaritySession(int n);
    explicit PlanaritySession(const Graph& planar_graph);

    bool try_add(Vertex u, Vertex v);
    bool try_add(const Edge& e) { return try_add(e.u, e.v); }
    void pop();

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const EdgeList& edges() const { return edges_; }
    bool contains(const Edge& e) const;

private:
    bool same_component(Vertex u, Vertex v) const;

    int n_;
    EdgeList edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<int> touched_;  // incident edge count per vertex
    int active_vertices_ = 0;
    mutable std::vector<int> mark_;
    mutable int stamp_ = 0;
};

}  // namespace thicklab

#endif
