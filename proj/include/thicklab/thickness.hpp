#ifndef THICKLAB_THICKNESS_HPP
#define THICKLAB_THICKNESS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "thicklab/graph.hpp"

namespace thicklab {

// Ordered partition of base's edges; part i is the spanning subgraph
// (all base vertices, parts[i] edges).
struct PlanarDecomposition {
    Graph base;
    std::vector<EdgeList> parts;

    std::size_t nonempty_parts() const;
    Graph part_graph(std::size_t i) const { return Graph(base.order(), parts.at(i)); }
    // Same partition with empty parts removed, order preserved.
    PlanarDecomposition compacted() const;
};

struct DecompositionReport {
    bool complete = true;       // every base edge is covered
    bool disjoint = true;       // no edge appears twice
    bool within_base = true;    // every part edge is a base edge on base vertices
    std::vector<bool> part_planar;
    std::size_t nonempty_parts = 0;
    std::size_t empty_parts = 0;
    EdgeList missing;
    EdgeList repeated;
    EdgeList foreign;

    bool valid() const;
    std::string summary() const;
};

DecompositionReport validate_decomposition(const PlanarDecomposition& d);

// 0 without edges, 1 with edges on fewer than three vertices, else ceil(m / (3n - 6)).
int euler_lower_bound(const Graph& g);

struct Budget {
    std::int64_t nodes = 2'000'000;
    double seconds = 600.0;
};

class BudgetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class LowerBoundKind { planar_check, euler, exhaustion };
enum class CertificateStatus { exact, bounded };

std::string to_string(LowerBoundKind kind);
std::string to_string(CertificateStatus status);
LowerBoundKind parse_lower_bound_kind(const std::string& s);
CertificateStatus parse_certificate_status(const std::string& s);

struct ThicknessCertificate {
    int value = 0;                 // part count of the witness
    PlanarDecomposition witness;   // exactly `value` non-empty parts
    int lower_bound = 0;
    LowerBoundKind lower_bound_kind = LowerBoundKind::euler;
    CertificateStatus status = CertificateStatus::exact;
    std::int64_t nodes = 0;        // search nodes spent

    bool exact() const { return status == CertificateStatus::exact; }
};

// Edge order used by the solver and the heuristic: descending endpoint-degree
// sum, ties by label.
EdgeList solver_edge_order(const Graph& g);

// Branch and bound over edge-to-class assignments for k = lower bound, k+1, ...
// with incremental planarity pruning and first-empty-class symmetry breaking.
// Throws BudgetError when either budget component is non-positive.
ThicknessCertificate exact_thickness(const Graph& g, const Budget& budget = {});

// Repeatedly peels a maximal planar subgraph off the remaining edges.
PlanarDecomposition heuristic_thickness(const Graph& g);

enum class GraphFamily { complete, complete_bipartite, hypercube };

// Closed-form thickness from the literature within a guarded parameter range
// (complete: n >= 1; complete bipartite: min(m, n) <= 6; hypercube: 0 <= d <= 10).
// Edgeless members (K_1, Q_0) report 0. Out-of-range parameters throw GraphError.
int thickness_oracle(GraphFamily family, std::span<const int> params);

}  // namespace thicklab

#endif
