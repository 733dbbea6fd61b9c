#include "thicklab/composer.hpp"

#include <algorithm>

#include "thicklab/certificate_io.hpp"
#include "thicklab/planarity.hpp"

namespace thicklab {

namespace {

PlanarDecomposition checked_operand(const PlanarDecomposition& d, const char* which) {
    const auto report = validate_decomposition(d);
    if (!report.valid()) {
        throw CompositionError(std::string(which) + " decomposition is invalid: " + report.summary());
    }
    return d.compacted();
}

EdgeList map_part(const EdgeList& part, const VertexMap& map) {
    EdgeList out;
    out.reserve(part.size());
    for (const auto& e : part) {
        out.push_back(map(e));
    }
    return out;
}

EdgeList merge_parts(EdgeList a, const EdgeList& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

void finish(CompositionOutcome& out) {
    for (auto& part : out.decomposition.parts) {
        std::sort(part.begin(), part.end());
    }
    const auto report = validate_decomposition(out.decomposition);
    if (!report.valid()) {
        throw InvariantViolation("composed " + to_string(out.bound) + " decomposition failed validation: " +
                                 report.summary());
    }
    if (out.decomposition.nonempty_parts() > static_cast<std::size_t>(out.claimed_size)) {
        throw InvariantViolation("composed decomposition exceeds its claimed size");
    }
}

void require_kind(const AmalgamationSpec& spec, AmalgamationKind kind) {
    if (spec.kind != kind) {
        throw CompositionError("spec kind " + to_string(spec.kind) + " does not match composer " + to_string(kind));
    }
}

// Index of the part holding e; -1 if none.
int part_holding(const PlanarDecomposition& d, const Edge& e) {
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        if (std::find(d.parts[i].begin(), d.parts[i].end(), e) != d.parts[i].end()) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

void move_to_front(PlanarDecomposition& d, int index) {
    std::rotate(d.parts.begin(), d.parts.begin() + index, d.parts.begin() + index + 1);
}

// Shared body of the vertex and bar composers: aligned part-wise union.
CompositionOutcome compose_aligned(const PlanarDecomposition& d1, const PlanarDecomposition& d2,
                                   const AmalgamationSpec& spec, AmalgamationBound bound) {
    const auto a = checked_operand(d1, "first");
    const auto b = checked_operand(d2, "second");
    CompositionOutcome out;
    out.bound = bound;
    out.amalgam = amalgamate(a.base, b.base, spec);
    const std::size_t k = std::max(a.parts.size(), b.parts.size());
    out.decomposition.base = out.amalgam.graph;
    out.decomposition.parts.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        EdgeList part;
        if (i < a.parts.size()) {
            part = map_part(a.parts[i], out.amalgam.map1);
        }
        if (i < b.parts.size()) {
            part = merge_parts(std::move(part), map_part(b.parts[i], out.amalgam.map2));
        }
        out.decomposition.parts[i] = std::move(part);
    }
    out.claimed_size = static_cast<int>(k);
    return out;
}

}  // namespace

std::string to_string(AmalgamationBound bound) {
    switch (bound) {
        case AmalgamationBound::vertex_equality:
            return "vertex-amalgamation theta=max(n1,n2)";
        case AmalgamationBound::bar_equality:
            return "bar-amalgamation theta=max(n1,n2)";
        case AmalgamationBound::edge_sandwich:
            return "edge-amalgamation max(n1,n2)<=theta<=n1+n2-1";
        case AmalgamationBound::two_vertex_sandwich:
            return "2vertex-amalgamation max(n1,n2)<=theta<=n1+n2";
    }
    return "?";
}

AmalgamationBound bound_for(AmalgamationKind kind) {
    switch (kind) {
        case AmalgamationKind::vertex:
            return AmalgamationBound::vertex_equality;
        case AmalgamationKind::bar:
            return AmalgamationBound::bar_equality;
        case AmalgamationKind::edge:
            return AmalgamationBound::edge_sandwich;
        case AmalgamationKind::two_vertex:
            return AmalgamationBound::two_vertex_sandwich;
    }
    throw CompositionError("unknown amalgamation kind");
}

int bound_lower(AmalgamationKind kind, int n1, int n2) {
    const int lo = std::max(n1, n2);
    return kind == AmalgamationKind::bar ? std::max(lo, 1) : lo;
}

int bound_upper(AmalgamationKind kind, int n1, int n2) {
    switch (kind) {
        case AmalgamationKind::vertex:
            return std::max(n1, n2);
        case AmalgamationKind::bar:
            return std::max({n1, n2, 1});
        case AmalgamationKind::edge:
            return n1 + n2 - 1;
        case AmalgamationKind::two_vertex:
            return n1 + n2;
    }
    throw CompositionError("unknown amalgamation kind");
}

CompositionOutcome compose_vertex(const PlanarDecomposition& d1, const PlanarDecomposition& d2,
                                  const AmalgamationSpec& spec) {
    require_kind(spec, AmalgamationKind::vertex);
    auto out = compose_aligned(d1, d2, spec, AmalgamationBound::vertex_equality);
    finish(out);
    return out;
}

CompositionOutcome compose_bar(const PlanarDecomposition& d1, const PlanarDecomposition& d2,
                               const AmalgamationSpec& spec) {
    require_kind(spec, AmalgamationKind::bar);
    auto out = compose_aligned(d1, d2, spec, AmalgamationBound::bar_equality);
    if (out.decomposition.parts.empty()) {
        out.decomposition.parts.emplace_back();
        out.claimed_size = 1;
    }
    out.decomposition.parts.front().push_back(*out.amalgam.bar_edge);
    finish(out);
    return out;
}

CompositionOutcome compose_edge(const PlanarDecomposition& d1, const PlanarDecomposition& d2,
                                const AmalgamationSpec& spec) {
    require_kind(spec, AmalgamationKind::edge);
    auto a = checked_operand(d1, "first");
    auto b = checked_operand(d2, "second");
    CompositionOutcome out;
    out.bound = AmalgamationBound::edge_sandwich;
    out.amalgam = amalgamate(a.base, b.base, spec);

    const int ia = part_holding(a, Edge(spec.v1, spec.u1));
    const int ib = part_holding(b, Edge(spec.v2, spec.u2));
    if (ia < 0 || ib < 0) {
        throw CompositionError("identified edge is missing from an operand decomposition");
    }
    move_to_front(a, ia);
    move_to_front(b, ib);

    const VertexMap* map_big = &out.amalgam.map1;
    const VertexMap* map_small = &out.amalgam.map2;
    const PlanarDecomposition* big = &a;
    const PlanarDecomposition* small = &b;
    if (b.parts.size() > a.parts.size()) {
        std::swap(big, small);
        std::swap(map_big, map_small);
    }
    const std::size_t k1 = big->parts.size();
    const std::size_t k2 = small->parts.size();

    auto& parts = out.decomposition.parts;
    parts.push_back(merge_parts(map_part(big->parts[0], *map_big), map_part(small->parts[0], *map_small)));
    for (std::size_t i = 1; i < k2; ++i) {
        parts.push_back(map_part(big->parts[i], *map_big));
        parts.push_back(map_part(small->parts[i], *map_small));
    }
    for (std::size_t i = k2; i < k1; ++i) {
        parts.push_back(map_part(big->parts[i], *map_big));
    }
    out.decomposition.base = out.amalgam.graph;
    out.claimed_size = static_cast<int>(k1 + k2 - 1);
    finish(out);
    return out;
}

CompositionOutcome compose_two_vertex(const PlanarDecomposition& d1, const PlanarDecomposition& d2,
                                      const AmalgamationSpec& spec) {
    require_kind(spec, AmalgamationKind::two_vertex);
    const auto a = checked_operand(d1, "first");
    const auto b = checked_operand(d2, "second");
    CompositionOutcome out;
    out.bound = AmalgamationBound::two_vertex_sandwich;
    out.amalgam = amalgamate(a.base, b.base, spec);
    const int n = out.amalgam.graph.order();

    std::vector<EdgeList> first;
    std::vector<EdgeList> second;
    for (const auto& p : a.parts) {
        first.push_back(map_part(p, out.amalgam.map1));
    }
    for (const auto& p : b.parts) {
        second.push_back(map_part(p, out.amalgam.map2));
    }
    std::vector<bool> absorbed(second.size(), false);
    for (auto& p : first) {
        for (std::size_t j = 0; j < second.size(); ++j) {
            if (absorbed[j]) {
                continue;
            }
            EdgeList merged = merge_parts(p, second[j]);
            if (planar_edges(n, merged)) {
                p = std::move(merged);
                absorbed[j] = true;
                break;
            }
        }
    }
    auto& parts = out.decomposition.parts;
    parts = std::move(first);
    for (std::size_t j = 0; j < second.size(); ++j) {
        if (!absorbed[j]) {
            parts.push_back(std::move(second[j]));
        }
    }
    out.decomposition.base = out.amalgam.graph;
    out.claimed_size = static_cast<int>(a.parts.size() + b.parts.size());
    finish(out);
    return out;
}

CompositionOutcome compose(const PlanarDecomposition& d1, const PlanarDecomposition& d2,
                           const AmalgamationSpec& spec) {
    switch (spec.kind) {
        case AmalgamationKind::vertex:
            return compose_vertex(d1, d2, spec);
        case AmalgamationKind::bar:
            return compose_bar(d1, d2, spec);
        case AmalgamationKind::edge:
            return compose_edge(d1, d2, spec);
        case AmalgamationKind::two_vertex:
            return compose_two_vertex(d1, d2, spec);
    }
    throw CompositionError("unknown amalgamation kind");
}

std::string write_composition(const CompositionOutcome& outcome) {
    return write_decomposition(outcome.decomposition,
                               {"composed " + to_string(outcome.bound),
                                "claimed " + std::to_string(outcome.claimed_size),
                                "theta " + std::to_string(outcome.decomposition.nonempty_parts()),
                                "status bounded"});
}

}  // namespace thicklab
