#include "thicklab/planarity.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>

namespace thicklab {

namespace {

constexpr int kNone = -1;

struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
};

struct ConflictPair {
    Interval left;
    Interval right;
    int id = kNone;
    void swap() { std::swap(left, right); }
};

// Rotation bookkeeping while the embedding is assembled. cw/ccw are keyed by
// neighbour; leftmost tracks the first neighbour for insert-first.
class EmbeddingBuilder {
public:
    explicit EmbeddingBuilder(int n) : links_(static_cast<std::size_t>(n)), leftmost_(static_cast<std::size_t>(n), kNone) {}

    // First half-edge out of start.
    void add_first_out(Vertex start, Vertex end) {
        links_[start][end] = {end, end};
        leftmost_[start] = end;
    }

    // Insert end directly counter-clockwise of ref (so ref becomes cw of end).
    void add_ccw_of(Vertex start, Vertex end, Vertex ref) {
        if (links_[start].empty()) {
            add_first_out(start, end);
            return;
        }
        auto& succ = links_[start];
        const Vertex ref_ccw = succ.at(ref).ccw;
        succ[end] = {ref, ref_ccw};
        succ[ref_ccw].cw = end;
        succ[ref].ccw = end;
        if (ref == leftmost_[start]) {
            leftmost_[start] = end;
        }
    }

    // Insert end directly clockwise of ref.
    void add_cw_of(Vertex start, Vertex end, Vertex ref) {
        if (links_[start].empty()) {
            add_first_out(start, end);
            return;
        }
        auto& succ = links_[start];
        const Vertex ref_cw = succ.at(ref).cw;
        succ[end] = {ref_cw, ref};
        succ[ref_cw].ccw = end;
        succ[ref].cw = end;
    }

    void add_first(Vertex start, Vertex end) {
        if (links_[start].empty()) {
            add_first_out(start, end);
        } else {
            add_ccw_of(start, end, leftmost_[start]);
        }
    }

    RotationSystem finish() const {
        RotationSystem rs;
        rs.rotation.resize(links_.size());
        for (std::size_t v = 0; v < links_.size(); ++v) {
            if (links_[v].empty()) {
                continue;
            }
            const Vertex first = leftmost_[v];
            Vertex w = first;
            do {
                rs.rotation[v].push_back(w);
                w = links_[v].at(w).cw;
            } while (w != first);
        }
        return rs;
    }

private:
    struct Link {
        Vertex cw = kNone;
        Vertex ccw = kNone;
    };
    std::vector<std::unordered_map<Vertex, Link>> links_;
    std::vector<Vertex> leftmost_;
};

// Left-right planarity criterion (de Fraysseix–Rosenstiehl, in Brandes'
// formulation). Edges are addressed by index; the DFS orientation fixes
// source/target per edge.
class LeftRightTest {
public:
    LeftRightTest(int n, std::span<const Edge> edges)
        : n_(n),
          m_(static_cast<int>(edges.size())),
          adj_(static_cast<std::size_t>(n)),
          height_(static_cast<std::size_t>(n), kNone),
          parent_edge_(static_cast<std::size_t>(n), kNone),
          out_(static_cast<std::size_t>(n)),
          src_(static_cast<std::size_t>(m_)),
          dst_(static_cast<std::size_t>(m_)),
          oriented_(static_cast<std::size_t>(m_), 0),
          lowpt_(static_cast<std::size_t>(m_)),
          lowpt2_(static_cast<std::size_t>(m_)),
          nesting_(static_cast<std::size_t>(m_)),
          ref_(static_cast<std::size_t>(m_), kNone),
          side_(static_cast<std::size_t>(m_), 1),
          lowpt_edge_(static_cast<std::size_t>(m_), kNone),
          stack_bottom_(static_cast<std::size_t>(m_), kNone) {
        for (int i = 0; i < m_; ++i) {
            adj_[edges[i].u].push_back({edges[i].v, i});
            adj_[edges[i].v].push_back({edges[i].u, i});
        }
    }

    bool run() {
        if (n_ > 2 && m_ > 3 * n_ - 6) {
            return false;
        }
        for (Vertex v = 0; v < n_; ++v) {
            if (height_[v] == kNone) {
                height_[v] = 0;
                roots_.push_back(v);
                orient(v);
            }
        }
        sort_by_nesting();
        for (Vertex r : roots_) {
            if (!test(r)) {
                return false;
            }
        }
        return true;
    }

    // Only valid after run() returned true.
    RotationSystem embedding() {
        for (int e = 0; e < m_; ++e) {
            nesting_[e] *= sign(e);
        }
        sort_by_nesting();
        EmbeddingBuilder emb(n_);
        for (Vertex v = 0; v < n_; ++v) {
            Vertex prev = kNone;
            for (int e : ordered_[v]) {
                const Vertex w = dst_[e];
                if (prev == kNone) {
                    emb.add_first_out(v, w);
                } else {
                    emb.add_cw_of(v, w, prev);
                }
                prev = w;
            }
        }
        left_ref_.assign(static_cast<std::size_t>(n_), kNone);
        right_ref_.assign(static_cast<std::size_t>(n_), kNone);
        for (Vertex r : roots_) {
            embed(r, emb);
        }
        return emb.finish();
    }

private:
    struct Arc {
        Vertex to;
        int edge;
    };

    void orient(Vertex v) {
        const int e = parent_edge_[v];
        for (const auto& [w, id] : adj_[v]) {
            if (oriented_[id]) {
                continue;
            }
            oriented_[id] = 1;
            src_[id] = v;
            dst_[id] = w;
            out_[v].push_back(id);
            lowpt_[id] = height_[v];
            lowpt2_[id] = height_[v];
            if (height_[w] == kNone) {
                parent_edge_[w] = id;
                height_[w] = height_[v] + 1;
                orient(w);
            } else {
                lowpt_[id] = height_[w];
            }
            nesting_[id] = 2 * lowpt_[id];
            if (lowpt2_[id] < height_[v]) {
                nesting_[id] += 1;
            }
            if (e != kNone) {
                if (lowpt_[id] < lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt_[e], lowpt2_[id]);
                    lowpt_[e] = lowpt_[id];
                } else if (lowpt_[id] > lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt_[id]);
                } else {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[id]);
                }
            }
        }
    }

    void sort_by_nesting() {
        ordered_ = out_;
        for (auto& list : ordered_) {
            std::stable_sort(list.begin(), list.end(), [&](int a, int b) { return nesting_[a] < nesting_[b]; });
        }
    }

    int top_id() const { return stack_.empty() ? kNone : stack_.back().id; }

    bool conflicting(const Interval& i, int b) const { return !i.empty() && lowpt_[i.high] > lowpt_[b]; }

    int lowest(const ConflictPair& p) const {
        if (p.left.empty()) {
            return p.right.low == kNone ? INT_MAX : lowpt_[p.right.low];
        }
        if (p.right.empty()) {
            return p.left.low == kNone ? INT_MAX : lowpt_[p.left.low];
        }
        return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
    }

    void push(ConflictPair p) {
        p.id = next_id_++;
        stack_.push_back(p);
    }

    bool test(Vertex v) {
        const int e = parent_edge_[v];
        const auto& children = ordered_[v];
        for (std::size_t i = 0; i < children.size(); ++i) {
            const int ei = children[i];
            const Vertex w = dst_[ei];
            stack_bottom_[ei] = top_id();
            if (ei == parent_edge_[w]) {
                if (!test(w)) {
                    return false;
                }
            } else {
                lowpt_edge_[ei] = ei;
                push(ConflictPair{Interval{}, Interval{ei, ei}});
            }
            if (lowpt_[ei] < height_[v]) {
                if (i == 0) {
                    lowpt_edge_[e] = lowpt_edge_[ei];
                } else if (!add_constraints(ei, e)) {
                    return false;
                }
            }
        }
        if (e != kNone) {
            remove_back_edges(e);
        }
        return true;
    }

    bool add_constraints(int ei, int e) {
        ConflictPair p;
        do {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (!q.left.empty()) {
                q.swap();
            }
            if (!q.left.empty()) {
                return false;
            }
            if (lowpt_[q.right.low] > lowpt_[e]) {
                if (p.right.empty()) {
                    p.right = q.right;
                } else {
                    ref_[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                ref_[q.right.low] = lowpt_edge_[e];
            }
        } while (top_id() != stack_bottom_[ei]);

        while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (conflicting(q.right, ei)) {
                q.swap();
            }
            if (conflicting(q.right, ei)) {
                return false;
            }
            if (p.right.low != kNone) {
                ref_[p.right.low] = q.right.high;
            }
            if (q.right.low != kNone) {
                p.right.low = q.right.low;
            }
            if (p.left.empty()) {
                p.left = q.left;
            } else if (p.left.low != kNone) {
                ref_[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if (!(p.left.empty() && p.right.empty())) {
            push(p);
        }
        return true;
    }

    void remove_back_edges(int e) {
        const Vertex u = src_[e];
        while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
            const ConflictPair p = stack_.back();
            stack_.pop_back();
            if (p.left.low != kNone) {
                side_[p.left.low] = -1;
            }
        }
        if (!stack_.empty()) {
            ConflictPair& p = stack_.back();
            while (p.left.high != kNone && dst_[p.left.high] == u) {
                p.left.high = ref_[p.left.high];
            }
            if (p.left.high == kNone && p.left.low != kNone) {
                ref_[p.left.low] = p.right.low;
                side_[p.left.low] = -1;
                p.left.low = kNone;
            }
            while (p.right.high != kNone && dst_[p.right.high] == u) {
                p.right.high = ref_[p.right.high];
            }
            if (p.right.high == kNone && p.right.low != kNone) {
                ref_[p.right.low] = p.left.low;
                side_[p.right.low] = -1;
                p.right.low = kNone;
            }
        }
        if (lowpt_[e] < height_[u] && !stack_.empty()) {
            const int hl = stack_.back().left.high;
            const int hr = stack_.back().right.high;
            if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) {
                ref_[e] = hl;
            } else {
                ref_[e] = hr;
            }
        }
    }

    int sign(int e) {
        // Resolve the reference chain iteratively.
        std::vector<int> chain;
        int cur = e;
        while (cur != kNone && ref_[cur] != kNone) {
            chain.push_back(cur);
            cur = ref_[cur];
        }
        int s = cur == kNone ? 1 : side_[cur];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            side_[*it] *= s;
            ref_[*it] = kNone;
            s = side_[*it];
        }
        return side_[e];
    }

    void embed(Vertex v, EmbeddingBuilder& emb) {
        for (int ei : ordered_[v]) {
            const Vertex w = dst_[ei];
            if (ei == parent_edge_[w]) {
                emb.add_first(w, v);
                left_ref_[v] = w;
                right_ref_[v] = w;
                embed(w, emb);
            } else if (side_[ei] == 1) {
                emb.add_cw_of(w, v, right_ref_[w]);
            } else {
                emb.add_ccw_of(w, v, left_ref_[w]);
                left_ref_[w] = v;
            }
        }
    }

    int n_;
    int m_;
    std::vector<std::vector<Arc>> adj_;
    std::vector<int> height_;
    std::vector<int> parent_edge_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> ordered_;
    std::vector<Vertex> src_;
    std::vector<Vertex> dst_;
    std::vector<char> oriented_;
    std::vector<int> lowpt_;
    std::vector<int> lowpt2_;
    std::vector<int> nesting_;
    std::vector<int> ref_;
    std::vector<int> side_;
    std::vector<int> lowpt_edge_;
    std::vector<int> stack_bottom_;
    std::vector<ConflictPair> stack_;
    std::vector<Vertex> roots_;
    std::vector<Vertex> left_ref_;
    std::vector<Vertex> right_ref_;
    int next_id_ = 0;
};

// Smallest non-planar graphs have 9 edges (K_{3,3}) or 5 vertices of degree >= 3.
bool trivially_planar(int n, std::size_t m) { return n < 5 || m < 9; }

EdgeList minimal_nonplanar_subset(int n, EdgeList edges) {
    for (std::size_t i = 0; i < edges.size();) {
        EdgeList trial;
        trial.reserve(edges.size() - 1);
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (j != i) {
                trial.push_back(edges[j]);
            }
        }
        if (!planar_edges(n, trial)) {
            edges = std::move(trial);
        } else {
            ++i;
        }
    }
    return edges;
}

}  // namespace

bool planar_edges(int n, std::span<const Edge> edges) {
    if (trivially_planar(n, edges.size())) {
        return true;
    }
    LeftRightTest lr(n, edges);
    return lr.run();
}

PlanarityVerdict is_planar(const Graph& g, Witness witness) {
    PlanarityVerdict verdict;
    LeftRightTest lr(g.order(), g.edges());
    verdict.planar = lr.run();
    if (witness == Witness::full) {
        if (verdict.planar) {
            verdict.embedding = lr.embedding();
        } else {
            verdict.obstruction = minimal_nonplanar_subset(g.order(), g.edges());
        }
    }
    return verdict;
}

int connected_components(int n, std::span<const Edge> edges) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        parent[i] = i;
    }
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    int components = n;
    for (const auto& e : edges) {
        const int a = find(e.u);
        const int b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

int RotationSystem::face_count() const {
    const int n = static_cast<int>(rotation.size());
    // position of each neighbour inside a rotation, for ccw lookups
    std::vector<std::unordered_map<Vertex, std::size_t>> pos(rotation.size());
    EdgeList edges;
    int isolated = 0;
    for (int v = 0; v < n; ++v) {
        if (rotation[v].empty()) {
            ++isolated;
        }
        for (std::size_t i = 0; i < rotation[v].size(); ++i) {
            pos[v][rotation[v][i]] = i;
            if (v < rotation[v][i]) {
                edges.emplace_back(v, rotation[v][i]);
            }
        }
    }
    std::unordered_map<long long, char> seen;
    auto key = [n](Vertex a, Vertex b) { return static_cast<long long>(a) * n + b; };
    int traced = 0;
    for (int v = 0; v < n; ++v) {
        for (Vertex w : rotation[v]) {
            if (seen.count(key(v, w))) {
                continue;
            }
            ++traced;
            Vertex a = v;
            Vertex b = w;
            while (!seen.count(key(a, b))) {
                seen[key(a, b)] = 1;
                const auto& rot = rotation[b];
                const std::size_t i = pos[b].at(a);
                const Vertex next = rot[(i + rot.size() - 1) % rot.size()];
                a = b;
                b = next;
            }
        }
    }
    const int components = connected_components(n, edges);
    return traced + isolated - (components - 1);
}

bool satisfies_euler(const Graph& g, const RotationSystem& embedding) {
    if (embedding.rotation.size() != static_cast<std::size_t>(g.order())) {
        return false;
    }
    const auto adj = g.adjacency();
    for (int v = 0; v < g.order(); ++v) {
        auto expected = adj[v];
        auto actual = embedding.rotation[v];
        std::sort(expected.begin(), expected.end());
        std::sort(actual.begin(), actual.end());
        if (expected != actual) {
            return false;
        }
    }
    const int components = connected_components(g.order(), g.edges());
    const long long lhs =
        static_cast<long long>(embedding.face_count()) - static_cast<long long>(g.size()) + g.order();
    return lhs == 1 + components;
}

PlanaritySession::PlanaritySession(int n)
    : n_(n), adj_(static_cast<std::size_t>(n)), touched_(static_cast<std::size_t>(n), 0),
      mark_(static_cast<std::size_t>(n), 0) {
    if (n < 0) {
        throw GraphError("negative vertex count");
    }
}

PlanaritySession::PlanaritySession(const Graph& planar_graph) : PlanaritySession(planar_graph.order()) {
    if (!planar_edges(planar_graph.order(), planar_graph.edges())) {
        throw GraphError("planarity session must start from a planar graph");
    }
    for (const auto& e : planar_graph.edges()) {
        edges_.push_back(e);
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
        active_vertices_ += (touched_[e.u]++ == 0) + (touched_[e.v]++ == 0);
    }
}

bool PlanaritySession::contains(const Edge& e) const {
    return std::find(adj_[e.u].begin(), adj_[e.u].end(), e.v) != adj_[e.u].end();
}

bool PlanaritySession::same_component(Vertex u, Vertex v) const {
    if (++stamp_ == INT_MAX) {
        std::fill(mark_.begin(), mark_.end(), 0);
        stamp_ = 1;
    }
    std::vector<Vertex> stack{u};
    mark_[u] = stamp_;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : adj_[x]) {
            if (y == v) {
                return true;
            }
            if (mark_[y] != stamp_) {
                mark_[y] = stamp_;
                stack.push_back(y);
            }
        }
    }
    return false;
}

bool PlanaritySession::try_add(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
    }
    if (u == v) {
        throw GraphError("self-loop at vertex " + std::to_string(u));
    }
    const Edge e(u, v);
    if (contains(e)) {
        throw GraphError("edge " + to_string(e) + " already in session");
    }
    const int active = active_vertices_ + (touched_[u] == 0) + (touched_[v] == 0);
    const auto m = edges_.size() + 1;
    bool ok = true;
    if (active >= 3 && m > static_cast<std::size_t>(3 * active - 6)) {
        ok = false;
    } else if (m >= 9 && same_component(u, v)) {
        edges_.push_back(e);
        ok = planar_edges(n_, edges_);
        edges_.pop_back();
    }
    if (ok) {
        edges_.push_back(e);
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
        active_vertices_ = active;
        ++touched_[u];
        ++touched_[v];
    }
    return ok;
}

void PlanaritySession::pop() {
    if (edges_.empty()) {
        throw std::logic_error("pop on empty planarity session");
    }
    const Edge e = edges_.back();
    edges_.pop_back();
    adj_[e.u].pop_back();
    adj_[e.v].pop_back();
    active_vertices_ -= (--touched_[e.u] == 0) + (--touched_[e.v] == 0);
}

}  // namespace thicklab
