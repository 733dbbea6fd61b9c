#include "thicklab/thickness.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "thicklab/planarity.hpp"

namespace thicklab {

std::size_t PlanarDecomposition::nonempty_parts() const {
    return static_cast<std::size_t>(
        std::count_if(parts.begin(), parts.end(), [](const EdgeList& p) { return !p.empty(); }));
}

PlanarDecomposition PlanarDecomposition::compacted() const {
    PlanarDecomposition d{base, {}};
    for (const auto& p : parts) {
        if (!p.empty()) {
            d.parts.push_back(p);
        }
    }
    return d;
}

bool DecompositionReport::valid() const {
    return complete && disjoint && within_base &&
           std::all_of(part_planar.begin(), part_planar.end(), [](bool b) { return b; });
}

std::string DecompositionReport::summary() const {
    std::ostringstream out;
    out << (valid() ? "valid" : "invalid") << ": " << nonempty_parts << " non-empty part(s), " << empty_parts
        << " empty";
    if (!missing.empty()) {
        out << "; " << missing.size() << " uncovered edge(s), first " << to_string(missing.front());
    }
    if (!repeated.empty()) {
        out << "; " << repeated.size() << " repeated edge(s), first " << to_string(repeated.front());
    }
    if (!foreign.empty()) {
        out << "; " << foreign.size() << " edge(s) outside the base graph, first " << to_string(foreign.front());
    }
    for (std::size_t i = 0; i < part_planar.size(); ++i) {
        if (!part_planar[i]) {
            out << "; part " << i << " non-planar";
        }
    }
    return out.str();
}

DecompositionReport validate_decomposition(const PlanarDecomposition& d) {
    DecompositionReport r;
    std::set<Edge> seen;
    const int n = d.base.order();
    for (const auto& part : d.parts) {
        if (part.empty()) {
            ++r.empty_parts;
        } else {
            ++r.nonempty_parts;
        }
        EdgeList usable;
        std::set<Edge> in_part;
        for (const auto& e : part) {
            const bool in_range = e.u >= 0 && e.v < n && e.u != e.v;
            if (!in_range || !d.base.has_edge(e)) {
                r.within_base = false;
                r.foreign.push_back(e);
            }
            if (!seen.insert(e).second) {
                r.disjoint = false;
                r.repeated.push_back(e);
            }
            if (in_range && in_part.insert(e).second) {
                usable.push_back(e);
            }
        }
        r.part_planar.push_back(planar_edges(n, usable));
    }
    for (const auto& e : d.base.edges()) {
        if (!seen.count(e)) {
            r.complete = false;
            r.missing.push_back(e);
        }
    }
    return r;
}

int euler_lower_bound(const Graph& g) {
    const auto m = static_cast<long long>(g.size());
    if (m == 0) {
        return 0;
    }
    const long long n = g.order();
    if (n < 3) {
        return 1;
    }
    const long long cap = 3 * n - 6;
    return static_cast<int>((m + cap - 1) / cap);
}

std::string to_string(LowerBoundKind kind) {
    switch (kind) {
        case LowerBoundKind::planar_check:
            return "planar-check";
        case LowerBoundKind::euler:
            return "euler";
        case LowerBoundKind::exhaustion:
            return "exhaustion";
    }
    return "?";
}

std::string to_string(CertificateStatus status) {
    return status == CertificateStatus::exact ? "exact" : "bounded";
}

LowerBoundKind parse_lower_bound_kind(const std::string& s) {
    if (s == "planar-check") {
        return LowerBoundKind::planar_check;
    }
    if (s == "euler") {
        return LowerBoundKind::euler;
    }
    if (s == "exhaustion") {
        return LowerBoundKind::exhaustion;
    }
    throw std::invalid_argument("unknown lower bound kind '" + s + "'");
}

CertificateStatus parse_certificate_status(const std::string& s) {
    if (s == "exact") {
        return CertificateStatus::exact;
    }
    if (s == "bounded") {
        return CertificateStatus::bounded;
    }
    throw std::invalid_argument("unknown certificate status '" + s + "'");
}

EdgeList solver_edge_order(const Graph& g) {
    const auto deg = g.degrees();
    EdgeList order = g.edges();
    std::stable_sort(order.begin(), order.end(), [&](const Edge& a, const Edge& b) {
        return deg[a.u] + deg[a.v] > deg[b.u] + deg[b.v];
    });
    return order;
}

namespace {

class BudgetExhausted {};

// Decides whether the ordered edges split into at most k planar classes.
class PartitionSearch {
public:
    PartitionSearch(const Graph& g, const EdgeList& order, int k, const Budget& budget, std::int64_t& nodes,
                    std::chrono::steady_clock::time_point deadline)
        : order_(order), k_(k), budget_(budget), nodes_(nodes), deadline_(deadline) {
        int active = 0;
        for (int d : g.degrees()) {
            active += d > 0;
        }
        capacity_ = active >= 3 ? 3 * active - 6 : (active == 2 ? 1 : 0);
        for (int c = 0; c < k; ++c) {
            classes_.emplace_back(g.order());
        }
    }

    // Throws BudgetExhausted when the node or time budget runs out.
    bool run() { return assign(0); }

    std::vector<EdgeList> parts() const {
        std::vector<EdgeList> out;
        for (const auto& s : classes_) {
            EdgeList p = s.edges();
            std::sort(p.begin(), p.end());
            out.push_back(std::move(p));
        }
        return out;
    }

private:
    void charge() {
        if (nodes_ >= budget_.nodes) {
            throw BudgetExhausted{};
        }
        ++nodes_;
        if ((nodes_ & 0x3FF) == 0 && std::chrono::steady_clock::now() > deadline_) {
            throw BudgetExhausted{};
        }
    }

    bool assign(std::size_t i) {
        if (i == order_.size()) {
            return true;
        }
        long long room = static_cast<long long>(k_ - used_) * capacity_;
        for (int c = 0; c < used_; ++c) {
            room += capacity_ - static_cast<long long>(classes_[c].size());
        }
        if (static_cast<long long>(order_.size() - i) > room) {
            return false;
        }
        // A new class may only be opened when every earlier class is in use.
        const int limit = std::min(used_ + 1, k_);
        for (int c = 0; c < limit; ++c) {
            charge();
            if (static_cast<long long>(classes_[c].size()) >= capacity_ || !classes_[c].try_add(order_[i])) {
                continue;
            }
            const bool opened = c == used_;
            used_ += opened;
            if (assign(i + 1)) {
                return true;
            }
            classes_[c].pop();
            used_ -= opened;
        }
        return false;
    }

    const EdgeList& order_;
    int k_;
    const Budget& budget_;
    std::int64_t& nodes_;
    std::chrono::steady_clock::time_point deadline_;
    long long capacity_ = 0;
    int used_ = 0;
    std::vector<PlanaritySession> classes_;
};

LowerBoundKind lower_bound_kind_for(int k, int euler) {
    if (k <= euler || k <= 1) {
        return LowerBoundKind::euler;
    }
    return k == 2 ? LowerBoundKind::planar_check : LowerBoundKind::exhaustion;
}

}  // namespace

ThicknessCertificate exact_thickness(const Graph& g, const Budget& budget) {
    if (budget.nodes <= 0 || !(budget.seconds > 0.0)) {
        throw BudgetError("solver budget must be positive");
    }
    ThicknessCertificate cert;
    cert.witness.base = g;
    const int euler = euler_lower_bound(g);
    if (g.size() == 0) {
        cert.lower_bound_kind = LowerBoundKind::euler;
        return cert;
    }

    const auto deadline =
        std::chrono::steady_clock::now() +
        std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(budget.seconds));
    const EdgeList order = solver_edge_order(g);
    for (int k = std::max(euler, 1);; ++k) {
        PartitionSearch search(g, order, k, budget, cert.nodes, deadline);
        bool found = false;
        try {
            found = search.run();
        } catch (const BudgetExhausted&) {
            PlanarDecomposition upper = heuristic_thickness(g);
            cert.value = static_cast<int>(upper.parts.size());
            cert.witness = std::move(upper);
            cert.lower_bound = k;
            cert.lower_bound_kind = lower_bound_kind_for(k, euler);
            cert.status = cert.value == k ? CertificateStatus::exact : CertificateStatus::bounded;
            return cert;
        }
        if (found) {
            cert.value = k;
            cert.lower_bound = k;
            cert.lower_bound_kind = lower_bound_kind_for(k, euler);
            cert.witness.parts = search.parts();
            cert.status = CertificateStatus::exact;
            return cert;
        }
    }
}

PlanarDecomposition heuristic_thickness(const Graph& g) {
    PlanarDecomposition d{g, {}};
    EdgeList remaining = solver_edge_order(g);
    while (!remaining.empty()) {
        PlanaritySession session(g.order());
        EdgeList rejected;
        for (const auto& e : remaining) {
            if (!session.try_add(e)) {
                rejected.push_back(e);
            }
        }
        EdgeList part = session.edges();
        std::sort(part.begin(), part.end());
        d.parts.push_back(std::move(part));
        remaining = std::move(rejected);
    }
    return d;
}

int thickness_oracle(GraphFamily family, std::span<const int> params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count) {
            throw GraphError("wrong number of family parameters");
        }
    };
    switch (family) {
        case GraphFamily::complete: {
            need(1);
            const int n = params[0];
            if (n < 1) {
                throw GraphError("complete graph order must be positive");
            }
            if (n == 1) {
                return 0;
            }
            if (n == 9 || n == 10) {
                return 3;
            }
            return (n + 7) / 6;
        }
        case GraphFamily::complete_bipartite: {
            need(2);
            const long long m = params[0];
            const long long n = params[1];
            if (m < 1 || n < 1) {
                throw GraphError("complete bipartite parts must be non-empty");
            }
            if (std::min(m, n) > 6) {
                throw GraphError("complete bipartite oracle is only defended for min(m, n) <= 6");
            }
            if (m + n == 2) {
                return 1;
            }
            const long long num = m * n;
            const long long den = 2 * (m + n - 2);
            return static_cast<int>((num + den - 1) / den);
        }
        case GraphFamily::hypercube: {
            need(1);
            const int d = params[0];
            if (d < 0 || d > 10) {
                throw GraphError("hypercube dimension must be in [0, 10]");
            }
            if (d == 0) {
                return 0;
            }
            return (d + 1 + 3) / 4;
        }
    }
    throw GraphError("unknown graph family");
}

}  // namespace thicklab
