#include "thicklab/verify.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "thicklab/composer.hpp"
#include "thicklab/graph_io.hpp"

namespace thicklab {

namespace {

constexpr const char* kColumns[] = {"index",       "kind",        "g1",          "g2",          "spec",
                                    "theta1",      "theta2",      "status1",     "status2",     "composed",
                                    "theta_lower", "theta_upper", "status",      "bound_lower", "bound_upper",
                                    "lower",       "upper",       "composition", "nodes"};

Graph random_operand(std::mt19937_64& rng, int max_vertices, int max_edges, bool need_edge) {
    const int lo = std::min(5, max_vertices);
    const int n = lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_vertices - lo + 1)));
    const int pairs = n * (n - 1) / 2;
    // Dense end of the range, where thickness 2 is common.
    int m = std::min(max_edges, pairs);
    m -= static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(std::min(m, 4) + 1)));
    if (need_edge) {
        m = std::max(m, 1);
    }
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            all.emplace_back(u, v);
        }
    }
    for (int i = 0; i < m; ++i) {
        const auto j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(pairs - i)));
        std::swap(all[i], all[j]);
    }
    all.resize(m);
    return Graph(n, all);
}

std::vector<Graph> fixtures(int max_vertices, int max_edges) {
    std::vector<Graph> out;
    for (const auto& g : {make_complete(5), make_complete_bipartite(3, 3), make_complete(6),
                          make_complete(5).without_edge({0, 1}), make_complete(4)}) {
        if (g.order() <= max_vertices && static_cast<int>(g.size()) <= max_edges) {
            out.push_back(g);
        }
    }
    return out;
}

bool is_complete(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    return g.size() == n * (n - 1) / 2;
}

Vertex random_vertex(std::mt19937_64& rng, const Graph& g) {
    return static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(g.order())));
}

AmalgamationSpec random_spec(std::mt19937_64& rng, AmalgamationKind kind, const Graph& g1, const Graph& g2) {
    switch (kind) {
        case AmalgamationKind::vertex:
            return AmalgamationSpec::vertex(random_vertex(rng, g1), random_vertex(rng, g2));
        case AmalgamationKind::bar:
            return AmalgamationSpec::bar(random_vertex(rng, g1), random_vertex(rng, g2));
        case AmalgamationKind::edge: {
            const auto a = g1.edges()[uniform_below(rng, g1.size())];
            const auto b = g2.edges()[uniform_below(rng, g2.size())];
            return uniform_below(rng, 2) ? AmalgamationSpec::edge(a.u, a.v, b.v, b.u)
                                         : AmalgamationSpec::edge(a.u, a.v, b.u, b.v);
        }
        case AmalgamationKind::two_vertex:
            while (true) {
                const auto v1 = random_vertex(rng, g1);
                const auto u1 = random_vertex(rng, g1);
                const auto v2 = random_vertex(rng, g2);
                const auto u2 = random_vertex(rng, g2);
                if (v1 != u1 && v2 != u2 && !(g1.has_edge(v1, u1) && g2.has_edge(v2, u2))) {
                    return AmalgamationSpec::two_vertex(v1, u1, v2, u2);
                }
            }
    }
    throw CampaignError("unknown amalgamation kind");
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

int to_int(const std::string& s) {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument("bad integer '" + s + "'");
    }
    return static_cast<int>(v);
}

}  // namespace

std::string to_string(Check c) {
    switch (c) {
        case Check::pass:
            return "pass";
        case Check::fail:
            return "fail";
        case Check::skip:
            return "skip";
    }
    return "?";
}

Check parse_check(const std::string& s) {
    if (s == "pass") {
        return Check::pass;
    }
    if (s == "fail") {
        return Check::fail;
    }
    if (s == "skip") {
        return Check::skip;
    }
    throw std::invalid_argument("unknown check value '" + s + "'");
}

bool VerificationReport::verified() const {
    return status1 == CertificateStatus::exact && status2 == CertificateStatus::exact &&
           status == CertificateStatus::exact && lower == Check::pass && upper == Check::pass &&
           composition == Check::pass;
}

bool VerificationReport::passed() const {
    return lower != Check::fail && upper != Check::fail && composition != Check::fail;
}

void recompute_flags(VerificationReport& r) {
    r.bound_lower = bound_lower(r.kind, r.theta1, r.theta2);
    r.bound_upper = bound_upper(r.kind, r.theta1, r.theta2);
    if (r.status1 != CertificateStatus::exact || r.status2 != CertificateStatus::exact) {
        // Operand values are only upper bounds, so the amalgam bounds are unknown.
        r.lower = r.upper = r.composition = Check::skip;
        return;
    }
    r.lower = r.theta_lower >= r.bound_lower ? Check::pass
              : r.theta_upper < r.bound_lower ? Check::fail
                                               : Check::skip;
    r.upper = r.theta_upper <= r.bound_upper ? Check::pass
              : r.theta_lower > r.bound_upper ? Check::fail
                                               : Check::skip;
    r.composition = r.theta_lower <= r.composed && r.composed <= r.bound_upper ? Check::pass : Check::fail;
}

VerificationReport check_instance(const Graph& g1, const Graph& g2, const AmalgamationSpec& spec,
                                  const Budget& budget) {
    VerificationReport r;
    r.kind = spec.kind;
    r.g1 = emit_graph6(g1);
    r.g2 = emit_graph6(g2);
    r.spec = to_string(spec);

    const auto c1 = exact_thickness(g1, budget);
    const auto c2 = exact_thickness(g2, budget);
    r.theta1 = c1.value;
    r.theta2 = c2.value;
    r.status1 = c1.status;
    r.status2 = c2.status;

    const auto outcome = compose(c1.witness, c2.witness, spec);
    r.composed = static_cast<int>(outcome.decomposition.nonempty_parts());

    const auto c = exact_thickness(outcome.amalgam.graph, budget);
    r.status = c.status;
    r.theta_upper = c.value;
    r.theta_lower = c.exact() ? c.value : c.lower_bound;
    r.nodes = c1.nodes + c2.nodes + c.nodes;
    recompute_flags(r);
    return r;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below needs a positive bound");
    }
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit) {
        x = rng();
    }
    return x % bound;
}

std::vector<CampaignInstance> campaign_instances(const CampaignConfig& config) {
    if (config.count < 0) {
        throw CampaignError("instance count must be non-negative");
    }
    if (config.max_vertices < 2) {
        throw CampaignError("operands need at least two vertices");
    }
    if (config.max_edges < 0) {
        throw CampaignError("edge cap must be non-negative");
    }
    if (config.kind == AmalgamationKind::edge && config.max_edges < 1) {
        throw CampaignError("edge amalgamation needs operands with at least one edge");
    }
    if (config.budget.nodes <= 0 || !(config.budget.seconds > 0.0)) {
        throw CampaignError("solver budget must be positive");
    }

    std::mt19937_64 rng(config.seed);
    const auto curated = fixtures(config.max_vertices, config.max_edges);
    const bool need_edge = config.kind == AmalgamationKind::edge;
    auto operand = [&](int i) {
        // every fourth instance draws from the curated fixtures
        if (!curated.empty() && i % 4 == 0) {
            return curated[uniform_below(rng, curated.size())];
        }
        return random_operand(rng, config.max_vertices, config.max_edges, need_edge);
    };

    std::vector<CampaignInstance> out;
    for (int i = 0; i < config.count; ++i) {
        Graph g1 = operand(i);
        Graph g2 = operand(i + 1);
        for (int tries = 0; config.kind == AmalgamationKind::two_vertex && is_complete(g1) && is_complete(g2);
             ++tries) {
            if (tries == 1000) {
                throw CampaignError("cannot draw a two-vertex amalgamation pair within the size caps");
            }
            g2 = random_operand(rng, config.max_vertices, config.max_edges, false);
        }
        auto spec = random_spec(rng, config.kind, g1, g2);
        out.push_back({std::move(g1), std::move(g2), spec});
    }
    return out;
}

std::vector<VerificationReport> run_campaign(const CampaignConfig& config) {
    std::vector<VerificationReport> reports;
    const auto instances = campaign_instances(config);
    for (std::size_t i = 0; i < instances.size(); ++i) {
        auto r = check_instance(instances[i].g1, instances[i].g2, instances[i].spec, config.budget);
        r.index = static_cast<int>(i);
        reports.push_back(std::move(r));
    }
    return reports;
}

bool campaign_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed(); });
}

std::string csv_header() {
    std::string out;
    for (const char* c : kColumns) {
        out += out.empty() ? "" : ",";
        out += c;
    }
    return out;
}

std::string to_csv_row(const VerificationReport& r) {
    std::ostringstream out;
    out << r.index << ',' << to_string(r.kind) << ',' << r.g1 << ',' << r.g2 << ',' << r.spec << ',' << r.theta1
        << ',' << r.theta2 << ',' << to_string(r.status1) << ',' << to_string(r.status2) << ',' << r.composed << ','
        << r.theta_lower << ',' << r.theta_upper << ',' << to_string(r.status) << ',' << r.bound_lower << ','
        << r.bound_upper << ',' << to_string(r.lower) << ',' << to_string(r.upper) << ','
        << to_string(r.composition) << ',' << r.nodes;
    return out.str();
}

std::string to_json_line(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["index"] = r.index;
    j["kind"] = to_string(r.kind);
    j["g1"] = r.g1;
    j["g2"] = r.g2;
    j["spec"] = r.spec;
    j["theta1"] = r.theta1;
    j["theta2"] = r.theta2;
    j["status1"] = to_string(r.status1);
    j["status2"] = to_string(r.status2);
    j["composed"] = r.composed;
    j["theta_lower"] = r.theta_lower;
    j["theta_upper"] = r.theta_upper;
    j["status"] = to_string(r.status);
    j["bound_lower"] = r.bound_lower;
    j["bound_upper"] = r.bound_upper;
    j["lower"] = to_string(r.lower);
    j["upper"] = to_string(r.upper);
    j["composition"] = to_string(r.composition);
    j["nodes"] = r.nodes;
    return j.dump();
}

std::string write_reports(const std::vector<VerificationReport>& reports, const std::string& format) {
    std::string out;
    if (format == "csv") {
        out = csv_header() + "\n";
        for (const auto& r : reports) {
            out += to_csv_row(r) + "\n";
        }
    } else if (format == "jsonl") {
        for (const auto& r : reports) {
            out += to_json_line(r) + "\n";
        }
    } else {
        throw std::invalid_argument("unknown report format '" + format + "'");
    }
    return out;
}

std::vector<VerificationReport> read_reports(const std::string& text, const std::string& format) {
    std::vector<VerificationReport> out;
    std::istringstream in(text);
    std::string line;
    if (format == "csv") {
        if (!std::getline(in, line) || line != csv_header()) {
            throw std::invalid_argument("report CSV header mismatch");
        }
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            const auto f = split(line, ',');
            if (f.size() != std::size(kColumns)) {
                throw std::invalid_argument("report CSV row has " + std::to_string(f.size()) + " fields");
            }
            VerificationReport r;
            r.index = to_int(f[0]);
            r.kind = parse_amalgamation_kind(f[1]);
            r.g1 = f[2];
            r.g2 = f[3];
            r.spec = f[4];
            r.theta1 = to_int(f[5]);
            r.theta2 = to_int(f[6]);
            r.status1 = parse_certificate_status(f[7]);
            r.status2 = parse_certificate_status(f[8]);
            r.composed = to_int(f[9]);
            r.theta_lower = to_int(f[10]);
            r.theta_upper = to_int(f[11]);
            r.status = parse_certificate_status(f[12]);
            r.bound_lower = to_int(f[13]);
            r.bound_upper = to_int(f[14]);
            r.lower = parse_check(f[15]);
            r.upper = parse_check(f[16]);
            r.composition = parse_check(f[17]);
            r.nodes = std::stoll(f[18]);
            out.push_back(std::move(r));
        }
    } else if (format == "jsonl") {
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            const auto j = nlohmann::json::parse(line);
            VerificationReport r;
            r.index = j.at("index").get<int>();
            r.kind = parse_amalgamation_kind(j.at("kind").get<std::string>());
            r.g1 = j.at("g1").get<std::string>();
            r.g2 = j.at("g2").get<std::string>();
            r.spec = j.at("spec").get<std::string>();
            r.theta1 = j.at("theta1").get<int>();
            r.theta2 = j.at("theta2").get<int>();
            r.status1 = parse_certificate_status(j.at("status1").get<std::string>());
            r.status2 = parse_certificate_status(j.at("status2").get<std::string>());
            r.composed = j.at("composed").get<int>();
            r.theta_lower = j.at("theta_lower").get<int>();
            r.theta_upper = j.at("theta_upper").get<int>();
            r.status = parse_certificate_status(j.at("status").get<std::string>());
            r.bound_lower = j.at("bound_lower").get<int>();
            r.bound_upper = j.at("bound_upper").get<int>();
            r.lower = parse_check(j.at("lower").get<std::string>());
            r.upper = parse_check(j.at("upper").get<std::string>());
            r.composition = parse_check(j.at("composition").get<std::string>());
            r.nodes = j.at("nodes").get<std::int64_t>();
            out.push_back(std::move(r));
        }
    } else {
        throw std::invalid_argument("unknown report format '" + format + "'");
    }
    return out;
}

}  // namespace thicklab
