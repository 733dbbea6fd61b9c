#include "thicklab/certificate_io.hpp"

#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "thicklab/graph_io.hpp"

namespace thicklab {

namespace {

struct LineReader {
    std::istringstream in;
    std::size_t line_no = 0;

    explicit LineReader(std::string_view text) : in(std::string(text)) {}

    // Next non-blank line; header comments are collected by the caller.
    bool next(std::string& line) {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (line.find_first_not_of(" \t") != std::string::npos) {
                return true;
            }
        }
        return false;
    }
};

long long expect_keyword(LineReader& r, const std::string& keyword) {
    std::string line;
    if (!r.next(line)) {
        throw ParseError("expected '" + keyword + "'", r.line_no);
    }
    std::istringstream ls(line);
    std::string word;
    long long value = 0;
    std::string rest;
    if (!(ls >> word >> value) || word != keyword || (ls >> rest)) {
        throw ParseError("expected '" + keyword + " <count>'", r.line_no);
    }
    if (value < 0) {
        throw ParseError("negative count", r.line_no);
    }
    return value;
}

DecompositionText read_body(std::string_view text, const std::optional<Graph>& base) {
    LineReader r(text);
    DecompositionText out;
    std::string line;
    std::streampos body_start = 0;
    std::size_t body_line = 0;
    while (true) {
        body_start = r.in.tellg();
        body_line = r.line_no;
        if (!r.next(line)) {
            throw ParseError("missing decomposition body", r.line_no);
        }
        const auto first = line.find_first_not_of(" \t");
        if (line[first] != '#') {
            break;
        }
        std::string h = line.substr(first + 1);
        if (!h.empty() && h.front() == ' ') {
            h.erase(0, 1);
        }
        out.header.push_back(h);
    }
    r.in.clear();
    r.in.seekg(body_start);
    r.line_no = body_line;

    const long long n = expect_keyword(r, "n");
    const long long k = expect_keyword(r, "k");
    if (n > std::numeric_limits<int>::max()) {
        throw ParseError("vertex count too large", r.line_no);
    }
    std::vector<EdgeList> parts;
    std::set<Edge> all;
    for (long long p = 0; p < k; ++p) {
        const long long count = expect_keyword(r, "part");
        EdgeList part;
        for (long long i = 0; i < count; ++i) {
            if (!r.next(line)) {
                throw ParseError("part ends early", r.line_no);
            }
            std::istringstream ls(line);
            long long u = 0;
            long long v = 0;
            std::string rest;
            if (!(ls >> u >> v) || (ls >> rest)) {
                throw ParseError("expected an edge '<u> <v>'", r.line_no);
            }
            if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
                throw ParseError("invalid edge", r.line_no);
            }
            const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
            part.push_back(e);
            all.insert(e);
        }
        parts.push_back(std::move(part));
    }
    if (r.next(line)) {
        throw ParseError("trailing data after decomposition", r.line_no);
    }
    if (base) {
        if (base->order() != n) {
            throw ParseError("decomposition order " + std::to_string(n) + " does not match base graph order " +
                                 std::to_string(base->order()),
                             0);
        }
        out.decomposition.base = *base;
    } else {
        out.decomposition.base = Graph(static_cast<int>(n), EdgeList(all.begin(), all.end()));
    }
    out.decomposition.parts = std::move(parts);
    return out;
}

}  // namespace

std::string write_decomposition(const PlanarDecomposition& d, const std::vector<std::string>& header) {
    std::ostringstream out;
    for (const auto& h : header) {
        out << "# " << h << '\n';
    }
    out << "n " << d.base.order() << '\n';
    out << "k " << d.parts.size() << '\n';
    for (const auto& part : d.parts) {
        out << "part " << part.size() << '\n';
        for (const auto& e : part) {
            out << e.u << ' ' << e.v << '\n';
        }
    }
    return out.str();
}

DecompositionText read_decomposition(std::string_view text) { return read_body(text, std::nullopt); }

DecompositionText read_decomposition(std::string_view text, const Graph& base) { return read_body(text, base); }

std::string write_certificate(const ThicknessCertificate& c) {
    return write_decomposition(c.witness, {
                                              "theta " + std::to_string(c.value),
                                              "status " + to_string(c.status),
                                              "lower-bound " + std::to_string(c.lower_bound) + " " +
                                                  to_string(c.lower_bound_kind),
                                              "nodes " + std::to_string(c.nodes),
                                          });
}

ThicknessCertificate read_certificate(std::string_view text) {
    auto parsed = read_decomposition(text);
    ThicknessCertificate c;
    c.witness = std::move(parsed.decomposition);
    c.value = static_cast<int>(c.witness.nonempty_parts());
    bool have_theta = false;
    for (const auto& h : parsed.header) {
        std::istringstream ls(h);
        std::string key;
        ls >> key;
        if (key == "theta") {
            ls >> c.value;
            have_theta = true;
        } else if (key == "status") {
            std::string s;
            ls >> s;
            c.status = parse_certificate_status(s);
        } else if (key == "lower-bound") {
            std::string kind;
            ls >> c.lower_bound >> kind;
            c.lower_bound_kind = parse_lower_bound_kind(kind);
        } else if (key == "nodes") {
            ls >> c.nodes;
        }
    }
    if (!have_theta) {
        throw ParseError("certificate has no theta header", 0);
    }
    return c;
}

bool looks_like_decomposition(std::string_view text) {
    LineReader r(text);
    std::string line;
    while (r.next(line)) {
        const auto first = line.find_first_not_of(" \t");
        if (line[first] == '#') {
            continue;
        }
        return line.compare(first, 2, "n ") == 0;
    }
    return false;
}

}  // namespace thicklab
