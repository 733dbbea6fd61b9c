#include "thicklab/graph_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace thicklab {

namespace {

constexpr int kBias = 63;
constexpr std::size_t kMaxShortOrder = 62;
constexpr std::size_t kMaxMediumOrder = 258047;
constexpr std::size_t kMaxLongOrder = 68719476735ULL;

bool is_graph6_char(char c) { return c >= 63 && c <= 126; }

}  // namespace

std::string emit_graph6(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::string out;
    if (n <= kMaxShortOrder) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= kMaxMediumOrder) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
        }
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
        }
    }

    // Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<unsigned char> packed((bits + 5) / 6, 0);
    for (const auto& e : g.edges()) {
        const auto j = static_cast<std::size_t>(e.v);
        const auto i = static_cast<std::size_t>(e.u);
        const std::size_t k = j * (j - 1) / 2 + i;
        packed[k / 6] |= static_cast<unsigned char>(1u << (5 - k % 6));
    }
    for (auto b : packed) {
        out.push_back(static_cast<char>(b + kBias));
    }
    return out;
}

Graph parse_graph6(std::string_view text) {
    if (!text.empty() && text.back() == '\n') {
        text.remove_suffix(1);
    }
    if (!text.empty() && text.back() == '\r') {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw ParseError("empty graph6 input", 0);
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!is_graph6_char(text[i])) {
            throw ParseError("character outside graph6 range", i);
        }
    }

    std::size_t pos = 0;
    std::size_t n = 0;
    auto read_digits = [&](std::size_t count) {
        if (text.size() < pos + count) {
            throw ParseError("truncated graph6 length header", text.size());
        }
        std::size_t value = 0;
        for (std::size_t i = 0; i < count; ++i) {
            value = (value << 6) | static_cast<std::size_t>(text[pos++] - kBias);
        }
        return value;
    };
    if (text[0] != '~') {
        n = static_cast<std::size_t>(text[0] - kBias);
        pos = 1;
    } else if (text.size() > 1 && text[1] == '~') {
        pos = 2;
        n = read_digits(6);
        if (n <= kMaxMediumOrder || n > kMaxLongOrder) {
            throw ParseError("non-canonical graph6 length header", 0);
        }
    } else {
        pos = 1;
        n = read_digits(3);
        if (n <= kMaxShortOrder) {
            throw ParseError("non-canonical graph6 length header", 0);
        }
    }
    if (n > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
        throw ParseError("graph6 vertex count too large", 0);
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() < pos + bytes) {
        throw ParseError("truncated graph6 edge data", text.size());
    }
    if (text.size() > pos + bytes) {
        throw ParseError("trailing data after graph6 edge data", pos + bytes);
    }

    EdgeList es;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const auto byte = static_cast<unsigned>(text[pos + k / 6] - kBias);
            if (byte & (1u << (5 - k % 6))) {
                es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    if (bits % 6 != 0) {
        const auto last = static_cast<unsigned>(text[pos + bytes - 1] - kBias);
        const unsigned pad_mask = (1u << (6 - bits % 6)) - 1;
        if (last & pad_mask) {
            throw ParseError("non-zero graph6 padding bits", pos + bytes - 1);
        }
    }
    return Graph(static_cast<int>(n), std::move(es));
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_data_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++line_no;
            const auto first = out.find_first_not_of(" \t\r");
            if (first == std::string::npos || out[first] == '#') {
                continue;
            }
            return true;
        }
        return false;
    };
    auto parse_pair = [&](const std::string& s, long long& a, long long& b) {
        std::istringstream ls(s);
        std::string rest;
        if (!(ls >> a >> b) || (ls >> rest)) {
            throw ParseError("expected two integers", line_no);
        }
    };

    if (!next_data_line(line)) {
        throw ParseError("empty edge list", 0);
    }
    long long n = 0;
    long long m = 0;
    parse_pair(line, n, m);
    if (n < 0 || m < 0 || n > std::numeric_limits<int>::max()) {
        throw ParseError("invalid edge list header", line_no);
    }
    EdgeList es;
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(line)) {
            throw ParseError("edge list ends after " + std::to_string(i) + " of " + std::to_string(m) + " edges",
                             line_no);
        }
        long long u = 0;
        long long v = 0;
        parse_pair(line, u, v);
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError("edge endpoint out of range", line_no);
        }
        if (u == v) {
            throw ParseError("self-loop", line_no);
        }
        es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_data_line(line)) {
        throw ParseError("trailing data after edge list", line_no);
    }
    try {
        return Graph(static_cast<int>(n), std::move(es));
    } catch (const GraphError& e) {
        throw ParseError(e.what(), line_no);
    }
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ls(line);
        long long a = 0;
        long long b = 0;
        std::string rest;
        if ((ls >> a >> b) && !(ls >> rest)) {
            std::istringstream all(text);
            return parse_edge_list(all);
        }
        const auto last = line.find_last_not_of(" \t\r");
        return parse_graph6(std::string_view(line).substr(first, last - first + 1));
    }
    throw ParseError("no graph found in input", 0);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph read_graph_file(const std::string& path) { return parse_graph_text(read_text_file(path)); }

}  // namespace thicklab
