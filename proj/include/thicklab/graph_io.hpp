#ifndef THICKLAB_GRAPH_IO_HPP
#define THICKLAB_GRAPH_IO_HPP

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "thicklab/graph.hpp"

namespace thicklab {

// Malformed text input. offset is the byte (graph6) or line (edge list) where
// decoding stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// graph6, without the optional ">>graph6<<" header. A single trailing newline
// is tolerated on parse.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Edge list: "n m" followed by m lines "u v". Blank lines and '#' comments are skipped.
Graph parse_edge_list(std::istream& in);
std::string emit_edge_list(const Graph& g);

// Reads either format; a first data line with two integers selects the edge list.
Graph parse_graph_text(const std::string& text);
Graph read_graph_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace thicklab

#endif
