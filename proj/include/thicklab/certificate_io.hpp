#ifndef THICKLAB_CERTIFICATE_IO_HPP
#define THICKLAB_CERTIFICATE_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "thicklab/graph.hpp"
#include "thicklab/thickness.hpp"

namespace thicklab {

// Decomposition text format:
//
//   # <header line>          zero or more
//   n <vertex count>
//   k <part count>
//   part <edge count>        repeated k times,
//   <u> <v>                  followed by that many edge lines
//
// Certificates put "theta", "status", "lower-bound" and "nodes" header lines
// before the body.
struct DecompositionText {
    std::vector<std::string> header;  // without the leading "# "
    PlanarDecomposition decomposition;
};

std::string write_decomposition(const PlanarDecomposition& d, const std::vector<std::string>& header = {});

// The base graph is the union of the parts unless one is supplied.
DecompositionText read_decomposition(std::string_view text);
DecompositionText read_decomposition(std::string_view text, const Graph& base);

std::string write_certificate(const ThicknessCertificate& c);
ThicknessCertificate read_certificate(std::string_view text);

bool looks_like_decomposition(std::string_view text);

}  // namespace thicklab

#endif
