#ifndef THICKLAB_COMPOSER_HPP
#define THICKLAB_COMPOSER_HPP

#include <string>
#include <vector>

#include "thicklab/amalgamation.hpp"
#include "thicklab/thickness.hpp"

namespace thicklab {

// Which amalgamation bound a composed decomposition realises.
enum class AmalgamationBound {
    vertex_equality,       // theta = max(n1, n2)
    bar_equality,          // theta = max(n1, n2)
    edge_sandwich,         // max(n1, n2) <= theta <= n1 + n2 - 1
    two_vertex_sandwich,   // max(n1, n2) <= theta <= n1 + n2
};

std::string to_string(AmalgamationBound bound);
AmalgamationBound bound_for(AmalgamationKind kind);

// Lower and upper thickness bounds for an amalgam of operands with thickness
// n1 and n2. The bar bounds never drop below 1 since the bar edge itself needs a part.
int bound_lower(AmalgamationKind kind, int n1, int n2);
int bound_upper(AmalgamationKind kind, int n1, int n2);

struct CompositionOutcome {
    PlanarDecomposition decomposition;   // over amalgam.graph
    AmalgamationResult amalgam;
    int claimed_size = 0;                // the bound's part count
    AmalgamationBound bound = AmalgamationBound::vertex_equality;
};

class CompositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a composed decomposition fails validation. Indicates a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Operand decompositions are validated first (CompositionError when invalid)
// and compacted, so k1/k2 below are non-empty part counts.

// Part i = part i of d1 glued to part i of d2 at the shared vertex, the
// shorter list padded with empty parts.
CompositionOutcome compose_vertex(const PlanarDecomposition& d1, const PlanarDecomposition& d2,
                                  const AmalgamationSpec& spec);

// As compose_vertex over the disjoint union, with the bar edge added to part 1.
CompositionOutcome compose_bar(const PlanarDecomposition& d1, const PlanarDecomposition& d2,
                               const AmalgamationSpec& spec);

// With the shared edge moved to part 1 of both operands and k1 >= k2: part 1
// is the edge-glued pair of first parts, parts 2..k2 of both operands are kept
// as separate parts, and the remaining parts of the larger operand pass
// through. Exactly k1 + k2 - 1 parts.
CompositionOutcome compose_edge(const PlanarDecomposition& d1, const PlanarDecomposition& d2,
                                const AmalgamationSpec& spec);

// d1's parts followed by d2's parts, then each d1 part absorbs the first
// still-unmerged d2 part whose union with it is planar.
CompositionOutcome compose_two_vertex(const PlanarDecomposition& d1, const PlanarDecomposition& d2,
                                      const AmalgamationSpec& spec);

CompositionOutcome compose(const PlanarDecomposition& d1, const PlanarDecomposition& d2,
                           const AmalgamationSpec& spec);

// Certificate text with a provenance line naming the bound.
std::string write_composition(const CompositionOutcome& outcome);

}  // namespace thicklab

#endif
