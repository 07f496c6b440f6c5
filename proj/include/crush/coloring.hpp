#pragma once

#include <cstdint>
#include <optional>

#include "crush/grid.hpp"

namespace crush {

// Colour values are 0-based, in [0, c).
using Coloring = std::vector<std::int32_t>;

bool is_monochromatic(const Hypergraph& h, const Coloring& coloring, EdgeIndex e);

// True iff no edge is monochromatic (a weak proper colouring).
bool is_stable(const Hypergraph& h, const Coloring& coloring);

// Storage index of the first monochromatic edge in scan order: lowest minimum
// vertex first, horizontal before vertical on a shared minimum (see
// Hypergraph::scan_order). Empty iff the colouring is stable.
std::optional<EdgeIndex> first_monochromatic_edge(const Hypergraph& h, const Coloring& coloring);

// Largest t such that no edge with maxVertex < t is monochromatic; equals
// vertex_count() iff the colouring is stable. Membership in the level set Y_t
// is prefix_stable_level >= t.
VertexId prefix_stable_level(const Hypergraph& h, const Coloring& coloring);

}  // namespace crush
