#include "crush/coloring.hpp"

namespace crush {

bool is_monochromatic(const Hypergraph& h, const Coloring& coloring, EdgeIndex e) {
    auto vs = h.edge(e);
    const std::int32_t first = coloring[vs[0]];
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (coloring[vs[i]] != first) return false;
    return true;
}

bool is_stable(const Hypergraph& h, const Coloring& coloring) {
    for (EdgeIndex e = 0; e < h.edge_count(); ++e)
        if (is_monochromatic(h, coloring, e)) return false;
    return true;
}

std::optional<EdgeIndex> first_monochromatic_edge(const Hypergraph& h, const Coloring& coloring) {
    for (EdgeIndex e : h.scan_order())
        if (is_monochromatic(h, coloring, e)) return e;
    return std::nullopt;
}

VertexId prefix_stable_level(const Hypergraph& h, const Coloring& coloring) {
    VertexId level = h.vertex_count();
    for (EdgeIndex e = 0; e < h.edge_count(); ++e)
        if (h.max_vertex(e) < level && is_monochromatic(h, coloring, e)) level = h.max_vertex(e);
    return level;
}

}  // namespace crush
