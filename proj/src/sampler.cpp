#include "crush/sampler.hpp"

#include <cmath>

#include "crush/lll.hpp"

namespace crush {

namespace {

inline bool mono(const Hypergraph& h, const Coloring& col, EdgeIndex e) {
    auto vs = h.edge(e);
    const std::int32_t first = col[vs[0]];
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (col[vs[i]] != first) return false;
    return true;
}

inline std::optional<EdgeIndex> select_edge(const Hypergraph& h, const Coloring& col,
                                            EdgeSelection selection) {
    if (selection == EdgeSelection::lexicographicFirst) {
        for (EdgeIndex e : h.scan_order())
            if (mono(h, col, e)) return e;
    } else {
        for (EdgeIndex e = 0; e < h.edge_count(); ++e)
            if (mono(h, col, e)) return e;
    }
    return std::nullopt;
}

}  // namespace

std::uint64_t default_resample_budget(const Hypergraph& h) {
    if (h.edge_count() == 0) return 1000;
    return std::uint64_t(std::ceil(1000.0 * (1.0 + expected_resample_bound(h, h.k()))));
}

std::optional<EdgeIndex> resample_step(const Hypergraph& h, Coloring& coloring, std::int32_t c,
                                       RngStream& rng, EdgeSelection selection) {
    auto e = select_edge(h, coloring, selection);
    if (!e) return std::nullopt;
    for (VertexId v : h.edge(*e)) coloring[v] = std::int32_t(rng.below(std::uint32_t(c)));
    return e;
}

SampleStats mt_sample_into(const Hypergraph& h, std::int32_t c, RngStream& rng,
                           std::uint64_t budget, EdgeSelection selection, Coloring& out) {
    if (c < 1) throw std::invalid_argument("mt_sample: c must be >= 1");
    if (c == 1 && h.edge_count() > 0)
        throw std::invalid_argument("mt_sample: c = 1 with edges can never stabilize");

    SampleStats stats;
    stats.initialAssignments = h.vertex_count();
    out.resize(h.vertex_count());
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        out[v] = std::int32_t(rng.below(std::uint32_t(c)));

    while (true) {
        auto e = select_edge(h, out, selection);
        if (!e) return stats;
        if (stats.resampleCount >= budget) {
            stats.budgetExceeded = true;
            return stats;
        }
        ++stats.resampleCount;
        for (VertexId v : h.edge(*e)) out[v] = std::int32_t(rng.below(std::uint32_t(c)));
    }
}

SampleResult mt_sample(const Hypergraph& h, std::int32_t c, RngStream& rng,
                       std::optional<std::uint64_t> budget, EdgeSelection selection) {
    SampleResult result;
    Coloring col;
    result.stats =
        mt_sample_into(h, c, rng, budget.value_or(default_resample_budget(h)), selection, col);
    if (!result.stats.budgetExceeded) result.coloring = std::move(col);
    return result;
}

SampleResult mt_sample_prefix(const Hypergraph& h, VertexId t, std::int32_t c, RngStream& rng,
                              std::optional<std::uint64_t> budget) {
    if (t > h.vertex_count()) throw std::out_of_range("mt_sample_prefix: t exceeds vertex count");
    const Hypergraph prefix = prefix_subhypergraph(h, t);
    SampleResult result = mt_sample(prefix, c, rng, budget);
    result.stats.initialAssignments = h.vertex_count();
    if (!result.coloring) return result;
    Coloring& col = *result.coloring;
    col.resize(h.vertex_count());
    for (VertexId v = t; v < h.vertex_count(); ++v)
        col[v] = std::int32_t(rng.below(std::uint32_t(c)));
    return result;
}

}  // namespace crush
