#pragma once

#include <cstdint>
#include <optional>

#include "crush/coloring.hpp"
#include "crush/grid.hpp"
#include "crush/rng.hpp"

namespace crush {

struct SampleStats {
    std::uint64_t resampleCount = 0;     // resampling steps executed
    std::uint64_t initialAssignments = 0;  // always the vertex count
    bool budgetExceeded = false;
};

// How the edge to resample is chosen each step.
//  lexicographicFirst: the monochromatic edge with the lowest minimum vertex,
//    horizontal before vertical on a shared minimum. With this rule the
//    returned colourings are exactly uniform over the stable set.
//  firstFound: first monochromatic edge in storage order. Terminates and is
//    reproducible, but carries no uniformity certificate; kept for
//    experiments only.
enum class EdgeSelection { lexicographicFirst, firstFound };

struct SampleResult {
    std::optional<Coloring> coloring;  // empty iff stats.budgetExceeded
    SampleStats stats;
};

// 1000 * (1 + sum over edges of x/(1-x)) resampling steps, the per-edge
// expected-resample bound with three orders of magnitude of slack.
std::uint64_t default_resample_budget(const Hypergraph& h);

// One resampling step: find the selected monochromatic edge, redraw all of
// its vertices independently. Returns the resampled edge, or empty if the
// colouring is already stable. Vertices below the resampled edge's minimum
// keep their colours.
std::optional<EdgeIndex> resample_step(const Hypergraph& h, Coloring& coloring, std::int32_t c,
                                       RngStream& rng,
                                       EdgeSelection selection = EdgeSelection::lexicographicFirst);

// Moser-Tardos sampler: uniform initial assignment, then resample the
// selected monochromatic edge until stable. Requires c >= 1, and c >= 2 when
// the hypergraph has edges (c = 1 can never stabilize). On budget exhaustion
// returns no colouring and stats.budgetExceeded = true.
SampleResult mt_sample(const Hypergraph& h, std::int32_t c, RngStream& rng,
                       std::optional<std::uint64_t> budget = {},
                       EdgeSelection selection = EdgeSelection::lexicographicFirst);

// Buffer-reusing core of mt_sample: resizes `out` to the vertex count and
// leaves a stable colouring in it unless the budget was exceeded.
SampleStats mt_sample_into(const Hypergraph& h, std::int32_t c, RngStream& rng,
                           std::uint64_t budget, EdgeSelection selection, Coloring& out);

// Uniform member of the level set Y_t: a Moser-Tardos stable colouring of
// prefix_subhypergraph(h, t) on vertices 0..t-1, extended by independent
// uniform colours on t..|V|-1. Builds the prefix per call; batch callers
// should cache the prefix and extend mt_sample themselves.
SampleResult mt_sample_prefix(const Hypergraph& h, VertexId t, std::int32_t c, RngStream& rng,
                              std::optional<std::uint64_t> budget = {});

}  // namespace crush
