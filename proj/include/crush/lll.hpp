#pragma once

#include <cstdint>
#include <vector>

#include "crush/grid.hpp"

namespace crush {

// Decision data for the sampler's tractability condition at (c, k):
//   1/c <= x^(1/(k-1)) * (1-x)^((2k-2+k^2)/(k-1))   with x = 1/(k^2+2k-1),
// the optimizer of x(1-x)^d over the dependency degree d = 2k-2+k^2 (a grid
// edge meets at most 2k-2 parallel and k^2 perpendicular edges).
struct FeasibilityVerdict {
    std::int32_t c = 0;
    int k = 0;
    double rhs = 0;                  // right-hand side above
    bool feasible = false;           // 1/c <= rhs, up to 1e-12 slack
    std::int64_t dependencyDegree = 0;  // 2k-2+k^2
    double optimalX = 0;             // 1/(k^2+2k-1)
    double perEdgeResampleBound = 0;  // x/(1-x), expected resamples per edge
};

// Requires c >= 2 and k >= 2 (k = 1 has no non-monochromatic colourings to
// certify). Equality within 1e-12 of the boundary counts as feasible.
FeasibilityVerdict check_fpras_condition(std::int32_t c, int k);

// Smallest c >= 2 that is feasible for this k. Requires k >= 2.
std::int32_t min_colors(int k);

// Sum over edges of the per-edge bound: |E| * x/(1-x). Requires k == h.k()
// when h has edges; returns 0 for edgeless hypergraphs.
double expected_resample_bound(const Hypergraph& h, int k);

// Feasibility over inclusive ranges, plot-ready. feasible[ci][ki] corresponds
// to c = cMin+ci, k = kMin+ki; minColorsPerK[ki] is min_colors(kMin+ki).
struct RegionReport {
    std::int32_t cMin = 0, cMax = 0;
    int kMin = 0, kMax = 0;
    std::vector<std::vector<bool>> feasible;
    std::vector<std::int32_t> minColorsPerK;
};

RegionReport scan_region(std::int32_t cMin, std::int32_t cMax, int kMin, int kMax);

}  // namespace crush
