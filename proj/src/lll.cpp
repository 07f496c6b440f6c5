#include "crush/lll.hpp"

#include <cmath>
#include <stdexcept>

namespace crush {

namespace {
constexpr double kBoundarySlack = 1e-12;
}

FeasibilityVerdict check_fpras_condition(std::int32_t c, int k) {
    if (k < 2) throw std::invalid_argument("check_fpras_condition: k must be >= 2");
    if (c < 2) throw std::invalid_argument("check_fpras_condition: c must be >= 2");
    FeasibilityVerdict v;
    v.c = c;
    v.k = k;
    v.dependencyDegree = std::int64_t(2) * k - 2 + std::int64_t(k) * k;
    const double x = 1.0 / (double(k) * k + 2.0 * k - 1.0);
    v.optimalX = x;
    v.perEdgeResampleBound = x / (1.0 - x);
    v.rhs = std::pow(x, 1.0 / (k - 1)) *
            std::pow(1.0 - x, double(v.dependencyDegree) / (k - 1));
    v.feasible = 1.0 / double(c) <= v.rhs + kBoundarySlack;
    return v;
}

std::int32_t min_colors(int k) {
    if (k < 2) throw std::invalid_argument("min_colors: k must be >= 2");
    // feasible is monotone in c (1/c decreases), so the first hit is minimal;
    // rhs > 0 guarantees termination.
    for (std::int32_t c = 2;; ++c)
        if (check_fpras_condition(c, k).feasible) return c;
}

double expected_resample_bound(const Hypergraph& h, int k) {
    if (h.edge_count() == 0) return 0.0;
    if (k != h.k()) throw std::invalid_argument("expected_resample_bound: k does not match h");
    const double x = check_fpras_condition(2, k).optimalX;
    return double(h.edge_count()) * x / (1.0 - x);
}

RegionReport scan_region(std::int32_t cMin, std::int32_t cMax, int kMin, int kMax) {
    if (cMin < 2 || kMin < 2 || cMax < cMin || kMax < kMin)
        throw std::invalid_argument("scan_region: need 2 <= cMin <= cMax and 2 <= kMin <= kMax");
    RegionReport r;
    r.cMin = cMin;
    r.cMax = cMax;
    r.kMin = kMin;
    r.kMax = kMax;
    r.feasible.resize(std::size_t(cMax - cMin + 1));
    for (std::int32_t c = cMin; c <= cMax; ++c) {
        auto& row = r.feasible[std::size_t(c - cMin)];
        row.resize(std::size_t(kMax - kMin + 1));
        for (int k = kMin; k <= kMax; ++k)
            row[std::size_t(k - kMin)] = check_fpras_condition(c, k).feasible;
    }
    for (int k = kMin; k <= kMax; ++k) r.minColorsPerK.push_back(min_colors(k));
    return r;
}

}  // namespace crush
