#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crush/coloring.hpp"
#include "crush/grid.hpp"

namespace crush::oracle {

using BigInt = boost::multiprecision::cpp_int;

// Refusal, never truncation: raised before any enumeration whose colouring
// count would exceed the budget.
struct OracleBudgetExceeded : std::runtime_error {
    OracleBudgetExceeded(std::string what, std::uint64_t budget)
        : std::runtime_error(std::move(what)), budget(budget) {}
    std::uint64_t budget;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

struct ExactCount {
    BigInt stableCount = 0;
    BigInt totalCount = 0;  // c^|V|
    double ell = 0;         // stableCount / totalCount
};

// Plain enumeration in odometer order over the colour sequence with an
// early-exit stability check. Requires c >= 1 and c^|V| <= budget.
ExactCount exact_count(const Hypergraph& h, std::int32_t c,
                       std::uint64_t budget = kDefaultEnumerationBudget);

// All stable colourings in ascending lexicographic colour order.
std::vector<Coloring> enumerate_stable(const Hypergraph& h, std::int32_t c,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

// exact_count for each c in cValues, same budget rule per point.
std::vector<ExactCount> exact_chromatic_polynomial_points(
    const Hypergraph& h, std::span<const std::int32_t> cValues,
    std::uint64_t budget = kDefaultEnumerationBudget);

// S[t] = number of colourings of vertices 0..t-1 that are stable in
// prefix_subhypergraph(h, t), for t = 0..|V|; so S[|V|] = exact_count's
// stableCount and |Y_t| = S[t] * c^(|V|-t). Enumerates the prefix tree in
// colour order, pruning on the first monochromatic ending edge, with vertex 0
// pinned to colour 0 and counts scaled by c (exact: colour transposition is a
// bijection on stable prefixes). Same budget rule as exact_count.
std::vector<std::uint64_t> prefix_stable_counts(const Hypergraph& h, std::int32_t c,
                                                std::uint64_t budget = kDefaultEnumerationBudget,
                                                int workers = 1);

}  // namespace crush::oracle
