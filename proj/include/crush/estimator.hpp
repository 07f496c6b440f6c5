#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crush/grid.hpp"
#include "crush/sampler.hpp"

namespace crush {

// One splitting level: the conditional probability that a uniform member of
// the level-t set (no monochromatic edge ending below t) survives the edges
// ending at vertex t.
struct LevelEstimate {
    VertexId t = 0;
    double cHat = 1.0;
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    bool skippedExact = false;   // no edge ends at t: cHat == 1 exactly, nothing sampled
    double meanResamples = 0.0;  // resample steps per sample while drawing from the level set
};

struct EstimateParams {
    std::int32_t c = 2;
    double epsilon = 0.1;
    double delta = 0.05;
    std::uint64_t masterSeed = 1;
    int workerCount = 1;
};

// Overrides for experiments; defaults reproduce the analysed estimator.
struct SplitOverrides {
    std::optional<std::uint64_t> samplesPerLevel;  // replaces the (epsilon, delta) schedule
    std::optional<std::uint64_t> resampleBudget;   // replaces the sampler default
    EdgeSelection selection = EdgeSelection::lexicographicFirst;
};

// value == mantissa * 10^exponent with mantissa in [1, 10); {0, 0} for zero.
struct MantissaExp {
    double mantissa = 0.0;
    std::int64_t exponent = 0;
};

MantissaExp decimal_from_log(double naturalLog);

struct EstimateReport {
    EstimateParams params;
    std::string instanceDigest;  // identifies the hypergraph the run saw
    VertexId vertexCount = 0;
    EdgeIndex edgeCount = 0;
    int k = 0;
    std::uint64_t samplesPerLevel = 0;
    // One entry per vertex in order; truncated after a level whose estimate is
    // zero (every later factor is unreachable and the product is already 0).
    std::vector<LevelEstimate> levels;
    double ellHat = 0.0;
    double logEll = 0.0;        // natural log; -infinity when ellHat == 0
    MantissaExp ellMantissaExp;
    double logCount = 0.0;      // logEll + vertexCount * ln(c)
    MantissaExp countMantissaExp;  // stable-colouring count, decimal form
    std::uint64_t totalSamples = 0;
    std::uint64_t totalResamples = 0;
    double wallTime = 0.0;  // seconds
};

struct McReport {
    std::int32_t c = 0;
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    double ellHat = 0.0;
    // sqrt((1 - ell) / (ell * N)) at ell = ellHat; empty when hits == 0.
    std::optional<double> relativeErrorEstimate;
};

// A per-level sample exhausted its resample budget; the level set is likely
// empty or the budget too tight.
class LevelBudgetExceeded : public std::runtime_error {
public:
    LevelBudgetExceeded(const std::string& what, VertexId level)
        : std::runtime_error(what), level_(level) {}
    VertexId level() const { return level_; }

private:
    VertexId level_;
};

// Per-level sample count ceil(54 * (V/epsilon)^2 * ln(2V/delta)) that keeps
// every level factor within its Chernoff tolerance simultaneously with
// probability 1 - delta. Zero vertices need no samples.
std::uint64_t t_sample_schedule(VertexId vertexCount, double epsilon, double delta);

// Direct hit-or-miss estimate of the stable fraction from uniform colourings.
McReport monte_carlo_estimate(const Hypergraph& h, std::int32_t c, std::uint64_t samples,
                              std::uint64_t masterSeed, int workerCount = 1);

// Multilevel splitting: one level per vertex, level members drawn exactly
// uniformly by the resampling walk on the prefix subhypergraph. Deterministic
// for a fixed master seed, independent of workerCount.
EstimateReport splitting_estimate(const Hypergraph& h, const EstimateParams& params,
                                  const SplitOverrides& overrides = {});

// Exact level factors from the enumeration oracle, for cross-checking the
// estimator on small instances. Entry t is the conditional probability for
// level t; zero when the level set itself is empty.
std::vector<double> exact_level_probabilities(const Hypergraph& h, std::int32_t c,
                                              std::uint64_t budget = 100'000'000);

}  // namespace crush
