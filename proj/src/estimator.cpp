#include "crush/estimator.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include "crush/coloring.hpp"
#include "crush/oracle.hpp"
#include "crush/parallel.hpp"
#include "crush/rng.hpp"

namespace crush {

namespace {

void validate_common(std::int32_t c, int workerCount) {
    if (c < 1) throw std::invalid_argument("estimator: c must be >= 1");
    if (workerCount < 1) throw std::invalid_argument("estimator: workerCount must be >= 1");
}

// Monochromatic test for one edge ending at t, with vertex t's colour held
// separately from the prefix buffer.
bool ending_edge_mono(const Hypergraph& h, EdgeIndex e, const Coloring& prefixColours,
                      VertexId t, std::int32_t colourOfT) {
    for (VertexId u : h.edge(e)) {
        if (u == t) continue;
        if (prefixColours[u] != colourOfT) return false;
    }
    return true;
}

}  // namespace

MantissaExp decimal_from_log(double naturalLog) {
    if (std::isinf(naturalLog) && naturalLog < 0) return {0.0, 0};
    const double log10x = naturalLog / std::log(10.0);
    double exponent = std::floor(log10x);
    double mantissa = std::pow(10.0, log10x - exponent);
    // 9.999... within rounding of 10 is an integral log10 seen through floor.
    if (mantissa >= 10.0 - 1e-9) {
        mantissa = 1.0;
        exponent += 1.0;
    } else if (mantissa < 1.0) {
        mantissa *= 10.0;
        exponent -= 1.0;
    }
    return {mantissa, std::int64_t(exponent)};
}

std::uint64_t t_sample_schedule(VertexId vertexCount, double epsilon, double delta) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("schedule: epsilon must be positive");
    if (!(delta > 0.0) || delta >= 1.0) throw std::invalid_argument("schedule: delta in (0, 1)");
    if (vertexCount == 0) return 0;
    const double v = double(vertexCount);
    const double raw = 54.0 * (v / epsilon) * (v / epsilon) * std::log(2.0 * v / delta);
    return std::uint64_t(std::ceil(raw));
}

McReport monte_carlo_estimate(const Hypergraph& h, std::int32_t c, std::uint64_t samples,
                              std::uint64_t masterSeed, int workerCount) {
    validate_common(c, workerCount);
    McReport r;
    r.c = c;
    r.samples = samples;
    const VertexId V = h.vertex_count();
    std::vector<std::uint64_t> hitsPerWorker(std::size_t(workerCount), 0);
    parallel_chunks(samples, workerCount, [&](int w, std::uint64_t begin, std::uint64_t end) {
        Coloring col(V);
        std::uint64_t hits = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            RngStream rng(masterSeed, StreamPurpose::monteCarlo, 0, i);
            for (VertexId v = 0; v < V; ++v) col[v] = std::int32_t(rng.below(std::uint32_t(c)));
            if (is_stable(h, col)) ++hits;
        }
        hitsPerWorker[std::size_t(w)] = hits;
    });
    for (std::uint64_t hw : hitsPerWorker) r.hits += hw;
    r.ellHat = samples ? double(r.hits) / double(samples) : 0.0;
    if (r.hits > 0)
        r.relativeErrorEstimate = std::sqrt((1.0 - r.ellHat) / (r.ellHat * double(samples)));
    return r;
}

EstimateReport splitting_estimate(const Hypergraph& h, const EstimateParams& params,
                                  const SplitOverrides& overrides) {
    const auto start = std::chrono::steady_clock::now();
    validate_common(params.c, params.workerCount);
    const VertexId V = h.vertex_count();
    const std::uint32_t c = std::uint32_t(params.c);

    EstimateReport r;
    r.params = params;
    r.instanceDigest = hypergraph_digest(h);
    r.vertexCount = V;
    r.edgeCount = EdgeIndex(h.edge_count());
    r.k = h.k();
    r.samplesPerLevel = overrides.samplesPerLevel
                            ? *overrides.samplesPerLevel
                            : t_sample_schedule(V, params.epsilon, params.delta);
    const std::uint64_t N = r.samplesPerLevel;
    if (V > 0 && N == 0)
        throw std::invalid_argument("splitting_estimate: samplesPerLevel must be positive");
    r.levels.reserve(V);

    double product = 1.0;
    double logSum = 0.0;
    bool hitZero = false;

    for (VertexId t = 0; t < V && !hitZero; ++t) {
        LevelEstimate level;
        level.t = t;
        const auto& ending = h.edges_ending_at(t);
        if (ending.empty()) {
            // Revealing vertex t constrains nothing: the factor is exactly 1.
            level.skippedExact = true;
            r.levels.push_back(level);
            continue;
        }

        // Drawing from the level set only needs vertices 0..t-1 under the
        // edges ending below t; vertex t itself is a fresh uniform colour.
        const Hypergraph prefix = prefix_subhypergraph(h, t);
        prefix.scan_order();  // warm the lazy cache before threads share it
        const std::uint64_t budget =
            overrides.resampleBudget ? *overrides.resampleBudget : default_resample_budget(prefix);

        std::vector<std::uint64_t> hitsPerWorker(std::size_t(params.workerCount), 0);
        std::vector<std::uint64_t> resamplesPerWorker(std::size_t(params.workerCount), 0);
        parallel_chunks(N, params.workerCount, [&](int w, std::uint64_t begin, std::uint64_t end) {
            Coloring buf;
            std::uint64_t hits = 0, resamples = 0;
            for (std::uint64_t i = begin; i < end; ++i) {
                RngStream rng(params.masterSeed, StreamPurpose::levelSample, t, i);
                const SampleStats stats =
                    mt_sample_into(prefix, params.c, rng, budget, overrides.selection, buf);
                if (stats.budgetExceeded)
                    throw LevelBudgetExceeded(
                        "splitting_estimate: level " + std::to_string(t) + " sample " +
                            std::to_string(i) + " exceeded the resample budget " +
                            std::to_string(budget),
                        t);
                resamples += stats.resampleCount;
                const auto colourOfT = std::int32_t(rng.below(c));
                bool stable = true;
                for (EdgeIndex e : ending)
                    if (ending_edge_mono(h, e, buf, t, colourOfT)) {
                        stable = false;
                        break;
                    }
                if (stable) ++hits;
            }
            hitsPerWorker[std::size_t(w)] = hits;
            resamplesPerWorker[std::size_t(w)] = resamples;
        });

        level.samples = N;
        for (std::uint64_t hw : hitsPerWorker) level.hits += hw;
        std::uint64_t resamples = 0;
        for (std::uint64_t rw : resamplesPerWorker) resamples += rw;
        level.cHat = double(level.hits) / double(N);
        level.meanResamples = double(resamples) / double(N);
        r.totalSamples += N;
        r.totalResamples += resamples;
        r.levels.push_back(level);

        if (level.hits == 0) {
            std::fprintf(stderr,
                         "splitting_estimate: level %u produced 0 hits in %llu samples; "
                         "reporting a zero estimate and stopping at this level\n",
                         unsigned(t), (unsigned long long)N);
            hitZero = true;
        } else {
            product *= level.cHat;
            logSum += std::log(level.cHat);
        }
    }

    if (hitZero) {
        r.ellHat = 0.0;
        r.logEll = -std::numeric_limits<double>::infinity();
    } else {
        r.ellHat = product;
        r.logEll = logSum;
    }
    r.ellMantissaExp = decimal_from_log(r.logEll);
    r.logCount = r.logEll + double(V) * std::log(double(params.c));
    r.countMantissaExp = decimal_from_log(r.logCount);
    r.wallTime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<double> exact_level_probabilities(const Hypergraph& h, std::int32_t c,
                                              std::uint64_t budget) {
    const std::vector<std::uint64_t> counts = oracle::prefix_stable_counts(h, c, budget);
    const VertexId V = h.vertex_count();
    std::vector<double> probs(V, 0.0);
    for (VertexId t = 0; t < V; ++t) {
        if (counts[t] == 0) continue;  // empty level set, factor pinned to 0
        probs[t] = double(counts[t + 1]) / (double(c) * double(counts[t]));
    }
    return probs;
}

}  // namespace crush
