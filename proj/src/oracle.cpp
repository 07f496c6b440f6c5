#include "crush/oracle.hpp"

#include <algorithm>
#include <functional>

#include "crush/parallel.hpp"

namespace crush::oracle {

namespace {

void require_within_budget(const Hypergraph& h, std::int32_t c, std::uint64_t budget) {
    if (c < 1) throw std::invalid_argument("oracle: c must be >= 1");
    const BigInt total = boost::multiprecision::pow(BigInt(c), h.vertex_count());
    if (total > budget)
        throw OracleBudgetExceeded("oracle: " + std::to_string(c) + "^" +
                                       std::to_string(h.vertex_count()) + " = " + total.str() +
                                       " colourings exceed the enumeration budget " +
                                       std::to_string(budget),
                                   budget);
}

// Odometer increment in lexicographic order; false once the space is done.
bool advance(Coloring& col, std::int32_t c) {
    for (std::size_t i = col.size(); i-- > 0;) {
        if (col[i] + 1 < c) {
            ++col[i];
            return true;
        }
        col[i] = 0;
    }
    return false;
}

// Prefix-tree enumeration state shared by all workers (read-only after build):
// for each vertex t, the k-1 companion vertices of every edge ending at t.
struct EndingIndex {
    int k = 0;
    VertexId vertexCount = 0;
    std::vector<std::size_t> begin;  // vertexCount+1 offsets, in edge units
    std::vector<VertexId> others;    // (k-1) companions per ending edge

    explicit EndingIndex(const Hypergraph& h) : k(h.k()), vertexCount(h.vertex_count()) {
        begin.assign(vertexCount + 1, 0);
        for (VertexId v = 0; v < vertexCount; ++v)
            begin[v + 1] = begin[v] + h.edges_ending_at(v).size();
        if (k < 2) return;
        others.resize(begin[vertexCount] * std::size_t(k - 1));
        for (VertexId v = 0; v < vertexCount; ++v) {
            std::size_t slot = begin[v];
            for (EdgeIndex e : h.edges_ending_at(v)) {
                VertexId* out = others.data() + slot * std::size_t(k - 1);
                for (VertexId u : h.edge(e))
                    if (u != v) *out++ = u;
                ++slot;
            }
        }
    }
};

struct PrefixWorker {
    const EndingIndex& index;
    std::int32_t c;
    Coloring col;
    std::vector<std::uint64_t> counts;  // counts[t]: alive prefixes of length t seen
    // Per-depth scratch for forbidden colours. Descendants must not disturb a
    // node's own list, so each depth owns a fixed slice of maxEnding slots.
    std::vector<std::int32_t> forbidden;
    std::size_t maxEnding = 0;

    PrefixWorker(const EndingIndex& index, std::int32_t c)
        : index(index), c(c), col(index.vertexCount, 0), counts(index.vertexCount + 1, 0) {
        for (VertexId v = 0; v < index.vertexCount; ++v)
            maxEnding = std::max(maxEnding, index.begin[v + 1] - index.begin[v]);
        forbidden.resize(std::size_t(index.vertexCount) * maxEnding + 1);
    }

    // Writes the distinct colours that would make an edge ending at t
    // monochromatic; returns how many there are. At most maxEnding, so the
    // duplicate scan is a handful of compares.
    int collect_forbidden(VertexId t, std::int32_t* out) {
        int n = 0;
        const int km1 = index.k - 1;
        for (std::size_t i = index.begin[t]; i < index.begin[t + 1]; ++i) {
            const VertexId* o = index.others.data() + i * std::size_t(km1);
            const std::int32_t a = col[o[0]];
            bool uniform = true;
            for (int j = 1; j < km1; ++j)
                if (col[o[j]] != a) {
                    uniform = false;
                    break;
                }
            if (!uniform) continue;
            bool seen = false;
            for (int j = 0; j < n; ++j)
                if (out[j] == a) {
                    seen = true;
                    break;
                }
            if (!seen) out[n++] = a;
        }
        return n;
    }

    std::int32_t* slot(VertexId t) { return forbidden.data() + std::size_t(t) * maxEnding; }

    // Counts alive prefixes below an alive prefix of length t (already
    // tallied by the caller). The last vertex is counted in bulk: its colour
    // can constrain nothing beyond itself.
    void dfs(VertexId t) {
        std::int32_t* fb = slot(t);
        const int nf = collect_forbidden(t, fb);
        if (t + 1 == index.vertexCount) {
            counts[t + 1] += std::uint64_t(c - nf);
            return;
        }
        for (std::int32_t a = 0; a < c; ++a) {
            bool bad = false;
            for (int j = 0; j < nf; ++j)
                if (fb[j] == a) {
                    bad = true;
                    break;
                }
            if (bad) continue;
            col[t] = a;
            ++counts[t + 1];
            dfs(t + 1);
        }
    }
};

}  // namespace

ExactCount exact_count(const Hypergraph& h, std::int32_t c, std::uint64_t budget) {
    require_within_budget(h, c, budget);
    ExactCount r;
    r.totalCount = boost::multiprecision::pow(BigInt(c), h.vertex_count());
    std::uint64_t stable = 0;
    Coloring col(h.vertex_count(), 0);
    do {
        if (is_stable(h, col)) ++stable;
    } while (advance(col, c));
    r.stableCount = stable;
    r.ell = double(stable) / r.totalCount.convert_to<double>();
    return r;
}

std::vector<Coloring> enumerate_stable(const Hypergraph& h, std::int32_t c, std::uint64_t budget) {
    require_within_budget(h, c, budget);
    std::vector<Coloring> out;
    Coloring col(h.vertex_count(), 0);
    do {
        if (is_stable(h, col)) out.push_back(col);
    } while (advance(col, c));
    return out;
}

std::vector<ExactCount> exact_chromatic_polynomial_points(const Hypergraph& h,
                                                          std::span<const std::int32_t> cValues,
                                                          std::uint64_t budget) {
    std::vector<ExactCount> out;
    out.reserve(cValues.size());
    for (std::int32_t c : cValues) out.push_back(exact_count(h, c, budget));
    return out;
}

std::vector<std::uint64_t> prefix_stable_counts(const Hypergraph& h, std::int32_t c,
                                                std::uint64_t budget, int workers) {
    require_within_budget(h, c, budget);
    const VertexId V = h.vertex_count();
    std::vector<std::uint64_t> counts(V + 1, 0);
    counts[0] = 1;
    if (V == 0) return counts;

    // Vertex 0 pinned to colour 0; every count below is scaled by c at the end.
    // No edge can end at vertex 0 (edges have >= 2 distinct vertices).
    counts[1] = 1;
    const EndingIndex index(h);
    if (V >= 2) {
        if (workers <= 1 || V < 4) {
            PrefixWorker w(index, c);
            w.dfs(1);
            for (VertexId t = 2; t <= V; ++t) counts[t] = w.counts[t];
        } else {
            // Split at a shallow frontier; each worker finishes its subtrees.
            VertexId d0 = 1;
            double width = 1;
            while (d0 < V - 1 && width < 64.0 * workers) {
                width *= c;
                ++d0;
            }
            std::vector<Coloring> frontier;
            PrefixWorker collector(index, c);
            const std::function<void(VertexId)> collect = [&](VertexId t) {
                if (t == d0) {
                    frontier.emplace_back(collector.col.begin(), collector.col.begin() + t);
                    return;
                }
                std::int32_t* fb = collector.slot(t);
                const int nf = collector.collect_forbidden(t, fb);
                for (std::int32_t a = 0; a < c; ++a) {
                    bool bad = false;
                    for (int j = 0; j < nf; ++j)
                        if (fb[j] == a) {
                            bad = true;
                            break;
                        }
                    if (bad) continue;
                    collector.col[t] = a;
                    ++counts[t + 1];
                    collect(t + 1);
                }
            };
            collect(1);

            std::vector<std::vector<std::uint64_t>> workerCounts(
                std::size_t(workers), std::vector<std::uint64_t>(V + 1, 0));
            parallel_chunks(frontier.size(), workers,
                            [&](int w, std::uint64_t beginIdx, std::uint64_t endIdx) {
                                PrefixWorker worker(index, c);
                                for (std::uint64_t i = beginIdx; i < endIdx; ++i) {
                                    std::copy(frontier[i].begin(), frontier[i].end(),
                                              worker.col.begin());
                                    worker.dfs(d0);
                                }
                                workerCounts[std::size_t(w)] = std::move(worker.counts);
                            });
            for (const auto& wc : workerCounts)
                for (VertexId t = 0; t <= V; ++t) counts[t] += wc[t];
        }
    }
    for (VertexId t = 1; t <= V; ++t) counts[t] *= std::uint64_t(std::uint32_t(c));
    return counts;
}

}  // namespace crush::oracle
