#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "crush/grid.hpp"

using namespace crush;

namespace {

std::vector<VertexId> edge_vec(const Hypergraph& h, EdgeIndex e) {
    auto s = h.edge(e);
    return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("grid edges are exactly the horizontal and vertical k-windows") {
    for (std::uint32_t m = 1; m <= 8; ++m)
        for (std::uint32_t n = 1; n <= 8; ++n)
            for (int k = 2; k <= 4; ++k) {
                const Hypergraph h = build_candy_grid({m, n, k});
                REQUIRE(h.vertex_count() == m * n);

                std::set<std::vector<VertexId>> expected;
                for (std::uint32_t r = 0; r < m; ++r)
                    for (std::uint32_t c = 0; c + std::uint32_t(k) <= n; ++c) {
                        std::vector<VertexId> e;
                        for (int j = 0; j < k; ++j) e.push_back(r * n + c + std::uint32_t(j));
                        expected.insert(e);
                    }
                for (std::uint32_t c = 0; c < n; ++c)
                    for (std::uint32_t r = 0; r + std::uint32_t(k) <= m; ++r) {
                        std::vector<VertexId> e;
                        for (int j = 0; j < k; ++j) e.push_back((r + std::uint32_t(j)) * n + c);
                        expected.insert(e);
                    }

                REQUIRE(h.edge_count() == expected.size());
                const long long fromFormula =
                    (long long)m * std::max(0LL, (long long)n - k + 1) +
                    (long long)n * std::max(0LL, (long long)m - k + 1);
                CHECK((long long)h.edge_count() == fromFormula);
                for (EdgeIndex e = 0; e < h.edge_count(); ++e)
                    CHECK(expected.count(edge_vec(h, e)) == 1);
            }
}

TEST_CASE("known grid sizes") {
    const Hypergraph g99 = build_candy_grid({9, 9, 3});
    CHECK(g99.vertex_count() == 81);
    CHECK(g99.edge_count() == 126);
    std::size_t horizontal = 0;
    for (EdgeIndex e = 0; e < g99.edge_count(); ++e)
        if (g99.orientation(e) == Orientation::horizontal) ++horizontal;
    CHECK(horizontal == 63);

    const Hypergraph g11 = build_candy_grid({1, 1, 3});
    CHECK(g11.vertex_count() == 1);
    CHECK(g11.edge_count() == 0);

    const Hypergraph g23 = build_candy_grid({2, 3, 3});
    CHECK(g23.vertex_count() == 6);
    REQUIRE(g23.edge_count() == 2);
    CHECK(g23.orientation(0) == Orientation::horizontal);
    CHECK(g23.orientation(1) == Orientation::horizontal);
    CHECK(edge_vec(g23, 0) == std::vector<VertexId>{0, 1, 2});
    CHECK(edge_vec(g23, 1) == std::vector<VertexId>{3, 4, 5});
}

TEST_CASE("row-major vertex ids in vertical edges") {
    const Hypergraph h = build_candy_grid({3, 4, 3});
    CHECK(h.edge_count() == 3 * 2 + 4 * 1);
    bool found = false;
    for (EdgeIndex e = 0; e < h.edge_count(); ++e)
        if (edge_vec(h, e) == std::vector<VertexId>{0, 4, 8}) {
            found = true;
            CHECK(h.orientation(e) == Orientation::vertical);
        }
    CHECK(found);
}

TEST_CASE("grid spec validation") {
    CHECK_THROWS_AS(build_candy_grid({0, 3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(build_candy_grid({3, 0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(build_candy_grid({3, 3, 1}), std::invalid_argument);
}

TEST_CASE("incidence and ending lists are consistent with the edges") {
    const Hypergraph h = build_candy_grid({4, 5, 3});
    std::size_t endingTotal = 0;
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        endingTotal += h.edges_ending_at(v).size();
        for (EdgeIndex e : h.edges_ending_at(v)) CHECK(h.max_vertex(e) == v);
        for (EdgeIndex e : h.incident_edges(v)) {
            auto s = h.edge(e);
            CHECK(std::find(s.begin(), s.end(), v) != s.end());
        }
    }
    CHECK(endingTotal == h.edge_count());  // every edge ends at exactly one vertex
    std::size_t incidentTotal = 0;
    for (VertexId v = 0; v < h.vertex_count(); ++v) incidentTotal += h.incident_edges(v).size();
    CHECK(incidentTotal == h.edge_count() * std::size_t(h.k()));
}

TEST_CASE("scan order is lexicographic over vertex sequences") {
    const Hypergraph h = build_candy_grid({3, 3, 3});
    const auto order = h.scan_order();
    REQUIRE(order.size() == 6);
    const std::vector<std::vector<VertexId>> want = {{0, 1, 2}, {0, 3, 6}, {1, 4, 7},
                                                     {2, 5, 8}, {3, 4, 5}, {6, 7, 8}};
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(edge_vec(h, order[i]) == want[i]);
    // The shared-minimum tie at vertex 0 resolves to the horizontal edge.
    CHECK(h.orientation(order[0]) == Orientation::horizontal);
    CHECK(h.orientation(order[1]) == Orientation::vertical);
}

TEST_CASE("prefix subhypergraph keeps exactly the edges below t") {
    const Hypergraph h = build_candy_grid({3, 3, 3});
    for (VertexId t = 0; t <= h.vertex_count(); ++t) {
        const Hypergraph p = prefix_subhypergraph(h, t);
        CHECK(p.vertex_count() == t);
        std::size_t want = 0;
        for (EdgeIndex e = 0; e < h.edge_count(); ++e)
            if (h.max_vertex(e) < t) ++want;
        CHECK(p.edge_count() == want);
    }
    CHECK(prefix_subhypergraph(h, h.vertex_count()).same_structure(h));
    CHECK(prefix_subhypergraph(h, 2).edge_count() == 0);
    CHECK_THROWS_AS(prefix_subhypergraph(h, 10), std::out_of_range);

    const Hypergraph line = build_candy_grid({1, 3, 3});
    CHECK(prefix_subhypergraph(line, 3).edge_count() == 1);
    CHECK(prefix_subhypergraph(line, 2).edge_count() == 0);
}

TEST_CASE("add_edge validation") {
    Hypergraph h(4, 0);
    const VertexId dup[] = {1, 1, 2};
    CHECK_THROWS_AS(h.add_edge(dup), std::invalid_argument);
    const VertexId out[] = {1, 2, 4};
    CHECK_THROWS_AS(h.add_edge(out), std::out_of_range);
    const VertexId single[] = {1};
    CHECK_THROWS_AS(h.add_edge(single), std::invalid_argument);
    const VertexId ok[] = {2, 0, 1};  // unsorted input is sorted on insert
    h.add_edge(ok);
    CHECK(h.k() == 3);
    CHECK(edge_vec(h, 0) == std::vector<VertexId>{0, 1, 2});
    const VertexId wrongSize[] = {0, 1};
    CHECK_THROWS_AS(h.add_edge(wrongSize), std::invalid_argument);
}

TEST_CASE("hypergraph text format parses and round-trips") {
    std::istringstream minimal("V 3\nE 0 1 2\n");
    const Hypergraph h = parse_hypergraph(minimal);
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 1);
    CHECK(h.k() == 3);

    std::istringstream comments("# header\nV 4\n# mid\nE 0 1 2\nE 1 2 3\n");
    CHECK(parse_hypergraph(comments).edge_count() == 2);

    const Hypergraph grid = build_candy_grid({9, 9, 3});
    std::ostringstream out;
    serialize_hypergraph(grid, out);
    std::istringstream back(out.str());
    const Hypergraph round = parse_hypergraph(back);
    CHECK(round.same_structure(grid));
    CHECK(hypergraph_digest(round) == hypergraph_digest(grid));
}

TEST_CASE("parse rejects malformed input") {
    auto reject = [](const char* text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_hypergraph(in), HypergraphParseError);
    };
    reject("V 3\nE 0 1 2\nE 0 1\n");    // non-uniform edge size
    reject("V 3\nE 0 1 9\n");           // id out of range
    reject("V 3\nE 0 1 1\n");           // duplicate vertex
    reject("V 3\nX 1 2\n");             // unknown directive
    reject("E 0 1 2\n");                // edge before V
    reject("V 3\nE 0 1 x\n");           // non-integer id
    reject("V -1\n");                   // negative count
    reject("V 3 4\n");                  // trailing tokens
    reject("");                         // missing V
    reject("V 2\nV 2\n");               // duplicate V
}

TEST_CASE("same_structure ignores insertion order and orientation tags") {
    Hypergraph a(5, 3), b(5, 3);
    const VertexId e1[] = {0, 1, 2}, e2[] = {2, 3, 4};
    a.add_edge(e1, Orientation::horizontal);
    a.add_edge(e2, Orientation::vertical);
    b.add_edge(e2, Orientation::generic);
    b.add_edge(e1, Orientation::generic);
    CHECK(a.same_structure(b));
    const VertexId e3[] = {1, 2, 3};
    b.add_edge(e3);
    CHECK(!a.same_structure(b));
}
