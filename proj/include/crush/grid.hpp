#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crush {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint32_t;

enum class Orientation : std::uint8_t { horizontal, vertical, generic };

// One k-uniform hyperedge. Vertices are sorted ascending, so front() is the
// minimum vertex and back() the maximum.
struct Hyperedge {
    std::vector<VertexId> vertices;
    Orientation orientation = Orientation::generic;

    VertexId minVertex() const { return vertices.front(); }
    VertexId maxVertex() const { return vertices.back(); }
};

struct HypergraphParseError : std::runtime_error {
    explicit HypergraphParseError(const std::string& what) : std::runtime_error(what) {}
};

// k-uniform hypergraph with flat edge storage. Edge indices are stable: they
// refer to insertion order. Incidence and ending lists are maintained on
// insertion; edges_ending_at partitions the edge set by maximum vertex.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(VertexId vertexCount, int k);

    VertexId vertex_count() const { return vertexCount_; }
    // Uniform edge size; 0 while the hypergraph has no edges and no declared k.
    int k() const { return k_; }
    std::size_t edge_count() const { return orientations_.size(); }

    // Vertices of edge e, sorted ascending.
    std::span<const VertexId> edge(EdgeIndex e) const {
        return {edgeVertices_.data() + std::size_t(e) * k_, std::size_t(k_)};
    }
    Orientation orientation(EdgeIndex e) const { return orientations_[e]; }
    VertexId min_vertex(EdgeIndex e) const { return edge(e).front(); }
    VertexId max_vertex(EdgeIndex e) const { return edge(e).back(); }
    Hyperedge hyperedge(EdgeIndex e) const;

    const std::vector<EdgeIndex>& incident_edges(VertexId v) const { return incidence_[v]; }
    const std::vector<EdgeIndex>& edges_ending_at(VertexId v) const { return endingAt_[v]; }

    // Edge indices ordered by vertex sequence (lexicographic). Since sequences
    // start with the minimum vertex, this realizes "lowest minimum vertex
    // first, horizontal before vertical on a shared minimum" on grids: the
    // horizontal successor v+1 precedes the vertical successor v+n for n > 1,
    // and single-column grids have no horizontal edges to tie with.
    std::span<const EdgeIndex> scan_order() const;

    // Sorts vertices, validates range/duplicates/uniform size, keeps indices.
    EdgeIndex add_edge(std::span<const VertexId> vertices,
                       Orientation orientation = Orientation::generic);

    // Structural equality: vertex count, k, and the edge multiset.
    // Orientation tags are not compared.
    bool same_structure(const Hypergraph& other) const;

private:
    VertexId vertexCount_ = 0;
    int k_ = 0;
    std::vector<VertexId> edgeVertices_;  // edge_count * k, each edge sorted
    std::vector<Orientation> orientations_;
    std::vector<std::vector<EdgeIndex>> incidence_;
    std::vector<std::vector<EdgeIndex>> endingAt_;
    mutable std::vector<EdgeIndex> scanOrder_;  // rebuilt lazily after adds
    mutable bool scanOrderDirty_ = false;
};

struct GridSpec {
    std::uint32_t rows = 1;  // m
    std::uint32_t cols = 1;  // n
    int k = 3;
};

// Grid vertex ids are row-major: id = row * cols + col, 0-based.
// Edges are every horizontal and vertical run of exactly k cells:
// rows * max(0, cols-k+1) horizontal plus cols * max(0, rows-k+1) vertical.
Hypergraph build_candy_grid(const GridSpec& spec);

// Sub-hypergraph on vertices {0..t-1}: keeps exactly the edges whose maximum
// vertex is < t, with vertex ids unchanged. prefix(t).edges is a subset of
// prefix(t+1).edges; prefix(vertex_count()) has the same structure as h.
Hypergraph prefix_subhypergraph(const Hypergraph& h, VertexId t);

// Text format, line oriented:
//   # comment
//   V <vertexCount>
//   E <id> <id> ... <id>     (exactly k ids per line, 0-based)
// Rejects unknown directives, ids out of range, duplicate vertices within an
// edge, edge size < 2, and non-uniform edge sizes. Parsed edges are tagged
// Orientation::generic.
Hypergraph parse_hypergraph(std::istream& in);

// Emits V then E lines with edges sorted by (maxVertex, vertex sequence).
// parse(serialize(h)) has the same structure as h.
void serialize_hypergraph(const Hypergraph& h, std::ostream& out);

// FNV-1a over the serialized text, as fixed-width hex. Identifies file-based
// inputs in reports.
std::string hypergraph_digest(const Hypergraph& h);

}  // namespace crush
