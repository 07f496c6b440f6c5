#include "crush/grid.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace crush {

Hypergraph::Hypergraph(VertexId vertexCount, int k) : vertexCount_(vertexCount), k_(k) {
    if (k != 0 && k < 2) throw std::invalid_argument("hypergraph: k must be >= 2");
    incidence_.resize(vertexCount);
    endingAt_.resize(vertexCount);
}

Hyperedge Hypergraph::hyperedge(EdgeIndex e) const {
    auto span = edge(e);
    return Hyperedge{{span.begin(), span.end()}, orientations_[e]};
}

EdgeIndex Hypergraph::add_edge(std::span<const VertexId> vertices, Orientation orientation) {
    if (vertices.size() < 2) throw std::invalid_argument("edge: size must be >= 2");
    if (k_ == 0) {
        k_ = int(vertices.size());
    } else if (vertices.size() != std::size_t(k_)) {
        throw std::invalid_argument("edge: size does not match k");
    }
    std::vector<VertexId> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.back() >= vertexCount_) throw std::out_of_range("edge: vertex id out of range");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("edge: duplicate vertex");

    EdgeIndex e = EdgeIndex(edge_count());
    edgeVertices_.insert(edgeVertices_.end(), sorted.begin(), sorted.end());
    orientations_.push_back(orientation);
    for (VertexId v : sorted) incidence_[v].push_back(e);
    endingAt_[sorted.back()].push_back(e);
    scanOrderDirty_ = true;
    return e;
}

std::span<const EdgeIndex> Hypergraph::scan_order() const {
    if (scanOrderDirty_ || scanOrder_.size() != edge_count()) {
        scanOrder_.resize(edge_count());
        for (EdgeIndex e = 0; e < edge_count(); ++e) scanOrder_[e] = e;
        std::sort(scanOrder_.begin(), scanOrder_.end(), [&](EdgeIndex a, EdgeIndex b) {
            auto ea = edge(a), eb = edge(b);
            return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
        });
        scanOrderDirty_ = false;
    }
    return scanOrder_;
}

bool Hypergraph::same_structure(const Hypergraph& other) const {
    if (vertexCount_ != other.vertexCount_ || k_ != other.k_ ||
        edge_count() != other.edge_count())
        return false;
    auto key = [](const Hypergraph& h) {
        std::vector<std::vector<VertexId>> edges;
        edges.reserve(h.edge_count());
        for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
            auto s = h.edge(e);
            edges.emplace_back(s.begin(), s.end());
        }
        std::sort(edges.begin(), edges.end());
        return edges;
    };
    return key(*this) == key(other);
}

Hypergraph build_candy_grid(const GridSpec& spec) {
    if (spec.rows < 1 || spec.cols < 1) throw std::invalid_argument("grid: rows and cols must be >= 1");
    if (spec.k < 2) throw std::invalid_argument("grid: k must be >= 2");
    const std::uint64_t cells = std::uint64_t(spec.rows) * spec.cols;
    if (cells > std::uint64_t(1) << 31) throw std::invalid_argument("grid: too many cells");

    Hypergraph h(VertexId(cells), spec.k);
    const std::uint32_t k = std::uint32_t(spec.k);
    std::vector<VertexId> buf(k);
    for (std::uint32_t r = 0; r < spec.rows; ++r)
        for (std::uint32_t c = 0; c + k <= spec.cols; ++c) {
            for (std::uint32_t j = 0; j < k; ++j) buf[j] = r * spec.cols + c + j;
            h.add_edge(buf, Orientation::horizontal);
        }
    for (std::uint32_t c = 0; c < spec.cols; ++c)
        for (std::uint32_t r = 0; r + k <= spec.rows; ++r) {
            for (std::uint32_t j = 0; j < k; ++j) buf[j] = (r + j) * spec.cols + c;
            h.add_edge(buf, Orientation::vertical);
        }
    return h;
}

Hypergraph prefix_subhypergraph(const Hypergraph& h, VertexId t) {
    if (t > h.vertex_count()) throw std::out_of_range("prefix: t exceeds vertex count");
    Hypergraph p(t, h.k());
    for (EdgeIndex e = 0; e < h.edge_count(); ++e)
        if (h.max_vertex(e) < t) p.add_edge(h.edge(e), h.orientation(e));
    return p;
}

namespace {

std::vector<EdgeIndex> serialize_order(const Hypergraph& h) {
    std::vector<EdgeIndex> order(h.edge_count());
    for (EdgeIndex e = 0; e < h.edge_count(); ++e) order[e] = e;
    std::sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex b) {
        if (h.max_vertex(a) != h.max_vertex(b)) return h.max_vertex(a) < h.max_vertex(b);
        auto ea = h.edge(a), eb = h.edge(b);
        return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
    });
    return order;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
    Hypergraph h;
    bool sawVertexCount = false;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw HypergraphParseError("line " + std::to_string(lineNo) + ": " + msg);
        };
        if (tag == "V") {
            if (sawVertexCount) fail("duplicate V line");
            long long n = -1;
            if (!(ls >> n) || n < 0) fail("V expects a non-negative vertex count");
            std::string rest;
            if (ls >> rest) fail("trailing tokens after V");
            h = Hypergraph(VertexId(n), 0);
            sawVertexCount = true;
        } else if (tag == "E") {
            if (!sawVertexCount) fail("E before V");
            std::vector<VertexId> ids;
            long long v;
            while (ls >> v) {
                if (v < 0 || std::uint64_t(v) >= h.vertex_count()) fail("vertex id out of range");
                ids.push_back(VertexId(v));
            }
            if (!ls.eof()) fail("non-integer vertex id");
            try {
                h.add_edge(ids);
            } catch (const std::exception& e) {
                fail(e.what());
            }
        } else {
            fail("unknown directive '" + tag + "'");
        }
    }
    if (!sawVertexCount) throw HypergraphParseError("missing V line");
    return h;
}

void serialize_hypergraph(const Hypergraph& h, std::ostream& out) {
    out << "V " << h.vertex_count() << "\n";
    for (EdgeIndex e : serialize_order(h)) {
        out << "E";
        for (VertexId v : h.edge(e)) out << ' ' << v;
        out << "\n";
    }
}

std::string hypergraph_digest(const Hypergraph& h) {
    std::ostringstream os;
    serialize_hypergraph(h, os);
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char ch : os.str()) {
        hash ^= ch;
        hash *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace crush
