#include "dchain/disjointness.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dchain {

using nlohmann::json;

SegmentId::SegmentId(std::size_t a, std::size_t b) : i(std::min(a, b)), j(std::max(a, b)) {
    if (a == b) throw std::invalid_argument("segment endpoints must differ");
}

std::size_t segment_rank(const SegmentId& s, std::size_t n_points) {
    if (s.j >= n_points || s.i >= s.j) throw std::out_of_range("segment index out of range");
    return s.i * (2 * n_points - s.i - 1) / 2 + (s.j - s.i - 1);
}

SegmentId segment_at(std::size_t rank, std::size_t n_points) {
    std::size_t i = 0;
    while (i + 1 < n_points) {
        const std::size_t row = n_points - i - 1;
        if (rank < row) return SegmentId(i, i + 1 + rank);
        rank -= row;
        ++i;
    }
    throw std::out_of_range("segment rank out of range");
}

bool segments_disjoint(const SegmentId& a, const SegmentId& b, const PointSet& ps) {
    if (a.j >= ps.size() || b.j >= ps.size())
        throw std::out_of_range("segment index out of range");
    if (a == b) throw std::invalid_argument("segments_disjoint: identical segments");
    if (a.shares_endpoint(b)) return false;
    return !closed_segments_intersect(ps[a.i], ps[a.j], ps[b.i], ps[b.j]);
}

Graph::Graph(std::size_t vertices) : rows_(vertices, Bitset(vertices)) {}

Graph::Graph(std::size_t vertices, std::span<const std::pair<std::size_t, std::size_t>> edges)
    : Graph(vertices) {
    for (const auto& [u, v] : edges) {
        if (u >= vertices || v >= vertices) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph must not contain loops");
        if (adjacent(u, v)) throw std::invalid_argument("duplicate edge");
        add_edge(u, v);
    }
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    rows_[u].set(v);
    rows_[v].set(u);
    ++edges_;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edges_);
    for (std::size_t u = 0; u < rows_.size(); ++u)
        rows_[u].for_each([&](std::size_t v) {
            if (v > u) out.emplace_back(u, v);
        });
    return out;
}

DisjointnessGraph::DisjointnessGraph(std::size_t n_points,
                                     std::span<const std::pair<std::size_t, std::size_t>> edges)
    : Graph(segment_count(n_points), edges), n_points_(n_points) {}

DisjointnessGraph build_graph(const PointSet& ps) {
    const std::size_t n = ps.size();
    if (n < 2) throw std::invalid_argument("build_graph: need at least two points");
    if (auto t = find_collinear_triple(ps)) {
        std::ostringstream msg;
        msg << "build_graph: points " << (*t)[0] << ", " << (*t)[1] << ", " << (*t)[2]
            << " are collinear";
        throw std::invalid_argument(msg.str());
    }
    std::vector<SegmentId> segs;
    segs.reserve(segment_count(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) segs.emplace_back(i, j);

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < segs.size(); ++u)
        for (std::size_t v = u + 1; v < segs.size(); ++v)
            if (segments_disjoint(segs[u], segs[v], ps)) edges.emplace_back(u, v);
    return DisjointnessGraph(n, edges);
}

std::vector<SegmentId> convex_hull_edges(const PointSet& ps) {
    if (ps.size() < 3) throw std::invalid_argument("convex_hull_edges: need at least three points");
    if (!is_general_position(ps))
        throw std::invalid_argument("convex_hull_edges: points not in general position");
    const auto hull = convex_hull(ps);
    std::vector<SegmentId> out;
    for (std::size_t i = 0; i < hull.size(); ++i)
        out.emplace_back(hull[i], hull[(i + 1) % hull.size()]);
    return out;
}

void export_graph(const DisjointnessGraph& g, GraphFormat format, std::ostream& out) {
    const auto edges = g.edges();
    if (format == GraphFormat::Dimacs) {
        out << "p edge " << g.vertex_count() << ' ' << edges.size() << '\n';
        for (const auto& [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    } else {
        json j;
        j["n_points"] = g.n_points();
        j["vertices"] = g.vertex_count();
        j["edges"] = json::array();
        for (const auto& [u, v] : edges) j["edges"].push_back({u, v});
        out << j.dump() << '\n';
    }
    if (!out) throw std::ios_base::failure("export_graph: write failed");
}

std::string export_graph(const DisjointnessGraph& g, GraphFormat format) {
    std::ostringstream os;
    export_graph(g, format, os);
    return os.str();
}

DisjointnessGraph import_graph_json(const std::string& text, const PointSet* points) {
    std::size_t n_points = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    try {
        const json j = json::parse(text);
        n_points = j.at("n_points").get<std::size_t>();
        const auto vertices = j.at("vertices").get<std::size_t>();
        if (vertices != segment_count(n_points))
            throw std::invalid_argument("graph JSON: vertex count does not match n_points");
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON: bad edge");
            auto u = e[0].get<std::size_t>();
            auto v = e[1].get<std::size_t>();
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("graph JSON: ") + e.what());
    }
    DisjointnessGraph g(n_points, edges);
    if (points) {
        if (points->size() != n_points)
            throw std::invalid_argument("graph JSON: point count mismatch");
        if (!(build_graph(*points) == g))
            throw std::invalid_argument("graph JSON: edges differ from those of the points");
    }
    return g;
}

Graph import_dimacs(std::istream& in) {
    std::string line;
    std::optional<std::size_t> vertices;
    std::size_t declared = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            std::size_t v = 0;
            if (!(ls >> kind >> v >> declared)) throw std::invalid_argument("DIMACS: bad header");
            vertices = v;
        } else if (tag == "e") {
            std::size_t u = 0, v = 0;
            if (!vertices || !(ls >> u >> v) || u == 0 || v == 0)
                throw std::invalid_argument("DIMACS: bad edge line");
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw std::invalid_argument("DIMACS: unknown line tag " + tag);
        }
    }
    if (!vertices) throw std::invalid_argument("DIMACS: missing header");
    if (edges.size() != declared) throw std::invalid_argument("DIMACS: edge count mismatch");
    return Graph(*vertices, edges);
}

}  // namespace dchain
