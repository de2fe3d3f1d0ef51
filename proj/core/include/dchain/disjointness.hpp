#pragma once

// The edge disjointness graph D(P): one vertex per closed segment spanned by
// P, adjacent iff the two segments share no point.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dchain/bitset.hpp"
#include "dchain/geometry.hpp"

namespace dchain {

/// An unordered pair of point indices, stored with i < j.
struct SegmentId {
    std::size_t i = 0;
    std::size_t j = 0;

    SegmentId() = default;
    /// Normalizes the order; throws std::invalid_argument when a == b.
    SegmentId(std::size_t a, std::size_t b);

    bool has_endpoint(std::size_t v) const { return i == v || j == v; }
    bool shares_endpoint(const SegmentId& o) const {
        return has_endpoint(o.i) || has_endpoint(o.j);
    }

    friend bool operator==(const SegmentId&, const SegmentId&) = default;
    friend auto operator<=>(const SegmentId&, const SegmentId&) = default;
};

inline std::size_t segment_count(std::size_t n_points) {
    return n_points * (n_points - (n_points > 0 ? 1 : 0)) / 2;
}

/// Position of s in the lexicographic order of all segments on n points.
std::size_t segment_rank(const SegmentId& s, std::size_t n_points);
/// Inverse of segment_rank.
SegmentId segment_at(std::size_t rank, std::size_t n_points);

/// True iff the closed segments a and b of ps share no point.
/// Rejects a == b and out-of-range indices.
bool segments_disjoint(const SegmentId& a, const SegmentId& b, const PointSet& ps);

/// Simple undirected graph with dense bit rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertices);
    /// Throws std::invalid_argument on loops, duplicates or bad ids.
    Graph(std::size_t vertices, std::span<const std::pair<std::size_t, std::size_t>> edges);

    std::size_t vertex_count() const { return rows_.size(); }
    std::size_t edge_count() const { return edges_; }
    bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
    const Bitset& row(std::size_t u) const { return rows_[u]; }
    std::size_t degree(std::size_t u) const { return rows_[u].count(); }

    /// Adjacent pairs (u < v) in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

protected:
    void add_edge(std::size_t u, std::size_t v);

private:
    std::vector<Bitset> rows_;
    std::size_t edges_ = 0;
};

class DisjointnessGraph : public Graph {
public:
    DisjointnessGraph() = default;
    /// Rejects vertex counts other than C(n_points, 2).
    DisjointnessGraph(std::size_t n_points,
                      std::span<const std::pair<std::size_t, std::size_t>> edges);

    std::size_t n_points() const { return n_points_; }
    SegmentId segment(std::size_t vertex) const { return segment_at(vertex, n_points_); }
    std::size_t vertex(const SegmentId& s) const { return segment_rank(s, n_points_); }

    friend bool operator==(const DisjointnessGraph&, const DisjointnessGraph&) = default;

private:
    std::size_t n_points_ = 0;
};

/// Builds D(ps). Requires at least two points in general position.
DisjointnessGraph build_graph(const PointSet& ps);

/// Hull edges of the whole set in counterclockwise order.
std::vector<SegmentId> convex_hull_edges(const PointSet& ps);

enum class GraphFormat { Dimacs, Json };

/// DIMACS: "p edge V E" then "e u v" (1-based); JSON: 0-based edge list.
void export_graph(const DisjointnessGraph& g, GraphFormat format, std::ostream& out);
std::string export_graph(const DisjointnessGraph& g, GraphFormat format);

/// Parses the graph JSON produced by export_graph. When `points` is given
/// the edge set must equal the one derived from the points.
DisjointnessGraph import_graph_json(const std::string& text,
                                    const PointSet* points = nullptr);

/// Parses DIMACS edge format into a plain graph.
Graph import_dimacs(std::istream& in);

}  // namespace dchain
