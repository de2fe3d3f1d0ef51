#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dchain/disjointness.hpp"
#include "oracles.hpp"

namespace dchain {
namespace {

// The segment pairs that are disjoint, computed by the parametric oracle.
std::vector<std::pair<std::size_t, std::size_t>> oracle_edges(const PointSet& ps) {
    const auto m = oracle::disjointness_matrix(ps);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < m.size(); ++u)
        for (std::size_t v = u + 1; v < m.size(); ++v)
            if (m[u][v]) out.emplace_back(u, v);
    return out;
}

TEST(SegmentId, NormalizesAndRejectsLoops) {
    const SegmentId s(4, 1);
    EXPECT_EQ(s.i, 1u);
    EXPECT_EQ(s.j, 4u);
    EXPECT_THROW(SegmentId(2, 2), std::invalid_argument);
}

TEST(SegmentId, RankIsLexicographicAndInvertible) {
    for (std::size_t n = 2; n <= 12; ++n) {
        std::size_t expected = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const SegmentId s(i, j);
                EXPECT_EQ(segment_rank(s, n), expected);
                EXPECT_EQ(segment_at(expected, n), s);
                ++expected;
            }
        EXPECT_EQ(expected, segment_count(n));
    }
}

TEST(SegmentsDisjoint, SharedEndpointIntersects) {
    const PointSet ps = gen_convex(4);
    EXPECT_FALSE(segments_disjoint({0, 1}, {1, 2}, ps));
}

TEST(SegmentsDisjoint, QuadrilateralDiagonalsIntersect) {
    const PointSet ps = gen_convex(4);  // 0-2 and 1-3 are the diagonals
    EXPECT_FALSE(segments_disjoint({0, 2}, {1, 3}, ps));
    EXPECT_TRUE(segments_disjoint({0, 1}, {2, 3}, ps));
}

TEST(SegmentsDisjoint, CupPointToMiddleCapPoint) {
    // C_{1,3}: index 0 is the U point, 1..3 are x1, x2, x3 from left to right.
    const PointSet c = gen_double_chain(1, 3);
    EXPECT_TRUE(segments_disjoint({0, 2}, {1, 3}, c));
}

TEST(SegmentsDisjoint, RejectsEqualAndOutOfRange) {
    const PointSet ps = gen_convex(4);
    EXPECT_THROW(segments_disjoint({0, 1}, {0, 1}, ps), std::invalid_argument);
    EXPECT_THROW(segments_disjoint({0, 1}, {2, 4}, ps), std::out_of_range);
}

TEST(SegmentsDisjoint, SymmetricOnRandomSets) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Coord> coord(-50, 50);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Point> pts;
        while (pts.size() < 6) {
            const Point p{coord(rng), coord(rng)};
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        }
        const PointSet ps(pts);
        for (std::size_t u = 0; u < 15; ++u)
            for (std::size_t v = 0; v < 15; ++v) {
                if (u == v) continue;
                const SegmentId a = segment_at(u, 6), b = segment_at(v, 6);
                EXPECT_EQ(segments_disjoint(a, b, ps), segments_disjoint(b, a, ps));
            }
    }
}

TEST(BuildGraph, ConvexFourHasTwoOppositeSidePairs) {
    const PointSet ps = gen_convex(4);
    const DisjointnessGraph g = build_graph(ps);
    EXPECT_EQ(g.vertex_count(), 6u);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.edges(), oracle_edges(ps));
}

TEST(BuildGraph, SmallestChainIsAPerfectMatching) {
    const PointSet c = gen_double_chain(1, 3);
    const DisjointnessGraph g = build_graph(c);
    EXPECT_EQ(g.vertex_count(), 6u);
    EXPECT_EQ(g.edge_count(), 3u);
    for (std::size_t v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 1u);
    EXPECT_EQ(g.edges(), oracle_edges(c));
}

TEST(BuildGraph, TwoPointsGiveOneIsolatedVertex) {
    const DisjointnessGraph g = build_graph(gen_convex(2));
    EXPECT_EQ(g.vertex_count(), 1u);
    EXPECT_EQ(g.edge_count(), 0u);
    EXPECT_EQ(g.n_points(), 2u);
}

TEST(BuildGraph, RejectsDegenerateInput) {
    EXPECT_THROW(build_graph(PointSet({{0, 0}, {1, 1}, {2, 2}})), std::invalid_argument);
    EXPECT_THROW(build_graph(PointSet({{0, 0}})), std::invalid_argument);
}

TEST(BuildGraph, MatchesParametricOracleOnRandomSets) {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<Coord> coord(0, 40);
    for (std::size_t n = 2; n <= 9; ++n) {
        int built = 0;
        while (built < 25) {
            std::vector<Point> pts;
            while (pts.size() < n) {
                const Point p{coord(rng), coord(rng)};
                if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
            }
            const PointSet ps(pts);
            if (!is_general_position(ps)) continue;
            ++built;
            const DisjointnessGraph g = build_graph(ps);
            EXPECT_EQ(g.edges(), oracle_edges(ps)) << "n=" << n;
        }
    }
}

TEST(BuildGraph, MatchesParametricOracleOnGeneratedSets) {
    for (std::size_t n = 3; n <= 9; ++n) {
        const PointSet ps = gen_convex(n);
        EXPECT_EQ(build_graph(ps).edges(), oracle_edges(ps));
    }
    for (std::size_t l = 1; l <= 8; ++l)
        for (std::size_t k = 1; k <= l && k + l <= 9; ++k) {
            const PointSet c = gen_double_chain(k, l);
            EXPECT_EQ(build_graph(c).edges(), oracle_edges(c)) << k << "," << l;
        }
}

TEST(BuildGraph, VertexNumberingFollowsRank) {
    const DisjointnessGraph g = build_graph(gen_convex(6));
    for (std::size_t v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.vertex(g.segment(v)), v);
}

TEST(BuildGraph, ChainHullEdgesAreAdjacentToEveryAvoidingSegment) {
    for (std::size_t l = 2; l <= 7; ++l)
        for (std::size_t k = 1; k <= l && k + l <= 9; ++k) {
            const PointSet c = gen_double_chain(k, l);
            const DisjointnessGraph g = build_graph(c);
            for (const auto& e : chain_hull_segments(c)) {
                const SegmentId h(e[0], e[1]);
                for (std::size_t v = 0; v < g.vertex_count(); ++v) {
                    const SegmentId s = g.segment(v);
                    if (s == h || s.shares_endpoint(h)) continue;
                    EXPECT_TRUE(g.adjacent(g.vertex(h), v));
                }
            }
        }
}

TEST(HullEdges, ChainsWithBothSidesLargeHaveFour) {
    for (std::size_t l = 2; l <= 10; ++l)
        for (std::size_t k = 2; k <= l && k + l <= 12; ++k)
            EXPECT_EQ(convex_hull_edges(gen_double_chain(k, l)).size(), 4u) << k << "," << l;
    EXPECT_EQ(convex_hull_edges(gen_double_chain(2, 3)).size(), 4u);
}

TEST(HullEdges, SingleCupPointGivesTriangle) {
    const PointSet c = gen_double_chain(1, 3);
    const auto hull = convex_hull_edges(c);
    ASSERT_EQ(hull.size(), 3u);
    for (const SegmentId& s : hull) EXPECT_FALSE(s.has_endpoint(2));  // middle cap point
}

TEST(HullEdges, ConvexPentagon) {
    const auto hull = convex_hull_edges(gen_convex(5));
    EXPECT_EQ(hull.size(), 5u);
    EXPECT_THROW(convex_hull_edges(gen_convex(2)), std::invalid_argument);
}

TEST(Export, DimacsHeaderAndEdges) {
    const DisjointnessGraph g = build_graph(gen_convex(4));
    const std::string text = export_graph(g, GraphFormat::Dimacs);
    EXPECT_EQ(text.substr(0, text.find('\n')), "p edge 6 2");
    std::istringstream in(text);
    const Graph back = import_dimacs(in);
    EXPECT_EQ(back.edges(), g.edges());
}

TEST(Export, DimacsOfTwoPoints) {
    const std::string text = export_graph(build_graph(gen_convex(2)), GraphFormat::Dimacs);
    EXPECT_EQ(text, "p edge 1 0\n");
}

TEST(Export, JsonRoundTrip) {
    for (const PointSet& ps : {gen_convex(6), gen_double_chain(2, 4)}) {
        const DisjointnessGraph g = build_graph(ps);
        const std::string text = export_graph(g, GraphFormat::Json);
        EXPECT_EQ(import_graph_json(text), g);
        EXPECT_EQ(import_graph_json(text, &ps), g);
        EXPECT_EQ(export_graph(import_graph_json(text), GraphFormat::Json), text);
    }
}

TEST(Export, JsonImportRejectsInconsistentInput) {
    const PointSet ps = gen_convex(4);
    EXPECT_THROW(import_graph_json(R"({"n_points":4,"vertices":6,"edges":[[0,0]]})"),
                 std::invalid_argument);
    EXPECT_THROW(import_graph_json(R"({"n_points":4,"vertices":5,"edges":[]})"),
                 std::invalid_argument);
    EXPECT_THROW(import_graph_json(R"({"n_points":4,"vertices":6,"edges":[[0,1]]})", &ps),
                 std::invalid_argument);
    EXPECT_THROW(import_graph_json("not json"), std::invalid_argument);
}

TEST(Export, DimacsImportRejectsMalformedInput) {
    std::istringstream no_header("e 1 2\n");
    EXPECT_THROW(import_dimacs(no_header), std::invalid_argument);
    std::istringstream bad_vertex("p edge 2 1\ne 1 3\n");
    EXPECT_THROW(import_dimacs(bad_vertex), std::invalid_argument);
    std::istringstream count_mismatch("p edge 3 2\ne 1 2\n");
    EXPECT_THROW(import_dimacs(count_mismatch), std::invalid_argument);
    std::istringstream with_comments("c hello\np edge 3 1\ne 1 3\n");
    EXPECT_EQ(import_dimacs(with_comments).edge_count(), 1u);
}

TEST(GraphType, RejectsLoopsAndDuplicates) {
    const std::vector<std::pair<std::size_t, std::size_t>> loop{{1, 1}};
    EXPECT_THROW(Graph(3, loop), std::invalid_argument);
    const std::vector<std::pair<std::size_t, std::size_t>> dup{{0, 1}, {1, 0}};
    EXPECT_THROW(Graph(3, dup), std::invalid_argument);
    const std::vector<std::pair<std::size_t, std::size_t>> range{{0, 3}};
    EXPECT_THROW(Graph(3, range), std::invalid_argument);
}

}  // namespace
}  // namespace dchain
