#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "dchain/coloring.hpp"
#include "dchain/formulas.hpp"
#include "dchain/solver.hpp"

namespace dchain {
namespace {

TEST(ColoringType, RequiresContiguousIds) {
    EXPECT_THROW(Coloring({0, 2}), std::invalid_argument);
    const Coloring c({1, 0, 1});
    EXPECT_EQ(c.color_count(), 2u);
    EXPECT_EQ(Coloring::canonical(std::vector<Color>{7, 3, 7, 9}), Coloring({0, 1, 0, 2}));
    EXPECT_EQ(c.classes(), (std::vector<std::vector<std::size_t>>{{1}, {0, 2}}));
}

TEST(Verify, TwoColoringOfSmallestChainIsProper) {
    // D(C_{1,3}) is a perfect matching: give the higher end of each edge color 1.
    const PointSet c = gen_double_chain(1, 3);
    const DisjointnessGraph g = build_graph(c);
    std::vector<Color> colors(6, 0);
    for (const auto& [u, v] : g.edges()) colors[v] = 1;
    const Coloring col = Coloring::canonical(colors);
    EXPECT_EQ(col.color_count(), 2u);
    EXPECT_TRUE(verify_coloring(g, col).proper);
}

TEST(Verify, CupToMiddleAndOuterCapSegmentConflict) {
    const PointSet c = gen_double_chain(1, 3);
    const DisjointnessGraph g = build_graph(c);
    std::vector<Color> colors(6);
    for (std::size_t v = 0; v < 6; ++v) colors[v] = static_cast<Color>(v);
    const std::size_t a = g.vertex({0, 2}), b = g.vertex({1, 3});
    colors[b] = colors[a];
    const Verdict verdict = verify_coloring(g, Coloring::canonical(colors));
    EXPECT_FALSE(verdict.proper);
    ASSERT_EQ(verdict.violations.size(), 1u);
    EXPECT_EQ(verdict.violations[0], std::make_pair(std::min(a, b), std::max(a, b)));
}

TEST(Verify, AllDistinctIsProperAndSizeIsChecked) {
    const DisjointnessGraph g = build_graph(gen_convex(6));
    std::vector<Color> colors(g.vertex_count());
    for (std::size_t v = 0; v < colors.size(); ++v) colors[v] = static_cast<Color>(v);
    EXPECT_TRUE(verify_coloring(g, Coloring(colors)).proper);
    colors.pop_back();
    EXPECT_THROW(verify_coloring(g, Coloring(colors)), std::invalid_argument);
}

TEST(Classify, StarThrackleAndSingleton) {
    const PointSet ps = gen_convex(5);
    const std::vector<SegmentId> star{{2, 0}, {2, 4}, {1, 2}};
    const ClassKind s = classify_class(ps, star);
    EXPECT_TRUE(s.is_star());
    EXPECT_EQ(s.apex, 2u);

    const std::vector<SegmentId> triangle{{0, 1}, {1, 2}, {0, 2}};
    const ClassKind t = classify_class(ps, triangle);
    EXPECT_FALSE(t.is_star());
    EXPECT_FALSE(t.apex.has_value());

    const std::vector<SegmentId> single{{3, 1}};
    const ClassKind one = classify_class(ps, single);
    EXPECT_TRUE(one.is_star());
    EXPECT_EQ(one.apex, 1u);

    EXPECT_THROW(classify_class(ps, std::vector<SegmentId>{}), std::invalid_argument);
}

TEST(Classify, SingletonsAndThrackleSizes) {
    // Classes on 4 points: {01}, {02, 03, 23}... built by rank.
    // ranks: 01:0 02:1 03:2 12:3 13:4 23:5
    const Coloring c({0, 1, 1, 2, 2, 1});
    EXPECT_EQ(singleton_class_count(c), 1u);
    const auto kinds = classify_classes(4, c);
    ASSERT_EQ(kinds.size(), 3u);
    EXPECT_TRUE(kinds[0].is_star());
    EXPECT_FALSE(kinds[1].is_star());  // 02, 03, 23 is a triangle
    EXPECT_TRUE(kinds[2].is_star());   // 12, 13 share 1
    EXPECT_EQ(kinds[2].apex, 1u);
    EXPECT_EQ(thrackle_class_sizes(4, c), std::vector<std::size_t>{3});
}

TEST(ThrackleBound, Boundaries) {
    EXPECT_TRUE(thrackle_edge_bound_ok(5, std::vector<std::size_t>{5}));
    EXPECT_TRUE(thrackle_edge_bound_ok(5, std::vector<std::size_t>{5, 4}));
    EXPECT_FALSE(thrackle_edge_bound_ok(5, std::vector<std::size_t>{5, 5}));
    EXPECT_TRUE(thrackle_edge_bound_ok(5, std::vector<std::size_t>{}));
    EXPECT_FALSE(thrackle_edge_bound_ok(5, std::vector<std::size_t>{6}));
}

ConvexProvider exact() { return exact_convex_provider(); }

TEST(Construction, SmallestChainUsesTwoColors) {
    const PointSet c = gen_double_chain(1, 3);
    const Coloring col = construct_double_chain_coloring(c, exact());
    EXPECT_EQ(col.color_count(), 2u);
    EXPECT_TRUE(verify_coloring(build_graph(c), col).proper);
}

TEST(Construction, TwoFourAndFiveSeven) {
    for (auto [k, l] : {std::pair<std::size_t, std::size_t>{2, 4}, {5, 7}}) {
        const PointSet c = gen_double_chain(k, l);
        const Coloring col = construct_double_chain_coloring(k, l, exact());
        EXPECT_TRUE(verify_coloring(build_graph(c), col).proper);
        EXPECT_EQ(col.color_count(), theorem_value(k, l));
    }
}

TEST(Construction, GridUpToEight) {
    for (std::size_t l = 3; l <= 8; ++l)
        for (std::size_t k = 1; k <= l; ++k) {
            const PointSet c = gen_double_chain(k, l);
            const Coloring col = construct_double_chain_coloring(c, exact());
            ASSERT_TRUE(verify_coloring(build_graph(c), col).proper) << k << "," << l;
            EXPECT_EQ(col.color_count(), theorem_value(k, l)) << k << "," << l;
        }
}

TEST(Construction, UpperClassesAreStarsAtUpperPoints) {
    for (std::size_t l = 3; l <= 7; ++l)
        for (std::size_t k = 1; k <= l; ++k) {
            const PointSet c = gen_double_chain(k, l);
            const std::size_t n = k + l;
            const Coloring col = construct_double_chain_coloring(c, exact());
            const auto classes = col.classes();
            const auto kinds = classify_classes(n, col);
            for (std::size_t x = 0; x < classes.size(); ++x) {
                bool touches_upper = false;
                for (std::size_t v : classes[x]) {
                    const SegmentId s = segment_at(v, n);
                    touches_upper = touches_upper || c.in_upper(s.i) || c.in_upper(s.j);
                }
                if (touches_upper) {
                    ASSERT_TRUE(kinds[x].is_star());
                    const SegmentId first = segment_at(classes[x][0], n);
                    const bool apex_in_upper =
                        c.in_upper(*kinds[x].apex) ||
                        (classes[x].size() == 1 && (c.in_upper(first.i) || c.in_upper(first.j)));
                    EXPECT_TRUE(apex_in_upper);
                } else {
                    for (std::size_t v : classes[x]) {
                        const SegmentId s = segment_at(v, n);
                        EXPECT_TRUE(c.in_lower(s.i) && c.in_lower(s.j));
                    }
                }
            }
        }
}

TEST(Construction, RejectsImproperProvider) {
    const ConvexProvider bad = [](const PointSet& lower) {
        return Coloring(std::vector<Color>(segment_count(lower.size()), 0));
    };
    EXPECT_THROW(construct_double_chain_coloring(2, 4, bad), std::invalid_argument);
}

TEST(ApexRemoval, NoApicesIsIdentity) {
    const PointSet c = gen_double_chain(2, 4);
    const Coloring col = construct_double_chain_coloring(c, exact());
    const ApexRemoval r = remove_star_apices(c, col, {});
    EXPECT_EQ(r.points, c);
    EXPECT_EQ(r.coloring, col);
}

TEST(ApexRemoval, RemovingBothCupPointsLeavesConvexColoring) {
    const PointSet c = gen_double_chain(2, 4);
    const Coloring col = construct_double_chain_coloring(c, exact());
    const std::vector<std::size_t> apices{0, 1};
    const ApexRemoval r = remove_star_apices(c, col, apices);
    EXPECT_EQ(r.points.size(), 4u);
    EXPECT_EQ(r.coloring.color_count(), f_of(4));
    EXPECT_EQ(r.coloring.color_count(), 2u);
    EXPECT_TRUE(verify_coloring(build_graph(r.points), r.coloring).proper);
}

TEST(ApexRemoval, OptimalColoringOfOneFourDropsOneColor) {
    const PointSet c = gen_double_chain(1, 4);
    const ChiResult chi = chromatic_number_exact(build_graph(c));
    ASSERT_TRUE(chi.exact());
    // Find a star class at the cup point, or fall back to the construction.
    Coloring input = chi.witness;
    const auto apices = star_apices(5, input);
    bool has_upper_star = std::find(apices.begin(), apices.end(), 0u) != apices.end();
    if (!has_upper_star) {
        input = construct_double_chain_coloring(c, exact());
        ASSERT_EQ(input.color_count(), chi.chi);
    }
    const std::vector<std::size_t> remove{0};
    const ApexRemoval r = remove_star_apices(c, input, remove);
    EXPECT_EQ(r.coloring.color_count(), chi.chi - 1);
    EXPECT_TRUE(verify_coloring(build_graph(r.points), r.coloring).proper);
    EXPECT_EQ(chromatic_number_exact(build_graph(r.points)).chi, chi.chi - 1);
}

TEST(ApexRemoval, RejectsNonApexAndDuplicates) {
    // On C_4: {01} singleton, {02, 03, 23} thrackle, {12, 13} star at 1.
    const PointSet ps = gen_convex(4);
    const Coloring col({0, 1, 1, 2, 2, 1});
    ASSERT_TRUE(verify_coloring(build_graph(ps), col).proper);
    const std::vector<std::size_t> dup{0, 0};
    EXPECT_THROW(remove_star_apices(ps, col, dup), std::invalid_argument);
    const std::vector<std::size_t> not_apex{3};
    EXPECT_THROW(remove_star_apices(ps, col, not_apex), std::invalid_argument);
    const std::vector<std::size_t> range{9};
    EXPECT_THROW(remove_star_apices(ps, col, range), std::out_of_range);
    // Point 1 is the apex of {01} as well as {12, 13}.
    const std::vector<std::size_t> ambiguous{1};
    EXPECT_THROW(remove_star_apices(ps, col, ambiguous), std::invalid_argument);
    const std::vector<std::size_t> one{0};
    const ApexRemoval r = remove_star_apices(ps, col, one);
    EXPECT_EQ(r.points.size(), 3u);
    EXPECT_EQ(r.coloring.color_count(), 2u);
}

TEST(ApexRemoval, PreservesPropernessOnConvexSets) {
    for (std::size_t n = 4; n <= 8; ++n) {
        const PointSet ps = gen_convex(n);
        const ChiResult chi = chromatic_number_exact(build_graph(ps));
        const auto apices = star_apices(n, chi.witness);
        if (apices.empty()) continue;
        const ApexRemoval r = remove_star_apices(ps, chi.witness, apices);
        EXPECT_EQ(r.coloring.color_count() + apices.size(), chi.chi);
        if (r.points.size() >= 2) {
            EXPECT_TRUE(verify_coloring(build_graph(r.points), r.coloring).proper);
        }
    }
}

}  // namespace
}  // namespace dchain
