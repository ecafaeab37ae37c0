#include <gtest/gtest.h>

#include "stairconv/monte_carlo.hpp"
#include "stairconv/rng.hpp"
#include "stairconv/staircore.hpp"
#include "support/oracles.hpp"

using namespace stairconv;

TEST(StairPath, OneDimensionIsTheSegment) {
    auto path = stair_path<double>({0.3}, {0.7});
    ASSERT_EQ(path.segments.size(), 1u);
    EXPECT_EQ(path.segments[0].a, Point{0.3});
    EXPECT_EQ(path.segments[0].b, Point{0.7});
}

TEST(StairPath, TwoDimensionsRisesThenMoves) {
    auto path = stair_path<double>({0.2, 0.3}, {0.7, 0.9});
    ASSERT_EQ(path.segments.size(), 2u);
    EXPECT_EQ(path.segments[0].a, (Point{0.2, 0.3}));
    EXPECT_EQ(path.segments[0].b, (Point{0.2, 0.9}));
    EXPECT_EQ(path.segments[1].a, (Point{0.2, 0.9}));
    EXPECT_EQ(path.segments[1].b, (Point{0.7, 0.9}));
}

TEST(StairPath, ThreeDimensionsUnfoldsLastCoordinateFirst) {
    auto path = stair_path<double>({0.1, 0.2, 0.3}, {0.9, 0.8, 0.7});
    ASSERT_EQ(path.segments.size(), 3u);
    EXPECT_EQ(path.segments[0].b, (Point{0.1, 0.2, 0.7}));
    EXPECT_EQ(path.segments[1].b, (Point{0.1, 0.8, 0.7}));
    EXPECT_EQ(path.segments[2].b, (Point{0.9, 0.8, 0.7}));
}

TEST(StairPath, DegenerateLegsAreDropped) {
    auto path = stair_path<double>({0.2, 0.5}, {0.7, 0.5});
    ASSERT_EQ(path.segments.size(), 1u);  // heights equal, only one leg
}

TEST(StairPath, SameSetForBothOrders) {
    Xoshiro256 rng(123);
    for (int rep = 0; rep < 200; ++rep) {
        int d = 1 + static_cast<int>(rng.below(5));
        Point a = oracle::random_point(rng, d), b = oracle::random_point(rng, d);
        auto ab = stair_path(a, b);
        auto ba = stair_path(b, a);
        ASSERT_EQ(ab.segments.size(), ba.segments.size());
        for (size_t i = 0; i < ab.segments.size(); ++i) {
            const auto& r = ba.segments[ba.segments.size() - 1 - i];
            EXPECT_EQ(ab.segments[i].a, r.b);
            EXPECT_EQ(ab.segments[i].b, r.a);
        }
    }
}

TEST(StairPath, ChainIsConnectedAndVerticesLieOnSegments) {
    Xoshiro256 rng(321);
    for (int rep = 0; rep < 200; ++rep) {
        int d = 1 + static_cast<int>(rng.below(6));
        Point a = oracle::random_point(rng, d), b = oracle::random_point(rng, d);
        auto path = stair_path(a, b);
        ASSERT_LE(path.segments.size(), static_cast<size_t>(d));
        ASSERT_FALSE(path.segments.empty());
        EXPECT_EQ(path.segments.front().a, a);
        EXPECT_EQ(path.segments.back().b, b);
        for (size_t i = 0; i + 1 < path.segments.size(); ++i) {
            EXPECT_EQ(path.segments[i].b, path.segments[i + 1].a);
        }
        for (const auto& seg : path.segments) {
            EXPECT_TRUE(oracle::on_segment(seg.a, seg.a, seg.b));
            EXPECT_TRUE(oracle::on_segment(seg.b, seg.a, seg.b));
            int vary = 0;
            for (size_t c = 0; c < seg.a.size(); ++c) vary += seg.a[c] != seg.b[c] ? 1 : 0;
            EXPECT_EQ(vary, 1);  // each leg varies in exactly one coordinate
        }
    }
}

TEST(StairPath, DimensionMismatchThrows) {
    EXPECT_THROW(stair_path<double>({0.1, 0.2}, {0.3}), DimensionMismatchError);
}

TEST(TypeOf, Examples) {
    EXPECT_EQ(type_of<double>({0.1, 0.2, 0.3}, {0.5, 0.5, 0.5}), 0);
    EXPECT_EQ(type_of<double>({0.4, 0.6, 0.4}, {0.5, 0.5, 0.5}), 2);
    EXPECT_EQ(type_of<double>({0.1, 0.2, 0.9}, {0.5, 0.5, 0.5}), 3);
}

TEST(TypeOf, SharedCoordinateThrows) {
    EXPECT_THROW(type_of<double>({0.5, 0.2}, {0.5, 0.6}), SharedCoordinateError);
}

TEST(TypeRegionVolumes, ClosedFormExamples) {
    auto v = type_region_volumes({2.0 / 3, 2.0 / 3});
    ASSERT_EQ(v.size(), 3u);
    EXPECT_NEAR(v[0], 4.0 / 9, 1e-15);
    EXPECT_NEAR(v[1], 2.0 / 9, 1e-15);
    EXPECT_NEAR(v[2], 1.0 / 3, 1e-15);

    auto v1 = type_region_volumes({0.5});
    EXPECT_NEAR(v1[0], 0.5, 1e-15);
    EXPECT_NEAR(v1[1], 0.5, 1e-15);
}

TEST(TypeRegionVolumes, SumToOne) {
    Xoshiro256 rng(7);
    for (int d = 1; d <= 6; ++d) {
        for (int rep = 0; rep < 1000; ++rep) {
            Point a(static_cast<size_t>(d));
            for (auto& c : a) c = 0.001 + 0.998 * rng.uniform01();
            auto v = type_region_volumes(a);
            double sum = 0;
            for (double x : v) sum += x;
            ASSERT_NEAR(sum, 1.0, 1e-12);
        }
    }
}

TEST(TypeRegionVolumes, MatchesEmpiricalTypeCounts) {
    // classify 10^6 uniform points per dimension against the closed form
    for (int d = 2; d <= 5; ++d) {
        Xoshiro256 rng(mix_seed(99, static_cast<uint64_t>(d)));
        Point a(static_cast<size_t>(d));
        for (auto& c : a) c = 0.1 + 0.8 * rng.uniform01();
        auto v = type_region_volumes(a);
        const int64_t n = 1000000;
        std::vector<int64_t> counts(static_cast<size_t>(d) + 1, 0);
        Point b(static_cast<size_t>(d));
        for (int64_t i = 0; i < n; ++i) {
            for (auto& c : b) c = rng.uniform01();
            ++counts[static_cast<size_t>(type_of(b, a))];
        }
        for (int j = 0; j <= d; ++j) {
            double expect = v[static_cast<size_t>(j)];
            double got = static_cast<double>(counts[static_cast<size_t>(j)]) / n;
            double sigma = std::sqrt(expect * (1 - expect) / n);
            EXPECT_NEAR(got, expect, 4 * sigma) << "d=" << d << " type " << j;
        }
    }
}

TEST(TypeRegionVolumes, BoundaryInputThrows) {
    EXPECT_THROW(type_region_volumes({0.0, 0.5}), DomainError);
    EXPECT_THROW(type_region_volumes({0.5, 1.0}), DomainError);
}

TEST(PointInStconv, Examples) {
    EXPECT_TRUE(point_in_stconv<double>({{0.2}, {0.8}}, {0.5}));
    EXPECT_TRUE(point_in_stconv<double>({{0.1, 0.1}, {0.9, 0.2}, {0.3, 0.9}}, {0.5, 0.5}));
    EXPECT_FALSE(point_in_stconv<double>({{0.1, 0.1}, {0.2, 0.3}}, {0.5, 0.5}));
}

TEST(PointInStconv, AgreesWithSliceRecursion) {
    Xoshiro256 rng(2024);
    for (int d = 2; d <= 4; ++d) {
        for (int rep = 0; rep < 10000 / d; ++rep) {
            int count = d + 1 + static_cast<int>(rng.below(3));
            auto pts = oracle::random_generic_set(rng, count + 1, d);
            Point a = pts.back();
            pts.pop_back();
            ASSERT_EQ(point_in_stconv(pts, a), oracle::in_stconv_slice(pts, a))
                << "d=" << d << " rep=" << rep;
        }
    }
}

TEST(StconvIntersect, OneDimensionalOverlap) {
    EXPECT_TRUE(stconv_intersect<double>({{0.2}, {0.8}}, {{0.5}}));
    EXPECT_FALSE(stconv_intersect<double>({{0.2}, {0.4}}, {{0.5}}));
}

TEST(StconvIntersect, SmallSetsNeverMeet) {
    // |Y| + |Z| < d + 2
    EXPECT_FALSE(stconv_intersect<double>({{0.1, 0.9}}, {{0.5, 0.5}, {0.6, 0.6}}));
}

TEST(StconvIntersect, HandTracedCrossing) {
    PointSet Y{{0.2, 0.8}, {0.55, 0.2}};
    PointSet Z{{0.5, 0.5}, {0.6, 0.6}};
    EXPECT_TRUE(stconv_intersect(Y, Z));
    // the vertical leg of the Y path at x=0.55 crosses the horizontal leg of
    // the Z path at y=0.6; shrinking Y to miss it flips the answer
    PointSet Y2{{0.2, 0.8}, {0.45, 0.2}};
    EXPECT_FALSE(stconv_intersect(Y2, Z));
}

TEST(StconvIntersect, ErrorsOnBadInput) {
    EXPECT_THROW(stconv_intersect<double>({}, {{0.5}}), EmptyInputError);
    EXPECT_THROW(stconv_intersect<double>({{0.5, 0.2}}, {{0.5, 0.7}, {0.1, 0.9}}),
                 SharedCoordinateError);
}

TEST(StconvIntersect, SymmetricInItsArguments) {
    Xoshiro256 rng(77);
    for (int rep = 0; rep < 3000; ++rep) {
        int d = 1 + static_cast<int>(rng.below(4));
        int s = 1 + static_cast<int>(rng.below(3));
        int t = std::max(1, d + 2 - s) + static_cast<int>(rng.below(2));
        auto pts = oracle::random_generic_set(rng, s + t, d);
        PointSet Y(pts.begin(), pts.begin() + s), Z(pts.begin() + s, pts.end());
        ASSERT_EQ(stconv_intersect(Y, Z), stconv_intersect(Z, Y)) << "rep " << rep;
    }
}

TEST(StconvIntersect, MonotoneUnderEnlargement) {
    Xoshiro256 rng(78);
    int grown = 0;
    for (int rep = 0; rep < 2000; ++rep) {
        int d = 2 + static_cast<int>(rng.below(3));
        auto pts = oracle::random_generic_set(rng, d + 4, d);
        PointSet Y(pts.begin(), pts.begin() + 2);
        PointSet Z(pts.begin() + 2, pts.begin() + 2 + d);
        PointSet Ybig = Y;  // Y plus two fresh points not in Z
        Ybig.push_back(pts[static_cast<size_t>(d) + 2]);
        Ybig.push_back(pts[static_cast<size_t>(d) + 3]);
        if (stconv_intersect(Y, Z)) {
            EXPECT_TRUE(stconv_intersect(Ybig, Z)) << "rep " << rep;
            ++grown;
        }
    }
    EXPECT_GT(grown, 20);  // the property must actually get exercised
}

TEST(StabCheck, RequiresExactlyDVertices) {
    EXPECT_THROW(stab_check<double>({0.1, 0.9}, {0.4, 0.2}, {{0.5, 0.5}}),
                 DimensionMismatchError);
}

TEST(StabCheck, KnownCrossing) {
    EXPECT_TRUE(stab_check<double>({0.2, 0.8}, {0.55, 0.2}, {{0.5, 0.5}, {0.6, 0.6}}));
}

TEST(StabCheck, SimplexAboveThePathMisses) {
    // all simplex vertices higher than both endpoints, below them elsewhere
    Point q{0.8, 0.7, 0.5}, p{0.5, 0.6, 0.1};
    PointSet Z{{0.1, 0.2, 0.9}, {0.2, 0.3, 0.8}, {0.3, 0.1, 0.7}};
    EXPECT_FALSE(stab_check(q, p, Z));
}

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    return RUN_ALL_TESTS();
}
