#include <gtest/gtest.h>

#include <sstream>

#include "stairconv/census.hpp"
#include "stairconv/recfsg.hpp"
#include "stairconv/recfsd.hpp"
#include "stairconv/convex_stab.hpp"
#include "stairconv/stretched.hpp"
#include "stairconv/transference.hpp"

using namespace stairconv;

TEST(BuildStretched, MinimalGrowthAxes) {
    auto s = build_stretched(StretchedKind::grid, 2, 3);
    EXPECT_EQ(s.stretch[0], BigInt(4));
    EXPECT_EQ(s.axis_coords[0], (std::vector<BigInt>{1, 4, 16}));
    EXPECT_EQ(s.stretch[1], BigInt(64));
    EXPECT_EQ(s.axis_coords[1], (std::vector<BigInt>{1, 64, 4096}));
}

TEST(BuildStretched, DwarfingHoldsByConstruction) {
    auto s = build_stretched(StretchedKind::grid, 3, 5);
    for (int i = 0; i < s.dim; ++i) {
        for (int j = 0; j + 1 < s.size; ++j) {
            EXPECT_LE(s.stretch[static_cast<size_t>(i)] * s.axis_coords[static_cast<size_t>(i)][static_cast<size_t>(j)],
                      s.axis_coords[static_cast<size_t>(i)][static_cast<size_t>(j) + 1]);
        }
    }
    EXPECT_EQ(s.axis_coords[0][0], BigInt(1));
}

TEST(BuildStretched, DiagonalTakesOnePointPerLayer) {
    auto s = build_stretched(StretchedKind::diagonal, 3, 4);
    auto pts = s.points();
    ASSERT_EQ(pts.size(), 4u);
    for (int j = 0; j < 4; ++j) {
        for (int i = 0; i < 3; ++i) {
            EXPECT_EQ(pts[static_cast<size_t>(j)][static_cast<size_t>(i)],
                      Rational(s.axis_coords[static_cast<size_t>(i)][static_cast<size_t>(j)]));
        }
    }
}

TEST(BuildStretched, UniformIsEvenlySpaced) {
    auto s = build_stretched(StretchedKind::uniform, 2, 4);
    for (int i = 0; i < 2; ++i) {
        BigInt step = s.axis_coords[static_cast<size_t>(i)][1] - s.axis_coords[static_cast<size_t>(i)][0];
        for (int j = 0; j + 1 < 4; ++j) {
            EXPECT_EQ(s.axis_coords[static_cast<size_t>(i)][static_cast<size_t>(j) + 1] -
                          s.axis_coords[static_cast<size_t>(i)][static_cast<size_t>(j)],
                      step);
        }
    }
}

TEST(BuildStretched, InputValidation) {
    EXPECT_THROW(build_stretched(StretchedKind::grid, 1, 3), DomainError);
    EXPECT_THROW(build_stretched(StretchedKind::grid, 2, 1), DomainError);
}

TEST(PiMap, GridPointsLandOnTheUniformGrid) {
    auto s = build_stretched(StretchedKind::grid, 3, 4);
    auto pts = s.points();
    for (const auto& pt : pts) {
        RationalPoint u = pi_map(s, pt);
        for (int i = 0; i < 3; ++i) {
            Rational expected = 0;
            for (int j = 0; j < 4; ++j) {
                if (Rational(s.axis_coords[static_cast<size_t>(i)][static_cast<size_t>(j)]) ==
                    pt[static_cast<size_t>(i)]) {
                    expected = Rational(j, 3);
                }
            }
            EXPECT_EQ(u[static_cast<size_t>(i)], expected);
        }
    }
    // corner cases
    RationalPoint low{1, 1, 1};
    EXPECT_EQ(pi_map(s, low), (RationalPoint{0, 0, 0}));
}

TEST(PiMap, CellMidpointsInterpolateLinearly) {
    auto s = build_stretched(StretchedKind::grid, 2, 3);
    RationalPoint mid{(Rational(1) + Rational(4)) / 2, Rational(1)};
    RationalPoint u = pi_map(s, mid);
    EXPECT_EQ(u[0], Rational(1, 4));  // halfway through the first of two cells
    EXPECT_EQ(u[1], Rational(0));
}

TEST(PiMap, PreimageInverts) {
    auto s = build_stretched(StretchedKind::grid, 3, 5);
    for (const Rational& u : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(4, 5),
                              Rational(17, 32), Rational(1)}) {
        RationalPoint unit{u, Rational(1) - u / 2, u / 3};
        RationalPoint x = pi_preimage(s, unit);
        EXPECT_EQ(pi_map(s, x), unit);
        EXPECT_TRUE(s.in_bounding_box(x));
    }
    EXPECT_THROW(pi_map(s, RationalPoint{Rational(0), Rational(1), Rational(1)}), DomainError);
}

TEST(PiMap, PreservesPerCoordinateOrder) {
    auto s = build_stretched(StretchedKind::grid, 2, 5);
    Xoshiro256 rng(31);
    for (int rep = 0; rep < 2000; ++rep) {
        RationalPoint a(2), b(2);
        for (int i = 0; i < 2; ++i) {
            Rational span(s.axis_max(i) - 1);
            a[static_cast<size_t>(i)] = Rational(1) + Rational(rng.below(1u << 30), 1u << 30) * span;
            b[static_cast<size_t>(i)] = Rational(1) + Rational(rng.below(1u << 30), 1u << 30) * span;
        }
        RationalPoint ua = pi_map(s, a), ub = pi_map(s, b);
        for (int i = 0; i < 2; ++i) {
            ASSERT_EQ(a[static_cast<size_t>(i)] < b[static_cast<size_t>(i)],
                      ua[static_cast<size_t>(i)] < ub[static_cast<size_t>(i)]);
        }
    }
}

TEST(FarApart, GridPointExamples) {
    auto s = build_stretched(StretchedKind::grid, 2, 4);
    auto at = [&](int j1, int j2) {
        return RationalPoint{Rational(s.axis_coords[0][static_cast<size_t>(j1)]),
                             Rational(s.axis_coords[1][static_cast<size_t>(j2)])};
    };
    EXPECT_TRUE(far_apart(at(0, 0), at(1, 1), s));
    EXPECT_TRUE(far_apart(at(0, 3), at(3, 0), s));
    EXPECT_FALSE(far_apart(at(0, 0), at(1, 0), s));  // shared second coordinate
    EXPECT_FALSE(far_apart(at(2, 2), at(2, 2), s));  // a point vs itself
}

TEST(ExportPoints, IntegerRows) {
    auto s = build_stretched(StretchedKind::grid, 2, 3);
    std::ostringstream os;
    export_points(os, s);
    std::string text = os.str();
    EXPECT_EQ(text.substr(0, 4), "1 1\n");
    size_t rows = 0;
    for (char ch : text) rows += ch == '\n' ? 1 : 0;
    EXPECT_EQ(rows, 9u);
    EXPECT_NE(text.find("16 4096"), std::string::npos);
}

TEST(ConvexStabExact, HandGeometry) {
    RationalPoint q{1, -1}, p{1, 1};
    std::vector<RationalPoint> Z{{0, 0}, {2, 0}};
    EXPECT_TRUE(convex_stab_exact(q, p, Z));
    EXPECT_FALSE(convex_stab_exact(RationalPoint{3, 1}, RationalPoint{4, 2}, Z));
}

TEST(ConvexStabExact, TouchingCountsAsIntersection) {
    RationalPoint q{0, 0}, p{1, 0};
    std::vector<RationalPoint> Z{{1, 0}, {2, 1}};
    EXPECT_TRUE(convex_stab_exact(q, p, Z));  // endpoint meets a vertex
}

TEST(ConvexStabExact, DegenerateSimplexIsHandled) {
    // collinear vertices: rank-deficient equality system
    std::vector<RationalPoint> Z{{0, 0}, {1, 0}, {2, 0}};
    EXPECT_TRUE(convex_stab_exact(RationalPoint{Rational(3, 2), -1}, RationalPoint{Rational(3, 2), 1}, Z));
    EXPECT_FALSE(convex_stab_exact(RationalPoint{Rational(5, 2), -1}, RationalPoint{Rational(5, 2), 1}, Z));
    // segment lying inside the degenerate hull
    EXPECT_TRUE(convex_stab_exact(RationalPoint{Rational(1, 2), 0}, RationalPoint{1, 0}, Z));
}

TEST(ConvexStabExact, FastAndGeneralPathsAgree) {
    // random small-rational instances, including degenerate simplices, must
    // get the same answer from the fraction-free square path (plus bounding
    // boxes) and from the rational-elimination fallback
    Xoshiro256 rng(99);
    auto coord = [&rng]() {
        int num = static_cast<int>(rng.below(33)) - 16;
        int den = 1 + static_cast<int>(rng.below(3));
        return Rational(num, den);
    };
    int agreements = 0, hits = 0;
    for (int rep = 0; rep < 4000; ++rep) {
        int d = 2 + static_cast<int>(rng.below(3));
        RationalPoint q(static_cast<size_t>(d)), p(static_cast<size_t>(d));
        for (auto& c : q) c = coord();
        for (auto& c : p) c = coord();
        std::vector<RationalPoint> Z(static_cast<size_t>(d), RationalPoint(static_cast<size_t>(d)));
        for (auto& z : Z) {
            for (auto& c : z) c = coord();
        }
        if (rep % 3 == 0 && d >= 2) {
            // force affine degeneracy: last vertex on the segment of the first two
            for (int c = 0; c < d; ++c) {
                Z.back()[static_cast<size_t>(c)] =
                    (Z[0][static_cast<size_t>(c)] + Z[1][static_cast<size_t>(c)]) / 2;
            }
        }
        bool a = convex_stab_exact(q, p, Z);
        bool b = detail::convex_stab_general(q, p, Z);
        ASSERT_EQ(a, b) << "rep " << rep;
        ++agreements;
        hits += a ? 1 : 0;
    }
    EXPECT_EQ(agreements, 4000);
    EXPECT_GT(hits, 100);  // the family must exercise both outcomes
    EXPECT_LT(hits, 3900);
}

TEST(StabCensus, TwoDimensionalGolden) {
    // 9 points, 36 two-vertex simplices; the segment runs from the top-right
    // region to the bottom-left; golden count frozen from the first
    // exhaustive enumeration of this fixture
    auto s = build_stretched(StretchedKind::grid, 2, 3);
    RationalPoint qu{Rational(1), Rational(9, 10)}, pu{Rational(1, 10), Rational(0)};
    auto q = census_endpoint(s, qu, CellPlacement::cell_midpoint);
    auto p = census_endpoint(s, pu, CellPlacement::cell_midpoint);
    auto census = stab_census(s, q, p);
    EXPECT_EQ(census.total_simplices, 36);
    EXPECT_EQ(census.stabbed, 14);
    EXPECT_EQ(census.fraction, Rational(14, 36));
}

TEST(StabCensus, SegmentOutsideTheBoxStabsNothing) {
    auto s = build_stretched(StretchedKind::grid, 2, 3);
    RationalPoint q{Rational(100000), Rational(1)}, p{Rational(100001), Rational(4096)};
    auto census = stab_census(s, q, p);
    EXPECT_EQ(census.stabbed, 0);
}

TEST(StabCensus, BudgetIsEnforced) {
    auto s = build_stretched(StretchedKind::grid, 2, 5);
    RationalPoint q{1, 1}, p{2, 2};
    EXPECT_THROW(stab_census(s, q, p, 10), BudgetError);
}

TEST(StabCensus, ConvergesTowardTheFormulaInTwoDimensions) {
    // fixed cell-relative segment; the census fraction approaches the
    // stabbing measure at the mapped endpoints as the grid refines
    RationalPoint qu{Rational(1), Rational(4, 5)}, pu{Rational(1, 2), Rational(0)};
    double prev = -1;
    for (int m = 3; m <= 5; ++m) {
        auto s = build_stretched(StretchedKind::grid, 2, m);
        auto q = census_endpoint(s, qu, CellPlacement::cell_midpoint);
        auto p = census_endpoint(s, pu, CellPlacement::cell_midpoint);
        auto census = stab_census(s, q, p);
        Point qe = to_double_point(pi_map(s, q)), pe = to_double_point(pi_map(s, p));
        double err = std::fabs(to_double(census.fraction) - recfsg(qe, pe));
        if (prev >= 0) EXPECT_LT(err, prev) << "m=" << m;
        prev = err;
    }
}

TEST(StabCensus, ConvergesTowardTheFormulaInThreeDimensions) {
    RationalPoint qu{Rational(1), Rational(1), Rational(4, 5)};
    RationalPoint pu{Rational(1, 2), Rational(1, 2), Rational(0)};
    double prev = -1;
    for (int m = 3; m <= 5; ++m) {
        auto s = build_stretched(StretchedKind::grid, 3, m);
        auto q = census_endpoint(s, qu, CellPlacement::cell_midpoint);
        auto p = census_endpoint(s, pu, CellPlacement::cell_midpoint);
        auto census = stab_census(s, q, p);
        Point qe = to_double_point(pi_map(s, q)), pe = to_double_point(pi_map(s, p));
        double err = std::fabs(to_double(census.fraction) - recfsg(qe, pe));
        if (prev >= 0) EXPECT_LT(err, prev) << "m=" << m;
        prev = err;
    }
}

TEST(StabCensus, DiagonalCensusApproachesTheOrderedMeasure) {
    // an unordered simplex intersects iff its sorted tuple does, so the
    // census fraction over the diagonal tends to d! times the ordered measure
    auto path = theorem2_path(3);
    double reference = 6.0 * to_double(fsd<Rational>(path.q, path.p));  // 6/25
    double prev = -1;
    for (int n : {6, 9, 12}) {
        auto s = build_stretched(StretchedKind::diagonal, 3, n);
        auto q = census_endpoint(s, path.q, CellPlacement::cell_quarter);
        auto p = census_endpoint(s, path.p, CellPlacement::cell_quarter);
        auto census = stab_census(s, q, p);
        double err = std::fabs(to_double(census.fraction) - reference);
        if (prev >= 0) EXPECT_LT(err, prev) << "n=" << n;
        prev = err;
    }
    EXPECT_LT(prev, 0.07);
}

TEST(Transference, FarApartInstancesAgreeAcrossOracles) {
    // spot check; the acceptance suite runs the full 10^4
    for (auto [d, m] : {std::pair{2, 4}, {3, 5}}) {
        auto s = build_stretched(StretchedKind::grid, d, m);
        auto rep = transference_check(s, 500, 2025);
        EXPECT_EQ(rep.mismatches, 0) << "d=" << d;
        EXPECT_GT(rep.intersecting, 0) << "d=" << d;  // the family is not vacuous
        EXPECT_LT(rep.intersecting, rep.instances) << "d=" << d;
    }
}

TEST(Transference, GridTooSmallThrows) {
    auto s = build_stretched(StretchedKind::grid, 3, 4);
    EXPECT_THROW(random_far_apart_instance(s, 1, 1), DomainError);
}

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    return RUN_ALL_TESTS();
}
