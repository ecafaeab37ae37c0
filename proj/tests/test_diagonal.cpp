#include <gtest/gtest.h>

#include <cmath>

#include "stairconv/diag3.hpp"
#include "stairconv/rational.hpp"
#include "stairconv/recfsd.hpp"
#include "stairconv/rng.hpp"
#include "stairconv/targets.hpp"

using namespace stairconv;

namespace {

// ascending q (q_1 = 1), ascending p with p_i <= q_i, strict everywhere
void random_diagonal_pair(Xoshiro256& rng, int d, Point& q, Point& p) {
    for (;;) {
        q.assign(static_cast<size_t>(d), 0.0);
        p.assign(static_cast<size_t>(d), 0.0);
        q[0] = 1.0;
        for (int i = 1; i < d; ++i) q[static_cast<size_t>(i)] = rng.uniform01();
        std::sort(q.begin() + 1, q.end());
        for (int i = 0; i < d; ++i) p[static_cast<size_t>(i)] = rng.uniform01();
        std::sort(p.begin(), p.end());
        bool ok = true;
        for (int i = 0; i < d; ++i) {
            if (!(p[static_cast<size_t>(i)] < q[static_cast<size_t>(i)])) ok = false;
        }
        if (ok) return;
    }
}

}  // namespace

TEST(Recfsd, BaseCase) {
    EXPECT_DOUBLE_EQ(recfsd<double>({1, 0.75}, {0.25, 0.5}), 0.5);
}

TEST(Recfsd, ThreeDimensionalUnfolding) {
    // (3/5-2/5)(1/5) + (4/5-3/5)(3/5-1/5)
    EXPECT_NEAR(recfsd<double>({1, 0.6, 0.8}, {0.2, 0.4, 0.4}), 3.0 / 25, 1e-15);
}

TEST(Recfsd, GeneralFormOnArithmeticPaths) {
    // q' = (1, 3/c, ..., (d+1)/c), p' = (1/c, ..., (d-1)/c, k) gives d/c^(d-1)
    for (int d = 2; d <= 7; ++d) {
        for (int c : {d + 2, d + 3, 2 * d + 2}) {
            RationalPoint q(static_cast<size_t>(d)), p(static_cast<size_t>(d));
            q[0] = 1;
            for (int i = 2; i <= d; ++i) q[static_cast<size_t>(i - 1)] = Rational(i + 1, c);
            for (int i = 1; i < d; ++i) p[static_cast<size_t>(i - 1)] = Rational(i, c);
            p[static_cast<size_t>(d - 1)] = Rational(d, c);  // any k in [p_{d-1}, q_d]
            Rational expected = Rational(d) / rational_pow(Rational(c), static_cast<unsigned>(d - 1));
            EXPECT_EQ(recfsd<Rational>(q, p), expected) << "d=" << d << " c=" << c;
        }
    }
}

TEST(Recfsd, ConditionViolationsAreNamed) {
    try {
        recfsd<double>({1, 0.5}, {0.7, 0.8});
        FAIL() << "expected a condition violation";
    } catch (const ConditionViolation& e) {
        EXPECT_NE(std::string(e.what()).find("p_i <= q_i"), std::string::npos);
    }
    EXPECT_THROW(recfsd<double>({0.9, 0.5}, {0.1, 0.2}), ConditionViolation);  // q_1 != 1
    EXPECT_THROW(recfsd<double>({1, 0.5, 0.4}, {0.1, 0.2, 0.3}), ConditionViolation);
    EXPECT_THROW(recfsd<double>({1, 0.5}, {0.3, 0.2}), ConditionViolation);  // p descending
}

TEST(Fsd, ClosedFormsAgreeWithTheRecursion) {
    EXPECT_DOUBLE_EQ(fsd<double>({1}, {0.3}), 0.7);
    EXPECT_NEAR(fsd<double>({1, 0.75}, {0.25, 0.5}), 3.0 / 16, 1e-15);

    Xoshiro256 rng(17);
    Point q, p;
    for (int rep = 0; rep < 10000; ++rep) {
        random_diagonal_pair(rng, 2, q, p);
        double direct = (q[1] - p[1]) * p[0] + (1 - q[1]) * (q[1] - p[0]);
        ASSERT_NEAR(fsd<double>(q, p), direct, 1e-14);
    }
    for (int rep = 0; rep < 10000; ++rep) {
        random_diagonal_pair(rng, 3, q, p);
        double direct = (q[2] - p[2]) * p[0] * (p[1] - p[0]) +
                        (1 - q[2]) * ((q[1] - p[1]) * p[0] + (q[2] - q[1]) * (q[1] - p[0]));
        ASSERT_NEAR(fsd<double>(q, p), direct, 1e-14);
    }
    for (int rep = 0; rep < 10000; ++rep) {
        random_diagonal_pair(rng, 1, q, p);
        ASSERT_NEAR(fsd<double>(q, p), 1 - p[0], 1e-14);
    }
}

TEST(Theorem2Path, ExplicitCoordinates) {
    auto path3 = theorem2_path(3);
    EXPECT_EQ(path3.q, (RationalPoint{1, Rational(3, 5), Rational(4, 5)}));
    EXPECT_EQ(path3.p, (RationalPoint{Rational(1, 5), Rational(2, 5), Rational(2, 5)}));

    auto path4 = theorem2_path(4);
    EXPECT_EQ(path4.q, (RationalPoint{1, Rational(1, 2), Rational(2, 3), Rational(5, 6)}));
    EXPECT_EQ(path4.p,
              (RationalPoint{Rational(1, 6), Rational(1, 3), Rational(1, 2), Rational(1, 2)}));

    EXPECT_THROW(theorem2_path(2), DomainError);
}

TEST(Theorem2Path, ExactRationalIdentity) {
    for (int d = 3; d <= 8; ++d) {
        auto path = theorem2_path(d);
        Rational expected = Rational(1) / rational_pow(Rational(d + 2), static_cast<unsigned>(d - 1));
        EXPECT_EQ(fsd<Rational>(path.q, path.p), expected) << "d=" << d;
    }
    EXPECT_EQ(fsd<Rational>(theorem2_path(3).q, theorem2_path(3).p), Rational(1, 25));
    EXPECT_EQ(fsd<Rational>(theorem2_path(4).q, theorem2_path(4).p), Rational(1, 216));
}

TEST(Diag3Catalog, FifteenEntriesWithPrintedValues) {
    const auto& catalog = diag3_catalog();
    ASSERT_EQ(catalog.size(), 15u);
    for (const auto& target : diag3_targets()) {
        const Diag3Objective& f = catalog[static_cast<size_t>(target.id - 1)];
        ASSERT_EQ(f.id, target.id);
        auto free_vars = diag3_free_vector(target.id, target.q, target.p);
        EXPECT_NEAR(f.evaluate(free_vars), target.maximum, 1e-9) << "F" << target.id;
    }
}

TEST(Diag3Catalog, DomainClampsToZero) {
    const auto& f1 = diag3_catalog().front();
    // violates p2 < q2
    EXPECT_DOUBLE_EQ(f1.evaluate(std::vector<double>{0.2, 0.7, 0.5, 0.9}), 0.0);
    // and the printed argmax of F1 is strictly inside its chain
    EXPECT_GT(f1.evaluate(std::vector<double>{0.2, 0.4, 0.6, 0.8}), 0.0);
}

TEST(Diag3Catalog, EvaluatorsAreNonnegativeOnTheBox) {
    Xoshiro256 rng(23);
    for (const auto& f : diag3_catalog()) {
        for (int rep = 0; rep < 20000; ++rep) {
            std::vector<double> v(4);
            for (auto& c : v) c = rng.uniform01();
            ASSERT_GE(f.evaluate(v), 0.0) << "F" << f.id;
        }
    }
}

int main(int argc, char** argv) {
    ::testing::InitGoogleTest(&argc, argv);
    return RUN_ALL_TESTS();
}
