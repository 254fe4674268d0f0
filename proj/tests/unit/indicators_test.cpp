#include "edo/error.hpp"
#include "edo/indicators.hpp"
#include "edo/oracles.hpp"

#include "../support/naive.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace {

using edo::FeatureVector;
using edo::ObjectiveVector;
using edo::Orientation;

TEST(Hypervolume, HandExamples) {
    const std::vector<ObjectiveVector> two{{1, 2}, {2, 1}};
    EXPECT_DOUBLE_EQ(edo::hypervolume(two, {0, 0}, Orientation::Maximize), 3.0);

    const std::vector<ObjectiveVector> single{{0.25, 0.75, -0.25, -0.75}};
    EXPECT_EQ(edo::hypervolume(single, {2, 2, 1, 1}, Orientation::Minimize), 4.78515625);

    const std::vector<ObjectiveVector> pair{{0, 1, 0, -1}, {1, 0, -1, 0}};
    EXPECT_DOUBLE_EQ(edo::hypervolume(pair, {2, 2, 1, 1}, Orientation::Minimize), 7.0);
    EXPECT_DOUBLE_EQ(edo::hypervolume_oracle_ie(pair, {2, 2, 1, 1}, Orientation::Minimize), 7.0);
}

TEST(Hypervolume, EmptySetIsZero) {
    EXPECT_EQ(edo::hypervolume({}, {1, 1}, Orientation::Minimize), 0.0);
}

TEST(Hypervolume, RejectsPointsNotDominatingReference) {
    const std::vector<ObjectiveVector> bad{{0.5, 1.0}};
    EXPECT_THROW(edo::hypervolume(bad, {1, 1}, Orientation::Minimize), edo::DomainError);
    const std::vector<ObjectiveVector> mixed{{0.5, 0.5, 0.5}};
    EXPECT_THROW(edo::hypervolume(mixed, {1, 1}, Orientation::Minimize), edo::DomainError);
}

TEST(Hypervolume, MatchesInclusionExclusion) {
    std::mt19937_64 rng(2024);
    int cases = 0;
    for (std::size_t d : {2, 3, 4, 6}) {
        for (int rep = 0; rep < 30; ++rep) {
            const std::size_t n = 1 + rng() % 8;
            const bool maximize = rep % 2 == 1;
            auto pts = naive::random_points(n, d, rng, 0.0, 1.0);
            const naive::Pt ref(d, maximize ? -0.1 : 1.1);
            const auto objs = naive::objectives(pts);
            const auto o = maximize ? Orientation::Maximize : Orientation::Minimize;
            const double expect = naive::hv_ie(pts, ref, maximize);
            EXPECT_NEAR(edo::hypervolume(objs, ObjectiveVector(ref), o), expect, 1e-9) << "d=" << d << " n=" << n;
            EXPECT_NEAR(edo::hypervolume_oracle_ie(objs, ObjectiveVector(ref), o), expect, 1e-9);
            ++cases;
        }
    }
    EXPECT_GE(cases, 100);
}

TEST(Hypervolume, DominatedAndDuplicatePointsDoNotCount) {
    std::mt19937_64 rng(5);
    const auto pts = naive::random_points(6, 3, rng, 0.0, 0.5);
    auto objs = naive::objectives(pts);
    const ObjectiveVector ref{1, 1, 1};
    const double base = edo::hypervolume(objs, ref, Orientation::Minimize);
    objs.push_back(objs[2]);
    objs.push_back(ObjectiveVector{0.9, 0.9, 0.9});
    EXPECT_EQ(edo::hypervolume(objs, ref, Orientation::Minimize), base);
}

TEST(Hypervolume, PermutationInvariantBitwise) {
    std::mt19937_64 rng(6);
    auto objs = naive::objectives(naive::random_points(12, 4, rng));
    const ObjectiveVector ref{1.5, 1.5, 1.5, 1.5};
    const double base = edo::hypervolume(objs, ref, Orientation::Minimize);
    for (int i = 0; i < 10; ++i) {
        std::shuffle(objs.begin(), objs.end(), rng);
        EXPECT_EQ(edo::hypervolume(objs, ref, Orientation::Minimize), base);
    }
}

TEST(Hypervolume, AddingAPointNeverDecreases) {
    std::mt19937_64 rng(7);
    for (std::size_t d : {2, 3, 5}) {
        auto objs = naive::objectives(naive::random_points(15, d, rng));
        const ObjectiveVector ref(std::vector<double>(d, 1.0 + 1e-9));
        double prev = 0.0;
        std::vector<ObjectiveVector> acc;
        for (const auto& p : objs) {
            acc.push_back(p);
            const double v = edo::hypervolume(acc, ref, Orientation::Minimize);
            EXPECT_GE(v, prev - 1e-12);
            prev = v;
        }
    }
}

TEST(Hypervolume, MatchesMonteCarloInSixDimensions) {
    std::mt19937_64 rng(8);
    const auto objs = naive::objectives(naive::random_points(20, 6, rng));
    const ObjectiveVector ref(std::vector<double>(6, 1.0));
    const double exact = edo::hypervolume(objs, ref, Orientation::Minimize);
    const double mc = edo::hypervolume_oracle_mc(objs, ref, Orientation::Minimize, 2'000'000, 99);
    EXPECT_NEAR(mc / exact, 1.0, 0.01);
    EXPECT_THROW(edo::hypervolume_oracle_mc(objs, ref, Orientation::Minimize, 10, 1), edo::DomainError);
}

TEST(Hypervolume, ThreeDimensionalSweepMatchesOracleOnLargerSets) {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 10; ++rep) {
        const auto pts = naive::random_points(12, 3, rng);
        const naive::Pt ref(3, 1.0 + 1e-9);
        EXPECT_NEAR(edo::hypervolume(naive::objectives(pts), ObjectiveVector(ref), Orientation::Minimize),
                    naive::hv_ie(pts, ref, false), 1e-9);
    }
}

TEST(Igd, HandExamples) {
    const std::vector<ObjectiveVector> r{{0, 0}, {1, 1}};
    EXPECT_NEAR(edo::igd(r, std::vector<ObjectiveVector>{{0, 0}}), std::sqrt(2.0) / 2, 1e-12);
    EXPECT_EQ(edo::igd(r, r), 0.0);

    std::vector<ObjectiveVector> g;
    for (double x : {0.0, 0.5, 1.0})
        for (double y : {0.0, 0.5, 1.0}) g.push_back({x, y});
    EXPECT_NEAR(edo::igd(g, std::vector<ObjectiveVector>{{0.5, 0.5}}), (4 * std::sqrt(2.0) / 2 + 2.0) / 9, 1e-12);
}

TEST(Igd, MatchesNaiveLoop) {
    std::mt19937_64 rng(10);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t d = 2 + rep % 3;
        const auto r = naive::random_points(1 + rng() % 30, d, rng);
        const auto s = naive::random_points(1 + rng() % 10, d, rng);
        EXPECT_NEAR(edo::igd(naive::objectives(r), naive::objectives(s)), naive::igd(r, s), 1e-12);
    }
}

TEST(Igd, RejectsEmptyAndMixedSets) {
    const std::vector<ObjectiveVector> r{{0, 0}};
    EXPECT_THROW(edo::igd(r, {}), edo::DomainError);
    EXPECT_THROW(edo::igd(r, std::vector<ObjectiveVector>{{0, 0, 0}}), edo::DomainError);
}

TEST(Eps, HandExamples) {
    const std::vector<ObjectiveVector> r{{0, 0}, {1, 1}};
    EXPECT_EQ(edo::eps_sequence(r, std::vector<ObjectiveVector>{{0.5, 0.5}}).values, (std::vector<double>{0.5, -0.5}));

    const std::vector<ObjectiveVector> front{{0, 1}, {0.5, 0.5}, {1, 0}};
    for (double v : edo::eps_sequence(front, front).values) EXPECT_EQ(v, 0.0);
}

TEST(Eps, MatchesNaiveTripleLoop) {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t d = 2 + rep % 2;
        const auto r = naive::random_points(rep < 20 ? 3 : 1 + rng() % 40, d, rng);
        const auto s = naive::random_points(1 + rng() % 10, d, rng);
        EXPECT_EQ(edo::eps_sequence(naive::objectives(r), naive::objectives(s)).values, naive::eps(r, s));
    }
}

TEST(Eps, LexicographicComparison) {
    using edo::EpsSequence;
    EXPECT_TRUE(edo::eps_compare(EpsSequence{{0.5, -0.5}}, EpsSequence{{0.5, -0.4}}) < 0);
    EXPECT_TRUE(edo::eps_compare(EpsSequence{{0.5, -0.5}}, EpsSequence{{0.5, -0.5}}) == 0);
    EXPECT_TRUE(edo::eps_compare(EpsSequence{{0.4, 0.3}}, EpsSequence{{0.5, -1.0}}) < 0);
    EXPECT_TRUE(edo::eps_compare(EpsSequence{{0.5, -1.0}}, EpsSequence{{0.4, 0.3}}) > 0);
    EXPECT_THROW(edo::eps_compare(EpsSequence{{0.5}}, EpsSequence{{0.5, 0.1}}), edo::DomainError);
}

TEST(StarDiscrepancy, HandCases) {
    EXPECT_EQ(edo::star_discrepancy(std::vector<FeatureVector>{{0.0, 0.0}}), 1.0);
    EXPECT_EQ(edo::star_discrepancy(std::vector<FeatureVector>{{0.5, 0.5}}), 0.75);
    // one point at the far corner: the open box [0,1)^2 is empty
    EXPECT_EQ(edo::star_discrepancy(std::vector<FeatureVector>{{1.0, 1.0}}), 1.0);
}

TEST(StarDiscrepancy, WithinGridToleranceOfDenseScan) {
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t d = rep < 14 ? 2 : 3;
        const std::size_t res = d == 2 ? 400 : 60;
        const auto pts = naive::random_points(1 + rng() % 12, d, rng);
        const double exact = edo::star_discrepancy(naive::features(pts));
        const double scan = naive::discrepancy_scan(pts, res);
        EXPECT_GE(exact, scan - 1e-12);
        EXPECT_LE(exact, scan + static_cast<double>(d) / static_cast<double>(res));
    }
}

TEST(StarDiscrepancy, HandPlacedSobolLikeSet) {
    const std::vector<naive::Pt> pts{{0.0, 0.0},     {0.5, 0.5},     {0.75, 0.25},  {0.25, 0.75},
                                     {0.375, 0.375}, {0.875, 0.875}, {0.625, 0.125}, {0.125, 0.625}};
    const double exact = edo::star_discrepancy(naive::features(pts));
    const double scan = naive::discrepancy_scan(pts, 400);
    EXPECT_GE(exact, scan - 1e-12);
    EXPECT_LE(exact, scan + 2.0 / 400);
}

TEST(StarDiscrepancy, Limits) {
    std::vector<FeatureVector> big(65, FeatureVector{0.5, 0.5});
    EXPECT_THROW(edo::star_discrepancy(big), edo::CapacityError);
    EXPECT_THROW(edo::star_discrepancy(std::vector<FeatureVector>{{0.1, 0.2, 0.3, 0.4}}),
                 edo::UnsupportedDimensionError);
    EXPECT_THROW(edo::star_discrepancy(std::vector<FeatureVector>{{1.5, 0.2}}), edo::DomainError);
    EXPECT_THROW(edo::star_discrepancy({}), edo::DomainError);
}

TEST(IndicatorSpec, FactoriesAndValidation) {
    const auto h2 = edo::IndicatorSpec::hyp2d();
    EXPECT_EQ(h2.orientation(), Orientation::Maximize);
    EXPECT_EQ(h2.transform(), edo::Transform::PlaneEmbed);
    ASSERT_TRUE(h2.reference_point().has_value());

    const auto h = edo::IndicatorSpec::hyp(3);
    EXPECT_EQ(*h.reference_point(), (ObjectiveVector{2, 2, 2, 1, 1, 1}));
    EXPECT_EQ(edo::IndicatorSpec::igd(3).reference_set()->size(), 1331u);
    EXPECT_EQ(edo::IndicatorSpec::eps().reference_set()->size(), 10201u);

    EXPECT_THROW(edo::IndicatorSpec::make(edo::IndicatorKind::HYP2D, 3), edo::ConfigurationError);
    EXPECT_THROW(edo::IndicatorSpec::make(edo::IndicatorKind::EPS, 3), edo::ConfigurationError);
    EXPECT_EQ(edo::parse_indicator_kind("hyp-2d"), edo::IndicatorKind::HYP2D);
    EXPECT_THROW(edo::parse_indicator_kind("NSGA"), edo::ConfigurationError);
}

TEST(EvaluateIndicator, Examples) {
    const auto g = edo::grid(2, 101);
    std::vector<FeatureVector> pop;
    for (const auto& p : g.points) pop.emplace_back(p.values);
    EXPECT_EQ(edo::headline(edo::evaluate_indicator(edo::IndicatorSpec::igd(2), pop)), 0.0);

    const std::vector<FeatureVector> single{{0.25, 0.75}};
    EXPECT_EQ(edo::headline(edo::evaluate_indicator(edo::IndicatorSpec::hyp(2), single)), 4.78515625);

    std::mt19937_64 rng(13);
    const auto feats = naive::features(naive::random_points(10, 2, rng));
    EXPECT_EQ(edo::headline(edo::evaluate_indicator(edo::IndicatorSpec::dis(2), feats)),
              edo::star_discrepancy(feats));

    const auto eps = edo::evaluate_indicator(edo::IndicatorSpec::eps(11), feats);
    ASSERT_TRUE(std::holds_alternative<edo::EpsSequence>(eps));
    EXPECT_EQ(std::get<edo::EpsSequence>(eps).values.size(), 121u);
}

TEST(EvaluateIndicator, ComparisonFollowsOrientation) {
    const auto h = edo::IndicatorSpec::hyp(2);
    EXPECT_TRUE(edo::compare_indicator_values(h, 2.0, 1.0) < 0);
    const auto i = edo::IndicatorSpec::igd(2);
    EXPECT_TRUE(edo::compare_indicator_values(i, 1.0, 2.0) < 0);
}

} // namespace
