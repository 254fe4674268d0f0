#include "edo/error.hpp"
#include "edo/tsp.hpp"

#include "../support/naive.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace {

using namespace edo::tsp;

TspInstance make(std::initializer_list<std::pair<double, double>> pts) {
    TspInstance inst;
    for (auto [x, y] : pts) inst.cities.push_back({x, y});
    return inst;
}

std::vector<naive::Pt> coords(const TspInstance& inst) {
    std::vector<naive::Pt> out;
    for (const auto& c : inst.cities) out.push_back({c.x, c.y});
    return out;
}

// two nearest neighbours by a full sort, ties to the lower index
double naive_angle_mean(const std::vector<naive::Pt>& c) {
    double sum = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (j != i) others.push_back(j);
        std::stable_sort(others.begin(), others.end(), [&](std::size_t a, std::size_t b) {
            return naive::euclid(c[i], c[a]) < naive::euclid(c[i], c[b]);
        });
        const auto& a = c[others[0]];
        const auto& b = c[others[1]];
        const double ax = a[0] - c[i][0], ay = a[1] - c[i][1], bx = b[0] - c[i][0], by = b[1] - c[i][1];
        const double cosv = (ax * bx + ay * by) / (std::hypot(ax, ay) * std::hypot(bx, by));
        sum += std::acos(std::clamp(cosv, -1.0, 1.0));
    }
    return sum / static_cast<double>(c.size());
}

double naive_nnds_mean(const std::vector<naive::Pt>& c) {
    double sum = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        double best = 1e300;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (j != i) best = std::min(best, naive::euclid(c[i], c[j]));
        sum += best;
    }
    return sum / static_cast<double>(c.size());
}

TEST(Features, Triangle) {
    const auto t = make({{0, 0}, {1, 0}, {0, 1}});
    EXPECT_NEAR(feature_angle_mean(t), std::numbers::pi / 3, 1e-9);
    EXPECT_NEAR(feature_centroid_mean_dist(t), (std::sqrt(2.0) / 3 + 2 * std::sqrt(5.0) / 3) / 3, 1e-12);
    EXPECT_NEAR(feature_nnds_mean(t), 1.0, 1e-9);
    EXPECT_NEAR(feature_mst_dists_mean(t), 1.0, 1e-9);
}

TEST(Features, CollinearEquidistant) {
    const auto t = make({{0, 0.5}, {0.5, 0.5}, {1, 0.5}});
    EXPECT_NEAR(feature_angle_mean(t), std::numbers::pi / 3, 1e-12);
}

TEST(Features, SmallCases) {
    EXPECT_EQ(feature_centroid_mean_dist(make({{0.3, 0.3}, {0.3, 0.3}, {0.3, 0.3}})), 0.0);
    EXPECT_NEAR(feature_centroid_mean_dist(make({{0, 0}, {1, 0}, {1, 1}, {0, 1}})), std::sqrt(2.0) / 2, 1e-12);
    EXPECT_NEAR(feature_nnds_mean(make({{0, 0}, {0.3, 0}})), 0.3, 1e-12);
    EXPECT_NEAR(feature_mst_dists_mean(make({{0, 0}, {0, 0.4}})), 0.4, 1e-12);
    EXPECT_THROW(feature_angle_mean(make({{0, 0}, {1, 1}})), edo::DomainError);
}

TEST(Features, DuplicateCitiesAreDegenerateAngles) {
    const auto stats = angle_stats(make({{0, 0}, {0, 0}, {1, 1}}));
    EXPECT_GT(stats.degenerate, 0u);
    EXPECT_TRUE(std::isfinite(stats.mean));
}

TEST(Features, MatchNaiveRecomputation) {
    edo::Rng rng(21);
    for (int rep = 0; rep < 20; ++rep) {
        const auto inst = random_instance(10, rng);
        const auto c = coords(inst);
        EXPECT_NEAR(feature_angle_mean(inst), naive_angle_mean(c), 1e-12);
        EXPECT_NEAR(feature_nnds_mean(inst), naive_nnds_mean(c), 1e-12);
    }
}

TEST(Features, MstMatchesSpanningTreeEnumeration) {
    edo::Rng rng(22);
    for (std::size_t n : {3, 4, 5, 6, 7}) {
        const auto inst = random_instance(n, rng);
        EXPECT_NEAR(mst_total_length(inst), naive::brute_force_mst(coords(inst)), 1e-12) << n;
        EXPECT_NEAR(feature_mst_dists_mean(inst), mst_total_length(inst) / static_cast<double>(n - 1), 1e-12);
    }
}

TEST(Features, NamesAndBounds) {
    EXPECT_EQ(parse_feature("f1"), Feature::AngleMean);
    EXPECT_EQ(parse_feature("mst_dists_mean"), Feature::MstDistsMean);
    EXPECT_THROW(parse_feature("f9"), edo::ConfigurationError);
    EXPECT_EQ(feature_id(Feature::NndsMean), "f3");
    EXPECT_EQ(default_bounds(Feature::CentroidMeanDist).min, 0.24);
    EXPECT_EQ(default_bounds(Feature::MstDistsMean).max, 0.15);
}

TEST(TwoOpt, UncrossesTheSquare) {
    const auto sq = make({{0, 0}, {1, 1}, {1, 0}, {0, 1}});
    std::vector<std::size_t> crossing{0, 1, 2, 3};
    EXPECT_NEAR(tour_length(sq, crossing), 2 + 2 * std::sqrt(2.0), 1e-12);
    const auto t = two_opt_from(sq, crossing);
    EXPECT_NEAR(t.length, 4.0, 1e-12);
    EXPECT_TRUE(is_two_opt_local(sq, t));
    EXPECT_NEAR(naive::brute_force_tsp(coords(sq)), 4.0, 1e-12);
}

TEST(TwoOpt, ConvexOptimumIsKept) {
    TspInstance poly;
    for (int i = 0; i < 9; ++i) {
        const double a = 2 * std::numbers::pi * i / 9;
        poly.cities.push_back({0.5 + 0.4 * std::cos(a), 0.5 + 0.4 * std::sin(a)});
    }
    std::vector<std::size_t> order(9);
    std::iota(order.begin(), order.end(), 0);
    const double before = tour_length(poly, order);
    EXPECT_DOUBLE_EQ(two_opt_from(poly, order).length, before);
}

TEST(TwoOpt, OutputsAreLocalOptima) {
    edo::Rng rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        const auto inst = random_instance(12, rng);
        const auto t = two_opt(inst, rng);
        EXPECT_TRUE(is_two_opt_local(inst, t));
        EXPECT_NEAR(t.length, tour_length(inst, t.order), 1e-12);
    }
}

TEST(ExactOpt, SmallCases) {
    EXPECT_NEAR(exact_opt(make({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).length, 4.0, 1e-12);
    EXPECT_NEAR(exact_opt(make({{0, 0}, {1, 0}, {0, 1}})).length, 2 + std::sqrt(2.0), 1e-12);
    edo::Rng rng(1);
    EXPECT_THROW(exact_opt(random_instance(16, rng)), edo::CapacityError);
}

TEST(ExactOpt, MatchesPermutationSearch) {
    edo::Rng rng(24);
    for (std::size_t n : {5, 6, 7, 8}) {
        const auto inst = random_instance(n, rng);
        const auto t = exact_opt(inst);
        EXPECT_NEAR(t.length, naive::brute_force_tsp(coords(inst)), 1e-12);
        EXPECT_NEAR(t.length, tour_length(inst, t.order), 1e-12);
    }
}

TEST(Quality, RatioAtLeastOne) {
    edo::Rng rng(25);
    for (int rep = 0; rep < 10; ++rep) {
        const auto inst = random_instance(9, rng);
        EXPECT_GE(quality(inst, rng), 1.0);
    }
    // a convex polygon is solved exactly by 2-opt
    EXPECT_EQ(quality(make({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), rng), 1.0);
    EXPECT_NEAR(quality(make({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), rng, 2.0), 2.0, 1e-12);
}

TEST(Mutation, BoundaryCases) {
    edo::Rng rng(26);
    const auto inst = random_instance(20, rng);
    for (int rep = 0; rep < 50; ++rep) {
        const auto m = mutate(inst, rng, {0.0, 0.025});
        std::size_t moved = 0;
        for (std::size_t i = 0; i < inst.size(); ++i) moved += !(m.cities[i] == inst.cities[i]);
        EXPECT_EQ(moved, 1u);
    }
    EXPECT_EQ(mutate(inst, rng, {0.5, 0.0}), inst);
    const auto m = mutate(inst, rng, {1.0, 0.5});
    EXPECT_NO_THROW(m.validate());
}

TEST(Mutation, SelectionFrequencyMatchesRate) {
    edo::Rng rng(27);
    const auto inst = random_instance(50, rng);
    const int trials = 10000;
    std::vector<int> counts(inst.size(), 0);
    for (int t = 0; t < trials; ++t) {
        const auto m = mutate(inst, rng);
        for (std::size_t i = 0; i < inst.size(); ++i) counts[i] += !(m.cities[i] == inst.cities[i]);
    }
    // the forced move when nothing is picked adds (1-p)^n / n
    const double p = 0.1 + std::pow(0.9, 50) / 50;
    const double se = std::sqrt(p * (1 - p) / trials);
    long total = 0;
    for (int c : counts) {
        EXPECT_NEAR(c / double(trials), p, 4 * se);
        total += c;
    }
    const double overall_se = std::sqrt(p * (1 - p) / (trials * 50.0));
    EXPECT_NEAR(total / (trials * 50.0), p, 3 * overall_se);
}

class InstanceIo : public ::testing::Test {
protected:
    std::filesystem::path dir;
    void SetUp() override {
        dir = std::filesystem::temp_directory_path() /
              ("edo_tsp_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir);
    }
    void TearDown() override { std::filesystem::remove_all(dir); }
};

TEST_F(InstanceIo, RoundTripBothFormats) {
    edo::Rng rng(28);
    const auto inst = random_instance(50, rng);
    for (auto fmt : {InstanceFormat::Csv, InstanceFormat::Tsplib}) {
        const auto path = (dir / (fmt == InstanceFormat::Csv ? "a.csv" : "a.tsp")).string();
        write_instance(path, inst, fmt);
        const auto back = read_instance(path, fmt);
        ASSERT_EQ(back.instance.size(), 50u);
        for (std::size_t i = 0; i < 50; ++i) {
            EXPECT_NEAR(back.instance.cities[i].x, inst.cities[i].x, 1e-9);
            EXPECT_NEAR(back.instance.cities[i].y, inst.cities[i].y, 1e-9);
        }
        EXPECT_FALSE(back.opt_length.has_value());
    }
}

TEST_F(InstanceIo, SidecarProvidesOptimum) {
    const auto inst = make({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const auto path = (dir / "sq.csv").string();
    write_instance(path, inst, InstanceFormat::Csv);
    write_opt_sidecar(path, 4.0);
    const auto back = read_instance(path, InstanceFormat::Csv);
    ASSERT_TRUE(back.opt_length.has_value());
    EXPECT_EQ(*back.opt_length, 4.0);
}

TEST(InstanceParse, CsvRowWithThreeCoordinates) {
    std::istringstream in("x,y\n0.1,0.2\n0.3,0.4,0.5\n");
    try {
        read_csv_instance(in);
        FAIL();
    } catch (const edo::ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(InstanceParse, TsplibFiveNodes) {
    std::istringstream in("NAME: five\nTYPE: TSP\nDIMENSION: 5\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n"
                          "1 0 0\n2 10 0\n3 10 10\n4 0 10\n5 5 5\nEOF\n");
    const auto li = read_tsplib(in);
    EXPECT_EQ(li.name, "five");
    ASSERT_EQ(li.instance.size(), 5u);
    EXPECT_NO_THROW(li.instance.validate());
    EXPECT_EQ(li.scale, 10.0);
    EXPECT_EQ(li.instance.cities[2], (City{1.0, 1.0}));
}

TEST(InstanceParse, RejectsOtherEdgeWeightTypes) {
    std::istringstream in("NAME: x\nTYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: GEO\nNODE_COORD_SECTION\n"
                          "1 0 0\n2 1 0\n3 0 1\nEOF\n");
    EXPECT_THROW(read_tsplib(in), edo::UnsupportedFormatError);
    EXPECT_THROW(parse_format("xml"), edo::ConfigurationError);
}

TEST(InstanceParse, DimensionMismatch) {
    std::istringstream in("NAME: x\nTYPE: TSP\nDIMENSION: 4\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n"
                          "1 0 0\n2 1 0\n3 0 1\nEOF\n");
    EXPECT_THROW(read_tsplib(in), edo::ParseError);
}

TEST(TspDomain, FillsDefaultBounds) {
    TspDomain::Options opt;
    opt.cities = 10;
    opt.features = {Feature::AngleMean, Feature::MstDistsMean};
    const TspDomain domain(opt);
    ASSERT_EQ(domain.bounds().size(), 2u);
    EXPECT_EQ(domain.bounds()[0].min, 0.70);
    EXPECT_EQ(domain.bounds()[1].max, 0.15);
    edo::Rng rng(1);
    const auto g = domain.sample(rng);
    EXPECT_EQ(g.size(), 10u);
    EXPECT_EQ(domain.raw_features(g).size(), 2u);
    EXPECT_GE(domain.quality(g, rng), 1.0);
}

} // namespace
