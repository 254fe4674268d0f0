#include "edo/error.hpp"
#include "edo/vector_domain.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

namespace {

using edo::vec::VectorDomain;
using edo::vec::VectorGenotype;

TEST(VectorDomain, IdentityFeatures) {
    EXPECT_EQ(edo::vec::identity_features(VectorGenotype{{0.3, 0.7}}), (std::vector<double>{0.3, 0.7}));
    EXPECT_EQ(edo::vec::identity_features(VectorGenotype{{0.0, 1.0}}), (std::vector<double>{0.0, 1.0}));
}

TEST(VectorDomain, ZeroSigmaLeavesPointUnchanged) {
    edo::Rng rng(1);
    const VectorGenotype g{{0.2, 0.9}};
    EXPECT_EQ(edo::vec::gaussian_mutate(g, rng, 0.0), g);
}

TEST(VectorDomain, MutationStaysInUnitCube) {
    edo::Rng rng(2);
    VectorGenotype g{{0.01, 0.99, 0.5}};
    for (int i = 0; i < 1000; ++i) {
        g = edo::vec::gaussian_mutate(g, rng, 0.3);
        for (double v : g.point) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
    }
}

TEST(VectorDomain, MeanAbsoluteStepMatchesHalfNormal) {
    // far from the walls reflection never fires, so |step| is half-normal with mean sigma*sqrt(2/pi)
    edo::Rng rng(3);
    const double sigma = 0.05;
    const VectorGenotype g{{0.5}};
    const int trials = 20000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < trials; ++i) {
        const double s = std::abs(edo::vec::gaussian_mutate(g, rng, sigma).point[0] - 0.5);
        sum += s;
        sum2 += s * s;
    }
    const double mean = sum / trials;
    const double expect = sigma * std::sqrt(2.0 / std::numbers::pi);
    const double sd = sigma * std::sqrt(1.0 - 2.0 / std::numbers::pi);
    EXPECT_NEAR(mean, expect, 3 * sd / std::sqrt(double(trials)));
    EXPECT_NEAR(sum2 / trials, sigma * sigma, 0.05 * sigma * sigma);
}

TEST(VectorDomain, SphericalGateRejectsAboutHalf) {
    // P(|x - c| <= r) for uniform x in the unit square is pi r^2 when r <= 0.5
    const double r = std::sqrt(0.5 / std::numbers::pi);
    VectorDomain domain(2);
    edo::Rng rng(4);
    int inside = 0;
    const int trials = 20000;
    for (int i = 0; i < trials; ++i) inside += edo::vec::distance_to_center(domain.sample(rng)) <= r;
    EXPECT_NEAR(inside / double(trials), 0.5, 3 * std::sqrt(0.25 / trials));
}

TEST(VectorDomain, GenotypeCsvRoundTrip) {
    const std::vector<VectorGenotype> pts{{{0.1, 0.2}}, {{1.0, 0.0}}, {{1.0 / 3.0, 0.75}}};
    std::ostringstream out;
    edo::vec::write_genotypes_csv(out, pts);
    EXPECT_EQ(out.str().substr(0, 6), "x1,x2\n");
    std::istringstream in(out.str());
    EXPECT_EQ(edo::vec::read_genotypes_csv(in), pts);

    std::istringstream bad("x1,x2\n0.5,1.5\n");
    EXPECT_THROW(edo::vec::read_genotypes_csv(bad), edo::ParseError);
}

TEST(VectorDomain, RejectsBadParameters) {
    EXPECT_THROW(VectorDomain(0), edo::ConfigurationError);
    EXPECT_THROW(VectorDomain(2, -0.1), edo::ConfigurationError);
}

} // namespace
