#include "edo/csv.hpp"
#include "edo/error.hpp"
#include "edo/refsets.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

namespace {

TEST(Grid, Sizes) {
    EXPECT_EQ(edo::grid(2, 101).size(), 10201u);
    EXPECT_EQ(edo::grid(3, 11).size(), 1331u);
    EXPECT_EQ(edo::default_grid_resolution(2), 101u);
    EXPECT_EQ(edo::default_grid_resolution(3), 11u);
}

TEST(Grid, CornerGridInRowMajorOrder) {
    const auto g = edo::grid(2, 2);
    ASSERT_EQ(g.size(), 4u);
    EXPECT_EQ(g.points[0], (edo::ObjectiveVector{0, 0}));
    EXPECT_EQ(g.points[1], (edo::ObjectiveVector{0, 1}));
    EXPECT_EQ(g.points[2], (edo::ObjectiveVector{1, 0}));
    EXPECT_EQ(g.points[3], (edo::ObjectiveVector{1, 1}));
}

TEST(Grid, EndpointsAreExact) {
    for (auto [d, k] : {std::pair{2, 101}, std::pair{3, 11}}) {
        const auto g = edo::grid(d, k);
        double lo = 1.0, hi = 0.0;
        for (const auto& p : g.points)
            for (double v : p.values) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        EXPECT_EQ(lo, 0.0);
        EXPECT_EQ(hi, 1.0);
        EXPECT_EQ(g.points.front().values, std::vector<double>(d, 0.0));
        EXPECT_EQ(g.points.back().values, std::vector<double>(d, 1.0));
    }
}

TEST(Grid, RejectsDegenerateResolution) {
    EXPECT_THROW(edo::grid(2, 1), edo::ConfigurationError);
}

TEST(TransformRefset, PlaneEmbeddedSumIsConstant) {
    const auto rs = edo::transform_refset(edo::grid(2, 11), edo::Transform::PlaneEmbed);
    ASSERT_EQ(rs.size(), 121u);
    for (const auto& p : rs.points) {
        ASSERT_EQ(p.size(), 3u);
        EXPECT_NEAR(p[0] + p[1] + p[2], 3 * std::sqrt(2.0) / 4, 1e-12);
    }
    const auto g = edo::grid(3, 3);
    EXPECT_EQ(edo::transform_refset(g, edo::Transform::Identity).points, g.points);
}

TEST(TransformRefset, CsvHasHeaderAndOneRowPerPoint) {
    std::ostringstream out;
    edo::write_refset_csv(out, edo::grid(2, 3));
    std::istringstream in(out.str());
    const auto t = edo::read_csv(in);
    EXPECT_EQ(t.header, (std::vector<std::string>{"x1", "x2"}));
    ASSERT_EQ(t.rows.size(), 9u);
    EXPECT_EQ(t.rows[1].cells, (std::vector<std::string>{"0", "0.5"}));
}

TEST(Csv, FormatRoundTrips) {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5, 12345678.9}) {
        EXPECT_EQ(edo::parse_double(edo::format_double(v), 1), v);
    }
    EXPECT_EQ(edo::format_double(0.5), "0.5");
    EXPECT_EQ(edo::format_double(std::numeric_limits<double>::quiet_NaN()), "nan");
}

TEST(Csv, ParseErrorCarriesLine) {
    std::istringstream in("a,b\n1,2\n3,x\n");
    const auto t = edo::read_csv(in);
    ASSERT_EQ(t.rows.size(), 2u);
    try {
        edo::parse_double(t.rows[1].cells[1], t.rows[1].line);
        FAIL();
    } catch (const edo::ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_EQ(t.column("b"), 1u);
    EXPECT_EQ(t.column("c"), edo::CsvTable::npos);
}

} // namespace
