#include "edo/oracles.hpp"

#include "edo/error.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>
#include <vector>

namespace edo {

namespace {

// Minimization form of the input, validated against `ref`.
std::vector<std::vector<double>> as_minimization(std::span<const ObjectiveVector> points, const ObjectiveVector& ref,
                                                 Orientation orientation, std::vector<double>& mref) {
    const double sign = orientation == Orientation::Minimize ? 1.0 : -1.0;
    const std::size_t m = ref.size();
    mref.resize(m);
    for (std::size_t k = 0; k < m; ++k) mref[k] = sign * ref[k];
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != m) throw DomainError("hypervolume oracle: dimension mismatch");
        std::vector<double> row(m);
        for (std::size_t k = 0; k < m; ++k) {
            row[k] = sign * points[i][k];
            if (!(row[k] < mref[k])) {
                throw DomainError("hypervolume oracle: point " + std::to_string(i) +
                                  " does not strictly dominate the reference point in coordinate " +
                                  std::to_string(k));
            }
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

double hypervolume_oracle_ie(std::span<const ObjectiveVector> points, const ObjectiveVector& ref,
                             Orientation orientation) {
    if (points.size() > kInclusionExclusionMaxPoints) {
        throw DomainError("hypervolume_oracle_ie: " + std::to_string(points.size()) +
                          " points exceed the subset budget of " + std::to_string(kInclusionExclusionMaxPoints));
    }
    std::vector<double> mref;
    const auto pts = as_minimization(points, ref, orientation, mref);
    const std::size_t n = pts.size();
    const std::size_t m = mref.size();

    double total = 0.0;
    std::vector<double> corner(m);
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::fill(corner.begin(), corner.end(), -std::numeric_limits<double>::infinity());
        int bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (std::size_t{1} << i))) continue;
            ++bits;
            for (std::size_t k = 0; k < m; ++k) corner[k] = std::max(corner[k], pts[i][k]);
        }
        double vol = 1.0;
        for (std::size_t k = 0; k < m; ++k) vol *= mref[k] - corner[k];
        total += (bits % 2 == 1) ? vol : -vol;
    }
    return total;
}

double hypervolume_oracle_mc(std::span<const ObjectiveVector> points, const ObjectiveVector& ref,
                             Orientation orientation, std::size_t samples, std::uint64_t seed) {
    if (samples < 100000) throw DomainError("hypervolume_oracle_mc: at least 1e5 samples required");
    std::vector<double> mref;
    const auto pts = as_minimization(points, ref, orientation, mref);
    if (pts.empty()) return 0.0;
    const std::size_t m = mref.size();

    std::vector<double> lo = pts.front();
    for (const auto& p : pts) {
        for (std::size_t k = 0; k < m; ++k) lo[k] = std::min(lo[k], p[k]);
    }
    double box = 1.0;
    for (std::size_t k = 0; k < m; ++k) box *= mref[k] - lo[k];

    std::mt19937_64 rng(seed);
    std::vector<std::uniform_real_distribution<double>> axis;
    for (std::size_t k = 0; k < m; ++k) axis.emplace_back(lo[k], mref[k]);

    std::size_t hits = 0;
    std::vector<double> x(m);
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t k = 0; k < m; ++k) x[k] = axis[k](rng);
        for (const auto& p : pts) {
            bool inside = true;
            for (std::size_t k = 0; k < m && inside; ++k) inside = p[k] <= x[k];
            if (inside) {
                ++hits;
                break;
            }
        }
    }
    return box * static_cast<double>(hits) / static_cast<double>(samples);
}

} // namespace edo
