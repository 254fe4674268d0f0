#include "edo/error.hpp"
#include "edo/indicators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace edo {

double star_discrepancy(std::span<const FeatureVector> points) {
    if (points.empty()) throw DomainError("star_discrepancy: empty point set");
    const std::size_t n = points.size();
    const std::size_t d = points.front().size();
    if (d < 1 || d > 3) {
        throw UnsupportedDimensionError("star_discrepancy: d=" + std::to_string(d) + " (supported: 1..3)");
    }
    if (n > kStarDiscrepancyMaxPoints) {
        throw CapacityError("star_discrepancy: " + std::to_string(n) + " points exceed the exact budget of " +
                            std::to_string(kStarDiscrepancyMaxPoints));
    }

    // Coordinates per axis plus the upper boundary 1.
    std::array<std::vector<double>, 3> axes;
    for (std::size_t a = 0; a < d; ++a) {
        for (const auto& p : points) {
            if (p.size() != d) throw DomainError("star_discrepancy: mixed dimensionality");
            if (!(p[a] >= 0.0 && p[a] <= 1.0)) throw DomainError("star_discrepancy: point outside [0,1]^d");
            axes[a].push_back(p[a]);
        }
        axes[a].push_back(1.0);
        std::sort(axes[a].begin(), axes[a].end());
        axes[a].erase(std::unique(axes[a].begin(), axes[a].end()), axes[a].end());
    }
    for (std::size_t a = d; a < 3; ++a) axes[a] = {1.0};

    const double inv_n = 1.0 / static_cast<double>(n);
    double worst = 0.0;
    std::array<double, 3> q{};
    for (double q0 : axes[0]) {
        q[0] = q0;
        for (double q1 : axes[1]) {
            q[1] = q1;
            for (double q2 : axes[2]) {
                q[2] = q2;
                std::size_t open = 0;
                std::size_t closed = 0;
                for (const auto& p : points) {
                    bool in_open = true;
                    bool in_closed = true;
                    for (std::size_t a = 0; a < d; ++a) {
                        in_open = in_open && p[a] < q[a];
                        in_closed = in_closed && p[a] <= q[a];
                    }
                    open += in_open;
                    closed += in_closed;
                }
                double vol = 1.0;
                for (std::size_t a = 0; a < d; ++a) vol *= q[a];
                worst = std::max({worst, std::abs(static_cast<double>(open) * inv_n - vol),
                                  std::abs(static_cast<double>(closed) * inv_n - vol)});
            }
        }
    }
    return worst;
}

} // namespace edo
