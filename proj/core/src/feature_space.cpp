#include "edo/feature_space.hpp"

#include "edo/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace edo {

double reflect_unit(double v) {
    if (!std::isfinite(v)) return 0.5;
    v = std::fmod(std::abs(v), 2.0);
    return v > 1.0 ? 2.0 - v : v;
}

FeatureBounds::FeatureBounds(std::vector<FeatureRange> ranges) : ranges_(std::move(ranges)) {
    for (std::size_t i = 0; i < ranges_.size(); ++i) {
        const auto& r = ranges_[i];
        if (!(r.min < r.max) || !std::isfinite(r.min) || !std::isfinite(r.max)) {
            throw ConfigurationError("feature bounds " + std::to_string(i) +
                                     ": require finite f_min < f_max");
        }
    }
}

FeatureBounds FeatureBounds::unit(std::size_t d) {
    return FeatureBounds(std::vector<FeatureRange>(d, FeatureRange{0.0, 1.0}));
}

FeatureVector normalize(std::span<const double> raw, const FeatureBounds& bounds) {
    if (raw.size() != bounds.size()) {
        throw ConfigurationError("normalize: " + std::to_string(raw.size()) + " raw features but " +
                                 std::to_string(bounds.size()) + " bounds");
    }
    std::vector<double> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto& r = bounds[i];
        out[i] = std::clamp((raw[i] - r.min) / (r.max - r.min), 0.0, 1.0);
    }
    return FeatureVector(std::move(out));
}

PlaneEmbedding PlaneEmbedding::standard() {
    const double c = std::sqrt(2.0) / 4.0;
    const double s2 = std::sqrt(2.0);
    const double s6 = std::sqrt(6.0);
    return PlaneEmbedding{
        {c, c, c},
        {1.0 / s2, -1.0 / s2, 0.0},
        {1.0 / s6, 1.0 / s6, -2.0 / s6},
    };
}

ObjectiveVector plane_embed(const FeatureVector& p, const PlaneEmbedding& emb) {
    if (p.size() != 2) {
        throw UnsupportedDimensionError("plane embedding requires a feature pair, got d=" +
                                        std::to_string(p.size()));
    }
    const double a = p[0] - 0.5;
    const double b = p[1] - 0.5;
    ObjectiveVector out(std::vector<double>(3));
    for (std::size_t k = 0; k < 3; ++k) {
        out[k] = emb.center[k] + a * emb.basis_u[k] + b * emb.basis_v[k];
    }
    return out;
}

ObjectiveVector dimension_double(const FeatureVector& p) {
    if (p.size() == 0) {
        throw UnsupportedDimensionError("dimension doubling of an empty feature vector");
    }
    const std::size_t d = p.size();
    std::vector<double> out(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        out[i] = p[i];
        out[d + i] = -p[i];
    }
    return ObjectiveVector(std::move(out));
}

ObjectiveVector identity_objective(const FeatureVector& p) { return ObjectiveVector(p.values); }

ObjectiveVector apply_transform(Transform t, const FeatureVector& p) {
    switch (t) {
    case Transform::PlaneEmbed: return plane_embed(p);
    case Transform::DimensionDouble: return dimension_double(p);
    case Transform::Identity: break;
    }
    return identity_objective(p);
}

std::size_t transformed_dimension(Transform t, std::size_t d) {
    switch (t) {
    case Transform::PlaneEmbed: return 3;
    case Transform::DimensionDouble: return 2 * d;
    case Transform::Identity: break;
    }
    return d;
}

ObjectiveVector derive_reference_point(std::span<const ObjectiveVector> transformed_refset,
                                       double margin) {
    if (transformed_refset.empty()) {
        throw ConfigurationError("derive_reference_point: empty reference set");
    }
    if (!(margin >= 0.0)) {
        throw ConfigurationError("derive_reference_point: margin must be non-negative");
    }
    ObjectiveVector lo = transformed_refset.front();
    for (const auto& q : transformed_refset) {
        if (q.size() != lo.size()) {
            throw ConfigurationError("derive_reference_point: mixed dimensionality in reference set");
        }
        for (std::size_t k = 0; k < q.size(); ++k) lo[k] = std::min(lo[k], q[k]);
    }
    for (auto& v : lo.values) v -= margin;
    return lo;
}

ObjectiveVector doubled_reference_point(std::size_t d) {
    std::vector<double> r(2 * d, 1.0);
    std::fill(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d), 2.0);
    return ObjectiveVector(std::move(r));
}

} // namespace edo
