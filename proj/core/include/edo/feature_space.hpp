#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace edo {

/// Reflects `v` back into [0,1] as often as needed (mirror at 0 and 1).
double reflect_unit(double v);

/// A point in the normalized feature space [0,1]^d.
struct FeatureVector {
    std::vector<double> values;

    FeatureVector() = default;
    explicit FeatureVector(std::vector<double> v) : values(std::move(v)) {}
    FeatureVector(std::initializer_list<double> v) : values(v) {}

    std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
    friend auto operator<=>(const FeatureVector&, const FeatureVector&) = default;
};

/// A point in objective space, the input of every indicator. Its length depends on the transform
/// that produced it: d (identity), 3 (plane embedding of a feature pair) or 2d (dimension doubling).
struct ObjectiveVector {
    std::vector<double> values;

    ObjectiveVector() = default;
    explicit ObjectiveVector(std::vector<double> v) : values(std::move(v)) {}
    ObjectiveVector(std::initializer_list<double> v) : values(v) {}

    std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }

    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
    friend auto operator<=>(const ObjectiveVector&, const ObjectiveVector&) = default;
};

struct FeatureRange {
    double min;
    double max;
};

/// Per-feature raw value ranges used for normalization. Every range satisfies min < max.
class FeatureBounds {
public:
    FeatureBounds() = default;
    explicit FeatureBounds(std::vector<FeatureRange> ranges);

    /// [0,1] on every axis.
    static FeatureBounds unit(std::size_t d);

    std::size_t size() const noexcept { return ranges_.size(); }
    const FeatureRange& operator[](std::size_t i) const { return ranges_[i]; }
    std::span<const FeatureRange> ranges() const noexcept { return ranges_; }

private:
    std::vector<FeatureRange> ranges_;
};

/// Maps raw feature values into [0,1]^d, clamping values outside the bounds to 0 or 1.
FeatureVector normalize(std::span<const double> raw, const FeatureBounds& bounds);

/// Isometric placement of the unit square onto the plane through (√2/4, √2/4, √2/4) orthogonal
/// to (1,1,1). Images of distinct points are mutually non-dominated since their difference has
/// zero coordinate sum.
struct PlaneEmbedding {
    std::array<double, 3> center;
    std::array<double, 3> basis_u;
    std::array<double, 3> basis_v;

    /// center (√2/4)^3, u = (1,-1,0)/√2, v = (1,1,-2)/√6.
    static PlaneEmbedding standard();
};

ObjectiveVector plane_embed(const FeatureVector& p, const PlaneEmbedding& emb = PlaneEmbedding::standard());

/// (p_1..p_d, -p_1..-p_d)
ObjectiveVector dimension_double(const FeatureVector& p);

ObjectiveVector identity_objective(const FeatureVector& p);

enum class Transform { Identity, PlaneEmbed, DimensionDouble };

ObjectiveVector apply_transform(Transform t, const FeatureVector& p);

/// Length of the objective vector the transform produces from a d-dimensional feature vector.
std::size_t transformed_dimension(Transform t, std::size_t d);

/// Componentwise minimum over a (transformed) reference set, lowered by `margin` on every axis.
/// Used as the maximization reference point of the plane-embedded hypervolume.
ObjectiveVector derive_reference_point(std::span<const ObjectiveVector> transformed_refset,
                                       double margin = 1e-6);

/// Reference point (2,..,2,1,..,1) of the minimization hypervolume in the doubled space.
ObjectiveVector doubled_reference_point(std::size_t d);

} // namespace edo
