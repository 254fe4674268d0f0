#pragma once

#include "edo/feature_space.hpp"
#include "edo/refsets.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace edo {

enum class Orientation { Maximize, Minimize };

enum class IndicatorKind { HYP2D, HYP, IGD, EPS, DIS };

std::string_view to_string(IndicatorKind kind);

/// Direction in which the indicator value itself improves: hypervolumes grow, the others shrink.
/// Independent of the objective orientation a spec uses internally.
Orientation goal(IndicatorKind kind);
/// Accepts HYP2D / HYP-2D / HYP / IGD / EPS / DIS (case-insensitive).
IndicatorKind parse_indicator_kind(std::string_view name);

/// Per-reference-point additive approximations, sorted non-increasing.
struct EpsSequence {
    std::vector<double> values;

    double front() const { return values.front(); }
    friend bool operator==(const EpsSequence&, const EpsSequence&) = default;
};

/// Lebesgue measure of the union of boxes spanned between each point and `ref`.
///
/// Every point must strictly dominate `ref` in the given orientation; otherwise a DomainError names
/// the offending point and coordinate. The computation is an exact WFG-style recursion over
/// exclusive contributions, slicing along the last objective. The input is sorted first so the
/// value depends only on the multiset of points, bit for bit.
double hypervolume(std::span<const ObjectiveVector> points, const ObjectiveVector& ref,
                   Orientation orientation);

/// Mean over the reference set of the Euclidean distance to the closest solution.
double igd(std::span<const ObjectiveVector> reference, std::span<const ObjectiveVector> solutions);

/// For each r in `reference`, min over s of max_i (s_i - r_i); sorted non-increasing.
/// The first element is the additive epsilon approximation of the whole set.
EpsSequence eps_sequence(std::span<const ObjectiveVector> reference,
                         std::span<const ObjectiveVector> solutions);

/// Lexicographic order; `less` means `a` is the better (smaller) sequence.
std::weak_ordering eps_compare(const EpsSequence& a, const EpsSequence& b);

/// Exact star discrepancy over anchored boxes, both open [0,q) and closed [0,q], for
/// 1 <= n <= 64 points with d <= 3. Critical corners take each coordinate from the
/// point coordinates on that axis or 1.
double star_discrepancy(std::span<const FeatureVector> points);

inline constexpr std::size_t kStarDiscrepancyMaxPoints = 64;

/// Which measure drives selection, how features reach objective space, and the reference data.
class IndicatorSpec {
public:
    IndicatorSpec() = default;
    /// Validates on construction; prefer the named factories.
    IndicatorSpec(IndicatorKind kind, Orientation orientation, Transform transform, std::size_t feature_dim,
                  std::optional<ObjectiveVector> ref_point, std::shared_ptr<const ReferenceSet> ref_set);

    /// Plane-embedded hypervolume of a feature pair; reference point is the componentwise minimum
    /// of the embedded k^2 grid lowered by `margin`.
    static IndicatorSpec hyp2d(std::size_t grid_k = 101, double margin = 1e-6);
    /// Hypervolume in the doubled space against (2^d, 1^d), minimization.
    static IndicatorSpec hyp(std::size_t d);
    /// IGD against the unit grid (k = 0 selects 101 for d=2, 11 for d=3).
    static IndicatorSpec igd(std::size_t d, std::size_t grid_k = 0);
    /// Epsilon sequence against the plane-embedded k^2 grid.
    static IndicatorSpec eps(std::size_t grid_k = 101);
    static IndicatorSpec dis(std::size_t d);

    /// Default spec of `kind` for a d-dimensional feature space.
    static IndicatorSpec make(IndicatorKind kind, std::size_t d);

    IndicatorKind kind() const noexcept { return kind_; }
    Orientation orientation() const noexcept { return orientation_; }
    Transform transform() const noexcept { return transform_; }
    std::size_t feature_dimension() const noexcept { return feature_dim_; }
    const std::optional<ObjectiveVector>& reference_point() const noexcept { return ref_point_; }
    const ReferenceSet* reference_set() const noexcept { return ref_set_.get(); }

    /// Throws ConfigurationError if the kind/transform/reference combination is inconsistent.
    void validate() const;

private:
    IndicatorKind kind_ = IndicatorKind::IGD;
    Orientation orientation_ = Orientation::Minimize;
    Transform transform_ = Transform::Identity;
    std::size_t feature_dim_ = 0;
    std::optional<ObjectiveVector> ref_point_;
    std::shared_ptr<const ReferenceSet> ref_set_;
};

/// Scalar for HYP2D/HYP/IGD/DIS, full sequence for EPS.
using IndicatorValue = std::variant<double, EpsSequence>;

IndicatorValue evaluate_indicator(const IndicatorSpec& spec, std::span<const FeatureVector> population);

/// `less` means `a` is the better value, judged by goal(spec.kind()).
std::weak_ordering compare_indicator_values(const IndicatorSpec& spec, const IndicatorValue& a,
                                            const IndicatorValue& b);

/// The scalar reported for a value: itself, or the first (worst) element of an EPS sequence.
double headline(const IndicatorValue& value);

} // namespace edo
