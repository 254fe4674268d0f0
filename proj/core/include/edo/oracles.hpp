#pragma once

#include "edo/indicators.hpp"

#include <cstddef>
#include <cstdint>
#include <span>

namespace edo {

/// Largest point count accepted by the inclusion-exclusion oracle (2^12 - 1 subsets).
inline constexpr std::size_t kInclusionExclusionMaxPoints = 12;

/// Exact union volume by inclusion-exclusion over all non-empty subsets of `points`.
double hypervolume_oracle_ie(std::span<const ObjectiveVector> points, const ObjectiveVector& ref,
                             Orientation orientation);

/// Unbiased Monte-Carlo estimate: uniform samples in the box between `ref` and the extreme corner
/// of `points`, scaled by the box volume. `samples` must be at least 1e5.
double hypervolume_oracle_mc(std::span<const ObjectiveVector> points, const ObjectiveVector& ref,
                             Orientation orientation, std::size_t samples, std::uint64_t seed);

} // namespace edo
