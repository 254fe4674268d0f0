#pragma once

#include "edo/feature_space.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace edo {

enum class ReferenceSpace { UnitSquare, UnitCube, PlaneEmbedded, Doubled, Other };

/// A finite target set in objective space. Raw grids hold k^d points with coordinates i/(k-1).
struct ReferenceSet {
    std::vector<ObjectiveVector> points;
    std::size_t resolution = 0;
    std::size_t dimension = 0;
    ReferenceSpace space = ReferenceSpace::Other;

    std::size_t size() const noexcept { return points.size(); }
};

/// Regular grid with k values per axis including both endpoints. Points are emitted in
/// row-major order with the last axis varying fastest.
ReferenceSet grid(std::size_t d, std::size_t k);

ReferenceSet transform_refset(const ReferenceSet& rs, Transform transform);

/// One point per row, header x1..xm.
void write_refset_csv(std::ostream& out, const ReferenceSet& rs);
void write_refset_csv(const std::string& path, const ReferenceSet& rs);

/// Grid resolution used for d=2 (101^2) and d=3 (11^3) feature spaces.
std::size_t default_grid_resolution(std::size_t d);

} // namespace edo
