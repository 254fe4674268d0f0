#include "edo/refsets.hpp"

#include "edo/csv.hpp"
#include "edo/error.hpp"

#include <fstream>
#include <ostream>

namespace edo {

ReferenceSet grid(std::size_t d, std::size_t k) {
    if (k < 2) throw ConfigurationError("grid: resolution k must be at least 2");
    if (d < 1 || d > 6) throw ConfigurationError("grid: dimension must be in 1..6");

    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= k;

    ReferenceSet rs;
    rs.resolution = k;
    rs.dimension = d;
    rs.space = d == 2 ? ReferenceSpace::UnitSquare : d == 3 ? ReferenceSpace::UnitCube : ReferenceSpace::Other;
    rs.points.reserve(total);

    const double step = static_cast<double>(k - 1);
    std::vector<std::size_t> idx(d, 0);
    for (std::size_t n = 0; n < total; ++n) {
        std::vector<double> p(d);
        for (std::size_t a = 0; a < d; ++a) p[a] = static_cast<double>(idx[a]) / step;
        rs.points.emplace_back(std::move(p));
        for (std::size_t a = d; a-- > 0;) {
            if (++idx[a] < k) break;
            idx[a] = 0;
        }
    }
    return rs;
}

ReferenceSet transform_refset(const ReferenceSet& rs, Transform transform) {
    ReferenceSet out;
    out.resolution = rs.resolution;
    out.points.reserve(rs.points.size());
    for (const auto& p : rs.points) out.points.push_back(apply_transform(transform, FeatureVector(p.values)));
    out.dimension = out.points.empty() ? 0 : out.points.front().size();
    switch (transform) {
    case Transform::Identity: out.space = rs.space; break;
    case Transform::PlaneEmbed: out.space = ReferenceSpace::PlaneEmbedded; break;
    case Transform::DimensionDouble: out.space = ReferenceSpace::Doubled; break;
    }
    return out;
}

void write_refset_csv(std::ostream& out, const ReferenceSet& rs) {
    std::vector<std::string> header;
    for (std::size_t a = 0; a < rs.dimension; ++a) header.push_back("x" + std::to_string(a + 1));
    write_csv_row(out, header);
    for (const auto& p : rs.points) write_csv_row(out, p.values);
}

void write_refset_csv(const std::string& path, const ReferenceSet& rs) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    write_refset_csv(out, rs);
}

std::size_t default_grid_resolution(std::size_t d) {
    switch (d) {
    case 2: return 101;
    case 3: return 11;
    default: throw UnsupportedDimensionError("no default reference grid for d=" + std::to_string(d));
    }
}

} // namespace edo
