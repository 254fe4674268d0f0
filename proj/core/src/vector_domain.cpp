#include "edo/vector_domain.hpp"

#include "edo/csv.hpp"
#include "edo/error.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

namespace edo::vec {

std::vector<double> identity_features(const VectorGenotype& g) { return g.point; }

VectorGenotype gaussian_mutate(const VectorGenotype& g, Rng& rng, double sigma) {
    VectorGenotype out = g;
    if (sigma <= 0.0) return out;
    std::normal_distribution<double> noise(0.0, sigma);
    for (auto& v : out.point) v = reflect_unit(v + noise(rng));
    return out;
}

double distance_to_center(const VectorGenotype& g) {
    double s = 0.0;
    for (double v : g.point) s += (v - 0.5) * (v - 0.5);
    return std::sqrt(s);
}

VectorDomain::VectorDomain(std::size_t dim, double sigma)
    : dim_(dim), sigma_(sigma), bounds_(FeatureBounds::unit(dim)) {
    if (dim < 1) throw ConfigurationError("vector domain dimension must be positive");
    if (!(sigma >= 0.0)) throw ConfigurationError("vector domain sigma must be non-negative");
}

VectorGenotype VectorDomain::sample(Rng& rng) const {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    VectorGenotype g;
    g.point.resize(dim_);
    for (auto& v : g.point) v = u(rng);
    return g;
}

void write_genotypes_csv(std::ostream& out, const std::vector<VectorGenotype>& points) {
    const std::size_t d = points.empty() ? 0 : points.front().point.size();
    std::vector<std::string> header;
    for (std::size_t i = 0; i < d; ++i) header.push_back("x" + std::to_string(i + 1));
    write_csv_row(out, header);
    for (const auto& g : points) write_csv_row(out, g.point);
}

std::vector<VectorGenotype> read_genotypes_csv(std::istream& in) {
    const CsvTable t = read_csv(in);
    std::vector<VectorGenotype> out;
    for (const auto& row : t.rows) {
        if (row.cells.size() != t.header.size()) {
            throw ParseError("expected " + std::to_string(t.header.size()) + " values", row.line);
        }
        VectorGenotype g;
        for (const auto& cell : row.cells) {
            const double v = parse_double(cell, row.line);
            if (!(v >= 0.0 && v <= 1.0)) throw ParseError("coordinate outside [0,1]", row.line);
            g.point.push_back(v);
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<VectorGenotype> read_genotypes_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_genotypes_csv(in);
}

} // namespace edo::vec
