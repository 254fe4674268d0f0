#pragma once

#include "edo/evolution.hpp"
#include "edo/feature_space.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace edo::vec {

/// A point in [0,1]^d that is its own feature vector.
struct VectorGenotype {
    std::vector<double> point;

    friend bool operator==(const VectorGenotype&, const VectorGenotype&) = default;
};

std::vector<double> identity_features(const VectorGenotype& g);

/// Independent N(0, sigma^2) noise per coordinate, reflected into [0,1].
VectorGenotype gaussian_mutate(const VectorGenotype& g, Rng& rng, double sigma = 0.05);

/// Euclidean distance to the centre (0.5, ..., 0.5). Paired with an at-most gate this gives the
/// spherical constraint.
double distance_to_center(const VectorGenotype& g);

class VectorDomain {
public:
    using Genotype = VectorGenotype;

    explicit VectorDomain(std::size_t dim, double sigma = 0.05);

    VectorGenotype sample(Rng& rng) const;
    VectorGenotype mutate(const VectorGenotype& g, Rng& rng) const { return gaussian_mutate(g, rng, sigma_); }
    std::vector<double> raw_features(const VectorGenotype& g) const { return identity_features(g); }
    double quality(const VectorGenotype& g, Rng&) const { return distance_to_center(g); }
    const FeatureBounds& bounds() const noexcept { return bounds_; }
    std::size_t dimension() const noexcept { return dim_; }

private:
    std::size_t dim_;
    double sigma_;
    FeatureBounds bounds_;
};

/// Header x1..xd, one point per row.
void write_genotypes_csv(std::ostream& out, const std::vector<VectorGenotype>& points);
std::vector<VectorGenotype> read_genotypes_csv(std::istream& in);
std::vector<VectorGenotype> read_genotypes_csv(const std::string& path);

} // namespace edo::vec
