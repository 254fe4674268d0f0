#pragma once

#include "edo/evolution.hpp"
#include "edo/feature_space.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edo::tsp {

struct City {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const City&, const City&) = default;
};

/// Euclidean instance with every city in [0,1]^2.
struct TspInstance {
    std::vector<City> cities;

    std::size_t size() const noexcept { return cities.size(); }
    /// Throws ConfigurationError unless n >= 3 and all coordinates lie in [0,1].
    void validate() const;

    friend bool operator==(const TspInstance&, const TspInstance&) = default;
};

struct Tour {
    std::vector<std::size_t> order;
    double length = 0.0;
};

double distance(const City& a, const City& b);
double tour_length(const TspInstance& inst, std::span<const std::size_t> order);

TspInstance random_instance(std::size_t n, Rng& rng);

// ---------------------------------------------------------------------------------------------
// Features. Nearest-neighbour ties go to the lowest city index.

enum class Feature { AngleMean, CentroidMeanDist, NndsMean, MstDistsMean };

/// "f1".."f4" or the long names (angle_mean, centroid_mean_distance_to_centroid, nnds_mean,
/// mst_dists_mean).
Feature parse_feature(std::string_view id);
std::string_view feature_id(Feature f);
std::string_view feature_name(Feature f);

/// Normalization range observed for 50-city instances.
FeatureRange default_bounds(Feature f);

struct AngleStats {
    double mean = 0.0;
    /// Cities with a zero-length ray to one of their two nearest neighbours (angle taken as 0).
    std::size_t degenerate = 0;
};

/// Angle in [0, pi] at each city between the rays to its two nearest neighbours, averaged.
AngleStats angle_stats(const TspInstance& inst);
double feature_angle_mean(const TspInstance& inst);
double feature_centroid_mean_dist(const TspInstance& inst);
double feature_nnds_mean(const TspInstance& inst);
/// Mean edge length of the Euclidean MST (dense Prim, lowest-index tie-breaking).
double feature_mst_dists_mean(const TspInstance& inst);
double mst_total_length(const TspInstance& inst);

double compute_feature(const TspInstance& inst, Feature f);
std::vector<double> compute_features(const TspInstance& inst, std::span<const Feature> features);

// ---------------------------------------------------------------------------------------------
// Tours.

/// First-improvement 2-opt from `start`: pairs (i, j) are scanned lexicographically and a segment
/// is reversed whenever that shortens the tour, until a full pass finds no improvement.
Tour two_opt_from(const TspInstance& inst, std::vector<std::size_t> start);
/// 2-opt from a uniformly random permutation.
Tour two_opt(const TspInstance& inst, Rng& rng);
/// True when no single 2-exchange shortens the tour by more than `tolerance`.
bool is_two_opt_local(const TspInstance& inst, const Tour& tour, double tolerance = 1e-10);

inline constexpr std::size_t kExactMaxCities = 15;

/// Held-Karp dynamic program; throws CapacityError above kExactMaxCities cities.
Tour exact_opt(const TspInstance& inst);

/// Shortest of three independent 2-opt runs divided by the optimum (supplied, or from exact_opt).
double quality(const TspInstance& inst, Rng& rng, std::optional<double> opt_length = std::nullopt);

struct MutationParams {
    double rate = 0.1;
    double sigma = 0.025;
};

/// Each city moves with probability `rate` by N(0, sigma^2) per coordinate, reflected into [0,1];
/// one uniformly chosen city moves when none was selected.
TspInstance mutate(const TspInstance& inst, Rng& rng, const MutationParams& params = {});

// ---------------------------------------------------------------------------------------------
// I/O.

enum class InstanceFormat { Tsplib, Csv };

InstanceFormat parse_format(std::string_view name);

struct LoadedInstance {
    TspInstance instance;
    std::string name;
    /// original = normalized * scale + offset
    double scale = 1.0;
    double offset_x = 0.0;
    double offset_y = 0.0;
    /// Optimal tour length in normalized units, from the `.opt` sidecar when present.
    std::optional<double> opt_length;
};

/// TSPLIB subset: NAME, TYPE: TSP, DIMENSION, EDGE_WEIGHT_TYPE: EUC_2D, NODE_COORD_SECTION, EOF.
/// Coordinates outside [0,1]^2 are rescaled by one aspect-preserving affine map.
LoadedInstance read_tsplib(std::istream& in);
/// Header `x,y`, one city per row; rescaled like TSPLIB input when needed.
LoadedInstance read_csv_instance(std::istream& in);
/// Reads `path` and its optional sidecar `<path>.opt` (CSV column `opt_length`).
LoadedInstance read_instance(const std::string& path, InstanceFormat format);

void write_tsplib(std::ostream& out, const TspInstance& inst, std::string_view name = "instance");
void write_csv_instance(std::ostream& out, const TspInstance& inst);
void write_instance(const std::string& path, const TspInstance& inst, InstanceFormat format);
void write_opt_sidecar(const std::string& instance_path, double opt_length);

// ---------------------------------------------------------------------------------------------

/// TSP instances as EA genotypes.
class TspDomain {
public:
    using Genotype = TspInstance;

    struct Options {
        std::size_t cities = 50;
        MutationParams mutation;
        std::vector<Feature> features;
        FeatureBounds bounds;
        /// When false, quality() returns NaN without solving (only valid for unconstrained gates).
        bool compute_quality = true;
    };

    explicit TspDomain(Options options);

    TspInstance sample(Rng& rng) const { return random_instance(options_.cities, rng); }
    TspInstance mutate(const TspInstance& g, Rng& rng) const { return tsp::mutate(g, rng, options_.mutation); }
    std::vector<double> raw_features(const TspInstance& g) const { return compute_features(g, options_.features); }
    double quality(const TspInstance& g, Rng& rng) const;
    const FeatureBounds& bounds() const noexcept { return options_.bounds; }
    const Options& options() const noexcept { return options_; }

private:
    Options options_;
};

} // namespace edo::tsp
