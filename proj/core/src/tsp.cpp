#include "edo/tsp.hpp"

#include "edo/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace edo::tsp {

namespace {

std::vector<double> distance_matrix(const TspInstance& inst) {
    const std::size_t n = inst.size();
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            d[i * n + j] = d[j * n + i] = distance(inst.cities[i], inst.cities[j]);
        }
    }
    return d;
}

void require_cities(const TspInstance& inst, std::size_t min, std::string_view op) {
    if (inst.size() < min) {
        throw DomainError(std::string(op) + ": needs at least " + std::to_string(min) + " cities, got " +
                          std::to_string(inst.size()));
    }
}

// Sum of edge lengths along the cycle rotated to start at city 0 and oriented so the second city
// has the smaller index of the two neighbours of 0; equal cycles give bitwise equal lengths.
double canonical_length(const TspInstance& inst, std::span<const std::size_t> order) {
    const std::size_t n = order.size();
    if (n < 2) return 0.0;
    const auto start = static_cast<std::size_t>(std::find(order.begin(), order.end(), 0) - order.begin());
    const std::size_t next = order[(start + 1) % n];
    const std::size_t prev = order[(start + n - 1) % n];
    const bool forward = next <= prev;
    double length = 0.0;
    std::size_t pos = start;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t step = forward ? (pos + 1) % n : (pos + n - 1) % n;
        length += distance(inst.cities[order[pos]], inst.cities[order[step]]);
        pos = step;
    }
    return length;
}

} // namespace

void TspInstance::validate() const {
    if (cities.size() < 3) throw ConfigurationError("TSP instance needs at least 3 cities");
    for (std::size_t i = 0; i < cities.size(); ++i) {
        const auto& c = cities[i];
        if (!(c.x >= 0.0 && c.x <= 1.0 && c.y >= 0.0 && c.y <= 1.0)) {
            throw ConfigurationError("city " + std::to_string(i) + " lies outside [0,1]^2");
        }
    }
}

double distance(const City& a, const City& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double tour_length(const TspInstance& inst, std::span<const std::size_t> order) {
    if (order.size() != inst.size()) throw DomainError("tour_length: order is not a permutation of the cities");
    std::vector<char> seen(order.size(), 0);
    for (std::size_t c : order) {
        if (c >= order.size() || seen[c]) throw DomainError("tour_length: order is not a permutation of the cities");
        seen[c] = 1;
    }
    return canonical_length(inst, order);
}

TspInstance random_instance(std::size_t n, Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    TspInstance inst;
    inst.cities.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = u(rng);
        const double y = u(rng);
        inst.cities.push_back({x, y});
    }
    return inst;
}

// ---------------------------------------------------------------------------------------------

Feature parse_feature(std::string_view id) {
    std::string s;
    for (char c : id) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "f1" || s == "angle_mean") return Feature::AngleMean;
    if (s == "f2" || s == "centroid_mean_distance_to_centroid") return Feature::CentroidMeanDist;
    if (s == "f3" || s == "nnds_mean") return Feature::NndsMean;
    if (s == "f4" || s == "mst_dists_mean") return Feature::MstDistsMean;
    throw ConfigurationError("unknown TSP feature '" + std::string(id) + "'");
}

std::string_view feature_id(Feature f) {
    switch (f) {
    case Feature::AngleMean: return "f1";
    case Feature::CentroidMeanDist: return "f2";
    case Feature::NndsMean: return "f3";
    case Feature::MstDistsMean: return "f4";
    }
    return "?";
}

std::string_view feature_name(Feature f) {
    switch (f) {
    case Feature::AngleMean: return "angle_mean";
    case Feature::CentroidMeanDist: return "centroid_mean_distance_to_centroid";
    case Feature::NndsMean: return "nnds_mean";
    case Feature::MstDistsMean: return "mst_dists_mean";
    }
    return "?";
}

FeatureRange default_bounds(Feature f) {
    switch (f) {
    case Feature::AngleMean: return {0.70, 2.90};
    case Feature::CentroidMeanDist: return {0.24, 0.70};
    case Feature::NndsMean: return {0.10, 0.70};
    case Feature::MstDistsMean: return {0.06, 0.15};
    }
    return {0.0, 1.0};
}

AngleStats angle_stats(const TspInstance& inst) {
    require_cities(inst, 3, "angle_mean");
    const std::size_t n = inst.size();
    const auto d = distance_matrix(inst);
    AngleStats stats;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t first = n;
        std::size_t second = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (first == n || d[i * n + j] < d[i * n + first]) {
                second = first;
                first = j;
            } else if (second == n || d[i * n + j] < d[i * n + second]) {
                second = j;
            }
        }
        const auto& c = inst.cities[i];
        const double ax = inst.cities[first].x - c.x;
        const double ay = inst.cities[first].y - c.y;
        const double bx = inst.cities[second].x - c.x;
        const double by = inst.cities[second].y - c.y;
        const double na = std::hypot(ax, ay);
        const double nb = std::hypot(bx, by);
        if (na == 0.0 || nb == 0.0) {
            ++stats.degenerate;
            continue;
        }
        sum += std::acos(std::clamp((ax * bx + ay * by) / (na * nb), -1.0, 1.0));
    }
    stats.mean = sum / static_cast<double>(n);
    return stats;
}

double feature_angle_mean(const TspInstance& inst) { return angle_stats(inst).mean; }

double feature_centroid_mean_dist(const TspInstance& inst) {
    require_cities(inst, 1, "centroid_mean_dist");
    City centroid;
    for (const auto& c : inst.cities) {
        centroid.x += c.x;
        centroid.y += c.y;
    }
    const double n = static_cast<double>(inst.size());
    centroid.x /= n;
    centroid.y /= n;
    double sum = 0.0;
    for (const auto& c : inst.cities) sum += distance(c, centroid);
    return sum / n;
}

double feature_nnds_mean(const TspInstance& inst) {
    require_cities(inst, 2, "nnds_mean");
    const std::size_t n = inst.size();
    const auto d = distance_matrix(inst);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) best = std::min(best, d[i * n + j]);
        }
        sum += best;
    }
    return sum / static_cast<double>(n);
}

double mst_total_length(const TspInstance& inst) {
    require_cities(inst, 2, "mst");
    const std::size_t n = inst.size();
    const auto d = distance_matrix(inst);
    std::vector<char> in_tree(n, 0);
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    in_tree[0] = 1;
    for (std::size_t j = 1; j < n; ++j) best[j] = d[j];
    double total = 0.0;
    for (std::size_t added = 1; added < n; ++added) {
        std::size_t pick = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (!in_tree[j] && (pick == n || best[j] < best[pick])) pick = j;
        }
        in_tree[pick] = 1;
        total += best[pick];
        for (std::size_t j = 0; j < n; ++j) {
            if (!in_tree[j]) best[j] = std::min(best[j], d[pick * n + j]);
        }
    }
    return total;
}

double feature_mst_dists_mean(const TspInstance& inst) {
    return mst_total_length(inst) / static_cast<double>(inst.size() - 1);
}

double compute_feature(const TspInstance& inst, Feature f) {
    switch (f) {
    case Feature::AngleMean: return feature_angle_mean(inst);
    case Feature::CentroidMeanDist: return feature_centroid_mean_dist(inst);
    case Feature::NndsMean: return feature_nnds_mean(inst);
    case Feature::MstDistsMean: return feature_mst_dists_mean(inst);
    }
    return 0.0;
}

std::vector<double> compute_features(const TspInstance& inst, std::span<const Feature> features) {
    std::vector<double> out;
    out.reserve(features.size());
    for (Feature f : features) out.push_back(compute_feature(inst, f));
    return out;
}

// ---------------------------------------------------------------------------------------------

Tour two_opt_from(const TspInstance& inst, std::vector<std::size_t> t) {
    const std::size_t n = inst.size();
    if (t.size() != n) throw DomainError("two_opt: start tour has the wrong size");
    if (n >= 4) {
        const auto d = distance_matrix(inst);
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t i = 0; i + 2 < n; ++i) {
                for (std::size_t j = i + 2; j < n; ++j) {
                    if (i == 0 && j == n - 1) continue;
                    const std::size_t a = t[i], b = t[i + 1], c = t[j], e = t[(j + 1) % n];
                    const double delta = d[a * n + c] + d[b * n + e] - d[a * n + b] - d[c * n + e];
                    if (delta < -1e-12) {
                        std::reverse(t.begin() + static_cast<std::ptrdiff_t>(i + 1),
                                     t.begin() + static_cast<std::ptrdiff_t>(j + 1));
                        improved = true;
                    }
                }
            }
        }
    }
    Tour tour;
    tour.length = tour_length(inst, t);
    tour.order = std::move(t);
    return tour;
}

Tour two_opt(const TspInstance& inst, Rng& rng) {
    std::vector<std::size_t> start(inst.size());
    std::iota(start.begin(), start.end(), 0);
    std::shuffle(start.begin(), start.end(), rng);
    return two_opt_from(inst, std::move(start));
}

bool is_two_opt_local(const TspInstance& inst, const Tour& tour, double tolerance) {
    const std::size_t n = inst.size();
    const auto& t = tour.order;
    for (std::size_t i = 0; i + 2 < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            const auto& a = inst.cities[t[i]];
            const auto& b = inst.cities[t[i + 1]];
            const auto& c = inst.cities[t[j]];
            const auto& e = inst.cities[t[(j + 1) % n]];
            const double delta = distance(a, c) + distance(b, e) - distance(a, b) - distance(c, e);
            if (delta < -tolerance) return false;
        }
    }
    return true;
}

Tour exact_opt(const TspInstance& inst) {
    const std::size_t n = inst.size();
    if (n > kExactMaxCities) {
        throw CapacityError("exact_opt: " + std::to_string(n) + " cities exceed the Held-Karp limit of " +
                            std::to_string(kExactMaxCities) + "; supply an externally computed optimum instead");
    }
    require_cities(inst, 1, "exact_opt");
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (n <= 3) return Tour{order, tour_length(inst, order)};

    const auto d = distance_matrix(inst);
    const std::size_t m = n - 1; // city k+1 is bit k
    const std::size_t full = std::size_t{1} << m;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> cost(full * m, inf);
    std::vector<std::uint8_t> parent(full * m, 0);

    for (std::size_t j = 0; j < m; ++j) cost[(std::size_t{1} << j) * m + j] = d[j + 1];
    for (std::size_t mask = 1; mask < full; ++mask) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!(mask & (std::size_t{1} << j))) continue;
            const double base = cost[mask * m + j];
            if (base == inf) continue;
            for (std::size_t k = 0; k < m; ++k) {
                if (mask & (std::size_t{1} << k)) continue;
                const std::size_t next = mask | (std::size_t{1} << k);
                const double cand = base + d[(j + 1) * n + (k + 1)];
                if (cand < cost[next * m + k]) {
                    cost[next * m + k] = cand;
                    parent[next * m + k] = static_cast<std::uint8_t>(j);
                }
            }
        }
    }

    std::size_t last = 0;
    double best = inf;
    for (std::size_t j = 0; j < m; ++j) {
        const double total = cost[(full - 1) * m + j] + d[(j + 1) * n];
        if (total < best) {
            best = total;
            last = j;
        }
    }

    std::vector<std::size_t> rev;
    std::size_t mask = full - 1;
    std::size_t j = last;
    while (true) {
        rev.push_back(j + 1);
        const std::size_t prev_mask = mask & ~(std::size_t{1} << j);
        if (prev_mask == 0) break;
        j = parent[mask * m + j];
        mask = prev_mask;
    }
    order.assign(1, 0);
    order.insert(order.end(), rev.rbegin(), rev.rend());
    return Tour{order, tour_length(inst, order)};
}

double quality(const TspInstance& inst, Rng& rng, std::optional<double> opt_length) {
    const bool exact = !opt_length.has_value();
    const double opt = exact ? exact_opt(inst).length : *opt_length;
    if (!(opt > 0.0)) throw ConfigurationError("quality: optimum tour length must be positive");

    const std::uint64_t base = rng();
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t k = 0; k < 3; ++k) {
        std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32), k};
        Rng stream(seq);
        best = std::min(best, two_opt(inst, stream).length);
    }
    const double ratio = best / opt;
    // An exact optimum bounds every tour from below; anything under 1 is rounding.
    return exact ? std::max(1.0, ratio) : ratio;
}

TspInstance mutate(const TspInstance& inst, Rng& rng, const MutationParams& params) {
    TspInstance out = inst;
    const std::size_t n = inst.size();
    if (n == 0) return out;
    std::bernoulli_distribution pick(std::clamp(params.rate, 0.0, 1.0));
    std::vector<std::size_t> moved;
    for (std::size_t i = 0; i < n; ++i) {
        if (pick(rng)) moved.push_back(i);
    }
    if (moved.empty()) {
        std::uniform_int_distribution<std::size_t> any(0, n - 1);
        moved.push_back(any(rng));
    }
    if (params.sigma > 0.0) {
        std::normal_distribution<double> noise(0.0, params.sigma);
        for (std::size_t i : moved) {
            out.cities[i].x = reflect_unit(out.cities[i].x + noise(rng));
            out.cities[i].y = reflect_unit(out.cities[i].y + noise(rng));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------------

TspDomain::TspDomain(Options options) : options_(std::move(options)) {
    if (options_.cities < 4) throw ConfigurationError("TSP domain needs at least 4 cities");
    if (options_.features.empty()) throw ConfigurationError("TSP domain needs at least one feature");
    if (options_.bounds.size() == 0) {
        std::vector<FeatureRange> ranges;
        for (Feature f : options_.features) ranges.push_back(default_bounds(f));
        options_.bounds = FeatureBounds(std::move(ranges));
    }
    if (options_.bounds.size() != options_.features.size()) {
        throw ConfigurationError("TSP domain: bounds and feature selection differ in length");
    }
}

double TspDomain::quality(const TspInstance& g, Rng& rng) const {
    if (!options_.compute_quality) return std::numeric_limits<double>::quiet_NaN();
    return tsp::quality(g, rng);
}

} // namespace edo::tsp
