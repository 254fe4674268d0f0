#pragma once

#include "edo/error.hpp"
#include "edo/feature_space.hpp"
#include "edo/indicators.hpp"

#include <algorithm>
#include <chrono>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace edo {

using Rng = std::mt19937_64;

enum class QualityDirection { AtLeast, AtMost, Unconstrained };

/// Acceptance predicate every population member satisfies: q >= threshold, q <= threshold, or none.
struct QualityGate {
    double threshold = 0.0;
    QualityDirection direction = QualityDirection::Unconstrained;

    bool passes(double q) const noexcept {
        switch (direction) {
        case QualityDirection::AtLeast: return q >= threshold;
        case QualityDirection::AtMost: return q <= threshold;
        case QualityDirection::Unconstrained: return true;
        }
        return true;
    }

    // strictly closer to passing
    bool improves(double candidate, double current) const noexcept {
        switch (direction) {
        case QualityDirection::AtLeast: return candidate > current;
        case QualityDirection::AtMost: return candidate < current;
        case QualityDirection::Unconstrained: return false;
        }
        return false;
    }
};

enum class InitStrategy { RandomAccept, WarmStart, QualityFirst };

struct EvolutionConfig {
    std::size_t mu = 20;
    std::size_t lambda = 1;
    std::size_t generations = 0;
    std::uint64_t seed = 0;
    IndicatorSpec indicator;
    QualityGate gate;
    InitStrategy init = InitStrategy::RandomAccept;
    /// Candidate evaluations allowed during initialization.
    std::size_t init_budget = 1'000'000;

    void validate() const {
        if (mu < 2) throw ConfigurationError("mu must be at least 2");
        if (lambda < 1) throw ConfigurationError("lambda must be at least 1");
        if (lambda > mu) throw ConfigurationError("lambda must not exceed mu");
        if (init_budget < 1) throw ConfigurationError("init_budget must be positive");
        indicator.validate();
    }
};

template <class G>
struct Individual {
    G genotype;
    std::vector<double> raw_features;
    FeatureVector features;
    double quality = 0.0;
    std::size_t birth_generation = 0;
};

template <class G>
using Population = std::vector<Individual<G>>;

/// What the EA needs from a solution domain. `quality` may consume randomness (e.g. restarts of a
/// local search); everything else about a genotype must be deterministic.
template <class D>
concept Domain = requires(const D& d, const typename D::Genotype& g, Rng& rng) {
    typename D::Genotype;
    { d.sample(rng) } -> std::same_as<typename D::Genotype>;
    { d.mutate(g, rng) } -> std::same_as<typename D::Genotype>;
    { d.raw_features(g) } -> std::same_as<std::vector<double>>;
    { d.quality(g, rng) } -> std::convertible_to<double>;
    { d.bounds() } -> std::convertible_to<const FeatureBounds&>;
};

template <Domain D>
Individual<typename D::Genotype> make_individual(const D& domain, typename D::Genotype g, Rng& rng,
                                                 std::size_t generation) {
    Individual<typename D::Genotype> ind;
    ind.raw_features = domain.raw_features(g);
    ind.features = normalize(ind.raw_features, domain.bounds());
    ind.quality = static_cast<double>(domain.quality(g, rng));
    ind.genotype = std::move(g);
    ind.birth_generation = generation;
    return ind;
}

template <class G>
std::vector<FeatureVector> features_of(const Population<G>& pop) {
    std::vector<FeatureVector> out;
    out.reserve(pop.size());
    for (const auto& ind : pop) out.push_back(ind.features);
    return out;
}

template <class G>
IndicatorValue evaluate_population(const IndicatorSpec& spec, const Population<G>& pop) {
    return evaluate_indicator(spec, features_of(pop));
}

/// Fills a population of `config.mu` members that pass the quality gate.
///
/// RandomAccept samples until mu candidates pass; QualityFirst hill-climbs each sample on quality
/// (keeping a mutant only when it is strictly closer to the gate) until it passes; WarmStart admits
/// exactly the given genotypes after checking the gate. Each quality evaluation counts against
/// `config.init_budget`; exhausting it throws InitializationFailure.
template <Domain D>
Population<typename D::Genotype> initialize(const EvolutionConfig& config, const D& domain, Rng& rng,
                                            std::span<const typename D::Genotype> warm_start = {}) {
    using G = typename D::Genotype;
    Population<G> pop;
    pop.reserve(config.mu + config.lambda);
    std::size_t attempts = 0;

    switch (config.init) {
    case InitStrategy::WarmStart: {
        if (warm_start.size() != config.mu) {
            throw ConfigurationError("warm start requires exactly mu=" + std::to_string(config.mu) +
                                     " genotypes, got " + std::to_string(warm_start.size()));
        }
        for (const auto& g : warm_start) {
            auto ind = make_individual(domain, g, rng, 0);
            ++attempts;
            if (!config.gate.passes(ind.quality)) throw InitializationFailure(pop.size(), attempts);
            pop.push_back(std::move(ind));
        }
        break;
    }
    case InitStrategy::RandomAccept: {
        while (pop.size() < config.mu) {
            if (attempts >= config.init_budget) throw InitializationFailure(pop.size(), attempts);
            auto ind = make_individual(domain, domain.sample(rng), rng, 0);
            ++attempts;
            if (config.gate.passes(ind.quality)) pop.push_back(std::move(ind));
        }
        break;
    }
    case InitStrategy::QualityFirst: {
        while (pop.size() < config.mu) {
            if (attempts >= config.init_budget) throw InitializationFailure(pop.size(), attempts);
            auto current = make_individual(domain, domain.sample(rng), rng, 0);
            ++attempts;
            while (!config.gate.passes(current.quality)) {
                if (attempts >= config.init_budget) throw InitializationFailure(pop.size(), attempts);
                auto mutant = make_individual(domain, domain.mutate(current.genotype, rng), rng, 0);
                ++attempts;
                if (config.gate.improves(mutant.quality, current.quality)) current = std::move(mutant);
            }
            pop.push_back(std::move(current));
        }
        break;
    }
    }
    return pop;
}

/// Removes members one at a time until `mu` remain, each time dropping the member whose absence
/// leaves the best indicator value. Among equally good removals the member with the largest
/// birth generation goes, then the one with the largest index. Returns the value of the final set.
template <class G>
IndicatorValue select_survivors(Population<G>& pop, std::size_t mu, const IndicatorSpec& spec) {
    std::vector<FeatureVector> feats = features_of(pop);
    std::optional<IndicatorValue> kept_value;
    while (pop.size() > mu) {
        std::optional<std::size_t> best;
        std::optional<IndicatorValue> best_value;
        std::vector<FeatureVector> subset;
        subset.reserve(feats.size() - 1);
        for (std::size_t i = 0; i < pop.size(); ++i) {
            subset.clear();
            for (std::size_t j = 0; j < feats.size(); ++j) {
                if (j != i) subset.push_back(feats[j]);
            }
            IndicatorValue value = evaluate_indicator(spec, subset);
            bool take = !best.has_value();
            if (!take) {
                const auto cmp = compare_indicator_values(spec, value, *best_value);
                take = cmp < 0 || (cmp == 0 && pop[i].birth_generation >= pop[*best].birth_generation);
            }
            if (take) {
                best = i;
                best_value = std::move(value);
            }
        }
        const auto at = static_cast<std::ptrdiff_t>(*best);
        pop.erase(pop.begin() + at);
        feats.erase(feats.begin() + at);
        kept_value = std::move(best_value);
    }
    if (!kept_value) kept_value = evaluate_indicator(spec, feats);
    return *kept_value;
}

struct GenerationOutcome {
    std::size_t offspring_generated = 0;
    std::size_t offspring_accepted = 0;
    /// Indicator value of the reduced population; empty when every offspring was rejected.
    std::optional<IndicatorValue> value;
};

/// One generation in place: choose lambda parents uniformly without replacement, mutate each,
/// admit the offspring that pass the gate, then reduce back to mu by minimal-loss removal.
template <Domain D>
GenerationOutcome advance(Population<typename D::Genotype>& pop, const EvolutionConfig& config,
                          const D& domain, Rng& rng, std::size_t generation) {
    std::vector<std::size_t> all(pop.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::size_t> parents;
    parents.reserve(config.lambda);
    std::sample(all.begin(), all.end(), std::back_inserter(parents), config.lambda, rng);

    GenerationOutcome out;
    for (std::size_t p : parents) {
        auto child = make_individual(domain, domain.mutate(pop[p].genotype, rng), rng, generation);
        ++out.offspring_generated;
        if (config.gate.passes(child.quality)) {
            pop.push_back(std::move(child));
            ++out.offspring_accepted;
        }
    }
    if (out.offspring_accepted > 0) out.value = select_survivors(pop, config.mu, config.indicator);
    return out;
}

template <Domain D>
Population<typename D::Genotype> step(Population<typename D::Genotype> pop, const EvolutionConfig& config,
                                      const D& domain, Rng& rng, std::size_t generation) {
    advance(pop, config, domain, rng, generation);
    return pop;
}

template <class G>
struct RunReport {
    Population<G> initial_population;
    Population<G> final_population;
    /// Driving-indicator headline value per generation; entry 0 is the initial population.
    std::vector<double> trajectory;
    IndicatorValue final_value;
    std::size_t offspring_generated = 0;
    std::size_t offspring_accepted = 0;
    double wall_clock_seconds = 0.0;
};

/// initialize, then `config.generations` steps. A pure function of (config, domain, warm_start).
template <Domain D>
RunReport<typename D::Genotype> run(const EvolutionConfig& config, const D& domain,
                                    std::span<const typename D::Genotype> warm_start = {}) {
    using G = typename D::Genotype;
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    Rng rng(config.seed);
    RunReport<G> report;
    Population<G> pop = initialize(config, domain, rng, warm_start);
    report.initial_population = pop;
    IndicatorValue value = evaluate_population(config.indicator, pop);
    report.trajectory.reserve(config.generations + 1);
    report.trajectory.push_back(headline(value));

    for (std::size_t gen = 1; gen <= config.generations; ++gen) {
        auto outcome = advance(pop, config, domain, rng, gen);
        report.offspring_generated += outcome.offspring_generated;
        report.offspring_accepted += outcome.offspring_accepted;
        if (outcome.value) value = std::move(*outcome.value);
        report.trajectory.push_back(headline(value));
    }

    report.final_value = std::move(value);
    report.final_population = std::move(pop);
    report.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace edo
