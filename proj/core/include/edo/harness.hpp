#pragma once

#include "edo/evolution.hpp"
#include "edo/feature_space.hpp"
#include "edo/indicators.hpp"
#include "edo/tsp.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edo::harness {

enum class DomainKind { Tsp, Vector };

struct InitOptions {
    InitStrategy strategy = InitStrategy::RandomAccept;
    std::size_t budget = 1'000'000;
    /// Warm start: one CSV of mu points (vector) or mu instance files (tsp).
    std::vector<std::string> files;
    tsp::InstanceFormat file_format = tsp::InstanceFormat::Csv;
};

/// Experiment description, parsed from JSON. Unknown keys are rejected.
///
///     {
///       "domain": "tsp" | "vector",
///       "feature_selection": ["f1", "f4"],          // tsp: f1..f4, vector: x1..x3
///       "bounds": [[0.70, 2.90], [0.06, 0.15]],     // optional, defaults per domain
///       "indicator": "HYP2D" | "HYP" | "IGD" | "EPS" | "DIS",
///       "mu": 20, "lambda": 1, "generations": 20000, "seed": 1, "repetitions": 30,
///       "quality": {"threshold": 1.18, "direction": "at-least" | "at-most" | "unconstrained"},
///       "output_dir": "out",
///       "init": {"strategy": "random-accept" | "warm-start" | "quality-first",
///                "budget": 1000000, "files": [...], "format": "csv" | "tsplib"},   // optional
///       "tsp": {"cities": 50, "mutation_rate": 0.1, "sigma": 0.025},           // optional
///       "vector": {"sigma": 0.05}                                               // optional
///     }
struct RunConfig {
    DomainKind domain = DomainKind::Vector;
    std::vector<std::string> feature_selection;
    FeatureBounds bounds;
    IndicatorKind indicator = IndicatorKind::IGD;
    std::size_t mu = 20;
    std::size_t lambda = 1;
    std::size_t generations = 0;
    std::uint64_t seed = 0;
    std::size_t repetitions = 1;
    QualityGate quality;
    std::string output_dir = ".";
    InitOptions init;
    std::size_t tsp_cities = 50;
    tsp::MutationParams tsp_mutation;
    double vector_sigma = 0.05;
    /// Canonical JSON text of the parsed configuration, echoed into the summary.
    std::string echo;

    std::size_t dimension() const noexcept { return feature_selection.size(); }
};

RunConfig parse_run_config(std::string_view json_text);
RunConfig load_run_config(const std::string& path);

/// Measure name -> score. Names: HYP2D (d=2 only), HYP, IGD, EPS (d=2 only, first sequence
/// element), DIS.
using Scores = std::map<std::string, double>;

/// Scores a population of normalized feature vectors under every applicable measure.
/// DIS is omitted when the population exceeds the exact discrepancy budget.
Scores cross_evaluate(std::span<const FeatureVector> features, std::size_t dim);

/// Reads normalized feature vectors from a CSV: the norm_f1..norm_fd columns of a population file
/// or a plain table of exactly `dim` numeric columns.
std::vector<FeatureVector> read_feature_csv(const std::string& path, std::size_t dim);

struct RunSummary {
    std::uint64_t seed = 0;
    Scores scores;
    double initial_indicator = 0.0;
    double final_indicator = 0.0;
    std::size_t offspring_generated = 0;
    std::size_t offspring_accepted = 0;
    double wall_clock_seconds = 0.0;
};

struct ExperimentSummary {
    std::vector<RunSummary> runs;
    Scores mean;
    Scores std;
};

/// Runs `config.repetitions` seeded runs (seed, seed+1, ...) and writes per run
/// `pop_<seed>.csv`, `trajectory_<seed>.csv` and the final genotypes, then `summary.json`.
ExperimentSummary run_experiment(const RunConfig& config);

/// Sample statistics of one measure.
struct MeasureStats {
    std::size_t count = 0;
    double mean = 0.0;
    double std = 0.0;
};

MeasureStats describe(std::span<const double> values);

/// Orientation used when ranking a measure (HYP2D/HYP maximize, others minimize).
Orientation measure_orientation(std::string_view measure);

struct AggregateRow {
    std::string label;
    std::string measure;
    MeasureStats stats;
    /// 1 = best among the aggregated summaries for this measure; ties share the best rank.
    std::size_t rank = 0;
};

struct SummaryInput {
    std::string label;
    /// measure -> per-run scores
    std::map<std::string, std::vector<double>> values;
};

/// Per-measure mean and sample standard deviation for each summary, ranked per measure.
/// Every input must report the same set of measures.
std::vector<AggregateRow> stats_aggregate(std::span<const SummaryInput> summaries);

/// Reads a `summary.json` into a SummaryInput labelled `<indicator>:<features>`.
SummaryInput read_summary(const std::string& path);

} // namespace edo::harness
