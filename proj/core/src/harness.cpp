#include "edo/harness.hpp"

#include "edo/csv.hpp"
#include "edo/error.hpp"
#include "edo/vector_domain.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace edo::harness {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& field, const std::string& why) {
    throw ConfigurationError("config field '" + field + "': " + why);
}

void reject_unknown(const json& obj, const std::string& where, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, _] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            config_error(where.empty() ? key : where + "." + key, "unknown key");
        }
    }
}

const json& require_object(const json& j, const std::string& field) {
    if (!j.is_object()) config_error(field, "expected an object");
    return j;
}

std::string get_string(const json& obj, const std::string& key, const std::string& field) {
    const auto& v = obj.at(key);
    if (!v.is_string()) config_error(field, "expected a string");
    return v.get<std::string>();
}

double get_number(const json& obj, const std::string& key, const std::string& field) {
    const auto& v = obj.at(key);
    if (!v.is_number()) config_error(field, "expected a number");
    return v.get<double>();
}

std::uint64_t get_count(const json& obj, const std::string& key, const std::string& field) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
        config_error(field, "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::string direction_name(QualityDirection d) {
    switch (d) {
    case QualityDirection::AtLeast: return "at-least";
    case QualityDirection::AtMost: return "at-most";
    case QualityDirection::Unconstrained: return "unconstrained";
    }
    return "unconstrained";
}

std::string strategy_name(InitStrategy s) {
    switch (s) {
    case InitStrategy::RandomAccept: return "random-accept";
    case InitStrategy::WarmStart: return "warm-start";
    case InitStrategy::QualityFirst: return "quality-first";
    }
    return "random-accept";
}

json config_to_json(const RunConfig& c) {
    json j;
    j["domain"] = c.domain == DomainKind::Tsp ? "tsp" : "vector";
    j["feature_selection"] = c.feature_selection;
    json bounds = json::array();
    for (const auto& r : c.bounds.ranges()) bounds.push_back({r.min, r.max});
    j["bounds"] = bounds;
    j["indicator"] = std::string(to_string(c.indicator));
    j["mu"] = c.mu;
    j["lambda"] = c.lambda;
    j["generations"] = c.generations;
    j["seed"] = c.seed;
    j["repetitions"] = c.repetitions;
    j["quality"] = {{"threshold", c.quality.threshold}, {"direction", direction_name(c.quality.direction)}};
    j["output_dir"] = c.output_dir;
    j["init"] = {{"strategy", strategy_name(c.init.strategy)},
                 {"budget", c.init.budget},
                 {"files", c.init.files},
                 {"format", c.init.file_format == tsp::InstanceFormat::Csv ? "csv" : "tsplib"}};
    if (c.domain == DomainKind::Tsp) {
        j["tsp"] = {{"cities", c.tsp_cities},
                    {"mutation_rate", c.tsp_mutation.rate},
                    {"sigma", c.tsp_mutation.sigma}};
    } else {
        j["vector"] = {{"sigma", c.vector_sigma}};
    }
    return j;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

void write_atomic(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw Error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

json scores_to_json(const Scores& s) {
    json j = json::object();
    for (const auto& [k, v] : s) j[k] = v;
    return j;
}

const std::vector<IndicatorSpec>& cross_specs(std::size_t dim) {
    static const std::vector<IndicatorSpec> two = {IndicatorSpec::hyp2d(), IndicatorSpec::hyp(2),
                                                   IndicatorSpec::igd(2), IndicatorSpec::eps(),
                                                   IndicatorSpec::dis(2)};
    static const std::vector<IndicatorSpec> three = {IndicatorSpec::hyp(3), IndicatorSpec::igd(3),
                                                     IndicatorSpec::dis(3)};
    if (dim == 2) return two;
    if (dim == 3) return three;
    throw UnsupportedDimensionError("cross evaluation supports d=2 or d=3, got d=" + std::to_string(dim));
}

template <class G>
std::string population_csv(const Population<G>& pop) {
    std::ostringstream out;
    const std::size_t d = pop.empty() ? 0 : pop.front().raw_features.size();
    std::vector<std::string> header{"id"};
    for (std::size_t i = 1; i <= d; ++i) header.push_back("raw_f" + std::to_string(i));
    for (std::size_t i = 1; i <= d; ++i) header.push_back("norm_f" + std::to_string(i));
    header.push_back("quality");
    write_csv_row(out, header);
    for (std::size_t id = 0; id < pop.size(); ++id) {
        const auto& ind = pop[id];
        out << id;
        for (double v : ind.raw_features) out << ',' << format_double(v);
        for (double v : ind.features.values) out << ',' << format_double(v);
        out << ',' << format_double(ind.quality) << '\n';
    }
    return out.str();
}

std::string trajectory_csv(std::span<const double> trajectory) {
    std::ostringstream out;
    out << "generation,indicator_value\n";
    for (std::size_t g = 0; g < trajectory.size(); ++g) out << g << ',' << format_double(trajectory[g]) << '\n';
    return out.str();
}

void write_genotypes(const fs::path& dir, std::uint64_t seed, const Population<vec::VectorGenotype>& pop) {
    std::vector<vec::VectorGenotype> points;
    for (const auto& ind : pop) points.push_back(ind.genotype);
    std::ostringstream out;
    vec::write_genotypes_csv(out, points);
    write_atomic(dir / ("genotypes_" + std::to_string(seed) + ".csv"), out.str());
}

void write_genotypes(const fs::path& dir, std::uint64_t seed, const Population<tsp::TspInstance>& pop) {
    const fs::path sub = dir / ("instances_" + std::to_string(seed));
    fs::create_directories(sub);
    for (std::size_t id = 0; id < pop.size(); ++id) {
        std::ostringstream out;
        tsp::write_csv_instance(out, pop[id].genotype);
        write_atomic(sub / ("ind_" + std::to_string(id) + ".csv"), out.str());
    }
}

template <Domain D>
RunSummary run_repetition(const RunConfig& config, const EvolutionConfig& evo, const D& domain,
                          std::span<const typename D::Genotype> warm, const fs::path& dir) {
    const auto report = run(evo, domain, warm);

    RunSummary summary;
    summary.seed = evo.seed;
    summary.scores = cross_evaluate(features_of(report.final_population), config.dimension());
    summary.initial_indicator = report.trajectory.front();
    summary.final_indicator = report.trajectory.back();
    summary.offspring_generated = report.offspring_generated;
    summary.offspring_accepted = report.offspring_accepted;
    summary.wall_clock_seconds = report.wall_clock_seconds;

    const std::string tag = std::to_string(evo.seed);
    write_atomic(dir / ("pop_" + tag + ".csv"), population_csv(report.final_population));
    write_atomic(dir / ("trajectory_" + tag + ".csv"), trajectory_csv(report.trajectory));
    write_genotypes(dir, evo.seed, report.final_population);
    std::cerr << "run seed=" << evo.seed << " generations=" << evo.generations
              << " wall_clock_s=" << report.wall_clock_seconds << '\n';
    return summary;
}

std::vector<tsp::Feature> tsp_features(const RunConfig& config) {
    std::vector<tsp::Feature> out;
    for (const auto& id : config.feature_selection) out.push_back(tsp::parse_feature(id));
    return out;
}

} // namespace

RunConfig parse_run_config(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigurationError(std::string("config is not valid JSON: ") + e.what());
    }
    require_object(root, "<root>");
    reject_unknown(root, "",
                   {"domain", "feature_selection", "bounds", "indicator", "mu", "lambda", "generations", "seed",
                    "repetitions", "quality", "output_dir", "init", "tsp", "vector"});
    for (const char* key : {"domain", "feature_selection", "indicator", "generations"}) {
        if (!root.contains(key)) config_error(key, "required");
    }

    RunConfig c;
    const std::string domain = get_string(root, "domain", "domain");
    if (domain == "tsp") {
        c.domain = DomainKind::Tsp;
    } else if (domain == "vector") {
        c.domain = DomainKind::Vector;
    } else {
        config_error("domain", "expected 'tsp' or 'vector'");
    }

    const auto& sel = root.at("feature_selection");
    if (!sel.is_array()) config_error("feature_selection", "expected an array of feature identifiers");
    for (const auto& f : sel) {
        if (!f.is_string()) config_error("feature_selection", "expected strings");
        c.feature_selection.push_back(f.get<std::string>());
    }
    const std::size_t d = c.feature_selection.size();
    if (d != 2 && d != 3) config_error("feature_selection", "length must be 2 or 3");
    if (std::set<std::string>(c.feature_selection.begin(), c.feature_selection.end()).size() != d) {
        config_error("feature_selection", "duplicate feature");
    }
    std::vector<FeatureRange> default_ranges;
    for (const auto& id : c.feature_selection) {
        if (c.domain == DomainKind::Tsp) {
            try {
                default_ranges.push_back(tsp::default_bounds(tsp::parse_feature(id)));
            } catch (const ConfigurationError&) {
                config_error("feature_selection", "unknown TSP feature '" + id + "' (expected f1..f4)");
            }
        } else {
            if (id != "x1" && id != "x2" && id != "x3") {
                config_error("feature_selection", "unknown vector feature '" + id + "' (expected x1..x3)");
            }
            default_ranges.push_back({0.0, 1.0});
        }
    }

    if (root.contains("bounds")) {
        const auto& b = root.at("bounds");
        if (!b.is_array() || b.size() != d) config_error("bounds", "expected one [min, max] pair per feature");
        std::vector<FeatureRange> ranges;
        for (const auto& pair : b) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
                config_error("bounds", "expected [min, max] number pairs");
            }
            ranges.push_back({pair[0].get<double>(), pair[1].get<double>()});
        }
        try {
            c.bounds = FeatureBounds(std::move(ranges));
        } catch (const ConfigurationError& e) {
            config_error("bounds", e.what());
        }
    } else {
        c.bounds = FeatureBounds(std::move(default_ranges));
    }

    try {
        c.indicator = parse_indicator_kind(get_string(root, "indicator", "indicator"));
    } catch (const ConfigurationError&) {
        config_error("indicator", "expected one of HYP2D, HYP, IGD, EPS, DIS");
    }
    if ((c.indicator == IndicatorKind::HYP2D || c.indicator == IndicatorKind::EPS) && d != 2) {
        config_error("indicator", std::string(to_string(c.indicator)) + " requires exactly 2 features");
    }

    if (root.contains("mu")) c.mu = get_count(root, "mu", "mu");
    if (root.contains("lambda")) c.lambda = get_count(root, "lambda", "lambda");
    c.generations = get_count(root, "generations", "generations");
    if (root.contains("seed")) c.seed = get_count(root, "seed", "seed");
    if (root.contains("repetitions")) c.repetitions = get_count(root, "repetitions", "repetitions");
    if (c.mu < 2) config_error("mu", "must be at least 2");
    if (c.mu > kStarDiscrepancyMaxPoints) {
        config_error("mu", "must not exceed " + std::to_string(kStarDiscrepancyMaxPoints) +
                               " (exact discrepancy budget)");
    }
    if (c.lambda < 1 || c.lambda > c.mu) config_error("lambda", "must be in 1..mu");
    if (c.indicator == IndicatorKind::DIS && c.mu + c.lambda - 1 > kStarDiscrepancyMaxPoints) {
        config_error("lambda", "mu + lambda - 1 exceeds the exact discrepancy budget");
    }
    if (c.repetitions < 1) config_error("repetitions", "must be at least 1");

    if (root.contains("quality")) {
        const auto& q = require_object(root.at("quality"), "quality");
        reject_unknown(q, "quality", {"threshold", "direction"});
        std::string dir = q.contains("direction") ? get_string(q, "direction", "quality.direction") : "unconstrained";
        if (dir == "at-least") {
            c.quality.direction = QualityDirection::AtLeast;
        } else if (dir == "at-most") {
            c.quality.direction = QualityDirection::AtMost;
        } else if (dir == "unconstrained") {
            c.quality.direction = QualityDirection::Unconstrained;
        } else {
            config_error("quality.direction", "expected at-least, at-most or unconstrained");
        }
        if (q.contains("threshold")) {
            c.quality.threshold = get_number(q, "threshold", "quality.threshold");
        } else if (c.quality.direction != QualityDirection::Unconstrained) {
            config_error("quality.threshold", "required for a constrained gate");
        }
    }

    if (root.contains("output_dir")) c.output_dir = get_string(root, "output_dir", "output_dir");

    if (root.contains("init")) {
        const auto& in = require_object(root.at("init"), "init");
        reject_unknown(in, "init", {"strategy", "budget", "files", "format"});
        if (in.contains("strategy")) {
            const std::string s = get_string(in, "strategy", "init.strategy");
            if (s == "random-accept") {
                c.init.strategy = InitStrategy::RandomAccept;
            } else if (s == "warm-start") {
                c.init.strategy = InitStrategy::WarmStart;
            } else if (s == "quality-first") {
                c.init.strategy = InitStrategy::QualityFirst;
            } else {
                config_error("init.strategy", "expected random-accept, warm-start or quality-first");
            }
        }
        if (in.contains("budget")) {
            c.init.budget = get_count(in, "budget", "init.budget");
            if (c.init.budget < 1) config_error("init.budget", "must be positive");
        }
        if (in.contains("files")) {
            const auto& files = in.at("files");
            if (!files.is_array()) config_error("init.files", "expected an array of paths");
            for (const auto& f : files) {
                if (!f.is_string()) config_error("init.files", "expected strings");
                c.init.files.push_back(f.get<std::string>());
            }
        }
        if (in.contains("format")) {
            try {
                c.init.file_format = tsp::parse_format(get_string(in, "format", "init.format"));
            } catch (const ConfigurationError&) {
                config_error("init.format", "expected csv or tsplib");
            }
        }
        if (c.init.strategy == InitStrategy::WarmStart && c.init.files.empty()) {
            config_error("init.files", "warm start needs genotype files");
        }
    }

    if (root.contains("tsp")) {
        if (c.domain != DomainKind::Tsp) config_error("tsp", "only valid for the tsp domain");
        const auto& t = require_object(root.at("tsp"), "tsp");
        reject_unknown(t, "tsp", {"cities", "mutation_rate", "sigma"});
        if (t.contains("cities")) c.tsp_cities = get_count(t, "cities", "tsp.cities");
        if (t.contains("mutation_rate")) c.tsp_mutation.rate = get_number(t, "mutation_rate", "tsp.mutation_rate");
        if (t.contains("sigma")) c.tsp_mutation.sigma = get_number(t, "sigma", "tsp.sigma");
        if (c.tsp_cities < 4) config_error("tsp.cities", "must be at least 4");
        if (!(c.tsp_mutation.rate >= 0.0 && c.tsp_mutation.rate <= 1.0)) {
            config_error("tsp.mutation_rate", "must be in [0,1]");
        }
        if (!(c.tsp_mutation.sigma >= 0.0)) config_error("tsp.sigma", "must be non-negative");
    }
    if (c.domain == DomainKind::Tsp && c.quality.direction != QualityDirection::Unconstrained &&
        c.tsp_cities > tsp::kExactMaxCities) {
        config_error("tsp.cities", "gated runs need exact optima, available for at most " +
                                       std::to_string(tsp::kExactMaxCities) + " cities");
    }

    if (root.contains("vector")) {
        if (c.domain != DomainKind::Vector) config_error("vector", "only valid for the vector domain");
        const auto& v = require_object(root.at("vector"), "vector");
        reject_unknown(v, "vector", {"sigma"});
        if (v.contains("sigma")) c.vector_sigma = get_number(v, "sigma", "vector.sigma");
        if (!(c.vector_sigma >= 0.0)) config_error("vector.sigma", "must be non-negative");
    }

    c.echo = config_to_json(c).dump();
    return c;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigurationError("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_run_config(ss.str());
}

Scores cross_evaluate(std::span<const FeatureVector> features, std::size_t dim) {
    Scores scores;
    for (const auto& spec : cross_specs(dim)) {
        // The exact discrepancy is only defined up to its point budget; larger sets omit it.
        if (spec.kind() == IndicatorKind::DIS && features.size() > kStarDiscrepancyMaxPoints) continue;
        scores[std::string(to_string(spec.kind()))] = headline(evaluate_indicator(spec, features));
    }
    return scores;
}

std::vector<FeatureVector> read_feature_csv(const std::string& path, std::size_t dim) {
    const CsvTable t = read_csv_file(path);
    std::vector<std::size_t> cols;
    if (t.column("norm_f1") != CsvTable::npos) {
        for (std::size_t i = 1; i <= dim; ++i) {
            const auto c = t.column("norm_f" + std::to_string(i));
            if (c == CsvTable::npos) throw ParseError("missing column norm_f" + std::to_string(i), 1);
            cols.push_back(c);
        }
        if (t.column("norm_f" + std::to_string(dim + 1)) != CsvTable::npos) {
            throw ParseError("population has more than " + std::to_string(dim) + " features", 1);
        }
    } else {
        if (t.header.size() != dim) {
            throw ParseError("expected " + std::to_string(dim) + " columns, header has " +
                                 std::to_string(t.header.size()),
                             1);
        }
        for (std::size_t i = 0; i < dim; ++i) cols.push_back(i);
    }

    std::vector<FeatureVector> out;
    for (const auto& row : t.rows) {
        if (row.cells.size() != t.header.size()) {
            throw ParseError("row has " + std::to_string(row.cells.size()) + " cells, header has " +
                                 std::to_string(t.header.size()),
                             row.line);
        }
        std::vector<double> v;
        for (std::size_t c : cols) {
            const double x = parse_double(row.cells[c], row.line);
            if (!(x >= 0.0 && x <= 1.0)) throw ParseError("normalized feature outside [0,1]", row.line);
            v.push_back(x);
        }
        out.emplace_back(std::move(v));
    }
    if (out.empty()) throw ParseError("no feature rows", 1);
    return out;
}

ExperimentSummary run_experiment(const RunConfig& config) {
    const fs::path dir(config.output_dir);
    fs::create_directories(dir);

    EvolutionConfig evo;
    evo.mu = config.mu;
    evo.lambda = config.lambda;
    evo.generations = config.generations;
    evo.indicator = IndicatorSpec::make(config.indicator, config.dimension());
    evo.gate = config.quality;
    evo.init = config.init.strategy;
    evo.init_budget = config.init.budget;
    evo.validate();

    ExperimentSummary summary;
    if (config.domain == DomainKind::Vector) {
        const vec::VectorDomain domain(config.dimension(), config.vector_sigma);
        std::vector<vec::VectorGenotype> warm;
        for (const auto& f : config.init.files) {
            auto pts = vec::read_genotypes_csv(f);
            warm.insert(warm.end(), pts.begin(), pts.end());
        }
        for (const auto& g : warm) {
            if (g.point.size() != config.dimension()) throw ConfigurationError("warm-start genotype dimension mismatch");
        }
        for (std::size_t r = 0; r < config.repetitions; ++r) {
            evo.seed = config.seed + r;
            summary.runs.push_back(run_repetition(config, evo, domain, std::span<const vec::VectorGenotype>(warm), dir));
        }
    } else {
        tsp::TspDomain::Options opts;
        opts.cities = config.tsp_cities;
        opts.mutation = config.tsp_mutation;
        opts.features = tsp_features(config);
        opts.bounds = config.bounds;
        opts.compute_quality = config.tsp_cities <= tsp::kExactMaxCities;
        const tsp::TspDomain domain(opts);
        std::vector<tsp::TspInstance> warm;
        for (const auto& f : config.init.files) {
            auto li = tsp::read_instance(f, config.init.file_format);
            if (li.instance.size() != config.tsp_cities) {
                throw ConfigurationError("warm-start instance " + f + " has " + std::to_string(li.instance.size()) +
                                         " cities, config expects " + std::to_string(config.tsp_cities));
            }
            warm.push_back(std::move(li.instance));
        }
        for (std::size_t r = 0; r < config.repetitions; ++r) {
            evo.seed = config.seed + r;
            summary.runs.push_back(run_repetition(config, evo, domain, std::span<const tsp::TspInstance>(warm), dir));
        }
    }

    std::map<std::string, std::vector<double>> by_measure;
    for (const auto& run : summary.runs) {
        for (const auto& [k, v] : run.scores) by_measure[k].push_back(v);
    }
    for (const auto& [k, values] : by_measure) {
        const auto st = describe(values);
        summary.mean[k] = st.mean;
        summary.std[k] = st.std;
    }

    json out;
    out["config"] = json::parse(config.echo);
    json per_run = json::array();
    for (const auto& run : summary.runs) {
        per_run.push_back({{"seed", run.seed},
                           {"scores", scores_to_json(run.scores)},
                           {"initial_indicator", run.initial_indicator},
                           {"final_indicator", run.final_indicator},
                           {"offspring_generated", run.offspring_generated},
                           {"offspring_accepted", run.offspring_accepted}});
    }
    out["per_run"] = per_run;
    out["mean"] = scores_to_json(summary.mean);
    out["std"] = scores_to_json(summary.std);
    write_atomic(dir / "summary.json", out.dump(2) + "\n");
    return summary;
}

MeasureStats describe(std::span<const double> values) {
    MeasureStats st;
    st.count = values.size();
    if (values.empty()) return st;
    double sum = 0.0;
    for (double v : values) sum += v;
    st.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - st.mean) * (v - st.mean);
        st.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return st;
}

Orientation measure_orientation(std::string_view measure) {
    return goal(parse_indicator_kind(measure));
}

std::vector<AggregateRow> stats_aggregate(std::span<const SummaryInput> summaries) {
    if (summaries.empty()) throw Error("stats: no summaries to aggregate");
    std::set<std::string> schema;
    for (const auto& [k, _] : summaries.front().values) schema.insert(k);
    for (const auto& s : summaries) {
        std::set<std::string> keys;
        for (const auto& [k, v] : s.values) {
            keys.insert(k);
            if (v.empty()) throw Error("stats: summary '" + s.label + "' has no runs for " + k);
        }
        if (keys != schema) throw Error("stats: schema mismatch between '" + summaries.front().label + "' and '" +
                                        s.label + "'");
    }

    std::vector<AggregateRow> rows;
    for (const auto& measure : schema) {
        const bool maximize = measure_orientation(measure) == Orientation::Maximize;
        const std::size_t first = rows.size();
        for (const auto& s : summaries) rows.push_back({s.label, measure, describe(s.values.at(measure)), 0});
        for (std::size_t i = first; i < rows.size(); ++i) {
            std::size_t better = 0;
            for (std::size_t j = first; j < rows.size(); ++j) {
                const double a = rows[j].stats.mean;
                const double b = rows[i].stats.mean;
                if (maximize ? a > b : a < b) ++better;
            }
            rows[i].rank = better + 1;
        }
    }
    return rows;
}

SummaryInput read_summary(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error("summary " + path + " is not valid JSON: " + e.what());
    }
    if (!j.contains("config") || !j.contains("per_run") || !j["per_run"].is_array()) {
        throw Error("summary " + path + " lacks config/per_run");
    }
    SummaryInput s;
    const auto& cfg = j["config"];
    std::vector<std::string> feats;
    for (const auto& f : cfg.value("feature_selection", json::array())) feats.push_back(f.get<std::string>());
    s.label = cfg.value("indicator", std::string("?")) + ":" + join(feats, ",");
    for (const auto& run : j["per_run"]) {
        for (const auto& [k, v] : run.at("scores").items()) s.values[k].push_back(v.get<double>());
    }
    return s;
}

} // namespace edo::harness
