// edo: evolutionary diversity optimization runner.
//
// Exit codes: 0 success, 1 input/runtime error, 2 configuration or usage error,
// 3 initialization failure.

#include "edo/csv.hpp"
#include "edo/error.hpp"
#include "edo/harness.hpp"
#include "edo/refsets.hpp"
#include "edo/tsp.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <glob.h>

#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

int cmd_run(const std::string& config_path) {
    const auto config = edo::harness::load_run_config(config_path);
    const auto summary = edo::harness::run_experiment(config);
    json out;
    out["output_dir"] = config.output_dir;
    out["runs"] = summary.runs.size();
    out["mean"] = summary.mean;
    out["std"] = summary.std;
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_evaluate(const std::string& path, std::size_t dim) {
    const auto features = edo::harness::read_feature_csv(path, dim);
    const auto scores = edo::harness::cross_evaluate(features, dim);
    std::cout << json(scores).dump() << '\n';
    return 0;
}

int cmd_features(const std::string& path, const std::string& format, std::uint64_t seed) {
    const auto loaded = edo::tsp::read_instance(path, edo::tsp::parse_format(format));
    const auto& inst = loaded.instance;
    inst.validate();

    json out;
    out["name"] = loaded.name;
    out["n"] = inst.size();
    out["scale"] = loaded.scale;
    out["offset"] = {loaded.offset_x, loaded.offset_y};
    json feats;
    for (auto f : {edo::tsp::Feature::AngleMean, edo::tsp::Feature::CentroidMeanDist, edo::tsp::Feature::NndsMean,
                   edo::tsp::Feature::MstDistsMean}) {
        feats[std::string(edo::tsp::feature_id(f))] = edo::tsp::compute_feature(inst, f);
    }
    out["features"] = feats;
    out["degenerate_angles"] = edo::tsp::angle_stats(inst).degenerate;

    if (inst.size() >= 4 && (loaded.opt_length || inst.size() <= edo::tsp::kExactMaxCities)) {
        edo::Rng rng(seed);
        out["opt_length"] = loaded.opt_length ? *loaded.opt_length : edo::tsp::exact_opt(inst).length;
        out["approximation_ratio"] = edo::tsp::quality(inst, rng, loaded.opt_length);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_grid(std::size_t dim, std::size_t k, const std::string& out_path) {
    const auto rs = edo::grid(dim, k);
    edo::write_refset_csv(out_path, rs);
    std::cerr << "wrote " << rs.size() << " points to " << out_path << '\n';
    return 0;
}

std::vector<std::string> expand_glob(const std::string& pattern) {
    glob_t g{};
    std::vector<std::string> out;
    if (::glob(pattern.c_str(), 0, nullptr, &g) == 0) {
        for (std::size_t i = 0; i < g.gl_pathc; ++i) out.emplace_back(g.gl_pathv[i]);
    }
    ::globfree(&g);
    return out;
}

int cmd_stats(const std::vector<std::string>& patterns) {
    std::vector<edo::harness::SummaryInput> inputs;
    for (const auto& p : patterns) {
        const auto paths = expand_glob(p);
        if (paths.empty()) throw edo::Error("no files match " + p);
        for (const auto& path : paths) inputs.push_back(edo::harness::read_summary(path));
    }
    const auto rows = edo::harness::stats_aggregate(inputs);
    std::cout << "label,measure,runs,mean,std,rank\n";
    for (const auto& r : rows) {
        std::cout << '"' << r.label << "\"," << r.measure << ',' << r.stats.count << ','
                  << edo::format_double(r.stats.mean) << ',' << edo::format_double(r.stats.std) << ',' << r.rank
                  << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evolutionary diversity optimization with multi-objective indicators"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "Run an experiment from a JSON config");
    run->add_option("--config", config_path, "Run configuration (JSON)")->required();

    std::string features_csv;
    std::size_t dim = 2;
    auto* evaluate = app.add_subcommand("evaluate", "Score a feature CSV under every measure");
    evaluate->add_option("--features", features_csv, "CSV of normalized features")->required();
    evaluate->add_option("--dim", dim, "Feature dimension")->required()->check(CLI::IsMember({2, 3}));

    std::string instance_path;
    std::string format = "csv";
    std::uint64_t seed = 1;
    auto* features = app.add_subcommand("features", "Compute TSP features of an instance");
    features->add_option("--instance", instance_path, "Instance file")->required();
    features->add_option("--format", format, "tsplib or csv")->check(CLI::IsMember({"tsplib", "csv"}));
    features->add_option("--seed", seed, "Seed for the 2-opt restarts");

    std::size_t grid_dim = 2;
    std::size_t grid_k = 101;
    std::string grid_out;
    auto* grid = app.add_subcommand("grid", "Write a regular reference grid");
    grid->add_option("--dim", grid_dim, "Dimension")->required()->check(CLI::IsMember({2, 3}));
    grid->add_option("--k", grid_k, "Points per axis")->required();
    grid->add_option("--out", grid_out, "Output CSV")->required();

    std::vector<std::string> stats_inputs;
    auto* stats = app.add_subcommand("stats", "Aggregate summary.json files");
    stats->add_option("--inputs", stats_inputs, "Glob pattern(s) of summary files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*run) return cmd_run(config_path);
        if (*evaluate) return cmd_evaluate(features_csv, dim);
        if (*features) return cmd_features(instance_path, format, seed);
        if (*grid) return cmd_grid(grid_dim, grid_k, grid_out);
        if (*stats) return cmd_stats(stats_inputs);
    } catch (const edo::InitializationFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const edo::ConfigurationError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
