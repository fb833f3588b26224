#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vanetsim/engine.hpp"
#include "vanetsim/output.hpp"
#include "vanetsim/scenario.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr const char* kOutDirEnv = "VANETSIM_OUT";

namespace fs = std::filesystem;
using namespace vanetsim;

fs::path resolve_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) {
        return flag_value;
    }
    if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') {
        return env;
    }
    return ".";
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << content;
}

ScenarioConfig load_checked(const std::string& file) {
    ScenarioConfig cfg = load_scenario(file);
    std::vector<std::string> violations = validate(cfg);
    if (!violations.empty()) {
        std::string msg = "scenario invalid: " + violations.front();
        if (violations.size() > 1) {
            msg += " (+" + std::to_string(violations.size() - 1) + " more)";
        }
        throw std::runtime_error(msg);
    }
    return cfg;
}

int cmd_validate(const std::string& file) {
    ScenarioConfig cfg = load_scenario(file);
    std::vector<std::string> violations = validate(cfg);
    if (violations.empty()) {
        std::cout << "ok: scenario '" << cfg.name << "' is valid\n";
        return 0;
    }
    for (const std::string& v : violations) {
        std::cout << "violation: " << v << "\n";
    }
    std::cerr << "error: scenario invalid (" << violations.size() << " violation"
              << (violations.size() == 1 ? "" : "s") << ")\n";
    return 1;
}

int cmd_run(const std::string& file, std::optional<std::uint64_t> seed,
            const std::string& out_flag, bool trace) {
    ScenarioConfig cfg = load_checked(file);
    if (trace) {
        cfg.stats.trace = true;
    }
    std::uint64_t run_seed = seed.value_or(cfg.seed);
    StatsSeries series = run(cfg, run_seed);

    fs::path dir = resolve_out_dir(out_flag);
    fs::create_directories(dir);
    fs::path csv_path = dir / "timeseries.csv";
    std::ostringstream csv;
    emit_csv(series, csv);
    write_file(csv_path, csv.str());
    if (cfg.stats.trace) {
        std::ostringstream trace_csv;
        emit_trace_csv(series, trace_csv);
        write_file(dir / "trace.csv", trace_csv.str());
    }

    std::cout << emit_summary(cfg, series);
    std::cout << "seed: " << run_seed << "\n";
    std::cout << "wrote: " << csv_path.string() << "\n";
    if (cfg.stats.trace) {
        std::cout << "wrote: " << (dir / "trace.csv").string() << "\n";
    }
    return 0;
}

std::vector<ComparisonVariant> parse_variants(const std::string& list) {
    std::vector<ComparisonVariant> variants;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token == "iso" || token == "isotropic") {
            variants.push_back({"isotropic", Pattern::isotropic()});
        } else if (token == "dir" || token == "directional") {
            variants.push_back({"directional", Pattern::directional(100.0, 0.35, 0.01)});
        } else if (token == "cone") {
            variants.push_back({"cone", Pattern::cone(10.0, 0.0, 0.6)});
        } else {
            throw std::runtime_error("unknown antenna variant '" + token +
                                     "' (expected iso, dir, or cone)");
        }
    }
    if (variants.empty()) {
        throw std::runtime_error("--antennas requires at least one variant");
    }
    return variants;
}

int cmd_compare(const std::string& file, const std::string& antennas,
                std::optional<std::uint64_t> seed, const std::string& node_flag,
                const std::string& out_flag) {
    ScenarioConfig cfg = load_checked(file);
    std::string node_id = node_flag;
    if (node_id.empty()) {
        std::vector<std::string> rx_ids;
        for (const NodeSpec& n : cfg.nodes) {
            if (n.role == NodeRole::receiver) {
                rx_ids.push_back(n.id);
            }
        }
        if (rx_ids.size() != 1) {
            throw std::runtime_error("scenario has " + std::to_string(rx_ids.size()) +
                                     " receivers; pick one with --node");
        }
        node_id = rx_ids.front();
    }

    std::vector<ComparisonVariant> variants = parse_variants(antennas);
    std::uint64_t run_seed = seed.value_or(cfg.seed);
    std::vector<ComparisonResult> results =
        compare_antennas(cfg, node_id, variants, run_seed);

    fs::path dir = resolve_out_dir(out_flag);
    fs::create_directories(dir);
    for (const ComparisonResult& r : results) {
        std::ostringstream csv;
        emit_csv(r.series, csv);
        fs::path path = dir / ("timeseries_" + r.label + ".csv");
        write_file(path, csv.str());
    }

    std::cout << emit_comparison_summary(cfg, results, run_seed);
    std::cout << "varied_node: " << node_id << "\n";
    for (const ComparisonResult& r : results) {
        std::cout << "wrote: " << (dir / ("timeseries_" + r.label + ".csv")).string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vanetsim: deterministic simulator for a roadside broadcaster, "
                 "mobile receivers, and a mobile jammer"};
    app.require_subcommand(1);

    std::string file;
    std::string antennas;
    std::string node_id;
    std::string out_dir;
    std::uint64_t seed_value = 0;
    bool trace = false;

    CLI::App* validate_cmd = app.add_subcommand("validate", "Check a scenario file");
    validate_cmd->add_option("file", file, "Scenario YAML file")->required();

    CLI::App* run_cmd = app.add_subcommand("run", "Run a scenario");
    run_cmd->add_option("file", file, "Scenario YAML file")->required();
    CLI::Option* run_seed_opt =
        run_cmd->add_option("--seed", seed_value, "Override the scenario's error-stream seed");
    run_cmd->add_option("--out", out_dir,
                        "Output directory (default: $" + std::string(kOutDirEnv) +
                            " or the working directory)");
    run_cmd->add_flag("--trace", trace, "Also write a per-stage pipeline trace");

    CLI::App* compare_cmd =
        app.add_subcommand("compare", "Run antenna variants on one node and rank them");
    compare_cmd->add_option("file", file, "Scenario YAML file")->required();
    CLI::Option* compare_seed_opt =
        compare_cmd->add_option("--seed", seed_value, "Override the scenario's error-stream seed");
    compare_cmd->add_option("--antennas", antennas, "Comma list of iso, dir, cone")->required();
    compare_cmd->add_option("--node", node_id,
                            "Node whose antenna is swapped (default: the sole receiver)");
    compare_cmd->add_option("--out", out_dir, "Output directory");

    CLI::App* version_cmd = app.add_subcommand("version", "Print the version");

    try {
        app.parse(argc, argv);
        if (version_cmd->parsed()) {
            std::cout << "vanetsim " << kVersion << "\n";
            return 0;
        }
        if (validate_cmd->parsed()) {
            return cmd_validate(file);
        }
        if (run_cmd->parsed()) {
            std::optional<std::uint64_t> seed;
            if (run_seed_opt->count() > 0) {
                seed = seed_value;
            }
            return cmd_run(file, seed, out_dir, trace);
        }
        if (compare_cmd->parsed()) {
            std::optional<std::uint64_t> seed;
            if (compare_seed_opt->count() > 0) {
                seed = seed_value;
            }
            return cmd_compare(file, antennas, seed, node_id, out_dir);
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no command given\n";
    return 1;
}
