// mmground command-line front end: run simulations, validate scenario files,
// list built-in presets. Exit codes: 0 success, 1 validation failure,
// 2 runtime error.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "mmground/errors.hpp"
#include "mmground/scenario.hpp"
#include "mmground/simulation.hpp"

namespace {

std::vector<std::string> split_formats(const std::string& spec) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FMCW ground-condition sensing simulator"};
    app.require_subcommand(1);

    std::string scenario_file;
    std::string preset;
    std::string out_dir;
    std::string emit_spec = "csv";
    std::uint64_t seed = 0;
    bool seed_set = false;

    auto* run_cmd = app.add_subcommand("run", "Run a scenario and emit artifacts");
    run_cmd->add_option("scenario", scenario_file, "Scenario JSON file");
    run_cmd->add_option("--preset", preset, "Built-in preset name (instead of a file)");
    run_cmd->add_option("--seed", seed, "Override the scenario RNG seed")
        ->each([&](const std::string&) { seed_set = true; });
    run_cmd->add_option("--out", out_dir, "Output directory (default out-<name>)");
    run_cmd->add_option("--emit", emit_spec, "Comma list of formats: csv,plots (default csv)");

    std::string validate_file;
    auto* validate_cmd = app.add_subcommand("validate", "Validate a scenario file");
    validate_cmd->add_option("scenario", validate_file, "Scenario JSON file")->required();

    auto* list_cmd = app.add_subcommand("list-presets", "List built-in presets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list_cmd->parsed()) {
            for (const auto& name : mmground::harness::preset_names()) {
                const auto sc = mmground::harness::load_preset(name);
                std::printf("%-16s %s\n", name.c_str(), sc.description.c_str());
            }
            return 0;
        }

        if (validate_cmd->parsed()) {
            try {
                const auto sc = mmground::harness::load_scenario(validate_file);
                std::printf("ok: %s (%zu events, duration %.9g s)\n", sc.name.c_str(),
                            sc.events.size(), sc.duration_s);
                return 0;
            } catch (const mmground::ScenarioError& e) {
                std::fprintf(stderr, "invalid: %s\n", e.what());
                return 1;
            }
        }

        // run
        if (scenario_file.empty() == preset.empty()) {
            std::fprintf(stderr, "run: give exactly one of a scenario file or --preset\n");
            return 1;
        }
        mmground::harness::Scenario sc;
        try {
            sc = preset.empty() ? mmground::harness::load_scenario(scenario_file)
                                : mmground::harness::load_preset(preset);
        } catch (const mmground::ScenarioError& e) {
            std::fprintf(stderr, "invalid scenario: %s\n", e.what());
            return 1;
        }
        if (seed_set) sc.seed = seed;
        if (out_dir.empty()) out_dir = "out-" + sc.name;

        std::vector<std::string> formats;
        try {
            formats = split_formats(emit_spec);
            const auto log = mmground::harness::run(sc);
            const auto files = mmground::harness::emit(log, out_dir, formats);
            std::printf("ran %s: %zu samples, %zu replans%s\n", sc.name.c_str(),
                        log.samples.size(), log.replan_count,
                        log.goal_reached ? ", goal reached" : "");
            for (const auto& f : files) std::printf("  %s/%s\n", out_dir.c_str(), f.c_str());
            return 0;
        } catch (const mmground::ParameterError& e) {
            std::fprintf(stderr, "invalid request: %s\n", e.what());
            return 1;
        }
    } catch (const mmground::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
