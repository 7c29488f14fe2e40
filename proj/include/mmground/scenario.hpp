#ifndef MMGROUND_SCENARIO_HPP
#define MMGROUND_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mmground/costmap.hpp"
#include "mmground/dielectric.hpp"
#include "mmground/fmcw.hpp"
#include "mmground/scene.hpp"

namespace mmground::harness {

// One timed surface-moisture change. Damp events set a floor fraction over
// the region (wet-cloth style); deposit events add a water volume.
struct MoistureEvent {
    enum class Kind { damp, deposit };
    Kind kind = Kind::damp;
    double t_s = 0.0;
    scene::Region region;
    double fraction = 0.0;   // damp
    double volume_ml = 0.0;  // deposit
};

struct GridConfig {
    double extent_x_m = 1.0;
    double extent_y_m = 1.0;
    double resolution_m = 0.02;
    double effective_depth_m = 0.005;  // volume-to-fraction depth for deposits
    dielectric::MaterialState base = dielectric::dry_concrete();
};

struct VehicleConfig {
    double start_x = 0.5, start_y = 0.5;
    double heading_rad = 0.0;
    double goal_x = 0.5, goal_y = 0.5;
    double speed_mps = 0.0;
    double lookahead_m = 0.5;           // sensor ground point ahead of origin
    double footprint_radius_m = 0.35;   // vehicle half-width
    double max_turn_rate_radps = 2.0;
};

struct CostmapConfig {
    double resolution_m = 0.05;
    double inflation_radius_m = 0.35;
    std::uint8_t unknown_cost = 0;
};

struct PlannerConfig {
    bool enabled = false;
    double traversal_weight = 50.0;
    std::uint8_t replan_cost_threshold = 200;
    double stop_margin_m = 0.2;
};

struct OutputConfig {
    double costmap_snapshot_every_s = 0.0;  // 0 = final snapshot only
    bool dump_spectra = false;              // per-sample spectrum CSVs (debug)
};

struct Scenario {
    std::string name;
    std::string description;
    double duration_s = 30.0;
    std::uint64_t seed = 1;
    std::size_t baseline_samples = 5;
    double noise_std = 0.005;  // per-quadrature beat noise

    GridConfig grid;
    std::vector<MoistureEvent> events;
    VehicleConfig vehicle;
    fmcw::ChirpConfig chirp;
    fmcw::AntennaGeometry antenna;
    dielectric::DebyeParams water;
    costmap::ThresholdPolicy threshold;
    CostmapConfig costmap;
    PlannerConfig planner;
    OutputConfig output;

    // Throws ScenarioError naming the violated field.
    void validate() const;
};

// Parse and validate scenario JSON. `origin` labels error messages (a file
// path or preset name). Unknown keys are rejected. Parse errors report
// line and column.
Scenario parse_scenario(const std::string& json_text, const std::string& origin);

// Read, parse, validate. Throws ScenarioError / IoError.
Scenario load_scenario(const std::string& path);

// Built-in experiment presets (also shipped under scenarios/).
std::vector<std::string> preset_names();
const std::string& preset_json(const std::string& name);  // throws ScenarioError
Scenario load_preset(const std::string& name);

}  // namespace mmground::harness

#endif
