#include "mmground/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <set>

#include "mmground/errors.hpp"
#include "mmground/io.hpp"

namespace mmground::harness {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw ScenarioError(origin + ": " + what);
}

void check_keys(const json& obj, const std::string& origin, const std::string& path,
                const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) {
            fail(origin, "unknown key '" + it.key() + "' in " + path);
        }
    }
}

double get_num(const json& obj, const std::string& origin, const std::string& path,
               const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number()) fail(origin, path + "." + key + ": expected a number");
    return v.get<double>();
}

bool get_bool(const json& obj, const std::string& origin, const std::string& path,
              const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_boolean()) fail(origin, path + "." + key + ": expected a boolean");
    return v.get<bool>();
}

scene::Region get_region(const json& arr, const std::string& origin, const std::string& path) {
    if (!arr.is_array() || arr.size() != 4) {
        fail(origin, path + ": region must be [x0, y0, x1, y1]");
    }
    for (const auto& v : arr) {
        if (!v.is_number()) fail(origin, path + ": region must hold numbers");
    }
    return {arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>(),
            arr[3].get<double>()};
}

void line_column(const std::string& text, std::size_t byte, std::size_t& line,
                 std::size_t& column) {
    line = 1;
    column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
}

}  // namespace

void Scenario::validate() const {
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) throw ScenarioError("scenario '" + name + "': " + what);
    };
    require(!name.empty(), "name: must not be empty");
    require(duration_s > 0.0, "duration_s: must be > 0");
    require(baseline_samples >= 3, "baseline_samples: must be >= 3");
    require(noise_std >= 0.0, "noise_std: must be >= 0");

    require(grid.extent_x_m > 0.0 && grid.extent_y_m > 0.0,
            "grid.extent: must be positive");
    require(grid.resolution_m > 0.0, "grid.resolution_m: must be > 0");
    require(grid.effective_depth_m > 0.0, "grid.effective_depth_m: must be > 0");
    require(grid.base.water_fraction >= 0.0 && grid.base.water_fraction <= 1.0,
            "grid.base.water_fraction: must lie in [0, 1]");
    require(grid.base.base.real_part >= 1.0, "grid.base.epsilon_real: must be >= 1");
    require(grid.base.base.imag_part >= 0.0, "grid.base.epsilon_imag: must be >= 0");

    std::size_t i = 0;
    for (const auto& ev : events) {
        const std::string p = "events[" + std::to_string(i++) + "]";
        require(ev.t_s >= 0.0, p + ".t_s: must be >= 0");
        require(ev.region.valid(), p + ".region: requires x1 > x0 and y1 > y0");
        require(ev.region.x0 >= 0.0 && ev.region.y0 >= 0.0 &&
                    ev.region.x1 <= grid.extent_x_m && ev.region.y1 <= grid.extent_y_m,
                p + ".region: outside grid extent");
        if (ev.kind == MoistureEvent::Kind::damp) {
            require(ev.fraction >= 0.0 && ev.fraction <= 1.0,
                    p + ".fraction: water_fraction must lie in [0, 1]");
        } else {
            require(ev.volume_ml >= 0.0, p + ".volume_ml: must be >= 0");
        }
    }

    require(vehicle.speed_mps >= 0.0, "vehicle.speed_mps: must be >= 0");
    require(vehicle.lookahead_m >= 0.0, "vehicle.lookahead_m: must be >= 0");
    require(vehicle.footprint_radius_m >= 0.0, "vehicle.footprint_radius_m: must be >= 0");
    require(vehicle.max_turn_rate_radps > 0.0, "vehicle.max_turn_rate_radps: must be > 0");
    auto inside = [&](double x, double y) {
        return x >= 0.0 && x <= grid.extent_x_m && y >= 0.0 && y <= grid.extent_y_m;
    };
    require(inside(vehicle.start_x, vehicle.start_y), "vehicle.start: outside grid extent");
    require(inside(vehicle.goal_x, vehicle.goal_y), "vehicle.goal: outside grid extent");

    try {
        chirp.validate();
    } catch (const Error& e) {
        throw ScenarioError("scenario '" + name + "': chirp: " + e.what());
    }
    require(antenna.standoff > 0.0, "antenna.standoff_m: must be > 0");
    require(antenna.fov_area_at_standoff > 0.0, "antenna.fov_area_m2: must be > 0");
    require(water.eps_static > water.eps_infinity && water.eps_infinity >= 1.0 &&
                water.relaxation_time > 0.0,
            "materials.water: requires eps_static > eps_infinity >= 1 and "
            "relaxation_time_s > 0");
    try {
        threshold.validate();
    } catch (const Error& e) {
        throw ScenarioError("scenario '" + name + "': threshold: " + e.what());
    }
    require(costmap.resolution_m > 0.0, "costmap.resolution_m: must be > 0");
    require(costmap.inflation_radius_m >= 0.0, "costmap.inflation_radius_m: must be >= 0");
    require(planner.traversal_weight >= 0.0, "planner.traversal_weight: must be >= 0");
    require(planner.stop_margin_m >= 0.0, "planner.stop_margin_m: must be >= 0");
    require(output.costmap_snapshot_every_s >= 0.0,
            "output.costmap_snapshot_every_s: must be >= 0");

    // Nyquist check for the configured standoff target.
    require(chirp.if_per_meter * antenna.standoff < chirp.adc_rate / 2.0,
            "chirp: standoff IF violates Nyquist for adc_rate");
}

Scenario parse_scenario(const std::string& json_text, const std::string& origin) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        std::size_t line = 0, column = 0;
        line_column(json_text, e.byte > 0 ? e.byte - 1 : 0, line, column);
        fail(origin, "parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what());
    }
    if (!root.is_object()) fail(origin, "top level must be a JSON object");

    check_keys(root, origin, "scenario",
               {"name", "description", "duration_s", "seed", "baseline_samples", "noise_std",
                "grid", "events", "vehicle", "chirp", "antenna", "materials", "threshold",
                "costmap", "planner", "output"});

    Scenario s;
    if (!root.contains("name") || !root.at("name").is_string()) {
        fail(origin, "name: required string");
    }
    s.name = root.at("name").get<std::string>();
    if (root.contains("description")) {
        if (!root.at("description").is_string()) fail(origin, "description: expected a string");
        s.description = root.at("description").get<std::string>();
    }
    s.duration_s = get_num(root, origin, "scenario", "duration_s", s.duration_s);
    if (root.contains("seed")) {
        const auto& v = root.at("seed");
        if (!v.is_number_unsigned() && !v.is_number_integer()) {
            fail(origin, "seed: expected a non-negative integer");
        }
        s.seed = v.get<std::uint64_t>();
    }
    s.baseline_samples =
        std::size_t(get_num(root, origin, "scenario", "baseline_samples", double(s.baseline_samples)));
    s.noise_std = get_num(root, origin, "scenario", "noise_std", s.noise_std);

    if (root.contains("grid")) {
        const auto& g = root.at("grid");
        check_keys(g, origin, "grid",
                   {"extent_x_m", "extent_y_m", "resolution_m", "effective_depth_m", "base"});
        s.grid.extent_x_m = get_num(g, origin, "grid", "extent_x_m", s.grid.extent_x_m);
        s.grid.extent_y_m = get_num(g, origin, "grid", "extent_y_m", s.grid.extent_y_m);
        s.grid.resolution_m = get_num(g, origin, "grid", "resolution_m", s.grid.resolution_m);
        s.grid.effective_depth_m =
            get_num(g, origin, "grid", "effective_depth_m", s.grid.effective_depth_m);
        if (g.contains("base")) {
            const auto& b = g.at("base");
            check_keys(b, origin, "grid.base",
                       {"material", "epsilon_real", "epsilon_imag", "water_fraction"});
            std::string material = "dry_concrete";
            if (b.contains("material")) {
                if (!b.at("material").is_string()) {
                    fail(origin, "grid.base.material: expected a string");
                }
                material = b.at("material").get<std::string>();
            }
            if (material == "dry_concrete") {
                s.grid.base = dielectric::dry_concrete();
            } else if (material == "custom") {
                s.grid.base.base.real_part =
                    get_num(b, origin, "grid.base", "epsilon_real", 4.5);
                s.grid.base.base.imag_part =
                    get_num(b, origin, "grid.base", "epsilon_imag", 0.3);
            } else {
                fail(origin, "grid.base.material: must be 'dry_concrete' or 'custom'");
            }
            s.grid.base.water_fraction =
                get_num(b, origin, "grid.base", "water_fraction", 0.0);
        }
    }

    if (root.contains("events")) {
        const auto& evs = root.at("events");
        if (!evs.is_array()) fail(origin, "events: expected an array");
        std::size_t i = 0;
        for (const auto& e : evs) {
            const std::string p = "events[" + std::to_string(i++) + "]";
            check_keys(e, origin, p, {"type", "t_s", "region", "fraction", "volume_ml"});
            MoistureEvent ev;
            if (!e.contains("type") || !e.at("type").is_string()) {
                fail(origin, p + ".type: required string 'damp' or 'deposit'");
            }
            const std::string type = e.at("type").get<std::string>();
            if (type == "damp") {
                ev.kind = MoistureEvent::Kind::damp;
                ev.fraction = get_num(e, origin, p, "fraction", 0.0);
                if (e.contains("volume_ml")) fail(origin, p + ": damp events take no volume_ml");
            } else if (type == "deposit") {
                ev.kind = MoistureEvent::Kind::deposit;
                ev.volume_ml = get_num(e, origin, p, "volume_ml", 0.0);
                if (e.contains("fraction")) fail(origin, p + ": deposit events take no fraction");
            } else {
                fail(origin, p + ".type: must be 'damp' or 'deposit'");
            }
            ev.t_s = get_num(e, origin, p, "t_s", 0.0);
            if (!e.contains("region")) fail(origin, p + ".region: required");
            ev.region = get_region(e.at("region"), origin, p + ".region");
            s.events.push_back(ev);
        }
    }

    if (root.contains("vehicle")) {
        const auto& v = root.at("vehicle");
        check_keys(v, origin, "vehicle",
                   {"start", "heading_rad", "goal", "speed_mps", "lookahead_m",
                    "footprint_radius_m", "max_turn_rate_radps"});
        auto get_pt = [&](const char* key, double& x, double& y) {
            if (!v.contains(key)) return;
            const auto& a = v.at(key);
            if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
                fail(origin, std::string("vehicle.") + key + ": expected [x, y]");
            }
            x = a[0].get<double>();
            y = a[1].get<double>();
        };
        get_pt("start", s.vehicle.start_x, s.vehicle.start_y);
        get_pt("goal", s.vehicle.goal_x, s.vehicle.goal_y);
        s.vehicle.heading_rad = get_num(v, origin, "vehicle", "heading_rad", s.vehicle.heading_rad);
        s.vehicle.speed_mps = get_num(v, origin, "vehicle", "speed_mps", s.vehicle.speed_mps);
        s.vehicle.lookahead_m = get_num(v, origin, "vehicle", "lookahead_m", s.vehicle.lookahead_m);
        s.vehicle.footprint_radius_m =
            get_num(v, origin, "vehicle", "footprint_radius_m", s.vehicle.footprint_radius_m);
        s.vehicle.max_turn_rate_radps =
            get_num(v, origin, "vehicle", "max_turn_rate_radps", s.vehicle.max_turn_rate_radps);
    }

    if (root.contains("chirp")) {
        const auto& c = root.at("chirp");
        check_keys(c, origin, "chirp",
                   {"carrier_start_hz", "bandwidth_hz", "sweep_duration_s", "adc_rate_hz",
                    "acquisition_window_s", "measurement_rate_hz", "transmit_time_s",
                    "analysis_budget_s", "if_per_meter_hz", "fft_length"});
        s.chirp.carrier_start = get_num(c, origin, "chirp", "carrier_start_hz", s.chirp.carrier_start);
        s.chirp.bandwidth = get_num(c, origin, "chirp", "bandwidth_hz", s.chirp.bandwidth);
        s.chirp.sweep_duration =
            get_num(c, origin, "chirp", "sweep_duration_s", s.chirp.sweep_duration);
        s.chirp.adc_rate = get_num(c, origin, "chirp", "adc_rate_hz", s.chirp.adc_rate);
        s.chirp.acquisition_window =
            get_num(c, origin, "chirp", "acquisition_window_s", s.chirp.acquisition_window);
        s.chirp.measurement_rate =
            get_num(c, origin, "chirp", "measurement_rate_hz", s.chirp.measurement_rate);
        s.chirp.transmit_time = get_num(c, origin, "chirp", "transmit_time_s", s.chirp.transmit_time);
        s.chirp.analysis_budget =
            get_num(c, origin, "chirp", "analysis_budget_s", s.chirp.analysis_budget);
        s.chirp.if_per_meter = get_num(c, origin, "chirp", "if_per_meter_hz", s.chirp.if_per_meter);
        s.chirp.fft_length =
            std::size_t(get_num(c, origin, "chirp", "fft_length", double(s.chirp.fft_length)));
    }

    if (root.contains("antenna")) {
        const auto& a = root.at("antenna");
        check_keys(a, origin, "antenna",
                   {"standoff_m", "spot_radius_at_10cm_m", "divergence_half_angle_deg",
                    "fov_area_m2"});
        s.antenna.standoff = get_num(a, origin, "antenna", "standoff_m", s.antenna.standoff);
        s.antenna.spot_radius_at_10cm =
            get_num(a, origin, "antenna", "spot_radius_at_10cm_m", s.antenna.spot_radius_at_10cm);
        s.antenna.divergence_half_angle_deg = get_num(
            a, origin, "antenna", "divergence_half_angle_deg", s.antenna.divergence_half_angle_deg);
        s.antenna.fov_area_at_standoff =
            get_num(a, origin, "antenna", "fov_area_m2", s.antenna.fov_area_at_standoff);
    }

    if (root.contains("materials")) {
        const auto& m = root.at("materials");
        check_keys(m, origin, "materials", {"water"});
        if (m.contains("water")) {
            const auto& w = m.at("water");
            check_keys(w, origin, "materials.water",
                       {"eps_static", "eps_infinity", "relaxation_time_s"});
            s.water.eps_static = get_num(w, origin, "materials.water", "eps_static", s.water.eps_static);
            s.water.eps_infinity =
                get_num(w, origin, "materials.water", "eps_infinity", s.water.eps_infinity);
            s.water.relaxation_time =
                get_num(w, origin, "materials.water", "relaxation_time_s", s.water.relaxation_time);
        }
    }

    if (root.contains("threshold")) {
        const auto& t = root.at("threshold");
        check_keys(t, origin, "threshold",
                   {"amp_enter_db", "amp_exit_db", "phase_enter_deg", "phase_exit_deg",
                    "lethal_score", "ema_alpha"});
        s.threshold.amp_enter_db =
            get_num(t, origin, "threshold", "amp_enter_db", s.threshold.amp_enter_db);
        s.threshold.amp_exit_db =
            get_num(t, origin, "threshold", "amp_exit_db", s.threshold.amp_exit_db);
        s.threshold.phase_enter_deg =
            get_num(t, origin, "threshold", "phase_enter_deg", s.threshold.phase_enter_deg);
        s.threshold.phase_exit_deg =
            get_num(t, origin, "threshold", "phase_exit_deg", s.threshold.phase_exit_deg);
        s.threshold.lethal_score =
            get_num(t, origin, "threshold", "lethal_score", s.threshold.lethal_score);
        s.threshold.ema_alpha = get_num(t, origin, "threshold", "ema_alpha", s.threshold.ema_alpha);
    }

    if (root.contains("costmap")) {
        const auto& c = root.at("costmap");
        check_keys(c, origin, "costmap", {"resolution_m", "inflation_radius_m", "unknown_cost"});
        s.costmap.resolution_m = get_num(c, origin, "costmap", "resolution_m", s.costmap.resolution_m);
        s.costmap.inflation_radius_m =
            get_num(c, origin, "costmap", "inflation_radius_m", s.costmap.inflation_radius_m);
        double uc = get_num(c, origin, "costmap", "unknown_cost", double(s.costmap.unknown_cost));
        if (uc < 0.0 || uc > 255.0 || uc != std::floor(uc)) {
            fail(origin, "costmap.unknown_cost: must be an integer in [0, 255]");
        }
        s.costmap.unknown_cost = std::uint8_t(uc);
    }

    if (root.contains("planner")) {
        const auto& p = root.at("planner");
        check_keys(p, origin, "planner",
                   {"enabled", "traversal_weight", "replan_cost_threshold", "stop_margin_m"});
        s.planner.enabled = get_bool(p, origin, "planner", "enabled", s.planner.enabled);
        s.planner.traversal_weight =
            get_num(p, origin, "planner", "traversal_weight", s.planner.traversal_weight);
        double rt = get_num(p, origin, "planner", "replan_cost_threshold",
                            double(s.planner.replan_cost_threshold));
        if (rt < 0.0 || rt > 255.0 || rt != std::floor(rt)) {
            fail(origin, "planner.replan_cost_threshold: must be an integer in [0, 255]");
        }
        s.planner.replan_cost_threshold = std::uint8_t(rt);
        s.planner.stop_margin_m =
            get_num(p, origin, "planner", "stop_margin_m", s.planner.stop_margin_m);
    }

    if (root.contains("output")) {
        const auto& o = root.at("output");
        check_keys(o, origin, "output", {"costmap_snapshot_every_s", "dump_spectra"});
        s.output.costmap_snapshot_every_s = get_num(o, origin, "output", "costmap_snapshot_every_s",
                                                    s.output.costmap_snapshot_every_s);
        s.output.dump_spectra = get_bool(o, origin, "output", "dump_spectra", s.output.dump_spectra);
    }

    s.validate();
    return s;
}

Scenario load_scenario(const std::string& path) {
    return parse_scenario(io::read_file(path), path);
}

Scenario load_preset(const std::string& name) {
    return parse_scenario(preset_json(name), "preset " + name);
}

}  // namespace mmground::harness
