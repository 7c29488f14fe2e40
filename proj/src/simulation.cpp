#include "mmground/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>

#include "mmground/angles.hpp"
#include "mmground/errors.hpp"
#include "mmground/io.hpp"
#include "mmground/rng.hpp"
#include "mmground/vehicle.hpp"

namespace mmground::harness {

namespace {

constexpr double kEventEpsilon = 1e-9;
constexpr double kHeadingGain = 2.0;  // 1/s, pure-pursuit steering gain

double clamp_to(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

planner::Cell cell_of(const costmap::CostmapLayer& layer, double x, double y) {
    std::size_t ix, iy;
    layer.point_to_cell(clamp_to(x, 0.0, layer.extent_x()), clamp_to(y, 0.0, layer.extent_y()),
                        ix, iy);
    return {ix, iy};
}

}  // namespace

std::string RunLog::timeseries_csv() const {
    std::string out = "t_s,x_m,y_m,amp_db,phase_deg,score,hazard\n";
    char line[256];
    for (const auto& s : samples) {
        std::snprintf(line, sizeof line, "%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%d\n", s.t, s.x, s.y,
                      s.amplitude_db, s.phase_rel_deg, s.score, s.hazard ? 1 : 0);
        out += line;
    }
    return out;
}

RunLog run(const Scenario& sc) {
    sc.validate();

    scene::TerrainGrid grid(sc.grid.extent_x_m, sc.grid.extent_y_m, sc.grid.resolution_m,
                            sc.grid.base, sc.grid.effective_depth_m);
    costmap::CostmapLayer static_layer(sc.grid.extent_x_m, sc.grid.extent_y_m,
                                       sc.costmap.resolution_m, /*known=*/true, 0);
    costmap::CostmapLayer moisture(sc.grid.extent_x_m, sc.grid.extent_y_m,
                                   sc.costmap.resolution_m);
    costmap::CostmapLayer master = costmap::combine(static_layer, moisture, sc.costmap.unknown_cost);

    vehicle::VehicleState state{sc.vehicle.start_x, sc.vehicle.start_y, sc.vehicle.heading_rad,
                                0.0};
    vehicle::MountGeometry mount{sc.vehicle.lookahead_m, sc.antenna.standoff};
    vehicle::Command command;

    std::vector<MoistureEvent> pending = sc.events;
    std::stable_sort(pending.begin(), pending.end(),
                     [](const MoistureEvent& a, const MoistureEvent& b) { return a.t_s < b.t_s; });
    std::size_t next_event = 0;

    const double dt = 1.0 / sc.chirp.measurement_rate;
    const auto n_samples = std::size_t(std::llround(sc.duration_s * sc.chirp.measurement_rate)) + 1;
    const double goal_tol = sc.costmap.resolution_m;

    RunLog log;
    log.scenario_name = sc.name;
    log.seed = sc.seed;
    log.samples.reserve(n_samples);

    std::vector<fmcw::RadarReturn> baseline_window;
    costmap::Baseline baseline;
    bool calibrated = false;
    costmap::ClassifierState cls_state;

    std::optional<planner::Path> path;
    std::size_t progress = 0;
    bool halted = sc.vehicle.speed_mps <= 0.0;
    double next_snapshot_t = 0.0;

    for (std::size_t k = 0; k < n_samples; ++k) {
        const double t = double(k) * dt;

        while (next_event < pending.size() && pending[next_event].t_s <= t + kEventEpsilon) {
            const auto& ev = pending[next_event++];
            if (ev.kind == MoistureEvent::Kind::damp) {
                grid.apply_damp(ev.region, ev.fraction);
            } else {
                grid.deposit_water(ev.region, ev.volume_ml);
            }
        }

        if (k > 0 && (command.linear != 0.0 || command.angular != 0.0)) {
            state = vehicle::step(state, command, dt);
        }

        double gx, gy;
        vehicle::sensor_ground_point(state, mount, gx, gy);
        gx = clamp_to(gx, 0.0, grid.extent_x());
        gy = clamp_to(gy, 0.0, grid.extent_y());

        const auto analysis_start = std::chrono::steady_clock::now();

        fmcw::RadarReturn ret = fmcw::measure(grid, gx, gy, sc.chirp, sc.antenna, sc.noise_std,
                                              Rng::derive(sc.seed, k), sc.water);
        ret.timestamp = t;

        double score = 0.0;
        bool hazard = false;
        if (!calibrated) {
            baseline_window.push_back(ret);
            if (baseline_window.size() >= sc.baseline_samples) {
                baseline = costmap::calibrate(baseline_window);
                calibrated = true;
                baseline_window.clear();
            }
        } else {
            const auto cls = costmap::classify(ret, baseline, sc.threshold, cls_state);
            cls_state = cls.state;
            score = cls.score;
            hazard = cls.state.hazard;
            const double paint = hazard ? std::max(score, sc.threshold.lethal_score) : score;
            if (paint > 0.0) {
                costmap::update(moisture, gx, gy, paint, sc.costmap.inflation_radius_m);
            }
            master = costmap::combine(static_layer, moisture, sc.costmap.unknown_cost);
        }

        bool want_plan = false;
        if (sc.planner.enabled && !halted) {
            if (!path) {
                want_plan = true;
            } else if (planner::needs_replan(*path, master, sc.planner.replan_cost_threshold,
                                             progress, sc.costmap.unknown_cost)) {
                want_plan = true;
            }
            if (want_plan) {
                const auto start_cell = cell_of(master, state.x, state.y);
                const auto goal_cell = cell_of(master, sc.vehicle.goal_x, sc.vehicle.goal_y);
                try {
                    path = planner::plan(master, start_cell, goal_cell, sc.planner.traversal_weight,
                                         sc.costmap.unknown_cost);
                } catch (const ParameterError&) {
                    path.reset();  // endpoint became lethal; stop and hold
                }
                progress = 0;
                ++log.replan_count;
            }
        }

        const auto analysis_end = std::chrono::steady_clock::now();

        // steering for the next interval
        const double goal_dx = sc.vehicle.goal_x - state.x;
        const double goal_dy = sc.vehicle.goal_y - state.y;
        if (!halted && std::hypot(goal_dx, goal_dy) <= goal_tol) {
            halted = true;
            log.goal_reached = true;
        }
        if (halted || sc.vehicle.speed_mps <= 0.0) {
            command = {0.0, 0.0};
        } else {
            double tx = sc.vehicle.goal_x, ty = sc.vehicle.goal_y;
            if (sc.planner.enabled) {
                if (path && !path->cells.empty()) {
                    const double advance_dist = 1.5 * sc.costmap.resolution_m;
                    const double pursuit_dist = 3.0 * sc.costmap.resolution_m;
                    while (progress + 1 < path->cells.size()) {
                        double cx, cy;
                        master.cell_center(path->cells[progress].ix, path->cells[progress].iy, cx, cy);
                        if (std::hypot(cx - state.x, cy - state.y) < advance_dist) {
                            ++progress;
                        } else {
                            break;
                        }
                    }
                    std::size_t target = progress;
                    for (; target + 1 < path->cells.size(); ++target) {
                        double cx, cy;
                        master.cell_center(path->cells[target].ix, path->cells[target].iy, cx, cy);
                        if (std::hypot(cx - state.x, cy - state.y) >= pursuit_dist) break;
                    }
                    master.cell_center(path->cells[target].ix, path->cells[target].iy, tx, ty);
                } else {
                    command = {0.0, 0.0};  // no viable path: hold position
                    tx = state.x;
                    ty = state.y;
                }
            }
            if (tx != state.x || ty != state.y) {
                const double bearing = std::atan2(ty - state.y, tx - state.x);
                const double err = wrap_rad(bearing - state.heading);
                const double omega = clamp_to(kHeadingGain * err, -sc.vehicle.max_turn_rate_radps,
                                              sc.vehicle.max_turn_rate_radps);
                command = {sc.vehicle.speed_mps, omega};
            }
        }

        SampleRecord rec;
        rec.t = t;
        rec.x = state.x;
        rec.y = state.y;
        rec.heading = state.heading;
        rec.ground_x = gx;
        rec.ground_y = gy;
        rec.amplitude_db = ret.amplitude_db;
        rec.phase_deg = ret.phase_deg;
        if (k == 0) log.phase_reference_deg = ret.phase_deg;
        rec.phase_rel_deg = wrap_deg(ret.phase_deg - log.phase_reference_deg);
        rec.score = score;
        rec.hazard = hazard;
        rec.analysis_s = std::chrono::duration<double>(analysis_end - analysis_start).count();
        log.samples.push_back(rec);

        if (sc.output.costmap_snapshot_every_s > 0.0 && t + kEventEpsilon >= next_snapshot_t) {
            log.snapshots.push_back({t, master});
            next_snapshot_t += sc.output.costmap_snapshot_every_s;
        }
    }

    log.snapshots.push_back({double(n_samples - 1) * dt, master});
    log.final_path = path;
    return log;
}

std::vector<std::string> emit(const RunLog& log, const std::string& out_dir,
                              const std::vector<std::string>& formats) {
    bool want_csv = false, want_plots = false;
    for (const auto& f : formats) {
        if (f == "csv") {
            want_csv = true;
        } else if (f == "plots") {
            want_plots = true;
        } else {
            throw ParameterError("emit: unknown format '" + f + "' (expected csv or plots)");
        }
    }

    io::ensure_directory(out_dir);
    std::vector<std::pair<std::string, std::string>> artifacts;  // name -> content

    if (want_csv) {
        artifacts.emplace_back("timeseries.csv", log.timeseries_csv());
        for (std::size_t i = 0; i < log.snapshots.size(); ++i) {
            char name[48];
            std::snprintf(name, sizeof name, "costmap_%03zu.csv", i);
            artifacts.emplace_back(name, log.snapshots[i].master.to_csv());
        }
        if (log.final_path) {
            std::string body = "index,x,y,cell_cost\n";
            char line[128];
            const auto& master = log.snapshots.back().master;
            for (std::size_t i = 0; i < log.final_path->cells.size(); ++i) {
                double cx, cy;
                master.cell_center(log.final_path->cells[i].ix, log.final_path->cells[i].iy, cx, cy);
                std::snprintf(line, sizeof line, "%zu,%.9g,%.9g,%d\n", i, cx, cy,
                              int(log.final_path->planned_cost[i]));
                body += line;
            }
            artifacts.emplace_back("path.csv", body);
        }
    }

    if (want_plots) {
        std::vector<double> amp, phase;
        amp.reserve(log.samples.size());
        phase.reserve(log.samples.size());
        for (const auto& s : log.samples) {
            amp.push_back(s.amplitude_db);
            phase.push_back(s.phase_rel_deg);
        }
        artifacts.emplace_back("amplitude_time.pgm", io::render_series_pgm(amp));
        artifacts.emplace_back("phase_time.pgm", io::render_series_pgm(phase));

        const auto& master = log.snapshots.back().master;
        std::vector<std::uint8_t> pixels(master.cells_x() * master.cells_y(), 0);
        for (std::size_t iy = 0; iy < master.cells_y(); ++iy) {
            for (std::size_t ix = 0; ix < master.cells_x(); ++ix) {
                pixels[iy * master.cells_x() + ix] = master.effective_cost(ix, iy, 0);
            }
        }
        artifacts.emplace_back("costmap_final.pgm",
                               io::encode_pgm(master.cells_x(), master.cells_y(), pixels));
    }

    std::sort(artifacts.begin(), artifacts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<std::string> written;
    std::string manifest;
    for (const auto& [name, content] : artifacts) {
        io::write_file(out_dir + "/" + name, content);
        manifest += io::fnv1a64_hex({content.data(), content.size()});
        manifest += "  ";
        manifest += name;
        manifest += '\n';
        written.push_back(name);
    }
    io::write_file(out_dir + "/manifest.txt", manifest);
    written.push_back("manifest.txt");
    return written;
}

}  // namespace mmground::harness
