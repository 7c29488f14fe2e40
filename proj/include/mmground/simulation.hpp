#ifndef MMGROUND_SIMULATION_HPP
#define MMGROUND_SIMULATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmground/costmap.hpp"
#include "mmground/planner.hpp"
#include "mmground/scenario.hpp"

namespace mmground::harness {

struct SampleRecord {
    double t = 0.0;
    double x = 0.0, y = 0.0, heading = 0.0;
    double ground_x = 0.0, ground_y = 0.0;
    double amplitude_db = 0.0;
    double phase_deg = 0.0;      // absolute measured phase
    double phase_rel_deg = 0.0;  // relative to the first sample of the run
    double score = 0.0;
    bool hazard = false;
    double analysis_s = 0.0;  // wall time of measure->classify->update->replan
};

struct CostmapSnapshot {
    double t = 0.0;
    costmap::CostmapLayer master;
};

struct RunLog {
    std::string scenario_name;
    std::uint64_t seed = 0;
    std::vector<SampleRecord> samples;
    std::vector<CostmapSnapshot> snapshots;  // final state is always last
    std::optional<planner::Path> final_path;
    double phase_reference_deg = 0.0;
    std::size_t replan_count = 0;
    bool goal_reached = false;
    // Last sample's spectrum, kept only when output.dump_spectra is set.
    std::vector<std::complex<double>> last_spectrum;
    fmcw::ChirpConfig chirp;  // for interpreting last_spectrum

    // The timeseries.csv body (schema: t_s,x_m,y_m,amp_db,phase_deg,score,hazard).
    std::string timeseries_csv() const;
};

// Fixed-timestep simulation at the measurement rate:
// apply due moisture events -> advance vehicle -> measure -> classify ->
// update costmap -> replan check -> steer toward the next path cell.
// Deterministic for a fixed scenario seed.
RunLog run(const Scenario& scenario);

// Write artifacts into out_dir. formats may contain "csv" and/or "plots";
// the manifest (name + fnv1a64 checksum per artifact) is always written.
// Returns the written file names (manifest last).
std::vector<std::string> emit(const RunLog& log, const std::string& out_dir,
                              const std::vector<std::string>& formats);

}  // namespace mmground::harness

#endif
