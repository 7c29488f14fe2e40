#ifndef MMGROUND_COSTMAP_HPP
#define MMGROUND_COSTMAP_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mmground/fmcw.hpp"

namespace mmground::costmap {

inline constexpr std::uint8_t kLethalCost = 255;

// Gridded cost field. Each cell is either unknown or holds a cost in
// [0, 255] with 255 lethal. Unknown cells read as a configured default
// (0 unless stated otherwise) wherever an effective cost is needed.
class CostmapLayer {
public:
    CostmapLayer(double extent_x_m, double extent_y_m, double resolution_m,
                 bool known = false, std::uint8_t initial_cost = 0);

    std::size_t cells_x() const { return nx_; }
    std::size_t cells_y() const { return ny_; }
    double resolution() const { return resolution_; }
    double extent_x() const { return extent_x_; }
    double extent_y() const { return extent_y_; }

    bool same_geometry(const CostmapLayer& other) const {
        return nx_ == other.nx_ && ny_ == other.ny_ && resolution_ == other.resolution_;
    }

    bool known(std::size_t ix, std::size_t iy) const { return known_[iy * nx_ + ix] != 0; }
    std::uint8_t cost(std::size_t ix, std::size_t iy) const { return cost_[iy * nx_ + ix]; }
    std::uint8_t effective_cost(std::size_t ix, std::size_t iy,
                                std::uint8_t unknown_default = 0) const {
        return known(ix, iy) ? cost(ix, iy) : unknown_default;
    }

    void set_cost(std::size_t ix, std::size_t iy, std::uint8_t c) {
        cost_[iy * nx_ + ix] = c;
        known_[iy * nx_ + ix] = 1;
    }

    bool contains(double x, double y) const {
        return x >= 0.0 && x <= extent_x_ && y >= 0.0 && y <= extent_y_;
    }
    std::size_t index_along(double coord, std::size_t count) const;
    void point_to_cell(double x, double y, std::size_t& ix, std::size_t& iy) const;
    void cell_center(std::size_t ix, std::size_t iy, double& x, double& y) const;

    const std::vector<std::uint8_t>& raw_costs() const { return cost_; }
    const std::vector<std::uint8_t>& raw_known() const { return known_; }

    // CSV export: header line with extent/resolution, then row-major costs;
    // unknown cells print as -1.
    std::string to_csv() const;

private:
    friend void update(CostmapLayer&, double, double, double, double);
    friend CostmapLayer combine(const CostmapLayer&, const CostmapLayer&, std::uint8_t);

    double extent_x_, extent_y_, resolution_;
    std::size_t nx_, ny_;
    std::vector<std::uint8_t> cost_;
    std::vector<std::uint8_t> known_;
};

// Dry-reference statistics over a calibration window.
struct Baseline {
    double mean_amplitude_db = 0.0;
    double mean_phase_deg = 0.0;  // circular mean
    double amplitude_std = 0.0;
    double phase_std = 0.0;       // std of wrapped deviations from the mean
    std::size_t sample_count = 0;
};

// Two-threshold (enter/exit) classification policy. The enter thresholds
// normalize the continuous score; the flag automaton runs on the raw
// per-channel deltas so hysteresis is exact (the EMA smooths only the
// reported score). lethal_score is the score an observation is promoted to
// while the hazard flag is set.
struct ThresholdPolicy {
    double amp_enter_db = 6.0;
    double amp_exit_db = 3.0;
    double phase_enter_deg = 30.0;
    double phase_exit_deg = 15.0;
    double lethal_score = 1.0;
    double ema_alpha = 0.5;  // in (0, 1]

    void validate() const;
};

struct ClassifierState {
    double ema_score = 0.0;
    bool hazard = false;
    bool initialized = false;
};

struct Classification {
    double score = 0.0;  // EMA-smoothed, in [0, 1]
    ClassifierState state;
};

// Sample mean/std of amplitude and circular mean/std of phase.
// Throws ParameterError for fewer than 3 samples.
Baseline calibrate(const std::vector<fmcw::RadarReturn>& samples);

// Score = clamp01(max(d_amp/amp_enter, |d_phase|/phase_enter)), EMA-smoothed;
// hazard flag sets when a raw delta reaches its enter threshold and clears
// only when both drop to their exit thresholds.
Classification classify(const fmcw::RadarReturn& ret, const Baseline& baseline,
                        const ThresholdPolicy& policy, const ClassifierState& previous);

// Paint an observation: the containing cell takes round(255*score) and every
// cell whose center lies within inflation_radius of that cell's center takes
// a linearly decaying cost (score*255 at the center, 0 at the radius), all
// merged with element-wise max. Throws for out-of-bounds points.
void update(CostmapLayer& layer, double ground_x, double ground_y, double score,
            double inflation_radius);

// Element-wise maximum of two layers sharing geometry; unknown cells read as
// unknown_default. Throws ConfigError on geometry mismatch.
CostmapLayer combine(const CostmapLayer& static_layer, const CostmapLayer& moisture_layer,
                     std::uint8_t unknown_default = 0);

}  // namespace mmground::costmap

#endif
