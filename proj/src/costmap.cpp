#include "mmground/costmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "mmground/angles.hpp"
#include "mmground/errors.hpp"
#include "mmground/kernels.hpp"

namespace mmground::costmap {

CostmapLayer::CostmapLayer(double extent_x_m, double extent_y_m, double resolution_m,
                           bool known, std::uint8_t initial_cost)
    : extent_x_(extent_x_m), extent_y_(extent_y_m), resolution_(resolution_m) {
    if (!(extent_x_m > 0.0) || !(extent_y_m > 0.0) || !(resolution_m > 0.0)) {
        throw ParameterError("CostmapLayer: extent and resolution must be positive");
    }
    nx_ = std::max<std::size_t>(std::size_t(std::ceil(extent_x_m / resolution_m)), 1);
    ny_ = std::max<std::size_t>(std::size_t(std::ceil(extent_y_m / resolution_m)), 1);
    cost_.assign(nx_ * ny_, known ? initial_cost : 0);
    known_.assign(nx_ * ny_, known ? 1 : 0);
}

std::size_t CostmapLayer::index_along(double coord, std::size_t count) const {
    if (coord <= 0.0) return 0;
    double q = coord / resolution_;
    std::size_t idx = std::size_t(std::ceil(q));
    if (idx > 0) --idx;
    return std::min(idx, count - 1);
}

void CostmapLayer::point_to_cell(double x, double y, std::size_t& ix, std::size_t& iy) const {
    if (!contains(x, y)) {
        throw OutOfBoundsError("CostmapLayer: point outside extent");
    }
    ix = index_along(x, nx_);
    iy = index_along(y, ny_);
}

void CostmapLayer::cell_center(std::size_t ix, std::size_t iy, double& x, double& y) const {
    x = (double(ix) + 0.5) * resolution_;
    y = (double(iy) + 0.5) * resolution_;
}

std::string CostmapLayer::to_csv() const {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line, "# extent_x_m=%.9g extent_y_m=%.9g resolution_m=%.9g\n",
                  extent_x_, extent_y_, resolution_);
    out += line;
    for (std::size_t iy = 0; iy < ny_; ++iy) {
        for (std::size_t ix = 0; ix < nx_; ++ix) {
            if (known(ix, iy)) {
                std::snprintf(line, sizeof line, "%d", int(cost(ix, iy)));
            } else {
                std::snprintf(line, sizeof line, "-1");
            }
            out += line;
            out += (ix + 1 < nx_) ? ',' : '\n';
        }
    }
    return out;
}

void ThresholdPolicy::validate() const {
    if (!(amp_enter_db >= amp_exit_db) || !(phase_enter_deg >= phase_exit_deg)) {
        throw ConfigError("ThresholdPolicy: enter thresholds must be >= exit thresholds");
    }
    if (!(amp_enter_db > 0.0) || !(phase_enter_deg > 0.0)) {
        throw ConfigError("ThresholdPolicy: enter thresholds must be positive");
    }
    if (!(ema_alpha > 0.0 && ema_alpha <= 1.0)) {
        throw ConfigError("ThresholdPolicy: ema_alpha must lie in (0, 1]");
    }
    if (!(lethal_score >= 0.0 && lethal_score <= 1.0)) {
        throw ConfigError("ThresholdPolicy: lethal_score must lie in [0, 1]");
    }
}

Baseline calibrate(const std::vector<fmcw::RadarReturn>& samples) {
    if (samples.size() < 3) {
        throw ParameterError("calibrate: needs at least 3 samples");
    }
    const double n = double(samples.size());

    double amp_sum = 0.0;
    double cos_sum = 0.0, sin_sum = 0.0;
    for (const auto& s : samples) {
        amp_sum += s.amplitude_db;
        cos_sum += std::cos(deg_to_rad(s.phase_deg));
        sin_sum += std::sin(deg_to_rad(s.phase_deg));
    }
    Baseline b;
    b.sample_count = samples.size();
    b.mean_amplitude_db = amp_sum / n;
    b.mean_phase_deg = wrap_deg(rad_to_deg(std::atan2(sin_sum, cos_sum)));

    double amp_ss = 0.0, phase_ss = 0.0;
    for (const auto& s : samples) {
        double da = s.amplitude_db - b.mean_amplitude_db;
        double dp = wrap_deg(s.phase_deg - b.mean_phase_deg);
        amp_ss += da * da;
        phase_ss += dp * dp;
    }
    b.amplitude_std = std::sqrt(amp_ss / (n - 1.0));
    b.phase_std = std::sqrt(phase_ss / (n - 1.0));
    return b;
}

Classification classify(const fmcw::RadarReturn& ret, const Baseline& baseline,
                        const ThresholdPolicy& policy, const ClassifierState& previous) {
    policy.validate();
    if (baseline.sample_count < 3) {
        throw ParameterError("classify: baseline is not calibrated");
    }
    const double d_amp = ret.amplitude_db - baseline.mean_amplitude_db;
    const double d_phase = std::abs(wrap_deg(ret.phase_deg - baseline.mean_phase_deg));

    const double raw =
        std::clamp(std::max(d_amp / policy.amp_enter_db, d_phase / policy.phase_enter_deg),
                   0.0, 1.0);

    Classification out;
    out.state.initialized = true;
    out.state.ema_score = previous.initialized
                              ? policy.ema_alpha * raw + (1.0 - policy.ema_alpha) * previous.ema_score
                              : raw;
    if (d_amp >= policy.amp_enter_db || d_phase >= policy.phase_enter_deg) {
        out.state.hazard = true;
    } else if (d_amp <= policy.amp_exit_db && d_phase <= policy.phase_exit_deg) {
        out.state.hazard = false;
    } else {
        out.state.hazard = previous.hazard;
    }
    out.score = out.state.ema_score;
    return out;
}

void update(CostmapLayer& layer, double ground_x, double ground_y, double score,
            double inflation_radius) {
    if (!(score >= 0.0 && score <= 1.0)) {
        throw ParameterError("costmap::update: score must lie in [0, 1]");
    }
    if (!(inflation_radius >= 0.0)) {
        throw ParameterError("costmap::update: inflation_radius must be >= 0");
    }
    std::size_t cx, cy;
    layer.point_to_cell(ground_x, ground_y, cx, cy);
    if (score == 0.0) return;  // nothing to paint, leave cells untouched

    const double center_cost = 255.0 * score;
    auto merge = [&](std::size_t ix, std::size_t iy, double value) {
        auto c = std::uint8_t(std::lround(value));
        std::size_t i = iy * layer.cells_x() + ix;
        if (!layer.known_[i]) {
            layer.cost_[i] = c;
            layer.known_[i] = 1;
        } else if (c > layer.cost_[i]) {
            layer.cost_[i] = c;
        }
    };

    merge(cx, cy, center_cost);
    if (inflation_radius <= 0.0) return;

    // Linear decay with distance between cell centers.
    const double res = layer.resolution();
    const auto reach = std::size_t(std::ceil(inflation_radius / res));
    const std::size_t ix0 = cx > reach ? cx - reach : 0;
    const std::size_t iy0 = cy > reach ? cy - reach : 0;
    const std::size_t ix1 = std::min(layer.cells_x() - 1, cx + reach);
    const std::size_t iy1 = std::min(layer.cells_y() - 1, cy + reach);
    for (std::size_t iy = iy0; iy <= iy1; ++iy) {
        for (std::size_t ix = ix0; ix <= ix1; ++ix) {
            if (ix == cx && iy == cy) continue;
            const double dx = (double(ix) - double(cx)) * res;
            const double dy = (double(iy) - double(cy)) * res;
            const double d = std::sqrt(dx * dx + dy * dy);
            if (d >= inflation_radius) continue;
            merge(ix, iy, center_cost * (1.0 - d / inflation_radius));
        }
    }
}

CostmapLayer combine(const CostmapLayer& static_layer, const CostmapLayer& moisture_layer,
                     std::uint8_t unknown_default) {
    if (!static_layer.same_geometry(moisture_layer)) {
        throw ConfigError("costmap::combine: layer geometries differ");
    }
    CostmapLayer master(static_layer.extent_x(), static_layer.extent_y(),
                        static_layer.resolution(), /*known=*/true, 0);
    const std::size_t n = master.cost_.size();

    auto materialize = [&](const CostmapLayer& src, std::vector<std::uint8_t>& dst) {
        dst = src.cost_;
        if (unknown_default != 0) {
            for (std::size_t i = 0; i < n; ++i) {
                if (!src.known_[i]) dst[i] = unknown_default;
            }
        }
        // unknown cells already store 0, so the default-0 case needs no pass
    };

    std::vector<std::uint8_t> a, b;
    materialize(static_layer, a);
    materialize(moisture_layer, b);
    master.cost_ = std::move(a);
    kernels::u8_max_inplace(master.cost_.data(), b.data(), n);
    return master;
}

}  // namespace mmground::costmap
