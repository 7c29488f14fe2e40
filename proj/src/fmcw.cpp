#include "mmground/fmcw.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <numbers>

#include "mmground/angles.hpp"
#include "mmground/errors.hpp"
#include "mmground/kernels.hpp"
#include "mmground/rng.hpp"

namespace mmground::fmcw {

namespace {

// Amplitude floor keeping dB observables finite for empty spectra.
constexpr double kMagnitudeFloor = 1e-20;

std::vector<double> hann_window(std::size_t n) {
    std::vector<double> w(n);
    if (n == 1) {
        w[0] = 1.0;
        return w;
    }
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * double(i) / double(n - 1));
    }
    return w;
}

// One FFTW plan + buffer pair per FFT length, cached per thread. The FFTW
// planner itself is not thread-safe, so plan creation takes a global lock.
// FFTW_ESTIMATE keeps planning deterministic run to run.
struct FftWorkspace {
    std::size_t n = 0;
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan plan = nullptr;
    std::size_t dirty_prefix = 0;  // samples written since the last zero fill

    explicit FftWorkspace(std::size_t length) : n(length) {
        in = fftw_alloc_complex(n);
        out = fftw_alloc_complex(n);
        std::memset(in, 0, sizeof(fftw_complex) * n);
        static std::mutex planner_mutex;
        std::lock_guard<std::mutex> lock(planner_mutex);
        plan = fftw_plan_dft_1d(int(n), in, out, FFTW_FORWARD, FFTW_ESTIMATE);
    }
    FftWorkspace(const FftWorkspace&) = delete;
    FftWorkspace& operator=(const FftWorkspace&) = delete;
    ~FftWorkspace() {
        if (plan) fftw_destroy_plan(plan);
        if (in) fftw_free(in);
        if (out) fftw_free(out);
    }
};

FftWorkspace& workspace_for(std::size_t n) {
    thread_local std::map<std::size_t, std::unique_ptr<FftWorkspace>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<FftWorkspace>(n);
    return *slot;
}

}  // namespace

std::size_t ChirpConfig::beat_samples() const {
    return std::size_t(std::llround(acquisition_window * adc_rate));
}

void ChirpConfig::validate() const {
    if (!(carrier_start > 0.0) || !(bandwidth > 0.0) || !(sweep_duration > 0.0) ||
        !(adc_rate > 0.0) || !(measurement_rate > 0.0) || !(if_per_meter > 0.0) ||
        !(acquisition_window > 0.0)) {
        throw ConfigError("ChirpConfig: all rates and durations must be positive");
    }
    if (beat_samples() < 2) {
        throw ConfigError("ChirpConfig: acquisition_window too short for adc_rate");
    }
    if (fft_length < beat_samples()) {
        throw ConfigError("ChirpConfig: fft_length must be >= the acquired sample count");
    }
}

double range_to_if(double range_m, const ChirpConfig& cfg) {
    if (!(range_m > 0.0)) {
        throw ParameterError("range_to_if: range must be > 0 m");
    }
    return cfg.if_per_meter * range_m;
}

double if_to_range(double frequency_hz, const ChirpConfig& cfg) {
    if (!(frequency_hz > 0.0)) {
        throw ParameterError("if_to_range: frequency must be > 0 Hz");
    }
    return frequency_hz / cfg.if_per_meter;
}

std::vector<std::complex<double>> synthesize_beat(const std::vector<Target>& targets,
                                                  const ChirpConfig& cfg,
                                                  double noise_std,
                                                  std::uint64_t rng_seed) {
    cfg.validate();
    const double nyquist = cfg.adc_rate / 2.0;
    for (const auto& t : targets) {
        double f = range_to_if(t.range, cfg);  // validates range > 0
        if (f >= nyquist) {
            throw ConfigError("synthesize_beat: target IF violates Nyquist for adc_rate");
        }
    }

    const std::size_t n = cfg.beat_samples();
    const double dt = 1.0 / cfg.adc_rate;
    std::vector<std::complex<double>> s(n, {0.0, 0.0});

    const double phase_per_meter = -4.0 * std::numbers::pi * cfg.center_frequency() / kSpeedOfLight;
    for (const auto& t : targets) {
        const double amp = std::abs(t.gamma);
        const double omega = 2.0 * std::numbers::pi * range_to_if(t.range, cfg);
        const double phi = wrap_rad(phase_per_meter * t.range + std::arg(t.gamma));
        for (std::size_t i = 0; i < n; ++i) {
            double ph = omega * (double(i) * dt) + phi;
            s[i] += std::complex<double>(amp * std::cos(ph), amp * std::sin(ph));
        }
    }
    if (noise_std > 0.0) {
        Rng rng(rng_seed);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] += std::complex<double>(noise_std * rng.next_gaussian(),
                                         noise_std * rng.next_gaussian());
        }
    }
    return s;
}

std::vector<std::complex<double>> range_spectrum(
    const std::vector<std::complex<double>>& series, const ChirpConfig& cfg) {
    if (series.size() < 2) {
        throw ParameterError("range_spectrum: series must hold at least 2 samples");
    }
    if (cfg.fft_length < series.size()) {
        throw ConfigError("range_spectrum: fft_length shorter than the series");
    }

    const std::size_t n = series.size();
    const auto w = hann_window(n);
    double coherent_gain = 0.0;
    for (double v : w) coherent_gain += v;

    auto& ws = workspace_for(cfg.fft_length);
    if (ws.dirty_prefix > n) {
        std::memset(ws.in + n, 0, sizeof(fftw_complex) * (ws.dirty_prefix - n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        ws.in[i][0] = series[i].real() * w[i];
        ws.in[i][1] = series[i].imag() * w[i];
    }
    ws.dirty_prefix = n;
    fftw_execute(ws.plan);

    std::vector<std::complex<double>> spectrum(cfg.fft_length);
    kernels::scale(reinterpret_cast<double*>(spectrum.data()),
                   reinterpret_cast<const double*>(ws.out), 2 * cfg.fft_length,
                   1.0 / coherent_gain);
    return spectrum;
}

void extract_observables(const std::vector<std::complex<double>>& spectrum,
                         double at_range, const ChirpConfig& cfg,
                         double& amplitude_db, double& phase_deg,
                         std::size_t* target_bin) {
    if (spectrum.empty()) {
        throw ParameterError("extract_observables: empty spectrum");
    }
    const double f = range_to_if(at_range, cfg);
    const double spacing = cfg.adc_rate / double(spectrum.size());
    const std::size_t bin = std::size_t(std::llround(f / spacing));
    if (bin >= spectrum.size() / 2) {
        throw ParameterError("extract_observables: range maps outside the spectrum");
    }
    const std::complex<double> v = spectrum[bin];
    amplitude_db = 20.0 * std::log10(std::max(std::abs(v), kMagnitudeFloor));
    phase_deg = wrap_deg(rad_to_deg(std::arg(v)));
    if (target_bin) *target_bin = bin;
}

std::vector<WeightedCell> footprint(double ground_x, double ground_y,
                                    const AntennaGeometry& geom,
                                    const scene::TerrainGrid& grid) {
    if (!grid.contains(ground_x, ground_y)) {
        throw OutOfBoundsError("footprint: ground point outside grid extent");
    }
    if (!(geom.fov_area_at_standoff > 0.0)) {
        throw ParameterError("footprint: fov_area_at_standoff must be positive");
    }
    const double radius = std::sqrt(geom.fov_area_at_standoff / std::numbers::pi);
    const double sigma = radius / 2.0;
    const double res = grid.resolution();

    std::vector<WeightedCell> cells;
    const double x_lo = std::max(0.0, ground_x - radius);
    const double x_hi = std::min(grid.extent_x(), ground_x + radius);
    const double y_lo = std::max(0.0, ground_y - radius);
    const double y_hi = std::min(grid.extent_y(), ground_y + radius);
    const std::size_t ix0 = grid.index_along(x_lo, grid.cells_x());
    const std::size_t ix1 = grid.index_along(x_hi, grid.cells_x());
    const std::size_t iy0 = grid.index_along(y_lo, grid.cells_y());
    const std::size_t iy1 = grid.index_along(y_hi, grid.cells_y());

    double total = 0.0;
    for (std::size_t iy = iy0; iy <= iy1; ++iy) {
        const double cy = (double(iy) + 0.5) * res;
        for (std::size_t ix = ix0; ix <= ix1; ++ix) {
            const double cx = (double(ix) + 0.5) * res;
            const double d2 = (cx - ground_x) * (cx - ground_x) + (cy - ground_y) * (cy - ground_y);
            if (d2 > radius * radius) continue;
            const double wgt = std::exp(-d2 / (2.0 * sigma * sigma));
            cells.push_back({ix, iy, wgt});
            total += wgt;
        }
    }
    if (cells.empty()) {
        // Disc smaller than one cell: the containing cell takes all weight.
        cells.push_back({grid.index_along(ground_x, grid.cells_x()),
                         grid.index_along(ground_y, grid.cells_y()), 1.0});
        total = 1.0;
    }
    for (auto& c : cells) c.weight /= total;
    return cells;
}

RadarReturn measure(const scene::TerrainGrid& grid, double ground_x, double ground_y,
                    const ChirpConfig& cfg, const AntennaGeometry& geom,
                    double noise_std, std::uint64_t rng_seed,
                    const dielectric::DebyeParams& water) {
    const auto cells = footprint(ground_x, ground_y, geom, grid);
    const double fc = cfg.center_frequency();
    std::complex<double> gamma_eff{0.0, 0.0};
    for (const auto& c : cells) {
        gamma_eff += c.weight * dielectric::state_to_reflection(grid.cell(c.ix, c.iy), fc, water);
    }

    auto series = synthesize_beat({{geom.standoff, gamma_eff}}, cfg, noise_std, rng_seed);
    RadarReturn ret;
    ret.spectrum = range_spectrum(series, cfg);
    extract_observables(ret.spectrum, geom.standoff, cfg, ret.amplitude_db, ret.phase_deg,
                        &ret.target_bin);
    return ret;
}

std::size_t spectrum_argmax(const std::vector<std::complex<double>>& spectrum) {
    if (spectrum.empty()) {
        throw ParameterError("spectrum_argmax: empty spectrum");
    }
    const std::size_t half = std::max<std::size_t>(spectrum.size() / 2, 1);
    std::vector<double> mags(half);
    kernels::mag2(mags.data(), reinterpret_cast<const double*>(spectrum.data()), half);
    return kernels::argmax(mags.data(), half);
}

std::vector<std::size_t> find_peak_bins(const std::vector<std::complex<double>>& spectrum,
                                        const ChirpConfig& cfg, double f_lo, double f_hi,
                                        double rel_threshold) {
    const double spacing = cfg.adc_rate / double(spectrum.size());
    std::size_t b0 = std::size_t(std::max(0.0, std::floor(f_lo / spacing)));
    std::size_t b1 = std::min(spectrum.size() / 2, std::size_t(std::ceil(f_hi / spacing)) + 1);
    if (b1 <= b0 + 2) return {};

    std::vector<double> mags(b1 - b0);
    kernels::mag2(mags.data(), reinterpret_cast<const double*>(spectrum.data() + b0), b1 - b0);
    const double peak = mags[kernels::argmax(mags.data(), mags.size())];
    const double floor = peak * rel_threshold * rel_threshold;  // mags are |.|^2

    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < mags.size(); ++i) {
        if (mags[i] > mags[i - 1] && mags[i] >= mags[i + 1] && mags[i] > floor) {
            out.push_back(b0 + i);
        }
    }
    return out;
}

std::string spectrum_to_csv(const std::vector<std::complex<double>>& spectrum,
                            const ChirpConfig& cfg) {
    const double spacing = cfg.adc_rate / double(spectrum.size());
    std::string out = "bin_hz,real,imag\n";
    char line[96];
    for (std::size_t i = 0; i < spectrum.size() / 2; ++i) {
        std::snprintf(line, sizeof line, "%.9g,%.9g,%.9g\n", double(i) * spacing,
                      spectrum[i].real(), spectrum[i].imag());
        out += line;
    }
    return out;
}

}  // namespace mmground::fmcw
