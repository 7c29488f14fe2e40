#ifndef MMGROUND_FMCW_HPP
#define MMGROUND_FMCW_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mmground/dielectric.hpp"
#include "mmground/scene.hpp"

namespace mmground::fmcw {

// K-band chirp and acquisition parameters. Numeric defaults follow the
// sensor datasheet values used throughout; if_per_meter is the calibration
// constant tying beat frequency to range (12 MHz at the 0.30 m floor
// interface). The dechirped beat is acquired as complex I/Q for
// acquisition_window seconds of the sweep.
struct ChirpConfig {
    double carrier_start = 24.0e9;       // Hz, sweep start
    double bandwidth = 1.5e9;            // Hz
    double sweep_duration = 0.300;       // s, full chirp (cadence/reporting)
    double adc_rate = 100.0e6;           // Hz, beat-signal sampling
    double acquisition_window = 4.0e-7;  // s of beat signal fed to the DFT
    double measurement_rate = 0.5;       // Hz, sweeps per second
    double transmit_time = 1.2;          // s, data transmit interval
    double analysis_budget = 0.031;      // s, per-sample processing budget
    double if_per_meter = 40.0e6;        // Hz per meter of target range
    std::size_t fft_length = 1u << 20;   // zero-padded DFT length

    double center_frequency() const { return carrier_start + bandwidth / 2.0; }
    double bin_spacing() const { return adc_rate / double(fft_length); }
    std::size_t beat_samples() const;

    // Throws ConfigError if inconsistent (non-positive fields, fft_length
    // shorter than the acquisition, Nyquist margin <= 0).
    void validate() const;
};

// Downward-looking horn geometry. The footprint is a disc of
// fov_area_at_standoff on the ground, with a Gaussian radial weighting
// (sigma = half the disc radius) modelling the peaked emission pattern.
struct AntennaGeometry {
    double standoff = 0.30;                    // m antenna tip to surface
    double spot_radius_at_10cm = 0.0364;       // m, measured spot radius
    double divergence_half_angle_deg = 15.0;   // near-field divergence
    double fov_area_at_standoff = 20.0e-3;     // m^2 on target at standoff
};

// One sweep's processed return.
struct RadarReturn {
    std::vector<std::complex<double>> spectrum;  // per-bin complex amplitude
    std::size_t target_bin = 0;                  // floor-interface bin
    double amplitude_db = 0.0;                   // 20*log10 |bin|, re unit reflection
    double phase_deg = 0.0;                      // arg(bin) in (-180, 180]
    double timestamp = 0.0;                      // s, set by the caller
};

struct Target {
    double range = 0.0;                   // m, > 0
    std::complex<double> gamma{0.0, 0.0}; // complex reflection coefficient
};

struct WeightedCell {
    std::size_t ix = 0, iy = 0;
    double weight = 0.0;
};

// Beat frequency of a target at `range` meters: if_per_meter * range.
double range_to_if(double range_m, const ChirpConfig& cfg);

// Inverse mapping; exact round trip with range_to_if.
double if_to_range(double frequency_hz, const ChirpConfig& cfg);

// Complex I/Q beat series for a set of point targets:
//   s[n] = sum_i |G_i| * exp(j*(2*pi*f_i*t_n + phi_i)) + noise[n]
// with f_i = range_to_if(r_i), phi_i = wrap(-(4*pi*f_center/c)*r_i + arg G_i),
// and noise zero-mean Gaussian of std noise_std per quadrature, seeded.
// Re(s) is the cosine beat; the quadrature component comes from the I/Q
// receiver model. Length = beat_samples(). Empty target list gives pure
// noise (or zeros when noise_std == 0).
std::vector<std::complex<double>> synthesize_beat(const std::vector<Target>& targets,
                                                  const ChirpConfig& cfg,
                                                  double noise_std,
                                                  std::uint64_t rng_seed);

// Hann-windowed DFT zero-padded to cfg.fft_length, normalized by the window
// coherent gain so a unit reflector at a bin center reads |bin| = 1.
// Throws ParameterError for series shorter than 2 samples.
std::vector<std::complex<double>> range_spectrum(
    const std::vector<std::complex<double>>& series, const ChirpConfig& cfg);

// Amplitude (dB re unit reflection) and phase (deg) at the bin nearest
// range_to_if(at_range). Throws ParameterError when the bin falls outside
// the positive-frequency half of the spectrum.
void extract_observables(const std::vector<std::complex<double>>& spectrum,
                         double at_range, const ChirpConfig& cfg,
                         double& amplitude_db, double& phase_deg,
                         std::size_t* target_bin = nullptr);

// Terrain cells inside the antenna footprint disc centered at the ground
// point, Gaussian-weighted by distance, weights normalized to sum 1.
// Falls back to the single containing cell on grids coarser than the disc.
// Throws OutOfBoundsError when the point lies outside the grid.
std::vector<WeightedCell> footprint(double ground_x, double ground_y,
                                    const AntennaGeometry& geom,
                                    const scene::TerrainGrid& grid);

// Full chain: footprint-weighted effective reflection coefficient at the
// sweep center frequency, one synthetic target at the standoff range,
// spectrum, observables. Deterministic for a fixed seed.
RadarReturn measure(const scene::TerrainGrid& grid, double ground_x, double ground_y,
                    const ChirpConfig& cfg, const AntennaGeometry& geom,
                    double noise_std, std::uint64_t rng_seed,
                    const dielectric::DebyeParams& water = dielectric::DebyeParams{});

// Positive-frequency argmax bin of a spectrum (kernels-backed).
std::size_t spectrum_argmax(const std::vector<std::complex<double>>& spectrum);

// Bins of strict local maxima within [f_lo, f_hi] whose magnitude is at
// least rel_threshold times the window maximum. Used for resolution checks.
std::vector<std::size_t> find_peak_bins(const std::vector<std::complex<double>>& spectrum,
                                        const ChirpConfig& cfg, double f_lo, double f_hi,
                                        double rel_threshold = 0.2);

// Debug dump of the positive-frequency half: "bin_hz,real,imag" per line.
std::string spectrum_to_csv(const std::vector<std::complex<double>>& spectrum,
                            const ChirpConfig& cfg);

}  // namespace mmground::fmcw

#endif
