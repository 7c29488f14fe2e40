#ifndef MMGROUND_DIELECTRIC_HPP
#define MMGROUND_DIELECTRIC_HPP

#include <complex>

namespace mmground::dielectric {

// Relative permittivity eps = eps' - j*eps'' (loss stored non-negative).
// This is the single place the sign convention lives: to_complex() maps to
// std::complex as (eps', -eps''), and the principal std::sqrt of that value
// has a non-positive imaginary part, i.e. sqrt(eps) = a - jb with b >= 0.
struct ComplexPermittivity {
    double real_part = 1.0;  // eps' >= 1 for materials modeled here
    double imag_part = 0.0;  // eps'' >= 0 (loss)

    std::complex<double> to_complex() const { return {real_part, -imag_part}; }
    static ComplexPermittivity from_complex(std::complex<double> z) {
        return {z.real(), -z.imag()};
    }
};

// Single-relaxation Debye model for polar liquids (water).
struct DebyeParams {
    double eps_static = 78.4;           // low-frequency limit
    double eps_infinity = 5.3;          // optical limit
    double relaxation_time = 8.27e-12;  // seconds (25 C water)
};

// Surface state of one terrain cell: a non-dispersive base material plus a
// volumetric water fraction in [0, 1].
struct MaterialState {
    ComplexPermittivity base{4.5, 0.3};  // dry concrete at 24 GHz
    double water_fraction = 0.0;
};

inline MaterialState dry_concrete() { return MaterialState{}; }

// eps(f) = eps_inf + (eps_s - eps_inf) / (1 + j*2*pi*f*tau).
// Throws ParameterError for f <= 0 or invalid params.
ComplexPermittivity debye_permittivity(double frequency_hz, const DebyeParams& p);

// CRIM volumetric mixing: sqrt(eps_mix) = (1-v)*sqrt(host) + v*sqrt(inclusion),
// principal complex square roots. Throws ParameterError for v outside [0, 1].
ComplexPermittivity mix_permittivity(const ComplexPermittivity& host,
                                     const ComplexPermittivity& inclusion,
                                     double fraction);

// Normal-incidence reflection from air: Gamma = (1 - sqrt(eps)) / (1 + sqrt(eps)).
std::complex<double> fresnel_reflection(const ComplexPermittivity& eps);

// Composition Debye -> CRIM -> Fresnel for one cell state at frequency f.
std::complex<double> state_to_reflection(const MaterialState& state, double frequency_hz,
                                         const DebyeParams& water = DebyeParams{});

}  // namespace mmground::dielectric

#endif
