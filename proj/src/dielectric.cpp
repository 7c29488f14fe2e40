#include "mmground/dielectric.hpp"

#include <cmath>
#include <numbers>

#include "mmground/errors.hpp"

namespace mmground::dielectric {

ComplexPermittivity debye_permittivity(double frequency_hz, const DebyeParams& p) {
    if (!(frequency_hz > 0.0)) {
        throw ParameterError("debye_permittivity: frequency must be > 0 Hz");
    }
    if (!(p.eps_static > p.eps_infinity) || !(p.eps_infinity >= 1.0) ||
        !(p.relaxation_time > 0.0)) {
        throw ParameterError(
            "debye_permittivity: requires eps_static > eps_infinity >= 1 and "
            "relaxation_time > 0");
    }
    std::complex<double> denom(1.0, 2.0 * std::numbers::pi * frequency_hz * p.relaxation_time);
    std::complex<double> eps = p.eps_infinity + (p.eps_static - p.eps_infinity) / denom;
    return ComplexPermittivity::from_complex(eps);
}

ComplexPermittivity mix_permittivity(const ComplexPermittivity& host,
                                     const ComplexPermittivity& inclusion,
                                     double fraction) {
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
        throw ParameterError("mix_permittivity: fraction must lie in [0, 1]");
    }
    std::complex<double> s = (1.0 - fraction) * std::sqrt(host.to_complex()) +
                             fraction * std::sqrt(inclusion.to_complex());
    return ComplexPermittivity::from_complex(s * s);
}

std::complex<double> fresnel_reflection(const ComplexPermittivity& eps) {
    std::complex<double> s = std::sqrt(eps.to_complex());
    return (1.0 - s) / (1.0 + s);
}

std::complex<double> state_to_reflection(const MaterialState& state, double frequency_hz,
                                         const DebyeParams& water) {
    ComplexPermittivity wet = debye_permittivity(frequency_hz, water);
    ComplexPermittivity mixed = mix_permittivity(state.base, wet, state.water_fraction);
    return fresnel_reflection(mixed);
}

}  // namespace mmground::dielectric
