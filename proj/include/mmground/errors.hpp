#ifndef MMGROUND_ERRORS_HPP
#define MMGROUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mmground {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller-supplied value violates an operation precondition
// (non-positive range, fraction outside [0,1], too few samples, ...).
struct ParameterError : Error {
    using Error::Error;
};

// A configuration is internally inconsistent (Nyquist violation,
// FFT length shorter than the series, mismatched layer geometry, ...).
struct ConfigError : Error {
    using Error::Error;
};

// A point or region falls outside the grid extent.
struct OutOfBoundsError : ParameterError {
    using ParameterError::ParameterError;
};

// Scenario file problems: parse errors carry line/column, validation
// errors carry the offending field name and constraint.
struct ScenarioError : Error {
    using Error::Error;
};

// Filesystem failures during emit; message includes the path.
struct IoError : Error {
    using Error::Error;
};

}  // namespace mmground

#endif
