#pragma once

#include <stdexcept>
#include <string>

namespace jya {

// Common base so callers can catch everything thrown by this library at once.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Argument values that are outside any reasonable domain: NaN/inf angles,
// nonpositive counts where a positive one is required, and so on.
class invalid_input : public error {
public:
    using error::error;
};

// A structurally broken configuration (as opposed to a single bad scalar).
class invalid_config : public error {
public:
    using error::error;
};

// A grid with no nodes where at least one is needed.
class empty_grid : public invalid_config {
public:
    using invalid_config::invalid_config;
};

// An operation that only makes sense for one generation mode was handed
// a table produced in another (e.g. identity residuals of a historical table).
class mode_mismatch : public invalid_config {
public:
    using invalid_config::invalid_config;
};

// A grid that the half-angle construction cannot reach from its anchors.
class unsupported_grid : public invalid_config {
public:
    using invalid_config::invalid_config;
};

// A difference quotient whose denominator vanished (step zero or sin(step) zero).
class degenerate_step : public invalid_input {
public:
    using invalid_input::invalid_input;
};

// Oscillator time step beyond the stability bound of the explicit scheme.
class unstable_step : public error {
public:
    using error::error;
};

// A numeric verification found a violation. Subclasses may carry a report.
class verification_failure : public error {
public:
    using error::error;
};

} // namespace jya
