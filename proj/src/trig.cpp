#include "jya/trig.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "jya/errors.hpp"

namespace jya {

namespace {

double require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw invalid_input(std::string(what) + " must be finite");
    }
    return x;
}

} // namespace

angle angle::from_radians(double radians) {
    return angle(require_finite(radians, "angle in radians"));
}

angle angle::from_degrees(double degrees) {
    require_finite(degrees, "angle in degrees");
    return angle(degrees * (pi / 180.0));
}

angle angle::from_arcminutes(arcminutes minutes) {
    require_finite(minutes.value, "angle in arcminutes");
    return angle(minutes.value / arcminutes_per_radian);
}

double angle::degrees() const {
    return radians_ * (180.0 / pi);
}

arcminutes angle::to_arcminutes() const {
    return arcminutes{radians_ * arcminutes_per_radian};
}

rsine_value to_rsine(double sine_value) {
    require_finite(sine_value, "sine value");
    rsine_value out;
    out.raw = sine_value * rsine_radius;
    out.rounded = static_cast<long>(std::llround(out.raw)); // ties away from zero
    return out;
}

double reference_sin(angle theta) {
    return std::sin(theta.radians());
}

double reference_cos(angle theta) {
    return std::cos(theta.radians());
}

double sine_diff(angle theta, angle phi) {
    return std::sin(theta.radians() + phi.radians()) - std::sin(theta.radians() - phi.radians());
}

double sine_diff_rhs(angle theta, angle phi) {
    return 2.0 * std::sin(phi.radians()) * std::cos(theta.radians());
}

double cosine_diff(angle theta, angle phi) {
    return std::cos(theta.radians() + phi.radians()) - std::cos(theta.radians() - phi.radians());
}

double cosine_diff_rhs(angle theta, angle phi) {
    return -2.0 * std::sin(phi.radians()) * std::sin(theta.radians());
}

double round_to_four_decimals(double x) {
    require_finite(x, "value");
    // Format-and-reparse gives correctly rounded decimal behaviour even when
    // x sits within an ulp of a .00005 boundary (e.g. 3.1416/48).
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return std::strtod(buf, nullptr);
}

} // namespace jya
