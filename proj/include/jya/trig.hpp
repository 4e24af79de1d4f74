#pragma once

// Foundational angle and value types, the sine/cosine difference identities,
// and the Rsine (radius-3438) scaling used by the classical Indian tables.

#include <cstdint>

namespace jya {

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Radius of the classical sine table: the sine is tabulated as sin * 3438,
// 3438 being the whole number of arcminutes closest to one radian.
inline constexpr double rsine_radius = 3438.0;

// Exact minutes of arc per radian (10800/pi = 3437.7467...); used only for
// angle unit conversion, never for the table scaling above.
inline constexpr double arcminutes_per_radian = 10800.0 / pi;

// An arc expressed in minutes of arc.
struct arcminutes {
    double value = 0.0;
};

// An angle, stored in radians. Degrees and arcminutes are presentation
// conversions only. Construction rejects NaN and infinity.
class angle {
public:
    constexpr angle() = default;

    static angle from_radians(double radians);
    static angle from_degrees(double degrees);
    static angle from_arcminutes(arcminutes minutes);

    double radians() const { return radians_; }
    double degrees() const;
    arcminutes to_arcminutes() const;

private:
    explicit constexpr angle(double radians) : radians_(radians) {}
    double radians_ = 0.0;
};

// A sine sample scaled to the radius-3438 convention. `raw` keeps full
// precision; `rounded` is the nearest-integer arcminute entry (ties away
// from zero), so |raw - rounded| <= 0.5 always.
struct rsine_value {
    double raw = 0.0;
    long rounded = 0;
};

rsine_value to_rsine(double sine_value);

// Modern double-precision sine/cosine; the reference everything else is
// measured against. Rejects non-finite input.
double reference_sin(angle theta);
double reference_cos(angle theta);

// sin(theta+phi) - sin(theta-phi), evaluated directly.
double sine_diff(angle theta, angle phi);
// The closed form of the same quantity: 2 sin(phi) cos(theta).
double sine_diff_rhs(angle theta, angle phi);

// cos(theta+phi) - cos(theta-phi), evaluated directly.
double cosine_diff(angle theta, angle phi);
// Closed form: -2 sin(phi) sin(theta).
double cosine_diff_rhs(angle theta, angle phi);

// Round to four decimal places, the working precision of the 499 CE
// computation (pi taken as 3.1416, step 225' as 0.0654, and so on).
// Implemented by decimal formatting, so it is the value a four-decimal
// print would show, with no binary double-rounding surprises.
double round_to_four_decimals(double x);

} // namespace jya
