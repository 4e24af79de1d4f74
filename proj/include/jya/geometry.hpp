#pragma once

// Coordinate reconstruction of the unit-circle quadrant figure behind the
// sine/cosine difference identities, and numeric verification that the
// similar-triangle argument actually holds at machine precision.

#include <cstddef>
#include <utility>
#include <vector>

#include "jya/errors.hpp"
#include "jya/trig.hpp"

namespace jya {

struct point2 {
    double x = 0.0;
    double y = 0.0;
};

double distance(const point2& a, const point2& b);

// Angle at `vertex` between the rays toward a and b, measured by the
// clamped-acos two-vector formula so float noise at the domain boundary
// cannot push the cosine outside [-1, 1].
angle angle_at(const point2& vertex, const point2& toward_a, const point2& toward_b);

// Quadrant of the unit circle with X = (1,0), Y = (0,1). A sits at angle
// theta, B at theta + phi, C at theta - phi. P, Q, R are the feet of the
// perpendiculars from A, B, C onto OX, and S is the foot of the
// perpendicular from C onto the vertical segment BQ.
struct geometry_scene {
    angle theta;
    angle phi;
    point2 o, x, y, a, b, c, p, q, r, s;
};

// Requires 0 < phi < theta and theta + phi < pi/2 (all points strictly
// inside the open quadrant); throws invalid_input naming the violated
// inequality otherwise.
geometry_scene build_scene(angle theta, angle phi);

// Measurements of the similar triangles BSC and OPA. The three ratios all
// equal the chord 2 sin(phi) when the construction is right, and the angle
// at B equals theta; BS and -CS are the geometric left-hand sides of the
// two difference identities.
struct similarity_report {
    angle angle_sbc;
    double angle_discrepancy = 0.0; // |angle_sbc - theta| in radians
    double ratio_bs_op = 0.0;
    double ratio_cs_ap = 0.0;
    double ratio_bc_oa = 0.0;
    double max_ratio_discrepancy = 0.0; // max pairwise difference of the ratios
    double derived_sine_diff = 0.0;     // BS = sin(theta+phi) - sin(theta-phi)
    double derived_cosine_diff = 0.0;   // -CS = cos(theta+phi) - cos(theta-phi)
    double tolerance = 0.0;
    bool passed = false;
};

// verification_failure that carries the measurements which tripped it.
class similarity_failure : public verification_failure {
public:
    similarity_failure(const std::string& what_arg, similarity_report measured)
        : verification_failure(what_arg), report_(measured) {}
    const similarity_report& report() const { return report_; }

private:
    similarity_report report_;
};

// Measure without judging: fills the report and sets `passed` against tol.
similarity_report measure_similarity(const geometry_scene& scene, double tol);

// Same measurements, but throws similarity_failure when the angle or ratio
// discrepancy exceeds tol.
similarity_report verify_similarity(const geometry_scene& scene, double tol);

struct sweep_summary {
    std::size_t total = 0;
    std::size_t failures = 0;
    double worst_discrepancy = 0.0; // max of angle / ratio discrepancies seen
    angle worst_theta;
    angle worst_phi;
    // Worst gap between the scene-derived difference (BS or -CS) and the
    // algebraic closed form from trig-core.
    double worst_identity_residual = 0.0;
};

// The (theta, phi) parameter grid sweep_verify walks: theta_steps values of
// theta strictly inside (0, pi/2), each with phi_steps values of phi kept
// strictly below min(theta, pi/2 - theta).
std::vector<std::pair<angle, angle>> sweep_grid(std::size_t theta_steps,
                                                std::size_t phi_steps);

// Deterministic grid sweep over the valid (theta, phi) region; failures are
// counted in the summary, never thrown.
sweep_summary sweep_verify(std::size_t theta_steps, std::size_t phi_steps, double tol);

} // namespace jya
