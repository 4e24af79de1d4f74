#include "jya/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace jya {

double distance(const point2& a, const point2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

angle angle_at(const point2& vertex, const point2& toward_a, const point2& toward_b) {
    const double ax = toward_a.x - vertex.x;
    const double ay = toward_a.y - vertex.y;
    const double bx = toward_b.x - vertex.x;
    const double by = toward_b.y - vertex.y;
    const double na = std::hypot(ax, ay);
    const double nb = std::hypot(bx, by);
    if (na == 0.0 || nb == 0.0) {
        throw invalid_input("angle at a point needs two distinct rays");
    }
    const double c = std::clamp((ax * bx + ay * by) / (na * nb), -1.0, 1.0);
    return angle::from_radians(std::acos(c));
}

geometry_scene build_scene(angle theta, angle phi) {
    const double t = theta.radians();
    const double f = phi.radians();
    if (!(f > 0.0)) {
        throw invalid_input("scene needs 0 < phi (got phi <= 0)");
    }
    if (!(f < t)) {
        throw invalid_input("scene needs phi < theta, else C leaves the quadrant");
    }
    if (!(t + f < pi / 2.0)) {
        throw invalid_input("scene needs theta + phi < pi/2, else B leaves the quadrant");
    }

    geometry_scene scene;
    scene.theta = theta;
    scene.phi = phi;
    scene.o = {0.0, 0.0};
    scene.x = {1.0, 0.0};
    scene.y = {0.0, 1.0};
    scene.a = {std::cos(t), std::sin(t)};
    scene.b = {std::cos(t + f), std::sin(t + f)};
    scene.c = {std::cos(t - f), std::sin(t - f)};
    scene.p = {scene.a.x, 0.0};
    scene.q = {scene.b.x, 0.0};
    scene.r = {scene.c.x, 0.0};
    // Foot of the perpendicular from C onto the vertical line BQ: shares x
    // with B and Q, y with C.
    scene.s = {scene.b.x, scene.c.y};
    return scene;
}

similarity_report measure_similarity(const geometry_scene& scene, double tol) {
    similarity_report report;
    report.tolerance = tol;

    report.angle_sbc = angle_at(scene.b, scene.s, scene.c);
    report.angle_discrepancy =
        std::abs(report.angle_sbc.radians() - scene.theta.radians());

    const double bs = distance(scene.b, scene.s);
    const double cs = distance(scene.c, scene.s);
    const double bc = distance(scene.b, scene.c);
    const double op = distance(scene.o, scene.p);
    const double ap = distance(scene.a, scene.p);
    const double oa = distance(scene.o, scene.a);
    report.ratio_bs_op = bs / op;
    report.ratio_cs_ap = cs / ap;
    report.ratio_bc_oa = bc / oa;
    report.max_ratio_discrepancy =
        std::max({std::abs(report.ratio_bs_op - report.ratio_cs_ap),
                  std::abs(report.ratio_bs_op - report.ratio_bc_oa),
                  std::abs(report.ratio_cs_ap - report.ratio_bc_oa)});

    // BS = BQ - CR and CS = OR - OQ read straight off the coordinates.
    report.derived_sine_diff = scene.b.y - scene.c.y;
    report.derived_cosine_diff = -(scene.c.x - scene.b.x);

    report.passed =
        report.angle_discrepancy < tol && report.max_ratio_discrepancy < tol;
    return report;
}

similarity_report verify_similarity(const geometry_scene& scene, double tol) {
    similarity_report report = measure_similarity(scene, tol);
    if (!report.passed) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "similarity verification failed at tol %.3e "
                      "(angle discrepancy %.3e, ratio discrepancy %.3e)",
                      tol, report.angle_discrepancy, report.max_ratio_discrepancy);
        throw similarity_failure(msg, report);
    }
    return report;
}

std::vector<std::pair<angle, angle>> sweep_grid(std::size_t theta_steps,
                                                std::size_t phi_steps) {
    if (theta_steps < 1 || phi_steps < 1) {
        throw invalid_input("sweep needs at least one step per axis");
    }
    std::vector<std::pair<angle, angle>> grid;
    grid.reserve(theta_steps * phi_steps);
    for (std::size_t i = 0; i < theta_steps; ++i) {
        const double t = (pi / 2.0) * static_cast<double>(i + 1) /
                         static_cast<double>(theta_steps + 1);
        // phi must stay below both theta and pi/2 - theta; the fraction
        // (j+1)/(phi_steps+1) < 1 keeps the inequalities strict.
        const double phi_cap = std::min(t, pi / 2.0 - t);
        for (std::size_t j = 0; j < phi_steps; ++j) {
            const double f = phi_cap * static_cast<double>(j + 1) /
                             static_cast<double>(phi_steps + 1);
            grid.emplace_back(angle::from_radians(t), angle::from_radians(f));
        }
    }
    return grid;
}

sweep_summary sweep_verify(std::size_t theta_steps, std::size_t phi_steps, double tol) {
    sweep_summary summary;
    for (const auto& [theta, phi] : sweep_grid(theta_steps, phi_steps)) {
        const geometry_scene scene = build_scene(theta, phi);
        const similarity_report report = measure_similarity(scene, tol);
        ++summary.total;
        if (!report.passed) {
            ++summary.failures;
        }
        const double disc =
            std::max(report.angle_discrepancy, report.max_ratio_discrepancy);
        if (disc > summary.worst_discrepancy) {
            summary.worst_discrepancy = disc;
            summary.worst_theta = theta;
            summary.worst_phi = phi;
        }
        const double residual = std::max(
            std::abs(report.derived_sine_diff - sine_diff_rhs(theta, phi)),
            std::abs(report.derived_cosine_diff - cosine_diff_rhs(theta, phi)));
        summary.worst_identity_residual =
            std::max(summary.worst_identity_residual, residual);
    }
    return summary;
}

} // namespace jya
