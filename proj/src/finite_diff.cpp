#include "jya/finite_diff.hpp"

#include <cmath>

#include "jya/errors.hpp"

namespace jya {

namespace {

double checked_denominator(double denom) {
    if (denom == 0.0 || !std::isfinite(denom)) {
        throw degenerate_step("difference denominator vanished");
    }
    return denom;
}

double require_positive_step(angle epsilon) {
    const double eps = epsilon.radians();
    if (eps <= 0.0) {
        throw degenerate_step("step must be positive");
    }
    return eps;
}

} // namespace

sampled_pair sample_pair(const real_function& f, angle theta, angle epsilon) {
    require_positive_step(epsilon);
    sampled_pair pair;
    pair.theta = theta;
    pair.epsilon = epsilon;
    pair.f_plus = f(theta.radians() + epsilon.radians());
    pair.f_minus = f(theta.radians() - epsilon.radians());
    return pair;
}

double central_first_derivative(const sampled_pair& pair, denominator_form form) {
    const double eps = require_positive_step(pair.epsilon);
    const double denom = form == denominator_form::exact_sine
                             ? 2.0 * std::sin(eps)
                             : 2.0 * eps;
    return (pair.f_plus - pair.f_minus) / checked_denominator(denom);
}

double central_first_derivative(const real_function& f, angle theta, angle epsilon,
                                denominator_form form) {
    return central_first_derivative(sample_pair(f, theta, epsilon), form);
}

double central_second_derivative(double f_plus, double f_center, double f_minus,
                                 angle epsilon, denominator_form form) {
    const double eps = require_positive_step(epsilon);
    double denom;
    if (form == denominator_form::exact_sine) {
        const double half_chord = 2.0 * std::sin(eps / 2.0);
        denom = half_chord * half_chord;
    } else {
        denom = eps * eps;
    }
    return (f_plus - 2.0 * f_center + f_minus) / checked_denominator(denom);
}

double central_second_derivative(const real_function& f, angle theta, angle epsilon,
                                 denominator_form form) {
    const double eps = require_positive_step(epsilon);
    return central_second_derivative(f(theta.radians() + eps), f(theta.radians()),
                                     f(theta.radians() - eps), epsilon, form);
}

std::vector<convergence_row> convergence_study(
    const real_function& f, const real_function& truth, angle theta,
    angle initial_epsilon, unsigned halvings, int derivative_order,
    denominator_form form) {
    if (derivative_order != 1 && derivative_order != 2) {
        throw invalid_input("derivative order must be 1 or 2");
    }
    double eps = require_positive_step(initial_epsilon);
    const double expected = truth(theta.radians());

    std::vector<convergence_row> rows;
    rows.reserve(halvings + 1);
    for (unsigned i = 0; i <= halvings; ++i, eps /= 2.0) {
        const angle step = angle::from_radians(eps);
        const double estimate =
            derivative_order == 1
                ? central_first_derivative(f, theta, step, form)
                : central_second_derivative(f, theta, step, form);
        convergence_row row;
        row.epsilon = eps;
        row.error = std::abs(estimate - expected);
        row.ratio = rows.empty() || row.error == 0.0 ? 0.0 : rows.back().error / row.error;
        rows.push_back(row);
    }
    return rows;
}

oscillator_run integrate_shm(double omega, double step_h, std::size_t steps,
                             double y0, double y1) {
    if (!std::isfinite(omega) || omega <= 0.0) {
        throw invalid_input("omega must be positive and finite");
    }
    if (!std::isfinite(step_h) || step_h <= 0.0) {
        throw invalid_input("step must be positive and finite");
    }
    if (!std::isfinite(y0) || !std::isfinite(y1)) {
        throw invalid_input("initial samples must be finite");
    }
    if (steps < 2) {
        throw invalid_input("need at least two steps");
    }
    if (omega * step_h >= 2.0) {
        throw unstable_step(
            "omega * step reaches the stability bound of the explicit scheme "
            "(need omega * h < 2); refusing to integrate");
    }

    oscillator_run run;
    run.omega = omega;
    run.step_h = step_h;
    run.y.reserve(steps + 1);
    run.y.push_back(y0);
    run.y.push_back(y1);

    // Same difference-first arithmetic as the sine recursion.
    const double wh = omega * step_h;
    const double k = wh * wh;
    double delta = y1 - y0;
    double y = y1;
    for (std::size_t n = 1; n < steps; ++n) {
        delta -= k * y;
        y += delta;
        run.y.push_back(y);
    }
    return run;
}

std::vector<double> discrete_energy(const oscillator_run& run) {
    std::vector<double> energy;
    if (run.y.size() < 2) {
        return energy;
    }
    energy.reserve(run.y.size() - 1);
    const double h2 = run.step_h * run.step_h;
    const double w2 = run.omega * run.omega;
    for (std::size_t n = 1; n < run.y.size(); ++n) {
        const double d = run.y[n] - run.y[n - 1];
        energy.push_back(d * d / (2.0 * h2) + w2 * run.y[n - 1] * run.y[n] / 2.0);
    }
    return energy;
}

double relative_energy_drift(const oscillator_run& run) {
    const std::vector<double> energy = discrete_energy(run);
    if (energy.empty() || energy.front() == 0.0) {
        return 0.0;
    }
    double worst = 0.0;
    for (const double e : energy) {
        worst = std::max(worst, std::abs(e - energy.front()));
    }
    return worst / std::abs(energy.front());
}

} // namespace jya
