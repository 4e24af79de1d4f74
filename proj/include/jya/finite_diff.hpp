#pragma once

// Central-difference derivative operators and the second-difference time
// stepper for the simple harmonic oscillator -- the same recurrence as the
// sine table, read as a leapfrog integrator.

#include <cstddef>
#include <functional>
#include <vector>

#include "jya/trig.hpp"

namespace jya {

using real_function = std::function<double(double)>;

// Denominator convention. `exact_sine` uses 2 sin(eps) (first derivative)
// and (2 sin(eps/2))^2 (second); with those the operators are identities on
// true sine samples at any step, not just approximations for small ones.
// `plain_step` is the textbook 2 eps / eps^2 form.
enum class denominator_form { exact_sine, plain_step };

// Symmetric samples of a function around theta.
struct sampled_pair {
    angle theta;    // center
    angle epsilon;  // half-width, > 0
    double f_plus = 0.0;  // f(theta + epsilon)
    double f_minus = 0.0; // f(theta - epsilon)
};

sampled_pair sample_pair(const real_function& f, angle theta, angle epsilon);

// (f_plus - f_minus) / (2 sin eps)   or   / (2 eps).
double central_first_derivative(const sampled_pair& pair,
                                denominator_form form = denominator_form::exact_sine);
// Convenience: sample f and apply the operator in one call.
double central_first_derivative(const real_function& f, angle theta, angle epsilon,
                                denominator_form form = denominator_form::exact_sine);

// (f_plus - 2 f_center + f_minus) / (2 sin(eps/2))^2   or   / eps^2.
double central_second_derivative(double f_plus, double f_center, double f_minus,
                                 angle epsilon,
                                 denominator_form form = denominator_form::exact_sine);
double central_second_derivative(const real_function& f, angle theta, angle epsilon,
                                 denominator_form form = denominator_form::exact_sine);

// One row per step size in a halving study; ratio is error(previous)/error
// and sits near 4 for a second-order operator.
struct convergence_row {
    double epsilon = 0.0;
    double error = 0.0;
    double ratio = 0.0; // 0 for the first row
};

// Halve the step `halvings` times, comparing the order-`derivative_order`
// (1 or 2) operator against `truth` at theta.
std::vector<convergence_row> convergence_study(
    const real_function& f, const real_function& truth, angle theta,
    angle initial_epsilon, unsigned halvings, int derivative_order,
    denominator_form form = denominator_form::plain_step);

// A simulated oscillator trajectory; y[n] is the position at time n * step_h.
struct oscillator_run {
    double omega = 0.0;
    double step_h = 0.0;
    std::vector<double> y;

    double time_at(std::size_t n) const { return static_cast<double>(n) * step_h; }
};

// y_{n+1} = 2 y_n - y_{n-1} - (omega h)^2 y_n, evaluated difference-first
// (d -= K y; y += d) so a run seeded like the sine table reproduces it bit
// for bit. `steps` is the final index: y has steps + 1 samples. Refuses
// omega * h >= 2, the stability bound of the explicit scheme.
oscillator_run integrate_shm(double omega, double step_h, std::size_t steps,
                             double y0, double y1);

// Discrete energy  d_n^2 / (2 h^2) + omega^2 y_{n-1} y_n / 2  with
// d_n = y_n - y_{n-1}; conserved by the scheme up to roundoff. One value
// per step, so the result has run.y.size() - 1 entries.
std::vector<double> discrete_energy(const oscillator_run& run);

// Max |E_n - E_1| / |E_1| over a run's energy series (0 if E_1 == 0).
double relative_energy_drift(const oscillator_run& run);

} // namespace jya
