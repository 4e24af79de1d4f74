#include <cmath>
#include <cstdio>
#include <vector>

#include <doctest.h>

#include "jya/errors.hpp"
#include "jya/finite_diff.hpp"
#include "jya/sine_table.hpp"

using namespace jya;

namespace {

const real_function oracle_sine = [](double x) { return std::sin(x); };
const real_function oracle_cosine = [](double x) { return std::cos(x); };

std::string two_decimals(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

} // namespace

TEST_CASE("worked quotient: rounded samples over a 7 degree spread") {
    sampled_pair pair;
    pair.theta = angle::from_degrees(33.5);
    pair.epsilon = angle::from_degrees(3.5);
    pair.f_plus = 0.6;  // sin 37 deg, printed at one decimal
    pair.f_minus = 0.5; // sin 30 deg
    const double plain =
        central_first_derivative(pair, denominator_form::plain_step);
    CHECK(plain == doctest::Approx(0.8185111359011759).epsilon(1e-12));
    CHECK(two_decimals(plain) == "0.82");
    CHECK(two_decimals(reference_cos(pair.theta)) == "0.83");

    // the exact-sine denominator gives the same two-decimal story
    const double exact = central_first_derivative(pair);
    CHECK(exact == doctest::Approx(0.8190204119699128).epsilon(1e-12));
    CHECK(two_decimals(exact) == "0.82");
}

TEST_CASE("first derivative of sine approaches cosine at second order") {
    // plain-step denominator: a genuine approximation
    const double estimate = central_first_derivative(
        oracle_sine, angle::from_radians(1.0), angle::from_radians(1e-4),
        denominator_form::plain_step);
    CHECK(std::abs(estimate - std::cos(1.0)) < 1e-8);

    // symmetric around zero the estimate is cos(0) = 1 up to O(eps^2)
    const double at_zero = central_first_derivative(
        oracle_sine, angle::from_radians(0.0), angle::from_radians(1e-3),
        denominator_form::plain_step);
    CHECK(std::abs(at_zero - 1.0) < 1e-6);
}

TEST_CASE("exact-sine denominators make the operators identities on sine") {
    // large steps included: these are identities, not small-eps approximations
    for (const double eps : {0.05, 0.2, 0.5, pi / 4.0, 1.2, 1.5}) {
        for (const double t : {0.1, 0.4, 0.7, 1.0, 1.3}) {
            const angle theta = angle::from_radians(t);
            const angle step = angle::from_radians(eps);
            CHECK(std::abs(central_first_derivative(oracle_sine, theta, step) -
                           std::cos(t)) < 1e-12);
            CHECK(std::abs(central_second_derivative(oracle_sine, theta, step) -
                           (-std::sin(t))) < 1e-12);
        }
    }
}

TEST_CASE("second derivative estimates") {
    const double estimate = central_second_derivative(
        oracle_sine, angle::from_radians(pi / 6.0), angle::from_radians(1e-3),
        denominator_form::plain_step);
    CHECK(std::abs(estimate - (-0.5)) < 1e-6);

    const double cos_at_zero = central_second_derivative(
        oracle_cosine, angle::from_radians(0.0), angle::from_radians(1e-2),
        denominator_form::plain_step);
    CHECK(std::abs(cos_at_zero - (-1.0)) < 1e-3);

    // second difference of a constant is exactly zero
    CHECK(central_second_derivative(3.7, 3.7, 3.7, angle::from_radians(0.25)) == 0.0);
}

TEST_CASE("degenerate steps are refused") {
    sampled_pair pair;
    pair.theta = angle::from_radians(1.0);
    pair.epsilon = angle::from_radians(0.0);
    pair.f_plus = 1.0;
    pair.f_minus = 0.0;
    CHECK_THROWS_AS(central_first_derivative(pair), degenerate_step);
    CHECK_THROWS_AS(central_second_derivative(1.0, 0.5, 0.0, angle::from_radians(-0.1)),
                    degenerate_step);
    CHECK_THROWS_AS(sample_pair(oracle_sine, angle::from_radians(0.5),
                                angle::from_radians(0.0)),
                    degenerate_step);
}

TEST_CASE("halving studies show second-order convergence") {
    const std::vector<convergence_row> first = convergence_study(
        oracle_sine, oracle_cosine, angle::from_radians(1.0),
        angle::from_radians(1e-2), 5, 1);
    REQUIRE(first.size() == 6);
    for (std::size_t i = 1; i < first.size(); ++i) {
        CHECK(first[i].ratio > 3.5);
        CHECK(first[i].ratio < 4.5);
    }

    const real_function neg_sine = [](double x) { return -std::sin(x); };
    const std::vector<convergence_row> second = convergence_study(
        oracle_sine, neg_sine, angle::from_radians(0.7), angle::from_radians(1e-2),
        3, 2);
    for (std::size_t i = 1; i < second.size(); ++i) {
        CHECK(second[i].ratio > 3.5);
        CHECK(second[i].ratio < 4.5);
    }

    CHECK_THROWS_AS(convergence_study(oracle_sine, oracle_cosine,
                                      angle::from_radians(1.0),
                                      angle::from_radians(1e-2), 3, 3),
                    invalid_input);
}

TEST_CASE("oscillator run seeded like the table reproduces it bit for bit") {
    const recursion_output table = generate_recursion_table(
        make_recursion_config(table_mode::historical, 48u, 24));
    const double step = table.table.entries[0].computed_sine; // 0.0654
    const oscillator_run run = integrate_shm(1.0, step, 24, 0.0, step);
    REQUIRE(run.y.size() == 25);
    for (std::size_t n = 1; n <= 24; ++n) {
        CHECK(run.y[n] == table.table.entries[n - 1].computed_sine);
    }
}

TEST_CASE("null initial data stays identically zero") {
    const oscillator_run run = integrate_shm(1.0, 0.1, 50, 0.0, 0.0);
    for (const double y : run.y) {
        CHECK(y == 0.0);
    }
}

TEST_CASE("oscillator input validation and the stability bound") {
    CHECK_THROWS_AS(integrate_shm(1.0, 2.0, 10, 0.0, 0.1), unstable_step);
    CHECK_THROWS_AS(integrate_shm(4.0, 0.5, 10, 0.0, 0.1), unstable_step);
    CHECK_NOTHROW(integrate_shm(1.0, 1.9999, 10, 0.0, 0.1));
    CHECK_THROWS_AS(integrate_shm(1.0, 0.1, 1, 0.0, 0.1), invalid_input);
    CHECK_THROWS_AS(integrate_shm(0.0, 0.1, 10, 0.0, 0.1), invalid_input);
    CHECK_THROWS_AS(integrate_shm(1.0, -0.1, 10, 0.0, 0.1), invalid_input);
}

TEST_CASE("time axis is n * h") {
    const oscillator_run run = integrate_shm(2.0, 0.25, 4, 1.0, std::cos(0.5));
    CHECK(run.time_at(0) == 0.0);
    CHECK(run.time_at(3) == 0.75);
}

TEST_CASE("halving the time step quarters the oscillator error") {
    const auto max_error_over_period = [](std::size_t steps) {
        const double h = 2.0 * pi / static_cast<double>(steps);
        const oscillator_run run = integrate_shm(1.0, h, steps, 1.0, std::cos(h));
        double worst = 0.0;
        for (std::size_t n = 0; n < run.y.size(); ++n) {
            worst = std::max(worst, std::abs(run.y[n] - std::cos(run.time_at(n))));
        }
        return worst;
    };
    const double coarse = max_error_over_period(64);
    const double fine = max_error_over_period(128);
    const double ratio = coarse / fine;
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
}

TEST_CASE("discrete energy is conserved to roundoff") {
    const oscillator_run run = integrate_shm(1.0, 0.1, 10000, 1.0, std::cos(0.1));
    const std::vector<double> energy = discrete_energy(run);
    REQUIRE(energy.size() == 10000);
    CHECK(relative_energy_drift(run) < 1e-9);
}
