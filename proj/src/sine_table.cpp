#include "jya/sine_table.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <utility>

#include "jya/errors.hpp"

namespace jya {

namespace {

constexpr double historical_pi = 3.1416;

void require_usable_grid(const angle_grid& grid) {
    if (grid.count == 0) {
        throw empty_grid("grid has no nodes");
    }
    if (!std::isfinite(grid.epsilon) || grid.epsilon <= 0.0) {
        throw invalid_config("grid step must be positive and finite");
    }
}

// If eps is (within float noise) an integer fraction pi/d, return d, else 0.
unsigned integer_divisor_of_pi(double eps) {
    const double d = pi / eps;
    if (d < 1.0 || d > 1e9) {
        return 0;
    }
    const double nearest = std::round(d);
    if (std::abs(d - nearest) <= 1e-9 * nearest) {
        return static_cast<unsigned>(nearest);
    }
    return 0;
}

double historical_step_for(const angle_grid& grid) {
    // The 499 CE computation worked at four printed decimals with pi taken
    // as 3.1416; the step actually used is that rounding (225' -> 0.0654).
    double step;
    if (const unsigned divisor = integer_divisor_of_pi(grid.epsilon)) {
        step = round_to_four_decimals(historical_pi / divisor);
    } else {
        step = round_to_four_decimals(grid.epsilon * historical_pi / pi);
    }
    if (step <= 0.0) {
        throw invalid_config(
            "step is below the historical four-decimal working precision");
    }
    return step;
}

std::size_t require_same_length(const difference_series& series,
                                const sine_table& table) {
    if (series.first.size() != table.entries.size()) {
        throw invalid_input("difference series does not match the table length");
    }
    return series.first.size();
}

// The grid step, after checking the table is one the identity checks apply to.
double exact_check_step(const sine_table& table) {
    if (table.historical()) {
        throw mode_mismatch(
            "difference residuals assume exact generation; a historical table "
            "deviates from the identities by design");
    }
    return table.grid().epsilon;
}

void append_formatted(std::string& out, const char* fmt, ...)
    __attribute__((format(printf, 2, 3)));

void append_formatted(std::string& out, const char* fmt, ...) {
    char buf[160];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    out += buf;
}

sine_table_entry make_entry(std::size_t index, angle theta, double computed) {
    sine_table_entry e;
    e.index = index;
    e.theta = theta;
    e.computed_sine = computed;
    e.rsine = to_rsine(computed);
    e.reference_sine = reference_sin(theta);
    e.abs_error = std::abs(computed - e.reference_sine);
    e.error_minutes = e.abs_error * rsine_radius;
    return e;
}

} // namespace

angle_grid::angle_grid(double epsilon_radians, std::size_t node_count) {
    if (node_count == 0) {
        throw empty_grid("grid needs at least one node");
    }
    if (!std::isfinite(epsilon_radians) || epsilon_radians <= 0.0) {
        throw invalid_config("grid step must be positive and finite");
    }
    epsilon = epsilon_radians;
    count = node_count;
}

angle angle_grid::node(std::size_t n) const {
    if (n < 1 || n > count) {
        throw invalid_input("grid node index out of range");
    }
    return angle::from_radians(static_cast<double>(n) * epsilon);
}

bool angle_grid::beyond_quarter_period() const {
    return count > 0 && static_cast<double>(count) * epsilon > pi / 2.0 + 1e-9;
}

recursion_config make_recursion_config(table_mode mode, const angle_grid& grid) {
    require_usable_grid(grid);
    recursion_config config;
    config.mode = mode;
    config.grid = grid;
    if (mode == table_mode::historical) {
        config.pi_value = historical_pi;
        config.step = historical_step_for(grid);
        config.seed_first_difference = config.step;
        config.coefficient = config.step * config.step;
    } else {
        config.pi_value = pi;
        config.step = grid.epsilon;
        config.seed_first_difference = std::sin(config.step);
        const double half_chord = 2.0 * std::sin(config.step / 2.0);
        config.coefficient = half_chord * half_chord;
    }
    return config;
}

recursion_config make_recursion_config(table_mode mode, unsigned divisor,
                                       std::size_t node_count) {
    if (divisor == 0) {
        throw invalid_config("divisor must be positive");
    }
    return make_recursion_config(mode, angle_grid(pi / divisor, node_count));
}

const angle_grid& sine_table::grid() const {
    if (const auto* config = std::get_if<recursion_config>(&provenance)) {
        return config->grid;
    }
    return std::get<half_angle_descriptor>(provenance).grid;
}

bool sine_table::historical() const {
    const auto* config = std::get_if<recursion_config>(&provenance);
    return config != nullptr && config->mode == table_mode::historical;
}

bool sine_table::beyond_quarter_period() const {
    return grid().beyond_quarter_period();
}

recursion_output generate_recursion_table(const recursion_config& config) {
    require_usable_grid(config.grid);
    if (!std::isfinite(config.step) || config.step <= 0.0 ||
        !std::isfinite(config.seed_first_difference) ||
        !std::isfinite(config.coefficient)) {
        throw invalid_config("recursion constants are not usable");
    }

    recursion_output out;
    out.table.provenance = config;
    out.table.entries.reserve(config.grid.count);
    out.differences.first.reserve(config.grid.count);

    // d_n = d_{n-1} - K s_{n-1}, s_n = s_{n-1} + d_n: the literal rule sums
    // all previous first differences, but keeping s as a running sum makes
    // every step O(1) and is the same arithmetic.
    double delta = config.seed_first_difference;
    double s = delta;
    out.table.entries.push_back(make_entry(1, config.grid.node(1), s));
    out.differences.first.push_back(delta);
    for (std::size_t n = 2; n <= config.grid.count; ++n) {
        delta -= config.coefficient * s;
        s += delta;
        out.table.entries.push_back(make_entry(n, config.grid.node(n), s));
        out.differences.first.push_back(delta);
        const std::size_t i = out.differences.first.size() - 1;
        out.differences.second.push_back(out.differences.first[i] -
                                         out.differences.first[i - 1]);
    }
    return out;
}

double first_difference_check(const sine_table& table) {
    if (table.entries.empty()) {
        return 0.0;
    }
    const double eps = exact_check_step(table);
    const double half_chord = 2.0 * std::sin(eps / 2.0);
    double worst = 0.0;
    double prev = 0.0;
    for (const sine_table_entry& entry : table.entries) {
        const double n = static_cast<double>(entry.index);
        const double closed = half_chord * std::cos((n - 0.5) * eps);
        worst = std::max(worst, std::abs((entry.computed_sine - prev) - closed));
        prev = entry.computed_sine;
    }
    return worst;
}

double second_difference_check(const difference_series& series,
                               const sine_table& table) {
    const std::size_t n = require_same_length(series, table);
    if (n < 2) {
        return 0.0; // no second differences to test
    }
    const double eps = exact_check_step(table);
    const double half_chord = 2.0 * std::sin(eps / 2.0);
    const double k = half_chord * half_chord;
    double worst = 0.0;
    for (std::size_t j = 0; j < series.second.size(); ++j) {
        // second[j] is dd at node j+2; the identity pairs it with s_{j+1},
        // which is entries[j].
        worst = std::max(
            worst, std::abs(series.second[j] + k * table.entries[j].computed_sine));
    }
    return worst;
}

sine_table generate_half_angle_table(const angle_grid& grid) {
    require_usable_grid(grid);

    // Recover k from eps = pi / (3 * 2^k).
    const double ratio = pi / (3.0 * grid.epsilon);
    const double k_real = std::log2(ratio);
    const long k = std::lround(k_real);
    const bool step_ok = k >= 1 && k <= 24 &&
                         std::abs(grid.epsilon * 3.0 * std::ldexp(1.0, static_cast<int>(k)) / pi - 1.0) < 1e-12;
    if (!step_ok) {
        throw unsupported_grid(
            "half-angle construction needs a step of pi/(3*2^k) with k >= 1 "
            "(reachable by halving from the 30 and 90 degree anchors)");
    }

    const std::size_t quadrant = 3u * (static_cast<std::size_t>(1) << (k - 1));
    if (grid.count > quadrant) {
        throw unsupported_grid(
            "grid extends past 90 degrees; halving and complements cannot "
            "reach nodes outside the quadrant");
    }

    // v[m] = sin(m eps) for m = 0..quadrant; fill from the anchors alone.
    std::vector<double> v(quadrant + 1, 0.0);
    std::vector<char> known(quadrant + 1, 0);
    v[0] = 0.0;
    known[0] = 1;
    v[quadrant] = 1.0; // sin 90
    known[quadrant] = 1;
    v[quadrant / 3] = 0.5; // sin 30
    known[quadrant / 3] = 1;

    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (std::size_t m = 1; m < quadrant; ++m) {
            if (known[m]) {
                continue;
            }
            double value;
            if (2 * m <= quadrant && known[quadrant - 2 * m]) {
                // halving, with cos(2t) read off the complement node
                value = std::sqrt((1.0 - v[quadrant - 2 * m]) / 2.0);
            } else if (2 * m <= quadrant && known[2 * m]) {
                // halving, with cos(2t) from the Pythagorean identity
                const double cos2t = std::sqrt(1.0 - v[2 * m] * v[2 * m]);
                value = std::sqrt((1.0 - cos2t) / 2.0);
            } else if (known[quadrant - m]) {
                // complement plus Pythagorean identity
                value = std::sqrt(1.0 - v[quadrant - m] * v[quadrant - m]);
            } else {
                continue;
            }
            v[m] = value;
            known[m] = 1;
            progressed = true;
        }
    }
    for (std::size_t m = 1; m <= grid.count; ++m) {
        if (!known[m]) {
            throw unsupported_grid(
                "halving scheme left unreachable holes in the grid");
        }
    }

    sine_table table;
    table.provenance = half_angle_descriptor{grid, static_cast<unsigned>(k)};
    table.entries.reserve(grid.count);
    for (std::size_t m = 1; m <= grid.count; ++m) {
        table.entries.push_back(make_entry(m, grid.node(m), v[m]));
    }
    return table;
}

comparison_report compare_with_reference(const sine_table& table) {
    comparison_report report;
    report.beyond_quarter_period = !table.entries.empty() && table.beyond_quarter_period();
    report.entries.reserve(table.entries.size());
    for (const sine_table_entry& entry : table.entries) {
        comparison_entry c;
        c.index = entry.index;
        c.theta = entry.theta;
        c.computed_sine = entry.computed_sine;
        c.reference_sine = entry.reference_sine;
        c.error_sine = entry.computed_sine - entry.reference_sine;
        c.error_minutes = c.error_sine * rsine_radius;
        c.computed_rsine = entry.rsine.rounded;
        c.reference_rsine = to_rsine(entry.reference_sine).rounded;
        c.rsine_delta = c.computed_rsine - c.reference_rsine;
        if (std::abs(c.error_sine) > report.max_abs_error_sine) {
            report.max_abs_error_sine = std::abs(c.error_sine);
            report.max_error_index = c.index;
        }
        if (std::labs(c.rsine_delta) > 1) {
            ++report.rsine_mismatches;
        }
        report.entries.push_back(c);
    }
    report.max_abs_error_minutes = report.max_abs_error_sine * rsine_radius;
    return report;
}

std::string export_table(const sine_table& table, table_format format) {
    std::string out;
    if (format == table_format::csv) {
        out += "index,angle_deg,computed_sine,rsine_minutes,reference_sine,error_minutes\n";
        for (const sine_table_entry& e : table.entries) {
            append_formatted(out, "%zu,%.2f,%.4f,%ld,%.4f,%.3f\n", e.index,
                             e.theta.degrees(), e.computed_sine, e.rsine.rounded,
                             e.reference_sine, e.error_minutes);
        }
    } else {
        out += "| theta (deg) | computed sine | Rsine (arcmin) | reference sine |\n";
        out += "|---:|---:|---:|---:|\n";
        for (const sine_table_entry& e : table.entries) {
            append_formatted(out, "| %.2f | %.4f | %ld | %.4f |\n",
                             e.theta.degrees(), e.computed_sine, e.rsine.rounded,
                             e.reference_sine);
        }
    }
    return out;
}

} // namespace jya
