#pragma once

// Sine-table generation by the second-difference recursion and by the
// half-angle construction, plus comparison against the modern reference
// and deterministic CSV / markdown export.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "jya/trig.hpp"

namespace jya {

// Uniform angular grid: nodes at epsilon, 2*epsilon, ..., count*epsilon.
// The zero node is implicit (sin 0 = 0) and never stored.
struct angle_grid {
    double epsilon = 0.0;   // step in radians
    std::size_t count = 0;  // number of nodes past zero

    // Default-constructed grids are empty placeholders; the validating
    // constructor is the supported way to build a usable grid.
    angle_grid() = default;
    angle_grid(double epsilon_radians, std::size_t node_count);

    angle node(std::size_t n) const; // n in [1, count]
    bool beyond_quarter_period() const;
};

enum class table_mode { historical, exact };

// Everything the recursion  d_n = d_{n-1} - K s_{n-1},  s_n = s_{n-1} + d_n
// needs. Historical mode bundles the period's three approximations in one
// switch: pi = 3.1416, seed d_1 = eps, K = eps^2 -- with eps being the
// four-decimal working value of the step (225' -> 0.0654), since the whole
// computation was carried out at that print precision. Exact mode uses the
// machine-precision step with seed sin(eps) and K = (2 sin(eps/2))^2, which
// makes the recursion an exact identity rather than an approximation.
struct recursion_config {
    table_mode mode = table_mode::exact;
    angle_grid grid;
    double pi_value = pi;              // 3.1416 in historical mode
    double step = 0.0;                 // working step: quantized in historical mode
    double seed_first_difference = 0.0; // d_1
    double coefficient = 0.0;           // K
};

// Build a config from a grid. In historical mode, grids whose step is an
// integer fraction pi/d are recognized and the working step computed as the
// four-decimal rounding of pi_value/d, so the degree and divisor spellings
// of the same grid agree bit for bit.
recursion_config make_recursion_config(table_mode mode, const angle_grid& grid);
// Canonical "divide the half turn into `divisor` arcs" construction.
recursion_config make_recursion_config(table_mode mode, unsigned divisor,
                                       std::size_t node_count);

struct sine_table_entry {
    std::size_t index = 0;       // 1-based node number
    angle theta;                 // true node angle
    double computed_sine = 0.0;  // unit-radius value from the generator
    rsine_value rsine;           // scaled to the 3438' radius
    double reference_sine = 0.0;
    double abs_error = 0.0;      // |computed - reference|
    double error_minutes = 0.0;  // abs_error * 3438
};

// Provenance marker for tables built by the half-angle construction.
struct half_angle_descriptor {
    angle_grid grid;
    unsigned halvings = 0; // k in  eps = pi / (3 * 2^k)
};

struct sine_table {
    std::variant<recursion_config, half_angle_descriptor> provenance;
    std::vector<sine_table_entry> entries;

    const angle_grid& grid() const;
    bool historical() const;
    bool beyond_quarter_period() const;
};

// First differences d_n = s_n - s_{n-1} (with s_0 = 0) and second
// differences dd_n = d_n - d_{n-1}; second[j] corresponds to node j+2.
struct difference_series {
    std::vector<double> first;
    std::vector<double> second;
};

struct recursion_output {
    sine_table table;
    difference_series differences;
};

recursion_output generate_recursion_table(const recursion_config& config);

// Max residual of the table's first differences against the closed form
// 2 sin(eps/2) cos((n - 1/2) eps). Tiny (float noise) for exact-mode and
// half-angle tables; throws mode_mismatch for historical tables, whose
// differences deliberately deviate from the identity.
double first_difference_check(const sine_table& table);

// Max residual of dd_n + (2 sin(eps/2))^2 s_{n-1} over n >= 2; zero for
// series too short to have second differences. Same mode rule as above.
double second_difference_check(const difference_series& series,
                               const sine_table& table);

// Fill the grid using only the anchors sin 30 = 1/2 and sin 90 = 1 plus the
// halving rule sin t = sqrt((1 - cos 2t)/2), complements and the Pythagorean
// identity -- no trig calls. The grid step must be pi/(3 * 2^k), k >= 1, and
// the grid must stay within the quadrant; anything else is unsupported.
sine_table generate_half_angle_table(const angle_grid& grid);

struct comparison_entry {
    std::size_t index = 0;
    angle theta;
    double computed_sine = 0.0;
    double reference_sine = 0.0;
    double error_sine = 0.0;    // signed, computed - reference
    double error_minutes = 0.0; // signed, error_sine * 3438
    long computed_rsine = 0;
    long reference_rsine = 0;
    long rsine_delta = 0;       // computed_rsine - reference_rsine
};

struct comparison_report {
    std::vector<comparison_entry> entries;
    double max_abs_error_sine = 0.0;
    double max_abs_error_minutes = 0.0;
    std::size_t max_error_index = 0;  // node index of the largest error, 0 if empty
    std::size_t rsine_mismatches = 0; // entries with |rsine_delta| > 1
    bool beyond_quarter_period = false;
};

// Never throws; an empty table yields an empty report.
comparison_report compare_with_reference(const sine_table& table);

enum class table_format { csv, markdown };

// Deterministic text. CSV columns:
//   index,angle_deg,computed_sine,rsine_minutes,reference_sine,error_minutes
// with degrees at 2 decimals and sines at 4, the table's print precision.
// Markdown mirrors the classical four-column comparison layout.
std::string export_table(const sine_table& table, table_format format);

} // namespace jya
