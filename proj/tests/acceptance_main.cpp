// Acceptance suite: exercises every headline requirement end to end and
// prints one PASS/FAIL line per criterion. The process exit code is the
// number of failed criteria, so 0 means fully green.
//
// Two criteria are expected to stay red on purpose: the classical arcminute
// column quotes three hand-adjusted entries (rows 6, 7, 24) that the raw
// recursion provably does not produce, and the 90-degree entry of that same
// table rounds two arcminutes above the modern value because the historical
// seed sin(eps) = eps overshoots by eps^2/8. The suite reports both honestly
// instead of special-casing them away.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "jya/finite_diff.hpp"
#include "jya/geometry.hpp"
#include "jya/sine_table.hpp"
#include "jya/trig.hpp"

using namespace jya;

namespace {

int failures = 0;

void report(const char* name, bool ok, const std::string& detail = "") {
    if (!ok) {
        ++failures;
    }
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name,
                detail.empty() ? "" : " -- ", detail.c_str());
}

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

struct cli_result {
    int exit_code = -1;
    std::string output;
};

cli_result run_cli(const std::string& args) {
    cli_result result;
    const std::string command = std::string(JYA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        result.output.append(buf, n);
    }
    const int status = pclose(pipe);
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    return result;
}

// ---- 1: the classical 24-row table ----------------------------------------

void check_classical_table() {
    static const char* const published_sines[24] = {
        "0.0654", "0.1305", "0.1951", "0.2588", "0.3214", "0.3827",
        "0.4423", "0.5000", "0.5556", "0.6088", "0.6594", "0.7072",
        "0.7519", "0.7935", "0.8316", "0.8662", "0.8971", "0.9241",
        "0.9472", "0.9662", "0.9812", "0.9919", "0.9983", "1.0005"};
    static const long published_minutes[24] = {
        225,  449,  671,  890,  1105, 1315, 1520, 1719, 1910, 2093, 2267, 2431,
        2585, 2728, 2859, 2978, 3084, 3177, 3256, 3322, 3373, 3410, 3432, 3439};

    const recursion_output out =
        generate_recursion_table(make_recursion_config(table_mode::historical, 48u, 24));

    std::size_t sine_matches = 0;
    std::string minute_diffs;
    for (std::size_t i = 0; i < 24; ++i) {
        const sine_table_entry& e = out.table.entries[i];
        if (fmt("%.4f", e.computed_sine) == published_sines[i]) {
            ++sine_matches;
        }
        if (e.rsine.rounded != published_minutes[i]) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%srow %zu: %ld vs %ld",
                          minute_diffs.empty() ? "" : "; ", i + 1, e.rsine.rounded,
                          published_minutes[i]);
            minute_diffs += buf;
        }
    }

    std::string detail = "four-decimal sines: " + std::to_string(sine_matches) + "/24 match";
    if (!minute_diffs.empty()) {
        detail += "; arcminutes diverge (" + minute_diffs +
                  ") -- the classical column hand-adjusts those three entries, the raw "
                  "recursion rounds them one minute high";
    }
    report("classical table: 24 four-decimal sines and the quoted arcminute column",
           sine_matches == 24 && minute_diffs.empty(), detail);
}

// ---- 2: rounded Rsines within one arcminute of the modern value -----------

void check_one_arcminute_agreement() {
    const recursion_output out =
        generate_recursion_table(make_recursion_config(table_mode::historical, 48u, 24));
    const comparison_report cmp = compare_with_reference(out.table);

    std::string detail;
    for (const comparison_entry& e : cmp.entries) {
        if (std::labs(e.rsine_delta) > 1) {
            char buf[128];
            std::snprintf(buf, sizeof buf,
                          "%snode %zu (%.0f deg): %ld vs %ld (delta %+ld)",
                          detail.empty() ? "" : "; ", e.index, e.theta.degrees(),
                          e.computed_rsine, e.reference_rsine, e.rsine_delta);
            detail += buf;
        }
    }
    if (!detail.empty()) {
        detail += " -- the historical seed sin(eps) = eps overshoots by eps^2/8, about "
                  "1.8 arcmin at 90 degrees";
    }
    report("historical table: every rounded Rsine within one arcminute of the modern value",
           cmp.rsine_mismatches == 0, detail);
}

// ---- 3: finer pi/80 grid stays under 5e-3 ---------------------------------

void check_finer_grid_bound() {
    const recursion_output out =
        generate_recursion_table(make_recursion_config(table_mode::historical, 80u, 40));

    double max_err = 0.0;
    std::size_t argmax = 0;
    for (const sine_table_entry& e : out.table.entries) {
        if (e.abs_error > max_err) {
            max_err = e.abs_error;
            argmax = e.index;
        }
    }
    const double err_90 = out.table.entries.back().abs_error;

    // frozen from an independent oracle run of the same recursion
    const double golden_max = 6.162605817738864e-4;
    const std::size_t golden_argmax = 24;

    const bool ok = max_err < 5e-3 && argmax == golden_argmax &&
                    std::abs(max_err - golden_max) <= 1e-15;
    report("pi/80 grid: historical deviation stays below 5e-3",
           ok,
           "max " + fmt("%.4e", max_err) + " at node " + std::to_string(argmax) +
               " of 40 (" + fmt("%.2f", argmax * 2.25) + " deg); the 90-degree node is "
               "quieter at " + fmt("%.4e", err_90));
}

// ---- 4: the worked two-decimal quotient through the CLI -------------------

void check_worked_quotient() {
    const cli_result r = run_cli(
        "diffcalc --theta 33.5 --epsilon 3.5 --f-plus 0.6 --f-minus 0.5 "
        "--textbook-denominator");
    const bool printed_082 =
        r.output.find("first derivative estimate:  0.82") != std::string::npos;
    const bool printed_083 =
        r.output.find("reference cos(theta):       0.83") != std::string::npos;
    const bool denominator_0122 =
        fmt("%.3f", 2.0 * angle::from_degrees(3.5).radians()) == "0.122";
    report("worked quotient: (0.60 - 0.50) / 0.122 prints 0.82 against cos = 0.83",
           r.exit_code == 0 && printed_082 && printed_083 && denominator_0122);
}

// ---- 5: identity fuzz and exact-denominator operators ---------------------

void check_identities_and_operators() {
    std::mt19937_64 rng(0xA5F00DULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    double worst_identity = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double t = unit(rng) * (pi / 2.0);
        const double f = unit(rng) * t;
        const angle theta = angle::from_radians(t);
        const angle phi = angle::from_radians(f);
        worst_identity = std::max(
            {worst_identity, std::abs(sine_diff(theta, phi) - sine_diff_rhs(theta, phi)),
             std::abs(cosine_diff(theta, phi) - cosine_diff_rhs(theta, phi))});
    }

    // eps stays >= 0.05: the second difference cancels ~1e-16 of roundoff in
    // the numerator, so microscopic steps amplify noise past any tolerance
    const auto sine_fn = [](double x) { return std::sin(x); };
    double worst_operator = 0.0;
    for (const double eps : {0.05, 0.1, pi / 12.0, 0.5, pi / 4.0}) {
        for (const double t : {0.2, 0.5, 0.8, 1.1, 1.4}) {
            const angle theta = angle::from_radians(t);
            const angle step = angle::from_radians(eps);
            worst_operator = std::max(
                {worst_operator,
                 std::abs(central_first_derivative(sine_fn, theta, step) - std::cos(t)),
                 std::abs(central_second_derivative(sine_fn, theta, step) + std::sin(t))});
        }
    }

    report("difference identities (1e4 random draws, tol 1e-13) and exact-denominator "
           "operators on sine (tol 1e-12, eps up to pi/4)",
           worst_identity <= 1e-13 && worst_operator <= 1e-12,
           "worst identity residual " + fmt("%.2e", worst_identity) +
               ", worst operator residual " + fmt("%.2e", worst_operator));
}

// ---- 6: similar-triangle sweep --------------------------------------------

void check_geometry_sweep() {
    const sweep_summary summary = sweep_verify(100, 100, 1e-10);
    report("geometric construction: 100 x 100 sweep passes at 1e-10 and the measured "
           "differences match the algebraic forms to 1e-12",
           summary.failures == 0 && summary.worst_identity_residual <= 1e-12,
           "failures " + std::to_string(summary.failures) + "/" +
               std::to_string(summary.total) + ", worst discrepancy " +
               fmt("%.2e", summary.worst_discrepancy) + ", worst identity residual " +
               fmt("%.2e", summary.worst_identity_residual));
}

// ---- 7: half-angle table vs exact recursion and the reference -------------

void check_half_angle_table() {
    const sine_table half = generate_half_angle_table(angle_grid(pi / 48.0, 24));
    const sine_table exact =
        generate_recursion_table(make_recursion_config(table_mode::exact, 48u, 24)).table;

    double vs_recursion = 0.0;
    double vs_reference = 0.0;
    for (std::size_t i = 0; i < half.entries.size(); ++i) {
        vs_recursion = std::max(vs_recursion,
                                std::abs(half.entries[i].computed_sine -
                                         exact.entries[i].computed_sine));
        vs_reference = std::max(vs_reference, half.entries[i].abs_error);
    }
    report("half-angle table on pi/48: within 1e-10 of the exact recursion and 1e-12 "
           "of the reference",
           vs_recursion <= 1e-10 && vs_reference <= 1e-12,
           "vs recursion " + fmt("%.2e", vs_recursion) + ", vs reference " +
               fmt("%.2e", vs_reference));
}

// ---- 8: second-order convergence ------------------------------------------

void check_convergence_orders() {
    const auto sine_fn = [](double x) { return std::sin(x); };
    const auto cosine_fn = [](double x) { return std::cos(x); };
    const auto neg_sine_fn = [](double x) { return -std::sin(x); };

    const auto in_band = [](const std::vector<convergence_row>& rows) {
        return std::all_of(rows.begin() + 1, rows.end(), [](const convergence_row& r) {
            return r.ratio > 3.5 && r.ratio < 4.5;
        });
    };
    const std::vector<convergence_row> first = convergence_study(
        sine_fn, cosine_fn, angle::from_radians(1.0), angle::from_radians(1e-2), 5, 1);
    const std::vector<convergence_row> second = convergence_study(
        sine_fn, neg_sine_fn, angle::from_radians(0.7), angle::from_radians(1e-2), 3, 2);

    const auto oscillator_error = [](std::size_t steps) {
        const double h = 2.0 * pi / static_cast<double>(steps);
        const oscillator_run run = integrate_shm(1.0, h, steps, 1.0, std::cos(h));
        double worst = 0.0;
        for (std::size_t n = 0; n < run.y.size(); ++n) {
            worst = std::max(worst, std::abs(run.y[n] - std::cos(run.time_at(n))));
        }
        return worst;
    };
    const double shm_ratio = oscillator_error(64) / oscillator_error(128);

    report("second-order convergence: operator halving ratios and the oscillator "
           "h vs h/2 ratio sit in [3.5, 4.5]",
           in_band(first) && in_band(second) && shm_ratio > 3.5 && shm_ratio < 4.5,
           "oscillator ratio " + fmt("%.4f", shm_ratio));
}

} // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();

    check_classical_table();
    check_one_arcminute_agreement();
    check_finer_grid_bound();
    check_worked_quotient();
    check_identities_and_operators();
    check_geometry_sweep();
    check_half_angle_table();
    check_convergence_orders();

    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                  start)
            .count();
    report("whole suite finishes inside the one-second budget", elapsed_ms < 1000.0,
           fmt("%.0f", elapsed_ms) + " ms");

    std::printf("%d of 9 checks failed\n", failures);
    return failures;
}
