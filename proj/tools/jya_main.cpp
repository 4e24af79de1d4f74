// Command-line front end: table generation, comparison against the modern
// reference, central-difference derivative demos, oscillator runs and
// geometry verification. All output is plain deterministic text on stdout;
// warnings go to stderr. Exit codes: 0 success, 1 domain or verification
// failure, 2 usage error.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jya/errors.hpp"
#include "jya/finite_diff.hpp"
#include "jya/geometry.hpp"
#include "jya/sine_table.hpp"
#include "jya/trig.hpp"

namespace {

// Bad option *values* discovered after parsing; reported like parse errors.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void append_formatted(std::string& out, const char* fmt, ...)
    __attribute__((format(printf, 2, 3)));

void append_formatted(std::string& out, const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    out += buf;
}

double parse_number(const std::string& text, const char* what) {
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || text.empty() || !std::isfinite(value)) {
        throw usage_error(std::string(what) + ": expected a number, got '" + text + "'");
    }
    return value;
}

// ---------------------------------------------------------------- table ----

struct table_options {
    std::string preset;
    std::string epsilon_text;
    std::size_t count = 0;
    std::string mode = "historical";
    bool radians = false;
    std::string format = "markdown";
};

void add_table_options(CLI::App* cmd, table_options& opts, bool with_format) {
    auto* preset = cmd->add_option("--preset", opts.preset,
                                   "named grid: aryabhata (pi/48, 24 nodes) or "
                                   "exercise1 (pi/80, 40 nodes)")
                       ->check(CLI::IsMember({"aryabhata", "exercise1"}));
    auto* eps = cmd->add_option("--epsilon", opts.epsilon_text,
                                "grid step: degrees by default, radians with "
                                "--radians, or the literal form pi/<d>");
    auto* count = cmd->add_option("--count", opts.count, "number of grid nodes")
                      ->check(CLI::Range(std::size_t{1}, std::size_t{5000000}));
    cmd->add_option("--mode", opts.mode, "historical or exact generation")
        ->check(CLI::IsMember({"historical", "exact"}));
    cmd->add_flag("--radians", opts.radians, "read numeric --epsilon as radians");
    if (with_format) {
        cmd->add_option("--format", opts.format, "csv or markdown")
            ->check(CLI::IsMember({"csv", "markdown"}));
    }
    preset->excludes(eps)->excludes(count);
    eps->needs(count);
    count->needs(eps);
}

jya::recursion_config config_from(const table_options& opts) {
    const jya::table_mode mode = opts.mode == "exact" ? jya::table_mode::exact
                                                      : jya::table_mode::historical;
    if (!opts.preset.empty()) {
        if (opts.preset == "aryabhata") {
            return jya::make_recursion_config(mode, 48u, 24);
        }
        return jya::make_recursion_config(mode, 80u, 40);
    }
    if (opts.epsilon_text.empty()) {
        throw usage_error("need either --preset or --epsilon with --count");
    }

    if (opts.epsilon_text.rfind("pi/", 0) == 0) {
        const double divisor = parse_number(opts.epsilon_text.substr(3), "--epsilon");
        if (divisor <= 0.0) {
            throw usage_error("--epsilon pi/<d> needs a positive divisor");
        }
        if (std::abs(divisor - std::round(divisor)) <= 1e-9 * divisor) {
            return jya::make_recursion_config(
                mode, static_cast<unsigned>(std::round(divisor)), opts.count);
        }
        return jya::make_recursion_config(
            mode, jya::angle_grid(jya::pi / divisor, opts.count));
    }

    const double value = parse_number(opts.epsilon_text, "--epsilon");
    if (value <= 0.0) {
        throw usage_error("--epsilon must be positive");
    }
    const double eps_radians =
        opts.radians ? value : jya::angle::from_degrees(value).radians();
    return jya::make_recursion_config(mode, jya::angle_grid(eps_radians, opts.count));
}

void warn_if_beyond_quadrant(const jya::sine_table& table) {
    if (table.beyond_quarter_period()) {
        std::fprintf(stderr,
                     "warning: grid extends beyond 90 degrees; the classical "
                     "table deliberately stops there\n");
    }
}

int run_table(const table_options& opts) {
    const jya::recursion_output out =
        jya::generate_recursion_table(config_from(opts));
    warn_if_beyond_quadrant(out.table);
    const jya::table_format fmt = opts.format == "csv" ? jya::table_format::csv
                                                       : jya::table_format::markdown;
    std::fputs(jya::export_table(out.table, fmt).c_str(), stdout);
    return 0;
}

// ------------------------------------------------------------ halfangle ----

struct halfangle_options {
    unsigned halvings = 0;
    std::size_t count = 0; // 0 = full quadrant
    std::string format = "markdown";
};

int run_halfangle(const halfangle_options& opts) {
    const std::size_t quadrant = 3u * (std::size_t{1} << (opts.halvings - 1));
    const std::size_t count = opts.count == 0 ? quadrant : opts.count;
    const jya::angle_grid grid(jya::pi / (3.0 * std::ldexp(1.0, static_cast<int>(opts.halvings))),
                               count);
    const jya::sine_table table = jya::generate_half_angle_table(grid);
    const jya::table_format fmt = opts.format == "csv" ? jya::table_format::csv
                                                       : jya::table_format::markdown;
    std::fputs(jya::export_table(table, fmt).c_str(), stdout);
    return 0;
}

// -------------------------------------------------------------- compare ----

int run_compare(const table_options& opts) {
    const jya::recursion_output out =
        jya::generate_recursion_table(config_from(opts));
    const jya::comparison_report report = jya::compare_with_reference(out.table);
    const bool historical = out.table.historical();

    std::string text;
    append_formatted(text, "mode %s, step %.4f deg, %zu nodes\n",
                     historical ? "historical" : "exact",
                     jya::angle::from_radians(out.table.grid().epsilon).degrees(),
                     report.entries.size());
    append_formatted(text,
                     "index theta_deg  computed  reference  err_arcmin  rsine   ref  delta\n");
    for (const jya::comparison_entry& e : report.entries) {
        append_formatted(text, "%5zu %9.2f %9.4f %10.4f %+11.3f %6ld %5ld %+6ld\n",
                         e.index, e.theta.degrees(), e.computed_sine,
                         e.reference_sine, e.error_minutes, e.computed_rsine,
                         e.reference_rsine, e.rsine_delta);
    }
    append_formatted(text, "max |error|: %.3e sine units (%.3f arcmin) at node %zu\n",
                     report.max_abs_error_sine, report.max_abs_error_minutes,
                     report.max_error_index);
    append_formatted(text, "entries with |rsine delta| > 1: %zu\n",
                     report.rsine_mismatches);
    if (report.beyond_quarter_period) {
        append_formatted(text, "warning: grid extends beyond 90 degrees\n");
    }

    bool pass;
    if (historical) {
        pass = report.rsine_mismatches == 0;
        append_formatted(text, "%s: every rounded Rsine within 1 arcmin of the reference\n",
                         pass ? "PASS" : "FAIL");
    } else {
        pass = report.max_abs_error_sine <= 1e-9;
        append_formatted(text, "%s: max error within 1e-9 sine units\n",
                         pass ? "PASS" : "FAIL");
    }
    std::fputs(text.c_str(), stdout);
    return pass ? 0 : 1;
}

// ------------------------------------------------------------- diffcalc ----

struct diffcalc_options {
    double theta = 0.0;
    double epsilon = 0.0;
    bool radians = false;
    bool textbook = false;
    std::optional<double> f_plus;
    std::optional<double> f_minus;
};

int run_diffcalc(const diffcalc_options& opts) {
    if (opts.epsilon <= 0.0) {
        throw usage_error("--epsilon must be positive");
    }
    const jya::angle theta = opts.radians
                                 ? jya::angle::from_radians(opts.theta)
                                 : jya::angle::from_degrees(opts.theta);
    const jya::angle eps = opts.radians
                               ? jya::angle::from_radians(opts.epsilon)
                               : jya::angle::from_degrees(opts.epsilon);
    const jya::denominator_form form = opts.textbook
                                           ? jya::denominator_form::plain_step
                                           : jya::denominator_form::exact_sine;

    std::string text;
    append_formatted(text, "theta %.2f deg, step %.2f deg, %s denominator\n",
                     theta.degrees(), eps.degrees(),
                     opts.textbook ? "plain-step" : "exact-sine");

    jya::sampled_pair pair;
    if (opts.f_plus.has_value()) {
        pair.theta = theta;
        pair.epsilon = eps;
        pair.f_plus = *opts.f_plus;
        pair.f_minus = *opts.f_minus;
        append_formatted(text, "inputs: f(theta+eps) = %.4f, f(theta-eps) = %.4f\n",
                         pair.f_plus, pair.f_minus);
    } else {
        pair = jya::sample_pair([](double x) { return std::sin(x); }, theta, eps);
    }

    const double first = jya::central_first_derivative(pair, form);
    const double ref_cos = jya::reference_cos(theta);
    append_formatted(text, "first derivative estimate:  %.2f  (%.10f)\n", first, first);
    append_formatted(text, "reference cos(theta):       %.2f  (%.10f)\n", ref_cos,
                     ref_cos);

    if (!opts.f_plus.has_value()) {
        const double second = jya::central_second_derivative(
            [](double x) { return std::sin(x); }, theta, eps, form);
        const double ref_neg_sin = -jya::reference_sin(theta);
        append_formatted(text, "second derivative estimate: %.2f  (%.10f)\n", second,
                         second);
        append_formatted(text, "reference -sin(theta):      %.2f  (%.10f)\n",
                         ref_neg_sin, ref_neg_sin);
    }
    std::fputs(text.c_str(), stdout);
    return 0;
}

// ------------------------------------------------------------------ shm ----

struct shm_options {
    double omega = 0.0;
    double step = 0.0;
    std::size_t steps = 0;
    double y0 = 0.0;
    double y1 = 0.0;
    bool y1_given = false;
};

int run_shm(const shm_options& opts) {
    const double y1 = opts.y1_given ? opts.y1 : opts.omega * opts.step;
    const jya::oscillator_run run =
        jya::integrate_shm(opts.omega, opts.step, opts.steps, opts.y0, y1);

    // Reference: the continuous solution through the same two starting
    // samples, y(t) = y0 cos(wt) + B sin(wt) with y(h) = y1.
    const double wh = run.omega * run.step_h;
    const double b = (y1 - opts.y0 * std::cos(wh)) / std::sin(wh);

    std::string text = "t,y,reference,error\n";
    for (std::size_t n = 0; n < run.y.size(); ++n) {
        const double t = run.time_at(n);
        const double ref =
            opts.y0 * std::cos(run.omega * t) + b * std::sin(run.omega * t);
        append_formatted(text, "%.6f,%.10f,%.10f,%+.3e\n", t, run.y[n], ref,
                         run.y[n] - ref);
    }
    std::fputs(text.c_str(), stdout);
    return 0;
}

// ------------------------------------------------------- verify-geometry ----

struct geometry_options {
    double theta = 0.0;
    double phi = 0.0;
    bool have_theta = false;
    bool have_phi = false;
    bool radians = false;
    std::vector<std::size_t> sweep;
    double tol = 0.0;
    bool tol_given = false;
    bool csv = false;
};

void append_scene_report(std::string& text, const jya::similarity_report& report) {
    append_formatted(text, "angle SBC: %.10f deg  (discrepancy %.3e rad)\n",
                     report.angle_sbc.degrees(), report.angle_discrepancy);
    append_formatted(text, "ratios BS/OP, CS/AP, BC/OA: %.10f, %.10f, %.10f\n",
                     report.ratio_bs_op, report.ratio_cs_ap, report.ratio_bc_oa);
    append_formatted(text, "max ratio discrepancy: %.3e\n", report.max_ratio_discrepancy);
    append_formatted(text, "derived sine difference (BS):    %+.10f\n",
                     report.derived_sine_diff);
    append_formatted(text, "derived cosine difference (-CS): %+.10f\n",
                     report.derived_cosine_diff);
}

int run_verify_geometry(const geometry_options& opts) {
    if (!opts.sweep.empty()) {
        const double tol = opts.tol_given ? opts.tol : 1e-10;
        const std::size_t theta_steps = opts.sweep[0];
        const std::size_t phi_steps = opts.sweep[1];

        if (opts.csv) {
            std::string text =
                "theta_deg,phi_deg,angle_discrepancy,ratio_discrepancy,identity_residual,pass\n";
            for (const auto& [theta, phi] : jya::sweep_grid(theta_steps, phi_steps)) {
                const jya::similarity_report r =
                    jya::measure_similarity(jya::build_scene(theta, phi), tol);
                const double residual = std::max(
                    std::abs(r.derived_sine_diff - jya::sine_diff_rhs(theta, phi)),
                    std::abs(r.derived_cosine_diff - jya::cosine_diff_rhs(theta, phi)));
                append_formatted(text, "%.6f,%.6f,%.3e,%.3e,%.3e,%d\n",
                                 theta.degrees(), phi.degrees(), r.angle_discrepancy,
                                 r.max_ratio_discrepancy, residual, r.passed ? 1 : 0);
            }
            std::fputs(text.c_str(), stdout);
            return 0;
        }

        const jya::sweep_summary summary =
            jya::sweep_verify(theta_steps, phi_steps, tol);
        std::string text;
        append_formatted(text, "sweep: %zu x %zu scenes, tol %.3e\n", theta_steps,
                         phi_steps, tol);
        append_formatted(text, "failures: %zu / %zu\n", summary.failures, summary.total);
        append_formatted(text, "worst discrepancy: %.3e at theta %.2f deg, phi %.2f deg\n",
                         summary.worst_discrepancy, summary.worst_theta.degrees(),
                         summary.worst_phi.degrees());
        append_formatted(text, "worst identity residual: %.3e\n",
                         summary.worst_identity_residual);
        append_formatted(text, "%s\n", summary.failures == 0 ? "PASS" : "FAIL");
        std::fputs(text.c_str(), stdout);
        return summary.failures == 0 ? 0 : 1;
    }

    if (!opts.have_theta || !opts.have_phi) {
        throw usage_error("need --theta and --phi, or --sweep T P");
    }
    const double tol = opts.tol_given ? opts.tol : 1e-12;
    const jya::angle theta = opts.radians ? jya::angle::from_radians(opts.theta)
                                          : jya::angle::from_degrees(opts.theta);
    const jya::angle phi = opts.radians ? jya::angle::from_radians(opts.phi)
                                        : jya::angle::from_degrees(opts.phi);
    const jya::geometry_scene scene = jya::build_scene(theta, phi);

    std::string text;
    append_formatted(text, "scene: theta %.2f deg, phi %.2f deg, tol %.3e\n",
                     theta.degrees(), phi.degrees(), tol);
    try {
        const jya::similarity_report report = jya::verify_similarity(scene, tol);
        append_scene_report(text, report);
        text += "PASS\n";
        std::fputs(text.c_str(), stdout);
        return 0;
    } catch (const jya::similarity_failure& failure) {
        append_scene_report(text, failure.report());
        append_formatted(text, "FAIL: %s\n", failure.what());
        std::fputs(text.c_str(), stdout);
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sine tables by second-difference recursion, with comparison, "
                 "difference calculus and geometric verification tools"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "jya 0.1.0");

    table_options table_opts;
    auto* table_cmd = app.add_subcommand(
        "table", "generate a sine table by the second-difference recursion");
    add_table_options(table_cmd, table_opts, /*with_format=*/true);

    halfangle_options half_opts;
    auto* half_cmd = app.add_subcommand(
        "halfangle", "generate a sine table by halving from the 30/90 degree anchors");
    half_cmd->add_option("--k,--halvings", half_opts.halvings,
                         "number of halvings; the grid step is pi/(3*2^k)")
        ->required()
        ->check(CLI::Range(1u, 20u));
    half_cmd->add_option("--count", half_opts.count,
                         "nodes to emit (default: the full quadrant)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{5000000}));
    half_cmd->add_option("--format", half_opts.format, "csv or markdown")
        ->check(CLI::IsMember({"csv", "markdown"}));

    table_options compare_opts;
    auto* compare_cmd = app.add_subcommand(
        "compare", "compare a generated table against the modern reference");
    add_table_options(compare_cmd, compare_opts, /*with_format=*/false);

    diffcalc_options diff_opts;
    auto* diff_cmd = app.add_subcommand(
        "diffcalc", "central-difference derivative estimates vs the reference");
    diff_cmd->add_option("--theta", diff_opts.theta, "centre angle (degrees)")
        ->required();
    diff_cmd->add_option("--epsilon", diff_opts.epsilon, "half-width (degrees)")
        ->required();
    diff_cmd->add_flag("--radians", diff_opts.radians,
                       "read --theta/--epsilon as radians");
    diff_cmd->add_flag("--textbook-denominator", diff_opts.textbook,
                       "divide by 2*eps / eps^2 instead of the exact sine form");
    auto* fplus = diff_cmd->add_option("--f-plus", diff_opts.f_plus,
                                       "override the sample at theta+eps");
    auto* fminus = diff_cmd->add_option("--f-minus", diff_opts.f_minus,
                                        "override the sample at theta-eps");
    fplus->needs(fminus);
    fminus->needs(fplus);

    shm_options shm_opts;
    auto* shm_cmd = app.add_subcommand(
        "shm", "integrate the harmonic oscillator with the table recurrence");
    shm_cmd->add_option("--omega", shm_opts.omega, "angular frequency")
        ->required()
        ->check(CLI::PositiveNumber);
    shm_cmd->add_option("--step", shm_opts.step, "time step h")
        ->required()
        ->check(CLI::PositiveNumber);
    shm_cmd->add_option("--steps", shm_opts.steps, "number of steps (final index)")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::size_t{50000000}));
    shm_cmd->add_option("--y0", shm_opts.y0, "sample at t = 0 (default 0)");
    auto* y1_opt = shm_cmd->add_option("--y1", shm_opts.y1,
                                       "sample at t = h (default omega*h)");

    geometry_options geo_opts;
    auto* geo_cmd = app.add_subcommand(
        "verify-geometry", "verify the similar-triangle construction numerically");
    auto* theta_opt = geo_cmd->add_option("--theta", geo_opts.theta, "angle of A (degrees)");
    auto* phi_opt = geo_cmd->add_option("--phi", geo_opts.phi, "half-spread of B and C (degrees)");
    geo_cmd->add_flag("--radians", geo_opts.radians, "read angles as radians");
    auto* sweep_opt = geo_cmd->add_option("--sweep", geo_opts.sweep,
                                          "theta and phi step counts for a grid sweep")
                          ->expected(2);
    auto* tol_opt = geo_cmd->add_option(
        "--tol", geo_opts.tol, "tolerance (default 1e-12 single scene, 1e-10 sweep)");
    geo_cmd->add_flag("--csv", geo_opts.csv, "emit per-scene CSV instead of a summary")
        ->needs(sweep_opt);
    sweep_opt->excludes(theta_opt)->excludes(phi_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // --help/--version exit 0, real parse errors 2
    }

    try {
        if (table_cmd->parsed()) {
            return run_table(table_opts);
        }
        if (half_cmd->parsed()) {
            return run_halfangle(half_opts);
        }
        if (compare_cmd->parsed()) {
            return run_compare(compare_opts);
        }
        if (diff_cmd->parsed()) {
            return run_diffcalc(diff_opts);
        }
        if (shm_cmd->parsed()) {
            shm_opts.y1_given = y1_opt->count() > 0;
            return run_shm(shm_opts);
        }
        if (geo_cmd->parsed()) {
            geo_opts.have_theta = theta_opt->count() > 0;
            geo_opts.have_phi = phi_opt->count() > 0;
            geo_opts.tol_given = tol_opt->count() > 0;
            return run_verify_geometry(geo_opts);
        }
    } catch (const usage_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const jya::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
