// Python bindings for the jya core: table generation, identities,
// difference operators, the oscillator integrator and the geometry checks.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jya/errors.hpp"
#include "jya/finite_diff.hpp"
#include "jya/geometry.hpp"
#include "jya/sine_table.hpp"
#include "jya/trig.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sine tables by second-difference recursion, difference calculus "
              "operators, and numeric verification of the difference identities";

    m.attr("pi") = jya::pi;
    m.attr("rsine_radius") = jya::rsine_radius;
    m.attr("arcminutes_per_radian") = jya::arcminutes_per_radian;

    static py::exception<jya::error> base_error(m, "Error");
    static py::exception<jya::verification_failure> verification_error(
        m, "VerificationFailure", base_error);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const jya::verification_failure& e) {
            py::set_error(verification_error, e.what());
        } catch (const jya::error& e) {
            py::set_error(base_error, e.what());
        }
    });

    py::class_<jya::angle>(m, "angle")
        .def(py::init(&jya::angle::from_radians), py::arg("radians"))
        .def_static("from_radians", &jya::angle::from_radians)
        .def_static("from_degrees", &jya::angle::from_degrees)
        .def_property_readonly("radians", &jya::angle::radians)
        .def_property_readonly("degrees", &jya::angle::degrees)
        .def("__repr__", [](const jya::angle& a) {
            return "angle.from_radians(" + std::to_string(a.radians()) + ")";
        });
    py::implicitly_convertible<py::float_, jya::angle>();
    py::implicitly_convertible<py::int_, jya::angle>();

    py::class_<jya::rsine_value>(m, "rsine_value")
        .def_readonly("raw", &jya::rsine_value::raw)
        .def_readonly("rounded", &jya::rsine_value::rounded)
        .def("__repr__", [](const jya::rsine_value& r) {
            return "rsine_value(raw=" + std::to_string(r.raw) +
                   ", rounded=" + std::to_string(r.rounded) + ")";
        });

    m.def("to_rsine", &jya::to_rsine, py::arg("sine_value"));
    m.def("reference_sin", &jya::reference_sin, py::arg("theta"));
    m.def("reference_cos", &jya::reference_cos, py::arg("theta"));
    m.def("sine_diff", &jya::sine_diff, py::arg("theta"), py::arg("phi"));
    m.def("sine_diff_rhs", &jya::sine_diff_rhs, py::arg("theta"), py::arg("phi"));
    m.def("cosine_diff", &jya::cosine_diff, py::arg("theta"), py::arg("phi"));
    m.def("cosine_diff_rhs", &jya::cosine_diff_rhs, py::arg("theta"), py::arg("phi"));
    m.def("round_to_four_decimals", &jya::round_to_four_decimals, py::arg("x"));

    py::enum_<jya::table_mode>(m, "table_mode")
        .value("historical", jya::table_mode::historical)
        .value("exact", jya::table_mode::exact);

    py::class_<jya::angle_grid>(m, "angle_grid")
        .def(py::init<double, std::size_t>(), py::arg("epsilon_radians"),
             py::arg("node_count"))
        .def_readonly("epsilon", &jya::angle_grid::epsilon)
        .def_readonly("count", &jya::angle_grid::count)
        .def("node", &jya::angle_grid::node, py::arg("n"))
        .def("beyond_quarter_period", &jya::angle_grid::beyond_quarter_period);

    py::class_<jya::recursion_config>(m, "recursion_config")
        .def_readonly("mode", &jya::recursion_config::mode)
        .def_readonly("grid", &jya::recursion_config::grid)
        .def_readonly("pi_value", &jya::recursion_config::pi_value)
        .def_readonly("step", &jya::recursion_config::step)
        .def_readonly("seed_first_difference",
                      &jya::recursion_config::seed_first_difference)
        .def_readonly("coefficient", &jya::recursion_config::coefficient);

    m.def("make_recursion_config",
          py::overload_cast<jya::table_mode, const jya::angle_grid&>(
              &jya::make_recursion_config),
          py::arg("mode"), py::arg("grid"));
    m.def("make_recursion_config",
          py::overload_cast<jya::table_mode, unsigned, std::size_t>(
              &jya::make_recursion_config),
          py::arg("mode"), py::arg("divisor"), py::arg("node_count"));

    py::class_<jya::sine_table_entry>(m, "sine_table_entry")
        .def_readonly("index", &jya::sine_table_entry::index)
        .def_readonly("theta", &jya::sine_table_entry::theta)
        .def_readonly("computed_sine", &jya::sine_table_entry::computed_sine)
        .def_readonly("rsine", &jya::sine_table_entry::rsine)
        .def_readonly("reference_sine", &jya::sine_table_entry::reference_sine)
        .def_readonly("abs_error", &jya::sine_table_entry::abs_error)
        .def_readonly("error_minutes", &jya::sine_table_entry::error_minutes);

    py::class_<jya::half_angle_descriptor>(m, "half_angle_descriptor")
        .def_readonly("grid", &jya::half_angle_descriptor::grid)
        .def_readonly("halvings", &jya::half_angle_descriptor::halvings);

    py::class_<jya::sine_table>(m, "sine_table")
        .def_readonly("entries", &jya::sine_table::entries)
        .def_property_readonly("grid", &jya::sine_table::grid)
        .def("historical", &jya::sine_table::historical)
        .def("beyond_quarter_period", &jya::sine_table::beyond_quarter_period)
        .def("__len__", [](const jya::sine_table& t) { return t.entries.size(); });

    py::class_<jya::difference_series>(m, "difference_series")
        .def_readonly("first", &jya::difference_series::first)
        .def_readonly("second", &jya::difference_series::second);

    py::class_<jya::recursion_output>(m, "recursion_output")
        .def_readonly("table", &jya::recursion_output::table)
        .def_readonly("differences", &jya::recursion_output::differences);

    m.def("generate_recursion_table", &jya::generate_recursion_table,
          py::arg("config"));
    m.def("first_difference_check", &jya::first_difference_check, py::arg("table"));
    m.def("second_difference_check", &jya::second_difference_check,
          py::arg("series"), py::arg("table"));
    m.def("generate_half_angle_table", &jya::generate_half_angle_table,
          py::arg("grid"));

    py::class_<jya::comparison_entry>(m, "comparison_entry")
        .def_readonly("index", &jya::comparison_entry::index)
        .def_readonly("theta", &jya::comparison_entry::theta)
        .def_readonly("computed_sine", &jya::comparison_entry::computed_sine)
        .def_readonly("reference_sine", &jya::comparison_entry::reference_sine)
        .def_readonly("error_sine", &jya::comparison_entry::error_sine)
        .def_readonly("error_minutes", &jya::comparison_entry::error_minutes)
        .def_readonly("computed_rsine", &jya::comparison_entry::computed_rsine)
        .def_readonly("reference_rsine", &jya::comparison_entry::reference_rsine)
        .def_readonly("rsine_delta", &jya::comparison_entry::rsine_delta);

    py::class_<jya::comparison_report>(m, "comparison_report")
        .def_readonly("entries", &jya::comparison_report::entries)
        .def_readonly("max_abs_error_sine", &jya::comparison_report::max_abs_error_sine)
        .def_readonly("max_abs_error_minutes",
                      &jya::comparison_report::max_abs_error_minutes)
        .def_readonly("max_error_index", &jya::comparison_report::max_error_index)
        .def_readonly("rsine_mismatches", &jya::comparison_report::rsine_mismatches)
        .def_readonly("beyond_quarter_period",
                      &jya::comparison_report::beyond_quarter_period);

    m.def("compare_with_reference", &jya::compare_with_reference, py::arg("table"));

    py::enum_<jya::table_format>(m, "table_format")
        .value("csv", jya::table_format::csv)
        .value("markdown", jya::table_format::markdown);

    m.def("export_table", &jya::export_table, py::arg("table"), py::arg("format"));

    py::enum_<jya::denominator_form>(m, "denominator_form")
        .value("exact_sine", jya::denominator_form::exact_sine)
        .value("plain_step", jya::denominator_form::plain_step);

    py::class_<jya::sampled_pair>(m, "sampled_pair")
        .def(py::init([](jya::angle theta, jya::angle epsilon, double f_plus,
                         double f_minus) {
                 jya::sampled_pair pair;
                 pair.theta = theta;
                 pair.epsilon = epsilon;
                 pair.f_plus = f_plus;
                 pair.f_minus = f_minus;
                 return pair;
             }),
             py::arg("theta"), py::arg("epsilon"), py::arg("f_plus"),
             py::arg("f_minus"))
        .def_readonly("theta", &jya::sampled_pair::theta)
        .def_readonly("epsilon", &jya::sampled_pair::epsilon)
        .def_readonly("f_plus", &jya::sampled_pair::f_plus)
        .def_readonly("f_minus", &jya::sampled_pair::f_minus);

    m.def("sample_pair", &jya::sample_pair, py::arg("f"), py::arg("theta"),
          py::arg("epsilon"));
    m.def("central_first_derivative",
          py::overload_cast<const jya::sampled_pair&, jya::denominator_form>(
              &jya::central_first_derivative),
          py::arg("pair"), py::arg("form") = jya::denominator_form::exact_sine);
    m.def("central_first_derivative",
          py::overload_cast<const jya::real_function&, jya::angle, jya::angle,
                            jya::denominator_form>(&jya::central_first_derivative),
          py::arg("f"), py::arg("theta"), py::arg("epsilon"),
          py::arg("form") = jya::denominator_form::exact_sine);
    m.def("central_second_derivative",
          py::overload_cast<double, double, double, jya::angle,
                            jya::denominator_form>(&jya::central_second_derivative),
          py::arg("f_plus"), py::arg("f_center"), py::arg("f_minus"),
          py::arg("epsilon"), py::arg("form") = jya::denominator_form::exact_sine);
    m.def("central_second_derivative",
          py::overload_cast<const jya::real_function&, jya::angle, jya::angle,
                            jya::denominator_form>(&jya::central_second_derivative),
          py::arg("f"), py::arg("theta"), py::arg("epsilon"),
          py::arg("form") = jya::denominator_form::exact_sine);

    py::class_<jya::convergence_row>(m, "convergence_row")
        .def_readonly("epsilon", &jya::convergence_row::epsilon)
        .def_readonly("error", &jya::convergence_row::error)
        .def_readonly("ratio", &jya::convergence_row::ratio);

    m.def("convergence_study", &jya::convergence_study, py::arg("f"),
          py::arg("truth"), py::arg("theta"), py::arg("initial_epsilon"),
          py::arg("halvings"), py::arg("derivative_order"),
          py::arg("form") = jya::denominator_form::plain_step);

    py::class_<jya::oscillator_run>(m, "oscillator_run")
        .def_readonly("omega", &jya::oscillator_run::omega)
        .def_readonly("step_h", &jya::oscillator_run::step_h)
        .def_readonly("y", &jya::oscillator_run::y)
        .def("time_at", &jya::oscillator_run::time_at, py::arg("n"));

    m.def("integrate_shm", &jya::integrate_shm, py::arg("omega"), py::arg("step_h"),
          py::arg("steps"), py::arg("y0"), py::arg("y1"));
    m.def("discrete_energy", &jya::discrete_energy, py::arg("run"));
    m.def("relative_energy_drift", &jya::relative_energy_drift, py::arg("run"));

    py::class_<jya::point2>(m, "point2")
        .def_readonly("x", &jya::point2::x)
        .def_readonly("y", &jya::point2::y)
        .def("__repr__", [](const jya::point2& p) {
            return "point2(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
        });

    py::class_<jya::geometry_scene>(m, "geometry_scene")
        .def_readonly("theta", &jya::geometry_scene::theta)
        .def_readonly("phi", &jya::geometry_scene::phi)
        .def_readonly("o", &jya::geometry_scene::o)
        .def_readonly("x", &jya::geometry_scene::x)
        .def_readonly("y", &jya::geometry_scene::y)
        .def_readonly("a", &jya::geometry_scene::a)
        .def_readonly("b", &jya::geometry_scene::b)
        .def_readonly("c", &jya::geometry_scene::c)
        .def_readonly("p", &jya::geometry_scene::p)
        .def_readonly("q", &jya::geometry_scene::q)
        .def_readonly("r", &jya::geometry_scene::r)
        .def_readonly("s", &jya::geometry_scene::s);

    py::class_<jya::similarity_report>(m, "similarity_report")
        .def_readonly("angle_sbc", &jya::similarity_report::angle_sbc)
        .def_readonly("angle_discrepancy", &jya::similarity_report::angle_discrepancy)
        .def_readonly("ratio_bs_op", &jya::similarity_report::ratio_bs_op)
        .def_readonly("ratio_cs_ap", &jya::similarity_report::ratio_cs_ap)
        .def_readonly("ratio_bc_oa", &jya::similarity_report::ratio_bc_oa)
        .def_readonly("max_ratio_discrepancy",
                      &jya::similarity_report::max_ratio_discrepancy)
        .def_readonly("derived_sine_diff", &jya::similarity_report::derived_sine_diff)
        .def_readonly("derived_cosine_diff",
                      &jya::similarity_report::derived_cosine_diff)
        .def_readonly("tolerance", &jya::similarity_report::tolerance)
        .def_readonly("passed", &jya::similarity_report::passed);

    m.def("build_scene", &jya::build_scene, py::arg("theta"), py::arg("phi"));
    m.def("measure_similarity", &jya::measure_similarity, py::arg("scene"),
          py::arg("tol"));
    m.def("verify_similarity", &jya::verify_similarity, py::arg("scene"),
          py::arg("tol"));

    py::class_<jya::sweep_summary>(m, "sweep_summary")
        .def_readonly("total", &jya::sweep_summary::total)
        .def_readonly("failures", &jya::sweep_summary::failures)
        .def_readonly("worst_discrepancy", &jya::sweep_summary::worst_discrepancy)
        .def_readonly("worst_theta", &jya::sweep_summary::worst_theta)
        .def_readonly("worst_phi", &jya::sweep_summary::worst_phi)
        .def_readonly("worst_identity_residual",
                      &jya::sweep_summary::worst_identity_residual);

    m.def("sweep_verify", &jya::sweep_verify, py::arg("theta_steps"),
          py::arg("phi_steps"), py::arg("tol"));
}
