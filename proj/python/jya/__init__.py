"""Sine tables by the second-difference recursion, plus the difference
calculus and geometry verification that go with them.

The heavy lifting lives in the compiled ``jya._core`` extension; this package
re-exports it and adds a couple of convenience constructors for the two
classical grids.
"""

from ._core import (  # noqa: F401
    Error,
    VerificationFailure,
    angle,
    angle_grid,
    arcminutes_per_radian,
    build_scene,
    central_first_derivative,
    central_second_derivative,
    compare_with_reference,
    comparison_entry,
    comparison_report,
    convergence_row,
    convergence_study,
    cosine_diff,
    cosine_diff_rhs,
    denominator_form,
    difference_series,
    discrete_energy,
    export_table,
    first_difference_check,
    generate_half_angle_table,
    generate_recursion_table,
    geometry_scene,
    half_angle_descriptor,
    integrate_shm,
    make_recursion_config,
    measure_similarity,
    oscillator_run,
    pi,
    point2,
    recursion_config,
    recursion_output,
    reference_cos,
    reference_sin,
    relative_energy_drift,
    round_to_four_decimals,
    rsine_radius,
    rsine_value,
    sample_pair,
    sampled_pair,
    second_difference_check,
    similarity_report,
    sine_diff,
    sine_diff_rhs,
    sine_table,
    sine_table_entry,
    sweep_summary,
    sweep_verify,
    table_format,
    table_mode,
    to_rsine,
    verify_similarity,
)

__version__ = "0.1.0"


def aryabhata_table(mode=table_mode.historical):
    """The classical 24-node table on the pi/48 grid (3.75 degree steps)."""
    return generate_recursion_table(make_recursion_config(mode, 48, 24)).table


def exercise1_table(mode=table_mode.historical):
    """The 40-node table on the pi/80 grid (2.25 degree steps)."""
    return generate_recursion_table(make_recursion_config(mode, 80, 40)).table
