"""Hyperbolic geometry kernel: closed forms, the Poincare disk, constructions and quadrature planning."""

from ._hypkit import (
    ConstructionError,
    DomainError,
    OutOfRangeError,
    ScriptFormatError,
    admissible_tan2z,
    angle_of_parallelism,
    arc_ratio,
    build_quadrature,
    circle_area,
    circle_circumference,
    disk_distance,
    equidistant_arc_length,
    gauss_constructible,
    golden_scripts,
    horocycle_arc_length,
    horocycle_sector_area,
    parallelism_segment,
    plan,
    polygon_area_from_angles,
    run_script,
    solve_general_triangle,
    solve_right_triangle,
    sphere_measures,
    verify,
)

__all__ = [
    "ConstructionError",
    "DomainError",
    "OutOfRangeError",
    "ScriptFormatError",
    "admissible_tan2z",
    "angle_of_parallelism",
    "arc_ratio",
    "build_quadrature",
    "circle_area",
    "circle_circumference",
    "disk_distance",
    "equidistant_arc_length",
    "gauss_constructible",
    "golden_scripts",
    "horocycle_arc_length",
    "horocycle_sector_area",
    "parallelism_segment",
    "plan",
    "polygon_area_from_angles",
    "run_script",
    "solve_general_triangle",
    "solve_right_triangle",
    "sphere_measures",
    "verify",
]
