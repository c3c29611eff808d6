"""Parabolic quadrilaterals: circles inscribed between two parabolas.

The package builds the figures exactly (pencils of conics, tangency
certificates, closed-form constructions) and checks the classical incidence
statements about them on seeded random instances.
"""

from .conics import (Conic, ConicKind, IntersectionSet, ParabolaFrame, classify,
                     conic_from_frame, frame_from_conic, intersect_conics,
                     slope_in_axis_frame, tangency_certificate, transform_conic)
from .constructions import (ConstructionError, InscribedCircleResult, ParabolicQuadrilateral,
                            affine_normalizer, axial_lines, build_ngon, fourth_intersection,
                            hexagon_diagonal_concurrency, inscribed_circle,
                            parabola_from_tangent_chord, parabolas_through_four_points,
                            parabolic_quadrilateral, perpendicular_diagonals_residual)
from .geometry import AffineMap, Circle, DegenerateError, Line, Point
from .harness import CheckConfig, CheckReport, run_all
from .numeric import DEFAULT_TOL, Tolerance, solve_polynomial

__all__ = [
    "AffineMap", "CheckConfig", "CheckReport", "Circle", "Conic", "ConicKind",
    "ConstructionError", "DEFAULT_TOL", "DegenerateError", "InscribedCircleResult",
    "IntersectionSet", "Line", "ParabolaFrame", "ParabolicQuadrilateral", "Point",
    "Tolerance", "affine_normalizer", "axial_lines", "build_ngon", "classify",
    "conic_from_frame", "fourth_intersection", "frame_from_conic",
    "hexagon_diagonal_concurrency", "inscribed_circle", "intersect_conics",
    "parabola_from_tangent_chord", "parabolas_through_four_points",
    "parabolic_quadrilateral", "perpendicular_diagonals_residual", "run_all",
    "slope_in_axis_frame", "solve_polynomial", "tangency_certificate", "transform_conic",
]
