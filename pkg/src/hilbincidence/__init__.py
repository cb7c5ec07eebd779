"""Schubert cell incidences on equivariant Hilbert schemes of points in the plane."""

from .arrows import (
    Arrow,
    ArrowSystem,
    CoArrowSystem,
    NecessaryConditionReport,
    apply_cosystem,
    apply_system,
    find_system,
    necessary_condition,
    psi_backward,
    psi_forward,
    validate_cosystem,
    validate_system,
)
from .families import GradedFamily, extract_cosystem, generic_initial_staircase, load_family, verify_witness
from .staircase import (
    STANDARD,
    Box,
    Grading,
    Monomial,
    Staircase,
    dual,
    enumerate_staircases,
    hilbert_function,
    minimal_generators,
    parse_staircase,
    staircase_from_generators,
)
from .yameogo import dominates, profile

__version__ = "0.1.0"
