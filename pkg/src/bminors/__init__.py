"""Exact generalized minors on type-B double Bruhat cells.

Three independent pipelines produce the same Laurent polynomials:
coefficient extraction in the fundamental representations (:mod:`repb`),
labelled path sums (:mod:`pathsum`) and closed-form monomial enumeration
(:mod:`closedform`).  :mod:`factorize` relates the two cell
parametrizations and :mod:`cluster` carries the seed machinery attached
to the same words.
"""

from .closedform import closed_minor, closed_minor_spin, closed_minor_vector
from .laurent import DivisionFailure, LaurentPoly, Variable, exact_div, tvar, yvar
from .pathsum import (
    enumerate_spin_paths,
    enumerate_vector_paths,
    export_dot,
    spin_path_sum,
    vector_path_sum,
)
from .repb import minor_G, minor_L, minor_L_spin, minor_L_vector
from .rootdata import MinorSpec, make_minor_spec

__all__ = [
    "DivisionFailure",
    "LaurentPoly",
    "MinorSpec",
    "Variable",
    "closed_minor",
    "closed_minor_spin",
    "closed_minor_vector",
    "enumerate_spin_paths",
    "enumerate_vector_paths",
    "exact_div",
    "export_dot",
    "make_minor_spec",
    "minor_G",
    "minor_L",
    "minor_L_spin",
    "minor_L_vector",
    "spin_path_sum",
    "tvar",
    "vector_path_sum",
    "yvar",
]
