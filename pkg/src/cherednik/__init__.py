"""Exact computations with rational Cherednik algebras in positive characteristic.

The package builds Dunkl operators for symmetric and dihedral groups over
finite fields (or over F_q(c) for a generic parameter), computes the graded
pieces of the irreducible quotient L_c = M_c / J_c, and searches for singular
vectors and minimal generators of J_c.
"""

__version__ = "0.1.0"

from .fields import (GF, DivisionByZero, FieldElem, FieldError, FieldMismatch, InvalidInput,
                     RationalFunction, RationalFunctionField, UPoly, gf, primitive_mth_root)
from .polys import Poly, VermaVector, parse_poly, parse_vector, partial
from .groups import (ReflectionGroup, TauRep, dihedral_group, make_tau, parse_group,
                     symmetric_group)
from .dunkl import DunklContext, apply_dunkl, check_algebra_relation, is_singular
from .contraform import (HilbertSeries, beta_matrix, generator_counts, hilbert_L, in_Jc,
                         min_generator_degrees, singular_space, taylor_construction_G)
from .recursion import (closed_form_F1, closed_form_F2, closed_form_p3, run_recursion,
                        solve_step)

__all__ = [
    "GF", "gf", "primitive_mth_root", "UPoly", "RationalFunction", "RationalFunctionField",
    "FieldElem", "FieldError", "FieldMismatch", "DivisionByZero", "InvalidInput",
    "Poly", "VermaVector", "parse_poly", "parse_vector", "partial",
    "ReflectionGroup", "TauRep", "symmetric_group", "dihedral_group", "parse_group", "make_tau",
    "DunklContext", "apply_dunkl", "is_singular", "check_algebra_relation",
    "HilbertSeries", "beta_matrix", "hilbert_L", "singular_space", "in_Jc",
    "generator_counts", "min_generator_degrees", "taylor_construction_G",
    "closed_form_F1", "closed_form_F2", "closed_form_p3", "run_recursion", "solve_step",
]
