"""Integer polynomial arithmetic, strong Groebner bases and quotient modules."""

from .groebner import GroebnerBasis, Reducer, buchberger_z, normal_form
from .poly import TERM_ORDERS, IntPoly, one_minus_power
from .quotient import (QuotientModule, QuotientRing, graded_module,
                       lattice_quotient, quotient_module, standard_monomials,
                       truncated_module)

__all__ = [
    "GroebnerBasis", "IntPoly", "QuotientModule", "QuotientRing", "Reducer",
    "TERM_ORDERS", "buchberger_z", "graded_module", "lattice_quotient",
    "normal_form", "one_minus_power", "quotient_module", "standard_monomials",
    "truncated_module",
]
