"""Exact quasi-polynomials, their coefficient periods and generating functions.

Rationals come back as :class:`fractions.Fraction`; rational inputs may be
ints, Fractions or ``"a/b"`` strings.
"""

from ._quasiper import (
    BudgetExceeded,
    CrossCheckFailure,
    QuasiperError,
    QuasiPolynomial,
    RationalGF,
    check_zaslavsky,
    conjecture_check,
    conjecture_predict,
    conjecture_scan,
    convolve,
    count_lattice_points,
    denumerant,
    ehrhart_qp,
    ehrhart_series,
    facet_index,
    from_quasipolynomial,
    g_sequence,
    hpolytope_qp,
    interior_denumerant,
    interpolate,
    minimum_period,
    monomial_gf,
    multiply,
    sharpness_construction,
    simplex_j_index,
    to_quasipolynomial,
    vertex_denominator,
    zaslavsky_bound,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
