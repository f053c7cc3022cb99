"""Least solutions of proportionally modular Diophantine inequalities.

``least_solution(a, b, c)`` returns the smallest positive x with
``(a*x) % b <= c*x``; ``solve`` returns the same value together with the
recursion trace. Proportions may be ints, ``fractions.Fraction`` or strings
such as ``"5/2"``.
"""

from ._core import (
    Branch,
    NotInvertibleError,
    SolveResult,
    TraceLevel,
    euclid_chain_length,
    frobenius_f1,
    frobenius_naive,
    interval_multiplicity,
    interval_multiplicity_naive,
    least_solution,
    membership,
    mod_inverse,
    quotient_multiplicity,
    quotient_multiplicity_naive,
    reduce_factor,
    reduce_gcd,
    solve,
    solve_naive,
    verify_trace,
)

__all__ = [
    "Branch",
    "NotInvertibleError",
    "SolveResult",
    "TraceLevel",
    "euclid_chain_length",
    "frobenius_f1",
    "frobenius_naive",
    "interval_multiplicity",
    "interval_multiplicity_naive",
    "least_solution",
    "membership",
    "mod_inverse",
    "quotient_multiplicity",
    "quotient_multiplicity_naive",
    "reduce_factor",
    "reduce_gcd",
    "solve",
    "solve_naive",
    "verify_trace",
]
