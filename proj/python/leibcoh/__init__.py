"""Exact Lie and Leibniz cohomology and deformations over the rationals.

Thin Python veneer over the C++ engine. All rational values cross the
boundary as strings; feed them to fractions.Fraction if you need arithmetic.
"""

from ._leibcoh import (
    Algebra,
    ParseError,
    PreconditionError,
    builtin,
    builtin_names,
    check,
    classify,
    cohomology,
    fingerprint,
    from_json,
    lie_table,
    massey,
    run_cli,
    to_json,
    versal,
)

__all__ = [
    "Algebra",
    "ParseError",
    "PreconditionError",
    "builtin",
    "builtin_names",
    "check",
    "classify",
    "cohomology",
    "fingerprint",
    "from_json",
    "lie_table",
    "massey",
    "run_cli",
    "to_json",
    "versal",
]
