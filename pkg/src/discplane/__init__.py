"""Exact-arithmetic toolkit for arithmetical discrete planes.

Library layout:

* :mod:`discplane.exactnum` -- rational / algebraic / interval scalars, Vec3
* :mod:`discplane.fsalgo` -- ordered fully subtractive dynamics and thickness
* :mod:`discplane.planes` -- point-set planes, windows, connectivity
* :mod:`discplane.stepped` -- unit faces, dual substitutions, face patterns
* :mod:`discplane.covering` -- cover templates, strong covers, annuli
* :mod:`discplane.generation` -- translation patterns and cross checks
* :mod:`discplane.cli` -- ``discplane`` command line and the connectedness
  decision procedure
"""

from .exactnum import (
    Algebraic,
    IntervalReal,
    Ordering,
    Rational,
    Scalar,
    Vec3,
    algebraic_root,
    compare,
    gcd_ext,
    nth_root,
    parse_scalar,
    parse_vector,
    pi,
    rational_dimension,
    sqrt,
)

__all__ = [
    "Algebraic",
    "IntervalReal",
    "Ordering",
    "Rational",
    "Scalar",
    "Vec3",
    "algebraic_root",
    "compare",
    "gcd_ext",
    "nth_root",
    "parse_scalar",
    "parse_vector",
    "pi",
    "rational_dimension",
    "sqrt",
]

__version__ = "0.1.0"
