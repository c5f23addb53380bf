"""Ordered fully subtractive dynamics.

The step map acts on sorted nonnegative triples by subtracting the smallest
coordinate from the other two and re-sorting; the digit in {1,2,3} records
where the smallest coordinate lands after the subtraction.  Everything here
is exact: iterates are Vec3 over the input's scalar backend, halting and
case splits go through exactnum.compare, and periodicity is detected by
exact projective equality of iterates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import sympy

from . import intmat
from .errors import (
    BudgetExhaustedError,
    InternalInconsistency,
    NotSorted,
    ZeroVector,
)
from .exactnum import (
    Algebraic,
    IntervalReal,
    Ordering,
    Rational,
    Vec3,
    compare,
    get_field,
    count_real_roots,
    is_zero,
    rational_dimension,
    sign,
    vec3_to_json,
)

# the three step matrices: v = M_digit @ F(v)
FS_MATRICES = {
    1: ((1, 0, 0), (1, 1, 0), (1, 0, 1)),
    2: ((0, 1, 0), (1, 1, 0), (0, 1, 1)),
    3: ((0, 0, 1), (1, 0, 1), (0, 1, 1)),
}

FS_MATRICES_INV = {i: intmat.inv_unimodular(m) for i, m in FS_MATRICES.items()}

DEFAULT_BUDGET = 1000


@dataclass(frozen=True)
class Halted:
    n: int


@dataclass(frozen=True)
class Periodic:
    preperiod: int
    period: int


@dataclass(frozen=True)
class BudgetExhausted:
    budget: int


@dataclass(frozen=True)
class Expansion:
    v0: Vec3
    digits: tuple
    iterates: tuple  # iterates[k] = v^(k+1)
    status: object

    def iterate(self, n):
        """v^(n); n = 0 gives the input vector."""
        return self.v0 if n == 0 else self.iterates[n - 1]

    def __len__(self):
        return len(self.digits)

    def to_json(self):
        if isinstance(self.status, Halted):
            status = {"kind": "halted", "n": self.status.n}
        elif isinstance(self.status, Periodic):
            status = {"kind": "periodic", "preperiod": self.status.preperiod,
                      "period": self.status.period}
        else:
            status = {"kind": "budget_exhausted", "budget": self.status.budget}
        return {
            "digits": list(self.digits),
            "iterates": [vec3_to_json(v) for v in self.iterates],
            "status": status,
        }


def _halts(v):
    """v1 + v2 <= v3 (the connecting-thickness algorithm's stopping rule)."""
    return compare(v.c1 + v.c2, v.c3) is not Ordering.GT


def fs_step(v):
    """One ordered fully subtractive step; returns (digit, next iterate).

    Ties fall exactly as the case split is written: v1 == v2 - v1 is case 1,
    v1 == v3 - v1 (with v2 - v1 < v1) is case 2.
    """
    if not isinstance(v, Vec3):
        v = Vec3(*v)
    v.require_sorted_nonzero()
    d2 = v.c2 - v.c1
    d3 = v.c3 - v.c1
    if compare(v.c1, d2) is not Ordering.GT:
        return 1, Vec3(v.c1, d2, d3, join=False)
    if compare(v.c1, d3) is not Ordering.GT:
        return 2, Vec3(d2, v.c1, d3, join=False)
    return 3, Vec3(d2, d3, v.c1, join=False)


def _projective_key(v):
    """Hashable exact normal form of v up to positive scaling, or None."""
    if any(isinstance(c, IntervalReal) for c in v.coords):
        return None
    if is_zero(v.c3):
        return None
    return (v.c1 / v.c3, v.c2 / v.c3)


def expand(v, budget=DEFAULT_BUDGET):
    """Iterate the step map, recording digits and iterates.

    Stops with Halted(n) at the first n with v1+v2 <= v3, with
    Periodic(preperiod, period) when an iterate recurs projectively
    (exact proportionality; only available for exact scalar backends),
    and with BudgetExhausted otherwise.
    """
    if not isinstance(v, Vec3):
        v = Vec3(*v)
    v.require_sorted_nonzero()
    seen = {}
    key = _projective_key(v)
    if key is not None:
        seen[key] = 0
    digits, iterates = [], []
    cur = v
    for n in range(budget + 1):
        if _halts(cur):
            return Expansion(v, tuple(digits), tuple(iterates), Halted(n))
        if n == budget:
            break
        digit, nxt = fs_step(cur)
        digits.append(digit)
        iterates.append(nxt)
        cur = nxt
        key = _projective_key(cur)
        if key is not None:
            if key in seen:
                pre = seen[key]
                return Expansion(v, tuple(digits), tuple(iterates),
                                 Periodic(pre, n + 1 - pre))
            seen[key] = n + 1
    return Expansion(v, tuple(digits), tuple(iterates), BudgetExhausted(budget))


def connecting_thickness(v, budget=DEFAULT_BUDGET):
    """Connecting thickness Omega(v) together with the expansion trace.

    Halted runs sum the first coordinates and add the final third
    coordinate; eventually periodic runs land in the infinite-loop regime
    where Omega(v) = |v|_1 / 2.
    """
    if not isinstance(v, Vec3):
        v = Vec3(*v)
    exp = expand(v, budget)
    if isinstance(exp.status, Halted):
        n = exp.status.n
        omega = exp.iterate(n).c3
        for k in range(n):
            omega = omega + exp.iterate(k).c1
        return omega, exp
    if isinstance(exp.status, Periodic):
        omega = v.l1() / Rational(2)
        return omega, exp
    lower = Rational(0)
    for k in range(len(exp.digits)):
        lower = lower + exp.iterate(k).c1
    upper = lower + exp.iterate(len(exp.digits)).l1()
    raise BudgetExhaustedError(
        f"no halt or period within {budget} steps", lower=lower, upper=upper)


@dataclass(frozen=True)
class InF3:
    preperiod: int
    period: int
    cycle: tuple


@dataclass(frozen=True)
class NotInF3:
    n: int


@dataclass(frozen=True)
class UnknownF3:
    budget: int


def classify_f3(v, budget=DEFAULT_BUDGET):
    """Membership verdict for the infinite-loop set of the algorithm.

    NotInF3(n) carries the first step at which v1+v2 <= v3; InF3 carries the
    periodic certificate (the cycle must contain a digit 3, and the input
    must have full rational rank 3 -- both are re-checked here).
    """
    if not isinstance(v, Vec3):
        v = Vec3(*v)
    exp = expand(v, budget)
    if isinstance(exp.status, Halted):
        return NotInF3(exp.status.n), exp
    if isinstance(exp.status, Periodic):
        pre, per = exp.status.preperiod, exp.status.period
        cycle = exp.digits[pre:pre + per]
        if 3 not in cycle:
            raise InternalInconsistency(
                "periodic expansion without digit 3 must halt; this contradicts "
                "the digit-3 dichotomy")
        dim = rational_dimension(list(v.coords))
        if dim != 3:
            raise InternalInconsistency(
                f"vector certified in the infinite-loop set has rational rank {dim}, "
                "expected 3")
        return InF3(pre, per, cycle), exp
    return UnknownF3(budget), exp


def omega_upper_bound(v):
    """|v|_inf + min nonzero |coordinate|; upper bound for the thickness."""
    if not isinstance(v, Vec3):
        v = Vec3(*v)
    if v.is_zero():
        raise ZeroVector("upper bound needs a nonzero vector")
    return v.linf() + v.xi()


def reconstruct(exp, n):
    """M_{i_1} ... M_{i_n} applied to v^(n); equals v0 exactly for every n."""
    m = intmat.mat_prod([FS_MATRICES[d] for d in exp.digits[:n]])
    w = exp.iterate(n)
    return Vec3(
        *(w.c1 * Rational(m[i][0]) + w.c2 * Rational(m[i][1]) + w.c3 * Rational(m[i][2])
          for i in range(3)),
        join=False)


# ---------------------------------------------------------------------------
# periodic-word vectors
# ---------------------------------------------------------------------------

def _char_poly(m):
    """Characteristic polynomial of a 3x3 integer matrix, low -> high coeffs."""
    tr = m[0][0] + m[1][1] + m[2][2]
    minors = (
        m[1][1] * m[2][2] - m[1][2] * m[2][1]
        + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[0][0] * m[1][1] - m[0][1] * m[1][0]
    )
    return (-intmat.det(m), minors, -tr, 1)


def vector_from_periodic_word(word, verify_periods=3):
    """Sorted positive eigenvector whose expansion is the purely periodic word.

    The vector is the dominant eigenvector of the matrix product of the
    word, computed exactly in the field of the dominant eigenvalue.  The
    claimed expansion is verified by running the algorithm for a few
    periods; inadmissible words raise ValueError.
    """
    word = tuple(int(c) for c in word)
    if not word or any(d not in (1, 2, 3) for d in word):
        raise ValueError("word must be a nonempty sequence over {1,2,3}")
    m = intmat.mat_prod([FS_MATRICES[d] for d in word])
    cp = _char_poly(m)
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(cp)), x)
    best = None  # (approx value, factor coeffs low->high, lo, hi)
    for factor, _mult in poly.factor_list()[1]:
        fcoeffs = [int(c) for c in reversed(factor.all_coeffs())]
        for (a, b), _ in sympy.Poly(factor, x).intervals():
            lo = Fraction(int(sympy.Rational(a).p), int(sympy.Rational(a).q))
            hi = Fraction(int(sympy.Rational(b).p), int(sympy.Rational(b).q))
            approx = float((lo + hi) / 2) if lo != hi else float(lo)
            if best is None or approx > best[0]:
                best = (approx, fcoeffs, lo, hi)
    if best is None or best[0] <= 0:
        raise ValueError("word has no positive dominant eigenvalue")
    _, fcoeffs, lo, hi = best
    if len(fcoeffs) == 2:
        lam = Rational(Fraction(-fcoeffs[0], fcoeffs[1]))
        scalars = [lam, Rational(1)]
    else:
        fr = tuple(Fraction(c) for c in fcoeffs)
        while lo == hi or count_real_roots(fr, lo, hi) != 1:
            # exact rational root listed as degenerate interval: cannot happen
            # for an irreducible factor of degree >= 2
            raise InternalInconsistency("bad isolating interval for eigenvalue")
        fieldobj = get_field(tuple(fcoeffs), lo, hi)
        lam = Algebraic(fieldobj, (Fraction(0), Fraction(1)))
        scalars = None
    # eigenvector: any nonzero column of adj(M - lam I)
    lam_m = [[Rational(m[i][j]) - (lam if i == j else Rational(0)) for j in range(3)]
             for i in range(3)]

    def cof(i, j):
        r = [k for k in range(3) if k != j]
        c = [k for k in range(3) if k != i]
        s = lam_m[r[0]][c[0]] * lam_m[r[1]][c[1]] - lam_m[r[0]][c[1]] * lam_m[r[1]][c[0]]
        return s if (i + j) % 2 == 0 else -s

    col = None
    for j in range(3):
        cand = [cof(i, j) for i in range(3)]
        if not all(is_zero(c) for c in cand):
            col = cand
            break
    if col is None:
        raise ValueError("eigenspace is degenerate; word is inadmissible")
    signs = {sign(c) for c in col if not is_zero(c)}
    if signs == {-1}:
        col = [-c for c in col]
    elif signs != {1}:
        raise ValueError("dominant eigenvector is not positive; word is inadmissible")
    # normalize smallest coordinate to keep printed values tame
    v = Vec3(*col)
    ordered, _perm = v.sorted()
    first = ordered.c1
    if is_zero(first):
        raise ValueError("dominant eigenvector has a zero coordinate")
    v = Vec3(*(c / first for c in ordered.coords), join=False)
    exp = expand(v, len(word) * verify_periods + 1)
    wtext = "".join(map(str, word))
    L = len(word)
    if not all(d == word[k % L] for k, d in enumerate(exp.digits)):
        raise ValueError(
            f"word {wtext} is not the expansion of its eigenvector "
            f"(got {''.join(map(str, exp.digits))})")
    if not isinstance(exp.status, Periodic):
        raise ValueError(f"expansion of the eigenvector of {wtext} did not cycle")
    # the recorded digits match word^infinity; the true stream repeats with
    # period per from preperiod on, so the two streams coincide iff word's
    # periodic extension is itself per-periodic past the preperiod
    pre, per = exp.status.preperiod, exp.status.period
    span = math.lcm(per, L)
    if any(word[(pre + k) % L] != word[(pre + k + per) % L] for k in range(span)):
        raise ValueError(
            f"eigenvector of {wtext} cycles with period {per}, which is not "
            "compatible with the word")
    return v
