"""Exact ordered-field arithmetic for plane normal vectors.

Three scalar backends share one comparison contract:

* ``Rational`` wraps ``fractions.Fraction``.
* ``Algebraic`` is an element of a real number field Q(theta), stored as a
  rational coordinate vector in the power basis of theta.  theta is a root
  of an irreducible integer polynomial, pinned down by a rational isolating
  interval; sign determination refines that interval until the evaluated
  enclosure excludes zero, which always terminates for nonzero elements.
* ``IntervalReal`` is an expression over integers, rationals, n-th roots
  and pi.  It keeps an exact linear form over irrational atoms whenever the
  expression stays linear, and falls back to an opaque tree otherwise.
  Comparisons evaluate mpmath interval enclosures at escalating precision
  (128 bits doubling up to 8192) and raise ``UndecidableComparison`` at the
  cap.  Equality is only certified when canonical forms coincide.

Field construction (minimal polynomials, compositum of two fields, root
isolation bootstrap) delegates to sympy; element arithmetic, comparisons
and rank computations are done here with ``fractions.Fraction``.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

import mpmath
import sympy

from .errors import (
    FieldDegreeError,
    IncommensurableInputs,
    InternalInconsistency,
    NotSorted,
    ParseError,
    UndecidableComparison,
    UnsupportedScalar,
    ZeroVector,
)

DEGREE_CAP = 64
INTERVAL_START_BITS = 128
INTERVAL_MAX_BITS = 8192


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


# ---------------------------------------------------------------------------
# polynomial helpers over Fraction (coefficients low -> high)
# ---------------------------------------------------------------------------

def _poly_trim(p):
    i = len(p)
    while i > 0 and p[i - 1] == 0:
        i -= 1
    return tuple(p[:i])


def _poly_add(p, q):
    n = max(len(p), len(q))
    return _poly_trim([
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
        for i in range(n)
    ])


def _poly_neg(p):
    return tuple(-c for c in p)


def _poly_sub(p, q):
    return _poly_add(p, _poly_neg(q))


def _poly_mul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _poly_trim(out)


def _poly_divmod(p, q):
    q = _poly_trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quot = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    dq = len(q) - 1
    lead = q[-1]
    for i in range(len(rem) - 1, dq - 1, -1):
        if rem[i] == 0:
            continue
        c = rem[i] / lead
        quot[i - dq] = c
        for j, b in enumerate(q):
            rem[i - dq + j] -= c * b
    return _poly_trim(quot), _poly_trim(rem)


def _poly_mod(p, q):
    return _poly_divmod(p, q)[1]


def _poly_eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_eval_interval(p, lo, hi):
    """Exact interval Horner: enclosure of p over [lo, hi]."""
    acc_lo = Fraction(0)
    acc_hi = Fraction(0)
    for c in reversed(p):
        cands = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
        acc_lo = min(cands) + c
        acc_hi = max(cands) + c
    return acc_lo, acc_hi


def _poly_deriv(p):
    return _poly_trim([p[i] * i for i in range(1, len(p))])


def _sturm_sequence(p):
    seq = [_poly_trim(p), _poly_deriv(p)]
    while seq[-1]:
        r = _poly_mod(seq[-2], seq[-1])
        if not r:
            break
        seq.append(_poly_neg(r))
    return [s for s in seq if s]


def _sign_changes(seq, x):
    signs = []
    for p in seq:
        v = _poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    changes = 0
    for a, b in zip(signs, signs[1:]):
        if a != b:
            changes += 1
    return changes


def count_real_roots(p, lo, hi):
    """Number of distinct real roots of p in (lo, hi], by Sturm's theorem."""
    seq = _sturm_sequence(p)
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def _poly_inverse_mod(p, m):
    """Inverse of p modulo m in Q[x] via extended Euclid; m squarefree."""
    r0, r1 = _poly_trim(m), _poly_mod(p, m)
    s0, s1 = (), (Fraction(1),)
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible modulo the minimal polynomial")
    inv_lead = Fraction(1) / r0[0]
    return _poly_trim([c * inv_lead for c in s0])


# ---------------------------------------------------------------------------
# number fields
# ---------------------------------------------------------------------------

_FIELD_REGISTRY = {}
_JOIN_CACHE = {}


class NumberField:
    """Q(theta) for theta the unique root of ``minpoly`` in the seed interval.

    ``minpoly`` has integer coefficients (low -> high), is irreducible over
    Q and primitive with positive leading coefficient.  The isolating
    interval only ever shrinks; refinement is cached on the instance.
    """

    def __init__(self, minpoly, lo, hi):
        self.minpoly = tuple(int(c) for c in minpoly)
        self.degree = len(self.minpoly) - 1
        if self.degree < 2:
            raise ValueError("degree-1 fields are plain rationals")
        if self.degree > DEGREE_CAP:
            raise FieldDegreeError(f"field degree {self.degree} exceeds cap {DEGREE_CAP}")
        self.seed = (Fraction(lo), Fraction(hi))
        self._lo = Fraction(lo)
        self._hi = Fraction(hi)
        self.origin = None  # ('sqrt', n) / ('root', n, k) when built from a radical
        self._minpoly_frac = tuple(Fraction(c) for c in self.minpoly)
        if count_real_roots(self._minpoly_frac, self._lo, self._hi) != 1:
            raise InternalInconsistency(
                "isolating interval does not contain exactly one root of the minimal polynomial")
        # reduction table: theta^d .. theta^(2d-2) expressed in the power basis
        d = self.degree
        top = tuple(Fraction(-c, self.minpoly[d]) for c in self.minpoly[:d])
        powers = [_poly_trim(top)]
        for _ in range(d - 2):
            shifted = _poly_mul(powers[-1], (Fraction(0), Fraction(1)))
            if len(shifted) > d:
                c = shifted[d]
                folded = list(shifted[:d])
                while len(folded) < d:
                    folded.append(Fraction(0))
                for i, t in enumerate(top):
                    folded[i] += c * t
                shifted = _poly_trim(folded)
            powers.append(shifted)
        self._power_table = powers

    def reduce(self, p):
        """Reduce a polynomial in theta to the power basis (degree < d)."""
        p = _poly_trim(p)
        d = self.degree
        if len(p) <= d:
            return p
        out = list(p[:d])
        while len(out) < d:
            out.append(Fraction(0))
        for k in range(d, len(p)):
            c = p[k]
            if c == 0:
                continue
            for i, t in enumerate(self._power_table[k - d]):
                out[i] += c * t
        return _poly_trim(out)

    def refine(self, max_width=None):
        """Shrink the cached isolating interval (one bisection step or to a width)."""
        lo, hi = self._lo, self._hi
        f = self._minpoly_frac
        slo = _poly_eval(f, lo)
        if slo == 0:
            raise InternalInconsistency("rational endpoint is a root of an irreducible polynomial")
        target = max_width if max_width is not None else (hi - lo) / 2
        while hi - lo > target:
            mid = (lo + hi) / 2
            smid = _poly_eval(f, mid)
            if smid == 0:
                raise InternalInconsistency("irreducible minimal polynomial has a rational root")
            if (slo > 0) != (smid > 0):
                hi = mid
            else:
                lo, slo = mid, smid
        self._lo, self._hi = lo, hi
        return lo, hi

    @property
    def interval(self):
        return self._lo, self._hi

    def sign(self, coeffs):
        """Exact sign of the element with the given power-basis coordinates."""
        p = _poly_trim(coeffs)
        if not p:
            return 0
        if len(p) == 1:
            return 1 if p[0] > 0 else -1
        lo, hi = self._lo, self._hi
        while True:
            vlo, vhi = _poly_eval_interval(p, lo, hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            lo, hi = self.refine((hi - lo) / 4)

    def enclosure(self, coeffs, prec):
        """mpmath interval enclosure of an element at the given precision."""
        iv = mpmath.iv
        old = iv.prec
        try:
            iv.prec = prec
            width = Fraction(1, 2 ** (prec + 4))
            scale = max(1, abs(self._lo), abs(self._hi))
            lo, hi = self.refine(width * scale)
            theta = _frac_iv(lo, prec)
            theta = mpmath.iv.mpf([theta.a, _frac_iv(hi, prec).b])
            acc = iv.mpf(0)
            for c in reversed(_poly_trim(coeffs)):
                acc = acc * theta + _frac_iv(c, prec)
            return acc
        finally:
            iv.prec = old

    def __repr__(self):
        return f"NumberField(minpoly={self.minpoly}, interval=({self._lo},{self._hi}))"


def _frac_iv(fr, prec):
    iv = mpmath.iv
    old = iv.prec
    try:
        iv.prec = prec
        return iv.mpf(fr.numerator) / iv.mpf(fr.denominator)
    finally:
        iv.prec = old


def _sympy_rat_to_frac(r):
    r = sympy.Rational(r)
    return Fraction(int(r.p), int(r.q))


_KEY_CACHE = {}


def _registry_key(minpoly, lo, hi):
    """Canonical field key: minpoly plus index of the isolated root among real roots."""
    minpoly = tuple(int(c) for c in minpoly)
    cache_key = (minpoly, Fraction(lo), Fraction(hi))
    if cache_key in _KEY_CACHE:
        return _KEY_CACHE[cache_key]
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(minpoly)), x)
    intervals = [( _sympy_rat_to_frac(a), _sympy_rat_to_frac(b)) for (a, b), _ in poly.intervals()]
    lo_f, hi_f = Fraction(lo), Fraction(hi)
    frac = tuple(Fraction(c) for c in minpoly)
    # shrink until the interval meets exactly one sympy isolating interval
    while True:
        hits = [idx for idx, (a, b) in enumerate(intervals) if not (b < lo_f or a > hi_f)]
        if len(hits) == 1:
            key = (minpoly, hits[0])
            _KEY_CACHE[cache_key] = key
            return key
        mid = (lo_f + hi_f) / 2
        smid = _poly_eval(frac, mid)
        slo = _poly_eval(frac, lo_f)
        if smid == 0:
            raise InternalInconsistency("rational root in irreducible polynomial")
        if (slo > 0) != (smid > 0):
            hi_f = mid
        else:
            lo_f = mid


def get_field(minpoly, lo, hi, origin=None):
    """Deduplicated field lookup keyed by (minpoly, real-root index)."""
    key = _registry_key(minpoly, lo, hi)
    field = _FIELD_REGISTRY.get(key)
    if field is None:
        field = NumberField(minpoly, lo, hi)
        field.key = key
        _FIELD_REGISTRY[key] = field
    if origin is not None and field.origin is None:
        field.origin = origin
    return field


def _field_sympy_root(field):
    x = sympy.Symbol("x")
    poly = sympy.Poly([int(c) for c in reversed(field.minpoly)], x)
    n_real = len(poly.real_roots())
    return sympy.CRootOf(poly, field.key[1])  # real roots are indexed first, ascending


def _identity_embedding(field):
    return [tuple(Fraction(1) if i == j else Fraction(0) for i in range(field.degree))
            for j in range(field.degree)]


def _power_embedding(field, base_coeffs, degree_src):
    """Embedding table theta_src^j -> coordinates in field, given theta_src's image."""
    base = field.reduce(tuple(base_coeffs))
    table = [(Fraction(1),)]
    for _ in range(degree_src - 1):
        table.append(field.reduce(_poly_mul(table[-1], base)))
    return [_pad(t, field.degree) for t in table]


def join_fields(fa, fb):
    """Compositum of two fields with embedding matrices for their power bases.

    Returns (field, embed_a, embed_b) where embed_x is a list mapping
    theta_x^j to its coordinate vector in the compositum.  Degenerate cases
    (one field contained in the other) are detected and short-circuited.
    """
    if fa is fb:
        ident = _identity_embedding(fa)
        return fa, ident, ident
    cache_key = (fa.key, fb.key)
    if cache_key in _JOIN_CACHE:
        return _JOIN_CACHE[cache_key]
    from sympy.polys.polyerrors import IsomorphismFailed

    x = sympy.Symbol("x")
    ra, rb = _field_sympy_root(fa), _field_sympy_root(fb)
    result = None
    if fb.degree % fa.degree == 0:
        try:
            img = sympy.to_number_field(ra, sympy.AlgebraicNumber(rb))
            base = tuple(_sympy_rat_to_frac(c) for c in reversed(img.coeffs()))
            result = (fb, _power_embedding(fb, base, fa.degree), _identity_embedding(fb))
        except IsomorphismFailed:
            pass
    if result is None and fa.degree % fb.degree == 0:
        try:
            img = sympy.to_number_field(rb, sympy.AlgebraicNumber(ra))
            base = tuple(_sympy_rat_to_frac(c) for c in reversed(img.coeffs()))
            result = (fa, _identity_embedding(fa), _power_embedding(fa, base, fb.degree))
        except IsomorphismFailed:
            pass
    if result is None:
        minpoly_c, coeffs, reps = sympy.primitive_element([ra, rb], x, ex=True)
        poly_c = sympy.Poly(minpoly_c, x)
        c_coeffs = [int(c) for c in reversed(poly_c.all_coeffs())]
        degree_c = len(c_coeffs) - 1
        if degree_c > DEGREE_CAP:
            raise FieldDegreeError(f"compositum degree {degree_c} exceeds cap {DEGREE_CAP}")
        # theta_c = coeffs[0]*theta_a + coeffs[1]*theta_b: bracket it numerically,
        # then shrink the generator intervals until exactly one root of poly_c fits.
        ca, cb = Fraction(int(coeffs[0])), Fraction(int(coeffs[1]))
        frac_c = tuple(Fraction(c) for c in c_coeffs)
        while True:
            alo, ahi = fa.interval
            blo, bhi = fb.interval
            cands = [ca * a + cb * b for a in (alo, ahi) for b in (blo, bhi)]
            lo, hi = min(cands), max(cands)
            if count_real_roots(frac_c, lo, hi) == 1:
                break
            fa.refine()
            fb.refine()
        field_c = get_field(c_coeffs, lo, hi)
        embed_a = _power_embedding(
            field_c, tuple(_sympy_rat_to_frac(c) for c in reversed(reps[0])), fa.degree)
        embed_b = _power_embedding(
            field_c, tuple(_sympy_rat_to_frac(c) for c in reversed(reps[1])), fb.degree)
        result = (field_c, embed_a, embed_b)
    _JOIN_CACHE[cache_key] = result
    _JOIN_CACHE[(fb.key, fa.key)] = (result[0], result[2], result[1])
    return result


def _apply_embedding(coeffs, emb, degree):
    out = [Fraction(0)] * degree
    for j, c in enumerate(coeffs):
        if c == 0:
            continue
        for i, e in enumerate(emb[j]):
            out[i] += c * e
    return tuple(out)


def _pad(p, n):
    return tuple(p) + (Fraction(0),) * (n - len(p))


# ---------------------------------------------------------------------------
# scalar classes
# ---------------------------------------------------------------------------

class Scalar:
    """Common base; concrete values are Rational, Algebraic or IntervalReal."""

    __slots__ = ()

    # arithmetic dispatches through module-level coercion
    def __add__(self, other):
        return _add(self, _as_scalar(other))

    __radd__ = __add__

    def __sub__(self, other):
        return _add(self, _neg(_as_scalar(other)))

    def __rsub__(self, other):
        return _add(_as_scalar(other), _neg(self))

    def __mul__(self, other):
        return _mul(self, _as_scalar(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return _div(self, _as_scalar(other))

    def __rtruediv__(self, other):
        return _div(_as_scalar(other), self)

    def __neg__(self):
        return _neg(self)

    def __lt__(self, other):
        return compare(self, _as_scalar(other)) is Ordering.LT

    def __le__(self, other):
        return compare(self, _as_scalar(other)) is not Ordering.GT

    def __gt__(self, other):
        return compare(self, _as_scalar(other)) is Ordering.GT

    def __ge__(self, other):
        return compare(self, _as_scalar(other)) is not Ordering.LT

    def __float__(self):
        return float(mpmath.mpf(enclosure(self, 64).mid))


class Rational(Scalar):
    __slots__ = ("value",)

    def __init__(self, value, den=None):
        if den is not None:
            value = Fraction(value, den)
        self.value = Fraction(value)

    def __repr__(self):
        return f"Rational({self.value})"

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.value == other
        return isinstance(other, Rational) and self.value == other.value

    def __hash__(self):
        return hash(("rat", self.value))

    def is_zero(self):
        return self.value == 0

    def sign(self):
        return 0 if self.value == 0 else (1 if self.value > 0 else -1)


class Algebraic(Scalar):
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = _pad(field.reduce(tuple(Fraction(c) for c in coeffs)), field.degree)

    def __repr__(self):
        return f"Algebraic({self.coeffs} in deg-{self.field.degree} field)"

    def __eq__(self, other):
        return (isinstance(other, Algebraic) and other.field is self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash(("alg", self.field.key, self.coeffs))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def sign(self):
        return self.field.sign(self.coeffs)

    def rational_part(self):
        """The element as a Fraction if it lies in Q, else None."""
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0] if self.coeffs else Fraction(0)
        return None


def _demote(scalar):
    """Collapse an Algebraic that is actually rational."""
    if isinstance(scalar, Algebraic):
        r = scalar.rational_part()
        if r is not None:
            return Rational(r)
    if isinstance(scalar, IntervalReal) and scalar.opaque is None and not scalar.terms:
        return Rational(scalar.const)
    return scalar


# atoms for IntervalReal linear forms:
#   ('sqrt', n) ('root', n, k) ('pi',) ('algpow', minpoly, rootindex, j)
class IntervalReal(Scalar):
    __slots__ = ("const", "terms", "opaque")

    def __init__(self, const=0, terms=None, opaque=None):
        self.const = Fraction(const)
        self.terms = dict(terms or {})
        for a in list(self.terms):
            if self.terms[a] == 0:
                del self.terms[a]
        self.opaque = opaque

    def canonical(self):
        if self.opaque is not None:
            return ("opaque", self.opaque)
        return ("linear", self.const, tuple(sorted(self.terms.items())))

    def __repr__(self):
        if self.opaque is not None:
            return f"IntervalReal(opaque={self.opaque!r})"
        return f"IntervalReal({self.const} + {self.terms})"

    def __eq__(self, other):
        return isinstance(other, IntervalReal) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(("iv",) + self.canonical())

    def is_zero(self):
        if self.opaque is None:
            return self.const == 0 and not self.terms
        return False


def _as_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Rational(x)
    raise TypeError(f"cannot interpret {x!r} as a Scalar")


def integer(n):
    return Rational(n)


def rational(p, q=1):
    return Rational(Fraction(p, q))


def _squarefree_split(n):
    """n = s^2 * m with m squarefree; returns (s, m)."""
    s, m = 1, 1
    d = 2
    nn = n
    while d * d <= nn:
        cnt = 0
        while nn % d == 0:
            nn //= d
            cnt += 1
        s *= d ** (cnt // 2)
        if cnt % 2:
            m *= d
        d += 1
    m *= nn
    return s, m


def sqrt(n):
    """Exact square root of a nonnegative int or Fraction, as the right backend."""
    n = Fraction(n)
    if n < 0:
        raise ParseError("sqrt of a negative value")
    if n == 0:
        return Rational(0)
    num_s, num_m = _squarefree_split(n.numerator)
    den_s, den_m = _squarefree_split(n.denominator)
    # sqrt(n) = (num_s/(den_s*den_m)) * sqrt(num_m*den_m)
    m = num_m * den_m
    coef = Fraction(num_s, den_s * den_m)
    if m == 1:
        return Rational(coef)
    field = get_field((-m, 0, 1), Fraction(0), Fraction(m), origin=("sqrt", m))
    return _demote(Algebraic(field, (Fraction(0), coef)))


def _perfect_power(n):
    """Largest j with n = m^j; returns (m, j)."""
    best = (n, 1)
    for j in range(2, n.bit_length() + 1):
        m = round(n ** (1.0 / j))
        for cand in (m - 1, m, m + 1):
            if cand >= 2 and cand ** j == n:
                best = (cand, j)
    return best


def nth_root(n, k):
    """Exact k-th root of a positive integer."""
    n, k = int(n), int(k)
    if n <= 0 or k <= 0:
        raise ParseError("root(n, k) needs positive integers")
    if k == 1 or n == 1:
        return Rational(n)
    m, j = _perfect_power(n)
    g = math.gcd(j, k)
    n2, k2 = m ** (j // g), k // g
    if k2 == 1:
        return Rational(n2)
    if k2 == 2:
        return sqrt(n2)
    coeffs = [-n2] + [0] * (k2 - 1) + [1]
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(coeffs)), x)
    if not poly.is_irreducible:
        raise InternalInconsistency(f"x^{k2} - {n2} unexpectedly reducible")
    field = get_field(tuple(coeffs), Fraction(0), Fraction(max(n2, 2)),
                      origin=("root", n2, k2))
    return Algebraic(field, (Fraction(0), Fraction(1)))


def pi():
    return IntervalReal(0, {("pi",): Fraction(1)})


def algebraic_root(coeffs, lo, hi):
    """The unique root of the given integer polynomial in (lo, hi).

    The polynomial need not be irreducible; the irreducible factor with the
    root in the interval is extracted, and the interval is certified to
    isolate exactly one root of it.
    """
    coeffs = [int(c) for c in coeffs]
    lo, hi = Fraction(lo), Fraction(hi)
    if len(_poly_trim(coeffs)) < 2:
        raise ParseError("algebraic(...) needs a nonconstant polynomial")
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(coeffs)), x)
    candidates = []
    for factor, _mult in poly.factor_list()[1]:
        fc = tuple(Fraction(int(c)) for c in reversed(factor.all_coeffs()))
        n = count_real_roots(fc, lo, hi)
        if n == 1:
            candidates.append(factor)
        elif n > 1:
            raise ParseError(
                "isolating interval contains more than one root of a factor; shrink it")
    if len(candidates) != 1:
        raise ParseError(
            f"interval ({lo}, {hi}) does not isolate exactly one root "
            f"(matching factors: {len(candidates)})")
    factor = candidates[0]
    fcoeffs = [int(c) for c in reversed(factor.all_coeffs())]
    if len(fcoeffs) == 2:
        return Rational(Fraction(-fcoeffs[0], fcoeffs[1]))
    # shrink the user interval so it isolates within THIS factor only
    fc = tuple(Fraction(c) for c in fcoeffs)
    full = tuple(Fraction(c) for c in coeffs)
    while count_real_roots(full, lo, hi) != 1:
        mid = (lo + hi) / 2
        if count_real_roots(fc, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    field = get_field(tuple(fcoeffs), lo, hi)
    return Algebraic(field, (Fraction(0), Fraction(1)))


# ---------------------------------------------------------------------------
# coercion + arithmetic
# ---------------------------------------------------------------------------

def _level(s):
    if isinstance(s, Rational):
        return 0
    if isinstance(s, Algebraic):
        return 1
    return 2


def _lift_algebraic(s, field):
    if isinstance(s, Rational):
        return Algebraic(field, (s.value,))
    if isinstance(s, Algebraic):
        if s.field is field:
            return s
        joined, emb_s, _ = join_fields(s.field, field)
        if joined is field:
            return Algebraic(field, _apply_embedding(s.coeffs, emb_s, field.degree))
        raise InternalInconsistency(
            "target field does not contain the source field; join them first")
    raise UnsupportedScalar("cannot lift an interval scalar into a number field")


def _common_field(a, b):
    """Lift two exact scalars into one field (compositum when needed)."""
    if isinstance(a, Algebraic) and isinstance(b, Algebraic):
        if a.field is b.field:
            return a, b
        joined, emb_a, emb_b = join_fields(a.field, b.field)
        return (Algebraic(joined, _apply_embedding(a.coeffs, emb_a, joined.degree)),
                Algebraic(joined, _apply_embedding(b.coeffs, emb_b, joined.degree)))
    if isinstance(a, Algebraic):
        return a, _lift_algebraic(b, a.field)
    if isinstance(b, Algebraic):
        return _lift_algebraic(a, b.field), b
    return a, b


def to_interval_real(s):
    """Lift any scalar to the IntervalReal backend (exact, keeps linearity)."""
    if isinstance(s, IntervalReal):
        return s
    if isinstance(s, Rational):
        return IntervalReal(s.value)
    if isinstance(s, Algebraic):
        terms = {}
        const = s.coeffs[0] if s.coeffs else Fraction(0)
        for j, c in enumerate(s.coeffs[1:], start=1):
            if c == 0:
                continue
            terms[_power_atom(s, j)] = c
        return IntervalReal(const, terms)
    raise TypeError(f"not a scalar: {s!r}")


def _power_atom(s, j):
    origin = s.field.origin
    if origin is not None:
        kind = origin[0]
        if kind == "sqrt" and j == 1:
            return ("sqrt", origin[1])
        if kind == "root":
            _, n, k = origin
            # theta^j = root(n^j, k), canonicalized through nth_root
            val = nth_root(n ** j, k)
            if (isinstance(val, Algebraic) and val.field.origin is not None
                    and val.coeffs[0] == 0 and val.coeffs[1] == 1
                    and all(c == 0 for c in val.coeffs[2:])):
                return val.field.origin
    return ("algpow", s.field.key[0], s.field.key[1], j)


def _add(a, b):
    lv = max(_level(a), _level(b))
    if lv == 0:
        return Rational(a.value + b.value)
    if lv == 1:
        a2, b2 = _common_field(a, b)
        if isinstance(a2, Algebraic):
            return _demote(Algebraic(a2.field, _poly_add(a2.coeffs, b2.coeffs)))
        return Rational(a2.value + b2.value)
    a2, b2 = to_interval_real(a), to_interval_real(b)
    if a2.opaque is None and b2.opaque is None:
        terms = dict(a2.terms)
        for atom, c in b2.terms.items():
            terms[atom] = terms.get(atom, Fraction(0)) + c
        return _demote(IntervalReal(a2.const + b2.const, terms))
    return IntervalReal(opaque=("add", _opaque_of(a2), _opaque_of(b2)))


def _neg(a):
    if isinstance(a, Rational):
        return Rational(-a.value)
    if isinstance(a, Algebraic):
        return Algebraic(a.field, _poly_neg(a.coeffs))
    if a.opaque is None:
        return IntervalReal(-a.const, {k: -v for k, v in a.terms.items()})
    return IntervalReal(opaque=("neg", a.opaque))


def _opaque_of(s):
    if s.opaque is not None:
        return s.opaque
    return ("linear", s.const, tuple(sorted(s.terms.items())))


def _mul(a, b):
    lv = max(_level(a), _level(b))
    if lv == 0:
        return Rational(a.value * b.value)
    if lv == 1:
        a2, b2 = _common_field(a, b)
        if isinstance(a2, Algebraic):
            return _demote(Algebraic(a2.field, _poly_mul(a2.coeffs, b2.coeffs)))
        return Rational(a2.value * b2.value)
    a2, b2 = to_interval_real(a), to_interval_real(b)
    if a2.opaque is None and b2.opaque is None:
        if not a2.terms:
            c = a2.const
            return _demote(IntervalReal(c * b2.const, {k: c * v for k, v in b2.terms.items()}))
        if not b2.terms:
            c = b2.const
            return _demote(IntervalReal(c * a2.const, {k: c * v for k, v in a2.terms.items()}))
    return IntervalReal(opaque=("mul", _opaque_of(a2), _opaque_of(b2)))


def _div(a, b):
    lv = max(_level(a), _level(b))
    if lv == 0:
        if b.value == 0:
            raise ZeroDivisionError("scalar division by zero")
        return Rational(a.value / b.value)
    if lv == 1:
        a2, b2 = _common_field(a, b)
        if isinstance(b2, Rational):
            if b2.value == 0:
                raise ZeroDivisionError("scalar division by zero")
            return _mul(a2, Rational(1 / b2.value))
        if b2.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        inv = _poly_inverse_mod(b2.coeffs, b2.field._minpoly_frac)
        return _mul(a2 if isinstance(a2, Scalar) else Rational(a2),
                    Algebraic(b2.field, inv))
    a2, b2 = to_interval_real(a), to_interval_real(b)
    if b2.is_zero():
        raise ZeroDivisionError("scalar division by zero")
    if b2.opaque is None and not b2.terms:
        return _mul(a2, Rational(1 / b2.const))
    return IntervalReal(opaque=("div", _opaque_of(a2), _opaque_of(b2)))


# ---------------------------------------------------------------------------
# enclosures + comparison
# ---------------------------------------------------------------------------

_ATOM_FIELD_CACHE = {}


def _atom_enclosure(atom, prec):
    iv = mpmath.iv
    kind = atom[0]
    if kind == "pi":
        return iv.pi
    if kind == "sqrt":
        return iv.sqrt(iv.mpf(atom[1]))
    if kind == "root":
        _, n, k = atom
        return iv.exp(iv.log(iv.mpf(n)) / iv.mpf(k))
    if kind == "algpow":
        _, minpoly, index, j = atom
        key = (minpoly, index)
        field = _FIELD_REGISTRY.get(key)
        if field is None:
            raise InternalInconsistency(f"unknown field key in atom {atom!r}")
        coeffs = [Fraction(0)] * (j + 1)
        coeffs[j] = Fraction(1)
        return field.enclosure(coeffs, prec)
    raise InternalInconsistency(f"unknown atom {atom!r}")


def _tree_enclosure(node, prec):
    iv = mpmath.iv
    op = node[0]
    if op == "linear":
        _, const, items = node
        acc = _frac_iv(const, prec)
        for atom, coeff in items:
            acc = acc + _frac_iv(coeff, prec) * _atom_enclosure(atom, prec)
        return acc
    if op == "add":
        return _tree_enclosure(node[1], prec) + _tree_enclosure(node[2], prec)
    if op == "neg":
        return -_tree_enclosure(node[1], prec)
    if op == "mul":
        return _tree_enclosure(node[1], prec) * _tree_enclosure(node[2], prec)
    if op == "div":
        return _tree_enclosure(node[1], prec) / _tree_enclosure(node[2], prec)
    raise InternalInconsistency(f"unknown expression node {node!r}")


def enclosure(s, prec=INTERVAL_START_BITS):
    """mpmath interval guaranteed to contain the exact value."""
    iv = mpmath.iv
    old = iv.prec
    try:
        iv.prec = prec
        if isinstance(s, Rational):
            return _frac_iv(s.value, prec)
        if isinstance(s, Algebraic):
            return s.field.enclosure(s.coeffs, prec)
        if isinstance(s, IntervalReal):
            return _tree_enclosure(_opaque_of(s), prec)
    finally:
        iv.prec = old
    raise TypeError(f"not a scalar: {s!r}")


def compare(a, b):
    """Total-order comparison; exact for Rational/Algebraic, escalating for intervals."""
    a, b = _as_scalar(a), _as_scalar(b)
    lv = max(_level(a), _level(b))
    if lv == 0:
        d = a.value - b.value
        return Ordering.EQ if d == 0 else (Ordering.GT if d > 0 else Ordering.LT)
    if lv == 1:
        d = _add(a, _neg(b))
        if not isinstance(d, (Rational, Algebraic)):
            raise InternalInconsistency("exact difference produced a non-exact scalar")
        sg = d.sign()
        return Ordering.EQ if sg == 0 else (Ordering.GT if sg > 0 else Ordering.LT)
    d = _add(a, _neg(b))
    d = to_interval_real(d) if not isinstance(d, IntervalReal) else d
    if d.is_zero():
        return Ordering.EQ
    if isinstance(d, (Rational, Algebraic)):
        sg = d.sign()
        return Ordering(0 if sg == 0 else (1 if sg > 0 else -1))
    prec = INTERVAL_START_BITS
    while prec <= INTERVAL_MAX_BITS:
        e = enclosure(d, prec)
        if e.a > 0:
            return Ordering.GT
        if e.b < 0:
            return Ordering.LT
        prec *= 2
    raise UndecidableComparison(
        "could not separate interval scalars at the precision cap; "
        "supply rational or algebraic inputs for an exact answer",
        bits=INTERVAL_MAX_BITS)


def sign(s):
    c = compare(s, Rational(0))
    return int(c)


def is_zero(s):
    return compare(s, Rational(0)) is Ordering.EQ


# ---------------------------------------------------------------------------
# rational dimension + gcd
# ---------------------------------------------------------------------------

def join_scalars(values):
    """Lift a mixed list of exact scalars into one common field.

    Returns the scalars rewritten so that every Algebraic shares one field
    (rationals stay Rational).  Fields are folded pairwise through the
    embeddings join_fields provides.
    """
    values = [_as_scalar(v) for v in values]
    field = None
    lifted = []  # ("rat", Fraction) | ("alg", coeff tuple) entries
    for v in values:
        if isinstance(v, IntervalReal):
            raise UnsupportedScalar("interval scalars do not live in a number field")
        if isinstance(v, Rational):
            lifted.append(("rat", v.value))
            continue
        if field is None or v.field is field:
            field = v.field
            lifted.append(("alg", v.coeffs))
            continue
        newf, emb_old, emb_new = join_fields(field, v.field)
        lifted = [
            ("alg", _apply_embedding(c, emb_old, newf.degree)) if tag == "alg" else (tag, c)
            for tag, c in lifted
        ]
        lifted.append(("alg", _apply_embedding(v.coeffs, emb_new, newf.degree)))
        field = newf
    out = []
    for tag, c in lifted:
        if tag == "rat":
            out.append(Rational(c) if field is None else Algebraic(field, (c,)))
        else:
            out.append(Algebraic(field, c))
    return out, field


def rational_dimension(values):
    """Dimension of the Q-span of the given exact scalars."""
    values = [_as_scalar(v) for v in values]
    if not values:
        raise ValueError("rational_dimension needs a nonempty list")
    for v in values:
        if isinstance(v, IntervalReal):
            raise UnsupportedScalar(
                "rational dimension is not decidable from an interval enclosure")
    lifted, field = join_scalars(values)
    if field is None:
        rows = [(v.value,) for v in lifted]
    else:
        rows = [v.coeffs for v in lifted]
    return _rank(rows)


def _rank(rows):
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank, prow = 0, 0
    for col in range(ncols):
        pivot = next((r for r in range(prow, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[prow], rows[pivot] = rows[pivot], rows[prow]
        pv = rows[prow][col]
        for r in range(len(rows)):
            if r != prow and rows[r][col] != 0:
                f = rows[r][col] / pv
                for c in range(col, ncols):
                    rows[r][c] -= f * rows[prow][c]
        prow += 1
        rank += 1
        if prow == len(rows):
            break
    return rank


def gcd_ext(a, b):
    """Positive generator of aZ + bZ for commensurable nonnegative a, b."""
    a, b = _as_scalar(a), _as_scalar(b)
    if sign(a) < 0 or sign(b) < 0:
        raise ValueError("gcd_ext needs nonnegative inputs")
    az, bz = is_zero(a), is_zero(b)
    if az and bz:
        raise ValueError("gcd_ext(0, 0) is undefined")
    if az:
        return b
    if bz:
        return a
    if rational_dimension([a, b]) > 1:
        raise IncommensurableInputs("inputs span a Q-space of dimension > 1")
    if isinstance(a, Rational) and isinstance(b, Rational):
        fa, fb = a.value, b.value
        num = math.gcd(fa.numerator * fb.denominator, fb.numerator * fa.denominator)
        return Rational(Fraction(num, fa.denominator * fb.denominator))
    # b = (p/q) a in lowest terms, so aZ + bZ = (a/q)(qZ + pZ) = (a/q) gcd(p, q) Z
    lam = _div(b, a)
    if isinstance(lam, Algebraic):
        lam_r = lam.rational_part()
    elif isinstance(lam, Rational):
        lam_r = lam.value
    else:
        lam_r = None
    if lam_r is None:
        raise IncommensurableInputs("commensurability check failed to produce a ratio")
    g = math.gcd(lam_r.numerator, lam_r.denominator)
    return _mul(a, Rational(Fraction(g, lam_r.denominator)))


# ---------------------------------------------------------------------------
# Vec3
# ---------------------------------------------------------------------------

class Vec3:
    """Immutable triple of scalars; exact coordinates live in one joint backend."""

    __slots__ = ("coords",)

    def __init__(self, c1, c2, c3, join=True):
        coords = tuple(_as_scalar(c) for c in (c1, c2, c3))
        if join:
            coords = _join_coords(coords)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("Vec3 is immutable")

    @property
    def c1(self):
        return self.coords[0]

    @property
    def c2(self):
        return self.coords[1]

    @property
    def c3(self):
        return self.coords[2]

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        return isinstance(other, Vec3) and all(
            compare(a, b) is Ordering.EQ for a, b in zip(self.coords, other.coords))

    def __repr__(self):
        return f"Vec3({self.coords[0]!r}, {self.coords[1]!r}, {self.coords[2]!r})"

    def is_zero(self):
        return all(is_zero(c) for c in self.coords)

    def is_sorted_nonneg(self):
        c1, c2, c3 = self.coords
        return (sign(c1) >= 0 and compare(c1, c2) is not Ordering.GT
                and compare(c2, c3) is not Ordering.GT)

    def require_sorted_nonzero(self):
        if self.is_zero():
            raise ZeroVector("vector must be nonzero")
        if not self.is_sorted_nonneg():
            raise NotSorted("vector must satisfy 0 <= v1 <= v2 <= v3")

    def l1(self):
        return self.coords[0] + self.coords[1] + self.coords[2]

    def linf(self):
        return self.coords[2] if self.is_sorted_nonneg() else _max_abs(self.coords)

    def xi(self):
        """Smallest absolute value among the nonzero coordinates."""
        best = None
        for c in self.coords:
            if is_zero(c):
                continue
            a = c if sign(c) > 0 else _neg(c)
            if best is None or compare(a, best) is Ordering.LT:
                best = a
        if best is None:
            raise ZeroVector("xi of the zero vector")
        return best

    def inner(self, x):
        """Exact <x, v> for an integer 3-vector x."""
        acc = Rational(0)
        for xi, vi in zip(x, self.coords):
            if xi == 0:
                continue
            acc = acc + Rational(xi) * vi
        return acc

    def scale(self, s):
        return Vec3(*(c * s for c in self.coords), join=False)

    def sorted(self):
        """Sorted copy plus the permutation applied (as a tuple of source indexes)."""
        order = sorted(range(3), key=lambda i: _SortKey(self.coords[i]))
        return Vec3(*(self.coords[i] for i in order), join=False), tuple(order)


class _SortKey:
    __slots__ = ("s",)

    def __init__(self, s):
        self.s = s

    def __lt__(self, other):
        return compare(self.s, other.s) is Ordering.LT


def _max_abs(coords):
    best = None
    for c in coords:
        a = c if sign(c) >= 0 else _neg(c)
        if best is None or compare(a, best) is Ordering.GT:
            best = a
    return best


def _join_coords(coords):
    """Lift all coordinates into one common backend so comparisons stay decidable."""
    lv = max(_level(c) for c in coords)
    if lv == 0:
        return coords
    if lv == 2:
        return tuple(to_interval_real(c) for c in coords)
    lifted, field = join_scalars(coords)
    return tuple(_lift_algebraic(v, field) for v in lifted)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def parse_scalar(text, names=None):
    """Parse the scalar grammar: integers, p/q, sqrt(n), root(n,k), pi,
    algebraic(c0,...,cd; lo,hi), names, parentheses, + - * / ^."""
    parser = _Parser(text, names or {})
    value = parser.parse_expr()
    parser.expect_end()
    return value


def parse_vector(text, names=None):
    parts = _split_top_level(text, ",")
    if len(parts) != 3:
        raise ParseError(f"expected three comma-separated coordinates, got {len(parts)}")
    return Vec3(*(parse_scalar(p, names) for p in parts))


def _split_top_level(text, sep):
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


class _Parser:
    def __init__(self, text, names):
        self.text = text
        self.pos = 0
        self.names = names

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch):
        if not self.take(ch):
            raise ParseError(f"expected {ch!r} at position {self.pos} in {self.text!r}")

    def expect_end(self):
        self._skip()
        if self.pos != len(self.text):
            raise ParseError(f"trailing input at position {self.pos} in {self.text!r}")

    def parse_expr(self):
        value = self.parse_term()
        while True:
            if self.take("+"):
                value = value + self.parse_term()
            elif self.take("-"):
                value = value - self.parse_term()
            else:
                return value

    def parse_term(self):
        value = self.parse_factor()
        while True:
            if self.take("*"):
                value = value * self.parse_factor()
            elif self.take("/"):
                value = value / self.parse_factor()
            else:
                return value

    def parse_factor(self):
        if self.take("-"):
            return _neg(self.parse_factor())
        if self.take("+"):
            return self.parse_factor()
        value = self.parse_primary()
        if self.take("^"):
            exp = self.parse_int()
            if exp < 0:
                return Rational(1) / _pow(value, -exp)
            return _pow(value, exp)
        return value

    def parse_int(self):
        self._skip()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(f"expected an integer at position {start} in {self.text!r}")
        return int(self.text[start:self.pos])

    def parse_primary(self):
        ch = self.peek()
        if ch == "(":
            self.expect("(")
            value = self.parse_expr()
            self.expect(")")
            return value
        if ch.isdigit():
            return Rational(self.parse_int())
        ident = self._parse_ident()
        if ident == "pi":
            return pi()
        if ident == "sqrt":
            self.expect("(")
            arg = self.parse_expr()
            self.expect(")")
            if isinstance(arg, Rational):
                return sqrt(arg.value)
            raise ParseError("sqrt(...) takes a rational argument")
        if ident == "root":
            self.expect("(")
            n = self.parse_int()
            self.expect(",")
            k = self.parse_int()
            self.expect(")")
            return nth_root(n, k)
        if ident == "algebraic":
            self.expect("(")
            body_start = self.pos
            depth = 1
            while depth:
                if self.pos >= len(self.text):
                    raise ParseError("unterminated algebraic(...)")
                c = self.text[self.pos]
                if c == "(":
                    depth += 1
                elif c == ")":
                    depth -= 1
                self.pos += 1
            body = self.text[body_start:self.pos - 1]
            halves = body.split(";")
            if len(halves) != 2:
                raise ParseError("algebraic(c0,...,cd; lo,hi) needs one ';'")
            coeffs = [int(c.strip()) for c in halves[0].split(",")]
            endpoints = _split_top_level(halves[1], ",")
            if len(endpoints) != 2:
                raise ParseError("algebraic(...) needs two interval endpoints")
            lo = _parse_fraction(endpoints[0])
            hi = _parse_fraction(endpoints[1])
            return algebraic_root(coeffs, lo, hi)
        if ident and ident in self.names:
            return _as_scalar(self.names[ident])
        if ident:
            raise ParseError(f"unknown name {ident!r} in {self.text!r}")
        raise ParseError(f"unexpected character {ch!r} at position {self.pos} in {self.text!r}")

    def _parse_ident(self):
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]


def _parse_fraction(text):
    parts = text.split("/")
    if len(parts) == 1:
        return Fraction(parts[0].strip())
    if len(parts) == 2:
        return Fraction(int(parts[0]), int(parts[1]))
    raise ParseError(f"bad rational literal {text!r}")


def _pow(base, exp):
    out = Rational(1)
    for _ in range(exp):
        out = out * base
    return out


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def decimal_shadow(s, digits=30):
    """Decimal string with the requested significant digits (for human readers)."""
    prec = max(64, int(digits * 3.5) + 16)
    e = enclosure(s, prec)
    with mpmath.workprec(prec):
        mid = (mpmath.mpf(e.a) + mpmath.mpf(e.b)) / 2
        return mpmath.nstr(mid, digits)


def _frac_str(fr):
    return f"{fr.numerator}/{fr.denominator}" if fr.denominator != 1 else str(fr.numerator)


def _atom_json(atom):
    return list(atom)


def _atom_from_json(obj):
    kind = obj[0]
    if kind == "pi":
        return ("pi",)
    if kind == "sqrt":
        return ("sqrt", int(obj[1]))
    if kind == "root":
        return ("root", int(obj[1]), int(obj[2]))
    if kind == "algpow":
        return ("algpow", tuple(int(c) for c in obj[1]), int(obj[2]), int(obj[3]))
    raise ParseError(f"unknown atom kind {kind!r}")


def scalar_to_json(s):
    s = _as_scalar(s)
    if isinstance(s, Rational):
        return {"kind": "rational", "p": s.value.numerator, "q": s.value.denominator,
                "decimal": decimal_shadow(s)}
    if isinstance(s, Algebraic):
        lo, hi = s.field.seed
        return {"kind": "algebraic",
                "minpoly": list(s.field.minpoly),
                "interval": [_frac_str(lo), _frac_str(hi)],
                "coeffs": [_frac_str(c) for c in s.coeffs],
                "decimal": decimal_shadow(s)}
    if isinstance(s, IntervalReal):
        if s.opaque is not None:
            raise UnsupportedScalar("opaque interval expressions do not round-trip to JSON")
        return {"kind": "interval",
                "const": _frac_str(s.const),
                "terms": [[_atom_json(a), _frac_str(c)] for a, c in sorted(s.terms.items())],
                "decimal": decimal_shadow(s)}
    raise TypeError(f"not a scalar: {s!r}")


def scalar_from_json(obj):
    kind = obj["kind"]
    if kind == "rational":
        return Rational(Fraction(int(obj["p"]), int(obj["q"])))
    if kind == "algebraic":
        lo = _parse_fraction(obj["interval"][0])
        hi = _parse_fraction(obj["interval"][1])
        field = get_field(tuple(int(c) for c in obj["minpoly"]), lo, hi)
        coeffs = tuple(_parse_fraction(c) for c in obj["coeffs"])
        return _demote(Algebraic(field, coeffs))
    if kind == "interval":
        const = _parse_fraction(obj["const"])
        terms = {}
        for atom_obj, coeff in obj["terms"]:
            atom = _atom_from_json(atom_obj)
            if atom[0] == "algpow" and (atom[1], atom[2]) not in _FIELD_REGISTRY:
                raise ParseError("algpow atom references an unregistered field")
            terms[atom] = _parse_fraction(coeff)
        return _demote(IntervalReal(const, terms))
    raise ParseError(f"unknown scalar kind {kind!r}")


def vec3_to_json(v):
    return [scalar_to_json(c) for c in v.coords]


def vec3_from_json(obj):
    return Vec3(*(scalar_from_json(c) for c in obj))
