"""Face-level view: unit faces, stepped planes and dual substitutions.

A unit face is a unit square attached at an integer distinguished vertex,
orthogonal to one of the three axes; a pattern is a finite set of faces.
The dual map of a unimodular word substitution sends a face to a union of
faces after an exact inverse-incidence-matrix translation; the three maps
tied to the fully subtractive steps get precomputed single-face rules.
Patterns of the stepped plane of v are exactly the faces [x,i] with
0 <= <x,v> < v_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import intmat
from .errors import BudgetExhaustedError, ExpansionTooShort, NotUnimodular
from .exactnum import Ordering, Rational, Vec3, compare, sign
from .fsalgo import FS_MATRICES, Halted, expand


class Face(NamedTuple):
    x: int
    y: int
    z: int
    t: int

    @property
    def pos(self):
        return (self.x, self.y, self.z)

    def translate(self, d):
        return Face(self.x + d[0], self.y + d[1], self.z + d[2], self.t)


def face(pos, t):
    return Face(pos[0], pos[1], pos[2], t)


U_PATTERN = frozenset({Face(0, 0, 0, 1), Face(0, 0, 0, 2), Face(0, 0, 0, 3)})

# corner offsets of the closed unit square of each face type
_CORNERS = {
    1: ((0, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1)),
    2: ((0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 0, 1)),
    3: ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)),
}


def face_corners(f):
    return tuple((f.x + dx, f.y + dy, f.z + dz) for dx, dy, dz in _CORNERS[f.t])


def faces_touch(f, g):
    """Closed squares intersect; on the unit cube complex this means a shared
    integer corner."""
    return bool(set(face_corners(f)) & set(face_corners(g)))


def faces_edge_connected(f, g):
    """Faces share a full lattice edge (exactly two common corners)."""
    return f != g and len(set(face_corners(f)) & set(face_corners(g))) == 2


def sort_faces(pattern):
    return sorted(pattern, key=lambda f: (f.t, f.x, f.y, f.z))


def translate_pattern(pattern, d):
    return frozenset(f.translate(d) for f in pattern)


def canonical_pattern(pattern):
    """Translate so the lexicographically smallest face sits at the origin."""
    if not pattern:
        return frozenset()
    first = min(pattern)
    return translate_pattern(pattern, (-first.x, -first.y, -first.z))


# ---------------------------------------------------------------------------
# substitutions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Substitution:
    """Morphism of the free monoid over {1,2,3}, letter -> word."""

    images: tuple  # images[i-1] is the image word of letter i, a tuple of letters

    @staticmethod
    def of(img1, img2, img3):
        return Substitution((tuple(img1), tuple(img2), tuple(img3)))

    def image(self, letter):
        return self.images[letter - 1]

    def compose(self, other):
        """self after other: (self . other)(w) = self(other(w))."""
        def apply_self(word):
            out = []
            for letter in word:
                out.extend(self.images[letter - 1])
            return tuple(out)

        return Substitution(tuple(apply_self(other.images[i]) for i in range(3)))


SIGMA_FS = {
    1: Substitution.of((1,), (2, 1), (3, 1)),
    2: Substitution.of((2,), (1, 2), (3, 2)),
    3: Substitution.of((3,), (1, 3), (2, 3)),
}


def incidence_matrix(s):
    """m[i][j] counts the letter i+1 in the image of j+1; must be unimodular."""
    m = tuple(
        tuple(s.images[j].count(i + 1) for j in range(3))
        for i in range(3)
    )
    if intmat.det(m) not in (1, -1):
        raise NotUnimodular(f"incidence matrix has det {intmat.det(m)}")
    return m


def parikh(word):
    return (word.count(1), word.count(2), word.count(3))


def dual_apply(s, pattern):
    """Dual substitution: each face [x,i] maps to
    M^-1 x + union over decompositions sigma(j) = p i s of [M^-1 l(s), j]."""
    m = incidence_matrix(s)
    minv = intmat.inv_unimodular(m)
    rules = _face_rules(s, minv)
    out = set()
    for f in pattern:
        base = intmat.mat_vec(minv, f.pos)
        for off, j in rules[f.t]:
            out.add(Face(base[0] + off[0], base[1] + off[1], base[2] + off[2], j))
    return frozenset(out)


def _face_rules(s, minv):
    """For each input type i: list of (offset, output type) with offset = M^-1 l(s)."""
    rules = {1: [], 2: [], 3: []}
    for j in (1, 2, 3):
        word = s.image(j)
        for pos, letter in enumerate(word):
            suffix = word[pos + 1:]
            off = intmat.mat_vec(minv, parikh(suffix))
            rules[letter].append((off, j))
    return rules


_SIGMA_RULES = {}
for _i, _s in SIGMA_FS.items():
    _m = incidence_matrix(_s)
    _SIGMA_RULES[_i] = (intmat.inv_unimodular(_m), _face_rules(_s, intmat.inv_unimodular(_m)))


def sigma_fs(i, pattern):
    """Fast path for the three fully subtractive dual maps."""
    minv, rules = _SIGMA_RULES[i]
    out = set()
    for f in pattern:
        base = intmat.mat_vec(minv, (f.x, f.y, f.z))
        for off, j in rules[f.t]:
            out.add(Face(base[0] + off[0], base[1] + off[1], base[2] + off[2], j))
    return frozenset(out)


def sigma_fs_word(word, pattern):
    """Apply the composition indexed by an expansion prefix: the last letter
    acts first, so the whole map is Sigma_{w1} o ... o Sigma_{wn}."""
    out = frozenset(pattern)
    for digit in reversed(tuple(word)):
        out = sigma_fs(digit, out)
    return out


def dual_preimage(i, f):
    """Faces g with f in sigma_fs(i, {g}); closed-form per face type."""
    x, y, z = f.x, f.y, f.z
    s = x + y + z
    if i == 1:
        first = Face(s, y, z, 1)
        if f.t == 1:
            return frozenset({first})
        return frozenset({first, Face(s - 1, y, z, f.t)})
    if i == 2:
        first = Face(y, s, z, 2)
        if f.t == 1:
            return frozenset({first})
        return frozenset({first, Face(y, s - 1, z, f.t)})
    if i == 3:
        first = Face(y, z, s, 3)
        if f.t == 1:
            return frozenset({first})
        return frozenset({first, Face(y, z, s - 1, f.t)})
    raise ValueError(f"bad substitution index {i}")


# ---------------------------------------------------------------------------
# stepped planes
# ---------------------------------------------------------------------------

def face_in_plane(v, f):
    """0 <= <x,v> < v_i, decided exactly."""
    if not isinstance(v, Vec3):
        v = Vec3(*v)
    val = v.inner(f.pos)
    if sign(val) < 0:
        return False
    return compare(val, v.coords[f.t - 1]) is Ordering.LT


def stepped_plane_window(v, radius, anchor=(0, 0, 0)):
    """All faces of the stepped plane with distinguished vertex in the box."""
    if isinstance(v, Vec3):
        return _stepped_window_scalar(v, radius, anchor)
    return _stepped_window_int(tuple(v), radius, anchor)


def _stepped_window_int(v, radius, anchor):
    v1, v2, v3 = v
    out = set()
    ax, ay, az = anchor
    for x in range(ax - radius, ax + radius + 1):
        for y in range(ay - radius, ay + radius + 1):
            for z in range(az - radius, az + radius + 1):
                val = x * v1 + y * v2 + z * v3
                if val < 0:
                    continue
                if val < v1:
                    out.add(Face(x, y, z, 1))
                if val < v2:
                    out.add(Face(x, y, z, 2))
                if val < v3:
                    out.add(Face(x, y, z, 3))
    return frozenset(out)


def _stepped_window_scalar(v, radius, anchor):
    out = set()
    for x in range(anchor[0] - radius, anchor[0] + radius + 1):
        for y in range(anchor[1] - radius, anchor[1] + radius + 1):
            for z in range(anchor[2] - radius, anchor[2] + radius + 1):
                val = v.inner((x, y, z))
                if sign(val) < 0:
                    continue
                for t in (1, 2, 3):
                    if compare(val, v.coords[t - 1]) is Ordering.LT:
                        out.add(Face(x, y, z, t))
    return frozenset(out)


def distinguished_vertices(pattern):
    return {f.pos for f in pattern}


def all_vertices(pattern):
    out = set()
    for f in pattern:
        out.update(face_corners(f))
    return out


# ---------------------------------------------------------------------------
# P_n generation
# ---------------------------------------------------------------------------

DEFAULT_FACE_BUDGET = 5_000_000


def expansion_prefix(v, n, budget=None):
    """First n expansion digits of v; ExpansionTooShort when it halts early."""
    exp = expand(v, max(n, budget or n))
    if len(exp.digits) >= n:
        return tuple(exp.digits[:n])
    from .fsalgo import Periodic

    if isinstance(exp.status, Periodic):
        pre, per = exp.status.preperiod, exp.status.period
        digits = list(exp.digits)
        while len(digits) < n:
            digits.append(digits[pre + (len(digits) - pre) % per])
        return tuple(digits[:n])
    if isinstance(exp.status, Halted):
        raise ExpansionTooShort(
            f"expansion halts after {exp.status.n} steps, before depth {n}",
            halted_at=exp.status.n)
    raise BudgetExhaustedError(f"no {n}-digit prefix within the step budget")


def generate_pn_from_word(word, n=None, face_budget=DEFAULT_FACE_BUDGET):
    """P_n for an explicit digit word (first letter acts last/outermost)."""
    word = tuple(word)
    n = len(word) if n is None else n
    pattern = U_PATTERN
    for k in range(n - 1, -1, -1):
        pattern = sigma_fs(word[k], pattern)
        if len(pattern) > face_budget:
            raise BudgetExhaustedError(
                f"pattern exceeded the face budget ({face_budget}) at depth {n - k}")
    return pattern


def generate_pn(v, n, budget=None, face_budget=DEFAULT_FACE_BUDGET):
    """P_n = Sigma_{i_1} ... Sigma_{i_n} applied to the lower unit-cube corner."""
    word = expansion_prefix(v, n, budget)
    return generate_pn_from_word(word, n, face_budget)


def pn_levels_from_word(word, n, face_budget=DEFAULT_FACE_BUDGET):
    """[P_0, ..., P_n] for one word; levels are nested by construction."""
    return [generate_pn_from_word(word, k, face_budget) for k in range(n + 1)]


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------

def pattern_to_json(pattern):
    return [{"x": [f.x, f.y, f.z], "type": f.t} for f in sort_faces(pattern)]


def pattern_from_json(objs):
    return frozenset(Face(o["x"][0], o["x"][1], o["x"][2], o["type"]) for o in objs)


def pattern_to_off(pattern):
    """OFF mesh with one quad per face, vertices per the face parameterization."""
    faces = sort_faces(pattern)
    vertices = {}
    order = []

    def vid(p):
        if p not in vertices:
            vertices[p] = len(vertices)
            order.append(p)
        return vertices[p]

    quads = []
    for f in faces:
        if f.t == 1:
            loop = ((0, 0, 0), (0, 1, 0), (0, 1, 1), (0, 0, 1))
        elif f.t == 2:
            loop = ((0, 0, 0), (0, 0, 1), (1, 0, 1), (1, 0, 0))
        else:
            loop = ((0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0))
        quads.append([vid((f.x + dx, f.y + dy, f.z + dz)) for dx, dy, dz in loop])
    lines = ["OFF", f"{len(order)} {len(quads)} 0"]
    lines.extend(f"{x} {y} {z}" for x, y, z in order)
    lines.extend("4 " + " ".join(map(str, quad)) for quad in quads)
    return "\n".join(lines) + "\n"
