"""Point-set view of arithmetical discrete planes.

A plane is the set of integer points x with 0 <= <x,v> < omega.  Windowed
enumeration, 6-neighborhood (2-adjacency) connectivity and a windowed
semi-decision for plane connectivity live here.  All membership tests are
exact through the scalar backends; inner products over a window are built
incrementally from per-axis tables so each point costs two scalar adds and
two comparisons.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import WindowTooLarge
from .exactnum import Ordering, Rational, Vec3, compare, sign

POINT_CAP = 10 ** 8

NEIGHBOR_OFFSETS = (
    (1, 0, 0), (-1, 0, 0),
    (0, 1, 0), (0, -1, 0),
    (0, 0, 1), (0, 0, -1),
)


@dataclass(frozen=True)
class PlaneSpec:
    v: Vec3
    omega: object  # Scalar

    def __post_init__(self):
        if sign(self.omega) < 0:
            raise ValueError("thickness must be nonnegative")


@dataclass(frozen=True)
class Window:
    radius: int
    anchor: tuple = (0, 0, 0)

    def __post_init__(self):
        if self.radius < 1:
            raise ValueError("window radius must be >= 1")


def contains(spec, x):
    """Exact membership test 0 <= <x,v> < omega."""
    val = spec.v.inner(x)
    if sign(val) < 0:
        return False
    return compare(val, spec.omega) is Ordering.LT


def enumerate_plane(spec, window):
    """All plane points in the window box, in lexicographic order."""
    r = window.radius
    count = (2 * r + 1) ** 3
    if count > POINT_CAP:
        raise WindowTooLarge(f"window holds {count} candidate points (cap {POINT_CAP})")
    if sign(spec.omega) <= 0:
        return []
    ax, ay, az = window.anchor
    v1, v2, v3 = spec.v.coords
    zero = Rational(0)
    xs = _axis_table(v1, ax, r)
    ys = _axis_table(v2, ay, r)
    zs = _axis_table(v3, az, r)
    points = []
    for i, x in enumerate(range(ax - r, ax + r + 1)):
        vx = xs[i]
        for j, y in enumerate(range(ay - r, ay + r + 1)):
            vxy = vx + ys[j]
            for k, z in enumerate(range(az - r, az + r + 1)):
                val = vxy + zs[k]
                if sign(val) >= 0 and compare(val, spec.omega) is Ordering.LT:
                    points.append((x, y, z))
    return points


def _axis_table(coord, anchor, r):
    """coord * t for t in [anchor-r, anchor+r], built by repeated addition."""
    lo = anchor - r
    vals = [coord * Rational(lo)]
    for _ in range(2 * r):
        vals.append(vals[-1] + coord)
    return vals


@dataclass(frozen=True)
class ConnectivityReport:
    component_count: int
    component_sizes: tuple
    representatives: tuple  # lex-smallest point of each component, largest first
    contains_origin_component: bool

    @property
    def connected(self):
        return self.component_count == 1


def connectivity(points):
    """BFS components under the 6-neighborhood; empty input has 0 components."""
    todo = set(map(tuple, points))
    comps = []
    while todo:
        start = todo.pop()
        queue = deque([start])
        comp = {start}
        while queue:
            cx, cy, cz = queue.popleft()
            for dx, dy, dz in NEIGHBOR_OFFSETS:
                nb = (cx + dx, cy + dy, cz + dz)
                if nb in todo:
                    todo.remove(nb)
                    comp.add(nb)
                    queue.append(nb)
        comps.append(comp)
    comps.sort(key=lambda c: (-len(c), min(c)))
    return ConnectivityReport(
        component_count=len(comps),
        component_sizes=tuple(len(c) for c in comps),
        representatives=tuple(min(c) for c in comps),
        contains_origin_component=any((0, 0, 0) in c for c in comps),
    )


@dataclass(frozen=True)
class ConnectedAtAll:
    radii: tuple


@dataclass(frozen=True)
class DisconnectedStable:
    radii: tuple
    witness: tuple  # pair of points in distinct components at every radius


@dataclass(frozen=True)
class Inconclusive:
    radii: tuple
    detail: str


def is_connected_windowed(spec, radii):
    """Windowed surrogate for plane connectivity (a semi-decision).

    ConnectedAtAll: each window is one nonempty component.
    DisconnectedStable: one specific pair of points sits in distinct
    components at every radius (the lex-smallest points of the two largest
    components at the smallest radius).
    Anything else is Inconclusive; no claim is made about the infinite set.
    """
    radii = sorted(radii)
    if len(radii) < 2:
        raise ValueError("need at least two radii")
    reports = []
    point_sets = []
    for r in radii:
        pts = enumerate_plane(spec, Window(r))
        point_sets.append(set(pts))
        reports.append((r, connectivity(pts)))
    if all(rep.component_count == 1 for _, rep in reports):
        return ConnectedAtAll(tuple(radii))
    first_rep = reports[0][1]
    if first_rep.component_count >= 2:
        a, b = first_rep.representatives[0], first_rep.representatives[1]
        stable = True
        for r, pts in zip(radii, point_sets):
            if a not in pts or b not in pts or _same_component(pts, a, b):
                stable = False
                break
        if stable:
            return DisconnectedStable(tuple(radii), (a, b))
    return Inconclusive(tuple(radii), "component structure changed across radii")


def _same_component(points, a, b):
    if a == b:
        return True
    seen = {a}
    queue = deque([a])
    while queue:
        cx, cy, cz = queue.popleft()
        for dx, dy, dz in NEIGHBOR_OFFSETS:
            nb = (cx + dx, cy + dy, cz + dz)
            if nb == b:
                return True
            if nb in points and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return False


def points_to_json(points):
    return [list(p) for p in sorted(points)]


def points_to_xyz(points):
    return "\n".join(f"{x} {y} {z}" for x, y, z in sorted(points)) + "\n"
