"""4-to-2 cut and project schemes and model-set pattern occurrences.

The scheme projects a translated copy of Z^4 (modulo the rank-2 kernel
spanned by (1,-1,0,0) and (0,0,1,-1)) to the physical plane and to an
internal 2-torus.  The star map sends an integer pair to internal space;
it coincides with the orbit of the scheme's seed under the associated
toroidal rotation, which is how it is computed here.  The 4-dimensional
lift is kept so the projection formulas themselves stay testable.

Pattern occurrences are model sets: positions whose star image falls in
the acceptance window cut out by the pattern's coding region.  Membership
on the window boundary is resolved by the same directional perturbation
used for orbit coding, which realizes the shrunk window of singular seeds
without constructing it.

Note on the unit-torus scheme: its star map with seed (r, s) is
(m, n) -> ({r + m/phi^2}, {s + n/phi^2}), and since 1/phi^2 = 2 - phi the
fractional parts equal {r - phi*m} and {s - phi*n}; a closed form with
+phi*m in both coordinates describes a different (sign-conjugate) orbit.
"""

from __future__ import annotations

from typing import Sequence

from .dynamics import Patch, Window2D, Z2Rotation, coding_region
from .geometry import ConvexPolygon, Vec2G, area
from .goldenfield import GoldenNumber, gn
from .partition import Label, NotCovered, Partition, region_tester

Matrix2x4 = tuple[tuple[GoldenNumber, ...], tuple[GoldenNumber, ...]]
Lift = tuple[GoldenNumber, GoldenNumber, GoldenNumber, GoldenNumber]


class CutProjectScheme:
    """Projection data of a 4-to-2 cut and project scheme.

    ``physical_map`` and ``internal_map`` are 2x4 matrices; ``seed_lift``
    translates Z^4 to the scheme's lattice; ``rotation`` and ``seed`` give
    the dynamical form of the star map.
    """

    __slots__ = ("physical_map", "internal_map", "seed", "seed_lift", "rotation")

    def __init__(self, physical_map: Matrix2x4, internal_map: Matrix2x4,
                 seed: Vec2G, seed_lift: Lift, rotation: Z2Rotation) -> None:
        object.__setattr__(self, "physical_map", physical_map)
        object.__setattr__(self, "internal_map", internal_map)
        object.__setattr__(self, "seed", rotation.lattice.reduce(seed))
        object.__setattr__(self, "seed_lift", tuple(seed_lift))
        object.__setattr__(self, "rotation", rotation)

    def __setattr__(self, name, value):
        raise AttributeError("CutProjectScheme is immutable")

    def physical(self, lift: Sequence[GoldenNumber]) -> Vec2G:
        """Exact image under the physical projection (no reduction)."""
        return _apply_matrix(self.physical_map, lift)

    def internal(self, lift: Sequence[GoldenNumber]) -> Vec2G:
        """Exact image under the internal projection, reduced to the torus."""
        return self.rotation.lattice.reduce(_apply_matrix(self.internal_map, lift))

    def lift(self, n: tuple[int, int]) -> Lift:
        """A lattice point projecting physically to n (canonical choice)."""
        t = self.seed_lift
        return (t[0] + n[0], t[1], t[2] + n[1], t[3])

    def star(self, n: tuple[int, int]) -> Vec2G:
        """Star map: the internal image of the lift of n.

        Computed as the rotation orbit of the seed; the two agree exactly
        (this identity is part of the test suite).
        """
        return self.rotation.apply(n, self.seed)


def _apply_matrix(m: Matrix2x4, lift: Sequence[GoldenNumber]) -> Vec2G:
    vals = [x if isinstance(x, GoldenNumber) else gn(x) for x in lift]
    if len(vals) != 4:
        raise ValueError("lift must have four coordinates")
    x = gn(0)
    y = gn(0)
    for coef, val in zip(m[0], vals):
        x = x + coef * val
    for coef, val in zip(m[1], vals):
        y = y + coef * val
    return Vec2G(x, y)


def star_map(scheme: CutProjectScheme, n: tuple[int, int]) -> Vec2G:
    return scheme.star(n)


class AcceptanceWindow:
    """A positive-area window in internal space, as convex pieces."""

    __slots__ = ("pieces",)

    def __init__(self, pieces: Sequence[ConvexPolygon]) -> None:
        pieces = tuple(pieces)
        if not pieces:
            raise ValueError("window must have positive area")
        total = gn(0)
        for p in pieces:
            total = total + area(p)
        if total.sign() <= 0:
            raise ValueError("window must have positive area")
        object.__setattr__(self, "pieces", pieces)

    def __setattr__(self, name, value):
        raise AttributeError("AcceptanceWindow is immutable")

    def area(self) -> GoldenNumber:
        total = gn(0)
        for p in self.pieces:
            total = total + area(p)
        return total

    def boundary_segments(self) -> list[tuple[Vec2G, Vec2G]]:
        return [edge for p in self.pieces for edge in p.edges()]


def occurrences(scheme: CutProjectScheme, partition: Partition, pattern: Patch,
                v: Vec2G, window: Window2D) -> set[tuple[int, int]]:
    """Positions in the window where the pattern occurs in the coding of the
    scheme's seed, computed through the acceptance window.

    A position m counts when the star image of m - pattern.origin falls in
    the pattern's coding region, boundary hits resolved by v.  For patterns
    with an empty region the answer is empty.
    """
    from .dynamics import check_direction

    check_direction(partition, v)
    region = coding_region(scheme.rotation, partition, pattern)
    if not region:
        return set()
    AcceptanceWindow(region)
    tester = region_tester(region, scheme.rotation.lattice)
    ox, oy = pattern.origin
    hits: set[tuple[int, int]] = set()
    for m in window.positions():
        q = scheme.star((m[0] - ox, m[1] - oy))
        if tester.region_contains(q, v):
            hits.add(m)
    return hits


class Classification:
    """Outcome of the finite-horizon genericity check."""

    __slots__ = ("generic", "horizon", "singular_at", "edge")

    def __init__(self, generic: bool, horizon: int,
                 singular_at: tuple[int, int] | None = None,
                 edge: tuple[Vec2G, Vec2G] | None = None) -> None:
        object.__setattr__(self, "generic", generic)
        object.__setattr__(self, "horizon", horizon)
        object.__setattr__(self, "singular_at", singular_at)
        object.__setattr__(self, "edge", edge)

    def __setattr__(self, name, value):
        raise AttributeError("Classification is immutable")

    def __repr__(self) -> str:
        if self.generic:
            return f"generic up to {self.horizon}"
        return f"singular at n={self.singular_at} on edge {self.edge!r}"


def classify_up_to(scheme: CutProjectScheme, partition: Partition, x: Vec2G,
                   horizon: int) -> Classification:
    """First orbit point within the horizon that lies on an atom boundary.

    Enumerates n by increasing max-norm, lexicographic within a shell, and
    tests exact incidence of the orbit point with the partition boundary.
    Points that cannot be certified interior (shared edges of same-label
    pieces excepted) are reported singular.
    """
    return classify_orbit(scheme.rotation, partition, x, horizon)


def classify_orbit(rotation: Z2Rotation, partition: Partition, x: Vec2G,
                   horizon: int) -> Classification:
    locator = partition._get_locator()
    for n in _shell_order(horizon):
        q = rotation.apply(n, x)
        edge = _boundary_edge(locator, q)
        if edge is not None:
            return Classification(False, horizon, singular_at=n, edge=edge)
    return Classification(True, horizon)


def _shell_order(horizon: int):
    for r in range(horizon + 1):
        shell = []
        for a in range(-r, r + 1):
            for b in range(-r, r + 1):
                if max(abs(a), abs(b)) == r:
                    shell.append((a, b))
        yield from sorted(shell)


def _boundary_edge(locator, q: Vec2G):
    """Exact incidence: None when q is interior to an atom, else an edge
    of the partition through q."""
    q = locator.lattice.reduce(q)
    fx, fy = q.x.to_float(), q.y.to_float()
    incident: list[tuple[Label, list[tuple[Vec2G, Vec2G]]]] = []
    for idx in locator.candidates(fx, fy):
        entry = locator.entries[idx]
        x0, y0, x1, y1 = entry.bbox
        if fx < x0 - locator.PAD or fx > x1 + locator.PAD \
                or fy < y0 - locator.PAD or fy > y1 + locator.PAD:
            continue
        inside = True
        zero_edges: list[tuple[Vec2G, Vec2G]] = []
        for e in entry.edges:
            cf = e.fdx * (fy - e.fuy) - e.fdy * (fx - e.fux)
            mag = abs(e.fdx) * (abs(fy) + abs(e.fuy)) \
                + abs(e.fdy) * (abs(fx) + abs(e.fux))
            if abs(cf) > mag * 1e-12:
                s = 1 if cf > 0.0 else -1
            else:
                s = (e.dx * (q.y - e.uy) - e.dy * (q.x - e.ux)).sign()
            if s < 0:
                inside = False
                break
            if s == 0:
                u = Vec2G(e.ux, e.uy)
                zero_edges.append((u, Vec2G(e.ux + e.dx, e.uy + e.dy)))
        if not inside:
            continue
        if not zero_edges:
            return None  # strictly interior to a piece
        incident.append((entry.label, zero_edges))
    if not incident:
        raise NotCovered(f"no piece closure contains {q!r}")
    labels = {lbl for lbl, _ in incident}
    if len(labels) == 1 and len(incident) == 2 \
            and all(len(zs) == 1 for _, zs in incident):
        (u1, w1), (u2, w2) = incident[0][1][0], incident[1][1][0]
        if (w1 - u1).cross(w2 - u2).sign() == 0:
            # relative interior of an edge both of whose sides belong to
            # the same atom: interior of the atom, not a boundary point
            return None
    return incident[0][1][0]
