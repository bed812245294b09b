"""Exact planar geometry over the golden field.

Vectors, lattices in lower-triangular normal form, strictly convex polygons,
Sutherland-Hodgman clipping and fundamental-domain reduction.  All predicates
are exact; there is no floating-point geometry mode.  Every type is an
immutable value, safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .goldenfield import GoldenNumber, Scalar, gn


class GeometryError(ValueError):
    pass


class Vec2G:
    """A point or vector with golden-field coordinates."""

    __slots__ = ("x", "y")

    def __init__(self, x: Scalar, y: Scalar) -> None:
        object.__setattr__(self, "x", x if isinstance(x, GoldenNumber) else gn(x))
        object.__setattr__(self, "y", y if isinstance(y, GoldenNumber) else gn(y))

    def __setattr__(self, name, value):
        raise AttributeError("Vec2G is immutable")

    def __add__(self, other: Vec2G) -> Vec2G:
        return Vec2G(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2G) -> Vec2G:
        return Vec2G(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Vec2G:
        return Vec2G(-self.x, -self.y)

    def scale(self, k: Scalar) -> Vec2G:
        return Vec2G(self.x * k, self.y * k)

    def cross(self, other: Vec2G) -> GoldenNumber:
        return self.x * other.y - self.y * other.x

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vec2G):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __repr__(self) -> str:
        return f"Vec2G({self.x}, {self.y})"

    def serialize(self) -> list[str]:
        return [self.x.serialize(), self.y.serialize()]

    @classmethod
    def parse(cls, pair: Sequence[str]) -> Vec2G:
        return cls(GoldenNumber.parse(pair[0]), GoldenNumber.parse(pair[1]))

    def to_floats(self) -> tuple[float, float]:
        return (self.x.to_float(), self.y.to_float())


def vec(x, y) -> Vec2G:
    return Vec2G(x, y)


class Lattice:
    """A planar lattice in normal form: g1 = (w, 0), g2 = (u, h), w, h > 0.

    The half-open rectangle [0, w) x [0, h) is then a fundamental domain of
    the quotient torus.
    """

    __slots__ = ("g1", "g2", "_inv_w", "_inv_h")

    def __init__(self, g1: Vec2G, g2: Vec2G) -> None:
        if g1.y.sign() != 0:
            raise GeometryError("lattice not in normal form: g1.y must be 0")
        if g1.x.sign() <= 0:
            raise GeometryError("lattice not in normal form: g1.x must be > 0")
        if g2.y.sign() <= 0:
            raise GeometryError("lattice not in normal form: g2.y must be > 0")
        object.__setattr__(self, "g1", g1)
        object.__setattr__(self, "g2", g2)
        object.__setattr__(self, "_inv_w", g1.x.inverse())
        object.__setattr__(self, "_inv_h", g2.y.inverse())

    def __setattr__(self, name, value):
        raise AttributeError("Lattice is immutable")

    @property
    def width(self) -> GoldenNumber:
        return self.g1.x

    @property
    def height(self) -> GoldenNumber:
        return self.g2.y

    def covolume(self) -> GoldenNumber:
        return self.g1.x * self.g2.y

    def vector(self, k: int, l: int) -> Vec2G:
        return self.g1.scale(k) + self.g2.scale(l)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.g1 == other.g1 and self.g2 == other.g2

    def __hash__(self) -> int:
        return hash((self.g1, self.g2))

    def __repr__(self) -> str:
        return f"Lattice(g1={self.g1}, g2={self.g2})"

    def reduce(self, p: Vec2G) -> Vec2G:
        """Unique representative of p modulo the lattice in [0,w) x [0,h)."""
        y = p.y
        if y.sign() < 0 or (y - self.g2.y).sign() >= 0:
            l = (y * self._inv_h).floor()
            p = p - self.g2.scale(l)
        x = p.x
        if x.sign() < 0 or (x - self.g1.x).sign() >= 0:
            k = (x * self._inv_w).floor()
            p = p - self.g1.scale(k)
        return p

    def domain_polygon(self) -> ConvexPolygon:
        w, h = self.width, self.height
        z = gn(0)
        return ConvexPolygon([Vec2G(z, z), Vec2G(w, z), Vec2G(w, h), Vec2G(z, h)])


class ConvexPolygon:
    """A strictly convex polygon, vertices counterclockwise, no repeats."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[Vec2G], validate: bool = True) -> None:
        vs = tuple(vertices)
        if validate:
            _validate_convex_ccw(vs)
        object.__setattr__(self, "vertices", vs)

    def __setattr__(self, name, value):
        raise AttributeError("ConvexPolygon is immutable")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self) -> str:
        return f"ConvexPolygon({list(self.vertices)!r})"

    def edges(self) -> list[tuple[Vec2G, Vec2G]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def area(self) -> GoldenNumber:
        return area(self)

    def translate(self, t: Vec2G) -> ConvexPolygon:
        return ConvexPolygon([v + t for v in self.vertices], validate=False)

    def centroid(self) -> Vec2G:
        n = len(self.vertices)
        sx = gn(0)
        sy = gn(0)
        for v in self.vertices:
            sx = sx + v.x
            sy = sy + v.y
        inv = gn(1) / gn(n)
        return Vec2G(sx * inv, sy * inv)

    def contains(self, p: Vec2G) -> bool:
        """Closed membership test (boundary counts as inside)."""
        for u, w in self.edges():
            if (w - u).cross(p - u).sign() < 0:
                return False
        return True

    def contains_strict(self, p: Vec2G) -> bool:
        for u, w in self.edges():
            if (w - u).cross(p - u).sign() <= 0:
                return False
        return True

    def canonical(self) -> ConvexPolygon:
        """Rotate the vertex cycle to start at the lexicographic minimum."""
        vs = self.vertices
        i = min(range(len(vs)), key=lambda j: _lex_key(vs[j]))
        return ConvexPolygon(vs[i:] + vs[:i], validate=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConvexPolygon):
            return NotImplemented
        return self.canonical().vertices == other.canonical().vertices

    def __hash__(self) -> int:
        return hash(self.canonical().vertices)

    def bounds(self) -> tuple[GoldenNumber, GoldenNumber, GoldenNumber, GoldenNumber]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))


def _lex_key(v: Vec2G):
    return (v.x, v.y)


def _validate_convex_ccw(vs: tuple[Vec2G, ...]) -> None:
    n = len(vs)
    if n < 3:
        raise GeometryError(f"polygon needs >= 3 vertices, got {n}")
    for i in range(n):
        a, b, c = vs[i], vs[(i + 1) % n], vs[(i + 2) % n]
        if a == b:
            raise GeometryError("repeated vertex")
        s = (b - a).cross(c - b).sign()
        if s <= 0:
            raise GeometryError("vertices not strictly convex counterclockwise")


def polygon(points: Iterable[tuple]) -> ConvexPolygon:
    """Build a polygon from (x, y) pairs, reorienting clockwise input."""
    vs = [p if isinstance(p, Vec2G) else Vec2G(p[0], p[1]) for p in points]
    total = gn(0)
    n = len(vs)
    for i in range(n):
        total = total + vs[i].cross(vs[(i + 1) % n])
    if total.sign() < 0:
        vs.reverse()
    return ConvexPolygon(vs)


def area(p: ConvexPolygon) -> GoldenNumber:
    """Exact area by the shoelace formula."""
    vs = p.vertices
    twice = gn(0)
    for i in range(len(vs)):
        twice = twice + vs[i].cross(vs[(i + 1) % len(vs)])
    return twice * Fraction(1, 2)


def clip(p: ConvexPolygon, q: ConvexPolygon) -> ConvexPolygon | None:
    """Exact intersection of two closed convex polygons.

    Returns None when the intersection has zero area (segments and points
    count as empty), matching open-atom partition semantics.
    """
    out = list(p.vertices)
    for u, w in q.edges():
        if not out:
            return None
        edge = w - u
        inp = out
        out = []
        sides = [edge.cross(pt - u).sign() for pt in inp]
        n = len(inp)
        for i in range(n):
            cur, nxt = inp[i], inp[(i + 1) % n]
            s_cur, s_nxt = sides[i], sides[(i + 1) % n]
            if s_cur >= 0:
                out.append(cur)
            if (s_cur > 0 and s_nxt < 0) or (s_cur < 0 and s_nxt > 0):
                out.append(_line_intersection(cur, nxt, u, w))
    cleaned = _clean_chain(out)
    if cleaned is None:
        return None
    return ConvexPolygon(cleaned, validate=False)


def _line_intersection(a: Vec2G, b: Vec2G, u: Vec2G, w: Vec2G) -> Vec2G:
    # intersection of segment ab's line with line uw; caller guarantees
    # the lines properly cross, so the denominator is nonzero
    d1 = b - a
    d2 = w - u
    den = d1.cross(d2)
    t = (u - a).cross(d2) / den
    return Vec2G(a.x + d1.x * t, a.y + d1.y * t)


def _clean_chain(pts: list[Vec2G]) -> list[Vec2G] | None:
    if len(pts) < 3:
        return None
    dedup: list[Vec2G] = []
    for pt in pts:
        if not dedup or pt != dedup[-1]:
            dedup.append(pt)
    while len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    if len(dedup) < 3:
        return None
    # drop collinear vertices
    result: list[Vec2G] = []
    n = len(dedup)
    for i in range(n):
        a, b, c = dedup[i - 1], dedup[i], dedup[(i + 1) % n]
        if (b - a).cross(c - b).sign() != 0:
            result.append(b)
    if len(result) < 3:
        return None
    return result


def reduce_point(p: Vec2G, lattice: Lattice) -> Vec2G:
    """Representative of p mod the lattice in the fundamental rectangle."""
    return lattice.reduce(p)


def translate_mod(p: ConvexPolygon, t: Vec2G, lattice: Lattice) -> list[ConvexPolygon]:
    """Translate a polygon on the torus, re-cut into the fundamental domain.

    The translated polygon is sliced along horizontal lattice strips, each
    slice is pulled back by its g2 multiple, then sliced along vertical
    strips and pulled back by g1 multiples.  Total area is preserved
    exactly; zero-area slivers are dropped.
    """
    moved = p.translate(t)
    w, h = lattice.width, lattice.height
    pieces: list[ConvexPolygon] = []
    ymin, ymax = moved.bounds()[1], moved.bounds()[3]
    for l in range((ymin / h).floor(), (ymax / h).floor() + 1):
        strip = _band_y(moved, h * l, h * (l + 1))
        if strip is None:
            continue
        strip = strip.translate(-lattice.g2.scale(l))
        xmin, xmax = strip.bounds()[0], strip.bounds()[2]
        for k in range((xmin / w).floor(), (xmax / w).floor() + 1):
            cell = _band_x(strip, w * k, w * (k + 1))
            if cell is None:
                continue
            pieces.append(cell.translate(-lattice.g1.scale(k)))
    return pieces


def _band_y(p: ConvexPolygon, lo: GoldenNumber, hi: GoldenNumber) -> ConvexPolygon | None:
    xmin, _, xmax, _ = p.bounds()
    margin = gn(1)
    band = ConvexPolygon(
        [Vec2G(xmin - margin, lo), Vec2G(xmax + margin, lo),
         Vec2G(xmax + margin, hi), Vec2G(xmin - margin, hi)],
        validate=False)
    return clip(p, band)


def _band_x(p: ConvexPolygon, lo: GoldenNumber, hi: GoldenNumber) -> ConvexPolygon | None:
    _, ymin, _, ymax = p.bounds()
    margin = gn(1)
    band = ConvexPolygon(
        [Vec2G(lo, ymin - margin), Vec2G(hi, ymin - margin),
         Vec2G(hi, ymax + margin), Vec2G(lo, ymax + margin)],
        validate=False)
    return clip(p, band)
