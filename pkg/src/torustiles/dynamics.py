"""Toroidal Z^2-rotations and the coding of their orbits.

The rotation R^n(x) = x + n1*alpha + n2*beta acts on the torus R^2/lattice.
Coding an orbit against a polygonal partition yields label patches; pulled
back atom closures give coding regions whose areas are pattern frequencies;
refining the partition over a finite shape enumerates the allowed patterns
of that shape.  Everything is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from .geometry import ConvexPolygon, Lattice, Vec2G, area, clip, vec
from .goldenfield import GoldenNumber, gn
from .partition import (Atom, DirectionInBoundary, Label, Partition,
                        canonical_direction, trivial_partition)

DEFAULT_DIRECTION = Vec2G(gn(1), gn(Fraction(1, 2)))


class Z2Rotation:
    """The action R^n(x) = x + n1*alpha + n2*beta on R^2/lattice."""

    __slots__ = ("lattice", "alpha", "beta")

    def __init__(self, lattice: Lattice, alpha: Vec2G, beta: Vec2G) -> None:
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "alpha", lattice.reduce(alpha))
        object.__setattr__(self, "beta", lattice.reduce(beta))

    def __setattr__(self, name, value):
        raise AttributeError("Z2Rotation is immutable")

    def step(self, n: tuple[int, int]) -> Vec2G:
        return self.alpha.scale(n[0]) + self.beta.scale(n[1])

    def apply(self, n: tuple[int, int], x: Vec2G) -> Vec2G:
        return self.lattice.reduce(x + self.step(n))

    def __repr__(self) -> str:
        return f"Z2Rotation(alpha={self.alpha}, beta={self.beta})"


def apply(rotation: Z2Rotation, n: tuple[int, int], x: Vec2G) -> Vec2G:
    return rotation.apply(n, x)


class Window2D:
    """An axis-aligned rectangle of integer positions."""

    __slots__ = ("origin", "width", "height")

    def __init__(self, origin: tuple[int, int], width: int, height: int) -> None:
        if width <= 0 or height <= 0:
            raise ValueError("window must have positive width and height")
        object.__setattr__(self, "origin", (int(origin[0]), int(origin[1])))
        object.__setattr__(self, "width", int(width))
        object.__setattr__(self, "height", int(height))

    def __setattr__(self, name, value):
        raise AttributeError("Window2D is immutable")

    def positions(self) -> Iterable[tuple[int, int]]:
        ox, oy = self.origin
        for j in range(self.height):
            for i in range(self.width):
                yield (ox + i, oy + j)

    def __repr__(self) -> str:
        return f"Window2D(origin={self.origin}, {self.width}x{self.height})"


class Patch:
    """A rectangular array of labels with an integer origin.

    Cells are stored row-major with the bottom row first, so y grows
    upward as in the geometric pictures.
    """

    __slots__ = ("origin", "width", "height", "cells")

    def __init__(self, origin: tuple[int, int], width: int, height: int,
                 cells: Sequence[Label]) -> None:
        cells = tuple(cells)
        if len(cells) != width * height:
            raise ValueError(f"expected {width * height} cells, got {len(cells)}")
        object.__setattr__(self, "origin", (int(origin[0]), int(origin[1])))
        object.__setattr__(self, "width", int(width))
        object.__setattr__(self, "height", int(height))
        object.__setattr__(self, "cells", cells)

    def __setattr__(self, name, value):
        raise AttributeError("Patch is immutable")

    def window(self) -> Window2D:
        return Window2D(self.origin, self.width, self.height)

    def get(self, n: tuple[int, int]) -> Label:
        i = n[0] - self.origin[0]
        j = n[1] - self.origin[1]
        if not (0 <= i < self.width and 0 <= j < self.height):
            raise KeyError(f"position {n} outside patch")
        return self.cells[j * self.width + i]

    def rows_bottom_up(self) -> list[tuple[Label, ...]]:
        return [self.cells[j * self.width:(j + 1) * self.width]
                for j in range(self.height)]

    def positions(self) -> Iterable[tuple[int, int]]:
        return self.window().positions()

    def support(self) -> list[tuple[int, int]]:
        """Cell offsets relative to the origin, sorted."""
        return [(i, j) for j in range(self.height) for i in range(self.width)]

    def shift(self, n: tuple[int, int]) -> Patch:
        ox, oy = self.origin
        return Patch((ox + n[0], oy + n[1]), self.width, self.height, self.cells)

    def subpatch(self, origin: tuple[int, int], width: int, height: int) -> Patch:
        cells = []
        for j in range(height):
            for i in range(width):
                cells.append(self.get((origin[0] + i, origin[1] + j)))
        return Patch(origin, width, height, cells)

    def occurrences_of(self, pattern: Patch, window: Window2D) -> set[tuple[int, int]]:
        """Positions m in the window where the pattern, anchored by its
        origin cell at m, matches this patch (positions whose support
        sticks out of this patch are skipped)."""
        px, py = pattern.origin
        hits = set()
        for m in window.positions():
            try:
                ok = all(self.get((m[0] + s[0], m[1] + s[1])) == pattern.get((px + s[0], py + s[1]))
                         for s in pattern.support())
            except KeyError:
                continue
            if ok:
                hits.add(m)
        return hits

    def __eq__(self, other) -> bool:
        if not isinstance(other, Patch):
            return NotImplemented
        return (self.origin == other.origin and self.width == other.width
                and self.height == other.height and self.cells == other.cells)

    def __hash__(self) -> int:
        return hash((self.origin, self.width, self.height, self.cells))

    def __repr__(self) -> str:
        return f"Patch(origin={self.origin}, {self.width}x{self.height})"


class Shape:
    """A finite nonempty set of integer offsets."""

    __slots__ = ("offsets",)

    def __init__(self, offsets: Iterable[tuple[int, int]]) -> None:
        items = [(int(a), int(b)) for a, b in offsets]
        if not items:
            raise ValueError("shape must be nonempty")
        if len(items) != len(set(items)):
            raise ValueError("duplicate offsets in shape")
        object.__setattr__(self, "offsets", tuple(sorted(items)))

    def __setattr__(self, name, value):
        raise AttributeError("Shape is immutable")

    @classmethod
    def rectangle(cls, width: int, height: int) -> Shape:
        return cls([(i, j) for j in range(height) for i in range(width)])

    def __len__(self) -> int:
        return len(self.offsets)

    def __iter__(self):
        return iter(self.offsets)

    def __repr__(self) -> str:
        return f"Shape({list(self.offsets)!r})"


# ---------------------------------------------------------------------------
# orbit coding


def check_direction(partition: Partition, v: Vec2G) -> None:
    if not partition.direction_is_valid(v):
        raise DirectionInBoundary(
            f"direction {v!r} is parallel to a partition edge direction")


def code_patch(rotation: Z2Rotation, partition: Partition, x: Vec2G,
               v: Vec2G, window: Window2D) -> Patch:
    """Code the orbit of x over the window, one label per position.

    The direction v resolves boundary hits and must avoid the partition's
    edge directions (checked up front).
    """
    check_direction(partition, v)
    lattice = rotation.lattice
    locator = partition._get_locator()
    cells: list[Label] = []
    ox, oy = window.origin
    row_start = lattice.reduce(x + rotation.step((ox, oy)))
    for _ in range(window.height):
        point = row_start
        for _ in range(window.width):
            cells.append(locator.locate(point, v))
            point = lattice.reduce(point + rotation.alpha)
        row_start = lattice.reduce(row_start + rotation.beta)
    return Patch(window.origin, window.width, window.height, cells)


def coding_region(rotation: Z2Rotation, partition: Partition,
                  patch: Patch) -> list[ConvexPolygon]:
    """Intersection of pulled-back atom closures over the patch support.

    The region lives on the torus as a union of convex pieces; it contains
    every point whose coding shows the patch at the patch's own window.
    Zero-area intersections are dropped (only interiors matter).
    """
    region: list[ConvexPolygon] | None = None
    for n in patch.positions():
        atom = partition.atom(patch.get(n))
        pulled: list[ConvexPolygon] = []
        shift = -rotation.step(n)
        for piece in atom.pieces:
            pulled.extend(_translate_pieces(piece, shift, rotation.lattice))
        if region is None:
            region = pulled
            continue
        region = [q for p in region for b in pulled
                  if (q := clip(p, b)) is not None]
        if not region:
            return []
    return region or []


def _translate_pieces(piece: ConvexPolygon, t: Vec2G,
                      lattice: Lattice) -> list[ConvexPolygon]:
    from .geometry import translate_mod

    return translate_mod(piece, t, lattice)


def refine_over_shape(rotation: Z2Rotation, partition: Partition,
                      shape: Shape) -> Partition:
    """Partition whose atoms are the allowed patterns of the given shape.

    Atom labels are tuples of source labels aligned with the shape's sorted
    offsets; the atom count equals the number of allowed patterns.
    """
    result = trivial_partition(rotation.lattice, label=())
    for offset in shape.offsets:
        pulled = partition.translate(-rotation.step(offset))
        from .partition import refine

        result = refine(result, pulled)
    return result


def allowed_patterns(rotation: Z2Rotation, partition: Partition,
                     shape: Shape) -> set[tuple[Label, ...]]:
    """Label tuples (in sorted-offset order) of all allowed shape patterns."""
    refined = refine_over_shape(rotation, partition, shape)
    return set(refined.labels())


def pattern_count(rotation: Z2Rotation, partition: Partition,
                  shape: Shape) -> int:
    return len(allowed_patterns(rotation, partition, shape))


def scan_patterns(patch: Patch, shape: Shape) -> set[tuple[Label, ...]]:
    """Distinct shape patterns read off a coded patch (scan oracle)."""
    offs = shape.offsets
    max_dx = max(o[0] for o in offs)
    max_dy = max(o[1] for o in offs)
    min_dx = min(o[0] for o in offs)
    min_dy = min(o[1] for o in offs)
    ox, oy = patch.origin
    seen: set[tuple[Label, ...]] = set()
    for j in range(oy - min_dy, oy + patch.height - max_dy):
        for i in range(ox - min_dx, ox + patch.width - max_dx):
            seen.add(tuple(patch.get((i + a, j + b)) for a, b in offs))
    return seen


def fiber_signatures(rotation: Z2Rotation, partition: Partition, x: Vec2G,
                     radius: int, directions: Sequence[Vec2G]) -> set[Patch]:
    """Distinct square patches of the given radius coded from x, one per
    direction.  The count is a finite-radius lower bound for the number of
    configurations projecting to x."""
    window = Window2D((-radius, -radius), 2 * radius + 1, 2 * radius + 1)
    return {code_patch(rotation, partition, x, v, window) for v in directions}


def sector_directions(partition: Partition) -> list[Vec2G]:
    """One probe direction strictly inside each sector cut out by the
    partition's edge-direction lines, ordered by angle."""
    import math

    angles = sorted({math.atan2(d.y.to_float(), d.x.to_float()) % math.pi
                     for d in partition.edge_directions()})
    full = angles + [a + math.pi for a in angles] + [angles[0] + 2 * math.pi]
    probes: list[Vec2G] = []
    for k in range(len(full) - 1):
        mid = (full[k] + full[k + 1]) / 2.0
        probes.append(_rational_direction(mid, partition))
    return probes


def _rational_direction(angle: float, partition: Partition) -> Vec2G:
    import math

    scale = 64
    c = Fraction(round(math.cos(angle) * scale), scale)
    s = Fraction(round(math.sin(angle) * scale), scale)
    probe = Vec2G(gn(c), gn(s))
    while not partition.direction_is_valid(probe):
        if c == 0:
            c += Fraction(1, 9973)
        else:
            s += Fraction(1, 97)
        probe = Vec2G(gn(c), gn(s))
    return probe


# ---------------------------------------------------------------------------
# polygon exchange views


class PETView:
    """One generator of the rotation as a polygon exchange transformation."""

    __slots__ = ("generator", "pieces")

    def __init__(self, generator: tuple[int, int],
                 pieces: Sequence[tuple[ConvexPolygon, Vec2G]]) -> None:
        object.__setattr__(self, "generator", generator)
        object.__setattr__(self, "pieces", tuple(pieces))

    def __setattr__(self, name, value):
        raise AttributeError("PETView is immutable")

    def translations(self) -> set[Vec2G]:
        return {t for _, t in self.pieces}

    def apply(self, x: Vec2G) -> Vec2G:
        for piece, t in self.pieces:
            if piece.contains_strict(x):
                return x + t
        raise ValueError(f"{x!r} lies on a piece boundary or outside the domain")

    def __repr__(self) -> str:
        return f"PETView(generator={self.generator}, {len(self.pieces)} pieces)"


def pet_view(rotation: Z2Rotation, generator: tuple[int, int]) -> PETView:
    """Maximal regions of the fundamental domain on which x -> x + g reduces
    by a single lattice translate, paired with the resulting translations."""
    lattice = rotation.lattice
    g = rotation.step(generator)
    domain = lattice.domain_polygon()
    pieces: list[tuple[ConvexPolygon, Vec2G]] = []
    for k in range(-2, 3):
        for l in range(-2, 3):
            gamma = lattice.vector(k, l)
            # x stays in the domain after x + g - gamma
            shifted = domain.translate(gamma - g)
            piece = clip(domain, shifted)
            if piece is None:
                continue
            pieces.append((piece, g - gamma))
    total = gn(0)
    for piece, _ in pieces:
        total = total + area(piece)
    if total != lattice.covolume():
        raise RuntimeError("polygon exchange pieces do not cover the domain")
    pieces.sort(key=lambda pt: (pt[0].bounds()[0], pt[0].bounds()[1]))
    return PETView(generator, pieces)


# ---------------------------------------------------------------------------
# patch text format


def patch_to_text(patch: Patch) -> str:
    """Header ``ox oy width height``, then rows top-to-bottom so the bottom
    row comes last, matching pictures where y grows upward."""
    lines = [f"{patch.origin[0]} {patch.origin[1]} {patch.width} {patch.height}"]
    for row in reversed(patch.rows_bottom_up()):
        lines.append(" ".join(str(c) for c in row))
    return "\n".join(lines) + "\n"


def patch_from_text(text: str) -> Patch:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    ox, oy, width, height = (int(t) for t in lines[0].split())
    rows = []
    for ln in lines[1:height + 1]:
        row = [_parse_label(t) for t in ln.split()]
        if len(row) != width:
            raise ValueError(f"expected {width} labels per row, got {len(row)}")
        rows.append(row)
    if len(rows) != height:
        raise ValueError(f"expected {height} rows, got {len(rows)}")
    cells: list[Label] = []
    for row in reversed(rows):
        cells.extend(row)
    return Patch((ox, oy), width, height, cells)


def _parse_label(token: str) -> Label:
    try:
        return int(token)
    except ValueError:
        return token


def save_patch(patch: Patch, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(patch_to_text(patch))


def load_patch(path) -> Patch:
    with open(path, encoding="utf-8") as fh:
        return patch_from_text(fh.read())
