"""Wang tiles, tile sets, validity checking and tile-set derivation.

A Wang tile is a unit square with colored edges (right, top, left, bottom).
A rectangular patch of tile indices is valid when contiguous edges carry
equal colors.  Tile sets are derived from a pair of torus partitions and a
Z^2-rotation by refining the partitions with their images under the two
generators; the nonempty quadruple regions are the tiles.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

from .dynamics import Patch, Window2D, Z2Rotation
from .partition import Atom, Label, Partition, PartitionError, refine

Color = Hashable


class WangTile:
    """Edge colors of one tile, read (right, top, left, bottom)."""

    __slots__ = ("right", "top", "left", "bottom")

    def __init__(self, right: Color, top: Color, left: Color, bottom: Color) -> None:
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "bottom", bottom)

    def __setattr__(self, name, value):
        raise AttributeError("WangTile is immutable")

    def quadruple(self) -> tuple[Color, Color, Color, Color]:
        return (self.right, self.top, self.left, self.bottom)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WangTile):
            return NotImplemented
        return self.quadruple() == other.quadruple()

    def __hash__(self) -> int:
        return hash(self.quadruple())

    def __repr__(self) -> str:
        return f"WangTile{self.quadruple()!r}"


class TileSet:
    """An ordered inventory of Wang tiles with optional display names.

    Tiles are identified by their index.  Derived tile sets never repeat a
    quadruple; hand-built inventories may (two distinct tiles are allowed
    to carry identical colors), so uniqueness is checked by the deriver,
    not here.
    """

    __slots__ = ("tiles", "names")

    def __init__(self, tiles: Iterable[WangTile],
                 names: Sequence[str] | None = None) -> None:
        tiles = tuple(tiles)
        if names is not None:
            names = tuple(names)
            if len(names) != len(tiles):
                raise ValueError("one name per tile required")
        object.__setattr__(self, "tiles", tiles)
        object.__setattr__(self, "names", names)

    def __setattr__(self, name, value):
        raise AttributeError("TileSet is immutable")

    def __len__(self) -> int:
        return len(self.tiles)

    def __getitem__(self, i: int) -> WangTile:
        return self.tiles[i]

    def __iter__(self):
        return iter(self.tiles)

    def name(self, i: int) -> str:
        return self.names[i] if self.names else str(i)

    def quadruples(self) -> set[tuple[Color, Color, Color, Color]]:
        return {t.quadruple() for t in self.tiles}

    def index_of(self, quadruple: tuple[Color, Color, Color, Color]) -> int:
        for i, t in enumerate(self.tiles):
            if t.quadruple() == quadruple:
                return i
        raise KeyError(quadruple)

    def __repr__(self) -> str:
        return f"TileSet({len(self.tiles)} tiles)"


class Violation:
    """One failed adjacency: position, axis and the two colors that differ."""

    __slots__ = ("position", "axis", "colors")

    def __init__(self, position: tuple[int, int], axis: str,
                 colors: tuple[Color, Color]) -> None:
        object.__setattr__(self, "position", position)
        object.__setattr__(self, "axis", axis)
        object.__setattr__(self, "colors", colors)

    def __setattr__(self, name, value):
        raise AttributeError("Violation is immutable")

    def __repr__(self) -> str:
        return f"Violation(at={self.position}, {self.axis}, {self.colors!r})"


def is_valid(patch: Patch, tileset: TileSet) -> tuple[bool, list[Violation]]:
    """Check all adjacencies inside the window.

    Horizontal neighbours must satisfy right == left, vertical neighbours
    top == bottom.  Out-of-range labels raise.
    """
    for pos in patch.positions():
        label = patch.get(pos)
        if not isinstance(label, int) or not 0 <= label < len(tileset):
            raise ValueError(f"label {label!r} at {pos} is not a tile index")
    violations: list[Violation] = []
    ox, oy = patch.origin
    for j in range(patch.height):
        for i in range(patch.width):
            pos = (ox + i, oy + j)
            tile = tileset[patch.get(pos)]
            if i + 1 < patch.width:
                east = tileset[patch.get((pos[0] + 1, pos[1]))]
                if tile.right != east.left:
                    violations.append(Violation(pos, "horizontal",
                                                (tile.right, east.left)))
            if j + 1 < patch.height:
                north = tileset[patch.get((pos[0], pos[1] + 1))]
                if tile.top != north.bottom:
                    violations.append(Violation(pos, "vertical",
                                                (tile.top, north.bottom)))
    return (not violations, violations)


def derive_tileset(rotation: Z2Rotation, partition_y: Partition,
                   partition_z: Partition,
                   tile_order: Sequence[tuple[Color, Color, Color, Color]] | None = None,
                   ) -> tuple[TileSet, Partition]:
    """Derive the Wang tiles coded by a rotation and two torus partitions.

    Refines Y (right color), Z (top color), the e1-image of Y (left color)
    and the e2-image of Z (bottom color); quadruples with a positive-area
    region are the tiles.  Returns the tile set and the coding partition,
    relabeled with tile indices.

    ``tile_order`` optionally pins the index order (it must be a
    permutation of the derived quadruples); otherwise quadruples are sorted
    by their string form for determinism.
    """
    if partition_y.lattice != partition_z.lattice \
            or partition_y.lattice != rotation.lattice:
        raise PartitionError("derive_tileset requires one common lattice")
    shifted_y = partition_y.translate(rotation.alpha)
    shifted_z = partition_z.translate(rotation.beta)
    refined = refine(refine(refine(partition_y, partition_z), shifted_y), shifted_z)
    quadruples = {_as_quadruple(lbl) for lbl in refined.labels()}
    if tile_order is not None:
        ordered = [tuple(q) for q in tile_order]
        if set(ordered) != quadruples or len(ordered) != len(quadruples):
            raise ValueError("tile_order is not a permutation of the derived tiles")
    else:
        ordered = sorted(quadruples, key=lambda q: tuple(str(c) for c in q))
    tiles = TileSet([WangTile(*q) for q in ordered])
    index = {q: i for i, q in enumerate(ordered)}
    coding = refined.relabel(lambda lbl: index[_as_quadruple(lbl)])
    return tiles, coding


def _as_quadruple(label: Label) -> tuple[Color, Color, Color, Color]:
    # refinement of four partitions yields 4-tuples (i, j, k, l); the
    # quadruple order matches (right, top, left, bottom)
    if not isinstance(label, tuple) or len(label) != 4:
        raise PartitionError(f"expected a quadruple label, got {label!r}")
    return label


def find_periods(patch: Patch, max_shift: int) -> list[tuple[int, int]]:
    """All nonzero shifts n with max(|n1|,|n2|) <= max_shift under which the
    patch agrees with itself on the (nonempty) overlap."""
    periods: list[tuple[int, int]] = []
    for dy in range(-max_shift, max_shift + 1):
        for dx in range(-max_shift, max_shift + 1):
            if (dx, dy) == (0, 0):
                continue
            if abs(dx) >= patch.width or abs(dy) >= patch.height:
                continue
            if _agrees_on_overlap(patch, dx, dy):
                periods.append((dx, dy))
    return sorted(periods)


def _agrees_on_overlap(patch: Patch, dx: int, dy: int) -> bool:
    ox, oy = patch.origin
    x_lo, x_hi = max(0, -dx), min(patch.width, patch.width - dx)
    y_lo, y_hi = max(0, -dy), min(patch.height, patch.height - dy)
    for j in range(y_lo, y_hi):
        for i in range(x_lo, x_hi):
            if patch.get((ox + i, oy + j)) != patch.get((ox + i + dx, oy + j + dy)):
                return False
    return True


# ---------------------------------------------------------------------------
# tile-set text format


def tileset_to_text(tileset: TileSet) -> str:
    """One tile per line: ``right top left bottom``."""
    return "".join(f"{t.right} {t.top} {t.left} {t.bottom}\n" for t in tileset)


def tileset_from_text(text: str) -> TileSet:
    tiles = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"expected four colors per line, got {line!r}")
        tiles.append(WangTile(*(_parse_color(p) for p in parts)))
    return TileSet(tiles)


def _parse_color(token: str) -> Color:
    try:
        return int(token)
    except ValueError:
        return token


def save_tileset(tileset: TileSet, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(tileset_to_text(tileset))


def load_tileset(path) -> TileSet:
    with open(path, encoding="utf-8") as fh:
        return tileset_from_text(fh.read())
