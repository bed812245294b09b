"""Builtin datasets: lattices, partitions, rotations, tile sets, schemes.

The golden-field vertex data for the two generating partitions of the
11-tile system is transcribed from the source geometry; everything
derived (the 11-tile inventory, the refined coding partition, the
frequencies) is recomputed from it at runtime and cross-checked by the
test suite.  The 19-tile, 1-tile and 20-tile inventories ship as color
quadruples only; their generating partition geometry is not bundled.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .dynamics import Patch, Z2Rotation
from .geometry import Lattice, Vec2G, polygon
from .goldenfield import GoldenNumber, gn
from .modelset import CutProjectScheme
from .partition import Atom, Partition
from .wang import TileSet, WangTile, derive_tileset

PHI = gn(0, 1)

DATASET_NAMES = ("jr", "u", "ex3", "ex4")


def _v(x, y) -> Vec2G:
    return Vec2G(_g(x), _g(y))


def _g(x) -> GoldenNumber:
    return x if isinstance(x, GoldenNumber) else gn(x)


# ---------------------------------------------------------------------------
# lattices and rotations


def jr_lattice() -> Lattice:
    """The lattice spanned by (phi, 0) and (1, phi+3)."""
    return Lattice(_v(PHI, 0), _v(1, PHI + 3))


def jr_rotation() -> Z2Rotation:
    """Integer translations on the torus of :func:`jr_lattice`."""
    return Z2Rotation(jr_lattice(), _v(1, 0), _v(0, 1))


def unit_lattice() -> Lattice:
    return Lattice(_v(1, 0), _v(0, 1))


def u_rotation() -> Z2Rotation:
    """Translation by phi^(-2) in both directions on the unit torus."""
    inv2 = gn(2, -1)  # 1/phi^2 = 2 - phi
    return Z2Rotation(unit_lattice(), _v(inv2, 0), _v(0, inv2))


def ex3_rotation() -> Z2Rotation:
    """A rotation for the one-tile example; any free rotation gives the
    same derived tile, this one mirrors :func:`u_rotation`."""
    return u_rotation()


def ex4_rotation() -> Z2Rotation:
    """Translation by phi in both directions on the unit torus."""
    return Z2Rotation(unit_lattice(), _v(PHI, 0), _v(0, PHI))


# ---------------------------------------------------------------------------
# the two generating partitions of the 11-tile system


@lru_cache(maxsize=None)
def jr_partition_y() -> Partition:
    """Right-color partition: four atoms on the jr torus."""
    p = PHI
    atoms = [
        Atom(0, [
            polygon([(p - 1, 1), (p, 2 + p), (p - 1, 2)]),
            polygon([(0, 1 + p), (p - 1, 2 + p), (1, 3 + p), (0, 3 + p)]),
            polygon([(1, 2 + p), (p, 3 + p), (1, 3 + p)]),
        ]),
        Atom(1, [
            polygon([(p - 1, 1), (p, 1), (p, 2 + p)]),
            polygon([(0, 1), (p - 1, 1), (p - 1, 2)]),
            polygon([(0, 2), (p - 1, 2 + p), (0, 1 + p)]),
        ]),
        Atom(2, [
            polygon([(0, 0), (p, 0), (p, 1), (0, 1)]),
        ]),
        Atom(3, [
            polygon([(0, 1), (1, 1 + p), (1, 3 + p), (0, 2)]),
            polygon([(1, 1 + p), (p, 2 + p), (p, 3 + p), (1, 2 + p)]),
        ]),
    ]
    return Partition(jr_lattice(), atoms)


@lru_cache(maxsize=None)
def jr_partition_z() -> Partition:
    """Top-color partition: five atoms on the jr torus."""
    p = PHI
    atoms = [
        Atom(0, [
            polygon([(0, 2 + p), (2 - p, 3 + p), (0, 3 + p)]),
            polygon([(2 - p, 2 + p), (1, 3 + p), (2 - p, 3 + p)]),
            polygon([(1, 2 + p), (p, 3 + p), (1, 3 + p)]),
        ]),
        Atom(1, [
            polygon([(0, 1), (2 - p, 2), (2 - p, 3 + p), (0, 2 + p)]),
            polygon([(2 - p, 2), (1, 2 + p), (1, 3 + p), (2 - p, 2 + p)]),
            polygon([(1, 1 + p), (p, 2 + p), (p, 3 + p), (1, 2 + p)]),
        ]),
        Atom(2, [
            polygon([(0, 0), (p - 1, 1), (p - 1, 2), (0, 1)]),
            polygon([(p - 1, 0), (1, 1), (1, 1 + p), (p - 1, 2)]),
            polygon([(1, 0), (p, 1), (p, 2 + p), (1, 1 + p)]),
        ]),
        Atom(3, [
            polygon([(0, 1), (1, 1 + p), (1, 2 + p)]),
        ]),
        Atom(4, [
            polygon([(0, 0), (p - 1, 0), (p - 1, 1)]),
            polygon([(p - 1, 0), (1, 0), (1, 1)]),
            polygon([(1, 0), (p, 0), (p, 1)]),
        ]),
    ]
    return Partition(jr_lattice(), atoms)


# ---------------------------------------------------------------------------
# tile inventories


_JR_QUADRUPLES = [
    (2, 4, 2, 1), (2, 2, 2, 0), (1, 1, 3, 1), (1, 2, 3, 2), (3, 1, 3, 3),
    (0, 1, 3, 1), (0, 0, 0, 1), (3, 1, 0, 2), (0, 2, 1, 2), (1, 2, 1, 4),
    (3, 3, 1, 2),
]

_U_QUADRUPLES = [
    ("F", "O", "J", "O"), ("F", "O", "H", "L"), ("J", "M", "F", "P"),
    ("D", "M", "F", "K"), ("H", "P", "J", "P"), ("H", "P", "H", "N"),
    ("H", "K", "F", "P"), ("H", "K", "D", "P"), ("B", "O", "I", "O"),
    ("G", "L", "E", "O"), ("G", "L", "C", "L"), ("A", "L", "I", "O"),
    ("E", "P", "G", "P"), ("E", "P", "I", "P"), ("I", "P", "G", "K"),
    ("I", "P", "I", "K"), ("I", "K", "B", "M"), ("I", "K", "A", "K"),
    ("C", "N", "I", "P"),
]

_EX4_QUADRUPLES = [
    ("A", "C", "A", "C"), ("A", "C", "A", "D"), ("A", "C", "A", "D"),
    ("A", "D", "A", "D"), ("A", "D", "A", "C"), ("A", "D", "A", "D"),
    ("B", "C", "A", "C"), ("B", "C", "A", "D"), ("B", "D", "A", "C"),
    ("B", "C", "A", "C"), ("A", "C", "B", "D"), ("A", "D", "B", "D"),
    ("A", "D", "B", "C"), ("A", "D", "B", "D"), ("A", "C", "B", "C"),
    ("B", "D", "B", "C"), ("B", "C", "B", "C"), ("B", "D", "B", "C"),
    ("B", "D", "B", "D"), ("B", "C", "B", "C"),
]


def jr_tileset() -> TileSet:
    """The 11-tile inventory, indices t0..t10."""
    return TileSet([WangTile(*q) for q in _JR_QUADRUPLES],
                   names=[f"t{i}" for i in range(11)])


def u_tileset() -> TileSet:
    """The 19-tile inventory with letter colors, indices u0..u18."""
    return TileSet([WangTile(*q) for q in _U_QUADRUPLES],
                   names=[f"u{i}" for i in range(19)])


def ex3_tileset() -> TileSet:
    return TileSet([WangTile("A", "B", "A", "B")], names=["tau0"])


def ex4_tileset() -> TileSet:
    """The 20-tile inventory; over a 2x2x2x2 color space the 20 formal
    tiles necessarily repeat some quadruples."""
    return TileSet([WangTile(*q) for q in _EX4_QUADRUPLES],
                   names=[f"tau{i}" for i in range(20)])


@lru_cache(maxsize=None)
def jr_coding() -> tuple[TileSet, Partition]:
    """Derived 11-tile set (paper-order indices) and its coding partition."""
    return derive_tileset(jr_rotation(), jr_partition_y(), jr_partition_z(),
                          tile_order=_JR_QUADRUPLES)


@lru_cache(maxsize=None)
def ex3_derivation() -> tuple[TileSet, Partition]:
    """One-tile derivation from the trivial partitions."""
    from .partition import trivial_partition

    rot = ex3_rotation()
    y = trivial_partition(rot.lattice, label="A")
    z = trivial_partition(rot.lattice, label="B")
    return derive_tileset(rot, y, z)


# ---------------------------------------------------------------------------
# cut and project schemes


def jr_scheme(seed: Vec2G | None = None) -> CutProjectScheme:
    """The 4-to-2 scheme whose internal space is the jr torus.

    The seed (r, s) is decomposed over the lattice basis as
    r = r'*phi + s', s = s'*(phi+3) to place the translated integer
    lattice; its star map is the rotation orbit of the seed.
    """
    if seed is None:
        seed = _v(0, 0)
    rot = jr_rotation()
    seed = rot.lattice.reduce(seed)
    one = gn(1)
    zero = gn(0)
    inv_phi = gn(-1, 1)  # 1/phi = phi - 1
    physical = ((one, one, zero, zero), (zero, zero, one, one))
    internal = ((one, -inv_phi, zero, inv_phi),
                (zero, zero, one, -(PHI + 2)))
    s_prime = seed.y / (PHI + 3)
    r_prime = (seed.x - s_prime) / PHI
    t = r_prime + s_prime
    lift = (t, -t, s_prime, -s_prime)
    return CutProjectScheme(physical, internal, seed, lift, rot)


def u_scheme(seed: Vec2G | None = None) -> CutProjectScheme:
    """The 4-to-2 scheme whose internal space is the unit torus."""
    if seed is None:
        seed = _v(0, 0)
    rot = u_rotation()
    seed = rot.lattice.reduce(seed)
    zero = gn(0)
    inv_phi = gn(-1, 1)
    inv_phi2 = gn(2, -1)
    one = gn(1)
    physical = ((one, one, zero, zero), (zero, zero, one, one))
    internal = ((inv_phi2, -inv_phi, zero, zero),
                (zero, zero, inv_phi2, -inv_phi))
    lift = (seed.x, -seed.x, seed.y, -seed.y)
    return CutProjectScheme(physical, internal, seed, lift, rot)


# ---------------------------------------------------------------------------
# the bundled 5x5 sample patch and figure label oracle


def sample_patch_5x5() -> Patch:
    """A valid 5x5 patch of 11-tile indices (origin at (0, 0))."""
    rows_bottom_up = [
        [6, 6, 7, 4, 5],
        [1, 1, 0, 0, 0],
        [7, 3, 9, 9, 9],
        [2, 8, 7, 3, 10],
        [5, 7, 5, 7, 4],
    ]
    cells = [c for row in rows_bottom_up for c in row]
    return Patch((0, 0), 5, 5, cells)


# interior probe points of the refined coding partition and the tile index
# each must carry; transcribed from the labeled drawing of the partition
JR_PROBE_LABELS: list[tuple[tuple[Fraction, Fraction], int]] = [
    ((Fraction(14, 100), Fraction(436, 100)), 6),
    ((Fraction(64, 100), Fraction(436, 100)), 6),
    ((Fraction(122, 100), Fraction(436, 100)), 6),
    ((Fraction(129, 100), Fraction(362, 100)), 7),
    ((Fraction(24, 100), Fraction(343, 100)), 5),
    ((Fraction(77, 100), Fraction(362, 100)), 4),
    ((Fraction(14, 100), Fraction(265, 100)), 2),
    ((Fraction(81, 100), Fraction(265, 100)), 10),
    ((Fraction(82, 100), Fraction(200, 100)), 8),
    ((Fraction(18, 100), Fraction(200, 100)), 7),
    ((Fraction(126, 100), Fraction(200, 100)), 3),
    ((Fraction(37, 100), Fraction(125, 100)), 9),
    ((Fraction(84, 100), Fraction(125, 100)), 9),
    ((Fraction(142, 100), Fraction(125, 100)), 9),
    ((Fraction(23, 100), Fraction(75, 100)), 1),
    ((Fraction(77, 100), Fraction(75, 100)), 1),
    ((Fraction(126, 100), Fraction(75, 100)), 1),
    ((Fraction(37, 100), Fraction(25, 100)), 0),
    ((Fraction(84, 100), Fraction(25, 100)), 0),
    ((Fraction(142, 100), Fraction(25, 100)), 0),
]


# ---------------------------------------------------------------------------
# packaged data files


def data_path(name: str):
    return resources.files("torustiles").joinpath("data", name)


def load_bundled_partition(name: str) -> Partition:
    from .partition import partition_from_json
    import json

    with data_path(name).open(encoding="utf-8") as fh:
        return partition_from_json(json.load(fh))


def get_dataset(name: str):
    """CLI dataset selector: tile set, rotation and coding partition.

    Returns a dict with keys 'tileset', 'rotation', 'coding' (coding is
    None when the generating geometry is not bundled).
    """
    if name == "jr":
        tiles, coding = jr_coding()
        return {"tileset": tiles, "rotation": jr_rotation(), "coding": coding}
    if name == "u":
        return {"tileset": u_tileset(), "rotation": u_rotation(), "coding": None}
    if name == "ex3":
        tiles, coding = ex3_derivation()
        return {"tileset": tiles, "rotation": ex3_rotation(), "coding": coding}
    if name == "ex4":
        return {"tileset": ex4_tileset(), "rotation": ex4_rotation(), "coding": None}
    raise KeyError(name)
