"""Exact golden-field geometry on 2-tori and the Wang tilings it codes.

The pipeline: exact arithmetic in Q(sqrt(5)) -> polygonal torus partitions
-> coding of Z^2-rotation orbits -> derived Wang tile sets, exact pattern
frequencies and complexity -> pattern occurrences as cut-and-project model
sets.  All geometric decisions are exact; floats only filter or display.
"""

from .goldenfield import GoldenNumber, PHI, gn
from .geometry import ConvexPolygon, Lattice, Vec2G, area, clip, polygon, translate_mod, vec
from .partition import (Atom, DirectionInBoundary, NotCovered, Partition,
                        PartitionError, edge_directions, load_partition,
                        refine, save_partition, trivial_partition)
from .dynamics import (Patch, PETView, Shape, Window2D, Z2Rotation,
                       allowed_patterns, code_patch, coding_region,
                       fiber_signatures, load_patch, pattern_count, pet_view,
                       refine_over_shape, save_patch, scan_patterns,
                       sector_directions)
from .wang import (TileSet, WangTile, derive_tileset, find_periods, is_valid,
                   load_tileset, save_tileset)
from .modelset import (AcceptanceWindow, Classification, CutProjectScheme,
                       classify_orbit, classify_up_to, occurrences, star_map)
from .sturmian import CircleCoding, code_necklace, complexity
from . import datasets

__all__ = [
    "GoldenNumber", "PHI", "gn",
    "ConvexPolygon", "Lattice", "Vec2G", "area", "clip", "polygon",
    "translate_mod", "vec",
    "Atom", "DirectionInBoundary", "NotCovered", "Partition", "PartitionError",
    "edge_directions", "load_partition", "refine", "save_partition",
    "trivial_partition",
    "Patch", "PETView", "Shape", "Window2D", "Z2Rotation", "allowed_patterns",
    "code_patch", "coding_region", "fiber_signatures", "load_patch",
    "pattern_count", "pet_view", "refine_over_shape", "save_patch",
    "scan_patterns", "sector_directions",
    "TileSet", "WangTile", "derive_tileset", "find_periods", "is_valid",
    "load_tileset", "save_tileset",
    "AcceptanceWindow", "Classification", "CutProjectScheme", "classify_orbit",
    "classify_up_to", "occurrences", "star_map",
    "CircleCoding", "code_necklace", "complexity",
    "datasets",
]
