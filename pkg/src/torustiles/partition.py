"""Labeled polygonal partitions of a torus fundamental domain.

An :class:`Atom` is a label plus a union of convex pieces (non-convex atoms
are stored pre-cut into convex polygons).  A :class:`Partition` carries the
lattice and the atoms; atom interiors are pairwise disjoint and the closures
cover the fundamental rectangle exactly.

Point location answers the question "which atom contains x + eps*v for all
small eps > 0": boundary points are never resolved without a direction, and
a direction lying in the partition's own edge-direction set through the
query point raises :class:`DirectionInBoundary`.

Hot loops use a floating-point filter with an exact integer fallback, so
results are identical to all-exact evaluation.
"""

from __future__ import annotations

import json
from typing import Hashable, Iterable, Sequence

from .geometry import (ConvexPolygon, GeometryError, Lattice, Vec2G, area,
                       clip, translate_mod)
from .goldenfield import GoldenNumber, gn

Label = Hashable


class DirectionInBoundary(ValueError):
    """The chosen direction is parallel to a partition edge through the point."""


class NotCovered(RuntimeError):
    """No atom accepts the point: the partition data does not cover the torus."""


class PartitionError(ValueError):
    pass


class Atom:
    __slots__ = ("label", "pieces")

    def __init__(self, label: Label, pieces: Iterable[ConvexPolygon]) -> None:
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "pieces", tuple(pieces))
        if not self.pieces:
            raise PartitionError(f"atom {label!r} has no pieces")

    def __setattr__(self, name, value):
        raise AttributeError("Atom is immutable")

    def area(self) -> GoldenNumber:
        total = gn(0)
        for piece in self.pieces:
            total = total + area(piece)
        return total

    def __repr__(self) -> str:
        return f"Atom({self.label!r}, {len(self.pieces)} pieces)"


class Partition:
    """A topological partition of the torus R^2 / lattice."""

    __slots__ = ("lattice", "atoms", "_locator")

    def __init__(self, lattice: Lattice, atoms: Iterable[Atom],
                 validate: bool = False) -> None:
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "atoms", tuple(atoms))
        object.__setattr__(self, "_locator", None)
        labels = [a.label for a in self.atoms]
        if len(set(labels)) != len(labels):
            raise PartitionError("duplicate atom labels")
        if validate:
            self.validate()

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def labels(self) -> list[Label]:
        return [a.label for a in self.atoms]

    def atom(self, label: Label) -> Atom:
        for a in self.atoms:
            if a.label == label:
                return a
        raise KeyError(label)

    def pieces(self) -> list[tuple[Label, ConvexPolygon]]:
        return [(a.label, p) for a in self.atoms for p in a.pieces]

    def areas(self) -> dict[Label, GoldenNumber]:
        return {a.label: a.area() for a in self.atoms}

    def validate(self) -> None:
        """Exact structural checks: cover, disjointness, containment."""
        total = gn(0)
        w, h = self.lattice.width, self.lattice.height
        zero = gn(0)
        flat = self.pieces()
        for _, piece in flat:
            total = total + area(piece)
            for v in piece.vertices:
                if (v.x - zero).sign() < 0 or (v.x - w).sign() > 0 \
                        or (v.y - zero).sign() < 0 or (v.y - h).sign() > 0:
                    raise PartitionError("piece vertex outside fundamental domain")
        if total != self.lattice.covolume():
            raise PartitionError(
                f"piece areas sum to {total}, expected covolume {self.lattice.covolume()}")
        for i in range(len(flat)):
            for j in range(i + 1, len(flat)):
                if clip(flat[i][1], flat[j][1]) is not None:
                    raise PartitionError(
                        f"pieces of atoms {flat[i][0]!r} and {flat[j][0]!r} overlap")

    def translate(self, t: Vec2G) -> Partition:
        """Image partition under the torus translation x -> x + t."""
        atoms = []
        for a in self.atoms:
            moved: list[ConvexPolygon] = []
            for piece in a.pieces:
                moved.extend(translate_mod(piece, t, self.lattice))
            atoms.append(Atom(a.label, moved))
        return Partition(self.lattice, atoms)

    def locate(self, x: Vec2G, v: Vec2G) -> Label:
        """Label of the atom containing x + eps*v for all small eps > 0."""
        return self._get_locator().locate(x, v)

    def edge_directions(self) -> set[Vec2G]:
        """Canonical directions of all piece edges: (0,1) or (1, slope)."""
        return edge_directions(self)

    def direction_is_valid(self, v: Vec2G) -> bool:
        if v.x.sign() == 0 and v.y.sign() == 0:
            return False
        return canonical_direction(v) not in self.edge_directions()

    def relabel(self, mapping) -> Partition:
        return Partition(self.lattice,
                         [Atom(mapping(a.label), a.pieces) for a in self.atoms])

    def _get_locator(self) -> _Locator:
        if self._locator is None:
            object.__setattr__(self, "_locator", _Locator(self))
        return self._locator

    def __repr__(self) -> str:
        return f"Partition({len(self.atoms)} atoms on {self.lattice!r})"


def trivial_partition(lattice: Lattice, label: Label = "0") -> Partition:
    return Partition(lattice, [Atom(label, [lattice.domain_polygon()])])


def canonical_direction(v: Vec2G) -> Vec2G:
    """Primitive sign-normalized representative of the line R*v."""
    if v.x.sign() == 0:
        if v.y.sign() == 0:
            raise GeometryError("zero vector has no direction")
        return Vec2G(gn(0), gn(1))
    return Vec2G(gn(1), v.y / v.x)


def edge_directions(partition: Partition) -> set[Vec2G]:
    dirs: set[Vec2G] = set()
    for _, piece in partition.pieces():
        for u, w in piece.edges():
            dirs.add(canonical_direction(w - u))
    return dirs


def refine(a: Partition, b: Partition) -> Partition:
    """Common refinement; atoms labeled by (label_a, label_b) pairs.

    Pair labels are flattened when the left operand already carries tuple
    labels, so iterated refinement yields flat label tuples.
    """
    if a.lattice != b.lattice:
        raise PartitionError("refine requires partitions over the same lattice")
    grouped: dict[Label, list[ConvexPolygon]] = {}
    order: list[Label] = []
    for atom_a in a.atoms:
        for atom_b in b.atoms:
            label = _pair_label(atom_a.label, atom_b.label)
            for pa in atom_a.pieces:
                for pb in atom_b.pieces:
                    piece = clip(pa, pb)
                    if piece is None:
                        continue
                    if label not in grouped:
                        grouped[label] = []
                        order.append(label)
                    grouped[label].append(piece)
    return Partition(a.lattice, [Atom(lbl, grouped[lbl]) for lbl in order])


def _pair_label(la: Label, lb: Label) -> Label:
    if isinstance(la, tuple):
        return la + (lb,)
    return (la, lb)


# ---------------------------------------------------------------------------
# point location


_ACCEPT = 1
_REJECT = -1
_AMBIGUOUS = 0

_FILTER_EPS = 1e-12


class _Edge:
    __slots__ = ("ux", "uy", "dx", "dy", "fux", "fuy", "fdx", "fdy")

    def __init__(self, u: Vec2G, w: Vec2G) -> None:
        self.ux, self.uy = u.x, u.y
        self.dx, self.dy = w.x - u.x, w.y - u.y
        self.fux, self.fuy = self.ux.to_float(), self.uy.to_float()
        self.fdx, self.fdy = self.dx.to_float(), self.dy.to_float()


class _PieceEntry:
    __slots__ = ("label", "edges", "bbox")

    def __init__(self, label: Label, piece: ConvexPolygon) -> None:
        self.label = label
        self.edges = [_Edge(u, w) for u, w in piece.edges()]
        xs = [e.fux for e in self.edges]
        ys = [e.fuy for e in self.edges]
        self.bbox = (min(xs), min(ys), max(xs), max(ys))


class _Locator:
    """Grid-indexed exact point location over a fixed partition.

    Pieces are replicated by the lattice translates that still touch the
    closed fundamental rectangle, so queries on the domain boundary see
    their neighbours across the torus seam.
    """

    GRID = 24
    PAD = 1e-9

    def __init__(self, partition: Partition, entries=None, lattice=None) -> None:
        if entries is None:
            entries = partition.pieces()
            lattice = partition.lattice
        self.lattice = lattice
        w = lattice.width.to_float()
        h = lattice.height.to_float()
        self.w, self.h = w, h
        self.entries: list[_PieceEntry] = []
        shift_range = self._shift_range(lattice)
        for label, piece in entries:
            for k, l in shift_range:
                moved = piece if (k == 0 and l == 0) else piece.translate(lattice.vector(k, l))
                entry = _PieceEntry(label, moved)
                x0, y0, x1, y1 = entry.bbox
                if x1 < -self.PAD or x0 > w + self.PAD or y1 < -self.PAD or y0 > h + self.PAD:
                    continue
                self.entries.append(entry)
        g = self.GRID
        self.cells: list[list[int]] = [[] for _ in range(g * g)]
        for idx, entry in enumerate(self.entries):
            x0, y0, x1, y1 = entry.bbox
            i0 = max(0, min(g - 1, int((x0 - self.PAD) / w * g)))
            i1 = max(0, min(g - 1, int((x1 + self.PAD) / w * g)))
            j0 = max(0, min(g - 1, int((y0 - self.PAD) / h * g)))
            j1 = max(0, min(g - 1, int((y1 + self.PAD) / h * g)))
            for i in range(i0, i1 + 1):
                for j in range(j0, j1 + 1):
                    self.cells[j * g + i].append(idx)

    @staticmethod
    def _shift_range(lattice: Lattice):
        # g2 may carry a horizontal offset; widen the k range until one
        # lattice step in l cannot move a domain piece past the k window
        spread = 1 + abs((lattice.g2.x / lattice.g1.x).floor()) + 1
        return [(k, l) for l in (-1, 0, 1) for k in range(-spread, spread + 1)]

    def candidates(self, fx: float, fy: float) -> list[int]:
        g = self.GRID
        i = max(0, min(g - 1, int(fx / self.w * g)))
        j = max(0, min(g - 1, int(fy / self.h * g)))
        return self.cells[j * g + i]

    def locate(self, x: Vec2G, v: Vec2G) -> Label:
        x = self.lattice.reduce(x)
        fx, fy = x.x.to_float(), x.y.to_float()
        accepted: list[Label] = []
        ambiguous = False
        for idx in self.candidates(fx, fy):
            entry = self.entries[idx]
            x0, y0, x1, y1 = entry.bbox
            if fx < x0 - self.PAD or fx > x1 + self.PAD \
                    or fy < y0 - self.PAD or fy > y1 + self.PAD:
                continue
            verdict, strict = _test_piece(entry, x, fx, fy, v)
            if verdict == _ACCEPT:
                if strict:
                    return entry.label
                accepted.append(entry.label)
            elif verdict == _AMBIGUOUS:
                ambiguous = True
        if accepted:
            if any(lbl != accepted[0] for lbl in accepted):
                raise PartitionError(
                    f"point {x!r} accepted by several atoms: {accepted!r}")
            return accepted[0]
        if ambiguous:
            raise DirectionInBoundary(
                f"direction {v!r} lies in the boundary through {x!r}")
        raise NotCovered(f"no atom accepts {x!r}")

    def region_contains(self, x: Vec2G, v: Vec2G) -> bool:
        """Perturbed membership for region testers (labels ignored)."""
        x = self.lattice.reduce(x)
        fx, fy = x.x.to_float(), x.y.to_float()
        ambiguous = False
        for idx in self.candidates(fx, fy):
            entry = self.entries[idx]
            x0, y0, x1, y1 = entry.bbox
            if fx < x0 - self.PAD or fx > x1 + self.PAD \
                    or fy < y0 - self.PAD or fy > y1 + self.PAD:
                continue
            verdict, _ = _test_piece(entry, x, fx, fy, v)
            if verdict == _ACCEPT:
                return True
            if verdict == _AMBIGUOUS:
                ambiguous = True
        if ambiguous:
            raise DirectionInBoundary(
                f"direction {v!r} lies in the region boundary through {x!r}")
        return False


def region_tester(pieces: Sequence[ConvexPolygon], lattice: Lattice) -> _Locator:
    """Locator over a bare piece list, for acceptance-window membership."""
    return _Locator(None, entries=[(None, p) for p in pieces], lattice=lattice)


def _test_piece(entry: _PieceEntry, x: Vec2G, fx: float, fy: float,
                v: Vec2G) -> tuple[int, bool]:
    """Decide whether x + eps*v lies in the (closed) piece for small eps.

    Returns (verdict, strictly_interior).  Strict rejection by any edge wins
    over an ambiguous edge elsewhere.
    """
    double_zero = False
    strict = True
    for e in entry.edges:
        cf = e.fdx * (fy - e.fuy) - e.fdy * (fx - e.fux)
        mag = abs(e.fdx) * (abs(fy) + abs(e.fuy)) + abs(e.fdy) * (abs(fx) + abs(e.fux))
        if abs(cf) > mag * _FILTER_EPS:
            s = 1 if cf > 0.0 else -1
        else:
            s = (e.dx * (x.y - e.uy) - e.dy * (x.x - e.ux)).sign()
        if s < 0:
            return _REJECT, False
        if s == 0:
            strict = False
            s2 = (e.dx * v.y - e.dy * v.x).sign()
            if s2 < 0:
                return _REJECT, False
            if s2 == 0:
                double_zero = True
    if double_zero:
        return _AMBIGUOUS, False
    return _ACCEPT, strict


# ---------------------------------------------------------------------------
# file format (JSON-compatible structured text)


def partition_to_json(partition: Partition) -> dict:
    return {
        "lattice": {
            "g1": partition.lattice.g1.serialize(),
            "g2": partition.lattice.g2.serialize(),
        },
        "atoms": [
            {
                "label": str(atom.label),
                "pieces": [[v.serialize() for v in piece.vertices]
                           for piece in atom.pieces],
            }
            for atom in partition.atoms
        ],
    }


def partition_from_json(doc: dict) -> Partition:
    lat = Lattice(Vec2G.parse(doc["lattice"]["g1"]),
                  Vec2G.parse(doc["lattice"]["g2"]))
    atoms = []
    for entry in doc["atoms"]:
        label = entry["label"]
        # integer-looking labels round-trip as ints (tile indices, colors)
        if isinstance(label, str) and (label.isdigit()
                                       or (label[:1] == "-" and label[1:].isdigit())):
            label = int(label)
        pieces = [ConvexPolygon([Vec2G.parse(v) for v in piece])
                  for piece in entry["pieces"]]
        atoms.append(Atom(label, pieces))
    return Partition(lat, atoms)


def save_partition(partition: Partition, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(partition_to_json(partition), fh, indent=1)
        fh.write("\n")


def load_partition(path) -> Partition:
    with open(path, encoding="utf-8") as fh:
        return partition_from_json(json.load(fh))
