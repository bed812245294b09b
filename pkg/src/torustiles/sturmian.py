"""Circle-rotation coding: the one-dimensional warm-up construction.

Beads at integer positions are wrapped around a circle of circumference
alpha + 1 split into a blue arc [0, alpha) and a red arc [alpha, alpha+1);
each bead takes the color of its arc.  For irrational alpha the number of
distinct length-n windows is n + 1.  Implemented standalone on exact
golden-field intervals, independent of the planar machinery.
"""

from __future__ import annotations

from fractions import Fraction

from .goldenfield import GoldenNumber, gn

BLUE = "B"
RED = "R"


class CircleCoding:
    """Two-arc coding of the rotation x -> x + 1 on R/(alpha+1)Z."""

    __slots__ = ("alpha", "circumference")

    def __init__(self, alpha: GoldenNumber) -> None:
        if alpha.sign() <= 0:
            raise ValueError("alpha must be positive")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "circumference", alpha + 1)

    def __setattr__(self, name, value):
        raise AttributeError("CircleCoding is immutable")

    def reduce(self, x: GoldenNumber) -> GoldenNumber:
        c = self.circumference
        return x - c * (x / c).floor()

    def color(self, n: int) -> str:
        """Color of bead n: blue on [0, alpha), red on [alpha, alpha+1)."""
        pos = self.reduce(gn(n))
        return BLUE if (pos - self.alpha).sign() < 0 else RED

    def is_irrational(self) -> bool:
        return self.alpha.b != 0


def code_necklace(coding: CircleCoding, lo: int, hi: int) -> str:
    """Colors of beads lo..hi inclusive, as a B/R string."""
    if lo > hi:
        raise ValueError("need lo <= hi")
    out = []
    pos = coding.reduce(gn(lo))
    one = gn(1)
    for _ in range(lo, hi + 1):
        out.append(BLUE if (pos - coding.alpha).sign() < 0 else RED)
        pos = pos + one
        if (pos - coding.circumference).sign() >= 0:
            pos = pos - coding.circumference
    return "".join(out)


def complexity(coding: CircleCoding, n: int) -> int:
    """Number of distinct length-n windows in the coded necklace.

    Counts the arcs of the circle partition refined n times under the
    rotation by 1: the arc endpoints are the backward orbit of the two
    original arc endpoints 0 and alpha, collected exactly.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not coding.is_irrational():
        raise ValueError("complexity is defined here for irrational alpha only")
    if n == 0:
        return 1
    endpoints: set[GoldenNumber] = set()
    for k in range(n):
        endpoints.add(coding.reduce(gn(-k)))
        endpoints.add(coding.reduce(coding.alpha - k))
    return len(endpoints)


def arc_windows(coding: CircleCoding, n: int) -> set[str]:
    """The distinct length-n windows, one per refined arc (midpoint probes)."""
    if n <= 0:
        raise ValueError("n must be positive")
    pts: set[GoldenNumber] = set()
    for k in range(n):
        pts.add(coding.reduce(gn(-k)))
        pts.add(coding.reduce(coding.alpha - k))
    cuts = sorted(pts)
    cuts.append(cuts[0] + coding.circumference)
    half = Fraction(1, 2)
    words: set[str] = set()
    for a, b in zip(cuts, cuts[1:]):
        mid = coding.reduce((a + b) * half)
        word = []
        pos = mid
        for _ in range(n):
            word.append(BLUE if (pos - coding.alpha).sign() < 0 else RED)
            pos = coding.reduce(pos + 1)
        words.add("".join(word))
    return words


def blue_frequency(coding: CircleCoding, n: int) -> float:
    """Share of blue beads on [-n, n], for convergence experiments."""
    necklace = code_necklace(coding, -n, n)
    return necklace.count(BLUE) / len(necklace)
