"""Coordinate arithmetic in a stable tube of rank r.

A point of the tube is a pair (i, l): socle residue i in Z_r and
quasilength l >= 1.  The zero object is encoded as the unique coordinate
with l = 0 (and i = 0 by convention), so that boundary constructions
degrade gracefully.

Conventions (fixed once, used everywhere):
    tau M(i,l)  = M(i-1, l)
    down-arrow  : M(i,l) -> M(i+1, l-1)
    up-arrow    : M(i,l) -> M(i,   l+1)
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class TubeCoord:
    """A point M(i, l) of a stable tube; l = 0 is the zero object."""

    i: int
    l: int

    def is_zero(self) -> bool:
        return self.l == 0

    def __repr__(self):
        return "0" if self.is_zero() else f"M({self.i},{self.l})"


ZERO = TubeCoord(0, 0)


def normalize(i: int, l: int, r: int) -> TubeCoord:
    """Reduce the socle residue mod r; l = 0 collapses to the zero object."""
    if r < 2:
        raise ValueError(f"tube rank must be >= 2, got {r}")
    if l < 0:
        raise ValueError(f"quasilength must be >= 0, got {l}")
    if l == 0:
        return ZERO
    return TubeCoord(i % r, l)


def tau(r: int, x: TubeCoord, n: int = 1) -> TubeCoord:
    """n-th power of the AR translate; fixes the zero object."""
    if x.is_zero():
        return ZERO
    return normalize(x.i - n, x.l, r)


def quasisocle(r: int, x: TubeCoord) -> TubeCoord:
    if x.is_zero():
        return ZERO
    return normalize(x.i, 1, r)


def quasitop(r: int, x: TubeCoord) -> TubeCoord:
    if x.is_zero():
        return ZERO
    return normalize(x.i + x.l - 1, 1, r)


@dataclass(frozen=True)
class CyclicInterval:
    """The residue set {[start + t]_r : 0 <= t < length}, length capped at r."""

    start: int
    length: int

    def members(self, r: int) -> set[int]:
        return {(self.start + t) % r for t in range(min(self.length, r))}

    def contains(self, j: int, r: int) -> bool:
        return self.length > 0 and (j - self.start) % r < min(self.length, r)


def in_wing(r: int, x: TubeCoord, root: TubeCoord) -> bool:
    """Membership of x in the wing under `root` (root quasilength <= r)."""
    if root.is_zero() or x.is_zero():
        return False
    if root.l > r:
        raise ValueError(f"wing undefined for quasilength {root.l} > rank {r}")
    off = (x.i - root.i) % r
    return off <= root.l - 1 and 1 <= x.l <= root.l - off


def wing(r: int, root: TubeCoord) -> set[TubeCoord]:
    """The wing {M(j,m) : i <= j <= i+l-1, 1 <= m <= l+i-j}; size l(l+1)/2."""
    if root.is_zero():
        return set()
    if root.l > r:
        raise ValueError(f"wing undefined for quasilength {root.l} > rank {r}")
    return {
        normalize(root.i + off, m, r)
        for off in range(root.l)
        for m in range(1, root.l - off + 1)
    }
