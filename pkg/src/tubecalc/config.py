"""Cluster-tilting configurations inside one tube, and their regions.

A TubeConfig records where the shifted summands of the tilting object sit
in a tube of rank r, as a set of coordinates, plus opaque labels for the
summands outside the tube.  Validation enforces quasilength bounds,
pairwise Ext-vanishing and wing separation, and derives the wing roots
(the summands maximal under wing containment, ordered cyclically).

Region formulas (all in the root frame, reduced mod r):

    wing of root (i_k, l_k):   i_k <= i <= i_k+l_k-1,  1 <= l <= l_k+i_k-i
    H_k:  {(i_k, l) : r <= l <= r+l_k}  u  {(i_k+p, r+l_k-p) : 0 <= p <= l_k}
    R_k:    i_k+1 <= i <= i_k+l_k-1,    r   <= l <= r+l_k+i_k-i-1
    Rt_k:   i_k+1 <= i <= i_k+l_k,      r-1 <= l <= r+l_k+i_k-i-1
    Top_k = (i_k, r+l_k)
    D (s=1, l_0=r-1 only, i_0 shifted to 0):
            1 <= i <= r-1,  r-i <= l <= 2r-2-i
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .coords import ZERO, TubeCoord, in_wing, normalize, tau, wing
from .errors import (
    QuasilengthViolation,
    RigidityViolation,
    SeparationViolation,
    UnsupportedConfiguration,
)
from .hom import hom_dim_tube

REGION_NAMES = ("wing_tau_t", "wing_t", "wing_tau_sq_t", "h", "r", "r_tilde", "top", "d")


@dataclass(frozen=True)
class RegionKind:
    """One of the named regions; k indexes a wing, absent for D."""

    name: str
    k: int | None = None

    def __post_init__(self):
        if self.name not in REGION_NAMES:
            raise ValueError(f"unknown region {self.name!r}")
        if (self.k is None) != (self.name == "d"):
            raise ValueError(f"region {self.name!r} needs k={'None' if self.name == 'd' else 'an index'}")


@dataclass(frozen=True)
class TubeConfig:
    rank: int
    tau_t_summands: frozenset[TubeCoord]
    wing_roots: tuple[TubeCoord, ...]
    preprojective_labels: tuple[str, ...] = ()

    @property
    def s(self) -> int:
        return len(self.wing_roots)

    def t_summands(self) -> tuple[TubeCoord, ...]:
        """The tube summands of T itself, i.e. tau^{-1} of the stored coordinates."""
        return tuple(sorted(tau(self.rank, c, -1) for c in self.tau_t_summands))

    def is_deleted(self, x: TubeCoord) -> bool:
        return x in self.tau_t_summands

    def seeds_available(self) -> bool:
        return self.s == 1 and self.wing_roots[0].l == self.rank - 1

    def dim_vectors_available(self) -> bool:
        return not self.preprojective_labels or self.seeds_available()

    # -- region membership ------------------------------------------------

    def in_region(self, kind: RegionKind, x: TubeCoord) -> bool:
        if x.is_zero():
            return False
        r = self.rank
        if kind.name == "d":
            self._require_d()
            i0 = self.wing_roots[0].i
            inorm = (x.i - i0) % r
            return 1 <= inorm <= r - 1 and r - inorm <= x.l <= 2 * r - 2 - inorm
        root = self.wing_roots[kind.k]
        ik, lk = root.i, root.l
        off = (x.i - ik) % r
        if kind.name == "wing_tau_t":
            return in_wing(r, x, root)
        if kind.name == "wing_t":
            return in_wing(r, x, normalize(ik + 1, lk, r))
        if kind.name == "wing_tau_sq_t":
            return in_wing(r, x, normalize(ik - 1, lk, r))
        if kind.name == "h":
            return (off == 0 and r <= x.l <= r + lk) or (off <= lk and x.l == r + lk - off)
        if kind.name == "r":
            return 1 <= off <= lk - 1 and r <= x.l <= r + lk - off - 1
        if kind.name == "r_tilde":
            return 1 <= off <= lk and r - 1 <= x.l <= r + lk - off - 1
        if kind.name == "top":
            return off == 0 and x.l == r + lk
        raise AssertionError(kind)

    def region_members(self, kind: RegionKind) -> set[TubeCoord]:
        r = self.rank
        if kind.name == "d":
            self._require_d()
            i0 = self.wing_roots[0].i
            return {
                normalize(i0 + i, l, r)
                for i in range(1, r)
                for l in range(r - i, 2 * r - 1 - i)
            }
        root = self.wing_roots[kind.k]
        ik, lk = root.i, root.l
        if kind.name == "wing_tau_t":
            return wing(r, root)
        if kind.name == "wing_t":
            return wing(r, normalize(ik + 1, lk, r))
        if kind.name == "wing_tau_sq_t":
            return wing(r, normalize(ik - 1, lk, r))
        if kind.name == "h":
            ray = {normalize(ik, l, r) for l in range(r, r + lk + 1)}
            coray = {normalize(ik + p, r + lk - p, r) for p in range(lk + 1)}
            return ray | coray
        if kind.name == "r":
            return {
                normalize(i, l, r)
                for i in range(ik + 1, ik + lk)
                for l in range(r, r + lk + ik - i)
            }
        if kind.name == "r_tilde":
            return {
                normalize(i, l, r)
                for i in range(ik + 1, ik + lk + 1)
                for l in range(r - 1, r + lk + ik - i)
            }
        if kind.name == "top":
            return {self.top(kind.k)}
        raise AssertionError(kind)

    def top(self, k: int) -> TubeCoord:
        root = self.wing_roots[k]
        return normalize(root.i, self.rank + root.l, self.rank)

    def in_any(self, name: str, x: TubeCoord) -> bool:
        return any(self.in_region(RegionKind(name, k), x) for k in range(self.s))

    def in_tau_t_wings(self, x: TubeCoord) -> bool:
        return self.in_any("wing_tau_t", x)

    def _require_d(self):
        if not self.seeds_available():
            raise UnsupportedConfiguration(
                "region D needs a single wing root of quasilength r-1"
            )


def validate_config(
    rank: int,
    summands,
    labels=(),
) -> TubeConfig:
    """Validate and assemble a TubeConfig from raw summand coordinates."""
    if rank < 2:
        raise ValueError(f"tube rank must be >= 2, got {rank}")
    coords = frozenset(normalize(c.i, c.l, rank) if isinstance(c, TubeCoord) else normalize(c[0], c[1], rank) for c in summands)
    for c in coords:
        if not 1 <= c.l <= rank - 1:
            raise QuasilengthViolation(
                f"summand {c} has quasilength outside [1, {rank - 1}]"
            )
    roots = _wing_roots(rank, coords)
    _check_separation(rank, roots)
    for v in coords:
        for w in coords:
            if v != w and hom_dim_tube(rank, v, tau(rank, w)) != 0:
                raise RigidityViolation(
                    f"Hom({v}, tau {w}) != 0: summands have self-extensions"
                )
    return TubeConfig(
        rank=rank,
        tau_t_summands=coords,
        wing_roots=roots,
        preprojective_labels=tuple(labels),
    )


def _wing_roots(rank: int, coords: frozenset[TubeCoord]) -> tuple[TubeCoord, ...]:
    roots = [
        c
        for c in coords
        if not any(o != c and in_wing(rank, c, o) for o in coords)
    ]
    return tuple(sorted(roots, key=lambda c: (c.i, c.l)))


def _check_separation(rank: int, roots: tuple[TubeCoord, ...]):
    # Overlapping wings are a rigidity failure; adjacency between disjoint
    # wings is the separation failure proper.  A single wing needs nothing:
    # l <= r-1 already leaves a quasisimple outside it.
    for a in roots:
        for b in roots:
            if a == b:
                continue
            qa = {(a.i + t) % rank for t in range(a.l)}
            qb = {(b.i + t) % rank for t in range(b.l)}
            if qa & qb:
                raise RigidityViolation(
                    f"wings of {a} and {b} overlap: summands have self-extensions"
                )
    s = len(roots)
    if s < 2:
        return
    for k in range(s):
        a, b = roots[k], roots[(k + 1) % s]
        if (b.i - (a.i + a.l - 1)) % rank in (0, 1):
            raise SeparationViolation(
                f"wings of {a} and {b} are not separated by a quasisimple"
            )


def running_example_config() -> TubeConfig:
    """The rank-3 tube configuration used throughout the tests and docs."""
    return validate_config(3, [TubeCoord(0, 2), TubeCoord(1, 1)], ["P_1", "P_4"])


def random_config(
    rng: random.Random,
    rank: int,
    force_max_wing: bool = False,
    labels=(),
) -> TubeConfig:
    """A uniformly sloppy but always-valid random configuration.

    With force_max_wing, produces the single-wing regime l_0 = r-1 used by
    the dimension-vector machinery; otherwise wing count and sizes are
    random subject to the separation constraint.
    """
    if force_max_wing:
        roots = [normalize(rng.randrange(rank), rank - 1, rank)]
    else:
        # Lay wings around the circle of r quasisimples: each wing of size
        # l_k is followed by a gap of at least one quasisimple.
        roots = []
        start = rng.randrange(rank)
        budget = rank
        while budget >= 2 and rng.random() < 0.8:
            size = rng.randint(1, budget - 1)
            gap = rng.randint(1, budget - size)
            roots.append(normalize(start, size, rank))
            start += size + gap
            budget -= size + gap
    chosen = list(roots)
    # Optionally deepen each wing with compatible inner summands.
    for root in roots:
        candidates = [c for c in wing(rank, root) if c != root and c.l < root.l]
        rng.shuffle(candidates)
        for cand in candidates:
            if rng.random() > 0.5:
                continue
            ok = all(
                hom_dim_tube(rank, cand, tau(rank, other)) == 0
                and hom_dim_tube(rank, other, tau(rank, cand)) == 0
                for other in chosen
            )
            if ok:
                chosen.append(cand)
    return validate_config(rank, chosen, labels)
