"""Rigidity and Schurian status of the module at each tube coordinate.

The decision rules, for X = M(i,l) not a deleted cell:

    tau-rigid   iff  l <= r-1
    rigid       iff  l <= r-1,  or X in some H_k minus its Top_k
    Schurian    iff  l <= r-2,
                 or  l in {r-1, r} and X outside every Rt_k,
                 or  l >= r+1 and X in some H_k

The factorisation predicates offer a second, independent route to the
same regions: each asks whether a canonical map through the tube factors
through the deleted summands, which reduces to a single wing-membership
test of a shifted coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import RegionKind, TubeConfig
from .coords import TubeCoord, normalize
from .errors import PreconditionViolation


@dataclass(frozen=True)
class ClassificationRecord:
    coord: TubeCoord
    deleted: bool
    tau_rigid: bool | None = None
    rigid: bool | None = None
    schurian: bool | None = None
    strongly_schurian: bool | None = None

    def symbol(self) -> str:
        """Legend code for exports: fill-shape, or 'x' for a deleted cell."""
        if self.deleted:
            return "x"
        shape = "circle" if self.schurian else "square"
        fill = "black" if self.tau_rigid else ("gray" if self.rigid else "white")
        return f"{fill}-{shape}"


def classify(config: TubeConfig, x: TubeCoord, with_strong: bool | None = None) -> ClassificationRecord:
    """Classify one nonzero coordinate under the given configuration."""
    if x.is_zero():
        raise ValueError("cannot classify the zero object")
    r = config.rank
    x = normalize(x.i, x.l, r)
    if config.is_deleted(x):
        return ClassificationRecord(coord=x, deleted=True)
    ql = x.l
    in_h = config.in_any("h", x)
    is_top = any(x == config.top(k) for k in range(config.s))
    tau_rigid = ql <= r - 1
    rigid = tau_rigid or (in_h and not is_top)
    if ql <= r - 2:
        schurian = True
    elif ql <= r:
        schurian = not config.in_any("r_tilde", x)
    else:
        schurian = in_h
    strong = None
    if with_strong is None:
        with_strong = config.dim_vectors_available()
    if with_strong:
        strong = strongly_schurian(config, x)
    return ClassificationRecord(
        coord=x,
        deleted=False,
        tau_rigid=tau_rigid,
        rigid=rigid,
        schurian=schurian,
        strongly_schurian=strong,
    )


def classify_grid(config: TubeConfig, max_ql: int) -> list[ClassificationRecord]:
    """One record per cell with 1 <= ql <= max_ql, row-major (ql, then i)."""
    if max_ql < 1:
        raise ValueError(f"max_ql must be >= 1, got {max_ql}")
    with_strong = config.dim_vectors_available()
    return [
        classify(config, TubeCoord(i, l), with_strong=with_strong)
        for l in range(1, max_ql + 1)
        for i in range(config.rank)
    ]


def strongly_schurian(config: TubeConfig, x: TubeCoord) -> bool:
    """True iff every dimension-vector entry of the cell is at most one."""
    from .dimvec import dim_vector

    if config.is_deleted(x):
        return False
    vec = dim_vector(config, x)
    return all(v <= 1 for v in vec.values)


# -- factorisation predicates (shift criterion) -----------------------------


def factors_u(config: TubeConfig, x: TubeCoord) -> bool:
    """Does y^r x^r : X -> X factor through the deleted summands?"""
    r = config.rank
    if x.l < r + 1:
        raise PreconditionViolation(f"u is defined for quasilength >= {r + 1}")
    shift = normalize(x.i + r, x.l - r, r)
    return config.in_tau_t_wings(shift)


def factors_v(config: TubeConfig, x: TubeCoord) -> bool:
    """Does the canonical X -> tau X factor through deleted or twice-shifted summands?"""
    r = config.rank
    if x.l < r:
        raise PreconditionViolation(f"v is defined for quasilength >= {r}")
    shift = normalize(x.i + r - 1, x.l - r + 1, r)
    return config.in_tau_t_wings(shift) or config.in_any("wing_tau_sq_t", shift)


def factors_v_both(config: TubeConfig, x: TubeCoord) -> bool:
    """Does X -> tau X factor through both summand shifts separately?"""
    r = config.rank
    if x.l < r:
        raise PreconditionViolation(f"v is defined for quasilength >= {r}")
    shift = normalize(x.i + r - 1, x.l - r + 1, r)
    return any(
        config.in_region(RegionKind("wing_tau_t", k), shift)
        and config.in_region(RegionKind("wing_tau_sq_t", k), shift)
        for k in range(config.s)
    )


def factors_w(config: TubeConfig, x: TubeCoord) -> bool:
    """Does the canonical tau^{-1}X -> tau X factor through the deleted summands?

    Defined from quasilength r-1 up: that is where the map is nonzero, and
    where the matching region Rt_k starts.
    """
    r = config.rank
    if x.l < r - 1:
        raise PreconditionViolation(f"w is defined for quasilength >= {r - 1}")
    shift = normalize(x.i + r - 1, x.l - r + 2, r)
    return config.in_tau_t_wings(shift)


def region_of_u(config: TubeConfig, x: TubeCoord) -> bool:
    return config.in_any("h", x) or config.in_any("r", x)


def region_of_v(config: TubeConfig, x: TubeCoord) -> bool:
    if any(x == config.top(k) for k in range(config.s)):
        return False
    return config.in_any("h", x) or config.in_any("r", x)


def region_of_v_both(config: TubeConfig, x: TubeCoord) -> bool:
    return config.in_any("r", x)


def region_of_w(config: TubeConfig, x: TubeCoord) -> bool:
    return config.in_any("r_tilde", x)
