"""Denominator vectors and their certified three-part decomposition.

Everything here lives in the single-maximal-wing regime: one wing root of
quasilength r-1, whose frame is internally shifted so the root sits at
socle residue 0.  Inside the diamond D every cell M = M(i,l) has three
companions,

    x = M(i, r-i-1)          last cell on its ray below D (zero if i = r-1),
    y = M(0, i+l)            first cell on its coray above D,
    z = M(0, j-2) or M(0, r-2)

where j indexes the highest summand on the injective coray of the root's
wing strictly below the ray through M (z degenerates to zero when j = 2
or r = 2).  The dimension vector of M is then the entrywise sum of the
companions' plus one at the root summand, and the denominator vector of
the associated cluster variable is that sum without the extra one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import classify
from .config import RegionKind, TubeConfig
from .coords import ZERO, TubeCoord, normalize, tau
from .dimvec import DimVector, dim_vector
from .errors import ConsistencyFailure, NotInD, PreconditionViolation, UnsupportedConfiguration


@dataclass(frozen=True)
class Companions:
    m: TubeCoord
    x: TubeCoord
    y: TubeCoord
    z: TubeCoord
    i_set: frozenset[TubeCoord]
    i_prime: frozenset[TubeCoord]
    x_prime: TubeCoord | None


@dataclass(frozen=True)
class DecompositionCertificate:
    m: TubeCoord
    parts: tuple  # (coordinate, DimVector, record) triples, zero parts dropped
    delta_applied: bool
    lhs: DimVector
    rhs_sum: DimVector


def _require_regime(config: TubeConfig):
    if not config.seeds_available():
        raise UnsupportedConfiguration(
            "decomposition needs a single wing root of quasilength r-1"
        )


def companions(config: TubeConfig, m: TubeCoord) -> Companions:
    """The three companion cells of m in D, plus the index sets behind z."""
    _require_regime(config)
    r = config.rank
    m = normalize(m.i, m.l, r)
    if not config.in_region(RegionKind("d"), m):
        raise NotInD(f"{m} is not in the diamond region D")
    i0 = config.wing_roots[0].i
    i = (m.i - i0) % r  # frame with the wing root at residue 0
    l = m.l

    x = normalize(i0 + i, r - i - 1, r) if r - i - 1 > 0 else ZERO
    y = normalize(i0, i + l, r)
    i_set = frozenset(normalize(i0 + j, r - j, r) for j in range(1, i + 1))
    i_all = frozenset(normalize(i0 + j, r - j, r) for j in range(1, r))
    i_prime = i_all - i_set

    t_set = set(config.t_summands())
    inner = sorted(
        ((c.i - i0) % r) for c in i_prime & t_set
    )
    if inner:
        j = inner[0]  # maximal quasilength = minimal residue offset
        z = normalize(i0, j - 2, r) if j - 2 > 0 else ZERO
        x_prime = normalize(i0 + j, r - j, r)
    else:
        z = normalize(i0, r - 2, r) if r - 2 > 0 else ZERO
        x_prime = None
    return Companions(m=m, x=x, y=y, z=z, i_set=i_set, i_prime=i_prime, x_prime=x_prime)


def decompose(config: TubeConfig, m: TubeCoord) -> DecompositionCertificate:
    """Certified decomposition of d(m) into at most three rigid parts."""
    comp = companions(config, m)
    lhs = dim_vector(config, comp.m)
    t0 = tau(config.rank, config.wing_roots[0], -1)
    rhs = DimVector(tuple((k, 0) for k in lhs.labels))
    parts = []
    for c in (comp.x, comp.y, comp.z):
        if c.is_zero() or config.is_deleted(c):
            continue  # zero module: contributes nothing
        vec = dim_vector(config, c)
        rhs = rhs.add(vec)
        record = classify(config, c)
        if not record.rigid:
            raise ConsistencyFailure(f"companion {c} of {comp.m} is not rigid")
        parts.append((c, vec, record))
    rhs = rhs.bump(t0, 1)
    if rhs.entries != lhs.entries:
        raise ConsistencyFailure(
            f"decomposition identity failed at {comp.m}: {lhs.entries} != {rhs.entries}"
        )
    return DecompositionCertificate(
        m=comp.m, parts=tuple(parts), delta_applied=True, lhs=lhs, rhs_sum=rhs
    )


def d_vector(config: TubeConfig, m: TubeCoord) -> DimVector:
    """Denominator vector of the cluster variable attached to a rigid cell."""
    r = config.rank
    m = normalize(m.i, m.l, r)
    if m.is_zero() or config.is_deleted(m):
        raise PreconditionViolation("d-vectors are defined for nonzero, non-deleted cells")
    if m.l > r - 1:
        raise PreconditionViolation(f"{m} is not rigid in the tube (quasilength > {r - 1})")
    if not config.seeds_available():
        if not config.dim_vectors_available():
            raise UnsupportedConfiguration(
                "d-vectors outside the single maximal-wing regime need a "
                "configuration without preprojective labels"
            )
        return dim_vector(config, m)  # no maximal summand: d and d' coincide
    if config.in_tau_t_wings(m):
        return dim_vector(config, m)  # coincidence branch
    t0 = tau(r, config.wing_roots[0], -1)
    vec = dim_vector(config, m)
    if vec[t0] < 1:
        raise ConsistencyFailure(f"root entry of {m} would go negative")
    return vec.bump(t0, -1)


def diamond_cells(config: TubeConfig) -> list[TubeCoord]:
    """All cells of D, in reading order (ql ascending, then residue)."""
    members = config.region_members(RegionKind("d"))
    return sorted(members, key=lambda c: (c.l, c.i))
