"""Dimension vectors of the modules induced from tube coordinates.

Entries are indexed by the declared summands of the tilting object: tube
summands by their own coordinates (one step up the translate from the
stored deleted positions), preprojective summands by their labels.  A
tube entry is the cluster-category Hom dimension; a preprojective entry
is a sum of quasisimple seed values down the coordinate's composition
chain, the seed being 1 exactly at the quasisimple outside the single
maximal wing (only that regime pins the seeds down).

The mesh recurrence

    d(M) = d(M_up) + d(M_low) - d(tau M) + delta(M a summand)

reproduces the same table from the quasisimple row alone, and serves as
the internal oracle for the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import TubeConfig
from .coords import ZERO, TubeCoord, normalize, tau
from .errors import UnsupportedConfiguration
from .hom import hom_dim_cluster


@dataclass(frozen=True)
class DimVector:
    """Integer vector indexed by summand labels, in a fixed display order."""

    entries: tuple  # tuple of (label, value) pairs
    partial: bool = False

    @property
    def labels(self) -> tuple:
        return tuple(k for k, _ in self.entries)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.entries)

    def __getitem__(self, label) -> int:
        for k, v in self.entries:
            if k == label:
                return v
        raise KeyError(label)

    def as_dict(self) -> dict:
        return dict(self.entries)

    def as_tuple(self, order) -> tuple[int, ...]:
        d = self.as_dict()
        return tuple(d[k] for k in order)

    def add(self, other: "DimVector") -> "DimVector":
        assert self.labels == other.labels
        return DimVector(
            tuple((k, v + w) for (k, v), (_, w) in zip(self.entries, other.entries)),
            partial=self.partial,
        )

    def sub(self, other: "DimVector") -> "DimVector":
        assert self.labels == other.labels
        return DimVector(
            tuple((k, v - w) for (k, v), (_, w) in zip(self.entries, other.entries)),
            partial=self.partial,
        )

    def bump(self, label, amount: int = 1) -> "DimVector":
        """A copy with `amount` added at one entry."""
        return DimVector(
            tuple((k, v + amount if k == label else v) for k, v in self.entries),
            partial=self.partial,
        )

    def is_zero(self) -> bool:
        return all(v == 0 for _, v in self.entries)


def summand_labels(config: TubeConfig, partial: bool = False) -> tuple:
    """Display order: preprojective labels as declared, tube summands cyclically."""
    tube = config.t_summands()
    if partial:
        return tube
    return tuple(config.preprojective_labels) + tube


def preprojective_seed(config: TubeConfig, j: int) -> int:
    """Hom dimension from any preprojective summand to the quasisimple Q_j."""
    if not config.seeds_available():
        raise UnsupportedConfiguration(
            "preprojective seeds need a single wing root of quasilength r-1"
        )
    i0 = config.wing_roots[0].i
    return 1 if (j - (i0 - 1)) % config.rank == 0 else 0


def dim_entry(config: TubeConfig, v, m: TubeCoord) -> int:
    """One dimension-vector entry: summand v (coordinate or label) against m."""
    r = config.rank
    if m.is_zero():
        return 0
    m = normalize(m.i, m.l, r)
    if isinstance(v, TubeCoord):
        return hom_dim_cluster(r, v, m)
    if v not in config.preprojective_labels:
        raise KeyError(f"unknown preprojective label {v!r}")
    return sum(preprojective_seed(config, m.i + t) for t in range(m.l))


def dim_vector(config: TubeConfig, m: TubeCoord, partial: bool = False) -> DimVector:
    """The full dimension vector of the cell m (zero maps to the zero vector)."""
    if config.preprojective_labels and not partial and not config.seeds_available():
        raise UnsupportedConfiguration(
            "dimension vectors with preprojective entries need the single "
            "maximal-wing regime; request partial=True for tube entries only"
        )
    labels = summand_labels(config, partial=partial)
    return DimVector(
        tuple((v, dim_entry(config, v, m)) for v in labels),
        partial=partial,
    )


def mesh_table(config: TubeConfig, max_ql: int, partial: bool = False) -> dict[TubeCoord, DimVector]:
    """Dimension vectors of all cells up to max_ql via the mesh recurrence.

    Only the quasisimple row is seeded from the closed form; higher cells
    are obtained by solving the recurrence upward, so agreement with
    dim_vector is a genuine cross-check.  One exception: a mesh ending at
    a deleted cell corresponds to no almost-split sequence (the module
    there is zero), so the recurrence cannot determine the cell above a
    deleted one; those few cells are seeded from the closed form as well.
    """
    if max_ql < 1:
        raise ValueError(f"max_ql must be >= 1, got {max_ql}")
    r = config.rank
    labels = summand_labels(config, partial=partial)
    t_set = set(config.t_summands())

    def closed_form(c: TubeCoord) -> DimVector:
        return DimVector(
            tuple((v, dim_entry(config, v, c)) for v in labels), partial=partial
        )

    table: dict[TubeCoord, DimVector] = {}
    for i in range(r):
        table[TubeCoord(i, 1)] = closed_form(TubeCoord(i, 1))
    for l in range(1, max_ql):
        for i in range(r):
            mesh_end = TubeCoord(i, l)
            up = normalize(i - 1, l + 1, r)
            if config.is_deleted(mesh_end):
                table[up] = closed_form(up)
                continue
            low = normalize(i, l - 1, r) if l > 1 else ZERO
            acc = table[mesh_end].add(table[tau(r, mesh_end)])
            if not low.is_zero():
                acc = acc.sub(table[low])
            if mesh_end in t_set:
                acc = acc.bump(mesh_end, -1)
            table[up] = acc
    return table


def mesh_residuals(config: TubeConfig, max_ql: int, partial: bool = False):
    """Closed-form violations of the mesh recurrence, over all valid meshes.

    Yields (mesh end, lhs entries, rhs entries) whenever the closed form
    fails the recurrence at a mesh ending at a non-deleted cell with
    quasilength <= max_ql; an empty list certifies agreement.
    """
    r = config.rank
    t_set = set(config.t_summands())
    bad = []
    for l in range(1, max_ql + 1):
        for i in range(r):
            m = TubeCoord(i, l)
            if config.is_deleted(m):
                continue
            lhs = dim_vector(config, m, partial=partial)
            rhs = dim_vector(config, normalize(i - 1, l + 1, r), partial=partial)
            if l > 1:
                rhs = rhs.add(dim_vector(config, TubeCoord(i, l - 1), partial=partial))
            rhs = rhs.sub(dim_vector(config, tau(r, m), partial=partial))
            if m in t_set:
                rhs = rhs.bump(m, 1)
            if lhs.entries != rhs.entries:
                bad.append((m, lhs.entries, rhs.entries))
    return bad
