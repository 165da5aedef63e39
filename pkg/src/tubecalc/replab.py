"""Concrete quiver representations described by coloured overlay quivers.

A coloured quiver is a tree Gamma drawn over a base quiver Q: every
Gamma-vertex carries a Q-vertex colour, every Gamma-arrow the name of a
Q-arrow whose endpoints match the endpoint colours.  It determines a
representation with basis the colour fibres and 0/1 structure matrices.

Text format, one coloured quiver per file (# starts a comment):

    quiver
      vertex 1
      vertex 2
      arrow a: 1 -> 2

    module
      vertex g1 : 1
      vertex g2 : 2
      arrow g1 -> g2 via a

Hom spaces between two representations of the same base quiver are
intertwiner spaces, solved exactly over the integers; decomposability
over a prime field is decided by exhaustive idempotent search in the
endomorphism ring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    BaseQuiverMismatch,
    CapExceeded,
    ColourMismatch,
    NonComposablePath,
    NotATree,
    ParseError,
    UnknownArrowName,
)
from .linalg import mat_mul_mod_p, nullspace_mod_p, solution_space_dim


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class BaseQuiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise UnknownArrowName(f"no arrow named {name!r} in the base quiver")


@dataclass(frozen=True)
class ColouredQuiver:
    base: BaseQuiver
    gamma_vertices: tuple[tuple[str, str], ...]  # (name, colour)
    gamma_arrows: tuple[tuple[str, str, str], ...]  # (source, target, arrow name)

    def colour(self, v: str) -> str:
        for name, colour in self.gamma_vertices:
            if name == v:
                return colour
        raise ParseError(f"unknown overlay vertex {v!r}")


@dataclass
class QuiverRep:
    """dims per base vertex and one integer matrix per base arrow.

    Matrices are stored target-dim x source-dim; a map with a zero side is
    stored as the appropriately shaped empty list of rows.
    """

    base: BaseQuiver
    dims: dict[str, int]
    maps: dict[str, list[list[int]]]

    def is_zero(self) -> bool:
        return all(d == 0 for d in self.dims.values())


# -- parsing ----------------------------------------------------------------


def parse_coloured_quiver(text: str) -> ColouredQuiver:
    q_vertices: list[str] = []
    q_arrows: list[Arrow] = []
    g_vertices: list[tuple[str, str]] = []
    g_arrows: list[tuple[str, str, str]] = []
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line in ("quiver", "module"):
            section = line
            continue
        if section is None:
            raise ParseError(f"line {lineno}: content before a section header")
        words = line.split()
        try:
            if section == "quiver" and words[0] == "vertex" and len(words) == 2:
                q_vertices.append(words[1])
            elif section == "quiver" and words[0] == "arrow":
                # arrow NAME: SRC -> TGT
                name, rest = line[5:].split(":", 1)
                src, tgt = (w.strip() for w in rest.split("->"))
                q_arrows.append(Arrow(name.strip(), src, tgt))
            elif section == "module" and words[0] == "vertex":
                # vertex NAME : COLOUR
                name, colour = (w.strip() for w in line[6:].split(":", 1))
                g_vertices.append((name, colour))
            elif section == "module" and words[0] == "arrow":
                # arrow SRC -> TGT via NAME
                rest, via = line[5:].rsplit(" via ", 1)
                src, tgt = (w.strip() for w in rest.split("->"))
                g_arrows.append((src, tgt, via.strip()))
            else:
                raise ValueError
        except ValueError:
            raise ParseError(f"line {lineno}: cannot parse {raw.strip()!r}") from None
    if not q_vertices:
        raise ParseError("missing or empty quiver section")
    base = BaseQuiver(tuple(q_vertices), tuple(q_arrows))
    cq = ColouredQuiver(base, tuple(g_vertices), tuple(g_arrows))
    _validate_coloured_quiver(cq)
    return cq


def coloured_quiver_to_text(cq: ColouredQuiver) -> str:
    lines = ["quiver"]
    lines += [f"  vertex {v}" for v in cq.base.vertices]
    lines += [f"  arrow {a.name}: {a.source} -> {a.target}" for a in cq.base.arrows]
    lines += ["", "module"]
    lines += [f"  vertex {name} : {colour}" for name, colour in cq.gamma_vertices]
    lines += [f"  arrow {s} -> {t} via {a}" for s, t, a in cq.gamma_arrows]
    return "\n".join(lines) + "\n"


def _validate_coloured_quiver(cq: ColouredQuiver):
    names = [n for n, _ in cq.gamma_vertices]
    if len(set(names)) != len(names):
        raise ParseError("duplicate overlay vertex names")
    for name, colour in cq.gamma_vertices:
        if colour not in cq.base.vertices:
            raise ColourMismatch(f"vertex {name!r} coloured by unknown {colour!r}")
    for src, tgt, arrow_name in cq.gamma_arrows:
        arrow = cq.base.arrow(arrow_name)
        if cq.colour(src) != arrow.source or cq.colour(tgt) != arrow.target:
            raise ColourMismatch(
                f"arrow {src}->{tgt} via {arrow_name!r} conflicts with colours "
                f"{cq.colour(src)}, {cq.colour(tgt)}"
            )
    # Gamma must be a tree: connected with |E| = |V| - 1.
    if len(cq.gamma_arrows) != len(names) - 1:
        raise NotATree(f"{len(names)} vertices need {len(names) - 1} arrows")
    adjacency = {n: set() for n in names}
    for src, tgt, _ in cq.gamma_arrows:
        adjacency[src].add(tgt)
        adjacency[tgt].add(src)
    seen = {names[0]}
    stack = [names[0]]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    if len(seen) != len(names):
        raise NotATree("overlay quiver is not connected")


# -- representations --------------------------------------------------------


def build_representation(cq: ColouredQuiver) -> QuiverRep:
    """Basis at base vertex i is the colour fibre; matrices sum arrow targets."""
    fibre = {v: [n for n, c in cq.gamma_vertices if c == v] for v in cq.base.vertices}
    index = {v: {n: k for k, n in enumerate(fibre[v])} for v in cq.base.vertices}
    dims = {v: len(fibre[v]) for v in cq.base.vertices}
    maps = {}
    for arrow in cq.base.arrows:
        rows = [[0] * dims[arrow.source] for _ in range(dims[arrow.target])]
        for src, tgt, name in cq.gamma_arrows:
            if name == arrow.name:
                rows[index[arrow.target][tgt]][index[arrow.source][src]] += 1
        maps[arrow.name] = rows
    return QuiverRep(base=cq.base, dims=dims, maps=maps)


def zero_rep(base: BaseQuiver) -> QuiverRep:
    return QuiverRep(base=base, dims={v: 0 for v in base.vertices}, maps={a.name: [] for a in base.arrows})


def colour_dim_vector(cq: ColouredQuiver) -> dict[str, int]:
    """Fibre sizes per base vertex, in declaration order."""
    return {v: sum(1 for _, c in cq.gamma_vertices if c == v) for v in cq.base.vertices}


# -- Hom and End ------------------------------------------------------------


def _intertwiner_system(a: QuiverRep, b: QuiverRep):
    """Constraint rows for maps a -> b; unknowns are entries of the X_v."""
    if a.base != b.base:
        raise BaseQuiverMismatch("representations live over different base quivers")
    offsets = {}
    total = 0
    for v in a.base.vertices:
        offsets[v] = total
        total += a.dims[v] * b.dims[v]

    def unknown(v, row, col):
        return offsets[v] + row * a.dims[v] + col

    rows = []
    for arrow in a.base.arrows:
        s, t = arrow.source, arrow.target
        ma, mb = a.maps[arrow.name], b.maps[arrow.name]
        # X_t @ ma == mb @ X_s, entry (p, q): p < dims_b[t], q < dims_a[s]
        for p in range(b.dims[t]):
            for q in range(a.dims[s]):
                row = [0] * total
                for k in range(a.dims[t]):
                    row[unknown(t, p, k)] += ma[k][q]
                for k in range(b.dims[s]):
                    row[unknown(s, k, q)] -= mb[p][k]
                if any(row):
                    rows.append(row)
    return rows, total


def hom_dim_reps(a: QuiverRep, b: QuiverRep) -> int:
    """dim over Q of the space of homomorphisms a -> b."""
    rows, total = _intertwiner_system(a, b)
    return solution_space_dim(rows, total)


# -- relations ---------------------------------------------------------------


def evaluate_path(rep: QuiverRep, path) -> list[list[int]]:
    """Matrix of a path given as arrow names in traversal order."""
    if not path:
        raise NonComposablePath("empty path")
    arrows = [rep.base.arrow(name) for name in path]
    for first, second in zip(arrows, arrows[1:]):
        if first.target != second.source:
            raise NonComposablePath(f"{first.name} then {second.name} do not compose")
    n = rep.dims[arrows[0].source]
    cur = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for arrow in arrows:
        mat = rep.maps[arrow.name]
        k = rep.dims[arrow.source]
        cur = [
            [sum(mat[i][t] * cur[t][j] for t in range(k)) for j in range(n)]
            for i in range(rep.dims[arrow.target])
        ]
    return cur


def check_relations(rep: QuiverRep, relations) -> bool:
    """Each relation is a list of (coefficient, path) pairs; all must vanish."""
    for relation in relations:
        acc = None
        for coeff, path in relation:
            term = evaluate_path(rep, path)
            scaled = [[coeff * x for x in row] for row in term]
            if acc is None:
                acc = scaled
            else:
                shape = (len(acc), len(acc[0]) if acc else 0)
                if shape != (len(scaled), len(scaled[0]) if scaled else 0):
                    raise NonComposablePath("relation mixes paths with different endpoints")
                acc = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(acc, scaled)]
        if acc is not None and any(x != 0 for row in acc for x in row):
            return False
    return True


def enumerate_reps(base: BaseQuiver, dims: dict[str, int], p: int = 2):
    """All representations of `base` with the given dims over F_p."""
    arrow_shapes = [
        (a.name, dims[a.target], dims[a.source]) for a in base.arrows
    ]
    matrix_choices = []
    for name, rows, cols in arrow_shapes:
        cells = list(itertools.product(range(p), repeat=rows * cols))
        matrix_choices.append(
            [(name, [list(flat[r * cols : (r + 1) * cols]) for r in range(rows)]) for flat in cells]
        )
    for combo in itertools.product(*matrix_choices):
        yield QuiverRep(base=base, dims=dict(dims), maps=dict(combo))


def direct_sum(a: QuiverRep, b: QuiverRep) -> QuiverRep:
    if a.base != b.base:
        raise BaseQuiverMismatch("representations live over different base quivers")
    dims = {v: a.dims[v] + b.dims[v] for v in a.base.vertices}
    maps = {}
    for arrow in a.base.arrows:
        s, t = arrow.source, arrow.target
        rows = [[0] * dims[s] for _ in range(dims[t])]
        for i in range(a.dims[t]):
            for j in range(a.dims[s]):
                rows[i][j] = a.maps[arrow.name][i][j]
        for i in range(b.dims[t]):
            for j in range(b.dims[s]):
                rows[a.dims[t] + i][a.dims[s] + j] = b.maps[arrow.name][i][j]
        maps[arrow.name] = rows
    return QuiverRep(base=a.base, dims=dims, maps=maps)


# -- decomposability over a prime field -------------------------------------


def endomorphism_basis_mod_p(rep: QuiverRep, p: int) -> list[dict[str, list[list[int]]]]:
    rows, total = _intertwiner_system(rep, rep)
    vectors = nullspace_mod_p([[v % p for v in row] for row in rows], total, p)
    basis = []
    for vec in vectors:
        mats = {}
        pos = 0
        for v in rep.base.vertices:
            d = rep.dims[v]
            mats[v] = [[vec[pos + r * d + c] for c in range(d)] for r in range(d)]
            pos += d * d
        basis.append(mats)
    return basis


def decomposable_over_field(rep: QuiverRep, p: int = 2, endo_dim_cap: int = 16) -> bool:
    """True iff End(rep) over F_p contains an idempotent other than 0 and id."""
    basis = endomorphism_basis_mod_p(rep, p)
    if len(basis) > endo_dim_cap:
        raise CapExceeded(
            f"endomorphism space has dimension {len(basis)} > cap {endo_dim_cap}"
        )
    verts = rep.base.vertices
    identity = {
        v: [[1 if i == j else 0 for j in range(rep.dims[v])] for i in range(rep.dims[v])]
        for v in verts
    }
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        if not any(coeffs):
            continue
        cand = {
            v: [
                [
                    sum(c * mats[v][i][j] for c, mats in zip(coeffs, basis)) % p
                    for j in range(rep.dims[v])
                ]
                for i in range(rep.dims[v])
            ]
            for v in verts
        }
        if cand == identity:
            continue
        if all(
            mat_mul_mod_p(cand[v], cand[v], p) == cand[v] if rep.dims[v] else True
            for v in verts
        ):
            return True
    return False
