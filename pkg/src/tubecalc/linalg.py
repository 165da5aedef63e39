"""Exact linear algebra on small dense matrices.

Matrices are lists of row lists with Python int entries.  Rank over Q is
computed by fraction-free (Bareiss) elimination, so everything stays in
exact integer arithmetic.  A separate mod-p elimination provides ranks
and nullspace bases over prime fields.
"""

from __future__ import annotations


def int_rank(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix, by Bareiss elimination."""
    m = [list(row) for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        pivot = next((k for k in range(row, nrows) if m[k][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        for k in range(row + 1, nrows):
            for j in range(col + 1, ncols):
                m[k][j] = (m[row][col] * m[k][j] - m[k][col] * m[row][j]) // prev
            m[k][col] = 0
        prev = m[row][col]
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def solution_space_dim(rows: list[list[int]], n_unknowns: int) -> int:
    """Dimension over Q of {x : A x = 0} for an integer matrix A."""
    return n_unknowns - int_rank(rows)


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    red, _ = _rref_mod_p(rows, p)
    return len(red)


def nullspace_mod_p(rows: list[list[int]], n_unknowns: int, p: int) -> list[list[int]]:
    """Basis of the kernel of A over F_p, as coordinate vectors."""
    if not rows:
        return [[1 if j == k else 0 for j in range(n_unknowns)] for k in range(n_unknowns)]
    red, pivots = _rref_mod_p(rows, p)
    free = [j for j in range(n_unknowns) if j not in pivots]
    basis = []
    for f in free:
        vec = [0] * n_unknowns
        vec[f] = 1
        for row, pc in zip(red, pivots):
            vec[pc] = (-row[f]) % p
        basis.append(vec)
    return basis


def _rref_mod_p(rows: list[list[int]], p: int):
    """Reduced row echelon form mod p; returns (nonzero rows, pivot columns)."""
    m = [[v % p for v in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        pivot = next((k for k in range(row, nrows) if m[k][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = pow(m[row][col], p - 2, p) if p > 2 else m[row][col]
        m[row] = [(v * inv) % p for v in m[row]]
        for k in range(nrows):
            if k != row and m[k][col]:
                c = m[k][col]
                m[k] = [(a - c * b) % p for a, b in zip(m[k], m[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    return m[:row], pivots


def mat_mul_mod_p(a: list[list[int]], b: list[list[int]], p: int) -> list[list[int]]:
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) % p for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]
