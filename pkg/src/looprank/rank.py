"""Exact rank of integer matrices.

Everything here works on Python ints, which are arbitrary precision, so no
intermediate value can overflow and no floating point is ever involved.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .graph import SelfLoopGraph, adjacency_matrix

IntMatrix = list[list[int]]

MAX_ORACLE_DIM = 8


def _as_rows(m: Sequence[Sequence[int]]) -> IntMatrix:
    rows = [[int(x) for x in row] for row in m]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix must be square")
    return rows


def is_graph_matrix(m: Sequence[Sequence[int]]) -> bool:
    """Symmetric with every entry in {0, 1}."""
    n = len(m)
    return all(
        len(m[i]) == n and m[i][j] in (0, 1) and m[i][j] == m[j][i]
        for i in range(n)
        for j in range(n)
    )


def rank(m: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    Pivot is the first nonzero entry at or below the current row, scanning
    columns left to right.  Every division is exact.
    """
    a = _as_rows(m)
    n_rows = len(a)
    if n_rows == 0:
        return 0
    n_cols = len(a[0])
    r = 0
    prev = 1
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if a[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        row_r = a[r]
        for i in range(r + 1, n_rows):
            row_i = a[i]
            f = row_i[c]
            for j in range(c + 1, n_cols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == n_rows:
            break
    return r


def rank_graph(g: SelfLoopGraph) -> int:
    return rank(adjacency_matrix(g))


def det(m: Sequence[Sequence[int]]) -> int:
    """Determinant by cofactor expansion along the first row."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j, x in enumerate(m[0]):
        if x == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-x if j % 2 else x) * det(minor)
    return total


def minor_rank_oracle(m: Sequence[Sequence[int]]) -> int:
    """Largest k with a nonzero k x k minor, by exhaustive search.

    Independent of :func:`rank`; exists only to cross-check it.
    """
    a = _as_rows(m)
    n = len(a)
    if n > MAX_ORACLE_DIM:
        raise ValueError(f"minor oracle limited to dimension {MAX_ORACLE_DIM}, got {n}")
    for k in range(n, 0, -1):
        for rows in combinations(range(n), k):
            sub_rows = [a[i] for i in rows]
            for cols in combinations(range(n), k):
                if det([[row[j] for j in cols] for row in sub_rows]) != 0:
                    return k
    return 0
