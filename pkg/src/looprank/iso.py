"""Isomorphism, canonical forms and induced-subgraph search for small self-loop graphs.

The canonical code of a graph on n vertices is the bit string

    loop(p0) loop(p1) ... loop(p[n-1])  adj(p0,p1) adj(p0,p2) ... adj(p[n-2],p[n-1])

(loop bits first, then the upper triangle in row-major order) minimised
lexicographically over every permutation p.  The search is plain brute force
over all n! permutations, vectorised with numpy.  For n <= 10 the code has at
most 55 bits, so it is handled as an unsigned 64-bit integer and
lexicographic order on bit strings coincides with integer order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable

import numpy as np

from .graph import SelfLoopGraph, adjacency_matrix, induced

MAX_CANON_ORDER = 10
MAX_SEARCH_ORDER = 12


@dataclass(frozen=True, order=True)
class CanonicalForm:
    order: int
    code: int

    @property
    def n_bits(self) -> int:
        return self.order + self.order * (self.order - 1) // 2

    def hex(self) -> str:
        width = max(1, (self.n_bits + 3) // 4)
        return format(self.code, f"0{width}x")

    def bits(self) -> str:
        return format(self.code, f"0{self.n_bits}b") if self.n_bits else ""

    def to_graph(self) -> SelfLoopGraph:
        """The representative graph whose labelling realises the minimal code."""
        n = self.order
        b = self.bits()
        loops = [i for i in range(n) if b[i] == "1"]
        edges = []
        k = n
        for i in range(n):
            for j in range(i + 1, n):
                if b[k] == "1":
                    edges.append((i, j))
                k += 1
        return SelfLoopGraph(n, edges, loops)

    @classmethod
    def from_hex(cls, order: int, text: str) -> CanonicalForm:
        return cls(order, int(text, 16))


@lru_cache(maxsize=None)
def _code_layout(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    rows = list(range(n)) + [i for i in range(n) for j in range(i + 1, n)]
    cols = list(range(n)) + [j for i in range(n) for j in range(i + 1, n)]
    weights = np.array([1 << (len(rows) - 1 - k) for k in range(len(rows))], dtype=np.uint64)
    return np.array(rows, dtype=np.intp), np.array(cols, dtype=np.intp), weights


@lru_cache(maxsize=4)
def _all_perms(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int8).reshape(-1, n)


def _perm_chunks(n: int) -> Iterable[np.ndarray]:
    if n <= 8:
        yield _all_perms(n)
        return
    # fix the first two positions, enumerate the rest from the cached table
    tail = _all_perms(n - 2)
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            rest = np.array([v for v in range(n) if v not in (a, b)], dtype=np.int8)
            block = np.empty((tail.shape[0], n), dtype=np.int8)
            block[:, 0] = a
            block[:, 1] = b
            block[:, 2:] = rest[tail]
            yield block


def _flat_index(perms: np.ndarray) -> np.ndarray:
    n = perms.shape[1]
    rows, cols, _ = _code_layout(n)
    return (perms[:, rows].astype(np.int32) * n + perms[:, cols]).astype(np.int32)


@lru_cache(maxsize=4)
def _all_flat(n: int) -> np.ndarray:
    return _flat_index(_all_perms(n))


def _codes(a: np.ndarray, perms: np.ndarray, flat: np.ndarray | None = None) -> np.ndarray:
    weights = _code_layout(a.shape[0])[2]
    if flat is None:
        flat = _flat_index(perms)
    bits = a.ravel()[flat].astype(np.uint64)
    return bits @ weights


def _code_chunks(a: np.ndarray) -> Iterable[tuple[np.ndarray, np.ndarray]]:
    """(perms, codes) blocks covering all permutations of a's index set."""
    n = a.shape[0]
    if n <= 8:
        yield _all_perms(n), _codes(a, None, _all_flat(n))
        return
    for chunk in _perm_chunks(n):
        yield chunk, _codes(a, chunk)


def _check_order(g: SelfLoopGraph, limit: int = MAX_CANON_ORDER) -> None:
    if g.order > limit:
        raise ValueError(f"brute-force search limited to order {limit}, got {g.order}")


def canonical_form(g: SelfLoopGraph) -> CanonicalForm:
    _check_order(g)
    if g.order == 0:
        return CanonicalForm(0, 0)
    a = np.array(adjacency_matrix(g), dtype=np.uint8)
    best = min(int(codes.min()) for _, codes in _code_chunks(a))
    return CanonicalForm(g.order, best)


def are_isomorphic(g: SelfLoopGraph, h: SelfLoopGraph) -> bool:
    if g.order != h.order or len(g.edges) != len(h.edges) or g.sigma != h.sigma:
        return False
    return canonical_form(g) == canonical_form(h)


def automorphisms(g: SelfLoopGraph) -> np.ndarray:
    """All loop- and edge-preserving permutations, one per row (p maps position i to vertex p[i])."""
    _check_order(g)
    if g.order == 0:
        return np.zeros((1, 0), dtype=np.int8)
    a = np.array(adjacency_matrix(g), dtype=np.uint8)
    target = int(_codes(a, np.arange(g.order, dtype=np.int8)[None, :])[0])
    found = [perms[codes == target] for perms, codes in _code_chunks(a)]
    return np.concatenate(found)


def automorphism_count(g: SelfLoopGraph) -> int:
    return int(automorphisms(g).shape[0])


def contains_induced(h: SelfLoopGraph, g: SelfLoopGraph) -> list[int] | None:
    """Find vertices u of g with induced(g, u) isomorphic to h, or None.

    Backtracking injection search: h's vertices are mapped one at a time and every
    loop and adjacency/non-adjacency with earlier vertices is checked on the spot.
    """
    if h.order > g.order:
        return None
    if g.order > MAX_SEARCH_ORDER:
        raise ValueError(f"induced search limited to order {MAX_SEARCH_ORDER}, got {g.order}")
    ha = adjacency_matrix(h)
    ga = adjacency_matrix(g)
    # map high-degree vertices of h first to fail early
    order = sorted(h.vertices, key=lambda v: -sum(ha[v]))
    image: dict[int, int] = {}
    used = [False] * g.order

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        hv = order[k]
        for gv in range(g.order):
            if used[gv] or ga[gv][gv] != ha[hv][hv]:
                continue
            if any(ga[gv][image[hw]] != ha[hv][hw] for hw in order[:k]):
                continue
            image[hv] = gv
            used[gv] = True
            if extend(k + 1):
                return True
            used[gv] = False
            del image[hv]
        return False

    if not extend(0):
        return None
    return sorted(image.values())


def verify_induced_witness(h: SelfLoopGraph, g: SelfLoopGraph, u: Iterable[int]) -> bool:
    sub = induced(g, u)
    return are_isomorphic(sub, h)
