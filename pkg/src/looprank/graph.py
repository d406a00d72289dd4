"""Self-loop graphs: simple undirected graphs with a distinguished set of looped vertices."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


class DisconnectedError(ValueError):
    """Raised when a distance is requested between vertices in different components."""


def _norm_edge(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class SelfLoopGraph:
    """A graph G_S on vertices 0..order-1.

    ``edges`` holds the simple edges as sorted pairs (i < j); ``loops`` holds the
    looped vertices.  Both are frozensets, so instances are hashable and immutable.
    """

    order: int
    edges: frozenset[tuple[int, int]]
    loops: frozenset[int]

    def __init__(self, order: int, edges: Iterable[Sequence[int]] = (), loops: Iterable[int] = ()):
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        norm = set()
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise ValueError(f"edge {{{i},{i}}} is a loop; put it in the loop set")
            if not (0 <= i < order and 0 <= j < order):
                raise ValueError(f"edge {{{i},{j}}} out of range for order {order}")
            norm.add(_norm_edge(i, j))
        lp = set()
        for v in loops:
            v = int(v)
            if not 0 <= v < order:
                raise ValueError(f"loop vertex {v} out of range for order {order}")
            lp.add(v)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "loops", frozenset(lp))

    @property
    def sigma(self) -> int:
        return len(self.loops)

    @property
    def vertices(self) -> range:
        return range(self.order)

    def neighbors(self, v: int) -> set[int]:
        return {j if i == v else i for i, j in self.edges if v in (i, j)}

    def adjacency_sets(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.order)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def has_edge(self, i: int, j: int) -> bool:
        return _norm_edge(i, j) in self.edges

    def degree(self, v: int) -> int:
        """Degree in the underlying simple graph (loops not counted)."""
        return sum(1 for e in self.edges if v in e)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def sorted_loops(self) -> list[int]:
        return sorted(self.loops)

    def permute(self, perm: Sequence[int]) -> SelfLoopGraph:
        """Relabel vertex v as perm[v]."""
        if sorted(perm) != list(range(self.order)):
            raise ValueError("perm must be a permutation of the vertex range")
        return SelfLoopGraph(
            self.order,
            ((perm[i], perm[j]) for i, j in self.edges),
            (perm[v] for v in self.loops),
        )

    def add_edge(self, i: int, j: int) -> SelfLoopGraph:
        return SelfLoopGraph(self.order, set(self.edges) | {_norm_edge(i, j)}, self.loops)

    # -- interchange formats -------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "edges": [list(e) for e in self.sorted_edges()],
            "loops": self.sorted_loops(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> SelfLoopGraph:
        if not isinstance(data, dict):
            raise ValueError("graph JSON must be an object")
        for key in ("order", "edges", "loops"):
            if key not in data:
                raise ValueError(f"graph JSON missing field {key!r}")
        order = data["order"]
        if not isinstance(order, int) or isinstance(order, bool) or order < 1:
            raise ValueError(f"field 'order' must be a positive integer, got {order!r}")
        edges = data["edges"]
        if not isinstance(edges, list):
            raise ValueError("field 'edges' must be a list of [i, j] pairs")
        for e in edges:
            if not (isinstance(e, list) and len(e) == 2 and all(_is_int(x) for x in e)):
                raise ValueError(f"field 'edges' has malformed entry {e!r}")
        loops = data["loops"]
        if not isinstance(loops, list) or not all(_is_int(x) for x in loops):
            raise ValueError("field 'loops' must be a list of vertex indices")
        try:
            return cls(order, edges, loops)
        except ValueError as exc:
            raise ValueError(f"invalid graph: {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> SelfLoopGraph:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed JSON: {exc}") from None
        return cls.from_dict(data)

    def to_dot(self, name: str | None = None) -> str:
        lines = ["graph G {"]
        if name:
            lines.append(f'  name="{name}";')
            lines.append(f'  label="{name}";')
        for v in self.vertices:
            lines.append(f"  {v};")
        for v in self.sorted_loops():
            lines.append(f"  {v} -- {v};")
        for i, j in self.sorted_edges():
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"SelfLoopGraph(order={self.order}, edges={self.sorted_edges()}, loops={self.sorted_loops()})"


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class ClusterDecomposition:
    """Maximal cyclic runs of looped vertices on a cycle.

    ``clusters[k]`` is ``(start, length)``; ``gaps[k]`` is the forward distance along
    the cycle from the last vertex of cluster k to the first vertex of cluster k+1
    (wrapping), so every gap is at least 2.  A full-cycle run has one cluster and
    no gaps.
    """

    order: int
    clusters: tuple[tuple[int, int], ...]
    gaps: tuple[int, ...]

    def counts(self) -> dict[int, int]:
        """Number of clusters of each length (the a_i values)."""
        out: dict[int, int] = {}
        for _, length in self.clusters:
            out[length] = out.get(length, 0) + 1
        return out

    @property
    def sigma(self) -> int:
        return sum(length for _, length in self.clusters)

    @property
    def loopless_runs(self) -> tuple[int, ...]:
        """Number of loopless vertices strictly between consecutive clusters."""
        return tuple(g - 1 for g in self.gaps)


# -- constructors ---------------------------------------------------------------


def cycle(n: int) -> SelfLoopGraph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return SelfLoopGraph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> SelfLoopGraph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return SelfLoopGraph(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> SelfLoopGraph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return SelfLoopGraph(n, combinations(range(n), 2))


def empty(n: int) -> SelfLoopGraph:
    """n isolated loopless vertices (nK_1)."""
    if n < 1:
        raise ValueError(f"empty graph needs n >= 1, got {n}")
    return SelfLoopGraph(n)


def with_loops(g: SelfLoopGraph, s: Iterable[int]) -> SelfLoopGraph:
    """Attach a loop at every vertex of ``s`` (union with existing loops)."""
    return SelfLoopGraph(g.order, g.edges, set(g.loops) | set(s))


def full_loops(g: SelfLoopGraph) -> SelfLoopGraph:
    return with_loops(g, g.vertices)


def adjacency_matrix(g: SelfLoopGraph) -> list[list[int]]:
    a = [[0] * g.order for _ in range(g.order)]
    for i, j in g.edges:
        a[i][j] = a[j][i] = 1
    for v in g.loops:
        a[v][v] = 1
    return a


def from_adjacency(a: Sequence[Sequence[int]]) -> SelfLoopGraph:
    n = len(a)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if a[i][j]]
    return SelfLoopGraph(n, edges, [i for i in range(n) if a[i][i]])


def _check_subset(g: SelfLoopGraph, vs: Iterable[int]) -> list[int]:
    vs = sorted(set(vs))
    for v in vs:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} out of range for order {g.order}")
    return vs


def join_over(g1: SelfLoopGraph, a: Iterable[int], g2: SelfLoopGraph) -> SelfLoopGraph:
    """Disjoint union of g1 and g2 plus every edge between ``a`` and V(g2).

    g2's vertices are relabelled to n1..n1+n2-1.
    """
    a = _check_subset(g1, a)
    off = g1.order
    edges = set(g1.edges)
    edges.update((i + off, j + off) for i, j in g2.edges)
    edges.update((u, off + w) for u in a for w in g2.vertices)
    loops = set(g1.loops) | {v + off for v in g2.loops}
    return SelfLoopGraph(off + g2.order, edges, loops)


def join(g1: SelfLoopGraph, g2: SelfLoopGraph) -> SelfLoopGraph:
    """Ordinary join g1 ∨ g2."""
    return join_over(g1, g1.vertices, g2)


def induced(g: SelfLoopGraph, u: Iterable[int]) -> SelfLoopGraph:
    """Induced subgraph on ``u``; vertices are relabelled by ascending order of ``u``."""
    u = _check_subset(g, u)
    if not u:
        raise ValueError("induced subgraph needs a non-empty vertex set")
    idx = {v: k for k, v in enumerate(u)}
    edges = [(idx[i], idx[j]) for i, j in g.edges if i in idx and j in idx]
    return SelfLoopGraph(len(u), edges, (idx[v] for v in g.loops if v in idx))


# -- predicates -------------------------------------------------------------------


def is_connected(g: SelfLoopGraph) -> bool:
    if g.order == 0:
        return True
    adj = g.adjacency_sets()
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.order


def is_triangle_free(g: SelfLoopGraph) -> bool:
    adj = g.adjacency_sets()
    return not any(adj[i] & adj[j] for i, j in g.edges)


def contains_cycle(g: SelfLoopGraph) -> bool:
    """True iff the underlying simple graph is not a forest (loops ignored)."""
    adj = g.adjacency_sets()
    seen: set[int] = set()
    components = 0
    for s in g.vertices:
        if s in seen:
            continue
        components += 1
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return len(g.edges) > g.order - components


def is_cyclic(g: SelfLoopGraph) -> bool:
    """Connected and not a tree."""
    return is_connected(g) and contains_cycle(g)


def _bfs(g: SelfLoopGraph, sources: Iterable[int]) -> dict[int, int]:
    adj = g.adjacency_sets()
    dist = {s: 0 for s in sources}
    queue = deque(dist)
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def dist(g: SelfLoopGraph, u: int, v: int) -> int:
    return set_dist(g, [u], [v])


def set_dist(g: SelfLoopGraph, u: Iterable[int], v: Iterable[int]) -> int:
    u = _check_subset(g, u)
    v = _check_subset(g, v)
    if not u or not v:
        raise ValueError("distance needs non-empty vertex sets")
    d = _bfs(g, u)
    reachable = [d[x] for x in v if x in d]
    if not reachable:
        raise DisconnectedError(f"no path between {u} and {v}")
    return min(reachable)


def is_cycle_graph(g: SelfLoopGraph) -> bool:
    """Underlying simple graph is C_n with the consecutive labelling 0-1-...-(n-1)-0."""
    return g.order >= 3 and g.edges == cycle(g.order).edges


def cluster_decomposition(g: SelfLoopGraph) -> ClusterDecomposition:
    """Split the loop set of a cycle (labelled 0..n-1 in cyclic order) into maximal runs."""
    if not is_cycle_graph(g):
        raise ValueError("cluster decomposition needs a cycle host labelled in cyclic order")
    if not g.loops:
        raise ValueError("cluster decomposition needs a non-empty loop set")
    n = g.order
    looped = [v in g.loops for v in range(n)]
    if all(looped):
        return ClusterDecomposition(n, ((0, n),), ())
    # start scanning right after an unlooped vertex so no run wraps past the start
    first_gap = looped.index(False)
    clusters: list[tuple[int, int]] = []
    run_start = None
    for k in range(1, n + 1):
        v = (first_gap + k) % n
        if looped[v]:
            if run_start is None:
                run_start = v
        elif run_start is not None:
            clusters.append((run_start, (v - run_start) % n))
            run_start = None
    clusters.sort()
    gaps = []
    for k, (start, length) in enumerate(clusters):
        nxt_start = clusters[(k + 1) % len(clusters)][0]
        last = (start + length - 1) % n
        gap = (nxt_start - last) % n
        gaps.append(gap if gap else n)
    return ClusterDecomposition(n, tuple(clusters), tuple(gaps))
