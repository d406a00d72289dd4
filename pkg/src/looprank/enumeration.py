"""Exhaustive generation of small graphs up to isomorphism.

Simple graphs of order n are produced by adding one vertex, with every possible
neighbourhood, to each graph of order n-1 and keeping one representative per
canonical form.  Every graph arises this way (delete any vertex), so the list is
complete.  Triangle-freeness is hereditary, so the triangle-free list is grown
from triangle-free graphs only, using independent neighbourhoods.

Loop sets are then attached to each simple graph, one per orbit of the
graph's automorphism group on vertex subsets.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np

from .graph import SelfLoopGraph, is_connected
from .iso import automorphisms, canonical_form


def _extend(g: SelfLoopGraph, nbrs) -> SelfLoopGraph:
    v = g.order
    return SelfLoopGraph(v + 1, list(g.edges) + [(u, v) for u in nbrs])


def _independent(g: SelfLoopGraph, vs) -> bool:
    return not any(g.has_edge(a, b) for a, b in combinations(vs, 2))


@lru_cache(maxsize=None)
def simple_graphs(n: int, triangle_free: bool = False) -> tuple[SelfLoopGraph, ...]:
    """One canonical representative of every loopless graph of order n, sorted by code."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n == 1:
        return (SelfLoopGraph(1),)
    seen: dict = {}
    for g in simple_graphs(n - 1, triangle_free):
        # neighbourhoods in the same Aut(g)-orbit give isomorphic extensions
        for mask in loop_orbit_representatives(g):
            nbrs = mask_to_set(mask)
            if triangle_free and not _independent(g, nbrs):
                continue
            cf = canonical_form(_extend(g, nbrs))
            if cf not in seen:
                seen[cf] = cf.to_graph()
    return tuple(seen[cf] for cf in sorted(seen))


def connected_graphs(n: int, triangle_free: bool = False) -> tuple[SelfLoopGraph, ...]:
    return tuple(g for g in simple_graphs(n, triangle_free) if is_connected(g))


def loop_orbit_representatives(g: SelfLoopGraph) -> list[int]:
    """Loop-set bitmasks (bit v = vertex v) with one mask per Aut(g)-orbit, the smallest one."""
    n = g.order
    masks = np.arange(1 << n, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n)) & 1
    best = masks.copy()
    for p in automorphisms(g):
        image = bits @ (np.int64(1) << p.astype(np.int64))
        np.minimum(best, image, out=best)
    return [int(m) for m in masks[best == masks]]


def mask_to_set(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def self_loop_graphs(n: int, connected: bool = True, triangle_free: bool = False):
    """Yield one representative of every self-loop graph of order n (optionally filtered)."""
    base = connected_graphs(n, triangle_free) if connected else simple_graphs(n, triangle_free)
    for g in base:
        for mask in loop_orbit_representatives(g):
            yield SelfLoopGraph(n, g.edges, mask_to_set(mask))


# counts of connected simple graphs on 1..8 vertices
CONNECTED_GRAPH_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
