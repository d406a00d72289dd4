"""Named graphs and parameterised rank-3 families built on a looped 4-cycle.

Every family starts from the 4-cycle 0-1-2-3-0.  Vertex labels are assigned in
a fixed order: the 4-cycle core, then the looped pendant vertex (when present),
then the |W| joined vertices.

The pendant graphs are

* ``FS``:  core loops {0}, looped pendant vertex 4 attached to the looped vertex 0;
* ``FSP``: core loops {0}, looped pendant vertex 4 attached to the opposite vertex 2.

Both have rank 3 and they are not isomorphic.  ``check_pendant_assignment``
recomputes which of the possible (pendant anchor, join set) combinations stay at
rank 3, which is what pins the construction of H3, H4 and H5 below.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .graph import (
    SelfLoopGraph,
    complete,
    cycle,
    empty,
    full_loops,
    join,
    join_over,
    path,
    with_loops,
)
from .iso import CanonicalForm, are_isomorphic, canonical_form
from .rank import rank_graph

V_I = (1, 3)  # loopless independent pair of the core
V_REST = (0, 2)  # complement of V_I in the core


class FamilyId(str, Enum):
    H1 = "H1"
    H2 = "H2"
    H2P = "H2p"
    H3 = "H3"
    H4 = "H4"
    H5 = "H5"
    H3P = "H3p"
    H4P = "H4p"
    H5P = "H5p"
    RANK1 = "rank1"
    RANK2 = "rank2"

    @classmethod
    def parse(cls, name: str) -> FamilyId:
        for f in cls:
            if f.value.lower() == name.lower() or f.name.lower() == name.lower():
                return f
        valid = " ".join(f.value for f in cls)
        raise ValueError(f"unknown family {name!r}; valid names: {valid}")


RANK3_FAMILIES = (FamilyId.H1, FamilyId.H2, FamilyId.H2P, FamilyId.H3, FamilyId.H4, FamilyId.H5)
PRIMED_FAMILIES = (FamilyId.H3P, FamilyId.H4P, FamilyId.H5P)

# (core loops, pendant anchor or None, join set) for every W-parameterised family
_RECIPES: dict[FamilyId, tuple[tuple[int, ...], int | None, tuple[int, ...]]] = {
    FamilyId.H1: ((0,), None, V_I),
    FamilyId.H2: ((0,), None, V_REST),
    FamilyId.H2P: ((0, 2), None, V_REST),
    FamilyId.H3: ((0,), 0, V_I),
    FamilyId.H4: ((0,), 0, V_REST),
    FamilyId.H5: ((0,), 2, V_REST),
    FamilyId.H3P: ((0, 2), 0, V_I),
    FamilyId.H4P: ((0, 2), 0, V_REST),
    FamilyId.H5P: ((0, 2), 2, V_REST),
}


@dataclass(frozen=True)
class FamilyInstance:
    id: FamilyId
    w: int = 0
    n: int | None = None
    sigma: int | None = None

    def __post_init__(self):
        if self.id is FamilyId.RANK1:
            if self.n is None or self.n < 1:
                raise ValueError("rank1 needs n >= 1")
        elif self.id is FamilyId.RANK2:
            if self.n is None or self.sigma is None or not 1 <= self.sigma <= self.n - 1:
                raise ValueError("rank2 needs 1 <= sigma <= n - 1")
        elif self.w < 0:
            raise ValueError(f"w must be non-negative, got {self.w}")

    @property
    def order(self) -> int:
        if self.id in (FamilyId.RANK1, FamilyId.RANK2):
            return self.n
        return base_order(self.id) + self.w

    def label(self) -> str:
        if self.id is FamilyId.RANK1:
            return f"rank1(n={self.n})"
        if self.id is FamilyId.RANK2:
            return f"rank2(n={self.n},sigma={self.sigma})"
        return f"{self.id.value}(w={self.w})"

    def to_dict(self) -> dict:
        d = {"family": self.id.value}
        if self.id in (FamilyId.RANK1, FamilyId.RANK2):
            d["n"] = self.n
            if self.sigma is not None:
                d["sigma"] = self.sigma
        else:
            d["w"] = self.w
        return d


def base_order(fid: FamilyId) -> int:
    return 4 if _RECIPES[fid][1] is None else 5


def pendant_core(core_loops=(0,), anchor: int | None = 0) -> SelfLoopGraph:
    g = with_loops(cycle(4), core_loops)
    if anchor is None:
        return g
    return join_over(g, [anchor], full_loops(complete(1)))


def _assemble(core_loops, anchor, join_set, w: int) -> SelfLoopGraph:
    g = pendant_core(core_loops, anchor)
    for _ in range(w):
        g = join_over(g, join_set, empty(1))
    return g


def build_family(inst: FamilyInstance) -> SelfLoopGraph:
    if inst.id is FamilyId.RANK1:
        return full_loops(complete(inst.n))
    if inst.id is FamilyId.RANK2:
        return join(full_loops(complete(inst.sigma)), empty(inst.n - inst.sigma))
    return _assemble(*_RECIPES[inst.id], inst.w)


def family(name: str | FamilyId, w: int = 0, n: int | None = None, sigma: int | None = None) -> SelfLoopGraph:
    fid = name if isinstance(name, FamilyId) else FamilyId.parse(name)
    return build_family(FamilyInstance(fid, w, n, sigma))


class NamedGraphId(str, Enum):
    P4_1 = "P4_1"
    P4_2 = "P4_2"
    P4_13 = "P4_13"
    P4_124 = "P4_124"
    P4_HAT = "P4_HAT"
    P5_14 = "P5_14"
    P5_145 = "P5_145"
    FS = "FS"
    FSP = "FSP"
    FIG23 = "FIG23"
    FIG24 = "FIG24"

    @classmethod
    def parse(cls, name: str) -> NamedGraphId:
        for g in cls:
            if g.value.lower() == name.lower():
                return g
        valid = " ".join(g.value for g in cls)
        raise ValueError(f"unknown named graph {name!r}; valid names: {valid}")


def _subscripted_path(n: int, subscript: str) -> SelfLoopGraph:
    # subscripts are 1-based positions along the path
    return with_loops(path(n), [int(ch) - 1 for ch in subscript])


def build_named(gid: NamedGraphId | str) -> SelfLoopGraph:
    gid = gid if isinstance(gid, NamedGraphId) else NamedGraphId.parse(gid)
    if gid is NamedGraphId.P4_HAT:
        return full_loops(path(4))
    if gid is NamedGraphId.FS:
        return pendant_core((0,), 0)
    if gid is NamedGraphId.FSP:
        return pendant_core((0,), 2)
    if gid is NamedGraphId.FIG23:
        return with_loops(family(FamilyId.H1, 1), [4])
    if gid is NamedGraphId.FIG24:
        return with_loops(family(FamilyId.H2, 1), [4])
    n, subscript = gid.value[1], gid.value.split("_")[1]
    return _subscripted_path(int(n), subscript)


# rank >= 4 graphs used as induced witnesses on looped cycles, smallest first
WITNESS_CATALOG = (
    NamedGraphId.P4_1,
    NamedGraphId.P4_HAT,
    NamedGraphId.P4_124,
    NamedGraphId.P4_13,
    NamedGraphId.P5_145,
    NamedGraphId.P5_14,
)


def check_pendant_assignment() -> dict:
    """Rank of every (pendant anchor, join set) combination on the looped 4-cycle.

    Returns the table together with whether the chosen FS/FSP and H3/H4/H5
    recipes are exactly the combinations that stay at rank 3 for w = 1..3.
    """
    table = {}
    for anchor in (0, 1, 2):
        base = pendant_core((0,), anchor)
        table[(anchor, None)] = rank_graph(base)
        for js in (V_I, V_REST):
            table[(anchor, js)] = max(rank_graph(_assemble((0,), anchor, js, w)) for w in (1, 2, 3))
    rank3 = {key for key, r in table.items() if key[1] is not None and r == 3}
    chosen = {(_RECIPES[f][1], _RECIPES[f][2]) for f in (FamilyId.H3, FamilyId.H4, FamilyId.H5)}
    fs, fsp = build_named(NamedGraphId.FS), build_named(NamedGraphId.FSP)
    ok = (
        table[(0, None)] == 3
        and table[(2, None)] == 3
        and not are_isomorphic(fs, fsp)
        and rank3 == chosen
    )
    return {"table": table, "rank3": rank3, "ok": ok}


@lru_cache(maxsize=None)
def family_forms(order: int) -> dict[CanonicalForm, tuple[FamilyInstance, ...]]:
    """Canonical forms of the six rank-3 families at a given order."""
    out: dict[CanonicalForm, list[FamilyInstance]] = {}
    for fid in RANK3_FAMILIES:
        w = order - base_order(fid)
        if w < 0:
            continue
        inst = FamilyInstance(fid, w)
        out.setdefault(canonical_form(build_family(inst)), []).append(inst)
    return {k: tuple(v) for k, v in out.items()}


def match_all(g: SelfLoopGraph) -> tuple[FamilyInstance, ...]:
    """Every six-family instance isomorphic to g."""
    if g.order < 4:
        return ()
    return family_forms(g.order).get(canonical_form(g), ())


def match_family(g: SelfLoopGraph) -> FamilyInstance | None:
    """First matching instance in the order H1, H2, H2p, H3, H4, H5 (w is forced by the order)."""
    found = match_all(g)
    return found[0] if found else None
