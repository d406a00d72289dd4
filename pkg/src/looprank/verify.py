"""Exhaustive checks of the rank claims about looped cycles and the rank-3 families.

Each ``verify_*`` function returns a :class:`VerificationReport`; its JSON form is
the certificate written by ``looprank verify``.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .enumeration import (
    connected_graphs,
    loop_orbit_representatives,
    mask_to_set,
)
from .families import (
    RANK3_FAMILIES,
    WITNESS_CATALOG,
    FamilyId,
    FamilyInstance,
    build_family,
    build_named,
    family,
    family_forms,
    match_all,
)
from .graph import (
    SelfLoopGraph,
    adjacency_matrix,
    cluster_decomposition,
    contains_cycle,
    cycle,
    induced,
    is_connected,
    is_triangle_free,
    with_loops,
)
from .iso import are_isomorphic, canonical_form, contains_induced
from .rank import rank, rank_graph

MAX_CYCLE_ORDER = 12
MAX_RANK12_ORDER = 7
CLASSIFY_ORDERS = range(4, 9)
LONG_RUN_ORDER = 8


@dataclass
class VerificationReport:
    claim: str
    range: str
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    elapsed_ms: int = 0

    @property
    def status(self) -> str:
        return "verified" if not self.violations and self.checked > 0 else "refuted"

    @property
    def ok(self) -> bool:
        return self.status == "verified"

    def to_dict(self, with_time: bool = True) -> dict:
        d = {
            "claim": self.claim,
            "range": self.range,
            "checked": self.checked,
            "violations": self.violations,
            "witnesses": self.witnesses,
            "status": self.status,
            "details": self.details,
        }
        if with_time:
            d["elapsed_ms"] = self.elapsed_ms
        return d

    def to_json(self, with_time: bool = True) -> str:
        return json.dumps(self.to_dict(with_time), indent=2)


class _Timer:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed_ms = int((time.perf_counter() - self.t0) * 1000)
        return False


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("LOOPRANK_JOBS", "1")))
    except ValueError:
        return 1


def _subset_key(n: int, s) -> str:
    return f"C{n}:{{{','.join(map(str, sorted(s)))}}}"


def _nonempty_subsets(n: int):
    for mask in range(1, 1 << n):
        yield mask_to_set(mask)


def _violation(g: SelfLoopGraph, **info) -> dict:
    d = g.to_dict()
    d.update(info)
    return d


def is_consecutive(g: SelfLoopGraph) -> bool:
    """Loop set of a labelled cycle forms a single run."""
    return len(cluster_decomposition(g).clusters) == 1


# -- looped cycles ------------------------------------------------------------------


def verify_cycle_rank_bound(n_min: int = 5, n_max: int = 9) -> VerificationReport:
    if not 5 <= n_min <= n_max <= MAX_CYCLE_ORDER:
        raise ValueError(f"need 5 <= n_min <= n_max <= {MAX_CYCLE_ORDER}, got {n_min}..{n_max}")
    report = VerificationReport("rank((C_n)_S) >= 4 for every nonempty S", f"n={n_min}..{n_max}")
    with _Timer(report):
        min_rank = {}
        consecutive = {}
        for n in range(n_min, n_max + 1):
            c = cycle(n)
            lowest = None
            for s in _nonempty_subsets(n):
                g = with_loops(c, s)
                r = rank_graph(g)
                report.checked += 1
                lowest = r if lowest is None else min(lowest, r)
                if r < 4:
                    report.violations.append(_violation(g, rank=r))
            min_rank[str(n)] = lowest
            consecutive[str(n)] = [rank_graph(with_loops(c, range(k))) for k in range(1, n + 1)]
        report.details = {"min_rank": min_rank, "consecutive_ranks": consecutive}
    return report


def c4_rank_table() -> dict[tuple[int, ...], int]:
    c = cycle(4)
    return {tuple(s): rank_graph(with_loops(c, s)) for s in [[]] + list(_nonempty_subsets(4))}


def verify_c4_table() -> VerificationReport:
    report = VerificationReport(
        "rank((C_4)_S) = 3 iff |S| = 1 or S is an independent pair; otherwise 4 for S nonempty",
        "all 16 subsets of V(C_4)",
    )
    with _Timer(report):
        c = cycle(4)
        table = c4_rank_table()
        for s, r in table.items():
            if not s:
                continue
            report.checked += 1
            independent_pair = len(s) == 2 and not c.has_edge(*s)
            expected = 3 if len(s) == 1 or independent_pair else 4
            if r != expected:
                report.violations.append(_violation(with_loops(c, s), rank=r, expected=expected))
        report.details = {
            "ranks": {_subset_key(4, s): r for s, r in table.items()},
            "empty_loop_rank": table[()],
        }
    return report


def find_catalog_witness(g: SelfLoopGraph) -> tuple[str, list[int]] | None:
    """Smallest catalog graph (catalog order breaks ties) occurring as an induced subgraph of g."""
    for gid in WITNESS_CATALOG:
        u = contains_induced(build_named(gid), g)
        if u is not None:
            return gid.value, u
    return None


def verify_witnesses(n_max: int = 9, n_min: int = 5) -> VerificationReport:
    if not 5 <= n_min <= n_max <= MAX_CYCLE_ORDER:
        raise ValueError(f"need 5 <= n_min <= n_max <= {MAX_CYCLE_ORDER}, got {n_min}..{n_max}")
    report = VerificationReport(
        "every (C_n)_S contains a rank >= 4 catalog graph as an induced subgraph, "
        "except consecutive loops on C_5 which have rank >= 4 directly",
        f"n={n_min}..{n_max}",
    )
    catalog_rank = {gid.value: rank_graph(build_named(gid)) for gid in WITNESS_CATALOG}
    with _Timer(report):
        usage: dict[str, int] = {gid.value: 0 for gid in WITNESS_CATALOG}
        direct = []
        for n in range(n_min, n_max + 1):
            c = cycle(n)
            for s in _nonempty_subsets(n):
                g = with_loops(c, s)
                report.checked += 1
                key = _subset_key(n, s)
                found = find_catalog_witness(g)
                if found is not None:
                    name, u = found
                    if catalog_rank[name] < 4 or not are_isomorphic(induced(g, u), build_named(name)):
                        report.violations.append(_violation(g, witness=name, vertices=u))
                    usage[name] += 1
                    report.witnesses[key] = {"graph": name, "vertices": u}
                    continue
                r = rank_graph(g)
                if n == 5 and is_consecutive(g) and r >= 4:
                    direct.append(key)
                    report.witnesses[key] = {"graph": None, "direct_rank": r}
                else:
                    report.violations.append(_violation(g, rank=r, witness=None))
        report.details = {"catalog_rank": catalog_rank, "witness_usage": usage, "direct": direct}
    return report


# -- classification -------------------------------------------------------------------


def has_four_cycle(g: SelfLoopGraph) -> bool:
    adj = g.adjacency_sets()
    return any(len(adj[a] & adj[b]) >= 2 for a, b in combinations(g.vertices, 2))


@dataclass(frozen=True)
class Survivor:
    form: str
    graph: SelfLoopGraph
    sigma: int
    triangle_free: bool
    cyclic: bool
    matches: tuple[FamilyInstance, ...]

    def to_dict(self) -> dict:
        return {
            "form": self.form,
            "graph": self.graph.to_dict(),
            "sigma": self.sigma,
            "triangle_free": self.triangle_free,
            "cyclic": self.cyclic,
            "families": [m.label() for m in self.matches],
        }


def _scan_chunk(order: int, edge_lists: list, target_rank: int) -> tuple[int, list]:
    """Rank every loop orbit of each simple graph; return (instances, rank-hits as (code, edges, mask))."""
    checked = 0
    hits = []
    for edges in edge_lists:
        g = SelfLoopGraph(order, edges)
        a = adjacency_matrix(g)
        for mask in loop_orbit_representatives(g):
            for v in range(order):
                a[v][v] = mask >> v & 1
            checked += 1
            if rank(a) == target_rank:
                hits.append((edges, mask))
    return checked, hits


def _run_chunks(order: int, graphs, target_rank: int, jobs: int) -> tuple[int, list]:
    edge_lists = [sorted(g.edges) for g in graphs]
    if jobs <= 1 or len(edge_lists) < 2:
        return _scan_chunk(order, edge_lists, target_rank)
    n_chunks = min(len(edge_lists), jobs * 4)
    chunks = [edge_lists[k::n_chunks] for k in range(n_chunks)]
    checked = 0
    hits = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for c, h in pool.map(_scan_chunk, [order] * n_chunks, chunks, [target_rank] * n_chunks):
            checked += c
            hits.extend(h)
    return checked, hits


def classify_rank3(
    order: int,
    require_triangle_free: bool = True,
    require_cyclic: bool = True,
    jobs: int = 1,
    long_run: bool = False,
) -> tuple[VerificationReport, list[Survivor]]:
    if order not in CLASSIFY_ORDERS:
        raise ValueError(f"classification supports orders {CLASSIFY_ORDERS.start}..{CLASSIFY_ORDERS.stop - 1}")
    if order >= LONG_RUN_ORDER and not long_run:
        raise ValueError(f"order {order} needs the long-run flag")
    filters = ["connected"]
    if require_triangle_free:
        filters.append("triangle-free")
    if require_cyclic:
        filters.append("cyclic")
    report = VerificationReport(
        "every connected triangle-free cyclic self-loop graph of rank 3 has a loop and is "
        "isomorphic to H1, H2, H2', H3, H4 or H5",
        f"order={order}; filters: {', '.join(filters)}",
    )
    with _Timer(report):
        base = connected_graphs(order, triangle_free=require_triangle_free)
        if require_cyclic:
            base = tuple(g for g in base if contains_cycle(g))
        checked, hits = _run_chunks(order, base, 3, jobs)
        report.checked = checked

        by_form: dict[str, Survivor] = {}
        for edges, mask in hits:
            g = SelfLoopGraph(order, edges, mask_to_set(mask))
            cf = canonical_form(g)
            if cf.hex() in by_form:
                report.violations.append(_violation(g, reason="duplicate loop orbit"))
                continue
            by_form[cf.hex()] = Survivor(
                cf.hex(), cf.to_graph(), g.sigma, is_triangle_free(g), contains_cycle(g),
                match_all(g),
            )
        survivors = [by_form[k] for k in sorted(by_form)]

        stratum = [s for s in survivors if s.triangle_free and s.cyclic]
        for s in stratum:
            if s.sigma == 0:
                report.violations.append(_violation(s.graph, reason="loopless rank-3 survivor"))
            elif not s.matches:
                report.violations.append(_violation(s.graph, reason="matches no family"))
            elif len({canonical_form(build_family(m)) for m in s.matches}) != 1:
                report.violations.append(_violation(s.graph, reason="ambiguous family match"))

        family_codes = {cf.hex(): [m.label() for m in insts] for cf, insts in family_forms(order).items()}
        missing = sorted(set(family_codes) - {s.form for s in stratum})
        for code in missing:
            report.violations.append({"form": code, "reason": "family graph not found by enumeration",
                                      "families": family_codes[code]})

        report.witnesses = {s.form: s.to_dict() for s in stratum}
        report.details = {
            "simple_graphs": len(base),
            "survivors": len(survivors),
            "stratum_survivors": len(stratum),
            "loopless_stratum_survivors": sum(1 for s in stratum if s.sigma == 0),
            "triangle_survivors": [s.form for s in survivors if not s.triangle_free],
            "acyclic_survivors": [s.form for s in survivors if not s.cyclic],
            "family_forms": family_codes,
            "all_cyclic_contain_c4": all(has_four_cycle(s.graph) for s in survivors if s.cyclic),
        }
    return report, survivors


# -- ranks 1 and 2 ------------------------------------------------------------------


def verify_rank12(n_max: int = 7, n_min: int = 1, jobs: int = 1) -> VerificationReport:
    if not 1 <= n_min <= n_max <= MAX_RANK12_ORDER:
        raise ValueError(f"need 1 <= n_min <= n_max <= {MAX_RANK12_ORDER}")
    report = VerificationReport(
        "a connected self-loop graph with S nonempty has rank 1 iff it is the fully looped K_n, "
        "and rank 2 iff it is a fully looped K_sigma joined to n - sigma loopless vertices",
        f"n={n_min}..{n_max}",
    )
    with _Timer(report):
        per_order = {}
        for n in range(n_min, n_max + 1):
            rank1_form = canonical_form(build_family(FamilyInstance(FamilyId.RANK1, n=n)))
            rank2_forms = {
                canonical_form(build_family(FamilyInstance(FamilyId.RANK2, n=n, sigma=s)))
                for s in range(1, n)
            }
            seen = {1: set(), 2: set()}
            loopless_low = 0
            for g in connected_graphs(n):
                a = adjacency_matrix(g)
                for mask in loop_orbit_representatives(g):
                    for v in range(n):
                        a[v][v] = mask >> v & 1
                    r = rank(a)
                    if mask == 0:
                        # the characterisation is stated for nonempty S only
                        loopless_low += r in (1, 2)
                        continue
                    report.checked += 1
                    h = SelfLoopGraph(n, g.edges, mask_to_set(mask))
                    if r in (1, 2):
                        cf = canonical_form(h)
                        seen[r].add(cf)
                        ok = cf == rank1_form if r == 1 else cf in rank2_forms
                        if not ok:
                            report.violations.append(_violation(h, rank=r))
            # converse direction: every family member is found with the right rank
            if seen[1] != {rank1_form}:
                report.violations.append({"order": n, "reason": "rank-1 classes differ from fully looped K_n"})
            if seen[2] != rank2_forms:
                report.violations.append({"order": n, "reason": "rank-2 classes differ from the join family"})
            per_order[str(n)] = {
                "rank1_classes": len(seen[1]),
                "rank2_classes": len(seen[2]),
                "loopless_rank_le2_classes": loopless_low,
            }
        report.details = {"per_order": per_order}
    return report


# -- maximality ---------------------------------------------------------------------


def verify_maximality(ws=(1, 2, 3)) -> VerificationReport:
    report = VerificationReport(
        "adding any edge to H1, H2, H2', H3, H4 or H5 creates a triangle or raises the rank above 3",
        f"w={','.join(map(str, ws))}",
    )
    with _Timer(report):
        outcomes = {}
        for fid in RANK3_FAMILIES:
            for w in ws:
                g = family(fid, w)
                tri = high = 0
                for i, j in combinations(g.vertices, 2):
                    if g.has_edge(i, j):
                        continue
                    h = g.add_edge(i, j)
                    report.checked += 1
                    if not is_triangle_free(h):
                        tri += 1
                    elif rank_graph(h) > 3:
                        high += 1
                    else:
                        report.violations.append(_violation(h, family=fid.value, w=w, added=[i, j]))
                outcomes[f"{fid.value}(w={w})"] = {"triangle": tri, "rank_gt_3": high}
        report.witnesses = outcomes
    return report


# -- family self-checks ------------------------------------------------------------


def verify_family_ranks(w_max: int = 5) -> VerificationReport:
    report = VerificationReport(
        "H1, H2, H2', H3, H4, H5 have rank 3; H3', H4', H5' and the looped-W variants of H1(1), H2(1) "
        "have rank 4; H4' and H5' are isomorphic; H1(1) and H2(1) are not",
        f"w=0..{w_max} (rank 3), w=1..3 (rank 4)",
    )
    with _Timer(report):
        ranks = {}
        for fid in RANK3_FAMILIES:
            for w in range(w_max + 1):
                g = family(fid, w)
                r = rank_graph(g)
                ranks[f"{fid.value}(w={w})"] = r
                report.checked += 1
                if r != 3 or not (is_connected(g) and is_triangle_free(g) and contains_cycle(g)):
                    report.violations.append(_violation(g, family=fid.value, w=w, rank=r))
        for fid in (FamilyId.H3P, FamilyId.H4P, FamilyId.H5P):
            for w in (1, 2, 3):
                g = family(fid, w)
                r = rank_graph(g)
                ranks[f"{fid.value}(w={w})"] = r
                report.checked += 1
                if r != 4:
                    report.violations.append(_violation(g, family=fid.value, w=w, rank=r))
        for name in ("FIG23", "FIG24"):
            g = build_named(name)
            r = rank_graph(g)
            ranks[name] = r
            report.checked += 1
            if r != 4:
                report.violations.append(_violation(g, named=name, rank=r))
        for w in (1, 2, 3):
            report.checked += 1
            if not are_isomorphic(family(FamilyId.H4P, w), family(FamilyId.H5P, w)):
                report.violations.append({"reason": f"H4p(w={w}) not isomorphic to H5p(w={w})"})
        report.checked += 1
        if are_isomorphic(family(FamilyId.H1, 1), family(FamilyId.H2, 1)):
            report.violations.append({"reason": "H1(w=1) isomorphic to H2(w=1)"})
        report.details = {"ranks": ranks}
    return report


CLAIMS = ("cycle-bound", "c4-table", "witnesses", "classify", "rank12", "maximality", "families")
