import random

import pytest
from hypothesis import strategies as st

from looprank.graph import SelfLoopGraph


@st.composite
def self_loop_graphs(draw, min_order=1, max_order=6):
    n = draw(st.integers(min_order, max_order))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edge_bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    loop_bits = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return SelfLoopGraph(
        n,
        [p for p, b in zip(pairs, edge_bits) if b],
        [v for v, b in enumerate(loop_bits) if b],
    )


def random_graph(rng: random.Random, n: int, p_edge: float = 0.5, p_loop: float = 0.4) -> SelfLoopGraph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p_edge]
    loops = [v for v in range(n) if rng.random() < p_loop]
    return SelfLoopGraph(n, edges, loops)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key, (ok, detail) in RESULTS.items():
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {detail}")
