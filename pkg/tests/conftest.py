import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from hyperlinf import Hypergraph, complete_uniform  # noqa: E402

from acceptance_log import RESULTS  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid, desc, ok, secs, budget in sorted(RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {cid:>2}: {desc} ({secs:.1f}s / {budget}s)")


@pytest.fixture
def diamond_triple():
    """Five 2-edges on 1..4 plus the 3-edge {4,5,6}."""
    edges = [(1, 2), (1, 3), (2, 3), (3, 4), (2, 4), (4, 5, 6)]
    return Hypergraph.from_edges(6, edges)


@pytest.fixture
def k3():
    return complete_uniform(3, 2)


@pytest.fixture
def path3():
    return Hypergraph.from_edges(3, [(1, 2), (2, 3)])
