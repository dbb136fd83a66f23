import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from finitetop.sets import GroundSet  # noqa: E402
from finitetop.topology import Topology, sierpinski, validate  # noqa: E402


@pytest.fixture
def sier() -> Topology:
    return sierpinski()


@pytest.fixture
def four_point() -> Topology:
    """{}, {a}, {b,c}, {a,b,c}, X on {a,b,c,d}."""
    g = GroundSet.of_size(4)
    return validate([0, g.mask("a"), g.mask("bc"), g.mask("abc"), g.full], g)


@pytest.fixture
def three_point() -> Topology:
    """{}, {a}, {b}, {a,b}, X on {a,b,c}."""
    g = GroundSet.of_size(3)
    return validate([0, 0b001, 0b010, 0b011, 0b111], g)


@st.composite
def topologies(draw, max_points: int = 4) -> Topology:
    """Union/intersection closure of a random family of subsets."""
    n = draw(st.integers(1, max_points))
    g = GroundSet.of_size(n)
    fam = set(draw(st.lists(st.integers(0, g.full), max_size=6))) | {0, g.full}
    changed = True
    while changed:
        new = {a | b for a in fam for b in fam} | {a & b for a in fam for b in fam}
        changed = not new <= fam
        fam |= new
    return validate(fam, g)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
