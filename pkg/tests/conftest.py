import os
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gdcalc import corpus
from gdcalc.gauss import GaussDiagram
from gdcalc.moves import random_diagram, random_move

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def virtual_diagrams(draw, max_circles=3, max_arrows=7, min_arrows=0):
    """Random signed diagrams; no realizability guarantee."""
    m = draw(st.integers(1, max_circles))
    low = max(min_arrows, (m - 1 + 1) // 2)
    k = draw(st.integers(low, max(low, max_arrows)))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_diagram(seed, m, k)


@st.composite
def classical_diagrams(draw, max_arrows=9, max_moves=6):
    """Classical corpus entries perturbed by planar Reidemeister moves."""
    pool = sorted(corpus.classical())
    G = corpus.load(draw(st.sampled_from(pool)))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    for _ in range(draw(st.integers(0, max_moves))):
        step = random_move(rng, G, max_arrows, realizable=True)
        if step is not None:
            G = step[0]
    return G


def any_diagrams(**kw):
    return st.one_of(virtual_diagrams(**kw), classical_diagrams())


@pytest.fixture(scope="session")
def load():
    return corpus.load


def unknot(m: int = 1) -> GaussDiagram:
    return GaussDiagram(((),) * m, (), True)


# filled by test_acceptance; one line per criterion
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
