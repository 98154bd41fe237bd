import pytest
from hypothesis import settings, strategies as st

from rank2crystal import lspath
from rank2crystal.algebra import ShapeWeight

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# (a1, a2, k1, k2) covering both cases, symmetric and not, coprime and not
SHAPES = [(3, 3, 1, 1), (4, 4, 1, 1), (3, 4, 1, 1), (3, 3, 3, 2), (3, 5, 2, 3),
          (4, 3, 1, 2), (3, 3, 2, 2)]

ACCEPTANCE_LINES = []


@pytest.fixture
def lam3():
    return ShapeWeight.of(3, 3, 1, 1)


shapes = st.sampled_from(SHAPES).map(lambda t: ShapeWeight.of(*t))
ops = st.lists(st.tuples(st.sampled_from("fe"), st.sampled_from((1, 2))), max_size=14)


@st.composite
def paths(draw, shape_strategy=shapes):
    """A random walk from pi_lambda; null steps are skipped."""
    shape = draw(shape_strategy)
    b = lspath.straight_line(shape)
    for kind, i in draw(ops):
        nb = (lspath.lowering if kind == "f" else lspath.raising)(b, i)
        if nb is not None:
            b = nb
    return b


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
