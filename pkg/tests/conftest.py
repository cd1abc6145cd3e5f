from fractions import Fraction

from hypothesis import settings, strategies as st

from leibniz.algebra import AlgebraTable
from leibniz.ratmat import Matrix

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))
small_rationals = st.builds(Fraction, st.integers(-3, 3), st.integers(1, 2))


@st.composite
def matrices(draw, min_size=1, max_size=5, square=False, entries=rationals):
    rows = draw(st.integers(min_size, max_size))
    cols = rows if square else draw(st.integers(min_size, max_size))
    return Matrix([[draw(entries) for _ in range(cols)] for _ in range(rows)])


@st.composite
def vectors(draw, n, entries=rationals):
    return tuple(draw(entries) for _ in range(n))


@st.composite
def tables(draw, min_dim=1, max_dim=4):
    n = draw(st.integers(min_dim, max_dim))
    constants = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if draw(st.booleans()):
                out = {k: draw(small_rationals) for k in range(1, n + 1) if draw(st.booleans())}
                constants[(i, j)] = out
    return AlgebraTable(n, constants)
