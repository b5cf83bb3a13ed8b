import pytest
from hypothesis import HealthCheck, settings, strategies as st

from knotforge import knot_table
from knotforge.laurent import LaurentPoly
from knotforge.reidemeister import random_walk

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

KNOTS = [n for n in knot_table.NAMES]
NONTRIVIAL = ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"]


def laurent_polys(max_terms=5, span=3, bound=6):
    return st.dictionaries(
        st.integers(-span, span), st.integers(-bound, bound), max_size=max_terms
    ).map(LaurentPoly)


@st.composite
def walked_diagrams(draw, names=tuple(KNOTS), max_steps=6):
    """A built-in diagram pushed through a short seeded Reidemeister walk."""
    name = draw(st.sampled_from(names))
    steps = draw(st.integers(0, max_steps))
    seed = draw(st.integers(0, 10_000))
    return name, random_walk(knot_table.get(name), steps, seed)


@pytest.fixture(params=KNOTS)
def knot_name(request):
    return request.param
