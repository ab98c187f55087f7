"""Hypothesis strategies shared across the suite."""
from hypothesis import strategies as st

from qtkostka.partitions import partitions
from qtkostka.scalar_ring import LaurentQT
from qtkostka.tableaux import syt_of_degree

exponents = st.integers(min_value=-6, max_value=6)
coefficients = st.integers(min_value=-9, max_value=9)

laurent = st.dictionaries(st.tuples(exponents, exponents), coefficients, max_size=5).map(LaurentQT)
polys_in_q = st.dictionaries(st.tuples(st.integers(0, 5), st.just(0)), coefficients, max_size=4).map(LaurentQT)


@st.composite
def partition_of(draw, max_size=10, max_parts=None):
    d = draw(st.integers(min_value=0, max_value=max_size))
    return draw(st.sampled_from(partitions(d, max_parts)))


@st.composite
def syt(draw, min_size=1, max_size=7):
    d = draw(st.integers(min_value=min_size, max_value=max_size))
    return draw(st.sampled_from(syt_of_degree(d)))


bits = st.lists(st.integers(0, 1), max_size=4).map(tuple)
