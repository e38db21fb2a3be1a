from hypothesis import strategies as st

from stirling_trees import random_object

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


@st.composite
def kary_trees(draw, max_n=7, max_k=3):
    n = draw(st.integers(min_value=0, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=max_k))
    return random_object("kary", n, k, draw(seeds))


@st.composite
def stirling_perms(draw, max_n=7, max_k=3):
    n = draw(st.integers(min_value=0, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=max_k))
    return random_object("stirling", n, k, draw(seeds))


@st.composite
def ports(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    return random_object("port", n, seed=draw(seeds))
