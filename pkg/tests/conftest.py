from __future__ import annotations

from hypothesis import strategies as st

from semisimp.sscore import subcomplex_of_gamma


@st.composite
def subcomplexes(draw, max_n: int = 4):
    """A random face-closed subcomplex of gamma(n), n <= max_n."""
    n = draw(st.integers(0, max_n))
    vertices = st.sets(st.integers(0, n), min_size=1, max_size=n + 1)
    gens = draw(st.lists(vertices, max_size=5))
    return subcomplex_of_gamma(n, gens)


finite_seqs = st.lists(st.integers(-20, 20), max_size=7)
