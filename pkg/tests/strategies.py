"""Hypothesis strategies for ordered graphs and conflict matrices."""

import itertools
from hypothesis import strategies as st
from ordconflict.models.ordered_graph import OrderedGraph


@st.composite
def ordered_graphs(draw, max_vertices=6, lo=-12, hi=12):
    """Small ordered graphs with at least one edge."""
    vertices = draw(
        st.lists(
            st.integers(lo, hi),
            min_size=2,
            max_size=max_vertices,
            unique=True,
        )
    )
    pairs = list(itertools.combinations(sorted(vertices), 2))
    edges = draw(st.lists(st.sampled_from(pairs), min_size=1, unique=True))

    return OrderedGraph(vertices, edges)


rows = st.tuples(*[st.integers(-3, 3)] * 4)
sign_rows = st.tuples(*[st.integers(-1, 1)] * 4)
matrices = st.lists(rows, min_size=1, max_size=3).map(tuple)
thresholds = st.integers(-4, 4)
