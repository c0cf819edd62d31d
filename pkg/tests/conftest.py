import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from vkminor.complex import SimplicialComplex


@pytest.fixture
def rng():
    return random.Random(20240611)


@st.composite
def complexes(draw, max_vertices=7, max_dim=3, max_facets=8):
    """Random complexes on vertices ``0..n-1`` for property tests."""
    n = draw(st.integers(2, max_vertices))
    k = draw(st.integers(1, max_facets))
    facets = []
    for _ in range(k):
        size = draw(st.integers(1, min(max_dim + 1, n)))
        facets.append(draw(st.lists(st.integers(0, n - 1), min_size=size, max_size=size,
                                    unique=True)))
    return SimplicialComplex(facets)


def brute_faces(K):
    """Downward closure computed independently from the facet list."""
    out = set()
    for f in K.facets:
        for k in range(len(f) + 1):
            out.update(combinations(f, k))
    return out


def brute_link(K, F):
    faces = brute_faces(K)
    F = set(F)
    return {T for T in faces if not F & set(T) and tuple(sorted(F | set(T))) in faces}
