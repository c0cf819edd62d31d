import random

import pytest

from vkminor.complex import SimplicialComplex, f_h_g, h_from_f
from vkminor.generators import (cross_polytope_boundary, cyclic_boundary, cycle, icosahedron,
                                octahedron, random_stellar_sphere, rp2_6, simplex_boundary,
                                torus_7, two_spheres)
from vkminor.minors import ContractionStep, contract, link_condition
from vkminor.spheres import (g_nonnegative, h_identity_check, is_simplex_boundary,
                             strongly_edge_decomposable, verify_sed_tree)


def test_h_identity_octahedron_by_hand():
    O = octahedron()
    a, b = O.faces(1)[0]
    assert h_from_f(O.f_vector()) == [1, 3, 3, 1]
    C = contract(O, ContractionStep(a, b))
    assert h_from_f(C.f_vector(), 3) == [1, 2, 2, 1]
    assert h_from_f(O.link((a, b)).f_vector(), 1) == [1, 1]
    assert all(h_identity_check(O, u, v) for u, v in O.faces(1))


def test_h_identity_precondition():
    # every edge of the triangle graph fails the link condition (lk(u) ∩ lk(v) has the third vertex)
    with pytest.raises(ValueError):
        h_identity_check(cycle(3), 0, 1)
    assert h_identity_check(cycle(4), 0, 1)


def test_simplex_boundary_recognition():
    assert is_simplex_boundary(SimplicialComplex([[]]))
    assert is_simplex_boundary(SimplicialComplex([[0], [1]]))
    assert is_simplex_boundary(simplex_boundary(4))
    assert not is_simplex_boundary(cycle(4))
    assert not is_simplex_boundary(SimplicialComplex())


def test_sed_examples():
    for d in range(1, 5):
        res = strongly_edge_decomposable(simplex_boundary(d))
        assert res and res.tree == {"simplex_boundary": d - 1}
    res = strongly_edge_decomposable(octahedron())
    assert res and verify_sed_tree(octahedron(), res.tree)
    assert strongly_edge_decomposable(torus_7()).status == "not_sed"
    assert strongly_edge_decomposable(rp2_6()).status == "not_sed"


def test_sed_higher_spheres():
    for S in [cross_polytope_boundary(4), cyclic_boundary(4, 7), icosahedron(), cycle(6)]:
        res = strongly_edge_decomposable(S)
        assert res and verify_sed_tree(S, res.tree)


def test_sed_budget():
    assert strongly_edge_decomposable(icosahedron(), budget=2).status == "budget"


def test_verify_rejects_bad_tree():
    O = octahedron()
    tree = strongly_edge_decomposable(O).tree
    a, b = tree["edge"]
    antipodal = (a + 3) % 6
    assert not verify_sed_tree(O, {"edge": [a, antipodal], "link": tree["link"],
                                   "contraction": tree["contraction"]})
    assert not verify_sed_tree(simplex_boundary(3), {"edge": [0, 1], "link": {}, "contraction": {}})


def test_g_vector_examples():
    assert f_h_g(simplex_boundary(4)).g == [1, 0, 0]
    assert g_nonnegative(simplex_boundary(4))
    assert f_h_g(octahedron()).g == [1, 2]
    assert g_nonnegative(octahedron())


def test_two_sphere_counts():
    # numbers of combinatorial types of triangulated 2-spheres with 4..9 vertices
    assert [len(two_spheres(n)) for n in range(4, 10)] == [1, 1, 2, 5, 14, 50]
    for S in two_spheres(7):
        assert S.f_vector() == [1, 7, 15, 10]


def test_stellar_spheres_sed_and_h_identity():
    rng = random.Random(11)
    for i in range(12):
        d = 2 + i % 2
        S = random_stellar_sphere(d, rng.randint(1, 5), rng, edges_only=True)
        res = strongly_edge_decomposable(S)
        assert res and verify_sed_tree(S, res.tree) and g_nonnegative(S)
        for u, v in S.faces(1):
            if link_condition(S, u, v):
                assert h_identity_check(S, u, v)
