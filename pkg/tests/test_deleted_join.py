from itertools import combinations, product

import pytest
from hypothesis import given, settings

from conftest import complexes
from vkminor.complex import SimplicialComplex
from vkminor.deleted_join import (ChainMap, JoinMap, NotACocycle, SymmetricCochain,
                                  contraction_chain_map, decide_vanishing, deleted_join,
                                  fundamental_cocycle, induced_join_map, observation_holds,
                                  smith_class, smith_pullback_check, smith_representative,
                                  smith_step, symmetrizer_surjective)
from vkminor.equivariant import SYMMETRIC
from vkminor.generators import (complete_graph, cycle, split_h3, hd, octahedron, path,
                                petersen, simplex)
from vkminor.minors import ContractionStep, find_minor


def test_edge_join_is_a_four_cycle():
    J = deleted_join(SimplicialComplex([[0, 1]]))
    assert J.n_cells(0) == 4 and J.n_cells(1) == 4 and J.top_dim == 1
    assert fundamental_cocycle(J).coefficients == [1, 1]


def test_h1_join_is_a_six_cycle():
    J = deleted_join(hd(1))
    assert (J.n_cells(0), J.n_cells(1), J.top_dim) == (6, 6, 1)


def test_h3_cell_count_by_assignment():
    # each vertex of [7] goes to the first copy, the second copy, or neither
    count = 0
    for assign in product((0, 1, 2), repeat=7):
        s, t = assign.count(1), assign.count(2)
        if (s or t) and s <= 3 and t <= 3:
            count += 1
    J = deleted_join(hd(3))
    assert sum(J.n_cells(q) for q in J.dims) == count


def test_fundamental_cocycle_h2():
    J = deleted_join(hd(2))
    c = fundamental_cocycle(J)
    assert c.coefficients == [1] * 5 and J.is_cocycle(0, c.coefficients, SYMMETRIC)


@settings(max_examples=60, deadline=None)
@given(complexes(max_vertices=6, max_dim=2, max_facets=6))
def test_join_invariants(K):
    J = deleted_join(K)
    assert J.check_boundary_squared() and J.check_tau()
    for q in J.dims:
        for i, (S, T) in enumerate(J.cells[q]):
            assert set(S).isdisjoint(T) and (S or T)
            j, _ = J.tau[q][i]
            assert j != i and J.cells[q][j] == (T, S)
    assert symmetrizer_surjective(J)


def test_first_smith_class_of_edge_is_generator():
    J = deleted_join(SimplicialComplex([[0, 1]]))
    c = smith_step(J, fundamental_cocycle(J))
    assert c.dim == 1 and not c.is_zero()
    assert decide_vanishing(J, c) is None


def test_smith_step_rejects_non_cocycle():
    J = deleted_join(cycle(4))
    bad = SymmetricCochain(0, [1] + [0] * (J.n_orbits(0) - 1))
    with pytest.raises(NotACocycle):
        smith_step(J, bad)


@pytest.mark.parametrize("K,m,vanishes", [
    (hd(1), 1, False), (hd(2), 3, False), (complete_graph(4), 3, True),
    (octahedron(), 4, True), (path(4), 3, True), (cycle(5), 3, True)])
def test_smith_verdicts(K, m, vanishes):
    rep = smith_class(K, m)
    assert rep.vanishes == vanishes
    J = rep.join
    assert J.is_cocycle(m, rep.representative.coefficients, SYMMETRIC)
    if vanishes and m > 0 and not rep.representative.is_zero():
        assert J.apply_coboundary(m - 1, rep.witness.coefficients, SYMMETRIC) == \
            [c % 2 for c in rep.representative.coefficients]


def test_smith_above_top_dimension_vanishes():
    rep = smith_class(cycle(4), 9)
    assert rep.vanishes and rep.representative.is_zero()


@pytest.mark.parametrize("K", [hd(2), octahedron(), split_h3(), petersen()])
def test_representative_choice_does_not_matter(K):
    J = deleted_join(K)
    for m in range(1, 4):
        a = smith_representative(J, m, "rep")
        b = smith_representative(J, m, "partner")
        diff = SymmetricCochain(m, [(x + y) % 2 for x, y in zip(a.coefficients, b.coefficients)])
        assert decide_vanishing(J, diff) is not None
    Jf = deleted_join(K, flip_representatives=True)
    for m in range(0, 4):
        assert smith_class(K, m, J=J).vanishes == smith_class(K, m, J=Jf).vanishes


def test_report_json_shape():
    rep = smith_class(complete_graph(4), 3)
    data = rep.to_json("k4")
    assert set(data) == {"complex", "m", "vanishes", "representative_support", "witness_support"}
    assert data["vanishes"] is True and data["witness_support"] is not None


def test_contraction_map_example():
    K = split_h3()
    phi = contraction_chain_map(K, ContractionStep(deleted=8, kept=7))
    assert phi((1, 2, 7)) == {(1, 2, 8): 1, (2, 7, 8): 1, (1, 7, 8): 1}
    for F in phi.source.face_set:
        if F in K.face_set:
            assert phi(F) == {F: 1}
    assert phi.is_chain_map() and phi.is_injective()
    assert observation_holds(K, ContractionStep(8, 7))


def test_induced_map_on_example():
    K = split_h3()
    phi = contraction_chain_map(K, ContractionStep(8, 7))
    jm = induced_join_map(phi)
    assert isinstance(jm, JoinMap)
    assert jm.lands_in_deleted_join and jm.is_equivariant() and jm.is_chain_map()


def test_random_contraction_maps(rng):
    from vkminor.generators import random_complex
    from vkminor.minors import is_admissible
    done = 0
    while done < 40:
        K = random_complex(rng, max_vertices=7, max_dim=3)
        pairs = [p for p in combinations(K.vertices, 2) if is_admissible(K, *p)]
        if not pairs:
            continue
        a, b = rng.choice(pairs)
        step = ContractionStep(a, b) if rng.random() < 0.5 else ContractionStep(b, a)
        phi = contraction_chain_map(K, step)
        assert isinstance(phi, ChainMap)
        assert phi.is_chain_map() and phi.is_injective() and observation_holds(K, step)
        done += 1


def test_pullback_example_all_m():
    K = split_h3()
    for m in range(0, 6):
        assert smith_pullback_check(K, ContractionStep(8, 7), m)


def test_pullback_in_full_simplex():
    K = simplex(3)
    for m in range(0, 4):
        assert smith_pullback_check(K, ContractionStep(0, 1), m)


@pytest.mark.parametrize("K,H,m", [
    (split_h3(), hd(3), 5), (petersen(), complete_graph(5), 3), (octahedron(), hd(1), 1)])
def test_monotone_under_found_minors(K, H, m):
    res = find_minor(K, H)
    assert res.status == "found"
    if not smith_class(H, m).vanishes:
        assert not smith_class(K, m).vanishes
