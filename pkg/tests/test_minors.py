from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import complexes
from vkminor.complex import SimplicialComplex, missing_faces
from vkminor.generators import (bipyramid, complete_bipartite, complete_graph, cube_graph,
                                cycle, split_h3, cycle_bipyramid_join, hd, octahedron, petersen,
                                random_complex, simplex_boundary)
from vkminor.minors import (CertificateCheck, ContractionStep, DeleteFacet, DeleteVertex,
                            InadmissibleContraction, MinorCertificate, admissible_via_link_eq,
                            compose_certificates, contract, find_minor, is_admissible,
                            link_condition, raw_identify, step_from_json, verify_certificate)


def literal_admissible(K, u, v):
    """Oracle straight from the definition: scan every missing face."""
    return not any(u in M and v in M for M in missing_faces(K, max(K.dim, 1)) if len(M) - 1 <= K.dim)


def literal_contract(K, u, v):
    faces = set()
    for T in K.face_set:
        faces.add(T if u not in T else tuple(sorted((set(T) - {u}) | {v})))
    return SimplicialComplex(faces)


def test_is_admissible_examples():
    assert is_admissible(split_h3(), 7, 8)
    assert not is_admissible(cycle(4), 0, 2)
    K5 = complete_graph(5)
    assert all(is_admissible(K5, a, b) for a, b in combinations(range(5), 2))
    with pytest.raises(ValueError):
        is_admissible(K5, 0, 9)
    with pytest.raises(ValueError):
        is_admissible(K5, 1, 1)


def test_link_formulation_examples():
    assert admissible_via_link_eq(split_h3(), 7, 8)
    # ∂Δ³ has no missing faces of dimension <= 2, so both formulations accept every edge
    S = simplex_boundary(3)
    for a, b in combinations(range(4), 2):
        assert admissible_via_link_eq(S, a, b) == is_admissible(S, a, b) is True
    T = cycle(3)
    assert all(admissible_via_link_eq(T, a, b) for a, b in combinations(range(3), 2))


def test_contract_examples():
    K = contract(split_h3(), ContractionStep(deleted=8, kept=7))
    assert K == hd(3).relabel(lambda v: v + 1)
    assert contract(cycle(3), ContractionStep(2, 1)) == SimplicialComplex([(0, 1)])
    with pytest.raises(InadmissibleContraction):
        contract(cycle(4), ContractionStep(0, 2))
    forced = contract(cycle(4), ContractionStep(0, 2), force=True)
    assert forced == SimplicialComplex([(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        ContractionStep(1, 1)


def test_link_condition_examples():
    O = octahedron()
    assert all(link_condition(O, a, b) for a, b in O.faces(1))
    S = simplex_boundary(3)
    assert not any(link_condition(S, a, b) for a, b in S.faces(1))
    B = bipyramid(3)
    assert link_condition(B, 0, 3) and link_condition(B, 1, 4)
    with pytest.raises(ValueError):
        link_condition(cycle(4), 0, 2)


@settings(max_examples=200, deadline=None)
@given(complexes())
def test_admissibility_formulations_agree(K):
    for a, b in combinations(K.vertices, 2):
        lit = is_admissible(K, a, b)
        assert lit == admissible_via_link_eq(K, a, b)
        if K.dim >= 1:
            assert lit == literal_admissible(K, a, b)


@settings(max_examples=150, deadline=None)
@given(complexes())
def test_link_condition_implies_admissible(K):
    for a, b in K.faces(1):
        if link_condition(K, a, b):
            assert is_admissible(K, a, b)


@settings(max_examples=150, deadline=None)
@given(complexes())
def test_contraction_is_literal_formula_and_shrinks(K):
    for a, b in combinations(K.vertices, 2):
        if is_admissible(K, a, b):
            C = contract(K, ContractionStep(a, b))
            assert C == literal_contract(K, a, b) == raw_identify(K, a, b)
            fK, fC = K.f_vector(), C.f_vector()
            assert all(x <= y for x, y in zip(fC, fK)) and len(fC) <= len(fK)


def test_find_minor_examples():
    K = split_h3()
    res = find_minor(K, hd(3))
    assert res.status == "found"
    assert res.certificate.steps == [ContractionStep(8, 7)] or \
        len(res.certificate.steps) == 1 and isinstance(res.certificate.steps[0], ContractionStep)
    assert verify_certificate(K, hd(3), res.certificate)

    res = find_minor(petersen(), complete_graph(5))
    assert res and verify_certificate(petersen(), complete_graph(5), res.certificate)

    res = find_minor(complete_graph(4), complete_graph(5))
    assert res.status == "absent"


def test_find_minor_more_graphs():
    for K, H in [(complete_bipartite(3, 3), complete_graph(4)), (cube_graph(), complete_graph(4)),
                 (cycle_bipyramid_join(), hd(3))]:
        res = find_minor(K, H)
        assert res.status == "found"
        assert verify_certificate(K, H, res.certificate)
    # the cube graph is planar, hence has no K5 minor; K_{3,3} has no K5 minor either
    assert find_minor(complete_bipartite(3, 3), complete_graph(5)).status == "absent"


def test_find_minor_budget_and_degenerate():
    res = find_minor(petersen(), complete_graph(5), budget=3)
    assert res.status == "budget"
    # contracting points together is literally admissible in dimension 0
    res = find_minor(SimplicialComplex([[0], [1], [2]]), SimplicialComplex([[0], [1]]))
    assert res.status == "found"


def test_verify_certificate_failures():
    K, H = split_h3(), hd(3)
    cert = find_minor(K, H).certificate
    bad = MinorCertificate([ContractionStep(1, 7)], cert.final_iso)
    check = verify_certificate(K, H, bad)
    assert not check and check.failed_at == 0
    wrong = dict(cert.final_iso)
    a, b = sorted(wrong)[:2]
    wrong[a], wrong[b] = wrong[b], wrong[a]
    wrong[sorted(wrong)[-1]] = 99
    check = verify_certificate(K, H, MinorCertificate(cert.steps, wrong))
    assert not check and check.failed_at == len(cert.steps)


def test_certificate_json_round_trip():
    cert = MinorCertificate([ContractionStep(3, 1), DeleteVertex(4), DeleteFacet((0, 2))],
                            {0: 1, 1: 0})
    data = cert.to_json()
    assert MinorCertificate.from_json(data) == cert
    with pytest.raises(ValueError):
        step_from_json({"op": "teleport"})


def test_minor_monotone_f_vectors(rng):
    for _ in range(20):
        K = random_complex(rng, max_vertices=6, max_dim=2, max_facets=6)
        H = K
        steps = []
        for _ in range(3):
            pairs = [e for e in combinations(H.vertices, 2) if is_admissible(H, *e)]
            if not pairs or len(H.vertices) < 3:
                break
            a, b = rng.choice(pairs)
            steps.append(ContractionStep(a, b))
            H = contract(H, steps[-1])
        iso = {v: v for v in H.vertices}
        assert verify_certificate(K, H, MinorCertificate(steps, iso))
        assert all(x <= y for x, y in zip(H.f_vector(), K.f_vector()))


def test_transitivity_by_composition():
    pairs = [(petersen(), complete_graph(5), complete_graph(4)),
             (split_h3(), hd(3), hd(3).relabel(lambda v: v + 10)),
             (cube_graph(), complete_graph(4), cycle(3))]
    for K, H1, H2 in pairs:
        c1 = find_minor(K, H1)
        c2 = find_minor(H1, H2)
        assert c1 and c2
        both = compose_certificates(c1.certificate, c2.certificate)
        assert verify_certificate(K, H2, both)


def test_certificate_check_is_truthy():
    assert CertificateCheck(True)
    assert not CertificateCheck(False, 0, "x")
