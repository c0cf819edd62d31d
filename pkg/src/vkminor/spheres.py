"""Edge contractions in triangulated spheres: the h-polynomial identity and
strongly edge decomposable spheres."""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import MAX_VERTICES, canonical_labeling
from .complex import SimplicialComplex, f_h_g, h_from_f
from .minors import ContractionStep, contract, link_condition


def h_identity_check(K: SimplicialComplex, u: int, v: int) -> bool:
    """Check ``h(K) = h(K') + t·h(lk(uv))`` for the contraction of ``u`` into ``v``.

    All three h-polynomials use the dimension of ``K`` (the link two less), so
    the comparison is an exact identity of integer coefficient lists.
    """
    if not link_condition(K, u, v):
        raise ValueError(f"edge {u}{v} fails the link condition")
    d = K.dim + 1
    contracted = contract(K, ContractionStep(deleted=u, kept=v))
    lk = K.link((u, v))
    h = h_from_f(K.f_vector(), d)
    rhs = h_from_f(contracted.f_vector(), d)
    for i, c in enumerate(h_from_f(lk.f_vector(), d - 2)):
        rhs[i + 1] += c
    return h == rhs


def is_simplex_boundary(S: SimplicialComplex) -> bool:
    """True for the boundary of a simplex, including ``{∅}`` as the boundary of a point."""
    if S.is_void():
        return False
    d = S.dim
    if d == -1:
        return True
    return S.is_pure() and len(S.vertices) == d + 2 and len(S.facet_set) == d + 2


def _relabel_tree(tree, mapping: dict):
    if "simplex_boundary" in tree:
        return dict(tree)
    u, v = tree["edge"]
    return {
        "edge": [mapping[u], mapping[v]],
        "link": _relabel_tree(tree["link"], mapping),
        "contraction": _relabel_tree(tree["contraction"], mapping),
    }


@dataclass
class SedResult:
    status: str  # "sed", "not_sed" or "budget"
    tree: dict | None = None
    calls: int = 0

    def __bool__(self) -> bool:
        return self.status == "sed"


class _Budget(Exception):
    pass


def strongly_edge_decomposable(S: SimplicialComplex, budget: int = 20_000,
                               max_vertices: int | None = MAX_VERTICES) -> SedResult:
    """Decide strong edge decomposability.

    The witness tree has a node ``{"edge": [kept, deleted], "link",
    "contraction"}`` per decomposition step; simplex boundaries are leaves ``{"simplex_boundary": dim}``.  Results are
    memoized on canonical forms.  Non-pure complexes are rejected outright.
    """
    memo: dict = {}
    calls = 0

    def rec(K: SimplicialComplex):
        nonlocal calls
        calls += 1
        if calls > budget:
            raise _Budget
        if is_simplex_boundary(K):
            return {"simplex_boundary": K.dim}
        if K.is_void() or not K.is_pure():
            return None
        form, lab = canonical_labeling(K, max_vertices)
        if form in memo:
            hit = memo[form]
            if hit is None:
                return None
            inv = {c: v for v, c in lab.items()}
            return _relabel_tree(hit, inv)
        found = None
        for a, b in K.faces(1):
            if not link_condition(K, a, b):
                continue
            sub_link = rec(K.link((a, b)))
            if sub_link is None:
                continue
            sub_con = rec(contract(K, ContractionStep(deleted=b, kept=a)))
            if sub_con is None:
                continue
            found = {"edge": [a, b], "link": sub_link, "contraction": sub_con}
            break
        memo[form] = None if found is None else _relabel_tree(found, lab)
        return found

    try:
        tree = rec(S)
    except _Budget:
        return SedResult("budget", None, calls)
    if tree is None:
        return SedResult("not_sed", None, calls)
    return SedResult("sed", tree, calls)


def verify_sed_tree(S: SimplicialComplex, tree: dict) -> bool:
    if "simplex_boundary" in tree:
        return is_simplex_boundary(S)
    a, b = tree["edge"]
    if (min(a, b), max(a, b)) not in S.face_set or not link_condition(S, a, b):
        return False
    return (verify_sed_tree(S.link((a, b)), tree["link"])
            and verify_sed_tree(contract(S, ContractionStep(deleted=b, kept=a)),
                                tree["contraction"]))


def g_nonnegative(S: SimplicialComplex) -> bool:
    return all(g >= 0 for g in f_h_g(S).g)
