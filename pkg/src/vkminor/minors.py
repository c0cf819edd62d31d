"""Admissible contractions, deletions and the minor order.

``H < K`` when ``H`` arises from ``K`` by a sequence of deletions
(passing to a subcomplex) and admissible contractions.  A contraction
identifies ``deleted`` into ``kept``; it is admissible when no missing face of
dimension at most ``dim K`` contains both vertices.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Union

from .canonical import MAX_VERTICES, canonical_labeling, find_isomorphism
from .complex import (SimplicialComplex, intersection, missing_faces_containing)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ContractionStep:
    deleted: int
    kept: int

    def __post_init__(self):
        if self.deleted == self.kept:
            raise ValueError("a contraction needs two distinct vertices")

    def to_json(self) -> dict:
        return {"op": "contract", "deleted": self.deleted, "kept": self.kept}


@dataclass(frozen=True)
class DeleteVertex:
    vertex: int

    def to_json(self) -> dict:
        return {"op": "delete_vertex", "vertex": self.vertex}


@dataclass(frozen=True)
class DeleteFacet:
    facet: tuple

    def to_json(self) -> dict:
        return {"op": "delete_facet", "facet": list(self.facet)}


Step = Union[ContractionStep, DeleteVertex, DeleteFacet]


def step_from_json(rec: dict) -> Step:
    op = rec.get("op")
    if op == "contract":
        return ContractionStep(int(rec["deleted"]), int(rec["kept"]))
    if op == "delete_vertex":
        return DeleteVertex(int(rec["vertex"]))
    if op == "delete_facet":
        return DeleteFacet(tuple(sorted(int(v) for v in rec["facet"])))
    raise ValueError(f"unknown certificate step {op!r}")


class InadmissibleContraction(ValueError):
    pass


def _check_pair(K: SimplicialComplex, u: int, v: int) -> None:
    if u == v:
        raise ValueError("need two distinct vertices")
    for w in (u, v):
        if (w,) not in K.face_set:
            raise ValueError(f"unknown vertex {w}")


def is_admissible(K: SimplicialComplex, u: int, v: int) -> bool:
    """True iff no missing face of dimension <= dim K contains both ``u`` and ``v``.

    For ``dim K >= 1`` this forces ``{u, v}`` to be an edge.  On 0-dimensional
    complexes every pair is admissible, since the pair itself has dimension 1.
    """
    _check_pair(K, u, v)
    return not missing_faces_containing(K, (u, v), K.dim)


def _link_or_void(K: SimplicialComplex, face) -> SimplicialComplex:
    F = tuple(sorted(face))
    if F not in K.face_set:
        return SimplicialComplex()
    return K.link(F)


def admissible_via_link_eq(K: SimplicialComplex, u: int, v: int) -> bool:
    """``skel_{dim K - 2}(lk(v) ∩ lk(u)) == lk({u, v})``, evaluated literally.

    The link of a non-face is taken to be the void complex, so for
    ``dim K >= 1`` a non-edge always fails (the left side contains ∅).
    """
    _check_pair(K, u, v)
    left = intersection(K.link((u,)), K.link((v,))).skeleton(K.dim - 2)
    return left == _link_or_void(K, (u, v))


def contract(K: SimplicialComplex, step: ContractionStep, force: bool = False) -> SimplicialComplex:
    """Identify ``step.deleted`` into ``step.kept``.

    Raises :class:`InadmissibleContraction` unless the step is admissible or
    ``force`` is set.
    """
    u, v = step.deleted, step.kept
    _check_pair(K, u, v)
    if not force and not is_admissible(K, u, v):
        raise InadmissibleContraction(f"contraction {u}->{v} is not admissible")
    return raw_identify(K, u, v)


def raw_identify(K: SimplicialComplex, u: int, v: int) -> SimplicialComplex:
    """``{T : u not in T} ∪ {(T - u) ∪ v : u in T}`` with no admissibility check."""
    out = []
    for f in K.facet_set:
        if u in f:
            out.append(tuple(sorted({w for w in f if w != u} | {v})))
        else:
            out.append(f)
    return SimplicialComplex(out)


def link_condition(K: SimplicialComplex, u: int, v: int) -> bool:
    """``lk(u) ∩ lk(v) == lk(uv)`` for the edge ``uv``."""
    e = tuple(sorted((u, v)))
    if e not in K.face_set or u == v:
        raise ValueError(f"{e} is not an edge")
    return intersection(K.link((u,)), K.link((v,))) == K.link(e)


def apply_step(K: SimplicialComplex, step: Step, force: bool = False) -> SimplicialComplex:
    if isinstance(step, ContractionStep):
        return contract(K, step, force=force)
    if isinstance(step, DeleteVertex):
        return K.delete_vertex(step.vertex)
    if isinstance(step, DeleteFacet):
        return K.remove_facet(step.facet)
    raise TypeError(f"not a step: {step!r}")


@dataclass
class MinorCertificate:
    """Replayable witness for ``H < K``: steps from ``K``, then a vertex bijection onto ``H``."""

    steps: list = field(default_factory=list)
    final_iso: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "steps": [s.to_json() for s in self.steps],
            "final_iso": {str(k): self.final_iso[k] for k in sorted(self.final_iso)},
        }

    @classmethod
    def from_json(cls, data: dict) -> "MinorCertificate":
        steps = [step_from_json(r) for r in data.get("steps", [])]
        iso = {int(k): int(v) for k, v in data.get("final_iso", {}).items()}
        return cls(steps, iso)

    def replay(self, K: SimplicialComplex) -> SimplicialComplex:
        for s in self.steps:
            K = apply_step(K, s)
        return K


@dataclass
class CertificateCheck:
    ok: bool
    failed_at: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(K: SimplicialComplex, H: SimplicialComplex,
                       cert: MinorCertificate) -> CertificateCheck:
    """Replay ``cert`` on ``K``; ``failed_at`` is a step index, or ``len(steps)`` for the final check."""
    state = K
    for i, s in enumerate(cert.steps):
        try:
            state = apply_step(state, s)
        except (ValueError, TypeError) as exc:
            return CertificateCheck(False, i, str(exc))
    n = len(cert.steps)
    iso = cert.final_iso
    if set(iso) != set(state.vertices) or len(set(iso.values())) != len(iso):
        return CertificateCheck(False, n, "final_iso is not a bijection on the vertices")
    if state.relabel(iso) != H:
        return CertificateCheck(False, n, "final_iso does not carry the result onto the target")
    return CertificateCheck(True)


def compose_certificates(first: MinorCertificate, second: MinorCertificate) -> MinorCertificate:
    """From ``H1 < K`` (``first``) and ``H2 < H1`` (``second``) build ``H2 < K``."""
    back = {w: v for v, w in first.final_iso.items()}
    steps = list(first.steps)
    for s in second.steps:
        if isinstance(s, ContractionStep):
            steps.append(ContractionStep(back[s.deleted], back[s.kept]))
        elif isinstance(s, DeleteVertex):
            steps.append(DeleteVertex(back[s.vertex]))
        else:
            steps.append(DeleteFacet(tuple(sorted(back[v] for v in s.facet))))
    iso = {}
    for v, w in first.final_iso.items():
        if w in second.final_iso:
            iso[v] = second.final_iso[w]
    return MinorCertificate(steps, iso)


def _dominates(f_big: list[int], f_small: list[int]) -> bool:
    if len(f_big) < len(f_small):
        return False
    return all(a >= b for a, b in zip(f_big, f_small))


@dataclass
class MinorSearchResult:
    status: str  # "found", "absent" (search space exhausted) or "budget"
    certificate: MinorCertificate | None = None
    nodes: int = 0
    degenerate: bool = False

    def __bool__(self) -> bool:
        return self.status == "found"


class _BudgetExhausted(Exception):
    pass


class _MinorSearch:
    def __init__(self, H: SimplicialComplex, budget: int, max_vertices):
        self.H = H
        self.fH = H.f_vector()
        self.target = canonical_labeling(H, max_vertices)[0]
        self.budget = budget
        self.max_vertices = max_vertices
        self.nodes = 0
        self.failed: dict = {}

    def moves(self, K: SimplicialComplex, lab: dict):
        out = []
        if K.dim >= 1:
            pairs = K.faces(1)
        else:
            vs = K.vertices
            pairs = [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]]
        for a, b in pairs:
            if not missing_faces_containing(K, (a, b), K.dim):
                key = (0, tuple(sorted((lab[a], lab[b]))))
                out.append((key, ContractionStep(deleted=b, kept=a)))
        for v in K.vertices:
            out.append(((1, (lab[v],)), DeleteVertex(v)))
        for f in K.facet_set:
            if len(f) > 1:
                out.append(((2, tuple(sorted(lab[v] for v in f))), DeleteFacet(f)))
        out.sort(key=lambda kv: kv[0])
        return [s for _, s in out]

    def dfs(self, K: SimplicialComplex, left: int):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        form, lab = canonical_labeling(K, self.max_vertices)
        if form == self.target:
            return [], K, False
        seen = self.failed.get(form)
        if seen is not None and seen >= left:
            return None, None, seen != math.inf
        fK = K.f_vector()
        if fK == self.fH:
            self.failed[form] = math.inf
            return None, None, False
        if left == 0 or len(self.fH) > 1 and fK[1] - self.fH[1] > left:
            return None, None, True
        truncated = False
        tried = set()
        for step in self.moves(K, lab):
            child = apply_step(K, step)
            if not _dominates(child.f_vector(), self.fH):
                continue
            cform = canonical_labeling(child, self.max_vertices)[0]
            if cform in tried:
                continue
            tried.add(cform)
            path, final, trunc = self.dfs(child, left - 1)
            if path is not None:
                return [step] + path, final, False
            truncated = truncated or trunc
        self.failed[form] = left if truncated else math.inf
        return None, None, truncated


def find_minor(K: SimplicialComplex, H: SimplicialComplex, budget: int = 100_000,
               max_vertices: int | None = MAX_VERTICES) -> MinorSearchResult:
    """Search for a certificate of ``H < K``.

    Iterative deepening over single-vertex deletions, single-facet deletions
    and admissible contractions; states are memoized by canonical form and
    pruned by f-vector dominance, which no move can restore.  ``budget``
    bounds the number of search nodes across all depths.
    """
    if H.is_void():
        return MinorSearchResult("found", MinorCertificate(
            [DeleteVertex(v) for v in K.vertices] + ([] if K.is_void() else [DeleteFacet(())]), {}))
    if not _dominates(K.f_vector(), H.f_vector()):
        return MinorSearchResult("absent")
    search = _MinorSearch(H, budget, max_vertices)
    max_depth = len(K.face_set) - len(H.face_set)
    try:
        for depth in range(max_depth + 1):
            path, final, truncated = search.dfs(K, depth)
            if path is not None:
                iso = find_isomorphism(final, H, max_vertices)
                degenerate = False
                state = K
                for s in path:
                    if isinstance(s, ContractionStep) and state.dim == 0:
                        degenerate = True
                    state = apply_step(state, s)
                cert = MinorCertificate(path, iso)
                return MinorSearchResult("found", cert, search.nodes, degenerate)
            if not truncated:
                return MinorSearchResult("absent", nodes=search.nodes)
            log.debug("depth %d exhausted with truncation, %d nodes", depth, search.nodes)
    except _BudgetExhausted:
        return MinorSearchResult("budget", nodes=search.nodes)
    return MinorSearchResult("absent", nodes=search.nodes)
