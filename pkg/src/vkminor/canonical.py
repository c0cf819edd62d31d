"""Canonical labeling and isomorphism of small complexes.

Individualization-refinement: vertex colors are refined by the multiset of
colors seen in incident facets until stable, then a vertex of the first
non-singleton color class is individualized and the search recurses.  Every
discrete coloring is a labeling; the canonical form is the smallest relabeled
facet list over all leaves.  Leaves with equal certificates give
automorphisms, which prune siblings in the same orbit.
"""

from __future__ import annotations

from .complex import SimplicialComplex

MAX_VERTICES = 14


def _refine(colors: dict, incidence: dict) -> dict:
    ncls = len(set(colors.values()))
    while True:
        sig = {}
        for v, facets in incidence.items():
            seen = sorted(tuple(sorted(colors[w] for w in f if w != v)) for f in facets)
            sig[v] = (colors[v], tuple(seen))
        keys = {k: i for i, k in enumerate(sorted(set(sig.values())))}
        new = {v: keys[s] for v, s in sig.items()}
        if len(keys) == ncls:
            return new
        colors, ncls = new, len(keys)


def _certificate(facets, labeling: dict) -> tuple:
    return tuple(sorted(tuple(sorted(labeling[v] for v in f)) for f in facets))


class _Search:
    def __init__(self, K: SimplicialComplex):
        self.facets = list(K.facet_set)
        self.incidence = {v: [] for v in K.vertices}
        for f in self.facets:
            for v in f:
                self.incidence[v].append(f)
        self.best = None
        self.best_lab = None
        self.first_lab = None
        self.automorphisms: list[dict] = []

    def run(self):
        if not self.incidence:
            return _certificate(self.facets, {}), {}
        colors = _refine({v: 0 for v in self.incidence}, self.incidence)
        self._visit(colors, [])
        return self.best, self.best_lab

    def _leaf(self, lab: dict) -> None:
        cert = _certificate(self.facets, lab)
        if self.first_lab is None:
            self.first_lab = lab
        if self.best is None or cert < self.best:
            self.best, self.best_lab = cert, lab
        elif cert == self.best:
            inv = {c: v for v, c in self.best_lab.items()}
            self.automorphisms.append({v: inv[lab[v]] for v in lab})

    def _visit(self, colors: dict, path: list) -> None:
        cells: dict[int, list] = {}
        for v, c in colors.items():
            cells.setdefault(c, []).append(v)
        if len(cells) == len(colors):
            self._leaf(colors)
            return
        target = min(c for c, vs in cells.items() if len(vs) > 1)
        cell = sorted(cells[target])
        explored = []
        for w in cell:
            if explored and self._same_orbit(w, explored, path):
                continue
            explored.append(w)
            indiv = {v: 2 * c + (1 if c == target and v != w else 0) for v, c in colors.items()}
            self._visit(_refine(indiv, self.incidence), path + [w])

    def _same_orbit(self, w, explored, path) -> bool:
        gens = [g for g in self.automorphisms if all(g[p] == p for p in path)]
        if not gens:
            return False
        parent = {}

        def find(x):
            while parent.get(x, x) != x:
                x = parent[x]
            return x

        for g in gens:
            for a, b in g.items():
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        rw = find(w)
        return any(find(e) == rw for e in explored)


def canonical_labeling(K: SimplicialComplex, max_vertices: int | None = MAX_VERTICES):
    """Return ``(form, labeling)`` where ``labeling`` maps vertices to ``0..n-1``.

    ``form`` is the sorted facet list of the relabeled complex and is the
    same for isomorphic complexes.
    """
    if max_vertices is not None and len(K.vertices) > max_vertices:
        raise ValueError(
            f"complex has {len(K.vertices)} vertices; isomorphism search is capped at {max_vertices}")
    return _Search(K).run()


def canonical_form(K: SimplicialComplex, max_vertices: int | None = MAX_VERTICES) -> tuple:
    return canonical_labeling(K, max_vertices)[0]


def find_isomorphism(K1: SimplicialComplex, K2: SimplicialComplex,
                     max_vertices: int | None = MAX_VERTICES) -> dict | None:
    """A vertex bijection carrying ``K1`` onto ``K2``, or ``None``."""
    if K1.f_vector() != K2.f_vector():
        return None
    c1, l1 = canonical_labeling(K1, max_vertices)
    c2, l2 = canonical_labeling(K2, max_vertices)
    if c1 != c2:
        return None
    inv2 = {c: v for v, c in l2.items()}
    return {v: inv2[c] for v, c in l1.items()}


def is_isomorphic(K1: SimplicialComplex, K2: SimplicialComplex,
                  max_vertices: int | None = MAX_VERTICES) -> bool:
    return find_isomorphism(K1, K2, max_vertices) is not None
