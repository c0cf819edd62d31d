"""Named complexes and small random-complex utilities."""

from __future__ import annotations

import random
from itertools import combinations

from .canonical import canonical_form
from .complex import SimplicialComplex, join


def simplex(d: int) -> SimplicialComplex:
    """The full ``d``-simplex on vertices ``0..d``."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return SimplicialComplex([range(d + 1)])


def simplex_boundary(d: int) -> SimplicialComplex:
    """Boundary of the ``d``-simplex: all ``d``-subsets of ``0..d``."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return SimplicialComplex(combinations(range(d + 1), d))


def hd(d: int) -> SimplicialComplex:
    """``H(d)``, the ``(d-1)``-skeleton of the ``2d``-simplex."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return SimplicialComplex(combinations(range(2 * d + 1), d))


def cross_polytope_boundary(d: int) -> SimplicialComplex:
    """Boundary of the ``d``-dimensional cross-polytope; ``i`` and ``i+d`` are antipodal."""
    if d < 1:
        raise ValueError("d must be >= 1")
    facets = []
    for mask in range(2 ** d):
        facets.append([i + d * ((mask >> i) & 1) for i in range(d)])
    return SimplicialComplex(facets)


def octahedron() -> SimplicialComplex:
    return cross_polytope_boundary(3)


def gale_evenness(subset, n: int) -> bool:
    """Gale's evenness condition for a subset of ``0..n-1``."""
    s = set(subset)
    outside = [i for i in range(n) if i not in s]
    for a, b in zip(outside, outside[1:]):
        if sum(1 for x in s if a < x < b) % 2:
            return False
    return True


def cyclic_boundary(d: int, n: int) -> SimplicialComplex:
    """Boundary complex of the cyclic ``d``-polytope with ``n`` vertices."""
    if d < 1 or n <= d:
        raise ValueError("need d >= 1 and n > d")
    return SimplicialComplex(S for S in combinations(range(n), d) if gale_evenness(S, n))


def split_h3() -> SimplicialComplex:
    """All triangles on ``1..7`` except 127, 137, 237, plus 128, 138, 238, 178, 278, 378."""
    removed = {(1, 2, 7), (1, 3, 7), (2, 3, 7)}
    tri = [t for t in combinations(range(1, 8), 3) if t not in removed]
    tri += [(1, 2, 8), (1, 3, 8), (2, 3, 8), (1, 7, 8), (2, 7, 8), (3, 7, 8)]
    return SimplicialComplex(tri)


def cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimplicialComplex((i, (i + 1) % n) for i in range(n))


def path(n: int) -> SimplicialComplex:
    """Path graph on ``n`` vertices."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return SimplicialComplex([[0]])
    return SimplicialComplex((i, i + 1) for i in range(n - 1))


def complete_graph(n: int) -> SimplicialComplex:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return SimplicialComplex([[0]])
    return SimplicialComplex(combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> SimplicialComplex:
    return SimplicialComplex((i, a + j) for i in range(a) for j in range(b))


def discrete(n: int) -> SimplicialComplex:
    return SimplicialComplex([i] for i in range(n))


def generalized_petersen(n: int, k: int) -> SimplicialComplex:
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return SimplicialComplex(edges)


def petersen() -> SimplicialComplex:
    return generalized_petersen(5, 2)


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    return join(K, discrete(2))


def bipyramid(n: int) -> SimplicialComplex:
    """Suspension of the ``n``-cycle; equator ``0..n-1``, apices ``n`` and ``n+1``."""
    return suspension(cycle(n))


def icosahedron() -> SimplicialComplex:
    """Boundary of the icosahedron: poles 0 and 11, rings 1..5 and 6..10."""
    tri = []
    for i in range(5):
        a, b = 1 + i, 1 + (i + 1) % 5
        c, e = 6 + i, 6 + (i + 1) % 5
        tri += [(0, a, b), (a, b, c), (b, c, e), (11, c, e)]
    return SimplicialComplex(tri)


def cube_graph() -> SimplicialComplex:
    return SimplicialComplex(
        (i, i ^ (1 << b)) for i in range(8) for b in range(3) if i < i ^ (1 << b))


def dodecahedron_graph() -> SimplicialComplex:
    return generalized_petersen(10, 2)


def platonic_graphs() -> dict[str, SimplicialComplex]:
    return {
        "tetrahedron": complete_graph(4),
        "cube": cube_graph(),
        "octahedron": octahedron().skeleton(1),
        "dodecahedron": dodecahedron_graph(),
        "icosahedron": icosahedron().skeleton(1),
    }


def torus_7() -> SimplicialComplex:
    """Seven-vertex torus: triangles ``{i, i+1, i+3}`` and ``{i, i+2, i+3}`` mod 7."""
    tri = []
    for i in range(7):
        tri.append((i, (i + 1) % 7, (i + 3) % 7))
        tri.append((i, (i + 2) % 7, (i + 3) % 7))
    return SimplicialComplex(tri)


def rp2_6() -> SimplicialComplex:
    """Six-vertex real projective plane (a non-sphere 2-manifold containing a Möbius band)."""
    return SimplicialComplex([
        (0, 1, 3), (0, 1, 5), (0, 2, 4), (0, 2, 5), (0, 3, 4),
        (1, 2, 3), (1, 2, 4), (1, 4, 5), (2, 3, 5), (3, 4, 5)])


def vertex_split(S: SimplicialComplex, v: int, a: int, b: int,
                 new_vertex: int | None = None) -> SimplicialComplex:
    """Split vertex ``v`` of a 2-sphere along the link vertices ``a`` and ``b``.

    The link cycle of ``v`` is cut at ``a`` and ``b``; the new vertex takes
    one arc and ``v`` keeps the other, and both become adjacent to ``a`` and
    ``b``.  This inverts an edge contraction satisfying the link condition.
    """
    if new_vertex is None:
        new_vertex = max(S.vertices) + 1
    ring = _link_cycle(S.link((v,)))
    if a not in ring or b not in ring or a == b:
        raise ValueError("a and b must be distinct link vertices")
    i = ring.index(a)
    ring = ring[i:] + ring[:i]
    j = ring.index(b)
    arc_v, arc_w = ring[:j + 1], ring[j:] + [a]
    facets = [f for f in S.facet_set if v not in f]
    facets += [(v, x, y) for x, y in zip(arc_v, arc_v[1:])]
    facets += [(new_vertex, x, y) for x, y in zip(arc_w, arc_w[1:])]
    facets += [(v, new_vertex, a), (v, new_vertex, b)]
    return SimplicialComplex(facets)


def _link_cycle(L: SimplicialComplex) -> list:
    adj: dict = {}
    for x, y in L.facet_set:
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)
    start = min(adj)
    ring, prev = [start], None
    while True:
        nxt = [w for w in adj[ring[-1]] if w != prev][0] if prev is not None else adj[start][0]
        if nxt == start:
            return ring
        prev = ring[-1]
        ring.append(nxt)


def two_spheres(n: int) -> list[SimplicialComplex]:
    """All combinatorial 2-spheres with ``n >= 4`` vertices, one per isomorphism class.

    Every such sphere other than the tetrahedron boundary has an edge whose
    contraction keeps it a sphere, so all arise from the tetrahedron by vertex
    splits.  Classes are separated by canonical form.
    """
    if n < 4:
        raise ValueError("a 2-sphere needs at least 4 vertices")
    level = {canonical_form(simplex_boundary(3)): simplex_boundary(3)}
    for _ in range(n - 4):
        nxt = {}
        for S in level.values():
            for v in S.vertices:
                ring = _link_cycle(S.link((v,)))
                for i, a in enumerate(ring):
                    for b in ring[i + 1:]:
                        T = vertex_split(S, v, a, b)
                        nxt.setdefault(canonical_form(T), T)
        level = nxt
    return [level[k] for k in sorted(level)]


def cycle_bipyramid_join() -> SimplicialComplex:
    """``skel_2(K1 * K2) ∪ {T}`` with ``K1`` a 3-cycle on 0,1,2 and ``K2`` the
    triangle bipyramid on 3..7 (equator 3,4,5).  ``T = 345`` is the missing
    equator triangle."""
    K1 = cycle(3)
    K2 = bipyramid(3).relabel(lambda v: v + 3)
    K = join(K1, K2).skeleton(2)
    return SimplicialComplex(list(K.facet_set) + [(3, 4, 5)])


def stellar_subdivision(K: SimplicialComplex, face, new_vertex: int | None = None) -> SimplicialComplex:
    """Stellar subdivision of ``K`` at ``face`` (dimension >= 1)."""
    F = tuple(sorted(face))
    if len(F) < 2 or F not in K.face_set:
        raise ValueError("need a face of dimension >= 1")
    if new_vertex is None:
        new_vertex = max(K.vertices) + 1
    fs = set(F)
    facets = []
    for g in K.facet_set:
        if fs.issubset(g):
            for x in F:
                facets.append(tuple(v for v in g if v != x) + (new_vertex,))
        else:
            facets.append(g)
    return SimplicialComplex(facets)


def random_stellar_sphere(d: int, steps: int, rng: random.Random,
                          edges_only: bool = False) -> SimplicialComplex:
    """Start from the boundary of the ``(d+1)``-simplex and subdivide at random faces."""
    S = simplex_boundary(d + 1)
    for _ in range(steps):
        if edges_only:
            pool = S.faces(1)
        else:
            pool = [f for k in range(1, d + 1) for f in S.faces(k)]
        S = stellar_subdivision(S, rng.choice(pool))
    return S


def random_complex(rng: random.Random, max_vertices: int = 7, max_dim: int = 3,
                   max_facets: int = 8) -> SimplicialComplex:
    """A random complex on at most ``max_vertices`` vertices with dimension at most ``max_dim``."""
    n = rng.randint(2, max_vertices)
    k = rng.randint(1, max_facets)
    facets = []
    for _ in range(k):
        size = rng.randint(1, min(max_dim + 1, n))
        facets.append(rng.sample(range(n), size))
    return SimplicialComplex(facets)


def random_flag_complex(rng: random.Random, n: int, p: float, max_dim: int = 3) -> SimplicialComplex:
    """Clique complex of a random graph, truncated at ``max_dim``."""
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    faces = [(v,) for v in range(n)]
    frontier = list(faces)
    for _ in range(max_dim):
        nxt = []
        for f in frontier:
            common = set.intersection(*(adj[v] for v in f))
            nxt += [f + (w,) for w in common if w > f[-1]]
        faces += nxt
        frontier = nxt
    return SimplicialComplex(faces)


GENERATORS = {
    "simplex": ("d",),
    "simplex_boundary": ("d",),
    "hd": ("d",),
    "cross_polytope_boundary": ("d",),
    "cyclic": ("d", "n"),
    "split_h3": (),
    "cycle_bipyramid_join": (),
    "complete_graph": ("n",),
    "complete_bipartite": ("a", "b"),
    "cycle": ("n",),
    "path": ("n",),
    "petersen": (),
    "octahedron": (),
    "icosahedron": (),
    "torus_7": (),
    "rp2_6": (),
    "bipyramid": ("n",),
}


def generate(name: str, **params) -> SimplicialComplex:
    """Build a named complex; see ``GENERATORS`` for names and parameters."""
    funcs = {
        "simplex": simplex,
        "simplex_boundary": simplex_boundary,
        "hd": hd,
        "cross_polytope_boundary": cross_polytope_boundary,
        "cyclic": cyclic_boundary,
        "split_h3": split_h3,
        "cycle_bipyramid_join": cycle_bipyramid_join,
        "complete_graph": complete_graph,
        "complete_bipartite": complete_bipartite,
        "cycle": cycle,
        "path": path,
        "petersen": petersen,
        "octahedron": octahedron,
        "icosahedron": icosahedron,
        "torus_7": torus_7,
        "rp2_6": rp2_6,
        "bipyramid": bipyramid,
    }
    if name not in funcs:
        raise ValueError(f"unknown generator {name!r}")
    wanted = GENERATORS[name]
    missing = [p for p in wanted if params.get(p) is None]
    if missing:
        raise ValueError(f"{name} needs parameters {', '.join(missing)}")
    args = [int(params[p]) for p in wanted]
    return funcs[name](*args)


__all__ = [
    "simplex", "simplex_boundary", "hd", "cross_polytope_boundary", "octahedron",
    "cyclic_boundary", "gale_evenness", "split_h3", "cycle_bipyramid_join", "cycle", "path",
    "complete_graph", "complete_bipartite", "discrete", "petersen", "bipyramid",
    "icosahedron", "cube_graph", "dodecahedron_graph", "platonic_graphs", "torus_7",
    "rp2_6", "vertex_split", "two_spheres",
    "stellar_subdivision", "random_stellar_sphere", "random_complex",
    "random_flag_complex", "generate",
]
