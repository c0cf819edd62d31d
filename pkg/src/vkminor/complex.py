"""Finite abstract simplicial complexes stored by their facets.

Vertices are nonnegative integers.  A face is a strictly increasing tuple of
vertices; the empty tuple is the empty face and belongs to every nonempty
complex.  The *void* complex has no faces at all, while ``{∅}`` has only the
empty face.  Both have dimension -1.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from numbers import Integral
from typing import Iterable, Iterator

Face = tuple


def _as_face(vertices: Iterable) -> Face:
    face = []
    for v in vertices:
        if isinstance(v, bool) or not isinstance(v, Integral):
            raise ValueError(f"vertex ids must be integers, got {v!r}")
        if v < 0:
            raise ValueError(f"vertex ids must be nonnegative, got {v}")
        face.append(int(v))
    out = tuple(sorted(set(face)))
    if len(out) != len(face):
        raise ValueError(f"duplicate vertex in face {face}")
    return out


def _maximal(faces: Iterable[Face]) -> frozenset:
    """Inclusion-maximal members of a family of faces."""
    by_size = sorted(set(faces), key=len, reverse=True)
    kept: list[frozenset] = []
    out = []
    for f in by_size:
        fs = frozenset(f)
        if any(fs <= k for k in kept if len(k) > len(fs)):
            continue
        kept.append(fs)
        out.append(f)
    return frozenset(out)


class SimplicialComplex:
    """An immutable simplicial complex.

    The face index (all faces, grouped by dimension) is built from the
    facets on first use and cached.  Building it twice yields the same value,
    so concurrent first access is harmless.
    """

    __slots__ = ("_facets", "_faces", "_by_dim", "_vertices", "_hash")

    def __init__(self, facets: Iterable[Iterable[int]] = ()):
        self._facets = _maximal(_as_face(f) for f in facets)
        self._faces = None
        self._by_dim = None
        self._vertices = None
        self._hash = None

    @classmethod
    def _from_face_set(cls, faces: set) -> "SimplicialComplex":
        """Build from a downward-closed set of faces, skipping validation."""
        K = cls.__new__(cls)
        faces = frozenset(faces)
        nonmax = set()
        for f in faces:
            if len(f) > 0:
                for i in range(len(f)):
                    nonmax.add(f[:i] + f[i + 1:])
        K._facets = frozenset(f for f in faces if f not in nonmax)
        K._faces = faces
        K._by_dim = None
        K._vertices = None
        K._hash = None
        return K

    # -- basic structure -------------------------------------------------

    @property
    def facets(self) -> list[Face]:
        return sorted(self._facets)

    @property
    def facet_set(self) -> frozenset:
        return self._facets

    @property
    def face_set(self) -> frozenset:
        if self._faces is None:
            faces = set()
            for f in self._facets:
                for k in range(len(f) + 1):
                    faces.update(combinations(f, k))
            self._faces = frozenset(faces)
        return self._faces

    def faces(self, dim: int | None = None) -> list[Face]:
        """All faces of dimension ``dim`` (or all faces), sorted."""
        if self._by_dim is None:
            by_dim: dict[int, list] = {}
            for f in self.face_set:
                by_dim.setdefault(len(f) - 1, []).append(f)
            self._by_dim = {d: sorted(fs) for d, fs in by_dim.items()}
        if dim is None:
            return [f for d in sorted(self._by_dim) for f in self._by_dim[d]]
        return list(self._by_dim.get(dim, ()))

    @property
    def vertices(self) -> tuple:
        if self._vertices is None:
            self._vertices = tuple(sorted({v for f in self._facets for v in f}))
        return self._vertices

    @property
    def dim(self) -> int:
        return max((len(f) - 1 for f in self._facets), default=-1)

    def is_void(self) -> bool:
        return not self._facets

    def is_pure(self) -> bool:
        return len({len(f) for f in self._facets}) <= 1

    def f_vector(self) -> list[int]:
        """``[f_-1, f_0, ..., f_dim]``; the void complex gives ``[]``."""
        if self.is_void():
            return []
        counts = [0] * (self.dim + 2)
        for f in self.face_set:
            counts[len(f)] += 1
        return counts

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self.face_set

    def __iter__(self) -> Iterator[Face]:
        return iter(self.faces())

    def __len__(self) -> int:
        return len(self.face_set)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._facets)
        return self._hash

    def __repr__(self) -> str:
        if len(self._facets) <= 8:
            return f"SimplicialComplex({[list(f) for f in self.facets]})"
        return (f"SimplicialComplex(<{len(self.vertices)} vertices, "
                f"{len(self._facets)} facets, dim {self.dim}>)")

    # -- derived complexes -----------------------------------------------

    def skeleton(self, m: int) -> "SimplicialComplex":
        """Faces of dimension at most ``m``.

        ``m = -1`` gives ``{∅}`` and any ``m < -1`` gives the void complex.
        """
        if m < -1 or self.is_void():
            return SimplicialComplex()
        if m >= self.dim:
            return self
        return SimplicialComplex._from_face_set(
            {f for f in self.face_set if len(f) <= m + 1})

    def link(self, face) -> "SimplicialComplex":
        """``lk(F, K) = {T in K : T ∩ F = ∅, T ∪ F in K}``."""
        F = tuple(sorted(face))
        if F not in self.face_set:
            raise ValueError(f"{F} is not a face of the complex")
        return self._link(F)

    def _link(self, F: Face) -> "SimplicialComplex":
        fs = set(F)
        rest = []
        for g in self._facets:
            if fs.issubset(g):
                rest.append(tuple(v for v in g if v not in fs))
        return SimplicialComplex._from_closure(rest)

    @classmethod
    def _from_closure(cls, facets: Iterable[Face]) -> "SimplicialComplex":
        K = cls.__new__(cls)
        K._facets = _maximal(facets)
        K._faces = None
        K._by_dim = None
        K._vertices = None
        K._hash = None
        return K

    def star(self, v: int) -> "SimplicialComplex":
        """Closed star ``{T in K : T ∪ {v} in K}``."""
        self._check_vertex(v)
        return SimplicialComplex._from_closure(g for g in self._facets if v in g)

    def antistar(self, v: int) -> "SimplicialComplex":
        """``{T in K : v not in T}``, i.e. ``K`` with vertex ``v`` deleted."""
        self._check_vertex(v)
        return SimplicialComplex._from_face_set(
            {f for f in self.face_set if v not in f})

    def delete_vertex(self, v: int) -> "SimplicialComplex":
        return self.antistar(v)

    def remove_facet(self, facet) -> "SimplicialComplex":
        """Delete one facet, keeping all of its proper faces."""
        F = tuple(sorted(facet))
        if F not in self._facets:
            raise ValueError(f"{F} is not a facet")
        faces = set(self.face_set)
        faces.discard(F)
        if not F:
            return SimplicialComplex()
        return SimplicialComplex._from_face_set(faces)

    def induced(self, vertices: Iterable[int]) -> "SimplicialComplex":
        vs = set(vertices)
        return SimplicialComplex._from_face_set(
            {f for f in self.face_set if vs.issuperset(f)})

    def relabel(self, mapping) -> "SimplicialComplex":
        """Image under an injective vertex map (dict or callable)."""
        get = mapping.__getitem__ if hasattr(mapping, "__getitem__") else mapping
        images = {v: get(v) for v in self.vertices}
        if len(set(images.values())) != len(images):
            raise ValueError("relabeling must be injective")
        return SimplicialComplex(tuple(images[v] for v in f) for f in self._facets)

    def normalized(self) -> tuple["SimplicialComplex", tuple]:
        """Relabel vertices to ``0..n-1``; returns the complex and old ids."""
        old = self.vertices
        return self.relabel({v: i for i, v in enumerate(old)}), old

    def _check_vertex(self, v: int) -> None:
        if (v,) not in self.face_set:
            raise ValueError(f"unknown vertex {v}")


def from_facets(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Normalized complex generated by ``facets``; dominated faces are dropped."""
    return SimplicialComplex(facets)


def intersection(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex._from_face_set(K1.face_set & K2.face_set)


def union(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(list(K1.facet_set) + list(K2.facet_set))


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """``{S ⊎ T : S in K1, T in K2}``.

    If the vertex sets overlap, ``K2`` is shifted past the largest vertex of
    ``K1`` first.
    """
    if set(K1.vertices) & set(K2.vertices):
        shift = max(K1.vertices) + 1
        K2 = K2.relabel(lambda v: v + shift)
    return SimplicialComplex(a + b for a in K1.facet_set for b in K2.facet_set)


def cone(K: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    if apex is None:
        apex = max(K.vertices, default=-1) + 1
    return join(SimplicialComplex([[apex]]), K)


def missing_faces(K: SimplicialComplex, max_dim: int) -> list[Face]:
    """Minimal non-faces of dimension at most ``max_dim`` on the vertices of ``K``.

    A set is a missing face when it is not in ``K`` but all of its proper
    subsets are.
    """
    faces = K.face_set
    verts = K.vertices
    out = []
    # candidates of size k+1 extend a (k)-face by a larger vertex
    for k in range(1, max_dim + 1):
        for f in K.faces(k - 1):
            last = f[-1] if f else -1
            for w in verts:
                if w <= last:
                    continue
                cand = f + (w,)
                if cand in faces:
                    continue
                if all(cand[:i] + cand[i + 1:] in faces for i in range(len(cand) - 1)):
                    out.append(cand)
    return sorted(out)


def missing_faces_containing(K: SimplicialComplex, pair, max_dim: int) -> list[Face]:
    """Missing faces of dimension at most ``max_dim`` that contain every vertex of ``pair``.

    Any such set ``R ∪ pair`` must have ``R`` in the link of each vertex of
    ``pair`` minus the others, so only those ``R`` are tried; missingness is
    then checked literally.
    """
    pair = tuple(sorted(pair))
    faces = K.face_set
    common = None
    for p in pair:
        others = set(pair) - {p}
        lk = {tuple(v for v in f if v != p) for f in faces if p in f}
        lk = {f for f in lk if not others.intersection(f)}
        common = lk if common is None else common & lk
    out = []
    for R in common or ():
        cand = tuple(sorted(R + pair))
        if len(cand) - 1 > max_dim or cand in faces:
            continue
        if all(cand[:i] + cand[i + 1:] in faces for i in range(len(cand))):
            out.append(cand)
    return sorted(out)


def h_from_f(f: list[int], d: int | None = None) -> list[int]:
    """h-vector ``(h_0..h_d)`` from ``f = (f_-1, ..., f_{d-1})``.

    Uses ``sum_i h_i t^i = sum_i f_{i-1} t^i (1-t)^(d-i)``.  ``d`` defaults to
    ``len(f) - 1``; shorter ``f`` is padded with zeros.
    """
    if d is None:
        d = len(f) - 1
    f = list(f) + [0] * (d + 1 - len(f))
    h = [0] * (d + 1)
    for i in range(d + 1):
        # coefficient of t^k in t^i (1-t)^(d-i)
        for j in range(d - i + 1):
            h[i + j] += f[i] * _binom(d - i, j) * (-1) ** j
    return h


def f_from_h(h: list[int]) -> list[int]:
    """Inverse of :func:`h_from_f`: ``f_{i-1} = sum_{j<=i} C(d-j, i-j) h_j``."""
    d = len(h) - 1
    return [sum(_binom(d - j, i - j) * h[j] for j in range(i + 1)) for i in range(d + 1)]


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


class FVector:
    """f-, h- and g-vectors of a complex."""

    __slots__ = ("f", "h", "g")

    def __init__(self, f: list[int]):
        self.f = list(f)
        self.h = h_from_f(self.f) if self.f else []
        d = len(self.f) - 1
        if self.h:
            self.g = [self.h[0]] + [self.h[i] - self.h[i - 1] for i in range(1, d // 2 + 1)]
        else:
            self.g = []

    def __repr__(self) -> str:
        return f"FVector(f={self.f}, h={self.h}, g={self.g})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FVector) and self.f == other.f


def f_h_g(K: SimplicialComplex) -> FVector:
    """f/h/g-vectors; ``{∅}`` gives ``f = h = (1)`` and the void complex gives empty vectors."""
    return FVector(K.f_vector())
