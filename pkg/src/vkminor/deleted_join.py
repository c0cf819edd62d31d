"""Deleted joins over GF(2) and the Smith characteristic classes.

A cell ``S¹⊎T²`` of the deleted join is stored as the pair ``(S, T)`` of
disjoint sorted faces, not both empty, of dimension ``|S| + |T| - 1``.  The
involution swaps the two copies.  Symmetric cochains live in orbit
coordinates (see :mod:`vkminor.equivariant`); the orbit representative is the
lexicographically smaller of ``(S, T)`` and ``(T, S)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import SimplicialComplex
from .equivariant import SYMMETRIC, FreeZ2Complex
from .linalg import Gf2Matrix, IntMatrix, gf2_rank, z_rank
from .minors import (ContractionStep, DeleteFacet, DeleteVertex, InadmissibleContraction,
                     apply_step, is_admissible)


def _drop(face: tuple, i: int) -> tuple:
    return face[:i] + face[i + 1:]


def join_cells(K: SimplicialComplex) -> dict[int, list]:
    """All pairs of disjoint faces of ``K`` (not both empty), grouped by dimension."""
    faces = K.faces()
    cells: dict[int, list] = {}
    for S in faces:
        s = set(S)
        for T in faces:
            if not S and not T:
                continue
            if s.isdisjoint(T):
                cells.setdefault(len(S) + len(T) - 1, []).append((S, T))
    return cells


class DeletedJoin(FreeZ2Complex):
    """The deleted join of ``base`` as a free Z2-complex.

    With ``signed=False`` (the default) everything is over GF(2).  With
    ``signed=True`` the chain complex is over the integers, oriented with
    every first-copy vertex before every second-copy vertex, so that
    ``∂(S*T) = ∂S*T + (-1)^{|S|} S*∂T`` and ``τ(S*T) = (-1)^{|S||T|} T*S``.
    """

    def __init__(self, base: SimplicialComplex, signed: bool = False,
                 flip_representatives: bool = False):
        if base.is_void():
            raise ValueError("the deleted join needs a nonempty complex")
        self.base = base
        self.signed = signed

        def boundary_of(cell):
            S, T = cell
            out = []
            for i in range(len(S)):
                face = (_drop(S, i), T)
                if face[0] or face[1]:
                    out.append((face, (-1) ** i))
            for j in range(len(T)):
                face = (S, _drop(T, j))
                if face[0] or face[1]:
                    out.append((face, (-1) ** (len(S) + j)))
            return out

        def tau_of(cell):
            S, T = cell
            return (T, S), (-1) ** (len(S) * len(T))

        super().__init__(join_cells(base), boundary_of, tau_of,
                         modulus=None if signed else 2,
                         flip_representatives=flip_representatives)

    def representatives(self, q: int) -> list:
        return [self.cells[q][rep] for rep, _, _ in self.orbits.get(q, ())]


def deleted_join(K: SimplicialComplex, flip_representatives: bool = False) -> DeletedJoin:
    """The GF(2) deleted join of ``K``."""
    return DeletedJoin(K, flip_representatives=flip_representatives)


@dataclass
class SymmetricCochain:
    """A symmetric GF(2) cochain given by its value on each orbit representative."""

    dim: int
    coefficients: list[int]

    def support(self, J: DeletedJoin) -> list:
        reps = J.representatives(self.dim)
        return [reps[o] for o, c in enumerate(self.coefficients) if c % 2]

    def is_zero(self) -> bool:
        return not any(c % 2 for c in self.coefficients)


def _cells_json(cells) -> list:
    return [[list(S), list(T)] for S, T in cells]


def fundamental_cocycle(J: DeletedJoin) -> SymmetricCochain:
    """The constant 0-cochain 1 on every vertex of the deleted join."""
    c = SymmetricCochain(0, [1] * J.n_orbits(0))
    if not J.is_cocycle(0, c.coefficients, SYMMETRIC):
        raise AssertionError("the fundamental cochain is not a cocycle")
    return c


class NotACocycle(ValueError):
    pass


def smith_step(J: DeletedJoin, c: SymmetricCochain, lift: str = "rep") -> SymmetricCochain:
    """The connecting homomorphism on a symmetric cocycle.

    The coefficient of each orbit is placed on one of its cells only (the
    representative for ``lift="rep"``, the other cell for ``lift="partner"``),
    so that ``(id + τ)`` of the lift is ``c``.  The full coboundary of the lift
    is symmetric and is read off at the representatives.
    """
    if lift not in ("rep", "partner"):
        raise ValueError("lift must be 'rep' or 'partner'")
    q = c.dim
    if not J.is_cocycle(q, c.coefficients, SYMMETRIC):
        raise NotACocycle(f"the {q}-cochain is not a symmetric cocycle")
    full = [0] * J.n_cells(q)
    for o, (rep, partner, _) in enumerate(J.orbits.get(q, ())):
        full[rep if lift == "rep" else partner] = c.coefficients[o] % 2
    values = J.full_coboundary(q, full)
    out = J.restrict(q + 1, values, SYMMETRIC)
    if out is None:
        raise AssertionError("coboundary of the lift is not symmetric")
    return SymmetricCochain(q + 1, out)


@dataclass
class SmithClassReport:
    m: int
    representative: SymmetricCochain
    vanishes: bool
    witness: SymmetricCochain | None = None
    join: DeletedJoin | None = field(default=None, repr=False)

    def to_json(self, name=None) -> dict:
        J = self.join
        return {
            "complex": name if name is not None else [list(f) for f in J.base.facets],
            "m": self.m,
            "vanishes": self.vanishes,
            "representative_support": _cells_json(self.representative.support(J)),
            "witness_support": None if self.witness is None
            else _cells_json(self.witness.support(J)),
        }


def smith_representative(J: DeletedJoin, m: int, lift: str = "rep") -> SymmetricCochain:
    if m < 0:
        raise ValueError("m must be >= 0")
    c = fundamental_cocycle(J)
    for _ in range(m):
        c = smith_step(J, c, lift)
    return c


def decide_vanishing(J: DeletedJoin, c: SymmetricCochain) -> SymmetricCochain | None:
    """A symmetric ``x`` with ``δx = c``, or ``None`` if the class of ``c`` is nonzero."""
    x = J.solve_coboundary(c.dim, c.coefficients, SYMMETRIC)
    return None if x is None else SymmetricCochain(c.dim - 1, x)


def smith_class(K: SimplicialComplex, m: int, lift: str = "rep",
                J: DeletedJoin | None = None) -> SmithClassReport:
    """The ``m``-th Smith class of the deleted join of ``K`` and whether it vanishes."""
    if J is None:
        J = deleted_join(K)
    rep = smith_representative(J, m, lift)
    witness = decide_vanishing(J, rep)
    if witness is not None:
        check = J.apply_coboundary(witness.dim, witness.coefficients, SYMMETRIC) \
            if witness.dim >= 0 else []
        if rep.dim > 0 and check != [c % 2 for c in rep.coefficients]:
            raise AssertionError("witness does not reproduce the representative")
    return SmithClassReport(m, rep, witness is not None, witness, J)


# ----------------------------------------------------------------------
# the contraction chain map


class ChainMap:
    """A chain map ``C(K') → C(K)`` given face by face.

    ``images[F]`` maps a face of ``K'`` to ``{face of K: coefficient}``; faces
    are sorted tuples oriented by increasing label.  ``modulus`` is 2 over
    GF(2) and ``None`` over the integers.  The empty face maps to itself.
    """

    def __init__(self, source: SimplicialComplex, target: SimplicialComplex,
                 images: dict, modulus: int | None):
        self.source = source
        self.target = target
        self.images = images
        self.modulus = modulus

    def _reduce(self, x):
        return x % self.modulus if self.modulus else x

    def __call__(self, face) -> dict:
        return self.images[tuple(face)]

    def matrix(self, q: int) -> list[list[int]]:
        """Rows indexed by the ``q``-faces of the target, columns by those of the source."""
        rows = self.target.faces(q)
        cols = self.source.faces(q)
        where = {f: i for i, f in enumerate(rows)}
        M = [[0] * len(cols) for _ in rows]
        for j, F in enumerate(cols):
            for G, a in self.images[F].items():
                M[where[G]][j] = self._reduce(a)
        return M

    def is_chain_map(self) -> bool:
        for F in self.source.face_set:
            if len(F) < 2:
                continue
            lhs = _boundary_of_chain(self.images[F], self.modulus)
            rhs: dict = {}
            for i in range(len(F)):
                for G, a in self.images[_drop(F, i)].items():
                    rhs[G] = self._reduce(rhs.get(G, 0) + (-1) ** i * a)
            if _clean(lhs) != _clean(rhs):
                return False
        return True

    def is_injective(self) -> bool:
        for q in range(self.source.dim + 1):
            M = self.matrix(q)
            n = len(self.source.faces(q))
            if self.modulus == 2:
                rank = gf2_rank(Gf2Matrix.from_dense(M, n)) if M else 0
            else:
                rank = z_rank(IntMatrix(M, n)) if M else 0
            if rank != n:
                return False
        return True

    def mod2(self) -> "ChainMap":
        images = {F: _clean({G: a % 2 for G, a in img.items()}) for F, img in self.images.items()}
        return ChainMap(self.source, self.target, images, 2)


def _clean(chain: dict) -> dict:
    return {k: v for k, v in chain.items() if v}


def _boundary_of_chain(chain: dict, modulus) -> dict:
    out: dict = {}
    for F, a in chain.items():
        if len(F) < 2:
            continue
        for i in range(len(F)):
            G = _drop(F, i)
            out[G] = out.get(G, 0) + (-1) ** i * a
    if modulus:
        out = {k: v % modulus for k, v in out.items()}
    return out


def _check_step(K: SimplicialComplex, step: ContractionStep) -> None:
    if not isinstance(step, ContractionStep):
        raise TypeError("a contraction step is required")
    if not is_admissible(K, step.deleted, step.kept):
        raise InadmissibleContraction(
            f"contraction {step.deleted}->{step.kept} is not admissible")


def contraction_chain_map(K: SimplicialComplex, step: ContractionStep,
                          K_prime: SimplicialComplex | None = None) -> ChainMap:
    """The injective GF(2) chain map ``C(K') → C(K)`` of an admissible contraction.

    A face of ``K'`` already in ``K`` maps to itself; otherwise ``F`` maps to
    the sum of ``(F - v) ∪ v0`` over the ``v ∈ F`` for which that set is a face
    of ``K``, where ``v0`` is the deleted vertex.
    """
    _check_step(K, step)
    if K_prime is None:
        K_prime = apply_step(K, step)
    v0 = step.deleted
    faces = K.face_set
    images = {}
    for F in K_prime.face_set:
        if F in faces:
            images[F] = {F: 1}
            continue
        img = {}
        for v in F:
            G = tuple(sorted([w for w in F if w != v] + [v0]))
            if G in faces:
                img[G] = 1
        images[F] = img
    return ChainMap(K_prime, K, images, 2)


def observation_holds(K: SimplicialComplex, step: ContractionStep) -> bool:
    """For ``F ∈ K' - K`` and ``v ∈ F``: ``F - v ∈ K`` iff ``(F - v) ∪ v0 ∈ K``."""
    _check_step(K, step)
    K_prime = apply_step(K, step)
    v0 = step.deleted
    faces = K.face_set
    for F in K_prime.face_set - faces:
        for v in F:
            rest = tuple(w for w in F if w != v)
            if (rest in faces) != (tuple(sorted(rest + (v0,))) in faces):
                return False
    return True


class JoinMap:
    """The map ``S¹⊎T² ↦ φ(S)⊗φ(T)`` between deleted joins (over GF(2))."""

    def __init__(self, phi: ChainMap, source: DeletedJoin, target: DeletedJoin):
        self.phi = phi
        self.source = source
        self.target = target
        self.images: dict[int, list[list[int]]] = {}
        self.lands_in_deleted_join = True
        for q in source.dims:
            col = []
            for S, T in source.cells[q]:
                terms = set()
                for S1 in phi(S):
                    for T1 in phi(T):
                        idx = target.index.get(q, {}).get((S1, T1))
                        if idx is None:
                            self.lands_in_deleted_join = False
                            continue
                        terms ^= {idx}
                col.append(sorted(terms))
            self.images[q] = col

    def is_equivariant(self) -> bool:
        for q, col in self.images.items():
            for i, img in enumerate(col):
                j = self.source.tau[q][i][0]
                swapped = sorted(self.target.tau[q][k][0] for k in img)
                if swapped != col[j]:
                    return False
        return True

    def is_chain_map(self) -> bool:
        src, tgt = self.source, self.target
        for q in src.dims:
            if q == 0:
                continue
            for i, img in enumerate(self.images[q]):
                lhs: set = set()
                for k in img:
                    for j, _ in tgt.boundary[q][k]:
                        lhs ^= {j}
                rhs: set = set()
                for j, _ in src.boundary[q][i]:
                    rhs ^= set(self.images[q - 1][j])
                if lhs != rhs:
                    return False
        return True

    def pullback(self, q: int, c: SymmetricCochain) -> SymmetricCochain:
        """``φ*c`` for a symmetric cochain ``c`` on the target."""
        full = self.target.expand(q, c.coefficients, SYMMETRIC)
        values = [sum(full[k] for k in img) % 2 for img in self.images.get(q, ())]
        out = self.source.restrict(q, values, SYMMETRIC)
        if out is None:
            raise AssertionError("pullback of a symmetric cochain is not symmetric")
        return SymmetricCochain(q, out)


def _inclusion_map(K: SimplicialComplex, K_prime: SimplicialComplex) -> ChainMap:
    return ChainMap(K_prime, K, {F: {F: 1} for F in K_prime.face_set}, 2)


def induced_join_map(phi: ChainMap, source: DeletedJoin | None = None,
                     target: DeletedJoin | None = None) -> JoinMap:
    """Extend a GF(2) chain map ``C(K') → C(K)`` to the deleted joins."""
    if source is None:
        source = deleted_join(phi.source)
    if target is None:
        target = deleted_join(phi.target)
    return JoinMap(phi, source, target)


def step_chain_map(K: SimplicialComplex, step) -> ChainMap:
    """The GF(2) chain map of a contraction, or the inclusion of a deletion."""
    if isinstance(step, ContractionStep):
        return contraction_chain_map(K, step)
    if isinstance(step, (DeleteVertex, DeleteFacet)):
        return _inclusion_map(K, apply_step(K, step))
    raise TypeError(f"not a step: {step!r}")


def smith_pullback_check(K: SimplicialComplex, step, m: int) -> bool:
    """``φ*`` of the ``m``-th Smith class of ``K`` equals that of ``K'``.

    The pullback of the representative for ``K`` and the representative for
    ``K'`` are compared in the symmetric complex of ``K'``: their difference
    must be a symmetric coboundary.
    """
    phi = step_chain_map(K, step)
    jm = induced_join_map(phi)
    if not jm.lands_in_deleted_join:
        return False
    J, Jp = jm.target, jm.source
    rep_K = smith_representative(J, m)
    rep_Kp = smith_representative(Jp, m)
    pulled = jm.pullback(m, rep_K)
    diff = [(a + b) % 2 for a, b in zip(pulled.coefficients, rep_Kp.coefficients)]
    return Jp.solve_coboundary(m, diff, SYMMETRIC) is not None


def symmetrizer_surjective(J: DeletedJoin) -> bool:
    """``id + τ`` maps all cochains onto the symmetric ones in every dimension."""
    return all(J.symmetrizer_rank_full(q) for q in J.dims)
