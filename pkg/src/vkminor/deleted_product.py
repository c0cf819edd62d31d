"""Deleted products over the integers and the Van Kampen obstruction.

A cell ``S×T`` is the pair ``(S, T)`` of nonempty disjoint faces, each
oriented by increasing label, of dimension ``dim S + dim T``.  The boundary is
``∂(S×T) = ∂S×T + (-1)^{dim S} S×∂T`` and the involution is
``τ(S×T) = (-1)^{dim S·dim T} T×S``.  The obstruction class in degree ``m``
lives in the symmetric complex for even ``m`` and in the antisymmetric one
for odd ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .complex import SimplicialComplex
from .deleted_join import ChainMap, DeletedJoin, _check_step
from .equivariant import ANTISYMMETRIC, SYMMETRIC, FreeZ2Complex, parity_name
from .minors import ContractionStep, DeleteFacet, DeleteVertex, apply_step


def _drop(face: tuple, i: int) -> tuple:
    return face[:i] + face[i + 1:]


def product_cells(K: SimplicialComplex) -> dict[int, list]:
    faces = [f for f in K.faces() if f]
    cells: dict[int, list] = {}
    for S in faces:
        s = set(S)
        for T in faces:
            if s.isdisjoint(T):
                cells.setdefault(len(S) + len(T) - 2, []).append((S, T))
    return cells


class DeletedProduct(FreeZ2Complex):
    """The deleted product of ``base`` with its signed boundary and involution."""

    def __init__(self, base: SimplicialComplex, flip_representatives: bool = False,
                 check: bool = True):
        if len(base.vertices) < 2:
            raise ValueError("the deleted product needs at least two vertices")
        self.base = base

        def boundary_of(cell):
            S, T = cell
            out = []
            if len(S) > 1:
                out += [((_drop(S, i), T), (-1) ** i) for i in range(len(S))]
            if len(T) > 1:
                sign = (-1) ** (len(S) - 1)
                out += [((S, _drop(T, j)), sign * (-1) ** j) for j in range(len(T))]
            return out

        def tau_of(cell):
            S, T = cell
            return (T, S), (-1) ** ((len(S) - 1) * (len(T) - 1))

        super().__init__(product_cells(base), boundary_of, tau_of,
                         flip_representatives=flip_representatives)
        if check:
            if not self.check_boundary_squared():
                raise AssertionError("boundary does not square to zero")
            if not self.check_tau():
                raise AssertionError("involution is not a signed chain involution")


def deleted_product(K: SimplicialComplex, flip_representatives: bool = False) -> DeletedProduct:
    return DeletedProduct(K, flip_representatives=flip_representatives)


def vk_parity(m: int) -> int:
    return SYMMETRIC if m % 2 == 0 else ANTISYMMETRIC


@dataclass
class EquivariantCochain:
    """Integer coefficients on orbit generators of a given parity."""

    parity: int
    dim: int
    coefficients: list[int]

    def support(self, P: FreeZ2Complex) -> list:
        cells = P.cells.get(self.dim, [])
        return [[list(cells[rep][0]), list(cells[rep][1]), c]
                for (rep, _, _), c in zip(P.orbits.get(self.dim, ()), self.coefficients) if c]

    def is_zero(self) -> bool:
        return not any(self.coefficients)


def _rank_of(order: Sequence[int] | None, K: SimplicialComplex) -> dict:
    if order is None:
        return {v: i for i, v in enumerate(K.vertices)}
    order = list(order)
    if sorted(order) != sorted(set(order)) or not set(K.vertices) <= set(order):
        raise ValueError("vertex order must list every vertex once")
    return {v: i for i, v in enumerate(order)}


def _perm_sign(seq: Sequence) -> int:
    """Sign of the permutation sorting ``seq``."""
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def interleaves(S: Sequence[int], T: Sequence[int], m: int, rank: dict) -> bool:
    """The interleaving pattern of the obstruction cocycle in degree ``m``.

    Even ``m``: ``s_0 < t_0 < ... < s_k < t_k``; odd ``m``:
    ``t_0 < s_0 < t_1 < ... < s_k < t_{k+1}``, both in the given order.
    """
    s = sorted(S, key=rank.__getitem__)
    t = sorted(T, key=rank.__getitem__)
    if m % 2 == 0:
        if len(s) != len(t):
            return False
        seq = [x for pair in zip(s, t) for x in pair]
    else:
        if len(t) != len(s) + 1:
            return False
        seq = [t[0]] + [x for pair in zip(s, t[1:]) for x in pair]
    return all(rank[a] < rank[b] for a, b in zip(seq, seq[1:]))


def vk_cocycle(P: DeletedProduct, m: int, vertex_order: Sequence[int] | None = None) -> EquivariantCochain:
    """The explicit obstruction cocycle of degree ``m`` for the given vertex order.

    The cochain takes the value 1 on an ``(S, T)`` matching the interleaving
    pattern, with both faces oriented by the vertex order; the value on the
    ``τ``-partner follows from the parity.  Values are converted to the
    label orientation of the cells.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    rank = _rank_of(vertex_order, P.base)
    parity = vk_parity(m)
    coeffs = []
    cells = P.cells.get(m, [])
    for rep, partner, eps in P.orbits.get(m, ()):
        S, T = cells[rep]
        if interleaves(S, T, m, rank):
            value = 1
            orient = _perm_sign([rank[v] for v in S]) * _perm_sign([rank[v] for v in T])
            coeffs.append(orient * value)
            continue
        S2, T2 = cells[partner]
        if interleaves(S2, T2, m, rank):
            orient = _perm_sign([rank[v] for v in S2]) * _perm_sign([rank[v] for v in T2])
            # value on the partner is parity·ε·c
            coeffs.append(orient * parity * eps)
            continue
        coeffs.append(0)
    c = EquivariantCochain(parity, m, coeffs)
    if not P.is_cocycle(m, coeffs, parity):
        raise AssertionError("obstruction cochain is not a cocycle")
    return c


@dataclass
class VkReport:
    m: int
    parity: int
    cocycle: EquivariantCochain
    vanishes: bool
    witness: EquivariantCochain | None = None
    vertex_order: list | None = None
    complex_: FreeZ2Complex | None = field(default=None, repr=False)

    def to_json(self, name=None) -> dict:
        P = self.complex_
        return {
            "complex": name if name is not None else [list(f) for f in P.base.facets],
            "m": self.m,
            "parity": parity_name(self.parity),
            "vertex_order": self.vertex_order,
            "vanishes": self.vanishes,
            "representative_support": self.cocycle.support(P),
            "witness_support": None if self.witness is None else self.witness.support(P),
        }


def decide(P: FreeZ2Complex, c: EquivariantCochain) -> EquivariantCochain | None:
    """An equivariant ``x`` of the same parity with ``δx = c``, or ``None``."""
    x = P.solve_coboundary(c.dim, c.coefficients, c.parity)
    if x is None:
        return None
    w = EquivariantCochain(c.parity, c.dim - 1, x)
    if c.dim - 1 >= 0 and any(c.coefficients):
        if P.apply_coboundary(c.dim - 1, x, c.parity) != list(c.coefficients):
            raise AssertionError("witness does not reproduce the cocycle")
    return w


def vk_vanishes(K: SimplicialComplex, m: int, vertex_order: Sequence[int] | None = None,
                P: DeletedProduct | None = None) -> VkReport:
    """Decide whether the obstruction of degree ``m`` vanishes over the integers."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if P is None:
        P = deleted_product(K)
    c = vk_cocycle(P, m, vertex_order)
    w = decide(P, c)
    order = list(vertex_order) if vertex_order is not None else list(K.vertices)
    return VkReport(m, c.parity, c, w is not None, w, order, P)


# ----------------------------------------------------------------------
# the signed contraction chain map


def signed_contraction_chain_map(K: SimplicialComplex, step: ContractionStep,
                                 vertex_order: Sequence[int] | None = None) -> ChainMap:
    """The injective integer chain map ``C(K') → C(K)`` of an admissible contraction.

    The vertices are ordered with the deleted vertex first, the kept vertex
    second and the rest as in ``vertex_order`` (default: by label).  In that
    order a face ``F`` of ``K'`` not in ``K`` maps to
    ``Σ sgn(v, F)·((F - v) ∪ v0)`` with ``sgn(v, F) = (-1)^{#{t ∈ F : t < v}}``.
    The result is expressed in the label orientation of the faces.
    """
    _check_step(K, step)
    K_prime = apply_step(K, step)
    v0, v1 = step.deleted, step.kept
    rest = [v for v in (vertex_order if vertex_order is not None else K.vertices)
            if v not in (v0, v1)]
    order = [v0, v1] + rest
    rank = {v: i for i, v in enumerate(order)}
    faces = K.face_set
    images = {}
    for F in K_prime.face_set:
        if F in faces:
            images[F] = {F: 1}
            continue
        Fo = sorted(F, key=rank.__getitem__)
        src_sign = _perm_sign([rank[v] for v in F])
        img = {}
        for pos, v in enumerate(Fo):
            G = tuple(sorted([w for w in F if w != v] + [v0]))
            if G not in faces:
                continue
            # in the order orientation (F - v) ∪ v0 lists v0 first, then Fo without v
            sign = (-1) ** pos * _perm_sign([rank[w] for w in G])
            img[G] = src_sign * sign
        images[F] = img
    return ChainMap(K_prime, K, images, None)


class ProductMap:
    """``φ(S×T) = φ(S)×φ(T)`` between deleted products over the integers."""

    def __init__(self, phi: ChainMap, source: DeletedProduct, target: DeletedProduct):
        self.phi = phi
        self.source = source
        self.target = target
        self.images: dict[int, list[dict[int, int]]] = {}
        self.lands_in_deleted_product = True
        for q in source.dims:
            col = []
            for S, T in source.cells[q]:
                acc: dict[int, int] = {}
                for S1, a in phi(S).items():
                    for T1, b in phi(T).items():
                        idx = target.index.get(q, {}).get((S1, T1))
                        if idx is None:
                            self.lands_in_deleted_product = False
                            continue
                        acc[idx] = acc.get(idx, 0) + a * b
                col.append({k: v for k, v in acc.items() if v})
            self.images[q] = col

    def is_equivariant(self) -> bool:
        for q, col in self.images.items():
            for i, img in enumerate(col):
                j, eps = self.source.tau[q][i]
                lhs = {k: eps * a for k, a in col[j].items()}
                rhs: dict[int, int] = {}
                for k, a in img.items():
                    kk, e2 = self.target.tau[q][k]
                    rhs[kk] = rhs.get(kk, 0) + a * e2
                if lhs != {k: v for k, v in rhs.items() if v}:
                    return False
        return True

    def is_chain_map(self) -> bool:
        src, tgt = self.source, self.target
        for q in src.dims:
            if q == 0:
                continue
            for i, img in enumerate(self.images[q]):
                lhs: dict[int, int] = {}
                for k, a in img.items():
                    for j, b in tgt.boundary[q][k]:
                        lhs[j] = lhs.get(j, 0) + a * b
                rhs: dict[int, int] = {}
                for j, b in src.boundary[q][i]:
                    for k, a in self.images[q - 1][j].items():
                        rhs[k] = rhs.get(k, 0) + a * b
                if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                    return False
        return True

    def pullback(self, c: EquivariantCochain) -> EquivariantCochain:
        full = self.target.expand(c.dim, c.coefficients, c.parity)
        values = [sum(full[k] * a for k, a in img.items()) for img in self.images.get(c.dim, ())]
        out = self.source.restrict(c.dim, values, c.parity)
        if out is None:
            raise AssertionError("pullback is not equivariant")
        return EquivariantCochain(c.parity, c.dim, out)


def product_step_map(K: SimplicialComplex, step, vertex_order=None) -> ChainMap:
    if isinstance(step, ContractionStep):
        return signed_contraction_chain_map(K, step, vertex_order)
    if isinstance(step, (DeleteVertex, DeleteFacet)):
        K_prime = apply_step(K, step)
        return ChainMap(K_prime, K, {F: {F: 1} for F in K_prime.face_set}, None)
    raise TypeError(f"not a step: {step!r}")


@dataclass
class PullbackResult:
    ok: bool
    equal_on_cochains: bool
    vertex_order: list

    def __bool__(self) -> bool:
        return self.ok


def vk_pullback(K: SimplicialComplex, step, m: int,
                vertex_order: Sequence[int] | None = None) -> PullbackResult:
    """Compare ``φ*(o^m(K))`` with ``o^m(K')`` in the equivariant complex of ``K'``.

    For a contraction the vertex order puts the deleted vertex first and the
    kept vertex second, so the contraction identifies the two smallest
    vertices; the remaining vertices follow ``vertex_order``.
    """
    base = list(vertex_order) if vertex_order is not None else list(K.vertices)
    if isinstance(step, ContractionStep):
        order = [step.deleted, step.kept] + [v for v in base if v not in (step.deleted, step.kept)]
    else:
        order = base
    phi = product_step_map(K, step, order)
    P = deleted_product(K)
    K_prime = phi.source
    if len(K_prime.vertices) < 2:
        raise ValueError("the result of the step has fewer than two vertices")
    Pp = deleted_product(K_prime)
    pm = ProductMap(phi, Pp, P)
    if not pm.lands_in_deleted_product:
        return PullbackResult(False, False, order)
    c = vk_cocycle(P, m, order)
    cp = vk_cocycle(Pp, m, [v for v in order if v in set(K_prime.vertices)])
    pulled = pm.pullback(c)
    diff = [a - b for a, b in zip(pulled.coefficients, cp.coefficients)]
    equal = not any(diff)
    ok = equal or Pp.solve_coboundary(m, diff, c.parity) is not None
    return PullbackResult(ok, equal, order)


def vk_pullback_check(K: SimplicialComplex, step, m: int,
                      vertex_order: Sequence[int] | None = None) -> bool:
    return vk_pullback(K, step, m, vertex_order).ok


# ----------------------------------------------------------------------
# transfer to the deleted join


@dataclass
class TransferReport:
    bijective: bool
    tau_anticommutes: bool
    boundary_anticommutes: bool

    def __bool__(self) -> bool:
        return self.bijective and self.tau_anticommutes and self.boundary_anticommutes


def _transfer_sign(cell) -> int:
    return (-1) ** len(cell[0])


def join_product_transfer(K: SimplicialComplex, P: DeletedProduct | None = None,
                          J: DeletedJoin | None = None) -> TransferReport:
    """Check ``f(S×T) = (-1)^{|S|} S*T`` against the integer deleted join.

    ``f`` is a bijection from product ``i``-cells onto join ``(i+1)``-cells
    with both sides nonempty.  ``τf = -fτ`` holds exactly; ``∂f = -f∂`` holds
    after discarding the join cells with an empty side, which ``f`` never
    reaches.
    """
    if P is None:
        P = deleted_product(K)
    if J is None:
        J = DeletedJoin(K, signed=True)
    two_sided = {q + 1: [c for c in J.cells.get(q + 1, []) if c[0] and c[1]] for q in P.dims}
    bij = all(sorted(P.cells[q]) == sorted(two_sided[q + 1]) for q in P.dims)
    bij = bij and sum(P.n_cells(q) for q in P.dims) == sum(
        1 for q in J.dims for c in J.cells[q] if c[0] and c[1])
    tau_ok = True
    bd_ok = True
    for q in P.dims:
        for i, cell in enumerate(P.cells[q]):
            # τ(f σ) versus -f(τ σ)
            j = J.index[q + 1][cell]
            jt, jeps = J.tau[q + 1][j]
            lhs = (J.cells[q + 1][jt], _transfer_sign(cell) * jeps)
            pt, peps = P.tau[q][i]
            pcell = P.cells[q][pt]
            rhs = (pcell, -peps * _transfer_sign(pcell))
            if lhs != rhs:
                tau_ok = False
            # ∂(f σ) versus -f(∂ σ), ignoring one-sided join cells
            lhs_b = {}
            for k, a in J.boundary[q + 1][j]:
                face = J.cells[q][k]
                if face[0] and face[1]:
                    lhs_b[face] = _transfer_sign(cell) * a
            rhs_b = {}
            if q > 0:
                for k, a in P.boundary[q][i]:
                    face = P.cells[q - 1][k]
                    rhs_b[face] = -a * _transfer_sign(face)
            if lhs_b != rhs_b:
                bd_ok = False
    return TransferReport(bij, tau_ok, bd_ok)


def transported_class(K: SimplicialComplex, m: int, vertex_order: Sequence[int] | None = None,
                      P: DeletedProduct | None = None, J: DeletedJoin | None = None) -> VkReport:
    """The obstruction carried to the integer deleted join in degree ``m + 1``.

    ``ω(S*T) = (-1)^{|S|} o(S×T)`` on cells with both sides nonempty and 0
    on the others; ``ω`` has the opposite parity and its vanishing is decided
    in the join.
    """
    if P is None:
        P = deleted_product(K)
    if J is None:
        J = DeletedJoin(K, signed=True)
    c = vk_cocycle(P, m, vertex_order)
    full = P.expand(m, c.coefficients, c.parity)
    values = [0] * J.n_cells(m + 1)
    for i, cell in enumerate(P.cells.get(m, [])):
        values[J.index[m + 1][cell]] = _transfer_sign(cell) * full[i]
    parity = -c.parity
    coeffs = J.restrict(m + 1, values, parity)
    if coeffs is None:
        raise AssertionError("transported cochain is not equivariant")
    if not J.is_cocycle(m + 1, coeffs, parity):
        raise AssertionError("transported cochain is not a cocycle")
    omega = EquivariantCochain(parity, m + 1, coeffs)
    w = decide(J, omega)
    order = list(vertex_order) if vertex_order is not None else list(K.vertices)
    return VkReport(m + 1, parity, omega, w is not None, w, order, J)
