"""Free Z2-cell complexes and their equivariant cochain complexes.

A :class:`FreeZ2Complex` stores cells per dimension, a sparse signed
boundary and a signed fixed-point-free involution ``τ(σ) = ε·σ'``.  Cochains
with ``τc = p·c`` (``p = +1`` symmetric, ``p = -1`` antisymmetric) are written
in orbit coordinates: the basis cochain ``e_O`` of an orbit ``{R, P}`` takes
the value 1 on the representative ``R`` and ``p·ε`` on its partner ``P``,
where ``τR = ε·P``.  A cochain is then determined by its values on
representatives, so the restricted coboundary has entries
``D[O', O] = e_O(∂ rep(O'))``.

Over GF(2) all signs collapse to 1 and both parities coincide.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .linalg import Gf2Matrix, gf2_rank, gf2_solve, z_solve_sparse

SYMMETRIC = 1
ANTISYMMETRIC = -1


def parity_name(p: int) -> str:
    return "symmetric" if p == SYMMETRIC else "antisymmetric"


class FreeZ2Complex:
    """Cells with a signed boundary and a signed free involution.

    ``cells[q]`` is the sorted list of ``q``-cells (any hashable, orderable
    descriptors).  ``boundary_of(cell)`` yields ``(face, coefficient)`` pairs
    and ``tau_of(cell)`` returns ``(partner, sign)``.  With ``modulus=2`` all
    coefficients are reduced mod 2.
    """

    def __init__(self, cells: dict[int, list], boundary_of: Callable, tau_of: Callable,
                 modulus: int | None = None, flip_representatives: bool = False):
        self.modulus = modulus
        self.cells = {q: sorted(cs) for q, cs in cells.items() if cs}
        self.index = {q: {c: i for i, c in enumerate(cs)} for q, cs in self.cells.items()}
        self.dims = sorted(self.cells)
        self.boundary: dict[int, list[list[tuple[int, int]]]] = {}
        self.tau: dict[int, list[tuple[int, int]]] = {}
        for q in self.dims:
            rows = []
            below = self.index.get(q - 1, {})
            for c in self.cells[q]:
                terms: dict[int, int] = {}
                for face, coef in boundary_of(c):
                    j = below[face]
                    terms[j] = self._reduce(terms.get(j, 0) + coef)
                rows.append(sorted((j, a) for j, a in terms.items() if a))
            self.boundary[q] = rows
            perm = []
            for c in self.cells[q]:
                partner, sign = tau_of(c)
                perm.append((self.index[q][partner], self._reduce(sign)))
            self.tau[q] = perm
        # Orbits: representative is the smaller cell unless flipped.
        self.orbits: dict[int, list[tuple[int, int, int]]] = {}
        self.orbit_of: dict[int, list[int]] = {}
        for q in self.dims:
            orbs, where = [], [0] * len(self.cells[q])
            for i, (j, eps) in enumerate(self.tau[q]):
                if i == j:
                    raise ValueError(f"involution fixes the cell {self.cells[q][i]!r}")
                if i < j:
                    rep, partner = (j, i) if flip_representatives else (i, j)
                    where[i] = where[j] = len(orbs)
                    orbs.append((rep, partner, eps))
            self.orbits[q] = orbs
            self.orbit_of[q] = where

    def _reduce(self, x: int) -> int:
        return x % self.modulus if self.modulus else x

    def n_cells(self, q: int) -> int:
        return len(self.cells.get(q, ()))

    def n_orbits(self, q: int) -> int:
        return len(self.orbits.get(q, ()))

    @property
    def top_dim(self) -> int:
        return self.dims[-1] if self.dims else -1

    # ------------------------------------------------------------------
    # structural checks

    def check_boundary_squared(self) -> bool:
        for q in self.dims:
            if q - 1 not in self.boundary:
                continue
            for row in self.boundary[q]:
                acc: dict[int, int] = {}
                for j, a in row:
                    for k, b in self.boundary[q - 1][j]:
                        acc[k] = self._reduce(acc.get(k, 0) + a * b)
                if any(acc.values()):
                    return False
        return True

    def check_tau(self) -> bool:
        """``τ² = id`` with signs, no fixed cells, and ``τ∂ = ∂τ``."""
        for q in self.dims:
            for i, (j, eps) in enumerate(self.tau[q]):
                k, eps2 = self.tau[q][j]
                if i == j or k != i or self._reduce(eps * eps2) != self._reduce(1):
                    return False
            if q - 1 not in self.tau:
                continue
            for i, row in enumerate(self.boundary[q]):
                # ∂(τσ) = ε ∂(σ')
                j, eps = self.tau[q][i]
                lhs = {k: self._reduce(eps * a) for k, a in self.boundary[q][j]}
                rhs: dict[int, int] = {}
                for k, a in row:
                    kk, e2 = self.tau[q - 1][k]
                    rhs[kk] = self._reduce(rhs.get(kk, 0) + a * e2)
                if {k: a for k, a in lhs.items() if a} != {k: a for k, a in rhs.items() if a}:
                    return False
        return True

    # ------------------------------------------------------------------
    # orbit coordinates

    def basis_value(self, q: int, cell_index: int, parity: int) -> tuple[int, int]:
        """``(orbit, value)`` such that ``e_orbit(cell) = value``."""
        o = self.orbit_of[q][cell_index]
        rep, partner, eps = self.orbits[q][o]
        if cell_index == rep:
            return o, 1
        return o, self._reduce(parity * eps)

    def coboundary_rows(self, q: int, parity: int) -> list[dict[int, int]]:
        """Rows of ``δ: C_p^q → C_p^{q+1}`` in orbit coordinates, one dict per (q+1)-orbit."""
        rows = []
        for rep, _, _ in self.orbits.get(q + 1, ()):
            acc: dict[int, int] = {}
            for j, a in self.boundary[q + 1][rep]:
                o, val = self.basis_value(q, j, parity)
                acc[o] = self._reduce(acc.get(o, 0) + a * val)
            rows.append({o: v for o, v in acc.items() if v})
        return rows

    def coboundary_gf2(self, q: int) -> Gf2Matrix:
        rows = self.coboundary_rows(q, SYMMETRIC)
        packed = [sum(1 << j for j, v in r.items() if v % 2) for r in rows]
        return Gf2Matrix(len(rows), self.n_orbits(q), packed)

    def apply_coboundary(self, q: int, c: Sequence[int], parity: int) -> list[int]:
        out = []
        for row in self.coboundary_rows(q, parity):
            out.append(self._reduce(sum(v * c[o] for o, v in row.items())))
        return out

    def expand(self, q: int, c: Sequence[int], parity: int) -> list[int]:
        """Values of the equivariant cochain on every ``q``-cell."""
        out = [0] * self.n_cells(q)
        for o, (rep, partner, eps) in enumerate(self.orbits.get(q, ())):
            out[rep] = self._reduce(c[o])
            out[partner] = self._reduce(parity * eps * c[o])
        return out

    def restrict(self, q: int, values: Sequence[int], parity: int) -> list[int] | None:
        """Orbit coordinates of a full cochain, or ``None`` if it is not ``τc = p·c``."""
        out = []
        for rep, partner, eps in self.orbits.get(q, ()):
            if self._reduce(values[partner] - parity * eps * values[rep]):
                return None
            out.append(self._reduce(values[rep]))
        return out

    def full_coboundary(self, q: int, values: Sequence[int]) -> list[int]:
        """``δ`` on a full (non-equivariant) ``q``-cochain."""
        out = []
        for row in self.boundary.get(q + 1, ()):
            out.append(self._reduce(sum(a * values[j] for j, a in row)))
        return out

    def solve_coboundary(self, q: int, target: Sequence[int], parity: int) -> list[int] | None:
        """An equivariant ``(q-1)``-cochain ``x`` with ``δx = target``, or ``None``."""
        if not any(target):
            return [0] * self.n_orbits(q - 1)
        if self.n_orbits(q - 1) == 0:
            return None
        if self.modulus == 2:
            return gf2_solve(self.coboundary_gf2(q - 1), [t % 2 for t in target])
        return z_solve_sparse(self.coboundary_rows(q - 1, parity), list(target), self.n_orbits(q - 1))

    def is_cocycle(self, q: int, c: Sequence[int], parity: int) -> bool:
        return not any(self.apply_coboundary(q, c, parity))

    def symmetrizer_rank_full(self, q: int) -> bool:
        """``(id + τ)`` maps ``q``-cochains onto symmetric ``q``-cochains (GF(2) rank check)."""
        n, k = self.n_cells(q), self.n_orbits(q)
        rows = []
        for i in range(n):
            # (id+τ)(1_σ) evaluated in orbit coordinates: both cells of σ's orbit get 1.
            rows.append(1 << self.orbit_of[q][i])
        return gf2_rank(Gf2Matrix(n, k, rows)) == k
