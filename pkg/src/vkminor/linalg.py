"""Exact linear algebra over GF(2) and over the integers.

GF(2) matrices keep each row as a Python int bitmask (bit ``j`` is column
``j``).  Integer matrices are dense lists of Python ints, so entries never
overflow.
"""

from __future__ import annotations

from typing import Sequence


class Gf2Matrix:
    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[int] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            rows = [0] * nrows
        if len(rows) != nrows:
            raise ValueError("row count does not match shape")
        limit = 1 << ncols
        for r in rows:
            if r < 0 or r >= limit:
                raise ValueError("row has bits beyond the column count")
        self.rows = list(rows)

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[int]], ncols: int | None = None) -> "Gf2Matrix":
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            bits = 0
            for j, a in enumerate(row):
                if a % 2:
                    bits |= 1 << j
            rows.append(bits)
        return cls(len(rows), ncols, rows)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, n, [1 << i for i in range(n)])

    def to_dense(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def get(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def set(self, i: int, j: int, value: int) -> None:
        if value % 2:
            self.rows[i] |= 1 << j
        else:
            self.rows[i] &= ~(1 << j)

    def mul_vec(self, x: Sequence[int]) -> list[int]:
        if len(x) != self.ncols:
            raise ValueError("shape mismatch")
        xb = _pack(x)
        return [bin(r & xb).count("1") & 1 for r in self.rows]

    def __matmul__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = []
        for r in self.rows:
            acc = 0
            j = 0
            while r:
                if r & 1:
                    acc ^= other.rows[j]
                r >>= 1
                j += 1
            out.append(acc)
        return Gf2Matrix(self.nrows, other.ncols, out)

    def transpose(self) -> "Gf2Matrix":
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            j = 0
            while r:
                if r & 1:
                    cols[j] |= 1 << i
                r >>= 1
                j += 1
        return Gf2Matrix(self.ncols, self.nrows, cols)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Gf2Matrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __repr__(self) -> str:
        return f"Gf2Matrix({self.nrows}x{self.ncols})"


def _pack(bits: Sequence[int]) -> int:
    out = 0
    for j, b in enumerate(bits):
        if b % 2:
            out |= 1 << j
    return out


def _unpack(x: int, n: int) -> list[int]:
    return [(x >> j) & 1 for j in range(n)]


def _gf2_eliminate(rows: list[int], ncols: int):
    """Reduced row echelon form; returns the reduced rows and their pivot columns."""
    rows = [r for r in rows if r]
    pivots = []
    reduced: list[int] = []
    for r in rows:
        for p, pr in zip(pivots, reduced):
            if (r >> p) & 1:
                r ^= pr
        if not r:
            continue
        p = (r & -r).bit_length() - 1
        for k, pr in enumerate(reduced):
            if (pr >> p) & 1:
                reduced[k] = pr ^ r
        pivots.append(p)
        reduced.append(r)
    return reduced, pivots


def gf2_rank(A: Gf2Matrix) -> int:
    return len(_gf2_eliminate(A.rows, A.ncols)[1])


def gf2_solve(A: Gf2Matrix, b: Sequence[int]) -> list[int] | None:
    """Some ``x`` with ``A x = b`` over GF(2), or ``None`` if there is none."""
    if len(b) != A.nrows:
        raise ValueError("shape mismatch")
    n = A.ncols
    aug = [r | ((bi & 1) << n) for r, bi in zip(A.rows, b)]
    reduced, pivots = _gf2_eliminate(aug, n + 1)
    x = 0
    for p, r in zip(pivots, reduced):
        if p == n:
            return None
        if (r >> n) & 1:
            x |= 1 << p
    return _unpack(x, n)


class IntMatrix:
    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Sequence[Sequence[int]], ncols: int | None = None):
        self.rows = [[int(a) for a in row] for row in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    def copy(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.ncols)

    def transpose(self) -> "IntMatrix":
        return IntMatrix([list(c) for c in zip(*self.rows)] if self.nrows else
                         [[] for _ in range(self.ncols)], self.nrows)

    def mul_vec(self, x: Sequence[int]) -> list[int]:
        if len(x) != self.ncols:
            raise ValueError("shape mismatch")
        return [sum(a * b for a, b in zip(row, x) if a) for row in self.rows]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows)) if other.nrows else [() for _ in range(other.ncols)]
        out = [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        return IntMatrix(out, other.ncols)

    def __eq__(self, other) -> bool:
        return (isinstance(other, IntMatrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def mod2(self) -> Gf2Matrix:
        return Gf2Matrix.from_dense(self.rows, self.ncols)

    def __repr__(self) -> str:
        return f"IntMatrix({self.nrows}x{self.ncols})"


def determinant(A: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = A.nrows
    if n != A.ncols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    M = [row[:] for row in A.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


class IntegerMatrixDecomposition:
    """``U · A · V = S`` with ``S`` diagonal, ``d_1 | d_2 | ...`` and ``U``, ``V`` unimodular."""

    __slots__ = ("S", "U", "V", "rank")

    def __init__(self, S: IntMatrix, U: IntMatrix, V: IntMatrix, rank: int):
        self.S, self.U, self.V, self.rank = S, U, V, rank

    @property
    def diagonal(self) -> list[int]:
        return [self.S.rows[i][i] for i in range(self.rank)]

    def __repr__(self) -> str:
        return f"IntegerMatrixDecomposition(diagonal={self.diagonal})"


def smith_normal_form(A: IntMatrix) -> IntegerMatrixDecomposition:
    """Smith normal form with unimodular transforms.

    Pivots are chosen with minimal absolute value; rows and columns are
    cleared by repeated division with remainder, and a divisibility failure
    is repaired by adding the offending row into the pivot row.
    """
    m, n = A.nrows, A.ncols
    S = [row[:] for row in A.rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, k):
        S[i], S[k] = S[k], S[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in S:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        if q:
            rs, rd = S[src], S[dst]
            for j in range(n):
                if rs[j]:
                    rd[j] += q * rs[j]
            us, ud = U[src], U[dst]
            for j in range(m):
                if us[j]:
                    ud[j] += q * us[j]

    def add_col(dst, src, q):
        if q:
            for row in S:
                if row[src]:
                    row[dst] += q * row[src]
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = S[i]
            for j in range(t, n):
                a = row[j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = S[t][t]
            changed = False
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // p))
                    if S[i][t]:
                        changed = True
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // p))
                    if S[t][j]:
                        changed = True
            if changed:
                # move a smaller remainder into the pivot position
                best = None
                for i in range(t + 1, m):
                    if S[i][t] and (best is None or abs(S[i][t]) < best[0]):
                        best = (abs(S[i][t]), i, None)
                for j in range(t + 1, n):
                    if S[t][j] and (best is None or abs(S[t][j]) < best[0]):
                        best = (abs(S[t][j]), None, j)
                if best[1] is not None:
                    swap_rows(t, best[1])
                else:
                    swap_cols(t, best[2])
                continue
            bad = None
            for i in range(t + 1, m):
                row = S[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return IntegerMatrixDecomposition(IntMatrix(S, n), IntMatrix(U, m), IntMatrix(V, n), t)


def _snf_solve(A: IntMatrix, b: Sequence[int]) -> list[int] | None:
    dec = smith_normal_form(A)
    c = dec.U.mul_vec(list(b))
    y = [0] * A.ncols
    for i, d in enumerate(dec.diagonal):
        if c[i] % d:
            return None
        y[i] = c[i] // d
    if any(c[dec.rank:]):
        return None
    return dec.V.mul_vec(y)


def z_solve(A: IntMatrix, b: Sequence[int]) -> list[int] | None:
    """An integer ``x`` with ``A x = b``, or ``None`` when no integer solution exists.

    Unit pivots are eliminated first on sparse rows (exact, since the pivot is
    ±1); the leftover block is decided by its Smith normal form.
    """
    if len(b) != A.nrows:
        raise ValueError("shape mismatch")
    rows = [{j: a for j, a in enumerate(r) if a} for r in A.rows]
    return _sparse_z_solve(rows, list(b), A.ncols)


def z_solve_sparse(rows: Sequence[dict], b: Sequence[int], ncols: int) -> list[int] | None:
    """:func:`z_solve` for matrices given as one ``{column: value}`` dict per row."""
    if len(b) != len(rows):
        raise ValueError("shape mismatch")
    return _sparse_z_solve([dict(r) for r in rows], list(b), ncols)


def _sparse_z_solve(rows: list[dict], rhs: list[int], ncols: int) -> list[int] | None:
    col_rows: dict[int, set] = {}
    for i, r in enumerate(rows):
        for j in r:
            col_rows.setdefault(j, set()).add(i)
    active = set(range(len(rows)))
    pivots = []  # (row dict, rhs, pivot col, pivot value)
    while True:
        best = None
        for i in active:
            r = rows[i]
            for j, a in r.items():
                if a == 1 or a == -1:
                    cost = (len(r) - 1) * (len(col_rows[j]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
                        if cost == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, pr, pc = best
        prow = rows[pr]
        a = prow[pc]
        active.discard(pr)
        for i in list(col_rows[pc]):
            if i == pr or i not in active:
                continue
            r = rows[i]
            f = r[pc] * a
            for j, v in prow.items():
                nv = r.get(j, 0) - f * v
                if nv:
                    if j not in r:
                        col_rows.setdefault(j, set()).add(i)
                    r[j] = nv
                elif j in r:
                    del r[j]
                    col_rows[j].discard(i)
            rhs[i] -= f * rhs[pr]
        for j in prow:
            col_rows[j].discard(pr)
        pivots.append((prow, rhs[pr], pc, a))

    x = [0] * ncols
    rest_rows = sorted(active)
    rest_cols = sorted({j for i in rest_rows for j in rows[i]})
    if rest_rows:
        if not rest_cols:
            if any(rhs[i] for i in rest_rows):
                return None
        else:
            cidx = {j: k for k, j in enumerate(rest_cols)}
            dense = [[0] * len(rest_cols) for _ in rest_rows]
            for k, i in enumerate(rest_rows):
                for j, v in rows[i].items():
                    dense[k][cidx[j]] = v
            y = _snf_solve(IntMatrix(dense, len(rest_cols)), [rhs[i] for i in rest_rows])
            if y is None:
                return None
            for j, v in zip(rest_cols, y):
                x[j] = v
    for prow, r, pc, a in reversed(pivots):
        s = r - sum(v * x[j] for j, v in prow.items() if j != pc)
        x[pc] = s * a
    return x


def z_rank(A: IntMatrix) -> int:
    return smith_normal_form(A).rank
