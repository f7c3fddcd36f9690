"""Smith normal form of integer matrices with transform tracking.

Diagonalizes an integer matrix by unimodular row and column operations,
returning the invariant factors d_1 | d_2 | ... | d_r together with the
transforms U, V (det +-1) satisfying U @ M @ V = diag(d_1, ..., d_r).
"""

from __future__ import annotations

from dataclasses import dataclass

from .intmat import Matrix, identity, matmul


@dataclass(frozen=True)
class SmithNormalForm:
    """Invariant factors plus the unimodular transforms that certify them."""

    factors: tuple[int, ...]
    rank: int
    row_transform: tuple[tuple[int, ...], ...]  # U, acts on the left
    col_transform: tuple[tuple[int, ...], ...]  # V, acts on the right
    shape: tuple[int, int]

    def diagonal_matrix(self) -> Matrix:
        m, n = self.shape
        out = [[0] * n for _ in range(m)]
        for i, d in enumerate(self.factors):
            out[i][i] = d
        return out

    def certifies(self, original) -> bool:
        u = [list(r) for r in self.row_transform]
        v = [list(r) for r in self.col_transform]
        m = [list(r) for r in original]
        if not m:
            return not self.factors
        return matmul(matmul(u, m), v) == self.diagonal_matrix()


class _Worksheet:
    """Mutable matrix with mirrored row ops on U and column ops on V."""

    def __init__(self, matrix):
        self.a = [list(map(int, row)) for row in matrix]
        self.rows = len(self.a)
        self.cols = len(self.a[0]) if self.a else 0
        if self.a and any(len(row) != self.cols for row in self.a):
            raise ValueError("ragged matrix")
        self.u = identity(self.rows)
        self.v = identity(self.cols)

    def swap_rows(self, i, j):
        if i != j:
            self.a[i], self.a[j] = self.a[j], self.a[i]
            self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i, j):
        if i != j:
            for row in self.a:
                row[i], row[j] = row[j], row[i]
            for row in self.v:
                row[i], row[j] = row[j], row[i]

    def add_row(self, src, dst, mult):
        self.a[dst] = [x + mult * y for x, y in zip(self.a[dst], self.a[src])]
        self.u[dst] = [x + mult * y for x, y in zip(self.u[dst], self.u[src])]

    def add_col(self, src, dst, mult):
        for row in self.a:
            row[dst] += mult * row[src]
        for row in self.v:
            row[dst] += mult * row[src]

    def negate_row(self, i):
        self.a[i] = [-x for x in self.a[i]]
        self.u[i] = [-x for x in self.u[i]]

    def pivot(self, t):
        """Nonzero entry of minimal |value| in a[t:, t:], or None."""
        best = None
        for i in range(t, self.rows):
            for j in range(t, self.cols):
                x = self.a[i][j]
                if x and (best is None or abs(x) < abs(best[2])):
                    best = (i, j, x)
                    if abs(x) == 1:
                        return best[:2]
        return best[:2] if best else None

    def diagonalize_from(self, start):
        """Diagonalize a[start:, start:]; returns the resulting rank bound."""
        a = self.a
        t = start
        while t < min(self.rows, self.cols):
            pos = self.pivot(t)
            if pos is None:
                break
            self.swap_rows(t, pos[0])
            self.swap_cols(t, pos[1])
            # clear the pivot row and column; any division remainder becomes
            # a strictly smaller pivot, so the loop terminates
            while True:
                for r in range(self.rows):
                    if r != t and a[r][t]:
                        self.add_row(t, r, -(a[r][t] // a[t][t]))
                if any(a[r][t] for r in range(self.rows) if r != t):
                    pos = self.pivot(t)
                    self.swap_rows(t, pos[0])
                    self.swap_cols(t, pos[1])
                    continue
                for c in range(self.cols):
                    if c != t and a[t][c]:
                        self.add_col(t, c, -(a[t][c] // a[t][t]))
                if any(a[t][c] for c in range(self.cols) if c != t):
                    pos = self.pivot(t)
                    self.swap_rows(t, pos[0])
                    self.swap_cols(t, pos[1])
                    continue
                break
            if a[t][t] < 0:
                self.negate_row(t)
            t += 1
        return t


def smith_normal_form(matrix) -> SmithNormalForm:
    """Compute the Smith normal form of an integer matrix.

    Accepts any sequence of equal-length integer rows (possibly empty).
    The returned invariant factors are positive and each divides the next.
    """
    ws = _Worksheet(matrix)
    rank = ws.diagonalize_from(0)

    # enforce the divisibility chain d_i | d_{i+1}
    i = 0
    while i < rank - 1:
        if ws.a[i + 1][i + 1] % ws.a[i][i] != 0:
            # couple the two diagonal entries and rediagonalize the tail
            ws.add_col(i + 1, i, 1)
            ws.diagonalize_from(i)
            i = 0
            continue
        i += 1

    factors = tuple(ws.a[i][i] for i in range(rank))
    return SmithNormalForm(
        factors=factors,
        rank=rank,
        row_transform=tuple(tuple(r) for r in ws.u),
        col_transform=tuple(tuple(r) for r in ws.v),
        shape=(ws.rows, ws.cols),
    )
