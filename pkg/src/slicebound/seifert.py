"""Seifert matrices: validation, Alexander polynomial, signature, congruence."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import ONE, LaurentMatrix, LaurentPolynomial


class SeifertMatrixError(ValueError):
    pass


def transpose(rows):
    return [list(col) for col in zip(*rows)] if rows else []


def mat_mul(a, b):
    n, m = len(a), len(b[0]) if b else 0
    k = len(b)
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for p in range(k):
            c = arow[p]
            if c:
                brow = b[p]
                for j in range(m):
                    orow[j] += c * brow[j]
    return out

def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def congruent(m_rows, a_rows):
    """A^T M A for plain integer row-lists."""
    return mat_mul(transpose(a_rows), mat_mul(m_rows, a_rows))


def integer_determinant(rows):
    """Exact integer determinant via fraction-free Bareiss elimination."""
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
    a = [list(row) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                assert num % prev == 0
                a[i][j] = num // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class UnimodularTransform:
    """An integer matrix with determinant +1 or -1 (a change of basis)."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if integer_determinant([list(r) for r in rows]) not in (1, -1):
            raise SeifertMatrixError("transform is not unimodular")

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def size(self):
        return len(self.entries)

    @property
    def rows(self):
        return [list(row) for row in self.entries]

    def det(self):
        return integer_determinant(self.rows)


@dataclass(frozen=True)
class SeifertMatrix:
    """A square integer matrix of even size whose skew part is unimodular.

    Such a matrix is the Seifert form of some knot, so every invariant
    computed from it (Alexander polynomial, signature, genus bounds) is a
    knot-level quantity.
    """

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise SeifertMatrixError("matrix is not square")
        if n % 2:
            raise SeifertMatrixError("odd-sized matrix")
        skew = [[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)]
        d = integer_determinant(skew)
        if d != 1:
            raise SeifertMatrixError(
                f"skew part not unimodular (determinant {d})"
            )

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(row) for row in rows))

    @property
    def size(self):
        return len(self.entries)

    @property
    def genus(self):
        return self.size // 2

    @property
    def rows(self):
        return [list(row) for row in self.entries]

    def skew_part(self):
        n = self.size
        e = self.entries
        return [[e[i][j] - e[j][i] for j in range(n)] for i in range(n)]

    def symmetrization(self):
        n = self.size
        e = self.entries
        return [[e[i][j] + e[j][i] for j in range(n)] for i in range(n)]

    def submatrix(self, lo, hi):
        return [list(row[lo:hi]) for row in self.entries[lo:hi]]

    def alexander(self):
        return alexander(self)

    def alexander_degree(self):
        return alexander_degree(self)

    def signature(self):
        return signature(self)


# convenience alias matching the operational name
def validate(rows):
    """Validate an integer grid as a Seifert matrix."""
    return SeifertMatrix.from_rows(rows)


def alexander(m):
    """Alexander polynomial t^(-g) * det(t*M - M^T).

    The result is symmetric under t <-> 1/t and evaluates to 1 at t = 1;
    the 0x0 matrix yields 1.
    """
    n = m.size
    if n == 0:
        return ONE
    t = LaurentPolynomial.monomial(1, 1)
    e = m.entries
    grid = tuple(
        tuple(
            t * e[i][j] - LaurentPolynomial.monomial(e[j][i])
            for j in range(n)
        )
        for i in range(n)
    )
    det = LaurentMatrix(grid).det()
    return det.shifted(-n // 2)


def alexander_degree(m):
    """Breadth of the Alexander polynomial; always even."""
    return alexander(m).breadth()


def _symmetric_signature(a):
    """Signature of a symmetric matrix of Fractions, by exact congruence
    diagonalization (Schur complements)."""
    n = len(a)
    sig = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            hit = None
            for i in range(k, n):
                for j in range(i + 1, n):
                    if a[i][j] != 0:
                        hit = (i, j)
                        break
                if hit:
                    break
            if hit is None:
                break  # remaining block is zero, contributes nothing
            i, j = hit
            # all diagonal entries vanish, so this creates pivot 2*a[i][j]
            for r in range(k, n):
                a[i][r] += a[j][r]
            for r in range(k, n):
                a[r][i] += a[r][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for row in a:
                row[k], row[piv] = row[piv], row[k]
        p = a[k][k]
        sig += 1 if p > 0 else -1
        for i in range(k + 1, n):
            fi = a[i][k]
            if fi:
                for j in range(k + 1, n):
                    a[i][j] -= fi * a[k][j] / p
        k += 1
    return sig


def signature(m):
    """Exact signature of the symmetrization M + M^T; an even integer."""
    sym = m.symmetrization()
    a = [[Fraction(x) for x in row] for row in sym]
    return _symmetric_signature(a)


def apply_congruence(m, a):
    """Change of basis M -> A^T M A; the result is again a Seifert matrix."""
    if a.size != m.size:
        raise SeifertMatrixError(
            f"size mismatch: matrix is {m.size}x{m.size}, "
            f"transform is {a.size}x{a.size}"
        )
    return SeifertMatrix.from_rows(congruent(m.rows, a.rows))
