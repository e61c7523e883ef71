"""Braid words, canonical Seifert surfaces of closures, and a Burau oracle.

The canonical surface is the one produced by Seifert's algorithm on the
closed-braid diagram: the Seifert circles are the strands, and the
homology generators are the loops running through two consecutive bands
in the same column.  The linking-number conventions below are pinned by
the trefoil and figure-eight regressions and cross-checked against the
Burau-representation oracle, which computes the Alexander polynomial by a
completely different route.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .laurent import ONE, LaurentMatrix, LaurentPolynomial, divexact
from .seifert import SeifertMatrix


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    """A word in the n-strand braid group.

    Letters are nonzero integers: +i is the standard generator crossing
    strands i and i+1 positively, -i its inverse.
    """

    strands: int
    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 2:
            raise BraidError("braid group needs at least 2 strands")
        if not self.letters:
            raise BraidError("empty braid word")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise BraidError(
                    f"letter {x} out of range for {self.strands} strands"
                )


def parse_braid(text, strands=None):
    """Parse a braid word.

    Two formats: letters ('a'..'y' for generators 1..25, uppercase for
    inverses) or integers separated by spaces/commas.  When strands is
    omitted it is inferred as max |letter| + 1.
    """
    s = text.strip()
    if not s:
        raise BraidError("empty braid word")
    if re.search(r"[\d-]", s):
        letters = []
        for tok in re.split(r"[,\s]+", s):
            if not tok:
                continue
            try:
                letters.append(int(tok))
            except ValueError:
                raise BraidError(f"unparseable braid token {tok!r}") from None
    else:
        letters = []
        for ch in s:
            if "a" <= ch <= "y":
                letters.append(ord(ch) - ord("a") + 1)
            elif "A" <= ch <= "Y":
                letters.append(-(ord(ch) - ord("A") + 1))
            else:
                raise BraidError(f"unparseable braid character {ch!r}")
    if not letters:
        raise BraidError("empty braid word")
    if any(x == 0 for x in letters):
        raise BraidError("0 is not a valid braid letter")
    inferred = max(abs(x) for x in letters) + 1
    n = strands if strands is not None else max(inferred, 2)
    return BraidWord(n, tuple(letters))


def closure_component_count(b):
    """Number of link components of the braid closure."""
    perm = list(range(b.strands))
    for x in b.letters:
        i = abs(x) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen = [False] * b.strands
    count = 0
    for i in range(b.strands):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return count


@dataclass(frozen=True)
class CanonicalSurface:
    """Seifert's-algorithm surface of a knot closure, with its matrix."""

    seifert_matrix: SeifertMatrix
    genus: int
    crossing_count: int
    strand_count: int


# Linking rule, frozen by the trefoil/figure-eight regressions and the
# Burau cross-check.  Same column, consecutive loops sharing a crossing
# of sign e: the entry e sits at (earlier, later) for e > 0 and at
# (later, earlier) for e < 0.  Adjacent columns with interleaved spans:
# the contribution -/+1 sits at (right column loop, left column loop),
# with the sign set by which span starts first.
_SHARED_POS = (1, 0)    # (M[x][y], M[y][x]) for shared positive crossing
_SHARED_NEG = (0, -1)   # for shared negative crossing
_INTERLEAVE_LEFT_FIRST = (0, -1)   # spans a < a' < b < b'
_INTERLEAVE_RIGHT_FIRST = (0, 1)   # spans a' < a < b' < b


def _self_linking(e1, e2):
    if e1 > 0 and e2 > 0:
        return -1
    if e1 < 0 and e2 < 0:
        return 1
    return 0


def canonical_seifert_matrix(b):
    """Seifert matrix of the canonical surface of a knot closure."""
    if closure_component_count(b) != 1:
        raise BraidError("closure is a link, not a knot")
    n = b.strands
    columns = {i: [] for i in range(1, n)}
    for pos, x in enumerate(b.letters):
        columns[abs(x)].append((pos, 1 if x > 0 else -1))
    for i in range(1, n):
        if not columns[i]:
            raise BraidError(f"disconnected diagram: generator {i} never used")
    loops = []  # (column, first position, first sign, second position, second sign)
    for i in range(1, n):
        occ = columns[i]
        for j in range(len(occ) - 1):
            loops.append((i, occ[j][0], occ[j][1], occ[j + 1][0], occ[j + 1][1]))
    m = len(loops)
    rows = [[0] * m for _ in range(m)]
    for x in range(m):
        ci, a, ea, bpos, eb = loops[x]
        rows[x][x] = _self_linking(ea, eb)
        for y in range(x + 1, m):
            cj, a2, ea2, b2, eb2 = loops[y]
            if ci == cj:
                if a2 == bpos:  # consecutive, sharing the middle crossing
                    up, down = _SHARED_POS if eb > 0 else _SHARED_NEG
                    rows[x][y] = up
                    rows[y][x] = down
            elif abs(ci - cj) == 1:
                left, right = (x, y) if ci < cj else (y, x)
                la, lb = loops[left][1], loops[left][3]
                ra, rb = loops[right][1], loops[right][3]
                if la < ra < lb < rb:
                    rows[left][right], rows[right][left] = _INTERLEAVE_LEFT_FIRST
                elif ra < la < rb < lb:
                    rows[left][right], rows[right][left] = _INTERLEAVE_RIGHT_FIRST
    matrix = SeifertMatrix.from_rows(rows)
    return CanonicalSurface(
        seifert_matrix=matrix,
        genus=m // 2,
        crossing_count=len(b.letters),
        strand_count=n,
    )


# -- Burau oracle -----------------------------------------------------------

def _burau_unreduced(letter, n):
    """Unreduced Burau matrix of a single braid letter, over Z[t, 1/t]."""
    t = LaurentPolynomial.monomial(1, 1)
    one = ONE
    zero = LaurentPolynomial.zero()
    rows = [[one if i == j else zero for j in range(n)] for i in range(n)]
    i = abs(letter) - 1
    if letter > 0:
        rows[i][i] = one - t
        rows[i][i + 1] = t
        rows[i + 1][i] = one
        rows[i + 1][i + 1] = zero
    else:
        tinv = LaurentPolynomial.monomial(1, -1)
        rows[i][i] = zero
        rows[i][i + 1] = one
        rows[i + 1][i] = tinv
        rows[i + 1][i + 1] = one - tinv
    return rows


def _laurent_mat_mul(a, b):
    n = len(a)
    zero = LaurentPolynomial.zero()
    out = [[zero] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            c = a[i][k]
            if c.is_zero:
                continue
            for j in range(n):
                if not b[k][j].is_zero:
                    out[i][j] = out[i][j] + c * b[k][j]
    return out


def burau_alexander(b):
    """Alexander polynomial of the closure via the reduced Burau matrix.

    Independent of the Seifert-matrix route: computes
    det(reduced Burau - I) * (1 - t) / (1 - t^n) and normalizes to the
    symmetric representative with value 1 at t = 1.
    """
    if closure_component_count(b) != 1:
        raise BraidError("closure is a link, not a knot")
    n = b.strands
    zero = LaurentPolynomial.zero()
    one = ONE
    full = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for letter in b.letters:
        full = _laurent_mat_mul(full, _burau_unreduced(letter, n))
    # Quotient by the fixed vector (1, ..., 1): the reduced Burau matrix.
    reduced = [
        [full[i][j] - full[n - 1][j] for j in range(n - 1)]
        for i in range(n - 1)
    ]
    for i in range(n - 1):
        reduced[i][i] = reduced[i][i] - one
    det = LaurentMatrix(tuple(map(tuple, reduced))).det()
    t = LaurentPolynomial.monomial(1, 1)
    tn = LaurentPolynomial.monomial(1, n)
    numerator = det * (one - t)
    alex = divexact(numerator, one - tn)
    return _symmetric_normalization(alex)


def _symmetric_normalization(p):
    """Scale by +-t^k to center the breadth and give value 1 at t = 1."""
    if p.is_zero:
        raise ValueError("zero polynomial cannot be an Alexander polynomial")
    shift = p.low + p.high
    if shift % 2:
        raise ValueError("breadth cannot be centered")
    p = p.shifted(-shift // 2)
    value = p(1)
    if value == -1:
        p = -p
    elif value != 1:
        raise ValueError(f"polynomial evaluates to {value} at t = 1")
    return p
