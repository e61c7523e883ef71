"""Congruence reduction of a Seifert matrix to nested block form.

The reduction peels off hyperbolic pairs (2x2 blocks [[0,0],[1,0]]) from a
degenerate Seifert matrix until a nonsingular core of size 2d remains,
where 2d is the breadth of the Alexander polynomial.  The lower-right
block that is left over represents a knot with trivial Alexander
polynomial; the whole computation is returned as a machine-checkable
certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import ONE
from .seifert import (
    SeifertMatrix,
    UnimodularTransform,
    congruent,
    identity,
    integer_determinant,
    mat_mul,
)


class ReductionError(RuntimeError):
    pass


def xgcd(a, b):
    """Extended gcd: returns (g, x, y) with g = a*x + b*y, g >= 0."""
    prev_x, x = 1, 0
    prev_y, y = 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        prev_x, x = x, prev_x - q * x
        prev_y, y = y, prev_y - q * y
    if a < 0:
        a, prev_x, prev_y = -a, -prev_x, -prev_y
    return a, prev_x, prev_y


def primitive_kernel_vector(m):
    """A primitive integer vector v with M v = 0, or None if det(M) != 0.

    Deterministic: built from the first free column of the rational
    reduced row echelon form, scaled to integers of content 1 with the
    first nonzero entry positive.
    """
    n = m.size
    a = [[Fraction(x) for x in row] for row in m.entries]
    pivots = {}  # column -> pivot row
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(n):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots[c] = r
        r += 1
        if r == n:
            break
    free = next((c for c in range(n) if c not in pivots), None)
    if free is None:
        return None
    v = [Fraction(0)] * n
    v[free] = Fraction(1)
    for c, row in pivots.items():
        v[c] = -a[row][free]
    denom = 1
    for x in v:
        denom = denom * x.denominator // xgcd(denom, x.denominator)[0]
    ints = [int(x * denom) for x in v]
    content = 0
    for x in ints:
        content = xgcd(content, x)[0]
    ints = [x // content for x in ints]
    first = next(x for x in ints if x)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def complete_to_basis(v):
    """Complete a primitive vector to a unimodular basis, as the last column.

    Returns an integer matrix B with det +-1 whose last column is v.
    """
    n = len(v)
    w = list(v)
    cols = identity(n)  # accumulates the inverse of the reducing row ops
    for i in range(1, n):
        if w[i] == 0:
            continue
        g, x, y = xgcd(w[0], w[i])
        aa, bb = w[0] // g, w[i] // g
        w[0], w[i] = g, 0
        for r in range(n):
            c0, ci = cols[r][0], cols[r][i]
            cols[r][0] = c0 * aa + ci * bb
            cols[r][i] = -c0 * y + ci * x
    if w[0] == -1:
        w[0] = 1
        for r in range(n):
            cols[r][0] = -cols[r][0]
    if w[0] != 1:
        raise ValueError("vector is not primitive")
    # move the column holding v (column 0) to the end
    return [row[1:] + row[:1] for row in cols]


# -- elementary congruence moves (mutating matrix and transform in place) --

def _addmul(m, t, j, i, c):
    """Basis change e_j += c * e_i."""
    if c == 0:
        return
    for r in range(len(m)):
        m[r][j] += c * m[r][i]
    for r in range(len(m)):
        m[j][r] += c * m[i][r]
    for r in range(len(t)):
        t[r][j] += c * t[r][i]


def _swap(m, t, i, j):
    m[i], m[j] = m[j], m[i]
    for row in m:
        row[i], row[j] = row[j], row[i]
    for row in t:
        row[i], row[j] = row[j], row[i]


def _negate(m, t, i):
    for r in range(len(m)):
        m[r][i] = -m[r][i]
    for r in range(len(m)):
        m[i][r] = -m[i][r]
    for r in range(len(t)):
        t[r][i] = -t[r][i]


def peel_hyperbolic_pair(m):
    """Split one hyperbolic pair off a degenerate Seifert matrix.

    Returns (A, M') with M' = A^T M A such that the last column of M' is
    zero, its last row is (0, ..., 0, 1, 0), the entry above the 1 on the
    diagonal vanishes, and row and column at the second-to-last index
    agree (so the pair can be peeled off the block form).
    """
    s = m.size
    if s < 2 or integer_determinant(m.rows) != 0:
        raise ReductionError("matrix is nondegenerate, nothing to peel")
    v = primitive_kernel_vector(m)
    basis = complete_to_basis(list(v))
    cur = congruent(m.rows, basis)
    t = basis  # transform accumulated so far (already applied to cur)
    t = [list(row) for row in t]
    last = s - 1
    assert all(cur[r][last] == 0 for r in range(s))
    # Euclidean phase: fold the last row into column s-2.  The last row of
    # cur equals the last row of the unimodular skew part, so its gcd is 1.
    tcol = s - 2
    for i in range(s - 2):
        while cur[last][i] != 0:
            if cur[last][tcol] != 0:
                q = cur[last][tcol] // cur[last][i]
                _addmul(cur, t, tcol, i, -q)
            if cur[last][i] != 0:
                _swap(cur, t, tcol, i)
    if cur[last][tcol] == -1:
        _negate(cur, t, tcol)
    if cur[last][tcol] != 1:
        raise ReductionError("reduction invariant violated: gcd of last row")
    # Normalization: adding the last basis vector into e_j changes only
    # entry (j, s-2), since column s-1 is zero and row s-1 is (0,..,1,0).
    _addmul(cur, t, s - 2, last, -cur[s - 2][s - 2])
    for j in range(s - 2):
        _addmul(cur, t, j, last, cur[s - 2][j] - cur[j][s - 2])
    assert all(cur[r][last] == 0 for r in range(s))
    assert cur[last] == [0] * (s - 2) + [1, 0]
    assert cur[s - 2][s - 2] == 0
    assert all(cur[j][s - 2] == cur[s - 2][j] for j in range(s - 2))
    return UnimodularTransform(tuple(map(tuple, t))), SeifertMatrix.from_rows(cur)


def _phi(s_rows, u, v):
    """Evaluate the bilinear form u^T S v."""
    total = 0
    for i, ui in enumerate(u):
        if ui:
            row = s_rows[i]
            total += ui * sum(row[j] * vj for j, vj in enumerate(v) if vj)
    return total


def symplectic_completion(s_rows):
    """Transform a unimodular skew form to the standard symplectic form.

    Returns A with A^T S A equal to the direct sum of [[0,-1],[1,0]]
    blocks.  Classical constructive Witt argument: repeatedly pick a basis
    vector e, find f with phi(e, f) = 1 by extended gcd, and reduce the
    remaining vectors into the orthogonal complement of the pair.
    """
    s_rows = [list(row) for row in s_rows]
    n = len(s_rows)
    for i in range(n):
        if len(s_rows[i]) != n:
            raise ValueError("matrix is not square")
        for j in range(n):
            if s_rows[i][j] != -s_rows[j][i]:
                raise ValueError("input is not skew-symmetric")
    if integer_determinant(s_rows) != 1:
        raise ValueError("skew form is not unimodular")
    basis = [[int(i == j) for j in range(n)] for i in range(n)]
    out_cols = []
    while basis:
        e = basis.pop(0)
        vals = [_phi(s_rows, e, b) for b in basis]
        g, coeffs = 0, [0] * len(basis)
        for k, val in enumerate(vals):
            if val == 0:
                continue
            g2, x, y = xgcd(g, val)
            coeffs = [x * c for c in coeffs]
            coeffs[k] = y
            g = g2
        if g != 1:
            raise ReductionError(
                "reduction invariant violated: no symplectic partner"
            )
        completion = complete_to_basis(coeffs)
        new_vecs = [
            [
                sum(completion[k][j] * basis[k][r] for k in range(len(basis)))
                for r in range(n)
            ]
            for j in range(len(basis))
        ]
        f = new_vecs[-1]
        assert _phi(s_rows, e, f) == 1
        rest = []
        for b in new_vecs[:-1]:
            ce = _phi(s_rows, e, b)
            cf = _phi(s_rows, f, b)
            rest.append(
                [bi - ce * fi + cf * ei for bi, fi, ei in zip(b, f, e)]
            )
        out_cols.append(f)
        out_cols.append(e)
        basis = rest
    a = [[out_cols[j][i] for j in range(n)] for i in range(n)]
    assert congruent_is_standard_symplectic(congruent(s_rows, a))
    return UnimodularTransform(tuple(map(tuple, a)))


def congruent_is_standard_symplectic(rows):
    """True iff rows is the direct sum of [[0,-1],[1,0]] blocks."""
    n = len(rows)
    if n % 2:
        return False
    for i in range(n):
        for j in range(n):
            if i // 2 == j // 2 and i != j:
                want = -1 if i < j else 1
            else:
                want = 0
            if rows[i][j] != want:
                return False
    return True


def check_block_form(m, d):
    """Check the nested hyperbolic block form outside the 2d core.

    The conditions for the pair at level i live in the leading principal
    block of size 2g-2i+2 (the matrix the i-th peel acted on); outside
    that block the pair's row and column belong to the outer levels'
    coupling vectors.  Returns (ok, problem) where problem names the
    first violated condition, or None.
    """
    rows = m.entries if isinstance(m, SeifertMatrix) else m
    n = len(rows)
    if not 0 <= 2 * d <= n:
        return False, f"d={d} out of range for size {n}"
    g = n // 2
    for i in range(1, g - d + 1):
        p = n - 2 * i  # 0-based second-to-last index of the level-i block
        q = p + 1
        for r in range(q + 1):
            if rows[r][q] != 0:
                return False, f"column {q + 1} not zero at row {r + 1}"
        for c in range(q + 1):
            want = 1 if c == p else 0
            if rows[q][c] != want:
                return False, f"row {q + 1} wrong at column {c + 1}"
        for c in range(p, n):
            if rows[p][c] != 0:
                return False, f"row {p + 1} not zero at column {c + 1}"
        for r in range(p):
            if rows[r][p] != rows[p][r]:
                return (
                    False,
                    f"row/column asymmetry at pair index {p + 1}, row {r + 1}",
                )
    return True, None


@dataclass(frozen=True)
class ReductionCertificate:
    """Verified output of the block reduction.

    ``reduced == transform^T M transform`` is in nested block form with a
    nonsingular 2d x 2d core (2d = breadth of the Alexander polynomial)
    and a lower-right trivial-Alexander subform.
    """

    d: int
    transform: UnimodularTransform
    reduced: SeifertMatrix
    core: tuple
    trivial_subform: SeifertMatrix
    pair_vectors: tuple

    def to_json(self):
        return {
            "d": self.d,
            "transform": self.transform.rows,
            "reduced": self.reduced.rows,
            "trivial_subform": self.trivial_subform.rows,
            "alexander": str(self.reduced.alexander()),
            "alexander_of_subform": str(self.trivial_subform.alexander()),
        }


def _pair_vectors(rows, d):
    n = len(rows)
    g = n // 2
    vecs = []
    for i in range(1, g - d + 1):
        p = n - 2 * i
        vecs.append(tuple(rows[p][:p]))
    return tuple(vecs)


def certificate_problem(m, cert):
    """Name the first violated certificate invariant, or return None."""
    n = m.size
    if cert.transform.size != n or cert.reduced.size != n:
        return "size mismatch"
    if not 0 <= 2 * cert.d <= n:
        return "d out of range"
    if cert.transform.det() not in (1, -1):
        return "transform not unimodular"
    recomputed = congruent(m.rows, cert.transform.rows)
    if recomputed != cert.reduced.rows:
        return "reduced matrix does not equal transform^T M transform"
    d2 = 2 * cert.d
    if m.alexander_degree() != d2:
        return "degree mismatch"
    if [list(r) for r in cert.core] != cert.reduced.submatrix(0, d2):
        return "core is not the top-left block of the reduced matrix"
    if cert.trivial_subform.rows != cert.reduced.submatrix(d2, n):
        return "subform is not the lower-right block of the reduced matrix"
    ok, problem = check_block_form(cert.reduced, cert.d)
    if not ok:
        return f"block form violated: {problem}"
    if cert.d and integer_determinant([list(r) for r in cert.core]) == 0:
        return "core determinant is zero"
    if cert.trivial_subform.alexander() != ONE:
        return "subform Alexander polynomial is not 1"
    if not congruent_is_standard_symplectic(cert.reduced.skew_part()):
        return "skew part of reduced matrix is not standard symplectic"
    return None


def _embed(block_rows, n):
    """Place a k x k block in the top-left of an n x n identity."""
    k = len(block_rows)
    out = identity(n)
    for i in range(k):
        for j in range(k):
            out[i][j] = block_rows[i][j]
    return out


def reduce_to_block_form(m):
    """Run the full reduction and return a verified certificate.

    Iteratively peels hyperbolic pairs off the leading block until its
    determinant is nonzero, then removes the couplings between the
    peeled levels with elementary moves and standardizes the skew part
    of the core by a symplectic completion.
    """
    n = m.size
    rows = m.rows
    total = identity(n)
    s = n
    while s >= 2:
        block = [row[:s] for row in rows[:s]]
        if integer_determinant(block) != 0:
            break
        a_blk, _ = peel_hyperbolic_pair(SeifertMatrix.from_rows(block))
        a_full = _embed(a_blk.rows, n)
        rows = congruent(rows, a_full)
        total = mat_mul(total, a_full)
        s -= 2
    d2 = s
    k = (n - d2) // 2  # number of peeled levels; level 1 is the outermost
    # Remove the couplings between levels, innermost level first.  At
    # each level column q is zero inside its block and row q is a unit
    # vector there, so adding e_q into another basis vector is an almost
    # single-entry move; the stray entries it leaves at outer levels are
    # cleaned when those levels are processed.
    for lvl in range(k, 0, -1):
        p = n - 2 * lvl
        q = p + 1
        # row p must vanish at the inner levels' p-columns
        for j in range(k, lvl, -1):
            _addmul(rows, total, p, n - 2 * j + 1, -rows[p][n - 2 * j])
        for j in range(lvl + 1, k + 1):
            pj = n - 2 * j
            # inner rows must vanish at column p; inner hyperbolic rows
            # must agree with row p's entry at their q-column
            _addmul(rows, total, pj, q, -rows[pj][p])
            _addmul(rows, total, pj + 1, q, rows[p][pj + 1] - rows[pj + 1][p])
        _addmul(rows, total, p, q, -rows[p][p])
    if d2:
        skew = [
            [rows[i][j] - rows[j][i] for j in range(d2)] for i in range(d2)
        ]
        comp = symplectic_completion(skew)
        a_full = _embed(comp.rows, n)
        rows = congruent(rows, a_full)
        total = mat_mul(total, a_full)
    cert = ReductionCertificate(
        d=d2 // 2,
        transform=UnimodularTransform(tuple(map(tuple, total))),
        reduced=SeifertMatrix.from_rows(rows),
        core=tuple(tuple(row[:d2]) for row in rows[:d2]),
        trivial_subform=SeifertMatrix.from_rows(
            [row[d2:] for row in rows[d2:]]
        ),
        pair_vectors=_pair_vectors(rows, d2 // 2),
    )
    problem = certificate_problem(m, cert)
    if problem is not None:
        raise ReductionError(f"reduction invariant violated: {problem}")
    return cert
