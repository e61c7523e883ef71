"""Exact arithmetic for integer Laurent polynomials and their matrices.

Everything here is exact: coefficients are Python ints (arbitrary
precision), determinants are computed fraction-free.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class LaurentPolynomial:
    """An integer Laurent polynomial in canonical trimmed form.

    ``coeffs[i]`` is the coefficient of ``t**(low + i)``.  The first and
    last coefficients are nonzero unless the polynomial is zero, in which
    case ``low == 0`` and ``coeffs == ()``.
    """

    low: int = 0
    coeffs: tuple = ()

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        i, j = 0, len(coeffs)
        while i < j and coeffs[i] == 0:
            i += 1
        while j > i and coeffs[j - 1] == 0:
            j -= 1
        if i == j:
            object.__setattr__(self, "low", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "low", self.low + i)
            object.__setattr__(self, "coeffs", coeffs[i:j])

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(0, ())

    @classmethod
    def one(cls):
        return cls(0, (1,))

    @classmethod
    def monomial(cls, coeff, exponent=0):
        return cls(exponent, (coeff,))

    @classmethod
    def parse(cls, text):
        """Parse the textual rendering, e.g. ``"t^-1 - 1 + t"``."""
        s = text.replace(" ", "").replace("*", "")
        if not s:
            raise ValueError("empty polynomial string")
        if s == "0":
            return cls.zero()
        # protect exponent minus signs before splitting on +/-
        s = s.replace("^-", "^~")
        result = cls.zero()
        for part in re.findall(r"[+-]?[^+-]+", s):
            sign = -1 if part.startswith("-") else 1
            body = part.lstrip("+-").replace("~", "-")
            m = re.fullmatch(r"(\d+)?(t(?:\^(-?\d+))?)?", body)
            if not m or not body or (m.group(1) is None and m.group(2) is None):
                raise ValueError(f"cannot parse polynomial term {part!r}")
            coeff = int(m.group(1)) if m.group(1) is not None else 1
            if m.group(2) is None:
                exponent = 0
            elif m.group(3) is None:
                exponent = 1
            else:
                exponent = int(m.group(3))
            result = result + cls.monomial(sign * coeff, exponent)
        return result

    # -- basic queries --------------------------------------------------

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def high(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no top exponent")
        return self.low + len(self.coeffs) - 1

    def breadth(self):
        """Largest exponent minus smallest exponent."""
        if self.is_zero:
            raise ValueError("breadth undefined for zero polynomial")
        return len(self.coeffs) - 1

    def __bool__(self):
        return not self.is_zero

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.monomial(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        out = [0] * (high - low + 1)
        for k, c in enumerate(self.coeffs):
            out[self.low - low + k] += c
        for k, c in enumerate(other.coeffs):
            out[other.low - low + k] += c
        return LaurentPolynomial(low, tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.low, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.monomial(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.monomial(other)
        if self.is_zero or other.is_zero:
            return LaurentPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPolynomial(self.low + other.low, tuple(out))

    __rmul__ = __mul__

    def shifted(self, k):
        """Multiply by t**k."""
        if self.is_zero:
            return self
        return LaurentPolynomial(self.low + k, self.coeffs)

    def reversed(self):
        """Substitute t -> 1/t."""
        if self.is_zero:
            return self
        return LaurentPolynomial(-self.high, tuple(reversed(self.coeffs)))

    def __call__(self, value):
        """Evaluate at a nonzero rational (or integer) value of t."""
        if self.is_zero:
            return 0
        x = Fraction(value)
        total = Fraction(0)
        for k, c in enumerate(self.coeffs):
            if c:
                total += c * x ** (self.low + k)
        if total.denominator == 1:
            return int(total)
        return total

    # -- rendering ------------------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.low + k
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPolynomial.parse({str(self)!r})"


ZERO = LaurentPolynomial.zero()
ONE = LaurentPolynomial.one()
T = LaurentPolynomial.monomial(1, 1)


def divexact(p, q):
    """Divide p by q, raising ArithmeticError unless the division is exact."""
    if q.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero:
        return ZERO
    rem = list(p.coeffs)
    qc = q.coeffs
    out_len = len(rem) - len(qc) + 1
    if out_len <= 0:
        raise ArithmeticError("inexact Laurent division")
    lead = qc[-1]
    quot = [0] * out_len
    for k in range(out_len - 1, -1, -1):
        c = rem[k + len(qc) - 1]
        if c % lead:
            raise ArithmeticError("inexact Laurent division")
        d = c // lead
        quot[k] = d
        if d:
            for idx, qcoef in enumerate(qc):
                rem[k + idx] -= d * qcoef
    if any(rem):
        raise ArithmeticError("inexact Laurent division")
    return LaurentPolynomial(p.low - q.low, tuple(quot))


@dataclass(frozen=True)
class LaurentMatrix:
    """A square matrix of Laurent polynomials."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        for row in rows:
            if len(row) != len(rows):
                raise ValueError("matrix is not square")
        object.__setattr__(self, "entries", rows)

    @property
    def size(self):
        return len(self.entries)

    def det(self):
        return laurent_determinant(self)


def _cofactor_det(rows):
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return rows[0][0]
    total = ZERO
    for j in range(n):
        if rows[0][j].is_zero:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = rows[0][j] * _cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def laurent_determinant(m):
    """Exact determinant of a square Laurent-polynomial matrix.

    Cofactor expansion for size <= 4, fraction-free Bareiss elimination
    (exact division over the Laurent ring) for larger sizes.
    """
    rows = [list(row) for row in m.entries]
    n = len(rows)
    if n <= 4:
        return _cofactor_det([tuple(row) for row in rows])
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if rows[k][k].is_zero:
            pivot_row = next(
                (i for i in range(k + 1, n) if not rows[i][k].is_zero), None
            )
            if pivot_row is None:
                return ZERO
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]
                rows[i][j] = divexact(num, prev)
            rows[i][k] = ZERO
        prev = rows[k][k]
    result = rows[n - 1][n - 1]
    return result if sign == 1 else -result
