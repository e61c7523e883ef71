import random

import pytest
import sympy

from conftest import random_seifert, random_unimodular
from slicebound import (
    LaurentPolynomial,
    SeifertMatrix,
    SeifertMatrixError,
    UnimodularTransform,
    apply_congruence,
    integer_determinant,
    validate,
)

TREFOIL = SeifertMatrix.from_rows([[-1, 1], [0, -1]])
TORUS_SUBFORM = SeifertMatrix.from_rows([[0, 1], [0, -1]])


def test_validation_rejects_odd_size():
    with pytest.raises(SeifertMatrixError, match="odd-sized matrix"):
        validate([[0]])


def test_validation_rejects_bad_skew():
    with pytest.raises(
        SeifertMatrixError, match=r"skew part not unimodular \(determinant 0\)"
    ):
        validate([[0, 0], [0, 0]])
    with pytest.raises(
        SeifertMatrixError, match=r"skew part not unimodular \(determinant 16\)"
    ):
        validate([[0, 2], [-2, 0]])


def test_validation_rejects_non_square():
    with pytest.raises(SeifertMatrixError, match="not square"):
        validate([[0, 1], [0, -1], [0, 0]])


def test_empty_matrix_is_the_unknot():
    m = validate([])
    assert m.alexander() == LaurentPolynomial.one()
    assert m.signature() == 0
    assert m.genus == 0


def test_alexander_examples():
    assert str(TREFOIL.alexander()) == "t^-1 - 1 + t"
    assert TORUS_SUBFORM.alexander() == LaurentPolynomial.one()
    assert TREFOIL.alexander_degree() == 2
    assert TORUS_SUBFORM.alexander_degree() == 0


def test_signature_examples():
    assert TREFOIL.signature() == -2
    assert TORUS_SUBFORM.signature() == 0
    mirror = SeifertMatrix.from_rows([[1, 0], [-1, 1]])  # transpose of -TREFOIL
    assert mirror.signature() == 2


def _sympy_signature(sym_rows):
    """Independent signature: count real eigenvalue signs via Descartes'
    rule on the characteristic polynomial (all roots are real)."""
    n = len(sym_rows)
    lam = sympy.Symbol("lam")
    charpoly = sympy.Matrix(sym_rows).charpoly(lam)
    coeffs = charpoly.all_coeffs()
    # strip zero roots, then sign changes of p(lam) count positive roots
    zeros = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        zeros += 1
    signs = [sympy.sign(c) for c in coeffs if c != 0]
    pos = sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)
    neg = n - zeros - pos
    return pos - neg


def test_signature_against_sympy_oracle():
    rng = random.Random(3)
    for _ in range(25):
        m = random_seifert(rng, rng.randint(1, 4))
        assert m.signature() == _sympy_signature(m.symmetrization())


def test_congruence_invariance():
    rng = random.Random(17)
    for _ in range(30):
        m = random_seifert(rng, rng.randint(1, 4))
        a = random_unimodular(rng, m.size)
        m2 = apply_congruence(m, a)
        assert m2.alexander() == m.alexander()
        assert m2.signature() == m.signature()


def test_congruence_size_mismatch():
    with pytest.raises(SeifertMatrixError, match="size mismatch"):
        apply_congruence(TREFOIL, UnimodularTransform.identity(4))


def test_alexander_properties():
    rng = random.Random(23)
    for _ in range(50):
        m = random_seifert(rng, rng.randint(1, 5))
        alex = m.alexander()
        assert alex.reversed() == alex  # palindromic
        assert alex(1) == 1
        assert m.alexander_degree() % 2 == 0
        sig = m.signature()
        assert sig % 2 == 0
        assert abs(sig) <= m.alexander_degree() <= m.size
        det_sym = integer_determinant(m.symmetrization())
        assert abs(det_sym) == abs(alex(-1))
        assert abs(alex(-1)) % 2 == 1


def test_unimodular_transform_rejects_singular():
    with pytest.raises(SeifertMatrixError, match="not unimodular"):
        UnimodularTransform(((1, 0), (0, 2)))


def test_integer_determinant_oracle():
    rng = random.Random(41)
    for _ in range(50):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        assert integer_determinant(rows) == int(sympy.Matrix(rows).det())
