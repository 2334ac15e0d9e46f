"""Exact 2x2 ring matrices and the numeric eigenpair helper."""

import math
import random

import numpy as np
import pytest

from mcg4.laurent import LaurentPoly
from mcg4.mat2 import RingMat2, eigenpair_2x2, mat2_inverse, mat2_mul


def const_mat(rows):
    return RingMat2.from_rows(rows, var="s")


def test_identity_is_neutral():
    m = const_mat(((2, -1), (-1, 1)))
    ident = RingMat2.identity("s")
    assert mat2_mul(ident, m) == m
    assert mat2_mul(m, ident) == m


def test_integer_products_match_hand_oracle():
    m = const_mat(((0, 1), (-1, 1)))
    cube = m @ m @ m
    assert cube == const_mat(((-1, 0), (0, -1)))
    upper = const_mat(((1, 1), (0, 1)))
    lower = const_mat(((1, 0), (-1, 1)))
    assert upper @ lower == const_mat(((0, 1), (-1, 1)))


def test_mixed_kind_product_rejected():
    with pytest.raises(TypeError):
        mat2_mul(const_mat(((1, 0), (0, 1))), np.eye(2, dtype=complex))


def test_mixed_variable_rejected():
    with pytest.raises(ValueError):
        RingMat2(
            (
                (LaurentPoly.one("s"), LaurentPoly.zero("A")),
                (LaurentPoly.zero("s"), LaurentPoly.one("s")),
            )
        )


def test_inverse_examples():
    ident = RingMat2.identity("s")
    assert mat2_inverse(ident) == ident
    s = LaurentPoly.monomial("s", 1)
    diag = RingMat2.from_rows(((s, 0), (0, -1)), var="s")
    inv = mat2_inverse(diag)
    assert inv == RingMat2.from_rows(((LaurentPoly.monomial("s", -1), 0), (0, -1)), var="s")
    assert diag @ inv == ident


def test_inverse_needs_unit_determinant():
    s = LaurentPoly.monomial("s", 1)
    m = RingMat2.from_rows(((s, 0), (0, 1 + LaurentPoly.zero("s"))), var="s")
    m = RingMat2.from_rows(((s + 1, 0), (0, 1)), var="s")  # det = s + 1
    with pytest.raises(ValueError):
        mat2_inverse(m)


def test_inverse_round_trip_random_unimodular():
    rng = random.Random(31)
    s = LaurentPoly.monomial("s", 1)
    gens = [
        RingMat2.from_rows(((1, s), (0, 1)), var="s"),
        RingMat2.from_rows(((1, 0), (LaurentPoly.monomial("s", -1), 1)), var="s"),
        RingMat2.from_rows(((0, 1), (-1, 0)), var="s"),
    ]
    ident = RingMat2.identity("s")
    for _ in range(25):
        m = ident
        for _ in range(rng.randint(1, 6)):
            m = m @ rng.choice(gens)
        assert m @ mat2_inverse(m) == ident
        assert mat2_inverse(m) @ m == ident


def test_eigenpair_examples():
    lam1, lam2 = eigenpair_2x2(np.eye(2, dtype=complex))
    assert (lam1, lam2) == (1, 1)
    lam1, lam2 = eigenpair_2x2(np.array([[2, -1], [-1, 1]], dtype=complex))
    golden = (3 + math.sqrt(5)) / 2
    assert lam1 == pytest.approx(golden, rel=1e-12)
    assert lam2 == pytest.approx((3 - math.sqrt(5)) / 2, rel=1e-12)
    lam1, lam2 = eigenpair_2x2(np.array([[0, 1], [-1, 0]], dtype=complex))
    assert lam1 == pytest.approx(1j)
    assert lam2 == pytest.approx(-1j)


def test_eigenpair_trace_and_determinant_identities():
    rng = random.Random(77)
    for _ in range(50):
        m = np.array(
            [[complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(2)] for _ in range(2)]
        )
        lam1, lam2 = eigenpair_2x2(m)
        tr = m[0, 0] + m[1, 1]
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        assert lam1 + lam2 == pytest.approx(tr, rel=1e-10, abs=1e-10)
        assert lam1 * lam2 == pytest.approx(det, rel=1e-10, abs=1e-10)
        assert abs(lam1) >= abs(lam2)


def test_scalar_detection():
    s2 = LaurentPoly.monomial("s", 2)
    scalar = RingMat2.from_rows(((s2, 0), (0, s2)), var="s")
    assert scalar.is_scalar
    assert not RingMat2.from_rows(((s2, 1), (0, s2)), var="s").is_scalar
    assert not RingMat2.from_rows(((s2, 0), (0, -s2)), var="s").is_scalar
