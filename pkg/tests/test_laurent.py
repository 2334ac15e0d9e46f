"""Exact Laurent arithmetic, evaluation, and interpolation."""

import cmath
import math
import random

import pytest

from mcg4.laurent import LaurentPoly, interpolate_laurent


def P(var, **_):
    return LaurentPoly.from_dict(var, _ or {})


def poly(coeffs, var="s"):
    return LaurentPoly.from_dict(var, coeffs)


def test_product_examples():
    s_plus = poly({1: 1, -1: 1})
    s_minus = poly({1: 1, -1: -1})
    assert s_plus * s_minus == poly({2: 1, -2: -1})
    p = poly({5: 3, 0: -2, -7: 1})
    assert LaurentPoly.one("s") * p == p
    assert poly({2: 1, 0: 1}) * LaurentPoly.zero("s") == LaurentPoly.zero("s")


def test_addition_cancels_to_canonical_form():
    p = poly({3: 2, 1: -1})
    q = poly({3: -2, 0: 5})
    assert (p + q).terms == ((0, 5), (1, -1))
    assert (p - p).is_zero


def test_variable_mismatch_rejected():
    with pytest.raises(ValueError):
        poly({0: 1}, var="s") * poly({0: 1}, var="A")
    with pytest.raises(ValueError):
        poly({0: 1}, var="s") + poly({0: 1}, var="A")


def test_integer_coercion():
    p = poly({2: 1})
    assert p + 1 == poly({2: 1, 0: 1})
    assert 3 * p == poly({2: 3})
    assert 1 - p == poly({0: 1, 2: -1})


def test_evaluate_examples():
    assert poly({2: 1}).evaluate(1j) == pytest.approx(-1)
    # direct substitution oracle: sum of c * z^e
    direct = sum(c * (1j**e) for e, c in {4: 1, 2: 1, 0: 1}.items())
    assert direct == 1
    assert poly({4: 1, 2: 1, 0: 1}).evaluate(1j) == pytest.approx(1)
    assert poly({-1: 1}).evaluate(1j) == pytest.approx(-1j)
    with pytest.raises(ValueError):
        poly({-1: 1}).evaluate(0)


def test_evaluate_is_multiplicative_on_unit_circle():
    rng = random.Random(5)
    for _ in range(40):
        p = poly({rng.randint(-50, 50): rng.randint(-1000, 1000) for _ in range(6)})
        q = poly({rng.randint(-50, 50): rng.randint(-1000, 1000) for _ in range(6)})
        z = cmath.exp(2j * math.pi * rng.random())
        assert (p * q).evaluate(z) == pytest.approx(p.evaluate(z) * q.evaluate(z), abs=1e-10)


def test_evaluate_at_i_matches_float_path():
    rng = random.Random(11)
    for _ in range(30):
        p = poly({rng.randint(-9, 9): rng.randint(-50, 50) for _ in range(5)})
        re, im = p.evaluate_at_i()
        assert complex(re, im) == pytest.approx(p.evaluate(1j), abs=1e-12)


def test_units():
    assert poly({3: -1}).is_unit
    assert poly({3: -1}).unit_inverse() == poly({-3: -1})
    assert not poly({3: 2}).is_unit
    assert not poly({1: 1, 0: 1}).is_unit
    with pytest.raises(ValueError):
        poly({1: 1, 0: 1}).unit_inverse()


def test_text_and_json_forms():
    p = LaurentPoly.from_dict("A", {4: -1, 0: 2, -2: -1})
    assert p.text_form() == "-A^4 + 2 - A^-2"
    assert p.json_dict() == {"var": "A", "terms": [[4, -1], [0, 2], [-2, -1]]}
    assert LaurentPoly.from_json(p.json_dict()) == p
    assert LaurentPoly.zero("s").text_form() == "0"
    assert poly({1: 1, -1: 3}).text_form() == "s + 3s^-1"


def test_interpolate_single_point():
    target = poly({2: 1})
    z = 0.7 + 0.3j
    rebuilt = interpolate_laurent([(z, target.evaluate(z))], 2, 2, 1)
    assert rebuilt == target


def test_interpolate_round_trip_stride_two():
    target = poly({4: 1, 2: 1, 0: 1})
    points = [cmath.exp(2j * math.pi * (j + 0.13) / 3) for j in range(3)]
    samples = [(z, target.evaluate(z)) for z in points]
    assert interpolate_laurent(samples, 0, 4, 2) == target


def test_interpolate_errors():
    with pytest.raises(ValueError):
        interpolate_laurent([(1.0, 1.0), (1.0, 2.0)], 0, 1, 1)  # duplicate points
    with pytest.raises(ValueError):
        interpolate_laurent([(1.0, 1.0)], 0, 1, 1)  # sample count != grid size
    with pytest.raises(ValueError):
        interpolate_laurent([(0.0, 1.0)], 0, 0, 1)  # zero point
    # samples of s + 1/2 are not an integer polynomial on support {0, 1}
    with pytest.raises(ValueError):
        interpolate_laurent([(1.0, 1.5), (2.0, 2.5)], 0, 1, 1)


def test_interpolate_round_trip_random():
    rng = random.Random(2024)
    for _ in range(20):
        coeffs = {e: rng.randint(-9, 9) for e in range(-4, 5)}
        target = poly(coeffs)
        grid = range(-4, 5)
        points = [cmath.exp(2j * math.pi * (j + 0.21) / len(grid)) for j in range(len(grid))]
        samples = [(z, target.evaluate(z)) for z in points]
        assert interpolate_laurent(samples, -4, 4, 1) == target
