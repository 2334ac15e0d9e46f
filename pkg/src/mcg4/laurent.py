"""Integer-coefficient Laurent polynomials in one named variable.

Arithmetic is exact over Python's arbitrary-precision integers; floating
point only enters through point evaluation and interpolation. Mixing
variables ("s" vs "A") is an error, never a coercion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

__all__ = ["LaurentPoly", "interpolate_laurent"]

INTEGRALITY_TOL = 1e-6


@dataclass(frozen=True)
class LaurentPoly:
    """Sparse Laurent polynomial: ``terms`` holds (exponent, coefficient)
    pairs, stored sorted by exponent with all zero coefficients dropped."""

    var: str
    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        cleaned = tuple(sorted((int(e), int(c)) for e, c in self.terms if c))
        exponents = [e for e, _ in cleaned]
        if len(set(exponents)) != len(exponents):
            raise ValueError("duplicate exponents in term list")
        object.__setattr__(self, "terms", cleaned)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_dict(cls, var: str, coefficients: Mapping[int, int]) -> "LaurentPoly":
        return cls(var, tuple(coefficients.items()))

    @classmethod
    def zero(cls, var: str) -> "LaurentPoly":
        return cls(var, ())

    @classmethod
    def one(cls, var: str) -> "LaurentPoly":
        return cls.monomial(var, 0, 1)

    @classmethod
    def monomial(cls, var: str, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls(var, ((exponent, coefficient),))

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(self.var, ((0, other),) if other else ())
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")
            return other
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly.from_dict(self.var, acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.var, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly.from_dict(self.var, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers: invert a unit explicitly")
        out = LaurentPoly.one(self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure queries --------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_unit(self) -> bool:
        """Units of the integer Laurent ring are exactly the monomials +-x^e."""
        return len(self.terms) == 1 and self.terms[0][1] in (1, -1)

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit:
            raise ValueError(f"{self.text_form()} is not a unit of Z[{self.var},1/{self.var}]")
        e, c = self.terms[0]
        return LaurentPoly.monomial(self.var, -e, c)

    def constant_value(self) -> int:
        """Integer value of a constant polynomial."""
        if self.is_zero:
            return 0
        if len(self.terms) == 1 and self.terms[0][0] == 0:
            return self.terms[0][1]
        raise ValueError(f"{self.text_form()} is not constant")

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, z: complex) -> complex:
        """Value at a nonzero point, by exponent-sorted Horner steps."""
        if z == 0:
            raise ValueError("cannot evaluate a Laurent polynomial at 0")
        if not self.terms:
            return 0j
        z = complex(z)
        acc = complex(self.terms[-1][1])
        for i in range(len(self.terms) - 2, -1, -1):
            gap = self.terms[i + 1][0] - self.terms[i][0]
            acc = acc * z**gap + self.terms[i][1]
        return acc * z ** self.terms[0][0]

    def evaluate_at_i(self) -> tuple[int, int]:
        """Exact value at the imaginary unit, as a Gaussian integer (re, im)."""
        re = im = 0
        for e, c in self.terms:
            r = e % 4
            if r == 0:
                re += c
            elif r == 1:
                im += c
            elif r == 2:
                re -= c
            else:
                im -= c
        return re, im

    # -- serialization --------------------------------------------------------

    def text_form(self) -> str:
        """Signed monomial list in descending exponent order, e.g. ``-A^4 + 2 - A^-2``."""
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for e, c in reversed(self.terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mon = self.var if e == 1 else f"{self.var}^{e}"
                body = mon if mag == 1 else f"{mag}{mon}"
            pieces.append(("-" if c < 0 else "+") + body)
        head = pieces[0][1:] if pieces[0][0] == "+" else "-" + pieces[0][1:]
        return head + "".join(f" {p[0]} {p[1:]}" for p in pieces[1:])

    def json_dict(self) -> dict:
        return {"var": self.var, "terms": [[e, c] for e, c in reversed(self.terms)]}

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPoly":
        return cls(str(data["var"]), tuple((int(e), int(c)) for e, c in data["terms"]))

    def __str__(self) -> str:
        return self.text_form()


def interpolate_laurent(
    samples: Sequence[tuple[complex, complex]],
    exponent_lo: int,
    exponent_hi: int,
    stride: int,
    var: str = "s",
) -> LaurentPoly:
    """Recover the integer Laurent polynomial supported on the exponent grid
    ``exponent_lo, exponent_lo + stride, ..., exponent_hi`` from one point
    evaluation per admissible exponent.

    The Vandermonde-type system must be square: ``len(samples)`` equals the
    grid size, points are pairwise distinct and nonzero. Solved coefficients
    are rounded to integers; a rounding residual of ``INTEGRALITY_TOL`` or
    more is an error (the samples do not come from such a polynomial).
    """
    if stride < 1:
        raise ValueError("stride must be a positive integer")
    if exponent_hi < exponent_lo or (exponent_hi - exponent_lo) % stride:
        raise ValueError("exponent grid is empty or does not land on exponent_hi")
    grid = range(exponent_lo, exponent_hi + 1, stride)
    points = [complex(z) for z, _ in samples]
    values = [complex(v) for _, v in samples]
    if len(samples) != len(grid):
        raise ValueError(f"need exactly {len(grid)} samples for this grid, got {len(samples)}")
    if any(z == 0 for z in points):
        raise ValueError("sample points must be nonzero")
    if len({z for z in points}) != len(points):
        raise ValueError("sample points must be pairwise distinct (singular system)")
    vand = np.array([[z**e for e in grid] for z in points], dtype=complex)
    try:
        coeffs = np.linalg.solve(vand, np.array(values, dtype=complex))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - distinctness is pre-checked
        raise ValueError(f"singular sample system: {exc}") from exc
    out: dict[int, int] = {}
    residual = 0.0
    for e, c in zip(grid, coeffs):
        n = round(c.real)
        residual = max(residual, abs(c - n))
        if n:
            out[e] = int(n)
    if residual >= INTEGRALITY_TOL:
        raise ValueError(
            f"interpolated coefficients are not integral (rounding residual {residual:.3g})"
        )
    return LaurentPoly.from_dict(var, out)
