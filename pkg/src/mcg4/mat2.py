"""2x2 matrices over a Laurent ring, and small numeric 2x2 helpers.

Exact matrices (:class:`RingMat2`) carry :class:`~mcg4.laurent.LaurentPoly`
entries sharing one variable and support exact products and unit-determinant
inverses. Numeric 2x2 work uses plain complex numpy arrays.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .laurent import LaurentPoly

__all__ = ["RingMat2", "mat2_mul", "mat2_inverse", "eigenpair_2x2"]

Rows = tuple[tuple[LaurentPoly, LaurentPoly], tuple[LaurentPoly, LaurentPoly]]


@dataclass(frozen=True)
class RingMat2:
    entries: Rows

    def __post_init__(self):
        variables = {p.var for row in self.entries for p in row}
        if len(variables) != 1:
            raise ValueError(f"matrix entries use mixed variables: {sorted(variables)}")

    @property
    def var(self) -> str:
        return self.entries[0][0].var

    @classmethod
    def from_rows(cls, rows, var: str) -> "RingMat2":
        """Build from a 2x2 nest of LaurentPoly or int entries."""

        def lift(x):
            if isinstance(x, LaurentPoly):
                return x
            return LaurentPoly(var, ((0, int(x)),) if x else ())

        (a, b), (c, d) = rows
        return cls(((lift(a), lift(b)), (lift(c), lift(d))))

    @classmethod
    def identity(cls, var: str) -> "RingMat2":
        return cls.from_rows(((1, 0), (0, 1)), var)

    def __matmul__(self, other: "RingMat2") -> "RingMat2":
        if not isinstance(other, RingMat2):
            return NotImplemented
        (a, b), (c, d) = self.entries
        (e, f), (g, h) = other.entries
        return RingMat2(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))

    def scaled(self, factor) -> "RingMat2":
        (a, b), (c, d) = self.entries
        return RingMat2(((a * factor, b * factor), (c * factor, d * factor)))

    def determinant(self) -> LaurentPoly:
        (a, b), (c, d) = self.entries
        return a * d - b * c

    def trace(self) -> LaurentPoly:
        return self.entries[0][0] + self.entries[1][1]

    def inverse(self) -> "RingMat2":
        """Exact inverse; defined only when the determinant is a unit monomial."""
        det = self.determinant()
        if not det.is_unit:
            raise ValueError(
                f"determinant {det.text_form()} is not a unit; inverse leaves the ring"
            )
        u = det.unit_inverse()
        (a, b), (c, d) = self.entries
        return RingMat2(((d * u, -b * u), (-c * u, a * u)))

    @property
    def is_scalar(self) -> bool:
        """Whether the matrix is an exact Laurent-scalar multiple of the identity."""
        (a, b), (c, d) = self.entries
        return b.is_zero and c.is_zero and a == d

    def evaluate(self, z: complex) -> np.ndarray:
        """Entrywise evaluation at a nonzero point, as a complex 2x2 array."""
        return np.array(
            [[self.entries[i][j].evaluate(z) for j in (0, 1)] for i in (0, 1)],
            dtype=complex,
        )

    def evaluate_at_i(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Exact entrywise value at the imaginary unit, as Gaussian-integer pairs."""
        return tuple(
            tuple(self.entries[i][j].evaluate_at_i() for j in (0, 1)) for i in (0, 1)
        )

    def json_matrix(self) -> list:
        return [[self.entries[i][j].json_dict() for j in (0, 1)] for i in (0, 1)]

    def __str__(self) -> str:
        rows = [[self.entries[i][j].text_form() for j in (0, 1)] for i in (0, 1)]
        return f"[[{rows[0][0]}, {rows[0][1]}], [{rows[1][0]}, {rows[1][1]}]]"


def mat2_mul(m, n):
    """Product of two 2x2 matrices of the same kind (exact or numeric)."""
    if isinstance(m, RingMat2) and isinstance(n, RingMat2):
        return m @ n
    if isinstance(m, np.ndarray) and isinstance(n, np.ndarray):
        return m @ n
    raise TypeError(
        f"mat2_mul needs two matrices of the same kind, got {type(m).__name__} and {type(n).__name__}"
    )


def mat2_inverse(m: RingMat2) -> RingMat2:
    return m.inverse()


def eigenpair_2x2(m) -> tuple[complex, complex]:
    """Both roots of ``x^2 - tr(m) x + det(m)``, sorted by descending modulus
    (ties: descending real part, then descending imaginary part).

    The larger-magnitude root is computed first from the stable branch of the
    quadratic formula and the other is recovered as ``det / root``.
    """
    arr = np.asarray(m, dtype=complex)
    tr = arr[0, 0] + arr[1, 1]
    det = arr[0, 0] * arr[1, 1] - arr[0, 1] * arr[1, 0]
    disc = cmath.sqrt(tr * tr - 4 * det)
    if (tr.conjugate() * disc).real < 0:
        disc = -disc
    first = (tr + disc) / 2
    second = det / first if first != 0 else (tr - disc) / 2
    ordered = sorted((first, second), key=lambda z: (-abs(z), -z.real, -z.imag))
    return ordered[0], ordered[1]
