"""Transition matrices of the track-preserving twist system, with the
dominant-eigenvalue stretch oracle.

The twists ``w1^-1, w2, w3^-1`` preserve the standard train track and act on
the four independent branch measures ``(mu1, ..., mu4)`` by non-negative
integer matrices; a word in these twists acts by the product of its letter
matrices in reading order. The two remaining branch measures are linear in
the first four and are not tracked. The switch functional
``mu1 + mu2 - mu3 - mu4`` is preserved exactly by every letter, and the
fourth coordinate never feeds back into the others, so spectral questions
are settled on the communicating class that carries the growth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import homology
from .words import Generator, MappingWord

__all__ = [
    "IncidenceMatrix",
    "TransverseMeasure",
    "incidence",
    "is_perron_frobenius",
    "pf_eigenvalue",
    "apply_measure",
    "traintrack_record",
]

SWITCH_TOL = 1e-9

_BASE: dict[Generator, tuple[tuple[int, ...], ...]] = {
    Generator(1, -1): ((1, 0, 0, 0), (1, 1, 0, 0), (0, 0, 1, 0), (1, 0, 0, 1)),
    Generator(2, 1): ((1, 1, 0, 0), (0, 1, 0, 0), (0, 1, 1, 0), (0, 0, 0, 1)),
    Generator(3, -1): ((1, 0, 0, 0), (0, 1, 1, 0), (0, 0, 1, 0), (0, 0, 1, 1)),
}


@dataclass(frozen=True)
class IncidenceMatrix:
    """4x4 non-negative integer matrix acting on branch measure columns."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("incidence matrices are 4x4")
        if any(x < 0 for r in rows for x in r):
            raise ValueError("incidence entries must be non-negative")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls) -> "IncidenceMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(4)) for i in range(4)))

    def __matmul__(self, other: "IncidenceMatrix") -> "IncidenceMatrix":
        a, b = self.entries, other.entries
        return IncidenceMatrix(
            tuple(
                tuple(sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4))
                for i in range(4)
            )
        )

    def apply(self, column: Sequence[float]) -> tuple[float, ...]:
        return tuple(sum(self.entries[i][k] * column[k] for k in range(4)) for i in range(4))


@dataclass(frozen=True)
class TransverseMeasure:
    """Non-negative branch measures ``(mu1, ..., mu4)`` subject to the switch
    condition ``mu1 + mu2 = mu3 + mu4``."""

    mu: tuple[float, float, float, float]

    def __post_init__(self):
        values = tuple(float(x) for x in self.mu)
        if any(x < 0 for x in values):
            raise ValueError("branch measures must be non-negative")
        gap = abs(values[0] + values[1] - values[2] - values[3])
        if gap > SWITCH_TOL:
            raise ValueError(
                f"switch condition mu1 + mu2 = mu3 + mu4 violated by {gap:.3g}"
            )
        object.__setattr__(self, "mu", values)


def incidence(word: MappingWord) -> IncidenceMatrix:
    """Measure transition matrix of a track-preserving word (product of the
    letter matrices in word order). Letters outside ``w1^-1, w2, w3^-1`` do
    not preserve the track and are rejected."""
    acc = IncidenceMatrix.identity()
    for g in word:
        base = _BASE.get(g)
        if base is None:
            raise ValueError(
                f"letter {g} does not preserve the track (allowed: w1^-1, w2, w3^-1)"
            )
        acc = acc @ IncidenceMatrix(base)
    return acc


def apply_measure(matrix: IncidenceMatrix, measure: TransverseMeasure) -> TransverseMeasure:
    """Push a measure through the matrix; the switch condition must hold on
    input and is re-checked on the output."""
    return TransverseMeasure(matrix.apply(measure.mu))


# -- spectral machinery ------------------------------------------------------


def characteristic_polynomial(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Exact integer characteristic polynomial of a small integer matrix,
    leading coefficient first (Faddeev-LeVerrier recursion)."""
    n = len(rows)
    m = [list(map(int, row)) for row in rows]
    coeffs = [1]
    work = [row[:] for row in m]
    for step in range(1, n + 1):
        trace = sum(work[i][i] for i in range(n))
        assert trace % step == 0
        c = -(trace // step)
        coeffs.append(c)
        if step < n:
            shifted = [[work[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
            work = [
                [sum(m[i][k] * shifted[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)
            ]
    return tuple(coeffs)


def _communicating_classes(rows) -> list[list[int]]:
    n = len(rows)
    reach = [[bool(rows[i][j]) or i == j for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    classes: list[list[int]] = []
    seen: set[int] = set()
    for i in range(n):
        if i in seen:
            continue
        cls = [j for j in range(n) if reach[i][j] and reach[j][i]]
        classes.append(cls)
        seen.update(cls)
    return classes


def _block(rows, indices):
    return [[rows[i][j] for j in indices] for i in indices]

def _block_radius(block) -> float:
    if len(block) == 1:
        return float(block[0][0])
    return float(max(abs(z) for z in np.roots([float(c) for c in characteristic_polynomial(block)])))


def _block_is_primitive(block) -> bool:
    n = len(block)
    if n == 1:
        return block[0][0] > 0
    power = [row[:] for row in block]
    for _ in range((n - 1) ** 2 + 1):
        if all(x > 0 for row in power for x in row):
            return True
        power = [
            [sum(power[i][k] * block[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return False


def is_perron_frobenius(matrix: IncidenceMatrix) -> bool:
    """Whether the measure dynamics has a primitive dominant part of growth
    rate above 1.

    Coordinates are grouped into communicating classes; the test passes when
    the spectral radius exceeds 1, is attained on exactly one class, and some
    power of that class's block is entrywise positive (power bound
    ``(b-1)^2 + 1`` for a block of size ``b``). Identity-like and
    single-letter matrices fail: their radius never leaves 1.
    """
    rows = matrix.entries
    classes = _communicating_classes(rows)
    radii = [_block_radius(_block(rows, cls)) for cls in classes]
    rho = max(radii)
    if rho <= 1.0 + 1e-9:
        return False
    dominant = [i for i, r in enumerate(radii) if r >= rho * (1 - 1e-9)]
    if len(dominant) != 1:
        return False
    return _block_is_primitive(_block(rows, classes[dominant[0]]))


def _poly_eval(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def pf_eigenvalue(matrix: IncidenceMatrix) -> float:
    """Dominant eigenvalue, from the exact integer characteristic polynomial.

    The root is bracketed around a companion-matrix estimate, isolated by
    bisection (the polynomial is negative just left of its largest real root
    and positive to the right), and polished with safeguarded Newton steps.
    Requires :func:`is_perron_frobenius` to hold.
    """
    if not is_perron_frobenius(matrix):
        raise ValueError("matrix has no primitive dominant part; no growth eigenvalue")
    exact = characteristic_polynomial(matrix.entries)
    coeffs = [float(c) for c in exact]
    derivative = [c * (len(coeffs) - 1 - i) for i, c in enumerate(coeffs[:-1])]
    roots = np.roots(coeffs)
    estimate = max((z.real for z in roots if abs(z.imag) <= 1e-6 * (1 + abs(z))), default=1.0)

    spread = max(1e-9 * estimate, 1e-12)
    hi = estimate
    for _ in range(200):
        if _poly_eval(coeffs, hi) > 0:
            break
        hi += spread
        spread *= 4
    else:  # pragma: no cover - estimate comes from the same polynomial
        hi = 1.0 + max(sum(row) for row in matrix.entries)
    spread = max(1e-9 * estimate, 1e-12)
    lo = min(estimate, hi) - spread
    for _ in range(200):
        if _poly_eval(coeffs, lo) < 0:
            break
        lo -= spread
        spread *= 4
    else:  # pragma: no cover
        raise RuntimeError("failed to bracket the dominant eigenvalue")

    for _ in range(200):
        if hi - lo <= 1e-13 * max(1.0, hi):
            break
        mid = 0.5 * (lo + hi)
        if _poly_eval(coeffs, mid) < 0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    for _ in range(8):
        slope = _poly_eval(derivative, x)
        if slope == 0:
            break
        step = _poly_eval(coeffs, x) / slope
        nxt = x - step
        if not lo <= nxt <= hi:
            break
        x = nxt
        if abs(step) <= 1e-15 * max(1.0, abs(x)):
            break
    return x


def traintrack_record(word: MappingWord) -> dict:
    """JSON-ready record: matrix, primitivity, growth eigenvalue, and the
    cross-check against the homology stretch factor."""
    matrix = incidence(word)
    primitive = is_perron_frobenius(matrix)
    growth = pf_eigenvalue(matrix) if primitive else None
    stretch = homology.stretch_factor(word)
    delta = abs(growth - stretch) if growth is not None and stretch is not None else None
    return {
        "word": word.render(),
        "incidence": [list(row) for row in matrix.entries],
        "primitive": primitive,
        "pf_eigenvalue": growth,
        "homology_stretch": stretch,
        "stretch_delta": delta,
    }
