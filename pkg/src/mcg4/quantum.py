"""Braid-matrix representations over Laurent rings, their root-of-unity
specializations, and the spectral convergence experiments built on them.

Three families share one evaluation engine:

* the universal 2x2 representation over ``Z[s, 1/s]``, whose value at
  ``s = i`` is a power of ``i`` times the integer homology matrix;
* the Kauffman-bracket (skein) representation over ``Z[A, 1/A]``, with only
  even powers of ``A`` in every entry, agreeing with the universal family
  under ``A^2 = -i  <->  s = i``;
* numeric level families: the su(n) matrices at ``q = exp(2 pi i/(k+n))``
  and skein matrices specialized at a scheduled primitive (4k+8)-th root of
  unity whose square drifts to ``-i`` as the level grows.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Mapping, Sequence

import numpy as np

from . import homology
from .laurent import LaurentPoly, interpolate_laurent
from .mat2 import RingMat2, eigenpair_2x2
from .words import MappingWord

__all__ = [
    "UNIVERSAL_VAR",
    "SKEIN_VAR",
    "DOMINANT_EIGENVALUE_THRESHOLD",
    "QuantumLevel",
    "RootSchedulePoint",
    "ConvergenceRow",
    "evaluate_word",
    "universal_generator_images",
    "skein_generator_images",
    "universal_rep",
    "skein_rep",
    "geometric_rep",
    "coprime_offset",
    "root_schedule",
    "level_matrix",
    "trace_convergence",
    "convergence_csv",
    "infinite_order_certificate",
    "scalar_kernel_test",
    "reconstruct_skein",
]

UNIVERSAL_VAR = "s"
SKEIN_VAR = "A"

# |dominant eigenvalue| must clear the unit circle by this margin before it
# is reported; at small levels the spectrum can sit on the circle.
DOMINANT_EIGENVALUE_THRESHOLD = 1.0 + 1e-9


def _poly(var: str, coeffs: dict[int, int]) -> LaurentPoly:
    return LaurentPoly.from_dict(var, coeffs)


# Half-twist images in the universal family: both outer twists act by the
# same upper-triangular matrix, the middle twist by a lower-triangular one.
_UNIVERSAL_OUTER = RingMat2(
    (
        (_poly("s", {1: 1}), _poly("s", {3: -1, 1: -1, -1: -1})),
        (_poly("s", {}), _poly("s", {-1: -1})),
    )
)
_UNIVERSAL_MIDDLE = RingMat2(
    (
        (_poly("s", {1: 1}), _poly("s", {})),
        (_poly("s", {-1: 1}), _poly("s", {-1: -1})),
    )
)

# Skein images in the rescaled tangle basis, linearized by A^-2; every
# exponent is even, so entries live in Z[A^2, A^-2].
_SKEIN_OUTER = RingMat2(
    (
        (_poly("A", {-2: 1}), _poly("A", {2: -1})),
        (_poly("A", {}), _poly("A", {2: -1})),
    )
)
_SKEIN_MIDDLE = RingMat2(
    (
        (_poly("A", {2: -1}), _poly("A", {})),
        (_poly("A", {-2: -1}), _poly("A", {-2: 1})),
    )
)


def universal_generator_images() -> dict[int, RingMat2]:
    """Generator images of the universal representation (copy, safe to edit)."""
    return {1: _UNIVERSAL_OUTER, 2: _UNIVERSAL_MIDDLE, 3: _UNIVERSAL_OUTER}


def skein_generator_images() -> dict[int, RingMat2]:
    """Generator images of the skein representation (copy, safe to edit)."""
    return {1: _SKEIN_OUTER, 2: _SKEIN_MIDDLE, 3: _SKEIN_OUTER}


def evaluate_word(word: MappingWord, images: Mapping[int, RingMat2] | Mapping[int, np.ndarray]):
    """Image of a word under the representation sending generator ``i`` to
    ``images[i]``; inverse letters use exact ring inverses or numeric ones
    depending on the kind of the images."""
    sample = next(iter(images.values()))
    if isinstance(sample, RingMat2):
        inverses = {i: m.inverse() for i, m in images.items()}
        acc = RingMat2.identity(sample.var)
        for g in word:
            acc = acc @ (images[g.index] if g.sign == 1 else inverses[g.index])
        return acc
    numeric = {i: np.asarray(m, dtype=complex) for i, m in images.items()}
    inverses = {i: np.linalg.inv(m) for i, m in numeric.items()}
    acc = np.eye(2, dtype=complex)
    for g in word:
        acc = acc @ (numeric[g.index] if g.sign == 1 else inverses[g.index])
    return acc


@lru_cache(maxsize=1024)
def universal_rep(word: MappingWord) -> RingMat2:
    """Exact image of a word over ``Z[s, 1/s]``."""
    return evaluate_word(word, {1: _UNIVERSAL_OUTER, 2: _UNIVERSAL_MIDDLE, 3: _UNIVERSAL_OUTER})


@lru_cache(maxsize=1024)
def skein_rep(word: MappingWord) -> RingMat2:
    """Exact image of a word over ``Z[A, 1/A]``; all exponents are even."""
    return evaluate_word(word, {1: _SKEIN_OUTER, 2: _SKEIN_MIDDLE, 3: _SKEIN_OUTER})


def scalar_kernel_test(word: MappingWord) -> bool:
    """Whether the universal image is an exact scalar multiple of the
    identity; this picks out exactly the half-translation classes."""
    return universal_rep(word).is_scalar


@dataclass(frozen=True)
class QuantumLevel:
    """Rank parameter ``n >= 2`` and level ``k >= 1`` of an su(n) family; the
    evaluation point is ``q = exp(2 pi i/(k+n))``."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"rank parameter n must be >= 2, got {self.n}")
        if self.k < 1:
            raise ValueError(f"level k must be >= 1, got {self.k}")

    @property
    def order(self) -> int:
        return self.k + self.n

    def q_power(self, x: float) -> complex:
        """Principal branch ``q^x = exp(2 pi i x/(k+n))`` for rational x."""
        return cmath.exp(2j * math.pi * x / self.order)

    @property
    def q(self) -> complex:
        return self.q_power(1.0)


def _geometric_generators(level: QuantumLevel, kind: str) -> dict[int, np.ndarray]:
    if kind not in ("tilde", "rescaled"):
        raise ValueError(f"kind must be 'tilde' or 'rescaled', got {kind!r}")
    if level.order < 3:
        raise ValueError("need k + n >= 3 so that 1 + q is invertible")
    q = level.q
    prefactor = level.q_power(-(level.n + 1) / (2 * level.n))
    outer = prefactor * np.array([[q, 0], [0, -1]], dtype=complex)
    middle = prefactor / (1 + q) * np.array([[-1, q**3 + q**2 + q], [1, q**2]], dtype=complex)
    if kind == "tilde":
        return {1: outer, 2: middle, 3: outer}
    basis = np.array([[1, q * q + q + 1], [0, q + 1]], dtype=complex)
    basis_inv = np.linalg.inv(basis)
    scale = level.q_power(1 / (2 * level.n))
    outer_r = scale * (basis @ outer @ basis_inv)
    middle_r = scale * (basis @ middle @ basis_inv)
    return {1: outer_r, 2: middle_r, 3: outer_r}


def geometric_rep(level: QuantumLevel, word: MappingWord, kind: str = "rescaled") -> np.ndarray:
    """Numeric image of a word in the su(n) level family.

    ``kind="tilde"`` multiplies the raw path-basis half-twist matrices letter
    by letter (a projective variant); ``kind="rescaled"`` uses the
    triangularized, rescaled images, which agree with the universal family
    evaluated at ``s = q^(1/2)``.
    """
    return evaluate_word(word, _geometric_generators(level, kind))


def coprime_offset(r: int) -> int:
    """Offset ``m`` with ``gcd(m, 4r) = 1`` and ``|2m - r| <= 4``, chosen by
    ``r mod 4``; defined for ``r >= 3``."""
    if r < 3:
        raise ValueError(f"offset is defined for r >= 3, got {r}")
    m = {0: (r + 2) // 2, 1: (r + 1) // 2, 2: (r + 4) // 2, 3: (r - 1) // 2}[r % 4]
    assert gcd(m, 4 * r) == 1 and abs(2 * m - r) <= 4
    return m


@dataclass(frozen=True)
class RootSchedulePoint:
    """Scheduled evaluation point for a level: a primitive (4k+8)-th root of
    unity ``exp(-2 pi i offset/(4k+8))`` whose square tends to ``-i``."""

    k: int
    offset: int
    value: complex

    @property
    def order(self) -> int:
        return 4 * self.k + 8

    def __post_init__(self):
        if gcd(self.offset, self.order) != 1:
            raise ValueError("offset is not coprime to the root order")
        if abs(2 * self.offset - (self.k + 2)) > 4:
            raise ValueError("offset strays too far from half the root order")


def root_schedule(k: int) -> RootSchedulePoint:
    """Evaluation point for level ``k >= 1``."""
    if k < 1:
        raise ValueError(f"level k must be >= 1, got {k}")
    offset = coprime_offset(k + 2)
    value = cmath.exp(-2j * math.pi * offset / (4 * k + 8))
    return RootSchedulePoint(k, offset, value)


def level_matrix(word: MappingWord, k: int) -> np.ndarray:
    """Skein image of a word specialized at the scheduled level-k root."""
    return skein_rep(word).evaluate(root_schedule(k).value)


@dataclass(frozen=True)
class ConvergenceRow:
    """One sweep sample: ``lambda_abs`` is the dominant eigenvalue modulus
    when it clears the unit circle by the reporting margin, else ``None``."""

    k: int
    trace_abs: float
    lambda_abs: float | None


def trace_convergence(word: MappingWord, k_min: int, k_max: int, step: int = 1) -> list[ConvergenceRow]:
    """Sample ``|trace|`` and the dominant eigenvalue modulus of the level
    matrices over ``k = k_min, k_min + step, ..., <= k_max``."""
    if not 1 <= k_min <= k_max:
        raise ValueError(f"need 1 <= k_min <= k_max, got {k_min}..{k_max}")
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    exact = skein_rep(word)
    rows = []
    for k in range(k_min, k_max + 1, step):
        m = exact.evaluate(root_schedule(k).value)
        dominant, _ = eigenpair_2x2(m)
        modulus = abs(dominant)
        rows.append(
            ConvergenceRow(
                k,
                abs(m[0, 0] + m[1, 1]),
                modulus if modulus > DOMINANT_EIGENVALUE_THRESHOLD else None,
            )
        )
    return rows


def convergence_csv(rows: Sequence[ConvergenceRow]) -> str:
    """CSV form, header ``k,trace_abs,lambda_abs``, empty field for absent values."""
    lines = ["k,trace_abs,lambda_abs"]
    for row in rows:
        lam = "" if row.lambda_abs is None else format(row.lambda_abs, ".15g")
        lines.append(f"{row.k},{format(row.trace_abs, '.15g')},{lam}")
    return "\n".join(lines) + "\n"


def infinite_order_certificate(word: MappingWord, k: int) -> bool:
    """True when the level-k trace modulus clears 2, which certifies that no
    power of the matrix is a multiple of the identity (a scalar power would
    force all eigenvalues onto roots of unity)."""
    m = level_matrix(word, k)
    return abs(m[0, 0] + m[1, 1]) > 2.0 + 1e-9


def _skein_numeric_generators(a: complex) -> dict[int, np.ndarray]:
    a2 = a * a
    inv_a2 = 1.0 / a2
    outer = np.array([[inv_a2, -a2], [0, -a2]], dtype=complex)
    middle = np.array([[-a2, 0], [-inv_a2, inv_a2]], dtype=complex)
    return {1: outer, 2: middle, 3: outer}


def reconstruct_skein(word: MappingWord, sample_count: int) -> RingMat2:
    """Recover the exact skein matrix of a word from numeric specializations
    alone.

    The word is multiplied out numerically at ``sample_count`` rotated roots
    of unity in ``u = A^2`` and each entry is interpolated on the even
    exponent grid ``-2L..2L`` (L letters, so 2L+1 coefficients in u). Samples
    beyond the first 2L+1 are consistency checks; a mismatch is reported as
    an internal inconsistency. The result is independent of the symbolic
    product, so comparing the two checks both routes.
    """
    length = len(word)
    needed = 2 * length + 1
    if sample_count < needed:
        raise ValueError(
            f"need at least {needed} samples for a word of {length} letters, got {sample_count}"
        )
    rotation = math.pi / (7 * sample_count)
    u_points = [cmath.exp(2j * math.pi * j / sample_count + 1j * rotation) for j in range(sample_count)]
    a_points = [u**0.5 for u in u_points]
    matrices = [evaluate_word(word, _skein_numeric_generators(a)) for a in a_points]
    scale = 1.0 + max(abs(m).max() for m in matrices)
    rows = []
    for i in (0, 1):
        row = []
        for j in (0, 1):
            samples = [(a_points[t], matrices[t][i, j]) for t in range(needed)]
            entry = interpolate_laurent(samples, -2 * length, 2 * length, 2, var=SKEIN_VAR)
            for t in range(needed, sample_count):
                miss = abs(entry.evaluate(a_points[t]) - matrices[t][i, j])
                if miss > 1e-8 * scale:
                    raise ValueError(
                        f"internal inconsistency: reconstructed entry misses a check sample by {miss:.3g}"
                    )
            row.append(entry)
        rows.append(tuple(row))
    return RingMat2((rows[0], rows[1]))


def homology_trace_abs(word: MappingWord) -> int:
    """Absolute homology trace, the limit of the level trace moduli."""
    m = homology.homology_matrix(word)
    return abs(m[0][0] + m[1][1])
