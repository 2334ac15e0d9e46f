"""Affine torus lifts, the induced integer-matrix representation, and the
trace classification with stretching factors.

Every mapping class of the four-punctured sphere is realized by an affine
torus map ``x -> A x + v`` with ``A`` a determinant-1 integer matrix and
``v`` a half-integer translation, determined up to the simultaneous flip
``(A, v) ~ (-A, -v)`` and with ``v`` meaningful only mod Z^2. We store the
sign-canonical matrix together with the doubled translation mod 2, which
turns equality of mapping classes into a plain tuple comparison: the
(matrix, vector) data is faithful.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .words import Generator, MappingWord, parse_word

__all__ = [
    "AffineLift",
    "NTClass",
    "affine_lift",
    "homology_matrix",
    "sl2_word_matrix",
    "nt_classify",
    "stretch_factor",
    "in_translation_subgroup",
    "is_identity",
    "translation_subgroup_words",
    "classification_record",
]

Mat = tuple[tuple[int, int], tuple[int, int]]

_ID: Mat = ((1, 0), (0, 1))

_GEN_MATRIX: dict[int, Mat] = {
    1: ((1, 1), (0, 1)),
    2: ((1, 0), (-1, 1)),
    3: ((1, 1), (0, 1)),
}
_GEN_HALVES: dict[int, tuple[int, int]] = {1: (1, 0), 2: (0, 1), 3: (0, 0)}


def _mat_mul(a: Mat, b: Mat) -> Mat:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def _mat_inv(a: Mat) -> Mat:
    # adjugate; valid because det == 1
    return ((a[1][1], -a[0][1]), (-a[1][0], a[0][0]))


def _det(a: Mat) -> int:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


@dataclass(frozen=True)
class AffineLift:
    """Sign-canonical pair (matrix, doubled translation mod 2).

    The stored matrix is the representative of {A, -A} whose first nonzero
    entry (row-major) is positive; negating the translation does not change
    it mod Z^2, so ``halves`` needs no sign adjustment.
    """

    matrix: Mat
    halves: tuple[int, int]

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if _det(m) != 1:
            raise ValueError(f"lift matrix must have determinant 1, got {_det(m)}")
        flat = (m[0][0], m[0][1], m[1][0], m[1][1])
        if next(x for x in flat if x) < 0:
            m = ((-m[0][0], -m[0][1]), (-m[1][0], -m[1][1]))
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "halves", (self.halves[0] % 2, self.halves[1] % 2))

    @classmethod
    def identity(cls) -> "AffineLift":
        return cls(_ID, (0, 0))

    @classmethod
    def of_generator(cls, g: Generator) -> "AffineLift":
        lift = cls(_GEN_MATRIX[g.index], _GEN_HALVES[g.index])
        return lift if g.sign == 1 else lift.inverse()

    def compose(self, other: "AffineLift") -> "AffineLift":
        """Composite map self o other: ``(A, v)(B, w) = (AB, Aw + v)``."""
        a = self.matrix
        hw = other.halves
        new_halves = (
            a[0][0] * hw[0] + a[0][1] * hw[1] + self.halves[0],
            a[1][0] * hw[0] + a[1][1] * hw[1] + self.halves[1],
        )
        return AffineLift(_mat_mul(a, other.matrix), new_halves)

    def inverse(self) -> "AffineLift":
        """Inverse map ``(A^-1, -A^-1 v)``; mod Z^2 the sign on v drops out."""
        inv = _mat_inv(self.matrix)
        h = self.halves
        return AffineLift(inv, (inv[0][0] * h[0] + inv[0][1] * h[1], inv[1][0] * h[0] + inv[1][1] * h[1]))

    @property
    def vector(self) -> tuple[Fraction, Fraction]:
        return Fraction(self.halves[0], 2), Fraction(self.halves[1], 2)


@dataclass(frozen=True)
class NTClass:
    """Nielsen-Thurston classification datum: ``tag`` is one of
    ``finite_order``, ``reducible``, ``pseudo_anosov``; ``stretch`` is present
    exactly in the pseudo-Anosov case and then exceeds 1."""

    tag: str
    trace_abs: int
    stretch: float | None = None


def affine_lift(word: MappingWord) -> AffineLift:
    """Canonical affine lift of a word (letters composed left to right)."""
    acc = AffineLift.identity()
    for g in word:
        acc = acc.compose(AffineLift.of_generator(g))
    return acc


def homology_matrix(word: MappingWord) -> Mat:
    """Sign-canonical integer matrix of the word's action on the double-cover homology."""
    return affine_lift(word).matrix


def sl2_word_matrix(word: MappingWord) -> Mat:
    """Plain product of the literal generator matrices, without sign
    normalization; differs from :func:`homology_matrix` by a global sign."""
    acc = _ID
    for g in word:
        base = _GEN_MATRIX[g.index]
        acc = _mat_mul(acc, base if g.sign == 1 else _mat_inv(base))
    return acc


def _stretch_from_trace(trace_abs: int) -> float:
    if trace_abs > 1 << 52:
        # sqrt(t^2 - 4) is t to machine precision at this size
        return float(trace_abs)
    return (trace_abs + math.sqrt(trace_abs * trace_abs - 4)) / 2.0


def nt_classify(word: MappingWord) -> NTClass:
    """Classify by the absolute homology trace: above 2 is pseudo-Anosov with
    stretch ``(t + sqrt(t^2 - 4)) / 2``, below 2 is finite order, and at 2 the
    class is finite order when the matrix is +-identity (a half translation)
    and reducible otherwise."""
    m = homology_matrix(word)
    t = abs(m[0][0] + m[1][1])
    if t > 2:
        return NTClass("pseudo_anosov", t, _stretch_from_trace(t))
    if t < 2 or m == _ID:
        return NTClass("finite_order", t)
    return NTClass("reducible", t)


def stretch_factor(word: MappingWord) -> float | None:
    """Stretching factor of a pseudo-Anosov word, ``None`` otherwise."""
    return nt_classify(word).stretch


def in_translation_subgroup(word: MappingWord) -> bool:
    """Whether the word acts trivially on homology (matrix is +-identity)."""
    return homology_matrix(word) == _ID


def is_identity(word: MappingWord) -> bool:
    """Whether the word is the identity mapping class (trivial matrix and
    trivial translation; the lift data separates mapping classes)."""
    lift = affine_lift(word)
    return lift.matrix == _ID and lift.halves == (0, 0)


def translation_subgroup_words() -> tuple[MappingWord, ...]:
    """Words realizing the four half-translation classes, identity first,
    then translations by (1/2, 0), (0, 1/2) and (1/2, 1/2)."""
    return (
        parse_word("id"),
        parse_word("w1 w3^-1"),
        parse_word("w1 w3^-1 w2 w1 w3^-1 w2^-1"),
        parse_word("w2 w1 w3^-1 w2^-1"),
    )


def classification_record(word: MappingWord) -> dict:
    """JSON-ready classification record for a word."""
    lift = affine_lift(word)
    cls = nt_classify(word)
    return {
        "word": word.render(),
        "class": cls.tag,
        "trace_abs": cls.trace_abs,
        "stretch": cls.stretch,
        "in_N": lift.matrix == _ID,
        "matrix": [list(row) for row in lift.matrix],
        "vector": [str(x) for x in lift.vector],
    }
