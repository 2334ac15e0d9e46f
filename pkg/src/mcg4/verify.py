"""Built-in identity suite: executable ground truth for the relation algebra,
the specialization chain, the root schedule, and the dual stretch oracles.

Each check returns a named pass/fail result; the suite never raises on a
mathematical failure, only reports it. A corrupted-generator mode serves as
a negative control for the harness itself.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import gcd

import numpy as np

from . import homology, quantum, traintrack
from .laurent import LaurentPoly
from .mat2 import RingMat2
from .words import Generator, MappingWord, parse_word

__all__ = ["CheckResult", "RELATION_WORDS", "run_suite"]

# The defining relations of the three-generator presentation, as word pairs.
RELATION_WORDS: tuple[tuple[str, str], ...] = (
    ("w1 w3", "w3 w1"),
    ("w1 w2 w1", "w2 w1 w2"),
    ("w2 w3 w2", "w3 w2 w3"),
    ("w1 w2 w3^2 w2 w1", "id"),
    ("w1 w2 w3 w1 w2 w3 w1 w2 w3 w1 w2 w3", "id"),
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _relation_pairs() -> list[tuple[MappingWord, MappingWord]]:
    return [(parse_word(a), parse_word(b)) for a, b in RELATION_WORDS]


def _random_words(count: int, max_len: int, seed: int) -> list[MappingWord]:
    rng = random.Random(seed)
    letters = [Generator(i, s) for i in (1, 2, 3) for s in (1, -1)]
    return [
        MappingWord(tuple(rng.choice(letters) for _ in range(rng.randint(0, max_len))))
        for _ in range(count)
    ]


def _corrupt(images: dict[int, RingMat2]) -> dict[int, RingMat2]:
    # bump the top-right entry of the outer-twist image; determinant is
    # unchanged (the lower-left entry is zero), so inverses still exist
    (a, b), (c, d) = images[1].entries
    bad = RingMat2(((a, b + LaurentPoly.one(b.var)), (c, d)))
    return {1: bad, 2: images[2], 3: bad}


def _check_affine_relations() -> tuple[bool, str]:
    fails = [
        f"{a} vs {b}"
        for (a, b), (wa, wb) in zip(RELATION_WORDS, _relation_pairs())
        if homology.affine_lift(wa) != homology.affine_lift(wb)
    ]
    return not fails, "all 5 relations hold on affine lifts" if not fails else "; ".join(fails)


def _check_exact_relations(images: dict[int, RingMat2], label: str) -> tuple[bool, str]:
    fails = [
        f"{a} vs {b}"
        for (a, b), (wa, wb) in zip(RELATION_WORDS, _relation_pairs())
        if quantum.evaluate_word(wa, images) != quantum.evaluate_word(wb, images)
    ]
    return not fails, f"all 5 relations exact in the {label} family" if not fails else "; ".join(fails)


def _check_geometric_relations() -> tuple[bool, str]:
    worst = 0.0
    for n in (2, 3):
        for k in range(1, 7):
            level = quantum.QuantumLevel(n, k)
            for wa, wb in _relation_pairs():
                gap = np.abs(
                    quantum.geometric_rep(level, wa) - quantum.geometric_rep(level, wb)
                ).max()
                worst = max(worst, gap)
    return worst < 1e-9, f"worst relation residual {worst:.3g} over (n,k) in {{2,3}}x{{1..6}}"


def _check_specialization_square(images: dict[int, RingMat2]) -> tuple[bool, str]:
    point = complex(2**-0.5, -(2**-0.5))  # A with A^2 = -i
    worst = 0.0
    for word in _random_words(60, 8, seed=1201):
        skein_value = quantum.skein_rep(word).evaluate(point)
        universal_value = quantum.evaluate_word(word, images).evaluate(1j)
        worst = max(worst, np.abs(skein_value - universal_value).max())
    return worst < 1e-10, f"worst |skein(A^2=-i) - universal(s=i)| = {worst:.3g}"


def _check_homology_power_of_i(images: dict[int, RingMat2]) -> tuple[bool, str]:
    for word in _random_words(60, 8, seed=1901):
        gauss = quantum.evaluate_word(word, images).evaluate_at_i()
        lift = homology.sl2_word_matrix(word)
        rot = word.exponent_sum % 4
        for i in (0, 1):
            for j in (0, 1):
                re, im = gauss[i][j]
                for _ in range(rot):  # divide by i
                    re, im = im, -re
                if (re, im) != (lift[i][j], 0):
                    return False, f"mismatch at word {word.render()!r} entry ({i},{j})"
    return True, "universal(s=i) equals i^(exponent sum) times the plain lift, exactly"


def _check_determinants() -> tuple[bool, str]:
    minus_one = LaurentPoly.monomial("s", 0, -1)
    for idx, m in quantum.universal_generator_images().items():
        if m.determinant() != minus_one:
            return False, f"universal generator {idx} determinant != -1"
    minus_one_a = LaurentPoly.monomial("A", 0, -1)
    for idx, m in quantum.skein_generator_images().items():
        if m.determinant() != minus_one_a:
            return False, f"skein generator {idx} determinant != -1"
    for idx in (1, 2, 3):
        word = MappingWord((Generator(idx, 1),))
        m = homology.homology_matrix(word)
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 1:
            return False, f"homology generator {idx} determinant != 1"
    return True, "generator determinants: -1 (universal), -1 (skein), 1 (homology)"


def _check_coprime_offsets() -> tuple[bool, str]:
    for r in range(3, 1001):
        m = quantum.coprime_offset(r)
        if gcd(m, 4 * r) != 1 or abs(2 * m - r) > 4:
            return False, f"offset fails at r={r}"
    return True, "gcd(offset, 4r) = 1 and |2*offset - r| <= 4 for r <= 1000"


def _check_primitive_roots() -> tuple[bool, str]:
    for k in range(1, 121):
        point = quantum.root_schedule(k)
        if gcd(point.offset, point.order) != 1:
            return False, f"root at level {k} is not primitive"
        if abs(point.value**point.order - 1) > 1e-10:
            return False, f"root at level {k} misses its order numerically"
    return True, "scheduled roots have exact order 4k+8 for k <= 120"


def _check_traintrack_oracle() -> tuple[bool, str]:
    letters = [Generator(1, -1), Generator(2, 1), Generator(3, -1)]
    worst = 0.0
    for length in range(1, 6):
        for combo in itertools.product(letters, repeat=length):
            word = MappingWord(combo)
            if not any(g.index == 2 for g in combo) or not any(g.index != 2 for g in combo):
                continue
            matrix = traintrack.incidence(word)
            if not traintrack.is_perron_frobenius(matrix):
                return False, f"not Perron-Frobenius: {word.render()!r}"
            growth = traintrack.pf_eigenvalue(matrix)
            stretch = homology.stretch_factor(word)
            if stretch is None:
                return False, f"not pseudo-Anosov: {word.render()!r}"
            worst = max(worst, abs(growth - stretch) / stretch)
    return worst < 1e-9, f"worst relative gap between growth and stretch: {worst:.3g}"


def _check_scalar_kernel() -> tuple[bool, str]:
    options = [None] + [Generator(i, s) for i in (1, 2, 3) for s in (1, -1)]
    for combo in itertools.product(options, repeat=3):
        word = MappingWord(tuple(g for g in combo if g is not None))
        if quantum.scalar_kernel_test(word) != homology.in_translation_subgroup(word):
            return False, f"kernel tests disagree at {word.render()!r}"
    return True, "scalar image iff trivial homology, on all words of length <= 3"


def run_suite(only: str | None = None, corrupt: bool = False) -> list[CheckResult]:
    """Run the identity suite, optionally filtered by a substring of the check
    name. With ``corrupt=True`` the universal outer-twist image is perturbed,
    so the relation and specialization checks must fail (negative control)."""
    universal = quantum.universal_generator_images()
    if corrupt:
        universal = _corrupt(universal)
    checks = [
        ("relations/affine-lift", _check_affine_relations),
        ("relations/universal", lambda: _check_exact_relations(universal, "universal")),
        ("relations/skein", lambda: _check_exact_relations(quantum.skein_generator_images(), "skein")),
        ("relations/geometric", _check_geometric_relations),
        ("specialization/skein-vs-universal", lambda: _check_specialization_square(universal)),
        ("specialization/power-of-i", lambda: _check_homology_power_of_i(universal)),
        ("determinants/generators", _check_determinants),
        ("schedule/coprime-offset", _check_coprime_offsets),
        ("schedule/primitive-root", _check_primitive_roots),
        ("traintrack/stretch-cross-check", _check_traintrack_oracle),
        ("kernel/translation-subgroup", _check_scalar_kernel),
    ]
    results = []
    for name, fn in checks:
        if only is not None and only not in name:
            continue
        passed, detail = fn()
        results.append(CheckResult(name, passed, detail))
    return results
