"""Words in the three half-twist generators of the four-punctured sphere.

A word is an ordered sequence of signed letters drawn from ``w1, w2, w3``.
Words are kept freely reduced (no adjacent ``g g^-1`` pair survives
construction) and nothing else: relation-based rewriting is never applied,
so two words that present the same mapping class may still compare unequal.

Reading is left to right with the leftmost letter acting last, i.e. the word
``g1 g2 ... gL`` is the composite ``g1 o g2 o ... o gL``, and every matrix
representation of a word is the product of the generator images in written
order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "Generator",
    "MappingWord",
    "WordSyntaxError",
    "parse_word",
    "render_word",
    "invert",
    "is_penner_positive",
]

_TOKEN = re.compile(r"\S+")
_TERM = re.compile(r"w([123])(?:\^([+-]?\d+))?\Z")


class WordSyntaxError(ValueError):
    """Malformed word text; ``position`` is the offset of the offending token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, order=True)
class Generator:
    """One signed letter: generator index in {1, 2, 3}, sign in {+1, -1}."""

    index: int
    sign: int

    def __post_init__(self):
        if self.index not in (1, 2, 3):
            raise ValueError(f"generator index must be 1, 2 or 3, got {self.index!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"generator sign must be +1 or -1, got {self.sign!r}")

    def inverse(self) -> "Generator":
        return Generator(self.index, -self.sign)

    def __str__(self) -> str:
        return f"w{self.index}" if self.sign == 1 else f"w{self.index}^-1"


def _free_reduce(letters: Iterable[Generator]) -> tuple[Generator, ...]:
    out: list[Generator] = []
    for g in letters:
        if out and out[-1].index == g.index and out[-1].sign == -g.sign:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


@dataclass(frozen=True)
class MappingWord:
    """A freely reduced word; the empty word is the identity mapping class."""

    letters: tuple[Generator, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _free_reduce(tuple(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.letters)

    def __mul__(self, other: "MappingWord") -> "MappingWord":
        return MappingWord(self.letters + other.letters)

    def __pow__(self, n: int) -> "MappingWord":
        base = self if n >= 0 else self.inverse()
        out = MappingWord()
        for _ in range(abs(n)):
            out = out * base
        return out

    def inverse(self) -> "MappingWord":
        return MappingWord(tuple(g.inverse() for g in reversed(self.letters)))

    @property
    def exponent_sum(self) -> int:
        """Signed letter count (exponent sum over all generators)."""
        return sum(g.sign for g in self.letters)

    def render(self) -> str:
        """Serialize back to the word grammar, collapsing runs (``w1^-2 w2``)."""
        if not self.letters:
            return "id"
        parts: list[str] = []
        i = 0
        while i < len(self.letters):
            g = self.letters[i]
            j = i
            while j < len(self.letters) and self.letters[j] == g:
                j += 1
            n = (j - i) * g.sign
            parts.append(f"w{g.index}" if n == 1 else f"w{g.index}^{n}")
            i = j
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


def parse_word(text: str) -> MappingWord:
    """Parse word text: ``"id"`` or whitespace-separated terms ``w<i>[^<exp>]``.

    The result is freely reduced; ``w1^0`` contributes nothing. Unknown tokens
    and malformed exponents raise :class:`WordSyntaxError` with the position.
    """
    tokens = list(_TOKEN.finditer(text))
    if not tokens:
        raise WordSyntaxError("empty input; write 'id' for the identity", 0)
    if len(tokens) == 1 and tokens[0].group() == "id":
        return MappingWord()
    letters: list[Generator] = []
    for tok in tokens:
        term = tok.group()
        if term == "id":
            raise WordSyntaxError("'id' cannot be combined with other terms", tok.start())
        m = _TERM.match(term)
        if m is None:
            raise WordSyntaxError(f"unrecognized term {term!r}", tok.start())
        index = int(m.group(1))
        exponent = int(m.group(2)) if m.group(2) is not None else 1
        sign = 1 if exponent > 0 else -1
        letters.extend(Generator(index, sign) for _ in range(abs(exponent)))
    return MappingWord(tuple(letters))


def render_word(word: MappingWord) -> str:
    return word.render()


def invert(word: MappingWord) -> MappingWord:
    """Reversed word with all signs flipped; an involution."""
    return word.inverse()


_PENNER_LETTERS = frozenset({Generator(1, -1), Generator(2, 1), Generator(3, -1)})


def is_penner_positive(word: MappingWord) -> bool:
    """Whether the word is a positive word in ``w1^-1, w2, w3^-1`` using at
    least one ``w2`` and at least one of the other two letters."""
    letters = word.letters
    return (
        bool(letters)
        and all(g in _PENNER_LETTERS for g in letters)
        and any(g.index == 2 for g in letters)
        and any(g.index in (1, 3) for g in letters)
    )
