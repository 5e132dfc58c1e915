"""Words in the reduced braid group of the torus.

A word is stored as a tuple of syllables ``(gen, exp)`` with ``gen`` one of
``"m"``, ``"l"``, ``"s"`` and ``exp`` a nonzero integer. Adjacent syllables
always have distinct generators, so a :class:`BraidWord` is freely reduced by
construction.

The search code works on the equivalent *letter string*: one character per
letter, lowercase for the generator and uppercase for its inverse, e.g.
``m s^2 l^-1`` is ``"mssL"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

GENERATORS = ("m", "l", "s")
_GEN_RANK = {g: i for i, g in enumerate(GENERATORS)}

Syllable = tuple[str, int]


class WordSyntaxError(ValueError):
    pass


def inverse_letters(letters: str) -> str:
    return letters[::-1].swapcase()


def reduce_letters(letters: str) -> str:
    """Freely reduce a letter string."""
    out: list[str] = []
    for ch in letters:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def is_reduced_letters(letters: str) -> bool:
    return all(a != b.swapcase() for a, b in zip(letters, letters[1:]))


def free_reduce(syllables: Iterable[Syllable]) -> "BraidWord":
    """Merge equal neighbours and drop zero exponents, cascading as needed."""
    out: list[list] = []
    for gen, exp in syllables:
        if gen not in _GEN_RANK:
            raise ValueError(f"unknown generator {gen!r}")
        exp = int(exp)
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([gen, exp])
    return BraidWord(tuple((g, e) for g, e in out))


@dataclass(frozen=True)
class BraidWord:
    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self):
        prev = None
        for gen, exp in self.syllables:
            if gen not in _GEN_RANK or not isinstance(exp, int) or exp == 0:
                raise ValueError(f"bad syllable {(gen, exp)!r}")
            if gen == prev:
                raise ValueError("adjacent syllables share a generator; use free_reduce")
            prev = gen

    @classmethod
    def from_letters(cls, letters: str) -> "BraidWord":
        return free_reduce((ch.lower(), 1 if ch.islower() else -1) for ch in letters)

    @cached_property
    def letters(self) -> str:
        return "".join((g if e > 0 else g.upper()) * abs(e) for g, e in self.syllables)

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __str__(self) -> str:
        return format_word(self)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __invert__(self) -> "BraidWord":
        return invert(self)

    def exponent_sum(self, gen: str) -> int:
        return sum(e for g, e in self.syllables if g == gen)


IDENTITY = BraidWord(())

_TERM = re.compile(r"\s*([mls])(?:\^(-?\d+))?")
_ONE = re.compile(r"\s*1\s*$")


def parse_word(text: str) -> BraidWord:
    """Parse ``"m s^2 l^-1"``-style text into a freely reduced word.

    Whitespace between terms is optional; the literal ``1`` denotes the
    identity. Raises :class:`WordSyntaxError` on anything else.
    """
    if _ONE.match(text):
        return IDENTITY
    pos = 0
    raw: list[Syllable] = []
    while True:
        m = _TERM.match(text, pos)
        if m is None:
            break
        raw.append((m.group(1), int(m.group(2)) if m.group(2) is not None else 1))
        pos = m.end()
    rest = text[pos:]
    if rest.strip():
        bad = pos + len(rest) - len(rest.lstrip())
        raise WordSyntaxError(f"cannot parse word at column {bad}: {text[bad:]!r}")
    return free_reduce(raw)


def format_word(w: BraidWord) -> str:
    if not w.syllables:
        return "1"
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in w.syllables)


def concat(w1: BraidWord, w2: BraidWord) -> BraidWord:
    return free_reduce(w1.syllables + w2.syllables)


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(tuple((g, -e) for g, e in reversed(w.syllables)))


class ParityTriple(NamedTuple):
    em: int
    el: int
    es: int

    def __add__(self, other):  # type: ignore[override]
        return ParityTriple((self.em + other.em) % 2, (self.el + other.el) % 2,
                            (self.es + other.es) % 2)


def parity(w: BraidWord | str) -> ParityTriple:
    """Exponent sums of m, l, s mod 2 (the abelianization of the group)."""
    letters = w if isinstance(w, str) else w.letters
    return ParityTriple(
        (letters.count("m") + letters.count("M")) % 2,
        (letters.count("l") + letters.count("L")) % 2,
        (letters.count("s") + letters.count("S")) % 2,
    )
