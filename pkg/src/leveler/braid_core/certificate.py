"""Replayable move sequences.

A step is ``(rule, pos, dir)``. ``rule`` is either a catalog ``rule_id`` or a
boundary move id: ``ins-left:l``, ``ins-left:s``, ``del-left:l``,
``del-left:s``, ``ins-right:m``, ``ins-right:s``, ``del-right:m``,
``del-right:s``. For boundary moves ``dir`` is the sign of the letter
inserted or deleted and ``pos`` is the letter index it occupies.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

from .rules import pattern_of, rules_by_id, splice, substitution_index
from .words import BraidWord, parse_word, parity

LEFT_GENS = ("l", "s")
RIGHT_GENS = ("m", "s")


class StepError(ValueError):
    pass


@dataclass(frozen=True)
class Step:
    rule: str
    pos: int
    dir: int

    @property
    def is_boundary(self) -> bool:
        return self.rule.startswith(("ins-", "del-"))

    def to_json(self) -> dict:
        return {"rule": self.rule, "pos": self.pos, "dir": self.dir}


def _letter(gen: str, sign: int) -> str:
    if sign not in (1, -1):
        raise StepError(f"bad direction {sign}")
    return gen if sign == 1 else gen.upper()


def apply_step(word: str, step: Step) -> str:
    """Apply one step to a letter string; raise :class:`StepError` if it does not fit."""
    rule, pos, sign = step.rule, step.pos, step.dir
    if step.is_boundary:
        kind, _, gen = rule.partition(":")
        side = kind[4:]
        allowed = LEFT_GENS if side == "left" else RIGHT_GENS
        if side not in ("left", "right") or gen not in allowed:
            raise StepError(f"unknown boundary move {rule!r}")
        ch = _letter(gen, sign)
        if kind == "ins-left":
            if pos != 0 or (word and word[0] == ch.swapcase()):
                raise StepError(f"{rule} does not apply")
            return ch + word
        if kind == "del-left":
            if pos != 0 or not word or word[0] != ch:
                raise StepError(f"{rule} does not apply")
            return word[1:]
        if kind == "ins-right":
            if pos != len(word) or (word and word[-1] == ch.swapcase()):
                raise StepError(f"{rule} does not apply")
            return word + ch
        if pos != len(word) - 1 or not word or word[-1] != ch:
            raise StepError(f"{rule} does not apply")
        return word[:-1]
    try:
        r = rules_by_id()[rule]
    except KeyError:
        raise StepError(f"unknown rule {rule!r}") from None
    pattern, rep = pattern_of(r, sign)
    if not 0 <= pos <= len(word) - len(pattern) or not word.startswith(pattern, pos):
        raise StepError(f"rule {rule} does not match at {pos}")
    return splice(word, pos, len(pattern), rep)[0]


def invert_step(before: str, step: Step) -> Step | None:
    """The step taking ``apply_step(before, step)`` back to ``before``, if one exists."""
    if step.is_boundary:
        kind, _, gen = step.rule.partition(":")
        flipped = {"ins-left": "del-left", "del-left": "ins-left",
                   "ins-right": "del-right", "del-right": "ins-right"}[kind]
        return Step(f"{flipped}:{gen}", step.pos, step.dir)
    pattern, rep = pattern_of(rules_by_id()[step.rule], step.dir)
    _, inv = splice(before, step.pos, len(pattern), rep)
    if inv is None:
        return None
    start, pat, repl = inv
    rule_id, sign = substitution_index()[(pat, repl)]
    return Step(rule_id, start, sign)


@dataclass(frozen=True)
class Certificate:
    start: BraidWord
    steps: tuple[Step, ...]
    end: BraidWord
    notes: dict = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def has_boundary_moves(self) -> bool:
        return any(s.is_boundary for s in self.steps)

    def words(self) -> Iterator[str]:
        """Letter strings visited during replay, start and end included."""
        w = self.start.letters
        yield w
        for step in self.steps:
            w = apply_step(w, step)
            yield w

    def to_json(self) -> dict:
        return {"start": str(self.start), "end": str(self.end),
                "steps": [s.to_json() for s in self.steps]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, doc: dict) -> "Certificate":
        steps = tuple(Step(str(s["rule"]), int(s["pos"]), int(s["dir"])) for s in doc["steps"])
        return cls(parse_word(doc["start"]), steps, parse_word(doc["end"]))


def replay(cert: Certificate) -> bool:
    """Check that the steps carry ``start`` to ``end``.

    Relator steps must leave the parity triple unchanged; boundary steps
    (which legitimately change it) are only checked for applicability.
    """
    w = cert.start.letters
    for step in cert.steps:
        try:
            nxt = apply_step(w, step)
        except StepError:
            return False
        if not step.is_boundary and parity(nxt) != parity(w):
            return False
        w = nxt
    return w == cert.end.letters
