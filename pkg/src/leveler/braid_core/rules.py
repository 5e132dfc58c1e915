"""Relators of the reduced braid group and the rewrite moves derived from them.

Presentation: <m, l, s | msms, lsls, l^-1 m l m^-1 s^-2>.

A rule ``(lhs, rhs)`` lets a subword ``lhs`` be replaced by ``rhs`` (direction
+1) or ``rhs`` by ``lhs`` (direction -1); ``lhs + inverse(rhs)`` is always a
cyclic rotation of a relator or of a relator inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .words import inverse_letters, parity, reduce_letters

RELATORS = {
    "msms": "msms",
    "lsls": "lsls",
    "comm": "LmlMSS",
}

# Ordering used to orient equal-length rules: generators before inverses.
_LETTER_ORDER = {ch: i for i, ch in enumerate("mlsMLS")}


def _key(letters: str) -> tuple:
    return tuple(_LETTER_ORDER[c] for c in letters)


@dataclass(frozen=True)
class RewriteRule:
    rule_id: str
    lhs: str
    rhs: str
    relator: str


def relator_rotations() -> frozenset[str]:
    """Every cyclic rotation of every relator and relator inverse."""
    out = set()
    for r in RELATORS.values():
        for word in (r, inverse_letters(r)):
            for i in range(len(word)):
                out.add(word[i:] + word[:i])
    return frozenset(out)


@lru_cache(maxsize=None)
def rule_catalog() -> tuple[RewriteRule, ...]:
    """All rules, deduplicated and sorted by ``rule_id``.

    A pair and its swap describe the same bidirectional move, so only the
    orientation with ``len(lhs) <= len(rhs)`` is kept (ties broken by letter
    order). Pure insertions have an empty ``lhs``.
    """
    seen: dict[tuple[str, str], str] = {}
    for name, r in RELATORS.items():
        for word in (r, inverse_letters(r)):
            for i in range(len(word)):
                rot = word[i:] + word[:i]
                for t in range(len(rot) + 1):
                    lhs, rhs = rot[:t], inverse_letters(rot[t:])
                    if (len(lhs), _key(lhs)) > (len(rhs), _key(rhs)):
                        lhs, rhs = rhs, lhs
                    seen.setdefault((lhs, rhs), name)
    rules = [RewriteRule(f"{lhs or '1'}={rhs}", lhs, rhs, name)
             for (lhs, rhs), name in seen.items()]
    rules.sort(key=lambda r: r.rule_id)
    return tuple(rules)


@lru_cache(maxsize=None)
def rules_by_id() -> dict[str, RewriteRule]:
    return {r.rule_id: r for r in rule_catalog()}


@lru_cache(maxsize=None)
def substitution_index() -> dict[tuple[str, str], tuple[str, int]]:
    """Map ``(pattern, replacement)`` to the ``(rule_id, direction)`` realising it."""
    index = {}
    for r in rule_catalog():
        index[(r.lhs, r.rhs)] = (r.rule_id, 1)
        index.setdefault((r.rhs, r.lhs), (r.rule_id, -1))
    return index


def pattern_of(rule: RewriteRule, direction: int) -> tuple[str, str]:
    """Return ``(pattern, replacement)`` for a rule applied in ``direction``."""
    if direction == 1:
        return rule.lhs, rule.rhs
    if direction == -1:
        return rule.rhs, rule.lhs
    raise ValueError(f"direction must be +1 or -1, got {direction}")


def check_catalog() -> None:
    """Assert every rule is a relator consequence and preserves parity."""
    rots = relator_rotations()
    zero = (0, 0, 0)
    for r in rule_catalog():
        cyc = reduce_letters(r.lhs + inverse_letters(r.rhs))
        if cyc not in rots:
            raise AssertionError(f"rule {r.rule_id} is not a relator rotation")
        if len(r.lhs) > len(r.rhs):
            raise AssertionError(f"rule {r.rule_id} is oriented the wrong way")
        if tuple(parity(r.lhs + inverse_letters(r.rhs))) != zero:
            raise AssertionError(f"rule {r.rule_id} changes parity")


def splice(word: str, pos: int, length: int, rep: str):
    """Replace ``word[pos:pos+length]`` by ``rep`` and freely reduce.

    Returns ``(new_word, inverse)``. ``inverse`` is ``(start, pattern,
    replacement)`` describing a single substitution on ``new_word`` that
    restores ``word``, or ``None`` when the cancellation ran past the
    replacement into the surrounding letters (no single move undoes it).
    """
    x = word[:pos]
    y = word[pos + length:]
    i = 0
    n = min(len(x), len(rep))
    while i < n and x[-1 - i] == rep[i].swapcase():
        i += 1
    left = x[:len(x) - i]
    mid = rep[i:]
    joined = left + mid
    j = 0
    n = min(len(joined), len(y))
    while j < n and joined[-1 - j] == y[j].swapcase():
        j += 1
    new = joined[:len(joined) - j] + y[j:]
    if j > len(mid):
        return new, None
    restored = x[len(x) - i:] + word[pos:pos + length] + y[:j]
    return new, (len(left), mid[:len(mid) - j], restored)
