"""(1,1)-words, (1,1)-equivalence and upper bounds for the (1,1)-length.

Two words are (1,1)-equivalent when one equals ``L w M`` in the group with
``L`` a word in ``l, s`` and ``M`` a word in ``m, s``. Every word is
therefore equivalent to its *core*: strip leading ``l``/``s`` letters and
trailing ``m``/``s`` letters until neither applies. The searches below run
on cores; a move on a core may borrow boundary letters from outside it
(they are inserted, a relator rule fires across the boundary, and the
result is stripped back to a core). Certificates spell every such move
out as single-letter boundary steps around one relator step.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Hashable

from .braid_core.certificate import Certificate, Step, apply_step
from .braid_core.rules import pattern_of, rules_by_id, splice
from .braid_core.search import (Budget, Equivalent, Expansion, SearchReport, Unknown,
                                _group_moves, bidirectional_search, path_to_steps,
                                rule_applications)
from .braid_core.words import BraidWord, format_word
from .torus_words import TorusType, recognize_letters, torus_letters

_LEFT = "lLsS"
_RIGHT = "mMsS"


class OneOneParseError(ValueError):
    pass


@dataclass(frozen=True)
class OneOneWord:
    """``w_1 s^n_1 w_2 ... s^n_{k-1} w_k`` with torus-word blocks; no blocks means the empty word."""

    blocks: tuple[tuple[TorusType, BraidWord], ...] = ()
    seps: tuple[int, ...] = ()

    def __post_init__(self):
        if self.blocks and len(self.seps) != len(self.blocks) - 1:
            raise ValueError("need exactly one separator between consecutive blocks")
        if not self.blocks and self.seps:
            raise ValueError("the empty (1,1)-word has no separators")
        for t, w in self.blocks:
            if torus_letters(t.p, t.q) != w.letters:
                raise ValueError(f"{w} is not the torus word of type {t}")

    @property
    def is_empty(self) -> bool:
        return not self.blocks

    @property
    def k(self) -> int:
        return len(self.blocks) or 1

    def letters(self) -> str:
        if not self.blocks:
            return ""
        parts = [self.blocks[0][1].letters]
        for n, (_, w) in zip(self.seps, self.blocks[1:]):
            parts.append(("s" if n > 0 else "S") * abs(n))
            parts.append(w.letters)
        return "".join(parts)

    def flatten(self) -> BraidWord:
        return BraidWord.from_letters(self.letters())

    def __str__(self) -> str:
        if not self.blocks:
            return "1"
        out = [f"[{self.blocks[0][1]}]"]
        for n, (_, w) in zip(self.seps, self.blocks[1:]):
            out.append(f"s^{n}")
            out.append(f"[{w}]")
        return " ".join(out)

    def to_json(self) -> dict:
        return {"word": format_word(self.flatten()), "k": self.k,
                "blocks": [{"type": [t.p, t.q], "word": str(w)} for t, w in self.blocks],
                "seps": list(self.seps)}


EMPTY = OneOneWord()


@lru_cache(maxsize=1 << 20)
def _segment_spans(seg: str) -> tuple[tuple[int, int], ...]:
    """Minimal factorisation of an s-free string into torus words.

    Ties go to the leftmost-longest block.
    """
    n = len(seg)
    best = [0] * (n + 1)
    ends: list[list[int]] = [[] for _ in range(n)]
    for i in range(n - 1, -1, -1):
        seen = set()
        doubled = set()
        for j in range(i + 1, n + 1):
            ch = seg[j - 1]
            if ch.swapcase() in seen:
                break  # mixed signs never become a torus word again
            seen.add(ch)
            if j - 1 > i and seg[j - 2] == ch:
                doubled.add(ch)
                if len(doubled) == 2:
                    break  # in a torus word one letter always comes singly
            if recognize_letters(seg[i:j]):
                ends[i].append(j)
        best[i] = min(1 + best[j] for j in ends[i])
    spans = []
    i = 0
    while i < n:
        j = next(j for j in reversed(ends[i]) if 1 + best[j] == best[i])
        spans.append((i, j))
        i = j
    return tuple(spans)


def segment_block_count(seg: str) -> int:
    return len(_segment_spans(seg))


_S_RUN = re.compile(r"([sS]+)")


def _parse_letters(letters: str) -> OneOneWord:
    if not letters:
        return EMPTY
    if letters[0] in "sS" or letters[-1] in "sS":
        if set(letters) <= set("sS"):
            raise OneOneParseError("a nonzero power of s is not a (1,1)-word")
        raise OneOneParseError("word begins or ends with s; reduce it first")
    pieces = _S_RUN.split(letters)
    blocks: list[tuple[TorusType, BraidWord]] = []
    seps: list[int] = []
    for idx in range(0, len(pieces), 2):
        seg = pieces[idx]
        if idx:
            run = pieces[idx - 1]
            seps.append(len(run) if run[0] == "s" else -len(run))
        for n, (i, j) in enumerate(_segment_spans(seg)):
            if n:
                seps.append(0)
            sub = seg[i:j]
            blocks.append((TorusType(*recognize_letters(sub)), BraidWord.from_letters(sub)))
    return OneOneWord(tuple(blocks), tuple(seps))


def parse_one_one(w: BraidWord) -> OneOneWord:
    """Split ``w`` at its s-syllables and factor each piece into as few torus words as possible."""
    return _parse_letters(w.letters)


def core_letters(letters: str) -> str:
    return letters.lstrip(_LEFT).rstrip(_RIGHT)


def reduce_11(w: BraidWord) -> BraidWord:
    """Drop leading l/s syllables and trailing m/s syllables."""
    return BraidWord.from_letters(core_letters(w.letters))


def strip_steps(letters: str) -> list[Step]:
    """Boundary deletions taking ``letters`` to its core, left side first."""
    steps = []
    while letters and letters[0] in _LEFT:
        ch = letters[0]
        steps.append(Step(f"del-left:{ch.lower()}", 0, 1 if ch.islower() else -1))
        letters = letters[1:]
    while letters and letters[-1] in _RIGHT:
        ch = letters[-1]
        steps.append(Step(f"del-right:{ch.lower()}", len(letters) - 1, 1 if ch.islower() else -1))
        letters = letters[:-1]
    return steps


def _prepend_steps(u: str) -> list[Step]:
    return [Step(f"ins-left:{ch.lower()}", 0, 1 if ch.islower() else -1) for ch in reversed(u)]


def _append_steps(z: str, length: int) -> list[Step]:
    return [Step(f"ins-right:{ch.lower()}", length + i, 1 if ch.islower() else -1)
            for i, ch in enumerate(z)]


def _invert_deletions(steps: list[Step]) -> list[Step]:
    flip = {"del-left": "ins-left", "del-right": "ins-right"}
    out = []
    for st in reversed(steps):
        kind, _, gen = st.rule.partition(":")
        out.append(Step(f"{flip[kind]}:{gen}", st.pos, st.dir))
    return out


@lru_cache(maxsize=None)
def _boundary_moves():
    """Rule applications that overlap the left end, the right end, or both."""
    left, right, both = [], [], []
    for rule_id, sign, pattern, rep in _group_moves():
        lcuts = []
        for t in range(1, len(pattern) + 1):
            if pattern[t - 1] not in _LEFT:
                break
            lcuts.append(t)
        rcuts = []
        for t in range(len(pattern) - 1, -1, -1):
            if pattern[t] not in _RIGHT:
                break
            rcuts.append(t)
        for t in lcuts:
            left.append((rule_id, sign, pattern, rep, t))
        for t in rcuts:
            right.append((rule_id, sign, pattern, rep, t))
        for t1 in lcuts:
            for t2 in rcuts:
                if t1 <= t2:
                    both.append((rule_id, sign, pattern, rep, t1, t2))
    return tuple(left), tuple(right), tuple(both)


@dataclass(frozen=True)
class CoreExpander:
    """Moves on cores: relator steps inside, or across either end, then re-strip."""

    max_len: int

    def __call__(self, core: str) -> list[Expansion]:
        out = []
        max_len = self.max_len
        for rule_id, sign, pos, new, rev in rule_applications(core):
            if len(new) <= max_len:
                out.append((core_letters(new), ("i", rule_id, sign, pos), rev))
        left, right, both = _boundary_moves()
        for rule_id, sign, pattern, rep, t in left:
            v = pattern[t:]
            if core.startswith(v) and len(core) + t <= max_len:
                new, inv = splice(pattern[:t] + core, 0, len(pattern), rep)
                if len(new) <= max_len:
                    out.append((core_letters(new), ("L", rule_id, sign, t), inv is not None))
        for rule_id, sign, pattern, rep, t in right:
            v = pattern[:t]
            if core.endswith(v) and len(core) + len(pattern) - t <= max_len:
                new, inv = splice(core + pattern[t:], len(core) - t, len(pattern), rep)
                if len(new) <= max_len:
                    out.append((core_letters(new), ("R", rule_id, sign, t), inv is not None))
        for rule_id, sign, pattern, rep, t1, t2 in both:
            if pattern[t1:t2] == core and len(pattern) <= max_len:
                new, inv = splice(pattern, 0, len(pattern), rep)
                if len(new) <= max_len:
                    out.append((core_letters(new), ("B", rule_id, sign, t1, t2), inv is not None))
        return out


def _materialize_core_move(core: str, desc: Hashable) -> list[Step]:
    kind, rule_id, sign = desc[0], desc[1], desc[2]
    if kind == "i":
        step = Step(rule_id, desc[3], sign)
        return [step] + strip_steps(apply_step(core, step))
    pattern, _ = pattern_of(rules_by_id()[rule_id], sign)
    if kind == "L":
        t = desc[3]
        steps = _prepend_steps(pattern[:t])
        steps.append(Step(rule_id, 0, sign))
    elif kind == "R":
        t = desc[3]
        steps = _append_steps(pattern[t:], len(core))
        steps.append(Step(rule_id, len(core) - t, sign))
    else:
        t1, t2 = desc[3], desc[4]
        steps = _prepend_steps(pattern[:t1]) + _append_steps(pattern[t2:], len(core) + t1)
        steps.append(Step(rule_id, 0, sign))
    word = core
    for st in steps:
        word = apply_step(word, st)
    return steps + strip_steps(word)


def one_one_equivalent(w1: BraidWord, w2: BraidWord, budget: Budget | None = None,
                       workers: int = 1) -> Equivalent | Unknown:
    """Search for a (1,1)-equivalence between two words.

    Only ``Equivalent`` or ``Unknown`` come back: boundary moves change
    parity, so there is no cheap invariant separating classes.
    """
    budget = budget if budget is not None else Budget.for_words(w1, w2)
    a, b = w1.letters, w2.letters
    result = bidirectional_search(core_letters(a), core_letters(b), CoreExpander(budget.max_len),
                                  budget.max_nodes, budget.max_len, workers)
    if result.path is None:
        return Unknown(result.report)
    steps = strip_steps(a) + path_to_steps(result.path, _materialize_core_move)
    steps += _invert_deletions(strip_steps(b))
    return Equivalent(Certificate(w1, tuple(steps), w2), result.report)


class LowerStatus(Enum):
    EXACT = "exact"
    UNPROVEN = "unproven"


@dataclass(frozen=True)
class LengthReport:
    upper: int
    witness: OneOneWord
    cert: Certificate
    lower_status: LowerStatus
    search: SearchReport | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        lower = {"status": self.lower_status.value}
        if self.lower_status is LowerStatus.EXACT:
            lower["value"] = 1
        return {"upper": self.upper, "witness": self.witness.to_json(),
                "lower_status": lower, "certificate": self.cert.to_json(),
                "search": self.search.to_json() if self.search else None}


def _offsets(limit: int):
    yield 0
    for a in range(1, limit + 1):
        yield a
        yield -a


def _pad(letters: str, a: int, b: int) -> str:
    return ("l" if a > 0 else "L") * abs(a) + letters + ("m" if b > 0 else "M") * abs(b)


def best_padding(core: str, cutoff: int | None = None):
    """Best (1,1)-word ``l^a core m^b`` over small paddings ``a``, ``b``.

    ``core`` must already be stripped, so it starts with an m-letter and
    ends with an l-letter and padding never cancels. Returns ``(k, a, b)``,
    or ``None`` when no padding can beat ``cutoff`` (the count of s-runs
    already bounds ``k`` from below). Ties prefer small ``|a| + |b|``.
    """
    if not core:
        return 1, 0, 0
    pieces = _S_RUN.split(core)
    segs = pieces[0::2]
    if cutoff is not None and len(segs) >= cutoff:
        return None
    if len(segs) == 1:
        seg = segs[0]
        lim = len(seg) + 1
        pairs = sorted(((a, b) for a in _offsets(lim) for b in _offsets(lim)),
                       key=lambda ab: abs(ab[0]) + abs(ab[1]))
        if cutoff == 2:
            # only a single torus word can help; skip the factorisation
            for a, b in pairs:
                if recognize_letters(_pad(seg, a, b)):
                    return 1, a, b
            return None
        k, _, a, b = min((segment_block_count(_pad(seg, a, b)), i, a, b)
                         for i, (a, b) in enumerate(pairs))
        return k, a, b
    middle = sum(segment_block_count(s) for s in segs[1:-1])
    best_a = min(_offsets(len(segs[0]) + 1),
                 key=lambda x: (segment_block_count(_pad(segs[0], x, 0)), abs(x), x < 0))
    best_b = min(_offsets(len(segs[-1]) + 1),
                 key=lambda x: (segment_block_count(_pad(segs[-1], 0, x)), abs(x), x < 0))
    k = (segment_block_count(_pad(segs[0], best_a, 0)) + middle
         + segment_block_count(_pad(segs[-1], 0, best_b)))
    return k, best_a, best_b


def one_one_length_upper(w: BraidWord, budget: Budget | None = None) -> LengthReport:
    """Upper bound for the (1,1)-length of ``w`` by a budgeted search.

    Cores are expanded best-first: fewest blocks after padding, then
    shortest core, then discovery order. Every core reached is scored
    with :func:`best_padding`; the search stops early once a single torus
    word is found, since nothing beats ``k = 1``.
    """
    budget = budget if budget is not None else Budget.for_words(w)
    start = core_letters(w.letters)
    expand = CoreExpander(budget.max_len)
    parents: dict[str, tuple[str, Hashable] | None] = {start: None}
    depths = {start: 0}
    k, a, b = best_padding(start)
    best = (k, start, a, b)
    heap = [(k, len(start), 0, start)]
    seq = 0
    depth = 0
    reason = "space-exhausted"
    while heap and best[0] > 1:
        _, _, _, core = heapq.heappop(heap)
        depth = max(depth, depths[core])
        for new, desc, _ in expand(core):
            if new in parents:
                continue
            parents[new] = (core, desc)
            depths[new] = depths[core] + 1
            scored = best_padding(new, cutoff=best[0])
            k = best[0]
            if scored is not None and scored[0] < best[0]:
                k, a, b = scored
                best = (k, new, a, b)
                if k == 1:
                    break
            seq += 1
            heapq.heappush(heap, (k, len(new), seq, new))
            if len(parents) >= budget.max_nodes:
                break
        if len(parents) >= budget.max_nodes and best[0] > 1:
            reason = "node-budget"
            break
    if best[0] == 1:
        reason = "optimal"
    k, core, a, b = best
    path = []
    node = core
    while parents[node] is not None:
        parent, desc = parents[node]
        path.append((parent, desc, node, False))
        node = parent
    path.reverse()
    steps = strip_steps(w.letters) + path_to_steps(path, _materialize_core_move)
    padded = _pad(core, a, b)
    steps += _prepend_steps(padded[:abs(a)]) + _append_steps(padded[len(padded) - abs(b):],
                                                            abs(a) + len(core))
    witness = _parse_letters(padded)
    assert witness.k == k
    cert = Certificate(w, tuple(steps), witness.flatten())
    report = SearchReport(len(parents), budget.max_len, budget.max_nodes, depth, reason)
    status = LowerStatus.EXACT if k == 1 else LowerStatus.UNPROVEN
    return LengthReport(k, witness, cert, status, report)


def is_torus_position(w: BraidWord, budget: Budget | None = None) -> TorusType | None:
    """Type of a single-torus-word witness, or ``None`` if none was found.

    ``None`` is not a proof that no such witness exists. The empty word is
    reported as type ``(1, 0)``.
    """
    report = one_one_length_upper(w, budget)
    if report.upper != 1:
        return None
    if report.witness.is_empty:
        return TorusType(1, 0)
    return report.witness.blocks[0][0]
