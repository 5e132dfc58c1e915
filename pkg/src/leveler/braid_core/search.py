"""Budgeted equality search in the reduced braid group.

The word problem is attacked by a bidirectional breadth-first search over
freely reduced words no longer than ``max_len``. It is a semi-decision
procedure: a meeting yields a certificate, a parity mismatch proves the
words distinct, and everything else is reported as unknown.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Sequence

from .certificate import Certificate, Step, apply_step, invert_step
from .rules import pattern_of, rule_catalog, splice
from .words import BraidWord, parity

DEFAULT_MAX_NODES = 10**6


def default_max_len(*words: BraidWord) -> int:
    return 2 * max((len(w) for w in words), default=0) + 8


@dataclass(frozen=True)
class Budget:
    max_len: int
    max_nodes: int = DEFAULT_MAX_NODES

    def __post_init__(self):
        if self.max_len <= 0 or self.max_nodes <= 0:
            raise ValueError(f"budget values must be positive: {self}")

    @classmethod
    def for_words(cls, *words: BraidWord, max_len: int | None = None,
                  max_nodes: int | None = None) -> "Budget":
        return cls(max_len if max_len is not None else default_max_len(*words),
                   max_nodes if max_nodes is not None else DEFAULT_MAX_NODES)


@dataclass(frozen=True)
class SearchReport:
    nodes: int
    max_len: int
    max_nodes: int
    depth: int
    reason: str  # "meet", "node-budget" or "space-exhausted"

    def to_json(self) -> dict:
        return {"nodes": self.nodes, "max_len": self.max_len,
                "max_nodes": self.max_nodes, "depth": self.depth, "reason": self.reason}


@dataclass(frozen=True)
class Equivalent:
    certificate: Certificate
    report: SearchReport | None = field(default=None, compare=False)

    verdict = "equivalent"

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "certificate": self.certificate.to_json(),
                "steps": len(self.certificate)}


@dataclass(frozen=True)
class Distinct:
    invariant: str
    value1: tuple
    value2: tuple

    verdict = "distinct"

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "invariant": self.invariant,
                "values": [list(self.value1), list(self.value2)]}


@dataclass(frozen=True)
class Unknown:
    report: SearchReport

    verdict = "unknown"

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "budget_report": self.report.to_json()}


EquivalenceVerdict = Equivalent | Distinct | Unknown

# An expansion entry: (new_state, descriptor, reversible).
Expansion = tuple[str, Hashable, bool]


@dataclass
class SearchResult:
    path: list[tuple[str, Hashable, str, bool]] | None  # (before, desc, after, backwards)
    report: SearchReport


def _expand_chunk(args):
    expand, chunk = args
    return [expand(w) for w in chunk]


def bidirectional_search(start: str, goal: str, expand: Callable[[str], Sequence[Expansion]],
                         max_nodes: int, max_len: int, workers: int = 1) -> SearchResult:
    """Layered bidirectional BFS.

    ``expand`` must be deterministic. The forward side follows every move;
    the backward side follows only reversible moves, so that each backward
    edge can be turned around when the path is rebuilt. The side with the
    smaller frontier grows by one full layer at a time (forward on ties) and
    the first word seen from both sides wins.
    """
    sides = ({start: None}, {goal: None})
    frontiers = ([start], [goal])
    depths = [0, 0]
    nodes = len(set(sides[0]) | set(sides[1]))

    def finish(meet, reason):
        report = SearchReport(nodes, max_len, max_nodes, depths[0] + depths[1], reason)
        if meet is None:
            return SearchResult(None, report)
        path = []
        w = meet
        while sides[0][w] is not None:
            parent, desc = sides[0][w]
            path.append((parent, desc, w, False))
            w = parent
        path.reverse()
        w = meet
        while sides[1][w] is not None:
            parent, desc = sides[1][w]
            path.append((parent, desc, w, True))
            w = parent
        return SearchResult(path, report)

    if start == goal:
        return finish(start, "meet")
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        while frontiers[0] and frontiers[1]:
            s = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
            own, other = sides[s], sides[1 - s]
            if pool is None:
                expansions: Iterable = (expand(w) for w in frontiers[s])
            else:
                size = max(1, len(frontiers[s]) // (4 * workers))
                chunks = [frontiers[s][i:i + size] for i in range(0, len(frontiers[s]), size)]
                expansions = (e for block in pool.map(_expand_chunk, [(expand, c) for c in chunks])
                              for e in block)
            depths[s] += 1
            nxt = []
            for w, exps in zip(frontiers[s], expansions):
                for new, desc, reversible in exps:
                    if new in own or (s == 1 and not reversible):
                        continue
                    own[new] = (w, desc)
                    if new in other:
                        return finish(new, "meet")
                    nodes += 1
                    if nodes >= max_nodes:
                        return finish(None, "node-budget")
                    nxt.append(new)
            frontiers[s][:] = nxt
        return finish(None, "space-exhausted")
    finally:
        if pool is not None:
            pool.shutdown()


def path_to_steps(path, materialize: Callable[[str, Hashable], list[Step]]) -> list[Step]:
    """Expand a search path into primitive steps, turning backward edges around."""
    steps: list[Step] = []
    for before, desc, after, backwards in path:
        seg = materialize(before, desc)
        if not backwards:
            steps.extend(seg)
            continue
        words = [before]
        for st in seg:
            words.append(apply_step(words[-1], st))
        assert words[-1] == after
        for i in range(len(seg) - 1, -1, -1):
            inv = invert_step(words[i], seg[i])
            assert inv is not None, "backward edge is not reversible"
            steps.append(inv)
    return steps


@lru_cache(maxsize=None)
def _group_moves():
    moves = []
    for rule in rule_catalog():
        for sign in (1, -1):
            pattern, rep = pattern_of(rule, sign)
            moves.append((rule.rule_id, sign, pattern, rep))
    return tuple(moves)


def rule_applications(word: str):
    """Yield ``(rule_id, dir, pos, new_word, reversible)`` in (rule_id, dir, pos) order."""
    for rule_id, sign, pattern, rep in _group_moves():
        if pattern:
            pos = word.find(pattern)
            while pos >= 0:
                new, inv = splice(word, pos, len(pattern), rep)
                yield rule_id, sign, pos, new, inv is not None
                pos = word.find(pattern, pos + 1)
        else:
            for pos in range(len(word) + 1):
                new, inv = splice(word, pos, 0, rep)
                yield rule_id, sign, pos, new, inv is not None


@dataclass(frozen=True)
class GroupExpander:
    max_len: int

    def __call__(self, word: str) -> list[Expansion]:
        return [(new, (rule_id, pos, sign), rev)
                for rule_id, sign, pos, new, rev in rule_applications(word)
                if len(new) <= self.max_len]


def _materialize_group(word: str, desc) -> list[Step]:
    rule_id, pos, sign = desc
    return [Step(rule_id, pos, sign)]


def _check_budget(budget: Budget | None, *words: BraidWord) -> Budget:
    return budget if budget is not None else Budget.for_words(*words)


def equivalent(w1: BraidWord, w2: BraidWord, budget: Budget | None = None,
               workers: int = 1) -> EquivalenceVerdict:
    """Decide (semi-)whether two words are equal in the reduced braid group."""
    budget = _check_budget(budget, w1, w2)
    p1, p2 = parity(w1), parity(w2)
    if p1 != p2:
        return Distinct("parity", tuple(p1), tuple(p2))
    result = bidirectional_search(w1.letters, w2.letters, GroupExpander(budget.max_len),
                                  budget.max_nodes, budget.max_len, workers)
    if result.path is None:
        return Unknown(result.report)
    steps = path_to_steps(result.path, _materialize_group)
    cert = Certificate(w1, tuple(steps), w2)
    return Equivalent(cert, result.report)


def simplify(w: BraidWord, budget: Budget | None = None) -> tuple[BraidWord, Certificate, SearchReport]:
    """Shortest word found equal to ``w`` by breadth-first search within the budget.

    Ties go to the first word discovered. The default length cap is
    ``len(w) + 4``, enough for one relator insertion beyond the input.
    """
    budget = budget if budget is not None else Budget(len(w) + 4)
    expand = GroupExpander(budget.max_len)
    start = w.letters
    parents: dict[str, tuple[str, Hashable] | None] = {start: None}
    best = start
    frontier = [start]
    depth = 0
    reason = "space-exhausted"
    while frontier and best:
        depth += 1
        nxt = []
        for word in frontier:
            for new, desc, _ in expand(word):
                if new in parents:
                    continue
                parents[new] = (word, desc)
                nxt.append(new)
                if len(new) < len(best):
                    best = new
                if len(parents) >= budget.max_nodes:
                    break
            if len(parents) >= budget.max_nodes:
                break
        if len(parents) >= budget.max_nodes:
            reason = "node-budget"
            break
        frontier = nxt
    path = []
    node = best
    while parents[node] is not None:
        parent, desc = parents[node]
        path.append((parent, desc, node, False))
        node = parent
    path.reverse()
    end = BraidWord.from_letters(best)
    cert = Certificate(w, tuple(path_to_steps(path, _materialize_group)), end)
    return end, cert, SearchReport(len(parents), budget.max_len, budget.max_nodes, depth, reason)
