"""Regression suite of worked examples, runnable from the CLI."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Callable

from .braid_core import Budget, Equivalent, equivalent, parse_word, replay
from .braid_core.rules import RELATORS
from .braid_core.words import BraidWord, format_word
from .one_one import is_torus_position, one_one_equivalent, one_one_length_upper, parse_one_one
from .torus_words import TorusType, torus_word
from .two_bridge import (CFExpansion, Form, cf_value, conway_params, level_bound_rho1,
                         rho1_word, rho2_word)


@dataclass
class RunConfig:
    budget_nodes: int = 10**6
    budget_len: int | None = None
    workers: int = 1
    output: str = "text"

    def __post_init__(self):
        if self.budget_nodes <= 0 or self.workers <= 0:
            raise ValueError("budget and worker counts must be positive")
        if self.budget_len is not None and self.budget_len <= 0:
            raise ValueError("length budget must be positive")
        if self.output not in ("text", "json"):
            raise ValueError(f"unknown output mode {self.output!r}")

    def budget(self, *words: BraidWord) -> Budget:
        return Budget.for_words(*words, max_len=self.budget_len, max_nodes=self.budget_nodes)

    def to_json(self) -> dict:
        return {"nodes": self.budget_nodes, "len": self.budget_len, "workers": self.workers}


@dataclass
class SuiteResult:
    case: str
    expected: str
    actual: str
    status: str  # pass, fail or unknown
    seconds: float

    def to_json(self) -> dict:
        return {"case": self.case, "expected": self.expected, "actual": self.actual,
                "status": self.status, "seconds": round(self.seconds, 4)}


# A case returns (expected, actual, exhausted); exhausted marks a search
# that ran out of budget, which turns a mismatch into "unknown".
Case = Callable[[RunConfig], tuple[str, str, bool]]

P = parse_word


def _torus(p, q, expected):
    return lambda cfg: (expected, format_word(torus_word(TorusType(p, q))), False)


def _conway(p, q, expected):
    return lambda cfg: (expected, str(list(conway_params(Fraction(p, q)).entries)), False)


def _rho(entries, which, expected):
    def run(cfg):
        e = CFExpansion(entries, Form.ALL_EVEN)
        word = rho1_word(e) if which == 1 else rho2_word(e)
        return expected, format_word(word), False
    return run


def _bound(entries, form, expected):
    return lambda cfg: (str(expected), str(level_bound_rho1(CFExpansion(entries, form))), False)


def _equal_values(a, b):
    return lambda cfg: ("equal", "equal" if cf_value(a) == cf_value(b) else "different", False)


def _verdict(v) -> str:
    if isinstance(v, Equivalent) and not replay(v.certificate):
        return "bad-certificate"
    return v.verdict


def _group_equiv(a, b):
    def run(cfg):
        w1, w2 = P(a), P(b)
        v = equivalent(w1, w2, cfg.budget(w1, w2), cfg.workers)
        return "equivalent", _verdict(v), v.verdict == "unknown"
    return run


def _one_one_equiv(a, b):
    def run(cfg):
        w1, w2 = P(a), P(b)
        v = one_one_equivalent(w1, w2, cfg.budget(w1, w2), cfg.workers)
        return "equivalent", _verdict(v), v.verdict == "unknown"
    return run


def _parse11(word, expected):
    def run(cfg):
        o = parse_one_one(P(word))
        types = ",".join(str(tuple(t)) for t, _ in o.blocks)
        return expected, f"k={o.k} {types}".replace(" ", ""), False
    return run


def _length(word, check, expected):
    """``check(report)`` renders the observed value compared against ``expected``."""
    def run(cfg):
        w = P(word)
        rep = one_one_length_upper(w, cfg.budget(w))
        ok_cert = replay(rep.cert)
        actual = check(rep) if ok_cert else "bad-certificate"
        return expected, actual, rep.search.reason == "node-budget"
    return run


def _literal_witness(word, witness):
    def run(cfg):
        w, x = P(word), P(witness)
        v = one_one_equivalent(w, x, cfg.budget(w, x), cfg.workers)
        k = parse_one_one(x).k
        actual = f"{_verdict(v)},k={k}"
        return "equivalent,k=2", actual, v.verdict == "unknown"
    return run


def _no_torus(word):
    def run(cfg):
        w = P(word)
        t = is_torus_position(w, cfg.budget(w))
        return "none", "none" if t is None else str(t), False
    return run


def _cases() -> list[tuple[str, Case]]:
    cases: list[tuple[str, Case]] = [
        ("torus-word (5,3)", _torus(5, 3, "m l m l^2 m l^2")),
        ("torus-word (-5,3)", _torus(-5, 3, "m l^-2 m l^-2 m l^-1")),
        ("torus-word (-5,-3)", _torus(-5, -3, "l^-2 m^-1 l^-2 m^-1 l^-1 m^-1")),
        ("torus-word (5,-3)", _torus(5, -3, "l m^-1 l^2 m^-1 l^2 m^-1")),
        ("torus-word (1,0)", _torus(1, 0, "l")),
        ("torus-word (-1,0)", _torus(-1, 0, "l^-1")),
        ("torus-word (0,1)", _torus(0, 1, "m")),
        ("torus-word (0,-1)", _torus(0, -1, "m^-1")),
        ("conway 13/4", _conway(13, 4, "[4, -2, 2, -2]")),
        ("rho1 [-2,2]", _rho((-2, 2), 1, "m s^2 l")),
        ("rho1 [4,-2,2,-2]", _rho((4, -2, 2, -2), 1, "m s^-2 l^-1 s^-2 l^-2")),
        ("rho2 [4,-2,2,-2]", _rho((4, -2, 2, -2), 2, "m s^-4 l^-1 s^-2 l^-1")),
        ("bound [6,2,2,-2,...,2,6,4]",
         _bound((6, 2, 2, -2, 2, -2, 2, -2, 2, -2, 2, 2, 6, 4), Form.EVEN_ODD, 9)),
        ("bound [6,3,-10,3,6,4]", _bound((6, 3, -10, 3, 6, 4), Form.EVEN_ODD, 6)),
        ("bound [4,-2,2,-2]", _bound((4, -2, 2, -2), Form.EVEN_ODD, 3)),
        ("value [6,3,-10,3,6,4]",
         _equal_values((6, 3, -10, 3, 6, 4), (6, 2, 2, -2, 2, -2, 2, -2, 2, -2, 2, 2, 6, 4))),
    ]
    for name, rel in RELATORS.items():
        letters = " ".join(rel).replace("L", "l^-1").replace("M", "m^-1").replace("S", "s^-1")
        cases.append((f"relator {name} = 1", _group_equiv(letters, "1")))
    cases += [
        ("s l^-1 = s^2 m s m l^-1", _group_equiv("s l^-1", "s^2 m s m l^-1")),
        ("trefoil chain in B", _group_equiv("m s^2 l", "s^-1 m^-1 l^-1 s^-1")),
        ("equiv11 mlml ~ m^2 l", _one_one_equiv("m l m l", "m^2 l")),
        ("equiv11 m^-1 l^-1", _one_one_equiv("m^-1 l^-1", "l^-1 m^-1 l^-1 m^-2")),
        ("equiv11 trefoil", _one_one_equiv("m s^2 l", "l^-1 m^-1 l^-1 m^-2")),
        ("length m s^2 l", _length("m s^2 l", lambda r: f"upper={r.upper}", "upper=1")),
        ("length K13/4 rho2", _length("m s^-4 l^-1 s^-2 l^-1",
                                     lambda r: "upper<=2" if r.upper <= 2 else f"upper={r.upper}",
                                     "upper<=2")),
        ("witness K13/4 rho2 literal", _literal_witness("m s^-4 l^-1 s^-2 l^-1",
                                                        "l^-1 m s^-3 l^2 m^-1")),
        ("parse11 tau1", _parse11("m^-1 s^-1 m l^-1 m^3 l^-1 m^3", "k=2(0,-1),(-2,7)")),
        ("parse11 tau3", _parse11("m l^-1 m s^-1 m^-1 l m^-1 l m^-1", "k=2(-1,2),(2,-3)")),
    ]
    for n in (1, 2, 3):
        word = "m " + " ".join(["s^-2 l^-1"] * n)
        cases.append((f"length m(s^-2 l^-1)^{n}",
                      _length(word, lambda r: f"upper={r.upper} type={_witness_type(r)}",
                              f"upper=1 type=({2 * n + 1}, -2)")))
    cases.append(("no torus witness m^2 l^-1 m^3 l^-1", _no_torus("m^2 l^-1 m^3 l^-1")))
    return cases


def _witness_type(report) -> str:
    if report.upper != 1 or report.witness.is_empty:
        return "-"
    return str(tuple(report.witness.blocks[0][0]))


def paper_suite(cfg: RunConfig | None = None) -> list[SuiteResult]:
    cfg = cfg or RunConfig()
    out = []
    for name, case in _cases():
        t0 = time.perf_counter()
        expected, actual, exhausted = case(cfg)
        if expected == actual:
            status = "pass"
        else:
            status = "unknown" if exhausted else "fail"
        out.append(SuiteResult(name, expected, actual, status, time.perf_counter() - t0))
    return out


def suite_schema() -> dict:
    return json.loads(resources.files("leveler").joinpath("suite_schema.json").read_text())
