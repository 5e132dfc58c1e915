"""Continued fractions for 2-bridge parameters, braid descriptions and level bounds.

``[e_1, e_2, ..., e_n]`` denotes ``e_1 + 1/(e_2 + 1/(... + 1/e_n))``.
Rationals are :class:`fractions.Fraction` values throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .braid_core.words import BraidWord, free_reduce

Rational = Fraction


class Form(Enum):
    ALL_EVEN = "all-even"
    EVEN_ODD = "even-odd"
    ODD_EVEN = "odd-even"


class ExpansionError(ValueError):
    pass


def _form_ok(entries: Sequence[int], form: Form) -> bool:
    if not entries or len(entries) % 2 or any(e == 0 for e in entries):
        return False
    if form is Form.ALL_EVEN:
        return all(e % 2 == 0 for e in entries)
    offset = 0 if form is Form.EVEN_ODD else 1
    return all(e % 2 == 0 for e in entries[offset::2])


@dataclass(frozen=True)
class CFExpansion:
    entries: tuple[int, ...]
    form: Form

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if not _form_ok(self.entries, self.form):
            raise ExpansionError(f"{list(self.entries)} is not of form {self.form.value}")

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.entries)) + "]"

    def as_form(self, form: Form) -> "CFExpansion":
        """Reinterpret the entries; all-even data fits either general form."""
        return CFExpansion(self.entries, form)


def parse_rational(text: str) -> Fraction:
    return Fraction(text.replace(" ", ""))


def parse_entries(text: str) -> tuple[int, ...]:
    """``"4,-2,2,-2"`` (brackets optional) to a tuple of integers."""
    body = text.strip().strip("[]")
    try:
        return tuple(int(x) for x in body.split(",") if x.strip())
    except ValueError:
        raise ExpansionError(f"cannot read entries from {text!r}") from None


def cf_value(e: CFExpansion | Iterable[int]) -> Fraction:
    """Exact value, evaluated from the right."""
    entries = list(e.entries if isinstance(e, CFExpansion) else e)
    if not entries:
        raise ExpansionError("empty expansion")
    value = Fraction(entries[-1])
    for x in reversed(entries[:-1]):
        if value == 0:
            raise ExpansionError(f"division by zero while evaluating {entries}")
        value = x + 1 / value
    return value


def _check_parameter(r: Fraction) -> None:
    if r.numerator % 2 == 0 or r.denominator % 2:
        raise ExpansionError(f"{r} needs an odd numerator and an even denominator")
    if abs(r.numerator) <= r.denominator:
        # the leading entry would be 0
        raise ExpansionError(f"{r} needs |p| > |q|")


def _nearest_even(v: Fraction) -> int:
    lo = (v.numerator // v.denominator)
    lo -= lo % 2  # largest even integer <= v
    return lo if v - lo < 1 else lo + 2


def conway_params(r: Fraction) -> CFExpansion:
    """The all-even expansion, taking the even integer within 1 of each partial value."""
    r = Fraction(r)
    _check_parameter(r)
    entries = []
    v = r
    while True:
        e = _nearest_even(v)
        if abs(v - e) >= 1:
            raise ExpansionError(f"no even entry within 1 of {v}")
        entries.append(e)
        if v == e:
            break
        v = 1 / (v - e)
    out = CFExpansion(tuple(entries), Form.ALL_EVEN)
    assert cf_value(out) == r
    return out


def validate_expansion(r: Fraction, e: CFExpansion | Sequence[int], form: Form | None = None) -> bool:
    entries = e.entries if isinstance(e, CFExpansion) else tuple(e)
    form = form or (e.form if isinstance(e, CFExpansion) else Form.ALL_EVEN)
    if not _form_ok(entries, form):
        return False
    try:
        return cf_value(entries) == Fraction(r)
    except ExpansionError:
        return False


def _require(e: CFExpansion, *forms: Form) -> None:
    if e.form not in forms:
        raise ExpansionError(f"expected form {' or '.join(f.value for f in forms)}, got {e.form.value}")


def rho1_pairs(e: CFExpansion) -> list[tuple[int, int]]:
    """``(c_i, d_i)`` from ``[2c_1, d_1, ..., 2c_k, d_k]``."""
    _require(e, Form.EVEN_ODD, Form.ALL_EVEN)
    xs = e.entries
    return [(xs[i] // 2, xs[i + 1]) for i in range(0, len(xs), 2)]


def rho2_pairs(e: CFExpansion) -> list[tuple[int, int]]:
    """``(c'_i, d'_i)`` from ``[c'_1, 2d'_1, ..., c'_k, 2d'_k]``."""
    _require(e, Form.ODD_EVEN, Form.ALL_EVEN)
    xs = e.entries
    return [(xs[i], xs[i + 1] // 2) for i in range(0, len(xs), 2)]


def rho1_word(e: CFExpansion) -> BraidWord:
    """``m s^{d_k} l^{-c_k} ... s^{d_1} l^{-c_1}``."""
    syl = [("m", 1)]
    for c, d in reversed(rho1_pairs(e)):
        syl += [("s", d), ("l", -c)]
    return free_reduce(syl)


def rho2_word(e: CFExpansion) -> BraidWord:
    """``m s^{-c'_1} l^{d'_1} ... s^{-c'_k} l^{d'_k}``."""
    syl = [("m", 1)]
    for c, d in rho2_pairs(e):
        syl += [("s", -c), ("l", d)]
    return free_reduce(syl)


def level_bound_rho1(e: CFExpansion) -> int:
    return sum(min(abs(c), 2) for c, _ in rho1_pairs(e)[1:]) + 2


def level_bound_rho2(e: CFExpansion) -> int:
    return sum(min(abs(d), 2) for _, d in rho2_pairs(e)[1:]) + 2


def flip_params(e: CFExpansion) -> CFExpansion:
    """``[2a_1, 2b_1, ..., 2a_n, 2b_n]`` to ``[-2b_n, -2a_n, ..., -2b_1, -2a_1]``."""
    _require(e, Form.ALL_EVEN)
    return CFExpansion(tuple(-x for x in reversed(e.entries)), Form.ALL_EVEN)


_POSITION_FORM = {"rho1": Form.EVEN_ODD, "rho2": Form.ODD_EVEN}
_BOUND = {"rho1": level_bound_rho1, "rho2": level_bound_rho2}


def _candidates(v: Fraction, even: bool, cap: int) -> list[int]:
    """Entries ``e`` with ``|v - e| < 1``, so the remaining tail exceeds 1 in size."""
    lo = v.numerator // v.denominator
    out = []
    for e in (lo - 1, lo, lo + 1, lo + 2):
        if e == 0 or abs(e) > cap or (even and e % 2):
            continue
        if abs(v - e) < 1:
            out.append(e)
    return out


def enumerate_expansions(r: Fraction, form: Form, max_entry: int, max_len: int):
    """Depth-first list of expansions of ``r`` in ``form`` within the caps.

    Only expansions whose every tail exceeds 1 in absolute value are
    visited, so each slot has at most two choices.
    """
    r = Fraction(r)
    out = []

    def dfs(v: Fraction, prefix: list[int]):
        pos = len(prefix)
        if pos >= max_len:
            return
        even = form is Form.ALL_EVEN or (pos % 2 == 0) == (form is Form.EVEN_ODD)
        for e in _candidates(v, even, max_entry):
            prefix.append(e)
            if v == e:
                if len(prefix) % 2 == 0:
                    out.append(CFExpansion(tuple(prefix), form))
            else:
                dfs(1 / (v - e), prefix)
            prefix.pop()

    dfs(r, [])
    return out


def optimize_expansion(r: Fraction, position: str, max_entry: int | None = None,
                       max_len: int | None = None) -> tuple[CFExpansion, int]:
    """Expansion of ``r`` minimising the level bound for ``position`` (rho1 or rho2).

    Ties go to the lexicographically smallest entry list. The Conway
    expansion is always a candidate, so the result is never worse than it.
    """
    if position not in _POSITION_FORM:
        raise ValueError(f"unknown position {position!r}")
    conway = conway_params(r)
    form = _POSITION_FORM[position]
    bound = _BOUND[position]
    max_entry = max_entry if max_entry is not None else 2 * max(abs(x) for x in conway.entries)
    max_len = max_len if max_len is not None else len(conway)
    best = conway.as_form(form)
    best_key = (bound(best), best.entries)
    for e in enumerate_expansions(r, form, max_entry, max_len):
        key = (bound(e), e.entries)
        if key < best_key:
            best, best_key = e, key
    return best, best_key[0]
