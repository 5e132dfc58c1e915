"""Torus words: words read off a staircase lattice path hugging a segment.

For coprime ``(p, q)`` the segment from the origin to ``(p, q)`` crosses
``|p| + |q| - 1`` unit squares. In each square some corners are selected
(those on the far side of the segment from the square's lower right
corner, with the first or last square replaced by its top edge when the
slope is negative) and the unique shortest lattice path through all
selected corners is read as a word: horizontal steps give ``l^{+-1}``,
vertical steps give ``m^{+-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .braid_core.words import BraidWord

Point = tuple[int, int]


@dataclass(frozen=True, order=True)
class TorusType:
    p: int
    q: int

    def __post_init__(self):
        if not is_valid_type(self.p, self.q):
            raise ValueError(f"({self.p}, {self.q}) is not a coprime pair")

    def __iter__(self):
        return iter((self.p, self.q))

    def __str__(self) -> str:
        return f"({self.p}, {self.q})"


def is_valid_type(p: int, q: int) -> bool:
    return (p, q) != (0, 0) and gcd(p, q) == 1


@dataclass(frozen=True)
class LatticePath:
    vertices: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.vertices) - 1


def _side(p: int, q: int, v: Point) -> int:
    d = q * v[0] - p * v[1]
    return (d > 0) - (d < 0)


def crossed_squares(p: int, q: int) -> list[Point]:
    """Lower-left corners of the unit squares met by the open segment, in order."""
    # Parameters along the segment in units of 1/(|p||q|); coprimality keeps
    # the two families of grid crossings disjoint.
    ap, aq = abs(p), abs(q)
    ts = sorted({0, ap * aq} | {i * aq for i in range(1, ap)} | {j * ap for j in range(1, aq)})
    den = 2 * ap * aq
    return [((p * (a + b)) // den, (q * (a + b)) // den) for a, b in zip(ts, ts[1:])]


def _selected_corners(p: int, q: int) -> set[Point]:
    squares = crossed_squares(p, q)
    chosen: set[Point] = set()
    for j, (x, y) in enumerate(squares):
        corners = [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)]
        top_edge = ((q < 0 < p and j == len(squares) - 1)
                    or (p < 0 < q and j == 0))
        if top_edge:
            chosen.update(corners[2:])
            continue
        ref = _side(p, q, (x + 1, y))
        if ref == 0:
            raise AssertionError(f"lower right corner of square {(x, y)} lies on the segment")
        chosen.update(v for v in corners if _side(p, q, v) == -ref)
    return chosen


def directed_path(t: TorusType) -> LatticePath:
    p, q = t
    if abs(p) + abs(q) < 2:
        raise ValueError("axis types have no staircase path; use torus_word")
    required = _selected_corners(p, q) | {(0, 0), (p, q)}
    ordered = sorted(required, key=lambda v: p * v[0] + q * v[1])
    sx = 1 if p > 0 else -1
    sy = 1 if q > 0 else -1
    path = [ordered[0]]
    for a, b in zip(ordered, ordered[1:]):
        dx, dy = b[0] - a[0], b[1] - a[1]
        if dx and dy:
            raise AssertionError(f"selected corners {a} and {b} are not axis aligned")
        if dx * sx < 0 or dy * sy < 0:
            raise AssertionError(f"selected corners {a} and {b} are out of order")
        for _ in range(abs(dx)):
            path.append((path[-1][0] + sx, path[-1][1]))
        for _ in range(abs(dy)):
            path.append((path[-1][0], path[-1][1] + sy))
    if path[-1] != (p, q) or len(path) - 1 != abs(p) + abs(q):
        raise AssertionError(f"path for {t} is not a shortest path")
    return LatticePath(tuple(path))


_AXIS = {(1, 0): "l", (-1, 0): "L", (0, 1): "m", (0, -1): "M"}


@lru_cache(maxsize=4096)
def torus_letters(p: int, q: int) -> str:
    if (p, q) in _AXIS:
        return _AXIS[(p, q)]
    verts = directed_path(TorusType(p, q)).vertices
    out = []
    for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
        if x1 != x0:
            out.append("l" if x1 > x0 else "L")
        else:
            out.append("m" if y1 > y0 else "M")
    return "".join(out)


def torus_word(t: TorusType) -> BraidWord:
    return BraidWord.from_letters(torus_letters(t.p, t.q))


@lru_cache(maxsize=1 << 16)
def recognize_letters(letters: str) -> tuple[int, int] | None:
    """Type of a letter string if it is literally a torus word, else ``None``."""
    if not letters or "s" in letters or "S" in letters:
        return None
    if ("m" in letters and "M" in letters) or ("l" in letters and "L" in letters):
        return None
    p = letters.count("l") - letters.count("L")
    q = letters.count("m") - letters.count("M")
    if not is_valid_type(p, q):
        return None
    return (p, q) if torus_letters(p, q) == letters else None


def recognize_torus_word(w: BraidWord) -> TorusType | None:
    found = recognize_letters(w.letters)
    return TorusType(*found) if found else None
