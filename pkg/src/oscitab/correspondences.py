"""Burge arrays and the Sundaram correspondence for oscillating tableaux.

A two-row array is lexicographic when its columns (top, bottom) weakly
increase left to right; it is Burge when additionally top > bottom in every
column.  The Sundaram map replays an SSOT's substeps, growing a tableau on
additions and column-unbumping on deletions, each deletion contributing a
Burge pair (letter, ejected value).
"""

from bisect import insort
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .shapes import Box, part
from .oscillating import ADD, DELETE, SSOT, ssot_from_events, substep_events
from .tableaux import (
    EMPTY,
    Tableau,
    check_tableau,
    column_insert,
    column_unbump,
    insertion_tableau,
    tableau_shape,
)

Pair = tuple[int, int]


@dataclass(frozen=True)
class TwoRowArray:
    """Sequence of (top, bottom) pairs of positive integers."""

    pairs: tuple[Pair, ...]

    def __post_init__(self):
        pairs = tuple((int(t), int(b)) for t, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if any(t < 1 or b < 1 for t, b in pairs):
            raise ValueError("array entries must be positive")

    def is_lexicographic(self) -> bool:
        return all(self.pairs[i] <= self.pairs[i + 1] for i in range(len(self.pairs) - 1))

    def is_burge(self) -> bool:
        return self.is_lexicographic() and all(t > b for t, b in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def content(self) -> Counter:
        """Multiset of all entries, both rows."""
        c: Counter = Counter()
        for t, b in self.pairs:
            c[t] += 1
            c[b] += 1
        return c

    def to_dict(self) -> dict:
        return {"pairs": [list(p) for p in self.pairs]}

    @classmethod
    def from_dict(cls, data: dict) -> "TwoRowArray":
        try:
            return cls(tuple((p[0], p[1]) for p in data["pairs"]))
        except (KeyError, TypeError, IndexError) as exc:
            raise ValueError(f"malformed array encoding: {exc}") from exc


EMPTY_ARRAY = TwoRowArray(())


def insert_pair(L: TwoRowArray, pair: Pair) -> TwoRowArray:
    """Lexicographic insertion, placed after any equal pairs."""
    pairs = list(L.pairs)
    insort(pairs, (int(pair[0]), int(pair[1])))
    return TwoRowArray(tuple(pairs))


def symmetrize(L: TwoRowArray) -> TwoRowArray:
    """Each pair together with its mirror, rearranged lexicographically."""
    if not L.is_lexicographic():
        raise ValueError("symmetrization needs a lexicographic array")
    doubled = [*L.pairs, *((b, t) for t, b in L.pairs)]
    return TwoRowArray(tuple(sorted(doubled)))


def burge_map(L: TwoRowArray) -> Tableau:
    """Insertion tableau of the bottom word of the symmetrized array."""
    if not L.is_burge():
        raise ValueError("the Burge correspondence needs a Burge array")
    bottom_word = tuple(b for _, b in symmetrize(L).pairs)
    return insertion_tableau(bottom_word)


@dataclass(frozen=True)
class SundaramPair:
    """Image of an SSOT: a Burge array and a tableau of the SSOT's shape."""

    burge: TwoRowArray
    tableau: Tableau

    def length(self) -> int:
        return 2 * len(self.burge) + sum(tableau_shape(self.tableau))

    def content(self) -> Counter:
        c = self.burge.content()
        for row in self.tableau:
            c.update(row)
        return c

    def to_dict(self) -> dict:
        return {"burge": self.burge.to_dict(), "tableau": [list(r) for r in self.tableau]}

    @classmethod
    def from_dict(cls, data: dict) -> "SundaramPair":
        try:
            return cls(
                TwoRowArray.from_dict(data["burge"]),
                check_tableau(data["tableau"]),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed pair encoding: {exc}") from exc


def _place_entry(T: Tableau, box: Box, x: int) -> Tableau:
    row, col = box
    shape = tableau_shape(T)
    if col != part(shape, row - 1) + 1 or (row > 1 and part(shape, row - 2) < col):
        raise ValueError(f"box {box} is not addable to shape {shape}")
    if col > 1 and T[row - 1][col - 2] > x:
        raise ValueError(f"placing {x} at {box} breaks row order")
    if row > 1 and T[row - 2][col - 1] >= x:
        raise ValueError(f"placing {x} at {box} breaks column order")
    rows = [list(r) for r in T]
    if row > len(rows):
        rows.append([])
    rows[row - 1].append(x)
    return tuple(tuple(r) for r in rows)


def sundaram_steps(S: SSOT) -> Iterator[tuple[int, int, str, Box, TwoRowArray, Tableau]]:
    """Replay the correspondence, yielding (m, letter, kind, box, L_m, T_m) per substep."""
    events = substep_events(S)
    L = EMPTY_ARRAY
    T = EMPTY
    for m, (u, box, kind) in enumerate(
        zip(events.profile, events.boxes, events.kinds), 1
    ):
        if kind == ADD:
            T = _place_entry(T, box, u)
        else:
            T, ejected = column_unbump(T, box)
            L = insert_pair(L, (u, ejected))
        yield m, u, kind, box, L, T


def sundaram(S: SSOT) -> SundaramPair:
    """The (modified) Sundaram correspondence: an SSOT to its Burge/tableau pair."""
    L, T = EMPTY_ARRAY, EMPTY
    for _, _, _, _, L, T in sundaram_steps(S):
        pass
    result = SundaramPair(L, T)
    if not result.burge.is_burge():
        raise ValueError("internal error: produced array is not Burge")
    return result


def sundaram_inverse(pair: SundaramPair) -> SSOT:
    """Reconstruct the unique SSOT mapping to ``pair``.

    Undoes events largest letter first; a letter present in the tableau was
    an addition (undone before deletions of the same letter), otherwise the
    rightmost array pair is removed and its bottom value column-inserted.
    """
    if not pair.burge.is_burge():
        raise ValueError("not a Burge array")
    T = check_tableau(pair.tableau)
    L = list(pair.burge.pairs)
    reversed_events: list[tuple[int, Box, str]] = []
    while L or T:
        x_tab = max((x for row in T for x in row), default=0)
        x_arr = L[-1][0] if L else 0
        if x_tab >= x_arr:
            x = x_tab
            box = max(
                ((r + 1, c + 1) for r, row in enumerate(T) for c, v in enumerate(row) if v == x),
                key=lambda b: b[1],
            )
            rows = [list(r) for r in T]
            rows[box[0] - 1].pop()
            T = tuple(tuple(r) for r in rows if r)
            reversed_events.append((x, box, ADD))
        else:
            x, bottom = L.pop()
            T, box = column_insert(T, bottom)
            reversed_events.append((x, box, DELETE))
    reversed_events.reverse()
    try:
        return ssot_from_events(
            [e[0] for e in reversed_events],
            [e[1] for e in reversed_events],
            [e[2] for e in reversed_events],
        )
    except ValueError as exc:
        raise ValueError(f"pair has no valid preimage: {exc}") from exc
