"""Partitions, compositions and the shape-level order theory.

Partitions are plain tuples of weakly decreasing positive integers with no
trailing zeros; compositions are tuples of nonnegative integers compared
modulo trailing zeros.  Boxes are 1-based ``(row, col)`` pairs.
"""

from functools import lru_cache

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Box = tuple[int, int]


def is_partition(parts) -> bool:
    """True if ``parts`` is a weakly decreasing tuple of positive integers."""
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts) -> Partition:
    lam = tuple(parts)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    return lam


def part(lam: Partition, i: int) -> int:
    """Row length ``lam[i]`` with zero padding past the last part (0-based)."""
    return lam[i] if 0 <= i < len(lam) else 0


def contains(inner: Partition, outer: Partition) -> bool:
    """Diagram containment: every row of ``inner`` fits inside ``outer``."""
    return len(inner) <= len(outer) and all(
        inner[i] <= outer[i] for i in range(len(inner))
    )


def conjugate(lam: Partition) -> Partition:
    """Transpose of the diagram: column lengths read left to right."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def is_even_partition(lam: Partition) -> bool:
    """True if every row has an even number of boxes."""
    return all(p % 2 == 0 for p in lam)


def trim(c) -> Composition:
    """Canonical form of a composition: drop trailing zeros."""
    c = tuple(c)
    end = len(c)
    while end > 0 and c[end - 1] == 0:
        end -= 1
    return c[:end]


def is_strong(c) -> bool:
    """True if the trimmed composition has only positive parts."""
    return all(p > 0 for p in trim(c))


def flat(c) -> Composition:
    """Delete all zero parts, yielding a strong composition of the same size."""
    return tuple(p for p in c if p > 0)


def refines(b, a) -> bool:
    """True if ``b`` splits into consecutive blocks summing to the parts of ``a``."""
    a, b = trim(a), trim(b)
    if not is_strong(a) or not is_strong(b):
        raise ValueError("refinement is defined for strong compositions")
    i = 0
    for target in a:
        acc = 0
        while acc < target and i < len(b):
            acc += b[i]
            i += 1
        if acc != target:
            return False
    return i == len(b)


def _splits(n: int):
    # strong compositions of n, by bar placement, lex descending like (3),(2,1),(1,2),(1,1,1)
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _splits(n - first):
            yield (first,) + rest


def ref_set(a) -> tuple[Composition, ...]:
    """All strong compositions refining ``a``, sorted lexicographically descending."""
    a = trim(a)
    if not is_strong(a):
        raise ValueError("refinement is defined for strong compositions")
    out = [()]
    for p in a:
        out = [head + block for head in out for block in _splits(p)]
    return tuple(sorted(out, reverse=True))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """Dominance comparison: every prefix sum of ``mu`` is at most that of ``lam``."""
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance needs equal sizes, got {sum(mu)} and {sum(lam)}")
    acc_mu = acc_lam = 0
    for i in range(max(len(mu), len(lam))):
        acc_mu += part(mu, i)
        acc_lam += part(lam, i)
        if acc_mu > acc_lam:
            return False
    return True


def is_horizontal_strip(inner: Partition, outer: Partition) -> bool:
    """True if ``outer/inner`` has at most one box in each column."""
    if not contains(inner, outer):
        return False
    return all(part(outer, i + 1) <= part(inner, i) for i in range(len(outer)))


def is_vertical_strip(inner: Partition, outer: Partition) -> bool:
    """True if ``outer/inner`` has at most one box in each row."""
    if not contains(inner, outer):
        return False
    return all(outer[i] - part(inner, i) <= 1 for i in range(len(outer)))


def in_N(lam: Partition, n: int) -> bool:
    """True if ``n`` can be the length of a chain ending at ``lam``: n >= |lam|, same parity."""
    m = sum(lam)
    return n >= m and (n - m) % 2 == 0


def vertical_strip_additions(lam: Partition, size: int) -> list[Partition]:
    """All partitions obtained from ``lam`` by adding one vertical strip of ``size`` boxes."""
    results: list[Partition] = []
    nrows = len(lam) + size

    def rec(i: int, remaining: int, prev: int, acc: list[int]):
        if remaining == 0:
            results.append(trim(tuple(acc) + lam[i:]))
            return
        if i == nrows or remaining > nrows - i:
            return
        base = part(lam, i)
        for add in (0, 1):
            new = base + add
            if new == 0 or new > prev:
                continue
            acc.append(new)
            rec(i + 1, remaining - add, new, acc)
            acc.pop()

    rec(0, size, size + (lam[0] if lam else 0) + 1, [])
    return results


@lru_cache(maxsize=None)
def v_set(lam: Partition, n: int) -> tuple[Partition, ...]:
    """Partitions of ``n`` reachable from ``lam`` by adding even-size vertical strips.

    Breadth-first closure over single strip additions; empty when the parity
    or size constraint fails.
    """
    lam = check_partition(lam) if lam else ()
    if not in_N(lam, n):
        return ()
    seen = {lam}
    frontier = [lam]
    while frontier:
        new: list[Partition] = []
        for mu in frontier:
            room = n - sum(mu)
            for size in range(2, room + 1, 2):
                for nu in vertical_strip_additions(mu, size):
                    if nu not in seen:
                        seen.add(nu)
                        new.append(nu)
        frontier = new
    return tuple(sorted((nu for nu in seen if sum(nu) == n), reverse=True))


def lambda_bar(lam: Partition, n: int) -> Partition:
    """The dominance-maximum of ``v_set(lam, n)``: add (n-|lam|)/2 to the top two rows."""
    if not in_N(lam, n):
        raise ValueError(
            f"{n} not admissible for {lam}: need n >= |lam| and n == |lam| (mod 2)"
        )
    r = (n - sum(lam)) // 2
    padded = lam + (0,) * max(0, 2 - len(lam))
    return trim((padded[0] + r, padded[1] + r) + padded[2:])


def partitions_of(m: int) -> tuple[Partition, ...]:
    """All partitions of ``m``, lexicographically descending."""
    return tuple(sorted(_partitions_of(m, m), reverse=True))


@lru_cache(maxsize=None)
def _partitions_of(m: int, largest: int) -> tuple[Partition, ...]:
    if m == 0:
        return ((),)
    out = []
    for first in range(min(m, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions_of(m - first, first))
    return tuple(out)


def even_conjugate_partitions(m: int) -> tuple[Partition, ...]:
    """Partitions of ``m`` whose conjugate is even, i.e. rows repeat in equal pairs."""
    if m % 2 != 0:
        return ()
    out = []
    for gamma in partitions_of(m // 2):
        doubled = tuple(p for p in gamma for _ in range(2))
        out.append(doubled)
    return tuple(sorted(out, reverse=True))


def addable_boxes(lam: Partition) -> list[Box]:
    """Boxes whose addition leaves a partition, ordered by increasing column."""
    boxes = []
    for i in range(len(lam) + 1):
        if part(lam, i) < part(lam, i - 1) or i == 0:
            boxes.append((i + 1, part(lam, i) + 1))
    return sorted(boxes, key=lambda b: b[1])


def removable_boxes(lam: Partition) -> list[Box]:
    """Outside corners, ordered by decreasing column."""
    boxes = []
    for i in range(len(lam)):
        if lam[i] > part(lam, i + 1):
            boxes.append((i + 1, lam[i]))
    return sorted(boxes, key=lambda b: -b[1])


def add_box(lam: Partition, box: Box) -> Partition:
    row, col = box
    if col != part(lam, row - 1) + 1 or not (row == 1 or part(lam, row - 2) >= col):
        raise ValueError(f"box {box} is not addable to {lam}")
    padded = list(lam) + [0] * (row - len(lam))
    padded[row - 1] += 1
    return trim(padded)


def remove_box(lam: Partition, box: Box) -> Partition:
    row, col = box
    if row > len(lam) or lam[row - 1] != col or part(lam, row) == col:
        raise ValueError(f"box {box} is not an outside corner of {lam}")
    out = list(lam)
    out[row - 1] -= 1
    return trim(out)


def northeast(b1: Box, b2: Box) -> bool:
    """True if ``b2`` lies strictly northEast of ``b1``: weakly above and strictly right."""
    return b1[0] >= b2[0] and b1[1] < b2[1]


def horizontal_strip_boxes(inner: Partition, outer: Partition) -> list[Box]:
    """Boxes of the horizontal strip ``outer/inner`` in increasing column order."""
    boxes = [
        (i + 1, c)
        for i in range(len(outer))
        for c in range(part(inner, i) + 1, outer[i] + 1)
    ]
    return sorted(boxes, key=lambda b: b[1])


def composition_to_dict(c: Composition) -> dict:
    """Wire form keeping stored zeros: ``{"parts": [2, 0, 3]}``."""
    return {"parts": list(c)}


def composition_from_dict(data: dict) -> Composition:
    try:
        return tuple(int(p) for p in data["parts"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed composition encoding: {exc}") from exc
