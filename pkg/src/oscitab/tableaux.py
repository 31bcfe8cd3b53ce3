"""Semistandard Young tableaux: insertion algorithms, products, descents, LR counts.

Tableaux are tuples of row tuples; rows weakly increase, columns strictly
increase.  Row words read the bottom row first, left to right within rows.
"""

from bisect import bisect_left, bisect_right

from .shapes import (
    Box,
    Composition,
    Partition,
    contains,
    is_partition,
    northeast,
    part,
)

Tableau = tuple[tuple[int, ...], ...]

EMPTY: Tableau = ()


def tableau_shape(T: Tableau) -> Partition:
    return tuple(len(row) for row in T)


def is_semistandard(T) -> bool:
    shape = tuple(len(row) for row in T)
    if not is_partition(shape):
        return False
    for row in T:
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
        if any(not isinstance(x, int) or x < 1 for x in row):
            return False
    for i in range(len(T) - 1):
        if any(T[i][j] >= T[i + 1][j] for j in range(len(T[i + 1]))):
            return False
    return True


def check_tableau(T) -> Tableau:
    T = tuple(tuple(row) for row in T)
    if not is_semistandard(T):
        raise ValueError(f"not a semistandard tableau: {T}")
    return T


def weight(T: Tableau, nvars: int | None = None) -> Composition:
    """Content vector: multiplicity of each letter 1..max (or padded to ``nvars``)."""
    top = nvars if nvars is not None else max((x for row in T for x in row), default=0)
    counts = [0] * top
    for row in T:
        for x in row:
            counts[x - 1] += 1
    return tuple(counts)


def row_word(T: Tableau) -> tuple[int, ...]:
    """Reading word: bottom row first, each row left to right."""
    out: list[int] = []
    for row in reversed(T):
        out.extend(row)
    return tuple(out)


def row_insert(T: Tableau, x: int) -> tuple[Tableau, Box]:
    """Schensted row insertion; returns the new tableau and the new corner box."""
    rows = [list(row) for row in T]
    r = 0
    while r < len(rows):
        row = rows[r]
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return tuple(tuple(rw) for rw in rows), (r + 1, len(row))
        x, row[j] = row[j], x
        r += 1
    rows.append([x])
    return tuple(tuple(rw) for rw in rows), (len(rows), 1)


def insertion_tableau(word) -> Tableau:
    """RSK insertion tableau of a word, inserted left to right."""
    T: Tableau = EMPTY
    for x in word:
        T, _ = row_insert(T, x)
    return T


def _columns(T: Tableau) -> list[list[int]]:
    width = len(T[0]) if T else 0
    return [[row[c] for row in T if len(row) > c] for c in range(width)]


def _from_columns(cols: list[list[int]]) -> Tableau:
    while cols and not cols[-1]:
        cols.pop()
    depth = max((len(c) for c in cols), default=0)
    return tuple(
        tuple(col[r] for col in cols if len(col) > r) for r in range(depth)
    )


def column_insert(T: Tableau, x: int) -> tuple[Tableau, Box]:
    """Column insertion: ``x`` bumps the topmost entry >= x, moving right."""
    cols = _columns(T)
    c = 0
    while c < len(cols):
        col = cols[c]
        j = bisect_left(col, x)
        if j == len(col):
            col.append(x)
            return _from_columns(cols), (len(col), c + 1)
        x, col[j] = col[j], x
        c += 1
    cols.append([x])
    return _from_columns(cols), (1, len(cols))


def column_unbump(T: Tableau, box: Box) -> tuple[Tableau, int]:
    """Remove the corner entry at ``box``, reverse-inserting leftward.

    Returns the smaller tableau and the value ejected from column 1; exact
    inverse of :func:`column_insert`.
    """
    row, col = box
    shape = tableau_shape(T)
    if row > len(shape) or shape[row - 1] != col or part(shape, row) >= col:
        raise ValueError(f"box {box} is not an outside corner of shape {shape}")
    cols = _columns(T)
    x = cols[col - 1].pop()
    for c in range(col - 2, -1, -1):
        column = cols[c]
        # largest entry <= x swaps out; strict column increase makes it unique
        j = bisect_right(column, x) - 1
        x, column[j] = column[j], x
    return _from_columns(cols), x


def product(T1: Tableau, T2: Tableau) -> Tableau:
    """Tableau product: insertion tableau of the concatenated row words."""
    return insertion_tableau(row_word(T1) + row_word(T2))


def superstandard(lam: Partition) -> Tableau:
    """The tableau of shape ``lam`` whose row i is filled with i."""
    return tuple((i + 1,) * p for i, p in enumerate(lam))


def is_standard(T: Tableau) -> bool:
    entries = sorted(x for row in T for x in row)
    return is_semistandard(T) and entries == list(range(1, len(entries) + 1))


def _entry_positions(T: Tableau) -> dict[int, Box]:
    return {x: (r + 1, c + 1) for r, row in enumerate(T) for c, x in enumerate(row)}


def standard_horizontal_bands(T: Tableau) -> list[int]:
    """Sizes of the maximal bands of consecutive entries running northEast."""
    if not is_standard(T):
        raise ValueError("descent decomposition needs a standard tableau")
    pos = _entry_positions(T)
    n = len(pos)
    sizes: list[int] = []
    current = 0
    for v in range(1, n + 1):
        if current and northeast(pos[v - 1], pos[v]):
            current += 1
        else:
            if current:
                sizes.append(current)
            current = 1
    if current:
        sizes.append(current)
    return sizes


def des_syt(T: Tableau) -> Composition:
    """Descent composition of a standard tableau."""
    return tuple(standard_horizontal_bands(T))


def step_syt(T: Tableau) -> int:
    return len(standard_horizontal_bands(T))


def is_reverse_yamanouchi(word) -> bool:
    """True if every suffix of the word has weakly decreasing letter counts."""
    word = tuple(word)
    top = max(word, default=0)
    counts = [0] * (top + 2)
    for x in reversed(word):
        counts[x] += 1
        if counts[x] > counts[x - 1] and x > 1:
            return False
    return True


def ssyt_of_shape(lam: Partition, max_entry: int):
    """Yield all semistandard tableaux of shape ``lam`` with entries <= max_entry."""
    lam = tuple(lam)
    if not lam:
        yield EMPTY
        return
    if len(lam) > max_entry:
        return
    rows: list[list[int]] = []

    def fill_row(r: int):
        if r == len(lam):
            yield tuple(tuple(row) for row in rows)
            return
        row: list[int] = []

        def fill_cell(c: int):
            if c == lam[r]:
                rows.append(row)
                yield from fill_row(r + 1)
                rows.pop()
                return
            lo = row[c - 1] if c > 0 else 1
            if r > 0 and c < len(rows[r - 1]):
                lo = max(lo, rows[r - 1][c] + 1)
            for x in range(lo, max_entry + 1):
                row.append(x)
                yield from fill_cell(c + 1)
                row.pop()

        yield from fill_cell(0)

    yield from fill_row(0)


def enumerate_syt(lam: Partition):
    """Yield all standard tableaux of shape ``lam``."""
    n = sum(lam)
    for T in _syt_rec(tuple(lam), n):
        yield T


def _syt_rec(lam: Partition, n: int):
    if n == 0:
        yield EMPTY
        return
    for i in range(len(lam)):
        if lam[i] > part(lam, i + 1):
            smaller = tuple(p for p in lam[:i] + (lam[i] - 1,) + lam[i + 1 :] if p)
            for T in _syt_rec(smaller, n - 1):
                rows = list(T) + [()] * (i + 1 - len(T))
                rows[i] = rows[i] + (n,)
                yield tuple(rows)


SkewRows = tuple[tuple[int | None, ...], ...]


def lr_tableaux(lam: Partition, mu: Partition, nu: Partition):
    """Yield the Littlewood-Richardson fillings of ``nu/lam`` with weight ``mu``.

    Each filling is returned as full-width rows with ``None`` in the inner
    cells; the row word must be reverse Yamanouchi.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(nu) != sum(lam) + sum(mu) or not contains(lam, nu) or not contains(mu, nu):
        return
    nrows = len(nu)
    grid: list[list[int | None]] = [
        [None] * part(lam, r) + [0] * (nu[r] - part(lam, r)) for r in range(nrows)
    ]
    counts = [0] * (len(mu) + 1)
    remaining = list(mu)

    # cells in suffix-reading order: top to bottom, right to left within rows
    cells = [
        (r, c) for r in range(nrows) for c in range(nu[r] - 1, part(lam, r) - 1, -1)
    ]

    def rec(idx: int):
        if idx == len(cells):
            if all(x == 0 for x in remaining):
                yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[idx]
        hi = len(mu)
        if c + 1 < nu[r]:
            hi = min(hi, grid[r][c + 1])
        for v in range(1, hi + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            if r > 0 and c < nu[r - 1]:
                above = grid[r - 1][c]
                if above is not None and above >= v:
                    continue
            grid[r][c] = v
            counts[v] += 1
            remaining[v - 1] -= 1
            yield from rec(idx + 1)
            grid[r][c] = 0
            counts[v] -= 1
            remaining[v - 1] += 1

    yield from rec(0)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient: the number of LR fillings of ``nu/lam``."""
    return sum(1 for _ in lr_tableaux(lam, mu, nu))


def skew_to_dict(inner: Partition, rows: SkewRows) -> dict:
    """Wire form of a skew filling: inner shape plus rows with nulls inside."""
    return {"inner": list(inner), "rows": [list(row) for row in rows]}
