"""Young tableaux: jeu de taquin, promotion, evacuation and a Kostka counter.

A tableau is a tuple of rows (English notation, row 0 on top). Promotion
and evacuation act on semistandard tableaux with entries in 1..n; n is
passed explicitly because it need not be the largest entry present.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ValidationError
from .local_rules import is_vertical_strip
from .weights import Partition, partition, transpose

Tableau = tuple[tuple[int, ...], ...]


def shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t if row)


def entries(t: Tableau) -> list[int]:
    return [x for row in t for x in row]


def is_ssyt(t: Sequence[Sequence[int]]) -> bool:
    for r, row in enumerate(t):
        if r and len(row) > len(t[r - 1]):
            return False
        for c, x in enumerate(row):
            if c and row[c - 1] > x:
                return False
            if r and t[r - 1][c] >= x:
                return False
    return True


def is_standard(t: Sequence[Sequence[int]]) -> bool:
    return is_ssyt(t) and sorted(entries(t)) == list(range(1, len(entries(t)) + 1))


def tableau(rows: Iterable[Iterable[int]]) -> Tableau:
    t = tuple(tuple(int(x) for x in row) for row in rows if row)
    if not is_ssyt(t):
        raise ValidationError(f"not a semistandard tableau: {t}")
    return t


def transpose_tableau(t: Tableau) -> Tableau:
    sh = shape(t)
    return tuple(tuple(t[r][c] for r in range(len(sh)) if sh[r] > c) for c in range(sh[0] if sh else 0))


def from_chain(chain: Sequence[Sequence[int]]) -> Tableau:
    """Record the step index at which each box appears along an increasing chain."""
    shapes = [partition(p) for p in chain]
    if shapes and shapes[0]:
        raise ValidationError("a chain must start at the empty partition")
    rows: list[list[int]] = []
    for k in range(1, len(shapes)):
        prev, cur = shapes[k - 1], shapes[k]
        for r, length in enumerate(cur):
            before = prev[r] if r < len(prev) else 0
            if length < before:
                raise ValidationError(f"chain shrinks at step {k}")
            if r == len(rows):
                rows.append([])
            rows[r].extend([k] * (length - before))
    return tuple(tuple(row) for row in rows)


def to_chain(t: Tableau, n: int) -> tuple[Partition, ...]:
    return tuple(partition(sum(1 for x in row if x <= k) for row in t) for k in range(n + 1))


def chain_to_ssyt(chain: Sequence[Sequence[int]]) -> Tableau:
    """Chain of vertical strips (a row-strict tableau) read as an SSYT by transposing."""
    shapes = [partition(p) for p in chain]
    for k in range(1, len(shapes)):
        if not is_vertical_strip(shapes[k - 1], shapes[k]):
            raise ValidationError(f"step {k} of the chain is not a vertical strip")
    return transpose_tableau(from_chain(shapes))


def ssyt_to_chain(t: Tableau, n: int) -> tuple[Partition, ...]:
    return tuple(transpose(p) for p in to_chain(t, n))


# ------------------------------------------------------------ jeu de taquin


def _cells(t: Tableau) -> dict[tuple[int, int], int]:
    return {(r, c): x for r, row in enumerate(t) for c, x in enumerate(row)}


def _from_cells(cells: dict[tuple[int, int], int]) -> Tableau:
    rows: dict[int, dict[int, int]] = {}
    for (r, c), x in cells.items():
        rows.setdefault(r, {})[c] = x
    out = []
    for r in range(len(rows)):
        row = rows[r]
        out.append(tuple(row[c] for c in range(len(row))))
    return tuple(out)


def _slide_out(cells: dict, hole: tuple[int, int]) -> tuple[int, int]:
    """Forward slide: the hole swaps with the smaller of its right/below neighbours."""
    r, c = hole
    while True:
        right = cells.get((r, c + 1))
        below = cells.get((r + 1, c))
        if right is None and below is None:
            return (r, c)
        if below is not None and (right is None or below <= right):
            cells[(r, c)] = below
            del cells[(r + 1, c)]
            r += 1
        else:
            cells[(r, c)] = right
            del cells[(r, c + 1)]
            c += 1


def _slide_in(cells: dict, hole: tuple[int, int]) -> tuple[int, int]:
    """Reverse slide: the hole swaps with the larger of its left/above neighbours."""
    r, c = hole
    while True:
        left = cells.get((r, c - 1)) if c > 0 else None
        above = cells.get((r - 1, c)) if r > 0 else None
        if left is None and above is None:
            return (r, c)
        if above is not None and (left is None or above >= left):
            cells[(r, c)] = above
            del cells[(r - 1, c)]
            r -= 1
        else:
            cells[(r, c)] = left
            del cells[(r, c - 1)]
            c -= 1


def jdt_slide(rows: Sequence[Sequence[int | None]], hole: tuple[int, int]):
    """Slide the empty cell `hole` (marked None) outward through a straight-shape array.

    Other None cells stay put. Returns the new rows, with the vacated outer
    cell removed, and that cell.
    """
    cells = {(r, c): x for r, row in enumerate(rows) for c, x in enumerate(row)}
    if cells.get(hole, 0) is not None:
        raise ValidationError(f"cell {hole} is not empty")
    del cells[hole]
    others = {rc for rc, x in cells.items() if x is None}
    live = {rc: x for rc, x in cells.items() if x is not None}
    end = _slide_out(live, hole)
    live.pop(end, None)
    merged = {**live, **{rc: None for rc in others}}
    return _from_cells(merged), end


def _deflate(cells: dict, low: int) -> list[tuple[int, int]]:
    """Empty the cells holding `low` and slide them out, rightmost first."""
    holes = sorted((rc for rc, x in cells.items() if x == low), key=lambda rc: -rc[1])
    for h in holes:
        del cells[h]
    vacated = []
    for h in holes:
        end = _slide_out(cells, h)
        cells.pop(end, None)
        vacated.append(end)
    return vacated


def _inflate(cells: dict, high: int) -> list[tuple[int, int]]:
    """Empty the cells holding `high` and slide them in, leftmost first."""
    holes = sorted((rc for rc, x in cells.items() if x == high), key=lambda rc: rc[1])
    for h in holes:
        del cells[h]
    vacated = []
    for h in holes:
        end = _slide_in(cells, h)
        cells.pop(end, None)
        vacated.append(end)
    return vacated


def _check_range(t: Tableau, n: int) -> None:
    if not is_ssyt(t):
        raise ValidationError(f"not a semistandard tableau: {t}")
    if any(not 1 <= x <= n for x in entries(t)):
        raise ValidationError(f"entries of {t} must lie in 1..{n}")


def promotion(t: Tableau, n: int) -> Tableau:
    _check_range(t, n)
    cells = _cells(t)
    vacated = _deflate(cells, 1)
    cells = {rc: x - 1 for rc, x in cells.items()}
    for rc in vacated:
        cells[rc] = n
    return _from_cells(cells)


def dual_promotion(t: Tableau, n: int) -> Tableau:
    _check_range(t, n)
    cells = _cells(t)
    vacated = _inflate(cells, n)
    cells = {rc: x + 1 for rc, x in cells.items()}
    for rc in vacated:
        cells[rc] = 1
    return _from_cells(cells)


def evacuation(t: Tableau, n: int) -> Tableau:
    """Deflate the smallest entry n times, labelling each vacated cell n+1-i at pass i."""
    _check_range(t, n)
    cells = _cells(t)
    out: dict[tuple[int, int], int] = {}
    for i in range(1, n + 1):
        for rc in _deflate(cells, i):
            out[rc] = n + 1 - i
    return _from_cells(out)


def dual_evacuation(t: Tableau, n: int) -> Tableau:
    _check_range(t, n)
    cells = _cells(t)
    out: dict[tuple[int, int], int] = {}
    for i in range(n, 0, -1):
        for rc in _inflate(cells, i):
            out[rc] = n + 1 - i
    return _from_cells(out)


# ------------------------------------------------------------------ Kostka


def kostka_count(sh: Sequence[int], content: Sequence[int]) -> int:
    """Number of SSYT of the given shape and content, by cell-by-cell backtracking."""
    sh = partition(sh)
    content = [int(x) for x in content]
    if any(x < 0 for x in content) or sum(sh) != sum(content):
        return 0
    cells = [(r, c) for r, length in enumerate(sh) for c in range(length)]
    grid: dict[tuple[int, int], int] = {}
    left = list(content)
    count = 0

    def rec(i: int) -> None:
        nonlocal count
        if i == len(cells):
            count += 1
            return
        r, c = cells[i]
        low = grid[(r, c - 1)] if c else 0
        if r:
            low = max(low, grid[(r - 1, c)] + 1)
        # a value below row r+1's possible minimum can never be placed: cell (r, c) needs >= r
        for v in range(max(low, r), len(content)):
            if left[v]:
                left[v] -= 1
                grid[(r, c)] = v
                rec(i + 1)
                left[v] += 1
        grid.pop((r, c), None)

    rec(0)
    return count


def lr_via_kostka(labels, m: int) -> int:
    """Invariant count for a sequence of minuscule labels as a rectangle Kostka number."""
    fund = [lab.j for lab in labels if lab.kind == "fund"]
    duals = [lab.j for lab in labels if lab.kind == "dual"]
    if sum(fund) != sum(duals):
        return 0
    content = [x for x in fund + [m - j for j in duals] if x]
    return kostka_count((m,) * len(duals), content)
