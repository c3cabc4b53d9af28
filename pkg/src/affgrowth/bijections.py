"""Growth-diagram bijections: Greene shapes, involutions, oscillating tableaux, RS and RSK.

Marks are cells (row, column) in matrix orientation: rows grow downward,
columns to the right. A chain runs south-east (both coordinates increase),
an antichain north-east.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvariantError, ValidationError
from .local_rules import fomin_forward, fomin_transpose, is_vertical_strip
from .staircase import (
    AffineGrowthDiagram,
    DiagramType,
    fill_from_path,
    mark_squares,
    marks,
)
from .tableaux import Tableau, from_chain
from .weights import DUAL, FUND, Minuscule, Partition, dual, join_parts, partition, split_parts

CHAINS = "chains-first"
ANTICHAINS = "antichains-first"

Cell = tuple[int, int]


# ------------------------------------------------------------------ Greene


def _longest(points: Sequence[Cell], increasing: bool) -> int:
    """Longest chain (increasing) or antichain (not increasing) among the points."""
    pts = sorted(points)
    best = [0] * len(pts)
    for i, (r, c) in enumerate(pts):
        best[i] = 1
        for j in range(i):
            r2, c2 = pts[j]
            if r2 < r and ((c2 < c) if increasing else (c2 > c)):
                best[i] = max(best[i], best[j] + 1)
    return max(best, default=0)


def _check_partial_permutation(points: Iterable[Cell]) -> list[Cell]:
    pts = sorted(set(points))
    if len({r for r, _ in pts}) != len(pts) or len({c for _, c in pts}) != len(pts):
        raise ValidationError("marks must use distinct rows and distinct columns")
    return pts


def greene_oracle(points: Iterable[Cell], mode: str = CHAINS) -> Partition:
    """Greene shape by brute force over subsets.

    A subset is a union of k chains exactly when its longest antichain has
    at most k elements (Dilworth), and dually for antichains (Mirsky).
    """
    pts = _check_partial_permutation(points)
    if mode not in (CHAINS, ANTICHAINS):
        raise ValidationError(f"unknown Greene mode {mode!r}")
    n = len(pts)
    best = [0] * (n + 1)
    # the blocker of a union of k chains is an antichain, and vice versa
    blocker_increasing = mode == ANTICHAINS
    for size in range(n + 1):
        for sub in combinations(pts, size):
            width = _longest(sub, blocker_increasing)
            for k in range(width, n + 1):
                if size > best[k]:
                    best[k] = size
    parts = [best[k] - best[k - 1] for k in range(1, n + 1)]
    return partition(parts)


def greene_growth(points: Iterable[Cell], mode: str = CHAINS) -> Partition:
    """Greene shape as the last corner of a Fomin growth over the compressed grid."""
    pts = _check_partial_permutation(points)
    rule = {CHAINS: fomin_forward, ANTICHAINS: fomin_transpose}.get(mode)
    if rule is None:
        raise ValidationError(f"unknown Greene mode {mode!r}")
    rows = sorted({r for r, _ in pts})
    cols = sorted({c for _, c in pts})
    marked = {(rows.index(r), cols.index(c)) for r, c in pts}
    return _grow(len(rows), len(cols), marked, rule)[-1][-1]


def _grow(nrows: int, ncols: int, marked: set[Cell], rule) -> list[list[Partition]]:
    """Corner shapes of a growth diagram; cell (i, j) sits between corners i, i+1 and j, j+1."""
    g = [[() for _ in range(ncols + 1)] for _ in range(nrows + 1)]
    for i in range(nrows):
        for j in range(ncols):
            g[i + 1][j + 1] = rule(g[i][j], g[i][j + 1], g[i + 1][j], (i, j) in marked)
    return g


greene_partition = greene_growth


# --------------------------------------------------------------- involutions


def is_fpf(pi: Sequence[int]) -> bool:
    n = len(pi)
    return sorted(pi) == list(range(1, n + 1)) and all(pi[pi[i] - 1] == i + 1 and pi[i] != i + 1 for i in range(n))


def all_fpf(n: int) -> list[tuple[int, ...]]:
    """Every fixed-point-free involution of 1..n, in lexicographic order of windows."""
    if n % 2:
        return []
    out = []

    def rec(pi: list[int]) -> None:
        try:
            i = pi.index(0)
        except ValueError:
            out.append(tuple(pi))
            return
        for j in range(i + 1, n):
            if pi[j] == 0:
                pi[i], pi[j] = j + 1, i + 1
                rec(pi)
                pi[i] = pi[j] = 0

    rec([0] * n)
    return sorted(out)


def phi(d: AffineGrowthDiagram) -> tuple[int, ...]:
    pi = marks(d).reduced()
    if not is_fpf(pi):
        raise InvariantError(f"marks reduce to {pi}, which is not a fixed-point-free involution")
    return pi


def fpf_window(pi: Sequence[int]) -> tuple[int, ...]:
    n = len(pi)
    return tuple(p if p > i else p + n for i, p in enumerate(pi, start=1))


def fpf_type(pi: Sequence[int], m: int) -> DiagramType:
    labels = tuple(Minuscule(FUND if p > i else DUAL, 1) for i, p in enumerate(pi, start=1))
    return DiagramType(labels, m)


def psi(pi: Sequence[int], m: int | None = None) -> AffineGrowthDiagram:
    """Diagram with the marks of pi, weights read off by transpose Greene on rectangles.

    Vertex (L, k) sits at horizontal position x = L+k-1. For x <= n its
    rectangle spans rows L..x and columns x+1..L+n-1; the marks there with
    column <= n give the positive part, the rest the negative part. Vertices
    with x > n are filled from the dual symmetry of the period.
    """
    pi = tuple(pi)
    if not is_fpf(pi):
        raise ValidationError(f"{pi} is not a fixed-point-free involution")
    n = len(pi)
    m = n // 2 if m is None else m
    if 2 * m < n:
        raise ValidationError(f"rank {m} is too small for {n} marks")
    f = fpf_window(pi)
    w: dict[tuple[int, int], tuple[int, ...]] = {}
    for L in range(1, n + 1):
        for k in range(n + 1):
            x = L + k - 1
            if x > n:
                continue
            box = [(r, f[r - 1]) for r in range(L, x + 1) if x + 1 <= f[r - 1] <= L + n - 1]
            alpha = greene_growth([p for p in box if p[1] <= n], ANTICHAINS)
            beta = greene_growth([p for p in box if p[1] > n], ANTICHAINS)
            w[(L, k)] = join_parts(alpha, beta, m)
    for L in range(1, n + 1):
        for k in range(n + 1):
            if L + k - 1 > n:
                w[(L, k)] = dual(w[(L + k - n, n - k)])
    lines = tuple(tuple(w[(L, k)] for k in range(n + 1)) for L in range(1, n + 1))
    return AffineGrowthDiagram(fpf_type(pi, m), lines)


# ----------------------------------------------------- oscillating tableaux


def _osc_check(seq: Sequence[Sequence[int]], strips: bool) -> list[Partition]:
    shapes = [partition(p) for p in seq]
    if not shapes or shapes[0] or shapes[-1]:
        raise ValidationError("an oscillating tableau starts and ends at the empty partition")
    for k in range(1, len(shapes)):
        a, b = shapes[k - 1], shapes[k]
        small, big = (a, b) if sum(b) >= sum(a) else (b, a)
        if not is_vertical_strip(small, big):
            raise ValidationError(f"step {k} is not a vertical strip")
        if not strips and sum(big) - sum(small) != 1:
            raise ValidationError(f"step {k} does not change exactly one box")
    return shapes


def all_osc(n: int) -> list[tuple[Partition, ...]]:
    """Every single-box oscillating tableau of length n."""
    out = []
    seq: list[Partition] = [()]

    def rec() -> None:
        k = len(seq) - 1
        cur = seq[-1]
        if k == n:
            if not cur:
                out.append(tuple(seq))
            return
        if sum(cur) > n - k:
            return
        for r in range(len(cur) + 1):
            row = cur[r] if r < len(cur) else 0
            if r == 0 or cur[r - 1] > row:
                seq.append(_bump(cur, r, 1))
                rec()
                seq.pop()
        for r in range(len(cur)):
            if r == len(cur) - 1 or cur[r + 1] < cur[r]:
                seq.append(_bump(cur, r, -1))
                rec()
                seq.pop()

    rec()
    return out


def _bump(p: Partition, row: int, delta: int) -> Partition:
    q = list(p) + [0]
    q[row] += delta
    return partition(q)


def osc_to_fpf(seq: Sequence[Sequence[int]]) -> tuple[int, ...]:
    shapes = _osc_check(seq, strips=False)
    n = len(shapes) - 1
    m = max(1, n // 2)
    labels = tuple(
        Minuscule(FUND if sum(shapes[k]) > sum(shapes[k - 1]) else DUAL, 1) for k in range(1, n + 1)
    )
    d = fill_from_path([join_parts(p, (), m) for p in shapes], DiagramType(labels, m))
    return phi(d)


def fpf_to_osc(pi: Sequence[int]) -> tuple[Partition, ...]:
    d = psi(pi)
    out = []
    for w in d.lines[0]:
        pos, neg = split_parts(w)
        if neg:
            raise InvariantError(f"line 1 of the diagram of {tuple(pi)} has a negative part")
        out.append(pos)
    return tuple(out)


# ------------------------------------------------------------------ Schensted


def _check_perm(sigma: Sequence[int]) -> tuple[int, ...]:
    s = tuple(int(x) for x in sigma)
    if sorted(s) != list(range(1, len(s) + 1)):
        raise ValidationError(f"{s} is not a permutation of 1..{len(s)}")
    return s


def schensted(sigma: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row insertion: (insertion tableau P, recording tableau Q)."""
    s = _check_perm(sigma)
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(s, start=1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            pos = next((i for i, y in enumerate(row) if y > x), None)
            if pos is None:
                row.append(x)
                Q[r].append(step)
                break
            row[pos], x = x, row[pos]
            r += 1
    return tuple(map(tuple, P)), tuple(map(tuple, Q))


def schensted_growth(sigma: Sequence[int], transpose: bool = False) -> tuple[Tableau, Tableau]:
    """Growth-diagram RS: marks at (i, sigma_i); P along the last row, Q along the last column."""
    s = _check_perm(sigma)
    k = len(s)
    rule = fomin_transpose if transpose else fomin_forward
    g = _grow(k, k, {(i, s[i] - 1) for i in range(k)}, rule)
    p_chain = [g[k][j] for j in range(k + 1)]
    q_chain = [g[i][k] for i in range(k + 1)]
    return from_chain(p_chain), from_chain(q_chain)


def embed_rs(sigma: Sequence[int]) -> tuple[int, ...]:
    """Fixed-point-free involution of 1..2k carrying a permutation of 1..k."""
    s = _check_perm(sigma)
    k = len(s)
    pi = [0] * (2 * k)
    for i in range(1, k + 1):
        pi[s[i - 1] - 1] = 2 * k + 1 - i
        pi[k + i - 1] = s[k - i]
    return tuple(pi)


def unembed_rs(pi: Sequence[int]) -> tuple[int, ...]:
    """Inverse of embed_rs; errors if pi is not in its image."""
    pi = tuple(pi)
    n = len(pi)
    if n % 2 or not is_fpf(pi):
        raise ValidationError(f"{pi} is not a fixed-point-free involution of even length")
    k = n // 2
    sigma = tuple(pi[k + k - i] for i in range(1, k + 1))
    if sorted(sigma) != list(range(1, k + 1)) or embed_rs(sigma) != pi:
        raise ValidationError(f"{pi} does not come from a permutation of 1..{k}")
    return sigma


# ---------------------------------------------------------------- Knuth / RSK


def _hooks(M: Sequence[Sequence[int]]) -> tuple[list[int], list[int]]:
    """Row sums right of the diagonal and column sums above it."""
    k = len(M)
    r = [sum(M[i][j] for j in range(i + 1, k)) for i in range(k)]
    c = [sum(M[j][i] for j in range(i)) for i in range(k)]
    return r, c


def check_nat_fpf(M: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    k = len(M)
    A = tuple(tuple(int(x) for x in row) for row in M)
    if any(len(row) != k for row in A):
        raise ValidationError("matrix must be square")
    if any(x < 0 for row in A for x in row):
        raise ValidationError("matrix entries must be natural numbers")
    if any(A[i][j] != A[j][i] for i in range(k) for j in range(k)):
        raise ValidationError("matrix must be symmetric")
    if any(A[i][i] for i in range(k)):
        raise ValidationError("diagonal entries must vanish")
    r, c = _hooks(A)
    bad = [i + 1 for i in range(k) if r[i] and c[i]]
    if bad:
        raise ValidationError(f"rows {bad} have both a horizontal and a vertical hook part")
    return A


def all_nat_fpf(k: int, top: int) -> list[tuple[tuple[int, ...], ...]]:
    cells = [(i, j) for i in range(k) for j in range(i + 1, k)]
    out = []

    def rec(idx: int, A: list[list[int]]) -> None:
        if idx == len(cells):
            r, c = _hooks(A)
            if all(not (r[i] and c[i]) for i in range(k)):
                out.append(tuple(tuple(row) for row in A))
            return
        i, j = cells[idx]
        for v in range(top + 1):
            A[i][j] = A[j][i] = v
            rec(idx + 1, A)
        A[i][j] = A[j][i] = 0

    rec(0, [[0] * k for _ in range(k)])
    return out


def knuth_expand(M: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Refine a natural-number involution matrix into a 0/1 one.

    Line i becomes r_i or c_i lines. Entries are visited north-west first and
    each becomes a diagonal run of marks in the northmost free rows and
    westmost free columns of its block. Returns the involution and the block
    sizes.
    """
    A = check_nat_fpf(M)
    k = len(A)
    r, c = _hooks(A)
    sizes = tuple(r[i] or c[i] for i in range(k))
    start = [sum(sizes[:i]) for i in range(k)]
    K = sum(sizes)
    next_row = [0] * k
    next_col = [0] * k
    pi = [0] * K
    for i in range(k):
        for j in range(i + 1, k):
            for _ in range(A[i][j]):
                R = start[i] + next_row[i]
                C = start[j] + next_col[j]
                next_row[i] += 1
                next_col[j] += 1
                pi[R], pi[C] = C + 1, R + 1
    if not is_fpf(pi):
        raise InvariantError("refined matrix is not a fixed-point-free involution")
    return tuple(pi), sizes


def knuth_compress(pi: Sequence[int], sizes: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Sum the marks of a refined involution block by block."""
    k = len(sizes)
    if sum(sizes) != len(pi):
        raise ValidationError("block sizes do not cover the involution")
    owner = [i for i in range(k) for _ in range(sizes[i])]
    A = [[0] * k for _ in range(k)]
    for R, C in enumerate(pi):
        A[owner[R]][owner[C - 1]] += 1
    return tuple(tuple(row) for row in A)


def split_strip_steps(seq: Sequence[Sequence[int]]) -> tuple[tuple[Partition, ...], tuple[int, ...]]:
    """Refine vertical-strip steps into single boxes: add top rows first, remove bottom rows first."""
    shapes = _osc_check(seq, strips=True)
    out = [()]
    sizes = []
    for k in range(1, len(shapes)):
        a, b = shapes[k - 1], shapes[k]
        n = max(len(a), len(b))
        pa, pb = list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b))
        rows = [i for i in range(n) if pa[i] != pb[i]]
        grow = sum(b) > sum(a)
        cur = pa[:]
        for i in (rows if grow else reversed(rows)):
            cur[i] += 1 if grow else -1
            out.append(partition(cur))
        sizes.append(len(rows))
    return tuple(out), tuple(sizes)


def merge_strip_steps(seq: Sequence[Partition], sizes: Sequence[int]) -> tuple[Partition, ...]:
    cuts = [0]
    for s in sizes:
        cuts.append(cuts[-1] + s)
    return tuple(seq[i] for i in cuts)


def knuth_to_osc(M: Sequence[Sequence[int]]) -> tuple[Partition, ...]:
    """Semistandard oscillating tableau of a natural-number involution matrix."""
    pi, sizes = knuth_expand(M)
    if not pi:
        return ((),) * (len(sizes) + 1)
    return merge_strip_steps(fpf_to_osc(pi), sizes)


def osc_to_knuth(seq: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    standard, sizes = split_strip_steps(seq)
    if len(standard) == 1:
        return tuple(tuple(0 for _ in sizes) for _ in sizes)
    return knuth_compress(osc_to_fpf(standard), sizes)


def strip_diagram(seq: Sequence[Sequence[int]], m: int | None = None) -> AffineGrowthDiagram:
    """Diagram of a semistandard oscillating tableau with strip-sized labels; empty steps dropped."""
    shapes = _osc_check(seq, strips=True)
    kept = [shapes[0]]
    labels = []
    for k in range(1, len(shapes)):
        delta = sum(shapes[k]) - sum(shapes[k - 1])
        if delta:
            labels.append(Minuscule(FUND if delta > 0 else DUAL, abs(delta)))
            kept.append(shapes[k])
    total = sum(lab.j for lab in labels if lab.kind == FUND)
    m = max(total, 1) if m is None else m
    return fill_from_path([join_parts(p, (), m) for p in kept], DiagramType(tuple(labels), m))


def strip_marks_matrix(seq: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Mark multiplicities of the strip diagram folded into a symmetric matrix over all steps."""
    shapes = _osc_check(seq, strips=True)
    k = len(shapes) - 1
    live = [i for i in range(k) if sum(shapes[i + 1]) != sum(shapes[i])]
    A = [[0] * k for _ in range(k)]
    if not live:
        return tuple(tuple(row) for row in A)
    d = strip_diagram(shapes)
    n = d.n
    for r, c, v in mark_squares(d):
        i, j = live[r - 1], live[(c - 1) % n]
        if (c - 1) // n == 0:
            A[i][j] += v
            A[j][i] += v
    return tuple(tuple(row) for row in A)
