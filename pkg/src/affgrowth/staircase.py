"""Affine growth diagrams on one period of the n-wide staircase.

Line L (1..n) has vertices 0..n; vertex k sits at horizontal position
L + k - 1, so the square of row L in column c has corners
NW = (L, c-L), NE = (L, c-L+1), SW = (L+1, c-L-1), SE = (L+1, c-L).
Lines repeat with period n, so line n+1 is line 1 again.

Vertex (L, k) carries the hive weight of the polygon edge from vertex L-1
to vertex L-1+k (mod n); that dictionary is what ties diagrams to n-hives.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvariantError, ValidationError
from .local_rules import affine_rule, affine_rule_reverse
from .weights import (
    DUAL,
    FUND,
    Minuscule,
    Partition,
    Weight,
    dual,
    is_dominant,
    minuscule_vector,
    partition,
    pieri_neighbors,
    split_parts,
    step_label,
    weight_str,
    zero,
)


@dataclass(frozen=True)
class DiagramType:
    labels: tuple[Minuscule, ...]
    m: int

    def __post_init__(self):
        if len(self.labels) < 2:
            raise ValidationError("a diagram type needs at least two labels")
        if self.m < 1:
            raise ValidationError("rank must be positive")
        for lab in self.labels:
            if lab.j > self.m:
                raise ValidationError(f"label {lab} does not fit in rank {self.m}")

    @property
    def n(self) -> int:
        return len(self.labels)

    def label(self, i: int) -> Minuscule:
        """Label of index i, read periodically (1-based)."""
        return self.labels[(i - 1) % self.n]

    def is_balanced(self) -> bool:
        return sum(lab.j * lab.sign for lab in self.labels) == 0

    def rotated(self, start: int) -> "DiagramType":
        return DiagramType(tuple(self.label(start + i) for i in range(self.n)), self.m)

    @classmethod
    def parse(cls, text: str, m: int) -> "DiagramType":
        return cls(tuple(Minuscule.parse(t) for t in text.split(",") if t.strip()), m)

    def __str__(self) -> str:
        return ",".join(map(str, self.labels))

    def to_json(self) -> dict:
        return {"labels": [lab.to_json() for lab in self.labels], "m": self.m}

    @classmethod
    def from_json(cls, obj) -> "DiagramType":
        try:
            if isinstance(obj, dict):
                labels = obj["labels"]
                m = int(obj["m"])
            else:
                raise TypeError("type must be an object with labels and m")
            return cls(tuple(Minuscule.from_json(x) for x in labels), m)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed diagram type: {exc}") from exc


def path_violations(path: Sequence[Sequence[int]], dtype: DiagramType) -> list[str]:
    out = []
    if len(path) != dtype.n + 1:
        return [f"path has {len(path)} weights, expected {dtype.n + 1}"]
    z = zero(dtype.m)
    if tuple(path[0]) != z or tuple(path[-1]) != z:
        out.append("path must start and end at the zero weight")
    for k, w in enumerate(path):
        if len(w) != dtype.m or not is_dominant(w):
            out.append(f"weight {k} = {tuple(w)} is not a dominant rank-{dtype.m} weight")
            return out
    for k in range(1, dtype.n + 1):
        if tuple(path[k]) not in pieri_neighbors(tuple(path[k - 1]), dtype.label(k)):
            out.append(f"step {k} from {tuple(path[k - 1])} to {tuple(path[k])} is not a {dtype.label(k)} step")
    return out


def enumerate_paths(dtype: DiagramType) -> list[tuple[Weight, ...]]:
    """Every minuscule path of the type, by depth-first search over Pieri neighbours."""
    n, m = dtype.n, dtype.m
    if not dtype.is_balanced():
        return []
    # remaining capacity to go down (dual steps) / up (fundamental steps) after step k
    down_left = [0] * (n + 1)
    up_left = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        lab = dtype.labels[k]
        down_left[k] = down_left[k + 1] + (lab.kind == DUAL)
        up_left[k] = up_left[k + 1] + (lab.kind == FUND)
    out = []
    path = [zero(m)]

    def rec(k: int) -> None:
        if k == n:
            if path[-1] == zero(m):
                out.append(tuple(path))
            return
        for nu in sorted(pieri_neighbors(path[-1], dtype.labels[k]), reverse=True):
            if nu[0] > down_left[k + 1] or nu[-1] < -up_left[k + 1]:
                continue
            path.append(nu)
            rec(k + 1)
            path.pop()

    rec(0)
    return out


@dataclass(frozen=True)
class AffineGrowthDiagram:
    dtype: DiagramType
    lines: tuple[tuple[Weight, ...], ...]

    @property
    def n(self) -> int:
        return self.dtype.n

    @property
    def m(self) -> int:
        return self.dtype.m

    def vertex(self, line: int, k: int) -> Weight:
        """Weight at (line, k) for any integer line, using periodicity."""
        return self.lines[(line - 1) % self.n][k]

    def square(self, row: int, col: int) -> tuple[Weight, Weight, Weight, Weight]:
        k = col - row
        if not 1 <= k <= self.n - 1:
            raise ValidationError(f"row {row} has no square in column {col}")
        return (
            self.vertex(row, k),
            self.vertex(row, k + 1),
            self.vertex(row + 1, k - 1),
            self.vertex(row + 1, k),
        )

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "type": self.dtype.to_json(),
            "lines": [[list(w) for w in line] for line in self.lines],
            "marks": [list(x) for x in mark_squares(self)] if marks_defined(self.dtype) else None,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "AffineGrowthDiagram":
        try:
            dtype = DiagramType.from_json(obj["type"])
            lines = tuple(tuple(tuple(int(x) for x in w) for w in line) for line in obj["lines"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed diagram JSON: {exc}") from exc
        return cls(dtype, lines)


def next_line(line: Sequence[Weight], m: int) -> tuple[Weight, ...]:
    """Line L+1 from line L, one square at a time, west to east."""
    n = len(line) - 1
    out = [zero(m)]
    for k in range(1, n):
        out.append(affine_rule(out[k - 1], line[k + 1], line[k]))
    out.append(zero(m))
    return tuple(out)


def previous_line(line: Sequence[Weight], m: int) -> tuple[Weight, ...]:
    """Line L-1 from line L, one square at a time, east to west."""
    n = len(line) - 1
    out: list[Weight] = [zero(m)] * (n + 1)
    for k in range(n - 1, 0, -1):
        # square with NW=(L-1,k), NE=(L-1,k+1), SW=(L,k-1), SE=(L,k)
        out[k] = affine_rule_reverse(line[k - 1], out[k + 1], line[k])
    return tuple(out)


def fill_from_path(path: Sequence[Sequence[int]], dtype: DiagramType) -> AffineGrowthDiagram:
    """Diagram whose first line is the path; later lines follow the local rule."""
    problems = path_violations(path, dtype)
    if problems:
        raise ValidationError("; ".join(problems))
    lines = [tuple(tuple(w) for w in path)]
    for L in range(1, dtype.n + 1):
        nxt = next_line(lines[-1], dtype.m)
        if nxt[1] != minuscule_vector(dtype.label(L + 1), dtype.m):
            raise InvariantError(f"line {L + 1} does not start with its label")
        lines.append(nxt)
    if lines[-1] != lines[0]:
        raise InvariantError("the diagram is not periodic: line n+1 differs from line 1")
    return AffineGrowthDiagram(dtype, tuple(lines[:-1]))


def fill_backward(path: Sequence[Sequence[int]], dtype: DiagramType) -> AffineGrowthDiagram:
    """Same diagram, built upward from the path placed on line n+1."""
    problems = path_violations(path, dtype)
    if problems:
        raise ValidationError("; ".join(problems))
    lines = [tuple(tuple(w) for w in path)]
    for _ in range(dtype.n):
        lines.append(previous_line(lines[-1], dtype.m))
    if lines[-1] != lines[0]:
        raise InvariantError("backward fill is not periodic")
    # lines[i] is line 1 - i (mod n)
    ordered = [lines[(dtype.n - L) % dtype.n] for L in range(dtype.n)]
    return AffineGrowthDiagram(dtype, tuple(ordered))


def enumerate_diagrams(dtype: DiagramType) -> list[AffineGrowthDiagram]:
    return [fill_from_path(p, dtype) for p in enumerate_paths(dtype)]


# ------------------------------------------------------------------ marks


def _sizes(w: Weight) -> tuple[int, int]:
    pos, neg = split_parts(w)
    return sum(pos), sum(neg)


def _own_size(w: Weight, label: Minuscule) -> int:
    """Size of the partition a label edits first: alpha for fundamental, beta for dual."""
    return _sizes(w)[0 if label.kind == FUND else 1]


def marks_defined(dtype: DiagramType) -> bool:
    """Marks need room to keep alpha and beta apart: m at least the total fundamental size."""
    return dtype.m >= sum(lab.j for lab in dtype.labels if lab.kind == FUND)


def mark_squares(d: AffineGrowthDiagram) -> list[tuple[int, int, int]]:
    """Marked squares (row, column, multiplicity) of the period window.

    Along row L every vertical edge subtracts a Weyl translate of the row
    label; the mark multiplicity of a square is how many positions switch
    from editing the label's own partition (positive part for a fundamental
    label, negative part for a dual one) on its W edge to the other partition
    on its E edge. The same count computed from the horizontal edges of each
    column must agree.
    """
    if not marks_defined(d.dtype):
        raise ValidationError(
            f"marks need m >= {sum(lab.j for lab in d.dtype.labels if lab.kind == FUND)}, got m={d.m}"
        )
    n = d.n
    marks: dict[tuple[int, int], int] = {}
    for L in range(1, n + 1):
        lab = d.dtype.label(L)
        # own-partition edits on the vertical edge from (L, k) down to (L+1, k-1)
        counts = [
            _own_size(d.vertex(L, k), lab) - _own_size(d.vertex(L + 1, k - 1), lab)
            for k in range(1, n + 1)
        ]
        for k in range(1, n):
            mult = counts[k - 1] - counts[k]
            if mult < 0:
                raise InvariantError(f"negative mark in row {L}, column {L + k}")
            if mult:
                marks[(L, L + k)] = mult
    # columns: square (L, c) has N edge (L, k)->(L, k+1) and S edge (L+1, k-1)->(L+1, k)
    col_marks: dict[tuple[int, int], int] = {}
    for c in range(2, 2 * n):
        lab = d.dtype.label(c)
        for L in range(c - n + 1, c):
            if not 1 <= L <= n:
                continue
            k = c - L
            # own-partition growth on the N and S edges of the square
            north = _own_size(d.vertex(L, k + 1), lab) - _own_size(d.vertex(L, k), lab)
            south = _own_size(d.vertex(L + 1, k), lab) - _own_size(d.vertex(L + 1, k - 1), lab)
            if south - north:
                col_marks[(L, c)] = south - north
    if col_marks != marks:
        raise InvariantError("row and column mark counts disagree")
    return sorted((r, c, v) for (r, c), v in marks.items())


@dataclass(frozen=True)
class AffinePermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        n = len(self.window)
        if sorted(x % n for x in self.window) != list(range(n)):
            raise ValidationError(f"{self.window} is not a window of an affine permutation")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, x: int) -> int:
        q, r = divmod(x - 1, self.n)
        return self.window[r] + q * self.n

    def compose(self, other: "AffinePermutation") -> "AffinePermutation":
        return AffinePermutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def squares_to_shift(self) -> bool:
        sq = self.compose(self)
        return all(sq(i) == i + self.n for i in range(1, self.n + 1))

    def reduced(self) -> tuple[int, ...]:
        """Classical permutation: window entries mod n, in 1..n."""
        return tuple((x - 1) % self.n + 1 for x in self.window)


def marks(d: AffineGrowthDiagram) -> AffinePermutation:
    """Window of the mark permutation for box / dual-box types."""
    if any(lab.j != 1 for lab in d.dtype.labels):
        raise ValidationError("mark windows need every label to be f1 or d1")
    if 2 * d.m < d.n:
        raise ValidationError(f"mark windows need m >= n/2, got m={d.m}, n={d.n}")
    ms = mark_squares(d)
    rows = {}
    for r, c, mult in ms:
        if mult != 1 or r in rows:
            raise InvariantError(f"row {r} does not carry exactly one simple mark")
        rows[r] = c
    if sorted(rows) != list(range(1, d.n + 1)):
        raise InvariantError("some row carries no mark")
    f = AffinePermutation(tuple(rows[r] for r in range(1, d.n + 1)))
    if not f.squares_to_shift():
        raise InvariantError(f"mark window {f.window} does not square to the shift")
    return f


# --------------------------------------------------------- verification


def violations(d: AffineGrowthDiagram) -> list[str]:
    out: list[str] = []
    n, m = d.n, d.m
    if len(d.lines) != n:
        return [f"expected {n} lines, found {len(d.lines)}"]
    for L, line in enumerate(d.lines, start=1):
        if len(line) != n + 1:
            return [f"line {L} has {len(line)} vertices, expected {n + 1}"]
        for k, w in enumerate(line):
            if len(w) != m or not is_dominant(w):
                out.append(f"vertex ({L},{k}) = {w} is not a dominant rank-{m} weight")
    if out:
        return out
    z = zero(m)
    for L in range(1, n + 1):
        line = d.lines[L - 1]
        if line[0] != z or line[n] != z:
            out.append(f"line {L} does not start and end at the zero weight")
        if line[1] != minuscule_vector(d.dtype.label(L), m):
            out.append(f"vertex 1 of line {L} is not the label {d.dtype.label(L)}")
        for k in range(1, n + 1):
            if step_label(line[k - 1], line[k]) != d.dtype.label(L + k - 1):
                out.append(f"line {L} step {k} is not a {d.dtype.label(L + k - 1)} step")
        for k in range(1, n):
            nw, ne, sw, se = d.vertex(L, k), d.vertex(L, k + 1), d.vertex(L + 1, k - 1), d.vertex(L + 1, k)
            try:
                rho = affine_rule(sw, ne, nw)
            except ValidationError as exc:
                out.append(f"square ({L},{L + k}): {exc}")
                continue
            if rho != se:
                out.append(f"square ({L},{L + k}): SE is {se}, local rule gives {rho}")
    if not out and marks_defined(d.dtype):
        try:
            mark_squares(d)
        except InvariantError as exc:
            out.append(str(exc))
    return out


def verify(d: AffineGrowthDiagram) -> bool:
    return not violations(d)


# ------------------------------------------------------------- symmetries


def dual_transpose(d: AffineGrowthDiagram) -> AffineGrowthDiagram:
    """Transpose, shift back into standard position and dualize every weight.

    Vertex (L, k) of the result reads the dual of vertex (L+k, n-k) of d,
    which is the vertical line through that point read from the top.
    """
    n = d.n
    lines = tuple(
        tuple(dual(d.vertex(L + k, n - k)) for k in range(n + 1)) for L in range(1, n + 1)
    )
    return AffineGrowthDiagram(d.dtype, lines)


@dataclass(frozen=True)
class SLDiagram:
    """Lines of partitions after trading subtracting steps for adding ones."""

    dtype: DiagramType
    lines: tuple[tuple[Partition, ...], ...]

    def vertical_line(self, x: int) -> tuple[Partition, ...]:
        """Chain up the vertical line at horizontal position x, bottom first."""
        n = self.dtype.n
        out = []
        for k in range(n + 1):
            L = x + 1 - k
            out.append(self.lines[(L - 1) % n][k])
        return tuple(out)


def to_sl(d: AffineGrowthDiagram) -> SLDiagram:
    """Replace each subtracting step in rows S by an adding step in the complement of S."""
    n = d.n
    lines = []
    for L in range(1, n + 1):
        row = []
        shift = 0
        for k in range(n + 1):
            if k > 0 and d.dtype.label(L + k - 1).kind == DUAL:
                shift += 1
            w = d.vertex(L, k)
            row.append(partition(x + shift for x in w))
        lines.append(tuple(row))
    return SLDiagram(d.dtype, tuple(lines))


# -------------------------------------------------------------- rendering


def render_ascii(d: AffineGrowthDiagram, mark_list=None) -> str:
    """Staircase layout: weights as (alpha|beta), marks as X or their multiplicity."""
    n = d.n
    if mark_list is None:
        mark_list = mark_squares(d) if marks_defined(d.dtype) else []
    ms = {(r, c): v for r, c, v in mark_list}
    cells = [[weight_str(w) for w in line] for line in d.lines]
    width = max(len(s) for row in cells for s in row) + 2
    out = []
    for L in range(1, n + 1):
        indent = " " * (width * (L - 1))
        out.append(indent + "".join(s.center(width) for s in cells[L - 1]))
        marks_row = []
        for k in range(1, n):
            v = ms.get((L, L + k))
            marks_row.append("" if v is None else ("X" if v == 1 else str(v)))
        out.append(indent + " " * (width // 2) + "".join(s.center(width) for s in marks_row))
    first = cells[0]
    out.append(" " * (width * n) + "".join(s.center(width) for s in first))
    return "\n".join(out)


def render_svg(d: AffineGrowthDiagram, unit: int = 60) -> str:
    n = d.n
    ms = {(r, c): v for r, c, v in (mark_squares(d) if marks_defined(d.dtype) else [])}
    w_px = unit * (2 * n + 1)
    h_px = unit * (n + 2)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w_px}" height="{h_px}" '
        f'font-family="monospace" font-size="{unit // 5}">'
    ]
    for L in range(1, n + 1):
        for k in range(1, n):
            x, y = unit * (L + k - 1) + unit // 2, unit * L
            parts.append(f'<rect x="{x}" y="{y}" width="{unit}" height="{unit}" fill="none" stroke="black"/>')
            v = ms.get((L, L + k))
            if v:
                label = "X" if v == 1 else str(v)
                parts.append(
                    f'<text x="{x + unit // 2}" y="{y + unit // 2}" text-anchor="middle" '
                    f'fill="red">{label}</text>'
                )
    for L in range(1, n + 2):
        for k in range(n + 1):
            x, y = unit * (L + k - 1) + unit // 2, unit * L
            text = weight_str(d.vertex(L, k)).replace("&", "&amp;").replace("<", "&lt;")
            parts.append(f'<text x="{x}" y="{y - 4}" text-anchor="middle">{text}</text>')
    parts.append("</svg>")
    return "\n".join(parts)
