"""3-hives, n-hives and the octahedron recurrence.

An n-hive lives on the lattice points of the simplex with n corners and side
length m: n-tuples of nonnegative ints summing to m, coordinate v counting
steps toward polygon vertex v. Values are normalized to 0 at corner 0.

For a 3-hive the corners are called A, B, C. The weight read from A to B is
the list of successive differences along that side; the boundary is the
triple (A->B, B->C, C->A), which must sum to zero.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import InvariantError, ValidationError
from .weights import Minuscule, Weight, dominant_weights, dual, minuscule_vector, pieri_neighbors, step_label

Point = tuple[int, ...]


@lru_cache(maxsize=None)
def lattice(n: int, m: int) -> tuple[tuple[Point, ...], dict[Point, int]]:
    """Lattice points of the n-corner simplex of side m, and their indices."""
    pts: list[Point] = []

    def rec(prefix: list[int], left: int) -> None:
        if len(prefix) == n - 1:
            pts.append(tuple(prefix) + (left,))
            return
        for x in range(left, -1, -1):
            prefix.append(x)
            rec(prefix, left - x)
            prefix.pop()

    rec([], m)
    pts_t = tuple(pts)
    return pts_t, {p: i for i, p in enumerate(pts_t)}


def _prefix(w: Sequence[int]) -> list[int]:
    out = [0]
    for x in w:
        out.append(out[-1] + x)
    return out


# ---------------------------------------------------------------- 3-hives


@lru_cache(maxsize=None)
def _rhombi(m: int) -> np.ndarray:
    """Rows (a, b, c, d): a + b >= c + d, short diagonal a-b, long diagonal c-d."""
    _, idx = lattice(3, m)
    quads = []
    for (i, j, k) in idx:
        cands = [
            ((i, j, k), (i, j + 1, k - 1), (i + 1, j, k - 1), (i - 1, j + 1, k)),
            ((i, j, k), (i + 1, j - 1, k), (i + 1, j, k - 1), (i, j - 1, k + 1)),
            ((i, j, k), (i + 1, j, k - 1), (i, j + 1, k - 1), (i + 1, j - 1, k)),
        ]
        for quad in cands:
            if all(q in idx for q in quad):
                quads.append([idx[q] for q in quad])
    return np.array(quads, dtype=np.int32).reshape(-1, 4)


@dataclass(frozen=True)
class Hive3:
    """Values on the side-m triangle, in lattice(3, m) order."""

    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        pts, _ = lattice(3, self.m)
        if len(self.values) != len(pts):
            raise ValidationError(f"a side-{self.m} 3-hive has {len(pts)} values")

    def at(self, i: int, j: int, k: int) -> int:
        return self.values[lattice(3, self.m)[1][(i, j, k)]]

    def rows(self) -> list[list[int]]:
        """Row r holds the points (m-r-t, t, r), t = 0..m-r: A->B first, C last."""
        m = self.m
        return [[self.at(m - r - t, t, r) for t in range(m - r + 1)] for r in range(m + 1)]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Hive3":
        m = len(rows) - 1
        _, idx = lattice(3, m)
        vals = [0] * len(idx)
        for r, row in enumerate(rows):
            if len(row) != m - r + 1:
                raise ValidationError(f"row {r} of a side-{m} hive needs {m - r + 1} entries")
            for t, v in enumerate(row):
                vals[idx[(m - r - t, t, r)]] = int(v)
        base = vals[idx[(m, 0, 0)]]
        return cls(m, tuple(v - base for v in vals))

    def boundary(self) -> tuple[Weight, Weight, Weight]:
        m = self.m
        ab = tuple(self.at(m - t - 1, t + 1, 0) - self.at(m - t, t, 0) for t in range(m))
        bc = tuple(self.at(0, m - t - 1, t + 1) - self.at(0, m - t, t) for t in range(m))
        ca = tuple(self.at(t + 1, 0, m - t - 1) - self.at(t, 0, m - t) for t in range(m))
        return ab, bc, ca

    def rotate(self) -> "Hive3":
        """Relabel corners so that (B, C, A) become the new (A, B, C)."""
        m = self.m
        pts, _ = lattice(3, m)
        base = self.at(0, m, 0)
        return Hive3(m, tuple(self.at(k, i, j) - base for (i, j, k) in pts))


def rhombus_ok(h: Hive3) -> bool:
    return bool(_kernels.rhombi_ok(np.asarray(h.values, dtype=np.int64), _rhombi(h.m)))


def _boundary_values(ab: Sequence[int], bc: Sequence[int], ca: Sequence[int]) -> dict[Point, int]:
    m = len(ab)
    pa, pb, pc = _prefix(ab), _prefix(bc), _prefix(ca)
    out: dict[Point, int] = {}
    for t in range(m + 1):
        out[(m - t, t, 0)] = pa[t]
        out[(0, m - t, t)] = pa[m] + pb[t]
        out[(t, 0, m - t)] = pa[m] + pb[m] + pc[t]
    return out


@lru_cache(maxsize=None)
def _search_plan(m: int):
    """Free-point order and the bound rules the search kernel needs."""
    pts, idx = lattice(3, m)
    free = [idx[(m - r - t, t, r)] for r in range(1, m) for t in range(1, m - r)]
    pos = {p: q for q, p in enumerate(free)}
    lo: list[list[list[int]]] = [[] for _ in free]
    hi: list[list[list[int]]] = [[] for _ in free]
    boundary_quads = []
    for a, b, c, d in _rhombi(m).tolist():
        last = max((pos[x] for x in (a, b, c, d) if x in pos), default=-1)
        if last < 0:
            boundary_quads.append((a, b, c, d))
            continue
        p = free[last]
        if p == a:
            lo[last].append([c, d, b])
        elif p == b:
            lo[last].append([c, d, a])
        elif p == c:
            hi[last].append([a, b, d])
        else:
            hi[last].append([a, b, c])
    for q in range(len(free)):
        if not lo[q] or not hi[q]:
            raise InvariantError(f"free point {pts[free[q]]} has no two-sided bound")

    def csr(rules):
        ptr = np.zeros(len(rules) + 1, dtype=np.int32)
        flat = []
        for q, rs in enumerate(rules):
            ptr[q + 1] = ptr[q] + len(rs)
            flat.extend(rs)
        return ptr, np.array(flat, dtype=np.int32).reshape(-1, 3)

    lo_ptr, lo_rules = csr(lo)
    hi_ptr, hi_rules = csr(hi)
    bq = np.array(boundary_quads, dtype=np.int32).reshape(-1, 4)
    return np.array(free, dtype=np.int32), lo_ptr, lo_rules, hi_ptr, hi_rules, bq


def _search_hive3(ab, bc, ca, collect: bool, kernels=None):
    ab, bc, ca = tuple(ab), tuple(bc), tuple(ca)
    m = len(ab)
    if not (len(bc) == len(ca) == m) or m == 0:
        raise ValidationError("boundary weights must share a positive rank")
    if sum(ab) + sum(bc) + sum(ca) != 0:
        return 0, []
    k = kernels or _kernels
    pts, idx = lattice(3, m)
    vals = np.zeros(len(pts), dtype=np.int64)
    for p, v in _boundary_values(ab, bc, ca).items():
        vals[idx[p]] = v
    free, lo_ptr, lo_rules, hi_ptr, hi_rules, bq = _search_plan(m)
    if not k.rhombi_ok(vals, bq):
        return 0, []
    return k.search_fillings(vals, free, lo_ptr, lo_rules, hi_ptr, hi_rules, collect)


def enumerate_hive3(lam, mu, nu, kernels=None) -> list[Hive3]:
    """Every 3-hive with A->B = lam, B->C = mu, C->A = nu."""
    _, sols = _search_hive3(lam, mu, nu, True, kernels)
    m = len(tuple(lam))
    return [Hive3(m, tuple(int(x) for x in s)) for s in sols]


def count_hive3(lam, mu, nu, kernels=None) -> int:
    count, _ = _search_hive3(lam, mu, nu, False, kernels)
    return int(count)


def solve_hive3_minuscule(lam: Sequence[int], label: Minuscule, nu: Sequence[int]) -> Hive3 | None:
    """The 3-hive with A->B = lam, B->C = the minuscule weight, A->C = nu.

    Built one strip at a time: the strip of points at distance s from A runs
    from the lam side to the nu side and follows the minuscule pattern.
    Returns None when nu is not a Pieri neighbour of lam.
    """
    lam, nu = tuple(lam), tuple(nu)
    m = len(lam)
    if len(nu) != m or nu not in pieri_neighbors(lam, label):
        return None
    pl, pn = _prefix(lam), _prefix(nu)
    _, idx = lattice(3, m)
    vals = [0] * len(idx)
    for s in range(m + 1):
        length = m - s
        if label.sign > 0:
            js = pn[length] - pl[length]
            strip = [pl[length] + min(t, js) for t in range(length + 1)]
        else:
            js = pl[length] - pn[length]
            strip = [pl[length] - max(0, t - (length - js)) for t in range(length + 1)]
        if not 0 <= js <= length:
            raise InvariantError(f"strip {s} needs {js} steps in length {length}")
        for t, v in enumerate(strip):
            vals[idx[(s, length - t, t)]] = v
    h = Hive3(m, tuple(vals))
    if not rhombus_ok(h):
        raise InvariantError(f"strip construction for {lam}, {label}, {nu} broke a rhombus")
    return h


def _as_minuscule(w: Sequence[int]) -> Minuscule | None:
    lab = step_label((0,) * len(w), w)
    if lab is not None and tuple(w) == minuscule_vector(lab, len(w)):
        return lab
    return None


def solve_hive3_boundary(ab, bc, ca) -> Hive3 | None:
    """Unique 3-hive for a boundary with at least one minuscule side."""
    sides = [tuple(ab), tuple(bc), tuple(ca)]
    for shift in (0, 1, 2):
        # rotate the boundary so that the minuscule side sits at B->C
        s = sides[shift:] + sides[:shift]
        lab = _as_minuscule(s[1])
        if lab is None:
            continue
        h = solve_hive3_minuscule(s[0], lab, dual(s[2]))
        if h is None:
            return None
        for _ in range((3 - shift) % 3):
            h = h.rotate()
        return h
    raise ValidationError("no side of the boundary is a minuscule weight")


def octahedron_step(e: int, a: int, b: int, c: int, d: int) -> int:
    return max(a + c, b + d) - e


# ---------------------------------------------------------------- n-hives


@dataclass(frozen=True)
class HiveN:
    """Values in lattice(n, m) order; None marks a point not yet computed."""

    n: int
    m: int
    values: tuple[int | None, ...]

    def get(self, p: Point) -> int | None:
        return self.values[lattice(self.n, self.m)[1][tuple(p)]]

    def is_complete(self) -> bool:
        return all(v is not None for v in self.values)

    def corner(self, v: int, steps_to: int | None = None, t: int = 0) -> Point:
        p = [0] * self.n
        p[v] = self.m - t
        if steps_to is not None:
            p[steps_to] += t
        return tuple(p)

    def face(self, u: int, v: int, w: int) -> Hive3:
        """The 2-face with corners A=u, B=v, C=w as a 3-hive."""
        pts, _ = lattice(3, self.m)
        base = self.get(self.corner(u))
        out = []
        for (i, j, k) in pts:
            p = [0] * self.n
            p[u] += i
            p[v] += j
            p[w] += k
            val = self.get(tuple(p))
            if val is None or base is None:
                raise ValidationError(f"face ({u},{v},{w}) is not fully labelled")
            out.append(val - base)
        return Hive3(self.m, tuple(out))

    def to_json(self) -> dict:
        pts, _ = lattice(self.n, self.m)
        return {
            "schema": 1,
            "n": self.n,
            "m": self.m,
            "values": [[list(p), v] for p, v in zip(pts, self.values) if v is not None],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "HiveN":
        try:
            n, m = int(obj["n"]), int(obj["m"])
            pts, idx = lattice(n, m)
            vals: list[int | None] = [None] * len(pts)
            for p, v in obj["values"]:
                vals[idx[tuple(p)]] = int(v)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed hive JSON: {exc}") from exc
        return cls(n, m, tuple(vals))


def skeleton_weight(h: HiveN, i: int, j: int) -> Weight:
    """Successive differences along the lattice edge from corner i to corner j."""
    if i == j:
        return (0,) * h.m
    vals = [h.get(h.corner(i, j, t)) for t in range(h.m + 1)]
    if any(v is None for v in vals):
        raise ValidationError(f"edge {i}->{j} is not fully labelled")
    w = tuple(vals[t + 1] - vals[t] for t in range(h.m))
    if any(w[t] < w[t + 1] for t in range(h.m - 1)):
        raise ValidationError(f"edge {i}->{j} reads {w}, which is not dominant")
    return w


@lru_cache(maxsize=None)
def _octahedra(n: int, m: int) -> np.ndarray:
    """Rows (ac, bd, ab, cd, ad, bc) for every unit octahedron, a<b<c<d."""
    if m < 2 or n < 4:
        return np.zeros((0, 6), dtype=np.int32)
    _, idx = lattice(n, m)
    base_pts, _ = lattice(n, m - 2)
    rows = []
    for base in base_pts:
        for a, b, c, d in combinations(range(n), 4):
            def pt(x, y):
                p = list(base)
                p[x] += 1
                p[y] += 1
                return idx[tuple(p)]
            rows.append([pt(a, c), pt(b, d), pt(a, b), pt(c, d), pt(a, d), pt(b, c)])
    return np.array(rows, dtype=np.int32).reshape(-1, 6)


def excavation_schedule(n: int, m: int, known: Iterable[int], seed: int | None = None) -> np.ndarray:
    """Order in which unknown points get solved by the octahedron recurrence.

    Worklist rule: an octahedron is ready when five of its six points are
    known and the missing one belongs to the crossing pair (ac or bd). With a
    seed, ready octahedra are taken in a shuffled order.
    """
    octs = _octahedra(n, m).tolist()
    known_set = set(known)
    pts, _ = lattice(n, m)
    rng = random.Random(seed) if seed is not None else None
    containing: dict[int, list[int]] = {}
    for r, row in enumerate(octs):
        for p in row:
            containing.setdefault(p, []).append(r)

    def ready(r: int):
        ac, bd, ab, cd, ad, bc = octs[r]
        missing = [p for p in octs[r] if p not in known_set]
        if len(missing) != 1:
            return None
        if missing[0] == ac:
            return [ac, bd, ab, cd, ad, bc]
        if missing[0] == bd:
            return [bd, ac, ab, cd, ad, bc]
        return None

    schedule = []
    frontier = list(range(len(octs)))
    while frontier:
        if rng:
            rng.shuffle(frontier)
        nxt = []
        for r in frontier:
            step = ready(r)
            if step is None or step[0] in known_set:
                continue
            schedule.append(step)
            known_set.add(step[0])
            nxt.extend(containing[step[0]])
        frontier = sorted(set(nxt)) if not rng else list(set(nxt))
    missing = [pts[i] for i in range(len(pts)) if i not in known_set]
    if missing:
        raise InvariantError(f"excavation cannot reach {len(missing)} points, e.g. {missing[0]}")
    return np.array(schedule, dtype=np.int32).reshape(-1, 6)


@lru_cache(maxsize=None)
def _fan_known(n: int, m: int) -> tuple[int, ...]:
    """Indices of points on the fan disk: every point supported on some {0, i, i+1}."""
    pts, _ = lattice(n, m)
    out = []
    for q, p in enumerate(pts):
        supp = [v for v in range(n) if p[v]]
        rest = [v for v in supp if v != 0]
        if len(rest) <= 1 or (len(rest) == 2 and rest[1] == rest[0] + 1):
            out.append(q)
    return tuple(out)


@lru_cache(maxsize=None)
def _fan_schedule(n: int, m: int) -> np.ndarray:
    return excavation_schedule(n, m, _fan_known(n, m))


def excavate(h: HiveN, seed: int | None = None, kernels=None) -> HiveN:
    """Fill every missing point of a disk-labelled hive by the octahedron recurrence."""
    known = [q for q, v in enumerate(h.values) if v is not None]
    if seed is None and tuple(known) == _fan_known(h.n, h.m):
        schedule = _fan_schedule(h.n, h.m)
    else:
        schedule = excavation_schedule(h.n, h.m, known, seed)
    vals = np.array([v if v is not None else 0 for v in h.values], dtype=np.int64)
    (kernels or _kernels).apply_schedule(vals, schedule)
    return HiveN(h.n, h.m, tuple(int(v) for v in vals))


def _place_face(vals: list, n: int, m: int, u: int, v: int, w: int, face: Hive3, offset: int) -> None:
    pts3, _ = lattice(3, m)
    _, idx = lattice(n, m)
    for (i, j, k), val in zip(pts3, face.values):
        p = [0] * n
        p[u] += i
        p[v] += j
        p[w] += k
        q = idx[tuple(p)]
        new = val + offset
        if vals[q] is not None and vals[q] != new:
            raise InvariantError(f"faces disagree at {tuple(p)}: {vals[q]} vs {new}")
        vals[q] = new


def fan_disk(path: Sequence[Sequence[int]], labels: Sequence[Minuscule]) -> HiveN:
    """The fan-triangulation disk for a minuscule path, other points unknown."""
    n = len(labels)
    path = [tuple(w) for w in path]
    if len(path) != n + 1:
        raise ValidationError(f"a path for {n} labels has {n + 1} weights")
    m = len(path[0])
    pts, idx = lattice(n, m)
    vals: list[int | None] = [None] * len(pts)
    if n == 2:
        pre = _prefix(path[1])
        for t in range(m + 1):
            vals[idx[(m - t, t)]] = pre[t]
        return HiveN(n, m, tuple(vals))
    for i in range(2, n):
        face = solve_hive3_minuscule(path[i - 1], labels[i - 1], path[i])
        if face is None:
            raise ValidationError(f"fan face {i} is infeasible: {path[i]} is not a Pieri neighbour")
        _place_face(vals, n, m, 0, i - 1, i, face, 0)
    return HiveN(n, m, tuple(vals))


def build_hive_n(path, labels: Sequence[Minuscule], kernels=None) -> HiveN:
    """Full n-hive of a minuscule path: fan disk plus excavation."""
    disk = fan_disk(path, labels)
    if disk.n < 4:
        return disk
    return excavate(disk, kernels=kernels)


def excavate_square(lam, mu, nu, west: Minuscule, north: Minuscule, kernels=None):
    """Excavate the tetrahedron of one growth-diagram square.

    Polygon vertices 0..3 carry edges 0->1 = west (minuscule), 1->2 = lam,
    2->3 = north (minuscule); the top faces share the diagonal 0->2 = nu and
    the fan edge 0->3 is mu. Returns the hive and the bottom diagonal 1->3.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    m = len(lam)
    pts, _ = lattice(4, m)
    vals: list[int | None] = [None] * len(pts)
    left = solve_hive3_boundary(minuscule_vector(west, m), lam, dual(nu))
    right = solve_hive3_minuscule(nu, north, mu)
    if left is None or right is None:
        raise ValidationError("the top faces of this square are infeasible")
    _place_face(vals, 4, m, 0, 1, 2, left, 0)
    _place_face(vals, 4, m, 0, 2, 3, right, 0)
    h = excavate(HiveN(4, m, tuple(vals)), kernels=kernels)
    return h, skeleton_weight(h, 1, 3)


@lru_cache(maxsize=None)
def _fan_face_count(prev: Weight, step: Weight, nxt: Weight) -> int:
    return count_hive3(prev, step, dual(nxt))


def count_fan_hives(labels: Sequence[Minuscule], m: int) -> int:
    """Number of n-hives with the given minuscule boundary, counted along the fan.

    An n-hive is fixed by its fan disk, so the count is a sum over interior
    fan weights of products of 3-hive counts. Candidate fan weights are all
    bounded dominant weights, not just Pieri neighbours, so this route does
    not share code with path enumeration.
    """
    labels = list(labels)
    n = len(labels)
    if n < 2:
        raise ValidationError("a boundary needs at least two edges")
    vecs = [minuscule_vector(lab, m) for lab in labels]
    closing = dual(vecs[-1])
    if n == 2:
        return int(vecs[0] == closing)
    first = labels[0]
    ups, downs, total = int(first.kind == "fund"), int(first.kind == "dual"), first.sign * first.j
    layer = {vecs[0]: 1}
    for i in range(1, n - 1):
        lab = labels[i]
        ups += lab.kind == "fund"
        downs += lab.kind == "dual"
        total += lab.sign * lab.j
        nxt: dict[Weight, int] = {}
        for mu in dominant_weights(m, -downs, ups, total):
            c = sum(k * _fan_face_count(prev, vecs[i], mu) for prev, k in layer.items())
            if c:
                nxt[mu] = c
        layer = nxt
    return layer.get(closing, 0)


def octahedra_ok(h: HiveN) -> bool:
    vals = np.array(h.values, dtype=np.int64)
    return bool(_kernels.octahedra_ok(vals, _octahedra(h.n, h.m)))


def faces_ok(h: HiveN) -> bool:
    return all(rhombus_ok(h.face(u, v, w)) for u, v, w in combinations(range(h.n), 3))


# ------------------------------------------------- extroverted triangulations


def _triangulations(verts: tuple[int, ...]):
    """All triangulations of a convex polygon, as lists of triangles."""
    if len(verts) < 3:
        yield []
        return
    a, b = verts[0], verts[-1]
    for k in range(1, len(verts) - 1):
        for left in _triangulations(verts[: k + 1]):
            for right in _triangulations(verts[k:]):
                yield left + right + [(a, verts[k], b)]


def _is_side(n: int, u: int, v: int) -> bool:
    return (u - v) % n in (1, n - 1)


def _diagonals(n: int, triangles) -> frozenset:
    out = set()
    for tri in triangles:
        for u, v in combinations(tri, 2):
            if not _is_side(n, u, v):
                out.add((min(u, v), max(u, v)))
    return frozenset(out)


def enumerate_extroverted(n: int) -> list[frozenset]:
    """Extroverted triangulations of the n-gon as sets of diagonals (brute force)."""
    if n < 3:
        raise ValidationError("a polygon needs at least 3 vertices")
    out = set()
    for tris in _triangulations(tuple(range(n))):
        if all(any(_is_side(n, u, v) for u, v in combinations(t, 2)) for t in tris):
            out.add(_diagonals(n, tris))
    return sorted(out, key=sorted)


def count_extroverted(n: int) -> int:
    return len(enumerate_extroverted(n))


@dataclass(frozen=True)
class OrientedTriangulation:
    """Code word (iX)(w_2 ... w_{n-1}) with X and every w_k in {R, L}."""

    n: int
    start: int
    first: str
    steps: str

    def __post_init__(self):
        if not 1 <= self.start <= self.n:
            raise ValidationError(f"start edge {self.start} outside 1..{self.n}")
        if len(self.steps) != self.n - 2 or any(c not in "RL" for c in self.steps + self.first):
            raise ValidationError(f"code needs {self.n - 2} letters from R/L after the start")

    @classmethod
    def parse(cls, code: str, n: int | None = None) -> "OrientedTriangulation":
        text = code.replace(" ", "")
        try:
            head, tail = text[1:].split(")(", 1)
            if not text.startswith("(") or not tail.endswith(")"):
                raise ValueError
            tail = tail[:-1]
            start, first = int(head[:-1]), head[-1]
        except ValueError as exc:
            raise ValidationError(f"malformed code word {code!r}") from exc
        return cls(n if n is not None else len(tail) + 2, start, first, tail)

    def __str__(self) -> str:
        return f"({self.start}{self.first})({self.steps})"

    def path(self) -> list[tuple[int, int]]:
        """Staircase vertices (line, index) visited; R steps right, L steps up."""
        line = self.start if self.first == "R" else self.start + 1
        out = [(line, 0)]
        for c in self.first + self.steps:
            line, k = out[-1]
            out.append((line, k + 1) if c == "R" else (line - 1, k + 1))
        line, k = out[-1]
        out.append((line, k + 1))
        return out

    def oriented_edges(self) -> list[tuple[int, int]]:
        """Polygon edge (0-based vertices) for path indices 1..n-1."""
        return [((L - 1) % self.n, (L - 1 + k) % self.n) for L, k in self.path()[1:-1]]

    def diagonals(self) -> frozenset:
        edges = self.oriented_edges()[1:-1]
        return frozenset((min(u, v), max(u, v)) for u, v in edges)


def all_codes(n: int) -> list[OrientedTriangulation]:
    return [
        OrientedTriangulation(n, i, x, "".join(w))
        for i in range(1, n + 1)
        for x in "RL"
        for w in product("RL", repeat=n - 2)
    ]


def triangulation_weights(h: HiveN, t: OrientedTriangulation) -> list[Weight]:
    """Weights along the staircase path of a code word, empty weight at both ends."""
    if t.n != h.n:
        raise ValidationError(f"code word is for n={t.n}, hive has n={h.n}")
    zero = (0,) * h.m
    return [zero] + [skeleton_weight(h, u, v) for u, v in t.oriented_edges()] + [zero]


def render_hive3(h: Hive3) -> str:
    rows = h.rows()
    width = max(len(str(v)) for row in rows for v in row) + 1
    lines = []
    for r, row in enumerate(rows):
        lines.append(" " * (r * width // 2) + "".join(str(v).rjust(width) for v in row))
    return "\n".join(lines)
