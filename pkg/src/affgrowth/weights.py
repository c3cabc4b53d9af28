"""Partitions and GL_m dominant weights.

Weights are plain tuples of ints: a partition is a weakly decreasing tuple of
positive ints (trailing zeros trimmed), a GL weight is a weakly decreasing
tuple of exactly m ints. Entries stay tiny in every workload here (|entry|
bounded by the path length), so no overflow handling is attempted.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ValidationError

Partition = tuple[int, ...]
Weight = tuple[int, ...]

FUND = "fund"
DUAL = "dual"


def sort_desc(v: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(v, reverse=True))


def is_dominant(w: Sequence[int]) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def partition(parts: Iterable[int]) -> Partition:
    """Canonical partition: validated, trailing zeros dropped."""
    p = tuple(parts)
    if any(x < 0 for x in p) or not is_dominant(p):
        raise ValidationError(f"not a partition: {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def weight(parts: Iterable[int], m: int | None = None) -> Weight:
    w = tuple(parts)
    if m is not None and len(w) != m:
        raise ValidationError(f"weight {w} does not have rank {m}")
    if not is_dominant(w):
        raise ValidationError(f"weight {w} is not dominant")
    return w


def zero(m: int) -> Weight:
    return (0,) * m


def dual(w: Sequence[int]) -> Weight:
    return tuple(-x for x in reversed(w))


def transpose(p: Sequence[int]) -> Partition:
    if not p or p[0] <= 0:
        return ()
    return tuple(sum(1 for x in p if x > c) for c in range(p[0]))


def size(p: Sequence[int]) -> int:
    return sum(p)


def split_parts(w: Sequence[int]) -> tuple[Partition, Partition]:
    """(positive part, negative part) of a GL weight, both as partitions."""
    pos = tuple(x for x in w if x > 0)
    neg = tuple(-x for x in reversed(w) if x < 0)
    return pos, neg


def join_parts(pos: Sequence[int], neg: Sequence[int], m: int) -> Weight:
    pos, neg = partition(pos), partition(neg)
    if len(pos) + len(neg) > m:
        raise ValidationError(f"({pos}|{neg}) does not fit in rank {m}")
    return pos + (0,) * (m - len(pos) - len(neg)) + tuple(-x for x in reversed(neg))


def pad(p: Sequence[int], m: int) -> Weight:
    """Partition as a rank-m weight."""
    if len(p) > m:
        raise ValidationError(f"partition {tuple(p)} has more than {m} parts")
    return tuple(p) + (0,) * (m - len(p))


@dataclass(frozen=True, order=True)
class Minuscule:
    """omega_j (kind 'fund') or its dual omega_j^* (kind 'dual')."""

    kind: str
    j: int

    def __post_init__(self):
        if self.kind not in (FUND, DUAL):
            raise ValidationError(f"unknown minuscule kind {self.kind!r}")
        if self.j < 1:
            raise ValidationError(f"minuscule index must be positive, got {self.j}")

    @property
    def sign(self) -> int:
        return 1 if self.kind == FUND else -1

    @property
    def dual(self) -> "Minuscule":
        return Minuscule(DUAL if self.kind == FUND else FUND, self.j)

    def __str__(self) -> str:
        return f"{'f' if self.kind == FUND else 'd'}{self.j}"

    @classmethod
    def parse(cls, text: str) -> "Minuscule":
        text = text.strip()
        if len(text) < 2 or text[0] not in "fd" or not text[1:].isdigit():
            raise ValidationError(f"bad minuscule label {text!r} (expected like f2 or d1)")
        return cls(FUND if text[0] == "f" else DUAL, int(text[1:]))

    def to_json(self) -> dict:
        return {"kind": self.kind, "j": self.j}

    @classmethod
    def from_json(cls, obj) -> "Minuscule":
        if isinstance(obj, str):
            return cls.parse(obj)
        try:
            return cls(obj["kind"], int(obj["j"]))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad minuscule label {obj!r}") from exc


def minuscule_vector(label: Minuscule, m: int) -> Weight:
    if label.j > m:
        raise ValidationError(f"{label} needs rank at least {label.j}, got {m}")
    if label.kind == FUND:
        return (1,) * label.j + (0,) * (m - label.j)
    return (0,) * (m - label.j) + (-1,) * label.j


def step_label(a: Sequence[int], b: Sequence[int]) -> Minuscule | None:
    """The minuscule weight whose Weyl translate is b - a, if any."""
    if len(a) != len(b):
        return None
    d = [y - x for x, y in zip(a, b)]
    ups = sum(1 for x in d if x == 1)
    downs = sum(1 for x in d if x == -1)
    if ups + downs != sum(1 for x in d if x != 0):
        return None
    if ups and not downs:
        return Minuscule(FUND, ups)
    if downs and not ups:
        return Minuscule(DUAL, downs)
    return None


def pieri_neighbors(mu: Sequence[int], label: Minuscule) -> set[Weight]:
    """All dominant nu with nu - mu a Weyl translate of the minuscule weight."""
    m = len(mu)
    if label.j > m:
        return set()
    s = label.sign
    out = set()
    for rows in combinations(range(m), label.j):
        nu = list(mu)
        for r in rows:
            nu[r] += s
        if is_dominant(nu):
            out.add(tuple(nu))
    return out


def dominant_weights(m: int, lo: int, hi: int, total: int | None = None) -> list[Weight]:
    """Every dominant rank-m weight with entries in [lo, hi], optionally of fixed sum."""
    out: list[Weight] = []

    def rec(prefix: list[int], cap: int) -> None:
        if len(prefix) == m:
            if total is None or sum(prefix) == total:
                out.append(tuple(prefix))
            return
        for x in range(cap, lo - 1, -1):
            prefix.append(x)
            rec(prefix, x)
            prefix.pop()

    rec([], hi)
    return out


def weight_str(w: Sequence[int]) -> str:
    """Compact (alpha|beta) rendering used by the text renderers."""
    pos, neg = split_parts(w)
    a = ",".join(map(str, pos))
    b = ",".join(map(str, neg))
    if not b:
        return f"({a})" if a else "∅"
    return f"({a}|{b})"
