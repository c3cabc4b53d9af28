"""Square-level growth rules.

Square corners are named by compass position: ``nw`` is the known corner
opposite the one being computed. The affine rule works on GL weights; the
Fomin and jeu-de-taquin rules work on partitions.
"""
from __future__ import annotations

from typing import Sequence

from .errors import ValidationError
from .weights import Partition, Weight, is_dominant, partition, sort_desc, step_label


def _edge(a: Weight, b: Weight):
    # a zero step is allowed so that the degenerate all-empty square passes
    return "zero" if a == b else step_label(a, b)


def _check_square(nw: Weight, ne: Weight, sw: Weight, se: Weight) -> None:
    if not (len(nw) == len(ne) == len(sw) == len(se)):
        raise ValidationError("square corners have different ranks")
    for w in (nw, ne, sw, se):
        if not is_dominant(w):
            raise ValidationError(f"corner {w} is not dominant")
    vertical_w, vertical_e = _edge(nw, sw), _edge(ne, se)
    horizontal_n, horizontal_s = _edge(nw, ne), _edge(sw, se)
    if vertical_w is None or horizontal_n is None:
        raise ValidationError(f"no minuscule step between {nw} and its neighbours {sw}, {ne}")
    if vertical_w != vertical_e or horizontal_n != horizontal_s:
        raise ValidationError(
            f"square nw={nw} ne={ne} sw={sw} se={se} has mismatched parallel edges"
        )


def affine_rule(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> Weight:
    """SE corner from SW=lam, NE=mu, NW=nu: sort(lam + mu - nu)."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if not (len(lam) == len(mu) == len(nu)):
        raise ValidationError("rank mismatch")
    rho = sort_desc(a + b - c for a, b, c in zip(lam, mu, nu))
    _check_square(nu, mu, lam, rho)
    return rho


def affine_rule_reverse(lam: Sequence[int], mu: Sequence[int], rho: Sequence[int]) -> Weight:
    """NW corner from SW=lam, NE=mu, SE=rho."""
    lam, mu, rho = tuple(lam), tuple(mu), tuple(rho)
    if not (len(lam) == len(mu) == len(rho)):
        raise ValidationError("rank mismatch")
    nu = sort_desc(a + b - c for a, b, c in zip(lam, mu, rho))
    _check_square(nu, mu, lam, rho)
    return nu


def _covers(small: Partition, big: Partition) -> int | None:
    """Row index of the single box big/small, or None when they are not a cover."""
    if len(big) < len(small):
        return None
    s = small + (0,) * (len(big) - len(small))
    diff = [b - a for a, b in zip(s, big)]
    if sorted(diff) != [0] * (len(diff) - 1) + [1]:
        return None
    return diff.index(1)


def _check_cover_or_equal(small: Partition, big: Partition) -> None:
    if small != big and _covers(small, big) is None:
        raise ValidationError(f"{big} is neither equal to nor a cover of {small}")


def _add_box(p: Partition, row: int) -> Partition:
    q = list(p) + [0] * (row + 1 - len(p))
    q[row] += 1
    return partition(q)


def fomin_forward(lam, mu, nu, marked: bool = False) -> Partition:
    """Classical Fomin rule: lam is the NW corner, mu and nu its two neighbours."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    _check_cover_or_equal(lam, mu)
    _check_cover_or_equal(lam, nu)
    if marked and not (lam == mu == nu):
        raise ValidationError("a marked square must have equal NW, NE and SW corners")
    if mu != nu:
        if mu == lam:
            return nu
        if nu == lam:
            return mu
        n = max(len(mu), len(nu))
        a, b = mu + (0,) * (n - len(mu)), nu + (0,) * (n - len(nu))
        return partition(max(x, y) for x, y in zip(a, b))
    if mu != lam:
        return _add_box(mu, _covers(lam, mu) + 1)
    return _add_box(lam, 0) if marked else lam


def fomin_transpose(lam, mu, nu, marked: bool = False) -> Partition:
    """Column version of the Fomin rule: bumps go to the next column."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    _check_cover_or_equal(lam, mu)
    _check_cover_or_equal(lam, nu)
    if marked and not (lam == mu == nu):
        raise ValidationError("a marked square must have equal NW, NE and SW corners")
    if mu != nu:
        return fomin_forward(lam, mu, nu)
    if mu != lam:
        col = mu[_covers(lam, mu)] - 1
        # first row whose length equals the column index, i.e. the next free cell of column col+1
        row = sum(1 for x in mu if x > col + 1)
        return _add_box(mu, row)
    return _add_box(lam, len(lam)) if marked else lam


def _middle_partitions(inner: Partition, outer: Partition) -> list[Partition]:
    out = []
    n = len(outer)
    inner_p = inner + (0,) * (n - len(inner))
    for r in range(n):
        if inner_p[r] < outer[r]:
            q = list(inner_p)
            q[r] += 1
            if all(q[i] >= q[i + 1] for i in range(n - 1)):
                out.append(partition(q))
    return out


def jdt_rule(lam, mu, nu) -> Partition:
    """Fourth corner of a jeu-de-taquin square: nu below lam below mu, |mu/nu| = 2."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if len(nu) > len(mu) or any(a > b for a, b in zip(nu, mu)) or sum(mu) - sum(nu) != 2:
        raise ValidationError(f"{mu}/{nu} is not a two-box skew shape")
    middles = _middle_partitions(nu, mu)
    middles = [p for p in middles if _covers(p, mu) is not None]
    if lam not in middles:
        raise ValidationError(f"{lam} does not lie between {nu} and {mu}")
    if len(middles) == 1:
        return lam
    return next(p for p in middles if p != lam)


def is_vertical_strip(small: Sequence[int], big: Sequence[int]) -> bool:
    s, b = partition(small), partition(big)
    if len(s) > len(b):
        return False
    s = s + (0,) * (len(b) - len(s))
    return all(0 <= y - x <= 1 for x, y in zip(s, b))

