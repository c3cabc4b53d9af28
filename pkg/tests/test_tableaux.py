from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affgrowth.errors import ValidationError
from affgrowth.staircase import DiagramType, enumerate_diagrams
from affgrowth.tableaux import (
    chain_to_ssyt,
    dual_evacuation,
    dual_promotion,
    evacuation,
    from_chain,
    is_ssyt,
    is_standard,
    jdt_slide,
    kostka_count,
    lr_via_kostka,
    promotion,
    shape,
    ssyt_to_chain,
    tableau,
)
from affgrowth.weights import Minuscule, dominant_weights


def ssyts(sh, n):
    """Every SSYT of a shape with entries in 1..n (brute force over fillings)."""
    cells = [(r, c) for r, length in enumerate(sh) for c in range(length)]
    for vals in product(range(1, n + 1), repeat=len(cells)):
        rows = [[0] * length for length in sh]
        for (r, c), v in zip(cells, vals):
            rows[r][c] = v
        if is_ssyt(rows):
            yield tuple(tuple(row) for row in rows)


def standard_tableaux(sh):
    size = sum(sh)
    cells = [(r, c) for r, length in enumerate(sh) for c in range(length)]
    for vals in permutations(range(1, size + 1)):
        rows = [[0] * length for length in sh]
        for (r, c), v in zip(cells, vals):
            rows[r][c] = v
        if is_ssyt(rows):
            yield tuple(tuple(row) for row in rows)


def rotate_complement(t, n):
    return tuple(tuple(n + 1 - x for x in reversed(row)) for row in reversed(t))


SMALL_SHAPES = [(1,), (2,), (1, 1), (2, 1), (3,), (2, 2), (3, 1), (2, 1, 1), (3, 2), (2, 2, 1), (3, 3), (2, 2, 2)]


def test_single_box_promotion_is_identity():
    assert promotion(((1,),), 1) == ((1,),)


def test_sl_golden_first_line_periodic():
    t = chain_to_ssyt([(), (1,), (2,), (2, 1), (2, 2, 1), (3, 2, 2), (3, 3, 3)])
    x = t
    for _ in range(6):
        x = promotion(x, 6)
    assert x == t
    assert evacuation(t, 6) == rotate_complement(t, 6)


@pytest.mark.parametrize("sh", SMALL_SHAPES)
def test_promotion_inverse_pairs(sh):
    n = 4
    for t in ssyts(sh, n):
        assert dual_promotion(promotion(t, n), n) == t
        assert promotion(dual_promotion(t, n), n) == t
        assert is_ssyt(promotion(t, n)) and shape(promotion(t, n)) == sh


@pytest.mark.parametrize("sh", SMALL_SHAPES)
def test_evacuation_identities(sh):
    n = 4
    rect = len(set(sh)) == 1
    for t in ssyts(sh, n):
        ev = evacuation(t, n)
        assert evacuation(ev, n) == t
        assert evacuation(promotion(t, n), n) == dual_promotion(ev, n)
        if rect:
            assert ev == rotate_complement(t, n)
            assert dual_evacuation(t, n) == ev


@pytest.mark.parametrize("sh", [(1, 1), (2, 2), (3, 3), (2, 2, 2), (3, 3, 3), (4, 4), (2, 2, 2, 2)])
def test_promotion_order_on_rectangles(sh):
    size = sum(sh)
    for t in standard_tableaux(sh):
        x = t
        for _ in range(size):
            x = promotion(x, size)
        assert x == t


def _evacuation_by_double_slides(t):
    """Oracle: ev of a standard tableau via repeated removal of the minimum entry."""
    size = len([x for row in t for x in row])
    rows = [list(row) for row in t]
    out = {}
    for i in range(1, size + 1):
        pos = next((r, c) for r, row in enumerate(rows) for c, x in enumerate(row) if x == i)
        rows[pos[0]][pos[1]] = None
        new, end = jdt_slide(rows, pos)
        rows = [list(row) for row in new]
        out[end] = size + 1 - i
    nrows = max(r for r, _ in out) + 1
    return tuple(tuple(out[(r, c)] for c in range(sum(1 for (rr, _) in out if rr == r))) for r in range(nrows))


@pytest.mark.parametrize("size", range(1, 7))
def test_evacuation_involution_on_standard(size):
    shapes = [tuple(x for x in p if x) for p in dominant_weights(size, 0, size, total=size)]
    for sh in shapes:
        for t in standard_tableaux(sh):
            ev = evacuation(t, size)
            assert is_standard(ev)
            assert ev == _evacuation_by_double_slides(t)
            assert evacuation(ev, size) == t


def test_jdt_slide_basic():
    rows, end = jdt_slide([[None, 1], [2, 3]], (0, 0))
    assert rows == ((1, 3), (2,)) and end == (1, 1)
    with pytest.raises(ValidationError):
        jdt_slide([[1]], (0, 0))


def test_chain_roundtrip_and_errors():
    chain = [(), (1,), (1, 1), (2, 1)]
    assert from_chain(chain) == ((1, 3), (2,))
    t = chain_to_ssyt(chain)
    assert ssyt_to_chain(t, 3) == tuple(tuple(p) for p in chain)
    with pytest.raises(ValidationError):
        chain_to_ssyt([(), (2,)])
    with pytest.raises(ValidationError):
        tableau([[2, 1]])
    with pytest.raises(ValidationError):
        promotion(((5,),), 3)


def brute_kostka(sh, content):
    n = len(content)
    count = 0
    for t in ssyts(sh, n):
        flat = [x for row in t for x in row]
        if all(flat.count(i + 1) == content[i] for i in range(n)):
            count += 1
    return count


def test_kostka_examples():
    assert kostka_count((1,), (1,)) == 1
    assert kostka_count((2,), (1,)) == 0
    assert kostka_count((2, 1), (1, 1, 1)) == 2


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([(2,), (1, 1), (2, 1), (3, 1), (2, 2), (3, 2), (2, 1, 1), (2, 2, 1)]),
    st.lists(st.integers(0, 3), min_size=1, max_size=4),
)
def test_kostka_matches_brute(sh, content):
    assert kostka_count(sh, content) == brute_kostka(sh, content)


def test_kostka_growth_type():
    t = DiagramType.parse("f1,f1,f1,d1,f1,d1,d1,d1", 4)
    assert lr_via_kostka(t.labels, 4) == len(enumerate_diagrams(t))


def test_kostka_unbalanced_is_zero():
    assert lr_via_kostka([Minuscule("fund", 2), Minuscule("dual", 1)], 3) == 0
