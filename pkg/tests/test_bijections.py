import random
from itertools import permutations

import pytest

from affgrowth.bijections import (
    ANTICHAINS,
    CHAINS,
    all_fpf,
    all_nat_fpf,
    all_osc,
    check_nat_fpf,
    embed_rs,
    fpf_to_osc,
    greene_growth,
    greene_oracle,
    is_fpf,
    knuth_compress,
    knuth_expand,
    knuth_to_osc,
    osc_to_fpf,
    osc_to_knuth,
    phi,
    psi,
    schensted,
    schensted_growth,
    split_strip_steps,
    strip_marks_matrix,
    unembed_rs,
)
from affgrowth.errors import ValidationError
from affgrowth.staircase import DiagramType, enumerate_diagrams, fill_from_path, mark_squares, verify
from affgrowth.tableaux import evacuation, from_chain, transpose_tableau
from affgrowth.weights import join_parts, pad, split_parts, transpose

RS_PATH = [(), (1,), (2,), (2, 1), (1, 1), (1,), ()]


def perm_points(sigma):
    return [(i, s) for i, s in enumerate(sigma, start=1)]


def random_partial_permutations(count, size, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        grid = rng.randint(size, size + 6)
        rows = rng.sample(range(grid), size)
        cols = rng.sample(range(grid), size)
        out.append(list(zip(rows, cols)))
    return out


def test_greene_examples():
    assert greene_growth(perm_points((1, 4, 2, 3))) == (3, 1)
    assert greene_oracle(perm_points((1, 4, 2, 3))) == (3, 1)
    assert greene_growth([]) == ()
    assert greene_oracle([]) == ()


@pytest.mark.parametrize("k", range(1, 6))
def test_greene_reversal_transposes(k):
    for s in permutations(range(1, k + 1)):
        rev = s[::-1]
        assert greene_growth(perm_points(rev)) == transpose(greene_growth(perm_points(s)))


@pytest.mark.parametrize("k", range(1, 7))
def test_greene_modes_agree_on_permutations(k):
    for s in permutations(range(1, k + 1)):
        pts = perm_points(s)
        for mode in (CHAINS, ANTICHAINS):
            assert greene_growth(pts, mode) == greene_oracle(pts, mode)
        assert greene_growth(pts, ANTICHAINS) == transpose(greene_growth(pts, CHAINS))


def test_greene_modes_agree_on_random_marks():
    for pts in random_partial_permutations(120, 8, seed=5):
        for mode in (CHAINS, ANTICHAINS):
            assert greene_growth(pts, mode) == greene_oracle(pts, mode)


def test_greene_rejects_shared_rows():
    with pytest.raises(ValidationError):
        greene_growth([(1, 1), (1, 2)])


def test_schensted_examples():
    assert schensted((1, 4, 2, 3)) == (((1, 2, 3), (4,)), ((1, 2, 4), (3,)))
    assert schensted((1, 2, 3, 4)) == (((1, 2, 3, 4),), ((1, 2, 3, 4),))


def _inverse(s):
    inv = [0] * len(s)
    for i, x in enumerate(s, start=1):
        inv[x - 1] = i
    return tuple(inv)


@pytest.mark.parametrize("k", range(1, 6))
def test_schensted_insertion_matches_growth(k):
    for s in permutations(range(1, k + 1)):
        P, Q = schensted(s)
        assert schensted_growth(s) == (P, Q)
        assert schensted_growth(s, transpose=True) == (transpose_tableau(P), transpose_tableau(Q))


@pytest.mark.parametrize("k", range(1, 6))
def test_schensted_symmetries(k):
    for s in permutations(range(1, k + 1)):
        P, Q = schensted(s)
        rev = s[::-1]
        comp = tuple(k + 1 - x for x in s)
        both = tuple(k + 1 - x for x in rev)
        assert schensted(_inverse(s)) == (Q, P)
        assert schensted(rev) == (transpose_tableau(P), transpose_tableau(evacuation(Q, k)))
        assert schensted(comp) == (transpose_tableau(evacuation(P, k)), transpose_tableau(Q))
        assert schensted(both) == (evacuation(P, k), evacuation(Q, k))


def test_embed_rs_examples():
    assert embed_rs((3, 1, 2)) == (5, 4, 6, 2, 1, 3)
    assert embed_rs((1,)) == (2, 1)
    images = {embed_rs(s) for s in permutations((1, 2, 3))}
    assert len(images) == 6 and images <= set(all_fpf(6))
    assert unembed_rs((5, 4, 6, 2, 1, 3)) == (3, 1, 2)
    with pytest.raises(ValidationError):
        unembed_rs((2, 1, 4, 3))


def test_rs_example_diagram():
    pi = embed_rs((3, 1, 2))
    t = DiagramType.parse("f1,f1,f1,d1,d1,d1", 3)
    d = fill_from_path([pad(p, 3) for p in RS_PATH], t)
    assert psi(pi) == d
    assert phi(d) == pi


@pytest.mark.parametrize("k", range(1, 6))
def test_embedded_line_carries_rs_tableaux(k):
    for s in permutations(range(1, k + 1)):
        P, Q = schensted(s)
        line = [split_parts(w)[0] for w in psi(embed_rs(s)).lines[0]]
        assert from_chain(line[: k + 1]) == P
        assert from_chain(line[k:][::-1]) == Q


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_phi_psi_inverse(n):
    fpfs = all_fpf(n)
    assert len(fpfs) == {2: 1, 4: 3, 6: 15, 8: 105}[n]
    for pi in fpfs:
        d = psi(pi)
        assert verify(d)
        assert phi(d) == pi


def test_psi_phi_on_diagrams():
    for text in ["f1,f1,d1,d1", "f1,d1,f1,d1,f1,d1", "f1,f1,f1,d1,d1,d1", "f1,f1,d1,f1,d1,d1"]:
        t = DiagramType.parse(text, 3)
        nonneg = [d for d in enumerate_diagrams(t) if all(min(w) >= 0 for w in d.lines[0])]
        assert nonneg
        for d in nonneg:
            assert psi(phi(d), 3) == d


def test_psi_larger_rank():
    for pi in all_fpf(6):
        d = psi(pi, 5)
        assert verify(d) and phi(d) == pi


def test_psi_rank_precondition():
    with pytest.raises(ValidationError):
        psi((2, 1, 4, 3), 1)
    with pytest.raises(ValidationError):
        psi((1, 2))


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_osc_roundtrip(n):
    oscs = all_osc(n)
    assert len(oscs) == len(all_fpf(n))
    images = set()
    for t in oscs:
        pi = osc_to_fpf(t)
        assert is_fpf(pi)
        images.add(pi)
        assert fpf_to_osc(pi) == t
    assert images == set(all_fpf(n))


def test_osc_small_example():
    assert osc_to_fpf([(), (1,), ()]) == (2, 1)
    assert fpf_to_osc((2, 1)) == ((), (1,), ())
    with pytest.raises(ValidationError):
        osc_to_fpf([(), (2,), ()])


KNUTHIFY = ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 2), (0, 0, 2, 0))


def test_knuth_relabeling_golden():
    pi, sizes = knuth_expand(KNUTHIFY)
    assert sizes == (1, 1, 2, 2)
    assert pi == (2, 1, 5, 6, 3, 4)
    assert fpf_to_osc(pi) == ((), (1,), (), (1,), (1, 1), (1,), ())
    assert knuth_to_osc(KNUTHIFY) == ((), (1,), (), (1, 1), ())
    assert osc_to_knuth(((), (1,), (), (1, 1), ())) == KNUTHIFY
    assert knuth_compress(pi, sizes) == KNUTHIFY


def test_knuth_zero_matrix():
    zero = ((0, 0, 0),) * 3
    assert knuth_to_osc(zero) == ((),) * 4
    assert osc_to_knuth(((),) * 4) == zero


def test_knuth_validation():
    with pytest.raises(ValidationError):
        check_nat_fpf(((0, 1), (0, 0)))
    with pytest.raises(ValidationError):
        check_nat_fpf(((0, 1, 0), (1, 0, 1), (0, 1, 0)))
    with pytest.raises(ValidationError):
        check_nat_fpf(((1,),))


@pytest.mark.parametrize("k,top", [(3, 2), (4, 2)])
def test_knuth_roundtrip(k, top):
    mats = all_nat_fpf(k, top)
    seen = set()
    for M in mats:
        t = knuth_to_osc(M)
        assert len(t) == k + 1
        seen.add(t)
        assert osc_to_knuth(t) == M
        r = [sum(M[i][i + 1:]) for i in range(k)]
        c = [sum(M[j][i] for j in range(i)) for i in range(k)]
        for i in range(k):
            delta = sum(t[i + 1]) - sum(t[i])
            assert delta == r[i] - c[i]
    assert len(seen) == len(mats)


@pytest.mark.parametrize("k,top", [(3, 2), (4, 2)])
def test_strip_diagram_marks_equal_matrix(k, top):
    for M in all_nat_fpf(k, top):
        assert strip_marks_matrix(knuth_to_osc(M)) == M


def test_knuth_example_multiplicities():
    t = DiagramType.parse("f2,f3,d2,f1,d2,d2", 6)
    path = [(), (1, 1), (2, 2, 1), (2, 1), (2, 2), (1, 1), ()]
    d = fill_from_path([join_parts(p, (), 6) for p in path], t)
    assert mark_squares(d) == [
        (1, 6, 2), (2, 3, 2), (2, 5, 1), (3, 8, 2), (4, 5, 1), (5, 8, 1), (5, 10, 1), (6, 7, 2),
    ]
    M = strip_marks_matrix(path)
    assert M[0][5] == 2 and M[1][2] == 2 and M[1][4] == 1 and M[3][4] == 1
    assert osc_to_knuth(path) == M
    assert knuth_to_osc(M) == tuple(tuple(p) for p in path)


def test_split_strip_order():
    standard, sizes = split_strip_steps([(), (1, 1), ()])
    assert standard == ((), (1,), (1, 1), (1,), ())
    assert sizes == (2, 2)
