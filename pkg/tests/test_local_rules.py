import pytest

from affgrowth.errors import ValidationError
from affgrowth.local_rules import (
    affine_rule,
    affine_rule_reverse,
    fomin_forward,
    fomin_transpose,
    is_vertical_strip,
    jdt_rule,
)
from affgrowth.weights import DUAL, FUND, Minuscule, dominant_weights, pieri_neighbors, transpose


def partitions_up_to(n):
    out = [()]
    for k in range(1, n + 1):
        def rec(prefix, remaining, cap):
            if remaining == 0:
                out.append(tuple(prefix))
                return
            for x in range(min(cap, remaining), 0, -1):
                rec(prefix + [x], remaining - x, x)
        rec([], k, k)
    return out


def covers_of(p):
    out = []
    q = list(p) + [0]
    for r in range(len(q)):
        if r == 0 or q[r - 1] > q[r]:
            new = q[:]
            new[r] += 1
            out.append(tuple(x for x in new if x))
    return out


def test_affine_rule_examples():
    assert affine_rule((3, 3, 1, 1, 1), (4, 2, 2, 1, 0), (4, 3, 2, 2, 1)) == (3, 2, 1, 0, 0)
    assert affine_rule((0, 0, 0), (2, 0, 0), (1, 0, 0)) == (1, 0, 0)
    assert affine_rule((1, 0, 0), (1, 0, 0), (1, 1, 0)) == (1, 0, -1)
    assert affine_rule((0, 0), (0, 0), (0, 0)) == (0, 0)


def test_affine_rule_reverse_examples():
    assert affine_rule_reverse((3, 3, 1, 1, 1), (4, 2, 2, 1, 0), (3, 2, 1, 0, 0)) == (4, 3, 2, 2, 1)
    assert affine_rule_reverse((0, 0, 0), (2, 0, 0), (1, 0, 0)) == (1, 0, 0)


def test_affine_rule_rejects_invalid_squares():
    with pytest.raises(ValidationError):
        affine_rule((1, 0), (1, 0, 0), (0, 0))
    with pytest.raises(ValidationError):
        affine_rule((2, 0), (1, 0), (0, 0))


def _squares(m, bound):
    labels = [Minuscule(k, j) for k in (FUND, DUAL) for j in range(1, m + 1)]
    for nu in dominant_weights(m, -bound, bound):
        for a in labels:
            for lam in pieri_neighbors(nu, a.dual):
                for b in labels:
                    for mu in pieri_neighbors(nu, b):
                        yield lam, mu, nu


def test_affine_rule_symmetric_and_reversible():
    seen = 0
    for lam, mu, nu in _squares(3, 2):
        try:
            rho = affine_rule(lam, mu, nu)
        except ValidationError:
            continue
        seen += 1
        assert affine_rule(mu, lam, nu) == rho
        assert affine_rule_reverse(lam, mu, rho) == nu
    assert seen > 100


def test_fomin_forward_examples():
    assert fomin_forward((), (), (), marked=True) == (1,)
    assert fomin_forward((1,), (2,), (1, 1)) == (2, 1)
    assert fomin_forward((1,), (2,), (2,)) == (2, 1)
    assert fomin_forward((1,), (1,), (1,)) == (1,)
    with pytest.raises(ValidationError):
        fomin_forward((), (2,), ())
    with pytest.raises(ValidationError):
        fomin_forward((), (1,), (), marked=True)


def test_fomin_transpose_examples():
    assert fomin_transpose((), (), (), marked=True) == (1,)
    assert fomin_transpose((1,), (1, 1), (1, 1)) == (2, 1)
    assert fomin_transpose((1,), (1,), (1,), marked=True) == (1, 1)
    assert fomin_transpose((2,), (3,), (3,)) == (4,)


def test_fomin_transpose_is_conjugated_forward():
    for lam in partitions_up_to(7):
        nexts = [lam] + covers_of(lam)
        for mu in nexts:
            for nu in nexts:
                for marked in ([False, True] if mu == nu == lam else [False]):
                    want = transpose(fomin_forward(transpose(lam), transpose(mu), transpose(nu), marked))
                    assert fomin_transpose(lam, mu, nu, marked) == want


def test_jdt_rule_examples():
    assert jdt_rule((2,), (2, 1), (1,)) == (1, 1)
    assert jdt_rule((1, 1), (1, 1, 1), (1,)) == (1, 1)
    assert jdt_rule((3,), (3, 1), (2,)) == (2, 1)
    with pytest.raises(ValidationError):
        jdt_rule((3,), (2, 1), (1,))


def test_vertical_strip():
    assert is_vertical_strip((1,), (2, 1, 1))
    assert not is_vertical_strip((), (2,))
