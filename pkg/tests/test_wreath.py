from collections import Counter

import pytest

from aclab import weight
from aclab.errors import NotCoprime, OrderCapExceeded
from aclab.groups import abelianization
from aclab.wreath import WreathSpec, distinguished_element, wreath_cyclic, wreath_weight_one_verify

import oracles


def _perm_wreath(a, b):
    """C_a wr C_b on a*b points: point (x, i) is x + a*i."""
    N = a * b
    base = tuple(((p % a) + 1) % a if p < a else p for p in range(N))
    top = tuple((p % a) + a * ((p // a + 1) % b) for p in range(N))
    return [base, top]


def _class_sizes(mul):
    N = len(mul)
    inv = [oracles.inverse(mul, x) for x in range(N)]
    seen, sizes = set(), []
    for x in range(N):
        if x not in seen:
            cl = {mul[mul[inv[g]][x]][g] for g in range(N)}
            seen |= cl
            sizes.append(len(cl))
    return Counter(sizes)


@pytest.mark.parametrize("a,b", [(2, 3), (3, 2), (2, 5), (3, 4)])
def test_two_stage_matches_permutation_model(a, b):
    G = wreath_cyclic([a, b])
    assert G.order == a**b * b
    ref = oracles.perm_closure(_perm_wreath(a, b))
    assert len(ref) == G.order
    from aclab import group_from_permutations

    P = group_from_permutations(_perm_wreath(a, b))
    assert Counter(G.element_orders.tolist()) == Counter(P.element_orders.tolist())
    assert _class_sizes(G.mul.tolist()) == _class_sizes(P.mul.tolist())


@pytest.mark.parametrize("orders", [[2], [2, 3], [3, 2], [2, 5], [3, 4], [5, 2]])
def test_weight_one_verification(orders):
    r = wreath_weight_one_verify(orders)
    assert r.passed
    G = wreath_cyclic(orders)
    A, proj = abelianization(G)
    mul = G.mul.tolist()
    x = distinguished_element(orders)
    # brute-force conjugacy class and centralizer of x
    inv = [oracles.inverse(mul, g) for g in range(G.order)]
    cl = {mul[mul[inv[g]][x]][g] for g in range(G.order)}
    assert len(cl) * A.order == G.order == r.class_size * r.abelianization_order
    cent = {g for g in range(G.order) if mul[g][x] == mul[x][g]}
    assert cent == oracles.closure(mul, [x])
    assert oracles.is_normally_generating(mul, (x,))
    assert weight(G) == 1


def test_spec_validation():
    with pytest.raises(NotCoprime):
        WreathSpec((2, 4))
    with pytest.raises(ValueError):
        WreathSpec((1, 3))
    assert WreathSpec((2, 3)).stage_orders() == [2, 24]
    with pytest.raises(OrderCapExceeded):
        wreath_cyclic([2, 3, 5])
