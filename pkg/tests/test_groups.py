import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from aclab import builtin_group, group_from_permutations
from aclab.errors import OrderCapExceeded, UnknownSpec
from aclab.groups import (
    GroupTable,
    abelianization,
    commutator_subgroup,
    derived_series,
    finite_field_tables,
    is_simple,
    is_soluble,
    maximal_normal_subgroups,
    normal_closure,
    normal_subgroups,
    prime_power,
    quotient,
    rank,
    solubility_length,
    subgroup_generated,
    w_subgroup,
    weight,
)

import oracles

CATALOG_ORDERS = {
    ("symmetric", 3): 6, ("symmetric", 4): 24, ("symmetric", 5): 120,
    ("dihedral", 4): 8, ("dihedral", 6): 12, ("quaternion8",): 8,
    ("heisenberg", 3): 27, ("affine", 5): 20, ("affine", 4): 12, ("affine", 8): 56,
    ("abelian", 2, 4): 8, ("cyclic", 6): 6,
}


@pytest.mark.parametrize("spec,order", CATALOG_ORDERS.items(), ids=str)
def test_catalog_orders(spec, order):
    assert builtin_group(*spec).order == order


def test_inline_params():
    assert builtin_group("dihedral(3)").order == 6


def test_permutation_table_matches_composition():
    gens = [(1, 0, 2, 3), (1, 2, 3, 0)]
    G = group_from_permutations(gens)
    perms = [tuple(p) for p in G.perms.tolist()]
    assert set(perms) == oracles.perm_closure(gens)
    for a, b in itertools.product(range(G.order), repeat=2):
        assert perms[G.mul[a, b]] == oracles.compose(perms[a], perms[b])


perm_strategy = st.integers(2, 5).flatmap(
    lambda d: st.lists(st.permutations(range(d)), min_size=1, max_size=3))


@settings(max_examples=40, deadline=None)
@given(perm_strategy)
def test_closure_size_and_laws(gens):
    G = group_from_permutations(gens)
    assert G.order == len(oracles.perm_closure([tuple(g) for g in gens]))
    mul = G.mul
    perms = [tuple(p) for p in G.perms.tolist()]
    for a, b in itertools.product(range(G.order), repeat=2):
        assert perms[mul[a, b]] == oracles.compose(perms[a], perms[b])
    assert np.all(mul[np.arange(G.order), G.inv] == 0)


def test_bad_table_rejected():
    with pytest.raises(ValueError):
        GroupTable([[0, 1], [1, 1]])


def test_caps_and_unknown():
    with pytest.raises(OrderCapExceeded):
        builtin_group("dihedral", 100, cap=50)
    with pytest.raises(UnknownSpec):
        builtin_group("monster")
    with pytest.raises(UnknownSpec):
        builtin_group("affine", 6)


def test_conjugation_and_commutator(s3):
    for x, y in itertools.product(range(6), repeat=2):
        xi, yi = s3.inv[x], s3.inv[y]
        assert s3.conjugate(x, y) == s3.mul[s3.mul[yi, x], y]
        assert s3.commutator(x, y) == s3.mul[s3.mul[s3.mul[xi, yi], x], y]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_finite_field_is_a_field(q):
    add, mul = finite_field_tables(q)
    nonzero = range(1, q)
    for a in nonzero:
        assert sorted(mul[a][b] for b in nonzero) == list(nonzero)
    assert prime_power(q) is not None


def _oracle_normal_subgroups(G):
    mul = G.mul.tolist()
    subs = set()
    for a, b in itertools.combinations_with_replacement(range(G.order), 2):
        S = frozenset(oracles.closure(mul, [a, b]))
        if frozenset(oracles.normal_closure(mul, S)) == S:
            subs.add(S)
    return subs


@pytest.mark.parametrize("spec", [("symmetric", 3), ("symmetric", 4), ("dihedral", 4), ("quaternion8",),
                                  ("dihedral", 6), ("affine", 5)])
def test_normal_subgroups_against_oracle(spec):
    G = builtin_group(*spec)
    got = {frozenset(S.elements.tolist()) for S in normal_subgroups(G)}
    assert got == _oracle_normal_subgroups(G)
    maxi = [S for S in got if S != frozenset(range(G.order)) and not any(S < T < frozenset(range(G.order)) for T in got)]
    W = frozenset(range(G.order))
    for M in maxi:
        W &= M
    assert frozenset(w_subgroup(G).elements.tolist()) == W
    assert {frozenset(S.elements.tolist()) for S in maximal_normal_subgroups(G)} == set(maxi)


def _oracle_min_size(G, test):
    mul = G.mul.tolist()
    for k in range(0, 5):
        if any(test(mul, t) for t in itertools.combinations(range(G.order), k)):
            return k


@pytest.mark.parametrize("spec", [("symmetric", 3), ("symmetric", 4), ("dihedral", 4), ("quaternion8",),
                                  ("abelian", 2, 2, 2), ("abelian", 5, 5), ("affine", 5), ("heisenberg", 3)])
def test_rank_weight_against_oracle(spec):
    G = builtin_group(*spec)
    assert rank(G) == _oracle_min_size(G, oracles.is_generating)
    assert weight(G) == _oracle_min_size(G, oracles.is_normally_generating)


def test_series():
    S4, S5 = builtin_group("symmetric", 4), builtin_group("symmetric", 5)
    assert [S.size for S in derived_series(S4)] == [24, 12, 4, 1]
    assert [S.size for S in derived_series(S5)] == [120, 60]
    assert is_soluble(S4) and not is_soluble(S5)
    assert solubility_length(S4) == 3 and solubility_length(S5) is None
    assert is_simple(builtin_group("cyclic", 7)) and not is_simple(S4)


def test_w_of_cyclic():
    # maximal normal subgroups of Z/12 have index 2 and 3; they meet in <6>
    assert w_subgroup(builtin_group("cyclic", 12)).elements.tolist() == [0, 6]


def test_quotient_and_abelianization(d4):
    N = commutator_subgroup(d4)
    Q, proj = quotient(d4, N)
    assert Q.order * N.size == d4.order and Q.is_abelian
    for a, b in itertools.product(range(d4.order), repeat=2):
        assert proj[d4.mul[a, b]] == Q.mul[proj[a], proj[b]]
    A, _ = abelianization(builtin_group("symmetric", 4))
    assert A.order == 2


def test_subgroup_and_normal_closure(s3):
    mul = s3.mul.tolist()
    for x in range(6):
        assert set(subgroup_generated(s3, [x]).elements.tolist()) == oracles.closure(mul, [x])
        assert set(normal_closure(s3, [x]).elements.tolist()) == oracles.normal_closure(mul, [x])


def test_large_group_sampled_associativity():
    G = builtin_group("affine", 32)
    assert G.order == 992
