import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from aclab import builtin_group
from aclab import moves as mv
from aclab.errors import StateCapExceeded

import oracles

GROUPS = [("symmetric", 3), ("quaternion8",), ("dihedral", 4), ("abelian", 2, 3)]


@pytest.mark.parametrize("spec", GROUPS, ids=str)
def test_single_tuple_neighbours_match_oracle(spec):
    G = builtin_group(*spec)
    mul = G.mul.tolist()
    for t in itertools.product(range(G.order), repeat=2):
        t = tuple(t)
        nie = set(mv.nielsen_neighbors(G, t)) - {t}
        assert nie == oracles.moves(mul, t, "nielsen")
        assert set(mv.ac_neighbors(G, t)) - {t} == oracles.moves(mul, t, "ac")
        m = (set(mv.m_neighbors(G, t)) | set(mv.inversion_neighbors(G, t))) - {t}
        assert m == oracles.moves(mul, t, "m")
        assert mv.is_generating(G, t) == oracles.is_generating(mul, t)
        assert mv.normally_generates(G, t) == oracles.is_normally_generating(mul, t)


def test_nielsen_neighbour_order(s3):
    t = (1, 2)
    out = mv.nielsen_neighbors(s3, t)
    assert out[0] == (int(s3.inv[1]), 2)
    assert out[1] == (int(s3.mul[2, 1]), 2)
    assert out[2] == (1, int(s3.inv[2]))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4), st.data())
def test_encode_decode_roundtrip(n, data):
    G = builtin_group("dihedral", 4)
    rows = data.draw(st.lists(st.lists(st.integers(0, 7), min_size=n, max_size=n), min_size=1, max_size=20))
    comps = np.asarray(rows)
    codes = mv.encode(G, comps)
    assert np.array_equal(mv.decode(G, codes, n), comps)
    # code order is lexicographic order
    assert [tuple(r) for r in comps[np.argsort(codes, kind="stable")]] == sorted(map(tuple, rows))


@pytest.mark.parametrize("spec,n", [(("symmetric", 3), 1), (("symmetric", 3), 2), (("quaternion8",), 2),
                                    (("dihedral", 4), 2), (("abelian", 2, 3), 2)])
def test_normally_generating_set_matches_oracle(spec, n):
    G = builtin_group(*spec)
    mul = G.mul.tolist()
    expected = [t for t in itertools.product(range(G.order), repeat=n) if oracles.is_normally_generating(mul, t)]
    got = [tuple(r) for r in mv.decode(G, mv.normally_generating_codes(G, n), n).tolist()]
    assert got == expected
    comps = np.asarray(list(itertools.product(range(G.order), repeat=n)))
    gen = mv.generating_mask(G, comps)
    assert [tuple(r) for r in comps[gen].tolist()] == [t for t in map(tuple, comps.tolist())
                                                        if oracles.is_generating(mul, t)]


def test_state_cap(s3):
    with pytest.raises(StateCapExceeded):
        mv.check_state_cap(s3, 5, state_cap=1000)
    mv.check_state_cap(s3, 3, state_cap=1000)
