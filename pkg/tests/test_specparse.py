import pytest

from aclab.errors import OrderCapExceeded, ParseError, UnknownSpec
from aclab.specparse import canonical_spec, parse_cycles, parse_group_spec, parse_tuple, spec_hash

import oracles


@pytest.mark.parametrize("text,order", [
    ("builtin: dihedral(3)", 6),
    ("perm d=3: (0 1), (0 1 2)", 6),
    ("abelian: 2,4", 8),
    ("wreath: 2,3", 24),
    ("builtin: quaternion8", 8),
    ("# comment\n\n  builtin: symmetric(4)  # trailing\n", 24),
    ("perm d=5: (0 1)(2 3), (0 1 2 3 4)", len(oracles.perm_closure([(1, 0, 3, 2, 4), (1, 2, 3, 4, 0)]))),
])
def test_examples(text, order):
    assert parse_group_spec(text).order == order


def test_cycles():
    assert parse_cycles("(0 2)(1 3 4)", 5) == [2, 3, 0, 4, 1]
    assert parse_cycles("", 3) == [0, 1, 2]


@pytest.mark.parametrize("text,line,col", [
    ("bogus: 1", 1, 1),
    ("\n  perm d=3: (0 5)", 2, 16),
    ("perm d=3: (0 1", 1, 11),
    ("perm d=3: (0 1)(1 2)", 1, 17),
    ("abelian: 2,x", 1, 12),
    ("perm: (0 1)", 1, 5),
    ("", 1, 1),
])
def test_errors_carry_positions(text, line, col):
    with pytest.raises(ParseError) as exc:
        parse_group_spec(text)
    assert (exc.value.line, exc.value.column) == (line, col)
    assert str(exc.value).startswith(f"line {line}, column {col}")


def test_other_errors():
    with pytest.raises(UnknownSpec):
        parse_group_spec("builtin: monster(3)")
    with pytest.raises(OrderCapExceeded):
        parse_group_spec("abelian: 100,100", cap=1000)


def test_hash_is_canonical():
    assert spec_hash("abelian: 2, 4") == spec_hash("abelian:2,4  # x")
    assert spec_hash("abelian: 2,4") != spec_hash("abelian: 4,2")
    assert canonical_spec("builtin:  dihedral( 3 )") == "builtin: dihedral(3)"


def test_tuples():
    G = parse_group_spec("perm d=3: (0 1), (0 1 2)")
    t = parse_tuple(G, perms="(0 1)|(0 1 2)")
    assert [G.perms[i].tolist() for i in t] == [[1, 0, 2], [1, 2, 0]]
    assert parse_tuple(G, ids="1,2") == (1, 2)
    with pytest.raises(ParseError):
        parse_tuple(G, ids="1,9")
