"""Elementary transformations of tuples of group elements.

A tuple is a plain ``tuple`` of element ids.  Whole tuple spaces are handled
as integer codes ``sum(c_i * N**(n-1-i))`` so that code order is
lexicographic tuple order.

Single-tuple neighbour functions return every variant a move can produce,
self-loops included (except ``m_neighbors``, which drops ``w = 1``); the graph
builders drop all self-loops.
"""

from __future__ import annotations

import numpy as np

from .errors import StateCapExceeded
from .groups import (
    LATTICE_ORDER_CAP,
    GroupTable,
    maximal_normal_subgroups,
    normal_closure,
    subgroup_generated,
)

DEFAULT_STATE_CAP = 10**7


def is_generating(G: GroupTable, t) -> bool:
    return subgroup_generated(G, t).is_whole


def normally_generates(G: GroupTable, t) -> bool:
    return normal_closure(G, t).is_whole


def nielsen_neighbors(G: GroupTable, t) -> list[tuple[int, ...]]:
    """All results of one elementary Nielsen move, ordered by ``i`` then ``j``.

    For each position ``i``: the inversion ``g_i -> g_i^-1``, then
    ``g_i -> g_j g_i`` for every ``j != i``.
    """
    t = tuple(int(x) for x in t)
    out = []
    for i in range(len(t)):
        out.append(t[:i] + (int(G.inv[t[i]]),) + t[i + 1 :])
        for j in range(len(t)):
            if j != i:
                out.append(t[:i] + (int(G.mul[t[j], t[i]]),) + t[i + 1 :])
    return out


def ac_neighbors(G: GroupTable, t) -> list[tuple[int, ...]]:
    """Nielsen neighbours followed by ``g_i -> g^-1 g_i g`` for every ``i`` and ``g``."""
    t = tuple(int(x) for x in t)
    out = nielsen_neighbors(G, t)
    for i in range(len(t)):
        for c in G.conjugates_of([t[i]])[:, 0]:
            out.append(t[:i] + (int(c),) + t[i + 1 :])
    return out


def m_neighbors(G: GroupTable, t) -> list[tuple[int, ...]]:
    """``s_i -> s_i w`` for ``w`` in the normal closure of the other components, ``w != 1``."""
    t = tuple(int(x) for x in t)
    out = []
    for i in range(len(t)):
        K = normal_closure(G, t[:i] + t[i + 1 :])
        for w in K.elements[1:]:
            out.append(t[:i] + (int(G.mul[t[i], w]),) + t[i + 1 :])
    return out


def inversion_neighbors(G: GroupTable, t) -> list[tuple[int, ...]]:
    t = tuple(int(x) for x in t)
    return [t[:i] + (int(G.inv[t[i]]),) + t[i + 1 :] for i in range(len(t))]


# tuple spaces


def check_state_cap(G: GroupTable, n: int, state_cap: int = DEFAULT_STATE_CAP):
    if G.order**n > state_cap:
        raise StateCapExceeded(f"|G|^n = {G.order}^{n} exceeds the state cap {state_cap}")


def encode(G: GroupTable, comps) -> np.ndarray:
    comps = np.asarray(comps, dtype=np.int64)
    n = comps.shape[-1]
    weights = G.order ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return comps @ weights


def decode(G: GroupTable, codes, n: int) -> np.ndarray:
    codes = np.asarray(codes, dtype=np.int64)
    if n == 0:
        return np.zeros((codes.size, 0), dtype=np.int64)
    return np.stack(np.unravel_index(codes, (G.order,) * n), axis=1).astype(np.int64)


def normally_generating_mask(G: GroupTable, comps: np.ndarray) -> np.ndarray:
    """Row mask of tuples whose components normally generate ``G``.

    Up to order 512 this uses the maximal normal subgroups: a set normally
    generates iff no maximal normal subgroup contains all of it.  Larger
    groups fall back to one normal closure per distinct component set.
    """
    comps = np.asarray(comps, dtype=np.int64)
    if G.order == 1:
        return np.ones(len(comps), dtype=bool)
    if G.order <= LATTICE_ORDER_CAP:
        ok = np.ones(len(comps), dtype=bool)
        for M in maximal_normal_subgroups(G):
            ok &= ~np.all(M.members[comps], axis=1)
        return ok
    return _closure_mask_by_sets(G, comps, normally_generates)


def _closure_mask_by_sets(G, comps, predicate):
    keys = np.sort(comps, axis=1)
    uniq, back = np.unique(keys, axis=0, return_inverse=True)
    verdict = np.array([predicate(G, row) for row in uniq], dtype=bool)
    return verdict[back.ravel()]


def generating_mask(G: GroupTable, comps: np.ndarray) -> np.ndarray:
    comps = np.asarray(comps, dtype=np.int64)
    if G.order == 1:
        return np.ones(len(comps), dtype=bool)
    if G.is_abelian:
        return normally_generating_mask(G, comps)
    return _closure_mask_by_sets(G, comps, is_generating)


def normally_generating_codes(G: GroupTable, n: int, state_cap: int = DEFAULT_STATE_CAP) -> np.ndarray:
    """Sorted codes of all normally generating ``n``-tuples."""
    check_state_cap(G, n, state_cap)
    codes = np.arange(G.order**n, dtype=np.int64)
    mask = normally_generating_mask(G, decode(G, codes, n))
    return codes[mask]


def enumerate_normally_generating(G: GroupTable, n: int, state_cap: int = DEFAULT_STATE_CAP):
    """All normally generating ``n``-tuples in lexicographic order."""
    codes = normally_generating_codes(G, n, state_cap)
    return [tuple(row) for row in decode(G, codes, n).tolist()]


# vectorised move families: each yields (row index, neighbour components)


def _replace(comps, i, col):
    out = comps.copy()
    out[:, i] = col
    return out


def inversion_moves(G, comps):
    for i in range(comps.shape[1]):
        yield np.arange(len(comps)), _replace(comps, i, G.inv[comps[:, i]])


def left_multiplication_moves(G, comps):
    n = comps.shape[1]
    for i in range(n):
        for j in range(n):
            if j != i:
                yield np.arange(len(comps)), _replace(comps, i, G.mul[comps[:, j], comps[:, i]])


def conjugation_moves(G, comps):
    conj = G.conjugates_of(np.arange(G.order))  # conj[g, x] = x^g
    rows = np.arange(len(comps))
    for i in range(comps.shape[1]):
        for g in range(1, G.order):
            yield rows, _replace(comps, i, conj[g, comps[:, i]])


def m_moves(G, comps):
    """Right multiplication of ``s_i`` by the normal closure of the others.

    Closures are computed once per distinct set of other components.
    """
    n = comps.shape[1]
    cache: dict[bytes, np.ndarray] = {}
    for i in range(n):
        others = np.delete(comps, i, axis=1)
        keys = np.sort(others, axis=1)
        uniq, back = np.unique(keys, axis=0, return_inverse=True)
        back = back.ravel()
        order = np.argsort(back, kind="stable")
        bounds = np.searchsorted(back[order], np.arange(len(uniq) + 1))
        for u, key in enumerate(uniq):
            rows = order[bounds[u] : bounds[u + 1]]
            h = key.tobytes()
            K = cache.get(h)
            if K is None:
                K = normal_closure(G, key).elements[1:]
                cache[h] = K
            if K.size == 0 or rows.size == 0:
                continue
            src = np.repeat(rows, K.size)
            new = comps[src].copy()
            new[:, i] = G.mul[comps[rows, i][:, None], K[None, :]].ravel()
            yield src, new


def move_families(moves) -> tuple:
    from .graphs import MoveSet

    moves = MoveSet.parse(moves)
    if moves is MoveSet.NIELSEN:
        return (inversion_moves, left_multiplication_moves)
    if moves is MoveSet.AC:
        return (inversion_moves, left_multiplication_moves, conjugation_moves)
    if moves is MoveSet.M_PLUS_INVERSION:
        return (m_moves, inversion_moves)
    return (m_moves,)
