"""Invariant factors and Nielsen classes of generating vectors of abelian groups.

For ``A = Z_{d1} x ... x Z_{dk}`` (``d1 != 1``, ``d_i | d_{i+1}``) every
generating ``n``-vector with ``n > k`` is Nielsen equivalent to every other.
For ``n = k`` the class is determined by the determinant of the coordinate
matrix taken mod ``d1``, up to sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import LengthMismatch, NotAbelian, NotGenerating, VectorTooShort
from .groups import GroupTable, prime_factors, quotient, subgroup_generated

# integer matrices are plain lists of lists of Python ints


def identity_matrix(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a:
        return []
    cols = len(b[0]) if b else 0
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(cols)] for i in range(len(a))]


def det(m) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def smith_normal_form(M):
    """Return ``(U, D, V)`` with ``U M V = D`` and ``U``, ``V`` unimodular.

    ``D`` is diagonal with non-negative entries and ``d_i | d_{i+1}``.  The
    pivot is always the smallest nonzero absolute value in the remaining
    block, ties broken by row-major position.
    """
    D = [list(map(int, row)) for row in M]
    rows = len(D)
    cols = len(D[0]) if rows else 0
    U = identity_matrix(rows)
    V = identity_matrix(cols)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        D[dst] = [x + q * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    v = abs(D[i][j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
            if best is None:
                return U, D, V
            _, i, j = best
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            p = D[t][t]
            for i in range(t + 1, rows):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
            for j in range(t + 1, cols):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
            if any(D[i][t] for i in range(t + 1, rows)) or any(D[t][j] for j in range(t + 1, cols)):
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return U, D, V


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors ``d1 | d2 | ... | dk``; ``0`` stands for ``Z``."""

    factors: tuple[int, ...]

    def __post_init__(self):
        f = tuple(int(d) for d in self.factors)
        object.__setattr__(self, "factors", f)
        if any(d < 0 for d in f):
            raise ValueError("invariant factors must be non-negative")
        if f and f[0] == 1:
            raise ValueError("d1 must not be 1")
        zeros = [i for i, d in enumerate(f) if d == 0]
        if zeros and zeros[0] != len(f) - len(zeros):
            raise ValueError("infinite factors must come last")
        finite = [d for d in f if d]
        if any(b % a for a, b in zip(finite, finite[1:])):
            raise ValueError(f"factors {f} do not form a divisibility chain")

    @property
    def k(self) -> int:
        return len(self.factors)

    @property
    def d1(self) -> int | None:
        return self.factors[0] if self.factors else None

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


def euler_phi_ext(d: int) -> int:
    """Euler's totient with the convention ``phi(0) = 2``."""
    if d < 0:
        raise ValueError("d must be non-negative")
    if d == 0:
        return 2
    result = d
    for p in prime_factors(d):
        result = result // p * (p - 1)
    return result


def class_count(inv, n: int) -> int:
    """Number of Nielsen classes of generating ``n``-vectors."""
    factors = tuple(inv)
    k = len(factors)
    if n < k:
        raise VectorTooShort(f"n={n} is smaller than the number of invariant factors {k}")
    if n > k or k == 0:
        return 1
    return max(euler_phi_ext(factors[0]) // 2, 1)


def _coordinate_table(A: GroupTable, basis, factors):
    elems = np.zeros(1, dtype=np.int64)
    for b, d in zip(basis, factors):
        powers = np.zeros(d, dtype=np.int64)
        for e in range(1, d):
            powers[e] = A.mul[powers[e - 1], b]
        elems = A.mul[elems[:, None], powers[None, :]].ravel()
    if elems.size != A.order or np.unique(elems).size != A.order:
        return None
    coords = np.zeros((A.order, len(factors)), dtype=np.int64)
    if factors:
        coords[elems] = np.stack(np.unravel_index(np.arange(A.order), tuple(factors)), axis=1)
    return coords


def invariant_factors(A: GroupTable):
    """Invariant factors of a finite abelian group and a matching basis.

    The last basis element is the first element of maximal order; the rest
    lift a basis of the quotient by its cyclic subgroup, each lift chosen with
    the same order as its image so that the lifts span a complement.
    """
    cached = A.__dict__.get("_invariant_basis")
    if cached is not None:
        return cached
    if not A.is_abelian:
        raise NotAbelian(f"{A!r} is not abelian")
    if A.order == 1:
        result = (AbelianInvariants(()), [])
    else:
        orders = A.element_orders
        b = int(np.argmax(orders))
        Q, proj = quotient(A, subgroup_generated(A, [b]))
        q_inv, q_basis = invariant_factors(Q)
        lifts = []
        for q in q_basis:
            target = Q.element_orders[q]
            fibre = np.flatnonzero(proj == q)
            lifts.append(int(fibre[np.argmax(orders[fibre] == target)]))
            if orders[lifts[-1]] != target:
                raise AssertionError("no lift of matching order; maximal-order element not complemented")
        factors = tuple(q_inv.factors) + (int(orders[b]),)
        basis = lifts + [b]
        result = (AbelianInvariants(factors), basis)
    coords = _coordinate_table(A, result[1], result[0].factors)
    if coords is None:
        raise AssertionError("basis coordinate map is not a bijection")
    A.__dict__["_invariant_basis"] = result
    A.__dict__["_coordinates"] = coords
    return result


def coordinates(A: GroupTable) -> np.ndarray:
    """``coords[x]`` is the coordinate vector of ``x`` in the invariant-factor basis."""
    invariant_factors(A)
    return A.__dict__["_coordinates"]


@dataclass(frozen=True)
class NielsenClass:
    """Nielsen class label of a generating vector; ``delta is None`` marks the single class."""

    invariants: AbelianInvariants
    n: int
    delta: int | None

    @property
    def single_class(self) -> bool:
        return self.delta is None

    def as_dict(self):
        return {
            "invariants": list(self.invariants.factors),
            "n": self.n,
            "delta": "single-class" if self.delta is None else self.delta,
        }


def canonical_delta(delta: int, d1: int) -> int:
    """Smaller of ``delta`` and ``-delta`` mod ``d1`` (``|delta|`` when ``d1 = 0``)."""
    if d1 == 0:
        return abs(delta)
    r = delta % d1
    return min(r, d1 - r) if r else 0


def _check_generating(A, tup):
    if not subgroup_generated(A, tup).is_whole:
        raise NotGenerating(f"{tuple(tup)} does not generate {A!r}")


def nielsen_class(A: GroupTable, tup, *, check: bool = True) -> NielsenClass:
    """Class label of a generating vector; ``check=False`` trusts that it generates."""
    tup = tuple(int(x) for x in tup)
    inv, _ = invariant_factors(A)
    n, k = len(tup), inv.k
    if n < k:
        raise VectorTooShort(f"a generating vector needs at least {k} components")
    if check:
        _check_generating(A, tup)
    if n > k or k == 0:
        return NielsenClass(inv, n, None)
    d1 = inv.d1
    coords = coordinates(A)
    rows = [[int(c) % d1 for c in coords[x]] for x in tup]
    return NielsenClass(inv, n, canonical_delta(det(rows), d1))


def nielsen_equivalent(A: GroupTable, u, v) -> bool:
    if len(u) != len(v):
        raise LengthMismatch("vectors have different lengths")
    return nielsen_class(A, u) == nielsen_class(A, v)


def class_deltas(d1: int) -> list[int]:
    """Canonical delta labels of the Nielsen classes of generating k-vectors."""
    if d1 <= 2:
        return [1]
    return [d for d in range(1, d1 // 2 + 1) if gcd(d, d1) == 1]


def class_representatives(A: GroupTable, n: int) -> list[tuple[int, ...]]:
    """One vector ``(delta e1, e2, .., ek, 0, .., 0)`` per Nielsen class."""
    inv, basis = invariant_factors(A)
    k = inv.k
    if n < k:
        raise VectorTooShort(f"n={n} is smaller than {k}")
    pad = (0,) * (n - k)
    if n > k or k == 0:
        return [tuple(basis) + pad]
    return [(A.power(basis[0], d),) + tuple(basis[1:]) + pad for d in class_deltas(inv.d1)]
