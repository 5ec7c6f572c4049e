"""Finite groups as explicit multiplication tables.

Elements are the integers ``0..N-1`` with ``0`` the identity.  Permutations act
on the right: ``(g*h)(x) = h(g(x))``.  Conjugation is ``g^h = h^-1 g h`` and the
commutator is ``[x, y] = x^-1 y^-1 x y``.
"""

from __future__ import annotations

import itertools
import re
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    InvalidPermutation,
    NotNormal,
    OrderCapExceeded,
    SearchBudgetExceeded,
    UnknownSpec,
)

DEFAULT_ORDER_CAP = 4096
EXHAUSTIVE_ASSOC_LIMIT = 512
LATTICE_ORDER_CAP = 512
SEARCH_TUPLE_BOUND = 4


def _readonly(a):
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


class GroupTable:
    """A finite group given by its multiplication and inverse tables.

    ``mul[x, y]`` is the id of ``x*y``; ``inv[x]`` the id of ``x^-1``.  The
    group laws are checked on construction, exhaustively up to order 512 and
    on ``10*N**2`` random triples above that.
    """

    def __init__(self, mul, inv=None, *, name="", element_names=None, perms=None, check=True):
        mul = np.asarray(mul)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
            raise ValueError(f"multiplication table must be square and non-empty, got {mul.shape}")
        n = mul.shape[0]
        dtype = np.int32 if n < 2**31 else np.int64
        mul = mul.astype(dtype, copy=False)
        if inv is None:
            inv = np.argmax(mul == 0, axis=1)
        self.mul = _readonly(mul)
        self.inv = _readonly(np.asarray(inv, dtype=dtype))
        self.name = name
        self.element_names = None if element_names is None else list(element_names)
        self.perms = None if perms is None else _readonly(np.asarray(perms, dtype=np.int64))
        if check:
            self._check_laws()

    identity = 0

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    def __len__(self):
        return self.order

    def __repr__(self):
        label = self.name or "GroupTable"
        return f"<{label} of order {self.order}>"

    def _check_laws(self):
        n = self.order
        mul, inv = self.mul, self.inv
        if mul.min() < 0 or mul.max() >= n:
            raise ValueError("multiplication table entries out of range")
        ar = np.arange(n)
        if not (np.array_equal(mul[0], ar) and np.array_equal(mul[:, 0], ar)):
            raise ValueError("element 0 is not a two-sided identity")
        if not (np.all(mul[ar, inv] == 0) and np.all(mul[inv, ar] == 0)):
            raise ValueError("inverse table is inconsistent")
        if n <= EXHAUSTIVE_ASSOC_LIMIT:
            for x in range(n):
                if not np.array_equal(mul[mul[x]], mul[x][mul]):
                    raise ValueError(f"associativity fails for x={x}")
        else:
            rng = np.random.default_rng(0)
            remaining = 10 * n * n
            while remaining:
                k = min(remaining, 1 << 20)
                x, y, z = rng.integers(0, n, size=(3, k))
                if not np.array_equal(mul[mul[x, y], z], mul[x, mul[y, z]]):
                    raise ValueError("associativity fails on a sampled triple")
                remaining -= k

    # element-level helpers

    def product(self, *xs: int) -> int:
        r = 0
        for x in xs:
            r = int(self.mul[r, x])
        return r

    def conjugate(self, x: int, g: int) -> int:
        """``x^g = g^-1 x g``."""
        return int(self.mul[self.mul[self.inv[g], x], g])

    def commutator(self, x: int, y: int) -> int:
        m, i = self.mul, self.inv
        return int(m[m[i[x], i[y]], m[x, y]])

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = int(self.inv[x]), -k
        r = 0
        for _ in range(k):
            r = int(self.mul[r, x])
        return r

    def element_name(self, x: int) -> str:
        if self.element_names is not None:
            return self.element_names[x]
        return str(x)

    def perm_id(self, perm: Sequence[int]) -> int:
        """Look up the id of a permutation (only for permutation-built groups)."""
        if self.perms is None:
            raise ValueError("group was not built from permutations")
        hit = np.flatnonzero(np.all(self.perms == np.asarray(perm), axis=1))
        if hit.size == 0:
            raise ValueError(f"permutation {list(perm)} is not in the group")
        return int(hit[0])

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        orders[0] = 1
        ar = np.arange(n)
        cur = ar.copy()
        k = 1
        while not orders.all():
            k += 1
            cur = self.mul[cur, ar]
            orders[(cur == 0) & (orders == 0)] = k
        return _readonly(orders)

    @cached_property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders))

    def conjugates_of(self, elems) -> np.ndarray:
        """Array ``c[g, j] = elems[j]^g`` over all ``g`` in the group."""
        elems = np.asarray(elems, dtype=np.int64)
        g = np.arange(self.order)
        return self.mul[self.mul[self.inv[:, None], elems[None, :]], g[:, None]]

    @cached_property
    def conjugacy_class_ids(self) -> np.ndarray:
        """Label each element with the least id in its conjugacy class."""
        labels = np.full(self.order, -1, dtype=np.int64)
        for x in range(self.order):
            if labels[x] < 0:
                labels[np.unique(self.conjugates_of([x]).ravel())] = x
        return _readonly(labels)


class SubgroupSet:
    """A subgroup of ``parent`` stored as a membership mask."""

    def __init__(self, parent: GroupTable, members, is_normal=None):
        members = np.asarray(members, dtype=bool)
        if members.shape != (parent.order,):
            raise ValueError("membership mask has the wrong length")
        self.parent = parent
        self.members = _readonly(members)
        if is_normal is not None:
            self.__dict__["is_normal"] = bool(is_normal)

    @cached_property
    def elements(self) -> np.ndarray:
        return _readonly(np.flatnonzero(self.members))

    @property
    def size(self) -> int:
        return int(self.elements.size)

    def __len__(self):
        return self.size

    def __contains__(self, x):
        return bool(self.members[x])

    def __iter__(self):
        return iter(int(x) for x in self.elements)

    def __eq__(self, other):
        if not isinstance(other, SubgroupSet):
            return NotImplemented
        return other.parent is self.parent and np.array_equal(self.members, other.members)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"SubgroupSet(size={self.size}, elements={self.elements.tolist()[:12]}{'...' if self.size > 12 else ''})"

    @cached_property
    def key(self) -> bytes:
        return np.packbits(self.members).tobytes()

    @cached_property
    def is_normal(self) -> bool:
        conj = self.parent.conjugates_of(self.elements)
        return bool(self.members[conj].all())

    def issubset(self, other: "SubgroupSet") -> bool:
        return bool(np.all(other.members[self.elements]))

    @property
    def is_trivial(self) -> bool:
        return self.size == 1

    @property
    def is_whole(self) -> bool:
        return self.size == self.parent.order

    def sort_key(self):
        return (self.size, tuple(self.elements.tolist()))


# construction


def _cycle_string(perm) -> str:
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(int(x))
            seen.add(int(x))
            x = perm[x]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def group_from_permutations(generators, degree=None, *, cap=DEFAULT_ORDER_CAP, name="") -> GroupTable:
    """Table of the permutation group generated by ``generators``.

    Generators are image lists on ``{0..d-1}``.  Ids follow breadth-first
    discovery from the identity, multiplying on the right by each generator in
    list order.
    """
    gens = [np.asarray(g, dtype=np.int64) for g in generators]
    if degree is None:
        degree = len(gens[0]) if gens else 1
    for g in gens:
        if g.shape != (degree,) or not np.array_equal(np.sort(g), np.arange(degree)):
            raise InvalidPermutation(f"not a bijection on {{0..{degree - 1}}}: {g.tolist()}")

    ident = tuple(range(degree))
    perms = [ident]
    index = {ident: 0}
    parent = [(-1, -1)]
    right = []  # right[s][a] = id of a*s
    frontier = 0
    right_rows: list[list[int]] = [[] for _ in gens]
    while frontier < len(perms):
        a = np.asarray(perms[frontier])
        for s, g in enumerate(gens):
            b = tuple(g[a].tolist())
            j = index.get(b)
            if j is None:
                j = len(perms)
                if j >= cap:
                    raise OrderCapExceeded(f"permutation group order exceeds cap {cap}")
                index[b] = j
                perms.append(b)
                parent.append((frontier, s))
            right_rows[s].append(j)
        frontier += 1
    n = len(perms)
    right = [np.asarray(r, dtype=np.int64) for r in right_rows]
    mul = np.empty((n, n), dtype=np.int32)
    mul[:, 0] = np.arange(n)
    for b in range(1, n):
        p, s = parent[b]
        mul[:, b] = right[s][mul[:, p]]
    names = [_cycle_string(p) for p in perms]
    return GroupTable(mul, name=name or f"perm(d={degree})", element_names=names, perms=np.asarray(perms))


def _abelian_table(dims, cap):
    dims = tuple(int(d) for d in dims)
    if any(d < 1 for d in dims):
        raise UnknownSpec(f"abelian factors must be positive, got {dims}")
    n = int(np.prod(dims)) if dims else 1
    if n > cap:
        raise OrderCapExceeded(f"order {n} exceeds cap {cap}")
    if not dims:
        return np.zeros((1, 1), dtype=np.int32), [()]
    coords = np.stack(np.unravel_index(np.arange(n), dims), axis=1)
    mod = np.asarray(dims)
    s = (coords[:, None, :] + coords[None, :, :]) % mod
    mul = np.ravel_multi_index(tuple(np.moveaxis(s, -1, 0)), dims)
    return mul, [tuple(c) for c in coords.tolist()]


def _dihedral_table(m):
    n = 2 * m
    ids = np.arange(n)
    k, e = ids % m, ids // m
    sign = np.where(e == 1, -1, 1)
    rot = (k[:, None] + sign[:, None] * k[None, :]) % m
    ref = e[:, None] ^ e[None, :]
    names = [("r^%d" % i if i else "1") if j == 0 else ("s" if i == 0 else "r^%ds" % i) for j in (0, 1) for i in range(m)]
    return rot + m * ref, names


def _quaternion8_table():
    # unit order 1, i, j, k; (sign, unit) products
    unit_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    # id = 2*unit + (1 if negative)
    mul = np.zeros((8, 8), dtype=np.int32)
    for a in range(8):
        for b in range(8):
            sa, ua = (-1 if a % 2 else 1), a // 2
            sb, ub = (-1 if b % 2 else 1), b // 2
            s, u = unit_mul[(ua, ub)]
            s *= sa * sb
            mul[a, b] = 2 * u + (1 if s < 0 else 0)
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return mul, names


def _heisenberg_table(p):
    n = p ** 3
    ids = np.arange(n)
    a, b, c = ids // (p * p), (ids // p) % p, ids % p
    na = (a[:, None] + a[None, :]) % p
    nb = (b[:, None] + b[None, :]) % p
    nc = (c[:, None] + c[None, :] + a[:, None] * b[None, :]) % p
    return na * p * p + nb * p + nc


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int):
    """``(p, k)`` with ``q = p**k``, or ``None`` if ``q`` is not a prime power."""
    ps = prime_factors(q) if q > 1 else []
    if len(ps) != 1:
        return None
    p, k = ps[0], 0
    while q > 1:
        q //= p
        k += 1
    return p, k


def _poly_mulmod(a, b, f, p):
    """Multiply coefficient lists (low degree first) modulo monic ``f`` and ``p``."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    k = len(f) - 1
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            for j in range(k + 1):
                prod[i - k + j] = (prod[i - k + j] - c * f[j]) % p
    return (prod + [0] * k)[:k]


def _is_irreducible(f, p):
    k = len(f) - 1
    for deg in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            g = list(tail) + [1]
            # remainder of f by monic g
            r = list(f)
            for i in range(len(r) - 1, deg - 1, -1):
                c = r[i]
                if c:
                    for j in range(deg + 1):
                        r[i - deg + j] = (r[i - deg + j] - c * g[j]) % p
            if not any(r[:deg]):
                return False
    return True


def finite_field_tables(q: int):
    """Addition and multiplication tables of GF(q).

    Elements are integers whose base-p digits are polynomial coefficients
    modulo the lexicographically least monic irreducible of degree ``k``.
    """
    pk = prime_power(q)
    if pk is None:
        raise UnknownSpec(f"{q} is not a prime power")
    p, k = pk
    modulus = None
    for tail in itertools.product(range(p), repeat=k):
        f = list(reversed(tail)) + [1]
        if _is_irreducible(f, p):
            modulus = f
            break
    digits = [[(x // p**i) % p for i in range(k)] for x in range(q)]
    weights = [p**i for i in range(k)]
    add = np.zeros((q, q), dtype=np.int64)
    mulf = np.zeros((q, q), dtype=np.int64)
    for x in range(q):
        for y in range(q):
            add[x, y] = sum(((dx + dy) % p) * w for dx, dy, w in zip(digits[x], digits[y], weights))
            mulf[x, y] = sum(c * w for c, w in zip(_poly_mulmod(digits[x], digits[y], modulus, p), weights))
    return add, mulf


def _affine_table(q):
    add, mulf = finite_field_tables(q)
    units = list(range(1, q))
    # ids: (index of a among units in increasing order) * q + b; the map is x -> a x + b
    n = len(units) * q
    ids = np.arange(n)
    a = np.asarray(units)[ids // q]
    b = ids % q
    unit_index = {u: i for i, u in enumerate(units)}
    uidx = np.zeros(q, dtype=np.int64)
    for u, i in unit_index.items():
        uidx[u] = i
    # (g*h)(x) = h(g(x)) = a_h a_g x + a_h b_g + b_h
    new_a = mulf[a[None, :], a[:, None]]
    new_b = add[mulf[a[None, :], b[:, None]], b[None, :]]
    names = [f"x->{int(ai)}x+{int(bi)}" for ai, bi in zip(a, b)]
    return uidx[new_a] * q + new_b, names


_BUILTIN_RE = re.compile(r"^\s*([a-z_0-9]+?)\s*(?:\(\s*([^)]*)\))?\s*$")


def builtin_group(name, *params, cap=DEFAULT_ORDER_CAP) -> GroupTable:
    """One of the catalog groups.

    ``name`` is ``cyclic``, ``abelian``, ``dihedral``, ``quaternion8``,
    ``symmetric``, ``heisenberg`` or ``affine``; it may also be written with
    its parameters inline, as in ``builtin_group("dihedral(3)")``.

    Numbering:

    * ``abelian(d1, .., dk)``: mixed radix on coordinate vectors, last
      coordinate fastest, so ids follow lexicographic coordinate order;
      ``cyclic(m)`` is ``abelian(m)``.
    * ``dihedral(m)`` (order ``2m``): id ``k + m*e`` is ``r^k s^e``.
    * ``quaternion8``: ``1, -1, i, -i, j, -j, k, -k``.
    * ``symmetric(m)``: discovery order from generators ``(0 1)``, ``(0 1 .. m-1)``.
    * ``heisenberg(p)``: unitriangular ``(a, b, c)`` with id ``a p^2 + b p + c``
      and ``(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')``.
    * ``affine(q)``: ``x -> a x + b`` with id ``index(a)*q + b``, units listed
      in increasing field-element order.
    """
    if not params and "(" in name:
        m = _BUILTIN_RE.match(name)
        if not m:
            raise UnknownSpec(f"cannot parse builtin spec {name!r}")
        name = m.group(1)
        raw = m.group(2) or ""
        try:
            params = tuple(int(x) for x in raw.replace(" ", "").split(",") if x)
        except ValueError:
            raise UnknownSpec(f"non-integer parameter in {raw!r}") from None
    name = name.strip().lower()
    params = tuple(int(x) for x in params)
    label = f"{name}({','.join(map(str, params))})" if params else name

    def need(count):
        if len(params) != count:
            raise UnknownSpec(f"{name} takes {count} parameter(s), got {len(params)}")

    if name in ("cyclic", "abelian"):
        if name == "cyclic":
            need(1)
        mul, coords = _abelian_table(params, cap)
        names = [str(c[0]) if len(c) == 1 else str(c) for c in coords]
        return GroupTable(mul, name=label, element_names=names)
    if name == "dihedral":
        need(1)
        m = params[0]
        if m < 1:
            raise UnknownSpec("dihedral(m) needs m >= 1")
        if 2 * m > cap:
            raise OrderCapExceeded(f"order {2 * m} exceeds cap {cap}")
        mul, names = _dihedral_table(m)
        return GroupTable(mul, name=label, element_names=names)
    if name == "quaternion8":
        need(0)
        mul, names = _quaternion8_table()
        return GroupTable(mul, name=label, element_names=names)
    if name == "symmetric":
        need(1)
        m = params[0]
        if not 1 <= m <= 6:
            raise UnknownSpec("symmetric(m) is limited to 1 <= m <= 6")
        gens = []
        if m >= 2:
            t = list(range(m))
            t[0], t[1] = 1, 0
            gens.append(t)
            gens.append([(x + 1) % m for x in range(m)])
        return group_from_permutations(gens, degree=m, cap=cap, name=label)
    if name == "heisenberg":
        need(1)
        p = params[0]
        if p < 2:
            raise UnknownSpec("heisenberg(p) needs p >= 2")
        if p**3 > cap:
            raise OrderCapExceeded(f"order {p**3} exceeds cap {cap}")
        return GroupTable(_heisenberg_table(p), name=label)
    if name == "affine":
        need(1)
        q = params[0]
        if q > 32 or prime_power(q) is None:
            raise UnknownSpec("affine(q) needs a prime power q <= 32")
        if q * (q - 1) > cap:
            raise OrderCapExceeded(f"order {q * (q - 1)} exceeds cap {cap}")
        mul, names = _affine_table(q)
        return GroupTable(mul, name=label, element_names=names)
    raise UnknownSpec(f"unknown builtin group {name!r}")


def trivial_group() -> GroupTable:
    return GroupTable(np.zeros((1, 1), dtype=np.int32), name="trivial")


# subgroups


def _as_ids(G: GroupTable, seed) -> np.ndarray:
    ids = np.unique(np.asarray(list(seed) if not isinstance(seed, np.ndarray) else seed, dtype=np.int64))
    if ids.size and (ids[0] < 0 or ids[-1] >= G.order):
        raise ValueError("seed contains ids outside the group")
    return ids


def _closure_mask(G: GroupTable, gens: np.ndarray) -> np.ndarray:
    members = np.zeros(G.order, dtype=bool)
    members[0] = True
    gens = gens[gens != 0]
    frontier = np.array([0])
    while frontier.size and gens.size:
        new = np.unique(G.mul[np.ix_(frontier, gens)])
        new = new[~members[new]]
        members[new] = True
        frontier = new
    return members


def subgroup_generated(G: GroupTable, seed: Iterable[int]) -> SubgroupSet:
    """Least subgroup containing ``seed``."""
    return SubgroupSet(G, _closure_mask(G, _as_ids(G, seed)))


def normal_closure(G: GroupTable, seed: Iterable[int]) -> SubgroupSet:
    """Least normal subgroup containing ``seed``: generated by all conjugates."""
    ids = _as_ids(G, seed)
    ids = ids[ids != 0]
    if ids.size == 0:
        return SubgroupSet(G, np.eye(1, G.order, dtype=bool)[0], is_normal=True)
    conj = np.unique(G.conjugates_of(ids))
    return SubgroupSet(G, _closure_mask(G, conj), is_normal=True)


def whole_group(G: GroupTable) -> SubgroupSet:
    return SubgroupSet(G, np.ones(G.order, dtype=bool), is_normal=True)


def trivial_subgroup(G: GroupTable) -> SubgroupSet:
    return SubgroupSet(G, np.eye(1, G.order, dtype=bool)[0], is_normal=True)


def quotient(G: GroupTable, N: SubgroupSet):
    """Quotient table and projection array.

    Cosets are numbered in order of their least element, so the identity
    coset is 0.
    """
    if N.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    if not N.is_normal:
        raise NotNormal("quotient requires a normal subgroup")
    elems = N.elements
    proj = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for x in range(G.order):
        if proj[x] < 0:
            proj[G.mul[x, elems]] = len(reps)
            reps.append(x)
    reps = np.asarray(reps)
    qmul = proj[G.mul[np.ix_(reps, reps)]]
    name = f"{G.name}/N{N.size}" if G.name else ""
    Q = GroupTable(qmul, name=name)
    return Q, _readonly(proj)


def commutator_subgroup(G: GroupTable, H: SubgroupSet | None = None) -> SubgroupSet:
    """``[H, H]`` as the normal closure in ``G`` of all commutators of ``H``."""
    h = np.arange(G.order) if H is None else H.elements
    m, i = G.mul, G.inv
    comms = m[m[i[h][:, None], i[h][None, :]], m[h[:, None], h[None, :]]]
    return normal_closure(G, np.unique(comms))


def derived_series(G: GroupTable) -> list[SubgroupSet]:
    series = [whole_group(G)]
    while True:
        nxt = commutator_subgroup(G, series[-1])
        if nxt.size == series[-1].size:
            return series
        series.append(nxt)


def is_soluble(G: GroupTable) -> bool:
    return derived_series(G)[-1].is_trivial


def solubility_length(G: GroupTable) -> int | None:
    """Number of strict steps in the derived series, or ``None`` if not soluble."""
    s = derived_series(G)
    return len(s) - 1 if s[-1].is_trivial else None


def abelianization(G: GroupTable):
    Q, proj = quotient(G, commutator_subgroup(G))
    Q.name = f"{G.name}_ab" if G.name else ""
    return Q, proj


def _check_lattice_cap(G):
    if G.order > LATTICE_ORDER_CAP:
        raise OrderCapExceeded(f"normal subgroup enumeration needs order <= {LATTICE_ORDER_CAP}")


def normal_subgroups(G: GroupTable) -> list[SubgroupSet]:
    """All normal subgroups, ordered by size then by sorted element list.

    Each normal subgroup is the join of the normal closures of its elements,
    so closing the element closures under pairwise joins finds them all.
    """
    cached = G.__dict__.get("_normal_subgroups")
    if cached is not None:
        return list(cached)
    _check_lattice_cap(G)
    atoms = {}
    for g in range(G.order):
        c = normal_closure(G, [g])
        atoms.setdefault(c.key, c)
    atoms = list(atoms.values())
    found = {a.key: a for a in atoms}
    queue = list(atoms)
    while queue:
        X = queue.pop()
        for A in atoms:
            if A.issubset(X):
                continue
            prod = np.unique(G.mul[np.ix_(X.elements, A.elements)])
            mask = np.zeros(G.order, dtype=bool)
            mask[prod] = True
            J = SubgroupSet(G, mask, is_normal=True)
            if J.key not in found:
                found[J.key] = J
                queue.append(J)
    result = sorted(found.values(), key=SubgroupSet.sort_key)
    G.__dict__["_normal_subgroups"] = tuple(result)
    return list(result)


def maximal_normal_subgroups(G: GroupTable) -> list[SubgroupSet]:
    """Proper normal subgroups maximal among proper normal subgroups."""
    proper = [N for N in normal_subgroups(G) if not N.is_whole]
    return [N for N in proper if not any(M.size > N.size and N.issubset(M) for M in proper)]


def is_simple(G: GroupTable) -> bool:
    return G.order > 1 and len(normal_subgroups(G)) == 2


def w_subgroup(G: GroupTable) -> SubgroupSet:
    """Intersection of the maximal normal subgroups, or ``G`` if there are none.

    A normal subgroup is maximal exactly when its quotient is simple.
    """
    mask = np.ones(G.order, dtype=bool)
    for N in maximal_normal_subgroups(G):
        mask &= N.members
    return SubgroupSet(G, mask, is_normal=True)


# rank and weight


def _cyclic_representatives(G: GroupTable) -> list[int]:
    seen = set()
    reps = []
    for x in range(1, G.order):
        key = subgroup_generated(G, [x]).key
        if key not in seen:
            seen.add(key)
            reps.append(x)
    return reps


def _check_search_cap(G):
    if G.order > LATTICE_ORDER_CAP:
        raise OrderCapExceeded(f"exhaustive rank/weight search needs order <= {LATTICE_ORDER_CAP}")


def rank(G: GroupTable, max_size: int = SEARCH_TUPLE_BOUND) -> int:
    """Least number of generators, by exhaustive search over subsets.

    Only one generator per cyclic subgroup is tried, which does not change
    the answer.
    """
    if G.order == 1:
        return 0
    _check_search_cap(G)
    reps = _cyclic_representatives(G)
    for k in range(1, max_size + 1):
        for combo in itertools.combinations(reps, k):
            if _closure_mask(G, np.asarray(combo)).all():
                return k
    raise SearchBudgetExceeded(f"rank exceeds {max_size}")


def weight(G: GroupTable, max_size: int = SEARCH_TUPLE_BOUND) -> int:
    """Least number of normal generators.

    A set normally generates ``G`` exactly when no maximal normal subgroup
    contains it, so elements are grouped by which maximal normal subgroups
    contain them and the search runs over those groups.
    """
    if G.order == 1:
        return 0
    _check_search_cap(G)
    maximal = maximal_normal_subgroups(G)
    signatures = sorted({frozenset(j for j, M in enumerate(maximal) if g in M) for g in range(G.order)}, key=sorted)
    for k in range(1, max_size + 1):
        for combo in itertools.combinations(signatures, k):
            if not frozenset.intersection(*combo):
                return k
    raise SearchBudgetExceeded(f"weight exceeds {max_size}")
