"""Iterated regular wreath products of cyclic groups with coprime orders."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

import numpy as np

from .abelian import invariant_factors
from .errors import NotCoprime, OrderCapExceeded
from .groups import DEFAULT_ORDER_CAP, GroupTable, abelianization, builtin_group, weight


@dataclass(frozen=True)
class WreathSpec:
    """Orders ``(m1, .., mk)``, nested left to right: ``G_i = G_(i-1) wr C_(m_i)``."""

    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(m) for m in self.orders)
        object.__setattr__(self, "orders", orders)
        if not orders or any(m < 2 for m in orders):
            raise ValueError("wreath orders must be integers >= 2")
        for i, a in enumerate(orders):
            for b in orders[i + 1 :]:
                if gcd(a, b) != 1:
                    raise NotCoprime(f"orders {a} and {b} are not coprime")

    def stage_orders(self) -> list[int]:
        out = [self.orders[0]]
        for m in self.orders[1:]:
            out.append(out[-1] ** m * m)
        return out

    @property
    def order(self) -> int:
        return self.stage_orders()[-1]

    @property
    def label(self) -> str:
        return "wreath(" + ",".join(map(str, self.orders)) + ")"


def _wreath_step(H: GroupTable, m: int, name: str) -> GroupTable:
    """``H wr C_m`` with elements ``(f, c)``, ``f: Z/m -> H``.

    Product ``(f, c)(f', c') = (f * (c . f'), c + c')`` where
    ``(c . f')(x) = f'(x - c)``.  Id is ``c + m * sum_x f(x) |H|^x``.
    """
    h = H.order
    n = h**m * m
    ids = np.arange(n, dtype=np.int64)
    c = ids % m
    rest = ids // m
    F = np.stack([(rest // h**x) % h for x in range(m)], axis=1)  # F[e, x] = f(x)
    weights = h ** np.arange(m, dtype=np.int64)
    xs = np.arange(m)
    mul = np.empty((n, n), dtype=np.int32)
    for a in range(n):
        shifted = F[:, (xs - c[a]) % m]  # (c_a . f_b)(x) for every b
        newF = H.mul[F[a][None, :], shifted]
        mul[a] = (newF @ weights) * m + (c[a] + c) % m
    return GroupTable(mul, name=name)


def _stage_element(prev_element: int, m: int) -> int:
    """Id of ``f c`` with ``f(0) = prev_element``, ``f`` trivial elsewhere, ``c = 1``."""
    return prev_element * m + 1 % m


def wreath_cyclic(spec, *, cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """Table of ``C_m1 wr C_m2 wr ... wr C_mk`` (left nested, regular action)."""
    if not isinstance(spec, WreathSpec):
        spec = WreathSpec(tuple(spec))
    if spec.order > cap:
        raise OrderCapExceeded(f"order {spec.order} exceeds cap {cap}")
    G = builtin_group("cyclic", spec.orders[0])
    for i, m in enumerate(spec.orders[1:], start=2):
        G = _wreath_step(G, m, "wreath(" + ",".join(map(str, spec.orders[:i])) + ")")
    G.name = spec.label
    A, _ = abelianization(G)
    inv, _ = invariant_factors(A)
    if inv.factors != (prod(spec.orders),):
        raise AssertionError(f"abelianization {inv.factors} is not cyclic of order {prod(spec.orders)}")
    return G


def distinguished_element(spec) -> int:
    """The element ``x_k``: ``x_1 = c_1`` and ``x_i = f_i c_i`` with ``f_i(0) = x_(i-1)``.

    The identity coordinate of ``C_m`` is ``0`` in this encoding.
    """
    if not isinstance(spec, WreathSpec):
        spec = WreathSpec(tuple(spec))
    x = 1
    for m in spec.orders[1:]:
        x = _stage_element(x, m)
    return x


@dataclass
class WreathReport:
    orders: tuple[int, ...]
    group_order: int
    abelianization_order: int
    x_k: int
    x_order: int
    centralizer_size: int
    self_centralizing: bool
    class_size: int
    lifts: int
    lifts_conjugate: bool
    weight: int

    @property
    def order_matches(self) -> bool:
        return self.x_order == self.abelianization_order

    @property
    def class_size_matches(self) -> bool:
        return self.class_size * self.abelianization_order == self.group_order

    @property
    def passed(self) -> bool:
        return (self.order_matches and self.self_centralizing and self.lifts_conjugate
                and self.weight == 1 and self.class_size_matches)

    def as_dict(self):
        d = dict(self.__dict__)
        d["orders"] = list(self.orders)
        d.update(order_matches=self.order_matches, class_size_matches=self.class_size_matches,
                 **{"pass": self.passed})
        return d


def wreath_weight_one_verify(spec, *, cap: int = DEFAULT_ORDER_CAP) -> WreathReport:
    """Verify that ``x_k`` is a weight element whose lifts are all conjugate.

    Checks: ``x_k`` has order ``|G_ab|``; its centralizer is ``<x_k>``; every
    element of ``x_k [G, G]`` is conjugate to ``x_k``; ``weight(G) = 1``.
    """
    if not isinstance(spec, WreathSpec):
        spec = WreathSpec(tuple(spec))
    G = wreath_cyclic(spec, cap=cap)
    A, proj = abelianization(G)
    x = distinguished_element(spec)
    x_order = int(G.element_orders[x])
    centralizer = np.flatnonzero(G.mul[x] == G.mul[:, x])
    powers = {G.power(x, e) for e in range(x_order)}
    conj_class = set(G.conjugates_of([x])[:, 0].tolist())
    coset = set(np.flatnonzero(proj == proj[x]).tolist())
    return WreathReport(
        orders=spec.orders,
        group_order=G.order,
        abelianization_order=A.order,
        x_k=x,
        x_order=x_order,
        centralizer_size=int(centralizer.size),
        self_centralizing=set(centralizer.tolist()) == powers,
        class_size=len(conj_class),
        lifts=len(coset),
        lifts_conjugate=coset <= conj_class,
        weight=weight(G),
    )
