"""Exact unit-group arithmetic for coessentiality of ``R x| C -> (R x| C)_ab``.

The abelianization of ``G = R x|_alpha C`` is coessential iff the unit map
``R^x -> R_C^x`` is surjective, where ``R_C = R / (1 - alpha) R``.  Everything
here decides that map by enumeration over exact integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .abelian import det, euler_phi_ext
from .errors import AlphaNotUnit, NotCoprime, NotPrimePower, SizeCapExceeded
from .groups import prime_factors, prime_power

FINITE_RING_CAP = 10**6


@dataclass(frozen=True)
class UnitSubgroup:
    modulus: int
    generators: tuple[int, ...]
    members: tuple[int, ...]

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x % self.modulus in self.members if self.modulus > 1 else True


def unit_subgroup_mod(m: int, gens) -> UnitSubgroup:
    """Multiplicative closure of ``gens`` in ``(Z/m)^x``."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return UnitSubgroup(1, tuple(0 for _ in gens), (0,))
    residues = tuple(g % m for g in gens)
    for g, r in zip(gens, residues):
        if gcd(r, m) != 1:
            raise NotCoprime(f"{g} is not coprime to {m}")
    members = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for x in frontier:
            for r in residues:
                y = x * r % m
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return UnitSubgroup(m, residues, tuple(sorted(members)))


def trivial_unit_target(m: int) -> bool:
    """``(Z/m)^x`` is contained in ``{1, -1}``, i.e. ``m`` is one of 0, 1, 2, 3, 4, 6."""
    return euler_phi_ext(m) <= 2


@dataclass
class CoessentialityCertificate:
    n: int
    modulus: int
    verdict: str  # "surjective", "not-surjective" or "trivial-target"
    image: tuple[int, ...]
    target_order: int
    witness: int | None = None
    prime_power: tuple[int, int] | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def surjective(self) -> bool:
        return self.verdict != "not-surjective"

    @property
    def infinite_recalcitrance(self) -> bool:
        return not self.surjective

    def as_dict(self):
        return {
            "n": self.n,
            "modulus": self.modulus,
            "verdict": self.verdict,
            "surjective": self.surjective,
            "image": list(self.image),
            "image_order": len(self.image),
            "target_order": self.target_order,
            "witness": self.witness,
            "infinite_recalcitrance": self.infinite_recalcitrance,
            "prime_power": None if self.prime_power is None else list(self.prime_power),
            "notes": list(self.notes),
        }


def bs_coessential(n: int) -> CoessentialityCertificate:
    """Decide surjectivity of ``Z[1/n]^x -> (Z/(n-1))^x`` for ``BS(1, n)``.

    The units of ``Z[1/n]`` are generated by -1 and the primes dividing
    ``n``; their image is enumerated and compared with ``phi(n - 1)``.  When
    the map is not surjective the abelianization of ``BS(1, n)`` is not
    coessential and some normally generating pair has infinite
    recalcitrance.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    m = n - 1
    image = unit_subgroup_mod(m, [-1] + prime_factors(n))
    phi = euler_phi_ext(m)
    pp = prime_power(n)
    cert = CoessentialityCertificate(n, m, "surjective", image.members, phi, prime_power=pp)
    if trivial_unit_target(m):
        cert.verdict = "trivial-target"
    elif len(image) != phi:
        cert.verdict = "not-surjective"
        cert.witness = next(u for u in range(1, m) if gcd(u, m) == 1 and u not in image.members)
    if pp is not None and n >= 11:
        p, d = pp
        if cert.surjective:
            cert.notes.append(
                f"n = {p}^{d} >= 11 but enumeration finds a surjective unit map "
                f"(phi({m}) = {phi}, 2d = {2 * d})"
            )
        if pow(p, d, m) != 1 % m:
            raise AssertionError("p^d is not 1 modulo n - 1")
    return cert


def bs_scan(lo: int, hi: int) -> list[CoessentialityCertificate]:
    return [bs_coessential(n) for n in range(lo, hi + 1)]


# integer polynomials: coefficient lists, lowest degree first


def _trim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a or [0]


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_divmod(a, b):
    """Division by a polynomial with leading coefficient +-1."""
    a, b = _trim(a), _trim(b)
    lead = b[-1]
    if lead not in (1, -1):
        raise ValueError("divisor must be monic up to sign")
    q = [0] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    for i in range(len(a) - len(b), -1, -1):
        c = r[i + len(b) - 1] * lead
        q[i] = c
        if c:
            for j, y in enumerate(b):
                r[i + j] -= c * y
    return _trim(q), _trim(r[: len(b) - 1] or [0])


def poly_eval(a, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


_CYCLOTOMIC: dict[int, list[int]] = {}


def cyclotomic_poly(n: int) -> list[int]:
    """``Phi_n`` from ``x^n - 1 = prod_{d | n} Phi_d``."""
    if n < 1:
        raise ValueError("n must be positive")
    if n not in _CYCLOTOMIC:
        num = [-1] + [0] * (n - 1) + [1]
        for d in range(1, n):
            if n % d == 0:
                num, r = poly_divmod(num, cyclotomic_poly(d))
                if any(r):
                    raise AssertionError("cyclotomic recurrence left a remainder")
        _CYCLOTOMIC[n] = num
    return list(_CYCLOTOMIC[n])


def phi_at_1(n: int) -> int:
    """``Phi_n(1)``: ``p`` when ``n`` is a power of the prime ``p``, else 1."""
    if n < 2:
        raise ValueError("n must be at least 2")
    value = poly_eval(cyclotomic_poly(n), 1)
    pp = prime_power(n)
    expected = pp[0] if pp else 1
    if value != expected:
        raise AssertionError(f"Phi_{n}(1) = {value}, expected {expected}")
    return value


def resultant(f, g) -> int:
    """Resultant via the determinant of the Sylvester matrix."""
    f, g = _trim(f), _trim(g)
    m, n = len(f) - 1, len(g) - 1
    if m == 0 and n == 0:
        return 1
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    rows = []
    hi_f, hi_g = list(reversed(f)), list(reversed(g))
    for i in range(n):
        rows.append([0] * i + hi_f + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + hi_g + [0] * (size - n - 1 - i))
    return det(rows)


@dataclass(frozen=True)
class CyclotomicElement:
    """Element of ``Z[zeta_n]`` as a polynomial of degree below ``phi(n)``."""

    index: int
    coefficients: tuple[int, ...]

    @classmethod
    def reduce(cls, n: int, poly) -> "CyclotomicElement":
        _, r = poly_divmod(poly, cyclotomic_poly(n))
        return cls(n, tuple(r))

    def __mul__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        return CyclotomicElement.reduce(self.index, poly_mul(self.coefficients, other.coefficients))

    def norm(self) -> int:
        """Absolute norm, the resultant with ``Phi_n``; a unit iff it is +-1."""
        return resultant(cyclotomic_poly(self.index), list(self.coefficients))


@dataclass(frozen=True)
class XiCheck:
    n: int
    a: int
    element: CyclotomicElement
    resultant: int
    is_unit: bool
    residue: int
    modulus: int

    def as_dict(self):
        return {"n": self.n, "a": self.a, "xi": list(self.element.coefficients),
                "resultant": self.resultant, "is_unit": self.is_unit,
                "residue": self.residue, "phi_n_at_1": self.modulus}


def xi_unit_check(n: int, a: int) -> XiCheck:
    """Check that ``(1 - zeta^a)/(1 - zeta) = 1 + x + ... + x^(a-1)`` is a unit.

    Also returns its value at ``x = 1`` reduced mod ``Phi_n(1)``, which must
    be ``a`` mod ``Phi_n(1)``.
    """
    if n < 2 or prime_power(n) is None:
        raise NotPrimePower(f"{n} is not a prime power")
    if gcd(a, n) != 1:
        raise NotCoprime(f"{a} is not coprime to {n}")
    a_red = a % n
    xi = CyclotomicElement.reduce(n, [1] * a_red)
    res = xi.norm()
    mod = phi_at_1(n)
    residue = poly_eval(list(xi.coefficients), 1) % mod
    if residue != a % mod:
        raise AssertionError(f"xi_{a} is not congruent to {a} mod {mod}")
    return XiCheck(n, a, xi, res, abs(res) == 1, residue, mod)


@dataclass(frozen=True)
class LaurentConstant:
    """The constant Laurent polynomial ``u`` over ``Z/m`` and its inverse."""

    modulus: int
    constant: int
    inverse: int

    def evaluate(self, x=1) -> int:
        return self.constant % self.modulus


def laurent_unit_lift(m: int, u: int) -> LaurentConstant:
    """Lift of a unit of ``Z/m`` to the units of ``(Z/m)[X, X^-1]`` as a constant."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if gcd(u, m) != 1:
        raise NotCoprime(f"{u} is not coprime to {m}")
    lift = LaurentConstant(m, u % m, pow(u, -1, m))
    if lift.evaluate(1) != u % m or lift.constant * lift.inverse % m != 1:
        raise AssertionError("constant lift failed its evaluation check")
    return lift


# finite quotients (Z/m)[x]/(f)


@dataclass
class FiniteRingCertificate:
    modulus: int
    f: tuple[int, ...]
    alpha: tuple[int, ...]
    ring_order: int
    unit_count: int
    quotient_order: int
    quotient_unit_count: int
    image_count: int
    surjective: bool
    missing: list = field(default_factory=list)

    def as_dict(self):
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.__dict__.items()}


def _mult_matrix(elem, f, m):
    """Matrix of multiplication by ``elem`` on ``(Z/m)[x]/(f)`` in the monomial basis."""
    k = len(f) - 1
    cols = []
    basis = [0] * k
    for j in range(k):
        e = list(basis)
        e[j] = 1
        prod = poly_mul(list(elem), e)
        _, r = poly_divmod(prod, f)
        r = [c % m for c in r] + [0] * k
        cols.append(r[:k])
    return np.asarray(cols, dtype=np.int64).T


def finite_quotient_surjectivity(m: int, f, alpha, *, cap: int = FINITE_RING_CAP) -> FiniteRingCertificate:
    """Decide surjectivity of ``R^x -> R_C^x`` for ``R = (Z/m)[x]/(f)`` by enumeration.

    ``f`` is a coefficient list (lowest degree first) with leading
    coefficient 1; ``alpha`` is a polynomial representative of a unit of
    ``R``.  ``R_C = R / (1 - alpha) R``.
    """
    f = [c % m for c in _trim(f)]
    if f[-1] != 1:
        raise ValueError("f must be monic")
    k = len(f) - 1
    size = m**k
    if size > cap:
        raise SizeCapExceeded(f"|R| = {size} exceeds {cap}")
    elems = np.array(list(itertools.product(range(m), repeat=k)), dtype=np.int64)[:, ::-1] if k else np.zeros((1, 0), dtype=np.int64)
    weights = m ** np.arange(k, dtype=np.int64)

    def code(vecs):
        return (vecs % m) @ weights

    def is_unit(poly):
        return gcd(det(_mult_matrix(poly, f, m).tolist()) % m, m) == 1 if k else False

    alpha = [c % m for c in alpha]
    if not is_unit(alpha):
        raise AlphaNotUnit("alpha is not invertible in R")
    one = [1] + [0] * (k - 1)
    one_minus_alpha = [(a - b) for a, b in itertools.zip_longest(one, alpha, fillvalue=0)]
    # ideal (1 - alpha) R as the image of the multiplication map
    M_ideal = _mult_matrix(one_minus_alpha, f, m)
    ideal_codes = np.unique(code(elems @ M_ideal.T))
    # coset label of every element
    label = np.full(size, -1, dtype=np.int64)
    reps = []
    elem_of_code = np.zeros((size, k), dtype=np.int64)
    elem_of_code[code(elems)] = elems
    ideal_vecs = elem_of_code[ideal_codes]
    for c in range(size):
        if label[c] < 0:
            label[code(elem_of_code[c] + ideal_vecs)] = len(reps)
            reps.append(c)
    # units of R
    unit_mask = np.array([is_unit(list(elem_of_code[c])) for c in range(size)])
    # units of R_C: reps r with r*s in the coset of 1 for some rep s
    one_label = label[code(np.asarray(one))]
    rep_vecs = elem_of_code[np.asarray(reps)]
    quotient_units = []
    for i, r in enumerate(reps):
        prods = code(rep_vecs @ _mult_matrix(list(elem_of_code[r]), f, m).T)
        if np.any(label[prods] == one_label):
            quotient_units.append(i)
    image = set(label[np.flatnonzero(unit_mask)].tolist())
    missing = [reps[i] for i in quotient_units if i not in image]
    return FiniteRingCertificate(
        modulus=m, f=tuple(f), alpha=tuple(alpha), ring_order=size,
        unit_count=int(unit_mask.sum()), quotient_order=len(reps),
        quotient_unit_count=len(quotient_units), image_count=len(image & set(quotient_units)),
        surjective=not missing,
        missing=[list(map(int, elem_of_code[c])) for c in missing],
    )
