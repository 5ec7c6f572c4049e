"""Breadth-first analytics on transformation graphs of normally generating tuples.

Vertices are the normally generating ``n``-tuples of a finite group; edges
come from one move family (Nielsen, Andrews-Curtis, M-moves with or without
inversions).  Every move can be undone by a sequence of moves of the same
family, so components are computed on the underlying undirected graph, and
diameters are measured there too.
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from . import moves as mv
from .abelian import class_count, invariant_factors, nielsen_class
from .errors import (
    NotNormallyGenerating,
    RangeError,
    WeightNotOne,
    WeightTooLarge,
)
from .groups import (
    GroupTable,
    abelianization,
    is_soluble,
    quotient,
    rank,
    w_subgroup,
    weight,
)

INFINITE = math.inf
EXACT_DIAMETER_LIMIT = 20000
_BFS_BATCH = 256


class MoveSet(enum.Enum):
    NIELSEN = "nielsen"
    AC = "ac"
    M_PLUS_INVERSION = "m"
    M_ONLY = "m-only"

    @classmethod
    def parse(cls, value) -> "MoveSet":
        if isinstance(value, cls):
            return value
        v = str(value).strip().lower().replace("_", "-")
        aliases = {"nielsen": cls.NIELSEN, "ac": cls.AC, "m": cls.M_PLUS_INVERSION,
                   "m-plus-inversion": cls.M_PLUS_INVERSION, "m-only": cls.M_ONLY}
        if v not in aliases:
            raise ValueError(f"unknown move set {value!r}")
        return aliases[v]


def _json_number(x):
    return "infinite" if x == INFINITE else x


@dataclass
class Component:
    size: int
    representative: tuple
    diameter: float | int | None = None
    approximate: bool = False

    def as_dict(self):
        return {
            "size": self.size,
            "representative": list(self.representative),
            "diameter": _json_number(self.diameter),
            "approximate": self.approximate,
        }


@dataclass
class GraphReport:
    group: str
    n: int
    moves: str
    vertex_count: int
    components: list[Component]
    d_n: float | int | None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def connected(self) -> bool:
        return len(self.components) == 1

    def as_dict(self):
        return {
            "group": self.group,
            "n": self.n,
            "moves": self.moves,
            "vertex_count": self.vertex_count,
            "component_count": self.component_count,
            "components": [c.as_dict() for c in self.components],
            "d_n": _json_number(self.d_n),
            "approximate": any(c.approximate for c in self.components),
        }


class TransformationGraph:
    """Normally generating ``n``-tuples of ``G`` with the edges of one move set."""

    def __init__(self, G: GroupTable, n: int, moves, state_cap: int = mv.DEFAULT_STATE_CAP):
        self.G = G
        self.n = n
        self.moves = MoveSet.parse(moves)
        self.codes = mv.normally_generating_codes(G, n, state_cap)
        self.comps = mv.decode(G, self.codes, n)
        V = len(self.codes)
        srcs, dsts = [], []
        for family in mv.move_families(self.moves):
            for rows, new in family(G, self.comps):
                enc = mv.encode(G, new)
                target = np.minimum(np.searchsorted(self.codes, enc), max(V - 1, 0))
                if not np.array_equal(self.codes[target], enc):
                    raise AssertionError("a move left the set of normally generating tuples")
                keep = target != rows
                srcs.append(rows[keep])
                dsts.append(target[keep])
        src = np.concatenate(srcs) if srcs else np.zeros(0, dtype=np.int64)
        dst = np.concatenate(dsts) if dsts else np.zeros(0, dtype=np.int64)
        adj = sparse.csr_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(V, V))
        adj = ((adj + adj.T) > 0).astype(np.int8).tocsr()
        self.adjacency = adj
        count, labels = csgraph.connected_components(adj, directed=False) if V else (0, np.zeros(0, dtype=np.int64))
        # renumber components by their least vertex (codes are sorted)
        first = np.full(count, V, dtype=np.int64)
        np.minimum.at(first, labels, np.arange(V))
        order = np.argsort(first)
        relabel = np.empty(count, dtype=np.int64)
        relabel[order] = np.arange(count)
        self.labels = relabel[labels] if V else labels
        self.component_count = int(count)

    def __len__(self):
        return len(self.codes)

    def index_of(self, t) -> int:
        code = int(mv.encode(self.G, np.asarray(t, dtype=np.int64)))
        i = int(np.searchsorted(self.codes, code))
        if i >= len(self.codes) or self.codes[i] != code:
            raise NotNormallyGenerating(f"{tuple(t)} does not normally generate {self.G!r}")
        return i

    def tuple_at(self, i: int) -> tuple:
        return tuple(int(x) for x in self.comps[i])

    def members(self, c: int) -> np.ndarray:
        return np.flatnonzero(self.labels == c)

    def bfs(self, sources) -> np.ndarray:
        """Distances from a set of source vertices, ``-1`` where unreachable."""
        dist = np.full(len(self), -1, dtype=np.int64)
        frontier = np.unique(np.asarray(sources, dtype=np.int64))
        dist[frontier] = 0
        level = 0
        adj = self.adjacency
        while frontier.size:
            level += 1
            nbrs = adj[frontier].indices
            nbrs = np.unique(nbrs[dist[nbrs] < 0])
            dist[nbrs] = level
            frontier = nbrs
        return dist

    def component_diameter(self, c: int):
        idx = self.members(c)
        if idx.size <= 1:
            return 0, False
        sub = self.adjacency[idx][:, idx]
        if idx.size <= EXACT_DIAMETER_LIMIT:
            best = 0
            for start in range(0, idx.size, _BFS_BATCH):
                d = csgraph.shortest_path(sub, unweighted=True, directed=False,
                                          indices=np.arange(start, min(start + _BFS_BATCH, idx.size)))
                best = max(best, int(d.max()))
            return best, False
        # two-sweep lower bound from the representative
        d0 = csgraph.shortest_path(sub, unweighted=True, directed=False, indices=[0])[0]
        far = int(np.argmax(d0))
        d1 = csgraph.shortest_path(sub, unweighted=True, directed=False, indices=[far])[0]
        return int(d1.max()), True

    def report(self, diameters: bool = True, elapsed: float = 0.0) -> GraphReport:
        comps = []
        for c in range(self.component_count):
            idx = self.members(c)
            comp = Component(size=int(idx.size), representative=self.tuple_at(int(idx[0])))
            if diameters:
                comp.diameter, comp.approximate = self.component_diameter(c)
            comps.append(comp)
        d_n = max((c.diameter for c in comps), default=0) if diameters else None
        return GraphReport(group=self.G.name, n=self.n, moves=self.moves.value,
                           vertex_count=len(self), components=comps, d_n=d_n, elapsed=elapsed)


_GRAPH_CACHE_KEY = "_transformation_graphs"


def transformation_graph(G: GroupTable, n: int, moves, state_cap: int = mv.DEFAULT_STATE_CAP) -> TransformationGraph:
    """Build (or reuse) the transformation graph; cached on the group object."""
    moves = MoveSet.parse(moves)
    cache = G.__dict__.setdefault(_GRAPH_CACHE_KEY, {})
    key = (n, moves)
    if key not in cache:
        cache[key] = TransformationGraph(G, n, moves, state_cap)
    return cache[key]


def components(G: GroupTable, n: int, moves=MoveSet.AC, *, diameters: bool = True,
               state_cap: int = mv.DEFAULT_STATE_CAP) -> GraphReport:
    """Connected components of the normally generating ``n``-tuples under ``moves``.

    Diameters are exact (a BFS from every vertex) for components of at most
    20000 vertices; larger ones get a two-sweep lower bound flagged
    ``approximate``.
    """
    t0 = time.perf_counter()
    graph = transformation_graph(G, n, moves, state_cap)
    return graph.report(diameters=diameters, elapsed=time.perf_counter() - t0)


def partition(G: GroupTable, n: int, moves, state_cap: int = mv.DEFAULT_STATE_CAP) -> set[frozenset]:
    """The component partition as a set of frozensets of tuple codes."""
    g = transformation_graph(G, n, moves, state_cap)
    return {frozenset(g.codes[g.members(c)].tolist()) for c in range(g.component_count)}


# recalcitrance


def _recalcitrance_distances(G, n, state_cap):
    cache = G.__dict__.setdefault("_recalcitrance", {})
    if n not in cache:
        g = transformation_graph(G, n, MoveSet.M_ONLY, state_cap)
        targets = np.flatnonzero(mv.generating_mask(G, g.comps))
        cache[n] = (g, g.bfs(targets))
    return cache[n]


def recalcitrance(G: GroupTable, t, *, state_cap: int = mv.DEFAULT_STATE_CAP):
    """Least number of M-moves taking ``t`` to a generating tuple (``INFINITE`` if none).

    Inversions and permutations are not needed: the generating tuples are
    closed under both.
    """
    t = tuple(int(x) for x in t)
    g, dist = _recalcitrance_distances(G, len(t), state_cap)
    d = int(dist[g.index_of(t)])
    return INFINITE if d < 0 else d


@dataclass
class RecalcitranceReport:
    group: str
    n: int
    value: float | int
    witness: tuple | None
    rank: int | None = None

    @property
    def n_differs_from_rank(self) -> bool:
        return self.rank is not None and self.rank != self.n

    def as_dict(self):
        return {
            "group": self.group,
            "n": self.n,
            "recalcitrance": _json_number(self.value),
            "witness": None if self.witness is None else list(self.witness),
            "rank": self.rank,
            "n_differs_from_rank": self.n_differs_from_rank,
        }


def recalcitrance_group(G: GroupTable, n: int | None = None, *, state_cap: int = mv.DEFAULT_STATE_CAP) -> RecalcitranceReport:
    """Maximum recalcitrance over the normally generating ``n``-tuples.

    ``n`` defaults to ``rank(G)``; other values are allowed and flagged in
    the report.
    """
    rk = rank(G) if G.order <= 512 else None
    if n is None:
        n = rk
    g, dist = _recalcitrance_distances(G, n, state_cap)
    if len(g) == 0:
        return RecalcitranceReport(G.name, n, 0, None, rk)
    if np.any(dist < 0):
        i = int(np.flatnonzero(dist < 0)[0])
        return RecalcitranceReport(G.name, n, INFINITE, g.tuple_at(i), rk)
    i = int(np.argmax(dist))
    return RecalcitranceReport(G.name, n, int(dist[i]), g.tuple_at(i), rk)


def abelianization_coessential(G: GroupTable, n: int, *, state_cap: int = mv.DEFAULT_STATE_CAP) -> bool:
    """Whether every generating ``n``-vector of ``G_ab`` lifts to a generating ``n``-vector of ``G``."""
    A, proj = abelianization(G)
    mv.check_state_cap(G, n, state_cap)
    all_g = mv.decode(G, np.arange(G.order**n), n)
    lifted = set(mv.encode(A, proj[all_g[mv.generating_mask(G, all_g)]]).tolist())
    all_a = mv.decode(A, np.arange(A.order**n), n)
    wanted = set(mv.encode(A, all_a[mv.generating_mask(A, all_a)]).tolist())
    return wanted <= lifted


# GACC1 at finite scale


@dataclass
class Gacc1Report:
    group: str
    n: int
    passed: bool
    ac_component_count: int
    nielsen_class_count: int
    pairing: list  # (component representative, class label) pairs
    well_defined: bool
    soluble: bool

    def as_dict(self):
        return {
            "group": self.group,
            "n": self.n,
            "pass": self.passed,
            "ac_component_count": self.ac_component_count,
            "nielsen_class_count": self.nielsen_class_count,
            "pairing": [{"representative": list(r), "class": lab} for r, lab in self.pairing],
            "well_defined": self.well_defined,
            "soluble": self.soluble,
        }


def _label(nc):
    return "single-class" if nc.delta is None else nc.delta


def gacc1_check(G: GroupTable, n: int, *, state_cap: int = mv.DEFAULT_STATE_CAP) -> Gacc1Report:
    """Check that abelianization induces a bijection from AC components to Nielsen classes."""
    if n < 2:
        raise RangeError("gacc1_check needs n >= 2")
    w = weight(G)
    if n < w:
        raise WeightTooLarge(f"n={n} is below the weight {w}")
    soluble = is_soluble(G)
    A, proj = abelianization(G)
    mv.check_state_cap(A, n, state_cap)
    inv, _ = invariant_factors(A)
    g = transformation_graph(G, n, MoveSet.AC, state_cap)
    images = proj[g.comps]
    uniq, back = np.unique(images, axis=0, return_inverse=True)
    labels = [_label(nielsen_class(A, row)) for row in uniq.tolist()]
    vertex_labels = np.asarray([labels[b] for b in back.ravel()], dtype=object)
    pairing, well_defined = [], True
    for c in range(g.component_count):
        idx = g.members(c)
        seen = set(vertex_labels[idx].tolist())
        if len(seen) != 1:
            well_defined = False
        pairing.append((g.tuple_at(int(idx[0])), vertex_labels[idx[0]]))
    count = class_count(inv, n)
    hit = {lab for _, lab in pairing}
    passed = well_defined and len(hit) == len(pairing) == count
    return Gacc1Report(G.name, n, passed, g.component_count, count, pairing, well_defined, soluble)


@dataclass
class WeightOneReport:
    group: str
    classes: list  # list of sorted element lists, one per AC class
    by_image: dict  # canonical abelianized image -> number of AC classes above it
    satisfies: bool

    def as_dict(self):
        return {
            "group": self.group,
            "classes": self.classes,
            "classes_per_image": {str(k): v for k, v in sorted(self.by_image.items())},
            "satisfies_gacc1_1": self.satisfies,
        }


def weight_one_classes(G: GroupTable) -> WeightOneReport:
    """AC classes of weight elements (conjugation plus inversion), grouped by abelianized image.

    Images are paired with their inverses, matching AC equivalence in the
    abelianization.
    """
    if weight(G) != 1:
        raise WeightNotOne(f"{G!r} does not have weight 1")
    A, proj = abelianization(G)
    g = transformation_graph(G, 1, MoveSet.AC)
    classes = [sorted(g.comps[g.members(c), 0].tolist()) for c in range(g.component_count)]
    by_image: dict = {}
    for cl in classes:
        a = int(proj[cl[0]])
        key = min(a, int(A.inv[a]))
        by_image[key] = by_image.get(key, 0) + 1
    return WeightOneReport(G.name, classes, by_image, all(v == 1 for v in by_image.values()))


@dataclass
class DiameterInequalityReport:
    group: str
    n: int
    weight: int
    diam_ab: int
    diam_g: int
    diam_w: int
    connected: bool
    lower_holds: bool
    upper_holds: bool

    @property
    def passed(self) -> bool:
        return self.connected and self.lower_holds and self.upper_holds

    def as_dict(self):
        return {
            "group": self.group, "n": self.n, "weight": self.weight,
            "diam_G_ab": self.diam_ab, "diam_G": self.diam_g, "diam_G_mod_W": self.diam_w,
            "connected": self.connected, "lower_holds": self.lower_holds,
            "upper_holds": self.upper_holds, "pass": self.passed,
        }


def diameter_inequality_report(G: GroupTable, n: int, *, state_cap: int = mv.DEFAULT_STATE_CAP) -> DiameterInequalityReport:
    """Compare the M-graph diameters of ``G_ab``, ``G`` and ``G/W(G)``.

    Checks ``diam(G_ab) <= diam(G) <= diam(G/W(G)) + n + w(G)`` and that the
    M-graph of ``G`` is connected.
    """
    w = weight(G)
    if n <= w:
        raise RangeError(f"n={n} must exceed the weight {w}")
    A, _ = abelianization(G)
    Q, _ = quotient(G, w_subgroup(G))
    reports = [components(H, n, MoveSet.M_PLUS_INVERSION, state_cap=state_cap) for H in (A, G, Q)]
    da, dg, dw = (r.d_n for r in reports)
    return DiameterInequalityReport(G.name, n, w, da, dg, dw, reports[1].connected,
                                    da <= dg, dg <= dw + n + w)


def move_equivalence_check(G: GroupTable, n: int, *, state_cap: int = mv.DEFAULT_STATE_CAP) -> bool:
    """Whether AC moves and M-moves plus inversions give the same partition."""
    return partition(G, n, MoveSet.AC, state_cap) == partition(G, n, MoveSet.M_PLUS_INVERSION, state_cap)
