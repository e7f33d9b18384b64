"""Core data model: instances, vertex ids, graphs, schedules and covers.

Burning process conventions used throughout the package. At round t >= 1 the
fire first spreads from every vertex burned at round t-1 to all its
neighbors, then the t-th scheduled source is ignited if it is still unburned
(igniting an already burned vertex is a no-op). A schedule burns a graph in
T rounds when every vertex has a first-burn time <= T.

Vertex ids are plain tuples with a total lexicographic order:

    ("head",)          spider head
    ("a", i, j)        j-th vertex (1-based) of spider arm i, counted from
                       the head; the leaf of an arm of length L is ("a",i,L)
    ("c", c, p)        p-th vertex (0-based) of path-forest component c
    ("v", name)        named vertex of a graph given by an edge list

Within one graph only one family of ids appears (plus the head for spiders).
Tuples were chosen over a wrapper class deliberately: large random instances
create tens of millions of ids and tuple literals keep that cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import BudgetError, InstanceError

VertexId = tuple

HEAD: VertexId = ("head",)


def arm_vertex(arm: int, pos: int) -> VertexId:
    return ("a", arm, pos)


def comp_vertex(comp: int, pos: int) -> VertexId:
    return ("c", comp, pos)


def graph_vertex(name: str) -> VertexId:
    return ("v", name)


def format_vertex(v: VertexId) -> str:
    """Serialize a vertex id: "head", "a:i:j", "c:p", or the raw name."""
    tag = v[0]
    if tag == "head":
        return "head"
    if tag == "a":
        return f"a:{v[1]}:{v[2]}"
    if tag == "c":
        return f"{v[1]}:{v[2]}"
    if tag == "v":
        return str(v[1])
    raise InstanceError(f"unknown vertex id {v!r}")


def parse_vertex(text: str, kind: str) -> VertexId:
    """Parse a serialized vertex id for an instance of the given kind.

    kind is one of "pf", "path", "spider", "graph".  Path instances use the
    path-forest form "c:p" with c == 0.
    """
    if kind == "graph":
        return graph_vertex(text)
    if kind == "spider":
        if text == "head":
            return HEAD
        parts = text.split(":")
        if len(parts) == 3 and parts[0] == "a":
            try:
                return arm_vertex(int(parts[1]), int(parts[2]))
            except ValueError:
                pass
        raise InstanceError(f"bad spider vertex {text!r}")
    if kind in ("pf", "path"):
        parts = text.split(":")
        if len(parts) == 2:
            try:
                return comp_vertex(int(parts[0]), int(parts[1]))
            except ValueError:
                pass
        raise InstanceError(f"bad path-forest vertex {text!r}")
    raise InstanceError(f"unknown instance kind {kind!r}")


def ceil_sqrt(n: int) -> int:
    """Smallest integer s with s*s >= n (exact integer arithmetic)."""
    if n < 0:
        raise ValueError("ceil_sqrt of a negative number")
    return 0 if n == 0 else 1 + isqrt(n - 1)


@dataclass(frozen=True)
class PathForest:
    """Disjoint union of paths, stored as component orders sorted non-increasing."""

    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(sorted(self.orders, reverse=True))
        if not orders:
            raise InstanceError("a path forest needs at least one component")
        if any(not isinstance(a, int) or a < 1 for a in orders):
            raise InstanceError(f"component orders must be positive integers: {self.orders!r}")
        object.__setattr__(self, "orders", orders)

    @property
    def n(self) -> int:
        return sum(self.orders)

    @property
    def t(self) -> int:
        return len(self.orders)


@dataclass(frozen=True)
class Spider:
    """One head vertex with m >= 3 disjoint arms (paths) attached.

    Arm lengths exclude the head, so the order is 1 + sum(arms).  Arms are
    stored sorted non-increasing.
    """

    arms: tuple[int, ...]

    def __post_init__(self):
        arms = tuple(sorted(self.arms, reverse=True))
        if len(arms) < 3:
            raise InstanceError("a spider needs at least 3 arms; shorter shapes are paths")
        if any(not isinstance(a, int) or a < 1 for a in arms):
            raise InstanceError(f"arm lengths must be positive integers: {self.arms!r}")
        object.__setattr__(self, "arms", arms)

    @property
    def n(self) -> int:
        return 1 + sum(self.arms)

    @property
    def m(self) -> int:
        return len(self.arms)


def path_radius(order: int) -> int:
    """Radius of a path on `order` vertices: floor(order / 2)."""
    if order < 1:
        raise InstanceError("path order must be >= 1")
    return order // 2

def path_center(order: int) -> int:
    """Leftmost central position of a path on `order` vertices (0-based).

    Its eccentricity equals path_radius(order); for even orders the two
    central vertices tie and the leftmost is returned.
    """
    if order < 1:
        raise InstanceError("path order must be >= 1")
    return (order - 1) // 2


class LabeledGraph:
    """Immutable undirected simple graph over VertexIds.

    Adjacency is kept as CSR int32 arrays so the burn kernel can run on
    large instances; dict views are materialized lazily for convenience.
    """

    __slots__ = ("vertices", "_indptr", "_indices", "_index", "_adj", "_canon")

    def __init__(self, vertices, edges=()):
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise InstanceError("duplicate vertices")
        nbr: list[set[int]] = [set() for _ in vertices]
        for u, v in edges:
            if u == v:
                raise InstanceError(f"self-loop at {u!r}")
            try:
                ui, vi = index[u], index[v]
            except KeyError as exc:
                raise InstanceError(f"edge endpoint {exc.args[0]!r} not a vertex") from None
            nbr[ui].add(vi)
            nbr[vi].add(ui)
        indptr = np.zeros(len(vertices) + 1, dtype=np.int32)
        for i, s in enumerate(nbr):
            indptr[i + 1] = indptr[i] + len(s)
        indices = np.empty(int(indptr[-1]), dtype=np.int32)
        for i, s in enumerate(nbr):
            indices[indptr[i]:indptr[i + 1]] = sorted(s)
        self.vertices = vertices
        self._indptr = indptr
        self._indices = indices
        self._index = index
        self._adj = None
        self._canon = None

    @classmethod
    def _from_csr(cls, vertices, indptr, indices, canonical_order=None):
        # Trusted path used by the instance builders; symmetry and
        # simplicity are guaranteed by construction there (and re-checked
        # against the validated constructor in the test suite).
        g = cls.__new__(cls)
        g.vertices = tuple(vertices)
        g._indptr = indptr
        g._indices = indices
        g._index = None
        g._adj = None
        g._canon = canonical_order
        return g

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self._indices) // 2

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        return self._indptr, self._indices

    def __contains__(self, v) -> bool:
        return v in self._index_map()

    def _index_map(self) -> dict:
        if self._index is None:
            self._index = {v: i for i, v in enumerate(self.vertices)}
        return self._index

    def index_of(self, v) -> int:
        try:
            return self._index_map()[v]
        except KeyError:
            raise InstanceError(f"{v!r} is not a vertex of this graph") from None

    def canonical_order(self) -> np.ndarray:
        """Vertex indices sorted by ascending VertexId (used for filler picks)."""
        if self._canon is None:
            order = sorted(range(len(self.vertices)), key=self.vertices.__getitem__)
            self._canon = np.asarray(order, dtype=np.int32)
        return self._canon

    def neighbors(self, v) -> tuple:
        i = self.index_of(v)
        lo, hi = int(self._indptr[i]), int(self._indptr[i + 1])
        return tuple(self.vertices[j] for j in self._indices[lo:hi])

    def adjacency(self) -> dict:
        if self._adj is None:
            self._adj = {v: frozenset(self.neighbors(v)) for v in self.vertices}
        return self._adj

    def degree(self, v) -> int:
        i = self.index_of(v)
        return int(self._indptr[i + 1] - self._indptr[i])


def _csr_from_undirected(n: int, u: np.ndarray, v: np.ndarray):
    """CSR arrays from one direction of each edge (vectorized)."""
    heads = np.concatenate([u, v])
    tails = np.concatenate([v, u])
    counts = np.bincount(heads, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int32)
    indptr[1:] = np.cumsum(counts)
    order = np.lexsort((tails, heads))  # rows sorted, matching LabeledGraph.__init__
    indices = tails[order].astype(np.int32, copy=False)
    return indptr, indices


def path_forest_to_graph(pf: PathForest) -> LabeledGraph:
    """Explicit graph for a path forest: component c holds ("c", c, 0..a_c-1)."""
    orders = np.asarray(pf.orders, dtype=np.int64)
    n = int(orders.sum())
    ends = np.cumsum(orders) - 1
    is_end = np.zeros(n, dtype=bool)
    is_end[ends] = True
    lefts = np.nonzero(~is_end[: n - 1])[0].astype(np.int32) if n > 1 else np.empty(0, np.int32)
    indptr, indices = _csr_from_undirected(n, lefts, lefts + 1)
    vertices = [comp_vertex(c, p) for c, a in enumerate(pf.orders) for p in range(a)]
    canon = np.arange(n, dtype=np.int32)  # construction order is already sorted
    return LabeledGraph._from_csr(vertices, indptr, indices, canon)


def spider_to_graph(sp: Spider) -> LabeledGraph:
    """Explicit graph for a spider: index 0 is the head, arms are contiguous."""
    arms = np.asarray(sp.arms, dtype=np.int64)
    n = int(1 + arms.sum())
    offsets = 1 + np.cumsum(arms) - arms  # first vertex of each arm
    arm_ends = (offsets + arms - 1).astype(np.int64)
    is_end = np.zeros(n, dtype=bool)
    is_end[arm_ends] = True
    within = ~is_end
    within[0] = False  # the head never chains by index
    lefts = np.nonzero(within[: n - 1])[0].astype(np.int32)
    u = np.concatenate([np.zeros(len(arms), dtype=np.int32), lefts])
    v = np.concatenate([offsets.astype(np.int32), lefts + 1])
    indptr, indices = _csr_from_undirected(n, u, v)
    vertices = [HEAD] + [arm_vertex(a, j) for a, length in enumerate(sp.arms) for j in range(1, length + 1)]
    canon = np.concatenate([np.arange(1, n, dtype=np.int32), np.zeros(1, np.int32)])
    return LabeledGraph._from_csr(vertices, indptr, indices, canon)


@dataclass(frozen=True)
class BurnSchedule:
    """Ignition order: sources[i] is ignited at round i+1.

    claimed_time is the round by which the whole graph is asserted burned;
    verify_schedule checks the claim against the simulator.
    """

    sources: tuple[VertexId, ...]
    claimed_time: int

    def __post_init__(self):
        sources = tuple(self.sources)
        object.__setattr__(self, "sources", sources)
        if not sources:
            raise InstanceError("a schedule needs at least one source")
        if len(set(sources)) != len(sources):
            raise InstanceError("schedule sources must be pairwise distinct")
        if self.claimed_time < len(sources):
            raise InstanceError(
                f"claimed_time {self.claimed_time} < {len(sources)} sources; "
                "at most one source ignites per round"
            )


@dataclass(frozen=True)
class BudgetedCover:
    """Neighborhood cover (center, radius) feasible for a burning budget M.

    Sorted non-increasing radii must satisfy r_(i) <= M - i (1-based), the
    exact condition under which igniting the centers largest-radius-first
    burns everything the balls cover by round M.  Centers may repeat across
    pairs; the pairs themselves are distinct.
    """

    pairs: tuple[tuple[VertexId, int], ...]
    budget: int

    def __post_init__(self):
        pairs = tuple((v, int(r)) for v, r in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise InstanceError("a cover needs at least one pair")
        if len(set(pairs)) != len(pairs):
            raise BudgetError("cover pairs must be distinct")
        if any(r < 0 for _, r in pairs):
            raise BudgetError("radii must be non-negative")
        if self.budget < 1:
            raise BudgetError("budget must be >= 1")
        radii = sorted((r for _, r in pairs), reverse=True)
        for i, r in enumerate(radii, start=1):
            if r > self.budget - i:
                raise BudgetError(
                    f"radius {r} at sorted position {i} exceeds budget slack "
                    f"{self.budget} - {i}"
                )

    def sorted_radii(self) -> tuple[int, ...]:
        return tuple(sorted((r for _, r in self.pairs), reverse=True))
