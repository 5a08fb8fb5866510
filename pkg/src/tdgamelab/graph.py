"""Immutable simple graphs over dense vertex indices 0..n-1.

Adjacency is stored as one open-neighborhood bitmask per vertex, so the
solvers in this package can treat every vertex set (dominating sets,
dominated regions, game masks) as a machine-word integer.  Graphs beyond
``SOLVER_CAP`` vertices are rejected at construction time.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

# Masks over 0..SOLVER_CAP-1 fit a single machine word on every target the
# solvers care about; every constructor enforces the bound.
SOLVER_CAP = 26

INFINITE_DISTANCE = math.inf


class CapacityError(ValueError):
    """Raised when a graph would exceed SOLVER_CAP vertices."""


class IsolatedVertexError(ValueError):
    """Raised when a solver that needs an isolate-free graph gets one with an isolated vertex."""


def _mask_of(vertices: Iterable[int], n: int) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for order {n}")
        mask |= 1 << v
    return mask


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """Fixed-capacity set of vertex indices backed by a bitmask.

    Set algebra (``|``, ``&``, ``-``, ``<=``) is exact; operands must share
    the same capacity ``n``.
    """

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} has members >= {self.n}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int] = ()) -> "VertexSet":
        return cls(n, _mask_of(vertices, n))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def _check(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError(f"capacity mismatch: {self.n} != {other.n}")

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def __le__(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ~self.mask & (1 << self.n) - 1)

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {{{', '.join(map(str, self))}}})"


@dataclass(frozen=True)
class Graph:
    """Simple loop-free graph with per-vertex open-neighborhood masks."""

    n: int
    nbr: tuple[int, ...]
    label: str | None = None
    vertex_labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n > SOLVER_CAP:
            raise CapacityError(f"order {self.n} exceeds SOLVER_CAP = {SOLVER_CAP}")
        if len(self.nbr) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.nbr):
            if m & ~full:
                raise ValueError(f"neighborhood of {v} mentions vertices >= {self.n}")
            if m >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, m in enumerate(self.nbr):
            for u in bits(m):
                if not self.nbr[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        if self.vertex_labels is not None and len(self.vertex_labels) != self.n:
            raise ValueError("vertex_labels length does not match order")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.nbr[v])

    def degree(self, v: int) -> int:
        return self.nbr[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in bits(self.nbr[u]) if u < v]

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.nbr) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and bool(self.nbr[u] >> v & 1)

    def is_isolate_free(self) -> bool:
        return all(m != 0 for m in self.nbr)

    def vertex_name(self, v: int) -> str:
        if self.vertex_labels is not None:
            return self.vertex_labels[v]
        return str(v)

    def __repr__(self) -> str:
        name = self.label or f"graph(n={self.n})"
        return f"<Graph {name}: n={self.n}, m={self.edge_count()}>"


def build_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    label: str | None = None,
    vertex_labels: Iterable[str] | None = None,
) -> Graph:
    """Build a simple graph from an edge list.

    Duplicate edges collapse; self-loops and out-of-range endpoints are
    rejected, as is any order above ``SOLVER_CAP``.
    """
    if n < 0:
        raise ValueError("order must be non-negative")
    if n > SOLVER_CAP:
        raise CapacityError(f"order {n} exceeds SOLVER_CAP = {SOLVER_CAP}")
    nbr = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    labels = tuple(vertex_labels) if vertex_labels is not None else None
    return Graph(n, tuple(nbr), label=label, vertex_labels=labels)


def require_isolate_free(G: Graph) -> None:
    for v in range(G.n):
        if G.nbr[v] == 0:
            raise IsolatedVertexError(f"vertex {v} is isolated")


def neighborhood_of_set(G: Graph, S: VertexSet) -> VertexSet:
    """Open neighborhood of a set: union of N(v) over v in S."""
    return VertexSet(G.n, neighborhood_mask(G, S.mask))


def neighborhood_mask(G: Graph, mask: int) -> int:
    out = 0
    for v in bits(mask):
        out |= G.nbr[v]
    return out


def exactly_one_neighbor_mask(G: Graph, mask: int) -> int:
    """Mask of vertices with exactly one neighbor inside ``mask``."""
    once = 0
    twice = 0
    for v in bits(mask):
        twice |= once & G.nbr[v]
        once |= G.nbr[v]
    return once & ~twice


def private_neighborhoods(G: Graph, S: VertexSet, v: int) -> tuple[VertexSet, VertexSet, VertexSet]:
    """Open private neighborhoods of v with respect to S.

    Returns ``(pn, epn, ipn)`` where pn is the set of vertices whose only
    neighbor in S is v, epn its part outside S and ipn its part inside S.
    """
    if v not in S:
        raise ValueError(f"vertex {v} is not a member of S")
    # w is private to v exactly when w has a single S-neighbor and that
    # neighbor is v, i.e. w lies in N(v) and has exactly one S-neighbor.
    pn = G.nbr[v] & exactly_one_neighbor_mask(G, S.mask)
    return (
        VertexSet(G.n, pn),
        VertexSet(G.n, pn & ~S.mask),
        VertexSet(G.n, pn & S.mask),
    )


def is_total_dominating(G: Graph, D: VertexSet) -> bool:
    """True when every vertex of G has a neighbor in D."""
    return neighborhood_mask(G, D.mask) == G.full_mask


def _every_member_has_private(G: Graph, mask: int) -> bool:
    private_ok = exactly_one_neighbor_mask(G, mask)
    for v in bits(mask):
        if G.nbr[v] & private_ok == 0:
            return False
    return True


def is_minimal_total_dominating(G: Graph, D: VertexSet) -> bool:
    """Minimality test for a TD-set via open private neighborhoods.

    A TD-set is minimal exactly when every member keeps a non-empty open
    private neighborhood; this is the route used in hot enumeration paths.
    ``is_minimal_total_dominating_by_removal`` is the definitional cross-check.
    """
    if not is_total_dominating(G, D):
        raise ValueError("D is not a total dominating set")
    return _every_member_has_private(G, D.mask)


def is_minimal_total_dominating_by_removal(G: Graph, D: VertexSet) -> bool:
    """Definitional minimality: no proper TD-subset.

    Total domination is preserved under supersets, so it suffices to check
    that dropping any single member breaks domination.
    """
    if not is_total_dominating(G, D):
        raise ValueError("D is not a total dominating set")
    for v in bits(D.mask):
        if neighborhood_mask(G, D.mask & ~(1 << v)) == G.full_mask:
            return False
    return True


def is_open_open_irredundant(G: Graph, S: VertexSet) -> bool:
    """True when every v in S has some neighbor with no other S-neighbor.

    The defining condition N(v) \\ N(S - v) != {} coincides with v having a
    non-empty open private neighborhood, so minimal TD-sets always qualify.
    """
    return _every_member_has_private(G, S.mask)


def distance(G: Graph, u: int, v: int) -> int | float:
    """Shortest-path hop count; INFINITE_DISTANCE when disconnected."""
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise ValueError("vertex out of range")
    if u == v:
        return 0
    seen = 1 << u
    frontier = deque([(u, 0)])
    while frontier:
        w, d = frontier.popleft()
        fresh = G.nbr[w] & ~seen
        if fresh >> v & 1:
            return d + 1
        seen |= fresh
        for x in bits(fresh):
            frontier.append((x, d + 1))
    return INFINITE_DISTANCE


def connected_components(G: Graph) -> list[VertexSet]:
    """Vertex sets of the connected components, ordered by smallest member."""
    remaining = G.full_mask
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            grown = 0
            for v in bits(frontier):
                grown |= G.nbr[v]
            frontier = grown & ~comp
            comp |= grown
        comps.append(VertexSet(G.n, comp))
        remaining &= ~comp
    return comps


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(connected_components(G)) == 1


def bipartition(G: Graph) -> tuple[VertexSet, VertexSet] | None:
    """A 2-coloring as a pair of sides, or None when an odd cycle exists."""
    color = [-1] * G.n
    for start in range(G.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for x in bits(G.nbr[w]):
                if color[x] == -1:
                    color[x] = 1 - color[w]
                    queue.append(x)
                elif color[x] == color[w]:
                    return None
    side0 = _mask_of((v for v in range(G.n) if color[v] == 0), G.n)
    return VertexSet(G.n, side0), VertexSet(G.n, ~side0 & G.full_mask)


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


def induced_subgraph(G: Graph, S: VertexSet) -> Graph:
    """Subgraph induced by S, reindexed to 0..|S|-1 in increasing order."""
    keep = S.to_list()
    index = {v: i for i, v in enumerate(keep)}
    nbr = [0] * len(keep)
    for v in keep:
        for u in bits(G.nbr[v] & S.mask):
            nbr[index[v]] |= 1 << index[u]
    labels = tuple(G.vertex_name(v) for v in keep) if G.vertex_labels else None
    return Graph(len(keep), tuple(nbr), label=G.label, vertex_labels=labels)
