"""Exact computation of the non-game invariants.

All four optimisation invariants run exhaustive or branch-and-bound search
over bitmask subsets; there are no heuristics and no special-case shortcuts,
so the returned values are exact for every graph within SOLVER_CAP.  Every
optimum comes with a witness that is re-checked against the defining
predicate before being returned, and ties are broken toward the
lexicographically smallest witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import (
    Graph,
    VertexSet,
    bits,
    exactly_one_neighbor_mask,
    is_minimal_total_dominating,
    is_open_open_irredundant,
    is_total_dominating,
    require_isolate_free,
)

Edge = tuple[int, int]

GAMMA_T = "gamma_t"
UPPER_GAMMA_T = "upper_gamma_t"
OOIR = "ooir"
INDUCED_MATCHING = "induced_matching"
PERFECT_MATCHING = "perfect_matching"


@dataclass(frozen=True)
class InvariantValue:
    """One computed invariant: its kind, optimal value, and certifying witness."""

    kind: str
    value: int | bool
    witness: VertexSet | tuple[Edge, ...] | None

    def __int__(self) -> int:
        return int(self.value)


class WitnessError(RuntimeError):
    """Internal consistency failure: a computed witness failed revalidation."""


def _certify(condition: bool, kind: str) -> None:
    if not condition:
        raise WitnessError(f"computed witness for {kind} failed revalidation")


def gamma_t(G: Graph) -> InvariantValue:
    """Total domination number: minimum cardinality of a TD-set.

    Increasing-cardinality search; the first set found in lexicographic
    order at the optimal size is the witness.
    """
    require_isolate_free(G)
    full = G.full_mask
    nbr = G.nbr
    for k in range(1, G.n + 1):
        for combo in combinations(range(G.n), k):
            covered = 0
            for v in combo:
                covered |= nbr[v]
            if covered == full:
                witness = VertexSet.of(G.n, combo)
                _certify(is_total_dominating(G, witness) and len(witness) == k, GAMMA_T)
                return InvariantValue(GAMMA_T, k, witness)
    raise AssertionError("isolate-free graph admits V(G) as a TD-set")


def upper_gamma_t(G: Graph) -> InvariantValue:
    """Upper total domination number: maximum cardinality of a minimal TD-set.

    Descending-cardinality enumeration; minimality is tested by the
    private-neighborhood characterisation (every member keeps an open
    private neighbor), which only prunes whole sets, never partial ones.
    """
    require_isolate_free(G)
    full = G.full_mask
    nbr = G.nbr
    for k in range(G.n, 0, -1):
        for combo in combinations(range(G.n), k):
            covered = 0
            mask = 0
            for v in combo:
                covered |= nbr[v]
                mask |= 1 << v
            if covered != full:
                continue
            private_ok = exactly_one_neighbor_mask(G, mask)
            if all(nbr[v] & private_ok for v in combo):
                witness = VertexSet(G.n, mask)
                _certify(
                    is_minimal_total_dominating(G, witness) and len(witness) == k,
                    UPPER_GAMMA_T,
                )
                return InvariantValue(UPPER_GAMMA_T, k, witness)
    raise AssertionError("isolate-free graph admits a minimal TD-set")


def ooir(G: Graph) -> InvariantValue:
    """Open-open irredundance number: maximum set where every member has an
    open private neighbor.

    Branch-and-bound over subsets in lexicographic order.  The property is
    closed under taking subsets, so any infeasible partial set prunes all
    of its supersets; the cardinality bound uses the remaining-vertex count.
    """
    n = G.n
    nbr = G.nbr
    best_size = 0
    best_mask = 0

    def feasible(mask: int) -> bool:
        private_ok = exactly_one_neighbor_mask(G, mask)
        for v in bits(mask):
            if nbr[v] & private_ok == 0:
                return False
        return True

    def extend(mask: int, size: int, start: int) -> None:
        nonlocal best_size, best_mask
        if size > best_size:
            best_size, best_mask = size, mask
        for v in range(start, n):
            if size + (n - v) <= best_size:
                break
            grown = mask | 1 << v
            if feasible(grown):
                extend(grown, size + 1, v + 1)

    extend(0, 0, 0)
    witness = VertexSet(G.n, best_mask)
    _certify(
        is_open_open_irredundant(G, witness) and len(witness) == best_size, OOIR
    )
    return InvariantValue(OOIR, best_size, witness)


def is_induced_matching(G: Graph, edges: tuple[Edge, ...]) -> bool:
    """True when ``edges`` induce a 1-regular subgraph of G."""
    seen = 0
    for u, v in edges:
        if not G.has_edge(u, v):
            return False
        pair = 1 << u | 1 << v
        if seen & pair:
            return False
        seen |= pair
    for u, v in edges:
        # No edge of G may leave {u, v} toward another matched vertex.
        if (G.nbr[u] | G.nbr[v]) & seen & ~(1 << u | 1 << v):
            return False
    return True


def induced_matching_number(
    G: Graph, candidate_edges: list[Edge] | None = None
) -> InvariantValue:
    """Induced matching number: maximum set of edges no edge of G joins.

    ``candidate_edges`` optionally restricts the search to a subset of the
    edge set (used e.g. to probe matchings built from pendant edges only);
    the value is then the maximum over induced matchings inside that subset.
    """
    edges = sorted(tuple(sorted(e)) for e in candidate_edges) if candidate_edges is not None else G.edges()
    for u, v in edges:
        if not G.has_edge(u, v):
            raise ValueError(f"candidate edge ({u}, {v}) is not an edge of the graph")
    m = len(edges)
    conflict = [0] * m
    for i in range(m):
        a, b = edges[i]
        cover_i = G.nbr[a] | G.nbr[b] | 1 << a | 1 << b
        for j in range(i + 1, m):
            c, d = edges[j]
            if cover_i & (1 << c | 1 << d):
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i

    best_size = 0
    best: tuple[int, ...] = ()

    def extend(chosen: tuple[int, ...], cand: int) -> None:
        nonlocal best_size, best
        if len(chosen) > best_size:
            best_size, best = len(chosen), chosen
        while cand:
            if len(chosen) + cand.bit_count() <= best_size:
                return
            i = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            extend(chosen + (i,), cand & ~conflict[i])

    extend((), (1 << m) - 1)
    witness = tuple(edges[i] for i in best)
    _certify(
        is_induced_matching(G, witness) and len(witness) == best_size,
        INDUCED_MATCHING,
    )
    return InvariantValue(INDUCED_MATCHING, best_size, witness)


def is_perfect_matching(G: Graph, edges: tuple[Edge, ...]) -> bool:
    seen = 0
    for u, v in edges:
        if not G.has_edge(u, v):
            return False
        pair = 1 << u | 1 << v
        if seen & pair:
            return False
        seen |= pair
    return seen == G.full_mask


def has_perfect_matching(G: Graph) -> InvariantValue:
    """Perfect-matching existence with a witness matching when one exists.

    Exhaustive search matching the lowest unmatched vertex first, memoised
    on the set of unmatched vertices; exact at this scale.
    """
    if G.n % 2 == 1 or not G.is_isolate_free():
        return InvariantValue(PERFECT_MATCHING, False, None)
    nbr = G.nbr
    memo: dict[int, tuple[Edge, ...] | None] = {}

    def solve(mask: int) -> tuple[Edge, ...] | None:
        if mask == 0:
            return ()
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        result = None
        for u in bits(nbr[v] & mask):
            rest = solve(mask & ~(1 << v) & ~(1 << u))
            if rest is not None:
                result = ((v, u),) + rest
                break
        memo[mask] = result
        return result

    matching = solve(G.full_mask)
    if matching is None:
        return InvariantValue(PERFECT_MATCHING, False, None)
    _certify(is_perfect_matching(G, matching), PERFECT_MATCHING)
    return InvariantValue(PERFECT_MATCHING, True, matching)
