"""Exact minimax engines for the sequential total domination invariants.

All three games run over bitmask states.  The key observation for the
indicated game is that the dominated mask alone determines the rest of the
game: legal indications depend only on the mask, the replies available for
an indicated vertex are its whole open neighborhood regardless of what was
played before, and every round grows the built set by exactly one vertex.
Memo tables therefore key on the dominated mask (plus the player to move
for the alternating game), are private to one solve, and are discarded
afterward.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .graph import Graph, VertexSet, bits, require_isolate_free


class Role(Enum):
    DOMINATOR = "dominator"
    STALLER = "staller"


class PolicyError(RuntimeError):
    """A policy returned an illegal move; carries the offending state."""


@dataclass(frozen=True)
class GameState:
    """Snapshot handed to policies: dominated mask plus declared set and move count.

    ``dominated`` is the union of the declared set and the open neighborhood
    of everything played so far; the game is over exactly when it equals
    the whole vertex set.
    """

    graph: Graph
    declared: VertexSet
    dominated: VertexSet
    moves: int

    @property
    def finished(self) -> bool:
        return self.dominated.mask == self.graph.full_mask

    def describe(self) -> str:
        return (
            f"move {self.moves}, dominated={sorted(self.dominated)}, "
            f"declared={sorted(self.declared)} on {self.graph!r}"
        )


@dataclass(frozen=True)
class Policy:
    """Deterministic move rule for one player.

    For a Dominator policy the chooser maps a state to the vertex to
    indicate (which must not be dominated yet); for a Staller policy it maps
    a state plus the indicated vertex to the reply (a neighbor of it).
    """

    role: Role
    name: str
    chooser: Callable
    data: object = None

    def move(self, state: GameState, indicated: int | None = None) -> int:
        if self.role is Role.DOMINATOR:
            return self.chooser(state)
        if indicated is None:
            raise ValueError("staller policies need the indicated vertex")
        return self.chooser(state, indicated)


class IndicatedGameSolver:
    """Minimax value of the indicated game from any dominated mask.

    ``value(M)`` is the number of further selections under optimal play
    when the vertices of M are already totally dominated, i.e. the game
    value of the partially total dominated graph.  One instance answers
    queries for every mask of the same graph off a shared memo table.
    """

    def __init__(self, G: Graph):
        require_isolate_free(G)
        self.graph = G
        self._nbr = G.nbr
        self._full = G.full_mask
        self._memo: dict[int, int] = {self._full: 0}

    def value(self, mask: int) -> int:
        memo = self._memo
        cached = memo.get(mask)
        if cached is not None:
            return cached
        nbr = self._nbr
        full = self._full
        best = full.bit_count() + 1
        undominated = ~mask & full
        rest = undominated
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            # Staller answers with any neighbor of v.  A reply that was
            # already played cannot occur here: a played vertex has its whole
            # neighborhood dominated, so v would not have been indicatable.
            worst = 0
            replies = nbr[v]
            while replies:
                u = (replies & -replies).bit_length() - 1
                replies &= replies - 1
                after = mask | nbr[u]
                sub = memo.get(after)
                if sub is None:
                    sub = self.value(after)
                if sub > worst:
                    worst = sub
            if worst + 1 < best:
                best = worst + 1
        memo[mask] = best
        return best

    def best_indication(self, mask: int) -> int:
        """Smallest-index optimal vertex for Dominator to indicate."""
        if mask == self._full:
            raise ValueError("game already complete")
        target = self.value(mask)
        for v in bits(~mask & self._full):
            worst = 0
            for u in bits(self._nbr[v]):
                worst = max(worst, self.value(mask | self._nbr[u]))
            if worst + 1 == target:
                return v
        raise AssertionError("no indication achieves the minimax value")

    def best_selection(self, mask: int, indicated: int) -> int:
        """Smallest-index optimal reply for Staller to the indicated vertex."""
        if mask >> indicated & 1:
            raise ValueError(f"vertex {indicated} is already dominated")
        best_u = -1
        worst = -1
        for u in bits(self._nbr[indicated]):
            val = self.value(mask | self._nbr[u])
            if val > worst:
                worst = val
                best_u = u
        if best_u < 0:
            raise AssertionError("indicated vertex has no neighbors")
        return best_u


def gti(G: Graph, declared: VertexSet | None = None) -> int:
    """Indicated total domination number of G, or of G with a declared set.

    Dominator indicates undominated vertices to minimise, Staller selects
    replies from their neighborhoods to maximise, and the value counts the
    selections made when both play optimally.
    """
    solver = IndicatedGameSolver(G)
    mask = 0 if declared is None else _declared_mask(G, declared)
    return solver.value(mask)


def _declared_mask(G: Graph, declared: VertexSet) -> int:
    if declared.n != G.n:
        raise ValueError("declared set capacity does not match the graph")
    return declared.mask


def gtg(G: Graph) -> int:
    """Game total domination number (Dominator-start game).

    Players alternate, every move must totally dominate a new vertex,
    Dominator minimises and Staller maximises the total number of moves.
    """
    require_isolate_free(G)
    nbr = G.nbr
    full = G.full_mask
    n = G.n
    memo: dict[tuple[int, bool], int] = {}

    def value(mask: int, dominators_turn: bool) -> int:
        if mask == full:
            return 0
        key = (mask, dominators_turn)
        cached = memo.get(key)
        if cached is not None:
            return cached
        best = -1
        for u in range(n):
            if nbr[u] & ~mask:
                sub = 1 + value(mask | nbr[u], not dominators_turn)
                if best < 0 or (sub < best if dominators_turn else sub > best):
                    best = sub
        memo[key] = best
        return best

    return value(0, True)


def grundy_t(G: Graph) -> int:
    """Grundy total domination number: longest total dominating sequence."""
    require_isolate_free(G)
    nbr = G.nbr
    full = G.full_mask
    n = G.n
    memo: dict[int, int] = {}

    def value(mask: int) -> int:
        if mask == full:
            return 0
        cached = memo.get(mask)
        if cached is not None:
            return cached
        best = 0
        for u in range(n):
            if nbr[u] & ~mask:
                sub = 1 + value(mask | nbr[u])
                if sub > best:
                    best = sub
        memo[mask] = best
        return best

    return value(0)


def best_response_length(G: Graph, declared: VertexSet | None, fixed: Policy) -> int:
    """Game length when ``fixed`` plays one side and the other side is optimal.

    The fixed side's branching collapses to the policy's single choice; the
    free side is solved exactly against it.  Raises PolicyError when the
    policy returns an illegal move.
    """
    require_isolate_free(G)
    declared = declared if declared is not None else VertexSet(G.n)
    start = _declared_mask(G, declared)
    nbr = G.nbr
    full = G.full_mask
    n = G.n
    # Policies may consult the move count, so the memo keys on (mask, move).
    memo: dict[tuple[int, int], int] = {}

    def state_for(mask: int, moves: int) -> GameState:
        return GameState(G, declared, VertexSet(n, mask), moves)

    def value(mask: int, moves: int) -> int:
        if mask == full:
            return 0
        key = (mask, moves)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if fixed.role is Role.DOMINATOR:
            v = fixed.move(state_for(mask, moves))
            if not (isinstance(v, int) and 0 <= v < n) or mask >> v & 1:
                raise PolicyError(
                    f"policy {fixed.name!r} indicated illegal vertex {v!r} at "
                    + state_for(mask, moves).describe()
                )
            best = 0
            for u in bits(nbr[v]):
                best = max(best, 1 + value(mask | nbr[u], moves + 1))
        else:
            best = -1
            for v in bits(~mask & full):
                u = fixed.move(state_for(mask, moves), v)
                if not (isinstance(u, int) and 0 <= u < n) or not nbr[v] >> u & 1:
                    raise PolicyError(
                        f"policy {fixed.name!r} selected illegal vertex {u!r} for "
                        f"indicated {v} at " + state_for(mask, moves).describe()
                    )
                sub = 1 + value(mask | nbr[u], moves + 1)
                if best < 0 or sub < best:
                    best = sub
        memo[key] = best
        return best

    return value(start, 0)


def optimal_policy(G: Graph, role: Role) -> Policy:
    """Policy that replays the exact solver's smallest-index optimal move."""
    solver = IndicatedGameSolver(G)
    if role is Role.DOMINATOR:
        return Policy(role, "optimal-dominator", lambda s: solver.best_indication(s.dominated.mask))
    return Policy(
        role,
        "optimal-staller",
        lambda s, v: solver.best_selection(s.dominated.mask, v),
    )


def play_game(
    G: Graph,
    dominator: Policy,
    staller: Policy,
    declared: VertexSet | None = None,
) -> list[tuple[int, int]]:
    """Play one full indicated game; returns the (indicated, selected) rounds.

    Checks every move against the legality rules, including the no-replay
    invariant: the selected vertex can never have been played before,
    because a played vertex has its whole neighborhood dominated and the
    indicated vertex would not have been legal.
    """
    require_isolate_free(G)
    if dominator.role is not Role.DOMINATOR or staller.role is not Role.STALLER:
        raise ValueError("policies passed for the wrong roles")
    declared = declared if declared is not None else VertexSet(G.n)
    mask = _declared_mask(G, declared)
    played = 0
    rounds: list[tuple[int, int]] = []
    while mask != G.full_mask:
        state = GameState(G, declared, VertexSet(G.n, mask), len(rounds))
        v = dominator.move(state)
        if not (0 <= v < G.n) or mask >> v & 1:
            raise PolicyError(
                f"policy {dominator.name!r} indicated illegal vertex {v!r} at "
                + state.describe()
            )
        u = staller.move(state, v)
        if not (0 <= u < G.n) or not G.nbr[v] >> u & 1:
            raise PolicyError(
                f"policy {staller.name!r} selected illegal vertex {u!r} for "
                f"indicated {v} at " + state.describe()
            )
        if played >> u & 1:
            raise AssertionError(
                f"replayed vertex {u}: indicated {v} should already be dominated"
            )
        played |= 1 << u
        mask |= G.nbr[u]
        rounds.append((v, u))
    return rounds
