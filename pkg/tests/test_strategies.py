"""Scripted policies: legality, guaranteed bounds, and certification."""

import pytest

from tdgamelab import (
    PolicyError,
    Role,
    best_response_length,
    build_graph,
    build_partition_witness,
    dominator_leaf_policy,
    dominator_path_policy,
    family,
    gti,
    optimal_policy,
    parse_family_spec,
    play_game,
    staller_partition_policy,
    upper_gamma_t,
)
from tdgamelab.families import cycle_graph, path_graph, star_graph, support_vertices
from tdgamelab.verify import path_game_value


class TestPartitionWitness:
    def test_parts_cover_and_respect_neighborhoods(self):
        G = path_graph(7)
        S = upper_gamma_t(G).witness
        witness = build_partition_witness(G, S)
        witness.validate(G)  # raises on any defect
        assert sorted(witness.order) == sorted(S)

    def test_requires_minimal_td_set(self):
        G = path_graph(4)
        from tdgamelab import VertexSet

        with pytest.raises(ValueError):
            build_partition_witness(G, VertexSet.of(4, [0, 1, 2]))


class TestStallerPartitionPolicy:
    @pytest.mark.parametrize(
        "spec,lower",
        [("path:5", 4), ("gk:1", 2), ("cycle:6", 4), ("bk:2", 2)],
    )
    def test_forces_at_least_upper_gamma(self, spec, lower):
        G = family(parse_family_spec(spec))
        assert upper_gamma_t(G).value == lower
        assert best_response_length(G, None, staller_partition_policy(G)) >= lower

    def test_k2_forced_game(self):
        G = build_graph(2, [(0, 1)])
        assert best_response_length(G, None, staller_partition_policy(G)) == 2

    def test_never_selects_outside_base_set(self):
        G = family(parse_family_spec("substar:3,1"))
        policy = staller_partition_policy(G)
        base = set(policy.data.base_set)
        rounds = play_game(G, optimal_policy(G, Role.DOMINATOR), policy)
        assert {u for _, u in rounds} <= base

    def test_forces_upper_gamma_on_arbitrary_graphs(self):
        # The partition guarantee is graph-independent: every member of the
        # chosen set keeps a private neighbor, so the game cannot end early.
        import random

        from tdgamelab.verify import random_isolate_free_graph

        rng = random.Random(0xBEEF)
        for _ in range(40):
            G = random_isolate_free_graph(rng.randint(3, 8), rng.uniform(0.3, 0.8), rng)
            assert (
                best_response_length(G, None, staller_partition_policy(G))
                >= upper_gamma_t(G).value
            )


class TestDominatorPathPolicy:
    @pytest.mark.parametrize("n", [6, 7, 8])
    def test_residue_cases(self, n):
        # The three opening scripts, one per residue of n mod 3.
        assert best_response_length(path_graph(n), None, dominator_path_policy(n)) <= path_game_value(n)

    def test_all_orders_meet_bound(self):
        for n in range(2, 16):
            achieved = best_response_length(path_graph(n), None, dominator_path_policy(n))
            assert achieved <= path_game_value(n)

    def test_rejects_other_graphs(self):
        with pytest.raises(PolicyError):
            best_response_length(cycle_graph(6), None, dominator_path_policy(6))

    def test_rejects_tiny_orders(self):
        with pytest.raises(ValueError):
            dominator_path_policy(1)


class TestDominatorLeafPolicy:
    def test_double_star(self):
        T = build_graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
        assert len(support_vertices(T)) == 2
        assert best_response_length(T, None, dominator_leaf_policy(T)) <= 2

    def test_star(self):
        T = star_graph(4)
        assert best_response_length(T, None, dominator_leaf_policy(T)) == 2

    def test_k2(self):
        T = build_graph(2, [(0, 1)])
        assert best_response_length(T, None, dominator_leaf_policy(T)) <= 2

    def test_rejects_trees_with_internal_non_support(self):
        # P_5's middle vertex is neither a leaf nor a support vertex.
        with pytest.raises(ValueError):
            dominator_leaf_policy(path_graph(5))

    def test_rejects_non_trees(self):
        with pytest.raises(ValueError):
            dominator_leaf_policy(cycle_graph(5))


class TestJointCertification:
    def test_scripts_pin_path_values_without_exact_solver(self):
        for n in range(2, 16):
            P = path_graph(n)
            bound = path_game_value(n)
            upper = best_response_length(P, None, dominator_path_policy(n))
            lower = best_response_length(P, None, staller_partition_policy(P))
            assert upper <= bound <= lower
            # Cross-check the pinned value against the exact solver.
            assert gti(P) == bound

    def test_policies_always_return_legal_moves(self):
        for spec in ["path:9", "substar:3,1", "star:4"]:
            G = family(parse_family_spec(spec))
            staller = staller_partition_policy(G)
            rounds = play_game(G, optimal_policy(G, Role.DOMINATOR), staller)
            assert rounds  # play_game validates legality of every move
