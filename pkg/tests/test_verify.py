"""Verification harness: corpora, trees, continuation, survey, and the suite."""

import dataclasses
import json
from collections import deque
from itertools import product

import pytest

from tdgamelab import build_graph, check_continuation
from tdgamelab.families import cycle_graph, path_graph
from tdgamelab.verify import (
    CSV_HEADER,
    enumerate_trees,
    exhaustive_corpus,
    explore_trees,
    isolate_free_graphs,
    paper_claims,
    random_corpus,
    random_isolate_free_graph,
    random_leaf_support_tree,
    rows_to_csv,
    rows_to_json_lines,
    run_paper_suite,
    survey,
    survey_row,
)
import random

nx = pytest.importorskip("networkx")


# --- independent canonical form for trees (test-local oracle) ---------------


def _ecc_centers(edges, n):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    ecc = {}
    for s in range(n):
        dist = {s: 0}
        queue = deque([s])
        while queue:
            w = queue.popleft()
            for x in adj[w]:
                if x not in dist:
                    dist[x] = dist[w] + 1
                    queue.append(x)
        ecc[s] = max(dist.values())
    best = min(ecc.values())
    return [v for v in range(n) if ecc[v] == best], adj


def tree_code(edges, n):
    centers, adj = _ecc_centers(edges, n)

    def encode(v, parent):
        return "(" + "".join(sorted(encode(u, v) for u in adj[v] if u != parent)) + ")"

    if len(centers) == 1:
        return encode(centers[0], -1)
    c1, c2 = centers
    return "|".join(sorted([encode(c1, c2), encode(c2, c1)]))


def prufer_tree_codes(n):
    """Dedup oracle: decode every parent-code sequence and canonicalise."""
    codes = set()
    if n == 2:
        return {tree_code([(0, 1)], 2)}
    for seq in product(range(n), repeat=n - 2):
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        edges = []
        deg = list(degree)
        for v in seq:
            leaf = min(u for u in range(n) if deg[u] == 1)
            edges.append((leaf, v))
            deg[leaf] -= 1
            deg[v] -= 1
        a, b = (u for u in range(n) if deg[u] == 1)
        edges.append((a, b))
        codes.add(tree_code(edges, n))
    return codes


class TestExhaustiveEnumeration:
    def test_counts_match_atlas(self):
        expected = {}
        for H in nx.graph_atlas_g():
            n = H.number_of_nodes()
            if n >= 1 and H.number_of_nodes() and all(d > 0 for _, d in H.degree()):
                expected[n] = expected.get(n, 0) + 1
        for n in range(2, 8):
            assert len(isolate_free_graphs(n)) == expected.get(n, 0)

    def test_all_graphs_isolate_free_and_distinct(self):
        for n in range(2, 6):
            batch = isolate_free_graphs(n)
            assert all(G.is_isolate_free() for G in batch)
            assert len({G.nbr for G in batch}) == len(batch)

    def test_pairwise_non_isomorphic_small(self):
        for n in range(2, 6):
            batch = [nx.Graph(G.edges()) for G in isolate_free_graphs(n)]
            for g in batch:
                g.add_nodes_from(range(n))
            for i in range(len(batch)):
                for j in range(i + 1, len(batch)):
                    assert not nx.is_isomorphic(batch[i], batch[j])

    def test_corpus_labels(self):
        ids = [gid for gid, _ in exhaustive_corpus(3)]
        assert ids == ["exhaustive:n=2:i=0", "exhaustive:n=3:i=0", "exhaustive:n=3:i=1"]

    def test_order_cap(self):
        with pytest.raises(ValueError):
            isolate_free_graphs(8)


class TestTreeEnumeration:
    def test_counts(self):
        expected = [1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]
        assert [len(enumerate_trees(n)) for n in range(2, 13)] == expected

    def test_counts_match_networkx(self):
        for n in range(2, 13):
            assert len(enumerate_trees(n)) == sum(1 for _ in nx.nonisomorphic_trees(n))

    def test_trees_are_trees(self):
        for n in range(2, 10):
            for T in enumerate_trees(n):
                assert T.edge_count() == n - 1
                H = nx.Graph(T.edges())
                H.add_nodes_from(range(n))
                assert nx.is_connected(H)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
    def test_matches_prufer_dedup_oracle(self, n):
        ours = {tree_code(T.edges(), n) for T in enumerate_trees(n)}
        assert ours == prufer_tree_codes(n)

    def test_range_guard(self):
        with pytest.raises(ValueError):
            enumerate_trees(13)
        with pytest.raises(ValueError):
            enumerate_trees(1)


class TestContinuationChecker:
    def test_p5_exhaustive_clean(self):
        report = check_continuation(path_graph(5), mode="exhaustive")
        assert report.ok
        assert report.pairs_checked == 3**5

    def test_c6_exhaustive_clean(self):
        assert check_continuation(cycle_graph(6), mode="exhaustive").ok

    def test_sampled_mode_reproducible(self):
        G = cycle_graph(7)
        first = check_continuation(G, mode="sampled", samples=200, seed=11)
        second = check_continuation(G, mode="sampled", samples=200, seed=11)
        assert first == second

    def test_cost_guard(self):
        with pytest.raises(ValueError):
            check_continuation(build_graph(8, [(i, (i + 1) % 8) for i in range(8)]))

    def test_violations_carry_witnessing_pair(self):
        # The checker honestly reports the paw-graph counterexample, where
        # declaring the pendant dominated removes Dominator's forcing move.
        G = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
        report = check_continuation(G, mode="exhaustive")
        assert not report.ok
        assert ((0, 3), (0,)) in report.violations


class TestSurvey:
    def test_empty_corpus(self):
        assert list(survey([])) == []

    def test_exhaustive_four_passes_chains(self):
        rows = list(survey(exhaustive_corpus(4)))
        assert rows and all(not row.violations for row in rows)

    def test_incomparability_directions(self):
        from tdgamelab import family, parse_family_spec

        values = {
            spec: survey_row(spec, family(parse_family_spec(spec)))
            for spec in ("gk:1", "fk:6", "substar:3,1", "substar:4,3")
        }
        assert values["gk:1"].gti > values["gk:1"].ooir
        assert values["fk:6"].ooir > values["fk:6"].gti
        assert values["substar:3,1"].gti > values["substar:3,1"].gtg
        assert values["substar:4,3"].gtg > values["substar:4,3"].gti

    def test_csv_shape(self):
        rows = list(survey(exhaustive_corpus(3)))
        text = rows_to_csv(rows)
        lines = text.strip().splitlines()
        assert lines[0] == CSV_HEADER
        assert len(lines) == len(rows) + 1
        assert lines[1].startswith("exhaustive:n=2:i=0,2,")

    def test_json_lines_parse_back(self):
        rows = list(survey(exhaustive_corpus(3)))
        parsed = [json.loads(line) for line in rows_to_json_lines(rows).strip().splitlines()]
        assert [p["graph"] for p in parsed] == [r.graph for r in rows]
        assert all(p["violations"] == [] for p in parsed)

    def test_rows_deterministic(self):
        once = list(survey(exhaustive_corpus(4)))
        twice = list(survey(exhaustive_corpus(4)))
        assert once == twice


class TestRandomCorpus:
    def test_reproducible(self):
        a = random_corpus(6, 0.5, 5, seed=42)
        b = random_corpus(6, 0.5, 5, seed=42)
        assert [(gid, G.nbr) for gid, G in a] == [(gid, G.nbr) for gid, G in b]

    def test_isolate_free(self):
        rng = random.Random(3)
        for _ in range(20):
            assert random_isolate_free_graph(6, 0.3, rng).is_isolate_free()

    def test_retry_bound(self):
        rng = random.Random(0)
        with pytest.raises(ValueError):
            random_isolate_free_graph(6, 0.0, rng, max_retries=5)

    def test_leaf_support_trees(self):
        rng = random.Random(9)
        for _ in range(25):
            T, s = random_leaf_support_tree(rng)
            assert T.n <= 12
            assert T.edge_count() == T.n - 1
            supports = {
                v for v in range(T.n) if any(T.degree(u) == 1 for u in T.neighbors(v))
            }
            assert len(supports) == s >= 2
            for v in range(T.n):
                assert T.degree(v) == 1 or v in supports


class TestTreeProbes:
    def test_small_report_shape(self):
        report = explore_trees(5)
        assert len(report.rows) == 1 + 1 + 2 + 3
        assert not report.restricted_claim_violations
        lines = report.summary_lines()
        assert any("no counterexample found up to n=5" in line for line in lines)

    def test_path_rows_have_equality(self):
        report = explore_trees(7)
        for row in report.rows:
            tree = enumerate_trees(row.n)[row.index]
            degrees = sorted(tree.degree(v) for v in range(tree.n))
            is_path = degrees == [1, 1] + [2] * (tree.n - 2)
            if is_path:
                assert row.gamma_equal

    def test_leaf_support_trees_have_equality(self):
        rng = random.Random(5)
        for _ in range(10):
            T, s = random_leaf_support_tree(rng)
            from tdgamelab import gti, upper_gamma_t

            assert gti(T) == upper_gamma_t(T).value == s

    def test_no_restricted_violations_up_to_ten(self):
        report = explore_trees(10)
        assert not report.restricted_claim_violations
        # Observational columns: report, never assert, the open questions.
        assert isinstance(report.equality_counterexamples, tuple)

    def test_range_guard(self):
        with pytest.raises(ValueError):
            explore_trees(13)


@pytest.fixture(scope="module")
def quick_criteria():
    return run_paper_suite(criteria=[2, 5, 6, 9])


class TestSuite:
    def test_quick_criteria_pass(self, quick_criteria):
        assert quick_criteria.ok

    def test_report_is_deterministic_modulo_timing(self):
        once = run_paper_suite(criteria=[5, 6])
        twice = run_paper_suite(criteria=[5, 6])
        strip = lambda rows: [dataclasses.replace(r, seconds=0.0) for r in rows]
        assert strip(once.rows) == strip(twice.rows)

    def test_perturbed_expected_value_fails_exactly_that_row(self):
        claims = [c for c in paper_claims() if c.criterion in (5, 9)]
        target = claims[3]
        perturbed = [
            dataclasses.replace(c, expected=c.expected + 1) if c is target else c
            for c in claims
        ]
        baseline = run_paper_suite(claims=claims)
        report = run_paper_suite(claims=perturbed)
        assert baseline.ok
        assert [r.claim_id for r in report.failures()] == [target.claim_id]

    def test_all_criteria_present(self):
        criteria = {c.criterion for c in paper_claims()}
        assert criteria == set(range(1, 16))

    def test_render_mentions_failures(self):
        claims = [c for c in paper_claims() if c.criterion == 5][:2]
        bad = [dataclasses.replace(c, expected=99) for c in claims]
        report = run_paper_suite(claims=bad)
        text = report.render()
        assert "FAIL" in text and "0/2 checks passed" in text
