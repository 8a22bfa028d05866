import itertools
import json

import pytest

from wdrd import (
    are_isomorphic,
    build_digraph,
    canonical_form,
    cayley_cyclic,
    complete_graph,
    enumerate_orientations,
    johnson,
    search_commutative_wdrd,
    wdrd_report,
)
from wdrd.search import report_to_dict, word_to_digraph
from wdrd.errors import NotSymmetricError, TooManyEdgesError
from oracles import search_by_brute_force


def c4():
    return cayley_cyclic(4, {1, 3})


class TestEnumerate:
    def test_counts(self):
        assert sum(1 for _ in enumerate_orientations(complete_graph(2))) == 3
        assert sum(1 for _ in enumerate_orientations(complete_graph(3))) == 27

    def test_order_is_lexicographic_with_last_edge_fastest(self):
        cands = list(enumerate_orientations(complete_graph(2)))
        # single edge (0,1): Forward, Backward, Digon
        assert [sorted(c.arcs()) for c in cands] == [
            [(0, 1)], [(1, 0)], [(0, 1), (1, 0)]]
        first, second = itertools.islice(enumerate_orientations(complete_graph(3)), 2)
        assert sorted(first.arcs()) == [(0, 1), (0, 2), (1, 2)]
        assert sorted(second.arcs()) == [(0, 1), (0, 2), (2, 1)]

    def test_underlying_graph_preserved(self):
        g = c4()
        for cand in enumerate_orientations(g):
            assert cand.underlying_graph() == g

    def test_edge_cap(self):
        with pytest.raises(TooManyEdgesError):
            list(enumerate_orientations(johnson(4, 2), max_edges=5))

    def test_needs_symmetric_input(self):
        with pytest.raises(NotSymmetricError):
            list(enumerate_orientations(cayley_cyclic(6, {1, 2})))


class TestToySearches:
    def test_k2_empty(self):
        rep = search_commutative_wdrd(complete_graph(2))
        assert rep.total_candidates == 3 and rep.examined == 3
        assert not rep.iso_classes

    def test_k3_directed_triangle(self):
        rep = search_commutative_wdrd(complete_graph(3))
        assert len(rep.iso_classes) == 1
        tri = build_digraph(3, [(0, 1), (1, 2), (2, 0)])
        assert are_isomorphic(rep.iso_classes[0].digraph, tri)
        assert rep.wdrd_count == 2  # both chiralities, one class

    def test_c4_directed_cycle(self):
        rep = search_commutative_wdrd(c4())
        assert len(rep.iso_classes) == 1
        cyc = cayley_cyclic(4, {1})
        assert are_isomorphic(rep.iso_classes[0].digraph, cyc)

    @pytest.mark.parametrize("graph,gid", [
        (complete_graph(2), "K2"), (complete_graph(3), "K3"),
        (cayley_cyclic(4, {1, 3}), "C4"),
    ])
    def test_matches_brute_force_oracle(self, graph, gid):
        labelled, forms = search_by_brute_force(
            graph, enumerate_orientations, wdrd_report, canonical_form)
        rep = search_commutative_wdrd(graph, graph_id=gid)
        assert rep.wdrd_count == labelled
        assert {c.canonical: c.labelled_count for c in rep.iso_classes} == forms

    @pytest.mark.parametrize("graph,gid", [
        (complete_graph(2), "K2"), (complete_graph(3), "K3"),
        (cayley_cyclic(4, {1, 3}), "C4"),
    ])
    def test_pruned_equals_unpruned(self, graph, gid):
        a = search_commutative_wdrd(graph, graph_id=gid, prune="none")
        b = search_commutative_wdrd(graph, graph_id=gid, prune="degree")
        assert a.core() == b.core()
        # exact leaf accounting in both modes
        for rep in (a, b):
            skipped = rep.prune_stats["skipped_degree"] + \
                rep.prune_stats["skipped_reversal"]
            assert rep.examined + skipped == rep.total_candidates

    def test_irregular_graph_has_no_wdrd(self):
        path = build_digraph(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
        a = search_commutative_wdrd(path, graph_id="P3")
        b = search_commutative_wdrd(path, graph_id="P3", prune="degree")
        assert not a.iso_classes and a.core() == b.core()
        assert b.examined == 0  # irregular: every leaf degree-pruned


class TestDeterminismAndParallel:
    def test_repeat_runs_byte_identical(self):
        a = search_commutative_wdrd(complete_graph(3))
        b = search_commutative_wdrd(complete_graph(3))
        assert json.dumps(report_to_dict(a), sort_keys=True) == \
            json.dumps(report_to_dict(b), sort_keys=True)

    @pytest.mark.parametrize("prune", ["none", "degree"])
    def test_jobs_identical(self, prune):
        g = c4()
        solo = search_commutative_wdrd(g, graph_id="C4", prune=prune)
        multi = search_commutative_wdrd(g, graph_id="C4", prune=prune, jobs=2)
        da, db = report_to_dict(solo), report_to_dict(multi)
        da.pop("jobs")
        db.pop("jobs")
        assert json.dumps(da, sort_keys=True) == json.dumps(db, sort_keys=True)

    def test_reversal_exploit_same_classes(self):
        g = complete_graph(3)
        base = search_commutative_wdrd(g)
        rev = search_commutative_wdrd(g, use_reversal=True)
        assert [c.canonical for c in base.iso_classes] == \
            [c.canonical for c in rev.iso_classes]
        assert rev.examined < base.examined


class TestSoundness:
    def test_survivors_reverify(self):
        rep = search_commutative_wdrd(complete_graph(3))
        for cls in rep.iso_classes:
            check = wdrd_report(cls.digraph)
            assert check.is_wdrd and check.commutative
            assert cls.type_set == tuple(sorted(check.type_set))

    def test_word_to_digraph_round_trip(self):
        edges = [(0, 1), (0, 2), (1, 2)]
        d = word_to_digraph(3, edges, bytes([0, 1, 2]))
        assert sorted(d.arcs()) == [(0, 1), (1, 2), (2, 0), (2, 1)]

    def test_johnson42_pruned_smoke(self):
        """Small but real: the degree-pruned octahedron search already
        produces the two classified digraphs."""
        rep = search_commutative_wdrd(johnson(4, 2), graph_id="J(4,2)",
                                      prune="degree")
        assert len(rep.iso_classes) == 2
        assert {c.type_set for c in rep.iso_classes} == {(3,), (3, 4)}
