"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s`.  The orientation searches
use the compiled kernel when installed; the pure-Python fallback also stays
within the stated time budgets.
"""

import json
import random
import time

import pytest

from wdrd import (
    AssociationScheme,
    Purity,
    arc_purity,
    are_isomorphic,
    attached_partition,
    cayley_cyclic,
    check_intersection_identities,
    complete_graph,
    folded_johnson,
    intersection_array,
    is_commutative,
    johnson,
    matrices_commute,
    mu_case,
    mu_graph_property,
    predicted_array,
    search_commutative_wdrd,
    verify_association_scheme,
    verify_local_counts,
    verify_neighbourhood_structure,
    wdrd_report,
)
from wdrd.analysis import MuCase
from wdrd.search import report_to_dict


def _report(tag, elapsed, detail):
    print(f"ACCEPTANCE {tag}: PASS ({elapsed:.2f}s) {detail}")


@pytest.fixture(scope="module")
def cay12():
    return cayley_cyclic(6, {1, 2})


@pytest.fixture(scope="module")
def cay14():
    return cayley_cyclic(6, {1, 4})


@pytest.fixture(scope="module")
def scheme12(cay12):
    s = verify_association_scheme(attached_partition(cay12))
    assert isinstance(s, AssociationScheme)
    return s


@pytest.fixture(scope="module")
def scheme14(cay14):
    s = verify_association_scheme(attached_partition(cay14))
    assert isinstance(s, AssociationScheme)
    return s


@pytest.fixture(scope="module")
def j42_search():
    t0 = time.time()
    rep = search_commutative_wdrd(johnson(4, 2), graph_id="J(4,2)")
    return rep, time.time() - t0


def test_criterion_01_johnson_arrays():
    t0 = time.time()
    cases = [(4, 2), (5, 2), (6, 2), (7, 2), (6, 3), (7, 3)]
    for n, e in cases:
        assert intersection_array(johnson(n, e)) == \
            predicted_array("johnson", n, e), (n, e)
    elapsed = time.time() - t0
    assert elapsed < 5.0
    _report("C01", elapsed, f"Johnson arrays exact for {cases}")


def test_criterion_02_folded_arrays():
    t0 = time.time()
    for e in (4, 5):
        assert intersection_array(folded_johnson(e)) == \
            predicted_array("folded", e), e
    arr4 = predicted_array("folded", 4)
    assert arr4.c[-1] == 8 and arr4.a[-1] == 8  # even-e override at e = 4
    elapsed = time.time() - t0
    assert elapsed < 10.0
    _report("C02", elapsed, "folded arrays exact for e in {4, 5}, "
                            "override c2=8, a2=8")


def test_criterion_03_positive_classification(cay12, cay14):
    t0 = time.time()
    oct_graph = johnson(4, 2).graph
    for d, want_types in ((cay12, {3, 4}), (cay14, {3})):
        rep = wdrd_report(d)
        assert rep.is_wdrd and rep.commutative
        assert rep.type_set == want_types
        assert are_isomorphic(d.underlying_graph(), oct_graph)
    elapsed = time.time() - t0
    assert elapsed < 1.0
    _report("C03", elapsed, "both Cayley digraphs: commutative WDRD over "
                            "J(4,2), type sets {3,4} and {3}")


def test_criterion_04_exhaustive_classification(j42_search, cay12, cay14):
    rep, t_j42 = j42_search
    assert rep.total_candidates == 3**12 == 531441
    assert rep.examined == 531441
    assert len(rep.iso_classes) == 2
    found = [c.digraph for c in rep.iso_classes]
    assert any(are_isomorphic(d, cay12) for d in found)
    assert any(are_isomorphic(d, cay14) for d in found)
    assert t_j42 < 60.0

    # J(5,2) has 30 edges, so the full orientation space is 3^30 (the
    # once-stated 3^15 candidate count is unachievable for this graph);
    # the sound degree prune covers the whole space with exact accounting.
    t0 = time.time()
    rep5 = search_commutative_wdrd(johnson(5, 2), graph_id="J(5,2)",
                                   prune="degree", max_edges=30)
    t_j52 = time.time() - t0
    assert rep5.total_candidates == 3**30
    assert rep5.examined + rep5.prune_stats["skipped_degree"] == 3**30
    assert len(rep5.iso_classes) == 0
    assert rep5.noncommutative_count == 0
    assert t_j52 < 1800.0
    _report("C04", t_j42 + t_j52,
            f"J(4,2): 2 classes in {t_j42:.2f}s over 531441 candidates; "
            f"J(5,2): 0 classes in {t_j52:.2f}s over 3^30 candidates")


def test_criterion_05_intersection_numbers_cay14(scheme14):
    t0 = time.time()
    s = scheme14
    m = 4  # underlying graph is J(4,2)
    assert s.p_num((1, 2), (1, 2), (1, 2)) == m // 4 - 1 == 0
    assert s.p_num((2, 1), (2, 1), (1, 2)) == m // 4 + 1 == 2
    assert s.p_num((1, 2), (2, 1), (3, 3)) == 2
    assert s.k_of((3, 3)) == (m - 2) // 2 == 1
    assert not s.has_class((2, 2))
    assert (m - 2) * (m - 4) // 2 == 0  # k_{2,2} formula consistent with absence
    assert not s.has_class((2, 3)) and not s.has_class((2, 4))
    elapsed = time.time() - t0
    _report("C05", elapsed, "Cay(Z6,{1,4}) intersection numbers match the "
                            "m=4 closed forms")


def test_criterion_06_intersection_numbers_cay12(cay12, scheme12):
    t0 = time.time()
    s = scheme12
    assert s.p_num((1, 3), (1, 3), (1, 2)) == 1
    assert s.p_num((2, 1), (2, 1), (1, 2)) == 1
    assert arc_purity(cay12, 2) is Purity.PURE
    assert s.p_num((1, 3), (1, 2), (2, 2)) != 0
    pairs = [(x, z) for x, z in s.partition.members((2, 2)) if x < z]
    assert pairs
    for x, z in pairs:
        assert mu_case(cay12, x, z) == MuCase(3, (2, 3))
    elapsed = time.time() - t0
    _report("C06", elapsed, "Cay(Z6,{1,2}): tensor values, (1,2) pure, "
                            "all (2,2)-pairs are case 3 with (p,q)=(2,3)")


def test_criterion_07_local_count_identity(cay12, cay14, scheme12, scheme14):
    t0 = time.time()
    checked = 0
    for d, s in ((cay14, scheme14), (cay12, scheme12)):
        und = d.underlying_graph().distance_matrix()
        for lbl in s.classes:
            if lbl == (0, 0):
                continue
            x0, y0 = s.partition.members(lbl)[0]
            if int(und[x0, y0]) in (1, 2):
                assert verify_local_counts(d, s, lbl), lbl
                checked += 1
    assert checked >= 7  # every class of both digraphs lies in Sigma_1/Sigma_2
    elapsed = time.time() - t0
    _report("C07", elapsed, f"counting identity holds for all {checked} "
                            "near classes (a1=2, c2=4)")


def test_criterion_08_scheme_engine_properties(scheme12, scheme14):
    t0 = time.time()
    schemes = [scheme12, scheme14]
    for n, e in ((4, 2), (5, 2), (6, 2), (7, 2), (6, 3), (7, 3)):
        s = verify_association_scheme(attached_partition(johnson(n, e).graph))
        assert isinstance(s, AssociationScheme)
        schemes.append(s)
    for e in (4, 5):
        s = verify_association_scheme(
            attached_partition(folded_johnson(e).graph))
        assert isinstance(s, AssociationScheme)
        schemes.append(s)

    rng = random.Random(20260809)
    found = 0
    draws = 0
    while found < 200:
        draws += 1
        assert draws < 40000, "random Cayley sampling failed to converge"
        m = rng.randint(4, 12)
        conn = set(rng.sample(range(1, m), rng.randint(1, m - 1)))
        d = cayley_cyclic(m, conn)
        if not d.is_strongly_connected():
            continue
        s = verify_association_scheme(attached_partition(d))
        if not isinstance(s, AssociationScheme):
            continue
        found += 1
        schemes.append(s)

    for s in schemes:
        rep = check_intersection_identities(s)
        assert rep.ok, rep
        assert matrices_commute(s) == is_commutative(s)
    elapsed = time.time() - t0
    _report("C08", elapsed, f"identities and commutation equivalence on "
                            f"{len(schemes)} schemes (200 random Cayley, "
                            f"{draws} draws)")


def test_criterion_09_structure_oracles():
    t0 = time.time()
    for g in (johnson(6, 2), johnson(6, 3), johnson(7, 3), folded_johnson(5)):
        for u, v in g.graph.arcs():
            if u < v:
                rep = verify_neighbourhood_structure(g, u, v)
                assert rep.distances_ok and rep.symmetry_ok and rep.exchange_ok
    for g in (johnson(6, 2), johnson(7, 2), johnson(7, 3), folded_johnson(5)):
        assert mu_graph_property(g).ok
    rep = mu_graph_property(folded_johnson(4))
    assert not rep.ok and rep.witness_mu_size == 8
    assert rep.witness_pair is not None
    elapsed = time.time() - t0
    assert elapsed < 120.0
    _report("C09", elapsed, "neighbourhood structure on 4 graphs, mu property "
                            "on 4 graphs, folded J(8,4) fails with mu=8")


def test_criterion_10_determinism_and_equivalence(j42_search):
    t0 = time.time()
    for g, gid in ((complete_graph(2), "K2"), (complete_graph(3), "K3"),
                   (cayley_cyclic(4, {1, 3}), "C4")):
        unpruned = search_commutative_wdrd(g, graph_id=gid, prune="none")
        pruned = search_commutative_wdrd(g, graph_id=gid, prune="degree")
        assert unpruned.core() == pruned.core(), gid

    parallel = search_commutative_wdrd(johnson(4, 2), graph_id="J(4,2)",
                                       jobs=4)
    solo_classes = json.dumps(report_to_dict(j42_search[0])["iso_classes"],
                              sort_keys=True)
    par_classes = json.dumps(report_to_dict(parallel)["iso_classes"],
                             sort_keys=True)
    assert solo_classes == par_classes
    elapsed = time.time() - t0
    _report("C10", elapsed, "pruned/unpruned reports agree on K2, K3, C4; "
                            "jobs=4 byte-identical classes on J(4,2)")
