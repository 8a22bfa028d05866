"""Exhaustive orientation search over a prescribed underlying graph.

Every edge of the input graph takes one of three states (Forward, Backward,
Digon); the 3^|E| resulting digraphs are checked for being commutative
weakly distance-regular, with a fixed filter order (all-digon shortcut,
strong connectivity, scheme axioms, commutativity).  Survivors are
re-verified independently, deduplicated by canonical form and reported in
canonical-form order, so single-threaded and parallel runs emit
byte-identical class lists.

The optional degree prune cuts subtrees that cannot carry constant
digon/out/in valencies (necessary for any association scheme) and never
changes the surviving classes; the skipped-leaf accounting keeps
examined + skipped = 3^|E| exact.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import kernel
from .analysis import type_set, wdrd_report
from .canon import canonical_digraph, canonical_form
from .digraph import Digraph, format_dgf
from .errors import NotSymmetricError, TooLargeError, TooManyEdgesError
from .generators import LabeledGraph
from .scheme import attached_partition, verify_association_scheme

_FWD, _BWD, _DIG = 0, 1, 2

PRUNE_MODES = ("none", "degree")


@dataclass(frozen=True)
class FoundClass:
    """One isomorphism class of surviving digraphs, canonically labelled."""

    digraph: Digraph
    canonical: bytes
    commutative: bool
    type_set: tuple[int, ...]
    valencies: tuple[tuple[tuple[int, int], int], ...]
    labelled_count: int


@dataclass(frozen=True)
class SearchReport:
    """Statistics and surviving classes of one orientation search."""

    graph_id: str
    n: int
    edge_count: int
    total_candidates: int
    examined: int
    wdrd_count: int
    iso_classes: tuple[FoundClass, ...]
    noncommutative_count: int
    noncommutative_classes: tuple[FoundClass, ...]
    prune_stats: dict[str, int]
    prune: str
    jobs: int
    use_reversal: bool

    def core(self) -> dict:
        """The semantic payload: everything except traversal diagnostics.

        Pruned and unpruned runs agree on this part; `examined` and
        `prune_stats` legitimately differ between them."""
        d = report_to_dict(self)
        for k in ("examined", "prune_stats", "prune", "jobs", "use_reversal"):
            d.pop(k)
        return d


def _underlying_edges(g: Digraph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in g.arcs() if u < v]


def word_to_digraph(n: int, edges, word: bytes) -> Digraph:
    """Rebuild the digraph encoded by an edge-state word."""
    arcs = []
    for (u, v), s in zip(edges, word):
        if s == _FWD:
            arcs.append((u, v))
        elif s == _BWD:
            arcs.append((v, u))
        else:
            arcs.append((u, v))
            arcs.append((v, u))
    return Digraph.from_arcs(n, arcs)


def enumerate_orientations(g, max_edges: int = 20):
    """Yield all 3^|E| orientations of a graph.

    Edges are taken in lexicographic order and states cycle
    Forward -> Backward -> Digon, the last edge fastest."""
    d = g.graph if isinstance(g, LabeledGraph) else g
    if not d.is_symmetric():
        raise NotSymmetricError("orientation enumeration needs a graph")
    edges = _underlying_edges(d)
    if len(edges) > max_edges:
        raise TooManyEdgesError(
            f"{len(edges)} edges exceed the cap {max_edges}; raise max_edges "
            "to confirm")
    for word in itertools.product((_FWD, _BWD, _DIG), repeat=len(edges)):
        yield word_to_digraph(d.n, edges, bytes(word))


def _branch(args):
    n, edges, prefix, prune_degree, use_reversal = args
    return kernel.search_run(n, edges, prefix=prefix,
                             prune_degree=prune_degree,
                             use_reversal=use_reversal)


_STAT_KEYS = ("examined", "skipped_degree", "skipped_reversal", "symmetric",
              "not_strongly_connected", "axiom", "noncommutative")


def search_commutative_wdrd(g, *, graph_id: str | None = None,
                            prune: str = "none", jobs: int = 1,
                            max_edges: int = 20,
                            use_reversal: bool = False) -> SearchReport:
    """Search all orientations of `g` for commutative weakly
    distance-regular digraphs.

    Returns the deduplicated isomorphism classes (re-verified after the
    kernel pass) plus rejection statistics.  `prune="degree"` enables the
    sound valency prune; `jobs > 1` splits the edge-state space by fixed
    prefixes across processes with a deterministic merge."""
    d = g.graph if isinstance(g, LabeledGraph) else g
    if not d.is_symmetric():
        raise NotSymmetricError("orientation search needs a graph")
    if prune not in PRUNE_MODES:
        raise ValueError(f"prune must be one of {PRUNE_MODES}")
    edges = _underlying_edges(d)
    ne = len(edges)
    if ne > max_edges:
        raise TooManyEdgesError(
            f"{ne} edges exceed the cap {max_edges}; raise max_edges to confirm")
    if ne > 39:
        raise TooManyEdgesError("kernel limit: at most 39 edges")
    if d.n > 64:
        raise TooLargeError("kernel limit: at most 64 vertices")
    if graph_id is None:
        graph_id = f"graph(n={d.n}, edges={ne})"
    prune_degree = prune == "degree"

    if jobs <= 1:
        results = [kernel.search_run(d.n, edges, prune_degree=prune_degree,
                                     use_reversal=use_reversal)]
    else:
        k = 0
        while 3 ** k < 4 * jobs and k < ne:
            k += 1
        prefixes = list(itertools.product((0, 1, 2), repeat=k))
        work = [(d.n, edges, p, prune_degree, use_reversal) for p in prefixes]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_branch, work, chunksize=1))

    stats = {k: 0 for k in _STAT_KEYS}
    words: list[bytes] = []
    words_nc: list[bytes] = []
    for r in results:
        for k in _STAT_KEYS:
            stats[k] += r[k]
        words.extend(r["survivors"])
        words_nc.extend(r["survivors_noncomm"])

    total = 3 ** ne
    accounted = (stats["examined"] + stats["skipped_degree"]
                 + stats["skipped_reversal"])
    assert accounted == total, "leaf accounting out of balance"

    survivors = [word_to_digraph(d.n, edges, w) for w in words]
    if use_reversal:
        survivors.extend(s.reverse() for s in list(survivors))
    nc_survivors = [word_to_digraph(d.n, edges, w) for w in words_nc]
    if use_reversal:
        nc_survivors.extend(s.reverse() for s in list(nc_survivors))

    iso = _dedupe(survivors, commutative=True, verify=True)
    iso_nc = _dedupe(nc_survivors, commutative=False, verify=True)

    prune_stats = {k: stats[k] for k in
                   ("symmetric", "not_strongly_connected", "axiom",
                    "skipped_degree", "skipped_reversal")}
    return SearchReport(
        graph_id=graph_id,
        n=d.n,
        edge_count=ne,
        total_candidates=total,
        examined=stats["examined"],
        wdrd_count=len(words),
        iso_classes=iso,
        noncommutative_count=stats["noncommutative"],
        noncommutative_classes=iso_nc,
        prune_stats=prune_stats,
        prune=prune,
        jobs=jobs,
        use_reversal=use_reversal,
    )


def _dedupe(survivors, commutative: bool, verify: bool) -> tuple[FoundClass, ...]:
    classes: dict[bytes, tuple[Digraph, int]] = {}
    for s in survivors:
        if verify:
            rep = wdrd_report(s)
            if not (rep.is_wdrd and rep.commutative == commutative):
                raise AssertionError(
                    "kernel survivor failed independent re-verification")
        form = canonical_form(s)
        if form in classes:
            classes[form] = (classes[form][0], classes[form][1] + 1)
        else:
            classes[form] = (canonical_digraph(s), 1)
    out = []
    for form in sorted(classes):
        rep, cnt = classes[form]
        scheme = verify_association_scheme(attached_partition(rep))
        valencies = tuple(sorted(
            (cls, int(scheme.k[i])) for i, cls in enumerate(scheme.classes)))
        out.append(FoundClass(
            digraph=rep,
            canonical=form,
            commutative=commutative,
            type_set=tuple(sorted(type_set(rep))),
            valencies=valencies,
            labelled_count=cnt,
        ))
    return tuple(out)


def report_to_dict(r: SearchReport) -> dict:
    """Stable JSON-ready serialization of a search report."""

    def cls_dict(c: FoundClass) -> dict:
        return {
            "canonical": c.canonical.hex(),
            "dgf": format_dgf(c.digraph),
            "commutative": c.commutative,
            "type_set": list(c.type_set),
            "valencies": [[list(lbl), k] for lbl, k in c.valencies],
            "labelled_count": c.labelled_count,
        }

    return {
        "graph_id": r.graph_id,
        "n": r.n,
        "edge_count": r.edge_count,
        "total_candidates": r.total_candidates,
        "examined": r.examined,
        "wdrd_count": r.wdrd_count,
        "iso_classes": [cls_dict(c) for c in r.iso_classes],
        "noncommutative_count": r.noncommutative_count,
        "noncommutative_classes": [cls_dict(c) for c in r.noncommutative_classes],
        "prune_stats": dict(sorted(r.prune_stats.items())),
        "prune": r.prune,
        "jobs": r.jobs,
        "use_reversal": r.use_reversal,
    }
