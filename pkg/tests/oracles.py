"""Independent reference implementations used to cross-check the library.

Everything here is deliberately naive (matrix powers, triple loops,
explicit walk enumeration) and shares no code with the paths under test.
"""

from __future__ import annotations

import numpy as np

BIG = 10**6


def floyd_warshall(adj: np.ndarray) -> np.ndarray:
    n = adj.shape[0]
    dist = np.full((n, n), BIG, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    dist[adj] = 1
    for k in range(n):
        dist = np.minimum(dist, dist[:, k:k + 1] + dist[k:k + 1, :])
    return dist


def girth_by_walks(adj: np.ndarray) -> int | None:
    """Shortest closed walk length >= 2 via boolean matrix powers."""
    n = adj.shape[0]
    power = np.eye(n, dtype=bool)
    for length in range(1, n + 1):
        power = power @ adj
        if length >= 2 and power.diagonal().any():
            return length
    return None


def tensor_by_loops(class_of: np.ndarray, nclasses: int):
    """Intersection counts per ordered pair, or None when not constant."""
    n = class_of.shape[0]
    p = np.full((nclasses, nclasses, nclasses), -1, dtype=np.int64)
    for x in range(n):
        for y in range(n):
            counts = np.zeros((nclasses, nclasses), dtype=np.int64)
            for z in range(n):
                counts[class_of[x, z], class_of[z, y]] += 1
            l = class_of[x, y]
            for i in range(nclasses):
                for j in range(nclasses):
                    if p[i, j, l] == -1:
                        p[i, j, l] = counts[i, j]
                    elif p[i, j, l] != counts[i, j]:
                        return None
    return p


def search_by_brute_force(graph, enumerate_orientations, wdrd_report,
                          canonical_form, max_edges=20):
    """Reference search: full enumeration + report-level filtering."""
    forms = {}
    labelled = 0
    for cand in enumerate_orientations(graph, max_edges=max_edges):
        rep = wdrd_report(cand)
        if rep.is_wdrd and rep.commutative:
            labelled += 1
            forms.setdefault(canonical_form(cand), 0)
            forms[canonical_form(cand)] += 1
    return labelled, dict(sorted(forms.items()))
