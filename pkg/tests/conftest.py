import itertools

import pytest

import cccenergy as cc
from cccenergy import group as gr

# Small grid shared by exhaustive unit tests (orders up to a few thousand).
SMALL_GRID = [
    (2, 1, 1), (2, 2, 1), (2, 3, 1), (2, 2, 2), (2, 3, 2), (2, 1, 2),
    (3, 1, 1), (3, 2, 1), (3, 2, 2), (5, 1, 1),
]


@pytest.fixture(scope="session")
def small_oracles():
    """Full brute-force pipeline results for the small grid, computed once."""
    out = {}
    for p, m, n in SMALL_GRID:
        params = cc.make_params(p, m, n)
        classes = cc.conjugacy_classes(params)
        graph = cc.build_ccc(classes, params)
        decomp = cc.decompose(graph)
        out[(p, m, n)] = {
            "params": params,
            "classes": classes,
            "graph": graph,
            "decomp": decomp,
            "energies": cc.energies_from_decomposition(decomp),
        }
    return out


def naive_ccc_edges(classes, params):
    """Reference adjacency: scan every member pair with scalar multiply."""
    noncentral = [c for c in classes if not c.is_central]
    edges = set()
    for i, j in itertools.combinations(range(len(noncentral)), 2):
        if any(
            gr.commutes(a, b, params)
            for a in noncentral[i].members
            for b in noncentral[j].members
        ):
            edges.add((i, j))
    return edges
