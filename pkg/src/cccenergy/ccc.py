"""Commuting conjugacy class graphs and their clique decompositions.

The graph has one vertex per non-central conjugacy class; two distinct
classes are adjacent when some member of one commutes with some member of
the other.  For the adjacency test it is enough to fix a single
representative of the first class and scan all members of the second:
if x' in the first class commutes with y' in the second, conjugating the
pair by the element carrying x' to the chosen representative carries y'
to another member of the second class and preserves commutation.

`build_ccc` is the brute-force oracle for the closed-form decomposition
`predicted_decomposition`; the two are compared by the verify harness and
must agree exactly whenever m >= n.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NotCliqueUnionError
from .group import ConjugacyClass, GroupParams

_CHUNK_ROWS = 1024


@dataclass
class CCCGraph:
    """Graph on non-central classes, adjacency kept as a dense bool matrix."""

    adjacency: np.ndarray  # (V, V) bool, symmetric, zero diagonal
    edge_count: int

    @property
    def num_vertices(self) -> int:
        return self.adjacency.shape[0]

    @classmethod
    def from_adjacency(cls, adjacency: np.ndarray) -> "CCCGraph":
        adj = np.asarray(adjacency, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be square")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        if adj.diagonal().any():
            raise ValueError("no self-loops allowed")
        return cls(adjacency=adj, edge_count=int(adj.sum()) // 2)


def build_ccc(classes: list[ConjugacyClass], params: GroupParams) -> CCCGraph:
    """Brute-force commuting conjugacy class graph.

    The all-pairs commutation test is vectorized: under the normal-form
    product law the a- and b-components of gh and hg coincide identically
    (both are a+a', b+b'), so g and h commute iff the z-exponents of the
    two products agree.  Both z-exponents are evaluated from the product
    law verbatim; nothing about the graph's structure is assumed.
    """
    noncentral = [cl for cl in classes if not cl.is_central]
    nv = len(noncentral)
    p = params.p

    reps = np.array([cl.representative for cl in noncentral], dtype=np.int64)
    width = max((cl.size for cl in noncentral), default=1)
    members = np.empty((nv, width, 3), dtype=np.int64)
    for i, cl in enumerate(noncentral):
        ms = sorted(cl.members)
        # pad with repeats; duplicates cannot change an any() reduction
        members[i, : len(ms)] = ms
        members[i, len(ms) :] = ms[0]

    rep_a = (reps[:, 0] % p).astype(np.int16)
    rep_b = (reps[:, 1] % p).astype(np.int16)
    rep_c = (reps[:, 2] % p).astype(np.int16)
    mem_a = (members[:, :, 0] % p).astype(np.int16)
    mem_b = (members[:, :, 1] % p).astype(np.int16)
    mem_c = (members[:, :, 2] % p).astype(np.int16)

    adjacency = np.zeros((nv, nv), dtype=bool)
    for lo in range(0, nv, _CHUNK_ROWS):
        hi = min(lo + _CHUNK_ROWS, nv)
        ra = rep_a[lo:hi, None, None]
        rb = rep_b[lo:hi, None, None]
        rc = rep_c[lo:hi, None, None]
        # z-exponent of (rep * member) and (member * rep) per the product law
        z_rm = (rc + mem_c[None, :, :] - mem_a[None, :, :] * rb) % p
        z_mr = (mem_c[None, :, :] + rc - ra * mem_b[None, :, :]) % p
        adjacency[lo:hi] = (z_rm == z_mr).any(axis=2)
    np.fill_diagonal(adjacency, False)
    return CCCGraph(adjacency=adjacency, edge_count=int(adjacency.sum()) // 2)


@dataclass(frozen=True)
class CliqueDecomposition:
    """Multiset of (count, size) parts of a disjoint union of cliques.

    Parts are kept in canonical order (descending size, then descending
    count) so that decompositions compare equal as multisets.
    """

    parts: tuple[tuple[int, int], ...]
    total_vertices: int
    total_edges: int

    @classmethod
    def from_parts(cls, parts) -> "CliqueDecomposition":
        merged: Counter[int] = Counter()
        for count, size in parts:
            if count < 0 or size < 1:
                raise ValueError(f"invalid part ({count}, {size})")
            if count:
                merged[size] += count
        canonical = tuple(
            (count, size) for size, count in sorted(merged.items(), reverse=True)
        )
        vertices = sum(count * size for count, size in canonical)
        edges = sum(count * size * (size - 1) // 2 for count, size in canonical)
        return cls(parts=canonical, total_vertices=vertices, total_edges=edges)

    def __str__(self) -> str:
        if not self.parts:
            return "empty"
        return "+".join(f"{count}K{size}" for count, size in self.parts)


def decompose(graph: CCCGraph) -> CliqueDecomposition:
    """Connected components, each verified to be a complete subgraph.

    Raises NotCliqueUnionError if any component fails the completeness
    check (edges never leave a component, so every vertex of a clique
    component has degree exactly size-1 and the degree test is exact).
    """
    adj = graph.adjacency
    nv = adj.shape[0]
    degrees = adj.sum(axis=1)
    visited = np.zeros(nv, dtype=bool)
    sizes: Counter[int] = Counter()
    component_index = 0
    for seed in range(nv):
        if visited[seed]:
            continue
        comp = np.zeros(nv, dtype=bool)
        comp[seed] = True
        frontier = np.array([seed])
        while frontier.size:
            reached = adj[frontier].any(axis=0) & ~comp
            frontier = np.nonzero(reached)[0]
            comp |= reached
        size = int(comp.sum())
        if not np.all(degrees[comp] == size - 1):
            raise NotCliqueUnionError(component_index)
        visited |= comp
        sizes[size] += 1
        component_index += 1
    return CliqueDecomposition.from_parts((count, size) for size, count in sizes.items())


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ValueError(f"expected an integer, got {x}")
    return int(x)


def predicted_decomposition(params: GroupParams) -> CliqueDecomposition:
    """Closed-form clique decomposition of the graph for G(p, m, n).

    The formula is evaluated exactly as written for every m, n >= 1, with
    powers taken over the rationals: for m < n the fractional power
    p^(m-n) still yields integer part sizes after simplification, e.g.
    p^(m-n) * (p^n - p^(n-1)) = p^(m-1) * (p - 1).  Validity of the
    result for m < n is a separate question; the verify harness compares
    it against the brute-force graph and reports disagreements instead of
    restricting the domain here.
    """
    p, m, n = Fraction(params.p), params.m, params.n
    m1 = _as_int(p**n - p ** (n - 1))
    n1 = _as_int(p ** (m - n) * (p**n - p ** (n - 1)))
    n2 = _as_int(p ** (n - 1) * (p**m - p ** (m - 1)))
    n3 = _as_int(p ** (m - 1) * (p**n - p ** (n - 1)))
    return CliqueDecomposition.from_parts([(m1, n1), (1, n2), (1, n3)])
