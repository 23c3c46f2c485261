"""Shared helpers: an independent labelling oracle and graph corpora."""

from __future__ import annotations

import itertools
import random

from twotrans.graph import Graph, chain_graph_from_degrees, relabel
from twotrans.oracle import VertexPartition, verify_2transitive, verify_transitive


def naive_number(g: Graph, threshold: int = 2) -> int:
    """Largest k admitting a valid labelling, by plain vertex-order backtracking.

    Shares nothing with the oracle's top-down search except the final verifier.
    """
    n = g.n
    if n == 0:
        return 0
    verify = verify_2transitive if threshold == 2 else verify_transitive
    for k in range(g.max_degree() // threshold + 1, 0, -1):
        lab = [0] * n

        def feasible(u: int) -> bool:
            j = lab[u]
            counts = [0] * (j + 1)
            free = 0
            for w in g.adj[u]:
                if lab[w] == 0:
                    free += 1
                elif lab[w] < j:
                    counts[lab[w]] += 1
            deficit = sum(max(0, threshold - counts[i]) for i in range(1, j))
            return deficit <= free

        def place(v: int) -> bool:
            if v == n:
                return len(set(lab)) == k and verify(g, VertexPartition.from_labels(lab))
            for c in range(1, k + 1):
                lab[v] = c
                if feasible(v) and all(feasible(w) for w in g.adj[v] if lab[w]):
                    if place(v + 1):
                        return True
            lab[v] = 0
            return False

        if place(0):
            return k
    return 1


def connected_graphs(count: int, n_max: int, start: int = 0) -> list[Graph]:
    out = []
    seed = start
    while len(out) < count:
        r = random.Random(seed)
        n = r.randint(1, n_max)
        p = r.uniform(0.2, 0.9)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if r.random() < p])
        if g.is_connected():
            out.append(g)
        seed += 1
    return out


def all_chain_graphs(n_max: int, shuffle: bool = True):
    """Every connected chain graph with 2..n_max vertices, one per staircase.

    X has a vertices with non-increasing degrees d_1 = |Y| >= d_2 >= ... >= 1.
    Vertex ids are shuffled (deterministically) so solvers cannot lean on the layout.
    """
    for n in range(2, n_max + 1):
        for a in range(1, n):
            b = n - a
            for rest in itertools.combinations_with_replacement(range(b, 0, -1), a - 1):
                g = chain_graph_from_degrees([b, *rest], b)
                if shuffle:
                    perm = list(range(n))
                    random.Random(hash((n, a, rest)) & 0xFFFF).shuffle(perm)
                    g = relabel(g, perm)
                yield g


def canonical_shape_ok(p: VertexPartition) -> bool:
    """Tail sizes 1, 2 and at most 2*3^(i-1) for V_{k-i}, i = 2..k-2."""
    sizes = p.sizes()
    k = len(sizes)
    if k < 3:
        return True
    if sizes[k - 1] != 1 or sizes[k - 2] != 2:
        return False
    return all(sizes[k - 1 - i] <= 2 * 3 ** (i - 1) for i in range(2, k - 1))
