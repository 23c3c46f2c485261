"""Graph-class recognition: trees, split graphs, bipartite chain graphs, chordality."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Union

from .errors import DomainError
from .graph import Graph, RootedTree


@dataclass(frozen=True)
class SplitDecomposition:
    clique: frozenset[int]
    independent: frozenset[int]

    def check(self, g: Graph) -> None:
        """Raise DomainError unless this is a split partition of ``g``'s vertices."""
        if self.clique & self.independent or len(self.clique) + len(self.independent) != g.n:
            raise DomainError("clique and independent set must partition the vertex set")
        if not all(0 <= v < g.n for v in self.clique | self.independent):
            raise DomainError("decomposition names a vertex outside the graph")
        k = sorted(self.clique)
        for i, u in enumerate(k):
            if any(not g.has_edge(u, w) for w in k[i + 1:]):
                raise DomainError("clique part is not complete")
        for s in self.independent:
            if any(w in self.independent for w in g.adj[s]):
                raise DomainError("independent part contains an edge")


@dataclass(frozen=True)
class ChainOrdering:
    """Chain orderings of the two sides; neighborhoods shrink along each order."""

    x_order: tuple[int, ...]
    y_order: tuple[int, ...]

    def check(self, g: Graph) -> None:
        xs, ys = set(self.x_order), set(self.y_order)
        if xs & ys or len(xs) + len(ys) != g.n or len(xs) != len(self.x_order) or len(ys) != len(self.y_order):
            raise DomainError("chain ordering must list every vertex exactly once")
        for side, other in ((self.x_order, ys), (self.y_order, xs)):
            for v in side:
                if not g.neighbor_set(v) <= other:
                    raise DomainError("chain ordering sides are not a bipartition")
            for a, b in zip(side, side[1:]):
                if not g.neighbor_set(b) <= g.neighbor_set(a):
                    raise DomainError(f"neighborhood of {b} is not nested in that of {a}")


@dataclass(frozen=True)
class Recognition:
    kind: Literal["tree", "split", "chain", "general"]
    witness: Union[RootedTree, SplitDecomposition, ChainOrdering, None]


def has_p3(g: Graph) -> bool:
    return any(d >= 2 for d in g.degrees)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and g.is_connected()


def _by_degree(g: Graph, vertices) -> list[int]:
    return sorted(vertices, key=lambda v: (-g.degree(v), v))


def split_decomposition(g: Graph) -> SplitDecomposition | None:
    """Maximum-clique split decomposition, or None when ``g`` is not split.

    Uses the degree-sequence test: with degrees sorted non-increasingly and
    h = max{i : d_i >= i - 1}, g is split iff
    sum_{i<=h} d_i == h(h-1) + sum_{i>h} d_i.
    """
    from .split import maximize_clique

    if g.n == 0:
        return None
    order = _by_degree(g, range(g.n))
    degs = [g.degree(v) for v in order]
    h = max(i for i in range(1, g.n + 1) if degs[i - 1] >= i - 1)
    if sum(degs[:h]) != h * (h - 1) + sum(degs[h:]):
        return None
    d = SplitDecomposition(frozenset(order[:h]), frozenset(order[h:]))
    d.check(g)
    return maximize_clique(d, g)


def chain_ordering(g: Graph) -> ChainOrdering | None:
    """Chain ordering of a connected bipartite chain graph, or None.

    X is the side containing vertex 0. Each side is sorted by non-increasing
    degree (ties by id) and nesting is verified between consecutive vertices
    by marking, O(n + m) overall.
    """
    if g.n < 2 or not g.is_connected():
        return None
    side = g.two_coloring()
    if side is None:
        return None
    xs = _by_degree(g, (v for v in range(g.n) if side[v] == side[0]))
    ys = _by_degree(g, (v for v in range(g.n) if side[v] != side[0]))
    mark = [-1] * g.n
    for order in (xs, ys):
        for a, b in zip(order, order[1:]):
            for w in g.adj[a]:
                mark[w] = a
            if any(mark[w] != a for w in g.adj[b]):
                return None
    return ChainOrdering(tuple(xs), tuple(ys))


def recognize(g: Graph) -> Recognition:
    """Most specific class among tree, split, chain (checked in that order)."""
    if g.n == 0 or not g.is_connected():
        raise DomainError("recognize expects a connected, non-empty graph")
    if g.m == g.n - 1:
        return Recognition("tree", RootedTree.from_graph(g, 0))
    d = split_decomposition(g)
    if d is not None:
        return Recognition("split", d)
    c = chain_ordering(g)
    if c is not None:
        return Recognition("chain", c)
    return Recognition("general", None)


def maximum_cardinality_search(g: Graph) -> list[int]:
    """MCS visiting order (ties by smallest id); its reverse is a PEO iff g is chordal."""
    weight = [0] * g.n
    done = [False] * g.n
    buckets: list[set[int]] = [set(range(g.n))]
    best = 0
    order = []
    for _ in range(g.n):
        while best > 0 and not buckets[best]:
            best -= 1
        v = min(buckets[best])
        buckets[best].discard(v)
        done[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not done[w]:
                buckets[weight[w]].discard(w)
                weight[w] += 1
                if weight[w] == len(buckets):
                    buckets.append(set())
                buckets[weight[w]].add(w)
                best = max(best, weight[w])
    return order


def perfect_elimination_ordering(g: Graph) -> list[int] | None:
    """A perfect elimination ordering of g, or None if g is not chordal."""
    peo = maximum_cardinality_search(g)[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        # the earliest later neighbor must see all the other later neighbors
        p = min(later, key=pos.__getitem__)
        nbrs = g.neighbor_set(p)
        if any(w != p and w not in nbrs for w in later):
            return None
    return peo
