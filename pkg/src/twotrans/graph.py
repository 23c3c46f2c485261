"""Simple undirected graphs, text formats and generators."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParseError


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Neighbor lists are sorted; ``neighbor_set`` gives O(1) adjacency tests.
    """

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._degrees = tuple(len(a) for a in self.adj)
        self.m = sum(self._degrees) // 2
        self._nsets = tuple(frozenset(a) for a in self.adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise DomainError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"self-loop at {u}")
            if v in adj[u]:
                raise DomainError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def degree(self, v: int) -> int:
        return self._degrees[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def max_degree(self) -> int:
        return max(self._degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nsets[u]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nsets[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield u, v

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in nbrs) for nbrs in self.adj)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``(H, old_ids)`` where H's vertex ``i`` is ``old_ids[i]``."""
        old_ids = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old_ids)}
        adj = [[index[w] for w in self.adj[v] if w in index] for v in old_ids]
        return Graph(len(old_ids), adj), old_ids

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise DomainError(f"no edge ({u}, {v})")
        return Graph.from_edges(self.n, (e for e in self.edges() if e != (min(u, v), max(u, v))))

    def without_vertex(self, v: int) -> "Graph":
        return self.induced_subgraph(w for w in range(self.n) if w != v)[0]

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def bfs_order(self, root: int) -> tuple[list[int], list[int]]:
        """BFS from ``root`` visiting neighbors by id; returns ``(order, parent)``."""
        parent = [-1] * self.n
        seen = [False] * self.n
        seen[root] = True
        order = [root]
        head = 0
        while head < len(order):
            u = order[head]
            head += 1
            for w in self.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = u
                    order.append(w)
        return order, parent

    def two_coloring(self) -> list[int] | None:
        """Side (0/1) per vertex, each component's smallest vertex on side 0; None if not bipartite."""
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] != -1:
                continue
            side[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if side[w] == -1:
                        side[w] = 1 - side[u]
                        queue.append(w)
                    elif side[w] == side[u]:
                        return None
        return side


@dataclass(frozen=True)
class RootedTree:
    graph: Graph
    root: int
    parent: tuple[int | None, ...]
    bfs_order: tuple[int, ...]

    @classmethod
    def from_graph(cls, g: Graph, root: int = 0) -> "RootedTree":
        if g.n == 0:
            raise DomainError("a tree needs at least one vertex")
        if g.m != g.n - 1 or not g.is_connected():
            raise DomainError("graph is not a tree")
        if not 0 <= root < g.n:
            raise DomainError(f"root {root} out of range")
        order, parent = g.bfs_order(root)
        return cls(g, root, tuple(None if p < 0 else p for p in parent), tuple(order))

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        kids: list[list[int]] = [[] for _ in range(self.graph.n)]
        for v in self.bfs_order[1:]:
            kids[self.parent[v]].append(v)
        return tuple(tuple(k) for k in kids)


# -- edge-list format -------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise ParseError("empty input", 1)
    lineno, header = lines[0]
    n, m = _int_pair(header, lineno)
    if n < 0 or m < 0:
        raise ParseError("negative header value", lineno)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}", lineno)
    adj: list[set[int]] = [set() for _ in range(n)]
    for lineno, ln in body:
        u, v = _int_pair(ln, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if v in adj[u]:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def _int_pair(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"expected two integers, got {line!r}", lineno)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"expected two integers, got {line!r}", lineno) from None


def emit_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


# -- graph6 -----------------------------------------------------------------


def parse_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise ParseError("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise ParseError("invalid graph6 character")
    vals = [c - 63 for c in data]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    elif len(vals) >= 8:
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        raise ParseError("truncated graph6 size field")
    nbits = n * (n - 1) // 2
    payload = vals[pos:]
    if len(payload) != (nbits + 5) // 6:
        raise ParseError(f"graph6 payload has {len(payload)} bytes, expected {(nbits + 5) // 6}")
    adj: list[list[int]] = [[] for _ in range(n)]
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (payload[k // 6] >> (5 - k % 6)) & 1:
                adj[u].append(v)
                adj[v].append(u)
            k += 1
    return Graph(n, adj)


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n]
    elif n < 258048:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> s) & 63 for s in range(30, -1, -6)]
    bits = [1 if g.has_edge(u, v) else 0 for v in range(1, n) for u in range(v)]
    bits.extend([0] * (-len(bits) % 6))
    body = [
        (bits[i] << 5) | (bits[i + 1] << 4) | (bits[i + 2] << 3)
        | (bits[i + 3] << 2) | (bits[i + 4] << 1) | bits[i + 5]
        for i in range(0, len(bits), 6)
    ]
    return "".join(chr(x + 63) for x in head + body) + "\n"


# -- generators -------------------------------------------------------------


def path_graph(n: int) -> Graph:
    if n < 1:
        raise DomainError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise DomainError("complete graph needs n >= 1")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise DomainError("complete bipartite graph needs both sides >= 1")
    return Graph.from_edges(a + b, ((x, a + y) for x in range(a) for y in range(b)))


def generate_standard(kind: str, *params: int) -> Graph:
    makers = {
        "path": (path_graph, 1),
        "cycle": (cycle_graph, 1),
        "complete": (complete_graph, 1),
        "complete_bipartite": (complete_bipartite_graph, 2),
    }
    key = kind.replace("-", "_")
    if key not in makers:
        raise DomainError(f"unknown family {kind!r}")
    fn, arity = makers[key]
    if len(params) != arity:
        raise DomainError(f"{kind} takes {arity} parameter(s)")
    return fn(*params)


@dataclass(frozen=True)
class CmbtNode:
    parent: int | None
    order: int
    child_index: int  # 1-based position among the parent's children, 0 for the root


def cmbt_layout(k: int) -> list[CmbtNode]:
    """Vertices of the 2-cmbt of order k in BFS order.

    The root's children are listed as pairs of increasing order (1, 1, 2, 2, ...).
    """
    if k < 1:
        raise DomainError("2-cmbt order must be >= 1")
    nodes = [CmbtNode(None, k, 0)]
    head = 0
    while head < len(nodes):
        order = nodes[head].order
        for i in range(1, order):
            idx = 2 * i - 1
            nodes.append(CmbtNode(head, i, idx))
            nodes.append(CmbtNode(head, i, idx + 1))
        head += 1
    return nodes


def generate_cmbt(k: int) -> RootedTree:
    nodes = cmbt_layout(k)
    g = Graph.from_edges(len(nodes), ((nd.parent, i) for i, nd in enumerate(nodes) if nd.parent is not None))
    return RootedTree.from_graph(g, 0)


def near_complete_bipartite_removed(t: int) -> tuple[int, int, int, int] | None:
    """The C4 removed by :func:`generate_near_complete_bipartite`, or None when degenerate.

    Returned as ``(x_{s}, x_{s-1}, y_{s-1}, y_{s-2})`` vertex ids with ``s = 2*(t//2)``.
    """
    if t < 2:
        raise DomainError("t must be >= 2")
    s = 2 * (t // 2)
    if s - 1 < 2:
        return None
    x = lambda i: i - 1  # noqa: E731
    y = lambda j: s + j - 1  # noqa: E731
    return x(s), x(s - 1), y(s - 1), y(s - 2)


def generate_near_complete_bipartite(t: int) -> Graph:
    """K_{2s, 2s-1} minus one C4, s = t // 2; X is 0..2s-1, Y follows.

    For t in {2, 3} the small side has one vertex, no C4 exists, and plain K_{2,1}
    is returned (see :func:`near_complete_bipartite_removed`).
    """
    removed = near_complete_bipartite_removed(t)
    s = 2 * (t // 2)
    skip = set()
    if removed is not None:
        xa, xb, ya, yb = removed
        skip = {(xa, ya), (xa, yb), (xb, ya), (xb, yb)}
    edges = [(x, s + y) for x in range(s) for y in range(s - 1) if (x, s + y) not in skip]
    return Graph.from_edges(2 * s - 1, edges)


def random_tree(seed: int, n: int) -> Graph:
    """Uniform labelled tree via a random Prüfer sequence."""
    if n < 1:
        raise DomainError("tree needs n >= 1")
    if n <= 2:
        return path_graph(n)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_split(seed: int, n: int) -> Graph:
    """Connected split graph: clique on 0..c-1, each other vertex joined to a random nonempty subset."""
    if n < 1:
        raise DomainError("split graph needs n >= 1")
    rng = random.Random(seed)
    c = rng.randint(1, n)
    edges = [(u, v) for u in range(c) for v in range(u + 1, c)]
    for s in range(c, n):
        size = rng.randint(1, c)
        for u in sorted(rng.sample(range(c), size)):
            edges.append((u, s))
    return Graph.from_edges(n, edges)


def random_chain(seed: int, n: int) -> Graph:
    """Connected bipartite chain graph with a random staircase.

    X = 0..a-1, Y = a..n-1; x_i is adjacent to the first d_i vertices of Y with
    d_1 = |Y| and d non-increasing.
    """
    if n < 2:
        raise DomainError("chain graph needs n >= 2")
    rng = random.Random(seed)
    a = rng.randint(1, n - 1)
    b = n - a
    degs = sorted((rng.randint(1, b) for _ in range(a - 1)), reverse=True)
    degs.insert(0, b)
    return chain_graph_from_degrees(degs, b)


def chain_graph_from_degrees(x_degrees: Sequence[int], b: int) -> Graph:
    """Chain graph whose i-th X vertex sees the first ``x_degrees[i]`` Y vertices."""
    a = len(x_degrees)
    if any(x_degrees[i] < x_degrees[i + 1] for i in range(a - 1)):
        raise DomainError("x_degrees must be non-increasing")
    if any(d < 0 or d > b for d in x_degrees):
        raise DomainError("degree out of range")
    return Graph.from_edges(a + b, ((x, a + y) for x, d in enumerate(x_degrees) for y in range(d)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))
