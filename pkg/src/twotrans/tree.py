"""Linear-time 2-transitivity of trees by bottom-up DP plus rerooting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .graph import RootedTree
from .oracle import VertexPartition, verify_2transitive


@dataclass(frozen=True)
class TreeSolveState:
    """Per-vertex results of :func:`solve_tree`.

    ``rooted_t2[v]`` is v's number inside its own subtree for the rooting used,
    ``t2[v]`` its number in the whole tree, and ``required[v]`` whether removing
    v's subtree lowers its parent's number (0 for the root).
    """

    tree: RootedTree
    rooted_t2: tuple[int, ...]
    t2: tuple[int, ...]
    required: tuple[int, ...]

    @property
    def tr2(self) -> int:
        return max(self.t2)


def two_transitive_number(values: Sequence[int]) -> int:
    """1 + the number of greedy pairs (p-th pair both >= p) in sorted ``values``."""
    t = 1
    j = 0
    prev = None
    for val in values:
        if prev is not None and val < prev:
            raise DomainError("child values must be sorted non-decreasingly")
        prev = val
        if val >= t:
            j += 1
            if j == 2:
                t += 1
                j = 0
    return t


def mark_required(z: int, values: Sequence[int]) -> list[int]:
    """Required flag per sorted child value for a vertex whose number is ``z``.

    A child is required when deleting it drops the number to ``z - 1``. With
    k children and slack s = k - 2z + 2, the first s are never required;
    after that, index i (1-based) stays free while ``values[j-2] >= ceil((j - s)/2)``
    holds for all j <= i, and the first failure makes i and everything after it required.
    """
    k = len(values)
    if z != two_transitive_number(values):
        raise DomainError(f"z={z} does not match the values (expected {two_transitive_number(values)})")
    slack = k - 2 * z + 2
    if slack == 0:
        return [1] * k
    flags = [0] * k
    for i in range(slack + 1, k + 1):
        if values[i - 2] < -(-(i - slack) // 2):
            for j in range(i, k + 1):
                flags[j - 1] = 1
            break
    return flags


def _sorted_by_value(items: list[tuple[int, int]], cap: int) -> list[tuple[int, int]]:
    """Stable counting sort of ``(value, vertex)`` pairs with values clamped to ``cap``."""
    buckets: list[list[tuple[int, int]]] = [[] for _ in range(cap + 1)]
    for val, v in items:
        c = val if val < cap else cap
        buckets[c].append((c, v))
    return [pair for bucket in buckets for pair in bucket]


def solve_tree(t: RootedTree) -> TreeSolveState:
    g = t.graph
    n = g.n
    children = t.children
    rooted = [1] * n
    for v in reversed(t.bfs_order):
        kids = children[v]
        if kids:
            ordered = _sorted_by_value([(rooted[c], c) for c in kids], g.degree(v) + 1)
            rooted[v] = two_transitive_number([val for val, _ in ordered])

    t2 = [0] * n
    required = [0] * n
    for v in t.bfs_order:
        items = [(rooted[c], c) for c in children[v]]
        p = t.parent[v]
        if p is not None:
            # the parent's number once v's subtree is cut off
            items.append((t2[p] - required[v], p))
        ordered = _sorted_by_value(items, g.degree(v) + 1)
        values = [val for val, _ in ordered]
        t2[v] = two_transitive_number(values)
        flags = mark_required(t2[v], values)
        for (_, w), flag in zip(ordered, flags):
            if w != p:
                required[w] = flag
    return TreeSolveState(t, tuple(rooted), tuple(t2), tuple(required))


def tr2_tree(t: RootedTree) -> tuple[int, VertexPartition]:
    state = solve_tree(t)
    best = max(range(t.graph.n), key=lambda v: (state.t2[v], -v))
    return state.t2[best], extract_tree_witness(t, state, best)


def extract_tree_witness(t: RootedTree, state: TreeSolveState, v: int) -> VertexPartition:
    """A 2-transitive partition of size ``t2(v)`` with v alone at the top level.

    Re-roots at v, then places child pairs greedily: the p-th pair of children
    with rooted number >= p goes to level p, recursively; everything else is V_1.
    """
    g = t.graph
    rt = RootedTree.from_graph(g, v)
    children = rt.children
    rooted = [1] * g.n
    for u in reversed(rt.bfs_order):
        if children[u]:
            rooted[u] = two_transitive_number(sorted(rooted[c] for c in children[u]))
    target = state.t2[v]
    if rooted[v] != target:
        raise AssertionError("rerooted number disagrees with solve_tree")
    label = [1] * g.n
    stack = [(v, target)]
    while stack:
        u, level = stack.pop()
        label[u] = level
        if level == 1:
            continue
        t_cur, j = 1, 0
        for c in sorted(children[u], key=lambda c: (rooted[c], c)):
            if t_cur >= level:
                break
            if rooted[c] >= t_cur:
                stack.append((c, t_cur))
                j += 1
                if j == 2:
                    t_cur += 1
                    j = 0
    p = VertexPartition.from_labels(label)
    if p.k != target or not verify_2transitive(g, p):
        raise AssertionError("tree witness failed verification")
    return p
