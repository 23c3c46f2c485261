"""Vertex partitions, their verification, and exact brute-force search.

The search builds a partition top-down. It fixes a single vertex in the last
part, then picks each lower part as a set that supplies the required number
of neighbors to every vertex already placed. Anything left over forms V_1.
Surplus vertices of a part can always be pushed down to V_1 without breaking
the partition, so the search only needs to consider parts that are minimal
for the vertices above them. This is what bounds the tail sizes at
1, 2, 6, 18, ...
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceeded, DomainError, ParseError
from .graph import Graph

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class VertexPartition:
    """Ordered partition V_1..V_k; ``parts[0]`` is V_1."""

    parts: tuple[frozenset[int], ...]

    @classmethod
    def from_parts(cls, parts: Iterable[Iterable[int]]) -> "VertexPartition":
        return cls(tuple(frozenset(p) for p in parts))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "VertexPartition":
        """Build from 1-based part labels indexed by vertex."""
        if not labels:
            return cls(())
        k = max(labels)
        if min(labels) < 1:
            raise DomainError("part labels are 1-based")
        parts: list[set[int]] = [set() for _ in range(k)]
        for v, lab in enumerate(labels):
            parts[lab - 1].add(v)
        return cls.from_parts(parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def labels(self, n: int) -> list[int]:
        lab = [0] * n
        for i, part in enumerate(self.parts, start=1):
            for v in part:
                lab[v] = i
        return lab

    def sizes(self) -> list[int]:
        return [len(p) for p in self.parts]

    def check(self, n: int) -> None:
        """Raise DomainError unless this is a partition of ``range(n)`` into nonempty parts."""
        seen: set[int] = set()
        for i, part in enumerate(self.parts, start=1):
            if not part:
                raise DomainError(f"part {i} is empty")
            if seen & part:
                raise DomainError(f"part {i} repeats a vertex")
            seen |= part
        if seen != set(range(n)):
            raise DomainError("parts do not cover the vertex set exactly")


def emit_partition(p: VertexPartition, n: int) -> str:
    """Partition file: one ``v p`` line per vertex, 1-based part index, sorted by v."""
    return "".join(f"{v} {lab}\n" for v, lab in enumerate(p.labels(n)))


def parse_partition(text: str, n: int) -> VertexPartition:
    labels: dict[int, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'vertex part', got {line!r}", lineno)
        try:
            v, lab = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected 'vertex part', got {line!r}", lineno) from None
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range 0..{n - 1}", lineno)
        if lab < 1:
            raise ParseError("part indices are 1-based", lineno)
        if v in labels:
            raise ParseError(f"vertex {v} listed twice", lineno)
        labels[v] = lab
    missing = [v for v in range(n) if v not in labels]
    if missing:
        raise ParseError(f"vertex {missing[0]} has no part")
    k = max(labels.values(), default=0)
    parts: list[set[int]] = [set() for _ in range(k)]
    for v, lab in labels.items():
        parts[lab - 1].add(v)
    for i, part in enumerate(parts, start=1):
        if not part:
            raise ParseError(f"part {i} is empty")
    return VertexPartition.from_parts(parts)


# -- verification -------------------------------------------------------------


def first_violation(g: Graph, p: VertexPartition, threshold: int = 2) -> tuple[int, int, int] | None:
    """First ``(i, j, v)`` (1-based parts, i < j, v in V_j) with fewer than
    ``threshold`` neighbors of v in V_i; scanned by j, then v, then i."""
    p.check(g.n)
    lab = p.labels(g.n)
    for j in range(2, p.k + 1):
        for v in sorted(p.parts[j - 1]):
            counts = [0] * (j + 1)
            for w in g.adj[v]:
                if lab[w] < j:
                    counts[lab[w]] += 1
            for i in range(1, j):
                if counts[i] < threshold:
                    return i, j, v
    return None


def verify_2transitive(g: Graph, p: VertexPartition) -> bool:
    return first_violation(g, p, 2) is None


def verify_transitive(g: Graph, p: VertexPartition) -> bool:
    return first_violation(g, p, 1) is None


# -- brute force ----------------------------------------------------------------


class _Search:
    def __init__(self, g: Graph, threshold: int, budget: int):
        self.g = g
        self.r = threshold
        self.budget = budget
        self.nodes = 0
        self.adj = g.adjacency_masks
        self.full = (1 << g.n) - 1
        self.failed: set[tuple[int, int]] = set()

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"search exceeded {self.budget} nodes")

    def top_candidates(self, k: int) -> list[int]:
        need = self.r * (k - 1)
        order = sorted(range(self.g.n), key=lambda v: (-self.g.degree(v), v))
        return [v for v in order if self.g.degree(v) >= need]

    def find(self, k: int, top: int) -> list[int] | None:
        """Levels mask list ``[V_k, V_{k-1}, ..., V_1]`` with ``top`` alone in V_k, or None."""
        if k == 1:
            return [self.full]
        if self.g.degree(top) < self.r * (k - 1):
            return None
        top_mask = 1 << top
        levels = [top_mask]
        if self._descend(k - 1, top_mask, self.full & ~top_mask, levels):
            return levels
        return None

    def _descend(self, j: int, placed: int, rem: int, levels: list[int]) -> bool:
        """Choose V_j..V_1 from ``rem`` for the vertices in ``placed`` (all above level j)."""
        self.tick()
        if j == 1:
            if all(_popcount(self.adj[u] & rem) >= self.r for u in _bits(placed)):
                levels.append(rem)
                return True
            return False
        key = (j, placed)
        if key in self.failed:
            return False
        for chosen in self._parts(placed, rem, j):
            rest = rem & ~chosen
            need = self.r * (j - 1)
            if all(_popcount(self.adj[u] & rest) >= need for u in _bits(placed | chosen)):
                levels.append(chosen)
                if self._descend(j - 1, placed | chosen, rest, levels):
                    return True
                levels.pop()
        self.failed.add(key)
        return False

    def _parts(self, placed: int, rem: int, j: int):
        """Sets D within ``rem`` giving each placed vertex ``r`` neighbors, no duplicates."""
        targets = list(_bits(placed))
        adj, r = self.adj, self.r
        # vertices of D are themselves at level j and need r*(j-1) neighbors below
        usable = rem
        need_below = r * (j - 1)
        for v in _bits(rem):
            if _popcount(adj[v] & rem) < need_below:
                usable &= ~(1 << v)

        def rec(chosen: int, banned: int):
            self.tick()
            for u in targets:
                deficit = r - _popcount(adj[u] & chosen)
                if deficit > 0:
                    break
            else:
                yield chosen
                return
            cands = adj[u] & usable & ~chosen & ~banned
            if _popcount(cands) < deficit:
                return
            for c in _bits(cands):
                bit = 1 << c
                yield from rec(chosen | bit, banned)
                banned |= bit
                if _popcount(cands & ~banned) < deficit:
                    return

        yield from rec(0, 0)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _levels_to_partition(levels: list[int]) -> VertexPartition:
    return VertexPartition.from_parts(list(_bits(m)) for m in reversed(levels))


def _brute(g: Graph, threshold: int, budget: int, bound: int) -> tuple[int, VertexPartition]:
    if g.n == 0:
        return 0, VertexPartition(())
    search = _Search(g, threshold, budget)
    for k in range(bound, 1, -1):
        for top in search.top_candidates(k):
            levels = search.find(k, top)
            if levels is not None:
                return k, _levels_to_partition(levels)
    return 1, VertexPartition((frozenset(range(g.n)),))


def brute_tr2(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, VertexPartition]:
    """Exact 2-transitivity with a witness partition.

    Raises BudgetExceeded if the search needs more than ``budget`` nodes.
    """
    k, p = _brute(g, 2, budget, g.max_degree() // 2 + 1)
    assert verify_2transitive(g, p) and p.k == k
    return k, p


def brute_tr(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, VertexPartition]:
    """Exact transitivity with a witness partition."""
    k, p = _brute(g, 1, budget, g.max_degree() + 1)
    assert verify_transitive(g, p) and p.k == k
    return k, p


def brute_vertex_number(g: Graph, v: int, threshold: int = 2, budget: int = DEFAULT_BUDGET) -> int:
    """Largest k such that some partition of size k has v in V_k."""
    search = _Search(g, threshold, budget)
    for k in range(g.degree(v) // threshold + 1, 1, -1):
        if search.find(k, v) is not None:
            return k
    return 1


# -- partition transformations ---------------------------------------------------


def canonicalize_partition(g: Graph, p: VertexPartition, levels: int | None = None) -> VertexPartition:
    """Shrink the tail of a 2-transitive partition to sizes 1, 2, <=6, <=18, ...

    Keeps the smallest vertex of V_k, then walks down from V_{k-1} keeping in
    each part only the vertices needed (greedily, by id) to give every vertex
    above two neighbors there; the rest move to V_1. ``levels`` limits how
    many parts from the top are processed (default: all of V_k..V_2).
    """
    k = p.k
    if k < 3:
        raise DomainError("canonicalization needs a partition of size >= 3")
    if not verify_2transitive(g, p):
        raise DomainError("partition is not 2-transitive")
    stop = 1 if levels is None else max(1, k - levels)
    parts = [set(part) for part in p.parts]
    keep = min(parts[k - 1])
    parts[0] |= parts[k - 1] - {keep}
    parts[k - 1] = {keep}
    above = [keep]
    for j in range(k - 1, stop, -1):
        pool = parts[j - 1]
        chosen: set[int] = set()
        for u in above:
            have = sum(1 for w in g.adj[u] if w in chosen)
            for w in g.adj[u]:
                if have >= 2:
                    break
                if w in pool and w not in chosen:
                    chosen.add(w)
                    have += 1
        parts[0] |= pool - chosen
        parts[j - 1] = chosen
        above.extend(sorted(chosen))
    out = VertexPartition.from_parts(parts)
    if not verify_2transitive(g, out):
        raise AssertionError("canonicalization broke 2-transitivity")
    return out


def fold_transitive(g: Graph, p: VertexPartition) -> VertexPartition:
    """Merge consecutive pairs of a transitive partition into a 2-transitive one."""
    if not verify_transitive(g, p):
        raise DomainError("partition is not transitive")
    merged = [p.parts[i] | (p.parts[i + 1] if i + 1 < p.k else frozenset()) for i in range(0, p.k, 2)]
    out = VertexPartition(tuple(merged))
    if not verify_2transitive(g, out):
        raise AssertionError("folded partition is not 2-transitive")
    return out


def merge_top(p: VertexPartition, k: int) -> VertexPartition:
    """Collapse V_k..V_last into a single part, giving a partition of size k."""
    if not 1 <= k <= p.k:
        raise DomainError(f"cannot reduce a partition of size {p.k} to {k}")
    top = frozenset().union(*p.parts[k - 1:])
    return VertexPartition(p.parts[: k - 1] + (top,))
