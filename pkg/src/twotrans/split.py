"""2-transitivity of split graphs from the clique size and S-neighbor counts."""

from __future__ import annotations

from .errors import DomainError
from .graph import Graph
from .oracle import VertexPartition, verify_2transitive
from .recognize import SplitDecomposition


def maximize_clique(d: SplitDecomposition, g: Graph) -> SplitDecomposition:
    """Grow K to a maximum clique.

    Only an S-vertex adjacent to all of K can extend it, and after moving one
    no other S-vertex can follow (it would need a neighbor in S), so one pass suffices.
    """
    d.check(g)
    k = len(d.clique)
    for s in sorted(d.independent):
        if g.degree(s) == k:
            return SplitDecomposition(d.clique | {s}, d.independent - {s})
    return d


def _s_degrees(g: Graph, d: SplitDecomposition) -> dict[int, int]:
    omega = len(d.clique)
    out = {v: g.degree(v) - (omega - 1) for v in d.clique}
    for v, c in out.items():
        assert c == sum(1 for w in g.adj[v] if w in d.independent)
    return out


def split_condition(g: Graph, d: SplitDecomposition) -> bool:
    """Whether the parity-appropriate condition for the larger value holds."""
    omega = len(d.clique)
    sdeg = _s_degrees(g, d)
    if omega % 2:
        return all(c >= 2 for c in sdeg.values())
    return sum(1 for c in sdeg.values() if c >= 1) >= omega - 1


def tr2_split(g: Graph, d: SplitDecomposition) -> tuple[int, VertexPartition]:
    d.check(g)
    if not g.is_connected():
        raise DomainError("split solver expects a connected graph")
    if maximize_clique(d, g) != d:
        raise DomainError("decomposition is not maximal: some S-vertex sees all of K")
    omega = len(d.clique)
    clique = sorted(d.clique)
    sdeg = _s_degrees(g, d)
    base = (omega + 1) // 2
    if split_condition(g, d):
        k = base + 1
        if omega % 2:
            bottom, rest = sorted(d.independent), clique
        else:
            # K_1: the omega-1 clique vertices with most S-neighbors, ties by id
            ranked = sorted(clique, key=lambda v: (-sdeg[v], v))
            bottom = sorted(d.independent | set(ranked[omega - 1:]))
            rest = sorted(ranked[: omega - 1])
        parts = [bottom] + [rest[i:i + 2] for i in range(0, len(rest), 2)]
    else:
        k = base
        parts = [clique[i:i + 2] for i in range(0, omega, 2)]
        parts[0] = parts[0] + sorted(d.independent)
    p = VertexPartition.from_parts(parts)
    if p.k != k or not verify_2transitive(g, p):
        raise AssertionError("split witness failed verification")
    return k, p
