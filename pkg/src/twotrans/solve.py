"""Per-component dispatch to the specialised solvers or the oracle."""

from __future__ import annotations

from dataclasses import dataclass

from .chain import tr2_chain
from .errors import DomainError
from .graph import Graph, RootedTree
from .oracle import DEFAULT_BUDGET, VertexPartition, brute_tr2
from .recognize import chain_ordering, recognize, split_decomposition
from .split import tr2_split
from .tree import tr2_tree

METHODS = ("auto", "tree", "split", "chain", "brute")


@dataclass(frozen=True)
class ComponentResult:
    vertices: tuple[int, ...]  # original ids; position i is the component's vertex i
    method: str
    k: int
    witness: VertexPartition  # on the component's own numbering


@dataclass(frozen=True)
class SolveResult:
    components: tuple[ComponentResult, ...]

    @property
    def k(self) -> int:
        return max((c.k for c in self.components), default=0)

    def witness(self, n: int) -> VertexPartition:
        """Whole-graph partition: the first achieving component's witness, everything else in V_1."""
        best = next(c for c in self.components if c.k == self.k)
        labels = [1] * n
        for local, lab in enumerate(best.witness.labels(len(best.vertices))):
            labels[best.vertices[local]] = lab
        return VertexPartition.from_labels(labels)


def solve_connected(g: Graph, method: str = "auto", budget: int = DEFAULT_BUDGET) -> tuple[str, int, VertexPartition]:
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}")
    if method == "auto":
        method = recognize(g).kind
        if method == "general":
            method = "brute"
    if method == "tree":
        if g.m != g.n - 1:
            raise DomainError("graph is not a tree")
        k, p = tr2_tree(RootedTree.from_graph(g, 0))
    elif method == "split":
        d = split_decomposition(g)
        if d is None:
            raise DomainError("graph is not a split graph")
        k, p = tr2_split(g, d)
    elif method == "chain":
        o = chain_ordering(g)
        if o is None:
            raise DomainError("graph is not a bipartite chain graph")
        k, p = tr2_chain(g, o)
    else:
        k, p = brute_tr2(g, budget)
    return method, k, p


def solve(g: Graph, method: str = "auto", budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Solve each connected component; the graph's value is the maximum."""
    out = []
    for comp in g.components():
        h, old = g.induced_subgraph(comp)
        used, k, p = solve_connected(h, method, budget)
        out.append(ComponentResult(tuple(old), used, k, p))
    return SolveResult(tuple(out))
