"""Gadget graphs that encode proper 3-coloring as a 2-transitivity question.

Given a source graph with an even number m of edges, the builders produce G'
and a target k such that G' has a 2-transitive partition of size k exactly
when the source is 3-colorable. Converters map certificates both ways.

Handle names: ``v_i`` source vertex i, ``ve_t`` the root for edge t (edges in
:meth:`Graph.edges` order, 0-based), ``e_t`` and ``e`` the clique A, auxiliary
roots ``v_a v_e v_b e_a e_b e_c``; primes mark the bipartite copies
(``v_i'``, ``e_t'``, ``e'``, ``e''`` ...). Interior gadget vertices extend their
root's handle with the 1-based child path, e.g. ``v_2.3.1``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Literal, Sequence

from .errors import CertificateError, DomainError
from .graph import Graph, cmbt_layout
from .oracle import VertexPartition, canonicalize_partition, merge_top, verify_2transitive
from .recognize import perfect_elimination_ordering

Variant = Literal["chordal", "bipartite"]

# auxiliary root -> (gadget order, fixed class in the forward partition)
_AUX = {"v_a": (3, 3), "v_e": (2, 2), "v_b": (1, 1), "e_a": (3, 3), "e_b": (2, 2), "e_c": (1, 1)}


@dataclass
class ReductionOutput:
    variant: Variant
    source: Graph
    gprime: Graph
    k: int
    vertex_map: dict[str, int]
    classes: dict[str, tuple[int, ...]]
    # handle of each gadget root -> (order, layout-ordered vertex ids)
    gadgets: dict[str, tuple[int, tuple[int, ...]]] = field(repr=False)

    def handles(self) -> list[tuple[str, int]]:
        return sorted(self.vertex_map.items(), key=lambda item: item[1])

    def check(self) -> None:
        """Every handle is a distinct vertex and the classes partition V(G')."""
        ids = list(self.vertex_map.values())
        if len(set(ids)) != len(ids) or sorted(ids) != list(range(self.gprime.n)):
            raise AssertionError("handles do not biject onto the vertices of G'")
        covered = sorted(v for members in self.classes.values() for v in members)
        if covered != list(range(self.gprime.n)):
            raise AssertionError("handle classes do not partition V(G')")


def expected_counts(variant: Variant, n: int, m: int) -> tuple[int, int]:
    """Vertex and edge counts of G' obtained by summing the construction's parts."""
    if variant == "chordal":
        return 10 * m + 9 * n + 27, (m * m + 29 * m) // 2 + 8 * n + 26
    return 20 * m + 18 * n + 68, m * m + 31 * m + 16 * n + 70


def stated_bipartite_vertex_count(n: int, m: int) -> int:
    """The commonly quoted vertex count for the bipartite construction; it omits the 2m A/B edge vertices."""
    return 18 * m + 18 * n + 68


class _Builder:
    def __init__(self) -> None:
        self.names: list[str] = []
        self.cls: list[str] = []
        self.edges: list[tuple[int, int]] = []
        self.roots: list[tuple[str, int]] = []

    def add(self, name: str, cls: str) -> int:
        self.names.append(name)
        self.cls.append(cls)
        return len(self.names) - 1

    def root(self, name: str, cls: str, order: int) -> int:
        v = self.add(name, cls)
        self.roots.append((name, order))
        return v

    def finish(self, variant: Variant, source: Graph, k: int) -> ReductionOutput:
        vmap = {name: i for i, name in enumerate(self.names)}
        gadgets = {}
        for name, order in self.roots:
            layout = cmbt_layout(order)
            ids = [vmap[name]]
            paths = [""]
            for nd in layout[1:]:
                path = f"{paths[nd.parent]}.{nd.child_index}"
                paths.append(path)
                v = self.add(name + path, "interior")
                ids.append(v)
                self.edges.append((ids[nd.parent], v))
            gadgets[name] = (order, tuple(ids))
        vmap = {name: i for i, name in enumerate(self.names)}
        classes: dict[str, list[int]] = {}
        for v, c in enumerate(self.cls):
            classes.setdefault(c, []).append(v)
        g = Graph.from_edges(len(self.names), self.edges)
        out = ReductionOutput(variant, source, g, k, vmap, {c: tuple(vs) for c, vs in classes.items()}, gadgets)
        out.check()
        return out


def _require_even(g: Graph) -> None:
    if g.m < 2 or g.m % 2:
        raise DomainError(f"source graph needs an even number of edges >= 2, got m={g.m}")


def build_chordal_gadget(g: Graph) -> ReductionOutput:
    _require_even(g)
    b = _Builder()
    vs = [b.root(f"v_{i}", "source", 3) for i in range(g.n)]
    es = list(g.edges())
    ves = [b.root(f"ve_{t}", "edge_root", 3) for t in range(len(es))]
    a = [b.add(f"e_{t}", "A") for t in range(len(es))]
    e = b.add("e", "A")
    a.append(e)
    aux = {name: b.root(name, "aux", order) for name, (order, _) in _AUX.items()}
    b.edges += [(x, y) for i, x in enumerate(a) for y in a[i + 1:]]
    for t, (i, j) in enumerate(es):
        b.edges += [(vs[i], a[t]), (vs[j], a[t]), (ves[t], a[t])]
    for name in ("e_a", "e_b", "e_c"):
        b.edges += [(aux[name], x) for x in a]
    for name in ("v_a", "v_e", "v_b"):
        b.edges.append((aux[name], e))
    out = b.finish("chordal", g, g.m // 2 + 4)
    _check_structure(out)
    return out


def build_bipartite_gadget(g: Graph) -> ReductionOutput:
    _require_even(g)
    b = _Builder()
    es = list(g.edges())
    vs = [b.root(f"v_{i}", "source", 3) for i in range(g.n)]
    vs2 = [b.root(f"v_{i}'", "source", 3) for i in range(g.n)]
    ves = [b.root(f"ve_{t}", "edge_root", 3) for t in range(len(es))]
    ves2 = [b.root(f"ve_{t}'", "edge_root", 3) for t in range(len(es))]
    a = [b.add(f"e_{t}", "A") for t in range(len(es))]
    e = b.add("e", "A")
    bb = [b.add(f"e_{t}'", "B") for t in range(len(es))]
    e1 = b.add("e'", "B")
    e2 = b.add("e''", "B")
    aux = {}
    for suffix in ("", "'"):
        for name, (order, _) in _AUX.items():
            aux[name + suffix] = b.root(name + suffix, "aux", order)
    for name in ("v_a", "v_e", "v_b"):
        aux[name + "''"] = b.root(name + "''", "aux", _AUX[name][0])
    side_a, side_b = a + [e], bb + [e1, e2]
    b.edges += [(x, y) for x in side_a for y in side_b]
    for t, (i, j) in enumerate(es):
        b.edges += [(vs[i], a[t]), (vs[j], a[t]), (ves[t], a[t])]
        b.edges += [(vs2[i], bb[t]), (vs2[j], bb[t]), (ves2[t], bb[t])]
    for name in ("e_a", "e_b", "e_c"):
        b.edges += [(aux[name], y) for y in side_b]
        b.edges += [(aux[name + "'"], x) for x in side_a]
    for suffix, hub in (("", e), ("'", e1), ("''", e2)):
        for name in ("v_a", "v_e", "v_b"):
            b.edges.append((aux[name + suffix], hub))
    out = b.finish("bipartite", g, g.m // 2 + 5)
    _check_structure(out)
    return out


def _check_structure(r: ReductionOutput) -> None:
    nv, ne = expected_counts(r.variant, r.source.n, r.source.m)
    if (r.gprime.n, r.gprime.m) != (nv, ne):
        raise AssertionError(f"G' has {r.gprime.n} vertices / {r.gprime.m} edges, expected {nv} / {ne}")
    if r.variant == "chordal":
        if perfect_elimination_ordering(r.gprime) is None:
            raise AssertionError("chordal gadget graph has no perfect elimination ordering")
    elif r.gprime.two_coloring() is None:
        raise AssertionError("bipartite gadget graph is not 2-colorable")


def cmbt_class_assignment(order: int, target_class: int) -> list[int]:
    """Classes for the vertices of a 2-cmbt (in :func:`cmbt_layout` order) with the root at ``target_class``.

    Below a vertex of class c, the pair of order-i children gets class i for
    each i < c; all remaining vertices get class 1.
    """
    if not 1 <= target_class <= order:
        raise DomainError(f"target class {target_class} outside 1..{order}")
    layout = cmbt_layout(order)
    out = [0] * len(layout)
    out[0] = target_class
    for idx, nd in enumerate(layout[1:], start=1):
        above = out[nd.parent]
        out[idx] = nd.order if nd.order < above else 1
    return out


def three_coloring(g: Graph) -> list[int] | None:
    """A proper coloring with colors 1..3 by exact backtracking, or None.

    Vertices are colored in BFS order per component; each gets the smallest
    color first, which makes the result deterministic.
    """
    order: list[int] = []
    seen = [False] * g.n
    for s in range(g.n):
        if not seen[s]:
            comp, _ = g.bfs_order(s)
            for v in comp:
                seen[v] = True
            order.extend(comp)
    color = [0] * g.n

    def place(idx: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        used = {color[w] for w in g.adj[v]}
        for c in (1, 2, 3):
            if c not in used:
                color[v] = c
                if place(idx + 1):
                    return True
        color[v] = 0
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, g.n + 100))
    try:
        return color if place(0) else None
    finally:
        sys.setrecursionlimit(limit)


def _check_coloring(g: Graph, coloring: Sequence[int]) -> None:
    if len(coloring) != g.n:
        raise DomainError(f"coloring has {len(coloring)} entries for {g.n} vertices")
    if any(c not in (1, 2, 3) for c in coloring):
        raise DomainError("colors must be 1, 2 or 3")
    for u, v in g.edges():
        if coloring[u] == coloring[v]:
            raise DomainError(f"edge ({u}, {v}) is monochromatic")


def coloring_to_partition(r: ReductionOutput, coloring: Sequence[int], variant: Variant | None = None) -> VertexPartition:
    if variant is not None and variant != r.variant:
        raise DomainError(f"reduction is {r.variant}, not {variant}")
    g = r.source
    _check_coloring(g, coloring)
    vm = r.vertex_map
    primes = ("", "'") if r.variant == "bipartite" else ("",)
    root_class: dict[str, int] = {}
    for i in range(g.n):
        for p in primes:
            root_class[f"v_{i}{p}"] = coloring[i]
    for t, (i, j) in enumerate(g.edges()):
        (free,) = {1, 2, 3} - {coloring[i], coloring[j]}
        for p in primes:
            root_class[f"ve_{t}{p}"] = free
    for name, (_, cls) in _AUX.items():
        root_class[name] = cls
        if r.variant == "bipartite":
            root_class[name + "'"] = cls
            if name.startswith("v_"):
                root_class[name + "''"] = cls
    label = [0] * r.gprime.n
    for name, (order, ids) in r.gadgets.items():
        for v, c in zip(ids, cmbt_class_assignment(order, root_class[name])):
            label[v] = c
    for j in range(1, g.m // 2 + 1):
        for t in (2 * j - 2, 2 * j - 1):
            label[vm[f"e_{t}"]] = 3 + j
            if r.variant == "bipartite":
                label[vm[f"e_{t}'"]] = 3 + j
    label[vm["e"]] = r.k
    if r.variant == "bipartite":
        label[vm["e'"]] = label[vm["e''"]] = r.k - 1
    p = VertexPartition.from_labels(label)
    if p.k != r.k or not verify_2transitive(r.gprime, p):
        raise AssertionError("forward partition failed verification")
    return p


def partition_to_coloring(r: ReductionOutput, p: VertexPartition) -> list[int]:
    """Read a 3-coloring of the source off a 2-transitive partition of G' of size >= k.

    The partition is first cut to size k by merging its top parts, then its top
    levels are thinned to a single vertex (and a pair below it in the bipartite
    variant); each source vertex takes the index of the part holding ``v_i``.
    """
    p.check(r.gprime.n)
    if p.k < r.k:
        raise DomainError(f"partition has size {p.k}, need at least {r.k}")
    if not verify_2transitive(r.gprime, p):
        raise CertificateError("partition is not 2-transitive on G'")
    p = canonicalize_partition(r.gprime, merge_top(p, r.k), levels=2 if r.variant == "bipartite" else 1)
    labels = p.labels(r.gprime.n)
    coloring = [labels[r.vertex_map[f"v_{i}"]] for i in range(r.source.n)]
    for i, c in enumerate(coloring):
        if c > 3:
            raise CertificateError(f"source vertex {i} sits in part {c} > 3")
    for u, v in r.source.edges():
        if coloring[u] == coloring[v]:
            raise CertificateError(f"edge ({u}, {v}) receives one color")
    return coloring
