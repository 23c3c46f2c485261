"""2-transitivity of bipartite chain graphs.

Under a chain ordering x_a is adjacent to exactly y_1..y_{deg(x_a)}, so every
structural question reduces to comparisons on the two degree sequences.
The value is s + 1 for the largest s such that K_{2s,2s-1} minus a C4 is a
subgraph; the biclique parameters t, kind and ext are also reported because
they relate the answer to the transitivity t + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import DomainError
from .graph import Graph
from .oracle import VertexPartition, verify_2transitive
from .recognize import ChainOrdering


@dataclass(frozen=True)
class BicliqueParams:
    t: int
    kind: Literal["full", "minus_e"]
    ext: tuple[bool, bool]  # (x_t ~ y_{t+1}, x_{t+1} ~ y_t)

    @property
    def transitivity(self) -> int:
        return self.t + 1


def _degrees(g: Graph, order: tuple[int, ...]) -> list[int]:
    return [g.degree(v) for v in order]


def max_biclique_params(g: Graph, ord: ChainOrdering) -> BicliqueParams:
    ord.check(g)
    dx = _degrees(g, ord.x_order)
    nx_, ny = len(dx), len(ord.y_order)

    def adj(a: int, b: int) -> bool:
        # 1-based indices; out-of-range positions are non-adjacent
        return 1 <= a <= nx_ and 1 <= b <= ny and b <= dx[a - 1]

    t_full = 0
    t_minus = 0
    for a in range(1, min(nx_, ny) + 1):
        if adj(a, a):
            t_full = a
        elif a >= 2 and adj(a - 1, a) and adj(a, a - 1):
            t_minus = a
    if t_full >= t_minus:
        t, kind = t_full, "full"
    else:
        t, kind = t_minus, "minus_e"
    ext = (adj(t, t + 1), adj(t + 1, t))
    if kind == "full" and all(ext):
        raise AssertionError("both boundary adjacencies hold at a maximal full biclique")
    return BicliqueParams(t, kind, ext)


def three_case_value(params: BicliqueParams) -> int:
    """The three-case expression in the transitivity Tr = t + 1.

    Kept for comparison only: it undercounts on K_{4,3} minus a C4, where
    t = 2 with one boundary edge but the true value is 3.
    """
    tr = params.transitivity
    if params.kind == "full" and sum(params.ext) == 1:
        return tr // 2 + 1
    return (tr - 1) // 2 + 1


def _largest_s(dp: list[int], nq: int) -> int:
    """Largest s >= 2 with K_{2s,2s-1} minus a C4 on prefixes of sizes 2s and 2s-1, else 0.

    p_1..p_{2s-2} need all 2s-1 of Q and p_{2s-1}, p_{2s} the first 2s-3.
    The condition is monotone in s, so scan upwards.
    """
    best = 0
    s = 2
    while 2 * s <= len(dp) and 2 * s - 1 <= nq and dp[2 * s - 3] >= 2 * s - 1 and dp[2 * s - 1] >= 2 * s - 3:
        best = s
        s += 1
    return best


def tr2_chain(g: Graph, ord: ChainOrdering) -> tuple[int, VertexPartition]:
    try:
        ord.check(g)
    except DomainError as exc:
        raise DomainError(f"not a chain graph under this ordering: {exc}") from None
    if not g.is_connected():
        raise DomainError("chain solver expects a connected graph")
    xs, ys = ord.x_order, ord.y_order
    sx = _largest_s(_degrees(g, xs), len(ys))
    sy = _largest_s(_degrees(g, ys), len(xs))
    if max(sx, sy) >= 2:
        p_side, q_side, s = (xs, ys, sx) if sx >= sy else (ys, xs, sy)
        k = s + 1
        pv = lambda i: p_side[i - 1]  # noqa: E731
        qv = lambda i: q_side[i - 1]  # noqa: E731
        parts: list[list[int]] = []
        for j in range(1, k - 1):
            parts.append([pv(2 * s - 2 * j + 2), pv(2 * s - 2 * j + 1), qv(2 * s - 2 * j + 1), qv(2 * s - 2 * j)])
        parts.append([pv(1), pv(2)])
        parts.append([qv(1)])
    elif g.max_degree() >= 2:
        k = 2
        centre = max(range(g.n), key=lambda v: (g.degree(v), -v))
        parts = [list(g.adj[centre][:2]), [centre]]
    else:
        k = 1
        parts = [list(range(g.n))]
    used = {v for part in parts for v in part}
    parts[0] = parts[0] + [v for v in range(g.n) if v not in used]
    p = VertexPartition.from_parts(parts)
    if p.k != k or not verify_2transitive(g, p):
        raise AssertionError("chain witness failed verification")
    return k, p
