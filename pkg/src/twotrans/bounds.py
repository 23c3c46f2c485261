"""Closed forms, the degree bound, and certificate reports."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph
from .oracle import VertexPartition, first_violation
from .recognize import has_p3


def delta_upper_bound(g: Graph) -> int:
    return g.max_degree() // 2 + 1


def complete_bipartite_tr2(a: int, b: int) -> int:
    """Exact value for K_{a,b}: s + 1 for the largest s with K_{2s,2s-1} minus a C4 inside.

    This is not min(a//2, b//2) + 1; e.g. K_{3,4} has value 3 and K_{1,b} (b >= 2) has 2.
    """
    s = max(min(a // 2, (b + 1) // 2), min(b // 2, (a + 1) // 2))
    return s + 1 if s else 1


def recognize_family(g: Graph) -> tuple[str, tuple[int, ...]] | None:
    """Structural family test: complete, path, cycle or complete bipartite (in that order)."""
    n, m = g.n, g.m
    if n == 0 or not g.is_connected():
        return None
    if 2 * m == n * (n - 1):
        return "complete", (n,)
    degs = sorted(g.degrees)
    if n >= 3 and m == n - 1 and degs[:2] == [1, 1] and all(d == 2 for d in degs[2:]):
        return "path", (n,)
    if n >= 3 and m == n and all(d == 2 for d in degs):
        return "cycle", (n,)
    sides = g.two_coloring()
    if sides is not None:
        a = sum(1 for s in sides if s == 0)
        if m == a * (n - a):
            return "complete-bipartite", (a, n - a)
    return None


def closed_form(g: Graph) -> int | None:
    fam = recognize_family(g)
    if fam is None:
        return None
    kind, params = fam
    if kind == "complete":
        return (params[0] - 1) // 2 + 1
    if kind in ("path", "cycle"):
        return 2
    return complete_bipartite_tr2(*params)


@dataclass
class CertificateReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, ok, detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def render(self) -> str:
        lines = []
        for name, ok, detail in self.checks:
            lines.append(f"{name}: {'pass' if ok else 'fail'}" + (f" ({detail})" if detail else ""))
        lines.append(f"overall: {'pass' if self.passed else 'fail'}")
        return "\n".join(lines) + "\n"


def certify(g: Graph, claimed_k: int, witness: VertexPartition) -> CertificateReport:
    """Check a claimed value and its witness against every bound that applies."""
    rep = CertificateReport()
    try:
        bad = first_violation(g, witness, 2)
        rep.add("witness", bad is None, "" if bad is None else "violation i=%d j=%d v=%d" % bad)
    except ValueError as exc:
        rep.add("witness", False, str(exc))
    rep.add("size", witness.k == claimed_k, f"witness size {witness.k}, claimed {claimed_k}")
    bound = delta_upper_bound(g)
    rep.add("delta_bound", claimed_k <= bound, f"claimed {claimed_k} <= {bound}")
    p3 = has_p3(g)
    rep.add("p3", claimed_k < 2 or p3, f"has_p3={str(p3).lower()}")
    cf = closed_form(g)
    if cf is not None:
        rep.add("closed_form", cf == claimed_k, f"closed form {cf}")
    return rep
