"""Exact neighbour-locating chromatic number, plus small exhaustive oracles.

The main entry point is :func:`chi_nl_exact`. It tries the structural fast
paths in :mod:`nlchroma.families` and otherwise runs a branch and bound over
restricted-growth colour assignments, raising the colour count from a sound
lower bound until a colouring is found.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from math import comb

from .coloring import Coloring, DisconnectedGraphError, is_nl
from .graph import Graph, bits, clique_number, popcount


class BudgetExceeded(Exception):
    pass


class SizeGuardError(ValueError):
    pass


@dataclass(frozen=True)
class Budget:
    max_nodes: int | None = None
    max_seconds: float | None = None


class Meter:
    """Shared node counter and deadline for one solve (including sub-solves)."""

    def __init__(self, budget: Budget | None = None):
        budget = budget or Budget()
        self.nodes = 0
        self.max_nodes = budget.max_nodes
        self.deadline = None if budget.max_seconds is None else time.monotonic() + budget.max_seconds

    def tick(self, count: int = 1) -> None:
        self.nodes += count
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded("node budget exhausted")
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("time budget exhausted")


@dataclass(frozen=True)
class Certificate:
    kind: str  # "exhausted" | "bound" | "fastpath"
    detail: str  # lower-bound rule or fast-path rule id; for "exhausted" the k searched
    parts: tuple = ()

    def to_record(self) -> dict:
        rec = {"kind": self.kind, "detail": self.detail}
        if self.parts:
            rec["parts"] = [p.to_record() for p in self.parts]
        return rec

    def __str__(self) -> str:
        if self.kind == "exhausted":
            return f"exhausted({self.detail})"
        return f"{self.kind}({self.detail})"


@dataclass
class SolveResult:
    chi_nl: int | None
    witness: Coloring | None
    certificate: Certificate | None
    nodes_explored: int = 0
    rule: str = "search"
    status: str = "exact"  # "exact" | "indeterminate"
    lower: int = 0
    upper: int = 0

    @property
    def indeterminate(self) -> bool:
        return self.status == "indeterminate"

    def to_record(self, g: Graph | None = None) -> dict:
        from .graph import to_graph6

        rec = {}
        if g is not None:
            rec["graph6"] = to_graph6(g)
        rec.update(
            status=self.status,
            chi_nl=self.chi_nl,
            witness=self.witness.to_line() if self.witness is not None else None,
            certificate=self.certificate.to_record() if self.certificate else None,
            rule=self.rule,
            nodes=self.nodes_explored,
            lower=self.lower,
            upper=self.upper,
        )
        return rec


@dataclass
class BoundReport:
    lb_counting: int
    ub_greedy: int
    lb_chi: int | None = None
    ub_formula: dict[str, int] = field(default_factory=dict)

    def consistent_with(self, chi_nl: int) -> bool:
        if self.lb_counting > chi_nl or self.ub_greedy < chi_nl:
            return False
        if self.lb_chi is not None and self.lb_chi > chi_nl:
            return False
        return all(v >= chi_nl for v in self.ub_formula.values())


# -- bounds ------------------------------------------------------------------

def counting_capacity(k: int, max_degree: int, has_isolated: bool) -> int:
    """Largest order a graph with a k-class NL-colouring can have."""
    top = min(max_degree, k - 1)
    low = 0 if has_isolated else 1
    return k * sum(comb(k - 1, j) for j in range(low, top + 1))


def counting_lower_bound(n: int, max_degree: int, has_isolated: bool) -> int:
    """Smallest k whose signature count admits n vertices."""
    if n < 1:
        raise ValueError("n must be positive")
    k = 1
    while counting_capacity(k, max_degree, has_isolated) < n:
        k += 1
    return k


def false_twin_groups(g: Graph) -> list[int]:
    """Vertex masks of maximal groups sharing an open neighbourhood (size >= 2)."""
    groups: dict[int, int] = {}
    for v, row in enumerate(g.rows):
        groups[row] = groups.get(row, 0) | 1 << v
    return [m for m in groups.values() if m & (m - 1)]


def lower_bound(g: Graph) -> tuple[int, str]:
    """Best sound lower bound on chi_NL and the rule that gave it."""
    if g.n == 0:
        return 0, "empty"
    iso = g.isolated_mask()
    candidates = [
        (counting_lower_bound(g.n, max(g.degrees()), bool(iso)), "counting"),
        (clique_number(g), "clique"),
        (popcount(iso), "isolated"),
        (max((popcount(m) for m in false_twin_groups(g)), default=1), "twins"),
    ]
    best = max(c[0] for c in candidates)
    return best, next(rule for value, rule in candidates if value == best)


def greedy_upper(g: Graph) -> tuple[int, Coloring]:
    """A quick NL-colouring: greedy proper colouring, then split off clashing vertices."""
    if g.n == 0:
        return 0, Coloring(0, ())
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    twin_of = _twin_masks(g)
    labels = [-1] * g.n
    for v in order:
        banned = {labels[u] for u in bits(g.rows[v] | twin_of[v]) if labels[u] >= 0}
        c = 0
        while c in banned:
            c += 1
        labels[v] = c
    while True:
        col = Coloring.from_labels(labels)
        verdict = is_nl(g, col)
        if verdict:
            return col.k, col
        labels[verdict.pair[1]] = max(labels) + 1


def _twin_masks(g: Graph) -> list[int]:
    out = [0] * g.n
    for m in false_twin_groups(g):
        for v in bits(m):
            out[v] = m & ~(1 << v)
    return out


# -- branch and bound ---------------------------------------------------------

def _search(g: Graph, k: int, meter: Meter) -> list[int] | None:
    """First NL-colouring with at most k colours in canonical DFS order, or None."""
    n = g.n
    rows = g.rows
    order = sorted(range(n), key=lambda v: (-popcount(rows[v]), v))
    twins = _twin_masks(g)
    conflict = [rows[v] | twins[v] for v in range(n)]
    nbrs = [list(bits(rows[v])) for v in range(n)]
    closed = [nbrs[v] + [v] for v in range(n)]
    colour = [-1] * n
    cmask = [0] * k
    pending = [len(closed[v]) for v in range(n)]
    seen: set[tuple[int, int]] = set()

    def signature(u: int) -> tuple[int, int]:
        m = 0
        for w in nbrs[u]:
            m |= 1 << colour[w]
        return colour[u], m

    def place(v: int, c: int) -> list | None:
        """Colour v with c; return the signatures it completed, or None on a clash."""
        colour[v] = c
        cmask[c] |= 1 << v
        added = []
        ok = True
        for u in closed[v]:
            pending[u] -= 1
            if pending[u] == 0 and ok:
                sig = signature(u)
                if sig in seen:
                    ok = False
                else:
                    seen.add(sig)
                    added.append(sig)
        if ok:
            return added
        unplace(v, c, added)
        return None

    def unplace(v: int, c: int, added: list) -> None:
        for sig in added:
            seen.discard(sig)
        for u in closed[v]:
            pending[u] += 1
        cmask[c] &= ~(1 << v)
        colour[v] = -1

    def dfs(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for c in range(min(used + 1, k)):
            if cmask[c] & conflict[v]:
                continue
            meter.tick()
            added = place(v, c)
            if added is None:
                continue
            if dfs(i + 1, max(used, c + 1)):
                return True
            unplace(v, c, added)
        return False

    if dfs(0, 0):
        return colour[:]
    return None


def chi_nl_exact(g: Graph, budget: Budget | None = None, *, use_fastpath: bool = True,
                 meter: Meter | None = None) -> SolveResult:
    """Exact chi_NL with a verified witness, or an indeterminate result with bounds."""
    meter = meter or Meter(budget)
    start_nodes = meter.nodes
    if g.n == 0:
        return SolveResult(0, Coloring(0, ()), Certificate("bound", "empty"), 0, "trivial", lower=0, upper=0)
    if use_fastpath:
        from .families import fastpath

        try:
            fp = fastpath(g, meter=meter)
        except BudgetExceeded:
            fp = None
        if fp is not None:
            return fp
    lb, lb_rule = lower_bound(g)
    ub, greedy = greedy_upper(g)
    proven = lb
    try:
        for k in range(lb, ub):
            labels = _search(g, k, meter)
            if labels is not None:
                witness = Coloring.from_labels(labels)
                assert witness.k == k
                cert = Certificate("exhausted", str(k - 1)) if k > lb else Certificate("bound", lb_rule)
                return _finish(g, k, witness, cert, meter.nodes - start_nodes, "search", lb, ub)
            proven = k + 1
        cert = Certificate("exhausted", str(ub - 1)) if ub > lb else Certificate("bound", lb_rule)
        return _finish(g, ub, greedy, cert, meter.nodes - start_nodes, "search" if ub > lb else "greedy", lb, ub)
    except BudgetExceeded:
        return SolveResult(None, greedy, None, meter.nodes - start_nodes, "search", "indeterminate",
                           lower=proven, upper=ub)


def _finish(g, k, witness, cert, nodes, rule, lb, ub) -> SolveResult:
    verdict = is_nl(g, witness)
    if not verdict or witness.k != k:
        raise AssertionError(f"solver produced an invalid witness: {verdict.describe()}")
    return SolveResult(k, witness, cert, nodes, rule, lower=k, upper=k)


# -- exhaustive oracles --------------------------------------------------------

def proper_partitions(g: Graph, max_classes: int | None = None):
    """All partitions into independent sets as restricted-growth label lists."""
    n = g.n
    rows = g.rows
    limit = n if max_classes is None else max_classes
    labels = [0] * n
    cmask = [0] * max(limit, 1)

    def rec(v: int, used: int):
        if v == n:
            yield labels
            return
        for c in range(min(used + 1, limit)):
            if cmask[c] & rows[v]:
                continue
            labels[v] = c
            cmask[c] |= 1 << v
            yield from rec(v + 1, max(used, c + 1))
            cmask[c] &= ~(1 << v)

    if n == 0:
        yield []
        return
    yield from rec(0, 0)


def chi_nl_bruteforce(g: Graph) -> int:
    """Minimum over every proper partition that the verifier accepts."""
    if g.n > 10:
        raise SizeGuardError("brute force limited to n <= 10")
    best = g.n
    for labels in proper_partitions(g):
        k = max(labels, default=-1) + 1
        if k < best and is_nl(g, Coloring.from_labels(labels)):
            best = k
    return best


def chi_exact(g: Graph) -> int:
    if g.n > 12:
        raise SizeGuardError("chromatic oracle limited to n <= 12")
    for k in range(0 if g.n == 0 else 1, g.n + 1):
        for _ in proper_partitions(g, k):
            return k
    return g.n


def chi_l_exact(g: Graph) -> int:
    """Locating chromatic number by exhaustive proper partitions."""
    if g.n > 10:
        raise SizeGuardError("locating-chromatic oracle limited to n <= 10")
    if not g.is_connected():
        raise DisconnectedGraphError("chi_L is defined for connected graphs")
    n = g.n
    dist = g.distance_matrix()
    # rings[v][d]: vertices at distance d from v
    rings = []
    for v in range(n):
        rv = [0] * (n + 1)
        for u, d in enumerate(dist[v]):
            rv[d] |= 1 << u
        rings.append(rv)

    def locating(labels: list[int], k: int) -> bool:
        masks = [0] * k
        for v, c in enumerate(labels):
            masks[c] |= 1 << v
        seen = set()
        for v in range(n):
            vec = [labels[v]]
            rv = rings[v]
            for m in masks:
                d = 0
                while not rv[d] & m:
                    d += 1
                vec.append(d)
            t = tuple(vec)
            if t in seen:
                return False
            seen.add(t)
        return True

    best = n
    for labels in proper_partitions(g):
        k = max(labels, default=-1) + 1
        if k < best and locating(labels, k):
            best = k
    return best


def lambda_exact(g: Graph) -> int:
    """Location-domination number by subsets of increasing size."""
    if g.n > 12:
        raise SizeGuardError("location-domination oracle limited to n <= 12")
    n = g.n
    rows = g.rows
    must = g.isolated_mask()
    for size in range(popcount(must), n + 1):
        for combo in itertools.combinations(range(n), size):
            s = 0
            for v in combo:
                s |= 1 << v
            if must & ~s:
                continue
            traces = set()
            for v in range(n):
                if s >> v & 1:
                    continue
                t = rows[v] & s
                if not t or t in traces:
                    break
                traces.add(t)
            else:
                return size
    return n
