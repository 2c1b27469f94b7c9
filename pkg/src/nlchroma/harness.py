"""Census over small graphs that re-checks every structural result against the exact solver."""

from __future__ import annotations

import json
import logging
import random
import time
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, combinations_with_replacement
from math import comb
from multiprocessing import get_context
from pathlib import Path
from typing import Callable, Iterator

from . import families as fam
from .coloring import is_dominating, is_ml, is_nl, nr_tuples
from .graph import (
    Graph,
    Graph6Error,
    bits,
    cartesian_product,
    complete,
    complete_multipartite,
    diameter,
    disjoint_union,
    empty,
    from_graph6,
    independence_number,
    induced_subgraph,
    is_twin_free,
    join,
    mycielski,
    path,
    popcount,
    star,
    to_graph6,
)
from .solver import (
    chi_exact,
    chi_l_exact,
    chi_nl_bruteforce,
    chi_nl_exact,
    counting_lower_bound,
    lambda_exact,
)

log = logging.getLogger(__name__)

# Every in-scope result needs at least one registered check.
THEOREMS = (
    "nl-definition",
    "nr-tuple-shape",
    "isolated-reduction",
    "chain-inequalities",
    "diameter-equality",
    "diameter-upper",
    "counting-bounds",
    "gk-construction",
    "gk-parameters",
    "gk-subgraph-embedding",
    "twin-free-upper",
    "extremal-n",
    "extremal-n-minus-1",
    "join-additivity",
    "union-bounds",
    "union-realizability",
    "split-formula",
    "mycielski-upper",
    "mycielski-multipartite-equality",
    "product-upper",
)

N7_SAMPLE = 6400


@dataclass
class CheckReport:
    check_id: str
    population: str
    instances: int = 0
    violations: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_record(self, timing: bool = True) -> dict:
        rec = {
            "check": self.check_id,
            "population": self.population,
            "instances": self.instances,
            "violations": self.violations,
        }
        if timing:
            rec["wall_time"] = round(self.wall_time, 3)
        return rec


# -- populations ---------------------------------------------------------------

def enumerate_labeled(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All labelled graphs on n vertices in ascending edge-mask order."""
    if n > 7:
        raise ValueError("labelled enumeration is limited to n <= 7")
    for mask in range(1 << (n * (n - 1) // 2)):
        g = Graph.from_mask(n, mask)
        if not connected_only or g.is_connected():
            yield g


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_split_graph(rng: random.Random, n: int) -> Graph:
    """Connected split graph: clique on 0..r-1, each other vertex gets a non-empty clique neighbourhood."""
    r = rng.randint(1, n - 1)
    edges = [(i, j) for i in range(r) for j in range(i + 1, r)]
    for w in range(r, n):
        nbrs = [u for u in range(r) if rng.random() < 0.5] or [rng.randrange(r)]
        edges.extend((u, w) for u in nbrs)
    return Graph.from_edges(n, edges)


def ingest_corpus(path: str | Path) -> Iterator[tuple[int, Graph | None, str | None]]:
    """Yield (line number, graph, error) for each non-blank line of a graph6 file."""
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text:
                continue
            try:
                yield lineno, from_graph6(text), None
            except Graph6Error as exc:
                log.warning("%s:%d: %s", path, lineno, exc)
                yield lineno, None, str(exc)


# -- per-graph profile --------------------------------------------------------------

class Profile:
    """Lazily computed invariants of one graph. chi_NL comes from plain search, no fast paths."""

    def __init__(self, g: Graph):
        self.g = g

    @cached_property
    def nl(self):
        return chi_nl_exact(self.g, use_fastpath=False)

    @property
    def chi_nl(self) -> int:
        return self.nl.chi_nl

    @cached_property
    def chi(self) -> int:
        return chi_exact(self.g)

    @cached_property
    def chi_l(self) -> int:
        return chi_l_exact(self.g)

    @cached_property
    def lam(self) -> int:
        return lambda_exact(self.g)

    @cached_property
    def alpha(self) -> int:
        return independence_number(self.g)

    @cached_property
    def connected(self) -> bool:
        return self.g.is_connected()

    @cached_property
    def diameter(self):
        return diameter(self.g)

    @cached_property
    def isolated(self) -> int:
        return self.g.isolated_mask()

    @cached_property
    def max_degree(self) -> int:
        return max(self.g.degrees(), default=0)


# Each per-graph check returns None when the graph is outside its population,
# "" when it holds, or a violation message.

def _check_nl_definition(p: Profile):
    bf = chi_nl_bruteforce(p.g)
    if bf != p.chi_nl:
        return f"search={p.chi_nl} bruteforce={bf}"
    fast = chi_nl_exact(p.g).chi_nl
    if fast != p.chi_nl:
        return f"search={p.chi_nl} with fast paths={fast}"
    return ""


def _check_nr_shape(p: Profile):
    g, c = p.g, p.nl.witness
    for v, t in enumerate(nr_tuples(g, c)):
        if t.count(0) != 1:
            return f"vertex {v} nr-tuple {t} does not have exactly one zero"
        if g.rows[v] and 1 not in t:
            return f"non-isolated vertex {v} nr-tuple {t} has no 1"
    if not p.isolated and not is_dominating(g, c):
        return "NL-colouring of a graph without isolated vertices is not dominating"
    if p.isolated and is_dominating(g, c):
        return "NL-colouring of a graph with isolated vertices is dominating"
    for cls in c.masks():
        if popcount(cls & p.isolated) > 1:
            return "two isolated vertices share a colour"
    return ""


def _check_chain(p: Profile):
    if not p.connected or p.g.n < 2:
        return None
    if not p.chi <= p.chi_l <= p.chi_nl:
        return f"chi={p.chi} chi_L={p.chi_l} chi_NL={p.chi_nl}"
    if p.chi_nl > p.chi + p.lam:
        return f"chi_NL={p.chi_nl} > chi + lambda = {p.chi} + {p.lam}"
    return ""


def _check_counting(p: Profile):
    n, k, delta = p.g.n, p.chi_nl, p.max_degree
    if n < 2:
        return None
    bounds = {"order": k * 2 ** (k - 1)}
    if delta <= k - 1:
        bounds["degree"] = k * sum(comb(k - 1, j) for j in range(delta + 1))
    if not p.isolated:
        bounds["order-no-isolated"] = k * (2 ** (k - 1) - 1)
        if delta <= k - 1:
            bounds["degree-no-isolated"] = k * sum(comb(k - 1, j) for j in range(1, delta + 1))
    broken = [name for name, cap in bounds.items() if n > cap]
    if broken:
        return f"n={n} exceeds {broken} at k={k}"
    lb = counting_lower_bound(n, delta, bool(p.isolated))
    if lb > k:
        return f"counting lower bound {lb} > chi_NL {k}"
    return ""


def _check_isolated(p: Profile):
    if not p.isolated:
        return None
    rest = [v for v in p.g.vertices if not p.isolated >> v & 1]
    sub = chi_nl_exact(induced_subgraph(p.g, rest), use_fastpath=False).chi_nl
    want = max(sub, popcount(p.isolated))
    return "" if want == p.chi_nl else f"chi_NL={p.chi_nl}, reduction gives {want}"


def _check_diam2(p: Profile):
    if not p.connected or p.g.n < 3 or p.diameter > 2:
        return None
    if p.chi_l != p.chi_nl:
        return f"diameter {p.diameter}: chi_L={p.chi_l} chi_NL={p.chi_nl}"
    # verifiers agree colouring by colouring on the witness too
    if not is_ml(p.g, p.nl.witness):
        return "NL witness is not metric-locating"
    return ""


def _check_diam4(p: Profile):
    if not p.connected or p.g.n < 3 or p.diameter < 4:
        return None
    return "" if p.chi_nl <= p.g.n - 2 else f"diameter {p.diameter}: chi_NL={p.chi_nl} > n-2"


def _check_twin_free(p: Profile):
    if not is_twin_free(p.g):
        return None
    bound = p.g.n - p.alpha + 1
    return "" if p.chi_nl <= bound else f"chi_NL={p.chi_nl} > n - alpha + 1 = {bound}"


def _extremal_check(p: Profile, target_offset: int, min_n: int):
    n = p.g.n
    if n < min_n:
        return None
    rec = fam.recognize_extremal(p.g)
    said = rec is not None and rec[1] == n - target_offset
    truth = p.chi_nl == n - target_offset
    if said != truth:
        tag = rec[0].family if rec else None
        return f"chi_NL={p.chi_nl}, recogniser={rec[1] if rec else None} ({tag})"
    return ""


def _check_extremal_n(p: Profile):
    return _extremal_check(p, 0, 3)


def _check_extremal_n1(p: Profile):
    return _extremal_check(p, 1, 5)


def _check_split(p: Profile):
    if not p.connected:
        return None
    d = fam.split_decompose(p.g)
    if d is None:
        return None
    return _split_agrees(d, p.chi_nl)


def _split_agrees(d, truth: int) -> str:
    k, witness = fam.chi_nl_split(d)
    verdict = is_nl(d.graph, witness)
    if not verdict:
        return f"split witness rejected: {verdict.describe()}"
    return "" if k == truth else f"split formula {k} != chi_NL {truth}"


def _check_gk_embedding(p: Profile):
    k = p.chi_nl
    if p.isolated or p.g.n < 2 or not 3 <= k <= fam.GK_MAX:
        return None
    gk, _, spec = fam.generate_gk(k)
    image = fam.embed_into_gk(p.g, p.nl.witness)
    return _embedding_problem(p.g, gk, spec, image)


def _embedding_problem(h: Graph, gk: Graph, spec, image: list[int]) -> str:
    if len(set(image)) != len(image):
        return "embedding is not injective"
    for u, v in h.edges():
        if not gk.has_edge(image[u], image[v]):
            return f"edge {u}-{v} not preserved"
    if h.n == spec.n_k and not spec.mu_k <= h.m <= spec.m_k:
        return f"order n_k but size {h.m} outside [{spec.mu_k}, {spec.m_k}]"
    return ""


def _check_mycielski(p: Profile):
    ext = fam.mycielski_extend(p.g, p.nl.witness)
    verdict = is_nl(mycielski(p.g), ext)
    return "" if verdict and ext.k == p.chi_nl + 1 else f"extension rejected: {verdict.describe()}"


@dataclass(frozen=True)
class Check:
    check_id: str
    theorems: tuple[str, ...]
    per_graph: Callable | None = None
    suite: Callable | None = None
    n7: bool = True  # per-graph checks: include the n = 7 connected population


# -- suite checks (fixed constructions and seeded random families) --------------------

def _pmap(fn, items, workers: int):
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with get_context("fork").Pool(workers) as pool:
        return pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers)))


def _solve(g: Graph) -> int:
    return chi_nl_exact(g, use_fastpath=False).chi_nl


def _gk_item(k: int):
    g, c, spec = fam.generate_gk(k)
    problems = []
    degs = g.degrees()
    if (g.n, g.m, min(degs), max(degs)) != (spec.n_k, spec.m_k, spec.delta_k, spec.Delta_k):
        problems.append("parameters differ from closed forms")
    if diameter(g) != 3:
        problems.append(f"diameter {diameter(g)}")
    if not is_nl(g, c):
        problems.append("W-colouring rejected")
    lb = counting_lower_bound(g.n, max(degs), False)
    if lb != k:
        problems.append(f"counting lower bound {lb}")
    if k == 3 and chi_nl_bruteforce(g) != 3:
        problems.append("exhaustive search disagrees")
    if fam.embed_into_gk(g, c) != list(range(g.n)):
        problems.append("canonical colouring does not embed as the identity")
    return to_graph6(g) if k <= 4 else f"G_{k}", "; ".join(problems)


def suite_gk(seed: int, workers: int):
    return "G_k, k=3..6", _pmap(_gk_item, [3, 4, 5, 6], workers)


def _oracle_item(g: Graph):
    a = chi_nl_exact(g).chi_nl
    b = chi_nl_bruteforce(g)
    return to_graph6(g), "" if a == b else f"exact={a} bruteforce={b}"


def suite_oracle_random(seed: int, workers: int):
    rng = random.Random(seed)
    graphs = [random_graph(rng, rng.choice((7, 8))) for _ in range(500)]
    return f"500 random graphs n in {{7,8}}, seed {seed}", _pmap(_oracle_item, graphs, workers)


def _join_item(pair):
    g, h = pair
    joined = join(g, h)
    total = _solve(g) + _solve(h)
    got = _solve(joined)
    return to_graph6(joined), "" if got == total else f"chi_NL(join)={got} != {total}"


def suite_join(seed: int, workers: int):
    rng = random.Random(seed)
    pairs = []
    for _ in range(200):
        ng = rng.randint(1, 11)
        nh = rng.randint(1, 12 - ng)
        pairs.append((random_graph(rng, ng), random_graph(rng, nh)))
    return f"200 random pairs, total order <= 12, seed {seed}", _pmap(_join_item, pairs, workers)


def _split_item(g: Graph):
    d = fam.split_decompose(g)
    if d is None:
        return to_graph6(g), "generated split graph not recognised"
    return to_graph6(g), _split_agrees(d, _solve(g))


def suite_split_random(seed: int, workers: int):
    rng = random.Random(seed)
    graphs = [random_split_graph(rng, rng.randint(2, 12)) for _ in range(300)]
    return f"300 random connected split graphs n <= 12, seed {seed}", _pmap(_split_item, graphs, workers)


def _union_item(item):
    label, g, h, expect = item
    u = disjoint_union(g, h)
    value = _solve(u)
    b = fam.union_bounds(g, h, _solve)
    problems = []
    if not b.lower <= value <= b.upper:
        problems.append(f"chi_NL={value} outside [{b.lower}, {b.upper}]")
    if b.exact and value != b.upper:
        problems.append(f"exact clause says {b.upper}, got {value}")
    kind, target = expect
    if kind == "eq" and value != target:
        problems.append(f"expected {target}, got {value}")
    if kind == "le" and value > target:
        problems.append(f"expected at most {target}, got {value}")
    return label, "; ".join(problems)


def _union_items(seed: int) -> list:
    rng = random.Random(seed)
    items = []
    for _ in range(20):
        a, b = rng.randint(1, 6), rng.randint(1, 6)
        items.append((f"empty {a} + empty {b}", empty(a), empty(b), ("eq", a + b)))
    for h, k in ((3, 3), (3, 4), (4, 4)):
        items.append((f"star {k - 1} + star {h - 1}", star(k - 1), star(h - 1), ("eq", k)))
    for k in range(1, 6):
        items.append((f"K_{k} + K_{k}", complete(k), complete(k), ("le", k + 1)))
    return items


def suite_union(seed: int, workers: int):
    return "empty pairs, star pairs, K_k + K_k (k <= 5)", _pmap(_union_item, _union_items(seed), workers)


def _realize_item(item):
    h, k, ell = item
    g, hh = fam.realizability_instance(h, k, ell)
    got = (_solve(g), _solve(hh), _solve(disjoint_union(g, hh)))
    return f"(h,k,l)=({h},{k},{ell})", "" if got == (k, h, ell) else f"got {got}"


def suite_realizability(seed: int, workers: int):
    items = [(3, 3, ell) for ell in range(3, 7)]
    return "realizability instances (h,k)=(3,3), l=3..6", _pmap(_realize_item, items, workers)


def _myc_item(g: Graph):
    r = chi_nl_exact(g)
    ext = fam.mycielski_extend(g, r.witness)
    verdict = is_nl(mycielski(g), ext)
    ok = verdict and ext.k == r.chi_nl + 1
    return to_graph6(g), "" if ok else f"extension rejected: {verdict.describe()}"


def suite_mycielski_random(seed: int, workers: int):
    rng = random.Random(seed)
    graphs = [random_graph(rng, rng.randint(1, 10)) for _ in range(100)]
    return f"100 random graphs n <= 10, seed {seed}", _pmap(_myc_item, graphs, workers)


def integer_partitions(n: int, min_parts: int = 2) -> list[tuple[int, ...]]:
    out = []
    for r in range(min_parts, n + 1):
        for parts in combinations_with_replacement(range(1, n + 1), r):
            if sum(parts) == n:
                out.append(parts)
    return out


def _myc_mp_item(sizes):
    g = complete_multipartite(*sizes)
    got = _solve(mycielski(g))
    return f"multipartite {' '.join(map(str, sizes))}", "" if got == g.n + 1 else f"chi_NL(mu)={got}"


def suite_mycielski_multipartite(seed: int, workers: int):
    items = [p for n in range(2, 7) for p in integer_partitions(n)]
    return "complete multipartite graphs n <= 6", _pmap(_myc_mp_item, items, workers)


def _product_item(pair):
    g, h = pair
    cg, ch = chi_nl_exact(g).witness, chi_nl_exact(h).witness
    col = fam.product_coloring(g, cg, h, ch)
    prod = cartesian_product(g, h)
    verdict = is_nl(prod, col)
    ok = verdict and col.k == cg.k * ch.k
    return to_graph6(prod), "" if ok else f"product colouring rejected: {verdict.describe()}"


def suite_product(seed: int, workers: int):
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < 50:
        ng, nh = rng.randint(1, 10), rng.randint(1, 10)
        if ng * nh <= 30:
            pairs.append((random_graph(rng, ng), random_graph(rng, nh)))
    results = _pmap(_product_item, pairs, workers)
    p2 = path(2)
    sq = cartesian_product(p2, p2)
    eq = _solve(sq)
    results.append(("P_2 x P_2", "" if eq == 4 else f"chi_NL(P2 x P2)={eq}"))
    return f"50 random pairs, product order <= 30, seed {seed}; P_2 x P_2", results


def _gap_item(item):
    h, k = item
    g = fam.clique_with_leaves(h, [k - 1])
    got = (chi_exact(g), _solve(g))
    return f"K_{h} with {k - 1} leaves", "" if got == (h, k) else f"(chi, chi_NL)={got}"


def suite_chi_gap(seed: int, workers: int):
    items = [(h, k) for k in range(3, 7) for h in range(3, k + 1)]
    results = _pmap(_gap_item, items, workers)
    for r in range(3, 6):
        g = fam.clique_with_leaves(r, [1] * (r - 1))
        got = _solve(g)
        want = g.n - independence_number(g) + 1
        results.append((f"twin-free K_{r} with {r - 1} leaves", "" if got == r == want else f"chi_NL={got}"))
    return "clique with pendant leaves, 3 <= h <= k <= 6; twin-free tightness 3 <= r <= 5", results


CHECKS: dict[str, Check] = {c.check_id: c for c in (
    Check("oracle-equivalence", ("nl-definition",), per_graph=_check_nl_definition, n7=False),
    Check("nr-tuple-shape", ("nr-tuple-shape",), per_graph=_check_nr_shape),
    Check("chain-inequalities", ("chain-inequalities",), per_graph=_check_chain),
    Check("counting-bounds", ("counting-bounds",), per_graph=_check_counting),
    Check("isolated-reduction", ("isolated-reduction",), per_graph=_check_isolated),
    Check("diam2-equality", ("diameter-equality",), per_graph=_check_diam2),
    Check("diam4-upper", ("diameter-upper",), per_graph=_check_diam4),
    Check("twin-free-upper", ("twin-free-upper",), per_graph=_check_twin_free),
    Check("extremal-n", ("extremal-n",), per_graph=_check_extremal_n),
    Check("extremal-n-minus-1", ("extremal-n-minus-1",), per_graph=_check_extremal_n1),
    Check("split-formula", ("split-formula",), per_graph=_check_split),
    Check("gk-embedding", ("gk-subgraph-embedding",), per_graph=_check_gk_embedding),
    Check("mycielski-extension", ("mycielski-upper",), per_graph=_check_mycielski),
    Check("gk-parameters", ("gk-construction", "gk-parameters"), suite=suite_gk),
    Check("oracle-random", ("nl-definition",), suite=suite_oracle_random),
    Check("join-additivity", ("join-additivity",), suite=suite_join),
    Check("split-random", ("split-formula",), suite=suite_split_random),
    Check("union-clauses", ("union-bounds",), suite=suite_union),
    Check("union-realizability", ("union-realizability",), suite=suite_realizability),
    Check("mycielski-random", ("mycielski-upper",), suite=suite_mycielski_random),
    Check("mycielski-multipartite", ("mycielski-multipartite-equality",), suite=suite_mycielski_multipartite),
    Check("product-coloring", ("product-upper",), suite=suite_product),
    Check("chi-nl-gap", ("chi-nl-gap", "twin-free-upper"), suite=suite_chi_gap),
)}


def unregistered_theorems() -> list[str]:
    covered = {t for c in CHECKS.values() for t in c.theorems}
    return [t for t in THEOREMS if t not in covered]


# -- census driver -------------------------------------------------------------------

def _graph_jobs(n_max: int, seed: int, n7_sample: int | None) -> list[tuple[int, list[int], str]]:
    """(n, edge masks, population label) per order, deterministic."""
    jobs = []
    for n in range(1, min(n_max, 6) + 1):
        jobs.append((n, list(range(1 << (n * (n - 1) // 2))), f"n={n}"))
    if n_max >= 7:
        connected = [g.edge_mask() for g in enumerate_labeled(7, connected_only=True)] if n7_sample is None \
            else _sample_connected(7, n7_sample, seed)
        label = "all connected labelled graphs n=7" if n7_sample is None \
            else f"{len(connected)} connected labelled graphs n=7 sampled per edge count, seed {seed}"
        jobs.append((7, connected, label))
    return jobs


def _population_label(labels: list[str]) -> str:
    small = [lab for lab in labels if lab.startswith("n=")]
    rest = [lab for lab in labels if not lab.startswith("n=")]
    parts = []
    if small:
        parts.append(f"all labelled graphs {small[0]}..{small[-1][2:]}" if len(small) > 1
                     else f"all labelled graphs {small[0]}")
    return "; ".join(parts + rest)


def _sample_connected(n: int, size: int, seed: int) -> list[int]:
    """Seeded sample of connected labelled graphs, split evenly across edge counts."""
    rng = random.Random(seed)
    slots = n * (n - 1) // 2
    levels = range(n - 1, slots + 1)
    quota = -(-size // len(levels))
    picked: set[int] = set()
    for m in levels:
        if comb(slots, m) <= 4 * quota:
            pool = [sum(1 << i for i in idx) for idx in combinations(range(slots), m)]
            pool = [mask for mask in pool if Graph.from_mask(n, mask).is_connected()]
            picked.update(rng.sample(pool, min(quota, len(pool))))
            continue
        level: set[int] = set()
        while len(level) < quota:
            mask = sum(1 << i for i in rng.sample(range(slots), m))
            if Graph.from_mask(n, mask).is_connected():
                level.add(mask)
        picked |= level
    return sorted(picked)


def _eval_chunk(args) -> list[tuple[int, str, str | None]]:
    n, masks, check_ids = args
    out = []
    for mask in masks:
        p = Profile(Graph.from_mask(n, mask))
        for cid in check_ids:
            out.append((mask, cid, CHECKS[cid].per_graph(p)))
    return out


def run_census(n_max: int, checks: list[str] | None = None, seed: int = 0, workers: int = 1,
               n7_sample: int | None = N7_SAMPLE) -> list[CheckReport]:
    """Evaluate the requested checks (all when None); reports come back in registry order."""
    checks = list(CHECKS) if checks in (None, ["all"]) else checks
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check id(s): {', '.join(unknown)}")
    checks = [c for c in CHECKS if c in checks]
    reports: list[CheckReport] = []

    per_graph = [c for c in checks if CHECKS[c].per_graph]
    if per_graph:
        started = time.perf_counter()
        by_check = {c: CheckReport(c, "") for c in per_graph}
        pops: dict[str, list[str]] = {c: [] for c in per_graph}
        for n, masks, label in _graph_jobs(n_max, seed, n7_sample):
            ids = [c for c in per_graph if n < 7 or CHECKS[c].n7]
            if not ids:
                continue
            for c in ids:
                pops[c].append(label)
            step = max(1, len(masks) // (8 * max(workers, 1)))
            chunks = [(n, masks[i:i + step], ids) for i in range(0, len(masks), step)]
            for chunk in _pmap(_eval_chunk, chunks, workers):
                for mask, cid, verdict in chunk:
                    if verdict is None:
                        continue
                    rep = by_check[cid]
                    rep.instances += 1
                    if verdict:
                        rep.violations.append({"graph6": to_graph6(Graph.from_mask(n, mask)), "detail": verdict})
        elapsed = time.perf_counter() - started
        for c in per_graph:
            by_check[c].population = _population_label(pops[c])
            by_check[c].wall_time = elapsed
            reports.append(by_check[c])

    for c in checks:
        if CHECKS[c].suite is None:
            continue
        started = time.perf_counter()
        population, results = CHECKS[c].suite(seed, workers)
        rep = CheckReport(c, population, len(results))
        rep.violations = [{"graph6": label, "detail": d} for label, d in results if d]
        rep.wall_time = time.perf_counter() - started
        reports.append(rep)

    missing = unregistered_theorems()
    if missing:
        reports.append(CheckReport("registry", "theorem ids without a check", len(missing),
                                   [{"graph6": "", "detail": f"unregistered: {t}"} for t in missing]))
    order = {c: i for i, c in enumerate(CHECKS)}
    reports.sort(key=lambda r: order.get(r.check_id, len(order)))
    return reports


def report_lines(reports: list[CheckReport], timing: bool = True) -> list[str]:
    return [json.dumps(r.to_record(timing), sort_keys=True) for r in reports]


def summary_table(reports: list[CheckReport]) -> str:
    width = max([len(r.check_id) for r in reports] + [5])
    lines = [f"{'check':<{width}}  {'instances':>9}  {'violations':>10}  {'seconds':>8}  population"]
    for r in reports:
        lines.append(f"{r.check_id:<{width}}  {r.instances:>9}  {len(r.violations):>10}  "
                     f"{r.wall_time:>8.2f}  {r.population}")
    return "\n".join(lines)
