"""Structured graph families with known chi_NL and the constructions behind them."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Callable

from .coloring import Coloring, is_nl, nr_tuple
from .graph import Graph, bits, complement, disjoint_union, empty, induced_subgraph, popcount, star
from .solver import Certificate, Meter, SolveResult, chi_nl_exact

log = logging.getLogger(__name__)

GK_MAX = 8


# -- G_k ---------------------------------------------------------------------

@dataclass(frozen=True)
class GkSpec:
    k: int
    n_k: int
    m_k: int
    delta_k: int
    Delta_k: int
    mu_k: int
    words: tuple[str, ...]
    classes: tuple[int, ...]  # vertex mask of W_1..W_k

    def index(self) -> dict[str, int]:
        return {w: i for i, w in enumerate(self.words)}

    def sidecar(self) -> str:
        return "".join(f"{i} {w}\n" for i, w in enumerate(self.words))


def gk_formulas(k: int) -> dict[str, int]:
    return {
        "n_k": k * (2 ** (k - 1) - 1),
        "m_k": k * (k - 1) * 2 ** (2 * k - 5),
        "delta_k": 2 ** (k - 2),
        "Delta_k": (k - 1) * 2 ** (k - 2),
        "mu_k": k * (k - 1) * 2 ** (k - 3),
    }


def generate_gk(k: int) -> tuple[Graph, Coloring, GkSpec]:
    """Words over {0,1,2} with one 0 and at least one 1; vertices grouped by the 0 position."""
    if not 3 <= k <= GK_MAX:
        raise ValueError(f"k must lie in 3..{GK_MAX}")
    words = []
    for i in range(k):
        for rest in itertools.product("12", repeat=k - 1):
            if "1" in rest:
                words.append("".join(rest[:i]) + "0" + "".join(rest[i:]))
    zero_at = [w.index("0") for w in words]
    # ones[i][j]: vertices of W_i with a 1 in position j
    ones = [[0] * k for _ in range(k)]
    for v, w in enumerate(words):
        for j, ch in enumerate(w):
            if ch == "1":
                ones[zero_at[v]][j] |= 1 << v
    rows = []
    for v, w in enumerate(words):
        i = zero_at[v]
        row = 0
        for j, ch in enumerate(w):
            if ch == "1":
                row |= ones[j][i]
        rows.append(row)
    g = Graph(len(words), tuple(rows))
    classes = tuple(sum(1 << v for v in range(len(words)) if zero_at[v] == i) for i in range(k))
    f = gk_formulas(k)
    spec = GkSpec(k, f["n_k"], f["m_k"], f["delta_k"], f["Delta_k"], f["mu_k"], tuple(words), classes)
    degs = g.degrees()
    if (g.n, g.m, min(degs), max(degs)) != (spec.n_k, spec.m_k, spec.delta_k, spec.Delta_k):
        raise AssertionError(f"G_{k} does not match its closed-form parameters")
    return g, Coloring.from_masks(g.n, classes), spec


def embed_into_gk(h: Graph, c: Coloring) -> list[int]:
    """Map each vertex of h to the G_k vertex spelled by its nr-tuple (k = number of classes)."""
    if h.isolated_mask():
        raise ValueError("graph has isolated vertices")
    verdict = is_nl(h, c)
    if not verdict:
        raise ValueError(f"colouring is not neighbour-locating: {verdict.describe()}")
    _, _, spec = generate_gk(c.k)
    index = spec.index()
    return [index["".join(map(str, nr_tuple(h, c, v)))] for v in h.vertices]


# -- complete multipartite and the extremal families ------------------------

def multipartite_parts(g: Graph) -> list[int] | None:
    """Part masks if g is complete multipartite (one part allowed), else None."""
    if g.n == 0:
        return None
    groups: dict[int, int] = {}
    for v, row in enumerate(g.rows):
        groups[row] = groups.get(row, 0) | 1 << v
    full = g.full_mask
    for row, part in groups.items():
        if row != full & ~part:
            return None
    return sorted(groups.values(), key=lambda m: (m & -m))


@dataclass(frozen=True)
class ExtremalTag:
    family: str  # complete-multipartite | empty-graph | family-f | family-g | multipartite-plus-k1
    sizes: tuple[int, ...] = ()
    attachments: tuple[int, ...] = ()
    clause: int | None = None
    vertex: int | None = None  # the deleted vertex (family F) or the isolated vertex


def _family_f(g: Graph) -> ExtremalTag | None:
    for v in g.vertices:
        rest = g.full_mask & ~(1 << v)
        sub = induced_subgraph(g, bits(rest))
        parts = multipartite_parts(sub)
        if parts is None or len(parts) < 2:
            continue
        # lift part masks back to g's labels
        others = list(bits(rest))
        lifted = [sum(1 << others[i] for i in bits(p)) for p in parts]
        sizes = tuple(popcount(p) for p in lifted)
        att = tuple(popcount(g.rows[v] & p) for p in lifted)
        off = [i for i, (a, s) in enumerate(zip(att, sizes)) if a not in (0, s)]
        if not off and sum(a == 0 for a in att) >= 2:
            return ExtremalTag("family-f", sizes, att, 1, v)
        if len(off) == 1 and att[off[0]] == sizes[off[0]] - 1:
            return ExtremalTag("family-f", sizes, att, 2, v)
    return None


def _family_g(g: Graph) -> ExtremalTag | None:
    comps = complement(g).components()
    if len(comps) < 2:
        return None
    for c in comps:
        if popcount(c) != 4:
            continue
        quad = list(bits(c))
        if sum(popcount(g.rows[v] & c) for v in quad) != 4 or any(popcount(g.rows[v] & c) != 1 for v in quad):
            continue
        core = induced_subgraph(g, bits(g.full_mask & ~c))
        parts = multipartite_parts(core)
        if parts is not None:
            return ExtremalTag("family-g", tuple(popcount(p) for p in parts))
    return None


def _plus_k1(g: Graph) -> ExtremalTag | None:
    iso = g.isolated_mask()
    if popcount(iso) != 1:
        return None
    u = iso.bit_length() - 1
    rest = induced_subgraph(g, (v for v in g.vertices if v != u))
    parts = multipartite_parts(rest)
    if parts is None or len(parts) < 2:
        return None
    return ExtremalTag("multipartite-plus-k1", tuple(popcount(p) for p in parts), vertex=u)


def recognize_extremal(g: Graph) -> tuple[ExtremalTag, int] | None:
    """Tag and certified chi_NL when g has chi_NL = n (n >= 3) or n - 1 (n >= 5)."""
    n = g.n
    if n < 3:
        return None
    parts = multipartite_parts(g)
    if parts is not None:
        if g.m == 0:
            return ExtremalTag("empty-graph", (n,)), n
        return ExtremalTag("complete-multipartite", tuple(popcount(p) for p in parts)), n
    if n < 5:
        return None
    tag = _plus_k1(g)
    if tag is None and g.is_connected():
        tag = _family_g(g) or _family_f(g)
    if tag is None:
        return None
    return tag, n - 1


def merge_pair_witness(g: Graph) -> Coloring | None:
    """First (n-1)-class NL-colouring that merges one non-adjacent pair."""
    for u in g.vertices:
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            classes = [[u, v]] + [[w] for w in g.vertices if w not in (u, v)]
            c = Coloring.from_classes(g.n, classes)
            if is_nl(g, c):
                return c
    return None


# -- split graphs --------------------------------------------------------------

@dataclass(frozen=True)
class SplitDecomposition:
    graph: Graph
    clique: int  # U
    independent: int  # W
    classes: dict  # neighbourhood mask X -> mask of W-vertices with N(w) = X
    rho: int

    @property
    def U(self) -> list[int]:
        return list(bits(self.clique))

    @property
    def W(self) -> list[int]:
        return list(bits(self.independent))

    def P(self, x: int) -> int:
        return self.classes.get(x, 0)


def split_decompose(g: Graph) -> SplitDecomposition | None:
    """Clique/maximal-independent split via the degree-sequence test, or None."""
    if not g.is_connected():
        raise ValueError("split decomposition expects a connected graph")
    n = g.n
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    d = [g.degree(v) for v in order]
    m = max((i + 1 for i in range(n) if d[i] >= i), default=0)
    if sum(d[:m]) != m * (m - 1) + sum(d[m:]):
        return None
    U = sum(1 << v for v in order[:m])
    W = g.full_mask & ~U
    assert all((g.rows[u] | 1 << u) & U == U for u in bits(U))
    assert all(not g.rows[w] & W for w in bits(W))
    lacking = [u for u in bits(U) if not g.rows[u] & W]
    if lacking:
        U &= ~(1 << lacking[0])
        W |= 1 << lacking[0]
    if any(not g.rows[u] & W for u in bits(U)):
        raise AssertionError("maximality repair left a clique vertex without independent neighbours")
    classes: dict[int, int] = {}
    for w in bits(W):
        classes[g.rows[w]] = classes.get(g.rows[w], 0) | 1 << w
    rho = max([popcount(U)] + [popcount(x) + popcount(p) for x, p in classes.items()])
    return SplitDecomposition(g, U, W, classes, rho)


def chi_nl_split(d: SplitDecomposition) -> tuple[int, Coloring]:
    """Closed-form chi_NL of a connected split graph with the constructive witness."""
    g = d.graph
    U = d.U
    r = len(U)
    near_full = [x for x in d.classes if popcount(x) == r - 1]
    second_case = bool(near_full)
    k = max(r + 1, d.rho) if second_case else d.rho
    labels = [-1] * g.n
    for i, u in enumerate(U):
        labels[u] = i
    marked = 0  # W' in the construction: one W-vertex per neighbourhood touching U'
    if second_case:
        u_prime = 0
        for u in U:
            if d.P(d.clique & ~(1 << u)):
                u_prime |= 1 << u
        for x, p in sorted(d.classes.items()):
            if x & u_prime:
                w = (p & -p).bit_length() - 1
                marked |= 1 << w
                labels[w] = r
    for x, p in sorted(d.classes.items()):
        taken = {labels[u] for u in bits(x)}
        rest = [w for w in bits(p) if not marked >> w & 1]
        palette = [c for c in range(k) if c not in taken and not (second_case and c == r)]
        if second_case and not p & marked:
            palette.append(r)
        if len(palette) < len(rest):
            raise AssertionError("not enough colours for a neighbourhood class")
        for w, c in zip(rest, palette):
            labels[w] = c
    witness = Coloring.from_labels(labels)
    if witness.k != k:
        raise AssertionError(f"split witness uses {witness.k} classes, expected {k}")
    return k, witness


# -- join / union ---------------------------------------------------------------

def join_factors(g: Graph) -> list[int]:
    """Vertex masks of the join factors (complement components); one mask if g is not a join."""
    return complement(g).components()


def chi_nl_join(g: Graph, h: Graph, solve: Callable[[Graph], int]) -> int:
    return solve(g) + solve(h)


@dataclass(frozen=True)
class UnionBounds:
    lower: int
    upper: int
    exact: bool
    clause: str


def union_bounds(g: Graph, h: Graph, solve: Callable[[Graph], int]) -> UnionBounds:
    k, hh = solve(g), solve(h)
    lower = max(k, hh)
    if popcount(g.isolated_mask()) == k and popcount(h.isolated_mask()) == hh:
        return UnionBounds(k + hh, k + hh, True, "all-isolated")
    upper, clause = k + hh - 1, "general"
    if g == h and any(g.rows[v] | 1 << v == g.full_mask for v in g.vertices) and k + 1 < upper:
        upper, clause = k + 1, "universal-vertex"
    return UnionBounds(lower, upper, False, clause)


def clique_with_leaves(r: int, leaf_counts) -> Graph:
    """K_r on 0..r-1 with leaf_counts[i] pendant leaves on clique vertex i."""
    if r < 1:
        raise ValueError("clique size must be positive")
    leaf_counts = list(leaf_counts) + [0] * (r - len(leaf_counts))
    if len(leaf_counts) > r or any(c < 0 for c in leaf_counts):
        raise ValueError("one non-negative leaf count per clique vertex")
    edges = [(i, j) for i in range(r) for j in range(i + 1, r)]
    nxt = r
    for i, c in enumerate(leaf_counts):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def realizability_instance(h: int, k: int, ell: int) -> tuple[Graph, Graph]:
    """Graphs G, H with chi_NL k and h whose disjoint union has chi_NL ell.

    ell = k: two stars. ell = k + 1: G_k beside a star, where the order of the
    union already exceeds the k-colour capacity. ell = k + h: two empty graphs.
    For k + 2 <= ell < k + h the union needs ell colours because it has ell
    isolated vertices: G is a star padded with ell - h isolated vertices and H
    is empty. (G_k beside a clique with pendant leaves, see gk_leaves_instance,
    does not force ell there: G_3 + that graph has chi_NL 4 at ell = 5.)
    """
    if not 3 <= h <= k <= 5:
        raise ValueError("need 3 <= h <= k <= 5")
    if not k <= ell <= k + h:
        raise ValueError("ell must lie in [k, k + h]")
    if ell == k:
        return star(k - 1), star(h - 1)
    if ell == k + h:
        return empty(k), empty(h)
    if ell == k + 1:
        return gk_leaves_instance(h, k, ell)
    return disjoint_union(star(k - 1), empty(ell - h)), empty(h)


def gk_leaves_instance(h: int, k: int, ell: int) -> tuple[Graph, Graph]:
    """G_k and K_{ell-k} with h-1 pendant leaves on every clique vertex."""
    if not k + 1 <= ell <= k + h - 1:
        raise ValueError("ell must lie in [k + 1, k + h - 1]")
    gk, _, _ = generate_gk(k)
    return gk, clique_with_leaves(ell - k, [h - 1] * (ell - k))


# -- colouring composers ---------------------------------------------------------

def mycielski_extend(g: Graph, c: Coloring) -> Coloring:
    """Shadows copy their originals' colours; the apex gets a fresh colour."""
    verdict = is_nl(g, c)
    if not verdict:
        raise ValueError(f"colouring is not neighbour-locating: {verdict.describe()}")
    n = g.n
    classes = [set(cls) | {n + v for v in cls} for cls in c.classes]
    classes.append({2 * n})
    return Coloring.from_classes(2 * n + 1, classes)


def product_coloring(g: Graph, cg: Coloring, h: Graph, ch: Coloring) -> Coloring:
    """Colour (a, b) of the Cartesian product with the pair of factor colours."""
    for graph, col in ((g, cg), (h, ch)):
        verdict = is_nl(graph, col)
        if not verdict:
            raise ValueError(f"factor colouring is not neighbour-locating: {verdict.describe()}")
    lg, lh = cg.labels(), ch.labels()
    return Coloring.from_labels([lg[a] * ch.k + lh[b] for a in range(g.n) for b in range(h.n)])


# -- fast paths -------------------------------------------------------------------

def _lift(n: int, sub_vertices: list[int], c: Coloring) -> list[set[int]]:
    return [{sub_vertices[v] for v in cls} for cls in c.classes]


def fastpath(g: Graph, meter: Meter | None = None) -> SolveResult | None:
    """Answer from a structural theorem when one applies; None otherwise."""
    meter = meter or Meter()
    start = meter.nodes
    n = g.n
    iso = g.isolated_mask()
    if iso:
        w = popcount(iso)
        rest = [v for v in g.vertices if not iso >> v & 1]
        if not rest:
            return _fast(g, n, Coloring.singletons(n), "isolated-reduction", meter.nodes - start)
        sub = chi_nl_exact(induced_subgraph(g, rest), meter=meter)
        if sub.indeterminate:
            return _partial(sub, max(sub.lower, w), max(sub.upper, w), "isolated-reduction", meter.nodes - start)
        classes = _lift(n, rest, sub.witness)
        for i, v in enumerate(bits(iso)):
            if i < len(classes):
                classes[i].add(v)
            else:
                classes.append({v})
        return _fast(g, max(sub.chi_nl, w), Coloring.from_classes(n, classes), "isolated-reduction",
                     meter.nodes - start, (sub.certificate,))

    ext = recognize_extremal(g)
    if ext is not None:
        tag, value = ext
        witness = Coloring.singletons(n) if value == n else merge_pair_witness(g)
        if witness is None:
            log.warning("no merged-pair witness for %s; falling back to search", tag.family)
        else:
            return _fast(g, value, witness, tag.family, meter.nodes - start)

    factors = join_factors(g)
    if len(factors) > 1:
        classes: list[set[int]] = []
        total = lo = hi = 0
        parts = []
        for f in factors:
            verts = list(bits(f))
            sub = chi_nl_exact(induced_subgraph(g, verts), meter=meter)
            lo += sub.lower if sub.indeterminate else sub.chi_nl
            hi += sub.upper if sub.indeterminate else sub.chi_nl
            if sub.indeterminate:
                total = None
                continue
            if total is not None:
                total += sub.chi_nl
                classes.extend(_lift(n, verts, sub.witness))
                parts.append(sub.certificate)
        if total is None:
            return SolveResult(None, None, None, meter.nodes - start, "join", "indeterminate", lo, hi)
        return _fast(g, total, Coloring.from_classes(n, classes), "join", meter.nodes - start, tuple(parts))

    if g.is_connected():
        d = split_decompose(g)
        if d is not None:
            k, witness = chi_nl_split(d)
            return _fast(g, k, witness, "split", meter.nodes - start)
    return None


def _fast(g: Graph, k: int, witness: Coloring, rule: str, nodes: int, parts: tuple = ()) -> SolveResult:
    verdict = is_nl(g, witness)
    if not verdict or witness.k != k:
        raise AssertionError(f"fast path {rule} produced a bad witness: {verdict.describe()}")
    return SolveResult(k, witness, Certificate("fastpath", rule, parts), nodes, rule, lower=k, upper=k)


def _partial(sub: SolveResult, lower: int, upper: int, rule: str, nodes: int) -> SolveResult:
    return SolveResult(None, None, None, nodes, rule, "indeterminate", lower, upper)

