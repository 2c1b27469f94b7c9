"""Immutable simple graphs on vertices 0..n-1 with bitmask adjacency rows."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class Graph6Error(ValueError):
    pass


class Graph6HeaderError(Graph6Error):
    pass


class Graph6TruncatedError(Graph6Error):
    pass


class Graph6TrailingError(Graph6Error):
    pass


class _Unbounded:
    """Diameter of a disconnected graph. Deliberately unordered."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unbounded"

    def __reduce__(self):
        return (_Unbounded, ())


UNBOUNDED = _Unbounded()


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Graph:
        """Build from an upper-triangle edge mask; bit order matches ``pairs(n)``."""
        rows = [0] * n
        for i, (u, v) in enumerate(pairs(n)):
            if mask >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, graph6={to_graph6(self)!r})"

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def m(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.rows[u] >> (u + 1)):
                yield u, u + 1 + v

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def isolated_mask(self) -> int:
        return sum(1 << v for v in range(self.n) if not self.rows[v])

    def edge_mask(self) -> int:
        mask = 0
        for i, (u, v) in enumerate(pairs(self.n)):
            if self.rows[u] >> v & 1:
                mask |= 1 << i
        return mask

    def components(self) -> list[int]:
        """Connected components as vertex masks, ordered by smallest vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.rows[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def bfs_layers(self, source: int) -> list[int]:
        """Distances from ``source``; -1 for unreachable vertices."""
        dist = [-1] * self.n
        dist[source] = 0
        seen = 1 << source
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for u in bits(frontier):
                nxt |= self.rows[u]
            frontier = nxt & ~seen
            seen |= frontier
            for u in bits(frontier):
                dist[u] = d
        return dist

    def distance_matrix(self) -> list[list[int]]:
        if "dist" not in self._cache:
            self._cache["dist"] = [self.bfs_layers(v) for v in range(self.n)]
        return self._cache["dist"]


def pairs(n: int) -> Iterator[tuple[int, int]]:
    """Vertex pairs in graph6 (column-major upper triangle) order."""
    for j in range(1, n):
        for i in range(j):
            yield i, j


# -- graph6 -----------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for u, v in pairs(g.n):
        acc = acc << 1 | (g.rows[u] >> v & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(acc + 63))
            acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def _decode_n(text: str) -> tuple[int, int]:
    if not text:
        raise Graph6HeaderError("empty graph6 record")
    if text[0] != "~":
        return ord(text[0]) - 63, 1
    if len(text) >= 2 and text[1] == "~":
        width, start = 6, 2
    else:
        width, start = 3, 1
    chunk = text[start:start + width]
    if len(chunk) < width:
        raise Graph6HeaderError("truncated size header")
    n = 0
    for ch in chunk:
        n = n << 6 | (ord(ch) - 63)
    return n, start + width


def from_graph6(text: str) -> Graph:
    """Parse one graph6 record (an optional ``>>graph6<<`` prefix is accepted)."""
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6HeaderError(f"invalid graph6 character {ch!r} at offset {pos}")
    n, offset = _decode_n(text)
    if n > 1 << 18:
        raise Graph6HeaderError(f"order {n} exceeds supported maximum 2^18")
    body = text[offset:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise Graph6TruncatedError(f"expected {need} data bytes for n={n}, got {len(body)}")
    if len(body) > need:
        raise Graph6TrailingError(f"{len(body) - need} unexpected trailing bytes")
    rows = [0] * n
    stream = iter(pairs(n))
    for ch in body:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            try:
                u, v = next(stream)
            except StopIteration:
                break
            if val >> shift & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


# -- constructors -------------------------------------------------------------

def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(leaves: int) -> Graph:
    """Star S_{1,leaves}; the centre is vertex 0."""
    return complete_multipartite(1, leaves)


def complete_multipartite(*sizes: int) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for s in sizes:
        part = ((1 << s) - 1) << start
        rows.extend([full & ~part] * s)
        start += s
    return Graph(n, tuple(rows))


def complete_split(clique: int, independent: int) -> Graph:
    """Clique on 0..clique-1, every independent vertex joined to all of it."""
    if clique < 0 or independent < 0:
        raise ValueError("sizes must be non-negative")
    return join(complete(clique), empty(independent))


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "empty": (empty, 1),
    "star": (star, 1),
    "complete_split": (complete_split, 2),
}


def make(kind: str, params: Sequence[int]) -> Graph:
    kind = kind.replace("-", "_")
    if kind in ("complete_multipartite", "multipartite"):
        return complete_multipartite(*params)
    if kind not in _FAMILIES:
        raise ValueError(f"unknown family {kind!r}")
    fn, arity = _FAMILIES[kind]
    if len(params) != arity:
        raise ValueError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    if any(p < 0 for p in params):
        raise ValueError(f"{kind} parameters must be non-negative")
    if kind in ("path", "complete", "star") and params[0] < 1:
        raise ValueError(f"{kind} needs a positive parameter")
    return fn(*params)


# -- operators ---------------------------------------------------------------

def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g keeps labels 0..n_g-1, h is shifted by n_g."""
    return Graph(g.n + h.n, g.rows + tuple(r << g.n for r in h.rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all g-h edges; g first, then h."""
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = tuple(r | hmask for r in g.rows) + tuple((r << g.n) | gmask for r in h.rows)
    return Graph(g.n + h.n, rows)


def mycielski(g: Graph) -> Graph:
    """Vertices v_0..v_{n-1}, then shadows u_0..u_{n-1}, then the apex w = 2n."""
    n = g.n
    w = 2 * n
    rows = [0] * (2 * n + 1)
    for i in range(n):
        rows[i] = g.rows[i] | (g.rows[i] << n)
        rows[n + i] = g.rows[i] | (1 << w)
    rows[w] = ((1 << n) - 1) << n
    return Graph(2 * n + 1, tuple(rows))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex (a, b) is labelled a * h.n + b."""
    rows = []
    for a in range(g.n):
        for b in range(h.n):
            row = h.rows[b] << (a * h.n)
            for a2 in bits(g.rows[a]):
                row |= 1 << (a2 * h.n + b)
            rows.append(row)
    return Graph(g.n * h.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on ``vertices``, relabelled 0.. in increasing original order."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in bits(g.rows[v]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def mask_to_list(mask: int) -> list[int]:
    return list(bits(mask))


# -- metrics -----------------------------------------------------------------

@dataclass(frozen=True)
class GraphMetrics:
    max_degree: int
    min_degree: int
    diameter: int | _Unbounded
    connected: bool
    alpha: int
    omega: int
    isolated: frozenset[int]
    twin_pairs: tuple[tuple[int, int, str], ...]


def diameter(g: Graph) -> int | _Unbounded:
    if g.n == 0:
        return 0
    best = 0
    for row in g.distance_matrix():
        if -1 in row:
            return UNBOUNDED
        best = max(best, max(row))
    return best


def twin_pairs(g: Graph) -> list[tuple[int, int, str]]:
    """Pairs (u, v, 'false'|'true') with N(u)=N(v) or N[u]=N[v]."""
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.rows[u] == g.rows[v]:
                out.append((u, v, "false"))
            elif g.rows[u] | (1 << u) == g.rows[v] | (1 << v):
                out.append((u, v, "true"))
    return out


def is_twin_free(g: Graph) -> bool:
    return not twin_pairs(g)


def clique_number(g: Graph) -> int:
    """Maximum clique by branch and bound with a greedy-colouring bound."""
    if g.n == 0:
        return 0
    rows = g.rows
    order = sorted(range(g.n), key=lambda v: (-popcount(rows[v]), v))
    # greedy initial clique
    best = 0
    for start in order:
        clique, cand = 1, rows[start]
        while cand:
            v = max(bits(cand), key=lambda u: popcount(rows[u] & cand))
            clique += 1
            cand &= rows[v]
        best = max(best, clique)

    def colour_bound(cand: int) -> int:
        colours = 0
        while cand:
            colours += 1
            avail = cand
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~rows[v] & ~(1 << v)
                cand &= ~(1 << v)
        return colours

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + colour_bound(cand) <= best:
            return
        while cand:
            if size + popcount(cand) <= best:
                return
            v = (cand & -cand).bit_length() - 1
            expand(size + 1, cand & rows[v])
            cand &= ~(1 << v)

    expand(0, g.full_mask)
    return best


def independence_number(g: Graph) -> int:
    """Maximum independent set by include/exclude branching on a max-degree vertex."""
    rows = g.rows
    best = 0
    # greedy min-degree initial bound
    left = g.full_mask
    size = 0
    while left:
        v = min(bits(left), key=lambda u: popcount(rows[u] & left))
        size += 1
        left &= ~rows[v] & ~(1 << v)
    best = size

    def search(size: int, left: int) -> None:
        nonlocal best
        if size + popcount(left) <= best:
            return
        if not left:
            best = max(best, size)
            return
        v = max(bits(left), key=lambda u: popcount(rows[u] & left))
        if not rows[v] & left:
            # every remaining vertex is isolated within ``left``
            best = max(best, size + popcount(left))
            return
        search(size + 1, left & ~rows[v] & ~(1 << v))
        search(size, left & ~(1 << v))

    search(0, g.full_mask)
    return best


def metrics(g: Graph) -> GraphMetrics:
    degs = g.degrees() or [0]
    diam = diameter(g)
    return GraphMetrics(
        max_degree=max(degs),
        min_degree=min(degs),
        diameter=diam,
        connected=g.is_connected(),
        alpha=independence_number(g),
        omega=clique_number(g),
        isolated=frozenset(bits(g.isolated_mask())),
        twin_pairs=tuple(twin_pairs(g)),
    )
