"""Colour partitions, neighbour signatures and the partition verifiers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, bits, to_graph6


class DisconnectedGraphError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    """Ordered partition of 0..n-1 into non-empty classes, sorted by minimum vertex."""

    n: int
    classes: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for cls in self.classes:
            if not cls:
                raise ValueError("empty colour class")
            if seen & cls:
                raise ValueError("colour classes overlap")
            seen |= cls
        if seen != set(range(self.n)):
            raise ValueError("colour classes do not cover the vertex set")
        canon = tuple(sorted(self.classes, key=min))
        object.__setattr__(self, "classes", canon)

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> Coloring:
        return cls(n, tuple(frozenset(c) for c in classes))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> Coloring:
        groups: dict[int, set[int]] = {}
        for v, c in enumerate(labels):
            groups.setdefault(c, set()).add(v)
        return cls.from_classes(len(labels), groups.values())

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> Coloring:
        return cls.from_classes(n, (bits(m) for m in masks if m))

    @classmethod
    def singletons(cls, n: int) -> Coloring:
        return cls.from_classes(n, ([v] for v in range(n)))

    @classmethod
    def parse(cls, line: str) -> Coloring:
        """Parse a line of space-separated colour indices."""
        labels = [int(tok) for tok in line.split()]
        if any(c < 0 for c in labels):
            raise ValueError("colour indices must be non-negative")
        return cls.from_labels(labels)

    @property
    def k(self) -> int:
        return len(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def labels(self) -> list[int]:
        out = [0] * self.n
        for i, cls in enumerate(self.classes):
            for v in cls:
                out[v] = i
        return out

    def masks(self) -> list[int]:
        return [sum(1 << v for v in cls) for cls in self.classes]

    def masks_by_vertex(self) -> list[int]:
        """Mask of each vertex's own class."""
        out = [0] * self.n
        for m in self.masks():
            for v in bits(m):
                out[v] = m
        return out

    def to_line(self) -> str:
        return " ".join(map(str, self.labels()))

    def to_record(self, g: Graph | None = None) -> dict:
        rec = {"classes": [sorted(c) for c in self.classes]}
        if g is not None:
            rec["graph"] = to_graph6(g)
        return rec


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: str | None = None  # "not-proper" | "clash"
    pair: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.accepted

    def describe(self) -> str:
        if self.accepted:
            return "accepted"
        return f"rejected: {self.reason} {self.pair[0]} {self.pair[1]}"


def _check(g: Graph, c: Coloring) -> None:
    if c.n != g.n:
        raise ValueError(f"colouring covers {c.n} vertices, graph has {g.n}")


def nr_tuple(g: Graph, c: Coloring, v: int) -> tuple[int, ...]:
    """Entry i: 0 if v is in class i, 1 if v has a neighbour there, else 2."""
    _check(g, c)
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    row = g.rows[v]
    return tuple(0 if v in cls else (1 if row & m else 2) for cls, m in zip(c.classes, c.masks()))


def nr_tuples(g: Graph, c: Coloring) -> list[tuple[int, ...]]:
    _check(g, c)
    masks = c.masks()
    out = []
    for v in range(g.n):
        row = g.rows[v]
        out.append(tuple(0 if m >> v & 1 else (1 if row & m else 2) for m in masks))
    return out


def neighbour_colour_mask(g: Graph, masks: Sequence[int], v: int) -> int:
    row = g.rows[v]
    out = 0
    for i, m in enumerate(masks):
        if row & m:
            out |= 1 << i
    return out


def first_monochromatic_edge(g: Graph, c: Coloring) -> tuple[int, int] | None:
    for u, m in enumerate(c.masks_by_vertex()):
        inside = g.rows[u] & m & ~((2 << u) - 1)
        if inside:
            return (u, (inside & -inside).bit_length() - 1)
    return None


def is_proper(g: Graph, c: Coloring) -> Verdict:
    _check(g, c)
    edge = first_monochromatic_edge(g, c)
    if edge is None:
        return Verdict(True)
    return Verdict(False, "not-proper", edge)


def _first_equal_pair(vectors: Sequence, same_class_only: bool, labels: Sequence[int]):
    """Lexicographically first pair (u, v), u < v, with equal keys."""
    groups: dict = {}
    for v, vec in enumerate(vectors):
        key = (labels[v], vec) if same_class_only else vec
        groups.setdefault(key, []).append(v)
    dupes = [(grp[0], grp[1]) for grp in groups.values() if len(grp) > 1]
    return min(dupes) if dupes else None


def is_nl(g: Graph, c: Coloring) -> Verdict:
    """Neighbour-locating test.

    Same-class vertices must differ in the set of colours seen in their
    neighbourhoods. Checked both within classes and over all vertex pairs via
    nr-tuples; the two must agree.
    """
    proper = is_proper(g, c)
    if not proper:
        return proper
    labels = c.labels()
    masks = c.masks()
    signatures = [neighbour_colour_mask(g, masks, v) for v in range(g.n)]
    within = _first_equal_pair(signatures, True, labels)
    everywhere = _first_equal_pair(nr_tuples(g, c), False, labels)
    if within != everywhere:
        raise AssertionError(f"nr-tuple formulations disagree: {within} vs {everywhere}")
    if within is None:
        return Verdict(True)
    return Verdict(False, "clash", within)


def distance_vector(g: Graph, c: Coloring, v: int) -> tuple[int, ...]:
    _check(g, c)
    if not g.is_connected():
        raise DisconnectedGraphError("distance vectors need a connected graph")
    dist = g.distance_matrix()[v]
    return tuple(min(dist[u] for u in cls) for cls in c.classes)


def is_ml(g: Graph, c: Coloring) -> Verdict:
    """Metric-locating colouring: distance vectors distinct within each class."""
    _check(g, c)
    if not g.is_connected():
        raise DisconnectedGraphError("metric location needs a connected graph")
    proper = is_proper(g, c)
    if not proper:
        return proper
    dist = g.distance_matrix()
    vectors = [tuple(min(dist[v][u] for u in cls) for cls in c.classes) for v in range(g.n)]
    pair = _first_equal_pair(vectors, True, c.labels())
    if pair is None:
        return Verdict(True)
    return Verdict(False, "clash", pair)


def is_dominating(g: Graph, c: Coloring) -> bool:
    """Every vertex is at distance exactly 1 from some class."""
    _check(g, c)
    masks = c.masks()
    for v in range(g.n):
        row = g.rows[v]
        if not any(row & m and not m >> v & 1 for m in masks):
            return False
    return True
