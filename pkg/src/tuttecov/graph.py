"""Multigraphs, their graphic matroids, and graph-level minors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import CapacityExceeded, InvalidParameters, ParseError, UnknownElement
from .matroid import MAX_ELEMENTS, Matroid, _as_basis_array


class DisjointSet:
    """Union-find over hashable items with path halving and union by size."""

    def __init__(self, items: Iterable = ()):
        self.parent = {}
        self.size = {}
        for item in items:
            self.add(item)

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y) -> bool:
        """Merge the classes of x and y; False if they were already joined."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True

    def components(self) -> int:
        return sum(1 for x in self.parent if self.parent[x] == x)


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph; ``edges`` holds ``(label, u, v)`` with ``u == v`` for loops."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        labels = [e[0] for e in self.edges]
        if len(set(labels)) != len(labels):
            raise InvalidParameters("edge labels must be pairwise distinct")
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise InvalidParameters("vertex labels must be pairwise distinct")
        for lab, u, v in self.edges:
            if u not in vs or v not in vs:
                raise InvalidParameters(f"edge {lab!r} has an endpoint outside the vertex set")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str, str]]) -> "Multigraph":
        edges = [tuple(e) for e in edges]
        vertices: dict[str, None] = {}
        for _, u, v in edges:
            vertices.setdefault(u)
            vertices.setdefault(v)
        return cls(tuple(vertices), tuple(edges))

    @property
    def edge_labels(self) -> tuple[str, ...]:
        return tuple(e[0] for e in self.edges)

    def _edge_set(self, T) -> set[str]:
        if isinstance(T, str):
            T = [T]
        T = set(T)
        unknown = T - set(self.edge_labels)
        if unknown:
            raise UnknownElement(f"unknown edges {sorted(unknown)}")
        return T


def graphic_matroid(G: Multigraph) -> Matroid:
    """Cycle matroid of ``G``: bases are the maximal spanning forests."""
    m = len(G.edges)
    if m > MAX_ELEMENTS:
        raise CapacityExceeded(f"{m} edges exceed the {MAX_ELEMENTS}-element limit")
    full = DisjointSet(G.vertices)
    for _, u, v in G.edges:
        full.union(u, v)
    r = len(G.vertices) - full.components()
    ends = [(u, v) for _, u, v in G.edges]
    bases: list[int] = []

    # branch on each edge in order; an edge may be taken only if it closes no cycle
    def walk(i: int, chosen: int, size: int, parent: dict):
        if size == r:
            bases.append(chosen)
            return
        if size + (m - i) < r:
            return
        u, v = ends[i]
        ru, rv = _root(parent, u), _root(parent, v)
        if ru != rv:
            extended = dict(parent)
            extended[ru] = rv
            walk(i + 1, chosen | (1 << i), size + 1, extended)
        walk(i + 1, chosen, size, parent)

    walk(0, 0, 0, {})
    return Matroid(G.edge_labels, _as_basis_array(bases))


def _root(parent: dict, x):
    while x in parent:
        x = parent[x]
    return x


def graph_delete(G: Multigraph, T=()) -> Multigraph:
    drop = G._edge_set(T)
    return Multigraph(G.vertices, tuple(e for e in G.edges if e[0] not in drop))


def graph_contract(G: Multigraph, T=()) -> Multigraph:
    """Contract the edges of ``T`` in ascending label order.

    Each contracted non-loop edge merges its second endpoint into its first;
    edges of ``T`` that are loops when reached are simply removed. Parallel
    edges and loops created along the way are kept.
    """
    todo = sorted(G._edge_set(T))
    vertices = list(G.vertices)
    edges = {lab: (u, v) for lab, u, v in G.edges}
    for lab in todo:
        u, v = edges.pop(lab)
        if u == v:
            continue
        vertices.remove(v)
        for other, (a, b) in edges.items():
            edges[other] = (u if a == v else a, u if b == v else b)
    return Multigraph(
        tuple(vertices),
        tuple((lab, *edges[lab]) for lab, _, _ in G.edges if lab in edges),
    )


def parse_graph(text: str) -> Multigraph:
    """Parse the ``label u v`` per line edge-list format (``#`` starts a comment)."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 'label u v', got {raw!r}", key=f"line {lineno}")
        edges.append(tuple(parts))
    try:
        return Multigraph.from_edges(edges)
    except InvalidParameters as exc:
        raise ParseError(str(exc)) from exc


def format_graph(G: Multigraph) -> str:
    return "".join(f"{lab} {u} {v}\n" for lab, u, v in G.edges)
