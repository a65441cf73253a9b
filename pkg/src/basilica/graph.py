"""Immutable undirected simple graphs with stable external labels.

Vertices are dense indices ``0..n-1``; every derived view (induced subgraph,
deletion, contraction) preserves the external labels so that vertices can be
traced across views.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Hashable, Iterable, Iterator
from dataclasses import dataclass, field

Label = Hashable


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph.

    ``adjacency[v]`` is the sorted, duplicate-free tuple of neighbors of
    ``v``; ``labels[v]`` is the external name ``v`` was declared with.
    """

    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[Label, ...]
    _index: dict[Label, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.adjacency):
            raise ValueError("labels and adjacency must have equal length")
        object.__setattr__(
            self, "_index", {lab: v for v, lab in enumerate(self.labels)}
        )
        if len(self._index) != len(self.labels):
            raise ValueError("vertex labels must be unique")

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once, as ``(u, v)`` with ``u < v``."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def label_of(self, v: int) -> Label:
        return self.labels[v]

    def index_of(self, label: Label) -> int:
        return self._index[label]


@dataclass(frozen=True)
class ContractionResult:
    """A contracted graph plus the map from original to new vertices.

    ``origin_map[v]`` is the index of ``v`` in the contracted graph; all
    members of the contracted set map to ``contracted_vertex``.
    """

    graph: Graph
    contracted_vertex: int
    origin_map: tuple[int, ...]


def _graph_from_sets(adj_sets: list[set[int]], labels: list[Label]) -> Graph:
    return Graph(
        adjacency=tuple(tuple(sorted(s)) for s in adj_sets),
        labels=tuple(labels),
    )


def build_graph(
    edges: Iterable[tuple[Label, Label]],
    isolated: Iterable[Label] = (),
) -> Graph:
    """Build a graph from labelled edge pairs, merging duplicates.

    ``isolated`` declares vertices that may have no incident edge.  Vertex
    indices follow first appearance in ``edges`` then ``isolated``.

    Raises:
        ValueError: if an edge joins a label to itself.
    """
    index: dict[Label, int] = {}
    labels: list[Label] = []

    def vertex(label: Label) -> int:
        v = index.get(label)
        if v is None:
            v = len(labels)
            index[label] = v
            labels.append(label)
        return v

    pairs: list[tuple[int, int]] = []
    for a, b in edges:
        if a == b:
            raise ValueError(f"self-loop not allowed: ({a!r}, {b!r})")
        pairs.append((vertex(a), vertex(b)))
    for lab in isolated:
        vertex(lab)

    adj: list[set[int]] = [set() for _ in labels]
    for u, v in pairs:
        adj[u].add(v)
        adj[v].add(u)
    return _graph_from_sets(adj, labels)


def _check_subset(g: Graph, vertices: Iterable[int]) -> list[int]:
    out = []
    for v in vertices:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise ValueError(f"unknown vertex: {v!r}")
        out.append(v)
    return out


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on ``vertices`` with exactly the edges lying inside it."""
    keep = sorted(set(_check_subset(g, vertices)))
    pos = {v: i for i, v in enumerate(keep)}
    adj: list[set[int]] = [set() for _ in keep]
    for i, v in enumerate(keep):
        for w in g.adjacency[v]:
            j = pos.get(w)
            if j is not None:
                adj[i].add(j)
    return _graph_from_sets(adj, [g.labels[v] for v in keep])


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """The induced subgraph on the complement of ``vertices``."""
    drop = set(_check_subset(g, vertices))
    return induced_subgraph(g, (v for v in g.vertices() if v not in drop))


def contract(g: Graph, vertices: Iterable[int]) -> ContractionResult:
    """Merge ``vertices`` into one vertex, dropping loops and parallels.

    The merged vertex is placed last and labelled with the frozenset of the
    member labels.
    """
    group = set(_check_subset(g, vertices))
    if not group:
        raise ValueError("cannot contract an empty vertex set")
    survivors = [v for v in g.vertices() if v not in group]
    cv = len(survivors)
    origin = [0] * g.n
    for i, v in enumerate(survivors):
        origin[v] = i
    for v in group:
        origin[v] = cv

    adj: list[set[int]] = [set() for _ in range(cv + 1)]
    for u, v in g.edges():
        a, b = origin[u], origin[v]
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    labels = [g.labels[v] for v in survivors]
    labels.append(frozenset(g.labels[v] for v in group))
    return ContractionResult(
        graph=_graph_from_sets(adj, labels),
        contracted_vertex=cv,
        origin_map=tuple(origin),
    )


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Maximal connected vertex sets, ordered by least contained index."""
    seen = bytearray(g.n)
    out: list[frozenset[int]] = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = 1
        stack = [s]
        verts = [s]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = 1
                    stack.append(w)
                    verts.append(w)
        out.append(frozenset(verts))
    return out
