"""Maximum matching and alternating-search primitives.

The matching itself comes from Edmonds' blossom algorithm (repeated
augmenting-path search with blossom shrinking).  The same blossom-aware
even-reachability search then yields the Gallai-Edmonds family, per-vertex
saturated-path reachability, allowed edges, and the exposed-root component.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .graph import Graph


class MatchingNotMaximumError(ValueError):
    """An operation that requires a maximum matching found an augmenting path."""


@dataclass(frozen=True)
class Matching:
    """A matching as an involution on vertex indices; -1 marks exposed."""

    mate: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(1 for v in self.mate if v != -1) // 2

    @property
    def exposed(self) -> frozenset[int]:
        return frozenset(v for v, w in enumerate(self.mate) if w == -1)

    def covers(self, v: int) -> bool:
        return self.mate[v] != -1

    def mate_of(self, v: int) -> int | None:
        w = self.mate[v]
        return None if w == -1 else w

    def pairs(self) -> list[tuple[int, int]]:
        """Matched edges as (u, v) pairs with u < v, sorted."""
        return [(v, w) for v, w in enumerate(self.mate) if v < w]


def matching_from_pairs(g: Graph, pairs: Iterable[tuple[int, int]]) -> Matching:
    """Build and validate a Matching of ``g`` from explicit edge pairs."""
    mate = [-1] * g.n
    for u, v in pairs:
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        if mate[u] != -1 or mate[v] != -1:
            raise ValueError(f"vertex reused by ({u}, {v})")
        mate[u] = v
        mate[v] = u
    return Matching(tuple(mate))


def _find(base: list[int], x: int) -> int:
    # union-find with full path compression
    r = base[x]
    if base[r] == r:
        return r
    while base[r] != r:
        r = base[r]
    while base[x] != r:
        base[x], x = r, base[x]
    return r


def _even_reachable(
    adj: tuple[tuple[int, ...], ...] | list[list[int]],
    mate: list[int],
    roots: list[int],
    banned: int = -1,
) -> tuple[list[int], bytearray]:
    """Blossom-aware alternating BFS from the given exposed roots.

    Marks every vertex reachable from a root by an alternating path ending
    on a matched edge (the "even" vertices, blossoms included).  With roots =
    all exposed vertices of a maximum matching this is exactly D(G).  The
    ``banned`` vertex, if any, is treated as deleted.

    Returns (even vertices in discovery order, per-vertex even flags).
    Raises MatchingNotMaximumError if an augmenting path shows up, i.e. the
    matching was not maximum.
    """
    n = len(adj)
    base = list(range(n))
    p = [-1] * n
    even = bytearray(n)
    root_of = [-1] * n
    mark = [0] * n
    tick = 0
    q: list[int] = []
    for r in roots:
        even[r] = 1
        root_of[r] = r
        q.append(r)
    head = 0
    while head < len(q):
        v = q[head]
        head += 1
        rv = root_of[v]
        for w in adj[v]:
            if even[w]:
                bv = _find(base, v)
                bw = _find(base, w)
                if bv == bw:
                    continue
                if root_of[w] != rv:
                    raise MatchingNotMaximumError(
                        "augmenting path between two exposed vertices"
                    )
                # contract the blossom closed by edge (v, w): find the lca
                # of the two bases, then absorb both base-to-lca paths
                tick += 1
                x = bv
                while True:
                    mark[x] = tick
                    mx = mate[x]
                    if mx == -1:
                        break
                    x = _find(base, p[mx])
                lca = bw
                while mark[lca] != tick:
                    lca = _find(base, p[mate[lca]])
                for tip in (bv, bw):
                    x = tip
                    while x != lca:
                        o = mate[x]
                        base[x] = lca
                        base[o] = lca
                        if not even[o]:
                            even[o] = 1
                            root_of[o] = rv
                            q.append(o)
                        x = _find(base, p[o])
            elif p[w] == -1 and w != banned:
                p[w] = v
                mw = mate[w]
                if mw == -1:
                    raise MatchingNotMaximumError(
                        "augmenting path to an exposed vertex"
                    )
                even[mw] = 1
                root_of[mw] = rv
                q.append(mw)
    return q, even


def _mark_blossom_path(
    mate: list[int],
    base: list[int],
    p: list[int],
    flag: bytearray,
    v: int,
    b: int,
    child: int,
) -> None:
    # walk even vertices from v up to base b, flagging the blossom and
    # rewiring p[] so augmenting paths can be lifted through the blossom
    while base[v] != b:
        flag[base[v]] = 1
        flag[base[mate[v]]] = 1
        p[v] = child
        child = mate[v]
        v = p[mate[v]]


def _try_augment(
    adj: tuple[tuple[int, ...], ...], mate: list[int], root: int, n: int
) -> bool:
    """Single-root augmenting search; flips the matching on success."""
    p = [-1] * n
    base = list(range(n))
    used = bytearray(n)
    used[root] = 1
    q = [root]
    head = 0
    while head < len(q):
        v = q[head]
        head += 1
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and p[mate[to]] != -1):
                # even-even edge inside the tree: contract the blossom
                a = base[v]
                seen = bytearray(n)
                while True:
                    a = base[a]
                    seen[a] = 1
                    if mate[a] == -1:
                        break
                    a = p[mate[a]]
                b = base[to]
                while not seen[b]:
                    b = base[p[mate[b]]]
                flag = bytearray(n)
                _mark_blossom_path(mate, base, p, flag, v, b, to)
                _mark_blossom_path(mate, base, p, flag, to, b, v)
                for i in range(n):
                    if flag[base[i]]:
                        base[i] = b
                        if not used[i]:
                            used[i] = 1
                            q.append(i)
            elif p[to] == -1:
                p[to] = v
                if mate[to] == -1:
                    # augment along the alternating path back to the root
                    u = to
                    while u != -1:
                        pv = p[u]
                        ppv = mate[pv]
                        mate[u] = pv
                        mate[pv] = u
                        u = ppv
                    return True
                used[mate[to]] = 1
                q.append(mate[to])
    return False


def maximum_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching of ``g``.

    Deterministic for a fixed vertex numbering: greedy seeding and every
    search scan vertices and neighbors in index order.
    """
    n = g.n
    adj = g.adjacency
    mate = [-1] * n
    for v in range(n):
        if mate[v] == -1:
            for w in adj[v]:
                if mate[w] == -1:
                    mate[v] = w
                    mate[w] = v
                    break
    for v in range(n):
        if mate[v] == -1:
            _try_augment(adj, mate, v, n)
    return Matching(tuple(mate))


def deficiency(g: Graph, m: Matching) -> int:
    """Number of vertices ``m`` leaves exposed: |V| - 2|M|."""
    return g.n - 2 * m.size


@dataclass(frozen=True)
class GallaiEdmondsFamily:
    """The partition {D, A, C} of the vertex set.

    ``d``: vertices exposed by some maximum matching; ``a``: their
    neighborhood; ``c``: the rest.
    """

    d: frozenset[int]
    a: frozenset[int]
    c: frozenset[int]
    deficiency: int


def gallai_edmonds(g: Graph, m: Matching) -> GallaiEdmondsFamily:
    """Gallai-Edmonds family from one maximum matching, in O(n + m).

    Raises MatchingNotMaximumError if the reachability search uncovers an
    augmenting path, i.e. ``m`` was not maximum.
    """
    if len(m.mate) != g.n:
        raise ValueError("matching does not fit the graph")
    mate = list(m.mate)
    roots = [v for v in range(g.n) if mate[v] == -1]
    evens, _ = _even_reachable(g.adjacency, mate, roots)
    d = frozenset(evens)
    a = frozenset(w for v in d for w in g.adjacency[v] if w not in d)
    c = frozenset(g.vertices()) - d - a
    return GallaiEdmondsFamily(d=d, a=a, c=c, deficiency=g.n - 2 * m.size)


def _reach_evens(
    g: Graph, m: Matching, u: int
) -> tuple[list[int], bytearray]:
    # D(G - u) with the matching m minus u's matched edge; valid whenever u
    # is covered by every maximum matching, since that matching is then
    # maximum in G - u
    mate = list(m.mate)
    mu = mate[u]
    mate[u] = -1
    mate[mu] = -1
    roots = [v for v in range(g.n) if mate[v] == -1 and v != u]
    return _even_reachable(g.adjacency, mate, roots, banned=u)


def saturated_reach(g: Graph, m: Matching, u: int) -> frozenset[int]:
    """Vertices v for which removing u and v together leaves the deficiency
    unchanged, computed as D(G - u).

    Outside D(G) these are exactly the vertices joined to ``u`` by a path
    whose edges alternate and whose both end edges are matched.  Requires
    ``u`` to be covered by every maximum matching (u not in D(G)); if the
    guarantee is violated the underlying search detects it and raises.
    """
    if m.mate[u] == -1:
        raise ValueError(f"vertex {u} is exposed by the matching")
    evens, _ = _reach_evens(g, m, u)
    return frozenset(evens)


def allowed_edges_at(g: Graph, m: Matching, u: int) -> frozenset[tuple[int, int]]:
    """Edges at ``u`` lying in some maximum matching, for u in C(G) or a
    perfectly matchable graph."""
    fam = gallai_edmonds(g, m)  # also certifies m is maximum
    if fam.d and u not in fam.c:
        raise ValueError(
            f"vertex {u} is not in C(G) and the graph is not factorizable"
        )
    out = {(min(u, w), max(u, w)) for w in (m.mate[u],) if w != -1}
    _, flags = _reach_evens(g, m, u)
    for w in g.adjacency[u]:
        if flags[w]:
            out.add((min(u, w), max(u, w)))
    return frozenset(out)


def root_component(g: Graph, m: Matching, r: int) -> frozenset[int]:
    """The connected component of G[D(G)] containing the exposed vertex ``r``.

    Equivalently the largest vertex set X containing r for which G[X] is
    factor-critical and the matching restricted to X is near-perfect
    exposing r.
    """
    if m.mate[r] != -1:
        raise ValueError(f"vertex {r} is covered by the matching")
    mate = list(m.mate)
    roots = [v for v in range(g.n) if mate[v] == -1]
    _, flags = _even_reachable(g.adjacency, mate, roots)
    seen = bytearray(g.n)
    seen[r] = 1
    stack = [r]
    verts = [r]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if flags[w] and not seen[w]:
                seen[w] = 1
                stack.append(w)
                verts.append(w)
    return frozenset(verts)
