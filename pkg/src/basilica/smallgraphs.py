"""Exhaustive generation of connected graphs up to isomorphism (small n).

Every connected graph on n vertices arises from a connected graph on n - 1
vertices by adding one vertex joined to a nonempty subset (a DFS-tree leaf of
the larger graph can always be removed), so the level-by-level expansion with
canonical-form deduplication enumerates each isomorphism class exactly once.
Intended for verification sweeps; the canonical form is branch-and-bound over
vertex orderings and only sensible for n up to ~10.
"""

from __future__ import annotations

from collections.abc import Iterator

from .graph import Graph, build_graph


def canonical_rows(n: int, masks: list[int]) -> tuple[int, ...]:
    """Canonical form of a graph given as adjacency bitmasks.

    Row k is the adjacency pattern of the k-th placed vertex against the
    previously placed ones; the returned tuple is the lexicographic maximum
    over all placements, so two graphs get equal rows iff isomorphic.
    """
    best: tuple[int, ...] | None = None
    rows: list[int] = []
    seq: list[int] = []
    placed = [False] * n

    def rec(k: int) -> None:
        nonlocal best
        if k == n:
            t = tuple(rows)
            if best is None or t > best:
                best = t
            return
        rmax = -1
        ties: list[int] = []
        for v in range(n):
            if placed[v]:
                continue
            mv = masks[v]
            r = 0
            for i, u in enumerate(seq):
                if mv >> u & 1:
                    r |= 1 << i
            if r > rmax:
                rmax = r
                ties = [v]
            elif r == rmax:
                ties.append(v)
        if best is not None and rows == list(best[:k]) and rmax < best[k]:
            return
        rows.append(rmax)
        for v in ties:
            placed[v] = True
            seq.append(v)
            rec(k + 1)
            seq.pop()
            placed[v] = False
        rows.pop()

    rec(0)
    assert best is not None
    return best


def _rows_to_masks(n: int, rows: tuple[int, ...]) -> list[int]:
    masks = [0] * n
    for k in range(n):
        row = rows[k]
        for i in range(k):
            if row >> i & 1:
                masks[k] |= 1 << i
                masks[i] |= 1 << k
    return masks


def connected_graph_rows(max_n: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield (n, canonical rows) for every connected graph with 1 <= n <= max_n."""
    level: list[tuple[int, ...]] = [(0,)]
    yield 1, (0,)
    for n in range(2, max_n + 1):
        seen: set[tuple[int, ...]] = set()
        for rows in level:
            masks = _rows_to_masks(n - 1, rows)
            masks.append(0)
            for sub in range(1, 1 << (n - 1)):
                masks[n - 1] = sub
                for i in range(n - 1):
                    if sub >> i & 1:
                        masks[i] |= 1 << (n - 1)
                seen.add(canonical_rows(n, masks))
                for i in range(n - 1):
                    masks[i] &= ~(1 << (n - 1))
        level = sorted(seen)
        for rows in level:
            yield n, rows


def rows_to_graph(n: int, rows: tuple[int, ...]) -> Graph:
    """Materialize a canonical-rows encoding as a Graph on labels 0..n-1."""
    masks = _rows_to_masks(n, rows)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if masks[u] >> v & 1
    ]
    return build_graph(edges, isolated=range(n))


def connected_graphs(max_n: int) -> Iterator[Graph]:
    """All connected graphs with at most max_n vertices, one per iso class."""
    for n, rows in connected_graph_rows(max_n):
        yield rows_to_graph(n, rows)
