"""Exhaustive, definition-level reference implementations for small graphs.

Everything here works straight from the definitions (enumeration of maximum
matchings, deficiency of every induced subgraph) and is exponential, so all
entry points enforce a vertex-count guard.  The fast modules are never called
from here; independence is the point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

ORACLE_LIMIT = 12


def _check_guard(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise ValueError(f"graph has {g.n} vertices, oracle guard is {limit}")


def _adjacency_masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in nbrs) for nbrs in g.adjacency]


def _nu_table(masks: list[int]) -> list[int]:
    """Maximum matching size of every induced sub-mask, by bitmask DP."""
    n = len(masks)
    table = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        best = table[mask ^ low]
        nbrs = masks[v] & mask
        while nbrs:
            wbit = nbrs & -nbrs
            cand = 1 + table[mask ^ low ^ wbit]
            if cand > best:
                best = cand
            nbrs ^= wbit
        table[mask] = best
    return table


def _deficiency_of_mask(table: list[int], mask: int) -> int:
    return bin(mask).count("1") - 2 * table[mask]


def enumerate_maximum_matchings(
    g: Graph, limit: int = ORACLE_LIMIT
) -> list[frozenset[tuple[int, int]]]:
    """All maximum matchings of ``g``, each as a frozenset of (u, v) pairs."""
    _check_guard(g, limit)
    masks = _adjacency_masks(g)
    table = _nu_table(masks)
    out: list[frozenset[tuple[int, int]]] = []
    acc: list[tuple[int, int]] = []

    def rec(mask: int) -> None:
        if table[mask] == 0:
            out.append(frozenset(acc))
            return
        low = mask & -mask
        v = low.bit_length() - 1
        need = table[mask]
        if table[mask ^ low] == need:
            rec(mask ^ low)
        nbrs = masks[v] & mask
        while nbrs:
            wbit = nbrs & -nbrs
            if 1 + table[mask ^ low ^ wbit] == need:
                acc.append((v, wbit.bit_length() - 1))
                rec(mask ^ low ^ wbit)
                acc.pop()
            nbrs ^= wbit

    rec((1 << g.n) - 1)
    return out


def oracle_gallai_edmonds(
    g: Graph, limit: int = ORACLE_LIMIT
) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """(D, A, C): vertices exposed by some maximum matching, their
    neighborhood, and the rest."""
    _check_guard(g, limit)
    covered_sets = [
        {v for e in matching for v in e}
        for matching in enumerate_maximum_matchings(g, limit)
    ]
    d = frozenset(
        v for v in g.vertices() if any(v not in cov for cov in covered_sets)
    )
    a = frozenset(w for v in d for w in g.adjacency[v] if w not in d)
    c = frozenset(g.vertices()) - d - a
    return d, a, c


def oracle_allowed_and_components(
    g: Graph, limit: int = ORACLE_LIMIT
) -> tuple[frozenset[tuple[int, int]], list[tuple[frozenset[int], bool]]]:
    """Edges lying in some maximum matching, plus the factor-components.

    Components are connected components of the allowed-edge subgraph
    (vertices without an allowed edge form singletons), each flagged
    consistent when disjoint from D(G), ordered by least vertex.
    """
    _check_guard(g, limit)
    matchings = enumerate_maximum_matchings(g, limit)
    allowed = frozenset(
        (min(u, v), max(u, v)) for matching in matchings for u, v in matching
    )
    d, _, _ = oracle_gallai_edmonds(g, limit)
    adj: list[list[int]] = [[] for _ in g.vertices()]
    for u, v in allowed:
        adj[u].append(v)
        adj[v].append(u)
    seen = bytearray(g.n)
    comps: list[tuple[frozenset[int], bool]] = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = 1
        stack = [s]
        verts = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    stack.append(w)
                    verts.append(w)
        vs = frozenset(verts)
        comps.append((vs, not vs & d))
    return allowed, comps


def is_factor_critical(g: Graph, limit: int = ORACLE_LIMIT) -> bool:
    """True iff deleting any single vertex leaves a perfectly matchable graph."""
    _check_guard(g, limit)
    masks = _adjacency_masks(g)
    table = _nu_table(masks)
    full = (1 << g.n) - 1
    return all(2 * table[full ^ (1 << v)] == g.n - 1 for v in g.vertices())


def oracle_similarity(g: Graph, u: int, v: int, limit: int = ORACLE_LIMIT) -> bool:
    """True iff u = v, or u and v share a factor-component and deleting both
    strictly increases the deficiency."""
    _check_guard(g, limit)
    if u == v:
        return True
    _, comps = oracle_allowed_and_components(g, limit)
    if not any(u in vs and v in vs for vs, _ in comps):
        return False
    masks = _adjacency_masks(g)
    table = _nu_table(masks)
    full = (1 << g.n) - 1
    base = _deficiency_of_mask(table, full)
    both = full ^ (1 << u) ^ (1 << v)
    return _deficiency_of_mask(table, both) > base


def _contracted_factor_critical(g: Graph, x: set[int], h: frozenset[int]) -> bool:
    """Whether G[x] with ``h`` merged to one vertex is factor-critical."""
    rest = sorted(x - h)
    pos = {v: i for i, v in enumerate(rest)}
    cv = len(rest)
    n = cv + 1
    masks = [0] * n
    for v in x:
        a = pos.get(v, cv)
        for w in g.adjacency[v]:
            if w in x:
                b = pos.get(w, cv)
                if a != b:
                    masks[a] |= 1 << b
                    masks[b] |= 1 << a
    table = _nu_table(masks)
    full = (1 << n) - 1
    return all(2 * table[full ^ (1 << v)] == n - 1 for v in range(n))


def oracle_critical_inducing_sets(
    g: Graph, h: frozenset[int], limit: int = ORACLE_LIMIT
) -> list[frozenset[int]]:
    """All separating supersets X of the component ``h`` for which contracting
    ``h`` inside G[X] yields a factor-critical graph.

    Separating sets are exactly the unions of factor-component vertex sets,
    so only those unions are enumerated.
    """
    _check_guard(g, limit)
    _, comps = oracle_allowed_and_components(g, limit)
    parts = [vs for vs, _ in comps]
    if h not in parts:
        raise ValueError("h is not a factor-component vertex set")
    others = [vs for vs in parts if vs != h]
    out: list[frozenset[int]] = []
    for bits in range(1 << len(others)):
        x = set(h)
        for i, vs in enumerate(others):
            if bits >> i & 1:
                x |= vs
        if _contracted_factor_critical(g, x, h):
            out.append(frozenset(x))
    out.sort(key=sorted)
    return out


def oracle_order(
    g: Graph, h1: frozenset[int], h2: frozenset[int], limit: int = ORACLE_LIMIT
) -> bool:
    """Whether some critical-inducing set for ``h1`` contains ``h2``."""
    _check_guard(g, limit)
    return any(
        h2 <= x for x in oracle_critical_inducing_sets(g, h1, limit)
    )


@dataclass(frozen=True)
class OracleReport:
    """Everything the exhaustive oracle can say about one small graph."""

    nu: int
    deficiency: int
    d: frozenset[int]
    a: frozenset[int]
    c: frozenset[int]
    allowed: frozenset[tuple[int, int]]
    components: tuple[tuple[frozenset[int], bool], ...]
    similar_pairs: frozenset[tuple[int, int]]
    order_pairs: frozenset[tuple[int, int]]
    critical_inducing: tuple[tuple[frozenset[int], ...], ...]


def oracle_report(g: Graph, limit: int = ORACLE_LIMIT) -> OracleReport:
    """Compute the full oracle view of ``g`` in one pass."""
    _check_guard(g, limit)
    masks = _adjacency_masks(g)
    table = _nu_table(masks)
    full = (1 << g.n) - 1
    nu = table[full]
    deficiency = g.n - 2 * nu

    matchings = enumerate_maximum_matchings(g, limit)
    covered_sets = [{v for e in matching for v in e} for matching in matchings]
    d = frozenset(
        v for v in g.vertices() if any(v not in cov for cov in covered_sets)
    )
    a = frozenset(w for v in d for w in g.adjacency[v] if w not in d)
    c = frozenset(g.vertices()) - d - a

    allowed = frozenset(
        (min(u, v), max(u, v)) for matching in matchings for u, v in matching
    )
    adj: list[list[int]] = [[] for _ in g.vertices()]
    for u, v in allowed:
        adj[u].append(v)
        adj[v].append(u)
    seen = bytearray(g.n)
    comps: list[tuple[frozenset[int], bool]] = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = 1
        stack = [s]
        verts = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    stack.append(w)
                    verts.append(w)
        vs = frozenset(verts)
        comps.append((vs, not vs & d))
    comps.sort(key=lambda item: min(item[0]))

    similar: set[tuple[int, int]] = set()
    for vs, _ in comps:
        members = sorted(vs)
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                mask = full ^ (1 << u) ^ (1 << v)
                if _deficiency_of_mask(table, mask) > deficiency:
                    similar.add((u, v))

    parts = [vs for vs, _ in comps]
    families: list[tuple[frozenset[int], ...]] = []
    for h in parts:
        others = [vs for vs in parts if vs != h]
        fam: list[frozenset[int]] = []
        for bits in range(1 << len(others)):
            x = set(h)
            for i, vs in enumerate(others):
                if bits >> i & 1:
                    x |= vs
            if _contracted_factor_critical(g, x, h):
                fam.append(frozenset(x))
        fam.sort(key=sorted)
        families.append(tuple(fam))

    order: set[tuple[int, int]] = set()
    for i, h in enumerate(parts):
        for j, h2 in enumerate(parts):
            if any(h2 <= x for x in families[i]):
                order.add((i, j))

    return OracleReport(
        nu=nu,
        deficiency=deficiency,
        d=d,
        a=a,
        c=c,
        allowed=allowed,
        components=tuple(comps),
        similar_pairs=frozenset(similar),
        order_pairs=frozenset(order),
        critical_inducing=tuple(families),
    )
