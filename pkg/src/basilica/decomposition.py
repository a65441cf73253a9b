"""Factor-components, the generalized Kotzig-Lovasz partition, the basilica
order, the attachment map, and their assembly into one decomposition."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, contract
from .matching import (
    GallaiEdmondsFamily,
    Matching,
    _even_reachable,
    _reach_evens,
    gallai_edmonds,
    maximum_matching,
)

# reach results are cached per start vertex so one decomposition pipeline
# never repeats a search: {u: even-vertex list}
ReachCache = dict[int, list[int]]


@dataclass(frozen=True)
class FactorComponent:
    """A connected component of the allowed-edge subgraph."""

    id: int
    vertices: frozenset[int]
    consistent: bool


@dataclass(frozen=True)
class KotzigLovaszClass:
    """One equivalence class of the similarity relation, inside one component."""

    component_id: int
    vertices: frozenset[int]


@dataclass(frozen=True)
class BasilicaPoset:
    """The component order as reflexive upper sets plus its covering edges."""

    upper_sets: tuple[frozenset[int], ...]
    hasse_edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Attachment:
    """One connected piece K of the strict-upper-bound region of a component,
    tied to the unique class absorbing the neighborhood of K."""

    lower_id: int
    up_vertices: frozenset[int]
    class_index: int


@dataclass(frozen=True)
class BasilicaDecomposition:
    graph: Graph
    matching: Matching
    family: GallaiEdmondsFamily
    components: tuple[FactorComponent, ...]
    classes: tuple[KotzigLovaszClass, ...]
    poset: BasilicaPoset
    attachments: tuple[Attachment, ...]


def _reach_list(
    g: Graph, m: Matching, u: int, cache: ReachCache | None
) -> tuple[list[int], bytearray | None]:
    """Even-reachable vertices of G - u (flags only on fresh computation)."""
    if cache is not None:
        hit = cache.get(u)
        if hit is not None:
            return hit, None
    evens, flags = _reach_evens(g, m, u)
    if cache is not None:
        cache[u] = evens
    return evens, flags


def factor_components(
    g: Graph,
    m: Matching,
    family: GallaiEdmondsFamily,
    *,
    reach_cache: ReachCache | None = None,
) -> tuple[FactorComponent, ...]:
    """Partition the vertex set into factor-components.

    Inconsistent components are the connected components of G[D u A] after
    dropping the edges inside A; consistent ones are glued together from the
    allowed edges found at each vertex of C.  Ids follow the least contained
    vertex index.
    """
    adj = g.adjacency
    found: list[tuple[frozenset[int], bool]] = []

    da = family.d | family.a
    a = family.a
    seen: set[int] = set()
    for s in sorted(da):
        if s in seen:
            continue
        seen.add(s)
        stack = [s]
        verts = [s]
        while stack:
            v = stack.pop()
            v_in_a = v in a
            for w in adj[v]:
                if w in seen or w not in da or (v_in_a and w in a):
                    continue
                seen.add(w)
                stack.append(w)
                verts.append(w)
        found.append((frozenset(verts), False))

    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    c_sorted = sorted(family.c)
    for u in c_sorted:
        evens, flags = _reach_list(g, m, u, reach_cache)
        if flags is None:
            flags = bytearray(g.n)
            for x in evens:
                flags[x] = 1
        ru = find(u)
        parent[find(m.mate[u])] = ru
        for w in adj[u]:
            # an unmatched edge uw is allowed exactly when w stays avoidable
            # once u and its matched edge are removed
            if flags[w]:
                parent[find(w)] = find(ru)
    groups: dict[int, list[int]] = {}
    for u in c_sorted:
        groups.setdefault(find(u), []).append(u)
    for verts in groups.values():
        found.append((frozenset(verts), True))

    found.sort(key=lambda item: min(item[0]))
    return tuple(
        FactorComponent(id=i, vertices=vs, consistent=flag)
        for i, (vs, flag) in enumerate(found)
    )


def kotzig_lovasz(
    g: Graph,
    m: Matching,
    family: GallaiEdmondsFamily,
    components: tuple[FactorComponent, ...],
    *,
    reach_cache: ReachCache | None = None,
) -> tuple[KotzigLovaszClass, ...]:
    """Split every component into its similarity classes.

    An inconsistent component contributes its A-part as one class (when
    nonempty) and a singleton per D-vertex.  Inside a consistent component
    the class of v is the part of the component v cannot reach by a
    saturated alternating path, so each search closes one whole class.
    """
    out: list[KotzigLovaszClass] = []
    for comp in components:
        if not comp.consistent:
            a_part = comp.vertices & family.a
            if a_part:
                out.append(KotzigLovaszClass(comp.id, frozenset(a_part)))
            for x in comp.vertices & family.d:
                out.append(KotzigLovaszClass(comp.id, frozenset((x,))))
            continue
        remaining = set(comp.vertices)
        while remaining:
            rep = min(remaining)
            evens, _ = _reach_list(g, m, rep, reach_cache)
            ev = set(evens)
            cls = frozenset(v for v in comp.vertices if v not in ev)
            out.append(KotzigLovaszClass(comp.id, cls))
            remaining -= cls
    out.sort(key=lambda cl: (cl.component_id, min(cl.vertices)))
    return tuple(out)


def hasse(upper_sets: tuple[frozenset[int], ...]) -> list[tuple[int, int]]:
    """Covering pairs (transitive reduction) of a partial order given as
    reflexive upper sets.

    Raises ValueError if the input is not a partial order (missing
    reflexivity, a two-element cycle, or a transitivity gap).
    """
    k = len(upper_sets)
    ups = [frozenset(s) for s in upper_sets]
    for i in range(k):
        if i not in ups[i]:
            raise ValueError(f"upper set of {i} is not reflexive")
        for j in ups[i]:
            if j != i and i in ups[j]:
                raise ValueError(f"cycle between {i} and {j}: not a partial order")
            if not ups[j] <= ups[i]:
                raise ValueError(f"transitivity fails through {i} -> {j}")
    edges: list[tuple[int, int]] = []
    for i in range(k):
        strict = ups[i] - {i}
        for j in sorted(strict):
            if not any(j in ups[h] for h in strict if h != j):
                edges.append((i, j))
    return edges


def basilica_order(
    g: Graph, m: Matching, components: tuple[FactorComponent, ...]
) -> BasilicaPoset:
    """The component order: H is below H' when H' can be folded onto H.

    For each component H, contract it to a single exposed vertex g0; the
    matching minus the edges of H stays maximum in the contracted graph, and
    the component of g0 inside the contracted graph's D-part marks exactly
    the vertices of the strict upper bounds of H.
    """
    comp_of = [-1] * g.n
    for comp in components:
        for v in comp.vertices:
            comp_of[v] = comp.id
    pairs = m.pairs()
    exposed = sorted(m.exposed)

    upper: list[set[int]] = [{comp.id} for comp in components]
    for comp in components:
        cr = contract(g, comp.vertices)
        cg = cr.graph
        cv = cr.contracted_vertex
        omap = cr.origin_map
        mate2 = [-1] * cg.n
        for x, y in pairs:
            a, b = omap[x], omap[y]
            if a == cv and b == cv:
                continue
            assert a != cv and b != cv, "matched edge crosses a factor-component"
            mate2[a] = b
            mate2[b] = a
        roots = sorted({omap[x] for x in exposed} | {cv})
        _, flags = _even_reachable(cg.adjacency, mate2, roots)
        seen = bytearray(cg.n)
        seen[cv] = 1
        stack = [cv]
        in_k = bytearray(cg.n)
        in_k[cv] = 1
        while stack:
            v = stack.pop()
            for w in cg.adjacency[v]:
                if flags[w] and not seen[w]:
                    seen[w] = 1
                    in_k[w] = 1
                    stack.append(w)
        ups = upper[comp.id]
        for v in range(g.n):
            nv = omap[v]
            if nv != cv and in_k[nv]:
                ups.add(comp_of[v])

    for i in range(len(components)):
        for j in upper[i]:
            assert j == i or i not in upper[j], (
                f"components {i} and {j} bound each other: order broken"
            )
    upper_sets = tuple(frozenset(s) for s in upper)
    return BasilicaPoset(upper_sets, tuple(hasse(upper_sets)))


def attachments(
    g: Graph,
    components: tuple[FactorComponent, ...],
    classes: tuple[KotzigLovaszClass, ...],
    poset: BasilicaPoset,
) -> tuple[Attachment, ...]:
    """Tie each connected piece of a component's strict-upper region to the
    one class that absorbs its neighborhood inside the component.

    The containment of that neighborhood in a single class is a theorem;
    a violation is asserted, never repaired.
    """
    class_of = [-1] * g.n
    for idx, cl in enumerate(classes):
        for v in cl.vertices:
            class_of[v] = idx

    out: list[Attachment] = []
    for comp in components:
        up_ids = poset.upper_sets[comp.id] - {comp.id}
        if not up_ids:
            continue
        region: set[int] = set()
        for j in up_ids:
            region |= components[j].vertices
        todo = sorted(region)
        seen: set[int] = set()
        for s in todo:
            if s in seen:
                continue
            seen.add(s)
            stack = [s]
            part = [s]
            while stack:
                v = stack.pop()
                for w in g.adjacency[v]:
                    if w in region and w not in seen:
                        seen.add(w)
                        stack.append(w)
                        part.append(w)
            nbhd = {
                w
                for v in part
                for w in g.adjacency[v]
                if w in comp.vertices
            }
            assert nbhd, f"upper region piece at {s} has no edge to component {comp.id}"
            touched = {class_of[w] for w in nbhd}
            assert len(touched) == 1, (
                f"neighborhood of upper region piece at {s} spans classes {touched}"
            )
            out.append(
                Attachment(
                    lower_id=comp.id,
                    up_vertices=frozenset(part),
                    class_index=touched.pop(),
                )
            )
    out.sort(key=lambda at: (at.lower_id, min(at.up_vertices)))
    return tuple(out)


def decompose(g: Graph) -> BasilicaDecomposition:
    """Full pipeline: matching, Gallai-Edmonds family, factor-components,
    Kotzig-Lovasz classes, component order, attachments."""
    m = maximum_matching(g)
    family = gallai_edmonds(g, m)
    cache: ReachCache = {}
    comps = factor_components(g, m, family, reach_cache=cache)
    classes = kotzig_lovasz(g, m, family, comps, reach_cache=cache)
    poset = basilica_order(g, m, comps)
    atts = attachments(g, comps, classes, poset)
    return BasilicaDecomposition(
        graph=g,
        matching=m,
        family=family,
        components=comps,
        classes=classes,
        poset=poset,
        attachments=atts,
    )
