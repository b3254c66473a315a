"""Simple undirected graphs, neighbourhood operators, colorings and separations."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Tuple

Edge = Tuple[int, int]
Coloring = Dict[int, int]

#: Default vertex cap for anything that enumerates separations.
SEPARATION_CAP = 12


class GraphError(ValueError):
    """Malformed graph input or an argument that does not fit the graph."""


class SizeError(ValueError):
    """Raised when an exhaustive routine would exceed its configured cap."""


@dataclass(frozen=True)
class Verdict:
    """Outcome of a validator. Truthy iff ``ok``; failures carry a reason and a witness."""

    ok: bool
    reason: str = ""
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


OK = Verdict(True)


def fail(reason: str, witness: object = None) -> Verdict:
    return Verdict(False, reason, witness)


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph.

    Vertices are arbitrary integers; graphs built by :meth:`from_edges` use
    ``0..n-1``. Induced subgraphs keep the labels of their host.
    """

    vertices: Tuple[int, ...]
    edges: FrozenSet[Edge]
    adj: Mapping[int, FrozenSet[int]] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]] = ()) -> "Graph":
        return cls.on_vertices(range(n), edges)

    @classmethod
    def on_vertices(cls, vertices: Iterable[int], edges: Iterable[Tuple[int, int]] = ()) -> "Graph":
        verts = tuple(sorted(set(vertices)))
        vset = set(verts)
        nbrs: Dict[int, set] = {v: set() for v in verts}
        es = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u not in vset or v not in vset:
                raise GraphError(f"edge ({u}, {v}) has an end outside the vertex set")
            nbrs[u].add(v)
            nbrs[v].add(u)
            es.add(_edge(u, v))
        return cls(verts, frozenset(es), {v: frozenset(s) for v, s in nbrs.items()})

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __contains__(self, v: object) -> bool:
        return v in self.adj

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(s) for s in self.adj.values()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj.get(u, ())

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep`` (labels preserved)."""
        ks = set(keep)
        bad = ks - set(self.vertices)
        if bad:
            raise GraphError(f"vertices {sorted(bad)} not in graph")
        return Graph.on_vertices(ks, (e for e in self.edges if e[0] in ks and e[1] in ks))

    def remove(self, drop: Iterable[int]) -> "Graph":
        ds = set(drop)
        return self.subgraph(v for v in self.vertices if v not in ds)

    def relabeled(self) -> Tuple["Graph", Dict[int, int]]:
        """Copy on ``0..n-1`` plus the old-to-new label map."""
        idx = {v: i for i, v in enumerate(self.vertices)}
        return Graph.from_edges(self.n, ((idx[u], idx[v]) for u, v in self.edges)), idx

    def components(self) -> List[FrozenSet[int]]:
        return _components(self.vertices, lambda v: self.adj[v])

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def bipartition(self):
        """Return ``(P, Q)`` with the least vertex of every component in ``P``, or None."""
        side: Dict[int, int] = {}
        for s in self.vertices:
            if s in side:
                continue
            side[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if w not in side:
                        side[w] = 1 - side[u]
                        queue.append(w)
                    elif side[w] == side[u]:
                        return None
        p = frozenset(v for v, b in side.items() if b == 0)
        return p, frozenset(self.vertices) - p


def _components(vertices: Iterable[int], nbrs) -> List[FrozenSet[int]]:
    seen = set()
    comps = []
    for s in vertices:
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in nbrs(u):
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def _check_subset(g: Graph, x: Iterable[int]) -> FrozenSet[int]:
    xs = frozenset(x)
    bad = [v for v in xs if v not in g.adj]
    if bad:
        raise GraphError(f"vertex ids {sorted(bad)} not in graph")
    return xs


def n_geq_s(g: Graph, x: Iterable[int], s: int) -> FrozenSet[int]:
    """Vertices outside ``x`` with at least ``s`` neighbours in ``x``."""
    if s < 1:
        raise GraphError("s must be positive")
    xs = _check_subset(g, x)
    return frozenset(v for v in g.vertices if v not in xs and len(g.adj[v] & xs) >= s)


def n_lt_s(g: Graph, x: Iterable[int], s: int) -> FrozenSet[int]:
    """Vertices outside ``x`` with between 1 and ``s-1`` neighbours in ``x``."""
    if s < 1:
        raise GraphError("s must be positive")
    xs = _check_subset(g, x)
    return frozenset(v for v in g.vertices if v not in xs and 1 <= len(g.adj[v] & xs) < s)


def closed_neighborhood(g: Graph, x: Iterable[int]) -> FrozenSet[int]:
    xs = _check_subset(g, x)
    out = set(xs)
    for v in xs:
        out |= g.adj[v]
    return frozenset(out)


def _check_coloring(g: Graph, c: Mapping[int, int]) -> None:
    missing = [v for v in g.vertices if v not in c]
    if missing:
        raise GraphError(f"coloring is not total; uncolored vertices {missing[:5]}")


def monochromatic_components(g: Graph, c: Mapping[int, int]) -> List[FrozenSet[int]]:
    """Connected components of the colour classes, in order of least vertex."""
    _check_coloring(g, c)
    return _components(g.vertices, lambda v: (w for w in g.adj[v] if c[w] == c[v]))


def clustering_of(g: Graph, c: Mapping[int, int]) -> int:
    """Largest monochromatic component size; 0 on the empty graph."""
    return max((len(p) for p in monochromatic_components(g, c)), default=0)


def is_stable(g: Graph, xs: Iterable[int]) -> bool:
    s = set(xs)
    return not any(u in s and v in s for u, v in g.edges)


# --------------------------------------------------------------------------- separations

@dataclass(frozen=True)
class Separation:
    """Ordered pair ``(A, B)`` of edge-disjoint subgraphs whose union is the graph."""

    va: FrozenSet[int]
    vb: FrozenSet[int]
    a_edges: FrozenSet[Edge]
    b_edges: FrozenSet[Edge]

    @property
    def order(self) -> int:
        return len(self.va & self.vb)

    @property
    def boundary(self) -> FrozenSet[int]:
        return self.va & self.vb

    def edge_side(self) -> Dict[Edge, str]:
        side = {e: "A" for e in self.a_edges}
        side.update({e: "B" for e in self.b_edges})
        return side

    def flipped(self) -> "Separation":
        return Separation(self.vb, self.va, self.b_edges, self.a_edges)

    @classmethod
    def from_vertex_sides(cls, g: Graph, va: Iterable[int], vb: Iterable[int],
                          boundary_edges_to: str = "A") -> "Separation":
        """Build a separation, sending edges inside the boundary to one side."""
        va, vb = frozenset(va), frozenset(vb)
        a, b = set(), set()
        for e in g.edges:
            in_a = e[0] in va and e[1] in va
            in_b = e[0] in vb and e[1] in vb
            if in_a and (not in_b or boundary_edges_to == "A"):
                a.add(e)
            elif in_b:
                b.add(e)
            else:
                raise GraphError(f"edge {e} crosses from A-only to B-only")
        return cls(va, vb, frozenset(a), frozenset(b))


def is_separation(g: Graph, sep: Separation) -> bool:
    verts = set(g.vertices)
    if not (sep.va <= verts and sep.vb <= verts) or (sep.va | sep.vb) != verts:
        return False
    if sep.a_edges & sep.b_edges or (sep.a_edges | sep.b_edges) != g.edges:
        return False
    return (all(u in sep.va and v in sep.va for u, v in sep.a_edges)
            and all(u in sep.vb and v in sep.vb for u, v in sep.b_edges))


def _separation_masks(g: Graph, max_order: int) -> Iterator[Tuple[int, int, int, int]]:
    """Yield (va_mask, vb_mask, a_edge_mask, b_edge_mask) over vertex/edge indices."""
    n = g.n
    idx = {v: i for i, v in enumerate(g.vertices)}
    elist = sorted(g.edges)
    ends = [(idx[u], idx[v]) for u, v in elist]
    # label 0 = A only, 1 = B only, 2 = both
    for labels in product((0, 1, 2), repeat=n):
        if sum(1 for x in labels if x == 2) > max_order:
            continue
        forced_a = forced_b = 0
        free = []
        ok = True
        for k, (i, j) in enumerate(ends):
            li, lj = labels[i], labels[j]
            if li == 2 and lj == 2:
                free.append(k)
            elif li != 1 and lj != 1:
                forced_a |= 1 << k
            elif li != 0 and lj != 0:
                forced_b |= 1 << k
            else:
                ok = False
                break
        if not ok:
            continue
        va = sum(1 << i for i, x in enumerate(labels) if x != 1)
        vb = sum(1 << i for i, x in enumerate(labels) if x != 0)
        for choice in product((0, 1), repeat=len(free)):
            ea, eb = forced_a, forced_b
            for k, side in zip(free, choice):
                if side == 0:
                    ea |= 1 << k
                else:
                    eb |= 1 << k
            yield va, vb, ea, eb


def enumerate_separations(g: Graph, max_order: int, cap: int = SEPARATION_CAP) -> Iterator[Separation]:
    """Every separation of order at most ``max_order``, each orientation once."""
    if g.n > cap:
        raise SizeError(f"graph has {g.n} vertices, separation enumeration cap is {cap}")
    verts = g.vertices
    elist = sorted(g.edges)

    def vs(mask):
        return frozenset(v for i, v in enumerate(verts) if mask >> i & 1)

    def es(mask):
        return frozenset(e for k, e in enumerate(elist) if mask >> k & 1)

    for va, vb, ea, eb in _separation_masks(g, max_order):
        yield Separation(vs(va), vs(vb), es(ea), es(eb))
