"""Societies, vortices, vortical decompositions, segregations and locations."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..graph_core import OK, Graph, GraphError, Separation, SizeError, Verdict, fail, is_separation
from .flow import cyclic_arcs, max_disjoint_paths

#: Largest society accepted by the vortex check and the decomposition search.
SOCIETY_CAP = 14


@dataclass(frozen=True)
class Society:
    """A graph with a cyclic order on some of its vertices.

    The order is stored rotated so that its least vertex comes first; two
    rotations of the same cycle compare equal, mirror images do not.
    """

    graph: Graph
    cyclic: Tuple[int, ...] = ()

    def __post_init__(self):
        cyc = tuple(self.cyclic)
        if len(set(cyc)) != len(cyc):
            raise GraphError("cyclic order repeats a vertex")
        if not set(cyc) <= set(self.graph.vertices):
            raise GraphError("cyclic order leaves the society graph")
        if cyc:
            k = cyc.index(min(cyc))
            cyc = cyc[k:] + cyc[:k]
        object.__setattr__(self, "cyclic", cyc)

    @property
    def boundary(self) -> FrozenSet[int]:
        return frozenset(self.cyclic)


def is_rho_vortex(soc: Society, rho: int, cap: int = SOCIETY_CAP) -> bool:
    """No pair u != v of boundary vertices admits rho+1 disjoint (I+u)-(J+v) paths."""
    if soc.graph.n > cap:
        raise SizeError(f"vortex check limited to {cap} vertices, got {soc.graph.n}")
    return vortex_witness(soc, rho) is None


def vortex_witness(soc: Society, rho: int) -> Optional[Tuple[int, int, int]]:
    """First pair ``(u, v, paths)`` with more than ``rho`` disjoint paths, or None."""
    order = soc.cyclic
    for u in order:
        for v in order:
            if u == v:
                continue
            inner, outer = cyclic_arcs(order, u, v)
            k = max_disjoint_paths(soc.graph, inner + [u], outer + [v], limit=rho + 1)
            if k > rho:
                return u, v, k
    return None


# --------------------------------------------------------------------------- vortical decompositions

@dataclass(frozen=True)
class VorticalDecomposition:
    """Path of bags; bag ``i`` must contain the ``i``-th boundary vertex counted from ``start``."""

    bags: Tuple[FrozenSet[int], ...]
    start: Optional[int] = None

    @classmethod
    def build(cls, bags: Iterable[Iterable[int]], start: Optional[int] = None):
        return cls(tuple(frozenset(b) for b in bags), start)


def linear_order(soc: Society, start: Optional[int]) -> Tuple[int, ...]:
    cyc = soc.cyclic
    if start is None or not cyc:
        return cyc
    k = cyc.index(start)
    return cyc[k:] + cyc[:k]


def vortical_adhesion(soc: Society, dec: VorticalDecomposition) -> int:
    if len(dec.bags) != len(soc.cyclic):
        raise GraphError("number of bags differs from the boundary size")
    bags = dec.bags
    return max((len(bags[i] & bags[j]) for i in range(len(bags)) for j in range(len(bags)) if i != j),
               default=0)


def validate_vortical(soc: Society, dec: VorticalDecomposition) -> Verdict:
    if len(dec.bags) != len(soc.cyclic):
        return fail("number of bags differs from the boundary size", len(dec.bags))
    if dec.start is not None and dec.start not in soc.boundary:
        return fail("start vertex is not a boundary vertex", dec.start)
    order = linear_order(soc, dec.start)
    g = soc.graph
    verts = set(g.vertices)
    for i, (v, bag) in enumerate(zip(order, dec.bags)):
        if v not in bag:
            return fail("bag misses its boundary vertex", (i, v))
        if not bag <= verts:
            return fail("bag holds a non-vertex", i)
    for v in g.vertices:
        idx = [i for i, b in enumerate(dec.bags) if v in b]
        if not idx and g.n:
            return fail("vertex in no bag", v)
        if idx and idx[-1] - idx[0] + 1 != len(idx):
            return fail("bags containing a vertex are not consecutive", v)
    for u, v in sorted(g.edges):
        if not any(u in b and v in b for b in dec.bags):
            return fail("edge not covered", (u, v))
    return OK


def find_vortical_decomposition(soc: Society, max_adhesion: int, start: Optional[int] = None,
                                cap: int = SOCIETY_CAP) -> Optional[VorticalDecomposition]:
    """Exhaustive search over interval assignments for a decomposition of small adhesion.

    With ``start=None`` every rotation of the boundary is tried.
    """
    g = soc.graph
    if g.n > cap:
        raise SizeError(f"vortical search limited to {cap} vertices, got {g.n}")
    if not soc.cyclic:
        return None
    starts = soc.cyclic if start is None else (start,)
    for st in starts:
        dec = _search_intervals(soc, linear_order(soc, st), max_adhesion)
        if dec is not None:
            return VorticalDecomposition.build(dec, st)
    return None


def _search_intervals(soc: Society, order: Sequence[int], budget: int) -> Optional[List[set]]:
    g = soc.graph
    n = len(order)
    pos = {v: i for i, v in enumerate(order)}
    rest = [v for v in g.vertices if v not in pos]
    # place boundary vertices first, then the rest in order of most placed neighbours
    seq = list(order)
    placed = set(seq)
    while rest:
        v = max(rest, key=lambda x: (len(g.adj[x] & placed), -x))
        rest.remove(v)
        seq.append(v)
        placed.add(v)
    cut = [0] * max(n - 1, 0)
    iv: Dict[int, Tuple[int, int]] = {}

    def options(v):
        if v in pos:
            p = pos[v]
            return [(a, b) for a in range(p + 1) for b in range(p, n)]
        return [(a, b) for a in range(n) for b in range(a, n)]

    def rec(k):
        if k == len(seq):
            return True
        v = seq[k]
        opts = sorted(options(v), key=lambda ab: (ab[1] - ab[0], ab))
        for a, b in opts:
            if any(w in iv and (iv[w][1] < a or b < iv[w][0]) for w in g.adj[v]):
                continue
            if any(cut[i] + 1 > budget for i in range(a, b)):
                continue
            for i in range(a, b):
                cut[i] += 1
            iv[v] = (a, b)
            if rec(k + 1):
                return True
            del iv[v]
            for i in range(a, b):
                cut[i] -= 1
        return False

    if not rec(0):
        return None
    bags = [set() for _ in range(n)]
    for v, (a, b) in iv.items():
        for i in range(a, b + 1):
            bags[i].add(v)
    return bags


def min_vortical_adhesion(soc: Society, start: Optional[int] = None) -> int:
    """Smallest adhesion any vortical decomposition achieves (0 for an empty boundary)."""
    if not soc.cyclic:
        return 0
    k = 0
    while find_vortical_decomposition(soc, k, start) is None:
        k += 1
    return k


# --------------------------------------------------------------------------- segregations

def _subgraph_of(s: Graph, g: Graph) -> bool:
    return set(s.vertices) <= set(g.vertices) and s.edges <= g.edges


def validate_segregation(g: Graph, seg: Sequence[Society]) -> Verdict:
    seg = list(seg)
    for i, soc in enumerate(seg):
        if not _subgraph_of(soc.graph, g):
            return fail("society graph is not a subgraph of G", i)
    cov_v = set().union(*(soc.graph.vertices for soc in seg)) if seg else set()
    cov_e = set().union(*(soc.graph.edges for soc in seg)) if seg else set()
    if cov_v != set(g.vertices) or cov_e != set(g.edges):
        return fail("societies do not cover G")
    for i in range(len(seg)):
        for j in range(i + 1, len(seg)):
            a, b = seg[i], seg[j]
            shared = set(a.graph.vertices) & set(b.graph.vertices)
            if not shared <= (a.boundary & b.boundary):
                return fail("societies share a non-boundary vertex", (i, j, sorted(shared - (a.boundary & b.boundary))))
            if a.graph.edges & b.graph.edges:
                return fail("societies share an edge", (i, j))
    return OK


def segregation_type(seg: Sequence[Society], kappa: int, rho: int) -> bool:
    """Whether the segregation splits into small-boundary members and at most kappa rho-vortices."""
    big = [soc for soc in seg if len(soc.cyclic) > 3]
    return len(big) <= kappa and all(is_rho_vortex(soc, rho) for soc in big)


def is_tangle_central(seg: Sequence[Society], tangle) -> bool:
    """No member (A, B) of the tangle has B inside a society graph."""
    for soc in seg:
        sv, se = set(soc.graph.vertices), soc.graph.edges
        for s in tangle.separations:
            if s.vb <= sv and s.b_edges <= se:
                return False
    return True


# --------------------------------------------------------------------------- locations

def validate_location(g: Graph, loc: Iterable[Separation]) -> Verdict:
    loc = list(loc)
    for i, s in enumerate(loc):
        if not is_separation(g, s):
            return fail("member is not a separation", i)
    for i, s in enumerate(loc):
        for j, t in enumerate(loc):
            if i != j and s != t and not (s.va <= t.vb and s.a_edges <= t.b_edges):
                return fail("A-side not inside the other member's B-side", (i, j))
    return OK


def location_interior(g: Graph, loc: Iterable[Separation]) -> Graph:
    keep = set(g.vertices)
    for s in loc:
        keep &= s.vb
    return g.subgraph(keep)
