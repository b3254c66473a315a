"""Tree decompositions, layerings, treewidth and layered treewidth."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..graph_core import OK, Graph, GraphError, SizeError, Verdict, _components, fail

#: Largest graph accepted by the exact treewidth search.
TREEWIDTH_CAP = 12
#: Largest graph accepted by the exact layered-treewidth search.
LAYERED_CAP = 8


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed by node ids, joined by ``tree_edges``."""

    bags: Mapping[int, FrozenSet[int]]
    tree_edges: FrozenSet[Tuple[int, int]]

    @classmethod
    def build(cls, bags: Mapping[int, Iterable[int]], tree_edges: Iterable[Tuple[int, int]] = ()):
        es = frozenset((a, b) if a < b else (b, a) for a, b in tree_edges)
        return cls({x: frozenset(b) for x, b in bags.items()}, es)

    @property
    def nodes(self) -> Tuple[int, ...]:
        return tuple(sorted(self.bags))

    def neighbors(self) -> Dict[int, List[int]]:
        nb: Dict[int, List[int]] = {x: [] for x in self.bags}
        for a, b in self.tree_edges:
            nb[a].append(b)
            nb[b].append(a)
        return nb

    def vertices(self) -> FrozenSet[int]:
        return frozenset().union(*self.bags.values()) if self.bags else frozenset()

    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1


def width(td: TreeDecomposition) -> int:
    return td.width()


def _is_tree(td: TreeDecomposition) -> Verdict:
    nodes = set(td.bags)
    for a, b in td.tree_edges:
        if a not in nodes or b not in nodes:
            return fail("tree edge with unknown node", (a, b))
        if a == b:
            return fail("loop in decomposition tree", (a, b))
    if not nodes:
        return OK
    if len(td.tree_edges) != len(nodes) - 1:
        return fail("decomposition tree has the wrong number of edges", len(td.tree_edges))
    nb = td.neighbors()
    if len(_components(sorted(nodes), lambda x: nb[x])) != 1:
        return fail("decomposition tree is disconnected")
    return OK


def validate_tree_decomposition(g: Graph, td: TreeDecomposition) -> Verdict:
    ok = _is_tree(td)
    if not ok:
        return ok
    verts = set(g.vertices)
    for x, bag in td.bags.items():
        if not bag <= verts:
            return fail("bag contains a non-vertex", (x, sorted(bag - verts)))
    if g.n and not td.bags:
        return fail("empty decomposition of a nonempty graph")
    nb = td.neighbors()
    for v in g.vertices:
        hosts = [x for x in sorted(td.bags) if v in td.bags[x]]
        if not hosts:
            return fail("vertex in no bag", v)
        hs = set(hosts)
        if len(_components(hosts, lambda x: (y for y in nb[x] if y in hs))) != 1:
            return fail("bags containing vertex are not connected", v)
    for e in sorted(g.edges):
        if not any(e[0] in b and e[1] in b for b in td.bags.values()):
            return fail("edge not covered by any bag", e)
    return OK


# --------------------------------------------------------------------------- elimination orderings

def _masks(g: Graph):
    idx = {v: i for i, v in enumerate(g.vertices)}
    adj = [0] * g.n
    for u, v in g.edges:
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]
    return idx, adj


def _q_mask(adj: Sequence[int], s: int, v: int) -> int:
    """Vertices outside ``s | {v}`` reachable from ``v`` through ``s``."""
    seen = 1 << v
    frontier = 1 << v
    out = 0
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            nxt |= adj[low.bit_length() - 1]
        nxt &= ~seen
        seen |= nxt
        out |= nxt & ~s
        frontier = nxt & s
    return out


def _elimination_dp(g: Graph, cost: Callable[[int], int]) -> Tuple[int, List[int]]:
    """Minimise the largest ``cost(bag)`` over elimination orderings; bag = {v} + Q(S, v)."""
    n = g.n
    _, adj = _masks(g)
    full = (1 << n) - 1
    best = [0] * (1 << n)
    choice = [-1] * (1 << n)
    best[0] = -1
    for s in range(1, full + 1):
        val = None
        pick = -1
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            prev = s ^ low
            c = best[prev]
            if val is not None and c >= val:
                continue
            c = max(c, cost((1 << v) | _q_mask(adj, prev, v)))
            if val is None or c < val:
                val, pick = c, v
        best[s] = val
        choice[s] = pick
    order: List[int] = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s ^= 1 << v
    order.reverse()
    return best[full], [g.vertices[i] for i in order]


def decomposition_from_ordering(g: Graph, order: Sequence[int]) -> TreeDecomposition:
    """Tree decomposition induced by eliminating vertices in ``order``."""
    if sorted(order) != list(g.vertices):
        raise GraphError("ordering is not a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    nbrs = {v: set(g.adj[v]) for v in g.vertices}
    bags: Dict[int, FrozenSet[int]] = {}
    parent: Dict[int, Optional[int]] = {}
    for v in order:
        later = {w for w in nbrs[v] if pos[w] > pos[v]}
        bags[pos[v]] = frozenset(later | {v})
        parent[pos[v]] = min((pos[w] for w in later), default=None)
        for a in later:
            nbrs[a] |= later - {a}
    edges = [(x, p) for x, p in parent.items() if p is not None]
    roots = sorted(x for x, p in parent.items() if p is None)
    edges += list(zip(roots, roots[1:]))
    if not bags:
        bags[0] = frozenset()
    return TreeDecomposition.build(bags, edges)


def treewidth_exact(g: Graph, cap: int = TREEWIDTH_CAP) -> Tuple[int, TreeDecomposition]:
    """Exact treewidth by dynamic programming over vertex subsets."""
    if g.n > cap:
        raise SizeError(f"exact treewidth limited to {cap} vertices, got {g.n}")
    if g.n == 0:
        return -1, TreeDecomposition.build({0: ()})
    tw, order = _elimination_dp(g, lambda bag: bin(bag).count("1") - 1)
    return tw, decomposition_from_ordering(g, order)


def min_fill_ordering(g: Graph) -> List[int]:
    nbrs = {v: set(g.adj[v]) for v in g.vertices}
    left = set(g.vertices)
    order = []
    while left:
        def fill(v):
            ns = sorted(nbrs[v])
            return sum(1 for i, a in enumerate(ns) for b in ns[i + 1:] if b not in nbrs[a])
        v = min(left, key=lambda u: (fill(u), len(nbrs[u]), u))
        order.append(v)
        ns = nbrs[v]
        for a in ns:
            nbrs[a] |= ns - {a}
            nbrs[a].discard(v)
        left.discard(v)
        del nbrs[v]
    return order


def treewidth_heuristic(g: Graph) -> Tuple[int, TreeDecomposition]:
    """Min-fill elimination; an upper bound with no optimality guarantee."""
    td = decomposition_from_ordering(g, min_fill_ordering(g))
    return td.width(), td


# --------------------------------------------------------------------------- layerings

@dataclass(frozen=True)
class Layering:
    """Ordered partition of ``V(G) - excluded``; layer ``i`` (1-based) is ``layers[i-1]``."""

    layers: Tuple[FrozenSet[int], ...]
    excluded: FrozenSet[int] = frozenset()

    @classmethod
    def build(cls, layers: Iterable[Iterable[int]], excluded: Iterable[int] = ()):
        return cls(tuple(frozenset(x) for x in layers), frozenset(excluded))

    def index(self) -> Dict[int, int]:
        return {v: i + 1 for i, layer in enumerate(self.layers) for v in layer}

    def covered(self) -> FrozenSet[int]:
        return frozenset().union(*self.layers) if self.layers else frozenset()


def validate_layering(g: Graph, lay: Layering) -> Verdict:
    seen: Dict[int, int] = {}
    for i, layer in enumerate(lay.layers, 1):
        for v in layer:
            if v in seen:
                return fail("vertex in two layers", v)
            seen[v] = i
    if set(seen) & lay.excluded:
        return fail("excluded vertex also layered", sorted(set(seen) & lay.excluded))
    if set(seen) | lay.excluded != set(g.vertices):
        return fail("layers and excluded set do not cover the graph")
    for u, v in sorted(g.edges):
        if u in lay.excluded or v in lay.excluded:
            continue
        if abs(seen[u] - seen[v]) > 1:
            return fail("edge spans non-consecutive layers", (u, v))
    return OK


def bfs_layering(g: Graph, sources: Iterable[int], excluded: Iterable[int] = ()) -> Layering:
    """BFS distance layers of ``G - excluded``; each component starts from its first listed source
    (or its least vertex)."""
    z = frozenset(excluded)
    h = g.remove(z)
    dist: Dict[int, int] = {}
    srcs = [v for v in sources if v in h]
    for comp in h.components():
        root = next((v for v in srcs if v in comp), min(comp))
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in h.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
    depth = max(dist.values(), default=-1) + 1
    layers = [set() for _ in range(depth)]
    for v, d in dist.items():
        layers[d].add(v)
    return Layering.build(layers, z)


def v_width(td: TreeDecomposition, lay: Layering) -> int:
    """``max_i max_t |X_t & V_i|``."""
    if td.vertices() - lay.covered() or (lay.covered() - td.vertices()):
        raise GraphError("decomposition and layering cover different vertex sets")
    return max((len(bag & layer) for bag in td.bags.values() for layer in lay.layers), default=0)


def layered_treewidth_upper(g: Graph) -> Tuple[int, TreeDecomposition, Layering]:
    """Best of BFS layerings (every root, per component) combined with a min-fill decomposition."""
    td = treewidth_heuristic(g)[1]
    per_comp = []
    for comp in g.components():
        best = None
        for root in sorted(comp):
            lay = bfs_layering(g.subgraph(comp), [root])
            w = max(len(bag & comp & layer) for bag in td.bags.values() for layer in lay.layers)
            if best is None or w < best[0]:
                best = (w, lay)
        per_comp.append(best)
    return max((w for w, _ in per_comp), default=0), td, _merge_layerings([lay for _, lay in per_comp])


def _merge_layerings(lays: Sequence[Layering]) -> Layering:
    depth = max((len(l.layers) for l in lays), default=0)
    merged = [set() for _ in range(depth)]
    for lay in lays:
        for i, layer in enumerate(lay.layers):
            merged[i] |= layer
    return Layering.build(merged)


def _component_layerings(g: Graph, comp: FrozenSet[int]) -> Iterator[Dict[int, int]]:
    """All layer labellings of a connected vertex set, normalised to start at 0."""
    root = min(comp)
    order = [root]
    parent = {root: None}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(g.adj[u]):
            if w in comp and w not in parent:
                parent[w] = u
                order.append(w)
                queue.append(w)
    seen = set()
    label: Dict[int, int] = {}

    def rec(k):
        if k == len(order):
            lo = min(label.values())
            key = tuple(label[v] - lo for v in order)
            if key not in seen:
                seen.add(key)
                yield {v: label[v] - lo for v in order}
            return
        v = order[k]
        base = 0 if parent[v] is None else label[parent[v]]
        for d in ((0,) if parent[v] is None else (-1, 0, 1)):
            x = base + d
            if all(abs(label[w] - x) <= 1 for w in g.adj[v] if w in label):
                label[v] = x
                yield from rec(k + 1)
                del label[v]

    yield from rec(0)


def layered_treewidth_exact(g: Graph, cap: int = LAYERED_CAP) -> Tuple[int, TreeDecomposition, Layering]:
    """Exact layered treewidth by enumerating every layering and optimising the decomposition."""
    if g.n > cap:
        raise SizeError(f"exact layered treewidth limited to {cap} vertices, got {g.n}")
    results = []
    for comp in g.components():
        h = g.subgraph(comp)
        best = None
        for lab in _component_layerings(g, comp):
            groups: Dict[int, int] = {}
            for i, v in enumerate(h.vertices):
                groups[lab[v]] = groups.get(lab[v], 0) | (1 << i)
            masks = list(groups.values())

            def cost(bag, masks=masks):
                return max(bin(bag & m).count("1") for m in masks)

            val, order = _elimination_dp(h, cost)
            if best is None or val < best[0]:
                depth = max(lab.values()) + 1
                layers = [[v for v in comp if lab[v] == i] for i in range(depth)]
                best = (val, order, Layering.build(layers))
        results.append((best[0], best[1], best[2]))
    if not results:
        return 0, TreeDecomposition.build({0: ()}), Layering.build([])
    order = [v for _, o, _ in results for v in o]
    # concatenated orderings keep components separate, so the bags are unchanged
    td = decomposition_from_ordering(g, order)
    return max(r[0] for r in results), td, _merge_layerings([r[2] for r in results])
