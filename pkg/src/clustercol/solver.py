"""Exact clustered-colouring solvers and the explicit colourings used by the lemmas."""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .graph_core import Coloring, Graph, GraphError, Separation, SizeError, clustering_of
from .list_machinery import ListError, high_colours, is_list_coloring
from .structure.decompositions import TreeDecomposition, validate_tree_decomposition

BRUTE_FORCE_BUDGET = 10 ** 8
DP_STATE_BUDGET = 2_000_000


def _search_order(g: Graph) -> List[int]:
    """BFS order from the highest-degree vertex of each component, so neighbours come early."""
    order: List[int] = []
    seen = set()
    for start in sorted(g.vertices, key=lambda v: (-g.degree(v), v)):
        if start in seen:
            continue
        seen.add(start)
        queue = [start]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in sorted(g.adj[u], key=lambda x: (-g.degree(x), x)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


class _Backtrack:
    """Assign colours vertex by vertex, keeping every monochromatic piece within ``eta``."""

    def __init__(self, g: Graph, lists: Mapping[int, Sequence[int]], eta: int, stable: FrozenSet[int],
                 symmetric: bool = False):
        self.g = g
        self.order = _search_order(g)
        self.lists = lists
        self.eta = eta
        self.stable = stable
        self.symmetric = symmetric
        self.c: Dict[int, int] = {}

    def piece(self, v: int, x: int) -> int:
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in self.g.adj[u]:
                if w not in seen and self.c.get(w) == x:
                    seen.add(w)
                    stack.append(w)
                    if len(seen) > self.eta:
                        return len(seen)
        return len(seen)

    def run(self) -> Optional[Coloring]:
        return dict(self.c) if self._rec(0, -1) else None

    def _rec(self, k: int, top: int) -> bool:
        if k == len(self.order):
            return True
        v = self.order[k]
        for x in self.lists[v]:
            if self.symmetric and x > top + 1:
                break
            if x in self.stable and any(self.c.get(w) == x for w in self.g.adj[v]):
                continue
            self.c[v] = x
            if self.piece(v, x) <= self.eta and self._rec(k + 1, max(top, x)):
                return True
            del self.c[v]
        return False


def brute_force_min_clustering(g: Graph, k: int, budget: int = BRUTE_FORCE_BUDGET) -> Tuple[int, Coloring]:
    """Least clustering over all k-colourings (colours ``0..k-1``), with a witness."""
    if k < 1:
        raise ValueError("k must be positive")
    if k ** g.n > budget:
        raise SizeError(f"{k}^{g.n} colourings exceed the budget {budget}")
    if g.n == 0:
        return 0, {}
    lists = {v: list(range(k)) for v in g.vertices}
    for eta in range(1, g.n + 1):
        c = _Backtrack(g, lists, eta, frozenset(), symmetric=True).run()
        if c is not None:
            return eta, c
    raise AssertionError("a constant colouring always has clustering n")


def brute_force_list_coloring(g: Graph, L: Mapping[int, Iterable[int]], eta: int, F: Iterable[int] = (),
                              budget: int = BRUTE_FORCE_BUDGET) -> Optional[Coloring]:
    """An L-colouring with clustering at most ``eta`` and stable F-classes, or None."""
    lists = {v: sorted(L[v]) for v in g.vertices}
    if prod(len(x) for x in lists.values()) > budget:
        raise SizeError("product of list sizes exceeds the budget")
    c = _Backtrack(g, lists, eta, frozenset(F)).run()
    if c is not None:
        assert is_list_coloring(g, L, c) and clustering_of(g, c) <= eta
    return c


# --------------------------------------------------------------------------- full enumeration

def all_list_colorings(g: Graph, L: Mapping[int, Iterable[int]], budget: int = 2_000_000) -> np.ndarray:
    """Every L-colouring as a row; column ``i`` is ``g.vertices[i]``."""
    lists = [sorted(L[v]) for v in g.vertices]
    total = prod(len(x) for x in lists)
    if total > budget:
        raise SizeError(f"{total} colourings exceed the enumeration budget {budget}")
    if not lists:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*[np.array(x, dtype=np.int64) for x in lists], indexing="ij")
    return np.stack([a.ravel() for a in grids], axis=1)


def component_labels(g: Graph, cols: np.ndarray) -> np.ndarray:
    """Per colouring, the least vertex index of each vertex's monochromatic component."""
    idx = {v: i for i, v in enumerate(g.vertices)}
    edges = [(idx[u], idx[v]) for u, v in sorted(g.edges)]
    lab = np.tile(np.arange(g.n, dtype=np.int64), (cols.shape[0], 1))
    same = [cols[:, a] == cols[:, b] for a, b in edges]
    changed = True
    while changed:
        changed = False
        for (a, b), m in zip(edges, same):
            low = np.minimum(lab[:, a], lab[:, b])
            for t in (a, b):
                upd = m & (low < lab[:, t])
                if upd.any():
                    lab[upd, t] = low[upd]
                    changed = True
    return lab


# --------------------------------------------------------------------------- tree-decomposition DP

@dataclass
class _Nice:
    kind: str                 # leaf, intro, forget, join
    bag: Tuple[int, ...]
    vertex: Optional[int] = None
    children: Tuple[int, ...] = ()


def nice_decomposition(td: TreeDecomposition) -> Tuple[List[_Nice], int]:
    """Introduce/forget/join normal form; returns nodes (children before parents) and the root."""
    nb = td.neighbors()
    nodes: List[_Nice] = []

    def add(n: _Nice) -> int:
        nodes.append(n)
        return len(nodes) - 1

    def chain(child: int, frm: FrozenSet[int], to: FrozenSet[int]) -> int:
        cur = set(frm)
        for v in sorted(frm - to):
            cur.discard(v)
            child = add(_Nice("forget", tuple(sorted(cur)), v, (child,)))
        for v in sorted(to - frm):
            cur.add(v)
            child = add(_Nice("intro", tuple(sorted(cur)), v, (child,)))
        return child

    root = min(td.bags)
    # iterative post-order to avoid deep recursion on long paths
    parent = {root: None}
    order = [root]
    for x in order:
        for y in sorted(nb[x]):
            if y not in parent:
                parent[y] = x
                order.append(y)
    built: Dict[int, int] = {}
    for x in reversed(order):
        bag = td.bags[x]
        kids = [y for y in nb[x] if parent.get(y) == x]
        if not kids:
            cur = chain(add(_Nice("leaf", ())), frozenset(), bag)
        else:
            subs = [chain(built[y], td.bags[y], bag) for y in sorted(kids)]
            cur = subs[0]
            for other in subs[1:]:
                cur = add(_Nice("join", tuple(sorted(bag)), None, (cur, other)))
        built[x] = cur
    top = chain(built[root], td.bags[root], frozenset())
    return nodes, top


def dp_clustered_coloring(g: Graph, td: TreeDecomposition, eta: int, L: Optional[Mapping[int, Iterable[int]]] = None,
                          k: Optional[int] = None, state_budget: int = DP_STATE_BUDGET) -> Optional[Coloring]:
    """Decide L-colourability (or k-colourability) with clustering ``eta`` by DP over a tree decomposition.

    A state stores the bag colours, which bag vertices share a partial
    monochromatic component, and how many forgotten vertices each such
    component already holds.
    """
    if (L is None) == (k is None):
        raise ValueError("give exactly one of L or k")
    if not validate_tree_decomposition(g, td):
        raise GraphError("invalid tree decomposition")
    lists = {v: sorted(L[v]) for v in g.vertices} if L is not None else {v: list(range(k)) for v in g.vertices}
    if g.n == 0:
        return {}
    nodes, root = nice_decomposition(td)
    tables: List[Dict[tuple, tuple]] = [None] * len(nodes)
    total = 0
    for i, nd in enumerate(nodes):
        if nd.kind == "leaf":
            tab = {((), (), ()): None}
        elif nd.kind == "intro":
            tab = _intro(g, nd, nodes[nd.children[0]].bag, tables[nd.children[0]], lists[nd.vertex], eta)
        elif nd.kind == "forget":
            tab = _forget(nd, nodes[nd.children[0]].bag, tables[nd.children[0]])
        else:
            tab = _join(nd, tables[nd.children[0]], tables[nd.children[1]], eta)
        tables[i] = tab
        total += len(tab)
        if total > state_budget:
            raise SizeError(f"DP state budget {state_budget} exceeded")
    if not tables[root]:
        return None
    c: Coloring = {}
    stack = [(root, next(iter(tables[root])))]
    while stack:
        i, st = stack.pop()
        nd = nodes[i]
        for v, x in zip(nd.bag, st[0]):
            c[v] = x
        back = tables[i][st]
        if nd.kind in ("intro", "forget"):
            stack.append((nd.children[0], back))
        elif nd.kind == "join":
            stack.append((nd.children[0], back[0]))
            stack.append((nd.children[1], back[1]))
    assert is_list_coloring(g, lists, c) and clustering_of(g, c) <= eta
    return c


def _canon(labels: Sequence[int], counts: Dict[int, int]) -> Tuple[tuple, tuple]:
    """Relabel blocks by their first position; counts sit at that position."""
    first: Dict[int, int] = {}
    lab = []
    for pos, b in enumerate(labels):
        first.setdefault(b, pos)
        lab.append(first[b])
    cnt = [0] * len(labels)
    for b, pos in first.items():
        cnt[pos] = counts.get(b, 0)
    return tuple(lab), tuple(cnt)


def _intro(g, nd, cbag, ctab, options, eta):
    v = nd.vertex
    p = nd.bag.index(v)
    out = {}
    for st in ctab:
        cols, lab, cnt = st
        for x in options:
            ncols = cols[:p] + (x,) + cols[p:]
            # blocks: child positions shift by one after p
            blocks = [lab[j] for j in range(len(cbag))]
            counts = {lab[j]: cnt[j] for j in range(len(cbag)) if lab[j] == j}
            merge = {blocks[j] for j, u in enumerate(cbag) if cols[j] == x and g.has_edge(u, v)}
            newb = -1
            if merge:
                newb = min(merge)
                counts[newb] = sum(counts.get(b, 0) for b in merge)
                blocks = [newb if b in merge else b for b in blocks]
            else:
                counts[newb] = 0
            blocks.insert(p, newb)
            size = sum(1 for b in blocks if b == newb) + counts[newb]
            if size > eta:
                continue
            key = (ncols,) + _canon(blocks, counts)
            out.setdefault(key, st)
    return out


def _forget(nd, cbag, ctab):
    p = cbag.index(nd.vertex)
    out = {}
    for st in ctab:
        cols, lab, cnt = st
        counts = {lab[j]: cnt[j] for j in range(len(cbag)) if lab[j] == j}
        b = lab[p]
        blocks = list(lab)
        del blocks[p]
        if b in blocks:
            counts[b] = counts.get(b, 0) + 1
        key = (cols[:p] + cols[p + 1:],) + _canon(blocks, counts)
        out.setdefault(key, st)
    return out


def _join(nd, left, right, eta):
    n = len(nd.bag)
    by_cols: Dict[tuple, List[tuple]] = {}
    for st in right:
        by_cols.setdefault(st[0], []).append(st)
    out = {}
    for a in left:
        for b in by_cols.get(a[0], ()):
            parent = list(range(n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for lab in (a[1], b[1]):
                for j in range(n):
                    ra, rb = find(j), find(lab[j])
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
            roots = [find(j) for j in range(n)]
            counts: Dict[int, int] = {}
            for lab, cnt in ((a[1], a[2]), (b[1], b[2])):
                for j in range(n):
                    if lab[j] == j:
                        counts[roots[j]] = counts.get(roots[j], 0) + cnt[j]
            if any(roots.count(r) + counts.get(r, 0) > eta for r in set(roots)):
                continue
            key = (a[0],) + _canon(roots, counts)
            out.setdefault(key, (a, b))
    return out


# --------------------------------------------------------------------------- explicit colourings

def bipartite_block_coloring(g: Graph, L: Mapping[int, FrozenSet[int]], y1_prime: Iterable[int], ell: int,
                             s: int, r: int) -> Coloring:
    """Pin Y1', colour side P from {ell} + high colours and side Q from the rest (smallest colour)."""
    yp = frozenset(y1_prime)
    rest = g.remove(yp)
    parts = rest.bipartition()
    if parts is None:
        raise GraphError("graph minus Y1' is not bipartite")
    p_side, q_side = parts
    special = high_colours(s, r) | {ell}
    c: Coloring = {}
    for v in yp:
        if len(L[v]) != 1:
            raise ListError(f"vertex {v} of Y1' does not have a singleton list")
        c[v] = next(iter(L[v]))
    for v in p_side:
        opts = L[v] & special
        if not opts:
            raise ListError(f"vertex {v} has no colour in the special set")
        c[v] = min(opts)
    for v in q_side:
        opts = L[v] - special
        if not opts:
            raise ListError(f"vertex {v} has no colour outside the special set")
        c[v] = min(opts)
    return c


def merge_side_colorings(g: Graph, sep: Separation, ca: Mapping[int, int], cb: Mapping[int, int]) -> Coloring:
    for v in sep.va:
        if v not in ca:
            raise GraphError(f"A-side colouring misses vertex {v}")
    for v in sep.vb:
        if v not in cb:
            raise GraphError(f"B-side colouring misses vertex {v}")
    for v in sorted(sep.boundary):
        if ca[v] != cb[v]:
            raise GraphError(f"side colourings disagree at boundary vertex {v}")
    return {v: (ca[v] if v in sep.va else cb[v]) for v in g.vertices}
