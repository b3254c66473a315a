"""Brute-force reference implementations used only by the tests.

Everything here is written against networkx / itertools / plain numpy and
shares no code with the package beyond the Graph container.
"""
from __future__ import annotations

from itertools import product

import networkx as nx
import numpy as np


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def mono_components(g, c):
    h = to_nx(g)
    h.remove_edges_from([(u, v) for u, v in g.edges if c[u] != c[v]])
    return {frozenset(x) for x in nx.connected_components(h)}


def clustering(g, c):
    return max((len(p) for p in mono_components(g, c)), default=0)


def min_clustering(g, k):
    verts = list(g.vertices)
    best = None
    for cols in product(range(k), repeat=len(verts)):
        val = clustering(g, dict(zip(verts, cols)))
        best = val if best is None else min(best, val)
    return best if best is not None else 0


def min_clustering_lists(g, L):
    """Least clustering over all L-colourings (None if some list is empty)."""
    verts = list(g.vertices)
    best = None
    for cols in product(*[sorted(L[v]) for v in verts]):
        val = clustering(g, dict(zip(verts, cols)))
        best = val if best is None else min(best, val)
    return best


def count_separations(g, max_order):
    """Count (va, vb, edge-side) triples by labelling each vertex A-only, B-only or both."""
    verts = list(g.vertices)
    total = 0
    for lab in product("ABX", repeat=len(verts)):
        side = dict(zip(verts, lab))
        if sum(1 for x in lab if x == "X") > max_order:
            continue
        if any({side[u], side[v]} == {"A", "B"} for u, v in g.edges):
            continue
        free = sum(1 for u, v in g.edges if side[u] == "X" and side[v] == "X")
        total += 2 ** free
    return total


def _adj_masks(g):
    verts = list(g.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for u, v in g.edges:
        adj[pos[u]] |= 1 << pos[v]
        adj[pos[v]] |= 1 << pos[u]
    return verts, adj


def _mask_connected(mask, adj):
    if not mask:
        return False
    seen = mask & -mask
    while True:
        grow = seen
        m = seen
        while m:
            b = m & -m
            m ^= b
            grow |= adj[b.bit_length() - 1] & mask
        if grow == seen:
            return seen == mask
        seen = grow


def _touch(a, b, adj):
    m = a
    while m:
        low = m & -m
        m ^= low
        if adj[low.bit_length() - 1] & b:
            return True
    return False


def _branch_tuples(g, h):
    """Every tuple of pairwise disjoint connected vertex sets, one per pattern vertex."""
    verts, adj = _adj_masks(g)
    conn = [m for m in range(1, 1 << len(verts)) if _mask_connected(m, adj)]
    hv = list(h.vertices)

    def rec(i, used, acc):
        if i == len(hv):
            yield dict(zip(hv, acc))
            return
        for m in conn:
            if not m & used:
                yield from rec(i + 1, used | m, acc + [m])

    return verts, adj, rec(0, 0, [])


def has_minor(g, h):
    """Search over all tuples of disjoint connected branch sets."""
    if h.n > g.n:
        return False
    verts, adj, tuples = _branch_tuples(g, h)
    return any(all(_touch(sets[p], sets[q], adj) for p, q in h.edges) for sets in tuples)


def has_odd_minor(g, h):
    """Branch sets plus a 2-colouring: each set is spanned by bichromatic edges, each pattern edge has a monochromatic image."""
    if h.n > g.n:
        return False
    verts, adj, tuples = _branch_tuples(g, h)
    n = len(verts)
    for sets in tuples:
        union = 0
        for m in sets.values():
            union |= m
        if not all(_touch(sets[p], sets[q], adj) for p, q in h.edges):
            continue
        members = [i for i in range(n) if union >> i & 1]
        for bits in range(1 << len(members)):
            red = 0
            for k, i in enumerate(members):
                if bits >> k & 1:
                    red |= 1 << i
            blue = union & ~red
            # bichromatic adjacency: red vertices see blue neighbours and vice versa
            bi = [(adj[i] & (blue if red >> i & 1 else red)) for i in range(n)]
            if not all(_mask_connected(m, bi) for m in sets.values()):
                continue
            if all(_touch(sets[p] & red, sets[q] & red, adj) or _touch(sets[p] & blue, sets[q] & blue, adj)
                   for p, q in h.edges):
                return True
    return False


def enumerate_colorings(g, L, limit=500_000):
    """All L-colourings as an int array, one row per colouring, columns in vertex order."""
    verts = list(g.vertices)
    lists = [np.array(sorted(L[v])) for v in verts]
    total = int(np.prod([len(x) for x in lists], dtype=np.int64)) if lists else 1
    assert total <= limit, total
    if not verts:
        return np.zeros((1, 0), dtype=np.int64)
    idx = np.indices([len(x) for x in lists]).reshape(len(lists), -1).T
    return np.stack([lists[i][idx[:, i]] for i in range(len(lists))], axis=1)


def component_ids(g, cols):
    """Per-row union-find labels: label = least column index in the monochromatic component."""
    verts = list(g.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    lab = np.tile(np.arange(len(verts)), (cols.shape[0], 1))
    changed = True
    while changed:
        changed = False
        for u, v in g.edges:
            i, j = pos[u], pos[v]
            same = cols[:, i] == cols[:, j]
            lo = np.minimum(lab[:, i], lab[:, j])
            upd = same & ((lab[:, i] != lo) | (lab[:, j] != lo))
            if upd.any():
                changed = True
                lab[upd, i] = lo[upd]
                lab[upd, j] = lo[upd]
    return lab


def escaping_colorings(g, L, sources, target, colours=None):
    """Number of L-colourings with a monochromatic component that meets ``sources`` and leaves ``target``."""
    verts = list(g.vertices)
    cols = enumerate_colorings(g, L)
    lab = component_ids(g, cols)
    bad = np.zeros(cols.shape[0], dtype=bool)
    for a in sources:
        i = verts.index(a)
        sel = np.ones(cols.shape[0], dtype=bool) if colours is None else np.isin(cols[:, i], list(colours))
        for b in verts:
            if b not in target:
                bad |= sel & (lab[:, i] == lab[:, verts.index(b)])
    return int(bad.sum()), cols.shape[0]


def escape_by_reachability(g, L, sources, target, colours=None):
    """Same question answered without enumeration: some colour x admits a path of x-capable vertices."""
    pal = set().union(*L.values()) if L else set()
    for x in pal if colours is None else set(colours) & pal:
        ok = {v for v in g.vertices if x in L[v]}
        h = to_nx(g).subgraph(ok)
        for a in set(sources) & ok:
            if any(b not in target for b in nx.node_connected_component(h, a)):
                return True
    return False


def max_disjoint_paths(g, xs, ys):
    """Menger count through networkx node connectivity on an augmented graph."""
    xs, ys = set(xs), set(ys)
    if not xs or not ys:
        return 0
    both = xs & ys
    h = to_nx(g).copy()
    h.remove_nodes_from(both)
    xs, ys = xs - both, ys - both
    if not xs or not ys:
        return len(both)
    h.add_node("s")
    h.add_node("t")
    h.add_edges_from(("s", x) for x in xs)
    h.add_edges_from((y, "t") for y in ys)
    return len(both) + nx.node_connectivity(h, "s", "t")


def treewidth(g):
    """Exact treewidth by trying every elimination order (n <= 8)."""
    from itertools import permutations
    verts = list(g.vertices)
    if not verts:
        return -1
    best = len(verts) - 1
    for order in permutations(verts):
        adj = {v: set(g.adj[v]) for v in verts}
        w = 0
        for v in order:
            nb = adj.pop(v)
            w = max(w, len(nb))
            if w >= best:
                break
            for a in nb:
                adj[a] |= nb - {a}
                adj[a].discard(v)
        best = min(best, w)
    return best


def min_clustering_numpy(g, L, limit=300_000):
    """Least clustering over all L-colourings, by vectorised enumeration."""
    cols = enumerate_colorings(g, L, limit=limit)
    lab = component_ids(g, cols)
    n = g.n
    flat = lab + n * np.arange(cols.shape[0])[:, None]
    sizes = np.bincount(flat.ravel(), minlength=n * cols.shape[0]).reshape(cols.shape[0], n)
    return int(sizes.max(axis=1).min())


# --------------------------------------------------------------------------- list axioms by direct reading

def nbrs_in(g, v, xs):
    return {u for u in g.adj[v] if u in xs}


def few_nbrs(g, ys, s):
    """Vertices outside ys with between 1 and s-1 neighbours in ys."""
    return {v for v in g.vertices if v not in ys and 0 < len(nbrs_in(g, v, ys)) < s}


def many_nbrs(g, ys, s):
    return {v for v in g.vertices if v not in ys and len(nbrs_in(g, v, ys)) >= s}


def axioms_L(g, L, s, r):
    """Direct reading of L1-L5 with Y1 taken as the singleton vertices."""
    ys = {v for v in g.vertices if len(L[v]) == 1}
    for v in g.vertices:
        if not 1 <= len(L[v]) <= s + r:
            return False
    for v in few_nbrs(g, ys, s):
        nb = nbrs_in(g, v, ys)
        if len(L[v]) != s + r - len(nb) or any(L[v] & L[u] for u in nb):
            return False
    for v in g.vertices:
        if v not in ys and not g.adj[v] & ys and len(L[v]) != s + r:
            return False
        if v not in ys and len(L[v]) < r + 1:
            return False
    return True


def is_progress_of(g, L, W, F, s, Lp):
    """Whether Lp is one of the admissible (W, F)-progresses of L."""
    y1 = {v for v in g.vertices if len(L[v]) == 1}
    new = set(W) - y1
    y1p = y1 | set(W)
    for y in y1:
        if Lp[y] != L[y]:
            return False
    for y in new:
        if len(Lp[y]) != 1 or not Lp[y] <= L[y] - F:
            return False
    touched = few_nbrs(g, y1p, s) | {v for v in g.vertices if v not in y1p and not g.adj[v] & y1p}
    for v in g.vertices:
        if v in y1p:
            continue
        if v not in touched:
            if Lp[v] != L[v]:
                return False
            continue
        pinned = nbrs_in(g, v, new)
        avail = L[v] - {next(iter(Lp[w])) for w in pinned}
        size = len(L[v]) - len(pinned)
        if len(Lp[v]) != size or not Lp[v] <= avail:
            return False
        if len(Lp[v] & F) != min(len(avail & F), size):
            return False
    return True
