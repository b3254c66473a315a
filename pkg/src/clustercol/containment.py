"""Subgraph, minor and odd-minor containment with witnesses.

Minor search grows branch sets one pattern vertex at a time. For odd minors
the same search runs on a double cover: a host vertex may enter a branch set
with colour 0 or 1, branch sets must be connected through bichromatic edges,
and every pattern edge needs a monochromatic host edge between its two sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

from .graph_core import OK, Edge, Graph, SizeError, Verdict, _components, fail

MINOR_HOST_CAP = 12
MINOR_PATTERN_CAP = 6


@dataclass(frozen=True)
class MinorModel:
    branch_sets: Mapping[int, FrozenSet[int]]
    edge_images: Mapping[Edge, Edge]


@dataclass(frozen=True)
class OddCertificate:
    two_coloring: Mapping[int, int]


# --------------------------------------------------------------------------- K_{s,t} subgraphs

def has_kst_subgraph(g: Graph, s: int, t: int) -> Optional[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """Return ``(S, T)`` spanning a (not necessarily induced) K_{s,t}, or None."""
    if s < 1 or t < 1 or s + t > g.n:
        return None
    swap = s > t
    a, b = (t, s) if swap else (s, t)
    found = _common_nbr_search(g, a, b)
    if found is None:
        return None
    x, y = found
    return (y, x) if swap else (x, y)


def _common_nbr_search(g: Graph, a: int, b: int):
    cands = [v for v in g.vertices if g.degree(v) >= b]

    def rec(start, chosen, common):
        if len(chosen) == a:
            rest = sorted(common - set(chosen))
            if len(rest) >= b:
                return frozenset(chosen), frozenset(rest[:b])
            return None
        for i in range(start, len(cands)):
            v = cands[i]
            nc = common & g.adj[v] if chosen else set(g.adj[v])
            if len(nc - set(chosen)) < b:
                continue
            r = rec(i + 1, chosen + [v], nc)
            if r:
                return r
        return None

    return rec(0, [], set())


# --------------------------------------------------------------------------- validators

def validate_minor_model(g: Graph, h: Graph, m: MinorModel) -> Verdict:
    if set(m.branch_sets) != set(h.vertices):
        return fail("branch sets do not match the pattern vertices")
    owner: Dict[int, int] = {}
    for x, bs in m.branch_sets.items():
        if not bs:
            return fail("empty branch set", x)
        if not bs <= set(g.vertices):
            return fail("branch set leaves the host", x)
        for v in bs:
            if v in owner:
                return fail("branch sets overlap", (owner[v], x, v))
            owner[v] = x
        if not g.subgraph(bs).is_connected():
            return fail("branch set is not connected", x)
    if set(m.edge_images) != set(h.edges):
        return fail("edge images do not match the pattern edges")
    seen = set()
    for (p, q), (u, v) in m.edge_images.items():
        if not g.has_edge(u, v):
            return fail("edge image is not a host edge", (p, q))
        if {owner.get(u), owner.get(v)} != {p, q}:
            return fail("edge image does not join the right branch sets", (p, q))
        key = (min(u, v), max(u, v))
        if key in seen:
            return fail("two pattern edges share an image", (p, q))
        seen.add(key)
    return OK


def validate_odd_certificate(g: Graph, h: Graph, m: MinorModel, cert: OddCertificate) -> Verdict:
    base = validate_minor_model(g, h, m)
    if not base:
        return base
    c = cert.two_coloring
    for x, bs in m.branch_sets.items():
        for v in bs:
            if c.get(v) not in (0, 1):
                return fail("vertex of a branch set lacks a 0/1 colour", v)
        # the branch subgraph may be any connected spanning subgraph properly coloured by c
        if len(_components(sorted(bs), lambda v: (w for w in g.adj[v] if w in bs and c[w] != c[v]))) != 1:
            return fail("no properly coloured connected subgraph spans the branch set", x)
    for e, (u, v) in m.edge_images.items():
        if c[u] != c[v]:
            return fail("edge image ends differ in colour", e)
    return OK


# --------------------------------------------------------------------------- search

class _Search:
    def __init__(self, g: Graph, h: Graph, colours: int):
        self.g, self.h = g, h
        self.C = colours
        self.verts = list(g.vertices)
        self.vidx = {v: i for i, v in enumerate(self.verts)}
        n = len(self.verts)
        self.hadj = [0] * n
        for u, v in g.edges:
            self.hadj[self.vidx[u]] |= 1 << self.vidx[v]
            self.hadj[self.vidx[v]] |= 1 << self.vidx[u]
        # state k = vertex * C + colour
        ns = n * colours
        self.inner = [0] * ns   # adjacency allowed inside a branch set
        self.outer = [0] * ns   # adjacency usable as an edge image
        for i in range(n):
            for c in range(colours):
                k = i * colours + c
                for j in range(n):
                    if self.hadj[i] >> j & 1:
                        ci = c if colours == 1 else 1 - c
                        self.inner[k] |= 1 << (j * colours + ci)
                        self.outer[k] |= 1 << (j * colours + c)
        self.order = self._pattern_order()
        pos = {x: i for i, x in enumerate(self.order)}
        self.placed_nbrs = [[pos[y] for y in h.adj[x] if pos[y] < i] for i, x in enumerate(self.order)]
        self.later_nbrs = [[pos[y] for y in h.adj[x] if pos[y] > i] for i, x in enumerate(self.order)]
        self.twin_prev = [None] * len(self.order)
        for i, x in enumerate(self.order):
            for j in range(i - 1, -1, -1):
                y = self.order[j]
                if h.adj[x] - {y} == h.adj[y] - {x}:
                    self.twin_prev[i] = j
                    break
        self.sets: List[int] = []     # state masks
        self.hosts: List[int] = []    # host-vertex masks
        self.roots: List[int] = []

    def _pattern_order(self):
        h = self.h
        left = set(h.vertices)
        order = []
        while left:
            placed = set(order)
            x = max(left, key=lambda v: (len(h.adj[v] & placed), h.degree(v), -v))
            order.append(x)
            left.discard(x)
        return order

    def host_of(self, smask: int) -> int:
        out = 0
        C = self.C
        while smask:
            low = smask & -smask
            smask ^= low
            out |= 1 << ((low.bit_length() - 1) // C)
        return out

    def nbr_hosts(self, hmask: int) -> int:
        out = 0
        m = hmask
        while m:
            low = m & -m
            m ^= low
            out |= self.hadj[low.bit_length() - 1]
        return out & ~hmask

    def lookahead(self, i: int, used: int) -> bool:
        n = len(self.verts)
        free = ((1 << n) - 1) & ~used
        k = len(self.order)
        if bin(free).count("1") < k - i:
            return False
        nb = [self.nbr_hosts(hm) & free for hm in self.hosts]
        for j in range(i):
            need = sum(1 for t in self.later_nbrs[j] if t >= i)
            if bin(nb[j]).count("1") < need:
                return False
        comps = []
        rest = free
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    b = f & -f
                    f ^= b
                    nxt |= self.hadj[b.bit_length() - 1]
                nxt &= free & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            rest &= ~comp
        for t in range(i, k):
            req = [nb[j] for j in self.placed_nbrs[t] if j < i]
            if not any(all(c & r for r in req) for c in comps):
                return False
        return True

    def run(self) -> bool:
        return self.place(0, 0)

    def place(self, i: int, used: int) -> bool:
        if i == len(self.order):
            return True
        if not self.lookahead(i, used):
            return False
        C = self.C
        n = len(self.verts)
        lo = 0
        if self.twin_prev[i] is not None:
            lo = self.roots[self.twin_prev[i]] + 1
        placed = self.placed_nbrs[i]
        for root in range(lo, n * C):
            if used >> (root // C) & 1:
                continue
            if i == 0 and C == 2 and root % 2 == 1:
                continue  # global colour swap symmetry
            for smask in self.connected_sets(root, used):
                if any(not (self._outer_of(smask) & self.sets[j]) for j in placed):
                    continue
                hm = self.host_of(smask)
                self.sets.append(smask)
                self.hosts.append(hm)
                self.roots.append(root)
                if self.place(i + 1, used | hm):
                    return True
                self.sets.pop()
                self.hosts.pop()
                self.roots.pop()
        return False

    def _outer_of(self, smask: int) -> int:
        out = 0
        while smask:
            low = smask & -smask
            smask ^= low
            out |= self.outer[low.bit_length() - 1]
        return out

    def connected_sets(self, root: int, used: int):
        """Connected state sets with least state ``root`` avoiding used host vertices."""
        C = self.C
        blocked = 0
        for v in range(len(self.verts)):
            if used >> v & 1:
                for c in range(C):
                    blocked |= 1 << (v * C + c)
        allowed = ~blocked & ~((1 << (root + 1)) - 1)
        inner = self.inner

        def twin(k):
            return k ^ 1 if C == 2 else k

        def rec(S, ext, nbhd):
            yield S
            while ext:
                low = ext & -ext
                ext ^= low
                w = low.bit_length() - 1
                if C == 2 and S >> twin(w) & 1:
                    continue
                wn = inner[w] & allowed & ~nbhd & ~S
                yield from rec(S | low, ext | wn, nbhd | inner[w])

        start = 1 << root
        yield from rec(start, inner[root] & allowed, inner[root] | start)

    def model(self) -> Tuple[MinorModel, Dict[int, int]]:
        C = self.C
        branch = {}
        colour = {}
        for x, smask in zip(self.order, self.sets):
            vs = set()
            m = smask
            while m:
                low = m & -m
                m ^= low
                k = low.bit_length() - 1
                v = self.verts[k // C]
                vs.add(v)
                colour[v] = k % C
            branch[x] = frozenset(vs)
        images = {}
        for p, q in sorted(self.h.edges):
            images[(p, q)] = self._image(branch[p], branch[q], colour)
        return MinorModel(branch, images), colour

    def _image(self, a, b, colour):
        for u in sorted(a):
            for v in sorted(self.g.adj[u] & b):
                if self.C == 1 or colour[u] == colour[v]:
                    return (u, v)
        raise AssertionError("edge image vanished")


def _check_caps(g: Graph, h: Graph, host_cap: int, pattern_cap: int):
    if g.n > host_cap:
        raise SizeError(f"minor search limited to {host_cap} host vertices, got {g.n}")
    if h.n > pattern_cap:
        raise SizeError(f"minor search limited to {pattern_cap} pattern vertices, got {h.n}")


def has_minor(g: Graph, h: Graph, host_cap: int = MINOR_HOST_CAP,
              pattern_cap: int = MINOR_PATTERN_CAP) -> Optional[MinorModel]:
    _check_caps(g, h, host_cap, pattern_cap)
    if h.n > g.n or h.m > g.m:
        return None
    s = _Search(g, h, 1)
    return s.model()[0] if s.run() else None


def has_odd_minor(g: Graph, h: Graph, host_cap: int = MINOR_HOST_CAP, pattern_cap: int = MINOR_PATTERN_CAP,
                  parity_shortcut: bool = True) -> Optional[Tuple[MinorModel, OddCertificate]]:
    """Odd H-minor with a certificate, or None.

    With ``parity_shortcut`` a bipartite host is rejected at once when H is
    not bipartite (every branch set then has a fixed phase, and each pattern
    edge forces the two phases apart).
    """
    _check_caps(g, h, host_cap, pattern_cap)
    if h.n > g.n or h.m > g.m:
        return None
    if parity_shortcut and g.bipartition() is not None and h.bipartition() is None:
        return None
    s = _Search(g, h, 2)
    if not s.run():
        return None
    model, colour = s.model()
    return model, OddCertificate(colour)
