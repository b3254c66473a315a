"""Vertex-disjoint path counting via unit-capacity max-flow on a split graph."""
from __future__ import annotations

from collections import deque
from typing import Dict, Iterable, List, Tuple

from ..graph_core import Graph


class _FlowNet:
    def __init__(self):
        self.head: List[int] = []
        self.cap: List[int] = []
        self.out: Dict[int, List[int]] = {}

    def arc(self, u: int, v: int, c: int):
        for a, b, cc in ((u, v, c), (v, u, 0)):
            self.out.setdefault(a, []).append(len(self.head))
            self.head.append(b)
            self.cap.append(cc)

    def augment(self, s: int, t: int) -> bool:
        prev: Dict[int, int] = {s: -1}
        queue = deque([s])
        while queue and t not in prev:
            u = queue.popleft()
            for a in self.out.get(u, ()):
                w = self.head[a]
                if self.cap[a] > 0 and w not in prev:
                    prev[w] = a
                    queue.append(w)
        if t not in prev:
            return False
        w = t
        while w != s:
            a = prev[w]
            self.cap[a] -= 1
            self.cap[a ^ 1] += 1
            w = self.head[a ^ 1]
        return True


def max_disjoint_paths(g: Graph, xs: Iterable[int], ys: Iterable[int], limit: int | None = None) -> int:
    """Maximum number of pairwise vertex-disjoint X-Y paths.

    A vertex in both sets is a path of length zero. Stops early once
    ``limit`` paths have been found.
    """
    xs, ys = set(xs), set(ys)
    if not xs or not ys:
        return 0
    idx = {v: i for i, v in enumerate(g.vertices)}
    n = len(idx)
    src, snk = 2 * n, 2 * n + 1
    net = _FlowNet()
    big = n + 1
    for v, i in idx.items():
        net.arc(2 * i, 2 * i + 1, 1)
    for u, v in g.edges:
        iu, iv = idx[u], idx[v]
        net.arc(2 * iu + 1, 2 * iv, big)
        net.arc(2 * iv + 1, 2 * iu, big)
    for x in xs:
        net.arc(src, 2 * idx[x], 1)
    for y in ys:
        net.arc(2 * idx[y] + 1, snk, 1)
    flow = 0
    while (limit is None or flow < limit) and net.augment(src, snk):
        flow += 1
    return flow


def cyclic_arcs(order: Tuple[int, ...], u: int, v: int) -> Tuple[List[int], List[int]]:
    """Vertices strictly after ``u`` and before ``v`` in ``order``, and the other arc."""
    k = len(order)
    i, j = order.index(u), order.index(v)
    inner = [order[(i + d) % k] for d in range(1, (j - i) % k)]
    outer = [order[(j + d) % k] for d in range(1, (i - j) % k)]
    return inner, outer
