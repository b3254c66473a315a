"""Named graph families, including the lower-bound ("standard") examples."""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Tuple

from .graph_core import Graph, GraphError, SizeError

#: Generators refuse to build graphs larger than this.
GENERATOR_CAP = 100_000


class Family(str, enum.Enum):
    TRIANGULAR_GRID = "triangular_grid"
    STANDARD_MINOR_EXAMPLE = "standard_minor_example"
    STANDARD_TREEWIDTH_EXAMPLE = "standard_treewidth_example"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    K_STAR = "k_star"
    PATH = "path"
    GNP_RANDOM = "gnp_random"


_ARITY = {
    Family.TRIANGULAR_GRID: 1,
    Family.STANDARD_MINOR_EXAMPLE: 2,
    Family.STANDARD_TREEWIDTH_EXAMPLE: 2,
    Family.COMPLETE: 1,
    Family.COMPLETE_BIPARTITE: 2,
    Family.K_STAR: 2,
    Family.PATH: 1,
    Family.GNP_RANDOM: 2,
}


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its parameters.

    ``gnp_random`` takes ``(n, p)`` where ``p`` may be a float; every other
    family takes positive integers.
    """

    family: Family
    parameters: Tuple[float, ...]
    seed: Optional[int] = None

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        if len(self.parameters) != _ARITY[fam]:
            raise GraphError(f"{fam.value} takes {_ARITY[fam]} parameters, got {len(self.parameters)}")
        sizes = self.parameters[:1] if fam is Family.GNP_RANDOM else self.parameters
        if any(int(p) != p or p < 1 for p in sizes):
            raise GraphError(f"size parameters of {fam.value} must be positive integers")

    def build(self) -> Graph:
        p = self.parameters
        fam = self.family
        if fam is Family.GNP_RANDOM:
            return gnp_random(int(p[0]), float(p[1]), self.seed)
        args = [int(x) for x in p]
        return {
            Family.TRIANGULAR_GRID: triangular_grid,
            Family.STANDARD_MINOR_EXAMPLE: standard_minor_example,
            Family.STANDARD_TREEWIDTH_EXAMPLE: standard_treewidth_example,
            Family.COMPLETE: complete,
            Family.COMPLETE_BIPARTITE: complete_bipartite,
            Family.K_STAR: k_star,
            Family.PATH: path,
        }[fam](*args)


def _require_positive(**kw):
    for name, val in kw.items():
        if val < 1:
            raise GraphError(f"{name} must be >= 1, got {val}")


def _check_size(n: int):
    if n > GENERATOR_CAP:
        raise SizeError(f"requested graph has {n} vertices (cap {GENERATOR_CAP})")


def triangular_grid(eta: int) -> Graph:
    """``eta x eta`` grid with one NE-SW diagonal per cell; vertex ``(i, j)`` is ``i*eta + j``."""
    _require_positive(eta=eta)
    _check_size(eta * eta)
    edges = []
    for i in range(eta):
        for j in range(eta):
            v = i * eta + j
            if j + 1 < eta:
                edges.append((v, v + 1))
            if i + 1 < eta:
                edges.append((v, v + eta))
            if i + 1 < eta and j + 1 < eta:
                edges.append((v + 1, v + eta))
    return Graph.from_edges(eta * eta, edges)


def disjoint_copies(g: Graph, copies: int) -> Graph:
    m = g.n
    base, idx = g.relabeled()
    edges = [(u + k * m, v + k * m) for k in range(copies) for u, v in base.edges]
    return Graph.from_edges(m * copies, edges)


def add_apex(g: Graph) -> Graph:
    """Join a new vertex (labelled ``g.n``) to every vertex of ``g``."""
    base, _ = g.relabeled()
    apex = base.n
    return Graph.from_edges(apex + 1, list(base.edges) + [(v, apex) for v in range(apex)])


def _apex_recursion(base: Graph, s: int, copies: int) -> Graph:
    size = base.n
    for _ in range(s - 1):
        size = 1 + copies * size
        _check_size(size)
    g = base
    for _ in range(s - 1):
        g = add_apex(disjoint_copies(g, copies))
    return g


def standard_minor_example(s: int, eta: int) -> Graph:
    """Apex over ``eta`` copies of the ``s-1`` example, starting from the triangular grid.

    The apex of each level is the highest-numbered vertex.
    """
    _require_positive(s=s, eta=eta)
    return _apex_recursion(triangular_grid(eta), s, eta)


def standard_treewidth_example(s: int, c: int) -> Graph:
    """Same recursion as :func:`standard_minor_example` but from the path ``P_c``."""
    _require_positive(s=s, c=c)
    return _apex_recursion(path(c), s, c)


def complete(n: int) -> Graph:
    _require_positive(n=n)
    _check_size(n)
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    _require_positive(a=a, b=b)
    _check_size(a + b)
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def k_star(s: int, t: int) -> Graph:
    """Clique on ``0..s-1`` joined completely to an independent set ``s..s+t-1``."""
    _require_positive(s=s, t=t)
    _check_size(s + t)
    edges = list(combinations(range(s), 2)) + [(i, s + j) for i in range(s) for j in range(t)]
    return Graph.from_edges(s + t, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    a, _ = g.relabeled()
    b, _ = h.relabeled()
    off = a.n
    edges = list(a.edges) + [(u + off, v + off) for u, v in b.edges]
    edges += [(u, off + v) for u in range(a.n) for v in range(b.n)]
    return Graph.from_edges(a.n + b.n, edges)


def path(n: int) -> Graph:
    _require_positive(n=n)
    _check_size(n)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gnp_random(n: int, p: float, seed: Optional[int] = None) -> Graph:
    _require_positive(n=n)
    if not 0.0 <= p <= 1.0:
        raise GraphError("p must lie in [0, 1]")
    _check_size(n)
    rng = random.Random(seed)
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_tree(n: int, seed: Optional[int] = None) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, [(i, rng.randrange(i)) for i in range(1, n)])


def random_partial_ktree(n: int, k: int, p: float = 0.7, seed: Optional[int] = None) -> Graph:
    """Random subgraph of a random ``k``-tree; treewidth at most ``k``."""
    rng = random.Random(seed)
    edges = set()
    cliques = []
    base = list(range(min(n, k + 1)))
    edges.update(combinations(base, 2))
    if n > k:
        cliques.append(tuple(base))
    for v in range(k + 1, n):
        parent = rng.choice(cliques)
        drop = rng.randrange(k + 1)
        attach = tuple(x for i, x in enumerate(parent) if i != drop)
        edges.update((u, v) for u in attach)
        cliques.append(attach + (v,))
    kept = [e for e in sorted(edges) if rng.random() < p]
    return Graph.from_edges(n, kept)
