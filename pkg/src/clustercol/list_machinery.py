"""List-assignment calculus: axioms, progress, growth, enlargement, side restriction.

Lists are plain ``dict`` objects mapping each vertex to a ``frozenset`` of
integer colours. ``Y1`` always means the set of vertices whose list is a
singleton.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .graph_core import (OK, Coloring, Graph, GraphError, Separation, Verdict, fail, is_separation, is_stable,
                         monochromatic_components, n_geq_s, n_lt_s)
from .structure.decompositions import Layering

Lists = Dict[int, FrozenSet[int]]


class ListError(ValueError):
    """A list-assignment operation was called outside its precondition."""


def as_lists(raw: Mapping[int, Iterable[int]]) -> Lists:
    return {v: frozenset(c) for v, c in raw.items()}


def check_lists(g: Graph, L: Mapping[int, FrozenSet[int]]) -> None:
    for v in g.vertices:
        if v not in L:
            raise ListError(f"vertex {v} has no list")
        if not L[v]:
            raise ListError(f"vertex {v} has an empty list")


def singletons(L: Mapping[int, FrozenSet[int]]) -> FrozenSet[int]:
    return frozenset(v for v, c in L.items() if len(c) == 1)


def only(colours: FrozenSet[int]) -> int:
    (x,) = colours
    return x


def high_colours(s: int, r: int) -> FrozenSet[int]:
    """The colours ``[s+3, s+2+r]``."""
    return frozenset(range(s + 3, s + 3 + r))


# --------------------------------------------------------------------------- axioms

@dataclass(frozen=True)
class AxiomVerdict:
    ok: bool
    axiom: str = ""
    vertex: Optional[int] = None
    detail: str = ""
    y1: FrozenSet[int] = frozenset()

    def __bool__(self) -> bool:
        return self.ok


def _bad(axiom, v, detail):
    return AxiomVerdict(False, axiom, v, detail)


def validate_L(g: Graph, L: Mapping[int, FrozenSet[int]], s: int, r: int,
               y1: Optional[Iterable[int]] = None) -> AxiomVerdict:
    """Check L1-L5 for an ``(s, r, Y1)``-list-assignment; Y1 is derived unless given."""
    if s < 1 or r < 1:
        return _bad("params", None, "s and r must be positive")
    for v in g.vertices:
        if v not in L or not L[v]:
            return _bad("L1", v, "missing or empty list")
        if len(L[v]) > s + r:
            return _bad("L1", v, f"list has {len(L[v])} > s+r colours")
    ys = frozenset(v for v in g.vertices if len(L[v]) == 1)
    if y1 is not None and frozenset(y1) != ys:
        return _bad("L2", min(frozenset(y1) ^ ys), "Y1 differs from the singleton set")
    for v in n_lt_s(g, ys, s):
        nb = g.adj[v] & ys
        if len(L[v]) != s + r - len(nb):
            return _bad("L3", v, "wrong list size next to Y1")
        for u in sorted(nb):
            if L[v] & L[u]:
                return _bad("L3", v, f"list meets the list of Y1 neighbour {u}")
    near = set(ys)
    for y in ys:
        near |= g.adj[y]
    for v in g.vertices:
        if v not in near and len(L[v]) != s + r:
            return _bad("L4", v, "vertex away from Y1 lacks a full list")
    for v in g.vertices:
        if v not in ys and len(L[v]) < r + 1:
            return _bad("L5", v, "list shorter than r+1")
    return AxiomVerdict(True, y1=ys)


def validate_R(g: Graph, L: Mapping[int, FrozenSet[int]], s: int, ell: int, r: int) -> AxiomVerdict:
    """Check R1-R5 for an ``(s, Y1, ell, r)``-list-assignment."""
    if s < 1 or r < 0 or not 0 <= ell <= s + 2:
        return _bad("params", None, "need s >= 1, r >= 0 and ell in [0, s+2]")
    top = s + 2 + r
    for v in g.vertices:
        if v not in L or not L[v]:
            return _bad("R1", v, "missing or empty list")
        if not all(1 <= x <= top for x in L[v]):
            return _bad("R1", v, f"list leaves [1, {top}]")
    base = validate_L(g, L, s, r + 2)
    if not base:
        return AxiomVerdict(False, "R2", base.vertex, f"{base.axiom}: {base.detail}")
    ys = base.y1
    hi = high_colours(s, r)
    special = hi | {ell}
    for y in sorted(ys):
        for x in L[y] & special:
            for v in sorted(g.adj[y] - ys):
                if x in L[v]:
                    return _bad("R3", y, f"colour {x} also on non-Y1 neighbour {v}")
    for x in sorted(hi):
        holders = [y for y in ys if x in L[y]]
        if not is_stable(g, holders):
            return _bad("R4", min(holders), f"Y1 vertices with colour {x} are not stable")
    for v in sorted(set(g.vertices) - ys):
        k = sum(1 for y in g.adj[v] & ys if L[y] <= hi)
        if k != r - len(L[v] & hi):
            return _bad("R5", v, "high-colour count mismatch")
    return AxiomVerdict(True, y1=ys)


# --------------------------------------------------------------------------- progress

def _pick(avail: Iterable[int], size: int, F: FrozenSet[int]) -> FrozenSet[int]:
    """Lexicographically least ``size``-subset of ``avail`` with the most colours from F."""
    av = sorted(avail)
    pref = [x for x in av if x in F][:size]
    rest = [x for x in av if x not in F][:size - len(pref)]
    if len(pref) + len(rest) < size:
        raise ListError("not enough colours available")
    return frozenset(pref + rest)


def _choose(options: Iterable[int], seed, v: int) -> int:
    opts = sorted(options)
    if seed is None:
        return opts[0]
    return random.Random(f"{seed}:{v}").choice(opts)


def progress(g: Graph, L: Mapping[int, FrozenSet[int]], W: Iterable[int], F: Iterable[int], s: int,
             choice_seed=None, r: Optional[int] = None) -> Lists:
    """The (W, F)-progress of L.

    New precoloured vertices pick from ``L(y) - F`` (smallest colour, or a
    seeded choice). Shrunken lists keep as many F-colours as possible, then
    the smallest remaining colours.
    """
    check_lists(g, L)
    F = frozenset(F)
    if r is not None and len(F) > r:
        raise ListError(f"|F| = {len(F)} exceeds r = {r}")
    y1 = frozenset(v for v in g.vertices if len(L[v]) == 1)
    W = frozenset(W)
    if not W <= set(g.vertices):
        raise GraphError("W is not a subset of the vertex set")
    new = W - y1
    out: Lists = dict((v, L[v]) for v in g.vertices)
    for y in sorted(new):
        options = L[y] - F
        if not options:
            raise ListError(f"vertex {y} has no colour outside F")
        out[y] = frozenset({_choose(options, choice_seed, y)})
    y1p = y1 | W
    for v in n_lt_s(g, y1p, s):
        pinned = g.adj[v] & new
        if not pinned:
            continue
        drop = frozenset(only(out[w]) for w in pinned)
        out[v] = _pick(L[v] - drop, len(L[v]) - len(pinned), F)
    return out


# --------------------------------------------------------------------------- growth and enlargement

def growth(g: Graph, L: Mapping[int, FrozenSet[int]], Z: Iterable[int], ell: int, s: int, r: int,
           choice_seed=None, trace: Optional[list] = None) -> Tuple[Lists, FrozenSet[int]]:
    """The (Z, ell)-growth: steps i = 0..s+2, each a progress with F = {ell, i} + high colours.

    Returns the final lists and their singleton set. When ``trace`` is a
    list, ``(i, U_i, F_i)`` is appended for every step.
    """
    check_lists(g, L)
    hi = high_colours(s, r)
    cur: Lists = {v: L[v] for v in g.vertices}
    y = singletons(cur)
    for i in range(s + 3):
        U = frozenset(Z) if i == 0 else n_geq_s(g, y, s)
        Fi = frozenset({ell, i}) | hi
        seed = None if choice_seed is None else f"{choice_seed}/{i}"
        nxt = progress(g, cur, U, Fi, s, seed)
        for v in set(g.vertices) - (y | U):
            if nxt[v] & hi != cur[v] & hi:
                raise AssertionError(f"high colours changed at vertex {v} in growth step {i}")
        if trace is not None:
            trace.append((i, U, Fi))
        cur, y = nxt, y | U
    assert y == singletons(cur)
    return cur, y


def enlarge_precolored(g: Graph, L: Mapping[int, FrozenSet[int]], F: Iterable[int], ell: int, s: int, r: int,
                       choice_seed=None) -> Tuple[Lists, FrozenSet[int]]:
    """Iterate progress over the sorted precoloured vertices, then once more with ``ell``."""
    check_lists(g, L)
    F = frozenset(F)
    if len(F) > r - 1:
        raise ListError("need |F| <= r-1")
    y1 = sorted(singletons(L))
    if not y1:
        raise ListError("the precoloured set is empty")
    colours = [only(L[y]) for y in y1] + [ell]
    cur: Lists = {v: L[v] for v in g.vertices}
    u = frozenset(y1)
    for i, li in enumerate(colours, 1):
        seed = None if choice_seed is None else f"{choice_seed}/{i}"
        cur = progress(g, cur, n_geq_s(g, u, s), F | {li}, s, seed)
        u = singletons(cur)
    return cur, u


# --------------------------------------------------------------------------- side restriction

def boundary_pins(g: Graph, L: Mapping[int, FrozenSet[int]], sep: Separation, F: Iterable[int],
                  choice_seed=None) -> Dict[int, int]:
    """Colour outside F for each boundary vertex that is not precoloured."""
    F = frozenset(F)
    pins = {}
    for v in sorted(sep.boundary):
        if len(L[v]) == 1:
            continue
        options = L[v] - F
        if not options:
            raise ListError(f"boundary vertex {v} has no colour outside F")
        pins[v] = _choose(options, choice_seed, v)
    return pins


def side_restrict(g: Graph, L: Mapping[int, FrozenSet[int]], sep: Separation, side: str, F: Iterable[int],
                  s: int, r: int, choice_seed=None,
                  pins: Optional[Mapping[int, int]] = None) -> Tuple[Graph, Lists]:
    """Restrict to one side of a separation, pinning the boundary and trimming nearby lists.

    Both sides use the same pins when called with the same seed (or the same
    ``pins``), so colourings of the two sides agree on the boundary.
    """
    check_lists(g, L)
    if not is_separation(g, sep):
        raise GraphError("not a separation of the graph")
    F = frozenset(F)
    verdict = validate_L(g, L, s, r)
    if not verdict:
        raise ListError(f"input lists violate {verdict.axiom} at vertex {verdict.vertex}")
    if side not in ("A", "B"):
        raise ValueError("side must be 'A' or 'B'")
    y1 = verdict.y1
    if pins is None:
        pins = boundary_pins(g, L, sep, F, choice_seed)
    for v in sep.boundary - y1:
        if v not in pins or pins[v] not in L[v] or pins[v] in F:
            raise ListError(f"bad pin for boundary vertex {v}")
    keep = sep.va if side == "A" else sep.vb
    ga = g.subgraph(keep)
    ya = (y1 & keep) | sep.boundary
    la: Lists = {}
    for v in keep:
        la[v] = frozenset({pins[v]}) if v in sep.boundary - y1 else L[v]
    for z in n_lt_s(ga, ya, s):
        nb = ga.adj[z] & ya
        taken = frozenset().union(*(la[u] for u in nb))
        la[z] = _pick(L[z] - taken, s + r - len(nb), F)
    _check_side(ga, L, la, y1 & keep, ya, F, s, r)
    return ga, la


def _check_side(ga, L, la, y1a, ya, F, s, r):
    v = validate_L(ga, la, s, r, ya)
    if not v:
        raise AssertionError(f"side lists violate {v.axiom} at {v.vertex}")
    for x in ga.vertices:
        if not la[x] <= L[x]:
            raise AssertionError(f"side list of {x} is not a sublist")
        if x not in ya and la[x] & F != L[x] & F:
            raise AssertionError(f"F-colours changed at {x}")
    if {x for x in y1a if F & L[x]} != {x for x in ya if F & la[x]}:
        raise AssertionError("F-coloured precoloured sets differ")


# --------------------------------------------------------------------------- layer compatibility

def is_sv_compatible(g: Graph, L: Mapping[int, FrozenSet[int]], lay: Layering, s: int) -> bool:
    """Lists inside [s+2], and a vertex of layer j never holds colour j mod (s+2)."""
    if set(g.vertices) != set(lay.covered()) | set(lay.excluded):
        raise GraphError("layering does not cover the graph")
    m = s + 2
    for v in g.vertices:
        if not all(1 <= x <= m for x in L[v]):
            return False
    for j, layer in enumerate(lay.layers, 1):
        banned = (j - 1) % m + 1
        if any(banned in L[v] for v in layer):
            return False
    return True


def is_v_standard_pair(g: Graph, L: Mapping[int, FrozenSet[int]], lay: Layering, s: int,
                       y1: Optional[Iterable[int]] = None) -> bool:
    return bool(validate_L(g, L, s, 1, y1)) and is_sv_compatible(g, L, lay, s)


# --------------------------------------------------------------------------- bounded colourings

@dataclass(frozen=True)
class BoundedColoringPolicy:
    """Parameters of a bounded colouring: ``eta``, a step-function ``g`` and stable colours F.

    ``g(x)`` is the table value at the largest key ``<= x``; below every key
    it is ``default``.
    """

    eta: int
    g_table: Mapping[int, int] = field(default_factory=dict)
    stable_colors: FrozenSet[int] = frozenset()
    default: int = 1

    def __post_init__(self):
        if self.eta < 1:
            raise ValueError("eta must be positive")
        keys = sorted(self.g_table)
        vals = [self.default] + [self.g_table[k] for k in keys]
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise ValueError("g must be nondecreasing")
        object.__setattr__(self, "stable_colors", frozenset(self.stable_colors))

    def g(self, x: int) -> int:
        best = self.default
        for k in sorted(self.g_table):
            if k <= x:
                best = self.g_table[k]
        return best


@dataclass(frozen=True)
class BoundedVerdict:
    y1_union: Verdict
    all_components: Verdict
    stable: Verdict

    @property
    def ok(self) -> bool:
        return bool(self.y1_union and self.all_components and self.stable)

    def __bool__(self) -> bool:
        return self.ok


def is_list_coloring(g: Graph, L: Mapping[int, FrozenSet[int]], c: Mapping[int, int]) -> bool:
    return all(v in c and c[v] in L[v] for v in g.vertices)


def check_eta_g_bounded(g: Graph, L: Mapping[int, FrozenSet[int]], c: Coloring,
                        policy: BoundedColoringPolicy) -> BoundedVerdict:
    if not is_list_coloring(g, L, c):
        bad = next(v for v in g.vertices if v not in c or c[v] not in L[v])
        raise ListError(f"not an L-colouring at vertex {bad}")
    y1 = singletons({v: L[v] for v in g.vertices})
    comps = monochromatic_components(g, c)
    touching = [p for p in comps if p & y1]
    union = frozenset().union(*touching) if touching else frozenset()
    k = len(y1)
    a = OK if len(union) <= k * k * policy.g(k) else fail("Y1 components too large", union)
    limit = policy.eta ** 2 * policy.g(policy.eta)
    big = next((p for p in comps if len(p) > limit), None)
    b = OK if big is None else fail("component too large", big)
    st = OK
    for u, v in sorted(g.edges):
        if c[u] == c[v] and c[u] in policy.stable_colors:
            st = fail("stable colour used on an edge", (u, v))
            break
    return BoundedVerdict(a, b, st)


# --------------------------------------------------------------------------- random instances

def random_srY1_lists(g: Graph, s: int, r: int, rng: random.Random, y1_prob: float = 0.3,
                      palette: Optional[int] = None) -> Lists:
    """A random ``(s, r, Y1)``-list-assignment with colours drawn from ``[1, palette]``."""
    pal = list(range(1, (palette or s + r + 2) + 1))
    if len(pal) < s + r:
        raise ListError("palette smaller than s+r")
    y1 = {v for v in g.vertices if rng.random() < y1_prob}
    L: Lists = {y: frozenset({rng.choice(pal)}) for y in y1}
    for v in g.vertices:
        if v in y1:
            continue
        nb = g.adj[v] & y1
        if not nb:
            L[v] = frozenset(rng.sample(pal, s + r))
        elif len(nb) < s:
            taken = frozenset().union(*(L[u] for u in nb))
            L[v] = frozenset(rng.sample([x for x in pal if x not in taken], s + r - len(nb)))
        else:
            L[v] = frozenset(rng.sample(pal, rng.randint(r + 1, s + r)))
    return L


def random_R_lists(g: Graph, s: int, ell: int, r: int, rng: random.Random, y1_prob: float = 0.3,
                   high_prob: float = 0.3, tries: int = 200) -> Optional[Lists]:
    """A random ``(s, Y1, ell, r)``-list-assignment, or None if sampling keeps failing."""
    hi = sorted(high_colours(s, r))
    low = list(range(1, s + 3))
    for _ in range(tries):
        y1 = [v for v in g.vertices if rng.random() < y1_prob]
        ys = set(y1)
        col: Dict[int, int] = {}
        for y in y1:
            free_hi = [x for x in hi if all(col.get(u) != x for u in g.adj[y])]
            if free_hi and rng.random() < high_prob:
                col[y] = rng.choice(free_hi)
            else:
                col[y] = rng.choice(low)
        L = _fill_R(g, ys, col, s, ell, r, rng)
        if L is not None and validate_R(g, L, s, ell, r):
            return L
    return None


def _fill_R(g, ys, col, s, ell, r, rng):
    hi = high_colours(s, r)
    special = hi | {ell}
    L: Lists = {y: frozenset({col[y]}) for y in ys}
    for v in g.vertices:
        if v in ys:
            continue
        nb = g.adj[v] & ys
        k = len(nb)
        h = sum(1 for u in nb if col[u] in hi)
        if h > r:
            return None
        want_hi = r - h
        if k < s:
            taken = {col[u] for u in nb}
            size = s + r + 2 - k
        else:
            taken = {col[u] for u in nb if col[u] in special}
            size = rng.randint(r + 3, s + r + 2)
        hi_opts = [x for x in sorted(hi) if x not in taken]
        lo_opts = [x for x in range(1, s + 3) if x not in taken]
        want_lo = size - want_hi
        if k >= s:
            want_lo = min(max(want_lo, r + 3 - want_hi), len(lo_opts))
            if want_hi + want_lo < r + 3:
                return None
        if len(hi_opts) < want_hi or len(lo_opts) < want_lo or want_lo < 0:
            return None
        L[v] = frozenset(rng.sample(hi_opts, want_hi) + rng.sample(lo_opts, want_lo))
    return L
