"""Tangles given as explicit separation sets."""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

from ..graph_core import (OK, SEPARATION_CAP, Graph, GraphError, Separation, SizeError, Verdict,
                          enumerate_separations, fail, is_separation)


@dataclass(frozen=True)
class Tangle:
    separations: FrozenSet[Separation]
    order: int

    def __contains__(self, sep: object) -> bool:
        return sep in self.separations

    def __len__(self) -> int:
        return len(self.separations)


@dataclass(frozen=True)
class TangleReport:
    """Per-axiom verdicts; ``members`` checks that every element is a small separation."""

    members: Verdict
    t1: Verdict
    t2: Verdict
    t3: Verdict

    @property
    def ok(self) -> bool:
        return bool(self.members and self.t1 and self.t2 and self.t3)

    def __bool__(self) -> bool:
        return self.ok

    def first_failure(self) -> Tuple[str, Verdict]:
        for name in ("members", "t1", "t2", "t3"):
            v = getattr(self, name)
            if not v:
                return name, v
        return "", OK


def _side_masks(g: Graph, seps: Iterable[Separation]) -> List[Tuple[int, int, Separation]]:
    vidx = {v: i for i, v in enumerate(g.vertices)}
    eidx = {e: i for i, e in enumerate(sorted(g.edges))}
    out = []
    for s in seps:
        vm = sum(1 << vidx[v] for v in s.va)
        em = sum(1 << eidx[e] for e in s.a_edges)
        out.append((vm, em, s))
    return out


def _maximal(sides):
    """Drop A-sides contained in another; they never help cover G."""
    uniq = {}
    for vm, em, s in sides:
        uniq.setdefault((vm, em), s)
    items = sorted(uniq.items(), key=lambda kv: -(bin(kv[0][0]).count("1") + bin(kv[0][1]).count("1")))
    keep = []
    for (vm, em), s in items:
        if not any(vm & ~kv == 0 and em & ~ke == 0 for kv, ke, _ in keep):
            keep.append((vm, em, s))
    return keep


def check_t2(g: Graph, seps: Iterable[Separation]) -> Verdict:
    full_v = (1 << g.n) - 1
    full_e = (1 << g.m) - 1
    sides = _maximal(_side_masks(g, seps))
    k = len(sides)
    for i in range(k):
        vi, ei, si = sides[i]
        for j in range(i, k):
            vj, ej, sj = sides[j]
            uv, ue = vi | vj, ei | ej
            need_v, need_e = full_v & ~uv, full_e & ~ue
            for t in range(j, k):
                vt, et, st = sides[t]
                if need_v & ~vt == 0 and need_e & ~et == 0:
                    return fail("three A-sides cover the graph", (si, sj, st))
    return OK


def tangle_axioms_check(g: Graph, seps: Iterable[Separation], theta: int,
                        cap: int = SEPARATION_CAP) -> TangleReport:
    """Check T1-T3 for an explicit separation set of order ``theta``."""
    if g.n > cap:
        raise SizeError(f"tangle checking limited to {cap} vertices, got {g.n}")
    members = frozenset(seps)
    mv = OK
    for s in sorted(members, key=_sep_key):
        if not is_separation(g, s):
            mv = fail("member is not a separation of the graph", s)
            break
        if s.order >= theta:
            mv = fail("member has order >= theta", s)
            break
    t1 = OK
    for s in enumerate_separations(g, theta - 1, cap=cap):
        if s not in members and s.flipped() not in members:
            t1 = fail("neither orientation of a small separation is present", s)
            break
    vg = frozenset(g.vertices)
    t3 = OK
    for s in sorted(members, key=_sep_key):
        if s.va == vg:
            t3 = fail("a member's A-side spans every vertex", s)
            break
    t2 = check_t2(g, members)
    return TangleReport(mv, t1, t2, t3)


def _sep_key(s: Separation):
    return (sorted(s.va), sorted(s.vb), sorted(s.a_edges), sorted(s.b_edges))


def tangle_from_Y1(g: Graph, theta: int, y1: Iterable[int], cap: int = SEPARATION_CAP) -> Tangle:
    """All separations of order < theta whose A-side holds at most 3*theta vertices of ``y1``."""
    ys = frozenset(y1)
    if not ys <= set(g.vertices):
        raise GraphError("y1 is not a subset of the vertex set")
    if theta < 1:
        return Tangle(frozenset(), theta)
    keep = frozenset(s for s in enumerate_separations(g, theta - 1, cap=cap) if len(s.va & ys) <= 3 * theta)
    return Tangle(keep, theta)


def controls_minor(g: Graph, tangle: Tangle, model) -> bool:
    """True iff no member of order < |V(H)| has some branch set inside its A-side."""
    h_order = len(model.branch_sets)
    for s in tangle.separations:
        if s.order < h_order and any(b <= s.va for b in model.branch_sets.values()):
            return False
    return True


def tangle_minus_z(g: Graph, tangle: Tangle, z: Iterable[int]) -> Tangle:
    zs = frozenset(z)
    if len(zs) >= tangle.order:
        raise GraphError("|Z| must be smaller than the tangle order")
    if not zs <= set(g.vertices):
        raise GraphError("Z is not a subset of the vertex set")
    bound = tangle.order - len(zs)
    out = set()
    for s in tangle.separations:
        if not zs <= s.boundary:
            continue
        t = Separation(s.va - zs, s.vb - zs,
                       frozenset(e for e in s.a_edges if e[0] not in zs and e[1] not in zs),
                       frozenset(e for e in s.b_edges if e[0] not in zs and e[1] not in zs))
        if t.order < bound:
            out.add(t)
    return Tangle(frozenset(out), bound)
