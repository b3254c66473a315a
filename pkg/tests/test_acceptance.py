"""Acceptance criteria C1-C11.

Each test computes with the package, re-checks the result with the
independent references in ``_oracles`` (or a local brute force), prints one
PASS/FAIL line, and only then asserts.
"""
import random
import time
from itertools import product

import networkx as nx
import numpy as np

import _oracles as O
from clustercol import generators as G
from clustercol.containment import has_kst_subgraph, has_minor, has_odd_minor
from clustercol.graph_core import is_separation
from clustercol.harness import random_claim7_instance, random_separation, verify_hex, verify_standard_lower_bounds
from clustercol.io import read_tangle, write_tangle
from clustercol.list_machinery import (enlarge_precolored, growth, high_colours, progress, random_R_lists,
                                       random_srY1_lists, side_restrict, validate_L)
from clustercol.solver import bipartite_block_coloring, dp_clustered_coloring, merge_side_colorings
from clustercol.structure import (Society, find_vortical_decomposition, is_rho_vortex, tangle_axioms_check,
                                  tangle_from_Y1, treewidth_exact, treewidth_heuristic,
                                  validate_tree_decomposition)

ENUM_LIMIT = 300_000


def report(capsys, tag, ok, elapsed, limit, detail):
    verdict = "PASS" if ok and elapsed < limit else "FAIL"
    with capsys.disabled():
        print(f"\n[{tag}] {verdict} {detail} ({elapsed:.1f}s, limit {limit}s)")
    return verdict == "PASS"


def product_size(L, verts):
    return int(np.prod([len(L[v]) for v in verts], dtype=np.int64)) if verts else 1


def singles(L):
    return {v for v, c in L.items() if len(c) == 1}


def stable(g, xs):
    xs = set(xs)
    return not any(u in xs and v in xs for u, v in g.edges)


# --------------------------------------------------------------------------- C1

def _mono_path(g, col, k):
    def dfs(v, seen):
        if len(seen) >= k:
            return True
        return any(dfs(w, seen | {w}) for w in g.adj[v] if w not in seen and col[w] == col[v])
    return any(dfs(v, {v}) for v in g.vertices)


def _hex_all(eta):
    """Every 2-colouring of the eta x eta board has a monochromatic path on >= eta vertices."""
    g = G.triangular_grid(eta)
    assert g.n == eta * eta and g.m == 3 * eta * eta - 4 * eta + 1
    cols = O.enumerate_colorings(g, {v: (0, 1) for v in g.vertices}, limit=1 << 16)
    lab = O.component_ids(g, cols)
    verts = list(g.vertices)
    top, bottom = verts[:eta], verts[-eta:]
    left, right = verts[::eta], verts[eta - 1::eta]
    # a component touching two opposite sides contains a path through all eta rows (or columns)
    crosses = np.zeros(len(cols), dtype=bool)
    for xs, ys in ((top, bottom), (left, right)):
        for a in xs:
            for b in ys:
                crosses |= lab[:, verts.index(a)] == lab[:, verts.index(b)]
    fails = 0
    for row in np.nonzero(~crosses)[0]:
        if not _mono_path(g, dict(zip(verts, cols[row].tolist())), eta):
            fails += 1
    return fails, len(cols)


def test_c1_hex(capsys):
    t0 = time.perf_counter()
    rep = verify_hex(3)
    fails, total = 0, 0
    for eta in (1, 2, 3):
        f, n = _hex_all(eta)
        fails, total = fails + f, total + n
    small = time.perf_counter() - t0
    f4, n4 = _hex_all(4)
    big = time.perf_counter() - t0
    ok = rep.passed and fails == 0 and f4 == 0 and small < 60 and big < 600
    assert report(capsys, "C1", ok, big, 600,
                  f"hex eta=1..3: {total} colourings, {fails} failures in {small:.1f}s (<60s); "
                  f"eta=4: {n4} colourings, {f4} failures")


# --------------------------------------------------------------------------- C2

def _kst_free(g, s, t):
    """No K_{s,t} subgraph: no s-set of vertices has t common neighbours."""
    from itertools import combinations
    for S in combinations(g.vertices, s):
        common = set(g.vertices) - set(S)
        for v in S:
            common &= g.adj[v]
        if len(common) >= t:
            return False
    return True


def test_c2_minor_lower_bound_family(capsys):
    t0 = time.perf_counter()
    rep = verify_standard_lower_bounds(minor_cases=((1, 3), (2, 2)), tw_cases=())
    details, ok = [], rep.passed and rep.counts()["skip"] == 0
    for s, eta in ((1, 3), (2, 2)):
        g = G.standard_minor_example(s, eta)
        no_minor = has_minor(g, G.complete(s + 4)) is None and not O.has_minor(g, G.complete(s + 4))
        no_kst = has_kst_subgraph(g, s, s + 6) is None and _kst_free(g, s, s + 6)
        best = O.min_clustering_numpy(g, {v: range(s + 1) for v in g.vertices})
        ok &= no_minor and no_kst and best >= eta
        details.append(f"(s={s},eta={eta}) n={g.n} noK{s + 4}={no_minor} noK{s},{s + 6}={no_kst} "
                       f"min-clustering={best}")
    assert report(capsys, "C2", ok, time.perf_counter() - t0, 300, "; ".join(details))


# --------------------------------------------------------------------------- C3

def test_c3_treewidth_lower_bound_family(capsys):
    t0 = time.perf_counter()
    g = G.standard_treewidth_example(2, 3)
    tw, td = treewidth_exact(g)
    ref = O.treewidth(g)
    no_k24 = has_kst_subgraph(g, 2, 4) is None and _kst_free(g, 2, 4)
    best = O.min_clustering_numpy(g, {v: (0, 1) for v in g.vertices})
    ok = tw == 2 and ref == 2 and validate_tree_decomposition(g, td) and no_k24 and best >= 3
    assert report(capsys, "C3", ok, time.perf_counter() - t0, 120,
                  f"n={g.n} treewidth={tw} (reference {ref}) noK2,4={no_k24} min 2-clustering={best}")


# --------------------------------------------------------------------------- C4

def _progress_statements(g, L, W, F, s, r, Lp):
    y1 = singles(L)
    Y = y1 | set(W)
    bad = []
    if not (O.axioms_L(g, Lp, s, r) and singles(Lp) == Y):
        bad.append(1)
    if any(not Lp[v] <= L[v] for v in g.vertices):
        bad.append(2)
    if {v for v in Y if Lp[v] & F} != {v for v in y1 if L[v] & F}:
        bad.append(3)
    premise = O.many_nbrs(g, y1, s) <= Y
    if premise:
        for y in Y:
            for v in g.adj[y] - Y:
                if Lp[v] & Lp[y] & F:
                    bad.append(4)
    if any(Lp[v] & F != L[v] & F for v in g.vertices if v not in Y):
        bad.append(5)
    return sorted(set(bad)), premise


def test_c4_progress_basic(capsys):
    t0 = time.perf_counter()
    rng = random.Random(2024)
    fails, premised, admissible = [], 0, 0
    for t in range(1000):
        g = G.gnp_random(rng.randint(1, 10), rng.random() * 0.6, rng.randrange(1 << 30))
        s, r = rng.randint(1, 3), rng.randint(1, 3)
        L = random_srY1_lists(g, s, r, rng)
        assert O.axioms_L(g, L, s, r)
        W = {v for v in g.vertices if rng.random() < 0.3}
        if rng.random() < 0.5:
            W |= O.many_nbrs(g, singles(L), s)
        F = frozenset(rng.sample(range(1, s + r + 5), rng.randint(0, r)))
        Lp = progress(g, L, W, F, s, choice_seed=t, r=r)
        bad, premise = _progress_statements(g, L, W, F, s, r, Lp)
        premised += premise
        admissible += bool(O.is_progress_of(g, L, W, F, s, Lp))
        if bad:
            fails.append((t, bad))
    ok = not fails and admissible == 1000
    assert report(capsys, "C4", ok, time.perf_counter() - t0, 120,
                  f"1000 instances, {len(fails)} failures, statement 4 premise met on {premised}, "
                  f"{admissible} outputs admissible progresses"), fails[:5]


# --------------------------------------------------------------------------- C5

def axioms_R(g, L, s, ell, r):
    """Direct reading of R1-R5 with Y1 the singleton vertices."""
    hi = set(range(s + 3, s + 3 + r))
    special = hi | {ell}
    ys = singles(L)
    if any(not L[v] or not L[v] <= set(range(1, s + 3 + r)) for v in g.vertices):
        return False
    if not O.axioms_L(g, L, s, r + 2):
        return False
    for y in ys:
        if any(x in L[v] for x in L[y] & special for v in g.adj[y] - ys):
            return False
    for x in hi:
        if not stable(g, [y for y in ys if x in L[y]]):
            return False
    for v in set(g.vertices) - ys:
        if sum(1 for y in g.adj[v] & ys if L[y] <= hi) != r - len(L[v] & hi):
            return False
    return True


def _escapes(g, L, sources, target, colours=None):
    n, _ = O.escaping_colorings(g, L, sources, target, colours)
    reach = O.escape_by_reachability(g, L, sources, target, colours)
    assert (n > 0) == reach
    return n


def test_c5_growth_and_enlargement(capsys):
    t0 = time.perf_counter()
    rng = random.Random(77)
    g_fail, e_fail, colourings, redraws = [], [], 0, 0
    done = 0
    while done < 200:
        g = G.gnp_random(rng.randint(1, 8), rng.random() * 0.6, rng.randrange(1 << 30))
        s, r = rng.randint(1, 2), rng.randint(0, 2)
        ell = rng.randint(0, s + 2)
        L = random_R_lists(g, s, ell, r, rng)
        if L is None:
            continue
        assert axioms_R(g, L, s, ell, r)
        Z = {v for v in g.vertices if rng.random() < 0.3}
        Lp, Yp = growth(g, L, Z, ell, s, r, choice_seed=done)
        if product_size(Lp, g.vertices) > ENUM_LIMIT:
            redraws += 1
            continue
        y1 = singles(L)
        bad = []
        if not (axioms_R(g, Lp, s, ell, r) and singles(Lp) == set(Yp)):
            bad.append(1)
        if any(not Lp[v] <= L[v] for v in g.vertices):
            bad.append(2)
        if _escapes(g, Lp, y1 | Z, set(Yp)) or _escapes(g, Lp, y1 | Z, y1, high_colours(s, r) | {ell}):
            bad.append(4)
        colourings += product_size(Lp, g.vertices)
        if bad:
            g_fail.append((done, bad))
        done += 1
    done = 0
    while done < 200:
        g = G.gnp_random(rng.randint(1, 8), rng.random() * 0.6, rng.randrange(1 << 30))
        s, r = rng.randint(1, 3), rng.randint(1, 3)
        L = random_srY1_lists(g, s, r, rng, y1_prob=0.35)
        y1 = singles(L)
        if not y1:
            continue
        F = frozenset(rng.sample(range(1, s + r + 3), rng.randint(0, r - 1)))
        ell = rng.randint(1, s + r + 2)
        Ls, Ys = enlarge_precolored(g, L, F, ell, s, r, choice_seed=done)
        if product_size(Ls, g.vertices) > ENUM_LIMIT:
            redraws += 1
            continue
        bad = []
        if not (O.axioms_L(g, Ls, s, r) and singles(Ls) == set(Ys)):
            bad.append("assignment")
        if _escapes(g, Ls, y1, set(Ys)):
            bad.append("claim2")
        colourings += product_size(Ls, g.vertices)
        if bad:
            e_fail.append((done, bad))
        done += 1
    ok = not g_fail and not e_fail
    assert report(capsys, "C5", ok, time.perf_counter() - t0, 600,
                  f"200 growth + 200 enlargement instances, {colourings} colourings enumerated, "
                  f"{redraws} redraws over {ENUM_LIMIT}, failures {len(g_fail)}/{len(e_fail)}"), (g_fail[:5], e_fail[:5])


# --------------------------------------------------------------------------- C6

def _side_colourings(ga, la, F):
    cols = O.enumerate_colorings(ga, la, limit=ENUM_LIMIT)
    verts = list(ga.vertices)
    keep = np.ones(len(cols), dtype=bool)
    for u, v in ga.edges:
        i, j = verts.index(u), verts.index(v)
        keep &= ~((cols[:, i] == cols[:, j]) & np.isin(cols[:, i], list(F)))
    return verts, cols[keep]


def _all_merges_ok(g, L, sep, F, side_a, side_b):
    """Every pair (c_A, c_B) merges into an F-stable L-colouring.

    Every vertex and edge constraint lives on one side, and boundary columns are
    constant on both sides, so checking each side's rows covers all pairs.
    """
    (va, ca), (vb, cb) = side_a, side_b
    if len(ca) == 0 or len(cb) == 0:
        return True, 0
    for v in sep.boundary:
        a, b = ca[:, va.index(v)], cb[:, vb.index(v)]
        if len(set(a.tolist()) | set(b.tolist())) != 1:
            return False, 0
    for verts, cols in ((va, ca), (vb, cb)):
        for i, v in enumerate(verts):
            if not np.isin(cols[:, i], sorted(L[v])).all():
                return False, 0
    for u, v in g.edges:
        verts, cols = (va, ca) if u in sep.va and v in sep.va else (vb, cb)
        same = cols[:, verts.index(u)] == cols[:, verts.index(v)]
        if (same & np.isin(cols[:, verts.index(u)], list(F))).any():
            return False, 0
    return True, len(ca) * len(cb)


def _claim2_bullets(g, L, ga, la, keep, sep, F, s, r):
    y1 = singles(L)
    ya = (y1 & keep) | set(sep.boundary)
    bad = []
    if not (O.axioms_L(ga, la, s, r) and singles(la) == ya):
        bad.append("assignment")
    if any(not la[v] <= L[v] for v in ga.vertices):
        bad.append("sublist")
    if {v for v in y1 & keep if L[v] & F} != {v for v in ya if la[v] & F}:
        bad.append("F-precoloured")
    if any(la[v] & F != L[v] & F for v in ga.vertices if v not in ya):
        bad.append("F-kept")
    if any(la[v] & F for v in set(sep.boundary) - y1):
        bad.append("pin-in-F")
    return bad


def test_c6_side_restriction_and_merge(capsys):
    t0 = time.perf_counter()
    rng = random.Random(606)
    fails, pairs, sampled, done, redraws = [], 0, 0, 0, 0
    while done < 200:
        g = G.gnp_random(rng.randint(1, 8), rng.random() * 0.6, rng.randrange(1 << 30))
        s, r = rng.randint(1, 2), rng.randint(1, 2)
        L = random_srY1_lists(g, s, r, rng)
        sep = random_separation(g, rng)
        if sep is None:
            continue
        assert is_separation(g, sep) and O.axioms_L(g, L, s, r)
        if max(product_size(L, sep.va), product_size(L, sep.vb)) > ENUM_LIMIT:
            redraws += 1
            continue
        F = frozenset(rng.sample(range(1, s + r + 3), rng.randint(0, r)))
        bad, sides = [], {}
        for side, keep in (("A", sep.va), ("B", sep.vb)):
            ga, la = side_restrict(g, L, sep, side, F, s, r, choice_seed=done)
            bad += [f"{side}:{b}" for b in _claim2_bullets(g, L, ga, la, set(keep), sep, F, s, r)]
            sides[side] = _side_colourings(ga, la, F)
        merged_ok, n = _all_merges_ok(g, L, sep, F, sides["A"], sides["B"])
        pairs += n
        if not merged_ok:
            bad.append("merge")
        (va, ca), (vb, cb) = sides["A"], sides["B"]
        for _ in range(min(20, len(ca) * len(cb))):
            a = dict(zip(va, ca[rng.randrange(len(ca))].tolist()))
            b = dict(zip(vb, cb[rng.randrange(len(cb))].tolist()))
            c = merge_side_colorings(g, sep, a, b)
            sampled += 1
            if any(c[v] not in L[v] for v in g.vertices) or \
                    any(c[u] == c[v] and c[u] in F for u, v in g.edges):
                bad.append("merge-sample")
                break
        if bad:
            fails.append((done, bad))
        done += 1
    assert report(capsys, "C6", not fails, time.perf_counter() - t0, 300,
                  f"200 separated instances, {pairs} merged pairs covered, {sampled} merges rebuilt, "
                  f"{redraws} redraws, {len(fails)} failures"), fails[:5]


# --------------------------------------------------------------------------- C7

def _claim7_case_split(g, Lp, yp, ell, s, c):
    hi = set(range(s + 3, 2 * s + 2))
    bad = []
    if any(c[v] not in Lp[v] for v in g.vertices):
        bad.append("not-L")
    for x in hi:
        if not stable(g, [v for v in g.vertices if c[v] == x]):
            bad.append("high-unstable")
    many = O.many_nbrs(g, yp, s)
    for comp in O.mono_components(g, c):
        x = c[next(iter(comp))]
        if not comp & yp:
            if len(comp) > 1:
                bad.append("avoiding")
        elif x == ell or x in hi:
            if not comp <= yp:
                bad.append("special")
        else:
            out = comp - yp
            if not (out <= many and stable(g, out)) or len(comp) > len(yp) + len(many):
                bad.append("low")
    return sorted(set(bad))


def test_c7_claim7(capsys):
    t0 = time.perf_counter()
    rng = random.Random(7)
    fails, done, low_cases = [], 0, 0
    while done < 200:
        inst = random_claim7_instance(rng, 10)
        if inst is None:
            continue
        g, L, s, ell, Lp, Yp = inst
        yp = set(Yp)
        assert axioms_R(g, Lp, s, ell, s - 1) and singles(Lp) == yp
        assert nx.is_bipartite(O.to_nx(g).subgraph(set(g.vertices) - yp))
        c = bipartite_block_coloring(g, Lp, Yp, ell, s, s - 1)
        bad = _claim7_case_split(g, Lp, yp, ell, s, c)
        low_cases += any(len(m - yp) > 0 and m & yp for m in O.mono_components(g, c))
        if bad:
            fails.append((done, bad))
        done += 1
    assert report(capsys, "C7", not fails, time.perf_counter() - t0, 120,
                  f"200 instances, {low_cases} with a component leaving Y1', {len(fails)} failures"), fails[:5]


# --------------------------------------------------------------------------- C8

def test_c8_solver_oracle(capsys):
    t0 = time.perf_counter()
    rng = random.Random(88)
    fails, yes = [], 0
    for t in range(500):
        g = G.gnp_random(rng.randint(1, 10), rng.random() * 0.7, rng.randrange(1 << 30))
        k, eta = rng.randint(1, 3), rng.randint(1, 3)
        td = treewidth_heuristic(g)[1]
        if rng.random() < 0.5:
            L = {v: frozenset(range(k)) for v in g.vertices}
            got = dp_clustered_coloring(g, td, eta, k=k)
        else:
            L = {v: frozenset(rng.sample(range(1, 4), rng.randint(1, k))) for v in g.vertices}
            got = dp_clustered_coloring(g, td, eta, L=L)
        want = O.min_clustering_numpy(g, L) <= eta
        good = (got is not None) == want
        if got is not None:
            yes += 1
            good &= set(got) == set(g.vertices) and all(got[v] in L[v] for v in g.vertices) \
                and O.clustering(g, got) <= eta
        if not good:
            fails.append(t)
    assert report(capsys, "C8", not fails, time.perf_counter() - t0, 600,
                  f"500 instances ({yes} colourable), {len(fails)} disagreements or bad witnesses"), fails[:5]


# --------------------------------------------------------------------------- C9

def test_c9_odd_minor_fact(capsys):
    t0 = time.perf_counter()
    k3 = G.complete(3)
    found = {n: has_odd_minor(G.complete_bipartite(n, n), k3, parity_shortcut=False) for n in (2, 3, 4, 5)}
    ref = {n: O.has_odd_minor(G.complete_bipartite(n, n), k3) for n in (2, 3)}
    arith = all(2 * (2 * s - 1) + 1 + 4 * s - 3 == 8 * s - 4 for s in range(1, 11))
    ok = all(v is None for v in found.values()) and not any(ref.values()) and arith
    assert report(capsys, "C9", ok, time.perf_counter() - t0, 60,
                  f"odd K3 in K_n,n for n=2..5: {[found[n] is not None for n in found]}, "
                  f"reference n=2,3: {list(ref.values())}, identity for s=1..10: {arith}")


# --------------------------------------------------------------------------- C10

def _td_ok(g, td):
    nodes = list(td.bags)
    if len(td.tree_edges) != max(len(nodes) - 1, 0):
        return False
    h = nx.Graph()
    h.add_nodes_from(nodes)
    h.add_edges_from(td.tree_edges)
    if nodes and not nx.is_connected(h):
        return False
    for v in g.vertices:
        holders = [x for x in nodes if v in td.bags[x]]
        if not holders or not nx.is_connected(h.subgraph(holders)):
            return False
    return all(any(u in b and v in b for b in td.bags.values()) for u, v in g.edges)


def _separations(g, max_order):
    """All separations as (va, vb, a_edges, b_edges), labelling vertices A-only, B-only or both."""
    verts = list(g.vertices)
    out = set()
    for lab in product("ABX", repeat=len(verts)):
        side = dict(zip(verts, lab))
        if lab.count("X") > max_order or any({side[u], side[v]} == {"A", "B"} for u, v in g.edges):
            continue
        va = frozenset(v for v in verts if side[v] != "B")
        vb = frozenset(v for v in verts if side[v] != "A")
        fixed_a = {e for e in g.edges if "A" in (side[e[0]], side[e[1]])}
        fixed_b = {e for e in g.edges if "B" in (side[e[0]], side[e[1]])}
        free = [e for e in g.edges if side[e[0]] == side[e[1]] == "X"]
        for bits in product((0, 1), repeat=len(free)):
            a = fixed_a | {e for e, b in zip(free, bits) if b == 0}
            b = fixed_b | {e for e, b in zip(free, bits) if b == 1}
            out.add((va, vb, frozenset(a), frozenset(b)))
    return out


def test_c10_constructor_round_trips(capsys):
    t0 = time.perf_counter()
    rng = random.Random(1010)
    fails, tangles_full = [], 0
    for t in range(100):
        g = G.gnp_random(rng.randint(1, 6), rng.random() * 0.7, rng.randrange(1 << 30))
        bad = []
        tw, td = treewidth_exact(g)
        if not (validate_tree_decomposition(g, td) and _td_ok(g, td) and td.width() == tw == O.treewidth(g)):
            bad.append("td")
        theta = rng.randint(1, 3)
        y1 = {v for v in g.vertices if rng.random() < 0.5}
        tg = tangle_from_Y1(g, theta, y1)
        verdict = tangle_axioms_check(g, tg.separations, theta)
        want = {x for x in _separations(g, theta - 1) if len(x[0] & y1) <= 3 * theta}
        got = {(x.va, x.vb, x.a_edges, x.b_edges) for x in tg.separations}
        back = read_tangle(write_tangle(tg))
        if not verdict.members or got != want or back != tg:
            bad.append("tangle")
        tangles_full += verdict.ok
        s, r = rng.randint(1, 2), rng.randint(1, 2)
        L = random_srY1_lists(g, s, r, rng)
        sep = random_separation(g, rng)
        F = frozenset(rng.sample(range(1, s + r + 3), rng.randint(0, r)))
        for side, keep in (("A", sep.va), ("B", sep.vb)):
            ga, la = side_restrict(g, L, sep, side, F, s, r, choice_seed=t)
            ya = (singles(L) & set(keep)) | set(sep.boundary)
            if not (validate_L(ga, la, s, r, ya) and O.axioms_L(ga, la, s, r) and singles(la) == ya):
                bad.append(f"side-{side}")
        if bad:
            fails.append((t, bad))
    assert report(capsys, "C10", not fails, time.perf_counter() - t0, 120,
                  f"100 instances, {tangles_full} tangle sets pass all of T1-T3, {len(fails)} failures"), fails[:5]


# --------------------------------------------------------------------------- C11

def _cross_linkage(g, order):
    """Largest number of disjoint paths between the two closed arcs cut at any u != v."""
    k, best = len(order), 0
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            inner = [order[(i + d) % k] for d in range(1, (j - i) % k)]
            outer = [order[(j + d) % k] for d in range(1, (i - j) % k)]
            best = max(best, O.max_disjoint_paths(g, inner + [order[i]], outer + [order[j]]))
    return best


def _vortical_ok(g, order, dec, rho):
    k = len(order)
    bags = dec.bags
    if len(bags) != k:
        return False
    st = order.index(dec.start) if dec.start is not None else 0
    lin = order[st:] + order[:st]
    if any(lin[i] not in bags[i] for i in range(k)):
        return False
    for v in g.vertices:
        idx = [i for i in range(k) if v in bags[i]]
        if not idx or idx != list(range(idx[0], idx[-1] + 1)):
            return False
    if any(not any(u in b and v in b for b in bags) for u, v in g.edges):
        return False
    return all(len(bags[i] & bags[j]) <= rho for i in range(k) for j in range(k) if i != j)


def test_c11_vortical_desk_check(capsys):
    t0 = time.perf_counter()
    rng = random.Random(1111)
    fails, done, rejected = [], 0, 0
    while done < 50:
        g = G.gnp_random(rng.randint(1, 7), rng.random() * 0.6, rng.randrange(1 << 30))
        order = tuple(rng.sample(g.vertices, rng.randint(1, min(5, g.n))))
        rho = rng.randint(0, 2)
        soc = Society(g, order)
        accepted = is_rho_vortex(soc, rho)
        assert accepted == (_cross_linkage(g, list(order)) <= rho)
        if not accepted:
            rejected += 1
            continue
        dec = find_vortical_decomposition(soc, rho)
        if dec is None or not _vortical_ok(g, list(soc.cyclic), dec, rho):
            fails.append((done, order, rho))
        done += 1
    assert report(capsys, "C11", not fails, time.perf_counter() - t0, 300,
                  f"50 accepted societies ({rejected} non-vortices skipped), {len(fails)} without a "
                  f"decomposition of adhesion <= rho"), fails[:5]
