"""A walk through the list-assignment calculus on a six-vertex graph.

Run with ``python demos/list_calculus.py``. We pin a couple of vertices,
watch the neighbouring lists shrink, and then grow the pinned set until it
swallows every vertex with many pinned neighbours.
"""
from clustercol import generators as G
from clustercol.graph_core import n_geq_s
from clustercol.list_machinery import enlarge_precolored, growth, progress, singletons, validate_L, validate_R


def show(title, L):
    print(title)
    for v in sorted(L):
        mark = "*" if len(L[v]) == 1 else " "
        print(f"  {mark} {v}: {sorted(L[v])}")


g = G.cycle(6)
s, r = 2, 1
L = {0: frozenset({1}), 1: frozenset({2, 3}), 2: frozenset({1, 2, 3}),
     3: frozenset({1, 2, 3}), 4: frozenset({1, 2, 3}), 5: frozenset({2, 3})}
print(f"C6 with s={s}, r={r}; starred vertices are precoloured.")
show("start", L)
print("axioms hold:", bool(validate_L(g, L, s, r)))

F = {3}
Lp = progress(g, L, {2}, F, s)
show(f"\npin vertex 2 avoiding F={sorted(F)}; its neighbours lose the chosen colour", Lp)
print("axioms hold:", bool(validate_L(g, Lp, s, r, singletons(Lp))))

print("vertices with >= s pinned neighbours:", sorted(n_geq_s(g, singletons(Lp), s)))
Ls, Ys = enlarge_precolored(g, Lp, set(), 3, s, r)
show("\nenlarge: absorb them, once per precoloured colour and once more for ell=3", Ls)
print("N^{>=s} of the pinned set is now", sorted(n_geq_s(g, Ys, s)))

print("\nGrowth works on the (s, Y1, ell, r) variant with high colours.")
path = G.path(5)
R = {v: frozenset({1, 2, 3}) for v in path.vertices}
print("R axioms on the all-{1,2,3} lists of P5 (s=1, ell=0, r=0):", bool(validate_R(path, R, 1, 0, 0)))
trace = []
Rp, Yp = growth(path, R, {0}, 0, 1, 0, trace=trace)
for i, U, Fi in trace:
    print(f"  step {i}: absorb {sorted(U)} avoiding {sorted(Fi)}")
show("final lists", Rp)
print("precoloured set:", sorted(Yp))
