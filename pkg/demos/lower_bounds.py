"""Why small clustering is impossible on a few tiny graphs.

Run with ``python demos/lower_bounds.py``. Everything here is exhaustive, so
the numbers printed are exact.
"""
from clustercol import generators as G
from clustercol.containment import has_kst_subgraph, has_minor
from clustercol.harness import verify_hex
from clustercol.solver import brute_force_min_clustering
from clustercol.structure import treewidth_exact

print("Hex boards: any 2-colouring of the eta x eta board has a long monochromatic path.")
for row in verify_hex(3).instances:
    print(f"  {row.id}: {row.ops} colourings checked, ok={row.verdict}")

print("\nApex recursion on top of a hex board.")
for s, eta in ((1, 3), (2, 2)):
    g = G.standard_minor_example(s, eta)
    best, witness = brute_force_min_clustering(g, s + 1)
    print(f"  s={s}: {g.n} vertices, {g.m} edges")
    print(f"    K_{s + 4} minor present: {has_minor(g, G.complete(s + 4)) is not None}")
    print(f"    K_{s},{s + 6} subgraph present: {has_kst_subgraph(g, s, s + 6) is not None}")
    print(f"    best clustering with {s + 1} colours: {best} (target was {eta})")

print("\nPaths glued under an apex: bounded treewidth, still no 2-colouring with clustering 2.")
g = G.standard_treewidth_example(2, 3)
tw, _ = treewidth_exact(g)
best, _ = brute_force_min_clustering(g, 2)
print(f"  {g.n} vertices, treewidth {tw}, K_2,4 present: {has_kst_subgraph(g, 2, 4) is not None}, "
      f"best 2-clustering {best}")
