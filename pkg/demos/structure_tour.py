"""Decompositions, tangles, vortices and the exact solver on desk-sized graphs.

Run with ``python demos/structure_tour.py``.
"""
from clustercol import generators as G
from clustercol.structure import (Society, find_vortical_decomposition, is_rho_vortex, layered_treewidth_upper,
                                  tangle_axioms_check, tangle_from_Y1, treewidth_exact, treewidth_heuristic, vortical_adhesion,
                                  vortex_witness)
from clustercol.solver import dp_clustered_coloring

grid = G.triangular_grid(3)
tw, td = treewidth_exact(grid)
ltw, _, lay = layered_treewidth_upper(grid)
print(f"3x3 hex board: treewidth {tw} over {len(td.bags)} bags, layered width {ltw} from BFS layers")

t = tangle_from_Y1(grid, 2, grid.vertices)
rep = tangle_axioms_check(grid, t.separations, 2)
print(f"order-2 candidate from all vertices: {len(t)} separations, tangle={rep.ok}")
tree = G.random_tree(7, 1)
rep = tangle_axioms_check(tree, tangle_from_Y1(tree, 3, tree.vertices).separations, 3)
print(f"order-3 candidate on a 7-vertex tree: first failing axiom {rep.first_failure()[0]}")

c6 = Society(G.cycle(6), (0, 2, 4))
print(f"\nC6 with boundary 0,2,4: 1-vortex={is_rho_vortex(c6, 1)}, witness {vortex_witness(c6, 1)}")
dec = find_vortical_decomposition(c6, 1)
print(f"  a vortical decomposition: {[sorted(b) for b in dec.bags]} with adhesion {vortical_adhesion(c6, dec)}")

g = G.standard_treewidth_example(2, 4)
_, td = treewidth_heuristic(g)
for eta in (3, 4):
    c = dp_clustered_coloring(g, td, eta, k=2)
    print(f"\n{g.n}-vertex apex-over-paths graph, 2 colours, clustering <= {eta}: "
          f"{'colourable' if c else 'impossible'}")
