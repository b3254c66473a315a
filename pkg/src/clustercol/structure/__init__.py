"""Decompositions, layerings, tangles, vortices, segregations and locations."""
from .decompositions import (LAYERED_CAP, TREEWIDTH_CAP, Layering, TreeDecomposition, bfs_layering,
                             decomposition_from_ordering, layered_treewidth_exact, layered_treewidth_upper,
                             min_fill_ordering, treewidth_exact, treewidth_heuristic, v_width,
                             validate_layering, validate_tree_decomposition, width)
from .flow import cyclic_arcs, max_disjoint_paths
from .societies import (Society, VorticalDecomposition, find_vortical_decomposition, is_rho_vortex,
                        is_tangle_central, location_interior, min_vortical_adhesion, segregation_type,
                        validate_location, validate_segregation, validate_vortical, vortex_witness,
                        vortical_adhesion)
from .tangles import (Tangle, TangleReport, check_t2, controls_minor, tangle_axioms_check, tangle_from_Y1,
                      tangle_minus_z)
