"""Clustered graph colouring machinery at desk scale.

Submodules: :mod:`graph_core`, :mod:`generators`, :mod:`containment`,
:mod:`structure`, :mod:`list_machinery`, :mod:`solver`, :mod:`harness`,
:mod:`io` and :mod:`cli`.
"""
from .graph_core import (Graph, GraphError, Separation, SizeError, Verdict, clustering_of, enumerate_separations,
                         is_separation, monochromatic_components, n_geq_s, n_lt_s)
from .generators import FamilySpec, standard_minor_example, standard_treewidth_example, triangular_grid
from .containment import has_kst_subgraph, has_minor, has_odd_minor
from .list_machinery import (enlarge_precolored, growth, progress, side_restrict, validate_L, validate_R)
from .solver import brute_force_min_clustering, dp_clustered_coloring

__version__ = "0.1.0"
