"""Reserve green bridge placement: exact solvers, approximation, generators and a benchmark harness.

Given a graph with positive edge costs and a family of habitats (vertex
sets), find a cheapest edge set F such that every habitat induces a
connected subgraph of G[F].
"""

from .approx import mst_on_induced, solve_apx
from .graph import (Graph, HabitatKind, InputError, Instance, IntegrityError, Solution,
                    classify_habitat, edge_induced_subgraph, induced_subgraph, is_connected_on,
                    verify_solution)
from .habitat_graph import (build_habitat_graph, matching_to_solution, max_habitats_per_edge,
                            simplify, solution_to_matching)
from .matching import Matching, WeightedGraph, brute_force_matching, max_weight_matching
from .metrics import compute_ratios, intersection_rate
from .planar import Embedding, Face, enumerate_faces, is_face_habitat, rotation_system_from_coordinates
from .result import SolveResult, Status
from .setpacking import brute_force_set_packing, max_weight_set_packing
from .solvers import (apply_k4_reduction, separate_connectivity_cut, solve, solve_auto,
                      solve_brute_force, solve_generic, solve_maxdeg2, solve_mwhm, solve_mwm,
                      solve_tree_habitats)

__version__ = "0.1.0"
