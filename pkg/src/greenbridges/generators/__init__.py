from .gadgets import (
    CONSTRUCTIONS,
    CVCInstance,
    GraphBuilder,
    connected_cubic_graphs,
    construct_bintree,
    construct_c3,
    construct_deg,
    construct_planar,
    crown,
    crowning_instance,
    crowning_min_cost,
    cvc_brute_force,
    min_vertex_cover_size,
    named_cubic_graph,
)
from .random_instances import (
    DEFAULT_CYCLE_CAP,
    GenerationError,
    assign_costs,
    gen_cycle_instance,
    gen_face_instance,
    gen_walk_instance,
    induced_cycles,
    random_points,
    rng_graph,
)
