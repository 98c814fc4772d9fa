"""Switching of edge-coloured graphs under permutation groups, switchable
homomorphisms with checkable witnesses, and target classification."""

from .coloured_graph import (
    EdgeColouredGraph,
    GraphError,
    abelianize_graph,
    cycle_graph,
    k2,
    parse_graph,
    serialize_graph,
    spanning_forest,
    structure,
)
from .dichotomy import (
    build_theorem7_cycles,
    classify_target,
    indicator_construction,
    replay_certificate,
    smooth_and_periods,
    solve_mono_bipartite_target,
)
from .homomorphism import Witness, check_witness, decide_switch_hom, find_hom
from .oracle import brute_decide, enumerate_switch_class
from .perm_groups import (
    GroupError,
    Permutation,
    PermGroup,
    abelianization,
    block_system,
    commutator_subgroup,
    generate_group,
    group_properties,
    parse_group,
)
from .switch_graph import build_switch_graph
from .switching import (
    apply_sequence,
    can_switch_monochromatic,
    classify_cycle,
    single_edge_recolour,
    switch_equivalent,
    switch_vertex,
)

__version__ = "0.1.0"
