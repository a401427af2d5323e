"""Cycle systems on matroids, coparking functions and their bijection with bases."""

from .bijection import (
    DCNode,
    Leaf,
    TreeStalled,
    basis_to_coparking,
    build_dc_tree,
    coparking_to_basis,
    generalized_dc_tree,
    leaves,
)
from .coparking import (
    BurnResult,
    burn,
    degree_vector,
    enumerate_coparking,
    is_pure,
    lift_from_contraction,
    lift_from_deletion,
    max_degree,
    maximal_elements,
    maximal_from_run,
    verify,
    verify_by_definition,
)
from .cycle_system import (
    Budget,
    CycleSystem,
    InvalidCycleSystem,
    cographic_circuit_system,
    cone_circuit_system,
    contract_transform,
    delete_transform,
    exact_inverse,
    find_fundamental_circuit_system,
    fundamental_circuits,
    firing_matrix,
    has_unique_union_property,
    is_cycle,
    is_cycle_system,
    is_fundamental,
    is_m_matrix,
    search_circuit_systems,
    two_sum_cycle_system,
    unique_union,
)
from .matroid import (
    BudgetExceeded,
    CircuitMatroid,
    GraphicMatroid,
    Matroid,
    MultiGraph,
    UniformMatroid,
    circuit_space_rank,
    complete_bipartite_graph,
    complete_graph,
    direct_sum,
    free_matroid,
    parallel_connection,
    two_sum,
)
from .tutte import TuttePolynomial, check_main_theorem, f_vector, h_vector, tutte, tutte_by_subsets

__all__ = [name for name in dir() if not name.startswith("_")]
