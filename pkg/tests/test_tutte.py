import random

import networkx as nx
import pytest
import sympy
from hypothesis import given

from cyclesystems import (
    BudgetExceeded,
    GraphicMatroid,
    MultiGraph,
    TuttePolynomial,
    UniformMatroid,
    check_main_theorem,
    complete_graph,
    f_vector,
    free_matroid,
    h_vector,
    tutte,
    tutte_by_subsets,
)
from cyclesystems import gallery
from cyclesystems.tutte import h_from_f, to_json

from conftest import nx_graph, random_multigraph, random_system, seeds

FAN_TUTTE = {
    (4, 0): 1, (3, 0): 3, (2, 0): 3, (1, 0): 1, (2, 1): 3, (1, 1): 4,
    (0, 1): 1, (1, 2): 2, (0, 2): 2, (0, 3): 1,
}  # fmt: skip


def test_fan_polynomial(fan):
    assert tutte(fan).coefficients == FAN_TUTTE
    assert tutte(fan)(1, 1) == 21


def test_small_polynomials():
    triangle = GraphicMatroid(MultiGraph.from_pairs([(0, 1), (0, 2), (1, 2)]))
    assert tutte(triangle).coefficients == {(2, 0): 1, (1, 0): 1, (0, 1): 1}
    assert tutte(free_matroid(3)).coefficients == {(3, 0): 1}
    assert tutte(free_matroid(2).dual()).coefficients == {(0, 2): 1}
    assert tutte(UniformMatroid(2, 4)).coefficients == {(2, 0): 1, (1, 0): 2, (0, 1): 2, (0, 2): 1}


def test_matches_networkx(fan):
    x, y = sympy.symbols("x y")
    for g in (gallery.three_face_graph(), complete_graph(range(4)), gallery.doubled_triangle()):
        expected = sympy.Poly(nx.tutte_polynomial(nx_graph(g)), x, y)
        ours = {(i, j): c for (i, j), c in expected.terms()}
        assert tutte(GraphicMatroid(g)).coefficients == {k: int(v) for k, v in ours.items()}


def test_spanning_tree_count():
    for g in (complete_graph(range(5)), gallery.k33()):
        assert tutte(GraphicMatroid(g))(1, 1) == round(nx.number_of_spanning_trees(nx_graph(g)))


def test_h_vectors(fan):
    assert h_vector(fan) == [1, 3, 6, 7, 4]
    assert h_vector(GraphicMatroid(gallery.k33())) == [1, 4, 10, 20, 26, 20]
    assert h_vector(free_matroid(3)) == [1, 0, 0, 0]
    assert h_vector(free_matroid(2).dual()) == [1]


def test_f_vector_and_transform(fan):
    f = f_vector(fan)
    assert f == [1, 7, 21, 32, 21]
    assert h_from_f(f) == h_vector(fan)


def test_main_theorem_check(fan, fan_system):
    assert check_main_theorem(fan, fan_system)
    assert check_main_theorem(fan, fan_system, degrees=[1, 3, 6, 7, 4, 0])
    assert not check_main_theorem(fan, fan_system, degrees=[1, 3, 6, 7, 3])


def test_serialization(fan):
    poly = tutte(fan)
    assert TuttePolynomial.from_json(poly.to_json()) == poly
    assert to_json(poly).startswith('{"0,1": 1')
    assert str(tutte(GraphicMatroid(MultiGraph.from_pairs([(0, 1), (0, 2), (1, 2)])))) == "x^2 + x + y"


def test_call_budget():
    with pytest.raises(BudgetExceeded):
        tutte(GraphicMatroid(complete_graph(range(6))), max_calls=10)


# -- properties -----------------------------------------------------------------------


@given(seeds)
def test_recursion_matches_subset_expansion(seed):
    g = random_multigraph(random.Random(seed), max_vertices=6, max_edges=12)
    m = GraphicMatroid(g)
    assert len(m.elements) <= 12
    assert tutte(m) == tutte_by_subsets(m)


@given(seeds)
def test_dual_swaps_variables(seed):
    m = GraphicMatroid(random_multigraph(random.Random(seed), max_vertices=5, max_edges=10))
    assert tutte(m.dual()) == tutte(m).swap()
    assert h_vector(m) == h_from_f(f_vector(m))


@given(seeds)
def test_degree_vector_is_h_vector(seed):
    drawn = random_system(random.Random(seed))
    if drawn is None:
        return
    m, cs = drawn
    assert check_main_theorem(m, cs)
