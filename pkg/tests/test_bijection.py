import random

import pytest
from hypothesis import given

from cyclesystems import (
    CycleSystem,
    GraphicMatroid,
    MultiGraph,
    TreeStalled,
    basis_to_coparking,
    build_dc_tree,
    coparking_to_basis,
    degree_vector,
    enumerate_coparking,
    generalized_dc_tree,
    h_vector,
    is_pure,
    leaves,
    maximal_elements,
)
from cyclesystems import gallery
from cyclesystems.bijection import iter_nodes, leaves_tsv, tree_dot

from conftest import random_system, seeds

DOUBLED_LEAVES = [("ab", (0, 0)), ("ac", (1, 0)), ("bc", (2, 0)), ("ad", (0, 1)), ("bd", (1, 1))]


def test_doubled_triangle_leaves(doubled):
    got = [("".join(sorted(leaf.basis)), leaf.coparking) for leaf in leaves(build_dc_tree(doubled, "abcd"))]
    assert got == DOUBLED_LEAVES


def test_doubled_triangle_right_edges(doubled):
    labels = [node.label for node, _ in iter_nodes(build_dc_tree(doubled, "abcd")) if not node.is_leaf]
    assert labels == [("d", 1), ("c", 0), ("b", 0), ("b", 0)]


def test_iterative_algorithms_on_doubled_triangle(doubled):
    for basis, a in DOUBLED_LEAVES:
        assert basis_to_coparking(doubled, basis, "abcd") == a
        assert coparking_to_basis(doubled, a, "abcd") == frozenset(basis)


def test_bad_inputs(doubled):
    with pytest.raises(ValueError):
        basis_to_coparking(doubled, "cd", "abcd")
    with pytest.raises(ValueError):
        coparking_to_basis(doubled, (2, 1), "abcd")
    with pytest.raises(ValueError):
        build_dc_tree(doubled, "abc")
    with pytest.raises(ValueError):
        build_dc_tree(doubled, "abcc")


def test_intro_bijection(fan, fan_system):
    tree = leaves(build_dc_tree(fan_system))
    assert {leaf.basis for leaf in tree} == set(fan.bases())
    assert {leaf.coparking for leaf in tree} == set(enumerate_coparking(fan_system))
    for leaf in tree:
        assert basis_to_coparking(fan_system, leaf.basis) == leaf.coparking
        assert coparking_to_basis(fan_system, leaf.coparking) == leaf.basis


def test_exports(doubled):
    root = build_dc_tree(doubled, "abcd")
    tsv = leaves_tsv(root).splitlines()
    assert tsv[0] == "basis\tcoparking\tdegree"
    assert tsv[1:] == ["a,b\t0,0\t0", "a,c\t1,0\t1", "b,c\t2,0\t2", "a,d\t0,1\t1", "b,d\t1,1\t2"]
    dot = tree_dot(root)
    assert dot.count('[label="d:C1"]') == 1 and dot.count('[label="b:C0"]') == 2
    assert dot.count(" -> ") == 8


def test_loop_holders_are_skipped():
    # graph6 'Df{' with a system whose tree meets a loop holding the maximum
    g = MultiGraph.from_pairs([(0, 1), (0, 3), (1, 3), (0, 4), (1, 4), (3, 4), (2, 3), (2, 4)])
    m = GraphicMatroid(g)
    cs = CycleSystem.from_sets(m, [["01", "03", "13"], ["01", "04", "14"], ["03", "04", "34"], ["13", "14", "23", "24"]])
    xi = ["23", "03", "04", "01", "13", "34", "14", "24"]
    tree = leaves(build_dc_tree(cs, xi))
    assert {leaf.basis for leaf in tree} == set(m.bases())
    assert {leaf.coparking for leaf in tree} == set(enumerate_coparking(cs))
    for leaf in tree:
        assert basis_to_coparking(cs, leaf.basis, xi) == leaf.coparking


def test_generalized_tree_on_k33():
    m = GraphicMatroid(gallery.k33())
    found = generalized_dc_tree(m, gallery.k33_four_cycles(), gallery.k33_edge_order())
    vectors = [leaf.coparking for leaf in found]
    assert len(set(vectors)) == len(vectors) == 81
    assert degree_vector(None, vectors) == [1, 4, 10, 20, 26, 20] == h_vector(m)
    assert set(maximal_elements(vectors)) == gallery.k33_maximal_vectors()
    assert {leaf.basis for leaf in found} == set(m.bases())


def test_generalized_tree_stalls():
    m = GraphicMatroid(MultiGraph.from_pairs([(0, 1), (0, 1), (0, 1)], labels="xyz"))
    with pytest.raises(TreeStalled):
        generalized_dc_tree(m, ["xy", "xy"])
    with pytest.raises(ValueError):
        generalized_dc_tree(m, ["xy"])


# -- properties -----------------------------------------------------------------------


@given(seeds)
def test_tree_is_a_bijection(seed):
    rng = random.Random(seed)
    drawn = random_system(rng)
    if drawn is None:
        return
    m, cs = drawn
    xi = list(m.elements)
    rng.shuffle(xi)
    tree = leaves(build_dc_tree(cs, xi))
    bases = set(m.bases())
    functions = enumerate_coparking(cs)
    assert len(tree) == len(bases) == len(functions)
    assert {leaf.basis for leaf in tree} == bases
    assert {leaf.coparking for leaf in tree} == set(functions)
    assert is_pure(cs, functions)
    for leaf in tree:
        assert basis_to_coparking(cs, leaf.basis, xi) == leaf.coparking
        assert coparking_to_basis(cs, leaf.coparking, xi) == leaf.basis
