import json
import random
from itertools import product

import pytest
from hypothesis import given

from cyclesystems import (
    CycleSystem,
    GraphicMatroid,
    MultiGraph,
    burn,
    contract_transform,
    degree_vector,
    delete_transform,
    enumerate_coparking,
    free_matroid,
    is_pure,
    lift_from_contraction,
    lift_from_deletion,
    max_degree,
    maximal_elements,
    maximal_from_run,
    verify,
    verify_by_definition,
)
from cyclesystems import gallery
from cyclesystems.coparking import hasse_dot, to_jsonl

from conftest import random_multigraph, random_system, seeds


def test_intro_verdicts(fan_system):
    assert verify(fan_system, (2, 0, 2))
    assert burn(fan_system, (2, 0, 2)).order == (1, 0, 2)
    result = burn(fan_system, (2, 2, 0))
    assert not result.is_coparking
    assert result.stuck == frozenset({0, 1})


def test_burn_order_does_not_change_verdict(fan_system):
    rng = random.Random(0)
    for a in product(range(3), repeat=3):
        expected = verify_by_definition(fan_system, a)
        assert all(burn(fan_system, a, rng).is_coparking == expected for _ in range(5))


def test_bad_vectors_are_rejected(fan_system):
    with pytest.raises(ValueError):
        verify(fan_system, (0, 0))
    with pytest.raises(ValueError):
        verify(fan_system, (0, -1, 0))


def test_enumeration_matches_hand_list(fan_system):
    found = enumerate_coparking(fan_system)
    assert set(found) == set(gallery.three_face_coparking())
    assert len(found) == 21
    assert found[0] == (0, 0, 0)
    assert [sum(a) for a in found] == sorted(sum(a) for a in found)


def test_enumeration_matches_brute_force(fan_system):
    caps = [c.bit_count() for c in fan_system.cycles]
    brute = {a for a in product(*(range(c + 1) for c in caps)) if verify_by_definition(fan_system, a)}
    assert set(enumerate_coparking(fan_system)) == brute


def test_degree_vector_and_maxima(fan_system):
    functions = enumerate_coparking(fan_system)
    assert degree_vector(fan_system, functions) == [1, 3, 6, 7, 4]
    assert maximal_elements(functions) == [(1, 1, 2), (1, 2, 1), (2, 0, 2), (2, 1, 1)]
    assert max_degree(fan_system) == 4
    assert is_pure(fan_system, functions)


def test_doubled_triangle(doubled):
    assert enumerate_coparking(doubled) == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]
    assert degree_vector(doubled) == [1, 2, 2]


def test_trivial_system():
    cs = CycleSystem.from_sets(free_matroid(2), [])
    assert enumerate_coparking(cs) == [()]
    assert degree_vector(cs) == [1]
    loops = free_matroid(2).dual()
    cs = CycleSystem.from_sets(loops, [{1}, {2}])
    assert enumerate_coparking(cs) == [(0, 0)]


def test_maximal_from_run(fan_system):
    assert maximal_from_run(fan_system, (0, 0, 0)) == (1, 1, 2)
    functions = set(enumerate_coparking(fan_system))
    maxima = set(maximal_elements(functions))
    for a in functions:
        top = maximal_from_run(fan_system, a)
        assert top in maxima
        assert all(x <= y for x, y in zip(a, top))
    with pytest.raises(ValueError):
        maximal_from_run(fan_system, (2, 2, 0))


def test_lifts_partition_the_intro_functions(fan_system):
    i = fan_system.container(7)
    deleted = enumerate_coparking(delete_transform(fan_system, 7))
    contracted = enumerate_coparking(contract_transform(fan_system, 7))
    up = {lift_from_deletion(fan_system, i, a) for a in deleted}
    across = {lift_from_contraction(fan_system, i, a) for a in contracted}
    assert len(deleted) + len(contracted) == 21
    assert up.isdisjoint(across)
    assert up | across == set(enumerate_coparking(fan_system))


def test_exports(fan_system):
    rows = [json.loads(line) for line in to_jsonl([(0, 0, 0), (2, 0, 2)]).splitlines()]
    assert rows == [{"a": [0, 0, 0], "degree": 0}, {"a": [2, 0, 2], "degree": 4}]
    dot = hasse_dot(enumerate_coparking(fan_system))
    assert dot.startswith("graph coparking {")
    assert dot.count(" -- ") == sum(
        1
        for a in gallery.three_face_coparking()
        for i in range(3)
        if a[:i] + (a[i] + 1,) + a[i + 1 :] in set(gallery.three_face_coparking())
    )


# -- properties -----------------------------------------------------------------------


@given(seeds)
def test_burning_agrees_with_definition(seed):
    rng = random.Random(seed)
    drawn = random_system(rng, max_vertices=6, max_edges=12)
    if drawn is None:
        return
    _, cs = drawn
    assert cs.g <= 12
    caps = [c.bit_count() for c in cs.cycles]
    for _ in range(40):
        a = tuple(rng.randrange(c + 1) for c in caps)
        assert verify(cs, a) == verify_by_definition(cs, a)


@given(seeds)
def test_coparking_functions_are_pure(seed):
    drawn = random_system(random.Random(seed))
    if drawn is None:
        return
    _, cs = drawn
    functions = enumerate_coparking(cs)
    assert is_pure(cs, functions)
    assert max(sum(a) for a in functions) == max_degree(cs)


@given(seeds)
def test_deletion_contraction_partition(seed):
    rng = random.Random(seed)
    drawn = random_system(rng)
    if drawn is None:
        return
    m, cs = drawn
    choices = [e for e in cs.unique_union() if m.rank({e}) == 1]
    if not choices:
        return
    e = rng.choice(sorted(choices))
    i = cs.container(e)
    deleted = enumerate_coparking(delete_transform(cs, e))
    contracted = enumerate_coparking(contract_transform(cs, e))
    whole = enumerate_coparking(cs)
    assert len(deleted) + len(contracted) == len(whole)
    up = {lift_from_deletion(cs, i, a) for a in deleted}
    across = {lift_from_contraction(cs, i, a) for a in contracted}
    assert up.isdisjoint(across) and up | across == set(whole)


def test_random_multigraph_is_connected():
    rng = random.Random(11)
    for _ in range(20):
        g = random_multigraph(rng)
        assert isinstance(g, MultiGraph) and g.is_connected()
        assert GraphicMatroid(g).full_rank == g.n_vertices - 1
