from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from cyclesystems import GraphicMatroid, MultiGraph, search_circuit_systems
from cyclesystems import gallery
from cyclesystems.io import read_graph6_file

DATA = Path(__file__).parent / "data"


# -- independent oracles ------------------------------------------------------------


def brute_circuits(m) -> set[frozenset]:
    """Minimal dependent sets by checking every subset with the rank oracle."""
    elems = m.elements
    dependent = []
    for k in range(1, len(elems) + 1):
        for sub in combinations(elems, k):
            s = frozenset(sub)
            if any(d <= s for d in dependent):
                continue
            if m.rank(s) < len(s):
                dependent.append(s)
    return set(dependent)


def brute_bases(m) -> set[frozenset]:
    r = m.rank()
    return {frozenset(s) for s in combinations(m.elements, r) if m.rank(s) == r}


def nx_graph(graph: MultiGraph) -> nx.MultiGraph:
    g = nx.MultiGraph()
    g.add_nodes_from(range(graph.n_vertices))
    for u, v, label in graph.edges:
        g.add_edge(u, v, key=label)
    return g


def graph_cycle_edge_sets(graph: MultiGraph) -> set[frozenset]:
    """Edge sets of simple cycles of a simple graph, via networkx."""
    g = nx.Graph()
    label = {}
    for u, v, lab in graph.edges:
        g.add_edge(u, v)
        label[frozenset((u, v))] = lab
    out = set()
    for cyc in nx.simple_cycles(g):
        n = len(cyc)
        out.add(frozenset(label[frozenset((cyc[k], cyc[(k + 1) % n]))] for k in range(n)))
    return out


def gf2_rank_numpy(rows) -> int:
    import numpy as np

    a = np.array(rows, dtype=np.uint8) % 2
    if a.size == 0:
        return 0
    rank = 0
    for col in range(a.shape[1]):
        pivot = next((r for r in range(rank, a.shape[0]) if a[r, col]), None)
        if pivot is None:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        for r in range(a.shape[0]):
            if r != rank and a[r, col]:
                a[r] ^= a[rank]
        rank += 1
    return rank


# -- catalog -------------------------------------------------------------------------


@lru_cache(maxsize=None)
def catalog(name: str) -> tuple:
    return tuple((token, g) for _, token, g in read_graph6_file(str(DATA / name)))


# -- fixtures -----------------------------------------------------------------------


@pytest.fixture
def fan():
    return GraphicMatroid(gallery.three_face_graph())


@pytest.fixture
def fan_system():
    return gallery.three_face_system()


@pytest.fixture
def doubled():
    return gallery.doubled_triangle_system()


# -- random instances ---------------------------------------------------------------

settings.register_profile("fixed", derandomize=True, deadline=None, max_examples=60, print_blob=True)
settings.load_profile("fixed")


def random_multigraph(rng: random.Random, max_vertices: int = 5, max_edges: int = 9, loops: bool = True) -> MultiGraph:
    """Connected multigraph: a random spanning tree plus extra edges."""
    n = rng.randint(1, max_vertices)
    pairs = [(rng.randrange(v), v) for v in range(1, n)]
    for _ in range(rng.randint(0, max(0, max_edges - len(pairs)))):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v and not loops:
            continue
        pairs.append((min(u, v), max(u, v)))
    rng.shuffle(pairs)
    return MultiGraph.from_pairs(pairs, labels=[f"e{k}" for k in range(len(pairs))], n_vertices=n)


def random_system(rng: random.Random, max_vertices: int = 5, max_edges: int = 9, loops: bool = True):
    """A (graph, cycle system) pair, or ``None`` when the first search finds nothing."""
    g = random_multigraph(rng, max_vertices, max_edges, loops)
    m = GraphicMatroid(g)
    found = search_circuit_systems(m, mode="first").systems
    return (m, found[0]) if found else None


seeds = st.integers(min_value=0, max_value=2**32 - 1)
