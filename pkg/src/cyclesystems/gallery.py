"""Small named instances used throughout the tests and demos."""

from __future__ import annotations

from .cycle_system import CycleSystem
from .matroid import GraphicMatroid, MultiGraph, complete_bipartite_graph


def three_face_graph() -> MultiGraph:
    """Fan on v0..v4: spokes 1-4 from v0, rim edges 5 (v1v2), 6 (v2v3), 7 (v3v4)."""
    return MultiGraph.from_pairs(
        [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)],
        labels=[1, 2, 3, 4, 5, 6, 7],
    )


def three_face_system() -> CycleSystem:
    """The three bounded faces, in the order {3,4,7}, {2,3,6}, {1,2,5}."""
    return CycleSystem.from_sets(GraphicMatroid(three_face_graph()), [{3, 4, 7}, {2, 3, 6}, {1, 2, 5}])


def three_face_dual_graph() -> MultiGraph:
    """Planar dual of the fan, with shared edge labels (vertex 0 is the outer face)."""
    # q=0, w1=1, w2=2, w3=3
    return MultiGraph.from_pairs(
        [(0, 3), (3, 2), (2, 1), (0, 1), (0, 3), (0, 2), (0, 1)],
        labels=[1, 2, 3, 4, 5, 6, 7],
    )


def three_face_coparking() -> list[tuple[int, int, int]]:
    """Coparking functions of :func:`three_face_system`, transcribed by hand."""
    return [
        (0, 0, 0),
        (1, 0, 0), (0, 1, 0), (0, 0, 1),
        (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2),
        (2, 0, 1), (2, 1, 0), (1, 2, 0), (1, 1, 1), (0, 2, 1), (1, 0, 2), (0, 1, 2),
        (2, 0, 2), (2, 1, 1), (1, 2, 1), (1, 1, 2),
    ]  # fmt: skip


def doubled_triangle() -> MultiGraph:
    """Triangle a=v0v1, b=v0v2, c=v1v2 plus d parallel to c."""
    return MultiGraph.from_pairs([(0, 1), (0, 2), (1, 2), (1, 2)], labels="abcd")


def doubled_triangle_system() -> CycleSystem:
    return CycleSystem.from_sets(GraphicMatroid(doubled_triangle()), ["abc", "cd"])


def unique_system_graph() -> MultiGraph:
    """Seven vertices 1..7 and thirteen edges; its only circuit system is
    {3476, 145, 245, 457, 134, 234, 567} (as vertex cycles)."""
    pairs = [(4, 1), (4, 2), (4, 3), (4, 5), (4, 7), (1, 3), (1, 5), (2, 3), (2, 5), (3, 6), (5, 6), (5, 7), (6, 7)]
    return MultiGraph.from_pairs([tuple(sorted(p)) for p in pairs], n_vertices=8)


def unique_system_cycles() -> list[frozenset]:
    """The expected system as edge sets (labels ``uv`` with ``u < v``)."""
    vertex_cycles = [(3, 4, 7, 6), (1, 4, 5), (2, 4, 5), (7, 4, 5), (1, 3, 4), (2, 3, 4), (5, 6, 7)]
    out = []
    for cyc in vertex_cycles:
        n = len(cyc)
        out.append(frozenset("".join(map(str, sorted((cyc[k], cyc[(k + 1) % n])))) for k in range(n)))
    return out


def k33() -> MultiGraph:
    """K_{3,3} on {0,1,2} and {3,4,5}."""
    return complete_bipartite_graph(3, 3)


def k33_four_cycles() -> list[set[str]]:
    """Four 4-cycles through edge 03; not a cycle system, but every node of
    the tree built from them has a nonempty unique union."""
    return [{"03", "05", "23", "25"}, {"03", "05", "13", "15"}, {"03", "04", "13", "14"}, {"03", "04", "23", "24"}]


def k33_edge_order() -> list[str]:
    return ["24", "04", "15", "03", "14", "23", "05", "25", "13"]


def k33_maximal_vectors() -> set[tuple[int, ...]]:
    seeds = [(0, 2, 1, 2), (0, 2, 0, 3), (0, 1, 1, 3), (0, 1, 3, 1), (0, 3, 1, 1)]
    return {v[k:] + v[:k] for v in seeds for k in range(4)}


def no_system_six_vertex_graphs() -> list[MultiGraph]:
    """K_{3,3} and two supergraphs of it: the 6-vertex graphs without circuit systems."""
    base = [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]
    return [MultiGraph.from_pairs(base), MultiGraph.from_pairs(base + [(1, 2)]), MultiGraph.from_pairs(base + [(1, 2), (4, 5)])]


def no_fundamental_six_vertex_graphs() -> list[MultiGraph]:
    """Double cone over a square, then two edge deletions of it."""
    first = [(0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (1, 3), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 0)]
    first = sorted({tuple(sorted(p)) for p in first})
    second = [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3), (5, 0), (5, 1), (5, 2), (5, 3)]
    third = [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 3), (5, 0), (5, 1), (5, 2), (5, 3)]
    return [MultiGraph.from_pairs(first), MultiGraph.from_pairs(second), MultiGraph.from_pairs(third)]
