"""Cycle systems: unique unions, verification, search and transforms.

Cycle indices are 0-based throughout.  A "family key" in the search is an
int bitmask over positions in the matroid's canonical circuit list.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from .bitset import bits, unique_union_masks
from .matroid import (
    BudgetExceeded,
    DualView,
    GraphicMatroid,
    Label,
    Matroid,
    MultiGraph,
    two_sum,
)


class InvalidCycleSystem(ValueError):
    """Raised when a family fails the cycle-system conditions.

    ``sigma`` is the offending index set when the failure is an independent
    unique union, otherwise ``None``.
    """

    def __init__(self, message: str, sigma: frozenset | None = None):
        super().__init__(message)
        self.sigma = sigma


@dataclass(frozen=True)
class CycleSystem:
    matroid: Matroid
    cycles: tuple[int, ...]

    @classmethod
    def from_sets(cls, matroid: Matroid, sets: Iterable[Iterable[Label]], check: bool = True) -> CycleSystem:
        cs = cls(matroid, tuple(matroid.to_mask(s) for s in sets))
        if check:
            problem = cycle_system_violation(matroid, cs.cycles)
            if problem is not None:
                raise problem
        return cs

    @property
    def g(self) -> int:
        return len(self.cycles)

    def __len__(self):
        return len(self.cycles)

    def sets(self) -> list[frozenset]:
        return [self.matroid.to_set(c) for c in self.cycles]

    def lists(self) -> list[list]:
        return [self.matroid.to_list(c) for c in self.cycles]

    def unique_union_mask(self, sigma: Iterable[int] | None = None) -> int:
        if sigma is None:
            return unique_union_masks(self.cycles)
        return unique_union_masks(self.cycles[i] for i in sigma)

    def unique_union(self, sigma: Iterable[int] | None = None) -> frozenset:
        return self.matroid.to_set(self.unique_union_mask(sigma))

    def container(self, e: Label, sigma: Iterable[int] | None = None) -> int:
        """Index of the unique cycle (among ``sigma``) holding ``e``."""
        b = self.matroid.bit(e)
        idx = range(self.g) if sigma is None else sigma
        holders = [i for i in idx if self.cycles[i] & b]
        if len(holders) != 1:
            raise ValueError(f"{e!r} lies in {len(holders)} cycles, not exactly one")
        return holders[0]

    def to_json(self) -> dict:
        return {"cycles": self.lists()}


def unique_union(family: Iterable[Iterable]) -> frozenset:
    """Elements lying in exactly one member of ``family``."""
    counts: dict = {}
    for member in family:
        for x in set(member):
            counts[x] = counts.get(x, 0) + 1
    return frozenset(x for x, k in counts.items() if k == 1)


def _is_cycle_mask(m: Matroid, k: int) -> bool:
    r = m._rank(k)
    return all(m._rank(k & ~(1 << i)) == r for i in bits(k))


def is_cycle(m: Matroid, elements: Iterable[Label]) -> bool:
    """True when the restriction to ``elements`` has no bridges."""
    return _is_cycle_mask(m, m.to_mask(elements))


def _uup_violation(m: Matroid, masks: Sequence[int]) -> tuple[int, ...] | None:
    """First sigma (smallest first) whose unique union is independent."""
    dependent: dict[int, bool] = {}
    for size in range(1, len(masks) + 1):
        for sigma in combinations(range(len(masks)), size):
            uu = unique_union_masks(masks[i] for i in sigma)
            ok = dependent.get(uu)
            if ok is None:
                ok = dependent[uu] = not m._is_independent(uu)
            if not ok:
                return sigma
    return None


def has_unique_union_property(m: Matroid, family: Iterable[Iterable[Label]]) -> bool:
    masks = [m.to_mask(s) for s in family]
    return _uup_violation(m, masks) is None


def cycle_system_violation(m: Matroid, masks: Sequence[int]) -> InvalidCycleSystem | None:
    if len(masks) != m.corank:
        return InvalidCycleSystem(f"family has {len(masks)} members but the corank is {m.corank}")
    for i, k in enumerate(masks):
        if k & ~m.ground:
            return InvalidCycleSystem(f"member {i} leaves the ground set")
        if not _is_cycle_mask(m, k):
            return InvalidCycleSystem(f"member {i} is not a cycle")
    sigma = _uup_violation(m, masks)
    if sigma is not None:
        return InvalidCycleSystem(f"unique union of {list(sigma)} is independent", frozenset(sigma))
    return None


def is_cycle_system(m: Matroid, family: Iterable[Iterable[Label]]) -> bool:
    return cycle_system_violation(m, [m.to_mask(s) for s in family]) is None


# -- search -----------------------------------------------------------------


@dataclass
class Budget:
    """Resource limits for the exhaustive searches."""

    seconds: float | None = None
    max_level_size: int | None = None
    _start: float = field(default_factory=time.monotonic, repr=False)

    def check(self, level: int, size: int = 0):
        if self.seconds is not None and time.monotonic() - self._start > self.seconds:
            raise BudgetExceeded(f"time budget of {self.seconds}s exhausted", last_level=level)
        if self.max_level_size is not None and size > self.max_level_size:
            raise BudgetExceeded(f"level {level + 1} exceeds {self.max_level_size} families", last_level=level)


@dataclass
class SearchResult:
    systems: list[CycleSystem]
    count: int
    level_sizes: list[int]
    circuits: tuple[int, ...]


class _Dependence:
    def __init__(self, m: Matroid):
        self.m = m
        self.cache: dict[int, bool] = {}

    def __call__(self, mask: int) -> bool:
        hit = self.cache.get(mask)
        if hit is None:
            hit = self.cache[mask] = mask.bit_count() > 0 and not self.m._is_independent(mask)
        return hit


def _system_from_key(m, circuits, key) -> CycleSystem:
    return CycleSystem(m, tuple(circuits[i] for i in bits(key)))


def search_circuit_systems(
    m: Matroid,
    mode: str = "all",
    budget: Budget | None = None,
    checkpoint: str | os.PathLike | None = None,
) -> SearchResult:
    """Find circuit systems of ``m``.

    ``all`` and ``count`` build the levels L_1, ..., L_g of families with the
    unique union property; a family ``A + C`` enters L_{k+1} when its unique
    union is dependent and every k-subfamily containing ``C`` is already in
    L_k.  ``first`` runs the same membership test depth-first and stops at the
    first complete family.
    """
    if mode not in ("first", "all", "count"):
        raise ValueError(f"unknown mode {mode!r}")
    budget = budget or Budget()
    circuits = m.circuit_masks
    g = m.corank
    if g == 0:
        return SearchResult([CycleSystem(m, ())], 1, [], circuits)
    if len(circuits) < g:
        return SearchResult([], 0, [], circuits)
    if mode == "first":
        return _search_first(m, circuits, g, budget)
    return _search_levels(m, circuits, g, budget, checkpoint, keep=(mode == "all"))


def _search_levels(m, circuits, g, budget, checkpoint, keep):
    dependent = _Dependence(m)
    n = len(circuits)
    # key -> (elements seen at least once, elements seen at least twice)
    level: dict[int, tuple[int, int]] = {}
    sizes: list[int] = []
    k = 1
    if checkpoint is not None:
        restored = _load_checkpoint(checkpoint, circuits, g)
        if restored is not None:
            k, keys, sizes = restored
            for key in keys:
                once = twice = 0
                for i in bits(key):
                    twice |= once & circuits[i]
                    once |= circuits[i]
                level[key] = (once, twice)
    if not level:
        k = 1
        sizes = []
        for i, c in enumerate(circuits):
            if dependent(c):
                level[1 << i] = (c, 0)
        sizes.append(len(level))
        _save_checkpoint(checkpoint, circuits, g, 1, level, sizes)
    while k < g and level:
        nxt: dict[int, tuple[int, int]] = {}
        for key, (once, twice) in level.items():
            budget.check(k, len(nxt))
            members = list(bits(key))
            for j in range(key.bit_length(), n):
                c = circuits[j]
                t2 = twice | (once & c)
                t1 = once | c
                if not dependent(t1 & ~t2):
                    continue
                bigger = key | (1 << j)
                if all((bigger ^ (1 << i)) in level for i in members):
                    nxt[bigger] = (t1, t2)
        level = nxt
        k += 1
        sizes.append(len(level))
        _save_checkpoint(checkpoint, circuits, g, k, level, sizes)
    systems = [_system_from_key(m, circuits, key) for key in sorted(level, key=lambda x: tuple(bits(x)))] if keep else []
    return SearchResult(systems, len(level) if k == g else 0, sizes, circuits)


def _search_first(m, circuits, g, budget):
    dependent = _Dependence(m)
    n = len(circuits)
    memo: dict[int, bool] = {}

    def has_uup(key):
        hit = memo.get(key)
        if hit is not None:
            return hit
        ok = dependent(unique_union_masks(circuits[i] for i in bits(key)))
        if ok and key & (key - 1):
            ok = all(has_uup(key ^ (1 << i)) for i in bits(key))
        memo[key] = ok
        return ok

    def dfs(key, size):
        budget.check(size)
        if size == g:
            return key
        for j in range(key.bit_length(), n - (g - size) + 1):
            bigger = key | (1 << j)
            if has_uup(bigger):
                found = dfs(bigger, size + 1)
                if found is not None:
                    return found
        return None

    found = dfs(0, 0)
    systems = [] if found is None else [_system_from_key(m, circuits, found)]
    return SearchResult(systems, len(systems), [], circuits)


def _checkpoint_file(directory, k):
    return os.path.join(directory, f"level_{k:03d}.json")


def _save_checkpoint(directory, circuits, g, k, level, sizes):
    if directory is None:
        return
    os.makedirs(directory, exist_ok=True)
    data = {"circuits": list(circuits), "g": g, "k": k, "sizes": sizes, "keys": sorted(level)}
    tmp = _checkpoint_file(directory, k) + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(data, fh)
    os.replace(tmp, _checkpoint_file(directory, k))


def _load_checkpoint(directory, circuits, g):
    if not os.path.isdir(directory):
        return None
    names = sorted(f for f in os.listdir(directory) if f.startswith("level_") and f.endswith(".json"))
    if not names:
        return None
    with open(os.path.join(directory, names[-1])) as fh:
        data = json.load(fh)
    if data["circuits"] != list(circuits) or data["g"] != g:
        raise ValueError(f"checkpoint in {directory} belongs to a different matroid")
    return data["k"], data["keys"], data["sizes"]


# -- transforms ---------------------------------------------------------------


def delete_transform(cs: CycleSystem, e: Label) -> CycleSystem:
    """Cycle system on ``M \\ e``: drop the unique cycle holding ``e``.

    ``e`` must lie in the unique union of the whole system; use
    ``cs.container(e)`` for the index that disappears.
    """
    i = cs.container(e)
    m = cs.matroid
    return CycleSystem(m._delete(m.bit(e)), cs.cycles[:i] + cs.cycles[i + 1 :])


def contract_transform(cs: CycleSystem, e: Label) -> CycleSystem:
    m = cs.matroid
    b = m.bit(e)
    if m._rank(b) == 0:
        raise ValueError(f"{e!r} is a loop; contraction needs a non-loop")
    return CycleSystem(m._contract(b), tuple(c & ~b for c in cs.cycles))


# -- constructions -------------------------------------------------------------


def cone_graph(graph: MultiGraph, cone_labels: Sequence[Label] | None = None) -> tuple[MultiGraph, list]:
    """Cone over ``graph``: a new last vertex joined to every old vertex."""
    n = graph.n_vertices
    if cone_labels is None:
        cone_labels = [f"f{v}" for v in range(n)]
    if set(cone_labels) & set(graph.labels):
        raise ValueError("cone edge labels collide with the graph's labels")
    edges = list(graph.edges) + [(v, n, lab) for v, lab in zip(range(n), cone_labels)]
    return MultiGraph(n + 1, tuple(edges)), list(cone_labels)


def cone_circuit_system(graph: MultiGraph, cone_labels: Sequence[Label] | None = None) -> CycleSystem:
    """One triangle ``{f_u, e, f_v}`` through the cone vertex per edge ``e = uv``."""
    if any(u == v for u, v, _ in graph.edges):
        raise ValueError("cone construction needs a loopless graph")
    cone, spokes = cone_graph(graph, cone_labels)
    m = GraphicMatroid(cone)
    sets = [{spokes[u], lab, spokes[v]} for u, v, lab in graph.edges]
    cs = CycleSystem(m, tuple(m.to_mask(s) for s in sets))
    problem = cycle_system_violation(m, cs.cycles)
    if problem is not None:
        raise RuntimeError(f"cone construction produced an invalid system: {problem}")
    return cs


def cographic_circuit_system(graph: MultiGraph, root: int = 0) -> CycleSystem:
    """Vertex stars of the non-root vertices, as a system for the dual of M(G)."""
    if not graph.is_connected():
        raise ValueError("graph must be connected")
    m = DualView(GraphicMatroid(graph))
    stars = []
    for v in range(graph.n_vertices):
        if v == root:
            continue
        stars.append({lab for a, b, lab in graph.edges if a != b and v in (a, b)})
    cs = CycleSystem(m, tuple(m.to_mask(s) for s in stars))
    problem = cycle_system_violation(m, cs.cycles)
    if problem is not None:
        raise InvalidCycleSystem(f"vertex stars do not form a cycle system: {problem}", problem.sigma)
    return cs


def two_sum_cycle_system(cs_m: CycleSystem, cs_n: CycleSystem, p: Label) -> CycleSystem:
    """System on the 2-sum along ``p``.

    The cycle of ``cs_m`` holding ``p`` is dropped and glued onto every cycle
    of ``cs_n`` through ``p``; order is the rest of ``cs_m`` then ``cs_n``.
    """
    m, n = cs_m.matroid, cs_n.matroid
    pm = m.bit(p)
    if not cs_m.unique_union_mask() & pm:
        raise ValueError(f"{p!r} is not in the unique union of the first system")
    i = cs_m.container(p)
    if not any(d & n.bit(p) for d in cs_n.cycles):
        raise ValueError(f"{p!r} lies in no cycle of the second system")
    glued = cs_m.matroid.to_set(cs_m.cycles[i]) - {p}
    e = two_sum(m, n, p)
    tilde_c = [m.to_set(c) for j, c in enumerate(cs_m.cycles) if j != i]
    tilde_d = []
    for d in cs_n.sets():
        tilde_d.append((d - {p}) | glued if p in d else d)
    return CycleSystem(e, tuple(e.to_mask(s) for s in tilde_c + tilde_d))


# -- fundamental circuit systems ---------------------------------------------------


def is_fundamental(cs: CycleSystem) -> bool:
    """Whether some basis has exactly these cycles as its fundamental circuits.

    With ``B = E - {e_1..e_g}`` each ``e_i`` may lie in ``C_i`` only, so the
    candidates for ``e_i`` are the elements ``C_i`` holds uniquely.
    """
    m = cs.matroid
    if cs.g == 0:
        return True
    for c in cs.cycles:
        if m._is_independent(c) or not all(m._is_independent(c ^ (1 << x)) for x in bits(c)):
            return False
    uu = cs.unique_union_mask()
    choices = [list(bits(c & uu)) for c in cs.cycles]
    for picks in product(*choices):
        outside = 0
        for e in picks:
            outside |= 1 << e
        if m._is_basis(m.ground & ~outside):
            return True
    return False


def fundamental_circuits(m: Matroid, basis: Iterable[Label]) -> list[frozenset]:
    b = m.to_mask(basis)
    return [m.to_set(m._fundamental_circuit(b, e)) for e in bits(m.ground & ~b)]


def find_fundamental_circuit_system(m: Matroid, budget: Budget | None = None) -> CycleSystem | None:
    """First basis (lexicographic) whose fundamental circuits form a system."""
    for b in m.basis_masks(cap=None):
        if budget is not None:
            budget.check(0)
        masks = tuple(m._fundamental_circuit(b, e) for e in bits(m.ground & ~b))
        if _uup_violation(m, masks) is None:
            return CycleSystem(m, masks)
    return None


# -- chip-firing matrix ------------------------------------------------------------


def firing_matrix(cs: CycleSystem) -> np.ndarray:
    """``L[i, i] = |C_i|`` and ``L[i, j] = -|C_i & C_j|``."""
    g = cs.g
    out = np.zeros((g, g), dtype=np.int64)
    for i, ci in enumerate(cs.cycles):
        for j, cj in enumerate(cs.cycles):
            out[i, j] = ci.bit_count() if i == j else -(ci & cj).bit_count()
    return out


def exact_inverse(matrix) -> list[list[Fraction]] | None:
    """Gauss-Jordan inverse over the rationals; ``None`` when singular."""
    a = [[Fraction(int(x)) for x in row] for row in np.asarray(matrix)]
    n = len(a)
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = a[col][col]
        a[col] = [x / scale for x in a[col]]
        inv[col] = [x / scale for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


def is_m_matrix(matrix) -> bool:
    """Z-matrix with positive diagonal whose exact inverse is entrywise >= 0."""
    a = np.asarray(matrix)
    n = a.shape[0]
    for i in range(n):
        for j in range(n):
            if (i == j and a[i, j] <= 0) or (i != j and a[i, j] > 0):
                return False
    inv = exact_inverse(a)
    if inv is None:
        return False
    return all(x >= 0 for row in inv for x in row)
