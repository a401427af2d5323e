"""Matroids given by a rank oracle over a fixed labelled universe.

Every matroid carries a ``labels`` tuple (its universe) and a ``ground``
bitmask selecting the elements actually present.  Minors and duals keep
the universe of the matroid they were derived from, so element subsets
stay comparable across a whole deletion/contraction tree.

Public methods take and return label sets; the ``_``-prefixed and
``*_masks`` methods work directly on int bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Sequence

from .bitset import bits, canonical_key, gf2_rank

Label = Hashable


class BudgetExceeded(RuntimeError):
    """An enumeration or search ran past its configured resource limit."""

    def __init__(self, message: str, last_level: int | None = None):
        super().__init__(message)
        self.last_level = last_level


@dataclass(frozen=True)
class MultiGraph:
    """Undirected multigraph; loops and parallel edges allowed."""

    n_vertices: int
    edges: tuple[tuple[int, int, Label], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        seen = set()
        for u, v, lab in self.edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"edge {lab!r} has an endpoint outside 0..{self.n_vertices - 1}")
            if lab in seen:
                raise ValueError(f"duplicate edge label {lab!r}")
            seen.add(lab)

    @classmethod
    def from_pairs(cls, pairs, labels=None, n_vertices=None):
        """Build from ``(u, v)`` pairs; default labels are ``"uv"`` strings."""
        pairs = [tuple(p) for p in pairs]
        if n_vertices is None:
            n_vertices = 1 + max((max(p) for p in pairs), default=-1)
        if labels is None:
            labels = [edge_name(u, v) for u, v in pairs]
        return cls(n_vertices, tuple((u, v, lab) for (u, v), lab in zip(pairs, labels)))

    @property
    def labels(self):
        return tuple(lab for _, _, lab in self.edges)

    def is_connected(self) -> bool:
        if self.n_vertices <= 1:
            return True
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = self.n_vertices
        for u, v, _ in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
        return comps == 1


def edge_name(u: int, v: int) -> str:
    a, b = min(u, v), max(u, v)
    if b < 10:
        return f"{a}{b}"
    return f"{a}-{b}"


def complete_graph(vertices: Sequence[int]) -> MultiGraph:
    vs = list(vertices)
    pairs = [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]
    return MultiGraph.from_pairs(pairs, n_vertices=max(vs) + 1)


def complete_bipartite_graph(m: int, n: int) -> MultiGraph:
    pairs = [(i, m + j) for i in range(m) for j in range(n)]
    return MultiGraph.from_pairs(pairs, n_vertices=m + n)


class Matroid:
    """Base class: subclasses implement ``_rank`` on bitmasks of the universe."""

    def __init__(self, labels: Sequence[Label], ground: int | None = None, index: dict | None = None):
        self.labels = tuple(labels)
        if index is None:
            index = {lab: i for i, lab in enumerate(self.labels)}
            if len(index) != len(self.labels):
                raise ValueError("ground labels must be distinct")
        self.index = index
        self.ground = (1 << len(self.labels)) - 1 if ground is None else ground

    # -- conversions --------------------------------------------------

    def to_mask(self, elements: Iterable[Label]) -> int:
        mask = 0
        for e in elements:
            i = self.index.get(e)
            if i is None or not (self.ground >> i) & 1:
                raise ValueError(f"{e!r} is not in the ground set")
            mask |= 1 << i
        return mask

    def bit(self, e: Label) -> int:
        return self.to_mask((e,))

    def to_set(self, mask: int) -> frozenset:
        return frozenset(self.labels[i] for i in bits(mask))

    def to_list(self, mask: int) -> list:
        return [self.labels[i] for i in bits(mask)]

    @property
    def elements(self) -> list:
        return self.to_list(self.ground)

    def __len__(self):
        return self.ground.bit_count()

    # -- rank oracle --------------------------------------------------

    def _rank(self, mask: int) -> int:
        raise NotImplementedError

    def _is_independent(self, mask: int) -> bool:
        return self._rank(mask) == mask.bit_count()

    @cached_property
    def full_rank(self) -> int:
        return self._rank(self.ground)

    @property
    def corank(self) -> int:
        return len(self) - self.full_rank

    def rank(self, elements: Iterable[Label] | None = None) -> int:
        if elements is None:
            return self.full_rank
        return self._rank(self.to_mask(elements))

    def is_independent(self, elements: Iterable[Label]) -> bool:
        return self._is_independent(self.to_mask(elements))

    # -- loops, bridges, circuits ---------------------------------------

    def _loops_and_bridges(self) -> tuple[int, int]:
        loops = bridges = 0
        r = self.full_rank
        for i in bits(self.ground):
            b = 1 << i
            if self._rank(b) == 0:
                loops |= b
            elif self._rank(self.ground & ~b) == r - 1:
                bridges |= b
        return loops, bridges

    def loops_and_bridges(self) -> tuple[frozenset, frozenset]:
        loops, bridges = self._loops_and_bridges()
        return self.to_set(loops), self.to_set(bridges)

    def _is_trivial(self) -> bool:
        """True when every element is a loop or a bridge."""
        r = self.full_rank
        for i in bits(self.ground):
            b = 1 << i
            if self._rank(b) and self._rank(self.ground & ~b) == r:
                return False
        return True

    @cached_property
    def circuit_masks(self) -> tuple[int, ...]:
        """All circuits in canonical order.

        Independent sets are grown one element at a time (only by elements
        above the current maximum), so supersets of a dependent set are never
        generated.  A dependent extension ``I + e`` is a circuit exactly when
        each of its other same-size subsets is still independent.
        """
        positions = list(bits(self.ground))
        found = []
        level = {0}
        while level:
            nxt = set()
            for indep in level:
                top = indep.bit_length()
                for e in positions:
                    if e < top:
                        continue
                    s = indep | (1 << e)
                    if self._is_independent(s):
                        nxt.add(s)
                    elif all((s ^ (1 << f)) in level for f in bits(indep)):
                        found.append(s)
            level = nxt
        found.sort(key=canonical_key)
        return tuple(found)

    def circuits(self) -> list[frozenset]:
        return [self.to_set(c) for c in self.circuit_masks]

    def _fundamental_circuit(self, basis: int, e: int) -> int:
        circuit = 1 << e
        for f in bits(basis):
            if self._is_independent((basis ^ (1 << f)) | (1 << e)):
                circuit |= 1 << f
        return circuit

    def fundamental_circuit(self, basis: Iterable[Label], e: Label) -> frozenset:
        b = self.to_mask(basis)
        if not self._is_basis(b):
            raise ValueError("not a basis")
        eb = self.bit(e)
        if b & eb:
            raise ValueError(f"{e!r} lies in the basis")
        return self.to_set(self._fundamental_circuit(b, eb.bit_length() - 1))

    def _is_basis(self, mask: int) -> bool:
        return mask.bit_count() == self.full_rank and self._is_independent(mask)

    def is_basis(self, elements: Iterable[Label]) -> bool:
        return self._is_basis(self.to_mask(elements))

    def basis_masks(self, cap: int | None = 1_000_000) -> Iterator[int]:
        """Bases in lexicographic order, by backtracking over independent sets."""
        positions = list(bits(self.ground))
        n, r = len(positions), self.full_rank
        count = 0

        def extend(start, current, size):
            nonlocal count
            if size == r:
                count += 1
                if cap is not None and count > cap:
                    raise BudgetExceeded(f"more than {cap} bases")
                yield current
                return
            for k in range(start, n - (r - size) + 1):
                s = current | (1 << positions[k])
                if self._is_independent(s):
                    yield from extend(k + 1, s, size + 1)

        yield from extend(0, 0, 0)

    def bases(self, cap: int | None = 1_000_000) -> Iterator[frozenset]:
        for b in self.basis_masks(cap):
            yield self.to_set(b)

    def independent_set_counts(self) -> list[int]:
        """Number of independent sets of each cardinality 0..r."""
        positions = list(bits(self.ground))
        counts = []
        level = {0}
        while level:
            counts.append(len(level))
            nxt = set()
            for indep in level:
                top = indep.bit_length()
                for e in positions:
                    if e >= top and self._is_independent(indep | (1 << e)):
                        nxt.add(indep | (1 << e))
            level = nxt
        return counts

    # -- derived matroids ----------------------------------------------

    def _base_and_contracted(self) -> tuple[Matroid, int]:
        return self, 0

    def _delete(self, mask: int) -> Matroid:
        base, contracted = self._base_and_contracted()
        return MinorView(base, self.ground & ~mask, contracted)

    def _contract(self, mask: int) -> Matroid:
        base, contracted = self._base_and_contracted()
        return MinorView(base, self.ground & ~mask, contracted | (mask & self.ground))

    def delete(self, elements: Iterable[Label]) -> Matroid:
        return self._delete(self.to_mask(elements))

    def contract(self, elements: Iterable[Label]) -> Matroid:
        return self._contract(self.to_mask(elements))

    def restrict(self, elements: Iterable[Label]) -> Matroid:
        return self._delete(self.ground & ~self.to_mask(elements))

    def dual(self) -> Matroid:
        return DualView(self)

    # -- connectivity --------------------------------------------------

    def _component_masks(self) -> list[int]:
        parent = {i: i for i in bits(self.ground)}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.circuit_masks:
            members = list(bits(c))
            r0 = find(members[0])
            for m in members[1:]:
                rm = find(m)
                if rm != r0:
                    parent[rm] = r0
        groups: dict[int, int] = {}
        for i in bits(self.ground):
            root = find(i)
            groups[root] = groups.get(root, 0) | (1 << i)
        # loops form singleton circuits and bridges lie in none, so both end up alone
        return sorted(groups.values(), key=lambda m: (m & -m).bit_length())

    def components(self) -> list[frozenset]:
        return [self.to_set(m) for m in self._component_masks()]

    def is_connected(self) -> bool:
        return len(self._component_masks()) <= 1

    def __repr__(self):
        return f"{type(self).__name__}(|E|={len(self)}, r={self.full_rank})"


class UniformMatroid(Matroid):
    def __init__(self, m: int, n: int, labels: Sequence[Label] | None = None):
        if not 0 <= m <= n:
            raise ValueError("uniform matroid needs 0 <= m <= n")
        super().__init__(range(1, n + 1) if labels is None else labels)
        self.m, self.n = m, n

    def _rank(self, mask):
        return min((mask & self.ground).bit_count(), self.m)

    def __repr__(self):
        return f"UniformMatroid({self.m}, {self.n})"


def free_matroid(n: int, labels=None) -> UniformMatroid:
    return UniformMatroid(n, n, labels)


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; rank by union-find over the edges."""

    def __init__(self, graph: MultiGraph):
        super().__init__(graph.labels)
        self.graph = graph
        self._ends = [(u, v) for u, v, _ in graph.edges]

    def _rank(self, mask):
        parent = list(range(self.graph.n_vertices))
        r = 0
        ends = self._ends
        mask &= self.ground
        while mask:
            low = mask & -mask
            u, v = ends[low.bit_length() - 1]
            mask ^= low
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            if u != v:
                parent[u] = v
                r += 1
        return r

    def __repr__(self):
        return f"GraphicMatroid(|V|={self.graph.n_vertices}, |E|={len(self)})"


class CircuitMatroid(Matroid):
    """Matroid given by its list of circuits."""

    def __init__(self, labels: Sequence[Label], circuits: Iterable[Iterable[Label]], check: bool = True):
        super().__init__(labels)
        masks = sorted({self.to_mask(c) for c in circuits}, key=canonical_key)
        if check:
            if 0 in masks:
                raise ValueError("the empty set cannot be a circuit")
            for a in masks:
                for b in masks:
                    if a != b and a & b == a:
                        raise ValueError("a listed circuit contains another")
        self._circuits = masks

    def _contains_circuit(self, mask):
        return any(c & mask == c for c in self._circuits)

    def _is_independent(self, mask):
        return not self._contains_circuit(mask & self.ground)

    def _rank(self, mask):
        indep = 0
        for i in bits(mask & self.ground):
            if not self._contains_circuit(indep | (1 << i)):
                indep |= 1 << i
        return indep.bit_count()

    @cached_property
    def circuit_masks(self):
        return tuple(self._circuits)

    def to_json(self) -> dict:
        return {"ground": list(self.labels), "circuits": [self.to_list(c) for c in self._circuits]}

    @classmethod
    def from_json(cls, data: dict) -> CircuitMatroid:
        return cls(data["ground"], data["circuits"])


class DualView(Matroid):
    def __init__(self, base: Matroid):
        super().__init__(base.labels, base.ground, base.index)
        self.base = base

    def _rank(self, mask):
        mask &= self.ground
        return mask.bit_count() + self.base._rank(self.ground & ~mask) - self.base.full_rank

    def dual(self):
        return self.base

    def __repr__(self):
        return f"DualView({self.base!r})"


class MinorView(Matroid):
    """``base`` restricted to ``ground`` after contracting ``contracted``."""

    def __init__(self, base: Matroid, ground: int, contracted: int = 0):
        super().__init__(base.labels, ground, base.index)
        self.base = base
        self.contracted = contracted
        self._offset = base._rank(contracted)

    def _rank(self, mask):
        return self.base._rank((mask & self.ground) | self.contracted) - self._offset

    def _base_and_contracted(self):
        return self.base, self.contracted

    def __repr__(self):
        return f"MinorView({self.base!r}, |E|={len(self)}, contracted={self.contracted.bit_count()})"


class DirectSum(Matroid):
    def __init__(self, parts: Sequence[Matroid]):
        labels: list = []
        self._slices = []
        for part in parts:
            offset = len(labels)
            self._slices.append((part, offset, (1 << len(part.labels)) - 1))
            labels.extend(part.labels)
        ground = 0
        for part, offset, _ in self._slices:
            ground |= part.ground << offset
        super().__init__(labels, ground)
        self.parts = tuple(parts)

    def _rank(self, mask):
        return sum(part._rank((mask >> off) & width & part.ground) for part, off, width in self._slices)


def direct_sum(matroids: Sequence[Matroid]) -> DirectSum:
    return DirectSum(matroids)


def _check_gluing(m: Matroid, n: Matroid, p: Label):
    common = set(m.elements) & set(n.elements)
    if common != {p}:
        raise ValueError(f"ground sets must meet exactly in {p!r}, found {sorted(map(str, common))}")
    for mat in (m, n):
        loops, bridges = mat.loops_and_bridges()
        if p in loops or p in bridges:
            raise ValueError(f"{p!r} is a loop or a bridge")


def _minimal(masks):
    masks = sorted(set(masks), key=canonical_key)
    out = []
    for c in masks:
        if not any(d & c == d for d in out):
            out.append(c)
    return out


def parallel_connection(m: Matroid, n: Matroid, p: Label) -> CircuitMatroid:
    """Circuit-defined parallel connection of ``m`` and ``n`` along ``p``."""
    _check_gluing(m, n, p)
    labels = m.elements + [x for x in n.elements if x != p]
    circ_m = m.circuits()
    circ_n = n.circuits()
    circuits = [c for c in circ_m] + [d for d in circ_n]
    circuits += [(c | d) - {p} for c in circ_m if p in c for d in circ_n if p in d]
    out = CircuitMatroid(labels, [], check=False)
    out._circuits = _minimal(out.to_mask(c) for c in circuits)
    return out


def two_sum(m: Matroid, n: Matroid, p: Label) -> CircuitMatroid:
    par = parallel_connection(m, n, p)
    pb = par.bit(p)
    labels = [x for x in par.labels if x != p]
    out = CircuitMatroid(labels, [par.to_set(c) for c in par.circuit_masks if not c & pb], check=False)
    return out


def circuit_space_rank(matroid: Matroid, vectors: Iterable[Iterable[Label]]) -> int:
    """GF(2) rank of the indicator vectors of ``vectors``."""
    return gf2_rank(matroid.to_mask(v) for v in vectors)
