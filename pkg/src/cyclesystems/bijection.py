"""Deletion/contraction trees and the basis <-> coparking bijection.

A ground ordering ``xi`` is a sequence of labels, smallest first.  Every
node picks the ``xi``-largest element of the unique union, skipping loops,
and branches on deleting it (left) or contracting it (right).  Right edges
carry ``(e, i)`` where ``i`` is the root index of the cycle holding ``e``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .bitset import bits, unique_union_masks
from .cycle_system import CycleSystem
from .matroid import Label, Matroid


class TreeStalled(RuntimeError):
    """The unique union of the active cycles became empty at some node."""

    def __init__(self, message: str, ground: frozenset, sigma: tuple[int, ...]):
        super().__init__(message)
        self.ground = ground
        self.sigma = sigma


def _xi_rank(m: Matroid, xi: Sequence[Label] | None) -> dict[int, int]:
    """Map universe position -> position in ``xi``."""
    if xi is None:
        return {i: i for i in bits(m.ground)}
    xi = list(xi)
    positions = [m.index.get(lab) for lab in xi]
    if None in positions or len(set(positions)) != len(positions) or m.to_mask(xi) != m.ground:
        raise ValueError("ordering must list every ground element exactly once")
    return {p: k for k, p in enumerate(positions)}


def _pick(m: Matroid, cycles: Sequence[int], rank_of: dict[int, int]):
    """The branching element of a node and the cycle holding it.

    Returns ``(position, local index, skipped local indices)`` or raises
    ``TreeStalled``.
    """
    sigma = list(range(len(cycles)))
    skipped = []
    while sigma:
        uu = unique_union_masks(cycles[j] for j in sigma)
        if not uu:
            break
        e = max(bits(uu), key=rank_of.__getitem__)
        b = 1 << e
        i = next(j for j in sigma if cycles[j] & b)
        if m._rank(b) == 0:
            sigma.remove(i)
            skipped.append(i)
            continue
        return e, i, tuple(skipped)
    raise TreeStalled(
        "empty unique union before reaching a loop/bridge minor",
        m.to_set(m.ground),
        tuple(sigma),
    )


@dataclass(eq=False)
class DCNode:
    """One node of the tree; children are built on first access."""

    matroid: Matroid
    cycles: tuple[int, ...]
    coords: tuple[int, ...]
    rank_of: dict
    contracted: tuple = ()
    counts: tuple[int, ...] = ()

    @cached_property
    def is_leaf(self) -> bool:
        return self.matroid._is_trivial()

    @cached_property
    def split(self) -> tuple[int, int, tuple[int, ...]] | None:
        """``(position, local cycle index, skipped indices)`` of the branching element."""
        if self.is_leaf:
            return None
        return _pick(self.matroid, self.cycles, self.rank_of)

    @property
    def label(self) -> tuple[Label, int] | None:
        """Right-edge label ``(e, root index)`` below this node."""
        if self.split is None:
            return None
        e, i, _ = self.split
        return self.matroid.labels[e], self.coords[i]

    def _child(self, drop: set[int], matroid: Matroid, b: int, contracted, counts) -> DCNode:
        # cycles skipped at a loop leave the family for the whole subtree, as in
        # the iterative algorithm; e then has a single holder among the rest
        keep = [j for j in range(len(self.cycles)) if j not in drop]
        return DCNode(
            matroid,
            tuple(self.cycles[j] & ~b for j in keep),
            tuple(self.coords[j] for j in keep),
            self.rank_of,
            contracted,
            counts,
        )

    @cached_property
    def left(self) -> DCNode | None:
        if self.split is None:
            return None
        e, i, skipped = self.split
        b = 1 << e
        return self._child({i, *skipped}, self.matroid._delete(b), b, self.contracted, self.counts)

    @cached_property
    def right(self) -> DCNode | None:
        if self.split is None:
            return None
        e, i, skipped = self.split
        b = 1 << e
        counts = list(self.counts)
        counts[self.coords[i]] += 1
        return self._child(set(skipped), self.matroid._contract(b), b, self.contracted + (e,), tuple(counts))

    def basis_mask(self) -> int:
        _, bridges = self.matroid._loops_and_bridges()
        mask = bridges
        for e in self.contracted:
            mask |= 1 << e
        return mask


@dataclass(frozen=True)
class Leaf:
    basis: frozenset
    coparking: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.coparking)


def build_dc_tree(cs: CycleSystem, xi: Sequence[Label] | None = None) -> DCNode:
    """Root of the tree for ``cs`` under ``xi`` (ground order when omitted)."""
    m = cs.matroid
    return DCNode(m, cs.cycles, tuple(range(cs.g)), _xi_rank(m, xi), (), (0,) * cs.g)


def iter_nodes(root: DCNode) -> Iterator[tuple[DCNode, int]]:
    """Pre-order walk, left before right, yielding ``(node, depth)``."""
    stack = [(root, 0)]
    while stack:
        node, depth = stack.pop()
        yield node, depth
        if not node.is_leaf:
            stack.append((node.right, depth + 1))
            stack.append((node.left, depth + 1))


def leaf_nodes(root: DCNode) -> list[DCNode]:
    return [node for node, _ in iter_nodes(root) if node.is_leaf]


def leaves(root: DCNode) -> list[Leaf]:
    """Leaf labels in left-to-right order."""
    m = root.matroid
    return [Leaf(m.to_set(n.basis_mask()), n.counts) for n in leaf_nodes(root)]


def generalized_dc_tree(m: Matroid, cycles: Iterable[Iterable[Label]], xi: Sequence[Label] | None = None) -> list[Leaf]:
    """Run the tree construction on any ``g(M)`` cycles.

    Only a nonempty unique union is needed at each node.  Raises
    ``TreeStalled`` when some node has none.
    """
    masks = tuple(m.to_mask(c) for c in cycles)
    if len(masks) != m.corank:
        raise ValueError(f"need {m.corank} cycles, got {len(masks)}")
    root = DCNode(m, masks, tuple(range(len(masks))), _xi_rank(m, xi), (), (0,) * len(masks))
    return leaves(root)


# -- iterative bijections ---------------------------------------------------------


def _max_in_sigma(cycles, sigma, rank_of):
    uu = unique_union_masks(cycles[j] for j in sigma)
    if not uu:
        raise TreeStalled("empty unique union", frozenset(), tuple(sigma))
    e = max(bits(uu), key=rank_of.__getitem__)
    i = next(j for j in sigma if cycles[j] >> e & 1)
    return e, i


def basis_to_coparking(cs: CycleSystem, basis: Iterable[Label], xi: Sequence[Label] | None = None) -> tuple[int, ...]:
    m = cs.matroid
    b_mask = m.to_mask(basis)
    if not m._is_basis(b_mask):
        raise ValueError(f"{sorted(map(str, basis))} is not a basis")
    rank_of = _xi_rank(m, xi)
    cycles = list(cs.cycles)
    sigma = list(range(cs.g))
    a = [0] * cs.g
    while sigma:
        e, i = _max_in_sigma(cycles, sigma, rank_of)
        if not b_mask >> e & 1:
            sigma.remove(i)
        else:
            a[i] += 1
            cycles[i] &= ~(1 << e)
    return tuple(a)


def coparking_to_basis(cs: CycleSystem, a: Sequence[int], xi: Sequence[Label] | None = None) -> frozenset:
    from .coparking import verify

    if not verify(cs, a):
        raise ValueError(f"{tuple(a)} is not a coparking function")
    m = cs.matroid
    rank_of = _xi_rank(m, xi)
    cycles = list(cs.cycles)
    sigma = list(range(cs.g))
    a = list(a)
    basis = m.ground
    while sigma:
        e, i = _max_in_sigma(cycles, sigma, rank_of)
        a[i] -= 1
        if a[i] < 0:
            sigma.remove(i)
            basis &= ~(1 << e)
        else:
            cycles[i] &= ~(1 << e)
    return m.to_set(basis)


# -- export -----------------------------------------------------------------------


def _fmt_set(m: Matroid, s) -> str:
    mask = s if isinstance(s, int) else m.to_mask(s)
    return ",".join(str(x) for x in m.to_list(mask))


def leaves_tsv(root: DCNode) -> str:
    m = root.matroid
    rows = ["basis\tcoparking\tdegree"]
    for leaf in leaves(root):
        rows.append(f"{_fmt_set(m, leaf.basis)}\t{','.join(map(str, leaf.coparking))}\t{leaf.degree}")
    return "\n".join(rows) + "\n"


def tree_dot(root: DCNode) -> str:
    """Graphviz rendering; right edges are labelled ``e:C_i``."""
    ids: dict[int, str] = {}
    lines = ["digraph dctree {", "  node [shape=box];"]
    for k, (node, _) in enumerate(iter_nodes(root)):
        ids[id(node)] = f"n{k}"
        m = node.matroid
        text = "{" + _fmt_set(m, m.ground) + "}"
        if node.is_leaf:
            text += f"\\nB={{{_fmt_set(root.matroid, node.basis_mask())}}} a=({','.join(map(str, node.counts))})"
        lines.append(f'  n{k} [label="{text}"];')
    for node, _ in iter_nodes(root):
        if node.is_leaf:
            continue
        e, i = node.label
        lines.append(f"  {ids[id(node)]} -> {ids[id(node.left)]};")
        lines.append(f'  {ids[id(node)]} -> {ids[id(node.right)]} [label="{e}:C{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
