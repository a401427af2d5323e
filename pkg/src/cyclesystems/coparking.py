"""Coparking functions of a cycle system.

A vector ``a`` is coparking when every nonempty index set ``sigma`` has some
``i`` with ``a[i] < |C_i & uu(sigma)|``, ``uu`` being the unique union.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .bitset import unique_union_masks
from .cycle_system import CycleSystem


@dataclass(frozen=True)
class BurnResult:
    """Outcome of the burning loop.

    On success ``order`` lists the indices in removal order; on failure
    ``stuck`` is the index set where no index could be removed.
    """

    is_coparking: bool
    order: tuple[int, ...] = ()
    stuck: frozenset = frozenset()


def _check_vector(cs: CycleSystem, a) -> tuple[int, ...]:
    a = tuple(int(x) for x in a)
    if len(a) != cs.g:
        raise ValueError(f"expected {cs.g} entries, got {len(a)}")
    if any(x < 0 for x in a):
        raise ValueError("entries must be non-negative")
    return a


def burn(cs: CycleSystem, a: Sequence[int], rng: random.Random | None = None) -> BurnResult:
    """Run the burning loop, removing the smallest eligible index each round.

    With ``rng`` an arbitrary eligible index is removed instead; the verdict
    does not depend on the choice.
    """
    a = _check_vector(cs, a)
    sigma = list(range(cs.g))
    order = []
    cycles = cs.cycles
    while sigma:
        uu = unique_union_masks(cycles[i] for i in sigma)
        eligible = [i for i in sigma if a[i] < (cycles[i] & uu).bit_count()]
        if not eligible:
            return BurnResult(False, tuple(order), frozenset(sigma))
        i = rng.choice(eligible) if rng is not None else eligible[0]
        sigma.remove(i)
        order.append(i)
    return BurnResult(True, tuple(order))


def verify(cs: CycleSystem, a: Sequence[int]) -> bool:
    return burn(cs, a).is_coparking


def verify_by_definition(cs: CycleSystem, a: Sequence[int]) -> bool:
    """Check every nonempty index set directly (exponential in g)."""
    a = _check_vector(cs, a)
    for size in range(1, cs.g + 1):
        for sigma in combinations(range(cs.g), size):
            uu = unique_union_masks(cs.cycles[i] for i in sigma)
            if not any(a[i] < (cs.cycles[i] & uu).bit_count() for i in sigma):
                return False
    return True


def _canonical(vectors):
    return sorted(vectors, key=lambda v: (sum(v), v))


def enumerate_coparking(cs: CycleSystem) -> list[tuple[int, ...]]:
    """All coparking functions, by degree then lexicographically.

    Breadth-first from the zero vector through unit increments; coparking
    functions form an order ideal, so every one is reached.  No coordinate
    can reach ``|C_i|`` (the singleton ``sigma = {i}`` forbids it).
    """
    g = cs.g
    caps = [c.bit_count() for c in cs.cycles]
    start = (0,) * g
    if not verify(cs, start):
        raise ValueError("zero vector rejected; not a cycle system")
    seen = {start}
    verdicts = {start: True}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for i in range(g):
            if a[i] + 1 >= caps[i]:
                continue
            b = a[:i] + (a[i] + 1,) + a[i + 1 :]
            if b in verdicts:
                continue
            verdicts[b] = ok = verify(cs, b)
            if ok:
                seen.add(b)
                queue.append(b)
    return _canonical(seen)


def degree_vector(cs: CycleSystem, functions: Iterable[Sequence[int]] | None = None) -> list[int]:
    if functions is None:
        functions = enumerate_coparking(cs)
    hist: list[int] = []
    for a in functions:
        d = sum(a)
        while len(hist) <= d:
            hist.append(0)
        hist[d] += 1
    return hist


def maximal_elements(functions: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    """Maximal vectors of an order ideal: those with no unit increment inside it."""
    pool = {tuple(a) for a in functions}
    out = []
    for a in pool:
        if not any(a[:i] + (a[i] + 1,) + a[i + 1 :] in pool for i in range(len(a))):
            out.append(a)
    return _canonical(out)


def max_degree(cs: CycleSystem) -> int:
    """``r(M) - (number of bridges)``."""
    m = cs.matroid
    _, bridges = m._loops_and_bridges()
    return m.full_rank - bridges.bit_count()


def is_pure(cs: CycleSystem, functions: Iterable[Sequence[int]] | None = None) -> bool:
    if functions is None:
        functions = enumerate_coparking(cs)
    target = max_degree(cs)
    return all(sum(a) == target for a in maximal_elements(functions))


def maximal_from_run(cs: CycleSystem, a: Sequence[int]) -> tuple[int, ...]:
    """Maximal coparking function above ``a`` built from its burning order.

    The ``k``-th removed index ``i_k`` gets ``|C_{i_k} & uu({i_k, ..., i_g})| - 1``.
    """
    result = burn(cs, a)
    if not result.is_coparking:
        raise ValueError(f"{tuple(a)} is not a coparking function")
    c = [0] * cs.g
    order = result.order
    for k, i in enumerate(order):
        uu = unique_union_masks(cs.cycles[j] for j in order[k:])
        c[i] = (cs.cycles[i] & uu).bit_count() - 1
    return tuple(c)


def lift_from_deletion(cs: CycleSystem, i: int, a_del: Sequence[int]) -> tuple[int, ...]:
    """Insert a zero at position ``i``."""
    a = tuple(a_del[:i]) + (0,) + tuple(a_del[i:])
    if not verify(cs, a):
        raise RuntimeError(f"lifted vector {a} is not coparking")
    return a


def lift_from_contraction(cs: CycleSystem, i: int, a_con: Sequence[int]) -> tuple[int, ...]:
    """Add one to coordinate ``i``."""
    a = tuple(a_con[:i]) + (a_con[i] + 1,) + tuple(a_con[i + 1 :])
    if not verify(cs, a):
        raise RuntimeError(f"lifted vector {a} is not coparking")
    return a


# -- export -----------------------------------------------------------------------


def to_jsonl(functions: Iterable[Sequence[int]]) -> str:
    return "".join(json.dumps({"a": list(a), "degree": sum(a)}) + "\n" for a in functions)


def hasse_dot(functions: Iterable[Sequence[int]]) -> str:
    """DOT graph of the cover relation (unit increments inside the set)."""
    pool = _canonical({tuple(a) for a in functions})
    members = set(pool)

    def name(a):
        return '"(' + ",".join(map(str, a)) + ')"'

    lines = ["graph coparking {", "  rankdir=BT;"]
    for a in pool:
        lines.append(f"  {name(a)};")
    for a in pool:
        for i in range(len(a)):
            b = a[:i] + (a[i] + 1,) + a[i + 1 :]
            if b in members:
                lines.append(f"  {name(a)} -- {name(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
