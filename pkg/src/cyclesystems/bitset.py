"""Int-bitset helpers shared by every module.

Element subsets are plain Python ints: bit ``i`` set means the element at
universe position ``i`` is present.
"""

from __future__ import annotations

from typing import Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def from_indices(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: cardinality first, then lexicographic on positions."""
    return (mask.bit_count(), tuple(bits(mask)))


def unique_union_masks(masks) -> int:
    """Elements that occur in exactly one of ``masks``."""
    once = 0
    twice = 0
    for m in masks:
        twice |= once & m
        once |= m
    return once & ~twice


def gf2_rank(rows) -> int:
    """Rank over GF(2) of a list of int bit rows."""
    basis: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in basis:
                basis[top] = row
                break
            row ^= basis[top]
    return len(basis)
