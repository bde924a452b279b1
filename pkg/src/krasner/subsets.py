"""Subsets of a finite carrier stored as Python integers used as bit vectors.

Bit ``i`` set means element ``i`` is a member.  Python ints are unbounded, so
carriers larger than a machine word need no special handling.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(elems: Iterable[int]) -> int:
    mask = 0
    for e in elems:
        mask |= 1 << e
    return mask


def members(mask: int) -> Iterator[int]:
    """Yield the indices set in ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def member_list(mask: int) -> list[int]:
    return list(members(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(size: int) -> int:
    return (1 << size) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def singleton(e: int) -> int:
    return 1 << e


def sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Order subsets by size, then lexicographically by member indices."""
    return popcount(mask), tuple(members(mask))
