"""GF(2) bitset helpers: bit iteration, rank, and Gray-code scan order.

Rows and vectors are plain Python ints used as bitsets; XOR is addition.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence


def bit_indices(bits: int) -> Iterator[int]:
    """Yield the positions of the set bits of a nonnegative int, ascending."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def _reduce(row: int, pivots: dict[int, int]) -> int:
    while row:
        high = row.bit_length() - 1
        pivot = pivots.get(high)
        if pivot is None:
            break
        row ^= pivot
    return row


def gf2_rank(rows: Sequence[int]) -> int:
    """Rank over GF(2) of the span of the given bitset rows."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        reduced = _reduce(row, pivots)
        if reduced:
            pivots[reduced.bit_length() - 1] = reduced
            rank += 1
    return rank


def independent_row_indices(rows: Sequence[int]) -> list[int]:
    """Indices of a greedy maximal independent subset, scanning in input order."""
    pivots: dict[int, int] = {}
    kept: list[int] = []
    for idx, row in enumerate(rows):
        reduced = _reduce(row, pivots)
        if reduced:
            pivots[reduced.bit_length() - 1] = reduced
            kept.append(idx)
    return kept


def gray_code(i: int) -> int:
    """The i-th Gray code."""
    return i ^ (i >> 1)


@lru_cache(maxsize=6)
def gray_flip_sequence(k: int) -> bytes:
    """Flip order of a k-bit Gray walk: entry i-1 is the row index toggled at step i.

    The walk starts at the zero word; after step i the live word is the XOR of
    the rows selected by gray_code(i).  Length is 2**k - 1.
    """
    if k < 0 or k > 255:
        raise ValueError(f"unsupported Gray dimension {k}")
    seq = b""
    for j in range(k):
        seq = seq + bytes([j]) + seq
    return seq


__all__ = [
    "bit_indices",
    "gf2_rank",
    "independent_row_indices",
    "gray_code",
    "gray_flip_sequence",
]
