"""Young-diagram arithmetic.

Partitions are plain tuples of positive integers in weakly decreasing order;
trailing zeros are always trimmed so that equal diagrams hash equally.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional, Tuple

Partition = Tuple[int, ...]


def normalize(parts: Iterable[int]) -> Partition:
    """Return ``parts`` as a canonical partition tuple (trailing zeros dropped).

    Raises ValueError for negative or increasing sequences.
    """
    p = tuple(int(x) for x in parts)
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part in {p}")
    end = len(p)
    while end and p[end - 1] == 0:
        end -= 1
    return p[:end]


def weight(lam: Iterable[int]) -> int:
    return sum(lam)


def transpose(lam: Iterable[int]) -> Partition:
    lam = normalize(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def contains(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """True iff the diagram of ``mu`` sits inside the diagram of ``lam``."""
    lam, mu = normalize(lam), normalize(mu)
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def in_box(lam: Partition, rows: int, cols: int) -> bool:
    return len(lam) <= rows and (not lam or lam[0] <= cols)


def pad(lam: Iterable[int], length: int) -> Tuple[int, ...]:
    lam = normalize(lam)
    if len(lam) > length:
        raise ValueError(f"{lam} has more than {length} parts")
    return lam + (0,) * (length - len(lam))


@lru_cache(maxsize=None)
def _enumerate(total: int, max_rows: int, max_part: int) -> Tuple[Partition, ...]:
    if total == 0:
        return ((),)
    if max_rows == 0 or max_part == 0:
        return ()
    out = []
    for first in range(min(total, max_part), 0, -1):
        for rest in _enumerate(total - first, max_rows - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(weight: int, max_rows: int,
                         max_cols: Optional[int] = None) -> list[Partition]:
    """All partitions of ``weight`` with at most ``max_rows`` parts, each at most
    ``max_cols`` (``None`` for unbounded).

    Partitions come out in the canonical order used throughout the package:
    lexicographically decreasing, so ``(3)`` precedes ``(2, 1)``.
    """
    if weight < 0 or max_rows < 0:
        raise ValueError("weight and max_rows must be nonnegative")
    cap = weight if max_cols is None else min(max_cols, weight)
    return list(_enumerate(weight, max_rows, cap))


def box_partitions(rows: int, cols: int) -> list[Partition]:
    """Every partition inside the ``rows x cols`` rectangle, graded by weight."""
    out: list[Partition] = []
    for s in range(rows * cols + 1):
        out.extend(enumerate_partitions(s, rows, cols))
    return out


def order_key(lam: Partition) -> tuple:
    """Sort key realising the canonical order (weight first, then lex-descending)."""
    return (sum(lam), tuple(-x for x in lam))


def parse(text: str) -> Partition:
    """Parse ``"2,1"`` (or an empty string) into a partition."""
    text = text.strip().strip("[]()")
    if not text:
        return ()
    return normalize(int(x) for x in text.split(","))
