"""The zero-padded partition diagram and the row-sum linear counter.

A diagram for (m, n) lists every partition of n into at most m parts, padded
with zeros to exactly m columns, in descending reverse-lexicographic order::

    >>> [r for r in iter_rows(3, 3)]
    [(3, 0, 0), (2, 1, 0), (1, 1, 1)]

Each row stands for all linear arrangements of its occupancies, and there
are ``m! / prod(mult!)`` of those, where ``mult`` is the row's multiplicity
tuple (run lengths of equal values, zero boxes last).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterator, Optional

from .arith import DomainError, multinomial

Row = tuple  # tuple[int, ...], nonincreasing, length m


def _greedy_fill(total: int, slots: int, cap: int) -> Optional[list[int]]:
    """Lexicographically largest nonincreasing fill of ``total`` into ``slots`` entries <= cap."""
    if total > cap * slots:
        return None
    out = []
    for _ in range(slots):
        v = min(cap, total)
        out.append(v)
        total -= v
    return out


def iter_rows(m: int, n: int, max_part: Optional[int] = None) -> Iterator[Row]:
    """Stream the diagram rows for (m, n), optionally only those with largest part <= max_part.

    Rows are produced one at a time in O(m) each, so nothing is materialised.
    Since the largest part is nonincreasing down the diagram, restricting
    ``max_part`` just starts the stream at the first admissible row.
    """
    if m < 1:
        raise DomainError(f"need m >= 1 boxes, got {m}")
    if n < 0:
        raise DomainError(f"need n >= 0 objects, got {n}")
    cap = n if max_part is None else min(max_part, n)
    if cap < 0:
        return
    first = _greedy_fill(n, m, cap) if n else [0] * m
    if first is None:
        return
    row = first
    while True:
        yield tuple(row)
        # rightmost position that can be lowered by one with the tail refilled
        tail = 0
        for j in range(m - 1, -1, -1):
            tail += row[j]
            v = row[j] - 1
            if v < 0:
                continue
            fill = _greedy_fill(tail - v, m - 1 - j, v)
            if fill is not None:
                row = row[:j] + [v] + fill
                break
        else:
            return


@dataclass(frozen=True)
class Diagram:
    m: int
    n: int
    rows: tuple

    @property
    def k(self) -> int:
        return len(self.rows)


def generate_diagram(m: int, n: int) -> Diagram:
    return Diagram(m, n, tuple(iter_rows(m, n)))


def multiplicities(row: Row, m: Optional[int] = None) -> tuple:
    """Multiplicity tuple of a row: counts of each distinct nonzero value, then the zero count.

    >>> multiplicities((3, 0, 0))
    (1, 2)
    >>> multiplicities((1, 1, 1))
    (3, 0)
    """
    m = len(row) if m is None else m
    runs = [len(list(g)) for v, g in groupby(row) if v != 0]
    return tuple(runs) + (m - sum(runs),)


def row_permutations(row: Row, m: Optional[int] = None) -> int:
    """Distinct orderings of the row's occupancies over the m boxes."""
    return multinomial(multiplicities(row, m))


def first_row_with_cap(diagram: Diagram, cap: int) -> Optional[int]:
    """1-based index of the first row whose largest entry is <= cap, or None."""
    for i, row in enumerate(diagram.rows, start=1):
        if row[0] <= cap:
            return i
    return None


def occupied_boxes(row: Row) -> int:
    return sum(1 for a in row if a)


def count_linear_diagram(m: int, n: int, cap: int) -> int:
    """Capped linear count as a sum of row permutation counts over the admissible rows."""
    return sum(row_permutations(row, m) for row in iter_rows(m, n, max_part=cap))


def format_row(row: Row) -> str:
    return ",".join(map(str, row))


def dump_diagram(m: int, n: int, cap: Optional[int] = None) -> str:
    """Text dump: ``i: occupancies | multiplicities | perms``, with an ``i_l`` marker line."""
    lines = [f"# diagram m={m} n={n}"]
    marker_done = cap is None
    count = 0
    for i, row in enumerate(iter_rows(m, n), start=1):
        if not marker_done and row[0] <= cap:
            lines.append(f"-- i_l(l={cap}) = {i} --")
            marker_done = True
        mult = multiplicities(row, m)
        lines.append(f"{i}: {format_row(row)} | {format_row(mult)} | {multinomial(mult)}")
        count = i
    if not marker_done:
        lines.append(f"-- i_l(l={cap}) = none --")
    lines.append(f"# k={count}")
    return "\n".join(lines) + "\n"
