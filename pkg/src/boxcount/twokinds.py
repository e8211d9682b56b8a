"""General two-kind linear counter over the partition diagram.

For a diagram row with occupancies ``a_1 >= ... >= a_m`` the split count J is
the number of ways to decide how many second-kind objects each box holds:
vectors ``0 <= v_q <= a_q`` with ``sum(v) == n2``. J only depends on the row's
multiset, so the linear count is ``sum(J(row) * row_permutations(row))`` over
the rows whose largest part fits under the cap.
"""

from __future__ import annotations

from .arith import DomainError, capped_coefficient
from .diagram import Row, iter_rows, row_permutations


def splits_count(row: Row, n2: int) -> int:
    """Coefficient of x**n2 in prod_q (1 + x + ... + x**a_q).

    O(m * n2**2) with the dense product, fine for desk-sized rows.

    >>> splits_count((3, 3, 1, 0, 0, 0, 0, 0), 3)
    7
    """
    if not 0 <= n2 <= sum(row):
        raise DomainError(f"n2={n2} outside 0..{sum(row)} for row {row}")
    return capped_coefficient([a for a in row if a], n2)


def count_two_kinds_linear(m: int, n1: int, n2: int, cap: int) -> int:
    if n1 < 0 or n2 < 0:
        raise DomainError(f"kind counts must be >= 0, got {n1}, {n2}")
    return sum(splits_count(row, n2) * row_permutations(row, m)
               for row in iter_rows(m, n1 + n2, max_part=cap))
