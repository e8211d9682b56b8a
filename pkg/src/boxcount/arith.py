"""Exact integer kernel shared by every counter.

All results are Python ints, so nothing ever overflows. Binomials follow the
usual combinatorial zero convention: ``binomial(a, b) == 0`` whenever the
pair falls outside ``0 <= b <= a``. That convention is what lets the
alternating sums elsewhere in the package truncate themselves.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Iterable


class DomainError(ValueError):
    """Argument outside the domain of a counting function."""


def binomial(a: int, b: int) -> int:
    """C(a, b) with C(a, b) = 0 unless 0 <= b <= a.

    >>> binomial(5, 3)
    10
    >>> binomial(-1, -3)
    0
    """
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def multinomial(parts: Iterable[int]) -> int:
    """(sum parts)! / prod(part!) computed as a product of binomials."""
    total = 0
    result = 1
    for p in parts:
        if p < 0:
            raise DomainError(f"multinomial part must be >= 0, got {p}")
        total += p
        result *= math.comb(total, p)
    return result


def euler_totient(d: int) -> int:
    if d <= 0:
        raise DomainError(f"totient needs d >= 1, got {d}")
    result = d
    x = d
    p = 2
    while p * p <= x:
        if x % p == 0:
            while x % p == 0:
                x //= p
            result -= result // p
        p += 1
    if x > 1:
        result -= result // x
    return result


def divisors(x: int) -> list[int]:
    """Divisors of ``x`` in ascending order."""
    if x <= 0:
        raise DomainError(f"divisors needs x >= 1, got {x}")
    small, large = [], []
    d = 1
    while d * d <= x:
        if x % d == 0:
            small.append(d)
            if d * d != x:
                large.append(x // d)
        d += 1
    return small + large[::-1]


def gcd_tuple(xs: Iterable[int]) -> int:
    """gcd of the nonzero entries; zeros are ignored."""
    xs = list(xs)
    if any(x < 0 for x in xs):
        raise DomainError(f"gcd_tuple needs nonnegative entries, got {xs}")
    nonzero = [x for x in xs if x]
    if not nonzero:
        raise DomainError("gcd_tuple needs at least one nonzero entry")
    return reduce(math.gcd, nonzero)


def exact_div(num: int, den: int, what: str = "quotient") -> int:
    """Integer division that must leave no remainder."""
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num} is not divisible by {den}")
    return q


class RangeError(ValueError):
    """Parameters outside the validity range of a restricted-range formula."""


def capped_coefficient(caps: Iterable[int], degree: int) -> int:
    """Coefficient of x**degree in prod_q (1 + x + ... + x**caps[q]).

    Dense truncated product; a cap of 0 contributes the factor 1.
    """
    if degree < 0:
        return 0
    poly = [1] + [0] * degree
    for c in caps:
        c = min(c, degree)
        out = [0] * (degree + 1)
        for i, a in enumerate(poly):
            if a:
                for j in range(min(c, degree - i) + 1):
                    out[i + j] += a
        poly = out
    return poly[degree]
