"""Closed-form counters for boxes in a row.

``count_linear_incexc`` and ``gf_coefficient`` are total: they accept any
(m, n, cap). The ``*_restricted`` / ``*_groups`` counters are only valid while
at most one box can overflow (``cap < n <= 2*cap + 1``) and raise
:class:`RangeError` outside that window instead of returning a wrong number.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .arith import DomainError, RangeError, binomial, capped_coefficient


def _check_mn(m: int, n: int) -> None:
    if m < 1:
        raise DomainError(f"need m >= 1 boxes, got {m}")
    if n < 0:
        raise DomainError(f"need n >= 0 objects, got {n}")


def count_unrestricted(m: int, n: int) -> int:
    _check_mn(m, n)
    return binomial(m + n - 1, n)


def count_linear_incexc(m: int, n: int, cap: int, upper: Optional[int] = None) -> int:
    """Number of compositions of n into m parts, each part <= cap, by inclusion-exclusion.

    The alternating sum runs to ``n // (cap + 1)`` by default. ``upper``
    overrides that limit (e.g. ``upper=m``); with zero-valued out-of-range
    binomials the extra terms vanish.
    """
    _check_mn(m, n)
    if cap < 0:
        return 0
    top = n // (cap + 1) if upper is None else upper
    total = 0
    for i in range(top + 1):
        shift = i * (cap + 1)
        term = binomial(m, i) * binomial(m + n - shift - 1, n - shift)
        total += -term if i % 2 else term
    assert total >= 0, (m, n, cap, upper, total)
    return total


def gf_coefficient(m: int, n: int, cap: int) -> int:
    """Coefficient of t**n in (1 + t + ... + t**cap)**m."""
    _check_mn(m, n)
    if cap < 0:
        return 0
    return capped_coefficient([cap] * m, n)


@dataclass(frozen=True)
class BoxGroupSpec:
    """Boxes split into groups of ``size`` boxes sharing one ``cap``: ``((size, cap), ...)``."""

    groups: tuple

    def __post_init__(self):
        groups = tuple((int(s), int(c)) for s, c in self.groups)
        if not groups:
            raise DomainError("need at least one box group")
        for size, cap in groups:
            if size < 1 or cap < 0:
                raise DomainError(f"bad box group (size={size}, cap={cap})")
        object.__setattr__(self, "groups", groups)

    @classmethod
    def parse(cls, text: str) -> "BoxGroupSpec":
        """Parse ``"2:3,1:1"`` (size:cap pairs)."""
        pairs = []
        for chunk in text.split(","):
            size, _, cap = chunk.strip().partition(":")
            if not cap:
                raise DomainError(f"box group {chunk!r} is not of the form size:cap")
            pairs.append((int(size), int(cap)))
        return cls(tuple(pairs))

    @property
    def m(self) -> int:
        return sum(s for s, _ in self.groups)

    @property
    def r(self) -> int:
        return len(self.groups)

    @property
    def min_cap(self) -> int:
        return min(c for _, c in self.groups)

    def box_caps(self) -> list[int]:
        """Per-box caps, groups laid out as contiguous runs in order."""
        return [c for s, c in self.groups for _ in range(s)]

    def __str__(self) -> str:
        return ",".join(f"{s}:{c}" for s, c in self.groups)


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise RangeError(f"formula not valid here: requires {what}")


def _overflow_pairs(m: int, excess: int, n1: int, n2: int) -> int:
    """sum_j C(m-2+j, j) C(m-1+alpha, alpha), alpha = min(n2, excess - j), j = 0..excess.

    Counts placements of j first-kind and k second-kind objects (j + k <= excess)
    in the m - 1 boxes beside the overflowing one.
    """
    total = 0
    for j in range(min(excess, n1) + 1):
        alpha = min(n2, excess - j)
        total += binomial(m - 2 + j, j) * binomial(m - 1 + alpha, alpha)
    return total


def count_two_kinds_restricted(m: int, n1: int, n2: int, cap: int) -> int:
    """Two kinds of objects, uniform cap, valid for cap < n1 + n2 <= 2*cap + 1."""
    n = n1 + n2
    _require(m >= 2, "m >= 2")
    _require(cap < n <= 2 * cap + 1, f"l < n <= 2l+1 (l={cap}, n={n})")
    _require(n2 < n1 <= 2 * cap + 1, f"n2 < n1 <= 2l+1 (n1={n1}, n2={n2})")
    _require(0 <= n2 <= cap, f"0 <= n2 <= l (n2={n2})")
    lead = binomial(m + n1 - 1, n1) * binomial(m + n2 - 1, n2)
    return lead - m * _overflow_pairs(m, n - cap - 1, n1, n2)


def count_two_kinds_groups(spec: BoxGroupSpec, n1: int, n2: int) -> int:
    """Two kinds of objects, per-group caps, valid for l_a < n <= 2*l_a + 1 with l_a the smallest cap."""
    m, la, n = spec.m, spec.min_cap, n1 + n2
    _require(m >= 2, "at least 2 boxes in total")
    _require(la < n <= 2 * la + 1, f"l_a < n <= 2l_a+1 (l_a={la}, n={n})")
    _require(0 <= n2 <= n1 <= 2 * la + 1, f"0 <= n2 <= n1 <= 2l_a+1 (n1={n1}, n2={n2})")
    _require(n2 <= la, f"n2 <= l_a (n2={n2})")
    lead = binomial(m + n1 - 1, n1) * binomial(m + n2 - 1, n2)
    excluded = 0
    for size, cap in spec.groups:
        if n - cap - 1 >= 0:
            excluded += size * _overflow_pairs(m, n - cap - 1, n1, n2)
    return lead - excluded


def count_single_kind_groups(spec: BoxGroupSpec, n: int) -> int:
    """One kind of object, per-group caps, valid for l_a < n <= 2*l_a + 1."""
    m, la = spec.m, spec.min_cap
    _require(m >= 2, "at least 2 boxes in total")
    _require(la < n <= 2 * la + 1, f"l_a < n <= 2l_a+1 (l_a={la}, n={n})")
    total = binomial(m + n - 1, n)
    for size, cap in spec.groups:
        e = n - cap - 1
        if e >= 0:
            total -= size * binomial(m - 1 + e, e)
    return total


def count_three_kinds_restricted(m: int, n1: int, n2: int, n3: int, cap: int) -> int:
    """Three kinds of objects, uniform cap, valid for n1 >= n2 >= n3 and cap < n <= 2*cap + 1.

    The box beside the overflowing one hold i, j, k objects of the three kinds
    with i + j + k <= n - cap - 1; j and k are clamped to the available n2, n3.
    """
    n = n1 + n2 + n3
    _require(m >= 2, "m >= 2")
    _require(n1 >= n2 >= n3 >= 0, f"n1 >= n2 >= n3 >= 0 (got {n1}, {n2}, {n3})")
    _require(cap < n <= 2 * cap + 1, f"l < n <= 2l+1 (l={cap}, n={n})")
    excess = n - cap - 1
    lead = binomial(m + n1 - 1, n1) * binomial(m + n2 - 1, n2) * binomial(m + n3 - 1, n3)
    excluded = 0
    for i in range(min(excess, n1) + 1):
        alpha = min(n2, excess - i)
        for j in range(alpha + 1):
            beta = min(n3, excess - i - j)
            excluded += binomial(m - 2 + i, i) * binomial(m - 2 + j, j) * binomial(m - 1 + beta, beta)
    return lead - m * excluded


def count_groups_gf(spec: BoxGroupSpec, n: int) -> int:
    """Single-kind count under per-group caps, any n (generating-function product)."""
    if n < 0:
        raise DomainError(f"need n >= 0 objects, got {n}")
    return capped_coefficient(spec.box_caps(), n)

