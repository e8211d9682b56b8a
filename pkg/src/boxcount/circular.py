"""Counters for boxes placed evenly around a circle (arrangements up to rotation).

Two families live here:

* ``count_circular`` / ``count_two_kinds_circular_burnside`` are the trusted
  counters. The first sums necklace counts over diagram rows, the second
  averages fixed points over the rotation group.
* the ``*_paper`` functions evaluate the published circular two-kind formulas
  as written. They are kept for comparison only and are never used as a
  reference; ``build_comparison_report`` puts them side by side with the
  Burnside count and the brute-force oracle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Optional, Sequence

from .arith import (DomainError, RangeError, divisors, euler_totient, exact_div,
                    gcd_tuple, multinomial)
from .diagram import iter_rows, multiplicities
from .linear import BoxGroupSpec, count_linear_incexc
from .oracle import oracle_circular
from .twokinds import splits_count

REPORT_FORMAT = "boxcount-circular-comparison/1"
GROUP_CAP_CONVENTION = ("box groups occupy contiguous arcs in group order; "
                        "'oracle' keeps caps fixed to positions and rotates contents only, "
                        "'oracle_caps_rotate' rotates caps together with contents")
SUBTERM_INTERPRETATION = ("circular sub-terms on m-1 boxes are read as the total number of "
                          "rotation classes of j objects in m-1 boxes with no cap")


def necklace_multinomial(parts: Sequence[int]) -> int:
    """Number of necklaces with ``parts[j]`` beads of colour j.

    (1/N) * sum over d | gcd(parts) of phi(d) * multinomial(parts / d).

    >>> necklace_multinomial((3, 3))
    4
    """
    parts = tuple(parts)
    if not parts:
        raise DomainError("necklace needs at least one block")
    if any(p < 1 for p in parts):
        raise DomainError(f"necklace blocks must be >= 1, got {parts}")
    total = sum(parts)
    acc = 0
    for d in divisors(gcd_tuple(parts)):
        acc += euler_totient(d) * multinomial(p // d for p in parts)
    return exact_div(acc, total, "necklace average")


def row_necklaces(row) -> int:
    """Rotation classes of one diagram row; a zero-box block counts only when present."""
    return necklace_multinomial([c for c in multiplicities(row) if c])


def count_circular(m: int, n: int, cap: int) -> int:
    return sum(row_necklaces(row) for row in iter_rows(m, n, max_part=cap))


def circular_excess(m: int, n: int, cap: int) -> int:
    """Rotation classes in which at least one box holds more than ``cap`` objects."""
    return count_circular(m, n, n) - count_circular(m, n, cap)


def count_circular_burnside(m: int, n: int, cap: int) -> int:
    """Single-kind reference: average over rotations of the number of fixed compositions."""
    if m < 1 or n < 0:
        raise DomainError(f"need m >= 1 and n >= 0, got m={m}, n={n}")
    acc = 0
    for p in divisors(m):
        period = m // p
        if n % period == 0:
            acc += euler_totient(period) * count_linear_incexc(p, n // period, cap)
    return exact_div(acc, m, "burnside average")


def _pair_sequences(length: int, a: int, b: int, cap: int) -> int:
    """Length-``length`` sequences of (u, v) with u + v <= cap, sum u = a, sum v = b."""
    table = [[0] * (b + 1) for _ in range(a + 1)]
    table[0][0] = 1
    for _ in range(length):
        nxt = [[0] * (b + 1) for _ in range(a + 1)]
        for x in range(a + 1):
            row = table[x]
            for y in range(b + 1):
                c = row[y]
                if not c:
                    continue
                for u in range(min(cap, a - x) + 1):
                    target = nxt[x + u]
                    for v in range(min(cap - u, b - y) + 1):
                        target[y + v] += c
        table = nxt
    return table[a][b]


def count_two_kinds_circular_burnside(m: int, n1: int, n2: int, cap: int) -> int:
    """Two kinds on a circle: (1/m) sum over p | m of phi(m/p) * F(p).

    F(p) counts length-p box sequences carrying n1*p/m and n2*p/m objects, i.e.
    the arrangements fixed by a rotation with p cycles.
    """
    if m < 1 or n1 < 0 or n2 < 0:
        raise DomainError(f"need m >= 1 and counts >= 0, got m={m}, n1={n1}, n2={n2}")
    if cap < 0:
        return 0
    acc = 0
    for p in divisors(m):
        period = m // p
        if n1 % period or n2 % period:
            continue
        acc += euler_totient(period) * _pair_sequences(p, n1 // period, n2 // period, cap)
    return exact_div(acc, m, "burnside average")


def count_two_kinds_circular_paper(m: int, n1: int, n2: int, cap: int) -> int:
    """Split counts times row necklace counts, summed over admissible rows (published form)."""
    if n1 < 0 or n2 < 0:
        raise DomainError(f"kind counts must be >= 0, got {n1}, {n2}")
    return sum(splits_count(row, n2) * row_necklaces(row)
               for row in iter_rows(m, n1 + n2, max_part=cap))


@lru_cache(maxsize=None)
def total_circular(m: int, n: int) -> int:
    """Rotation classes of n identical objects in m boxes, no cap."""
    return count_circular(m, n, n)


def _paper_overflow(m: int, excess: int, n2: int) -> int:
    total = 0
    for j in range(excess + 1):
        alpha = min(n2, excess - j)
        for k in range(alpha + 1):
            total += total_circular(m - 1, j) * total_circular(m - 1, k)
    return total


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise RangeError(f"formula not valid here: requires {what}")


def count_two_kinds_circular_restricted_paper(m: int, n1: int, n2: int, cap: int) -> int:
    """Published restricted-range circular two-kind formula, read literally.

    Leading term: product of the uncapped circular counts of each kind.
    Subtracted term: no factor m, circular sub-terms on m - 1 boxes.
    """
    n = n1 + n2
    _require(m >= 2, "m >= 2")
    _require(cap < n <= 2 * cap + 1, f"l < n <= 2l+1 (l={cap}, n={n})")
    _require(0 <= n2 <= n1, f"0 <= n2 <= n1 (n1={n1}, n2={n2})")
    lead = total_circular(m, n1) * total_circular(m, n2)
    return lead - _paper_overflow(m, n - cap - 1, n2)


def count_two_kinds_circular_groups_paper(spec: BoxGroupSpec, n1: int, n2: int) -> int:
    """Published circular formula for r >= 2 box groups, read literally (group sizes kept)."""
    m, la, n = spec.m, spec.min_cap, n1 + n2
    _require(spec.r >= 2, f"r >= 2 box groups (got r={spec.r})")
    _require(la < n <= 2 * la + 1, f"l_a < n <= 2l_a+1 (l_a={la}, n={n})")
    _require(n1 >= 0 and n2 >= 0, "n1, n2 >= 0")
    lead = total_circular(m, n1) * total_circular(m, n2)
    for size, cap in spec.groups:
        if n - cap - 1 >= 0:
            lead -= size * _paper_overflow(m, n - cap - 1, n2)
    return lead


# --- comparison harness -------------------------------------------------------


@dataclass(frozen=True)
class ComparisonGrid:
    ms: tuple
    n1s: tuple
    n2s: tuple
    max_n: Optional[int] = None
    caps: Optional[tuple] = None  # None: every cap 0..n
    groups: bool = True
    max_r: int = 2

    @classmethod
    def bounded(cls, max_m: int, max_n: int, n2: Optional[int] = None, min_m: int = 1,
                groups: bool = True) -> "ComparisonGrid":
        n2s = tuple(range(max_n + 1)) if n2 is None else (n2,)
        return cls(tuple(range(min_m, max_m + 1)), tuple(range(max_n + 1)), n2s,
                   max_n=max_n, groups=groups)

    def points(self):
        for m in sorted(self.ms):
            for n1 in sorted(self.n1s):
                for n2 in sorted(self.n2s):
                    n = n1 + n2
                    if self.max_n is not None and n > self.max_n:
                        continue
                    caps = range(n + 1) if self.caps is None else sorted(self.caps)
                    for cap in caps:
                        yield m, n1, n2, cap

    def group_points(self):
        if not self.groups:
            return
        for m in sorted(self.ms):
            for spec in _group_specs(m, self.max_r, self.max_n if self.max_n is not None
                                     else max(self.n1s) + max(self.n2s)):
                la = spec.min_cap
                for n1 in sorted(self.n1s):
                    for n2 in sorted(self.n2s):
                        n = n1 + n2
                        if self.max_n is not None and n > self.max_n:
                            continue
                        if la < n <= 2 * la + 1:
                            yield spec, n1, n2


def _compositions(m: int, r: int):
    if r == 1:
        yield (m,)
        return
    for first in range(1, m - r + 2):
        for rest in _compositions(m - first, r - 1):
            yield (first,) + rest


def _group_specs(m: int, max_r: int, max_cap: int):
    """Box-group layouts with r >= 2 groups and pairwise distinct caps."""
    for r in range(2, min(m, max_r) + 1):
        for sizes in _compositions(m, r):
            for caps in permutations(range(max_cap + 1), r):
                yield BoxGroupSpec(tuple(zip(sizes, caps)))


@dataclass
class ComparisonRecord:
    kind: str  # "uniform" | "groups"
    m: int
    n1: int
    n2: int
    cap: Optional[int] = None
    groups: Optional[str] = None
    eq25: Optional[int] = None
    eq26: Optional[int] = None
    eq27: Optional[int] = None
    burnside: Optional[int] = None
    oracle: int = 0
    oracle_caps_rotate: Optional[int] = None

    def match(self, name: str) -> Optional[bool]:
        value = getattr(self, name)
        return None if value is None else value == self.oracle

    @property
    def reference_ok(self) -> bool:
        return self.burnside is None or self.burnside == self.oracle

    def to_json(self) -> dict:
        def s(v):
            return None if v is None else str(v)

        out = {"type": "record", "kind": self.kind, "m": self.m, "n1": self.n1, "n2": self.n2}
        if self.kind == "uniform":
            out["l"] = self.cap
        else:
            out["groups"] = self.groups
        for name in ("eq25", "eq26", "eq27", "burnside"):
            if self.kind == "uniform" and name == "eq26":
                continue
            if self.kind == "groups" and name in ("eq25", "eq27", "burnside"):
                continue
            out[name] = s(getattr(self, name))
            out[name + "_match"] = self.match(name)
        out["oracle"] = s(self.oracle)
        if self.kind == "groups":
            out["oracle_caps_rotate"] = s(self.oracle_caps_rotate)
        return out


@dataclass
class ComparisonReport:
    records: list = field(default_factory=list)
    grid: Optional[ComparisonGrid] = None

    def tally(self, name: str) -> dict:
        flags = [r.match(name) for r in self.records]
        return {"match": sum(f is True for f in flags), "mismatch": sum(f is False for f in flags),
                "not_applicable": sum(f is None for f in flags)}

    @property
    def reference_mismatches(self) -> list:
        return [r for r in self.records if not r.reference_ok]

    def header(self) -> dict:
        grid = None
        if self.grid is not None:
            grid = {"m": list(self.grid.ms), "n1": list(self.grid.n1s), "n2": list(self.grid.n2s),
                    "max_n": self.grid.max_n,
                    "l": None if self.grid.caps is None else list(self.grid.caps),
                    "groups": self.grid.groups, "max_r": self.grid.max_r}
        return {"type": "header", "format": REPORT_FORMAT, "grid": grid,
                "group_caps": GROUP_CAP_CONVENTION, "subterms": SUBTERM_INTERPRETATION,
                "reference": "burnside", "note": "published-formula columns are reported, not asserted"}

    def summary(self) -> dict:
        return {"type": "summary", "records": len(self.records),
                "eq25": self.tally("eq25"), "eq26": self.tally("eq26"), "eq27": self.tally("eq27"),
                "reference_mismatches": len(self.reference_mismatches)}

    def lines(self) -> Iterable[str]:
        yield json.dumps(self.header(), sort_keys=True)
        if not self.records:
            return
        for r in self.records:
            yield json.dumps(r.to_json(), sort_keys=True)
        yield json.dumps(self.summary(), sort_keys=True)

    def dumps(self) -> str:
        return "".join(line + "\n" for line in self.lines())


def _try(fn, *args):
    try:
        return fn(*args)
    except RangeError:
        return None


def build_comparison_report(grid: ComparisonGrid) -> ComparisonReport:
    report = ComparisonReport(grid=grid)
    for m, n1, n2, cap in grid.points():
        report.records.append(ComparisonRecord(
            kind="uniform", m=m, n1=n1, n2=n2, cap=cap,
            eq25=_try(count_two_kinds_circular_restricted_paper, m, n1, n2, cap),
            eq27=count_two_kinds_circular_paper(m, n1, n2, cap),
            burnside=count_two_kinds_circular_burnside(m, n1, n2, cap),
            oracle=oracle_circular(m, [cap] * m, n1, n2),
        ))
    for spec, n1, n2 in grid.group_points():
        caps = spec.box_caps()
        report.records.append(ComparisonRecord(
            kind="groups", m=spec.m, n1=n1, n2=n2, groups=str(spec),
            eq26=_try(count_two_kinds_circular_groups_paper, spec, n1, n2),
            oracle=oracle_circular(spec.m, caps, n1, n2),
            oracle_caps_rotate=oracle_circular(spec.m, caps, n1, n2, caps_rotate=True),
        ))
    return report
