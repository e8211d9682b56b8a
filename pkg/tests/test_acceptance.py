"""Acceptance gate. Each test carries a ``criterion`` mark; conftest prints the verdicts."""

import json
import time
from itertools import permutations
from pathlib import Path

import pytest

from boxcount.arith import binomial
from boxcount.circular import (ComparisonGrid, build_comparison_report, circular_excess,
                               count_circular, count_circular_burnside,
                               count_two_kinds_circular_burnside)
from boxcount.cli import cmd_verify
from boxcount.diagram import (count_linear_diagram, first_row_with_cap, generate_diagram,
                              iter_rows, row_permutations)
from boxcount.linear import (BoxGroupSpec, count_linear_incexc, count_single_kind_groups,
                             count_three_kinds_restricted, count_two_kinds_groups,
                             count_two_kinds_restricted, gf_coefficient)
from boxcount.oracle import (CIRCULAR, format_listing, format_tuple, oracle_circular, oracle_linear,
                             oracle_list)
from boxcount.twokinds import count_two_kinds_linear, splits_count

GOLDEN = Path(__file__).parent / "golden"

WORKED_ALLOWED = "(3, 0 | 0, 2), (2, 1 | 1, 1), (2, 0 | 1, 2), (1, 2 | 2, 0), (1, 1 | 2, 1), (0, 2 | 3, 0)"
WORKED_DISALLOWED = "(3, 2 | 0, 0), (3, 1 | 0, 1), (2, 2 | 1, 0), (1, 0 | 2, 2), (0, 1 | 3, 1), (0, 0 | 3, 2)"


def criterion(n):
    return pytest.mark.criterion(n)


# --- 1 ---------------------------------------------------------------------------------


@criterion(1)
def test_triple_method_agreement_with_oracle():
    start = time.perf_counter()
    cases = 0
    for m in range(1, 7):
        for n in range(13):
            for cap in range(n + 1):
                expected = oracle_linear(m, [cap] * m, n)
                assert count_linear_incexc(m, n, cap) == expected, (m, n, cap)
                assert count_linear_diagram(m, n, cap) == expected, (m, n, cap)
                assert gf_coefficient(m, n, cap) == expected, (m, n, cap)
                cases += 1
    assert cases == 6 * sum(n + 1 for n in range(13))
    assert time.perf_counter() - start < 60


# --- 2 ---------------------------------------------------------------------------------


@criterion(2)
def test_row_permutation_totals():
    for m in range(1, 9):
        for n in range(15):
            total = sum(row_permutations(row) for row in iter_rows(m, n))
            assert total == binomial(m + n - 1, n), (m, n)


# --- 3 ---------------------------------------------------------------------------------


@criterion(3)
def test_full_and_one_short():
    assert count_linear_incexc(3, 6, 2) == 1
    for m in range(1, 6):
        for cap in range(5):
            assert count_linear_incexc(m, m * cap, cap) == 1
            if cap >= 1:
                assert count_linear_incexc(m, m * cap - 1, cap) == m


@criterion(3)
def test_worked_two_box_example():
    assert count_two_kinds_restricted(2, 3, 2, 3) == 6
    assert count_two_kinds_linear(2, 3, 2, 3) == 6
    allowed = oracle_list(2, [3, 3], 3, 2)
    everything = oracle_list(2, [5, 5], 3, 2)
    disallowed = [s for s in everything if s not in allowed]
    assert len(allowed) == len(disallowed) == 6
    assert ", ".join(format_tuple(s) for s in reversed(allowed)) == WORKED_ALLOWED
    assert ", ".join(format_tuple(s) for s in reversed(disallowed)) == WORKED_DISALLOWED
    assert format_listing(allowed, 2) == (GOLDEN / "listing_m2_k3-2_l3.txt").read_text()


@criterion(3)
def test_diagram_markers():
    d = generate_diagram(8, 7)
    assert d.k == 15
    assert first_row_with_cap(d, 3) == 8
    assert first_row_with_cap(d, 2) == 12


@criterion(3)
def test_split_counts():
    rows = generate_diagram(8, 7).rows
    assert splits_count(rows[7], 3) == 7
    assert splits_count(rows[9], 3) == 11
    for i, name in ((8, "listing_table3_row8.txt"), (10, "listing_table3_row10.txt")):
        row = [a for a in rows[i - 1] if a]
        listing = oracle_list(len(row), row, 4, 3)
        assert len(listing) == splits_count(rows[i - 1], 3)
        assert format_listing(listing, 2) == (GOLDEN / name).read_text()


# --- 4 ---------------------------------------------------------------------------------


@criterion(4)
def test_two_kind_diagram_counter_against_oracle():
    for m in range(1, 5):
        for n in range(9):
            for n1 in range(n + 1):
                for cap in range(n + 1):
                    expected = oracle_linear(m, [cap] * m, n1, n - n1)
                    assert count_two_kinds_linear(m, n1, n - n1, cap) == expected, (m, n1, cap)


# --- 5 ---------------------------------------------------------------------------------


def group_specs(max_m, max_r, max_cap):
    """Every ordered list of (size, cap) groups with distinct caps, r <= max_r, total <= max_m."""
    for m in range(2, max_m + 1):
        for r in range(1, max_r + 1):
            for sizes in _compositions(m, r):
                for caps in permutations(range(max_cap + 1), r):
                    yield BoxGroupSpec(tuple(zip(sizes, caps)))


def _compositions(m, r):
    if r == 1:
        yield (m,)
        return
    for first in range(1, m - r + 2):
        for rest in _compositions(m - first, r - 1):
            yield (first,) + rest


@criterion(5)
def test_restricted_two_kinds():
    cases = 0
    for m in range(2, 5):
        for cap in range(5):
            for n in range(cap + 1, 2 * cap + 2):
                for n2 in range(cap + 1):
                    n1 = n - n2
                    if n2 < n1 <= 2 * cap + 1:
                        assert count_two_kinds_restricted(m, n1, n2, cap) == \
                            oracle_linear(m, [cap] * m, n1, n2), (m, n1, n2, cap)
                        cases += 1
    assert cases > 100


@criterion(5)
def test_restricted_groups():
    cases = 0
    for spec in group_specs(5, 3, 4):
        la = spec.min_cap
        caps = spec.box_caps()
        for n in range(la + 1, 2 * la + 2):
            assert count_single_kind_groups(spec, n) == oracle_linear(spec.m, caps, n), (str(spec), n)
            for n2 in range(min(la, n // 2) + 1):
                n1 = n - n2
                assert count_two_kinds_groups(spec, n1, n2) == oracle_linear(spec.m, caps, n1, n2), \
                    (str(spec), n1, n2)
                cases += 1
    assert cases > 1000


@criterion(5)
def test_restricted_three_kinds():
    cases = 0
    for m in range(2, 4):
        for n in range(8):
            for cap in range((n - 1) // 2, n):
                if not cap < n <= 2 * cap + 1:
                    continue
                for n1 in range(n + 1):
                    for n2 in range(min(n1, n - n1) + 1):
                        n3 = n - n1 - n2
                        if n3 > n2:
                            continue
                        assert count_three_kinds_restricted(m, n1, n2, n3, cap) == \
                            oracle_linear(m, [cap] * m, n1, n2, n3), (m, n1, n2, n3, cap)
                        cases += 1
    assert cases > 50


# --- 6 ---------------------------------------------------------------------------------


@criterion(6)
def test_circular_single_kind():
    for m in range(1, 7):
        for n in range(11):
            reps = oracle_list(m, [n] * m, n, arrangement=CIRCULAR)
            for cap in range(n + 1):
                expected = oracle_circular(m, [cap] * m, n)
                assert count_circular(m, n, cap) == expected, (m, n, cap)
                assert count_circular_burnside(m, n, cap) == expected, (m, n, cap)
                over = sum(1 for s in reps if max(box[0] for box in s) > cap)
                assert circular_excess(m, n, cap) == over, (m, n, cap)
                assert circular_excess(m, n, cap) + count_circular(m, n, cap) == len(reps)


# --- 7 ---------------------------------------------------------------------------------


@criterion(7)
def test_circular_two_kind_reference():
    for m in range(1, 5):
        for n in range(8):
            for n1 in range(n + 1):
                for cap in range(n + 1):
                    expected = oracle_circular(m, [cap] * m, n1, n - n1)
                    assert count_two_kinds_circular_burnside(m, n1, n - n1, cap) == expected, (m, n1, cap)


@criterion(7)
def test_comparison_report_is_clean():
    report = build_comparison_report(ComparisonGrid.bounded(4, 7))
    assert report.records
    assert report.reference_mismatches == []
    assert json.loads(report.dumps().splitlines()[-1])["reference_mismatches"] == 0
    zero = [r for r in report.records if r.kind == "uniform" and r.n2 == 0]
    assert zero and all(r.eq27 == r.burnside == r.oracle for r in zero)


# --- 8 ---------------------------------------------------------------------------------


@criterion(8)
def test_riordan_limit():
    result = cmd_verify("riordan-limit", 6, 12)
    assert result.passed and result.cases == 6 * sum(n + 1 for n in range(13))
    hits = [note for note in result.notes if (note["m"], note["n"], note["l"]) == (3, 6, 2)]
    assert len(hits) == 1
    assert hits[0]["computed"] == "1" and hits[0]["published"] == "0"
