import json
from itertools import permutations
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from boxcount.arith import DomainError, RangeError, gcd_tuple, multinomial
from boxcount.circular import (ComparisonGrid, build_comparison_report, circular_excess,
                               count_circular, count_circular_burnside,
                               count_two_kinds_circular_burnside,
                               count_two_kinds_circular_groups_paper,
                               count_two_kinds_circular_paper,
                               count_two_kinds_circular_restricted_paper,
                               necklace_multinomial, total_circular)
from boxcount.linear import BoxGroupSpec
from boxcount.oracle import oracle_circular

GOLDEN = Path(__file__).parent / "golden"


def brute_necklaces(parts):
    beads = "".join(chr(65 + i) * p for i, p in enumerate(parts))
    return len({min(s[i:] + s[:i] for i in range(len(s))) for s in map("".join, permutations(beads))})


@pytest.mark.parametrize("parts,expected", [((2, 1), 1), ((3, 3), 4), ((5,), 1), ((2, 2), 2),
                                            ((2, 2, 2), 16), ((1, 1, 1), 2)])
def test_necklace_examples(parts, expected):
    assert necklace_multinomial(parts) == expected
    assert brute_necklaces(parts) == expected


def test_necklace_domain():
    with pytest.raises(DomainError):
        necklace_multinomial(())
    with pytest.raises(DomainError):
        necklace_multinomial((2, 0))


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4))
def test_necklace_bounds(parts):
    total = sum(parts)
    v = necklace_multinomial(parts)
    linear = multinomial(parts)
    assert linear <= v * total and v <= linear
    if gcd_tuple(parts) == 1:
        assert v * total == linear


def test_necklace_brute_force_grid():
    for parts in [(1, 2, 3), (2, 4), (3, 1, 1), (4, 2), (2, 2, 1, 1)]:
        assert necklace_multinomial(parts) == brute_necklaces(parts)


@pytest.mark.parametrize("m,n,cap,expected", [(3, 4, 2, 2), (3, 3, 3, 4), (1, 5, 5, 1), (1, 5, 7, 1),
                                              (4, 0, 0, 1), (3, 7, 2, 0)])
def test_count_circular_examples(m, n, cap, expected):
    assert count_circular(m, n, cap) == expected
    assert oracle_circular(m, [cap] * m, n) == expected


def test_circular_excess():
    assert circular_excess(3, 4, 2) == 3
    assert circular_excess(3, 6, 2) == count_circular(3, 6, 6) - 1
    for m in range(1, 5):
        for n in range(7):
            assert circular_excess(m, n, n) == 0
            for cap in range(n + 1):
                full = oracle_circular(m, [n] * m, n)
                assert circular_excess(m, n, cap) == full - oracle_circular(m, [cap] * m, n)


def test_single_kind_burnside_small():
    for m in range(1, 6):
        for n in range(8):
            for cap in range(n + 1):
                assert count_circular_burnside(m, n, cap) == count_circular(m, n, cap)


@pytest.mark.parametrize("args,expected", [((2, 1, 1, 2), 2), ((2, 0, 0, 3), 1), ((2, 0, 0, 0), 1),
                                           ((2, 3, 2, 3), 3)])
def test_two_kind_burnside_examples(args, expected):
    m, n1, n2, cap = args
    assert count_two_kinds_circular_burnside(*args) == expected
    assert oracle_circular(m, [cap] * m, n1, n2) == expected


def test_two_kind_burnside_single_kind_reduction():
    for m in range(1, 6):
        for n in range(9):
            for cap in range(n + 1):
                assert count_two_kinds_circular_burnside(m, n, 0, cap) == count_circular(m, n, cap)


def test_paper_general_form():
    assert count_two_kinds_circular_paper(2, 1, 1, 2) == 3
    assert count_two_kinds_circular_paper(2, 3, 2, 3) == 3
    for m in range(1, 5):
        for n in range(7):
            for cap in range(n + 1):
                assert count_two_kinds_circular_paper(m, n, 0, cap) == count_circular(m, n, cap)


def test_paper_restricted_form():
    assert count_two_kinds_circular_restricted_paper(2, 3, 2, 3) == 1
    assert count_two_kinds_circular_restricted_paper(2, 2, 1, 2) == 1
    with pytest.raises(RangeError):
        count_two_kinds_circular_restricted_paper(2, 3, 2, 5)
    with pytest.raises(RangeError):
        count_two_kinds_circular_restricted_paper(1, 2, 1, 2)


def test_paper_restricted_form_without_overflow_term():
    # n = 2l + 1 with l = n - 1 impossible; at l = n the range gate forbids it, so check the lead term
    # directly: with excess -1 nothing is subtracted
    from boxcount.circular import _paper_overflow
    assert _paper_overflow(3, -1, 2) == 0
    assert total_circular(3, 2) * total_circular(3, 1) == 2


def test_paper_groups_form():
    spec = BoxGroupSpec(((1, 2), (1, 3)))
    assert count_two_kinds_circular_groups_paper(spec, 2, 1) == 1
    with pytest.raises(RangeError):
        count_two_kinds_circular_groups_paper(BoxGroupSpec(((2, 3),)), 2, 1)
    # every group has n - l_i - 1 < 0 would need n <= l_a, outside the gate; the lead term alone
    wide = BoxGroupSpec(((1, 1), (1, 4)))
    assert count_two_kinds_circular_groups_paper(wide, 2, 0) == total_circular(2, 2) - 1


def test_comparison_report_example_record():
    report = build_comparison_report(ComparisonGrid((2,), (1,), (1,), caps=(2,), groups=False))
    (rec,) = report.records
    assert (rec.eq27, rec.burnside, rec.oracle) == (3, 2, 2)
    assert rec.match("eq27") is False and rec.reference_ok


def test_comparison_report_n2_zero_slice():
    report = build_comparison_report(ComparisonGrid.bounded(4, 6, n2=0, groups=False))
    assert report.records
    for r in report.records:
        assert r.eq27 == r.burnside == r.oracle


def test_empty_report_is_header_only():
    report = build_comparison_report(ComparisonGrid((), (), ()))
    lines = report.dumps().splitlines()
    assert len(lines) == 1 and json.loads(lines[0])["type"] == "header"


def test_report_order_is_sorted():
    grid = ComparisonGrid((3, 2), (2, 0, 1), (1, 0), groups=False)
    keys = [(r.m, r.n1, r.n2, r.cap) for r in build_comparison_report(grid).records]
    assert keys == sorted(keys)


def test_report_golden():
    report = build_comparison_report(ComparisonGrid.bounded(3, 3))
    assert report.dumps() == (GOLDEN / "compare_m3_n3.jsonl").read_text()
    summary = json.loads(report.dumps().splitlines()[-1])
    assert summary["type"] == "summary" and summary["reference_mismatches"] == 0
