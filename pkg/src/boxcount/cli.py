"""Command line: ``boxcount count | diagram | verify | compare-circular``.

Exit status: 0 success, 1 verification failure, 2 usage error,
3 parameters outside a restricted formula's validity range.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import circular, diagram, linear, oracle, twokinds
from .arith import DomainError, RangeError, binomial
from .linear import BoxGroupSpec

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RANGE = 0, 1, 2, 3

SAFE_MAX_M, SAFE_MAX_N = 6, 12

PUBLISHED_WARNING = ("{method}: published circular formula evaluated literally; it can disagree "
                 "with direct enumeration (trusted reference: burnside)")


class UsageError(Exception):
    pass


@dataclass
class CountQuery:
    arrangement: str  # linear | circular
    m: int
    kinds: tuple  # (n1,) | (n1, n2) | (n1, n2, n3)
    cap: Optional[int] = None  # None: no cap (unless groups are given)
    groups: Optional[BoxGroupSpec] = None
    method: str = "auto"
    caps_rotate: bool = False

    @property
    def n(self) -> int:
        return sum(self.kinds)

    @property
    def effective_cap(self) -> int:
        return self.n if self.cap is None else self.cap

    def box_caps(self) -> list:
        if self.groups is not None:
            return self.groups.box_caps()
        return [self.effective_cap] * self.m

    def echo(self) -> dict:
        return {"arrangement": self.arrangement, "m": self.m, "kinds": list(self.kinds),
                "cap": self.cap, "groups": None if self.groups is None else str(self.groups),
                "method": self.method}


@dataclass
class CountReport:
    query: CountQuery
    method: str
    count: str
    warnings: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def value(self) -> int:
        return int(self.count)

    def to_json(self) -> dict:
        return {"query": self.query.echo(), "method": self.method, "count": self.count,
                "warnings": list(self.warnings), "elapsed_ms": self.elapsed_ms}


# --- method table ---------------------------------------------------------------
# Keyed by (arrangement, number of kinds, "uniform" | "groups"). Each entry maps
# method name -> evaluator; "auto" names the method it resolves to.


def _kinds(q, k=3):
    return tuple(q.kinds) + (0,) * (k - len(q.kinds))


def _oracle_lin(q):
    return oracle.oracle_linear(q.m, q.box_caps(), *_kinds(q))


def _oracle_circ(q):
    return oracle.oracle_circular(q.m, q.box_caps(), *_kinds(q), caps_rotate=q.caps_rotate)


METHODS: dict = {
    ("linear", 1, "uniform"): {
        "incexc": lambda q: linear.count_linear_incexc(q.m, q.n, q.effective_cap),
        "diagram": lambda q: diagram.count_linear_diagram(q.m, q.n, q.effective_cap),
        "gf": lambda q: linear.gf_coefficient(q.m, q.n, q.effective_cap),
        "oracle": _oracle_lin,
        "auto": "incexc",
    },
    ("linear", 1, "groups"): {
        "gf": lambda q: linear.count_groups_gf(q.groups, q.n),
        "oracle": _oracle_lin,
        "paper-eq17": lambda q: linear.count_single_kind_groups(q.groups, q.n),
        "auto": "gf",
    },
    ("linear", 2, "uniform"): {
        "diagram": lambda q: twokinds.count_two_kinds_linear(q.m, *q.kinds, q.effective_cap),
        "oracle": _oracle_lin,
        "paper-eq15": lambda q: linear.count_two_kinds_restricted(q.m, *q.kinds, q.effective_cap),
        "auto": "diagram",
    },
    ("linear", 2, "groups"): {
        "oracle": _oracle_lin,
        "paper-eq16": lambda q: linear.count_two_kinds_groups(q.groups, *q.kinds),
        "auto": "oracle",
    },
    ("linear", 3, "uniform"): {
        "oracle": _oracle_lin,
        "paper-eq18": lambda q: linear.count_three_kinds_restricted(q.m, *q.kinds, q.effective_cap),
        "auto": "oracle",
    },
    ("linear", 3, "groups"): {"oracle": _oracle_lin, "auto": "oracle"},
    ("circular", 1, "uniform"): {
        "diagram": lambda q: circular.count_circular(q.m, q.n, q.effective_cap),
        "burnside": lambda q: circular.count_circular_burnside(q.m, q.n, q.effective_cap),
        "oracle": _oracle_circ,
        "auto": "diagram",
    },
    ("circular", 1, "groups"): {"oracle": _oracle_circ, "auto": "oracle"},
    ("circular", 2, "uniform"): {
        "burnside": lambda q: circular.count_two_kinds_circular_burnside(q.m, *q.kinds, q.effective_cap),
        "oracle": _oracle_circ,
        "paper": lambda q: circular.count_two_kinds_circular_paper(q.m, *q.kinds, q.effective_cap),
        "paper-eq27": lambda q: circular.count_two_kinds_circular_paper(q.m, *q.kinds, q.effective_cap),
        "paper-eq25": lambda q: circular.count_two_kinds_circular_restricted_paper(
            q.m, *q.kinds, q.effective_cap),
        "auto": "burnside",
    },
    ("circular", 2, "groups"): {
        "oracle": _oracle_circ,
        "paper-eq26": lambda q: circular.count_two_kinds_circular_groups_paper(q.groups, *q.kinds),
        "auto": "oracle",
    },
    ("circular", 3, "uniform"): {"oracle": _oracle_circ, "auto": "oracle"},
    ("circular", 3, "groups"): {"oracle": _oracle_circ, "auto": "oracle"},
}

WARN_METHODS = {"paper", "paper-eq25", "paper-eq26", "paper-eq27"}


def admissibility_table() -> str:
    lines = ["arrangement  kinds  caps     methods (auto ->)"]
    for (arr, k, mode), table in METHODS.items():
        names = [name for name in table if name != "auto"]
        lines.append(f"{arr:<12} {k:<6} {mode:<8} {', '.join(names)}  (auto -> {table['auto']})")
    return "\n".join(lines)


def _table_for(q: CountQuery) -> dict:
    key = (q.arrangement, len(q.kinds), "groups" if q.groups is not None else "uniform")
    if key not in METHODS:
        raise UsageError(f"no methods for {key}\n{admissibility_table()}")
    return METHODS[key]


def resolve_method(q: CountQuery) -> str:
    table = _table_for(q)
    name = table["auto"] if q.method == "auto" else q.method
    if name not in table or name == "auto":
        raise UsageError(f"method {q.method!r} is not admissible for {q.arrangement} "
                         f"{len(q.kinds)}-kind {'groups' if q.groups else 'uniform'} queries\n"
                         f"{admissibility_table()}")
    return name


def cmd_count(q: CountQuery, cross_check: bool = False) -> CountReport:
    """Dispatch one query; with ``cross_check`` every admissible exact (non-published) method must agree."""
    if q.m < 1:
        raise UsageError(f"need m >= 1, got {q.m}")
    if any(k < 0 for k in q.kinds):
        raise UsageError(f"kind counts must be >= 0, got {q.kinds}")
    if q.groups is not None and q.groups.m != q.m:
        raise UsageError(f"box groups cover {q.groups.m} boxes but m={q.m}")
    table = _table_for(q)
    name = resolve_method(q)
    start = time.perf_counter()
    value = table[name](q)
    elapsed = int((time.perf_counter() - start) * 1000)
    warnings = []
    if name in WARN_METHODS:
        warnings.append(PUBLISHED_WARNING.format(method=name))
    if q.arrangement == "circular" and q.groups is not None and name == "oracle":
        warnings.append("box caps: " + ("rotate with contents" if q.caps_rotate
                                        else "fixed to positions, contents rotate"))
    if cross_check:
        values = {other: (value if other == name else fn(q)) for other, fn in table.items()
                  if other != "auto" and not other.startswith("paper")}
        if len(set(values.values())) > 1:
            detail = ", ".join(f"{k}={v}" for k, v in values.items())
            warnings.append(f"cross-check mismatch: {detail}")
    return CountReport(q, name, str(value), warnings, elapsed)


# --- verification suites ------------------------------------------------------------


@dataclass
class SuiteResult:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, **case) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(case)

    def to_json(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


# value the published text states for Riordan's full-range sum at these points
RIORDAN_PUBLISHED_ZEROS = ((3, 6, 2), (4, 7, 3), (4, 9, 3), (4, 11, 3))


def _suite_eq4(r, max_m, max_n, max_l):
    for m in range(1, max_m + 1):
        for n in range(max_n + 1):
            total = sum(diagram.row_permutations(row, m) for row in diagram.iter_rows(m, n))
            r.check(total == binomial(m + n - 1, n), m=m, n=n, got=str(total))


def _caps(n, max_l):
    return range((n if max_l is None else min(n, max_l)) + 1)


def _suite_eq12(r, max_m, max_n, max_l):
    for m in range(1, max_m + 1):
        for n in range(max_n + 1):
            for cap in _caps(n, max_l):
                a = linear.count_linear_incexc(m, n, cap)
                b = diagram.count_linear_diagram(m, n, cap)
                r.check(a == b, m=m, n=n, l=cap, incexc=str(a), diagram=str(b))


def _suite_method_agreement(r, max_m, max_n, max_l):
    for m in range(1, max_m + 1):
        for n in range(max_n + 1):
            for cap in _caps(n, max_l):
                vals = (linear.count_linear_incexc(m, n, cap), diagram.count_linear_diagram(m, n, cap),
                        linear.gf_coefficient(m, n, cap))
                r.check(len(set(vals)) == 1, m=m, n=n, l=cap, values=[str(v) for v in vals])


def _suite_eq13(r, max_m, max_n, max_l):
    for m in range(1, max_m + 1):
        for cap in range(max_l + 1):
            v = linear.count_linear_incexc(m, m * cap, cap)
            r.check(v == 1, m=m, l=cap, got=str(v))


def _suite_eq14(r, max_m, max_n, max_l):
    for m in range(1, max_m + 1):
        for cap in range(1, max_l + 1):
            v = linear.count_linear_incexc(m, m * cap - 1, cap)
            r.check(v == m, m=m, l=cap, got=str(v))


def _suite_eq10(r, max_m, max_n, max_l):
    # m = 1 would need C(-1, 0) = 1, which the zero convention excludes
    for m in range(2, max_m + 1):
        for s in range(max_n + 1):
            lhs = sum(binomial(m - 2 + i, i) for i in range(s + 1))
            r.check(lhs == binomial(m - 1 + s, s), m=m, s=s, got=str(lhs))


def _suite_riordan(r, max_m, max_n, max_l):
    for m in range(1, max_m + 1):
        for n in range(max_n + 1):
            for cap in _caps(n, max_l):
                a = linear.count_linear_incexc(m, n, cap)
                b = linear.count_linear_incexc(m, n, cap, upper=m)
                r.check(a == b, m=m, n=n, l=cap, truncated=str(a), full_range=str(b))
    for m, n, cap in RIORDAN_PUBLISHED_ZEROS:
        if m <= max_m and n <= max_n and (max_l is None or cap <= max_l):
            v = linear.count_linear_incexc(m, n, cap, upper=m)
            r.notes.append({"m": m, "n": n, "l": cap, "published": "0", "computed": str(v),
                            "note": "out-of-range binomials taken as 0"})


def _suite_oracle_linear(r, max_m, max_n, max_l):
    for m in range(1, max_m + 1):
        for n in range(max_n + 1):
            for cap in _caps(n, max_l):
                a = linear.count_linear_incexc(m, n, cap)
                b = oracle.oracle_linear(m, [cap] * m, n)
                r.check(a == b, m=m, n=n, l=cap, incexc=str(a), oracle=str(b))


def _suite_oracle_circular(r, max_m, max_n, max_l):
    for m in range(1, max_m + 1):
        for n in range(max_n + 1):
            for cap in _caps(n, max_l):
                vals = (circular.count_circular(m, n, cap), circular.count_circular_burnside(m, n, cap),
                        oracle.oracle_circular(m, [cap] * m, n))
                r.check(len(set(vals)) == 1, m=m, n=n, l=cap, values=[str(v) for v in vals])


SUITES: dict = {
    "eq4": (_suite_eq4, False),
    "eq12": (_suite_eq12, False),
    "eq13": (_suite_eq13, False),
    "eq14": (_suite_eq14, False),
    "eq10": (_suite_eq10, False),
    "riordan-limit": (_suite_riordan, False),
    "method-agreement": (_suite_method_agreement, False),
    "oracle-linear": (_suite_oracle_linear, True),
    "oracle-circular": (_suite_oracle_circular, True),
}

SUITE_DEFAULTS = {"eq13": {"max_m": 5, "max_l": 4}, "eq14": {"max_m": 5, "max_l": 4},
                  "eq10": {"max_m": 10, "max_n": 20}}


def cmd_verify(suite: str, max_m: Optional[int] = None, max_n: Optional[int] = None,
               max_l: Optional[int] = None, unsafe_large: bool = False) -> SuiteResult:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    fn, uses_oracle = SUITES[suite]
    defaults = {"max_m": SAFE_MAX_M, "max_n": SAFE_MAX_N, "max_l": None, **SUITE_DEFAULTS.get(suite, {})}
    max_m = defaults["max_m"] if max_m is None else max_m
    max_n = defaults["max_n"] if max_n is None else max_n
    max_l = defaults["max_l"] if max_l is None else max_l
    if suite in ("eq13", "eq14") and max_l is None:
        max_l = 4
    if uses_oracle:
        _guard(max_m, max_n, unsafe_large)
    result = SuiteResult(suite)
    fn(result, max_m, max_n, max_l)
    return result


def _guard(max_m, max_n, unsafe_large):
    if not unsafe_large and (max_m > SAFE_MAX_M or max_n > SAFE_MAX_N):
        raise UsageError(f"grid beyond m <= {SAFE_MAX_M}, n <= {SAFE_MAX_N} needs --unsafe-large")


def cmd_compare_circular(grid: circular.ComparisonGrid, path: Optional[str], out=None):
    report = circular.build_comparison_report(grid)
    text = report.dumps()
    if path in (None, "-"):
        (sys.stdout if out is None else out).write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)
    return report


# --- argument parsing ------------------------------------------------------------------


def _int_range(text: str) -> list:
    """``5`` or ``2..7`` (inclusive)."""
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or lo..hi, got {text!r}")


def _kinds_arg(text: str) -> tuple:
    try:
        kinds = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n1[,n2[,n3]], got {text!r}")
    if not 1 <= len(kinds) <= 3:
        raise argparse.ArgumentTypeError("between one and three kinds")
    return kinds


def _groups_arg(text: str) -> BoxGroupSpec:
    try:
        return BoxGroupSpec.parse(text)
    except (DomainError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boxcount",
                                     description="Exact counts of identical objects in capped boxes.")
    parser.add_argument("--config", help="key=value file with the same flags (read before the command line)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count placements",
                       formatter_class=argparse.RawDescriptionHelpFormatter,
                       epilog="admissible methods:\n" + admissibility_table())
    arr = p.add_mutually_exclusive_group()
    arr.add_argument("--linear", dest="arrangement", action="store_const", const="linear")
    arr.add_argument("--circular", dest="arrangement", action="store_const", const="circular")
    p.set_defaults(arrangement="linear")
    p.add_argument("-m", type=_int_range, required=True, help="number of boxes (or lo..hi)")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("-n", type=_int_range, help="number of identical objects (or lo..hi)")
    what.add_argument("--kinds", type=_kinds_arg, help="objects per kind: n1[,n2[,n3]]")
    caps = p.add_mutually_exclusive_group()
    caps.add_argument("--cap", "-l", type=_int_range, help="per-box cap (or lo..hi); default: none")
    caps.add_argument("--groups", type=_groups_arg, help="box groups as size:cap,size:cap,...")
    p.add_argument("--method", default="auto")
    p.add_argument("--caps-rotate", action="store_true",
                   help="circular oracle with groups: caps rotate together with contents")
    p.add_argument("--cross-check", action="store_true")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p = sub.add_parser("diagram", help="dump the partition diagram")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--cap", "-l", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-m", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-l", type=int)
    p.add_argument("--unsafe-large", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("compare-circular", help="published circular formulas vs reference vs oracle")
    p.add_argument("--min-m", type=int, default=1)
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--n2", type=int, help="restrict to one second-kind count")
    p.add_argument("--no-groups", action="store_true")
    p.add_argument("--unsafe-large", action="store_true")
    p.add_argument("--output", "-o", default="-")
    return parser


def read_config(path: str) -> list:
    """Turn ``key=value`` lines into argv tokens; ``key=true`` becomes a bare flag."""
    tokens = []
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip()
            flag = ("-" if len(key) == 1 else "--") + key.replace("_", "-")
            if not sep or value.lower() == "true":
                tokens.append(flag)
            elif value.lower() != "false":
                tokens += [flag, value]
    return tokens


def _splice_config(argv: list) -> list:
    argv = list(argv)
    path = None
    for i, tok in enumerate(argv):
        if tok == "--config" and i + 1 < len(argv):
            path = argv[i + 1]
            del argv[i:i + 2]
            break
        if tok.startswith("--config="):
            path = tok.split("=", 1)[1]
            del argv[i]
            break
    if path is None:
        return argv
    extra = read_config(path)
    for i, tok in enumerate(argv):
        if tok in ("count", "diagram", "verify", "compare-circular"):
            return argv[:i + 1] + extra + argv[i + 1:]
    return argv + extra


def _queries(args) -> list:
    kinds_list = [(n,) for n in args.n] if args.n is not None else [args.kinds]
    caps = [None] if args.cap is None else args.cap
    out = []
    for m in args.m:
        for kinds in kinds_list:
            for cap in caps:
                out.append(CountQuery(args.arrangement, m, kinds, cap, args.groups, args.method,
                                      args.caps_rotate))
    return out


def _emit_reports(reports, fmt, out) -> None:
    if fmt == "json":
        payload = reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports]
        out.write(json.dumps(payload, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["arrangement", "m", "kinds", "cap", "groups", "method", "count", "elapsed_ms", "warnings"])
        for r in reports:
            q = r.query
            w.writerow([q.arrangement, q.m, ",".join(map(str, q.kinds)),
                        "" if q.cap is None else q.cap, "" if q.groups is None else str(q.groups),
                        r.method, r.count, r.elapsed_ms, "; ".join(r.warnings)])
        out.write(buf.getvalue())
    else:
        for r in reports:
            q = r.query
            cap = f"groups={q.groups}" if q.groups is not None else f"l={q.cap if q.cap is not None else '-'}"
            out.write(f"{q.arrangement} m={q.m} kinds={','.join(map(str, q.kinds))} {cap} "
                      f"[{r.method}] {r.count}\n")
            for w in r.warnings:
                out.write(f"  warning: {w}\n")


def _run(args, out) -> int:
    if args.command == "count":
        reports = [cmd_count(q, args.cross_check) for q in _queries(args)]
        _emit_reports(reports, args.format, out)
        mismatch = any(w.startswith("cross-check mismatch") for r in reports for w in r.warnings)
        return EXIT_FAIL if mismatch else EXIT_OK

    if args.command == "diagram":
        if args.m < 1 or args.n < 0:
            raise UsageError("diagram needs m >= 1 and n >= 0")
        if args.format == "text":
            out.write(diagram.dump_diagram(args.m, args.n, args.cap))
        else:
            d = diagram.generate_diagram(args.m, args.n)
            rows = [{"i": i, "row": list(row), "multiplicities": list(diagram.multiplicities(row)),
                     "permutations": str(diagram.row_permutations(row))}
                    for i, row in enumerate(d.rows, start=1)]
            payload = {"m": args.m, "n": args.n, "k": d.k, "rows": rows}
            if args.cap is not None:
                payload["i_l"] = diagram.first_row_with_cap(d, args.cap)
            out.write(json.dumps(payload, indent=2) + "\n")
        return EXIT_OK

    if args.command == "verify":
        res = cmd_verify(args.suite, args.max_m, args.max_n, args.max_l, args.unsafe_large)
        if args.format == "json":
            out.write(json.dumps(res.to_json(), indent=2) + "\n")
        else:
            out.write(f"{res.suite}: {'PASS' if res.passed else 'FAIL'} "
                      f"({res.cases} cases, {len(res.failures)} failures)\n")
            for f in res.failures:
                out.write(f"  FAIL {json.dumps(f, sort_keys=True)}\n")
            for note in res.notes:
                out.write(f"  note {json.dumps(note, sort_keys=True)}\n")
        return EXIT_OK if res.passed else EXIT_FAIL

    if args.command == "compare-circular":
        _guard(args.max_m, args.max_n, args.unsafe_large)
        grid = circular.ComparisonGrid.bounded(args.max_m, args.max_n, n2=args.n2, min_m=args.min_m,
                                               groups=not args.no_groups)
        try:
            report = cmd_compare_circular(grid, args.output, out)
        except OSError as exc:
            raise UsageError(f"cannot write report: {exc}")
        summary = report.summary()
        if args.output not in (None, "-"):
            out.write(json.dumps(summary, sort_keys=True) + "\n")
        return EXIT_FAIL if report.reference_mismatches else EXIT_OK

    raise UsageError(f"unknown command {args.command!r}")


def main(argv: Optional[list] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        argv = _splice_config(argv)
    except OSError as exc:
        print(f"boxcount: cannot read config: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _run(args, out)
    except RangeError as exc:
        print(f"boxcount: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except (UsageError, DomainError) as exc:
        print(f"boxcount: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
