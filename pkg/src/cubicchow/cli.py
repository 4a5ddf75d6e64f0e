"""Batch verification runner.

Usage::

    verify --n-min 1 --n-max 10 --suite all --format text
    verify --n-min 2 --n-max 6 --suite fano,hodge --format json --out report.json

Every registered check runs for every n in range; where a check's
precondition fails, a visible ``skipped`` row names it.  Reports list one
row per (check, n), sorted by (check_id, n), with exact computed/expected
strings and per-check elapsed milliseconds.  Exit code 0 means every
executed check passed, 1 that at least one failed, 2 a usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

from .checks import SUITES, Check, checks_for


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    n: int
    status: str  # pass | fail | skipped
    computed: str
    expected: str
    elapsed_ms: int


@dataclass(frozen=True)
class RunConfig:
    n_min: int
    n_max: int
    suites: tuple[str, ...]
    fmt: str = "text"
    out: str | None = None


def _execute(check: Check, n: int) -> CheckResult:
    if not check.applicable(n):
        return CheckResult(check.check_id, n, "skipped", "", f"requires {check.precondition}", 0)
    start = time.perf_counter()
    try:
        computed, expected = check.fn(n)
    except Exception as exc:  # a violated identity raises; report it as a failure
        computed = f"error: {type(exc).__name__}: {exc}"
        expected = "(no exception)"
    elapsed = int((time.perf_counter() - start) * 1000)
    status = "pass" if computed == expected else "fail"
    return CheckResult(check.check_id, n, status, computed, expected, elapsed)


def run(config: RunConfig, jobs: int = 1) -> list[CheckResult]:
    """Execute the configured suites; deterministic up to elapsed_ms."""
    pairs = [
        (check, n)
        for check in checks_for(set(config.suites))
        for n in range(config.n_min, config.n_max + 1)
    ]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda p: _execute(*p), pairs))
    else:
        results = [_execute(check, n) for check, n in pairs]
    return sorted(results, key=lambda r: (r.check_id, r.n))


_TEXT_CELL_LIMIT = 48


def _clip(text: str) -> str:
    if len(text) <= _TEXT_CELL_LIMIT:
        return text
    return text[: _TEXT_CELL_LIMIT - 3] + "..."


def emit(results: list[CheckResult], fmt: str) -> str:
    """Render the report; json carries full strings, text clips long cells."""
    if fmt == "json":
        return json.dumps([asdict(r) for r in results], indent=2)
    if not results:
        return "(no checks selected)\n"
    headers = ("check_id", "n", "status", "computed", "expected", "ms")
    rows = [
        (r.check_id, str(r.n), r.status, _clip(r.computed), _clip(r.expected), str(r.elapsed_ms))
        for r in results
    ]
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for r in results:
        counts[r.status] += 1
    lines.append(
        f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped"
    )
    return "\n".join(lines) + "\n"


def results_from_json(text: str) -> list[CheckResult]:
    return [CheckResult(**row) for row in json.loads(text)]


def exit_code(results: list[CheckResult]) -> int:
    return 1 if any(r.status == "fail" for r in results) else 0


def parse_args(argv: list[str] | None = None) -> RunConfig:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Run the exact verification suites over a range of dimensions.",
    )
    parser.add_argument("--n-min", type=int, required=True, help="smallest dimension n")
    parser.add_argument("--n-max", type=int, required=True, help="largest dimension n")
    parser.add_argument(
        "--suite",
        default="all",
        help="comma-separated subset of grassmann,fano,hodge,diagonal or all",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--out", default=None, help="write the report to this path")
    args = parser.parse_args(argv)
    suites = tuple(s.strip() for s in args.suite.split(",") if s.strip())
    known = set(SUITES) | {"all"}
    for s in suites:
        if s not in known:
            parser.error(f"unknown suite {s!r}; choose from {', '.join(sorted(known))}")
    if not suites:
        parser.error("no suite selected")
    if args.n_min < 1:
        parser.error("--n-min must be at least 1")
    if args.n_min > args.n_max:
        parser.error("--n-min must not exceed --n-max")
    return RunConfig(args.n_min, args.n_max, suites, args.format, args.out)


def main(argv: list[str] | None = None) -> int:
    config = parse_args(argv)
    results = run(config)
    report = emit(results, config.fmt)
    if config.out:
        try:
            with open(config.out, "w", encoding="utf-8") as handle:
                handle.write(report)
        except OSError as exc:
            print(f"error: cannot write report to {config.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(report)
    return exit_code(results)


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
