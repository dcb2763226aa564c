"""Command-line front end: ``vlk conway|alexander|verify|batch|gauss2vld``.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .alexander import alexander_record
from .conway import conway_record
from .diagram import DiagramCode, DiagramError, parse_gauss, parse_vld, serialize_vld, validate
from .laurent import LPoly1, LPoly2, _check_prime
from .verify import DEFAULT_ITERATIONS, DEFAULT_SEED, SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2

DEFAULT_PRIMES = (2, 3, 5)
GAUSS_RE = re.compile(r"^[OU]\d")


class InputError(Exception):
    def __init__(self, path: str, message: str, line: int | None = None, column: int | None = None):
        loc = path
        if line is not None:
            loc += f":{line}"
            if column is not None:
                loc += f":{column}"
        super().__init__(f"{loc}: {message}")


def _content_lines(text: str) -> list[str]:
    return [ln.split("#", 1)[0].strip() for ln in text.splitlines() if ln.split("#", 1)[0].strip()]


def looks_like_gauss(path: str, text: str) -> bool:
    if path.endswith(".gauss"):
        return True
    lines = _content_lines(text)
    return len(lines) == 1 and " " not in lines[0] and bool(GAUSS_RE.match(lines[0]))


def parse_text(path: str, text: str) -> DiagramCode:
    """Parse VLD or, when the content is a single Gauss word, Gauss code."""
    try:
        if looks_like_gauss(path, text):
            code = parse_gauss(" ".join(_content_lines(text)))
        else:
            code = parse_vld(text)
        problems = validate(code)
        if problems:
            raise DiagramError("; ".join(problems))
        return code
    except DiagramError as exc:
        raise InputError(path, exc.message, exc.line, exc.column) from None


def load(path: str) -> DiagramCode:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(path, exc.strerror or str(exc)) from None
    except UnicodeDecodeError:
        raise InputError(path, "not valid UTF-8") from None
    return parse_text(path, text)


# -- text rendering ----------------------------------------------------------------


def _poly_str(json_terms, cls, variables=None) -> str:
    if variables is None:
        return cls.from_json(json_terms).to_canonical_string()
    return cls.from_json(json_terms, variables).to_canonical_string()


def conway_text(rec: dict) -> list[str]:
    return [
        f"  conway: {_poly_str(rec['conway'], LPoly2)}",
        f"  conway_normalized: {_poly_str(rec['conway_normalized'], LPoly2)}",
        f"  conway_tform: {_poly_str(rec['conway_tform'], LPoly2, ('t', 'y'))}",
        f"  eval_x1: {_poly_str(rec['eval_x1'], LPoly1, ('y',))}",
        f"  writhe: {rec['writhe']}",
        f"  components: {rec['components']}",
        f"  vanishes_y_eq_minus_x: {str(rec['flags']['vanishes_y_eq_minus_x']).lower()}",
        f"  vanishes_y_eq_minus_1: {str(rec['flags']['vanishes_y_eq_minus_1']).lower()}",
    ]


def alexander_text(rec: dict) -> list[str]:
    out = [f"  alexander: {rec['alexander']}"]
    out += [f"  alexander mod {p}: {v}" for p, v in rec["alex_mod_p"].items()]
    out.append(f"  generators: {' '.join(rec['generators'])}")
    out += [f"  relator: {' '.join(str(g) for g in r)}" for r in rec["relators"]]
    out += [f"  matrix row: [{', '.join(row)}]" for row in rec["matrix"]]
    out.append(f"  ideal generators: {len(rec['ideal_generators'])}")
    return out


# -- commands ----------------------------------------------------------------------


def _emit(records: list[tuple[str, dict]], fmt: str, render) -> None:
    if fmt == "json":
        for path, rec in records:
            print(json.dumps({"path": path, **rec}, sort_keys=True))
        return
    for path, rec in records:
        print(path)
        for line in render(rec):
            print(line)


def _per_file(paths: list[str], compute) -> tuple[list[tuple[str, dict]], int]:
    records = []
    status = EXIT_OK
    for path in paths:
        try:
            records.append((path, compute(load(path))))
        except InputError as exc:
            print(f"vlk: {exc}", file=sys.stderr)
            status = EXIT_INPUT
    return records, status


def cmd_conway(args) -> int:
    records, status = _per_file(args.paths, conway_record)
    _emit(records, args.format, conway_text)
    return status


def cmd_alexander(args) -> int:
    records, status = _per_file(args.paths, lambda c: alexander_record(c, args.primes))
    _emit(records, args.format, alexander_text)
    return status


def cmd_verify(args) -> int:
    res = run_suite(args.suite, args.seed, args.iterations)
    if args.format == "json":
        print(json.dumps({"suite": res.suite, "ok": res.ok, "checks": res.checks,
                          "failures": res.failures, "notes": res.notes}, sort_keys=True))
    else:
        print("\n".join(res.lines()))
    return EXIT_OK if res.ok else EXIT_VERIFY


def _batch_one(job: tuple[str, tuple[int, ...]]) -> dict:
    path, primes = job
    try:
        code = load(path)
        return {"path": path, "conway": conway_record(code), "alexander": alexander_record(code, primes)}
    except InputError as exc:
        return {"path": path, "error": str(exc)}


def cmd_batch(args) -> int:
    manifest = Path(args.manifest)
    try:
        lines = manifest.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        print(f"vlk: {args.manifest}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_INPUT
    paths = []
    for ln in lines:
        entry = ln.split("#", 1)[0].strip()
        if not entry:
            continue
        p = Path(entry)
        paths.append(str(p if p.is_absolute() else manifest.parent / p))
    jobs = [(p, tuple(args.primes)) for p in paths]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_batch_one, jobs))
    else:
        results = [_batch_one(j) for j in jobs]
    for rec in results:
        print(json.dumps(rec, sort_keys=True))
    if results and all("error" in r for r in results):
        return EXIT_INPUT
    return EXIT_OK


def cmd_gauss2vld(args) -> int:
    status = EXIT_OK
    for path in args.paths:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            print(f"vlk: {path}: {exc.strerror or exc}", file=sys.stderr)
            status = EXIT_INPUT
            continue
        try:
            code = parse_gauss(" ".join(_content_lines(text)))
        except DiagramError as exc:
            print(f"vlk: {InputError(path, exc.message, exc.line, exc.column)}", file=sys.stderr)
            status = EXIT_INPUT
            continue
        print(serialize_vld(code))
    return status


# -- argument parsing ----------------------------------------------------------------


def _primes(text: str) -> tuple[int, ...]:
    try:
        primes = tuple(int(p) for p in text.split(",") if p.strip())
        for p in primes:
            _check_prime(p)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return primes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vlk", description="Invariants of virtual link diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("conway", help="Conway polynomial Z and its evaluations")
    p.add_argument("paths", nargs="+")
    fmt(p)
    p.set_defaults(func=cmd_conway)

    p = sub.add_parser("alexander", help="Wirtinger presentation, Alexander matrix and polynomial")
    p.add_argument("paths", nargs="+")
    p.add_argument("--primes", type=_primes, default=DEFAULT_PRIMES, help="comma-separated primes (default 2,3,5)")
    fmt(p)
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"corpus seed (default {DEFAULT_SEED})")
    p.add_argument("--iterations", type=int, default=None,
                   help="corpus size; defaults: " + ", ".join(f"{k}={v}" for k, v in DEFAULT_ITERATIONS.items()))
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="NDJSON records for every file listed in a manifest")
    p.add_argument("manifest")
    p.add_argument("--primes", type=_primes, default=DEFAULT_PRIMES)
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output order is unaffected)")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("gauss2vld", help="convert Gauss code files to VLD")
    p.add_argument("paths", nargs="+")
    p.set_defaults(func=cmd_gauss2vld)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "iterations", None) is not None and args.iterations < 0:
        print("vlk: --iterations must be >= 0", file=sys.stderr)
        return EXIT_INPUT
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
