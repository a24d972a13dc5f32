"""Command-line front end.

Exit status: 0 success, 1 verification mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import functools
import itertools
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .bench import ALGOS, GenConfig, bench_sweep, generate, run_instrumented, to_csv, to_json
from .core import is_common_increasing
from .full_dp import full_table
from .oracle import MAX_ORACLE_LENGTH, OracleBoundError, oracle_lcis

INT64_MIN, INT64_MAX = -(1 << 63), (1 << 63) - 1


class InputError(ValueError):
    pass


def parse_sequence(text: str, line: int = 1) -> Tuple[int, ...]:
    """Whitespace-separated signed 64-bit integers; blank text is empty."""
    out = []
    for pos, token in enumerate(text.split(), 1):
        try:
            value = int(token)
        except ValueError:
            raise InputError(f"line {line}, token {pos}: {token!r} is not an integer") from None
        if not INT64_MIN <= value <= INT64_MAX:
            raise InputError(f"line {line}, token {pos}: {token!r} does not fit in 64 bits")
        out.append(value)
    return tuple(out)


def render_sequence(seq: Sequence[int]) -> str:
    return " ".join(map(str, seq))


def read_input_file(path: str) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    lines = [(no, ln) for no, ln in enumerate(text.splitlines(), 1) if not ln.lstrip().startswith("#")]
    while len(lines) > 2 and not lines[-1][1].strip():
        lines.pop()
    if len(lines) != 2:
        raise InputError(f"{path}: expected 2 data lines (x, then y), found {len(lines)}")
    (lx, tx), (ly, ty) = lines
    return parse_sequence(tx, lx), parse_sequence(ty, ly)


def _inputs(args) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    if args.input is not None:
        if args.x is not None or args.y is not None:
            raise InputError("--input supplies both sequences; drop --x/--y")
        return read_input_file(args.input)
    if args.x is None or args.y is None:
        raise InputError("both --x and --y are required (or --input FILE)")
    return parse_sequence(args.x), parse_sequence(args.y)


def cmd_solve(args, out) -> int:
    x, y = _inputs(args)
    result, _ = run_instrumented(x, y, args.algo, want_witness=args.witness)
    status = 0
    oracle_len = None
    if args.oracle:
        oracle_len = oracle_lcis(x, y).length
        status = 0 if oracle_len == result.length else 1
    if args.format == "json":
        doc = {"length": result.length,
               "lcis": None if result.witness is None else list(result.witness),
               "algo": args.algo, "n": len(x), "m": len(y)}
        if oracle_len is not None:
            doc["oracle"] = oracle_len
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"length: {result.length}\n")
        if result.witness is not None:
            out.write(f"lcis: {render_sequence(result.witness)}".rstrip() + "\n")
        if oracle_len is not None:
            out.write(f"oracle: {oracle_len}\n")
    return status


def cmd_table(args, out) -> int:
    x, y = _inputs(args)
    table = full_table(x, y)
    if args.format == "json":
        out.write(json.dumps({"n": table.rows, "m": table.cols,
                              "f": [list(r) for r in table.cells]}) + "\n")
    else:
        out.write(table.dump())
    return 0


def cmd_verify(args, out) -> int:
    x, y = _inputs(args)
    oracle = oracle_lcis(x, y)
    lin, _ = run_instrumented(x, y, "linear")
    full, _ = run_instrumented(x, y, "full")
    lengths = {"linear": lin.length, "full": full.length, "oracle": oracle.length}
    valid = all(is_common_increasing(r.witness, x, y) for r in (lin, full))
    agree = len(set(lengths.values())) == 1
    if args.format == "json":
        out.write(json.dumps({**lengths, "witness_valid": valid, "agree": agree,
                              "lcis": list(lin.witness)}) + "\n")
    else:
        for name, value in lengths.items():
            out.write(f"{name}: {value}\n")
        out.write(f"witness: {render_sequence(lin.witness)}".rstrip()
                  + (" (valid)" if valid else " (INVALID)") + "\n")
        out.write("ok\n" if agree and valid else "MISMATCH\n")
    return 0 if agree and valid else 1


def cmd_gen(args, out) -> int:
    cfg = GenConfig(args.seed, args.n, args.m, args.alphabet)
    x, y = generate(cfg)
    if args.format == "json":
        out.write(json.dumps({"seed": cfg.seed, "n": cfg.n, "m": cfg.m,
                              "alphabet": cfg.alphabet_size, "x": list(x), "y": list(y)}) + "\n")
    else:
        out.write(f"# seed={cfg.seed} n={cfg.n} m={cfg.m} alphabet={cfg.alphabet_size}\n")
        out.write(render_sequence(x) + "\n" + render_sequence(y) + "\n")
    return 0


def cmd_bench(args, out) -> int:
    grid = [GenConfig(s, n, m, k) for s, n, m, k in
            itertools.product(args.seed, args.n, args.m, args.alphabet)]
    rows = bench_sweep(grid, args.algo or ALGOS, args.reps, workers=args.workers)
    out.write(to_json(rows) + "\n" if args.format == "json" else to_csv(rows))
    return 0


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text} is negative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} is not positive")
    return value


@functools.lru_cache(maxsize=None)
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lcis", description="Longest common increasing subsequence tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_inputs(p):
        p.add_argument("--x", help="whitespace-separated integers")
        p.add_argument("--y", help="whitespace-separated integers")
        p.add_argument("--input", metavar="FILE", help="file with x and y on two lines; '#' lines ignored")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("solve", help="length and one witness")
    add_inputs(p)
    p.add_argument("--algo", choices=ALGOS, default="linear")
    p.add_argument("--witness", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("table", help="dump the full f table")
    add_inputs(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help=f"cross-check both solvers against brute force (inputs <= {MAX_ORACLE_LENGTH})")
    add_inputs(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="print a seeded random instance")
    p.add_argument("--seed", type=_non_negative, default=0)
    p.add_argument("--n", type=_non_negative, required=True)
    p.add_argument("--m", type=_non_negative, required=True)
    p.add_argument("--alphabet", type=_positive, default=4)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time seeded instances; CSV or JSON rows")
    p.add_argument("--seed", type=_non_negative, nargs="+", default=[0])
    p.add_argument("--n", type=_non_negative, nargs="+", required=True)
    p.add_argument("--m", type=_non_negative, nargs="+", required=True)
    p.add_argument("--alphabet", type=_positive, nargs="+", default=[4])
    p.add_argument("--algo", choices=ALGOS, action="append")
    p.add_argument("--reps", type=_positive, default=5)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InputError, OracleBoundError, ValueError) as e:
        print(f"lcis: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
