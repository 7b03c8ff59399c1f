"""Command-line interface.

Subcommands: inv, optimal-dv, enum, reconfigure, render, verify.
Permutations and vectors are 1-based comma lists on the command line, or
``@file`` to read a JSON array; lotteries are JSON objects
``{"n": ..., "word": [...]}`` given inline or as ``@file``.  Exit codes:
0 success, 1 verification disagreement, 2 usage or validity error,
3 unreachable reconfiguration input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import (
    DisplacementVector,
    Permutation,
    inversion_number,
    is_valid_dv,
    optimal_dv,
)
from .enumerate import enum_all, enum_cll, enum_dv
from .lottery import CyclicLadderLottery, to_svg
from .oracle import SUITES, run_suite
from .reconfig import (
    UnreachableError,
    cll_path,
    dv_path,
)

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2
EXIT_UNREACHABLE = 3


class UsageError(ValueError):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read_arg(text: str) -> str:
    if text.startswith("@"):
        return Path(text[1:]).read_text()
    return text


def _parse_int_list(text: str) -> tuple[int, ...]:
    text = _read_arg(text).strip()
    try:
        if text.startswith("["):
            return tuple(int(v) for v in json.loads(text))
        return tuple(int(v) for v in text.split(","))
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot parse integer list from {text!r}: {exc}") from None


def _parse_perm(text: str) -> Permutation:
    try:
        return Permutation(_parse_int_list(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_vector(text: str) -> DisplacementVector:
    try:
        return DisplacementVector(_parse_int_list(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_lottery(text: str) -> CyclicLadderLottery:
    raw = _read_arg(text)
    try:
        return CyclicLadderLottery.from_json(raw)
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot parse lottery JSON: {exc}") from None


def _cmd_inv(args) -> int:
    pi = _parse_perm(args.perm)
    if args.dv is not None:
        x = _parse_vector(args.dv)
        if not is_valid_dv(pi, x):
            raise UsageError("vector is not a valid displacement vector of the permutation")
    else:
        x = optimal_dv(pi)
    print(inversion_number(x))
    return EXIT_OK


def _cmd_optimal_dv(args) -> int:
    pi = _parse_perm(args.perm)
    print(_dumps(list(optimal_dv(pi).entries)))
    return EXIT_OK


def _cmd_enum(args) -> int:
    pi = _parse_perm(args.perm)
    if args.mode == "dvs":
        stream = (_dumps(list(x.entries)) for x in enum_dv(pi))
    elif args.mode == "lotteries":
        if args.dv is None:
            raise UsageError("--mode lotteries requires --dv")
        x = _parse_vector(args.dv)
        if not is_valid_dv(pi, x):
            raise UsageError("vector is not a valid displacement vector of the permutation")
        stream = (lot.to_json() for lot in enum_cll(pi, x))
    else:
        stream = (lot.to_json() for lot in enum_all(pi))
    if args.count:
        print(sum(1 for _ in stream))
    else:
        for line in stream:
            print(line)
    return EXIT_OK


def _cmd_reconfigure(args) -> int:
    if args.kind == "dv":
        if args.perm is None:
            raise UsageError("--kind dv requires --perm")
        pi = _parse_perm(args.perm)
        x = _parse_vector(args.src)
        y = _parse_vector(args.dst)
        try:
            seq = dv_path(x, y, pi)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        a = _parse_lottery(args.src)
        b = _parse_lottery(args.dst)
        try:
            seq = cll_path(a, b)
        except UnreachableError:
            raise
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    print(_dumps(seq.to_json_obj()))
    print(f"length {len(seq)}")
    return EXIT_OK


def _cmd_render(args) -> int:
    lot = _parse_lottery(args.lottery)
    svg = to_svg(lot)
    Path(args.out).write_text(svg)
    return EXIT_OK


def _suite_figure(reports, path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 3.2))
    numeric = []
    for idx, rep in enumerate(reports):
        try:
            numeric.append((idx, float(rep.expected), float(rep.actual)))
        except (TypeError, ValueError):
            numeric = None
            break
    if numeric:
        xs = [t[0] for t in numeric]
        ax.plot(xs, [t[1] for t in numeric], "o-", label="expected")
        ax.plot(xs, [t[2] for t in numeric], "x--", label="actual")
        ax.set_ylabel("value")
        ax.legend()
    else:
        ax.bar(range(len(reports)), [1 if r.ok else 0 for r in reports], color="tab:blue")
        ax.set_ylabel("agreement")
        ax.set_ylim(0, 1.2)
    ax.set_xticks(range(len(reports)))
    ax.set_xticklabels([str(i) for i in range(len(reports))], fontsize=7)
    ax.set_xlabel("check index")
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": "cyclads"})
    plt.close(fig)


def _cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(
            f"unknown suite {args.suite!r}; choose from {sorted(SUITES)} or 'all'"
        )
    reports = run_suite(args.suite, args.max_n)
    for rep in reports:
        print(rep.to_json())
    failed = [r for r in reports if not r.ok]
    if args.report_dir:
        outdir = Path(args.report_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        tsv = outdir / f"{args.suite}.tsv"
        with tsv.open("w") as fh:
            fh.write("instance\texpected\tactual\tok\n")
            for rep in reports:
                obj = rep.to_json_obj()
                fh.write(
                    f"{obj['instance']}\t{_dumps(obj['expected'])}\t"
                    f"{_dumps(obj['actual'])}\t{int(rep.ok)}\n"
                )
        _suite_figure(reports, outdir / f"{args.suite}.png")
    summary = f"suite {args.suite}: {len(reports) - len(failed)}/{len(reports)} ok"
    print(summary, file=sys.stderr)
    return EXIT_OK if not failed else EXIT_DISAGREE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclads",
        description="Optimal cyclic ladder lotteries: computation, enumeration, "
        "reconfiguration, verification, rendering.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("inv", help="inversion number of a permutation or vector")
    p.add_argument("--perm", required=True, help="comma list or @file")
    p.add_argument("--dv", help="displacement vector; defaults to an optimal one")
    p.set_defaults(fn=_cmd_inv)

    p = subs.add_parser("optimal-dv", help="an optimal displacement vector")
    p.add_argument("--perm", required=True)
    p.set_defaults(fn=_cmd_optimal_dv)

    p = subs.add_parser("enum", help="stream optimal vectors or lotteries")
    p.add_argument("--perm", required=True)
    p.add_argument("--mode", choices=["dvs", "lotteries", "all"], default="all")
    p.add_argument("--dv", help="class vector, required for --mode lotteries")
    p.add_argument("--count", action="store_true", help="print only the total")
    p.set_defaults(fn=_cmd_enum)

    p = subs.add_parser("reconfigure", help="shortest reconfiguration sequence")
    p.add_argument("--kind", choices=["dv", "lottery"], required=True)
    p.add_argument("--perm", help="required for --kind dv")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.set_defaults(fn=_cmd_reconfigure)

    p = subs.add_parser("render", help="draw a lottery as SVG")
    p.add_argument("lottery", help="lottery JSON or @file")
    p.add_argument("--out", required=True, help="output SVG path")
    p.set_defaults(fn=_cmd_render)

    p = subs.add_parser("verify", help="run an oracle suite")
    p.add_argument("suite", help=f"one of {sorted(SUITES)} or 'all'")
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.add_argument(
        "--report-dir",
        default=None,
        help="write a TSV report and a PNG figure per suite into this directory",
    )
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except UnreachableError as exc:
        print(f"unreachable: {exc}", file=sys.stderr)
        return EXIT_UNREACHABLE
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
