"""Command-line front end: classification, representation matrices,
convergence sweeps, train-track analysis, reconstruction, and the identity
verification suite.

Results are JSON envelopes on stdout with floats rendered at 15 significant
digits, so identical invocations produce byte-identical output; convergence
data is CSV. Exit status is 0 exactly when the command status is ``ok``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import homology, quantum, traintrack, verify
from .mat2 import RingMat2
from .words import WordSyntaxError, parse_word

__all__ = ["CommandResult", "main"]


@dataclass
class CommandResult:
    status: str
    payload: dict | None = None
    diagnostics: list[str] = field(default_factory=list)
    raw: str | None = None  # preformatted non-JSON output (CSV to stdout)


# -- deterministic JSON rendering ---------------------------------------------


def _render(obj, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        value = float(obj)
        if not math.isfinite(value):
            raise ValueError("non-finite float in payload")
        out.append(format(value, ".15g"))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for idx, (key, value) in enumerate(obj.items()):
            if idx:
                out.append(", ")
            out.append(json.dumps(str(key)))
            out.append(": ")
            _render(value, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for idx, value in enumerate(obj):
            if idx:
                out.append(", ")
            _render(value, out)
        out.append("]")
    else:
        raise TypeError(f"cannot render {type(obj).__name__} as JSON")


def render_json(obj) -> str:
    out: list[str] = []
    _render(obj, out)
    return "".join(out)


def _complex_matrix_json(matrix) -> list:
    arr = np.asarray(matrix, dtype=complex)
    return [[[arr[i, j].real, arr[i, j].imag] for j in (0, 1)] for i in (0, 1)]


def _row_json(row: quantum.ConvergenceRow) -> dict:
    return {"k": row.k, "trace_abs": row.trace_abs, "lambda_abs": row.lambda_abs}


# -- commands -----------------------------------------------------------------


def cmd_classify(args) -> CommandResult:
    word = parse_word(args.word)
    return CommandResult("ok", homology.classification_record(word))


def cmd_rep(args) -> CommandResult:
    word = parse_word(args.word)
    payload: dict = {"kind": args.kind, "word": word.render()}
    if args.kind == "universal":
        payload["matrix"] = quantum.universal_rep(word).json_matrix()
    elif args.kind == "skein":
        payload["matrix"] = quantum.skein_rep(word).json_matrix()
    elif args.kind == "homology":
        payload["matrix"] = [list(row) for row in homology.homology_matrix(word)]
    elif args.kind == "geometric":
        if args.n is None or args.k is None:
            raise ValueError("geometric kind needs --n and --k")
        level = quantum.QuantumLevel(args.n, args.k)
        payload.update({"n": args.n, "k": args.k, "variant": args.variant})
        payload["matrix"] = _complex_matrix_json(quantum.geometric_rep(level, word, args.variant))
    elif args.kind == "level":
        if args.k is None:
            raise ValueError("level kind needs --k")
        point = quantum.root_schedule(args.k)
        payload.update({"k": args.k, "root": [point.value.real, point.value.imag]})
        payload["matrix"] = _complex_matrix_json(quantum.level_matrix(word, args.k))
    return CommandResult("ok", payload)


def cmd_converge(args) -> CommandResult:
    word = parse_word(args.word)
    rows = quantum.trace_convergence(word, args.k_min, args.k_max, args.step)
    csv_text = quantum.convergence_csv(rows)
    if args.output is None:
        return CommandResult("ok", raw=csv_text)
    Path(args.output).write_text(csv_text, encoding="ascii")
    payload = {
        "word": word.render(),
        "k_min": args.k_min,
        "k_max": args.k_max,
        "step": args.step,
        "rows": len(rows),
        "first": _row_json(rows[0]),
        "last": _row_json(rows[-1]),
        "homology_trace_abs": quantum.homology_trace_abs(word),
        "csv_path": args.output,
    }
    return CommandResult("ok", payload)


def cmd_traintrack(args) -> CommandResult:
    word = parse_word(args.word)
    return CommandResult("ok", traintrack.traintrack_record(word))


def cmd_verify(args) -> CommandResult:
    results = verify.run_suite(only=args.only, corrupt=args.corrupt)
    items = [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]
    failed = sum(1 for r in results if not r.passed)
    payload = {
        "items": items,
        "passed": len(results) - failed,
        "failed": failed,
        "all_passed": failed == 0,
    }
    diagnostics = [f"FAIL {r.name}: {r.detail}" for r in results if not r.passed]
    return CommandResult("ok", payload, diagnostics)


def cmd_reconstruct(args) -> CommandResult:
    word = parse_word(args.word)
    samples = args.samples if args.samples is not None else 2 * len(word) + 1
    rebuilt = quantum.reconstruct_skein(word, samples)
    payload = {
        "word": word.render(),
        "samples": samples,
        "matrix": rebuilt.json_matrix(),
        "matches_symbolic": rebuilt == quantum.skein_rep(word),
    }
    return CommandResult("ok", payload)


_DISPATCH = {
    "classify": cmd_classify,
    "rep": cmd_rep,
    "converge": cmd_converge,
    "traintrack": cmd_traintrack,
    "verify": cmd_verify,
    "reconstruct": cmd_reconstruct,
}


def _add_global_flags(parser: argparse.ArgumentParser, for_subcommand: bool) -> None:
    # on subparsers the defaults are suppressed so they never clobber values
    # parsed before the subcommand name
    suppress = argparse.SUPPRESS
    parser.add_argument(
        "--json", action="store_true", default=suppress if for_subcommand else True,
        help="emit JSON envelopes on stdout (default; kept for interface stability)",
    )
    parser.add_argument(
        "--output", metavar="PATH", default=suppress if for_subcommand else None,
        help="for 'converge': CSV destination (stdout if omitted); otherwise also write the JSON envelope here",
    )
    parser.add_argument(
        "--quiet", action="store_true", default=suppress if for_subcommand else False,
        help="suppress diagnostics on stderr",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcg4",
        description="Exact mapping-class arithmetic for the four-punctured sphere.",
    )
    _add_global_flags(parser, for_subcommand=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        _add_global_flags(p, for_subcommand=True)
        return p

    p = add_parser("classify", "Nielsen-Thurston class and stretch factor of a word")
    p.add_argument("word")

    p = add_parser("rep", "representation matrix of a word")
    p.add_argument("kind", choices=("universal", "skein", "geometric", "homology", "level"))
    p.add_argument("word")
    p.add_argument("--n", type=int, help="rank parameter (geometric kind)")
    p.add_argument("--k", type=int, help="level (geometric and level kinds)")
    p.add_argument("--variant", choices=("rescaled", "tilde"), default="rescaled")

    p = add_parser("converge", "trace/eigenvalue sweep over levels, as CSV")
    p.add_argument("word")
    p.add_argument("--k-min", type=int, default=10)
    p.add_argument("--k-max", type=int, default=2000)
    p.add_argument("--step", type=int, default=10)

    p = add_parser("traintrack", "measure transition matrix and growth eigenvalue")
    p.add_argument("word")

    p = add_parser("verify", "run the built-in identity suite")
    p.add_argument("--only", metavar="SUBSTRING", help="run only checks whose name contains this")
    p.add_argument("--corrupt", action="store_true",
                   help="perturb a generator image (negative control; relation checks must fail)")

    p = add_parser("reconstruct", "rebuild the exact skein matrix from numeric samples")
    p.add_argument("word")
    p.add_argument("--samples", type=int, help="sample count (default: 2*length+1)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = _DISPATCH[args.command](args)
    except WordSyntaxError as exc:
        result = CommandResult("error", diagnostics=[f"parse error: {exc}"])
    except (ValueError, TypeError) as exc:
        result = CommandResult("error", diagnostics=[str(exc)])
    except OSError as exc:
        result = CommandResult("error", diagnostics=[f"cannot write output: {exc}"])

    if result.raw is not None:
        sys.stdout.write(result.raw)
    else:
        envelope: dict = {"status": result.status}
        if result.status == "ok" and result.payload is not None:
            envelope["payload"] = result.payload
        envelope["diagnostics"] = result.diagnostics
        text = render_json(envelope)
        print(text)
        if args.output is not None and args.command != "converge" and result.status == "ok":
            Path(args.output).write_text(text + "\n", encoding="utf-8")
    if result.diagnostics and not args.quiet:
        for line in result.diagnostics:
            print(line, file=sys.stderr)
    return 0 if result.status == "ok" else 1


if __name__ == "__main__":
    sys.exit(main())
