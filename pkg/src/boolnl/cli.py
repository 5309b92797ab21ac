"""Command-line interface: engines, conversion, ideal export, benchmark.

Exit status: 0 on success, 1 on input errors, 2 when engines disagree in
``nl --method all`` mode.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
import time
from pathlib import Path

import numpy as np

from . import _kernels
from .bitfn import (
    AffineFunction,
    BooleanFunction,
    affine_anf,
    affine_from_anf,
    anf_to_text,
    parse_anf,
    parse_truth_table,
    truth_table_bits,
    truth_table_hex,
)
from .errors import BoolnlError
from .ideals import (
    build_J_ideal,
    build_N_ideal,
    export_ideal,
    nonlinearity_via_J,
    nonlinearity_via_N,
)
from .nlpoly import evaluate_all, nl_polynomial_fast, nlp_to_text
from .nonlinearity import (
    BRUTE_N_MAX,
    NlReport,
    nonlinearity_brute,
    nonlinearity_nlp,
    nonlinearity_walsh,
)
from .transforms import from_anf, nnf_to_text, to_anf, to_nnf

_FULL_ENGINES = {
    "nlp": nonlinearity_nlp,
    "walsh": nonlinearity_walsh,
    "brute": nonlinearity_brute,
}
_VALUE_ENGINES = {"via-J": nonlinearity_via_J, "via-N": nonlinearity_via_N}
ALL_METHODS = (*_FULL_ENGINES, *_VALUE_ENGINES)


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliError(message)


def _add_input_flags(p: _Parser):
    p.add_argument("--anf", help="ANF expression, e.g. 'x1*x2 + 1'")
    p.add_argument("--tt", help="truth table, hex (0x..) or 0/1 string")
    p.add_argument("--file", help="file holding an ANF or a truth table")
    p.add_argument("-n", type=int, default=None, help="variable count for ANF input")
    p.add_argument(
        "--format", choices=("text", "records"), default="text", help="output style"
    )


def load_function(args) -> BooleanFunction:
    given = [s for s in (args.anf, args.tt, args.file) if s is not None]
    if len(given) != 1:
        raise _CliError("exactly one of --anf / --tt / --file is required")
    if args.anf is not None:
        return from_anf(parse_anf(args.anf, args.n))
    if args.tt is not None:
        return parse_truth_table(args.tt)
    text = Path(args.file).read_text().strip()
    if re.fullmatch(r"[01]+", text) or re.fullmatch(r"(0[xX])?[0-9a-fA-F]+", text):
        return parse_truth_table(text)
    return from_anf(parse_anf(text, args.n))


def _affine_text(alpha: AffineFunction, n: int) -> str:
    return anf_to_text(affine_anf(alpha, n))


def report_to_record(report: NlReport, n: int) -> dict:
    return {
        "command": "nl",
        "method": report.method,
        "n": n,
        "value": report.value,
        "nearest": [_affine_text(a, n) for a in report.nearest],
    }


def report_from_record(record: dict) -> NlReport:
    n = record["n"]
    nearest = tuple(
        affine_from_anf(parse_anf(s, n)) for s in record["nearest"]
    )
    return NlReport(record["value"], record["method"], nearest)


def cmd_nl(args) -> int:
    f = load_function(args)
    methods = ALL_METHODS if args.method == "all" else (args.method,)
    values = {}
    reports = {}
    for m in methods:
        if m in _FULL_ENGINES:
            if m == "brute" and f.n > BRUTE_N_MAX:
                print(f"# warning: brute skipped (n={f.n} > {BRUTE_N_MAX})")
                continue
            rep = _FULL_ENGINES[m](f)
            reports[m] = rep
            values[m] = rep.value
        else:
            values[m] = _VALUE_ENGINES[m](f)

    for m in methods:
        if m not in values:
            continue
        if args.format == "records":
            if m in reports:
                print(json.dumps(report_to_record(reports[m], f.n)))
            else:
                print(json.dumps({"command": "nl", "method": m, "n": f.n, "value": values[m]}))
        elif m in reports:
            near = ", ".join(_affine_text(a, f.n) for a in reports[m].nearest)
            print(f"{m}: N(f) = {values[m]}  nearest: {near}")
        else:
            print(f"{m}: N(f) = {values[m]}")

    if len(set(values.values())) > 1:
        print(f"error: engines disagree: {values}", file=sys.stderr)
        return 2
    full = list(reports.values())
    if full and any(r.nearest != full[0].nearest for r in full[1:]):
        print("error: engines disagree on the nearest set", file=sys.stderr)
        return 2
    return 0


def cmd_nlp(args) -> int:
    f = load_function(args)
    p = nl_polynomial_fast(f)
    dists = evaluate_all(p).dists if args.distances else None
    if args.format == "records":
        rec = {
            "command": "nlp",
            "n": f.n,
            "polynomial": nlp_to_text(p),
            "coeffs": [int(c) for c in p.coeffs],
        }
        if dists is not None:
            rec["distances"] = [int(d) for d in dists]
        print(json.dumps(rec))
    else:
        print(nlp_to_text(p))
        if dists is not None:
            print(",".join(str(int(d)) for d in dists))
    return 0


def cmd_convert(args) -> int:
    f = load_function(args)
    if args.to == "tt":
        out = truth_table_hex(f) if f.n >= 2 else truth_table_bits(f)
    elif args.to == "anf":
        out = anf_to_text(to_anf(f))
    else:
        out = nnf_to_text(to_nnf(f))
    if args.format == "records":
        print(json.dumps({"command": "convert", "to": args.to, "n": f.n, "text": out}))
    else:
        print(out)
    return 0


def cmd_export_ideal(args) -> int:
    f = load_function(args)
    spec = build_N_ideal(f, args.t) if args.kind == "N" else build_J_ideal(f, args.t)
    text = export_ideal(spec, limit=args.limit)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


# --- scaling benchmark ------------------------------------------------------


def _resolve_backends(choice: str) -> list[str]:
    if choice == "auto":
        return [_kernels.active_name()]
    if choice == "both":
        return list(_kernels.available())
    return [choice]


def _sample_table(seed: int, n: int, s: int) -> np.ndarray:
    rng = np.random.default_rng([seed, n, s])
    return rng.integers(0, 2, size=1 << n, dtype=np.uint8)


def _pin_malloc_threshold():
    """Stop glibc from mmap-serving multi-MiB scratch arrays.

    Without this, arrays under the allocator's adaptive threshold are
    recycled from the heap while larger ones page-fault on every call,
    which skews timing ratios between adjacent n by up to 2x depending
    on process history.  Best effort: silently skipped off glibc.
    """
    try:
        import ctypes

        libc = ctypes.CDLL(None)
        libc.mallopt(ctypes.c_int(-3), ctypes.c_int(1 << 26))  # M_MMAP_THRESHOLD
        libc.mallopt(ctypes.c_int(-1), ctypes.c_int(1 << 26))  # M_TRIM_THRESHOLD
    except (OSError, AttributeError):
        pass


def run_scaling(
    n_from: int,
    n_to: int,
    samples: int,
    seed: int,
    methods: tuple[str, ...] = ("nlp",),
    backend: str = "auto",
) -> tuple[list[dict], list[str]]:
    """Mean wall time per n plus log2 growth ratios for consecutive n.

    Functions are drawn i.i.d. uniform from a seeded PCG64 generator; the
    sample for (seed, n, index) is identical across methods and backends.
    Returns (rows, warnings); each row covers one (backend, method, pair).
    """
    if not 1 <= n_from <= n_to:
        raise _CliError(f"bad range {n_from}..{n_to}")
    rows: list[dict] = []
    warnings: list[str] = []
    engines = {**_FULL_ENGINES, **_VALUE_ENGINES}
    _pin_malloc_threshold()
    for bname in _resolve_backends(backend):
        means: dict[tuple[str, int], float] = {}
        with _kernels.use(bname):
            for n in range(n_from, n_to + 1):
                active = []
                for m in methods:
                    if m == "brute" and n > BRUTE_N_MAX:
                        warnings.append(f"brute skipped for n={n} (cap n<={BRUTE_N_MAX})")
                        continue
                    active.append(m)
                if not active:
                    continue
                warm = BooleanFunction(n, _sample_table(seed, n, 0))
                for m in active:  # untimed warmup: allocator and code paths
                    engines[m](warm)
                totals = {m: 0.0 for m in active}
                for s in range(samples):
                    f = BooleanFunction(n, _sample_table(seed, n, s))
                    for m in active:
                        t0 = time.perf_counter()
                        engines[m](f)
                        totals[m] += time.perf_counter() - t0
                for m in active:
                    means[(m, n)] = totals[m] / samples
        for m in methods:
            for n in range(n_from, n_to):
                if (m, n) not in means or (m, n + 1) not in means:
                    continue
                t_lo, t_hi = means[(m, n)], means[(m, n + 1)]
                rows.append(
                    {
                        "backend": bname,
                        "method": m,
                        "n_lo": n,
                        "n_hi": n + 1,
                        "t_lo": t_lo,
                        "t_hi": t_hi,
                        "log2_ratio": math.log2(t_hi / t_lo),
                        "model": math.log2(((n + 1) * 2 ** (n + 1)) / (n * 2**n)),
                    }
                )
    return rows, warnings


def cmd_bench(args) -> int:
    methods = tuple(args.method.split(",")) if args.method else ("nlp",)
    for m in methods:
        if m not in (*ALL_METHODS,):
            raise _CliError(f"unknown method {m!r}")
    rows, warnings = run_scaling(
        args.n_from, args.n_to, args.samples, args.seed, methods, args.backend
    )
    if args.format == "records":
        for row in rows:
            print(json.dumps({"command": "bench", **row}))
        for w in warnings:
            print(json.dumps({"command": "bench", "warning": w}))
        return 0
    print(f"# scaling benchmark  seed={args.seed}  samples={args.samples}")
    print("# model = log2((n+1)*2^(n+1) / (n*2^n))")
    print(f"{'backend':8} {'method':7} {'pair':7} {'t_lo(s)':>11} {'t_hi(s)':>11} "
          f"{'log2_ratio':>10} {'model':>6}")
    for r in rows:
        pair = f"{r['n_lo']}-{r['n_hi']}"
        print(
            f"{r['backend']:8} {r['method']:7} {pair:7} {r['t_lo']:>11.3e} "
            f"{r['t_hi']:>11.3e} {r['log2_ratio']:>10.3f} {r['model']:>6.3f}"
        )
    for w in warnings:
        print(f"# warning: {w}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="boolnl", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nl", help="compute the nonlinearity")
    _add_input_flags(p)
    p.add_argument(
        "--method", choices=(*ALL_METHODS, "all"), default="nlp",
    )
    p.set_defaults(func=cmd_nl)

    p = sub.add_parser("nlp", help="print the nonlinearity polynomial")
    _add_input_flags(p)
    p.add_argument("--distances", action="store_true",
                   help="also print the distance vector (entry 2*idx(v)+a0)")
    p.set_defaults(func=cmd_nlp)

    p = sub.add_parser("convert", help="convert between representations")
    _add_input_flags(p)
    p.add_argument("--to", choices=("tt", "anf", "nnf"), required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("export-ideal", help="write ideal generators as text")
    _add_input_flags(p)
    p.add_argument("--kind", choices=("N", "J"), default="N")
    p.add_argument("--t", type=int, required=True, help="distance threshold")
    p.add_argument("--limit", type=int, default=None,
                   help="max generator lines (0 = header only)")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_export_ideal)

    p = sub.add_parser("bench", help="wall-clock scaling benchmark")
    p.add_argument("--n-from", type=int, default=16)
    p.add_argument("--n-to", type=int, default=20)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--method", default="nlp", help="comma-separated methods")
    p.add_argument("--backend", choices=("auto", "fast", "pure", "both"),
                   default="auto")
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BoolnlError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())
